#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace conway::algebra
{

inline constexpr double kDefaultTolerance = 1e-9;

// A coefficient of the complex field, held either exactly as a Gaussian
// rational a + b i or approximately as a complex double.
//
// The float variant tracks the largest magnitude that entered its
// computation; is_zero() compares against tolerance() * scale(). Mixing an
// exact and a float operand yields a float.
class Scalar
{
  public:
    enum class Kind
    {
        Exact,
        Float,
    };

    Scalar() = default;
    Scalar(long value) : re_(value) {}
    Scalar(int value) : re_(value) {}
    explicit Scalar(mpq_class re, mpq_class im = 0);

    static Scalar gaussian(long re_num, long re_den, long im_num = 0, long im_den = 1);
    static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }
    static Scalar from_complex(std::complex<double> z, double tolerance = kDefaultTolerance);

    // Accepts "p/q", integers, finite decimals (exactly), or "re,im" pairs
    // parsed by the JSON layer. Decimals stay exact in this entry point.
    static mpq_class parse_rational(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_exact() const noexcept { return kind_ == Kind::Exact; }
    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }
    std::complex<double> to_complex() const;
    double tolerance() const noexcept { return tol_; }
    double scale() const noexcept { return scale_; }
    double magnitude() const { return std::abs(to_complex()); }

    Scalar to_float(double tolerance = kDefaultTolerance) const;
    Scalar with_tolerance(double tolerance) const;

    bool is_zero() const;
    bool is_one() const { return (*this - Scalar(1)).is_zero(); }
    bool is_real() const;

    // Signs of the real and imaginary parts (-1, 0, 1); the float variant
    // treats parts within tolerance of zero as zero.
    int sign_re() const;
    int sign_im() const;

    Scalar operator-() const;
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

    // Tolerance-aware in float mode, exact otherwise.
    friend bool operator==(const Scalar &a, const Scalar &b) { return (a - b).is_zero(); }

    // Bitwise identity of the stored representation (kind and value).
    bool identical(const Scalar &o) const;

    Scalar inverse() const;
    Scalar pow(int n) const;

    // Exact Gaussian-rational square root when one exists; throws
    // NoSquareRoot otherwise. The float variant uses the principal branch.
    // The exact root is normalized to the principal branch as well.
    Scalar sqrt() const;
    bool has_exact_sqrt() const;

    std::string to_string() const;

  private:
    Kind kind_ = Kind::Exact;
    mpq_class re_ = 0;
    mpq_class im_ = 0;
    std::complex<double> z_{};
    double tol_ = kDefaultTolerance;
    double scale_ = 0.0;

    void promote(double tolerance);
};

Scalar sqrt(const Scalar &s);

} // namespace conway::algebra
