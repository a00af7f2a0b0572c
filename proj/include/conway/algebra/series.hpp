#pragma once

#include <limits>
#include <string>
#include <vector>

#include "conway/algebra/scalar.hpp"

namespace conway::algebra
{

inline constexpr int kDefaultTruncation = 16;

// Truncated Laurent/Puiseux series in a local parameter s.
//
// Exponents are integers in units of 1/ramification(). The stored
// coefficients cover exponents valuation() .. valuation()+size-1 and the
// series is known modulo s^(order()/ramification()); every exponent between
// the last stored coefficient and order() is a known zero. order() ==
// kInfinite marks an exact Laurent polynomial.
//
// Operations that would need infinitely many terms (inverse, division,
// square root of an exact input) stop at truncation() powers of s.
class Series
{
  public:
    static constexpr int kInfinite = std::numeric_limits<int>::max();

    Series() = default;
    Series(const Scalar &c);
    Series(long c) : Series(Scalar(c)) {}
    Series(int c) : Series(Scalar(c)) {}

    // coeffs[k] is the coefficient of s^((valuation + k) / ramification).
    static Series from_terms(int ramification, int valuation, std::vector<Scalar> coeffs, int order = kInfinite,
                             int truncation = kDefaultTruncation);
    static Series monomial(const Scalar &c, int exponent, int ramification = 1);
    static Series parameter() { return monomial(Scalar(1), 1); }
    // The zero series known only modulo s^(order/ramification).
    static Series big_o(int order, int ramification = 1);

    int ramification() const noexcept { return ram_; }
    // kInfinite for the zero series.
    int valuation() const noexcept { return val_; }
    int order() const noexcept { return order_; }
    int truncation() const noexcept { return trunc_; }
    const std::vector<Scalar> &coefficients() const noexcept { return coeffs_; }

    bool is_exact() const noexcept { return order_ == kInfinite; }
    // Every known term vanishes.
    bool is_zero() const noexcept { return val_ == kInfinite; }
    bool is_certified_zero() const noexcept { return is_zero() && is_exact(); }
    // True when the known part is a constant (no nonconstant term survives).
    bool is_constant() const;

    // Coefficient of s^(exponent/ramification); throws InconclusiveTruncation
    // when the exponent is beyond the known order.
    Scalar coefficient(int exponent) const;
    Scalar constant_term() const { return coefficient(0); }
    Scalar leading_coefficient() const;

    Series with_ramification(int ramification) const;
    Series with_truncation(int truncation) const;
    // Drops every term at or beyond exponent `order` (ramified units).
    Series truncated(int order) const;

    Series operator-() const;
    Series &operator+=(const Series &o);
    Series &operator-=(const Series &o);
    Series &operator*=(const Series &o);
    Series &operator/=(const Series &o);

    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator*(Series a, const Series &b) { return a *= b; }
    friend Series operator/(Series a, const Series &b) { return a /= b; }

    // Equal up to the common known order.
    friend bool operator==(const Series &a, const Series &b) { return (a - b).is_zero(); }

    Series inverse() const;
    Series pow(int n) const;
    // Doubles the ramification when the valuation is odd. Throws
    // NoSquareRoot if the leading coefficient has no exact root.
    Series sqrt() const;

    // f(g(s)) for unramified f and g with valuation(g) >= 1.
    Series substitute(const Series &g) const;

    std::string to_string() const;

  private:
    int ram_ = 1;
    int val_ = kInfinite;
    int order_ = kInfinite;
    int trunc_ = kDefaultTruncation;
    std::vector<Scalar> coeffs_;

    void normalize();
    int cap() const;
};

Series sqrt(const Series &s);

// Saturating helpers for orders that may be kInfinite.
int add_orders(int a, int b) noexcept;

} // namespace conway::algebra
