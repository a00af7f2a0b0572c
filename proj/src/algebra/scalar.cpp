#include "conway/algebra/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>

#include "conway/error.hpp"

namespace conway::algebra
{

namespace
{

std::optional<mpq_class> rational_sqrt(const mpq_class &q)
{
    if (sgn(q) < 0)
        return std::nullopt;
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

// Exact square root in Q(i) on the principal branch, if it exists.
std::optional<std::pair<mpq_class, mpq_class>> gaussian_sqrt(const mpq_class &a, const mpq_class &b)
{
    if (sgn(b) == 0)
    {
        if (sgn(a) >= 0)
        {
            if (auto r = rational_sqrt(a))
                return std::pair{*r, mpq_class(0)};
            return std::nullopt;
        }
        if (auto r = rational_sqrt(-a))
            return std::pair{mpq_class(0), *r};
        return std::nullopt;
    }
    auto norm = rational_sqrt(mpq_class(a * a + b * b));
    if (!norm)
        return std::nullopt;
    auto c = rational_sqrt(mpq_class((a + *norm) / 2));
    auto d = rational_sqrt(mpq_class((*norm - a) / 2));
    if (!c || !d)
        return std::nullopt;
    // c > 0 here because b != 0 forces norm > |a|.
    mpq_class dd = sgn(b) > 0 ? *d : mpq_class(-*d);
    return std::pair{*c, dd};
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::gaussian(long re_num, long re_den, long im_num, long im_den)
{
    return Scalar(mpq_class(re_num, re_den), mpq_class(im_num, im_den));
}

Scalar Scalar::from_complex(std::complex<double> z, double tolerance)
{
    Scalar s;
    s.kind_ = Kind::Float;
    s.z_ = z;
    s.tol_ = tolerance;
    s.scale_ = std::abs(z);
    return s;
}

mpq_class Scalar::parse_rational(std::string_view text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(c);
    if (t.empty())
        fail(ErrorCode::ParseError, "empty rational literal");
    if (t.find('/') != std::string::npos || (t.find('.') == std::string::npos && t.find_first_of("eE") == std::string::npos))
    {
        if (t[0] == '+')
            t.erase(0, 1);
        mpq_class q;
        if (q.set_str(t, 10) != 0)
            fail(ErrorCode::ParseError, "bad rational literal '" + std::string(text) + "'");
        if (q.get_den() == 0)
            fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        q.canonicalize();
        return q;
    }
    // Finite decimal with optional exponent, converted exactly.
    std::size_t pos = 0;
    bool negative = false;
    if (t[pos] == '+' || t[pos] == '-')
        negative = t[pos++] == '-';
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (; pos < t.size() && t[pos] != 'e' && t[pos] != 'E'; ++pos)
    {
        if (t[pos] == '.')
        {
            if (seen_dot)
                fail(ErrorCode::ParseError, "bad decimal literal '" + std::string(text) + "'");
            seen_dot = true;
        }
        else if (std::isdigit(static_cast<unsigned char>(t[pos])))
        {
            digits.push_back(t[pos]);
            frac_digits += seen_dot ? 1 : 0;
        }
        else
            fail(ErrorCode::ParseError, "bad decimal literal '" + std::string(text) + "'");
    }
    if (digits.empty())
        fail(ErrorCode::ParseError, "bad decimal literal '" + std::string(text) + "'");
    long exponent = 0;
    if (pos < t.size())
    {
        try
        {
            exponent = std::stol(t.substr(pos + 1));
        }
        catch (const std::exception &)
        {
            fail(ErrorCode::ParseError, "bad exponent in '" + std::string(text) + "'");
        }
    }
    mpz_class num(digits, 10);
    long shift = exponent - frac_digits;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
    mpq_class q = shift >= 0 ? mpq_class(num * ten_pow) : mpq_class(num, ten_pow);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

std::complex<double> Scalar::to_complex() const
{
    if (kind_ == Kind::Float)
        return z_;
    return {re_.get_d(), im_.get_d()};
}

void Scalar::promote(double tolerance)
{
    if (kind_ == Kind::Float)
        return;
    z_ = {re_.get_d(), im_.get_d()};
    kind_ = Kind::Float;
    tol_ = tolerance;
    scale_ = std::abs(z_);
    re_ = 0;
    im_ = 0;
}

Scalar Scalar::to_float(double tolerance) const
{
    Scalar s = *this;
    if (s.kind_ == Kind::Float)
        s.tol_ = tolerance;
    else
        s.promote(tolerance);
    return s;
}

Scalar Scalar::with_tolerance(double tolerance) const
{
    Scalar s = *this;
    s.tol_ = tolerance;
    return s;
}

bool Scalar::is_zero() const
{
    if (kind_ == Kind::Exact)
        return sgn(re_) == 0 && sgn(im_) == 0;
    return std::abs(z_) <= tol_ * scale_;
}

bool Scalar::is_real() const
{
    if (kind_ == Kind::Exact)
        return sgn(im_) == 0;
    return std::abs(z_.imag()) <= tol_ * scale_;
}

int Scalar::sign_re() const
{
    if (kind_ == Kind::Exact)
        return sgn(re_);
    double r = z_.real();
    if (std::abs(r) <= tol_ * scale_)
        return 0;
    return r > 0 ? 1 : -1;
}

int Scalar::sign_im() const
{
    if (kind_ == Kind::Exact)
        return sgn(im_);
    double r = z_.imag();
    if (std::abs(r) <= tol_ * scale_)
        return 0;
    return r > 0 ? 1 : -1;
}

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    if (kind_ == Kind::Exact)
    {
        s.re_ = -re_;
        s.im_ = -im_;
    }
    else
        s.z_ = -z_;
    return s;
}

Scalar &Scalar::operator+=(const Scalar &o)
{
    if (kind_ == Kind::Exact && o.kind_ == Kind::Exact)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar b = o.to_float(o.kind_ == Kind::Float ? o.tol_ : tol_);
    promote(b.tol_);
    double s = std::max({scale_, b.scale_, std::abs(z_), std::abs(b.z_)});
    z_ += b.z_;
    scale_ = std::max(s, std::abs(z_));
    tol_ = std::max(tol_, b.tol_);
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
    return *this += -o;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
    if (kind_ == Kind::Exact && o.kind_ == Kind::Exact)
    {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar b = o.to_float(o.kind_ == Kind::Float ? o.tol_ : tol_);
    promote(b.tol_);
    double s = std::max(scale_ * std::abs(b.z_), std::abs(z_) * b.scale_);
    z_ *= b.z_;
    scale_ = std::max(s, std::abs(z_));
    tol_ = std::max(tol_, b.tol_);
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        fail(ErrorCode::DivisionByZero, "division by zero scalar");
    if (kind_ == Kind::Exact)
    {
        mpq_class n = re_ * re_ + im_ * im_;
        return Scalar(mpq_class(re_ / n), mpq_class(-im_ / n));
    }
    Scalar s = *this;
    double m = std::abs(z_);
    s.z_ = 1.0 / z_;
    s.scale_ = std::max(scale_ / (m * m), std::abs(s.z_));
    return s;
}

Scalar &Scalar::operator/=(const Scalar &o)
{
    if (kind_ == Kind::Exact && o.kind_ == Kind::Exact)
        return *this *= o.inverse();
    if (o.is_zero())
        fail(ErrorCode::DivisionByZero, "division by zero scalar");
    Scalar b = o.to_float(o.kind_ == Kind::Float ? o.tol_ : tol_);
    promote(b.tol_);
    double mb = std::abs(b.z_);
    double s = std::max(scale_ / mb, std::abs(z_) * b.scale_ / (mb * mb));
    z_ /= b.z_;
    scale_ = std::max(s, std::abs(z_));
    tol_ = std::max(tol_, b.tol_);
    return *this;
}

bool Scalar::identical(const Scalar &o) const
{
    if (kind_ != o.kind_)
        return false;
    if (kind_ == Kind::Exact)
        return re_ == o.re_ && im_ == o.im_;
    return z_ == o.z_;
}

Scalar Scalar::pow(int n) const
{
    if (n < 0)
        return inverse().pow(-n);
    Scalar result(1);
    Scalar base = *this;
    while (n > 0)
    {
        if (n & 1)
            result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

bool Scalar::has_exact_sqrt() const
{
    return kind_ == Kind::Float || gaussian_sqrt(re_, im_).has_value();
}

Scalar Scalar::sqrt() const
{
    if (kind_ == Kind::Exact)
    {
        auto r = gaussian_sqrt(re_, im_);
        if (!r)
            fail(ErrorCode::NoSquareRoot, "no square root of " + to_string() + " in Q(i)");
        return Scalar(r->first, r->second);
    }
    Scalar s = *this;
    s.z_ = std::sqrt(z_);
    s.scale_ = std::max(std::abs(s.z_), std::sqrt(scale_));
    return s;
}

std::string Scalar::to_string() const
{
    if (kind_ == Kind::Float)
    {
        if (z_.imag() == 0.0)
            return format_double(z_.real());
        return format_double(z_.real()) + (z_.imag() < 0 ? "" : "+") + format_double(z_.imag()) + "i";
    }
    if (sgn(im_) == 0)
        return re_.get_str();
    if (sgn(re_) == 0)
        return im_.get_str() + "i";
    return re_.get_str() + (sgn(im_) < 0 ? "" : "+") + im_.get_str() + "i";
}

Scalar sqrt(const Scalar &s)
{
    return s.sqrt();
}

} // namespace conway::algebra
