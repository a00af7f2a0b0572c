#include "conway/algebra/series.hpp"

#include <algorithm>
#include <numeric>

#include "conway/error.hpp"

namespace conway::algebra
{

int add_orders(int a, int b) noexcept
{
    if (a == Series::kInfinite || b == Series::kInfinite)
        return Series::kInfinite;
    return a + b;
}

namespace
{

// Used for precision bookkeeping: a known-zero series behaves as if its
// valuation were its order.
int effective_valuation(const Series &s)
{
    return s.is_zero() ? s.order() : s.valuation();
}

void align(Series &a, Series &b)
{
    if (a.ramification() == b.ramification())
        return;
    int e = std::lcm(a.ramification(), b.ramification());
    a = a.with_ramification(e);
    b = b.with_ramification(e);
}

std::string exponent_string(int n, int e)
{
    if (e == 1)
        return std::to_string(n);
    int g = std::gcd(n < 0 ? -n : n, e);
    if (e / g == 1)
        return std::to_string(n / g);
    return "(" + std::to_string(n / g) + "/" + std::to_string(e / g) + ")";
}

} // namespace

Series::Series(const Scalar &c)
{
    if (!c.is_zero())
    {
        val_ = 0;
        coeffs_.push_back(c);
    }
}

Series Series::from_terms(int ramification, int valuation, std::vector<Scalar> coeffs, int order, int truncation)
{
    if (ramification < 1)
        fail(ErrorCode::InvalidArgument, "ramification must be positive");
    Series s;
    s.ram_ = ramification;
    s.val_ = coeffs.empty() ? kInfinite : valuation;
    s.order_ = order;
    s.trunc_ = truncation;
    s.coeffs_ = std::move(coeffs);
    s.normalize();
    return s;
}

Series Series::monomial(const Scalar &c, int exponent, int ramification)
{
    return from_terms(ramification, exponent, {c});
}

Series Series::big_o(int order, int ramification)
{
    Series s;
    s.ram_ = ramification;
    s.order_ = order;
    return s;
}

void Series::normalize()
{
    if (val_ == kInfinite)
    {
        coeffs_.clear();
        return;
    }
    if (order_ != kInfinite)
    {
        long keep = static_cast<long>(order_) - static_cast<long>(val_);
        if (keep <= 0)
            coeffs_.clear();
        else if (static_cast<long>(coeffs_.size()) > keep)
            coeffs_.resize(static_cast<std::size_t>(keep));
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero())
        ++lead;
    if (lead == coeffs_.size())
    {
        coeffs_.clear();
        val_ = kInfinite;
        return;
    }
    if (lead > 0)
    {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        val_ += static_cast<int>(lead);
    }
    while (coeffs_.back().is_zero())
        coeffs_.pop_back();
}

int Series::cap() const
{
    return trunc_ * ram_;
}

bool Series::is_constant() const
{
    if (is_zero())
        return true;
    return val_ == 0 && coeffs_.size() == 1;
}

Scalar Series::coefficient(int exponent) const
{
    if (order_ != kInfinite && exponent >= order_)
        fail(ErrorCode::InconclusiveTruncation,
             "coefficient of s^" + exponent_string(exponent, ram_) + " is beyond the known order");
    if (val_ == kInfinite || exponent < val_)
        return Scalar(0);
    auto k = static_cast<std::size_t>(exponent - val_);
    return k < coeffs_.size() ? coeffs_[k] : Scalar(0);
}

Scalar Series::leading_coefficient() const
{
    if (is_zero())
        fail(ErrorCode::InconclusiveTruncation, "leading coefficient of a series with no known nonzero term");
    return coeffs_.front();
}

Series Series::with_ramification(int ramification) const
{
    if (ramification % ram_ != 0)
        fail(ErrorCode::InvalidArgument, "ramification must be a multiple of the current one");
    int k = ramification / ram_;
    if (k == 1)
        return *this;
    Series s;
    s.ram_ = ramification;
    s.trunc_ = trunc_;
    s.order_ = order_ == kInfinite ? kInfinite : order_ * k;
    if (is_zero())
        return s;
    s.val_ = val_ * k;
    s.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        s.coeffs_[i * static_cast<std::size_t>(k)] = coeffs_[i];
    return s;
}

Series Series::with_truncation(int truncation) const
{
    Series s = *this;
    s.trunc_ = truncation;
    return s;
}

Series Series::truncated(int order) const
{
    Series s = *this;
    s.order_ = std::min(order_, order);
    s.normalize();
    return s;
}

Series Series::operator-() const
{
    Series s = *this;
    for (auto &c : s.coeffs_)
        c = -c;
    return s;
}

Series &Series::operator+=(const Series &o)
{
    Series b = o;
    align(*this, b);
    int order = std::min(order_, b.order_);
    int trunc = std::max(trunc_, b.trunc_);
    if (b.is_zero() || is_zero())
    {
        const Series &nz = is_zero() ? b : *this;
        Series r = nz;
        r.order_ = order;
        r.trunc_ = trunc;
        r.normalize();
        *this = std::move(r);
        return *this;
    }
    int lo = std::min(val_, b.val_);
    int hi = std::max(val_ + static_cast<int>(coeffs_.size()), b.val_ + static_cast<int>(b.coeffs_.size()));
    if (order != kInfinite)
        hi = std::min(hi, order);
    std::vector<Scalar> c(static_cast<std::size_t>(std::max(0, hi - lo)), Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
    {
        int e = val_ + static_cast<int>(i);
        if (e < hi)
            c[static_cast<std::size_t>(e - lo)] = coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
    {
        int e = b.val_ + static_cast<int>(i);
        if (e < hi)
            c[static_cast<std::size_t>(e - lo)] += b.coeffs_[i];
    }
    val_ = c.empty() ? kInfinite : lo;
    coeffs_ = std::move(c);
    order_ = order;
    trunc_ = trunc;
    normalize();
    return *this;
}

Series &Series::operator-=(const Series &o)
{
    return *this += -o;
}

Series &Series::operator*=(const Series &o)
{
    Series b = o;
    align(*this, b);
    int order = std::min(add_orders(order_, effective_valuation(b)), add_orders(b.order_, effective_valuation(*this)));
    int trunc = std::max(trunc_, b.trunc_);
    if (is_zero() || b.is_zero())
    {
        *this = big_o(order, ram_);
        trunc_ = trunc;
        return *this;
    }
    int lo = val_ + b.val_;
    long len = static_cast<long>(coeffs_.size() + b.coeffs_.size() - 1);
    if (order != kInfinite)
        len = std::min(len, static_cast<long>(order) - lo);
    std::vector<Scalar> c(static_cast<std::size_t>(std::max(0L, len)), Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size() && static_cast<long>(i + j) < len; ++j)
            c[i + j] += coeffs_[i] * b.coeffs_[j];
    val_ = c.empty() ? kInfinite : lo;
    coeffs_ = std::move(c);
    order_ = order;
    trunc_ = trunc;
    normalize();
    return *this;
}

Series Series::inverse() const
{
    if (is_zero())
        fail(ErrorCode::DivisionByZero, "division by a series with no known nonzero term");
    if (is_exact() && coeffs_.size() == 1)
    {
        Series r = from_terms(ram_, -val_, {coeffs_.front().inverse()}, kInfinite, trunc_);
        return r;
    }
    int target = is_exact() ? std::max(cap(), -val_ + 1) : -val_ + (order_ - val_);
    int n = target + val_;
    std::vector<Scalar> c;
    c.reserve(static_cast<std::size_t>(std::max(n, 0)));
    Scalar u0inv = coeffs_.front().inverse();
    for (int k = 0; k < n; ++k)
    {
        if (k == 0)
        {
            c.push_back(u0inv);
            continue;
        }
        Scalar acc(0);
        for (int j = 1; j <= k && j < static_cast<int>(coeffs_.size()); ++j)
            acc += coeffs_[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
        c.push_back(-acc * u0inv);
    }
    return from_terms(ram_, -val_, std::move(c), target, trunc_);
}

Series &Series::operator/=(const Series &o)
{
    Series inv = o.inverse();
    return *this *= inv;
}

Series Series::pow(int n) const
{
    if (n < 0)
        return inverse().pow(-n);
    Series result = Series(Scalar(1)).with_truncation(trunc_);
    Series base = *this;
    while (n > 0)
    {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n > 0)
            base *= base;
    }
    return result;
}

Series Series::sqrt() const
{
    if (is_zero())
    {
        if (is_exact())
            return *this;
        Series x = with_ramification(ram_ * 2);
        return big_o(x.order_ / 2, x.ram_);
    }
    Series x = (val_ % 2 != 0) ? with_ramification(ram_ * 2) : *this;
    int half = x.val_ / 2;
    int target = x.is_exact() ? std::max(x.cap(), half + 1) : half + (x.order_ - x.val_);
    int n = target - half;
    Scalar b0 = x.coeffs_.front().sqrt();
    Scalar two_b0_inv = (b0 * Scalar(2)).inverse();
    std::vector<Scalar> b;
    b.reserve(static_cast<std::size_t>(n));
    b.push_back(b0);
    for (int k = 1; k < n; ++k)
    {
        Scalar acc = k < static_cast<int>(x.coeffs_.size()) ? x.coeffs_[static_cast<std::size_t>(k)] : Scalar(0);
        for (int j = 1; j < k; ++j)
            acc -= b[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
        b.push_back(acc * two_b0_inv);
    }
    Series r = from_terms(x.ram_, half, std::move(b), target, x.trunc_);
    if (x.is_exact())
    {
        // A terminating root of an exact polynomial is itself exact.
        Series candidate = r;
        candidate.order_ = kInfinite;
        if ((candidate * candidate - x).is_certified_zero())
            return candidate;
    }
    return r;
}

Series Series::substitute(const Series &g) const
{
    if (ram_ != 1 || g.ram_ != 1)
        fail(ErrorCode::InvalidArgument, "substitution requires unramified series");
    if (g.is_zero() || g.val_ < 1)
        fail(ErrorCode::InvalidArgument, "substituted series must have positive valuation");
    int vg = g.val_;
    int err = order_ == kInfinite ? kInfinite : order_ * vg;
    Series acc = big_o(err);
    acc.trunc_ = std::max(trunc_, g.trunc_);
    if (is_zero())
        return acc;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
    {
        if (coeffs_[k].is_zero())
            continue;
        int e = val_ + static_cast<int>(k);
        acc += Series(coeffs_[k]) * g.pow(e);
    }
    return acc;
}

std::string Series::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
    {
        if (coeffs_[i].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        int e = val_ + static_cast<int>(i);
        out += "(" + coeffs_[i].to_string() + ")";
        if (e != 0)
            out += "*s^" + exponent_string(e, ram_);
    }
    if (order_ != kInfinite)
    {
        if (!out.empty())
            out += " + ";
        out += "O(s^" + exponent_string(order_, ram_) + ")";
    }
    return out.empty() ? "0" : out;
}

Series sqrt(const Series &s)
{
    return s.sqrt();
}

} // namespace conway::algebra
