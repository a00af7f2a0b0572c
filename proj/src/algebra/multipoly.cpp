#include "conway/algebra/multipoly.hpp"

#include <algorithm>

#include "conway/error.hpp"

namespace conway::algebra
{

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Scalar &c)
{
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.arity(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index)
{
    if (index >= vars.size())
        fail(ErrorCode::ArityMismatch, "variable index out of range");
    MultiPoly p(std::move(vars));
    Exponents e(p.arity(), 0);
    e[index] = 1;
    p.add_term(e, Scalar(1));
    return p;
}

int MultiPoly::total_degree() const
{
    int d = 0;
    for (const auto &[e, c] : terms_)
    {
        int s = 0;
        for (int k : e)
            s += k;
        d = std::max(d, s);
    }
    return d;
}

void MultiPoly::add_term(const Exponents &exps, const Scalar &c)
{
    if (exps.size() != arity())
        fail(ErrorCode::ArityMismatch, "exponent vector length " + std::to_string(exps.size()) + " for " +
                                           std::to_string(arity()) + " variables");
    if (c.is_zero())
        return;
    auto it = terms_.find(exps);
    if (it == terms_.end())
    {
        terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

void MultiPoly::require_same_vars(const MultiPoly &o) const
{
    if (vars_ != o.vars_)
        fail(ErrorCode::ArityMismatch, "polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r(vars_);
    for (const auto &[e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
    require_same_vars(o);
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o)
{
    require_same_vars(o);
    for (const auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o)
{
    require_same_vars(o);
    MultiPoly r(vars_);
    Exponents e(arity());
    for (const auto &[ea, ca] : terms_)
        for (const auto &[eb, cb] : o.terms_)
        {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    *this = std::move(r);
    return *this;
}

MultiPoly &MultiPoly::operator*=(const Scalar &c)
{
    MultiPoly r(vars_);
    for (const auto &[e, a] : terms_)
        r.add_term(e, a * c);
    *this = std::move(r);
    return *this;
}

bool operator==(const MultiPoly &a, const MultiPoly &b)
{
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size())
        return false;
    auto ib = b.terms_.begin();
    for (const auto &[e, c] : a.terms_)
    {
        if (e != ib->first || !(c == ib->second))
            return false;
        ++ib;
    }
    return true;
}

MultiPoly MultiPoly::pow(unsigned n) const
{
    MultiPoly result = constant(vars_, Scalar(1));
    MultiPoly base = *this;
    while (n > 0)
    {
        if (n & 1u)
            result *= base;
        n >>= 1u;
        if (n > 0)
            base *= base;
    }
    return result;
}

Scalar MultiPoly::eval(std::span<const Scalar> point) const
{
    if (point.size() != arity())
        fail(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                                           std::to_string(arity()) + " variables");
    // powers[i][k] = point[i]^k, grown on demand
    std::vector<std::vector<Scalar>> powers(arity(), std::vector<Scalar>{Scalar(1)});
    Scalar sum(0);
    bool first = true;
    for (const auto &[e, c] : terms_)
    {
        Scalar m = c;
        for (std::size_t i = 0; i < e.size(); ++i)
        {
            auto &pw = powers[i];
            while (static_cast<int>(pw.size()) <= e[i])
                pw.push_back(pw.back() * point[i]);
            if (e[i] > 0)
                m *= pw[static_cast<std::size_t>(e[i])];
        }
        if (first)
        {
            sum = m;
            first = false;
        }
        else
            sum += m;
    }
    if (first && !point.empty() && !point[0].is_exact())
        return Scalar(0).to_float(point[0].tolerance());
    return sum;
}

MultiPoly MultiPoly::derivative(std::size_t var) const
{
    if (var >= arity())
        fail(ErrorCode::ArityMismatch, "derivative variable out of range");
    MultiPoly r(vars_);
    for (const auto &[e, c] : terms_)
    {
        if (e[var] == 0)
            continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * Scalar(e[var]));
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::gradient() const
{
    std::vector<MultiPoly> g;
    g.reserve(arity());
    for (std::size_t i = 0; i < arity(); ++i)
        g.push_back(derivative(i));
    return g;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> subs) const
{
    if (subs.size() != arity())
        fail(ErrorCode::ArityMismatch, "compose needs one substitute per variable");
    std::vector<std::string> target = subs.empty() ? std::vector<std::string>{} : subs[0].vars();
    for (const auto &s : subs)
        if (s.vars() != target)
            fail(ErrorCode::ArityMismatch, "substitutes over different variable lists");
    std::vector<std::vector<MultiPoly>> powers(arity(), std::vector<MultiPoly>{constant(target, Scalar(1))});
    MultiPoly r(target);
    for (const auto &[e, c] : terms_)
    {
        MultiPoly m = constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
        {
            auto &pw = powers[i];
            while (static_cast<int>(pw.size()) <= e[i])
                pw.push_back(pw.back() * subs[i]);
            if (e[i] > 0)
                m *= pw[static_cast<std::size_t>(e[i])];
        }
        r += m;
    }
    return r;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    // Highest total degree first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    {
        const auto &[e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i)
        {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[i];
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        std::string coeff = c.to_string();
        if (!out.empty())
            out += " + ";
        if (mono.empty())
            out += coeff;
        else if (c.is_one())
            out += mono;
        else
            out += "(" + coeff + ")*" + mono;
    }
    return out;
}

} // namespace conway::algebra
