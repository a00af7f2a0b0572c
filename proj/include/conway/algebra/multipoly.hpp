#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "conway/algebra/scalar.hpp"

namespace conway::algebra
{

// Sparse multivariate polynomial with Scalar coefficients. Zero
// coefficients are never stored, so two polynomials are equal exactly when
// their term maps agree.
class MultiPoly
{
  public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Scalar>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(std::vector<std::string> vars, const Scalar &c);
    static MultiPoly variable(std::vector<std::string> vars, std::size_t index);

    const std::vector<std::string> &vars() const noexcept { return vars_; }
    const TermMap &terms() const noexcept { return terms_; }
    std::size_t arity() const noexcept { return vars_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    int total_degree() const;

    void add_term(const Exponents &exps, const Scalar &c);

    MultiPoly operator-() const;
    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o);
    MultiPoly &operator*=(const Scalar &c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly &b) { return a *= b; }
    friend MultiPoly operator*(MultiPoly a, const Scalar &c) { return a *= c; }
    friend MultiPoly operator*(const Scalar &c, MultiPoly a) { return a *= c; }

    // Term-map comparison; coefficients compared with Scalar equality.
    friend bool operator==(const MultiPoly &a, const MultiPoly &b);

    MultiPoly pow(unsigned n) const;

    Scalar eval(std::span<const Scalar> point) const;
    MultiPoly derivative(std::size_t var) const;
    std::vector<MultiPoly> gradient() const;

    // Substitutes subs[i] for variable i. All substitutes must share one
    // variable list, which becomes the variable list of the result.
    MultiPoly compose(std::span<const MultiPoly> subs) const;

    std::string to_string() const;

  private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void require_same_vars(const MultiPoly &o) const;
};

} // namespace conway::algebra
