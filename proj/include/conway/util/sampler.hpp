#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "conway/algebra/multipoly.hpp"
#include "conway/algebra/scalar.hpp"
#include "conway/algebra/series.hpp"
#include "conway/sl2/mat2.hpp"
#include "conway/sl2/word.hpp"

namespace conway::util
{

using algebra::Scalar;

// Every random choice of the library, the tests and the sweeps goes through
// one of these, so a seed fixes a run completely.
class Sampler
{
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64 &engine() noexcept { return rng_; }

    long integer(long lo, long hi);
    bool coin() { return integer(0, 1) == 1; }
    double real(double lo, double hi);

    // p/q with |p| <= bound and 1 <= q <= bound.
    mpq_class rational(long bound = 9);
    Scalar nonzero_rational(long bound = 9);
    // a + b i with both parts from rational(bound).
    Scalar gaussian(long bound = 9);
    Scalar nonzero_gaussian(long bound = 9);
    Scalar complex_float(double radius = 3.0, double tolerance = algebra::kDefaultTolerance);

    // Exact determinant-one matrix with Gaussian-rational entries.
    sl2::Mat2<Scalar> sl2_exact(long bound = 5);
    sl2::Mat2<Scalar> sl2_float(double radius = 2.0, double tolerance = algebra::kDefaultTolerance);

    sl2::GroupWord word(int generators, int max_length);

    // Sparse random polynomial in the given variables.
    algebra::MultiPoly polynomial(const std::vector<std::string> &vars, int max_degree = 3, int terms = 4);

    // Random exact Laurent polynomial s^lo .. s^(lo+len-1) with a nonzero
    // leading coefficient.
    algebra::Series series(int lo, int len, long bound = 5);

    // Product of `factors` random elementary matrices (Laurent polynomial
    // off-diagonal entry) and diagonal shifts diag(s^k, s^-k), |k| <= 2.
    sl2::Mat2<algebra::Series> sl2_series(int factors = 3, int truncation = algebra::kDefaultTruncation);

  private:
    std::mt19937_64 rng_;
};

} // namespace conway::util
