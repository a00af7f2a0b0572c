#include "conway/util/sampler.hpp"

#include <complex>

namespace conway::util
{

long Sampler::integer(long lo, long hi)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(rng_);
}

double Sampler::real(double lo, double hi)
{
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng_);
}

mpq_class Sampler::rational(long bound)
{
    mpq_class q(integer(-bound, bound), integer(1, bound));
    q.canonicalize();
    return q;
}

Scalar Sampler::nonzero_rational(long bound)
{
    mpq_class q = 0;
    while (q == 0)
        q = rational(bound);
    return Scalar(q);
}

Scalar Sampler::gaussian(long bound)
{
    mpq_class re = rational(bound);
    mpq_class im = rational(bound);
    return Scalar(re, im);
}

Scalar Sampler::nonzero_gaussian(long bound)
{
    Scalar z = gaussian(bound);
    while (z.is_zero())
        z = gaussian(bound);
    return z;
}

Scalar Sampler::complex_float(double radius, double tolerance)
{
    double re = real(-radius, radius);
    double im = real(-radius, radius);
    return Scalar::from_complex({re, im}, tolerance);
}

sl2::Mat2<Scalar> Sampler::sl2_exact(long bound)
{
    Scalar a = nonzero_gaussian(bound);
    Scalar b = gaussian(bound);
    Scalar c = gaussian(bound);
    Scalar d = (Scalar(1) + b * c) / a;
    return {a, b, c, d};
}

sl2::Mat2<Scalar> Sampler::sl2_float(double radius, double tolerance)
{
    Scalar a = complex_float(radius, tolerance);
    while (a.magnitude() < 0.25)
        a = complex_float(radius, tolerance);
    Scalar b = complex_float(radius, tolerance);
    Scalar c = complex_float(radius, tolerance);
    Scalar d = (Scalar(1).to_float(tolerance) + b * c) / a;
    return {a, b, c, d};
}

sl2::GroupWord Sampler::word(int generators, int max_length)
{
    long len = integer(0, max_length);
    std::vector<sl2::Letter> letters;
    for (long i = 0; i < len; ++i)
        letters.push_back({static_cast<int>(integer(0, generators - 1)), coin() ? 1 : -1});
    return sl2::GroupWord(std::move(letters));
}

algebra::MultiPoly Sampler::polynomial(const std::vector<std::string> &vars, int max_degree, int terms)
{
    algebra::MultiPoly p(vars);
    for (int k = 0; k < terms; ++k)
    {
        algebra::MultiPoly::Exponents e(vars.size());
        for (auto &x : e)
            x = static_cast<int>(integer(0, max_degree));
        p.add_term(e, gaussian(7));
    }
    return p;
}

algebra::Series Sampler::series(int lo, int len, long bound)
{
    std::vector<Scalar> c;
    c.push_back(nonzero_gaussian(bound));
    for (int i = 1; i < len; ++i)
        c.push_back(gaussian(bound));
    return algebra::Series::from_terms(1, lo, std::move(c));
}

sl2::Mat2<algebra::Series> Sampler::sl2_series(int factors, int truncation)
{
    using algebra::Series;
    const Series one = Series(1).with_truncation(truncation), zero = Series(0).with_truncation(truncation);
    sl2::Mat2<Series> g{one, zero, zero, one};
    for (int k = 0; k < factors; ++k)
    {
        Series f = series(static_cast<int>(integer(-2, 1)), 2, 4).with_truncation(truncation);
        switch (integer(0, 2))
        {
        case 0:
            g = g * sl2::Mat2<Series>{one, f, zero, one};
            break;
        case 1:
            g = g * sl2::Mat2<Series>{one, zero, f, one};
            break;
        default:
        {
            int e = static_cast<int>(integer(-2, 2));
            Series d = Series::monomial(Scalar(1), e).with_truncation(truncation);
            g = g * sl2::Mat2<Series>{d, zero, zero, Series::monomial(Scalar(1), -e).with_truncation(truncation)};
        }
        }
    }
    return g;
}

} // namespace conway::util
