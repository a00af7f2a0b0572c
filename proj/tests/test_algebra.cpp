#include <doctest.h>

#include <cmath>

#include "conway/algebra/json_codec.hpp"
#include "conway/error.hpp"
#include "conway/fricke/fricke.hpp"
#include "conway/util/sampler.hpp"

using namespace conway;
using namespace conway::algebra;

namespace
{

Scalar q(long n, long d = 1)
{
    return Scalar::gaussian(n, d);
}

Series S(std::initializer_list<long> coeffs, int val = 0)
{
    std::vector<Scalar> c;
    for (long x : coeffs)
        c.push_back(Scalar(x));
    return Series::from_terms(1, val, std::move(c));
}

} // namespace

TEST_CASE("scalar: exact Gaussian arithmetic and exact zero tests")
{
    Scalar i = Scalar::imaginary_unit();
    CHECK(i * i == Scalar(-1));
    CHECK((q(1, 3) + q(2, 3)).is_one());
    CHECK((q(1, 3) * Scalar(3) - Scalar(1)).is_zero());
    CHECK((Scalar(1) + i).inverse() == Scalar(mpq_class(1, 2), mpq_class(-1, 2)));
    CHECK_THROWS_AS(Scalar(0).inverse(), Error);
}

TEST_CASE("scalar: exact square roots in Q(i)")
{
    CHECK(Scalar(4).sqrt() == Scalar(2));
    CHECK(Scalar(-4).sqrt() == Scalar(2) * Scalar::imaginary_unit());
    CHECK(Scalar(mpq_class(9, 16)).sqrt() == q(3, 4));
    // (1 + 2i)^2 = -3 + 4i
    Scalar z(mpq_class(-3), mpq_class(4));
    CHECK(z.sqrt() * z.sqrt() == z);
    CHECK(z.sqrt() == Scalar(mpq_class(1), mpq_class(2)));
    CHECK_FALSE(Scalar(2).has_exact_sqrt());
    try
    {
        (void)Scalar(2).sqrt();
        FAIL("expected NoSquareRoot");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::NoSquareRoot);
    }
}

TEST_CASE("scalar: float zero test is relative to the largest intermediate")
{
    Scalar big = Scalar::from_complex({1.0e6, 0.0});
    Scalar x = big + Scalar(1).to_float() - big - Scalar(1).to_float();
    CHECK(x.is_zero());
    Scalar y = Scalar(1).to_float() * Scalar::from_complex({1e-3, 0.0});
    CHECK_FALSE(y.is_zero());
    CHECK(Scalar(1).to_float().with_tolerance(0.5).tolerance() == doctest::Approx(0.5));
}

TEST_CASE("scalar: parsing and JSON round trip")
{
    CHECK(Scalar(Scalar::parse_rational("-3/6")) == q(-1, 2));
    CHECK(Scalar(Scalar::parse_rational("0.25")) == q(1, 4));
    CHECK_THROWS_AS(Scalar::parse_rational("1/0"), Error);
    Scalar z(mpq_class(2, 3), mpq_class(-5, 7));
    Json j = to_json(z);
    CHECK(j["kind"] == "rat");
    CHECK(scalar_from_json(j).identical(z));
    Scalar f = Scalar::from_complex({1.5, -2.25});
    CHECK(scalar_from_json(to_json(f)) == f);
    CHECK(scalar_from_json(Json(3)) == Scalar(3));
    CHECK(scalar_from_json(Json("7/2")) == q(7, 2));
}

TEST_CASE("poly_eval: values of F")
{
    const MultiPoly &F = fricke::y_defining_poly();
    std::array<Scalar, 4> p1{Scalar(2), Scalar(2), Scalar(2), Scalar(2)};
    std::array<Scalar, 4> p2{Scalar(-2), Scalar(-2), Scalar(-2), Scalar(0)};
    std::array<Scalar, 4> p3{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    CHECK(F.eval(p1).is_zero());
    CHECK(F.eval(p2).is_zero());
    CHECK(F.eval(p3) == Scalar(-4));
    std::array<Scalar, 3> short_point{Scalar(0), Scalar(0), Scalar(0)};
    try
    {
        (void)F.eval(short_point);
        FAIL("expected ArityMismatch");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::ArityMismatch);
    }
}

TEST_CASE("poly_gradient: examples")
{
    MultiPoly c = MultiPoly::constant({"a", "b"}, Scalar(5));
    for (const auto &g : c.gradient())
        CHECK(g.is_zero());

    auto grad = fricke::y_defining_poly().gradient();
    std::array<Scalar, 4> p{Scalar(2), Scalar(3), Scalar(4), Scalar(7).to_float().sqrt()};
    CHECK(grad[3].eval(p).is_zero());
    CHECK(grad[0].eval(p) == Scalar(2));

    auto dH = fricke::cover_defining_poly().gradient();
    std::array<Scalar, 4> w2{Scalar(2), Scalar(0), Scalar(0), Scalar(0)};
    CHECK(dH[0].eval(w2) == Scalar(-4));
}

TEST_CASE("multipoly: composition, differentiation and printing")
{
    std::vector<std::string> v{"a", "b"};
    MultiPoly a = MultiPoly::variable(v, 0), b = MultiPoly::variable(v, 1);
    MultiPoly p = a * a * b + Scalar(3) * b;
    CHECK(p.derivative(0) == Scalar(2) * a * b);
    CHECK(p.derivative(1) == a * a + MultiPoly::constant(v, Scalar(3)));
    CHECK(p.total_degree() == 3);
    CHECK((p - p).is_zero());
    CHECK((a + b).pow(2) == a * a + Scalar(2) * a * b + b * b);
    MultiPoly one = MultiPoly::variable({"s"}, 0);
    std::array<MultiPoly, 2> subs{one * one, one + MultiPoly::constant({"s"}, Scalar(1))};
    MultiPoly r = p.compose(subs);
    std::array<Scalar, 1> at2{Scalar(2)};
    std::array<Scalar, 2> ab{Scalar(4), Scalar(3)};
    CHECK(r.eval(at2) == p.eval(ab));
    Json j = to_json(p);
    CHECK(poly_from_json(j) == p);
}

TEST_CASE("multipoly: exact ring axioms on random triples")
{
    util::Sampler rng(101);
    std::vector<std::string> vars{"a", "b", "c"};
    for (int k = 0; k < 1000; ++k)
    {
        MultiPoly x = rng.polynomial(vars), y = rng.polynomial(vars), z = rng.polynomial(vars);
        REQUIRE((x + y) + z == x + (y + z));
        REQUIRE(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("multipoly: analytic partials agree with central differences")
{
    util::Sampler rng(202);
    const MultiPoly &F = fricke::y_defining_poly();
    auto grad = F.gradient();
    const double h = 1e-4;
    for (int k = 0; k < 100; ++k)
    {
        std::array<Scalar, 4> p;
        for (auto &c : p)
            c = rng.complex_float(2.0);
        double scale = 1.0;
        for (const auto &c : p)
            scale = std::max(scale, std::pow(c.magnitude(), 4));
        for (std::size_t i = 0; i < 4; ++i)
        {
            auto plus = p, minus = p;
            plus[i] += Scalar::from_complex({h, 0});
            minus[i] -= Scalar::from_complex({h, 0});
            std::complex<double> fd = (F.eval(plus).to_complex() - F.eval(minus).to_complex()) / (2 * h);
            std::complex<double> an = grad[i].eval(p).to_complex();
            REQUIRE(std::abs(an - fd) <= 1e-6 * scale);
        }
    }
}

TEST_CASE("series_valuation: examples")
{
    Series a = Series::monomial(Scalar(1), -2) + Series(Scalar(1));
    CHECK(a.valuation() == -2);
    CHECK(Series().valuation() == Series::kInfinite);
    Series b = Series::monomial(Scalar(3), -1) + Series::monomial(Scalar(1), 0);
    Series c = Series::monomial(Scalar(2), 3) + Series::monomial(Scalar(5), 5);
    CHECK((b * c).valuation() == 2);
}

TEST_CASE("series_arith: examples")
{
    Series s = Series::parameter();
    Series one(Scalar(1));
    CHECK((one + s) * (one - s) == one - s * s);
    CHECK(((one + s) * (one - s)).is_exact());

    Series r = one / (s * (one + s));
    CHECK(r.valuation() == -1);
    CHECK(r.coefficient(-1) == Scalar(1));
    CHECK(r.coefficient(0) == Scalar(-1));
    CHECK(r.coefficient(1) == Scalar(1));
    CHECK(r.coefficient(2) == Scalar(-1));
    CHECK_FALSE(r.is_exact());

    Series sum = (s + s * s) + (-s);
    CHECK(sum.valuation() == 2);
    CHECK(sum == s * s);

    try
    {
        (void)(one / Series());
        FAIL("expected DivisionByZero");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
}

TEST_CASE("series_sqrt: examples")
{
    Series s = Series::parameter();
    CHECK((s * s).sqrt() == s);
    CHECK((s * s).sqrt().is_exact());

    Series r = (Series(Scalar(4)) + s).sqrt();
    CHECK(r.coefficient(0) == Scalar(2));
    CHECK(r.coefficient(1) == q(1, 4));
    CHECK(r.coefficient(2) == q(-1, 64));
    CHECK(r * r == Series(Scalar(4)) + s);

    Series h = s.sqrt();
    CHECK(h.ramification() == 2);
    CHECK(h.valuation() == 1);
    CHECK(h * h == s);

    try
    {
        (void)(Series(Scalar(2)) + s).sqrt();
        FAIL("expected NoSquareRoot");
    }
    catch (const Error &e)
    {
        CHECK(e.code() == ErrorCode::NoSquareRoot);
    }
}

TEST_CASE("series: truncation bookkeeping")
{
    Series s = Series::parameter();
    CHECK(s.inverse().is_exact());
    Series g = (Series(Scalar(1)) - s).inverse();
    CHECK(g.order() == kDefaultTruncation);
    CHECK(g.coefficient(15) == Scalar(1));
    CHECK_THROWS_AS((void)g.coefficient(16), Error);
    Series small = (Series(Scalar(1)) - s).with_truncation(4).inverse();
    CHECK(small.order() == 4);
    CHECK((S({1, 2, 3}).substitute(s * s)) == S({1, 0, 2, 0, 3}));
    Json j = to_json(g);
    CHECK(series_from_json(j) == g);
    CHECK(series_from_json(j).order() == g.order());
}

TEST_CASE("series: valuation laws on random pairs")
{
    util::Sampler rng(303);
    for (int k = 0; k < 1000; ++k)
    {
        Series a = rng.series(static_cast<int>(rng.integer(-4, 4)), static_cast<int>(rng.integer(1, 5)));
        Series b = rng.series(static_cast<int>(rng.integer(-4, 4)), static_cast<int>(rng.integer(1, 5)));
        if (rng.coin())
            b = -a + rng.series(a.valuation() + 1, 3); // forces cancellation in a + b
        if (b.is_zero())
            continue;
        REQUIRE((a * b).valuation() == a.valuation() + b.valuation());
        Series sum = a + b;
        REQUIRE((sum.is_zero() || sum.valuation() >= std::min(a.valuation(), b.valuation())));
    }
}
