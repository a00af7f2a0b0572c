#include <doctest.h>

#include <functional>

#include "conway/error.hpp"
#include "conway/fricke/fricke.hpp"
#include "conway/sl2/analysis.hpp"
#include "conway/sl2/json_codec.hpp"
#include "conway/util/sampler.hpp"

using namespace conway;
using namespace conway::sl2;
using algebra::Scalar;

namespace
{

const Scalar I = Scalar::imaginary_unit();
const ScalarMat J{I, Scalar(0), Scalar(0), -I};
const ScalarMat W{Scalar(0), Scalar(1), Scalar(-1), Scalar(0)};

ScalarRep quad(const ScalarMat &a, const ScalarMat &b, const ScalarMat &c, const ScalarMat &d)
{
    return ScalarRep(four_punctured_sphere(), {a, b, c, d});
}

ScalarRep free_rep(std::vector<ScalarMat> images)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < images.size(); ++i)
        names.push_back("g" + std::to_string(i + 1));
    return ScalarRep(Presentation(names), std::move(images));
}

ScalarMat upper(util::Sampler &rng)
{
    Scalar l = rng.nonzero_gaussian(5);
    return {l, rng.gaussian(5), Scalar(0), l.inverse()};
}

ErrorCode code_of(const std::function<void()> &f)
{
    try
    {
        f();
    }
    catch (const Error &e)
    {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("word: free reduction and parsing")
{
    Presentation p = four_punctured_sphere();
    GroupWord g = p.gen("m1");
    CHECK((g * g.inverse()).empty());
    CHECK(p.parse_word("m1 m2^-1 m2 m3") == p.parse_word("m1 m3"));
    CHECK(p.format(p.parse_word("m1 m2^-1 m3")) == "m1 m2^-1 m3");
    CHECK(p.format(GroupWord{}) == "1");
    CHECK(p.parse_word("m2^(-2)").length() == 2);
    CHECK(code_of([&] { (void)p.parse_word("m9"); }) == ErrorCode::ParseError);
    CHECK(p.relators().size() == 1);
    CHECK(p.peripheral().at("meridians").size() == 4);
}

TEST_CASE("word_eval: examples")
{
    ScalarRep rho = quad(J, -J, J, -J);
    CHECK(word_eval(rho, GroupWord{}).is_identity());
    GroupWord g = GroupWord::generator(0);
    CHECK(word_eval(rho, g * g.inverse()).is_identity());
    CHECK(word_eval(rho, rho.presentation.relators()[0]).is_identity());
}

TEST_CASE("character_of: examples")
{
    ScalarRep triv = quad(ScalarMat::identity(), ScalarMat::identity(), ScalarMat::identity(), ScalarMat::identity());
    for (const auto &[w, v] : character_of(triv))
        CHECK(v == Scalar(2));

    util::Sampler rng(11);
    ScalarRep rho = fricke::sample_exact_quadruple(rng);
    ScalarMat g = rng.sl2_exact();
    auto t1 = character_of(rho);
    auto t2 = character_of(rho.conjugated_by(g));
    for (const auto &[w, v] : t1)
        CHECK(t2.at(w) == v);
    CHECK(t1.at(GroupWord{}) == Scalar(2));

    Scalar t = Scalar(6).to_float().sqrt();
    ScalarRep r = fricke::realize_character({Scalar(1), Scalar(3), Scalar(3), t});
    auto tab = character_of(r);
    const Presentation &p = r.presentation;
    CHECK(tab.at(p.parse_word("m1 m2")) == Scalar(1));
    CHECK(tab.at(p.parse_word("m1 m3")) == Scalar(3));
    CHECK(tab.at(p.parse_word("m2 m3")) == Scalar(3));
    for (const char *m : {"m1", "m2", "m3", "m4"})
        CHECK(tab.at(p.parse_word(m)) == t);
}

TEST_CASE("is_reducible: examples")
{
    util::Sampler rng(12);
    ScalarRep tri = free_rep({upper(rng), upper(rng), upper(rng)});
    auto rep = is_reducible(tri);
    CHECK(rep.reducible);
    REQUIRE(rep.line);
    CHECK((*rep.line)[1].is_zero());
    CHECK_FALSE(rep.tolerance_based);

    auto irr = is_reducible(free_rep({J, W}));
    CHECK_FALSE(irr.reducible);
    REQUIRE(irr.witness_trace);
    CHECK(*irr.witness_trace == Scalar(-2));

    auto central = is_reducible(free_rep({ScalarMat::identity(), -ScalarMat::identity()}));
    CHECK(central.reducible);
    CHECK(central.line);
}

TEST_CASE("is_reducible: irrational eigenvalues fall back to floating point")
{
    // trace 3 has eigenvalues (3 +- sqrt 5)/2, outside Q(i)
    ScalarMat a{Scalar(1), Scalar(1), Scalar(1), Scalar(2)};
    auto rep = is_reducible(free_rep({a, a * a}));
    CHECK(rep.reducible);
    CHECK(rep.tolerance_based);
    auto irr = is_reducible(free_rep({a, W}));
    CHECK_FALSE(irr.reducible);
    CHECK(irr.tolerance_based);
}

TEST_CASE("commutator_trace: examples and the trace identity")
{
    ScalarMat A{Scalar(1), Scalar(1), Scalar(0), Scalar(1)};
    ScalarMat B{Scalar(1), Scalar(0), Scalar(1), Scalar(1)};
    ScalarRep r = free_rep({A, B});
    GroupWord g = GroupWord::generator(0), h = GroupWord::generator(1);
    CHECK(commutator_trace(r, g, g) == Scalar(2));
    CHECK(commutator_trace(r, g, h) == Scalar(3));
    util::Sampler rng(13);
    ScalarRep tri = free_rep({upper(rng), upper(rng)});
    CHECK(commutator_trace(tri, g, h) == Scalar(2));
}

TEST_CASE("conjugator: examples")
{
    util::Sampler rng(14);
    ScalarRep rho = fricke::sample_exact_quadruple(rng);
    CHECK(conjugator(rho, rho).is_identity());

    ScalarMat g0 = rng.sl2_exact();
    ScalarMat g = conjugator(rho, rho.conjugated_by(g0));
    ScalarMat inv = g0.inverse_sl2();
    CHECK((g == inv || g == -inv));

    ScalarRep diag = free_rep({ScalarMat::diagonal(Scalar(2), Scalar::gaussian(1, 2)), J});
    CHECK(code_of([&] { (void)conjugator(diag, diag); }) == ErrorCode::Reducible);

    ScalarRep other = fricke::sample_exact_quadruple(rng);
    CHECK(code_of([&] { (void)conjugator(rho, other); }) == ErrorCode::CharacterMismatch);
}

TEST_CASE("conjugator: sign normalization")
{
    ScalarMat m{Scalar(-1), Scalar(2), Scalar(3), Scalar(-7)};
    CHECK(sign_normalized(m) == -m);
    ScalarMat n{Scalar(0), -I, -I, Scalar(0)};
    CHECK(sign_normalized(n) == -n);
    CHECK(sign_normalized(-m) == -m);
}

TEST_CASE("lift_check: examples")
{
    CHECK(lift_check(quad(J, -J, J, -J)) == std::vector<int>{1});
    CHECK(lift_check(quad(J, J, J, J)) == std::vector<int>{1});
    // i * i * i * (-i) = -1: the relator lands on -I, so this sign pattern
    // is a projective representation but not a genuine lift.
    CHECK(lift_check(quad(J, J, J, -J)) == std::vector<int>{-1});
    ScalarMat one = ScalarMat::identity();
    CHECK(lift_check(quad(one, one, one, one)) == std::vector<int>{1});
    CHECK(code_of([&] { (void)lift_check(quad(J, W, J, J)); }) == ErrorCode::NotCentral);
}

TEST_CASE("json: matrices and representations round trip")
{
    util::Sampler rng(15);
    ScalarRep rho = fricke::sample_exact_quadruple(rng);
    Json j = to_json(rho);
    ScalarRep back = scalar_rep_from_json(j);
    CHECK(back.presentation.generators() == rho.presentation.generators());
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(back.images[i] == rho.images[i]);
    CHECK(back.presentation.relators() == rho.presentation.relators());
}

TEST_CASE("property: words have determinant one exactly")
{
    util::Sampler rng(21);
    std::vector<ScalarMat> gens;
    for (int i = 0; i < 3; ++i)
        gens.push_back(rng.sl2_exact());
    for (int k = 0; k < 1000; ++k)
    {
        GroupWord w = rng.word(3, 12);
        REQUIRE(word_eval<Scalar>(gens, w).det() == Scalar(1));
    }
}

TEST_CASE("property: characters are conjugation invariant")
{
    util::Sampler rng(22);
    for (int k = 0; k < 200; ++k)
    {
        ScalarRep rho = free_rep({rng.sl2_exact(), rng.sl2_exact(), rng.sl2_exact()});
        ScalarMat g = rng.sl2_exact();
        GroupWord w = rng.word(3, 6);
        std::vector<GroupWord> extra{w};
        auto a = character_of(rho, extra);
        auto b = character_of(rho.conjugated_by(g), extra);
        for (const auto &[word, v] : a)
            REQUIRE(b.at(word) == v);
    }
}

TEST_CASE("property: commutator trace identity")
{
    util::Sampler rng(23);
    GroupWord g = GroupWord::generator(0), h = GroupWord::generator(1);
    for (int k = 0; k < 1000; ++k)
    {
        ScalarRep r = free_rep({rng.sl2_exact(), rng.sl2_exact()});
        Scalar a = r.images[0].trace(), b = r.images[1].trace(), c = (r.images[0] * r.images[1]).trace();
        REQUIRE(commutator_trace(r, g, h) == a * a + b * b + c * c - a * b * c - Scalar(2));
    }
}

TEST_CASE("property: invariant lines triangularize")
{
    util::Sampler rng(24);
    int reducible = 0;
    for (int k = 0; k < 300; ++k)
    {
        ScalarRep r = (k % 2 == 0) ? free_rep({upper(rng), upper(rng), upper(rng)}).conjugated_by(rng.sl2_exact())
                                   : free_rep({rng.sl2_exact(), rng.sl2_exact(), rng.sl2_exact()});
        auto rep = is_reducible(r);
        if (k % 2 == 0)
            REQUIRE(rep.reducible);
        if (!rep.reducible)
            continue;
        ++reducible;
        ScalarMat P = basis_from_line(*rep.line);
        ScalarMat Pi = P.inverse();
        for (const auto &m : r.images)
            REQUIRE((Pi * m * P).is_upper_triangular());
    }
    CHECK(reducible >= 150);
}

TEST_CASE("property: conjugator round trip is exact")
{
    util::Sampler rng(25);
    for (int k = 0; k < 200; ++k)
    {
        ScalarRep rho = fricke::sample_exact_quadruple(rng);
        ScalarMat g0 = rng.sl2_exact();
        ScalarRep moved = rho.conjugated_by(g0);
        ScalarMat g = conjugator(rho, moved);
        REQUIRE(g.a.is_exact());
        for (std::size_t i = 0; i < 4; ++i)
            REQUIRE(g * moved.images[i] * g.inverse_sl2() == rho.images[i]);
    }
}
