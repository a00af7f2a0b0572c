#include <doctest.h>

#include "conway/error.hpp"
#include "conway/fixtures/fixtures.hpp"
#include "conway/ideal/ideal.hpp"
#include "conway/util/sampler.hpp"
#include "helpers.hpp"

using namespace conway;
using namespace conway::ideal;
using algebra::Scalar;
using algebra::Series;
using conway::testing::code_of;
using sl2::Presentation;
using sl2::ScalarMat;
using sl2::ScalarRep;

namespace
{

constexpr int kTrunc = 16;

Series s_pow(int k)
{
    return Series::monomial(Scalar(1), k).with_truncation(kTrunc);
}

Series c(long v)
{
    return Series(Scalar(v)).with_truncation(kTrunc);
}

SeriesMat diag(const Series &a)
{
    return {a, c(0), c(0), a.inverse()};
}

SeriesMat lift(const ScalarMat &m)
{
    return {Series(m.a).with_truncation(kTrunc), Series(m.b).with_truncation(kTrunc),
            Series(m.c).with_truncation(kTrunc), Series(m.d).with_truncation(kTrunc)};
}

const SeriesMat U{c(1), c(1), c(0), c(1)};
const SeriesMat L{c(1), c(0), c(1), c(1)};

CharacterCurve free_curve(std::vector<SeriesMat> images)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < images.size(); ++i)
        names.push_back("m" + std::to_string(i + 1));
    return CharacterCurve(Presentation(names), std::move(images));
}

SeriesMat random_sl2(util::Sampler &rng, int factors = 3)
{
    return rng.sl2_series(factors, kTrunc);
}

TreeVertex random_vertex(util::Sampler &rng)
{
    SeriesMat b = random_sl2(rng, 3);
    Series scale = Series::monomial(rng.nonzero_gaussian(3), static_cast<int>(rng.integer(-2, 2))).with_truncation(kTrunc);
    return TreeVertex::from_basis({b.a * scale, b.b, b.c * scale, b.d});
}

bool integral(const SeriesMat &m)
{
    for (const Series *e : {&m.a, &m.b, &m.c, &m.d})
        if (!e->is_zero() && e->valuation() < 0)
            return false;
    return true;
}

struct PoleFixture
{
    glue::SplitSystem system;
    CharacterCurve curve;
};

PoleFixture pole_fixture()
{
    Json fx = fixtures::pole_curve(kTrunc);
    return {glue::system_from_json(fx["system"]), curve_from_json(fx["curve"])};
}

CharacterCurve double_curve(glue::SplitSystem &system)
{
    Json fx = fixtures::double_system();
    system = glue::system_from_json(fx["system"]);
    auto reps = glue::piece_reps_from_json(system, fx["representations"]);
    return constant_curve(glue::glue_two(system, reps[0], reps[1]).representation, kTrunc);
}

Scalar planted_value(util::Sampler &rng)
{
    for (;;)
    {
        Scalar tau = rng.gaussian(4);
        // keep tau and tau + 1 away from zero so both directions are finite
        if (!tau.is_zero() && !(tau + Scalar(1)).is_zero())
            return tau;
    }
}

} // namespace

TEST_CASE("trace_valuation examples")
{
    SUBCASE("constant family")
    {
        auto q = fixtures::integral_quadruple();
        CharacterCurve curve = constant_curve(ScalarRep(sl2::four_punctured_sphere(), {q[0], q[1], q[2], q[3]}), kTrunc);
        util::Sampler rng(1);
        for (int n = 0; n < 20; ++n)
            CHECK(trace_valuation(curve, rng.word(4, 6)) >= 0);
    }
    SUBCASE("diag(1/s, s)")
    {
        CharacterCurve curve = free_curve({diag(s_pow(-1))});
        CHECK(trace_valuation(curve, curve.presentation.gen("m1")) == -1);
    }
    SUBCASE("commutator of diag(1/s, s) and a unipotent")
    {
        CharacterCurve curve = free_curve({diag(s_pow(-1)), U});
        CHECK(trace_valuation(curve, curve.presentation.parse_word("m1 m2 m1^-1 m2^-1")) == 0);
    }
    SUBCASE("all known terms vanish")
    {
        Series zero = Series::big_o(3).with_truncation(kTrunc);
        SeriesMat m{zero, c(1), c(-1), zero};
        CharacterCurve curve = free_curve({m});
        CHECK(code_of([&] { trace_valuation(curve, curve.presentation.gen("m1")); }) ==
              ErrorCode::InconclusiveTruncation);
    }
}

TEST_CASE("is_ideal_point examples")
{
    SUBCASE("constant curve")
    {
        auto q = fixtures::integral_quadruple();
        CharacterCurve curve = constant_curve(ScalarRep(sl2::four_punctured_sphere(), {q[0], q[1], q[2], q[3]}), kTrunc);
        auto words = curve.presentation.generators_and_pairs();
        CHECK_FALSE(is_ideal_point(curve, words).ideal_point);
    }
    SUBCASE("tr(m1 m2) = 1/s^2 + 1")
    {
        SeriesMat low{c(1), c(0), s_pow(-2) - c(1), c(1)};
        CharacterCurve curve = free_curve({U, low});
        CHECK(sl2::word_eval(curve, curve.presentation.parse_word("m1 m2")).trace() == s_pow(-2) + c(1));
        auto words = curve.presentation.generators_and_pairs();
        IdealPointReport r = is_ideal_point(curve, words);
        CHECK(r.ideal_point);
        REQUIRE(r.witness);
        CHECK(curve.presentation.format(*r.witness) == "m1 m2");
        CHECK(*r.valuation == -2);
    }
    SUBCASE("regular piece traces with a cross-interface pole")
    {
        PoleFixture f = pole_fixture();
        for (int p = 0; p < 2; ++p)
        {
            auto gens = f.system.piece_generators(p);
            std::vector<sl2::GroupWord> words = gens;
            for (std::size_t i = 0; i < gens.size(); ++i)
                for (std::size_t j = i + 1; j < gens.size(); ++j)
                    words.push_back(gens[i] * gens[j]);
            CHECK_FALSE(is_ideal_point(f.curve, words).ideal_point);
        }
        auto words = f.curve.presentation.generators_and_pairs();
        IdealPointReport r = is_ideal_point(f.curve, words);
        CHECK(r.ideal_point);
        CHECK(*r.valuation == -2);
        CHECK(trace_valuation(f.curve, f.curve.presentation.parse_word("P.a Q.b")) == -2);
    }
}

TEST_CASE("vertex_stabilizer_check examples")
{
    SUBCASE("integral matrices fix the standard vertex")
    {
        std::vector<SeriesMat> ms{U, L, SeriesMat{c(1) + s_pow(1), s_pow(3), c(0), (c(1) + s_pow(1)).inverse()}};
        StabilizerReport r = vertex_stabilizer_check(ms);
        CHECK(r.stabilizes);
        REQUIRE(r.vertex);
        CHECK(*r.vertex == TreeVertex::standard());
    }
    SUBCASE("diag(1/s, s) alone has a trace pole")
    {
        std::vector<SeriesMat> ms{diag(s_pow(-1))};
        StabilizerReport r = vertex_stabilizer_check(ms);
        CHECK_FALSE(r.stabilizes);
        CHECK_FALSE(r.note.empty());
    }
    SUBCASE("a pair integral only after conjugation")
    {
        SeriesMat d = diag(s_pow(-1));
        std::vector<SeriesMat> ms{U.conjugated_by(d), L.conjugated_by(d)};
        CHECK_FALSE(integral(ms[0]));
        StabilizerReport r = vertex_stabilizer_check(ms);
        CHECK(r.stabilizes);
        REQUIRE(r.vertex);
        CHECK(*r.vertex == TreeVertex::from_basis(d));
        CHECK(tree_distance(*r.vertex, TreeVertex::standard()) == 2);
        SeriesMat p = r.vertex->basis, pi = p.inverse();
        for (const auto &m : ms)
            CHECK(integral(pi * m * p));
    }
    SUBCASE("regular traces on each matrix but a pole on a product")
    {
        std::vector<SeriesMat> ms{U, SeriesMat{c(1), c(0), s_pow(-2), c(1)}};
        StabilizerReport r = vertex_stabilizer_check(ms);
        CHECK_FALSE(r.stabilizes);
    }
}

TEST_CASE("translation_length examples")
{
    CHECK(translation_length(SeriesMat::identity()) == 0);
    CHECK(translation_length(diag(s_pow(-1))) == 2);
    CHECK(translation_length(U) == 0);
    CHECK(translation_length(diag(s_pow(3))) == 6);
}

TEST_CASE("tree_distance examples")
{
    TreeVertex o = TreeVertex::standard();
    CHECK(tree_distance(o, o) == 0);
    CHECK(tree_distance(o, TreeVertex::from_basis({s_pow(1), c(0), c(0), c(1)})) == 1);
    CHECK(tree_distance(o, TreeVertex::from_basis({s_pow(2), c(0), c(0), c(1)})) == 2);
    // scaling and integral column operations do not move the vertex
    CHECK(TreeVertex::from_basis({s_pow(3), s_pow(1), c(0), s_pow(1) + s_pow(2)}) ==
          TreeVertex::from_basis({s_pow(2), c(1), c(0), c(1) + s_pow(1)}));
    CHECK(TreeVertex::from_basis(U) == o);
    CHECK(TreeVertex::from_basis({c(1), s_pow(-1), c(0), c(1)}) ==
          TreeVertex::from_basis({c(1), s_pow(-1) + c(1) + s_pow(1), c(0), c(1)}));
    CHECK_FALSE(TreeVertex::from_basis({c(1), s_pow(-1), c(0), c(1)}) == TreeVertex::standard());
}

TEST_CASE("dual_graph_certificate examples")
{
    SUBCASE("non-matching pieces give a positive certificate")
    {
        PoleFixture f = pole_fixture();
        DualGraphCertificate cert = dual_graph_certificate(f.system, f.curve);
        CHECK(cert.verdict);
        REQUIRE(cert.stabilizers.size() == 2);
        CHECK(cert.stabilizers[0].stabilizes);
        CHECK(cert.stabilizers[1].stabilizes);
        REQUIRE(cert.interfaces.size() == 1);
        REQUIRE(cert.interfaces[0].distance);
        CHECK(*cert.interfaces[0].distance >= 1);
        CHECK(*cert.interfaces[0].distance == 2);
        REQUIRE(cert.interfaces[0].match);
        CHECK(cert.interfaces[0].match->equal_character);
        CHECK_FALSE(cert.interfaces[0].match->conjugate);
        CHECK(cert.ideal.ideal_point);
    }
    SUBCASE("the double is negative: interface restrictions are conjugate")
    {
        glue::SplitSystem system;
        CharacterCurve curve = double_curve(system);
        DualGraphCertificate cert = dual_graph_certificate(system, curve);
        CHECK_FALSE(cert.verdict);
        REQUIRE(cert.interfaces[0].match);
        CHECK(cert.interfaces[0].match->conjugate);
        CHECK(*cert.interfaces[0].distance == 0);
        CHECK_FALSE(cert.ideal.ideal_point);
    }
    SUBCASE("the constant irreducible curve on a path is negative: no pole")
    {
        Json fx = fixtures::three_piece_path();
        glue::SplitSystem system = glue::system_from_json(fx["system"]);
        auto reps = glue::piece_reps_from_json(system, fx["representations"]);
        CharacterCurve curve = constant_curve(glue::glue_many(system, reps).representation, kTrunc);
        DualGraphCertificate cert = dual_graph_certificate(system, curve);
        CHECK_FALSE(cert.verdict);
        CHECK_FALSE(cert.ideal.ideal_point);
        CHECK(cert.stabilizers.size() == 3);
    }
    SUBCASE("a curve on another presentation is refused")
    {
        PoleFixture f = pole_fixture();
        CharacterCurve other = free_curve({U});
        CHECK(code_of([&] { dual_graph_certificate(f.system, other); }) == ErrorCode::NotOnAmalgam);
    }
    SUBCASE("certificate JSON carries the witnesses")
    {
        PoleFixture f = pole_fixture();
        Json j = to_json(dual_graph_certificate(f.system, f.curve));
        CHECK(j["verdict"] == true);
        CHECK(j["interfaces"][0]["tree_distance"] == 2);
        CHECK(j["ideal"]["witness"].is_string());
    }
}

TEST_CASE("limit_character examples")
{
    SUBCASE("constant curve")
    {
        auto q = fixtures::integral_quadruple();
        ScalarRep rep(sl2::four_punctured_sphere(), {q[0], q[1], q[2], q[3]});
        CharacterCurve curve = constant_curve(rep, kTrunc);
        auto words = rep.presentation.generators_and_pairs();
        auto table = limit_character(curve, words);
        for (const auto &w : words)
            CHECK(table.at(w) == sl2::word_eval(rep, w).trace());
    }
    SUBCASE("trace 2 + s")
    {
        CharacterCurve curve = free_curve({{c(2) + s_pow(1), c(1), c(-1), c(0)}});
        CHECK(limit_character(curve, std::vector<sl2::GroupWord>{curve.presentation.gen("m1")})
                  .at(curve.presentation.gen("m1")) == Scalar(2));
    }
    SUBCASE("piece restrictions of the pole family have limits, the amalgam does not")
    {
        PoleFixture f = pole_fixture();
        for (int p = 0; p < 2; ++p)
        {
            auto words = f.system.piece_generators(p);
            CHECK_NOTHROW(limit_character(f.curve, words));
        }
        auto words = f.curve.presentation.generators_and_pairs();
        CHECK(code_of([&] { limit_character(f.curve, words); }) == ErrorCode::PoleAtLimit);
    }
}

TEST_CASE("cusp_tangent_direction examples")
{
    Series s2 = s_pow(2);
    CHECK(cusp_tangent_direction(c(2) + s2, c(2) + c(9) * s2) == Scalar(9));
    CHECK(cusp_tangent_direction(c(2) + s2, c(2) + s2) == Scalar(1));
    CHECK(cusp_tangent_direction(c(-2) - s2, c(2) + c(4) * s2) == Scalar(-4));

    const Scalar tau = Scalar(1) + Scalar(2) * Scalar::imaginary_unit();
    CharacterCurve curve = fixtures::planted_tau_family(tau, kTrunc);
    auto tr = [&](const char *w) { return sl2::word_eval(curve, curve.presentation.parse_word(w)).trace(); };
    Scalar standard = cusp_tangent_direction(tr("m"), tr("l"), TangentMode::Standard);
    Scalar shifted = cusp_tangent_direction(tr("m"), tr("l m"), TangentMode::Shifted);
    CHECK(standard == Scalar(-3) + Scalar(4) * Scalar::imaginary_unit());
    CHECK(shifted == Scalar(8) * Scalar::imaginary_unit());

    SUBCASE("refusals")
    {
        CHECK(code_of([&] { cusp_tangent_direction(c(2), c(2) + s2); }) == ErrorCode::DegenerateFamily);
        CHECK(code_of([&] { cusp_tangent_direction(c(2) + s2, c(2) + s_pow(1)); }) == ErrorCode::VerticalTangent);
        CHECK(code_of([&] { cusp_tangent_direction(c(3) + s2, c(2) + s2); }) == ErrorCode::InvalidArgument);
        CHECK(cusp_tangent_direction(c(2) + s_pow(1), c(2) + s2) == Scalar(0));
    }
}

TEST_CASE("transversality_check examples")
{
    const Scalar I = Scalar::imaginary_unit();
    CHECK(transversality_check(Scalar(4), Scalar(9)));
    CHECK_FALSE(transversality_check(Scalar(9), Scalar(9)));
    CHECK(transversality_check(Scalar(1) + I, Scalar(1) - I));
    CHECK_FALSE(transversality_check(Scalar::from_complex({2.0, 0.0}, 1e-9), Scalar::from_complex({2.0 + 1e-12, 0.0}, 1e-9)));
}

TEST_CASE("irreducible_along_family examples")
{
    SUBCASE("a hypersurface family leaving (-2, 2, 2, 0) with t = s")
    {
        CharacterCurve family = fixtures::hypersurface_family(kTrunc);
        CHECK(relators_hold(family));
        mpq_class order = irreducible_along_family(family);
        CHECK(order > 0);
        IrreducibilityReport r = irreducibility_report(family);
        CHECK(r.irreducible);
        REQUIRE(r.limit);
        CHECK(*r.limit == fricke::FrickePoint{Scalar(-2), Scalar(2), Scalar(2), Scalar(0)});
        REQUIRE(r.witness);
        REQUIRE(r.coefficient);
        CHECK_FALSE(r.coefficient->is_zero());
    }
    SUBCASE("constant reducible family")
    {
        auto d = fixtures::split_chi0_quadruple();
        CharacterCurve family = constant_curve(ScalarRep(sl2::four_punctured_sphere(), {d[0], d[1], d[2], d[3]}), kTrunc);
        CHECK(code_of([&] { irreducible_along_family(family); }) == ErrorCode::ReducibleToOrder);
        IrreducibilityReport r = irreducibility_report(family);
        CHECK_FALSE(r.irreducible);
        CHECK(r.square_is_four == std::array<bool, 3>{true, true, true});
    }
    SUBCASE("diagonal family with lambda1 = lambda2 = 1/lambda3 = 1/lambda4")
    {
        CharacterCurve family = fixtures::diagonal_reducible_family(kTrunc);
        CHECK(relators_hold(family));
        IrreducibilityReport r = irreducibility_report(family);
        CHECK_FALSE(r.irreducible);
        CHECK(r.square_is_four == std::array<bool, 3>{false, true, true});
        try
        {
            irreducible_along_family(family);
            FAIL("expected a refusal");
        }
        catch (const Error &e)
        {
            CHECK(e.code() == ErrorCode::ReducibleToOrder);
            std::string msg = e.what();
            CHECK(msg.find("y^2") != std::string::npos);
        }
    }
    SUBCASE("a limit away from the distinguished points is refused")
    {
        auto q = fixtures::integral_quadruple();
        CharacterCurve family = constant_curve(ScalarRep(sl2::four_punctured_sphere(), {q[0], q[1], q[2], q[3]}), kTrunc);
        CHECK(code_of([&] { irreducibility_report(family); }) == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("fixture curves satisfy their relators")
{
    CHECK(relators_hold(pole_fixture().curve));
    CHECK(relators_hold(fixtures::planted_tau_family(Scalar(3), kTrunc)));
}

TEST_CASE("property: translation length is conjugation invariant")
{
    util::Sampler rng(8080);
    for (int n = 0; n < 200; ++n)
    {
        SeriesMat m = random_sl2(rng, 4);
        SeriesMat g = random_sl2(rng, 3);
        CHECK(translation_length(m) == translation_length(m.conjugated_by(g)));
    }
}

TEST_CASE("property: tree distance is a metric")
{
    util::Sampler rng(9090);
    for (int n = 0; n < 100; ++n)
    {
        TreeVertex a = random_vertex(rng), b = random_vertex(rng), v = random_vertex(rng);
        int ab = tree_distance(a, b), bv = tree_distance(b, v), av = tree_distance(a, v);
        CHECK(ab == tree_distance(b, a));
        CHECK(av <= ab + bv);
        CHECK(ab >= 0);
        CHECK(tree_distance(a, a) == 0);
        CHECK((ab == 0) == (a == b));
    }
}

TEST_CASE("property: a stabilized vertex makes every matrix integral")
{
    util::Sampler rng(1212);
    int stabilized = 0;
    for (int n = 0; n < 100; ++n)
    {
        // conjugate integral generators by a random frame so most samples
        // stabilize a vertex other than the standard one
        SeriesMat g = random_sl2(rng, 3);
        std::vector<SeriesMat> ms;
        for (int k = 0; k < 3; ++k)
        {
            SeriesMat h = k % 2 ? SeriesMat{c(1), Series(rng.gaussian(3)).with_truncation(kTrunc), c(0), c(1)}
                                : SeriesMat{c(1), c(0), Series(rng.gaussian(3)).with_truncation(kTrunc) + s_pow(1), c(1)};
            ms.push_back(rng.integer(0, 4) == 0 ? h * diag(s_pow(-1)) : h.conjugated_by(g));
        }
        StabilizerReport r = vertex_stabilizer_check(ms);
        if (!r.stabilizes)
            continue;
        ++stabilized;
        REQUIRE(r.vertex);
        SeriesMat p = r.vertex->basis, pi = p.inverse();
        for (const auto &m : ms)
            CHECK(integral(pi * m * p));
    }
    CHECK(stabilized > 50);
}

TEST_CASE("property: ideal points survive the reparametrization s -> s (1 + s)")
{
    util::Sampler rng(3131);
    Series g = s_pow(1) + s_pow(2);
    for (int n = 0; n < 50; ++n)
    {
        std::vector<SeriesMat> images{random_sl2(rng, 3), random_sl2(rng, 3)};
        CharacterCurve curve = free_curve(images);
        CharacterCurve moved = reparametrize(curve, g);
        auto words = curve.presentation.generators_and_pairs();
        IdealPointReport a = is_ideal_point(curve, words), b = is_ideal_point(moved, words);
        CHECK(a.ideal_point == b.ideal_point);
        CHECK(a.valuation == b.valuation);
        for (const auto &w : words)
            CHECK(trace_valuation(curve, w) == trace_valuation(moved, w));
    }
    PoleFixture f = pole_fixture();
    auto words = f.curve.presentation.generators_and_pairs();
    CHECK(is_ideal_point(reparametrize(f.curve, g), words).ideal_point);
}

TEST_CASE("property: standard and shifted directions are consistent for planted cusp shapes")
{
    util::Sampler rng(6565);
    std::vector<Scalar> taus, standard;
    for (int n = 0; n < 20; ++n)
    {
        Scalar tau = planted_value(rng);
        CharacterCurve curve = fixtures::planted_tau_family(tau, kTrunc);
        auto tr = [&](const char *w) { return sl2::word_eval(curve, curve.presentation.parse_word(w)).trace(); };
        Scalar std_dir = cusp_tangent_direction(tr("m"), tr("l"), TangentMode::Standard);
        Scalar shift_dir = cusp_tangent_direction(tr("m"), tr("l m"), TangentMode::Shifted);
        CHECK(std_dir == tau * tau);
        CHECK(shift_dir == (tau + Scalar(1)) * (tau + Scalar(1)));
        Scalar gap = shift_dir - std_dir - Scalar(1);
        CHECK(gap * gap == Scalar(4) * std_dir);
        taus.push_back(tau);
        standard.push_back(std_dir);
    }
    for (std::size_t i = 0; i < taus.size(); ++i)
        for (std::size_t j = 0; j < taus.size(); ++j)
            CHECK(transversality_check(standard[i], standard[j]) == !(taus[i] * taus[i] == taus[j] * taus[j]));
}

TEST_CASE("property: planted cusp shapes in float mode")
{
    util::Sampler rng(6566);
    for (int n = 0; n < 20; ++n)
    {
        Scalar tau = rng.complex_float(2.0, 1e-9);
        if (tau.magnitude() < 0.2 || (tau + Scalar(1).to_float(1e-9)).magnitude() < 0.2)
            continue;
        CharacterCurve curve = fixtures::planted_tau_family(tau, kTrunc);
        auto tr = [&](const char *w) { return sl2::word_eval(curve, curve.presentation.parse_word(w)).trace(); };
        Scalar std_dir = cusp_tangent_direction(tr("m"), tr("l"));
        Scalar shift_dir = cusp_tangent_direction(tr("m"), tr("l m"), TangentMode::Shifted);
        Scalar want_std = tau * tau, want_shift = (tau + Scalar(1)) * (tau + Scalar(1));
        CHECK((std_dir - want_std).magnitude() <= 1e-8 * want_std.magnitude());
        CHECK((shift_dir - want_shift).magnitude() <= 1e-8 * want_shift.magnitude());
    }
}

TEST_CASE("property: a positive certificate implies an ideal point")
{
    util::Sampler rng(7171);
    PoleFixture f = pole_fixture();
    glue::SplitSystem dsys;
    CharacterCurve dcurve = double_curve(dsys);
    std::vector<std::pair<const glue::SplitSystem *, CharacterCurve>> cases;
    for (int n = 0; n < 30; ++n)
    {
        SeriesMat g = lift(rng.sl2_exact(3));
        cases.push_back({&f.system, f.curve.conjugated_by(g)});
        cases.push_back({&f.system, reparametrize(f.curve, s_pow(1) + Series(rng.gaussian(3)).with_truncation(kTrunc) * s_pow(2))});
        cases.push_back({&dsys, dcurve.conjugated_by(g)});
    }
    int positive = 0;
    for (auto &[system, curve] : cases)
    {
        DualGraphCertificate cert = dual_graph_certificate(*system, curve);
        auto words = curve.presentation.generators_and_pairs();
        if (cert.verdict)
        {
            ++positive;
            CHECK(is_ideal_point(curve, words).ideal_point);
        }
    }
    CHECK(positive >= 60);
}
