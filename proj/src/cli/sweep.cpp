#include "conway/cli/sweep.hpp"

#include <functional>
#include <map>

#include "conway/error.hpp"
#include "conway/fixtures/fixtures.hpp"
#include "conway/fricke/fricke.hpp"
#include "conway/glue/glue.hpp"
#include "conway/ideal/ideal.hpp"
#include "conway/sl2/json_codec.hpp"
#include "conway/tangle/tangle.hpp"
#include "conway/util/sampler.hpp"

namespace conway::cli
{

namespace
{

using algebra::Scalar;
using algebra::Series;
using fricke::FrickePoint;
using sl2::ScalarMat;
using sl2::ScalarRep;

constexpr std::size_t kMaxCounterexamples = 20;

// Accumulates pass/fail per sample; errors thrown by a sample count as
// failures and are logged with their verdict name.
class Tally
{
  public:
    explicit Tally(std::string property) { result_.property = std::move(property); }

    void check(bool ok, const std::function<Json()> &detail)
    {
        ++result_.samples;
        if (ok)
            ++result_.passed;
        else
            note_failure(detail());
    }

    void run(const std::function<bool(Json &)> &sample)
    {
        Json detail = Json::object();
        try
        {
            check(sample(detail), [&] { return detail; });
        }
        catch (const Error &e)
        {
            detail["error"] = std::string(error_name(e.code()));
            detail["message"] = e.what();
            check(false, [&] { return detail; });
        }
    }

    Json &notes() { return result_.notes; }
    SweepResult finish() { return std::move(result_); }

  private:
    SweepResult result_;

    void note_failure(Json detail)
    {
        if (result_.counterexamples.size() >= kMaxCounterexamples)
            return;
        detail["sample"] = result_.samples - 1;
        result_.counterexamples.push_back(std::move(detail));
    }
};

// FNV-1a of the property name, mixed into the seed.
std::uint64_t property_seed(std::uint64_t seed, const std::string &property)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : property)
        h = (h ^ c) * 1099511628211ull;
    return seed ^ h;
}

ScalarRep sample_quadruple(util::Sampler &rng, const RunConfig &c)
{
    switch (c.field)
    {
    case FieldMode::ExactRational:
        return fricke::sample_rational_quadruple(rng);
    case FieldMode::ExactGaussian:
        return fricke::sample_exact_quadruple(rng);
    default:
        return fricke::sample_float_quadruple(rng, c.tolerance);
    }
}

Scalar sample_scalar(util::Sampler &rng, const RunConfig &c)
{
    switch (c.field)
    {
    case FieldMode::ExactRational:
        return Scalar(rng.rational(6));
    case FieldMode::ExactGaussian:
        return rng.gaussian(6);
    default:
        return rng.complex_float(3.0, c.tolerance);
    }
}

// |F| relative to the largest intermediate of its evaluation.
double relative_residual(const Scalar &f)
{
    if (f.is_exact())
        return f.is_zero() ? 0.0 : 1.0;
    return f.scale() > 0 ? std::abs(f.to_complex()) / f.scale() : std::abs(f.to_complex());
}

SweepResult y_membership(int count, util::Sampler &rng, const RunConfig &c)
{
    Tally t("y-membership");
    double worst = 0.0;
    for (int k = 0; k < count; ++k)
        t.run([&](Json &d) {
            ScalarRep r = sample_quadruple(rng, c);
            FrickePoint p = fricke::character_point(r);
            Scalar f = fricke::evaluate_F(p);
            d["point"] = fricke::to_json(p);
            d["F"] = algebra::to_json(f);
            bool product_one = sl2::word_eval(r, r.presentation.relators()[0]) == ScalarMat::identity();
            bool equal = fricke::equal_meridian_traces(r);
            if (c.field == FieldMode::Float)
            {
                double res = relative_residual(f);
                worst = std::max(worst, res);
                return product_one && equal && res <= 1e-9;
            }
            return product_one && equal && f.is_exact() && f.is_zero();
        });
    if (c.field == FieldMode::Float)
        t.notes()["worst_relative_residual"] = worst;
    return t.finish();
}

SweepResult cover_identity(int count, util::Sampler &rng, const RunConfig &c)
{
    Tally t("cover-identity");
    t.run([&](Json &d) {
        using algebra::MultiPoly;
        MultiPoly lhs = fricke::y_defining_poly().compose(fricke::cover_map_polys());
        const auto &vars = fricke::cover_defining_poly().vars();
        MultiPoly u = MultiPoly::variable(vars, 1), v = MultiPoly::variable(vars, 2);
        MultiPoly residual = lhs + u * u * v * v * fricke::cover_defining_poly();
        d["residual"] = algebra::to_json(residual);
        return residual.is_zero();
    });
    for (int k = 1; k < count; ++k)
        t.run([&](Json &d) {
            fricke::CoverPoint q{sample_scalar(rng, c), sample_scalar(rng, c), sample_scalar(rng, c),
                                 sample_scalar(rng, c)};
            d["cover_point"] = fricke::to_json(q);
            Scalar lhs = fricke::evaluate_F(fricke::cover_map(q));
            Scalar rhs = -(q.u * q.u * q.v * q.v * fricke::evaluate_H(q));
            return lhs == rhs;
        });
    return t.finish();
}

// `count` parameter samples on each singular curve and 2 count smooth points.
SweepResult singular_set(int count, util::Sampler &rng, const RunConfig &c)
{
    Tally t("singular-set");
    auto P = [](long x, long y, long z, long w) { return FrickePoint{Scalar(x), Scalar(y), Scalar(z), Scalar(w)}; };
    for (const FrickePoint &p : {P(-2, -2, -2, 0), P(-2, 2, 2, 0), P(2, -2, 2, 0), P(2, 2, -2, 0)})
        t.run([&](Json &d) {
            d["point"] = fricke::to_json(p);
            return fricke::singular_at(p);
        });
    auto grad = fricke::y_defining_poly().gradient();
    for (const auto &curve : fricke::singular_curves())
    {
        t.run([&](Json &d) {
            d["curve"] = curve.index;
            if (!fricke::y_defining_poly().compose(curve.coordinates).is_zero())
                return false;
            for (const auto &g : grad)
                if (!g.compose(curve.coordinates).is_zero())
                    return false;
            return true;
        });
        for (int k = 0; k < count; ++k)
            t.run([&](Json &d) {
                Scalar s = sample_scalar(rng, c);
                FrickePoint p = curve.at(s);
                d["curve"] = curve.index;
                d["point"] = fricke::to_json(p);
                return fricke::on_Y(p) && fricke::singular_at(p);
            });
    }
    for (int k = 0; k < 2 * count; ++k)
        t.run([&](Json &d) {
            FrickePoint p = fricke::character_point(sample_quadruple(rng, c));
            d["point"] = fricke::to_json(p);
            return !fricke::singular_at(p);
        });
    return t.finish();
}

SweepResult germ_certificates(int, util::Sampler &, const RunConfig &)
{
    Tally t("germ-certificates");
    for (const FrickePoint &p : {FrickePoint{Scalar(-2), Scalar(2), Scalar(2), Scalar(0)},
                                 FrickePoint{Scalar(2), Scalar(-2), Scalar(2), Scalar(0)},
                                 FrickePoint{Scalar(2), Scalar(2), Scalar(-2), Scalar(0)}})
        t.run([&](Json &d) {
            fricke::GermCertificate g = fricke::germ_certificate(p);
            d["certificate"] = fricke::to_json(g);
            bool witnesses = (g.smoothness_witnesses[0] == Scalar(-4) && g.smoothness_witnesses[1] == Scalar(4)) ||
                             (g.smoothness_witnesses[0] == Scalar(4) && g.smoothness_witnesses[1] == Scalar(-4));
            bool exact = true;
            for (const auto &q : g.preimages)
                for (const auto &x : q.coords())
                    exact = exact && x.is_exact();
            return g.valid() && g.preimages_distinct && g.involution_swaps && witnesses && exact;
        });
    return t.finish();
}

SweepResult character_conjugation(int count, util::Sampler &rng, const RunConfig &c)
{
    Tally t("character-conjugation");
    for (int k = 0; k < count; ++k)
        t.run([&](Json &d) {
            ScalarRep r = sample_quadruple(rng, c);
            ScalarMat g = c.field == FieldMode::Float ? rng.sl2_float(2.0, c.tolerance) : rng.sl2_exact();
            d["representation"] = sl2::to_json(r);
            d["conjugator"] = sl2::to_json(g);
            auto a = sl2::character_of(r), b = sl2::character_of(r.conjugated_by(g));
            for (const auto &[w, v] : a)
                if (!(b.at(w) == v))
                    return false;
            return true;
        });
    return t.finish();
}

std::array<ScalarMat, 4> irreducible_quadruple(util::Sampler &rng)
{
    for (;;)
    {
        ScalarRep r = fricke::sample_exact_quadruple(rng);
        if (!sl2::is_reducible(r).reducible)
            return {r.images[0], r.images[1], r.images[2], r.images[3]};
    }
}

glue::SplitSystem handle_pair()
{
    sl2::Presentation p = fixtures::piece_with_handle("m", "a");
    glue::Interface i{"S", {"P", "Q"}, {}};
    for (std::size_t k = 0; k < 4; ++k)
    {
        i.words[0][k] = p.gen("m" + std::to_string(k + 1));
        i.words[1][k] = i.words[0][k];
    }
    return glue::SplitSystem({{"P", p}, {"Q", p}}, {i});
}

SweepResult glue_roundtrip(int count, util::Sampler &rng, const RunConfig &)
{
    Tally t("glue-roundtrip");
    glue::SplitSystem system = handle_pair();
    const sl2::Presentation &p = system.pieces()[0].presentation;
    const auto &words = system.interfaces()[0].words[0];
    for (int k = 0; k < count; ++k)
        t.run([&](Json &d) {
            auto q = irreducible_quadruple(rng);
            ScalarMat g = rng.sl2_exact();
            ScalarRep r1(p, {q[0], q[1], q[2], q[3], rng.sl2_exact()});
            ScalarRep r2 = ScalarRep(p, {q[0], q[1], q[2], q[3], rng.sl2_exact()}).conjugated_by(g);
            d["rep1"] = sl2::to_json(r1);
            d["rep2"] = sl2::to_json(r2);
            glue::GlueResult res = glue::glue_two(system, r1, r2);
            ScalarRep b1 = glue::restrict_to_piece(system, res.representation, 0);
            ScalarRep b2 = glue::restrict_to_piece(system, res.representation, 1);
            bool first_exact = b1.images == r1.images;
            bool restrictions = glue::equal_character(glue::restrict_character(res.representation, system.interface_words(0, 0)),
                                                      glue::restrict_character(r1, words)) &&
                                glue::equal_character(glue::restrict_character(res.representation, system.interface_words(0, 1)),
                                                      glue::restrict_character(r2, words));
            glue::MatchReport m = glue::match_report(b2, words, r2, words);
            bool recovered = r2.conjugated_by(res.conjugators[1]).images == b2.images;
            return sl2::relators_hold(res.representation) && first_exact && restrictions && m.conjugate && recovered;
        });
    return t.finish();
}

SweepResult glue_fixtures(int, util::Sampler &, const RunConfig &)
{
    Tally t("glue-fixtures");
    t.run([&](Json &d) {
        Json fx = fixtures::double_system();
        glue::SplitSystem system = glue::system_from_json(fx["system"]);
        auto reps = glue::piece_reps_from_json(system, fx["representations"]);
        glue::GlueResult g = glue::glue_two(system, reps[0], reps[1]);
        d["case"] = "double";
        return sl2::relators_hold(g.representation) &&
               glue::restrict_to_piece(system, g.representation, 1).images == reps[1].images;
    });
    t.run([&](Json &d) {
        Json fx = fixtures::chi0_interface_system();
        glue::SplitSystem system = glue::system_from_json(fx["system"]);
        auto reps = glue::piece_reps_from_json(system, fx["representations"]);
        d["case"] = "reducible interface";
        try
        {
            glue::glue_two(system, reps[0], reps[1]);
        }
        catch (const Error &e)
        {
            d["error"] = std::string(error_name(e.code()));
            return e.code() == ErrorCode::ReducibleInterface;
        }
        return false;
    });
    t.run([&](Json &d) {
        auto up = fixtures::nonsplit_chi0_quadruple();
        const Scalar i = Scalar::imaginary_unit();
        ScalarMat j{i, Scalar(0), Scalar(0), -i}, l1{i, Scalar(0), Scalar(1), -i};
        std::array<ScalarMat, 4> low{l1, j, -j, (l1 * j * -j).inverse_sl2()};
        glue::MatchReport m = glue::match_report(up, low);
        d["case"] = "upper versus lower triangular";
        d["match"] = glue::to_json(m);
        return m.equal_character && !m.conjugate;
    });
    t.run([&](Json &d) {
        glue::MatchReport m =
            glue::match_report(fixtures::nonsplit_chi0_quadruple(), fixtures::split_chi0_quadruple());
        d["case"] = "non-split versus split";
        d["match"] = glue::to_json(m);
        return m.equal_character && !m.conjugate;
    });
    return t.finish();
}

SweepResult bipartition_degrees(int count, util::Sampler &rng, const RunConfig &)
{
    Tally t("bipartition-degrees");
    sl2::Presentation p = sl2::four_punctured_sphere();
    std::array<sl2::GroupWord, 4> w;
    for (std::size_t k = 0; k < 4; ++k)
        w[k] = p.gen("m" + std::to_string(k + 1));
    for (int n = 0; n < count; ++n)
        t.run([&](Json &d) {
            int pieces = static_cast<int>(rng.integer(1, 12));
            std::vector<glue::Piece> ps;
            std::vector<glue::Interface> is;
            for (int i = 0; i < pieces; ++i)
            {
                ps.push_back({"M" + std::to_string(i + 1), p});
                if (i > 0)
                {
                    auto parent = static_cast<std::size_t>(rng.integer(0, i - 1));
                    is.push_back({"C" + std::to_string(i), {ps[parent].name, ps.back().name}, {w, w}});
                }
            }
            glue::SplitSystem system(std::move(ps), std::move(is));
            glue::Bipartition b = glue::bipartition_pieces(system);
            auto deg = system.degrees();
            int plus = 0, minus = 0;
            for (const auto &name : b.plus)
                plus += deg[static_cast<std::size_t>(system.piece_index(name))];
            for (const auto &name : b.minus)
                minus += deg[static_cast<std::size_t>(system.piece_index(name))];
            d["system"] = glue::to_json(system);
            d["bipartition"] = glue::to_json(b);
            return plus == pieces - 1 && minus == pieces - 1;
        });
    return t.finish();
}

SweepResult translation_length(int count, util::Sampler &rng, const RunConfig &c)
{
    Tally t("translation-length");
    for (int n = 0; n < count; ++n)
        t.run([&](Json &d) {
            sl2::SeriesMat m = rng.sl2_series(4, c.truncation), g = rng.sl2_series(3, c.truncation);
            d["m"] = sl2::to_json(m);
            d["g"] = sl2::to_json(g);
            return ideal::translation_length(m) == ideal::translation_length(m.conjugated_by(g));
        });
    return t.finish();
}

SweepResult tree_metric(int count, util::Sampler &rng, const RunConfig &c)
{
    Tally t("tree-metric");
    auto vertex = [&] {
        sl2::SeriesMat b = rng.sl2_series(3, c.truncation);
        Series scale =
            Series::monomial(rng.nonzero_gaussian(3), static_cast<int>(rng.integer(-2, 2))).with_truncation(c.truncation);
        return ideal::TreeVertex::from_basis({b.a * scale, b.b, b.c * scale, b.d});
    };
    for (int n = 0; n < count; ++n)
        t.run([&](Json &d) {
            ideal::TreeVertex a = vertex(), b = vertex(), v = vertex();
            d["vertices"] = {ideal::to_json(a), ideal::to_json(b), ideal::to_json(v)};
            int ab = ideal::tree_distance(a, b), bv = ideal::tree_distance(b, v), av = ideal::tree_distance(a, v);
            return ab == ideal::tree_distance(b, a) && av <= ab + bv && ideal::tree_distance(a, a) == 0;
        });
    return t.finish();
}

SweepResult planted_tau(int count, util::Sampler &rng, const RunConfig &c)
{
    Tally t("planted-tau");
    const bool exact = c.field != FieldMode::Float;
    std::vector<Scalar> taus, dirs;
    double worst = 0.0;
    auto close = [&](const Scalar &a, const Scalar &b) {
        if (exact)
            return a == b;
        double rel = (a - b).magnitude() / std::max(b.magnitude(), 1e-300);
        worst = std::max(worst, rel);
        return rel <= 1e-8;
    };
    while (static_cast<int>(taus.size()) < count)
    {
        Scalar tau = sample_scalar(rng, c);
        Scalar one = exact ? Scalar(1) : Scalar(1).to_float(c.tolerance);
        if (tau.magnitude() < 0.2 || (tau + one).magnitude() < 0.2)
            continue;
        taus.push_back(tau);
        t.run([&](Json &d) {
            ideal::CharacterCurve curve = fixtures::planted_tau_family(tau, c.truncation);
            auto tr = [&](const char *w) { return sl2::word_eval(curve, curve.presentation.parse_word(w)).trace(); };
            Scalar std_dir = ideal::cusp_tangent_direction(tr("m"), tr("l"), ideal::TangentMode::Standard);
            Scalar shift_dir = ideal::cusp_tangent_direction(tr("m"), tr("l m"), ideal::TangentMode::Shifted);
            dirs.push_back(std_dir);
            d["tau"] = algebra::to_json(tau);
            d["standard"] = algebra::to_json(std_dir);
            d["shifted"] = algebra::to_json(shift_dir);
            Scalar gap = shift_dir - std_dir - one;
            return close(std_dir, tau * tau) && close(shift_dir, (tau + one) * (tau + one)) &&
                   close(gap * gap, Scalar(4) * std_dir);
        });
        if (dirs.size() < taus.size())
            dirs.push_back(Scalar(0));
    }
    for (std::size_t i = 0; i < taus.size(); ++i)
        for (std::size_t j = i + 1; j < taus.size(); ++j)
        {
            bool distinct = !(taus[i] * taus[i] == taus[j] * taus[j]);
            t.check(ideal::transversality_check(dirs[i], dirs[j]) == distinct, [&] {
                return Json{{"pair", {i, j}}, {"directions", {algebra::to_json(dirs[i]), algebra::to_json(dirs[j])}}};
            });
        }
    if (!exact)
        t.notes()["worst_relative_error"] = worst;
    return t.finish();
}

SweepResult tangle_bookkeeping(int, util::Sampler &, const RunConfig &c)
{
    Tally t("tangle-bookkeeping");
    for (const auto &[name, fx] : {std::pair{"trivial_tangle", fixtures::trivial_tangle()},
                                   std::pair{"vertical_arcs_circle_tangle", fixtures::vertical_arcs_circle_tangle()}})
    {
        tangle::TangleDiagram diagram = tangle::diagram_from_json(fx);
        ScalarRep rho = tangle::arc_representation_from_json(diagram, fx.at("projective_representation"), c.tolerance);
        for (const auto &o : tangle::all_orientations(diagram))
            t.run([&](Json &d) {
                d["fixture"] = name;
                d["orientation"] = o;
                tangle::MeridianSign s = tangle::assign_signs(diagram, o);
                for (bool ok : tangle::check_sign_balance(diagram, s))
                    if (!ok)
                        return false;
                tangle::LiftResult l = tangle::lift_representation(diagram, rho, s);
                for (const auto &r : l.representation.presentation.relators())
                    if (!(sl2::word_eval(l.representation, r) == ScalarMat::identity()))
                        return false;
                for (std::size_t v = 0; v < diagram.vertices().size(); ++v)
                    if (tangle::classify_vertex_type(diagram, static_cast<int>(v), o) == std::array<int, 3>{-2, -2, -2})
                        return false;
                return true;
            });
    }
    return t.finish();
}

SweepResult irreducibility_family(int, util::Sampler &, const RunConfig &c)
{
    Tally t("irreducibility-family");
    t.run([&](Json &d) {
        ideal::CharacterCurve family = fixtures::hypersurface_family(c.truncation);
        ideal::IrreducibilityReport r = ideal::irreducibility_report(family);
        d["report"] = ideal::to_json(r);
        return r.irreducible && r.order && *r.order > 0;
    });
    t.run([&](Json &d) {
        ideal::CharacterCurve family = fixtures::diagonal_reducible_family(c.truncation);
        ideal::IrreducibilityReport r = ideal::irreducibility_report(family);
        d["report"] = ideal::to_json(r);
        try
        {
            ideal::irreducible_along_family(family);
            return false;
        }
        catch (const Error &e)
        {
            if (e.code() != ErrorCode::ReducibleToOrder)
                throw;
        }
        return !r.irreducible && r.square_is_four == std::array<bool, 3>{false, true, true};
    });
    return t.finish();
}

SweepResult ideal_certificates(int, util::Sampler &, const RunConfig &c)
{
    Tally t("ideal-certificates");
    t.run([&](Json &d) {
        Json fx = fixtures::pole_curve(c.truncation);
        glue::SplitSystem system = glue::system_from_json(fx["system"]);
        ideal::CharacterCurve curve = ideal::curve_from_json(fx["curve"], c.truncation);
        ideal::DualGraphCertificate cert = ideal::dual_graph_certificate(system, curve);
        d["certificate"] = ideal::to_json(cert);
        auto words = curve.presentation.generators_and_pairs();
        ideal::IdealPointReport ip = ideal::is_ideal_point(curve, words);
        bool stabilized = true;
        for (const auto &s : cert.stabilizers)
            stabilized = stabilized && s.stabilizes;
        bool far = false;
        for (const auto &i : cert.interfaces)
            far = far || (i.distance && *i.distance >= 1);
        bool pole = ip.ideal_point && ip.valuation && *ip.valuation == -2;
        return pole && stabilized && far && cert.verdict;
    });
    t.run([&](Json &d) {
        Json fx = fixtures::double_system();
        glue::SplitSystem system = glue::system_from_json(fx["system"]);
        auto reps = glue::piece_reps_from_json(system, fx["representations"], c.tolerance);
        ideal::CharacterCurve curve =
            ideal::constant_curve(glue::glue_two(system, reps[0], reps[1]).representation, c.truncation);
        ideal::DualGraphCertificate cert = ideal::dual_graph_certificate(system, curve);
        d["certificate"] = ideal::to_json(cert);
        return !cert.verdict;
    });
    return t.finish();
}

using SweepFn = SweepResult (*)(int, util::Sampler &, const RunConfig &);

struct PropertyEntry
{
    SweepFn run;
    int default_count;
};

const std::map<std::string, PropertyEntry> &registry()
{
    static const std::map<std::string, PropertyEntry> r = {
        {"y-membership", {y_membership, 1000}},
        {"cover-identity", {cover_identity, 1}},
        {"singular-set", {singular_set, 50}},
        {"germ-certificates", {germ_certificates, 3}},
        {"character-conjugation", {character_conjugation, 200}},
        {"glue-roundtrip", {glue_roundtrip, 100}},
        {"glue-fixtures", {glue_fixtures, 4}},
        {"bipartition-degrees", {bipartition_degrees, 100}},
        {"translation-length", {translation_length, 200}},
        {"tree-metric", {tree_metric, 100}},
        {"planted-tau", {planted_tau, 20}},
        {"tangle-bookkeeping", {tangle_bookkeeping, 1}},
        {"irreducibility-family", {irreducibility_family, 2}},
        {"ideal-certificates", {ideal_certificates, 2}},
    };
    return r;
}

} // namespace

FieldMode parse_field(const std::string &name)
{
    if (name == "exact-rational")
        return FieldMode::ExactRational;
    if (name == "exact-gaussian" || name == "exact")
        return FieldMode::ExactGaussian;
    if (name == "float")
        return FieldMode::Float;
    fail(ErrorCode::InvalidArgument, "unknown field mode '" + name + "' (exact-rational, exact-gaussian, float)");
}

std::string field_name(FieldMode mode)
{
    switch (mode)
    {
    case FieldMode::ExactRational:
        return "exact-rational";
    case FieldMode::ExactGaussian:
        return "exact-gaussian";
    default:
        return "float";
    }
}

Json to_json(const RunConfig &c)
{
    return {{"field", field_name(c.field)}, {"tolerance", c.tolerance}, {"truncation", c.truncation}, {"seed", c.seed}};
}

Json to_json(const SweepResult &r)
{
    return {{"property", r.property},   {"samples", r.samples},
            {"passed", r.passed},       {"failed", r.samples - r.passed},
            {"ok", r.ok()},             {"counterexamples", r.counterexamples},
            {"notes", r.notes}};
}

std::vector<std::string> sweep_properties()
{
    std::vector<std::string> names;
    for (const auto &[name, entry] : registry())
        names.push_back(name);
    return names;
}

int default_count(const std::string &property)
{
    auto it = registry().find(property);
    if (it == registry().end())
        fail(ErrorCode::UnknownProperty, "unknown property '" + property + "'");
    return it->second.default_count;
}

SweepResult run_sweep(const std::string &property, int count, const RunConfig &config)
{
    auto it = registry().find(property);
    if (it == registry().end())
        fail(ErrorCode::UnknownProperty, "unknown property '" + property + "'");
    if (count < 1)
        fail(ErrorCode::InvalidArgument, "sample count must be positive");
    util::Sampler rng(property_seed(config.seed, property));
    return it->second.run(count, rng, config);
}

Json run_full_suite(const RunConfig &config)
{
    Json results = Json::array();
    bool ok = true;
    for (const auto &[name, entry] : registry())
    {
        SweepResult r = run_sweep(name, entry.default_count, config);
        ok = ok && r.ok();
        results.push_back(to_json(r));
    }
    return {{"config", to_json(config)}, {"sweeps", results}, {"ok", ok}};
}

} // namespace conway::cli
