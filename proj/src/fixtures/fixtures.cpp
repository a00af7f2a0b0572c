#include "conway/fixtures/fixtures.hpp"

#include "conway/fricke/fricke.hpp"
#include "conway/sl2/json_codec.hpp"

namespace conway::fixtures
{

namespace
{

using algebra::Series;
using sl2::SeriesMat;

const Scalar I = Scalar::imaginary_unit();

ScalarMat mat(long a, long b, long c, long d)
{
    return {Scalar(a), Scalar(b), Scalar(c), Scalar(d)};
}

Json images_json(const sl2::Presentation &p, const std::vector<ScalarMat> &images)
{
    Json j = Json::object();
    for (std::size_t g = 0; g < images.size(); ++g)
        j[p.generators()[g]] = sl2::to_json(images[g]);
    return {{"images", j}};
}

std::vector<ScalarMat> with_handle(const std::array<ScalarMat, 4> &q, const ScalarMat &handle)
{
    return {q[0], q[1], q[2], q[3], handle};
}

std::array<ScalarMat, 4> conjugate(const std::array<ScalarMat, 4> &q, const ScalarMat &g)
{
    std::array<ScalarMat, 4> out;
    for (std::size_t k = 0; k < 4; ++k)
        out[k] = q[k].conjugated_by(g);
    return out;
}

glue::Interface meridian_interface(const std::string &name, const std::string &p, const sl2::Presentation &pp,
                                   const std::string &pref_p, const std::string &q, const sl2::Presentation &qp,
                                   const std::string &pref_q)
{
    glue::Interface i;
    i.name = name;
    i.pieces = {p, q};
    for (std::size_t k = 0; k < 4; ++k)
    {
        i.words[0][k] = pp.gen(pref_p + std::to_string(k + 1));
        i.words[1][k] = qp.gen(pref_q + std::to_string(k + 1));
    }
    return i;
}

SeriesMat lift(const ScalarMat &m, int truncation)
{
    auto l = [&](const Scalar &x) { return Series(x).with_truncation(truncation); };
    return {l(m.a), l(m.b), l(m.c), l(m.d)};
}

} // namespace

std::array<ScalarMat, 4> integral_quadruple()
{
    ScalarMat m1 = mat(1, 1, 0, 1), m2 = mat(1, 0, -1, 1), m3 = mat(2, -1, 1, 0);
    return {m1, m2, m3, (m1 * m2 * m3).inverse_sl2()};
}

std::array<ScalarMat, 4> nonsplit_chi0_quadruple()
{
    ScalarMat r1{I, Scalar(1), Scalar(0), -I};
    ScalarMat j{I, Scalar(0), Scalar(0), -I};
    ScalarMat r3 = -j;
    return {r1, j, r3, (r1 * j * r3).inverse_sl2()};
}

std::array<ScalarMat, 4> split_chi0_quadruple()
{
    ScalarMat j{I, Scalar(0), Scalar(0), -I};
    return {j, j, -j, -j};
}

sl2::Presentation piece_with_handle(const std::string &meridian_prefix, const std::string &handle)
{
    std::vector<std::string> gens;
    for (int k = 1; k <= 4; ++k)
        gens.push_back(meridian_prefix + std::to_string(k));
    gens.push_back(handle);
    sl2::Presentation p(gens);
    std::vector<sl2::GroupWord> mer;
    sl2::GroupWord rel;
    for (int k = 0; k < 4; ++k)
    {
        mer.push_back(sl2::GroupWord::generator(k));
        rel = rel * mer.back();
    }
    p.add_relator(rel);
    p.set_peripheral("meridians", mer);
    return p;
}

Json double_system()
{
    sl2::Presentation p = piece_with_handle("m", "a");
    glue::SplitSystem system({{"N", p}, {"N_copy", p}}, {meridian_interface("S", "N", p, "m", "N_copy", p, "m")});
    auto images = with_handle(integral_quadruple(), mat(2, 1, 1, 1));
    return {{"description", "a piece glued to a copy of itself by the identity of its boundary sphere"},
            {"system", glue::to_json(system)},
            {"representations", {{"N", images_json(p, images)}, {"N_copy", images_json(p, images)}}}};
}

Json chi0_interface_system()
{
    sl2::Presentation p = sl2::four_punctured_sphere();
    glue::SplitSystem system({{"A", p}, {"B", p}}, {meridian_interface("S", "A", p, "m", "B", p, "m")});
    auto r = nonsplit_chi0_quadruple(), d = split_chi0_quadruple();
    return {{"description", "both sides restrict to the reducible character (-2, 2, 2, 0): non-split and split"},
            {"system", glue::to_json(system)},
            {"representations",
             {{"A", images_json(p, {r.begin(), r.end()})}, {"B", images_json(p, {d.begin(), d.end()})}}}};
}

Json three_piece_path()
{
    sl2::Presentation pa = piece_with_handle("m", "a"), pc = piece_with_handle("m", "c");
    sl2::Presentation pb({"m1", "m2", "m3", "m4", "n1", "n2", "n3", "n4"});
    pb.add_relator(pb.parse_word("m1 m2 m3 m4"));
    pb.add_relator(pb.parse_word("n1 n2 n3 n4"));
    glue::SplitSystem system({{"A", pa}, {"B", pb}, {"C", pc}},
                             {meridian_interface("S1", "A", pa, "m", "B", pb, "m"),
                              meridian_interface("S2", "B", pb, "n", "C", pc, "m")});
    auto q = integral_quadruple();
    ScalarMat g1 = mat(1, 1, 1, 2), h = mat(2, 1, 1, 1), g2 = mat(1, 0, 2, 1);
    auto qa = conjugate(q, g1), qn = conjugate(q, h), qc = conjugate(q, h * g2);
    std::vector<ScalarMat> b{q[0], q[1], q[2], q[3], qn[0], qn[1], qn[2], qn[3]};
    return {{"description", "a path of three pieces with compatible irreducible interfaces"},
            {"system", glue::to_json(system)},
            {"representations",
             {{"A", images_json(pa, with_handle(qa, mat(3, 1, 2, 1)))},
              {"B", images_json(pb, b)},
              {"C", images_json(pc, with_handle(qc, mat(1, 2, 1, 3)))}}}};
}

Json pole_curve(int truncation)
{
    sl2::Presentation pp = piece_with_handle("m", "a"), pq = piece_with_handle("n", "b");
    glue::SplitSystem system({{"P", pp}, {"Q", pq}}, {meridian_interface("S", "P", pp, "m", "Q", pq, "n")});
    auto r = nonsplit_chi0_quadruple();
    Series s = Series::parameter().with_truncation(truncation);
    Series one = Series(Scalar(1)).with_truncation(truncation);
    // piece Q is integral in the frame diag(s^-1, s): b = D [[1,1],[1,2]] D^-1
    SeriesMat b{one, Series::monomial(Scalar(1), -2).with_truncation(truncation), s * s, Series(Scalar(2)).with_truncation(truncation)};
    std::vector<SeriesMat> images;
    for (const auto &m : r)
        images.push_back(lift(m, truncation));
    images.push_back(lift(mat(0, 1, -1, 0), truncation));
    for (const auto &m : r)
        images.push_back(lift(m, truncation));
    images.push_back(b);
    ideal::CharacterCurve curve(system.amalgam(), std::move(images));
    Json c = sl2::to_json(curve);
    c["truncation"] = truncation;
    return {{"description", "pieces with regular traces fixing tree vertices at distance 2; the cross-interface "
                            "trace tr(P.a Q.b) = s^2 - s^-2 has a pole"},
            {"system", glue::to_json(system)},
            {"curve", c}};
}

ideal::CharacterCurve planted_tau_family(const Scalar &tau, int truncation)
{
    Series a = ideal::exp_series(Scalar(1), truncation), b = ideal::exp_series(tau, truncation);
    Series one = Series(Scalar(1)).with_truncation(truncation), zero = Series::from_terms(1, 0, {}).with_truncation(truncation);
    // commuting upper triangular matrices with diagonals e^s and e^(tau s)
    SeriesMat m{a, one, zero, a.inverse()};
    SeriesMat l{b, (b - b.inverse()) / (a - a.inverse()), zero, b.inverse()};
    sl2::Presentation p({"m", "l"});
    p.add_relator(p.parse_word("m l m^-1 l^-1"));
    return ideal::CharacterCurve(p, {m, l});
}

Json planted_tau_curve(const Scalar &tau, int truncation)
{
    Json c = sl2::to_json(planted_tau_family(tau, truncation));
    c["truncation"] = truncation;
    return {{"description", "cusp family with planted shape tau: tr m = 2 cosh s, tr l = 2 cosh(tau s)"},
            {"tau", algebra::to_json(tau)},
            {"curve", c},
            {"words", {{"m", "m"}, {"l", "l"}, {"lm", "l m"}}}};
}

ideal::CharacterCurve hypersurface_family(int truncation)
{
    Series s = Series::parameter().with_truncation(truncation);
    Series x = s * s + s - Series(2), y = Series(2) - s, z = Series(2).with_truncation(truncation);
    auto m = fricke::realize_quadruple<Series>(x, y, z, s);
    return ideal::CharacterCurve(sl2::four_punctured_sphere(), {m[0], m[1], m[2], m[3]});
}

ideal::CharacterCurve diagonal_reducible_family(int truncation)
{
    Series l = Series(I).with_truncation(truncation) * (Series(1) + Series::parameter());
    Series li = l.inverse();
    Series zero = Series::from_terms(1, 0, {}).with_truncation(truncation);
    SeriesMat d{l, zero, zero, li}, e{li, zero, zero, l};
    return ideal::CharacterCurve(sl2::four_punctured_sphere(), {d, d, e, e});
}

namespace
{

// M(c) = [[i, c], [0, -i]]
Json affine(long c)
{
    return sl2::to_json(ScalarMat{I, Scalar(c), Scalar(0), -I});
}

Json arc(const std::string &id, const std::string &component)
{
    return {{"id", id}, {"component", component}};
}

Json crossing(const std::string &over, const std::string &in, const std::string &out, int sign)
{
    return {{"over", over}, {"under_in", in}, {"under_out", out}, {"sign", sign}};
}

} // namespace

Json trivial_tangle()
{
    return {{"description", "two strands passing straight through one Conway sphere, no crossings"},
            {"arcs", {arc("A", "A"), arc("B", "B")}},
            {"crossings", Json::array()},
            {"vertices", {{{"id", "C"}, {"ends", {"A.head", "B.head", "B.tail", "A.tail"}}, {"basepoint_end", 0}}}},
            {"projective_representation", {{"A", affine(0)}, {"B", affine(1)}}}};
}

Json vertical_arcs_circle_tangle()
{
    return {{"description",
             "two straight vertical arcs P, Q meeting one Conway sphere, plus an unknotted circle K linking both"},
            {"arcs", {arc("P1", "P"), arc("P2", "P"), arc("Q1", "Q"), arc("Q2", "Q"), arc("K1", "K"), arc("K2", "K")}},
            {"crossings",
             {crossing("K1", "P1", "P2", 1), crossing("K1", "Q1", "Q2", 1), crossing("Q1", "K1", "K2", 1),
              crossing("P1", "K2", "K1", 1)}},
            {"vertices",
             {{{"id", "C"}, {"ends", {"P1.tail", "Q1.tail", "Q2.head", "P2.head"}}, {"basepoint_end", 0}}}},
            {"projective_representation",
             {{"P1", affine(0)}, {"P2", affine(2)}, {"Q1", affine(0)}, {"Q2", affine(2)}, {"K1", affine(1)},
              {"K2", affine(-1)}}}};
}

std::map<std::string, Json> generated_fixtures()
{
    std::map<std::string, Json> out;
    out["trivial_tangle.json"] = trivial_tangle();
    out["vertical_arcs_circle_tangle.json"] = vertical_arcs_circle_tangle();
    out["double_system.json"] = double_system();
    out["chi0_interface_system.json"] = chi0_interface_system();
    out["three_piece_path.json"] = three_piece_path();
    out["pole_curve.json"] = pole_curve();
    out["planted_tau_curve.json"] = planted_tau_curve(Scalar::gaussian(1, 1) + Scalar(2) * I);
    Json fam = sl2::to_json(hypersurface_family());
    fam["truncation"] = algebra::kDefaultTruncation;
    out["hypersurface_family_curve.json"] = {
        {"description", "the family (s^2 + s - 2, 2 - s, 2, s) leaving (-2, 2, 2, 0) inside the hypersurface"},
        {"curve", fam}};
    Json diag = sl2::to_json(diagonal_reducible_family());
    diag["truncation"] = algebra::kDefaultTruncation;
    out["diagonal_reducible_family.json"] = {
        {"description", "diagonal family with eigenvalues l, l, 1/l, 1/l, l = i (1 + s)"}, {"curve", diag}};
    return out;
}

} // namespace conway::fixtures
