#include "conway/ideal/ideal.hpp"

#include <numeric>

#include "conway/error.hpp"

namespace conway::ideal
{

namespace
{

using Vector = std::array<Series, 2>;

int common_ramification(std::initializer_list<const Series *> xs)
{
    int e = 1;
    for (const Series *x : xs)
        e = std::lcm(e, x->ramification());
    return e;
}

Series at_ramification(const Series &x, int e)
{
    return x.ramification() == e ? x : x.with_ramification(e);
}

SeriesMat at_ramification(const SeriesMat &m, int e)
{
    return {at_ramification(m.a, e), at_ramification(m.b, e), at_ramification(m.c, e), at_ramification(m.d, e)};
}

int matrix_ramification(const SeriesMat &m)
{
    return common_ramification({&m.a, &m.b, &m.c, &m.d});
}

// Valuation in ramified units; zero series count as +infinity.
int units(const Series &x)
{
    return x.is_zero() ? Series::kInfinite : x.valuation();
}

// The representative of x with every term at or beyond `exponent` dropped.
Series drop_from(const Series &x, int exponent)
{
    if (x.is_zero())
        return x.order() >= exponent ? Series::from_terms(x.ramification(), 0, {}) : x;
    std::vector<Scalar> kept;
    for (std::size_t k = 0; k < x.coefficients().size(); ++k)
        if (x.valuation() + static_cast<int>(k) < exponent)
            kept.push_back(x.coefficients()[k]);
    int order = x.order() >= exponent ? Series::kInfinite : x.order();
    return Series::from_terms(x.ramification(), x.valuation(), std::move(kept), order, x.truncation());
}

bool integral(const Series &x)
{
    if (x.is_zero())
    {
        if (!x.is_exact() && x.order() <= 0)
            fail(ErrorCode::InconclusiveTruncation, "a series is unknown below order 0");
        return true;
    }
    return x.valuation() >= 0;
}

bool integral(const SeriesMat &m)
{
    return integral(m.a) && integral(m.b) && integral(m.c) && integral(m.d);
}

Vector act(const SeriesMat &m, const Vector &v)
{
    return {m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1]};
}

std::string word_list_name(std::size_t i, std::size_t j)
{
    return "product of matrices " + std::to_string(i + 1) + " and " + std::to_string(j + 1);
}

} // namespace

CharacterCurve curve_from_json(const Json &j, int truncation)
{
    return sl2::series_rep_from_json(j, j.value("truncation", truncation));
}

CharacterCurve constant_curve(const sl2::ScalarRep &rep, int truncation)
{
    std::vector<SeriesMat> images;
    for (const auto &m : rep.images)
    {
        auto lift = [&](const Scalar &x) { return Series(x).with_truncation(truncation); };
        images.push_back({lift(m.a), lift(m.b), lift(m.c), lift(m.d)});
    }
    return CharacterCurve(rep.presentation, std::move(images));
}

bool relators_hold(const CharacterCurve &curve)
{
    for (const auto &r : curve.presentation.relators())
        if (!sl2::word_eval(curve, r).is_identity())
            return false;
    return true;
}

CharacterCurve reparametrize(const CharacterCurve &curve, const Series &g)
{
    CharacterCurve out = curve;
    for (auto &m : out.images)
        m = {m.a.substitute(g), m.b.substitute(g), m.c.substitute(g), m.d.substitute(g)};
    return out;
}

Series exp_series(const Scalar &c, int truncation)
{
    std::vector<Scalar> coeffs;
    Scalar term(1);
    for (int k = 0; k < truncation; ++k)
    {
        coeffs.push_back(term);
        term = term * c / Scalar(k + 1);
    }
    return Series::from_terms(1, 0, std::move(coeffs), truncation, truncation);
}

mpq_class valuation_of(const Series &x)
{
    if (x.is_zero())
    {
        if (x.is_exact())
            fail(ErrorCode::InvalidArgument, "the zero series has infinite valuation");
        fail(ErrorCode::InconclusiveTruncation, "every known term vanishes; raise the truncation beyond order " +
                                                    mpq_class(x.order(), x.ramification()).get_str());
    }
    mpq_class v(x.valuation(), x.ramification());
    v.canonicalize();
    return v;
}

mpq_class trace_valuation(const CharacterCurve &curve, const GroupWord &w)
{
    return valuation_of(sl2::word_eval(curve, w).trace());
}

IdealPointReport is_ideal_point(const CharacterCurve &curve, std::span<const GroupWord> words)
{
    IdealPointReport r;
    for (const auto &w : words)
    {
        Series tr = sl2::word_eval(curve, w).trace();
        if (tr.is_zero())
        {
            if (!tr.is_exact() && tr.order() <= 0)
                fail(ErrorCode::InconclusiveTruncation,
                     "trace of " + curve.presentation.format(w) + " is unknown below order 0");
            continue;
        }
        mpq_class v = valuation_of(tr);
        if (v < 0)
        {
            r.ideal_point = true;
            r.witness = w;
            r.valuation = v;
            return r;
        }
    }
    return r;
}

TreeVertex TreeVertex::standard()
{
    TreeVertex v;
    v.basis = SeriesMat::identity();
    v.exponent = 0;
    v.offset = Series::from_terms(1, 0, {});
    return v;
}

TreeVertex TreeVertex::from_basis(const SeriesMat &basis)
{
    return span_of({Vector{basis.a, basis.c}, Vector{basis.b, basis.d}});
}

TreeVertex TreeVertex::span_of(const std::vector<Vector> &vectors)
{
    int e = 1;
    for (const auto &v : vectors)
        e = std::lcm(e, common_ramification({&v[0], &v[1]}));
    std::vector<Vector> vs;
    for (const auto &v : vectors)
        vs.push_back({at_ramification(v[0], e), at_ramification(v[1], e)});

    // pivot on the second coordinate of least valuation
    std::optional<std::size_t> pivot;
    for (std::size_t k = 0; k < vs.size(); ++k)
        if (!vs[k][1].is_zero() && (!pivot || vs[k][1].valuation() < vs[*pivot][1].valuation()))
            pivot = k;
    if (!pivot)
        fail(ErrorCode::InvalidArgument, "vectors do not span a lattice of rank 2");
    const Vector &p = vs[*pivot];
    std::optional<Series> first;
    for (std::size_t k = 0; k < vs.size(); ++k)
    {
        if (k == *pivot)
            continue;
        Series x = vs[k][1].is_zero() ? vs[k][0] : vs[k][0] - (vs[k][1] / p[1]) * p[0];
        if (!x.is_zero() && (!first || x.valuation() < first->valuation()))
            first = x;
    }
    if (!first)
        fail(ErrorCode::InvalidArgument, "vectors do not span a lattice of rank 2");
    int a = first->valuation();
    int b = p[1].valuation();
    // divide the pivot by the unit part of its second coordinate
    Series unit = p[1] * Series::monomial(Scalar(1), -b, e);
    Series c = p[0] / unit;

    TreeVertex v;
    v.ramification = e;
    v.exponent = a - b;
    v.offset = drop_from(c * Series::monomial(Scalar(1), -b, e), a - b);
    v.basis = {Series::monomial(Scalar(1), a - b, e), v.offset, Series::from_terms(e, 0, {}),
               Series::monomial(Scalar(1), 0, e)};
    return v;
}

bool operator==(const TreeVertex &a, const TreeVertex &b)
{
    if (a.ramification != b.ramification || a.exponent != b.exponent)
        return false;
    Series diff = a.offset - b.offset;
    if (diff.is_zero())
        return true;
    return diff.valuation() >= a.exponent;
}

Json to_json(const TreeVertex &v)
{
    return {{"basis", sl2::to_json(v.basis)},
            {"exponent", valuation_json(mpq_class(v.exponent, v.ramification))},
            {"offset", algebra::to_json(v.offset)}};
}

int tree_distance(const TreeVertex &v1, const TreeVertex &v2)
{
    int e = std::lcm(v1.ramification, v2.ramification);
    SeriesMat b1 = at_ramification(v1.basis, e), b2 = at_ramification(v2.basis, e);
    SeriesMat m = b1.inverse() * b2;
    int low = std::min({units(m.a), units(m.b), units(m.c), units(m.d)});
    int det = units(m.det());
    if (low == Series::kInfinite || det == Series::kInfinite)
        fail(ErrorCode::InconclusiveTruncation, "change of basis between vertices is not determined");
    return det - 2 * low;
}

int translation_length(const SeriesMat &m)
{
    Series tr = m.trace();
    if (tr.is_zero())
        return 0;
    return std::max(0, -2 * tr.valuation());
}

StabilizerReport vertex_stabilizer_check(std::span<const SeriesMat> matrices)
{
    StabilizerReport r;
    for (std::size_t i = 0; i < matrices.size(); ++i)
    {
        if (!integral(matrices[i].trace()))
        {
            r.note = "trace of matrix " + std::to_string(i + 1) + " has a pole";
            return r;
        }
        for (std::size_t j = i + 1; j < matrices.size(); ++j)
            if (!integral((matrices[i] * matrices[j]).trace()))
            {
                r.note = "trace of the " + word_list_name(i, j) + " has a pole";
                return r;
            }
    }
    // Orbit lattice: grow the standard lattice by the generators and their
    // inverses until it is invariant.
    constexpr int kMaxSteps = 64;
    TreeVertex lattice = TreeVertex::standard();
    bool closed = false;
    for (int step = 0; step < kMaxSteps && !closed; ++step)
    {
        std::vector<Vector> vs{Vector{lattice.basis.a, lattice.basis.c}, Vector{lattice.basis.b, lattice.basis.d}};
        std::size_t base = vs.size();
        for (const auto &m : matrices)
            for (const SeriesMat &g : {m, m.inverse_sl2()})
                for (std::size_t k = 0; k < base; ++k)
                    vs.push_back(act(g, vs[k]));
        TreeVertex next = TreeVertex::span_of(vs);
        closed = next == lattice;
        lattice = next;
    }
    if (!closed)
        fail(ErrorCode::InconclusiveTruncation,
             "traces are regular but the orbit lattice did not close up within " + std::to_string(kMaxSteps) + " steps");
    SeriesMat inv = lattice.basis.inverse();
    for (const auto &m : matrices)
        if (!integral(inv * at_ramification(m, std::lcm(lattice.ramification, matrix_ramification(m))) * lattice.basis))
            fail(ErrorCode::InconclusiveTruncation, "the orbit lattice is not invariant at the stored truncation");
    r.stabilizes = true;
    r.vertex = lattice;
    r.note = "all generators preserve the lattice";
    return r;
}

sl2::CharacterTable<Scalar> limit_character(const CharacterCurve &curve, std::span<const GroupWord> words)
{
    sl2::CharacterTable<Scalar> table;
    for (const auto &w : words)
    {
        Series tr = sl2::word_eval(curve, w).trace();
        if (!integral(tr))
            fail(ErrorCode::PoleAtLimit, "trace of " + curve.presentation.format(w) + " has a pole at s = 0");
        table[w] = tr.constant_term();
    }
    return table;
}

DualGraphCertificate dual_graph_certificate(const glue::SplitSystem &system, const CharacterCurve &curve)
{
    if (curve.presentation.generators() != system.amalgam().generators())
        fail(ErrorCode::NotOnAmalgam, "the curve's generators are not the amalgam generators of the system");
    DualGraphCertificate cert;
    const auto &pieces = system.pieces();
    bool all_stable = true;
    for (std::size_t p = 0; p < pieces.size(); ++p)
    {
        cert.pieces.push_back(pieces[p].name);
        auto gens = system.piece_generators(static_cast<int>(p));
        auto mats = sl2::evaluate_all(curve, std::span<const GroupWord>(gens));
        cert.stabilizers.push_back(vertex_stabilizer_check(std::span<const SeriesMat>(mats)));
        all_stable = all_stable && cert.stabilizers.back().stabilizes;
    }
    bool separated = false, mismatched = true;
    for (std::size_t i = 0; i < system.interfaces().size(); ++i)
    {
        const auto &iface = system.interfaces()[i];
        InterfaceCertificate ic;
        ic.name = iface.name;
        std::array<std::vector<sl2::ScalarMat>, 2> limits;
        std::array<const StabilizerReport *, 2> stab{};
        for (int side = 0; side < 2; ++side)
        {
            int p = system.piece_index(iface.pieces[static_cast<std::size_t>(side)]);
            stab[static_cast<std::size_t>(side)] = &cert.stabilizers[static_cast<std::size_t>(p)];
            if (!stab[static_cast<std::size_t>(side)]->stabilizes)
                continue;
            const SeriesMat &basis = stab[static_cast<std::size_t>(side)]->vertex->basis;
            SeriesMat inv = basis.inverse();
            for (const auto &w : system.interface_words(static_cast<int>(i), side))
            {
                SeriesMat m = inv * sl2::word_eval(curve, w) * basis;
                limits[static_cast<std::size_t>(side)].push_back(
                    {m.a.constant_term(), m.b.constant_term(), m.c.constant_term(), m.d.constant_term()});
            }
            ic.limit[side] = glue::restrict_character(std::span<const sl2::ScalarMat>(limits[static_cast<std::size_t>(side)]));
        }
        if (stab[0]->stabilizes && stab[1]->stabilizes)
        {
            ic.match = glue::match_report(std::span<const sl2::ScalarMat>(limits[0]),
                                          std::span<const sl2::ScalarMat>(limits[1]));
            ic.distance = tree_distance(*stab[0]->vertex, *stab[1]->vertex);
            separated = separated || *ic.distance >= 1;
            mismatched = mismatched && ic.match->equal_character && !ic.match->conjugate;
        }
        else
            mismatched = false;
        cert.interfaces.push_back(std::move(ic));
    }
    auto words = system.amalgam().generators_and_pairs();
    cert.ideal = is_ideal_point(curve, std::span<const GroupWord>(words));
    if (cert.ideal.witness)
        cert.witness = curve.presentation.format(*cert.ideal.witness);

    if (!all_stable)
        cert.reason = "some piece does not fix a vertex of the tree";
    else if (cert.interfaces.empty() || !separated)
        cert.reason = "adjacent pieces fix the same vertex";
    else if (!mismatched)
        cert.reason = "some interface restriction limits are conjugate or have different characters";
    else if (!cert.ideal.ideal_point)
        cert.reason = "no trace on the amalgam word list has a pole";
    else
    {
        cert.verdict = true;
        cert.reason = "ideal point detected, surface dual data valid";
    }
    return cert;
}

Json to_json(const DualGraphCertificate &c)
{
    Json pieces = Json::array();
    for (std::size_t p = 0; p < c.pieces.size(); ++p)
    {
        Json j = {{"name", c.pieces[p]}, {"stabilizes_vertex", c.stabilizers[p].stabilizes}, {"note", c.stabilizers[p].note}};
        if (c.stabilizers[p].vertex)
            j["vertex"] = to_json(*c.stabilizers[p].vertex);
        pieces.push_back(j);
    }
    Json interfaces = Json::array();
    for (const auto &i : c.interfaces)
    {
        Json j = {{"name", i.name}};
        Json limits = Json::array();
        for (const auto &l : i.limit)
            limits.push_back(l ? glue::to_json(*l) : Json());
        j["limits"] = limits;
        j["match"] = i.match ? glue::to_json(*i.match) : Json();
        j["tree_distance"] = i.distance ? Json(*i.distance) : Json();
        interfaces.push_back(j);
    }
    Json ideal = {{"ideal_point", c.ideal.ideal_point}};
    if (c.ideal.witness)
    {
        ideal["witness"] = c.witness;
        ideal["valuation"] = valuation_json(*c.ideal.valuation);
    }
    return {{"pieces", pieces}, {"interfaces", interfaces}, {"ideal", ideal}, {"verdict", c.verdict}, {"reason", c.reason}};
}

Scalar cusp_tangent_direction(const Series &trace_m, const Series &trace_l, TangentMode mode)
{
    (void)mode; // the formula is the same; the mode names which trace is passed as trace_l
    Scalar cm = trace_m.constant_term(), cl = trace_l.constant_term();
    for (const Scalar &c : {cm, cl})
        if (!(c == Scalar(2) || c == Scalar(-2)))
            fail(ErrorCode::InvalidArgument, "tangent directions need traces starting at +-2, got " + c.to_string());
    int e = common_ramification({&trace_m, &trace_l});
    Series dm = at_ramification(trace_m - Series(cm), e), dl = at_ramification(trace_l - Series(cl), e);
    if (dm.is_zero())
        fail(ErrorCode::DegenerateFamily, "trace_m is constant to the known order");
    if (dl.is_zero())
    {
        if (!dl.is_exact() && dl.order() <= dm.valuation())
            fail(ErrorCode::InconclusiveTruncation, "trace_l is unknown at the order of the first term of trace_m");
        return Scalar(0);
    }
    if (dl.valuation() < dm.valuation())
        fail(ErrorCode::VerticalTangent, "trace_l moves to lower order than trace_m: infinite slope");
    if (dl.valuation() > dm.valuation())
        return Scalar(0);
    return dl.leading_coefficient() / dm.leading_coefficient();
}

bool transversality_check(const Scalar &dir1, const Scalar &dir2)
{
    return !(dir1 == dir2);
}

std::vector<GroupWord> family_test_words()
{
    GroupWord m1 = GroupWord::generator(0), m2 = GroupWord::generator(1), m3 = GroupWord::generator(2);
    return {m1, m2, m3, m1 * m2, m1 * m3, m2 * m3};
}

IrreducibilityReport irreducibility_report(const CharacterCurve &quadruple)
{
    if (quadruple.images.size() != 4)
        fail(ErrorCode::ArityMismatch, "a family on an interface has four meridians");
    IrreducibilityReport r;
    auto words = family_test_words();
    auto tr = [&](const GroupWord &w) { return sl2::word_eval(quadruple, w).trace(); };
    std::array<Series, 3> xyz{tr(words[3]), tr(words[4]), tr(words[5])};
    Series t = tr(words[0]);
    fricke::FrickePoint lim{xyz[0].constant_term(), xyz[1].constant_term(), xyz[2].constant_term(), t.constant_term()};
    r.limit = lim;
    bool distinguished = lim.t.is_zero();
    if (distinguished)
    {
        int minus = 0;
        for (const Scalar &c : {lim.x, lim.y, lim.z})
        {
            if (c == Scalar(-2))
                ++minus;
            else if (!(c == Scalar(2)))
                distinguished = false;
        }
        distinguished = distinguished && (minus == 1 || minus == 3);
    }
    if (!distinguished)
        fail(ErrorCode::InvalidArgument, "the family does not start at a distinguished reducible character");
    for (std::size_t k = 0; k < 3; ++k)
        r.square_is_four[k] = (xyz[k] * xyz[k] - Series(4)).is_zero();

    std::optional<mpq_class> known;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
        {
            Series c = sl2::commutator_trace(quadruple, words[i], words[j]) - Series(2);
            if (!c.is_exact())
            {
                mpq_class o(c.order(), c.ramification());
                o.canonicalize();
                if (!known || o < *known)
                    known = o;
            }
            if (c.is_zero())
                continue;
            mpq_class v = valuation_of(c);
            if (!r.order || v < *r.order)
            {
                r.order = v;
                r.witness = {words[i], words[j]};
                r.coefficient = c.leading_coefficient();
            }
        }
    r.irreducible = r.order.has_value();
    r.checked_to = known.value_or(mpq_class(Series::kInfinite));
    return r;
}

mpq_class irreducible_along_family(const CharacterCurve &quadruple)
{
    IrreducibilityReport r = irreducibility_report(quadruple);
    if (r.irreducible)
        return *r.order;
    static const std::array<const char *, 3> names{"x^2", "y^2", "z^2"};
    std::string constant, moving;
    for (std::size_t k = 0; k < 3; ++k)
    {
        std::string &list = r.square_is_four[k] ? constant : moving;
        list += (list.empty() ? "" : ", ") + std::string(names[k]);
    }
    fail(ErrorCode::ReducibleToOrder, "every tested commutator trace is 2 up to order " + r.checked_to.get_str() +
                                          "; identically 4: [" + constant + "], non-constant: [" + moving + "]");
}

Json to_json(const IrreducibilityReport &r)
{
    Json j = {{"irreducible", r.irreducible},
              {"x2_is_4", r.square_is_four[0]},
              {"y2_is_4", r.square_is_four[1]},
              {"z2_is_4", r.square_is_four[2]}};
    if (r.checked_to < mpq_class(Series::kInfinite))
        j["checked_to_order"] = valuation_json(r.checked_to);
    else
        j["checked_to_order"] = "exact";
    if (r.order)
        j["order"] = valuation_json(*r.order);
    if (r.coefficient)
        j["coefficient"] = algebra::to_json(*r.coefficient);
    if (r.limit)
        j["limit"] = fricke::to_json(*r.limit);
    if (r.witness)
    {
        static const std::vector<std::string> names{"m1", "m2", "m3", "m4"};
        j["witness"] = {r.witness->first.to_string(names), r.witness->second.to_string(names)};
    }
    return j;
}

Json valuation_json(const mpq_class &value)
{
    mpq_class v = value;
    v.canonicalize();
    return v.get_den() == 1 ? Json(v.get_num().get_si()) : Json(v.get_str());
}

} // namespace conway::ideal
