#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "conway/glue/glue.hpp"
#include "conway/sl2/json_codec.hpp"

namespace conway::ideal
{

using algebra::Json;
using algebra::Scalar;
using algebra::Series;
using sl2::GroupWord;
using sl2::SeriesMat;
using sl2::SeriesRep;

// A family of representations with series entries in the local parameter s
// (the tautological representation near a point of a curve of characters).
// Peripheral marks of the presentation carry the piece and interface words.
using CharacterCurve = SeriesRep;

// {"presentation": ..., "images": {...}, "truncation": n}
CharacterCurve curve_from_json(const Json &j, int truncation = algebra::kDefaultTruncation);
// The constant family at a representation.
CharacterCurve constant_curve(const sl2::ScalarRep &rep, int truncation = algebra::kDefaultTruncation);
// Every relator evaluates to I up to the known order.
bool relators_hold(const CharacterCurve &curve);
// Entries composed with g (valuation(g) = 1), e.g. s -> s (1 + s).
CharacterCurve reparametrize(const CharacterCurve &curve, const Series &g);

// exp(c s) to the given truncation, exact coefficients for exact c.
Series exp_series(const Scalar &c, int truncation = algebra::kDefaultTruncation);

// Valuation in powers of s (a fraction for ramified series). Throws
// InconclusiveTruncation when every known term vanishes but the series is
// not certified zero.
mpq_class valuation_of(const Series &x);
mpq_class trace_valuation(const CharacterCurve &curve, const GroupWord &w);

struct IdealPointReport
{
    bool ideal_point = false;
    std::optional<GroupWord> witness;
    std::optional<mpq_class> valuation;
};

// True iff some listed word has a trace with negative valuation; the first
// such word is the witness.
IdealPointReport is_ideal_point(const CharacterCurve &curve, std::span<const GroupWord> words);

// A vertex of the Bass-Serre tree: the homothety class of the lattice
// spanned by the columns of `basis`. Canonical representative
// [[s^k, c], [0, 1]] with c reduced modulo s^k.
struct TreeVertex
{
    SeriesMat basis;
    // Exponent k in units of 1/ramification.
    int exponent = 0;
    Series offset;
    int ramification = 1;

    static TreeVertex standard();
    static TreeVertex from_basis(const SeriesMat &basis);
    // Canonical lattice spanned by arbitrary column vectors (x_j, y_j).
    static TreeVertex span_of(const std::vector<std::array<Series, 2>> &vectors);

    friend bool operator==(const TreeVertex &a, const TreeVertex &b);
};

Json to_json(const TreeVertex &v);

// Tree distance in edges of the tree of the (possibly ramified) field.
int tree_distance(const TreeVertex &v1, const TreeVertex &v2);

// max(0, -2 v(tr m)) in units of the ramified valuation.
int translation_length(const SeriesMat &m);

struct StabilizerReport
{
    bool stabilizes = false;
    std::optional<TreeVertex> vertex;
    // A word with a trace pole when the trace criterion fails.
    std::string note;
};

// Trace criterion on the matrices and their pairwise products, then the
// orbit lattice of the standard lattice. Throws InconclusiveTruncation when
// traces are regular but the lattice construction does not close up.
StabilizerReport vertex_stabilizer_check(std::span<const SeriesMat> matrices);

// Constant terms of the traces of the words. Throws PoleAtLimit naming the
// first word with a pole.
sl2::CharacterTable<Scalar> limit_character(const CharacterCurve &curve, std::span<const GroupWord> words);

struct InterfaceCertificate
{
    std::string name;
    std::optional<glue::Restriction> limit[2];
    std::optional<glue::MatchReport> match;
    std::optional<int> distance;
};

struct DualGraphCertificate
{
    std::vector<std::string> pieces;
    std::vector<StabilizerReport> stabilizers;
    std::vector<InterfaceCertificate> interfaces;
    IdealPointReport ideal;
    // The ideal-point witness written in the amalgam generators.
    std::string witness;
    bool verdict = false;
    std::string reason;
};

// Per piece a vertex fixed by the piece's image; per interface the limits
// of the meridians seen from each incident piece's vertex, their match
// report and the tree distance between the two vertices. Throws
// NotOnAmalgam when the curve's generators are not the system's amalgam
// generators.
DualGraphCertificate dual_graph_certificate(const glue::SplitSystem &system, const CharacterCurve &curve);
Json to_json(const DualGraphCertificate &c);

enum class TangentMode
{
    Standard, // trace_l against trace_m: tau^2
    Shifted,  // trace(l m) against trace_m: (tau + 1)^2
};

// Limit of d(trace_l)/d(trace_m) at s = 0 from the lowest nonconstant terms.
// Throws DegenerateFamily when trace_m is constant, VerticalTangent when the
// ratio has a pole, InvalidArgument when a constant term is not +-2.
Scalar cusp_tangent_direction(const Series &trace_m, const Series &trace_l, TangentMode mode = TangentMode::Standard);

bool transversality_check(const Scalar &dir1, const Scalar &dir2);

struct IrreducibilityReport
{
    bool irreducible = false;
    std::optional<mpq_class> order;
    std::optional<std::pair<GroupWord, GroupWord>> witness;
    std::optional<Scalar> coefficient;
    // x^2, y^2, z^2 are identically 4 up to the known order.
    std::array<bool, 3> square_is_four{};
    // Lowest known order among the tested commutator traces.
    mpq_class checked_to{0};
    std::optional<fricke::FrickePoint> limit;
};

// The six words m1, m2, m3, m1 m2, m1 m3, m2 m3 of the four-punctured
// sphere group used for the commutator tests.
std::vector<GroupWord> family_test_words();

// Commutator traces tr[g, h] - 2 over pairs of the six words on a family of
// quadruples (m1, m2, m3, m4) whose limit is a distinguished reducible
// character.
IrreducibilityReport irreducibility_report(const CharacterCurve &quadruple);
// Witness order; throws ReducibleToOrder (with the diagnostics in the
// message) when every commutator trace is 2 to the known order.
mpq_class irreducible_along_family(const CharacterCurve &quadruple);
Json to_json(const IrreducibilityReport &r);

Json valuation_json(const mpq_class &v);

} // namespace conway::ideal
