#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conway/algebra/json_codec.hpp"
#include "conway/fricke/fricke.hpp"
#include "conway/sl2/analysis.hpp"

namespace conway::glue
{

using algebra::Json;
using algebra::Scalar;
using sl2::GroupWord;
using sl2::Presentation;
using sl2::ScalarMat;
using sl2::ScalarRep;

struct Piece
{
    std::string name;
    Presentation presentation;
};

// A separating four-punctured sphere between two pieces. words[k] are the
// meridians mu1..mu4 of the sphere written in the generators of pieces[k].
struct Interface
{
    std::string name;
    std::array<std::string, 2> pieces;
    std::array<std::array<GroupWord, 4>, 2> words;
};

struct TreeEdge
{
    int parent = 0;
    int child = 0;
    int interface = 0;
    // Side of the interface belonging to the parent (0 or 1).
    int parent_side = 0;
};

class SplitSystem
{
  public:
    SplitSystem() = default;
    // Validates names, word ranges and that the dual graph is a tree; throws
    // NotATree or InvalidArgument.
    SplitSystem(std::vector<Piece> pieces, std::vector<Interface> interfaces);

    const std::vector<Piece> &pieces() const noexcept { return pieces_; }
    const std::vector<Interface> &interfaces() const noexcept { return interfaces_; }
    int piece_index(const std::string &name) const;
    int interface_index(const std::string &name) const;
    // Side of interface i on piece p (0 or 1); throws if not incident.
    int side_of(int interface, int piece) const;

    // Breadth-first traversal from the first piece.
    const std::vector<TreeEdge> &traversal() const noexcept { return traversal_; }
    // Number of interfaces incident to each piece.
    std::vector<int> degrees() const;

    // Generators "piece.gen" of all pieces, the relators of every piece and
    // the identifications mu_i(side 0) mu_i(side 1)^-1 per interface.
    const Presentation &amalgam() const noexcept { return amalgam_; }
    // Word in the amalgam for a word of piece p.
    GroupWord embed(int piece, const GroupWord &w) const;
    // The generators of piece p as amalgam words.
    std::vector<GroupWord> piece_generators(int piece) const;
    // mu1..mu4 of interface i as amalgam words of the given side.
    std::array<GroupWord, 4> interface_words(int interface, int side) const;

  private:
    std::vector<Piece> pieces_;
    std::vector<Interface> interfaces_;
    std::vector<int> offsets_;
    std::vector<TreeEdge> traversal_;
    Presentation amalgam_;
};

SplitSystem system_from_json(const Json &j);
Json to_json(const SplitSystem &s);

// Traces of the four meridians and their six pairwise products, in the
// order m1 m2 m3 m4, m1m2 m1m3 m1m4 m2m3 m2m4 m3m4.
struct Restriction
{
    std::array<ScalarMat, 4> meridians;
    std::array<Scalar, 4> meridian_traces;
    std::array<Scalar, 6> pair_traces;
    // Set when all four meridian traces agree ((x, y, z, t) packing).
    std::optional<fricke::FrickePoint> point;
    // m1 m2 m3 m4 = I in the piece representation.
    bool relator_holds = false;
};

Restriction restrict_character(const ScalarRep &rep, const std::array<GroupWord, 4> &words);
Restriction restrict_character(std::span<const ScalarMat> meridians);
Json to_json(const Restriction &r);

bool equal_character(const Restriction &a, const Restriction &b);

struct MatchReport
{
    bool equal_character = false;
    bool conjugate = false;
    // g with g m2 g^-1 = m1 on all four meridians, when conjugate.
    std::optional<ScalarMat> conjugator;
    std::string note;
};

// Compares two interface restrictions up to conjugation. Irreducible pairs
// use the trace-determined conjugator; reducible pairs are conjugate iff the
// intertwiner system has an invertible solution.
MatchReport match_report(std::span<const ScalarMat> meridians1, std::span<const ScalarMat> meridians2);
MatchReport match_report(const ScalarRep &rep1, const std::array<GroupWord, 4> &words1, const ScalarRep &rep2,
                         const std::array<GroupWord, 4> &words2);
Json to_json(const MatchReport &m);

struct GlueResult
{
    // Representation of system.amalgam().
    ScalarRep representation;
    // Per piece, g with (glued images of the piece) = g rep g^-1.
    std::vector<ScalarMat> conjugators;
};

// Amalgam over the tree, breadth-first from the first piece, which keeps
// its given matrices. Throws CharMismatch or ReducibleInterface naming the
// interface, InvalidArgument if an interface relator fails in a piece.
GlueResult glue_many(const SplitSystem &system, const std::vector<ScalarRep> &reps);
// The two-piece case; the system must have exactly two pieces.
GlueResult glue_two(const SplitSystem &system, const ScalarRep &rep1, const ScalarRep &rep2);
// Images of piece p read back from a representation of the amalgam.
ScalarRep restrict_to_piece(const SplitSystem &system, const ScalarRep &amalgam_rep, int piece);
Json to_json(const GlueResult &g);

// Two-colouring of the dual tree; the first piece is in plus.
struct Bipartition
{
    std::vector<std::string> plus;
    std::vector<std::string> minus;
};

Bipartition bipartition_pieces(const SplitSystem &system);
Json to_json(const Bipartition &b);

// Per-piece representations {"piece": {"images": {...}}} against a system.
std::vector<ScalarRep> piece_reps_from_json(const SplitSystem &system, const Json &j,
                                            double tolerance = algebra::kDefaultTolerance);

} // namespace conway::glue
