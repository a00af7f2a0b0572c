#pragma once

#include <array>
#include <string>
#include <vector>

#include "conway/algebra/json_codec.hpp"
#include "conway/sl2/analysis.hpp"

namespace conway::tangle
{

using algebra::Json;
using sl2::ScalarRep;

enum class End
{
    Head, // the strand arrives here (the arc is oriented tail -> head)
    Tail,
};

struct ArcEnd
{
    int arc = 0;
    End end = End::Head;

    bool operator==(const ArcEnd &) const = default;
};

struct Arc
{
    std::string id;
    std::string component;
    // A closed loop without ends (an unknotted circle that is never an
    // under-strand).
    bool closed = false;
};

// The under-strand arrives along under_in and leaves along under_out; sign is
// the handedness +1 or -1.
struct Crossing
{
    int over = 0;
    int under_in = 0;
    int under_out = 0;
    int sign = 1;
};

// A Conway sphere shrunk to a 4-valent vertex. Meridians are read in the
// stored cyclic order starting from ends[basepoint_end].
struct Vertex
{
    std::string id;
    std::array<ArcEnd, 4> ends;
    int basepoint_end = 0;
};

class TangleDiagram
{
  public:
    TangleDiagram() = default;
    // Validates; throws MalformedDiagram naming the violated invariant.
    TangleDiagram(std::vector<Arc> arcs, std::vector<Crossing> crossings, std::vector<Vertex> vertices);

    const std::vector<Arc> &arcs() const noexcept { return arcs_; }
    const std::vector<Crossing> &crossings() const noexcept { return crossings_; }
    const std::vector<Vertex> &vertices() const noexcept { return vertices_; }
    // Component labels in order of first appearance.
    const std::vector<std::string> &components() const noexcept { return components_; }
    int component_of(int arc) const { return arc_component_.at(static_cast<std::size_t>(arc)); }
    int arc_index(const std::string &id) const;
    int vertex_index(const std::string &id) const;

    // (arc, delta) per meridian of vertex v in meridian order; delta is +1
    // for a head (strand enters the sphere) and -1 for a tail.
    std::array<std::pair<int, int>, 4> vertex_meridians(int v) const;

  private:
    std::vector<Arc> arcs_;
    std::vector<Crossing> crossings_;
    std::vector<Vertex> vertices_;
    std::vector<std::string> components_;
    std::vector<int> arc_component_;

    void validate() const;
};

// {arcs: [{id, component, closed?}], crossings: [{over, under_in, under_out,
// sign}], vertices: [{id?, ends: ["A.head", ...], basepoint_end}]}
TangleDiagram diagram_from_json(const Json &j);
Json to_json(const TangleDiagram &d);

// One generator per arc (its meridian for the stored orientation), the
// crossing relators under_out^-1 over^-e under_in over^e, and per vertex the
// relator g1^d1 g2^d2 g3^d3 g4^d4 in meridian order. Peripheral mark
// "vertex:<id>" lists the four meridian words.
sl2::Presentation wirtinger_presentation(const TangleDiagram &d);

// +1 or -1 per component; +1 keeps the stored orientation.
using Orientation = std::vector<int>;
Orientation default_orientation(const TangleDiagram &d);
// All 2^components choices, in binary counting order.
std::vector<Orientation> all_orientations(const TangleDiagram &d);

// Sign per arc: constant along each oriented component.
struct MeridianSign
{
    std::vector<int> arc_signs;
};

MeridianSign assign_signs(const TangleDiagram &d, const Orientation &orientation);

// Signs of the four meridians of vertex v: arc sign times delta.
std::array<int, 4> vertex_signs(const TangleDiagram &d, const MeridianSign &s, int v);

bool sign_balanced(const std::array<int, 4> &signs);
// Per vertex: two +1 and two -1.
std::vector<bool> check_sign_balance(const TangleDiagram &d, const MeridianSign &s);

// (x, y, z) pattern of the distinguished character at a vertex: x = -2 iff
// meridians 1 and 2 carry the same sign, y for 1 and 3, z for 2 and 3.
// Throws Unbalanced.
std::array<int, 3> vertex_type(const std::array<int, 4> &signs);
std::array<int, 3> classify_vertex_type(const TangleDiagram &d, int v, const Orientation &orientation);

struct LiftResult
{
    ScalarRep representation;
    // Sign applied to each generator image.
    std::vector<int> flips;
    // Vertices whose meridian signs were imposed from s (all of them when
    // the projective representation has a common frame, none otherwise).
    std::vector<int> constrained_vertices;
};

// Flips signs of generator images (a linear problem over GF(2)) so that every
// relator maps to +I. When all images have the form +-[[i, *], [0, -i]] in a
// common frame, the sign of each arc there is forced to follow s. Throws
// NotCentral if some relator is not +-I, LiftObstructed if no sign choice
// works.
LiftResult lift_representation(const TangleDiagram &d, const ScalarRep &projective, const MeridianSign &s);

// Representation of the Wirtinger presentation from {"arc id": [a, b, c, d]}.
ScalarRep arc_representation_from_json(const TangleDiagram &d, const Json &images,
                                       double tolerance = algebra::kDefaultTolerance);

// Invariant factors of the abelianization (0 for a free Z summand).
std::vector<long> abelianization(const sl2::Presentation &p);

} // namespace conway::tangle
