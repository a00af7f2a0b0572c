#pragma once

#include <array>
#include <map>
#include <string>

#include "conway/glue/glue.hpp"
#include "conway/ideal/ideal.hpp"

// Deterministic example inputs shipped under fixtures/. Every builder is
// exact; the JSON files are their serialized output.
namespace conway::fixtures
{

using algebra::Json;
using algebra::Scalar;
using sl2::ScalarMat;

// m1 = [[1,1],[0,1]], m2 = [[1,0],[-1,1]], m3 = [[2,-1],[1,0]],
// m4 = (m1 m2 m3)^-1: irreducible, all traces 2, character (1, 3, 3, 2).
std::array<ScalarMat, 4> integral_quadruple();
// Upper triangular with diagonal (i, i, -i, -i), only e1 invariant:
// character (-2, 2, 2, 0), not conjugate to the split model.
std::array<ScalarMat, 4> nonsplit_chi0_quadruple();
// (J, J, -J, -J) with J = diag(i, -i).
std::array<ScalarMat, 4> split_chi0_quadruple();

// <m1, m2, m3, m4, a | m1 m2 m3 m4> with "meridians" marked.
sl2::Presentation piece_with_handle(const std::string &meridian_prefix, const std::string &handle);

// {"system", "representations"}: a piece glued to a copy of itself along
// the identity identification of its boundary sphere.
Json double_system();
// Two pieces whose restrictions are the non-split and split reducible
// quadruples with character (-2, 2, 2, 0).
Json chi0_interface_system();
// Pieces A - B - C with compatible irreducible interfaces.
Json three_piece_path();
// {"system", "curve"}: a two-piece family whose pieces fix adjacent-but-
// distinct tree vertices; tr(a b) = s^2 - s^-2.
Json pole_curve(int truncation = algebra::kDefaultTruncation);
// {"tau", "curve", "words"}: commuting m, l with traces 2 cosh s,
// 2 cosh(tau s), so d tr l / d tr m -> tau^2 and d tr(l m) / d tr m -> (tau+1)^2.
Json planted_tau_curve(const Scalar &tau, int truncation = algebra::kDefaultTruncation);
ideal::CharacterCurve planted_tau_family(const Scalar &tau, int truncation = algebra::kDefaultTruncation);
// The family (s^2 + s - 2, 2 - s, 2, s) of the hypersurface leaving
// (-2, 2, 2, 0), realized on the equal-trace slice.
ideal::CharacterCurve hypersurface_family(int truncation = algebra::kDefaultTruncation);
// diag eigenvalues l, l, 1/l, 1/l with l = i (1 + s).
ideal::CharacterCurve diagonal_reducible_family(int truncation = algebra::kDefaultTruncation);

// Two strands through one Conway sphere, no crossings, with the diagonal
// and affine projective images of the two arcs.
Json trivial_tangle();
// Vertical arcs P, Q through one sphere plus a circle K linking both, with
// the affine model M(c) = [[i, c], [0, -i]] as projective representation.
Json vertical_arcs_circle_tangle();

// File name -> content for everything under fixtures/ that is generated.
std::map<std::string, Json> generated_fixtures();

} // namespace conway::fixtures
