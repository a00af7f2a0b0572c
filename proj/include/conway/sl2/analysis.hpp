#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "conway/algebra/scalar.hpp"
#include "conway/sl2/representation.hpp"

namespace conway::sl2
{

using algebra::Scalar;
using ScalarMat = Mat2<Scalar>;
using ScalarRep = Representation<Scalar>;

struct ReducibilityReport
{
    bool reducible = false;
    // Projective vector spanning a common invariant line (reducible case).
    std::optional<std::array<Scalar, 2>> line;
    // Words g, h with tr[g,h] != 2 (irreducible case), when one exists among
    // generators and pairwise products.
    std::optional<std::pair<GroupWord, GroupWord>> witness;
    std::optional<Scalar> witness_trace;
    // Set when eigenlines needed a square root outside Q(i) and the
    // decision was taken in floating point.
    bool tolerance_based = false;
};

// Decides reducibility of the subgroup generated by `images` by testing the
// eigenlines of the first non-central image against all others.
ReducibilityReport is_reducible(std::span<const ScalarMat> images);
ReducibilityReport is_reducible(const ScalarRep &rep);

// Determinant-one matrix whose first column spans `line`.
ScalarMat basis_from_line(const std::array<Scalar, 2> &line);

// Basis of {X : X rep2(g) = rep1(g) X for every generator g}.
std::vector<ScalarMat> intertwiners(std::span<const ScalarMat> rep1, std::span<const ScalarMat> rep2);

// Some invertible element of the intertwiner space, if any.
std::optional<ScalarMat> invertible_intertwiner(std::span<const ScalarMat> rep1, std::span<const ScalarMat> rep2);

// Scales an invertible matrix to determinant one (falling back to floating
// point when the root is not in Q(i)) and applies the sign normalization:
// the first nonzero entry in row-major order has positive real part, or
// zero real part and positive imaginary part.
ScalarMat normalize_to_sl2(const ScalarMat &x);
ScalarMat sign_normalized(const ScalarMat &g);

// g with g rep2(x) g^-1 = rep1(x) for all generators. Throws
// CharacterMismatch when traces of generators or pairwise products differ
// and Reducible when rep1 is reducible.
ScalarMat conjugator(std::span<const ScalarMat> rep1, std::span<const ScalarMat> rep2);
ScalarMat conjugator(const ScalarRep &rep1, const ScalarRep &rep2);

// Same traces on generators and ordered pairwise products.
bool same_character_on_pairs(std::span<const ScalarMat> rep1, std::span<const ScalarMat> rep2);

// +1 / -1 per relator according to whether it maps to I or -I. Throws
// NotCentral otherwise.
std::vector<int> lift_check(const ScalarRep &rep);

ScalarRep to_float(const ScalarRep &rep, double tolerance = algebra::kDefaultTolerance);

} // namespace conway::sl2
