#pragma once

#include <array>
#include <optional>
#include <string>

#include "conway/algebra/json_codec.hpp"
#include "conway/algebra/multipoly.hpp"
#include "conway/error.hpp"
#include "conway/sl2/analysis.hpp"
#include "conway/util/sampler.hpp"

namespace conway::fricke
{

using algebra::Json;
using algebra::MultiPoly;
using algebra::Scalar;
using sl2::ScalarMat;
using sl2::ScalarRep;

// Trace coordinates of a representation of the four-punctured sphere group
// with all meridian traces equal: x = tr m1m2, y = tr m1m3, z = tr m2m3 and
// t = tr mi.
struct FrickePoint
{
    Scalar x, y, z, t;

    std::array<Scalar, 4> coords() const { return {x, y, z, t}; }
    static FrickePoint from(const std::array<Scalar, 4> &c) { return {c[0], c[1], c[2], c[3]}; }
    // Swaps entries i and j of (x, y, z); t is fixed.
    FrickePoint permuted(int i, int j) const;
    FrickePoint to_float(double tolerance = algebra::kDefaultTolerance) const;
};

// Point (w, u, v, t) of the double cover hypersurface H = 0.
struct CoverPoint
{
    Scalar w, u, v, t;

    std::array<Scalar, 4> coords() const { return {w, u, v, t}; }
};

bool operator==(const FrickePoint &a, const FrickePoint &b);
bool operator==(const CoverPoint &a, const CoverPoint &b);

// F = (t^2 - (x+y+z-2))^2 - (2-x)(2-y)(2-z) in variables x, y, z, t.
const MultiPoly &y_defining_poly();
// H = u^2 + v^2 + uvw - w^2 - t^2 + 4 in variables w, u, v, t.
const MultiPoly &cover_defining_poly();

Scalar evaluate_F(const FrickePoint &p);
Scalar evaluate_H(const CoverPoint &q);
std::array<Scalar, 4> gradient_F(const FrickePoint &p);

bool on_Y(const FrickePoint &p);
bool on_H(const CoverPoint &q);

// All partials of F vanish. Throws NotOnY off the hypersurface.
bool singular_at(const FrickePoint &p);

// Which part of the singular set contains p: 0 for the isolated point
// (-2,-2,-2,0), k = 1, 2, 3 for the curve on which coordinate k is free,
// nullopt for smooth points. Derived by the case split on
// s = t^2 - (x+y+z-2): s != 0 forces t = 0 and x = y = z = -2; s = 0 forces
// two of x, y, z to equal 2. Throws NotOnY.
std::optional<int> singular_component(const FrickePoint &p);

// Curve k (1-based) is s -> (s^2-2, 2, 2, s) with the free slot moved to
// coordinate k.
struct SingularCurve
{
    int index = 1;
    // Coordinates as polynomials in the single variable "s".
    std::array<MultiPoly, 4> coordinates;

    FrickePoint at(const Scalar &s) const;
};

const std::array<SingularCurve, 3> &singular_curves();

// (w, u, v, t) -> (t^2 - (u^2 + v^2 + uvw) - 2, 2 + u^2, 2 + v^2, t).
FrickePoint cover_map(const CoverPoint &q);
// The cover map componentwise as polynomials in w, u, v, t.
const std::array<MultiPoly, 4> &cover_map_polys();
// (w, u, v, t) -> (-w, u, -v, t).
CoverPoint deck_involution(const CoverPoint &q);

// Packaged proof that the germ of the hypersurface at a distinguished point
// is irreducible: two smooth preimages exchanged by the deck involution.
struct GermCertificate
{
    FrickePoint base;
    // Coordinate swap (i, j) of (x, y, z) moving base to (-2, 2, 2, 0);
    // (0, 0) means none was needed.
    std::array<int, 2> permutation{0, 0};
    FrickePoint normalized_base;
    std::array<CoverPoint, 2> preimages;
    // dH/dw = uv - 2w at each preimage.
    std::array<Scalar, 2> smoothness_witnesses;
    bool preimages_distinct = false;
    bool preimages_on_cover = false;
    bool preimages_map_to_base = false;
    bool involution_swaps = false;

    bool valid() const;
};

// Throws WrongBasePoint unless p is (-2,2,2,0), (2,-2,2,0) or (2,2,-2,0).
GermCertificate germ_certificate(const FrickePoint &p);

// Matrices m1..m4 with m1m2m3m4 = I realizing p. Exact inputs whose
// eigenvalues leave Q(i) are realized in floating point. Throws NotOnY,
// ReducibleChar, Degenerate.
ScalarRep realize_character(const FrickePoint &p, double tolerance = algebra::kDefaultTolerance);

// Generic construction over any coefficient ring with sqrt (Scalar or
// Series). Returns images of m1, m2, m3, m4.
template <class T>
std::array<sl2::Mat2<T>, 4> realize_quadruple(const T &x, const T &y, const T &z, const T &t);

// (tr m1m2, tr m1m3, tr m2m3, tr m1) of a quadruple.
FrickePoint character_point(const ScalarRep &rep);
// The four meridian traces agree.
bool equal_meridian_traces(const ScalarRep &rep);

// Uniformly random irreducible quadruple with equal traces and product I,
// exact over Q(i).
ScalarRep sample_exact_quadruple(util::Sampler &rng);
// Same construction with rational entries.
ScalarRep sample_rational_quadruple(util::Sampler &rng);
// Same construction in floating point.
ScalarRep sample_float_quadruple(util::Sampler &rng, double tolerance = algebra::kDefaultTolerance);
// Random (x, y, z) and t solved from the quadratic in t^2; floating point.
FrickePoint sample_float_point(util::Sampler &rng, double tolerance = algebra::kDefaultTolerance);

Json to_json(const FrickePoint &p);
Json to_json(const CoverPoint &q);
Json to_json(const GermCertificate &c);
FrickePoint fricke_point_from_json(const Json &j, double tolerance = algebra::kDefaultTolerance);
CoverPoint cover_point_from_json(const Json &j, double tolerance = algebra::kDefaultTolerance);

// ---------------------------------------------------------------------------

template <class T>
std::array<sl2::Mat2<T>, 4> realize_quadruple(const T &x, const T &y, const T &z, const T &t)
{
    using M = sl2::Mat2<T>;
    const T two(2);
    // Rotate (m1, m2, m3) cyclically until the first pair is irreducible;
    // cyclic rotation preserves tr(m1 m2 m3).
    const std::array<std::array<T, 3>, 3> pairs{{{x, y, z}, {z, x, y}, {y, z, x}}};
    int rotation = -1;
    for (int k = 0; k < 3; ++k)
    {
        const T &xp = pairs[static_cast<std::size_t>(k)][0];
        if (!((xp - two) * (xp + two - t * t)).is_zero())
        {
            rotation = k;
            break;
        }
    }
    if (rotation < 0)
    {
        if ((t * t - T(4)).is_zero())
            fail(ErrorCode::Degenerate, "t = +-2 with every pairwise trace 2: the upper-triangular normal form breaks");
        fail(ErrorCode::ReducibleChar, "every pair of meridians is reducible; the character has no irreducible realization");
    }
    const auto &pr = pairs[static_cast<std::size_t>(rotation)];
    const T &xr = pr[0];
    const T &yr = pr[1];
    const T &zr = pr[2];

    T lambda = (t + (t * t - T(4)).sqrt()) / two;
    T mu = lambda.inverse();
    T r = xr - lambda * lambda - mu * mu;
    T delta = lambda - mu;
    T Y = yr - mu * t;
    T Z = zr - mu * t;
    T qa = xr - two;
    T qb = -(r * t + delta * (Y + Z));
    T qc = Z * Y + r;
    T root = (qb * qb - T(4) * qa * qc).sqrt();

    M A{lambda, T(1), T(0), mu};
    M B{lambda, T(0), r, mu};
    std::optional<M> chosen;
    for (int sign : {1, -1})
    {
        T p = (-qb + (sign > 0 ? root : -root)) / (two * qa);
        T m = t - p;
        T k = Y - delta * p;
        T q = (Z - delta * p) / r;
        M C{p, q, k, m};
        if (((A * B * C).trace() - t).is_zero())
        {
            chosen = C;
            break;
        }
    }
    if (!chosen)
        fail(ErrorCode::NotOnY, "neither root of the normal form has tr(m1 m2 m3) = t");
    const M &C = *chosen;
    M D = (A * B * C).inverse_sl2();
    switch (rotation)
    {
    case 1: // (A, B, C) = (m2, m3, m1); m4 = (m1 m2 m3)^-1 = (C A B)^-1
        return {C, A, B, (C * A * B).inverse_sl2()};
    case 2: // (A, B, C) = (m3, m1, m2)
        return {B, C, A, (B * C * A).inverse_sl2()};
    default:
        return {A, B, C, D};
    }
}

} // namespace conway::fricke
