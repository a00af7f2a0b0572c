#include "conway/fricke/fricke.hpp"

#include "conway/sl2/json_codec.hpp"

namespace conway::fricke
{

namespace
{

const std::vector<std::string> kYVars{"x", "y", "z", "t"};
const std::vector<std::string> kHVars{"w", "u", "v", "t"};

MultiPoly yvar(std::size_t i)
{
    return MultiPoly::variable(kYVars, i);
}

MultiPoly hvar(std::size_t i)
{
    return MultiPoly::variable(kHVars, i);
}

MultiPoly hconst(long c)
{
    return MultiPoly::constant(kHVars, Scalar(c));
}

bool all_zero(const std::array<Scalar, 4> &v)
{
    for (const auto &c : v)
        if (!c.is_zero())
            return false;
    return true;
}

const FrickePoint kNormalizedBase{Scalar(-2), Scalar(2), Scalar(2), Scalar(0)};

} // namespace

FrickePoint FrickePoint::permuted(int i, int j) const
{
    std::array<Scalar, 4> c = coords();
    std::swap(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
    return from(c);
}

FrickePoint FrickePoint::to_float(double tolerance) const
{
    return {x.to_float(tolerance), y.to_float(tolerance), z.to_float(tolerance), t.to_float(tolerance)};
}

bool operator==(const FrickePoint &a, const FrickePoint &b)
{
    return a.x == b.x && a.y == b.y && a.z == b.z && a.t == b.t;
}

bool operator==(const CoverPoint &a, const CoverPoint &b)
{
    return a.w == b.w && a.u == b.u && a.v == b.v && a.t == b.t;
}

const MultiPoly &y_defining_poly()
{
    static const MultiPoly F = [] {
        MultiPoly x = yvar(0), y = yvar(1), z = yvar(2), t = yvar(3);
        MultiPoly two = MultiPoly::constant(kYVars, Scalar(2));
        MultiPoly s = t * t - (x + y + z - two);
        return s * s - (two - x) * (two - y) * (two - z);
    }();
    return F;
}

const MultiPoly &cover_defining_poly()
{
    static const MultiPoly H = [] {
        MultiPoly w = hvar(0), u = hvar(1), v = hvar(2), t = hvar(3);
        return u * u + v * v + u * v * w - w * w - t * t + hconst(4);
    }();
    return H;
}

Scalar evaluate_F(const FrickePoint &p)
{
    auto c = p.coords();
    return y_defining_poly().eval(c);
}

Scalar evaluate_H(const CoverPoint &q)
{
    auto c = q.coords();
    return cover_defining_poly().eval(c);
}

std::array<Scalar, 4> gradient_F(const FrickePoint &p)
{
    static const std::vector<MultiPoly> grad = y_defining_poly().gradient();
    auto c = p.coords();
    return {grad[0].eval(c), grad[1].eval(c), grad[2].eval(c), grad[3].eval(c)};
}

bool on_Y(const FrickePoint &p)
{
    return evaluate_F(p).is_zero();
}

bool on_H(const CoverPoint &q)
{
    return evaluate_H(q).is_zero();
}

bool singular_at(const FrickePoint &p)
{
    if (!on_Y(p))
        fail(ErrorCode::NotOnY, "point is not on the hypersurface: F = " + evaluate_F(p).to_string());
    return all_zero(gradient_F(p));
}

std::optional<int> singular_component(const FrickePoint &p)
{
    if (!singular_at(p))
        return std::nullopt;
    const Scalar two(2);
    Scalar s = p.t * p.t - (p.x + p.y + p.z - two);
    if (!s.is_zero())
    {
        // dF/dt = 4ts forces t = 0; then (2-y)(2-z) = (2-x)(2-z) = (2-x)(2-y) = 2s
        // is nonzero, so 2-x = 2-y = 2-z =: a with a^2 = 2s = 2(3a-4), and
        // F = 0 leaves a = 4.
        if (!(p.t.is_zero() && p.x == Scalar(-2) && p.y == Scalar(-2) && p.z == Scalar(-2)))
            fail(ErrorCode::InvalidArgument, "singular point with s != 0 off (-2,-2,-2,0): case analysis violated");
        return 0;
    }
    // s = 0: the x, y, z partials are the pairwise products of 2-x, 2-y, 2-z,
    // so at least two of x, y, z equal 2.
    std::array<bool, 3> is_two{p.x == two, p.y == two, p.z == two};
    int count = is_two[0] + is_two[1] + is_two[2];
    if (count < 2)
        fail(ErrorCode::InvalidArgument, "singular point with s = 0 and fewer than two coordinates equal to 2");
    for (int k = 0; k < 3; ++k)
        if (!is_two[static_cast<std::size_t>(k)])
            return k + 1;
    return 1; // x = y = z = 2, t = +-2: the common point of the three curves.
}

FrickePoint SingularCurve::at(const Scalar &s) const
{
    std::array<Scalar, 1> arg{s};
    return {coordinates[0].eval(arg), coordinates[1].eval(arg), coordinates[2].eval(arg), coordinates[3].eval(arg)};
}

const std::array<SingularCurve, 3> &singular_curves()
{
    static const std::array<SingularCurve, 3> curves = [] {
        const std::vector<std::string> vars{"s"};
        MultiPoly s = MultiPoly::variable(vars, 0);
        MultiPoly two = MultiPoly::constant(vars, Scalar(2));
        std::array<SingularCurve, 3> out;
        for (int k = 0; k < 3; ++k)
        {
            out[static_cast<std::size_t>(k)].index = k + 1;
            auto &c = out[static_cast<std::size_t>(k)].coordinates;
            c = {two, two, two, s};
            c[static_cast<std::size_t>(k)] = s * s - two;
        }
        return out;
    }();
    return curves;
}

const std::array<MultiPoly, 4> &cover_map_polys()
{
    static const std::array<MultiPoly, 4> phi = [] {
        MultiPoly w = hvar(0), u = hvar(1), v = hvar(2), t = hvar(3);
        return std::array<MultiPoly, 4>{t * t - (u * u + v * v + u * v * w) - hconst(2), hconst(2) + u * u,
                                        hconst(2) + v * v, t};
    }();
    return phi;
}

FrickePoint cover_map(const CoverPoint &q)
{
    const Scalar two(2);
    return {q.t * q.t - (q.u * q.u + q.v * q.v + q.u * q.v * q.w) - two, two + q.u * q.u, two + q.v * q.v, q.t};
}

CoverPoint deck_involution(const CoverPoint &q)
{
    return {-q.w, q.u, -q.v, q.t};
}

bool GermCertificate::valid() const
{
    return preimages_distinct && preimages_on_cover && preimages_map_to_base && involution_swaps &&
           !smoothness_witnesses[0].is_zero() && !smoothness_witnesses[1].is_zero();
}

GermCertificate germ_certificate(const FrickePoint &p)
{
    const Scalar two(2);
    GermCertificate cert;
    cert.base = p;
    if (!p.t.is_zero())
        fail(ErrorCode::WrongBasePoint, "germ certificates exist only at (-2,2,2,0) and its permutations");
    std::array<Scalar, 3> xyz{p.x, p.y, p.z};
    int minus = -1;
    bool pattern = true;
    for (int k = 0; k < 3; ++k)
    {
        const Scalar &c = xyz[static_cast<std::size_t>(k)];
        if (c == Scalar(-2))
        {
            pattern = pattern && minus < 0;
            minus = k;
        }
        else if (!(c == two))
            pattern = false;
    }
    if (!pattern || minus < 0)
        fail(ErrorCode::WrongBasePoint, "germ certificates exist only at (-2,2,2,0) and its permutations");
    cert.permutation = {0, minus};
    cert.normalized_base = p.permuted(0, minus);

    // Solve cover_map(w, u, v, t) = (-2, 2, 2, 0): u^2 = y - 2, v^2 = z - 2,
    // and w from H = 0, which is quadratic in w.
    const FrickePoint &b = cert.normalized_base;
    Scalar u = (b.y - two).sqrt();
    Scalar v = (b.z - two).sqrt();
    Scalar t = b.t;
    // -w^2 + uv w + (u^2 + v^2 - t^2 + 4) = 0
    Scalar disc = u * v * u * v + Scalar(4) * (u * u + v * v - t * t + Scalar(4));
    Scalar root = disc.sqrt();
    Scalar w1 = (u * v + root) / two;
    Scalar w2 = (u * v - root) / two;
    cert.preimages = {CoverPoint{w1, u, v, t}, CoverPoint{w2, u, v, t}};

    static const MultiPoly dHdw = cover_defining_poly().derivative(0);
    for (std::size_t i = 0; i < 2; ++i)
    {
        auto c = cert.preimages[i].coords();
        cert.smoothness_witnesses[i] = dHdw.eval(c);
    }
    cert.preimages_distinct = !(cert.preimages[0] == cert.preimages[1]);
    cert.preimages_on_cover = on_H(cert.preimages[0]) && on_H(cert.preimages[1]);
    cert.preimages_map_to_base = cover_map(cert.preimages[0]) == b && cover_map(cert.preimages[1]) == b;
    cert.involution_swaps =
        deck_involution(cert.preimages[0]) == cert.preimages[1] && deck_involution(cert.preimages[1]) == cert.preimages[0];
    return cert;
}

namespace
{

ScalarRep quadruple_rep(const std::array<ScalarMat, 4> &m)
{
    return ScalarRep(sl2::four_punctured_sphere(), {m[0], m[1], m[2], m[3]});
}

} // namespace

ScalarRep realize_character(const FrickePoint &p, double tolerance)
{
    if (!on_Y(p))
        fail(ErrorCode::NotOnY, "point is not on the hypersurface: F = " + evaluate_F(p).to_string());
    ScalarRep rep;
    try
    {
        rep = quadruple_rep(realize_quadruple<Scalar>(p.x, p.y, p.z, p.t));
    }
    catch (const Error &e)
    {
        if (e.code() != ErrorCode::NoSquareRoot)
            throw;
        FrickePoint f = p.to_float(tolerance);
        rep = quadruple_rep(realize_quadruple<Scalar>(f.x, f.y, f.z, f.t));
    }
    if (sl2::is_reducible(rep).reducible)
        fail(ErrorCode::ReducibleChar, "the realized quadruple is reducible");
    return rep;
}

FrickePoint character_point(const ScalarRep &rep)
{
    if (rep.images.size() < 3)
        fail(ErrorCode::ArityMismatch, "character_point needs at least three generators");
    const auto &m = rep.images;
    return {(m[0] * m[1]).trace(), (m[0] * m[2]).trace(), (m[1] * m[2]).trace(), m[0].trace()};
}

bool equal_meridian_traces(const ScalarRep &rep)
{
    for (const auto &m : rep.images)
        if (!(m.trace() == rep.images.front().trace()))
            return false;
    return true;
}

namespace
{

// Completes A = [[l, 1], [0, 1/l]] and a random B of the same trace to a
// quadruple: C runs over the conic {tr C = t, tr ABC = t, det C = 1}, which
// contains C0 = B^-1; every other point is C0 + sigma E for a direction E
// in {tr E = 0, tr(AB E) = 0}.
template <class Draw, class DrawNonzero>
ScalarRep sample_quadruple(Draw draw, DrawNonzero draw_nonzero)
{
    for (;;)
    {
        Scalar lambda = draw_nonzero();
        if ((lambda * lambda - Scalar(1)).is_zero())
            continue;
        Scalar t = lambda + lambda.inverse();
        ScalarMat A{lambda, Scalar(1), Scalar(0), lambda.inverse()};
        Scalar a = draw();
        Scalar b = draw_nonzero();
        ScalarMat B{a, b, (a * (t - a) - Scalar(1)) / b, t - a};
        ScalarMat C0 = B.inverse_sl2();
        ScalarMat M = A * B;
        if (M.b.is_zero())
            continue;
        Scalar e1 = draw();
        Scalar e2 = draw();
        Scalar e3 = -((M.a - M.d) * e1 + M.c * e2) / M.b;
        ScalarMat E{e1, e2, e3, -e1};
        Scalar detE = E.det();
        if (detE.is_zero())
            continue;
        Scalar sigma = -(C0.inverse_sl2() * E).trace() / detE;
        ScalarMat C = C0 + sigma * E;
        ScalarMat D = (A * B * C).inverse_sl2();
        ScalarRep rep(sl2::four_punctured_sphere(), {A, B, C, D});
        if (sl2::is_reducible(rep).reducible)
            continue;
        return rep;
    }
}

} // namespace

ScalarRep sample_exact_quadruple(util::Sampler &rng)
{
    return sample_quadruple([&] { return rng.gaussian(6); }, [&] { return rng.nonzero_gaussian(6); });
}

ScalarRep sample_rational_quadruple(util::Sampler &rng)
{
    return sample_quadruple([&] { return Scalar(rng.rational(6)); }, [&] { return rng.nonzero_rational(6); });
}

ScalarRep sample_float_quadruple(util::Sampler &rng, double tolerance)
{
    auto draw = [&] { return rng.complex_float(2.0, tolerance); };
    auto draw_nonzero = [&] {
        Scalar z = draw();
        while (z.magnitude() < 0.3)
            z = draw();
        return z;
    };
    return sample_quadruple(draw, draw_nonzero);
}

FrickePoint sample_float_point(util::Sampler &rng, double tolerance)
{
    const Scalar two = Scalar(2).to_float(tolerance);
    Scalar x = rng.complex_float(3.0, tolerance);
    Scalar y = rng.complex_float(3.0, tolerance);
    Scalar z = rng.complex_float(3.0, tolerance);
    Scalar rhs = (two - x) * (two - y) * (two - z);
    Scalar t2 = (x + y + z - two) + (rng.coin() ? rhs.sqrt() : -rhs.sqrt());
    return {x, y, z, t2.sqrt()};
}

Json to_json(const FrickePoint &p)
{
    return {{"x", algebra::to_json(p.x)}, {"y", algebra::to_json(p.y)}, {"z", algebra::to_json(p.z)},
            {"t", algebra::to_json(p.t)}};
}

Json to_json(const CoverPoint &q)
{
    return {{"w", algebra::to_json(q.w)}, {"u", algebra::to_json(q.u)}, {"v", algebra::to_json(q.v)},
            {"t", algebra::to_json(q.t)}};
}

Json to_json(const GermCertificate &c)
{
    return {{"base", to_json(c.base)},
            {"permutation", c.permutation},
            {"normalized_base", to_json(c.normalized_base)},
            {"preimages", {to_json(c.preimages[0]), to_json(c.preimages[1])}},
            {"smoothness_witnesses",
             {algebra::to_json(c.smoothness_witnesses[0]), algebra::to_json(c.smoothness_witnesses[1])}},
            {"witness_polynomial", "dH/dw = u*v - 2*w"},
            {"preimages_distinct", c.preimages_distinct},
            {"preimages_on_cover", c.preimages_on_cover},
            {"preimages_map_to_base", c.preimages_map_to_base},
            {"involution_swaps", c.involution_swaps},
            {"valid", c.valid()}};
}

namespace
{

Scalar field(const Json &j, const char *name, double tolerance)
{
    if (!j.is_object() || !j.contains(name))
        fail(ErrorCode::ParseError, std::string("missing coordinate \"") + name + "\"");
    return algebra::scalar_from_json(j.at(name), tolerance);
}

} // namespace

FrickePoint fricke_point_from_json(const Json &j, double tolerance)
{
    return {field(j, "x", tolerance), field(j, "y", tolerance), field(j, "z", tolerance), field(j, "t", tolerance)};
}

CoverPoint cover_point_from_json(const Json &j, double tolerance)
{
    return {field(j, "w", tolerance), field(j, "u", tolerance), field(j, "v", tolerance), field(j, "t", tolerance)};
}

} // namespace conway::fricke
