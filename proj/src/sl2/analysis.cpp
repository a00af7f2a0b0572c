#include "conway/sl2/analysis.hpp"

#include <algorithm>

#include "conway/error.hpp"

namespace conway::sl2
{

namespace
{

using Row = std::array<Scalar, 4>;

std::vector<std::array<Scalar, 2>> eigenlines(const ScalarMat &m)
{
    Scalar tr = m.trace();
    Scalar disc = tr * tr - Scalar(4);
    std::vector<Scalar> eigenvalues;
    if (disc.is_zero())
        eigenvalues.push_back(tr / Scalar(2));
    else
    {
        Scalar r = disc.sqrt();
        eigenvalues.push_back((tr + r) / Scalar(2));
        eigenvalues.push_back((tr - r) / Scalar(2));
    }
    std::vector<std::array<Scalar, 2>> lines;
    for (const Scalar &lambda : eigenvalues)
    {
        std::array<Scalar, 2> v{m.b, lambda - m.a};
        if (v[0].is_zero() && v[1].is_zero())
            v = {lambda - m.d, m.c};
        lines.push_back(v);
    }
    return lines;
}

bool preserves(const ScalarMat &m, const std::array<Scalar, 2> &v)
{
    Scalar w0 = m.a * v[0] + m.b * v[1];
    Scalar w1 = m.c * v[0] + m.d * v[1];
    return (w0 * v[1] - w1 * v[0]).is_zero();
}

ReducibilityReport decide(std::span<const ScalarMat> images)
{
    ReducibilityReport report;
    auto first = std::find_if(images.begin(), images.end(),
                              [](const ScalarMat &m) { return !m.is_scalar_multiple_of_identity(); });
    if (first == images.end())
    {
        report.reducible = true;
        report.line = std::array<Scalar, 2>{Scalar(1), Scalar(0)};
        return report;
    }
    for (const auto &v : eigenlines(*first))
    {
        bool invariant = std::all_of(images.begin(), images.end(), [&](const ScalarMat &m) { return preserves(m, v); });
        if (invariant)
        {
            report.reducible = true;
            report.line = v;
            return report;
        }
    }
    // Irreducible: look for a certificate among generators and pairwise products.
    std::vector<std::pair<GroupWord, ScalarMat>> words;
    int n = static_cast<int>(images.size());
    for (int i = 0; i < n; ++i)
        words.emplace_back(GroupWord::generator(i), images[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            words.emplace_back(GroupWord::generator(i) * GroupWord::generator(j),
                               images[static_cast<std::size_t>(i)] * images[static_cast<std::size_t>(j)]);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
        {
            Scalar t = commutator(words[i].second, words[j].second).trace();
            if (!(t - Scalar(2)).is_zero())
            {
                report.witness = std::pair{words[i].first, words[j].first};
                report.witness_trace = t;
                return report;
            }
        }
    return report;
}

std::vector<ScalarMat> float_copy(std::span<const ScalarMat> images, double tolerance)
{
    std::vector<ScalarMat> out;
    out.reserve(images.size());
    for (const auto &m : images)
        out.push_back({m.a.to_float(tolerance), m.b.to_float(tolerance), m.c.to_float(tolerance), m.d.to_float(tolerance)});
    return out;
}

std::vector<Row> nullspace(std::vector<Row> rows)
{
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (int col = 0; col < 4 && r < rows.size(); ++col)
    {
        std::size_t best = rows.size();
        double best_mag = -1.0;
        for (std::size_t i = r; i < rows.size(); ++i)
        {
            const Scalar &e = rows[i][static_cast<std::size_t>(col)];
            if (e.is_zero())
                continue;
            if (e.is_exact())
            {
                best = i;
                break;
            }
            double mag = e.magnitude();
            if (mag > best_mag)
            {
                best_mag = mag;
                best = i;
            }
        }
        if (best == rows.size())
            continue;
        std::swap(rows[r], rows[best]);
        Scalar inv = rows[r][static_cast<std::size_t>(col)].inverse();
        for (auto &e : rows[r])
            e *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (i == r)
                continue;
            Scalar f = rows[i][static_cast<std::size_t>(col)];
            if (f.is_zero())
                continue;
            for (std::size_t k = 0; k < 4; ++k)
                rows[i][k] -= f * rows[r][k];
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<Row> basis;
    for (int f = 0; f < 4; ++f)
    {
        if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end())
            continue;
        Row v{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
        v[static_cast<std::size_t>(f)] = Scalar(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<std::size_t>(pivot_col[i])] = -rows[i][static_cast<std::size_t>(f)];
        basis.push_back(v);
    }
    return basis;
}

} // namespace

ReducibilityReport is_reducible(std::span<const ScalarMat> images)
{
    try
    {
        return decide(images);
    }
    catch (const Error &e)
    {
        if (e.code() != ErrorCode::NoSquareRoot)
            throw;
    }
    auto approx = float_copy(images, algebra::kDefaultTolerance);
    ReducibilityReport report = decide(approx);
    report.tolerance_based = true;
    return report;
}

ReducibilityReport is_reducible(const ScalarRep &rep)
{
    return is_reducible(std::span<const ScalarMat>(rep.images));
}

ScalarMat basis_from_line(const std::array<Scalar, 2> &line)
{
    if (!line[0].is_zero())
        return {line[0], Scalar(0), line[1], line[0].inverse()};
    if (line[1].is_zero())
        fail(ErrorCode::InvalidArgument, "zero vector does not span a line");
    return {Scalar(0), -line[1].inverse(), line[1], Scalar(0)};
}

std::vector<ScalarMat> intertwiners(std::span<const ScalarMat> rep1, std::span<const ScalarMat> rep2)
{
    if (rep1.size() != rep2.size())
        fail(ErrorCode::ArityMismatch, "intertwiners need representations of the same group");
    std::vector<Row> rows;
    for (std::size_t k = 0; k < rep1.size(); ++k)
    {
        const ScalarMat &p = rep1[k];
        const ScalarMat &q = rep2[k];
        // Unknowns (x, y, z, w) of X = [[x, y], [z, w]] in X q - p X = 0.
        rows.push_back({q.a - p.a, q.c, -p.b, Scalar(0)});
        rows.push_back({q.b, q.d - p.a, Scalar(0), -p.b});
        rows.push_back({-p.c, Scalar(0), q.a - p.d, q.c});
        rows.push_back({Scalar(0), -p.c, q.b, q.d - p.d});
    }
    std::vector<ScalarMat> out;
    for (const Row &v : nullspace(std::move(rows)))
        out.push_back({v[0], v[1], v[2], v[3]});
    return out;
}

std::optional<ScalarMat> invertible_intertwiner(std::span<const ScalarMat> rep1, std::span<const ScalarMat> rep2)
{
    auto basis = intertwiners(rep1, rep2);
    // det is a quadratic form on the intertwiner space; it is not identically
    // zero iff it is nonzero on a basis vector or on a sum of two of them.
    for (const auto &x : basis)
        if (!x.det().is_zero())
            return x;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
        {
            ScalarMat x = basis[i] + basis[j];
            if (!x.det().is_zero())
                return x;
        }
    return std::nullopt;
}

ScalarMat sign_normalized(const ScalarMat &g)
{
    for (const Scalar *e : {&g.a, &g.b, &g.c, &g.d})
    {
        if (e->is_zero())
            continue;
        int re = e->sign_re();
        if (re < 0 || (re == 0 && e->sign_im() < 0))
            return -g;
        return g;
    }
    return g;
}

ScalarMat normalize_to_sl2(const ScalarMat &x)
{
    const Scalar *lead = nullptr;
    for (const Scalar *e : {&x.a, &x.b, &x.c, &x.d})
        if (!e->is_zero())
        {
            lead = e;
            break;
        }
    if (lead == nullptr)
        fail(ErrorCode::InvalidArgument, "zero matrix cannot be normalized");
    Scalar inv = lead->inverse();
    ScalarMat y = inv * x;
    Scalar det = y.det();
    if (det.is_zero())
        fail(ErrorCode::InvalidArgument, "singular matrix cannot be normalized to SL(2)");
    if (!det.has_exact_sqrt())
    {
        y = {y.a.to_float(), y.b.to_float(), y.c.to_float(), y.d.to_float()};
        det = y.det();
    }
    Scalar root_inv = det.sqrt().inverse();
    return sign_normalized(root_inv * y);
}

bool same_character_on_pairs(std::span<const ScalarMat> rep1, std::span<const ScalarMat> rep2)
{
    if (rep1.size() != rep2.size())
        return false;
    for (std::size_t i = 0; i < rep1.size(); ++i)
    {
        if (!(rep1[i].trace() == rep2[i].trace()))
            return false;
        for (std::size_t j = i + 1; j < rep1.size(); ++j)
            if (!((rep1[i] * rep1[j]).trace() == (rep2[i] * rep2[j]).trace()))
                return false;
    }
    return true;
}

ScalarMat conjugator(std::span<const ScalarMat> rep1, std::span<const ScalarMat> rep2)
{
    if (!same_character_on_pairs(rep1, rep2))
        fail(ErrorCode::CharacterMismatch, "representations differ on generator or pairwise-product traces");
    if (is_reducible(rep1).reducible)
        fail(ErrorCode::Reducible, "first representation is reducible; a conjugator is not unique");
    auto basis = intertwiners(rep1, rep2);
    for (const auto &x : basis)
        if (!x.det().is_zero())
            return normalize_to_sl2(x);
    fail(ErrorCode::CharacterMismatch, "no invertible intertwiner; the representations are not conjugate");
}

ScalarMat conjugator(const ScalarRep &rep1, const ScalarRep &rep2)
{
    if (rep1.presentation.generator_count() != rep2.presentation.generator_count())
        fail(ErrorCode::ArityMismatch, "representations of different presentations");
    return conjugator(std::span<const ScalarMat>(rep1.images), std::span<const ScalarMat>(rep2.images));
}

std::vector<int> lift_check(const ScalarRep &rep)
{
    std::vector<int> signs;
    const auto &rels = rep.presentation.relators();
    for (std::size_t i = 0; i < rels.size(); ++i)
    {
        ScalarMat m = word_eval(rep, rels[i]);
        if (m.is_identity())
            signs.push_back(1);
        else if (m.is_minus_identity())
            signs.push_back(-1);
        else
            fail(ErrorCode::NotCentral, "relator " + std::to_string(i) + " (" + rep.presentation.format(rels[i]) +
                                            ") maps to " + m.to_string() + ", not +-I");
    }
    return signs;
}

ScalarRep to_float(const ScalarRep &rep, double tolerance)
{
    ScalarRep out = rep;
    out.images = float_copy(rep.images, tolerance);
    return out;
}

} // namespace conway::sl2
