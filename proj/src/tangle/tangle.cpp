#include "conway/tangle/tangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>

#include "conway/error.hpp"
#include "conway/sl2/json_codec.hpp"

namespace conway::tangle
{

namespace
{

[[noreturn]] void malformed(const std::string &what)
{
    fail(ErrorCode::MalformedDiagram, what);
}

std::string end_name(const std::vector<Arc> &arcs, const ArcEnd &e)
{
    return arcs.at(static_cast<std::size_t>(e.arc)).id + (e.end == End::Head ? ".head" : ".tail");
}

int delta_of(End e)
{
    return e == End::Head ? 1 : -1;
}

} // namespace

TangleDiagram::TangleDiagram(std::vector<Arc> arcs, std::vector<Crossing> crossings, std::vector<Vertex> vertices)
    : arcs_(std::move(arcs)), crossings_(std::move(crossings)), vertices_(std::move(vertices))
{
    for (const Arc &a : arcs_)
    {
        auto it = std::find(components_.begin(), components_.end(), a.component);
        if (it == components_.end())
        {
            arc_component_.push_back(static_cast<int>(components_.size()));
            components_.push_back(a.component);
        }
        else
            arc_component_.push_back(static_cast<int>(it - components_.begin()));
    }
    validate();
}

void TangleDiagram::validate() const
{
    const int n = static_cast<int>(arcs_.size());
    std::set<std::string> ids;
    for (const Arc &a : arcs_)
    {
        if (a.id.empty())
            malformed("arc with an empty id");
        if (!ids.insert(a.id).second)
            malformed("duplicate arc id '" + a.id + "'");
    }
    auto check_arc = [&](int arc, const std::string &where) {
        if (arc < 0 || arc >= n)
            malformed(where + " references a nonexistent arc");
    };
    // Each end of each non-closed arc is used exactly once.
    std::map<std::pair<int, int>, std::string> used;
    auto use = [&](const ArcEnd &e, const std::string &where) {
        check_arc(e.arc, where);
        if (arcs_[static_cast<std::size_t>(e.arc)].closed)
            malformed(where + " uses an end of the closed arc '" + arcs_[static_cast<std::size_t>(e.arc)].id + "'");
        auto key = std::pair{e.arc, e.end == End::Head ? 0 : 1};
        auto [it, fresh] = used.emplace(key, where);
        if (!fresh)
            malformed("arc end " + end_name(arcs_, e) + " appears twice (" + it->second + " and " + where + ")");
    };
    for (std::size_t k = 0; k < crossings_.size(); ++k)
    {
        const Crossing &c = crossings_[k];
        std::string where = "crossing " + std::to_string(k);
        check_arc(c.over, where);
        if (c.sign != 1 && c.sign != -1)
            malformed(where + " has a sign other than +1 or -1");
        use({c.under_in, End::Head}, where);
        use({c.under_out, End::Tail}, where);
        if (component_of(c.under_in) != component_of(c.under_out))
            malformed(where + " joins under-arcs of different components");
    }
    for (std::size_t k = 0; k < vertices_.size(); ++k)
    {
        const Vertex &v = vertices_[k];
        std::string where = "vertex '" + v.id + "'";
        if (v.basepoint_end < 0 || v.basepoint_end > 3)
            malformed(where + " has a basepoint end outside 0..3");
        std::map<int, int> balance;
        for (const ArcEnd &e : v.ends)
        {
            use(e, where);
            balance[component_of(e.arc)] += delta_of(e.end);
        }
        // Intersection number zero of every component with the sphere; this
        // is what makes the balance hold for every choice of orientations.
        for (const auto &[comp, b] : balance)
            if (b != 0)
                malformed(where + ": component '" + components_[static_cast<std::size_t>(comp)] +
                          "' has nonzero signed strand count " + std::to_string(b));
    }
    for (int a = 0; a < n; ++a)
    {
        if (arcs_[static_cast<std::size_t>(a)].closed)
            continue;
        for (End e : {End::Head, End::Tail})
            if (!used.contains({a, e == End::Head ? 0 : 1}))
                malformed("arc end " + end_name(arcs_, {a, e}) + " is not attached to a crossing or vertex");
    }
}

int TangleDiagram::arc_index(const std::string &id) const
{
    for (std::size_t i = 0; i < arcs_.size(); ++i)
        if (arcs_[i].id == id)
            return static_cast<int>(i);
    malformed("unknown arc '" + id + "'");
}

int TangleDiagram::vertex_index(const std::string &id) const
{
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id)
            return static_cast<int>(i);
    fail(ErrorCode::InvalidArgument, "unknown vertex '" + id + "'");
}

std::array<std::pair<int, int>, 4> TangleDiagram::vertex_meridians(int v) const
{
    const Vertex &vx = vertices_.at(static_cast<std::size_t>(v));
    std::array<std::pair<int, int>, 4> out;
    for (int k = 0; k < 4; ++k)
    {
        const ArcEnd &e = vx.ends[static_cast<std::size_t>((vx.basepoint_end + k) % 4)];
        out[static_cast<std::size_t>(k)] = {e.arc, delta_of(e.end)};
    }
    return out;
}

namespace
{

ArcEnd parse_end(const Json &j, const std::vector<Arc> &arcs)
{
    std::string arc, end;
    if (j.is_string())
    {
        std::string s = j.get<std::string>();
        auto dot = s.rfind('.');
        if (dot == std::string::npos)
            malformed("arc end '" + s + "' must look like 'arc.head' or 'arc.tail'");
        arc = s.substr(0, dot);
        end = s.substr(dot + 1);
    }
    else if (j.is_object() && j.contains("arc") && j.contains("end"))
    {
        arc = j.at("arc").get<std::string>();
        end = j.at("end").get<std::string>();
    }
    else
        malformed("malformed arc end " + j.dump());
    if (end != "head" && end != "tail")
        malformed("arc end '" + end + "' must be 'head' or 'tail'");
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (arcs[i].id == arc)
            return {static_cast<int>(i), end == "head" ? End::Head : End::Tail};
    malformed("unknown arc '" + arc + "'");
}

int parse_arc(const Json &j, const char *key, const std::vector<Arc> &arcs)
{
    if (!j.contains(key) || !j.at(key).is_string())
        malformed(std::string("crossing needs a string \"") + key + "\"");
    std::string id = j.at(key).get<std::string>();
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (arcs[i].id == id)
            return static_cast<int>(i);
    malformed("unknown arc '" + id + "'");
}

} // namespace

TangleDiagram diagram_from_json(const Json &j)
{
    if (!j.is_object())
        malformed("a diagram is a JSON object");
    try
    {
        std::vector<Arc> arcs;
        for (const auto &a : j.value("arcs", Json::array()))
            arcs.push_back({a.at("id").get<std::string>(), a.value("component", a.at("id").get<std::string>()),
                            a.value("closed", false)});
        std::vector<Crossing> crossings;
        for (const auto &c : j.value("crossings", Json::array()))
            crossings.push_back({parse_arc(c, "over", arcs), parse_arc(c, "under_in", arcs),
                                 parse_arc(c, "under_out", arcs), c.value("sign", 1)});
        std::vector<Vertex> vertices;
        int index = 0;
        for (const auto &v : j.value("vertices", Json::array()))
        {
            Vertex vx;
            vx.id = v.value("id", "v" + std::to_string(++index));
            const Json &ends = v.at("ends");
            if (!ends.is_array() || ends.size() != 4)
                malformed("vertex '" + vx.id + "' must have exactly 4 incident arc ends");
            for (std::size_t k = 0; k < 4; ++k)
                vx.ends[k] = parse_end(ends[k], arcs);
            const Json &bp = v.value("basepoint_end", Json(0));
            if (bp.is_number_integer())
                vx.basepoint_end = bp.get<int>();
            else
            {
                ArcEnd e = parse_end(bp, arcs);
                auto it = std::find(vx.ends.begin(), vx.ends.end(), e);
                if (it == vx.ends.end())
                    malformed("basepoint end of vertex '" + vx.id + "' is not one of its ends");
                vx.basepoint_end = static_cast<int>(it - vx.ends.begin());
            }
            vertices.push_back(vx);
        }
        return TangleDiagram(std::move(arcs), std::move(crossings), std::move(vertices));
    }
    catch (const nlohmann::json::exception &e)
    {
        malformed(std::string("diagram JSON: ") + e.what());
    }
}

Json to_json(const TangleDiagram &d)
{
    const auto &arcs = d.arcs();
    Json ja = Json::array();
    for (const Arc &a : arcs)
    {
        Json x = {{"id", a.id}, {"component", a.component}};
        if (a.closed)
            x["closed"] = true;
        ja.push_back(x);
    }
    Json jc = Json::array();
    for (const Crossing &c : d.crossings())
        jc.push_back({{"over", arcs[static_cast<std::size_t>(c.over)].id},
                      {"under_in", arcs[static_cast<std::size_t>(c.under_in)].id},
                      {"under_out", arcs[static_cast<std::size_t>(c.under_out)].id},
                      {"sign", c.sign}});
    Json jv = Json::array();
    for (const Vertex &v : d.vertices())
    {
        Json ends = Json::array();
        for (const ArcEnd &e : v.ends)
            ends.push_back(end_name(arcs, e));
        jv.push_back({{"id", v.id}, {"ends", ends}, {"basepoint_end", v.basepoint_end}});
    }
    return {{"arcs", ja}, {"crossings", jc}, {"vertices", jv}};
}

sl2::Presentation wirtinger_presentation(const TangleDiagram &d)
{
    using sl2::GroupWord;
    std::vector<std::string> names;
    for (const Arc &a : d.arcs())
        names.push_back(a.id);
    sl2::Presentation p(names);
    for (const Crossing &c : d.crossings())
    {
        GroupWord over = GroupWord::generator(c.over);
        GroupWord r = GroupWord::generator(c.under_out).inverse() * over.pow(-c.sign) * GroupWord::generator(c.under_in) *
                      over.pow(c.sign);
        // A crossing of an arc under itself with in = out is trivially satisfied.
        if (!r.empty())
            p.add_relator(r);
    }
    for (std::size_t v = 0; v < d.vertices().size(); ++v)
    {
        std::vector<GroupWord> meridians;
        GroupWord rel;
        for (const auto &[arc, delta] : d.vertex_meridians(static_cast<int>(v)))
        {
            meridians.push_back(GroupWord::generator(arc, delta));
            rel = rel * meridians.back();
        }
        p.add_relator(rel);
        p.set_peripheral("vertex:" + d.vertices()[v].id, meridians);
    }
    return p;
}

Orientation default_orientation(const TangleDiagram &d)
{
    return Orientation(d.components().size(), 1);
}

std::vector<Orientation> all_orientations(const TangleDiagram &d)
{
    std::size_t n = d.components().size();
    if (n > 20)
        fail(ErrorCode::InvalidArgument, "too many components to enumerate orientations");
    std::vector<Orientation> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask)
    {
        Orientation o(n, 1);
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (std::size_t{1} << k))
                o[k] = -1;
        out.push_back(o);
    }
    return out;
}

MeridianSign assign_signs(const TangleDiagram &d, const Orientation &orientation)
{
    if (orientation.size() != d.components().size())
        fail(ErrorCode::ArityMismatch, "orientation needs one entry per component");
    MeridianSign s;
    for (std::size_t a = 0; a < d.arcs().size(); ++a)
    {
        int o = orientation[static_cast<std::size_t>(d.component_of(static_cast<int>(a)))];
        if (o != 1 && o != -1)
            fail(ErrorCode::InvalidArgument, "orientation entries must be +1 or -1");
        s.arc_signs.push_back(o);
    }
    return s;
}

std::array<int, 4> vertex_signs(const TangleDiagram &d, const MeridianSign &s, int v)
{
    if (s.arc_signs.size() != d.arcs().size())
        fail(ErrorCode::ArityMismatch, "sign map needs one entry per arc");
    std::array<int, 4> out{};
    auto m = d.vertex_meridians(v);
    for (std::size_t k = 0; k < 4; ++k)
        out[k] = s.arc_signs[static_cast<std::size_t>(m[k].first)] * m[k].second;
    return out;
}

bool sign_balanced(const std::array<int, 4> &signs)
{
    return std::accumulate(signs.begin(), signs.end(), 0) == 0 &&
           std::all_of(signs.begin(), signs.end(), [](int e) { return e == 1 || e == -1; });
}

std::vector<bool> check_sign_balance(const TangleDiagram &d, const MeridianSign &s)
{
    std::vector<bool> out;
    for (std::size_t v = 0; v < d.vertices().size(); ++v)
        out.push_back(sign_balanced(vertex_signs(d, s, static_cast<int>(v))));
    return out;
}

std::array<int, 3> vertex_type(const std::array<int, 4> &signs)
{
    if (!sign_balanced(signs))
        fail(ErrorCode::Unbalanced, "vertex meridian signs are not two +1 and two -1");
    return {signs[0] == signs[1] ? -2 : 2, signs[0] == signs[2] ? -2 : 2, signs[1] == signs[2] ? -2 : 2};
}

std::array<int, 3> classify_vertex_type(const TangleDiagram &d, int v, const Orientation &orientation)
{
    return vertex_type(vertex_signs(d, assign_signs(d, orientation), v));
}

namespace
{

// Solves A x = b over GF(2); returns nullopt when inconsistent. Free
// variables are set to zero.
std::optional<std::vector<int>> solve_gf2(std::vector<std::vector<int>> rows, std::vector<int> rhs, std::size_t n)
{
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col)
    {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        std::swap(rhs[r], rhs[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][col])
            {
                for (std::size_t k = 0; k < n; ++k)
                    rows[i][k] ^= rows[r][k];
                rhs[i] ^= rhs[r];
            }
        pivots.push_back(static_cast<int>(col));
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rhs[i])
            return std::nullopt;
    std::vector<int> x(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[static_cast<std::size_t>(pivots[i])] = rhs[i];
    return x;
}

int relator_sign(const sl2::ScalarMat &m, const std::string &what)
{
    if (m.is_identity())
        return 1;
    if (m.is_minus_identity())
        return -1;
    fail(ErrorCode::NotCentral, what + " maps to " + m.to_string() + ", not +-I");
}

} // namespace

LiftResult lift_representation(const TangleDiagram &d, const ScalarRep &projective, const MeridianSign &s)
{
    using sl2::ScalarMat;
    const std::size_t n = d.arcs().size();
    if (projective.images.size() != n)
        fail(ErrorCode::ArityMismatch, "projective representation needs one image per arc");
    if (s.arc_signs.size() != n)
        fail(ErrorCode::ArityMismatch, "sign map needs one entry per arc");
    sl2::Presentation pres = wirtinger_presentation(d);

    std::vector<std::vector<int>> rows;
    std::vector<int> rhs;
    LiftResult result;
    // Relators: flipping generator a multiplies the image by (-1)^(exponent sum of a).
    for (const auto &rel : pres.relators())
    {
        int sign = relator_sign(sl2::word_eval(projective, rel), "relator " + pres.format(rel));
        auto sums = rel.exponent_sums(n);
        std::vector<int> row(n);
        for (std::size_t a = 0; a < n; ++a)
            row[a] = std::abs(sums[a]) % 2;
        rows.push_back(row);
        rhs.push_back(sign < 0 ? 1 : 0);
    }
    // When every image is +-[[i, *], [0, -i]] in one common frame (the
    // projective representation is reducible with trace-zero meridians), the
    // sign of each arc is read from the diagonal there and must follow s.
    bool trace_zero = n > 0;
    for (const auto &g : projective.images)
        trace_zero = trace_zero && g.trace().is_zero() && !g.is_scalar_multiple_of_identity();
    if (trace_zero)
    {
        auto red = sl2::is_reducible(projective);
        if (red.reducible)
        {
            ScalarMat frame = sl2::basis_from_line(*red.line);
            ScalarMat frame_inv = frame.inverse();
            const algebra::Scalar i = algebra::Scalar::imaginary_unit();
            for (std::size_t a = 0; a < n; ++a)
            {
                algebra::Scalar lead = (frame_inv * projective.images[a] * frame).a;
                int observed = lead == i ? 1 : (lead == -i ? -1 : 0);
                if (observed == 0)
                    fail(ErrorCode::InvalidArgument,
                         "image of arc '" + d.arcs()[a].id + "' is not of the form +-[[i, *], [0, -i]]");
                std::vector<int> row(n, 0);
                row[a] = 1;
                rows.push_back(row);
                rhs.push_back(observed * s.arc_signs[a] < 0 ? 1 : 0);
            }
            for (std::size_t v = 0; v < d.vertices().size(); ++v)
                result.constrained_vertices.push_back(static_cast<int>(v));
        }
    }
    auto x = solve_gf2(rows, rhs, n);
    if (!x)
        fail(ErrorCode::LiftObstructed, "no choice of generator signs maps every relator to +I with the given meridian signs");

    result.representation = projective;
    for (std::size_t a = 0; a < n; ++a)
    {
        result.flips.push_back((*x)[a] ? -1 : 1);
        if ((*x)[a])
            result.representation.images[a] = -result.representation.images[a];
    }
    result.representation.presentation = pres;
    for (int sign : sl2::lift_check(result.representation))
        if (sign != 1)
            fail(ErrorCode::LiftObstructed, "internal: solved signs leave a relator at -I");
    return result;
}

ScalarRep arc_representation_from_json(const TangleDiagram &d, const Json &images, double tolerance)
{
    if (!images.is_object())
        fail(ErrorCode::ParseError, "arc images must be an object keyed by arc id");
    std::vector<sl2::ScalarMat> mats;
    for (const auto &a : d.arcs())
    {
        if (!images.contains(a.id))
            fail(ErrorCode::ParseError, "no image for arc '" + a.id + "'");
        mats.push_back(sl2::scalar_mat_from_json(images.at(a.id), tolerance));
    }
    return ScalarRep(wirtinger_presentation(d), std::move(mats));
}

std::vector<long> abelianization(const sl2::Presentation &p)
{
    const std::size_t n = p.generator_count();
    std::vector<std::vector<long>> m;
    for (const auto &r : p.relators())
    {
        auto sums = r.exponent_sums(n);
        m.emplace_back(sums.begin(), sums.end());
    }
    // Smith normal form by repeated pivoting on the smallest entry.
    std::vector<long> diag;
    std::size_t top = 0;
    bool exhausted = false;
    while (!exhausted && top < n && top < m.size())
    {
        for (;;)
        {
            // smallest nonzero entry in the lower-right block
            long best = 0;
            std::size_t bi = 0, bj = 0;
            for (std::size_t i = top; i < m.size(); ++i)
                for (std::size_t j = top; j < n; ++j)
                    if (m[i][j] != 0 && (best == 0 || std::labs(m[i][j]) < best))
                    {
                        best = std::labs(m[i][j]);
                        bi = i;
                        bj = j;
                    }
            if (best == 0)
            {
                exhausted = true;
                break;
            }
            std::swap(m[top], m[bi]);
            for (auto &row : m)
                std::swap(row[top], row[bj]);
            bool clean = true;
            for (std::size_t i = top + 1; i < m.size(); ++i)
            {
                long q = m[i][top] / m[top][top];
                for (std::size_t j = top; j < n; ++j)
                    m[i][j] -= q * m[top][j];
                clean = clean && m[i][top] == 0;
            }
            for (std::size_t j = top + 1; j < n; ++j)
            {
                long q = m[top][j] / m[top][top];
                for (std::size_t i = top; i < m.size(); ++i)
                    m[i][j] -= q * m[i][top];
                clean = clean && m[top][j] == 0;
            }
            if (!clean)
                continue;
            // divisibility of the remaining block
            bool divides = true;
            for (std::size_t i = top + 1; i < m.size() && divides; ++i)
                for (std::size_t j = top + 1; j < n; ++j)
                    if (m[i][j] % m[top][top] != 0)
                    {
                        for (std::size_t k = top; k < n; ++k)
                            m[top][k] += m[i][k];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (exhausted)
            break;
        diag.push_back(std::labs(m[top][top]));
        ++top;
    }
    std::vector<long> out;
    for (long d : diag)
        if (d != 1)
            out.push_back(d);
    for (std::size_t k = diag.size(); k < n; ++k)
        out.push_back(0);
    return out;
}

} // namespace conway::tangle
