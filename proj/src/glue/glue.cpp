#include "conway/glue/glue.hpp"

#include <deque>
#include <set>

#include "conway/error.hpp"
#include "conway/sl2/json_codec.hpp"

namespace conway::glue
{

namespace
{

constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

[[noreturn]] void bad_system(const std::string &what)
{
    fail(ErrorCode::InvalidArgument, what);
}

} // namespace

SplitSystem::SplitSystem(std::vector<Piece> pieces, std::vector<Interface> interfaces)
    : pieces_(std::move(pieces)), interfaces_(std::move(interfaces))
{
    if (pieces_.empty())
        bad_system("a split system needs at least one piece");
    std::set<std::string> names;
    for (const auto &p : pieces_)
        if (!names.insert(p.name).second)
            bad_system("duplicate piece name '" + p.name + "'");
    std::set<std::string> inames;
    for (const auto &i : interfaces_)
    {
        if (!inames.insert(i.name).second)
            bad_system("duplicate interface name '" + i.name + "'");
        for (int k = 0; k < 2; ++k)
        {
            int p = piece_index(i.pieces[static_cast<std::size_t>(k)]);
            for (const auto &w : i.words[static_cast<std::size_t>(k)])
                if (w.max_generator() >= static_cast<int>(pieces_[static_cast<std::size_t>(p)].presentation.generator_count()))
                    bad_system("interface '" + i.name + "' uses a generator outside piece '" + pieces_[static_cast<std::size_t>(p)].name + "'");
        }
        if (i.pieces[0] == i.pieces[1])
            fail(ErrorCode::NotATree, "interface '" + i.name + "' is a loop at piece '" + i.pieces[0] + "'");
    }
    // A connected graph with one edge fewer than vertices is a tree.
    if (interfaces_.size() + 1 != pieces_.size())
        fail(ErrorCode::NotATree, std::to_string(pieces_.size()) + " pieces need " + std::to_string(pieces_.size() - 1) +
                                      " interfaces, got " + std::to_string(interfaces_.size()));
    std::vector<int> seen(pieces_.size(), 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty())
    {
        int p = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < interfaces_.size(); ++i)
            for (int side = 0; side < 2; ++side)
            {
                if (piece_index(interfaces_[i].pieces[static_cast<std::size_t>(side)]) != p)
                    continue;
                int q = piece_index(interfaces_[i].pieces[static_cast<std::size_t>(1 - side)]);
                if (seen[static_cast<std::size_t>(q)])
                    continue;
                seen[static_cast<std::size_t>(q)] = 1;
                traversal_.push_back({p, q, static_cast<int>(i), side});
                queue.push_back(q);
            }
    }
    if (traversal_.size() + 1 != pieces_.size())
        fail(ErrorCode::NotATree, "the dual graph of the system is not connected");

    std::vector<std::string> gens;
    for (const auto &p : pieces_)
    {
        offsets_.push_back(static_cast<int>(gens.size()));
        for (const auto &g : p.presentation.generators())
            gens.push_back(p.name + "." + g);
    }
    amalgam_ = Presentation(gens);
    for (std::size_t p = 0; p < pieces_.size(); ++p)
    {
        for (const auto &r : pieces_[p].presentation.relators())
            amalgam_.add_relator(embed(static_cast<int>(p), r));
        for (const auto &[mark, words] : pieces_[p].presentation.peripheral())
        {
            std::vector<GroupWord> e;
            for (const auto &w : words)
                e.push_back(embed(static_cast<int>(p), w));
            amalgam_.set_peripheral(pieces_[p].name + "." + mark, e);
        }
    }
    for (std::size_t i = 0; i < interfaces_.size(); ++i)
    {
        auto a = interface_words(static_cast<int>(i), 0), b = interface_words(static_cast<int>(i), 1);
        for (std::size_t k = 0; k < 4; ++k)
            amalgam_.add_relator(a[k] * b[k].inverse());
        amalgam_.set_peripheral("interface:" + interfaces_[i].name, std::vector<GroupWord>(a.begin(), a.end()));
    }
}

int SplitSystem::piece_index(const std::string &name) const
{
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        if (pieces_[i].name == name)
            return static_cast<int>(i);
    bad_system("unknown piece '" + name + "'");
}

int SplitSystem::interface_index(const std::string &name) const
{
    for (std::size_t i = 0; i < interfaces_.size(); ++i)
        if (interfaces_[i].name == name)
            return static_cast<int>(i);
    bad_system("unknown interface '" + name + "'");
}

int SplitSystem::side_of(int interface, int piece) const
{
    const Interface &i = interfaces_.at(static_cast<std::size_t>(interface));
    for (int side = 0; side < 2; ++side)
        if (piece_index(i.pieces[static_cast<std::size_t>(side)]) == piece)
            return side;
    bad_system("interface '" + i.name + "' is not incident to piece '" + pieces_.at(static_cast<std::size_t>(piece)).name + "'");
}

std::vector<int> SplitSystem::degrees() const
{
    std::vector<int> d(pieces_.size(), 0);
    for (const auto &i : interfaces_)
        for (const auto &p : i.pieces)
            ++d[static_cast<std::size_t>(piece_index(p))];
    return d;
}

GroupWord SplitSystem::embed(int piece, const GroupWord &w) const
{
    std::vector<sl2::Letter> letters = w.letters();
    for (auto &l : letters)
        l.generator += offsets_.at(static_cast<std::size_t>(piece));
    return GroupWord(std::move(letters));
}

std::vector<GroupWord> SplitSystem::piece_generators(int piece) const
{
    std::vector<GroupWord> out;
    std::size_t n = pieces_.at(static_cast<std::size_t>(piece)).presentation.generator_count();
    for (std::size_t g = 0; g < n; ++g)
        out.push_back(GroupWord::generator(offsets_[static_cast<std::size_t>(piece)] + static_cast<int>(g)));
    return out;
}

std::array<GroupWord, 4> SplitSystem::interface_words(int interface, int side) const
{
    const Interface &i = interfaces_.at(static_cast<std::size_t>(interface));
    int p = piece_index(i.pieces[static_cast<std::size_t>(side)]);
    std::array<GroupWord, 4> out;
    for (std::size_t k = 0; k < 4; ++k)
        out[k] = embed(p, i.words[static_cast<std::size_t>(side)][k]);
    return out;
}

SplitSystem system_from_json(const Json &j)
{
    try
    {
        std::vector<Piece> pieces;
        for (const auto &p : j.at("pieces"))
            pieces.push_back({p.at("name").get<std::string>(), sl2::presentation_from_json(p.at("presentation"))});
        auto find = [&](const std::string &name) -> const Piece & {
            for (const auto &p : pieces)
                if (p.name == name)
                    return p;
            bad_system("unknown piece '" + name + "'");
        };
        std::vector<Interface> interfaces;
        for (const auto &i : j.value("interfaces", Json::array()))
        {
            Interface x;
            x.name = i.at("name").get<std::string>();
            const Json &ps = i.at("pieces");
            if (!ps.is_array() || ps.size() != 2)
                bad_system("interface '" + x.name + "' needs exactly two pieces");
            const Json &words = i.at("words");
            for (std::size_t side = 0; side < 2; ++side)
            {
                x.pieces[side] = ps[side].get<std::string>();
                // words either keyed by piece name or as a pair of lists
                const Json &list = words.is_array() ? words.at(side) : words.at(x.pieces[side]);
                if (!list.is_array() || list.size() != 4)
                    bad_system("interface '" + x.name + "' needs four meridian words per side");
                const Presentation &pres = find(x.pieces[side]).presentation;
                for (std::size_t k = 0; k < 4; ++k)
                    x.words[side][k] = pres.parse_word(list[k].get<std::string>());
            }
            interfaces.push_back(std::move(x));
        }
        return SplitSystem(std::move(pieces), std::move(interfaces));
    }
    catch (const nlohmann::json::exception &e)
    {
        fail(ErrorCode::ParseError, std::string("split system JSON: ") + e.what());
    }
}

Json to_json(const SplitSystem &s)
{
    Json pieces = Json::array();
    for (const auto &p : s.pieces())
        pieces.push_back({{"name", p.name}, {"presentation", sl2::to_json(p.presentation)}});
    Json interfaces = Json::array();
    for (const auto &i : s.interfaces())
    {
        Json words = Json::object();
        for (std::size_t side = 0; side < 2; ++side)
        {
            const Presentation &pres = s.pieces()[static_cast<std::size_t>(s.piece_index(i.pieces[side]))].presentation;
            Json list = Json::array();
            for (const auto &w : i.words[side])
                list.push_back(pres.format(w));
            words[i.pieces[side]] = list;
        }
        interfaces.push_back({{"name", i.name}, {"pieces", {i.pieces[0], i.pieces[1]}}, {"words", words}});
    }
    return {{"pieces", pieces}, {"interfaces", interfaces}};
}

Restriction restrict_character(std::span<const ScalarMat> meridians)
{
    if (meridians.size() != 4)
        fail(ErrorCode::ArityMismatch, "an interface has four meridians");
    Restriction r;
    for (std::size_t k = 0; k < 4; ++k)
    {
        r.meridians[k] = meridians[k];
        r.meridian_traces[k] = meridians[k].trace();
    }
    for (std::size_t k = 0; k < kPairs.size(); ++k)
        r.pair_traces[k] = (meridians[static_cast<std::size_t>(kPairs[k].first)] *
                            meridians[static_cast<std::size_t>(kPairs[k].second)])
                               .trace();
    r.relator_holds = (meridians[0] * meridians[1] * meridians[2] * meridians[3]).is_identity();
    bool equal = true;
    for (std::size_t k = 1; k < 4; ++k)
        equal = equal && r.meridian_traces[k] == r.meridian_traces[0];
    if (equal)
        r.point = fricke::FrickePoint{r.pair_traces[0], r.pair_traces[1], r.pair_traces[3], r.meridian_traces[0]};
    return r;
}

Restriction restrict_character(const ScalarRep &rep, const std::array<GroupWord, 4> &words)
{
    auto m = sl2::evaluate_all(rep, std::span<const GroupWord>(words));
    return restrict_character(std::span<const ScalarMat>(m));
}

Json to_json(const Restriction &r)
{
    static const std::array<const char *, 4> mnames{"m1", "m2", "m3", "m4"};
    Json traces = Json::object();
    for (std::size_t k = 0; k < 4; ++k)
        traces[mnames[k]] = algebra::to_json(r.meridian_traces[k]);
    for (std::size_t k = 0; k < kPairs.size(); ++k)
        traces[std::string(mnames[static_cast<std::size_t>(kPairs[k].first)]) + " " +
               mnames[static_cast<std::size_t>(kPairs[k].second)]] = algebra::to_json(r.pair_traces[k]);
    Json j = {{"traces", traces}, {"equal_meridian_traces", r.point.has_value()}, {"relator_holds", r.relator_holds}};
    if (r.point)
        j["point"] = fricke::to_json(*r.point);
    return j;
}

bool equal_character(const Restriction &a, const Restriction &b)
{
    for (std::size_t k = 0; k < 4; ++k)
        if (!(a.meridian_traces[k] == b.meridian_traces[k]))
            return false;
    for (std::size_t k = 0; k < kPairs.size(); ++k)
        if (!(a.pair_traces[k] == b.pair_traces[k]))
            return false;
    return true;
}

MatchReport match_report(std::span<const ScalarMat> meridians1, std::span<const ScalarMat> meridians2)
{
    MatchReport m;
    Restriction r1 = restrict_character(meridians1), r2 = restrict_character(meridians2);
    m.equal_character = equal_character(r1, r2);
    if (!m.equal_character)
    {
        m.note = "meridian or pairwise traces differ";
        return m;
    }
    auto red = sl2::is_reducible(meridians1);
    if (!red.reducible)
    {
        m.conjugator = sl2::conjugator(meridians1, meridians2);
        m.conjugate = true;
        m.note = "irreducible: the character determines the conjugacy class";
        return m;
    }
    auto x = sl2::invertible_intertwiner(meridians1, meridians2);
    if (!x)
    {
        m.note = "reducible with equal characters, but no invertible intertwiner: not conjugate";
        return m;
    }
    m.conjugator = sl2::normalize_to_sl2(*x);
    m.conjugate = true;
    m.note = "reducible: conjugate by an invertible intertwiner";
    return m;
}

MatchReport match_report(const ScalarRep &rep1, const std::array<GroupWord, 4> &words1, const ScalarRep &rep2,
                         const std::array<GroupWord, 4> &words2)
{
    auto a = sl2::evaluate_all(rep1, std::span<const GroupWord>(words1));
    auto b = sl2::evaluate_all(rep2, std::span<const GroupWord>(words2));
    return match_report(std::span<const ScalarMat>(a), std::span<const ScalarMat>(b));
}

Json to_json(const MatchReport &m)
{
    Json j = {{"equal_character", m.equal_character}, {"conjugate", m.conjugate}, {"note", m.note}};
    if (m.conjugator)
        j["conjugator"] = sl2::to_json(*m.conjugator);
    return j;
}

GlueResult glue_many(const SplitSystem &system, const std::vector<ScalarRep> &reps)
{
    const auto &pieces = system.pieces();
    if (reps.size() != pieces.size())
        fail(ErrorCode::ArityMismatch, "one representation per piece is required");
    for (std::size_t p = 0; p < pieces.size(); ++p)
        if (reps[p].images.size() != pieces[p].presentation.generator_count())
            fail(ErrorCode::ArityMismatch, "representation of piece '" + pieces[p].name + "' has the wrong arity");

    std::vector<ScalarRep> placed(reps.size());
    std::vector<ScalarMat> conj(reps.size(), ScalarMat::identity());
    placed[0] = reps[0];
    for (const TreeEdge &e : system.traversal())
    {
        const Interface &i = system.interfaces()[static_cast<std::size_t>(e.interface)];
        const auto &pw = i.words[static_cast<std::size_t>(e.parent_side)];
        const auto &cw = i.words[static_cast<std::size_t>(1 - e.parent_side)];
        const ScalarRep &parent = placed[static_cast<std::size_t>(e.parent)];
        const ScalarRep &child = reps[static_cast<std::size_t>(e.child)];
        Restriction rp = restrict_character(parent, pw), rc = restrict_character(child, cw);
        for (const auto *r : {&rp, &rc})
            if (!r->relator_holds)
                fail(ErrorCode::InvalidArgument, "interface '" + i.name + "': m1 m2 m3 m4 is not the identity in an incident piece");
        if (!equal_character(rp, rc))
            fail(ErrorCode::CharMismatch, "interface '" + i.name + "': restricted characters differ");
        if (sl2::is_reducible(std::span<const ScalarMat>(rp.meridians)).reducible)
            fail(ErrorCode::ReducibleInterface,
                 "interface '" + i.name + "': the common restriction is reducible, so the gluing is not unique");
        ScalarMat g = sl2::conjugator(std::span<const ScalarMat>(rp.meridians), std::span<const ScalarMat>(rc.meridians));
        placed[static_cast<std::size_t>(e.child)] = child.conjugated_by(g);
        conj[static_cast<std::size_t>(e.child)] = g;
    }
    GlueResult out;
    std::vector<ScalarMat> images;
    for (const auto &r : placed)
        images.insert(images.end(), r.images.begin(), r.images.end());
    out.representation = ScalarRep(system.amalgam(), std::move(images));
    out.conjugators = std::move(conj);
    return out;
}

GlueResult glue_two(const SplitSystem &system, const ScalarRep &rep1, const ScalarRep &rep2)
{
    if (system.pieces().size() != 2)
        fail(ErrorCode::InvalidArgument, "glue_two needs a system with exactly two pieces");
    return glue_many(system, {rep1, rep2});
}

ScalarRep restrict_to_piece(const SplitSystem &system, const ScalarRep &amalgam_rep, int piece)
{
    auto gens = system.piece_generators(piece);
    return ScalarRep(system.pieces().at(static_cast<std::size_t>(piece)).presentation,
                     sl2::evaluate_all(amalgam_rep, std::span<const GroupWord>(gens)));
}

Json to_json(const GlueResult &g)
{
    Json conj = Json::array();
    for (const auto &m : g.conjugators)
        conj.push_back(sl2::to_json(m));
    return {{"representation", sl2::to_json(g.representation)}, {"conjugators", conj}};
}

Bipartition bipartition_pieces(const SplitSystem &system)
{
    std::vector<int> colour(system.pieces().size(), 0);
    colour[0] = 1;
    for (const TreeEdge &e : system.traversal())
        colour[static_cast<std::size_t>(e.child)] = -colour[static_cast<std::size_t>(e.parent)];
    Bipartition b;
    for (std::size_t p = 0; p < colour.size(); ++p)
        (colour[p] > 0 ? b.plus : b.minus).push_back(system.pieces()[p].name);
    return b;
}

Json to_json(const Bipartition &b)
{
    return {{"plus", b.plus}, {"minus", b.minus}};
}

std::vector<ScalarRep> piece_reps_from_json(const SplitSystem &system, const Json &j, double tolerance)
{
    std::vector<ScalarRep> out;
    for (const auto &p : system.pieces())
    {
        if (!j.contains(p.name))
            fail(ErrorCode::ParseError, "no representation for piece '" + p.name + "'");
        const Json &r = j.at(p.name);
        const Json &images = r.contains("images") ? r.at("images") : r;
        std::vector<ScalarMat> mats;
        for (const auto &g : p.presentation.generators())
        {
            if (!images.contains(g))
                fail(ErrorCode::ParseError, "piece '" + p.name + "': no image for generator '" + g + "'");
            mats.push_back(sl2::scalar_mat_from_json(images.at(g), tolerance));
        }
        out.emplace_back(p.presentation, std::move(mats));
    }
    return out;
}

} // namespace conway::glue
