// Command-line front end: every operation reads JSON (or a short point
// literal) and writes one JSON document to stdout. Summaries go to stderr.
//
// Exit codes: 0 verdict computed, 1 usage or malformed input, 2 error
// verdict, 3 inconclusive truncation.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "conway/cli/sweep.hpp"
#include "conway/error.hpp"
#include "conway/fixtures/fixtures.hpp"
#include "conway/fricke/fricke.hpp"
#include "conway/glue/glue.hpp"
#include "conway/ideal/ideal.hpp"
#include "conway/sl2/json_codec.hpp"
#include "conway/tangle/tangle.hpp"

namespace
{

using namespace conway;
using algebra::Json;
using algebra::Scalar;
using cli::RunConfig;
using sl2::ScalarRep;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerdict = 2;
constexpr int kExitInconclusive = 3;

// Malformed command-line input, reported with exit code 1.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Output
{
    Json document;
    int exit_code = kExitOk;
    std::string summary;
};

Json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw UsageError("'" + path + "' is empty");
    try
    {
        return Json::parse(text);
    }
    catch (const Json::parse_error &e)
    {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
}

// Accepts "3", "-1/2", "2.5", "i", "-3i", "1+2i", "1/2-3/4i": an optional
// real rational and an imaginary part written as a rational followed by i.
Scalar parse_scalar_text(std::string text, const RunConfig &config)
{
    std::erase(text, ' ');
    if (text.empty())
        throw UsageError("empty coordinate");
    auto rational = [&](const std::string &part) -> mpq_class {
        if (part.empty() || part == "+")
            return 1;
        if (part == "-")
            return -1;
        try
        {
            return Scalar::parse_rational(part);
        }
        catch (const Error &)
        {
            throw UsageError("cannot parse '" + part + "' as a rational");
        }
    };
    Scalar value;
    if (text.back() == 'i')
    {
        std::string body = text.substr(0, text.size() - 1);
        std::size_t split = body.find_last_of("+-");
        while (split != std::string::npos && split > 0 && (body[split - 1] == 'e' || body[split - 1] == 'E'))
            split = body.find_last_of("+-", split - 1);
        if (split == std::string::npos || split == 0)
            value = Scalar(mpq_class(0), rational(body));
        else
            value = Scalar(rational(body.substr(0, split)), rational(body.substr(split)));
    }
    else
        value = Scalar(rational(text));
    return config.field == cli::FieldMode::Float ? value.to_float(config.tolerance) : value;
}

std::vector<Scalar> parse_tuple(const std::string &text, std::size_t arity, const RunConfig &config)
{
    std::string body = text;
    std::erase(body, '(');
    std::erase(body, ')');
    std::vector<Scalar> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_scalar_text(item, config));
    if (out.size() != arity)
        throw UsageError("expected " + std::to_string(arity) + " comma-separated coordinates, got '" + text + "'");
    return out;
}

fricke::FrickePoint read_point(const std::string &point, const std::string &input, const RunConfig &config)
{
    if (!point.empty())
    {
        auto c = parse_tuple(point, 4, config);
        return {c[0], c[1], c[2], c[3]};
    }
    if (!input.empty())
    {
        Json j = read_json_file(input);
        return fricke::fricke_point_from_json(j.contains("point") ? j["point"] : j, config.tolerance);
    }
    throw UsageError("a point is required (--point x,y,z,t or --input file)");
}

// ---- y ---------------------------------------------------------------------

struct YArgs
{
    std::string sub, point, input, cover_point, param;
};

Output run_y(const YArgs &a, const RunConfig &config)
{
    Output out;
    if (a.sub == "curves")
    {
        Json curves = Json::array();
        for (const auto &c : fricke::singular_curves())
        {
            Json coords = Json::array();
            for (const auto &p : c.coordinates)
                coords.push_back(algebra::to_json(p));
            Json j = {{"index", c.index}, {"coordinates", coords}};
            if (!a.param.empty())
                j["point"] = fricke::to_json(c.at(parse_scalar_text(a.param, config)));
            curves.push_back(j);
        }
        out.document = {{"isolated_point", fricke::to_json(fricke::FrickePoint{Scalar(-2), Scalar(-2), Scalar(-2), Scalar(0)})},
                        {"curves", curves}};
        out.summary = "singular set: one isolated point and three curves";
        return out;
    }
    if (a.sub == "cover")
    {
        if (a.cover_point.empty())
        {
            using algebra::MultiPoly;
            const auto &vars = fricke::cover_defining_poly().vars();
            MultiPoly u = MultiPoly::variable(vars, 1), v = MultiPoly::variable(vars, 2);
            MultiPoly residual = fricke::y_defining_poly().compose(fricke::cover_map_polys()) +
                                 u * u * v * v * fricke::cover_defining_poly();
            out.document = {{"identity", "F(cover(w,u,v,t)) + u^2 v^2 H(w,u,v,t) = 0"},
                            {"holds", residual.is_zero()},
                            {"residual_terms", residual.terms().size()}};
            out.summary = residual.is_zero() ? "cover identity holds exactly" : "cover identity FAILS";
            return out;
        }
        auto c = parse_tuple(a.cover_point, 4, config);
        fricke::CoverPoint q{c[0], c[1], c[2], c[3]};
        fricke::FrickePoint p = fricke::cover_map(q);
        out.document = {{"cover_point", fricke::to_json(q)},
                        {"image", fricke::to_json(p)},
                        {"H", algebra::to_json(fricke::evaluate_H(q))},
                        {"on_H", fricke::on_H(q)},
                        {"deck_image", fricke::to_json(fricke::deck_involution(q))}};
        out.summary = "cover map evaluated";
        return out;
    }
    fricke::FrickePoint p = read_point(a.point, a.input, config);
    if (a.sub == "check")
    {
        bool on = fricke::on_Y(p);
        out.document = {{"point", fricke::to_json(p)}, {"on_Y", on}, {"F", algebra::to_json(fricke::evaluate_F(p))}};
        out.summary = on ? "point lies on the hypersurface" : "point is off the hypersurface";
    }
    else if (a.sub == "singular")
    {
        bool s = fricke::singular_at(p);
        auto comp = fricke::singular_component(p);
        out.document = {{"point", fricke::to_json(p)}, {"singular", s}, {"component", comp ? Json(*comp) : Json()}};
        out.summary = s ? "singular point" : "smooth point";
    }
    else if (a.sub == "germ")
    {
        out.document = fricke::to_json(fricke::germ_certificate(p));
        out.summary = "germ certificate computed";
    }
    else if (a.sub == "realize")
    {
        ScalarRep rep = fricke::realize_character(p, config.tolerance);
        out.document = sl2::to_json(rep);
        out.document["character"] = fricke::to_json(fricke::character_point(rep));
        out.summary = "representation realized";
    }
    return out;
}

// ---- tangle ----------------------------------------------------------------

struct TangleArgs
{
    std::string sub, diagram, orientation, reps;
};

tangle::Orientation read_orientation(const tangle::TangleDiagram &d, const std::string &text)
{
    if (text.empty())
        return tangle::default_orientation(d);
    tangle::Orientation o;
    for (char ch : text)
    {
        if (ch == '+')
            o.push_back(1);
        else if (ch == '-')
            o.push_back(-1);
        else if (ch != ',' && ch != ' ')
            throw UsageError("orientation is a string of + and - per component");
    }
    if (o.size() != d.components().size())
        throw UsageError("orientation needs one sign per component (" + std::to_string(d.components().size()) + ")");
    return o;
}

Output run_tangle(const TangleArgs &a, const RunConfig &config)
{
    Output out;
    Json file = read_json_file(a.diagram);
    tangle::TangleDiagram d = tangle::diagram_from_json(file);
    tangle::Orientation o = read_orientation(d, a.orientation);
    tangle::MeridianSign s = tangle::assign_signs(d, o);
    if (a.sub == "wirtinger")
    {
        sl2::Presentation p = tangle::wirtinger_presentation(d);
        out.document = sl2::to_json(p);
        int vertex_relators = static_cast<int>(d.vertices().size());
        out.document["vertex_relators"] = vertex_relators;
        out.summary = std::to_string(p.generator_count()) + " generators, " + std::to_string(p.relators().size()) +
                      " relators (" + std::to_string(vertex_relators) + " at vertices)";
    }
    else if (a.sub == "signs")
    {
        Json vertices = Json::array();
        auto balance = tangle::check_sign_balance(d, s);
        for (std::size_t v = 0; v < d.vertices().size(); ++v)
            vertices.push_back({{"id", d.vertices()[v].id},
                                {"signs", tangle::vertex_signs(d, s, static_cast<int>(v))},
                                {"balanced", static_cast<bool>(balance[v])}});
        out.document = {{"orientation", o}, {"arc_signs", s.arc_signs}, {"vertices", vertices}};
        bool all = std::all_of(balance.begin(), balance.end(), [](bool b) { return b; });
        out.summary = all ? "every vertex is balanced" : "unbalanced vertex";
        if (!all)
            out.exit_code = kExitVerdict;
    }
    else if (a.sub == "classify")
    {
        Json vertices = Json::array();
        for (std::size_t v = 0; v < d.vertices().size(); ++v)
            vertices.push_back(
                {{"id", d.vertices()[v].id}, {"type", tangle::classify_vertex_type(d, static_cast<int>(v), o)}});
        out.document = {{"orientation", o}, {"vertices", vertices}};
        out.summary = "vertex types classified";
    }
    else if (a.sub == "lift")
    {
        Json images = a.reps.empty() ? file.value("projective_representation", Json()) : read_json_file(a.reps);
        if (images.is_null())
            throw UsageError("lift needs a projective representation (in the diagram file or --reps)");
        if (images.contains("images"))
            images = images["images"];
        ScalarRep projective = tangle::arc_representation_from_json(d, images, config.tolerance);
        tangle::LiftResult l = tangle::lift_representation(d, projective, s);
        out.document = sl2::to_json(l.representation);
        out.document["flips"] = l.flips;
        out.document["relator_signs"] = sl2::lift_check(l.representation);
        out.summary = "lift found; every relator maps to +I";
    }
    return out;
}

// ---- glue ------------------------------------------------------------------

struct GlueArgs
{
    std::string sub, system, reps;
};

Output run_glue(const GlueArgs &a, const RunConfig &config)
{
    Output out;
    Json file = read_json_file(a.system);
    glue::SplitSystem system = glue::system_from_json(file.contains("system") ? file["system"] : file);
    if (a.sub == "bipartition")
    {
        glue::Bipartition b = glue::bipartition_pieces(system);
        out.document = glue::to_json(b);
        out.document["degrees"] = system.degrees();
        out.summary = std::to_string(b.plus.size()) + " + " + std::to_string(b.minus.size()) + " pieces";
        return out;
    }
    Json reps_json = a.reps.empty() ? file.value("representations", Json()) : read_json_file(a.reps);
    if (reps_json.is_null())
        throw UsageError("representations are required (in the system file or as a second file)");
    if (reps_json.contains("representations"))
        reps_json = reps_json["representations"];
    auto reps = glue::piece_reps_from_json(system, reps_json, config.tolerance);
    if (a.sub == "two" || a.sub == "many")
    {
        glue::GlueResult g = a.sub == "two" ? glue::glue_two(system, reps[0], reps[1]) : glue::glue_many(system, reps);
        out.document = glue::to_json(g);
        out.summary = "glued " + std::to_string(system.pieces().size()) + " pieces";
    }
    else if (a.sub == "report")
    {
        Json interfaces = Json::array();
        for (std::size_t i = 0; i < system.interfaces().size(); ++i)
        {
            const auto &face = system.interfaces()[i];
            int p0 = system.piece_index(face.pieces[0]), p1 = system.piece_index(face.pieces[1]);
            const auto &r0 = reps[static_cast<std::size_t>(p0)];
            const auto &r1 = reps[static_cast<std::size_t>(p1)];
            interfaces.push_back({{"name", face.name},
                                  {"restrictions",
                                   {glue::to_json(glue::restrict_character(r0, face.words[0])),
                                    glue::to_json(glue::restrict_character(r1, face.words[1]))}},
                                  {"match", glue::to_json(glue::match_report(r0, face.words[0], r1, face.words[1]))}});
        }
        out.document = {{"interfaces", interfaces}};
        out.summary = "match reports for " + std::to_string(interfaces.size()) + " interfaces";
    }
    return out;
}

// ---- ideal -----------------------------------------------------------------

struct IdealArgs
{
    std::string sub, curve;
};

ideal::CharacterCurve curve_of(const Json &file, const RunConfig &config, const glue::SplitSystem *system)
{
    if (file.contains("curve"))
        return ideal::curve_from_json(file["curve"], config.truncation);
    if (system && file.contains("representations"))
    {
        auto reps = glue::piece_reps_from_json(*system, file["representations"], config.tolerance);
        return ideal::constant_curve(glue::glue_many(*system, reps).representation, config.truncation);
    }
    if (file.contains("images"))
        return ideal::curve_from_json(file, config.truncation);
    throw UsageError("no curve in the input (expected 'curve', 'images' or a system with representations)");
}

Output run_ideal(const IdealArgs &a, const RunConfig &config)
{
    Output out;
    Json file = read_json_file(a.curve);
    std::optional<glue::SplitSystem> system;
    if (file.contains("system"))
        system = glue::system_from_json(file["system"]);
    ideal::CharacterCurve curve = curve_of(file, config, system ? &*system : nullptr);
    auto words = curve.presentation.generators_and_pairs();
    if (a.sub == "detect")
    {
        ideal::IdealPointReport r = ideal::is_ideal_point(curve, words);
        out.document = {{"ideal_point", r.ideal_point}};
        if (r.witness)
        {
            out.document["witness"] = curve.presentation.format(*r.witness);
            out.document["valuation"] = ideal::valuation_json(*r.valuation);
        }
        out.summary = r.ideal_point ? "trace pole found" : "all listed traces are regular";
    }
    else if (a.sub == "tree")
    {
        Json gens = Json::array();
        for (std::size_t g = 0; g < curve.images.size(); ++g)
            gens.push_back({{"generator", curve.presentation.generators()[g]},
                            {"translation_length", ideal::translation_length(curve.images[g])}});
        auto stabilizer = [&](std::span<const sl2::SeriesMat> ms) {
            ideal::StabilizerReport r = ideal::vertex_stabilizer_check(ms);
            Json j = {{"stabilizes_vertex", r.stabilizes}, {"note", r.note}};
            if (r.vertex)
            {
                j["vertex"] = ideal::to_json(*r.vertex);
                j["distance_from_standard"] = ideal::tree_distance(*r.vertex, ideal::TreeVertex::standard());
            }
            return j;
        };
        out.document = {{"generators", gens}};
        if (system && system->amalgam().generators() == curve.presentation.generators())
        {
            Json pieces = Json::array();
            for (std::size_t p = 0; p < system->pieces().size(); ++p)
            {
                auto gens = system->piece_generators(static_cast<int>(p));
                auto images = sl2::evaluate_all(curve, std::span<const sl2::GroupWord>(gens));
                Json j = stabilizer(images);
                j["name"] = system->pieces()[p].name;
                pieces.push_back(j);
            }
            out.document["pieces"] = pieces;
        }
        else
            out.document["group"] = stabilizer(curve.images);
        out.summary = "tree data computed";
    }
    else if (a.sub == "certificate")
    {
        if (!system)
            throw UsageError("certificate needs a split system in the input file");
        ideal::DualGraphCertificate cert = ideal::dual_graph_certificate(*system, curve);
        out.document = ideal::to_json(cert);
        out.summary = std::string(cert.verdict ? "positive" : "negative") + " certificate: " + cert.reason;
    }
    else if (a.sub == "tangent")
    {
        Json w = file.value("words", Json{{"m", "m"}, {"l", "l"}, {"lm", "l m"}});
        auto tr = [&](const std::string &text) {
            return sl2::word_eval(curve, curve.presentation.parse_word(text)).trace();
        };
        Scalar m_std = ideal::cusp_tangent_direction(tr(w.at("m")), tr(w.at("l")), ideal::TangentMode::Standard);
        out.document = {{"standard", algebra::to_json(m_std)}};
        if (w.contains("lm"))
        {
            Scalar m_shift =
                ideal::cusp_tangent_direction(tr(w.at("m")), tr(w.at("lm")), ideal::TangentMode::Shifted);
            Scalar gap = m_shift - m_std - Scalar(1);
            out.document["shifted"] = algebra::to_json(m_shift);
            out.document["consistent"] = gap * gap == Scalar(4) * m_std;
        }
        if (file.contains("tau"))
            out.document["tau"] = file["tau"];
        out.summary = "tangent directions computed";
    }
    else if (a.sub == "irr-family")
    {
        ideal::IrreducibilityReport r = ideal::irreducibility_report(curve);
        out.document = ideal::to_json(r);
        if (!r.irreducible)
        {
            out.document = {{"error", std::string(error_name(ErrorCode::ReducibleToOrder))},
                            {"message", "every tested commutator trace is 2 to the known order"},
                            {"report", out.document}};
            out.exit_code = kExitVerdict;
            out.summary = "reducible to the known order";
        }
        else
            out.summary = "irreducible from order " + r.order->get_str();
    }
    return out;
}

// ---- sweep / fixtures ------------------------------------------------------

Output run_sweep_cmd(const std::string &property, int count, const RunConfig &config)
{
    Output out;
    auto start = std::chrono::steady_clock::now();
    if (property == "all")
    {
        out.document = cli::run_full_suite(config);
        out.exit_code = out.document["ok"].get<bool>() ? kExitOk : kExitVerdict;
        out.summary = out.document["ok"].get<bool>() ? "all sweeps pass" : "some sweep FAILED";
    }
    else
    {
        cli::SweepResult r = cli::run_sweep(property, count > 0 ? count : cli::default_count(property), config);
        out.document = cli::to_json(r);
        out.document["config"] = cli::to_json(config);
        out.exit_code = r.ok() ? kExitOk : kExitVerdict;
        out.summary = property + ": " + std::to_string(r.passed) + "/" + std::to_string(r.samples) + " pass";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    out.summary += " (" + std::to_string(ms) + " ms)";
    return out;
}

Output run_fixtures(const std::string &dir)
{
    Output out;
    std::filesystem::create_directories(dir);
    Json written = Json::array();
    for (const auto &[name, content] : fixtures::generated_fixtures())
    {
        std::filesystem::path path = std::filesystem::path(dir) / name;
        std::ofstream f(path);
        f << content.dump(2) << "\n";
        written.push_back(path.string());
    }
    out.document = {{"written", written}};
    out.summary = "wrote " + std::to_string(written.size()) + " fixture files to " + dir;
    return out;
}

Json error_json(const Error &e, const RunConfig &config)
{
    Json j = {{"error", std::string(error_name(e.code()))}, {"message", e.what()}};
    if (e.code() == ErrorCode::InconclusiveTruncation)
        j["suggested_truncation"] = 2 * config.truncation;
    return j;
}

int emit(const Output &out, const RunConfig &config)
{
    std::string text = out.document.dump(2);
    std::cout << text << "\n";
    if (!config.out.empty())
    {
        std::ofstream f(config.out);
        f << text << "\n";
    }
    if (!out.summary.empty())
        std::cerr << out.summary << "\n";
    return out.exit_code;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Character varieties of four-punctured-sphere groups, Conway-sphere gluing and ideal points"};
    app.require_subcommand(1);
    RunConfig config;
    std::string field = "exact-gaussian";
    app.add_option("--field", field, "exact-rational | exact-gaussian | float")->capture_default_str();
    app.add_option("--tol", config.tolerance, "relative tolerance of float mode")->capture_default_str();
    app.add_option("--trunc", config.truncation, "series truncation order")->capture_default_str();
    app.add_option("--seed", config.seed, "seed of every random choice")->capture_default_str();
    app.add_option("--out", config.out, "also write the JSON document to this file");

    YArgs y;
    CLI::App *ycmd = app.add_subcommand("y", "the hypersurface of equal-trace characters");
    ycmd->add_option("sub", y.sub, "check | singular | curves | cover | germ | realize")
        ->required()
        ->check(CLI::IsMember({"check", "singular", "curves", "cover", "germ", "realize"}));
    ycmd->add_option("--point", y.point, "x,y,z,t (rationals, or a+bi)");
    ycmd->add_option("--input", y.input, "JSON file with a point {x, y, z, t}");
    ycmd->add_option("--cover-point", y.cover_point, "w,u,v,t for 'cover'");
    ycmd->add_option("--param", y.param, "curve parameter for 'curves'");

    TangleArgs t;
    CLI::App *tcmd = app.add_subcommand("tangle", "Wirtinger presentations and meridian signs");
    tcmd->add_option("sub", t.sub, "wirtinger | signs | classify | lift")
        ->required()
        ->check(CLI::IsMember({"wirtinger", "signs", "classify", "lift"}));
    tcmd->add_option("diagram", t.diagram, "diagram JSON file")->required();
    tcmd->add_option("--orientation", t.orientation, "one + or - per component");
    tcmd->add_option("--reps", t.reps, "projective images per arc (default: from the diagram file)");

    GlueArgs g;
    CLI::App *gcmd = app.add_subcommand("glue", "restriction, gluing and match reports along Conway spheres");
    gcmd->add_option("sub", g.sub, "two | many | report | bipartition")
        ->required()
        ->check(CLI::IsMember({"two", "many", "report", "bipartition"}));
    gcmd->add_option("system", g.system, "split system JSON (may also hold the representations)")->required();
    gcmd->add_option("reps", g.reps, "per-piece representations JSON");

    IdealArgs i;
    CLI::App *icmd = app.add_subcommand("ideal", "valuations, trees and certificates along a curve");
    icmd->add_option("sub", i.sub, "detect | tree | certificate | tangent | irr-family")
        ->required()
        ->check(CLI::IsMember({"detect", "tree", "certificate", "tangent", "irr-family"}));
    icmd->add_option("curve", i.curve, "curve JSON file")->required();

    std::string property;
    int count = 0;
    CLI::App *scmd = app.add_subcommand("sweep", "run a seeded property sweep");
    scmd->add_option("property", property, "property name, or 'all'")->required();
    scmd->add_option("count", count, "number of samples (default per property)");

    std::string fixture_dir = "fixtures";
    CLI::App *fcmd = app.add_subcommand("fixtures", "write the generated fixture files");
    fcmd->add_option("--dir", fixture_dir, "target directory")->capture_default_str();

    CLI::App *lcmd = app.add_subcommand("properties", "list sweep properties");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try
    {
        config.field = cli::parse_field(field);
        Output out;
        if (*ycmd)
            out = run_y(y, config);
        else if (*tcmd)
            out = run_tangle(t, config);
        else if (*gcmd)
            out = run_glue(g, config);
        else if (*icmd)
            out = run_ideal(i, config);
        else if (*scmd)
            out = run_sweep_cmd(property, count, config);
        else if (*fcmd)
            out = run_fixtures(fixture_dir);
        else if (*lcmd)
            out.document = {{"properties", cli::sweep_properties()}};
        return emit(out, config);
    }
    catch (const UsageError &e)
    {
        std::cout << Json{{"error", "USAGE"}, {"message", e.what()}}.dump(2) << "\n";
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const Error &e)
    {
        Json j = error_json(e, config);
        bool usage = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownProperty;
        int code = e.code() == ErrorCode::InconclusiveTruncation ? kExitInconclusive : usage ? kExitUsage : kExitVerdict;
        emit({j, code, std::string(error_name(e.code())) + ": " + e.what()}, config);
        return code;
    }
    catch (const Json::exception &e)
    {
        std::cout << Json{{"error", "USAGE"}, {"message", std::string("malformed JSON input: ") + e.what()}}.dump(2)
                  << "\n";
        std::cerr << "malformed JSON input: " << e.what() << "\n";
        return kExitUsage;
    }
}
