#include <doctest.h>

#include <set>

#include "conway/fricke/fricke.hpp"
#include "conway/tangle/tangle.hpp"
#include "helpers.hpp"

using namespace conway;
using namespace conway::tangle;
using conway::testing::code_of;
using conway::testing::load_fixture;
using algebra::Scalar;
using sl2::ScalarMat;

namespace
{

const Scalar I = Scalar::imaginary_unit();
const ScalarMat J{I, Scalar(0), Scalar(0), -I};

TangleDiagram trivial()
{
    return diagram_from_json(load_fixture("trivial_tangle.json"));
}

TangleDiagram circle_tangle()
{
    return diagram_from_json(load_fixture("vertical_arcs_circle_tangle.json"));
}

ScalarRep model_rep(const std::string &fixture)
{
    Json j = load_fixture(fixture);
    return arc_representation_from_json(diagram_from_json(j), j.at("projective_representation"));
}

std::array<int, 4> flipped(std::array<int, 4> s, int i, int j)
{
    s[static_cast<std::size_t>(i)] = -s[static_cast<std::size_t>(i)];
    s[static_cast<std::size_t>(j)] = -s[static_cast<std::size_t>(j)];
    return s;
}

fricke::FrickePoint signed_quadruple_character(const std::array<int, 4> &s)
{
    std::vector<ScalarMat> m;
    for (int e : s)
        m.push_back(Scalar(e) * J);
    return fricke::character_point(ScalarRep(sl2::four_punctured_sphere(), m));
}

fricke::FrickePoint type_point(const std::array<int, 3> &t)
{
    return {Scalar(t[0]), Scalar(t[1]), Scalar(t[2]), Scalar(0)};
}

} // namespace

TEST_CASE("wirtinger_presentation: the vertical-arcs-and-circle tangle")
{
    TangleDiagram d = circle_tangle();
    CHECK(d.components().size() == 3);
    sl2::Presentation p = wirtinger_presentation(d);
    CHECK(p.generator_count() == 6);
    // four crossing relators (two of them from the circle passing under)
    // and one vertex relator
    CHECK(p.relators().size() == 5);
    CHECK(p.format(p.relators()[4]) == "P1^-1 Q1^-1 Q2 P2");
    CHECK(p.peripheral().at("vertex:C").size() == 4);
    CHECK(p.format(p.relators()[2]) == "K2^-1 Q1^-1 K1 Q1");
}

TEST_CASE("wirtinger_presentation: trivial tangle and empty diagram")
{
    sl2::Presentation p = wirtinger_presentation(trivial());
    CHECK(p.generator_count() == 2);
    REQUIRE(p.relators().size() == 1);
    // mu1 mu2 mu3 mu4 with mu1 = mu4^-1 and mu2 = mu3^-1 reduces to 1
    CHECK(p.relators()[0].empty());
    const auto &mer = p.peripheral().at("vertex:C");
    CHECK(mer[0] == mer[3].inverse());
    CHECK(mer[1] == mer[2].inverse());

    sl2::Presentation e = wirtinger_presentation(TangleDiagram());
    CHECK(e.generator_count() == 0);
    CHECK(e.relators().empty());
    CHECK(wirtinger_presentation(diagram_from_json(Json::object())).generator_count() == 0);
}

TEST_CASE("wirtinger_presentation: malformed diagrams are refused")
{
    Json base = load_fixture("trivial_tangle.json");
    Json twice = base;
    twice["vertices"][0]["ends"][1] = "A.head";
    CHECK(code_of([&] { (void)diagram_from_json(twice); }) == ErrorCode::MalformedDiagram);

    Json three = base;
    three["vertices"][0]["ends"].erase(3);
    CHECK(code_of([&] { (void)diagram_from_json(three); }) == ErrorCode::MalformedDiagram);

    Json missing = base;
    missing["arcs"].push_back({{"id", "C"}, {"component", "C"}});
    CHECK(code_of([&] { (void)diagram_from_json(missing); }) == ErrorCode::MalformedDiagram);

    Json unknown = base;
    unknown["vertices"][0]["ends"][0] = "Z.head";
    CHECK(code_of([&] { (void)diagram_from_json(unknown); }) == ErrorCode::MalformedDiagram);

    // strand A enters twice: in minus out is not zero at the vertex
    Json net = Json::parse(R"({"arcs": [{"id": "A"}, {"id": "B"}],
        "vertices": [{"ends": ["A.head", "B.tail", "A.tail", "B.head"]},
                     {"ends": ["A.head", "B.head", "A.tail", "B.tail"]}]})");
    CHECK(code_of([&] { (void)diagram_from_json(net); }) == ErrorCode::MalformedDiagram);
    // Two spheres joined by four strands; inside each ball A continues as C
    // and B as D, so each link component crosses each sphere algebraically
    // zero times.
    Json ok = Json::parse(R"({"arcs": [{"id": "A", "component": "X"}, {"id": "B", "component": "Y"},
        {"id": "C", "component": "X"}, {"id": "D", "component": "Y"}],
        "vertices": [{"ends": ["A.head", "B.head", "C.tail", "D.tail"]},
                     {"ends": ["A.tail", "B.tail", "C.head", "D.head"]}]})");
    CHECK(diagram_from_json(ok).vertices().size() == 2);
    // with every arc its own component, A would cross the first sphere once
    Json unlabelled = ok;
    for (auto &a : unlabelled["arcs"])
        a.erase("component");
    CHECK(code_of([&] { (void)diagram_from_json(unlabelled); }) == ErrorCode::MalformedDiagram);
    Json bad = Json::parse(R"({"arcs": [{"id": "A"}, {"id": "B"}, {"id": "C"}, {"id": "D"}],
        "vertices": [{"ends": ["A.head", "B.head", "C.head", "D.tail"]},
                     {"ends": ["A.tail", "B.tail", "C.tail", "D.head"]}]})");
    CHECK(code_of([&] { (void)diagram_from_json(bad); }) == ErrorCode::MalformedDiagram);
}

TEST_CASE("tangle json: round trip")
{
    TangleDiagram d = circle_tangle();
    TangleDiagram e = diagram_from_json(to_json(d));
    CHECK(to_json(e) == to_json(d));
    CHECK(wirtinger_presentation(e).relators() == wirtinger_presentation(d).relators());
}

TEST_CASE("assign_signs: examples")
{
    TangleDiagram d = circle_tangle();
    MeridianSign s = assign_signs(d, default_orientation(d));
    Orientation o = default_orientation(d);
    o[0] = -1;
    MeridianSign r = assign_signs(d, o);
    for (std::size_t a = 0; a < d.arcs().size(); ++a)
    {
        if (d.component_of(static_cast<int>(a)) == 0)
            CHECK(r.arc_signs[a] == -s.arc_signs[a]);
        else
            CHECK(r.arc_signs[a] == s.arc_signs[a]);
    }

    Json in = Json::parse(R"({"arcs": [{"id": "A"}, {"id": "B"}],
        "vertices": [{"ends": ["A.head", "B.head", "A.tail", "B.tail"]}]})");
    TangleDiagram e = diagram_from_json(in);
    CHECK(vertex_signs(e, assign_signs(e, default_orientation(e)), 0) == std::array<int, 4>{1, 1, -1, -1});

    Json circle = Json::parse(R"({"arcs": [{"id": "K", "closed": true}]})");
    TangleDiagram c = diagram_from_json(circle);
    CHECK(assign_signs(c, default_orientation(c)).arc_signs == std::vector<int>{1});
}

TEST_CASE("check_sign_balance: examples")
{
    CHECK(sign_balanced({1, -1, 1, -1}));
    CHECK_FALSE(sign_balanced({1, 1, 1, -1}));
    CHECK_FALSE(sign_balanced({1, 1, 1, 1}));
    TangleDiagram d = trivial();
    CHECK(check_sign_balance(d, assign_signs(d, default_orientation(d))) == std::vector<bool>{true});
    MeridianSign forced{{1, -1}};
    // A enters, B enters, B leaves with sign +1, A leaves with sign -1
    CHECK(vertex_signs(d, forced, 0) == std::array<int, 4>{1, -1, 1, -1});
}

TEST_CASE("classify_vertex_type: examples")
{
    CHECK(vertex_type({1, 1, -1, -1}) == std::array<int, 3>{-2, 2, 2});
    CHECK(vertex_type({1, -1, 1, -1}) == std::array<int, 3>{2, -2, 2});
    CHECK(vertex_type({1, -1, -1, 1}) == std::array<int, 3>{2, 2, -2});
    CHECK(code_of([] { (void)vertex_type({1, 1, 1, -1}); }) == ErrorCode::Unbalanced);
    CHECK(code_of([] { (void)vertex_type({1, 1, 1, 1}); }) == ErrorCode::Unbalanced);
    TangleDiagram d = circle_tangle();
    CHECK(classify_vertex_type(d, 0, default_orientation(d)) == std::array<int, 3>{-2, 2, 2});
    Orientation o = default_orientation(d);
    o[d.arcs()[0].component == "P" ? 0 : 1] = -1;
    CHECK(classify_vertex_type(d, 0, o) != std::array<int, 3>{-2, 2, 2});
}

TEST_CASE("classify_vertex_type agrees with the character of the signed diagonal quadruple")
{
    for (const auto &s : {std::array<int, 4>{1, 1, -1, -1}, std::array<int, 4>{1, -1, 1, -1},
                          std::array<int, 4>{-1, 1, 1, -1}})
        CHECK(signed_quadruple_character(s) == type_point(vertex_type(s)));
}

TEST_CASE("lift_representation: diagonal model on a balanced vertex")
{
    TangleDiagram d = trivial();
    LiftResult l = lift_representation(d, model_rep("trivial_tangle.json"), assign_signs(d, default_orientation(d)));
    CHECK(sl2::lift_check(l.representation) == std::vector<int>{1});
    CHECK(sl2::word_eval(l.representation, l.representation.presentation.relators()[0]).is_identity());
    CHECK(l.constrained_vertices == std::vector<int>{0});
}

TEST_CASE("lift_representation: flipping two meridians moves the vertex type")
{
    std::array<int, 4> base{1, 1, -1, -1};
    REQUIRE(signed_quadruple_character(base) == type_point({-2, 2, 2}));
    std::set<std::array<std::string, 3>> reached;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
        {
            auto s = flipped(base, i, j);
            fricke::FrickePoint p = signed_quadruple_character(s);
            CHECK(fricke::on_Y(p));
            CHECK(p.t.is_zero());
            bool distinguished = p == type_point({2, -2, 2}) || p == type_point({2, 2, -2}) ||
                                 p == type_point({-2, -2, -2});
            CHECK(distinguished);
            reached.insert({p.x.to_string(), p.y.to_string(), p.z.to_string()});
        }
    CHECK(reached.size() == 3);
}

TEST_CASE("lift_representation: trivial projective representation")
{
    TangleDiagram d = circle_tangle();
    ScalarRep triv(wirtinger_presentation(d), std::vector<ScalarMat>(d.arcs().size(), ScalarMat::identity()));
    LiftResult l = lift_representation(d, triv, assign_signs(d, default_orientation(d)));
    for (const auto &m : l.representation.images)
        CHECK(m.is_identity());
    CHECK(l.flips == std::vector<int>(6, 1));
}

TEST_CASE("lift_representation: refusals")
{
    TangleDiagram d = circle_tangle();
    ScalarRep rho = model_rep("vertical_arcs_circle_tangle.json");
    // signs that are not constant along P contradict the crossing with K
    MeridianSign bad = assign_signs(d, default_orientation(d));
    bad.arc_signs[static_cast<std::size_t>(d.arc_index("P2"))] *= -1;
    CHECK(code_of([&] { (void)lift_representation(d, rho, bad); }) == ErrorCode::LiftObstructed);

    ScalarRep twisted = rho;
    twisted.images[static_cast<std::size_t>(d.arc_index("K1"))] = {Scalar(0), Scalar(1), Scalar(-1), Scalar(0)};
    CHECK(code_of([&] { (void)lift_representation(d, twisted, assign_signs(d, default_orientation(d))); }) ==
          ErrorCode::NotCentral);
}

TEST_CASE("property: abelianization is free of rank the number of components")
{
    for (const auto &d : {trivial(), circle_tangle()})
    {
        auto factors = abelianization(wirtinger_presentation(d));
        CHECK(factors.size() == d.components().size());
        for (long f : factors)
            CHECK(f == 0);
    }
}

TEST_CASE("property: signs balance and lifts succeed for every orientation")
{
    for (const char *name : {"trivial_tangle.json", "vertical_arcs_circle_tangle.json"})
    {
        TangleDiagram d = diagram_from_json(load_fixture(name));
        ScalarRep rho = model_rep(name);
        for (const auto &o : all_orientations(d))
        {
            MeridianSign s = assign_signs(d, o);
            for (bool ok : check_sign_balance(d, s))
                REQUIRE(ok);
            LiftResult l = lift_representation(d, rho, s);
            for (int sign : sl2::lift_check(l.representation))
                REQUIRE(sign == 1);
            for (std::size_t v = 0; v < d.vertices().size(); ++v)
            {
                auto type = classify_vertex_type(d, static_cast<int>(v), o);
                REQUIRE(type != std::array<int, 3>{-2, -2, -2});
                // the lifted meridians realize the predicted pattern
                std::vector<ScalarMat> mer =
                    sl2::evaluate_all(l.representation, std::span(l.representation.presentation.peripheral().at(
                                                            "vertex:" + d.vertices()[v].id)));
                REQUIRE(fricke::character_point(ScalarRep(sl2::four_punctured_sphere(), mer)) == type_point(type));
            }
        }
    }
}

TEST_CASE("property: vertex type is invariant under reversing every component")
{
    for (const auto &d : {trivial(), circle_tangle()})
        for (const auto &o : all_orientations(d))
        {
            Orientation rev = o;
            for (int &x : rev)
                x = -x;
            for (std::size_t v = 0; v < d.vertices().size(); ++v)
                REQUIRE(classify_vertex_type(d, static_cast<int>(v), o) ==
                        classify_vertex_type(d, static_cast<int>(v), rev));
        }
}
