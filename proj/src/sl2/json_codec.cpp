#include "conway/sl2/json_codec.hpp"

#include "conway/error.hpp"

namespace conway::sl2
{

namespace
{

template <class T, class Read>
Mat2<T> mat_from_json(const Json &j, Read read)
{
    if (!j.is_array() || j.size() != 4)
        fail(ErrorCode::ParseError, "a matrix is a row-major array of four entries");
    return {read(j[0]), read(j[1]), read(j[2]), read(j[3])};
}

template <class T>
Json rep_to_json(const Representation<T> &rep)
{
    Json images = Json::object();
    const auto &names = rep.presentation.generators();
    for (std::size_t i = 0; i < names.size(); ++i)
        images[names[i]] = to_json(rep.images[i]);
    return {{"presentation", to_json(rep.presentation)}, {"images", images}};
}

template <class T, class Read>
Representation<T> rep_from_json(const Json &j, Read read)
{
    if (!j.is_object() || !j.contains("presentation") || !j.contains("images"))
        fail(ErrorCode::ParseError, "a representation needs \"presentation\" and \"images\"");
    Presentation p = presentation_from_json(j.at("presentation"));
    const Json &images = j.at("images");
    std::vector<Mat2<T>> mats;
    for (const auto &name : p.generators())
    {
        if (!images.contains(name))
            fail(ErrorCode::ParseError, "no image for generator '" + name + "'");
        mats.push_back(mat_from_json<T>(images.at(name), read));
    }
    return Representation<T>(std::move(p), std::move(mats));
}

} // namespace

Json to_json(const ScalarMat &m)
{
    return Json::array({algebra::to_json(m.a), algebra::to_json(m.b), algebra::to_json(m.c), algebra::to_json(m.d)});
}

Json to_json(const SeriesMat &m)
{
    return Json::array({algebra::to_json(m.a), algebra::to_json(m.b), algebra::to_json(m.c), algebra::to_json(m.d)});
}

ScalarMat scalar_mat_from_json(const Json &j, double tolerance)
{
    return mat_from_json<Scalar>(j, [&](const Json &e) { return algebra::scalar_from_json(e, tolerance); });
}

SeriesMat series_mat_from_json(const Json &j, int truncation, double tolerance)
{
    return mat_from_json<algebra::Series>(
        j, [&](const Json &e) { return algebra::series_from_json(e, truncation, tolerance); });
}

Json to_json(const Presentation &p)
{
    Json rels = Json::array();
    for (const auto &r : p.relators())
        rels.push_back(p.format(r));
    Json marks = Json::object();
    for (const auto &[name, words] : p.peripheral())
    {
        Json list = Json::array();
        for (const auto &w : words)
            list.push_back(p.format(w));
        marks[name] = list;
    }
    return {{"generators", p.generators()}, {"relators", rels}, {"peripheral", marks}};
}

Presentation presentation_from_json(const Json &j)
{
    if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_array())
        fail(ErrorCode::ParseError, "a presentation needs a \"generators\" array");
    Presentation p(j.at("generators").get<std::vector<std::string>>());
    if (j.contains("relators"))
        for (const auto &r : j.at("relators"))
            p.add_relator(p.parse_word(r.get<std::string>()));
    if (j.contains("peripheral"))
        for (const auto &[name, words] : j.at("peripheral").items())
        {
            std::vector<GroupWord> list;
            for (const auto &w : words)
                list.push_back(p.parse_word(w.get<std::string>()));
            p.set_peripheral(name, std::move(list));
        }
    return p;
}

Json to_json(const ScalarRep &rep)
{
    return rep_to_json(rep);
}

Json to_json(const SeriesRep &rep)
{
    return rep_to_json(rep);
}

ScalarRep scalar_rep_from_json(const Json &j, double tolerance)
{
    return rep_from_json<Scalar>(j, [&](const Json &e) { return algebra::scalar_from_json(e, tolerance); });
}

SeriesRep series_rep_from_json(const Json &j, int truncation, double tolerance)
{
    return rep_from_json<algebra::Series>(
        j, [&](const Json &e) { return algebra::series_from_json(e, truncation, tolerance); });
}

} // namespace conway::sl2
