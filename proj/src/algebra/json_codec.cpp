#include "conway/algebra/json_codec.hpp"

#include <cstdio>

#include "conway/error.hpp"

namespace conway::algebra
{

namespace
{

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string &s)
{
    try
    {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size())
            fail(ErrorCode::ParseError, "bad float literal '" + s + "'");
        return v;
    }
    catch (const std::logic_error &)
    {
        fail(ErrorCode::ParseError, "bad float literal '" + s + "'");
    }
}

std::string part_string(const Json &j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    if (j.is_number())
        return format_double(j.get<double>());
    fail(ErrorCode::ParseError, "scalar part must be a string or number");
}

} // namespace

Json to_json(const Scalar &s)
{
    if (s.is_exact())
        return Json{{"re", s.re().get_str()}, {"im", s.im().get_str()}, {"kind", "rat"}};
    auto z = s.to_complex();
    return Json{{"re", format_double(z.real())}, {"im", format_double(z.imag())}, {"kind", "f64"}};
}

Scalar scalar_from_json(const Json &j, double tolerance)
{
    if (j.is_number_integer())
        return Scalar(static_cast<long>(j.get<long long>()));
    if (j.is_number())
        return Scalar::from_complex({j.get<double>(), 0.0}, tolerance);
    if (j.is_string())
        return Scalar(Scalar::parse_rational(j.get<std::string>()));
    if (!j.is_object() || !j.contains("re"))
        fail(ErrorCode::ParseError, "scalar must be an object with 're', a number, or a string");
    std::string kind = j.value("kind", "rat");
    std::string re = part_string(j.at("re"));
    std::string im = j.contains("im") ? part_string(j.at("im")) : "0";
    if (kind == "rat")
        return Scalar(Scalar::parse_rational(re), Scalar::parse_rational(im));
    if (kind == "f64")
        return Scalar::from_complex({parse_double(re), parse_double(im)}, tolerance);
    fail(ErrorCode::ParseError, "unknown scalar kind '" + kind + "'");
}

Json to_json(const MultiPoly &p)
{
    Json terms = Json::array();
    for (const auto &[e, c] : p.terms())
        terms.push_back(Json{{"exps", e}, {"coeff", to_json(c)}});
    return Json{{"vars", p.vars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json &j, double tolerance)
{
    MultiPoly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto &t : j.at("terms"))
        p.add_term(t.at("exps").get<std::vector<int>>(), scalar_from_json(t.at("coeff"), tolerance));
    return p;
}

Json to_json(const Series &s)
{
    Json terms = Json::array();
    for (std::size_t i = 0; i < s.coefficients().size(); ++i)
    {
        if (s.coefficients()[i].is_zero())
            continue;
        terms.push_back(Json{{"ord", s.valuation() + static_cast<int>(i)}, {"coeff", to_json(s.coefficients()[i])}});
    }
    Json out{{"ram", s.ramification()}, {"terms", terms}};
    if (!s.is_exact())
        out["order"] = s.order();
    return out;
}

Series series_from_json(const Json &j, int truncation, double tolerance)
{
    if (!j.is_object())
        return Series(scalar_from_json(j, tolerance)).with_truncation(truncation);
    int ram = j.value("ram", 1);
    int order = Series::kInfinite;
    if (j.contains("order") && !j.at("order").is_null())
        order = j.at("order").get<int>();
    Series acc = Series::big_o(order, ram).with_truncation(truncation);
    for (const auto &t : j.at("terms"))
    {
        int ord = t.at("ord").get<int>();
        acc += Series::monomial(scalar_from_json(t.at("coeff"), tolerance), ord, ram);
    }
    return acc.with_truncation(truncation);
}

} // namespace conway::algebra
