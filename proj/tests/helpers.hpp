#pragma once

#include <doctest.h>

#include <fstream>
#include <functional>
#include <string>

#include "conway/algebra/json_codec.hpp"
#include "conway/error.hpp"

namespace conway::testing
{

inline ErrorCode code_of(const std::function<void()> &f)
{
    try
    {
        f();
    }
    catch (const Error &e)
    {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

inline std::string fixture_path(const std::string &name)
{
    return std::string(CONWAY_FIXTURE_DIR) + "/" + name;
}

inline algebra::Json load_fixture(const std::string &name)
{
    std::ifstream in(fixture_path(name));
    REQUIRE_MESSAGE(in.good(), "missing fixture " << name);
    return algebra::Json::parse(in);
}

} // namespace conway::testing
