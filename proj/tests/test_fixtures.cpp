#include <doctest.h>

#include <filesystem>

#include "conway/fixtures/fixtures.hpp"
#include "helpers.hpp"

using namespace conway;
using conway::testing::fixture_path;
using conway::testing::load_fixture;

TEST_CASE("shipped fixture files match the generators")
{
    auto generated = fixtures::generated_fixtures();
    REQUIRE(!generated.empty());
    for (const auto &[name, content] : generated)
    {
        CAPTURE(name);
        CHECK(load_fixture(name) == content);
    }
}

TEST_CASE("every shipped fixture file has a generator")
{
    auto generated = fixtures::generated_fixtures();
    for (const auto &entry : std::filesystem::directory_iterator(fixture_path("")))
    {
        if (entry.path().extension() != ".json")
            continue;
        CAPTURE(entry.path().filename().string());
        CHECK(generated.count(entry.path().filename().string()) == 1);
    }
}
