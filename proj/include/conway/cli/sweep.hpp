#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conway/algebra/json_codec.hpp"

// Seeded property sweeps shared by the command-line tool and the acceptance
// driver.
namespace conway::cli
{

using algebra::Json;

enum class FieldMode
{
    ExactRational,
    ExactGaussian,
    Float,
};

FieldMode parse_field(const std::string &name);
std::string field_name(FieldMode mode);

struct RunConfig
{
    FieldMode field = FieldMode::ExactGaussian;
    double tolerance = algebra::kDefaultTolerance;
    int truncation = algebra::kDefaultTruncation;
    std::uint64_t seed = 20240601;
    // Empty: the JSON goes to stdout only.
    std::string out;
};

Json to_json(const RunConfig &c);

struct SweepResult
{
    std::string property;
    int samples = 0;
    int passed = 0;
    // Bounded list of failing samples with their inputs.
    Json counterexamples = Json::array();
    // Property-specific figures (worst residual in float mode, orders found).
    Json notes = Json::object();

    bool ok() const noexcept { return samples > 0 && passed == samples; }
};

Json to_json(const SweepResult &r);

std::vector<std::string> sweep_properties();
// Throws UnknownProperty. Each property draws from its own sampler seeded
// from the configuration seed and the property name, so results do not
// depend on which other sweeps ran.
SweepResult run_sweep(const std::string &property, int count, const RunConfig &config);

// Every property with its default count, logged together.
Json run_full_suite(const RunConfig &config);
int default_count(const std::string &property);

} // namespace conway::cli
