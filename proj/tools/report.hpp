#pragma once

#include "rankone/groups.hpp"
#include "rankone/ktypes.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace rankone::cli {

using json = nlohmann::json;

struct Options {
    std::uint64_t seed = 1;
    int depth = 4;
    double tolerance = 1e-5;
};

json cmd_structure(const GroupFamily& g);
json cmd_exceptional(const GroupFamily& g, int count);
json cmd_socle(const GroupFamily& g, int ell);
json cmd_tensor(const GroupFamily& g, const KTypeLabel& label);
json cmd_scalars(const GroupFamily& g, const KTypeLabel& V, const KTypeLabel& Y, const Rational& mu);
/// suite: all, groups, tensor, spherical, scalars, so-model.
json cmd_verify(const std::string& suite, const Options& opt);

/// No check in the report has status "fail".
bool passed(const json& report);
std::string to_csv(const json& report);

}  // namespace rankone::cli
