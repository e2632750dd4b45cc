#pragma once

#include <string>
#include <vector>

#include "gg/families.hpp"

namespace gg {

/// Built-in catalog specs, chosen so every equivalence check has both a
/// satisfying and a violating instance where that is possible.
const std::vector<std::string>& builtin_catalog_specs();
std::vector<GroupSpec> builtin_catalog();

}  // namespace gg
