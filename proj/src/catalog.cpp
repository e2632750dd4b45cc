#include "gg/catalog.hpp"

namespace gg {

const std::vector<std::string>& builtin_catalog_specs() {
  static const std::vector<std::string> specs = {
      "C1",          "C2",          "C3",          "C4",          "C5",
      "C6",          "C7",          "C8",          "C9",          "C10",
      "C11",         "C12",         "C13",         "C14",         "C15",
      "C16",         "EA(2,2)",     "EA(2,3)",     "D3",          "D4",
      "D5",          "D6",          "D7",          "D8",          "Q8",
      "Q16",         "Q32",         "S3",          "S4",          "S5",
      "A4",          "A5",          "SL(2,3)",     "Heis(3)",     "Heis(5)",
      "SNNC(2,2,1)", "SNNC(2,2,2)", "SNNC(3,1,1)", "SNNC(3,2,1)", "SNNC(5,1,1)",
      "x(Q8,C2)",    "x(Q8,C3)",    "x(D4,C2)",
  };
  return specs;
}

std::vector<GroupSpec> builtin_catalog() {
  std::vector<GroupSpec> out;
  out.reserve(builtin_catalog_specs().size());
  for (const auto& s : builtin_catalog_specs()) out.push_back(parse_spec(s));
  return out;
}

}  // namespace gg
