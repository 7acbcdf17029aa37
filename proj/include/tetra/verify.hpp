#pragma once

// Invariant batteries for each module, as used by `verify`.

#include "tetra/group.hpp"
#include "tetra/json.hpp"
#include "tetra/padic.hpp"

#include <string>
#include <vector>

namespace tetra::verify {

struct Check {
  std::string name;
  bool passed = false;
  std::string details;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  double runtime_ms = 0;

  bool passed() const;
};

struct Options {
  group::FamilyParams params = group::FamilyParams::family(Rational(1, 16));
  int radius = 4;
  int precision = kDefaultPrecision;
};

// "lattice", "coxeter", "group", "quaternion", "tree", "game"
const std::vector<std::string>& suite_names();

// Unknown suite -> DomainError. "all" runs every suite concurrently and
// concatenates the checks in suite order.
Report run_suite(const std::string& suite, const Options& options = {});

void to_json(Json& j, const Report& r);

}  // namespace tetra::verify
