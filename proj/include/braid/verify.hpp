#pragma once

#include <string>
#include <vector>

#include "braid/braids.hpp"

namespace braid::verify {

struct Options {
  int n = 4;
  int m = 2;
  std::uint64_t seed = 0;
  int trials = 200;
  int max_len = 10;
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Runs one named property suite; failures carry a one-line description.
RelationReport run_suite(const std::string& name, const Options& opt);

}  // namespace braid::verify
