#pragma once

#include <string>
#include <vector>

#include "polybernoulli/bijections.hpp"
#include "polybernoulli/families.hpp"

namespace polybernoulli {

/// Calls back with every well-formed GammaCode for an n x k matrix, in a
/// deterministic order. This is the code-space side of the main bijection;
/// the number of callbacks equals B_n^(-k).
void for_each_gamma_code(int n, int k,
                         const std::function<void(const GammaCode&)>& visit);

/// Result of one verification check. The deterministic fields (everything
/// except seconds) fully describe the outcome; a failing report carries an
/// independently re-checkable witness.
struct CheckReport {
  std::string name;
  std::string range;
  bool passed = false;
  std::string witness;                // counterexample serialization, empty on pass
  std::vector<std::string> details;   // deterministic informational lines
  double seconds = 0.0;
};

struct CheckOptions {
  int max_size = -1;  // -1 selects the per-check default
  EnumerationGuards guards;
  int threads = 1;
};

/// Names accepted by run_verify, excluding "all".
const std::vector<std::string>& known_checks();

/// Runs one named check, or every check for "all". Throws
/// std::invalid_argument on unknown names.
std::vector<CheckReport> run_verify(const std::string& check,
                                    const CheckOptions& options = {});

}  // namespace polybernoulli
