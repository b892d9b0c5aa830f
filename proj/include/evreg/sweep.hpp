#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace evreg {

// Exhaustive run over 2x2 integer matrices with entries in [-bound, bound]
// and nonzero determinant.
struct SweepReport {
  int bound = 0;
  int cap = 0;
  std::size_t matrices = 0;
  // Matrices with some diagonal power <= cap, by smallest such power.
  std::map<int, std::size_t> diagonal_powers;
  std::size_t diagonal_violations = 0;
  // |det| > 1, lambda = (1,1): first power compatible with the P^2 fan.
  std::size_t expanding = 0;
  std::map<int, std::size_t> extendable_powers;
  std::size_t extendable_violations = 0;
  std::vector<std::string> violations;  // human-readable, first few only
};

SweepReport run_matrix_sweep(int bound, int cap);

}  // namespace evreg
