#pragma once

#include <cstdint>
#include <vector>

namespace pcurv {

/// Dense linear system over F_p with one right-hand side column.
struct FpSystem {
  std::uint32_t p;
  int nvars;
  std::vector<std::vector<std::uint32_t>> rows;  // nvars coefficients followed by rhs

  FpSystem(std::uint32_t p_, int nvars_) : p(p_), nvars(nvars_) {}
  std::vector<std::uint32_t>& new_row() { return rows.emplace_back(nvars + 1, 0U); }

  struct Result {
    bool consistent = true;
    int rank = 0;
    int nullity = 0;
    std::vector<std::uint32_t> x;  // free variables set to zero
  };
  Result solve() const;
};

}  // namespace pcurv
