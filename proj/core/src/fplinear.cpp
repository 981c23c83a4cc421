#include "pcurv/fplinear.hpp"

#include "pcurv/field.hpp"

namespace pcurv {

FpSystem::Result FpSystem::solve() const {
  auto m = rows;
  Result res;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < nvars && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const auto inv = fp::inv(m[r][c], p);
    for (auto& x : m[r]) x = fp::mul(x, inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const auto f = m[i][c];
      for (int k = c; k <= nvars; ++k)
        if (m[r][k]) m[i][k] = fp::sub(m[i][k], fp::mul(f, m[r][k], p), p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m.size(); ++i)
    if (m[i][nvars] != 0) res.consistent = false;
  res.rank = static_cast<int>(r);
  res.nullity = nvars - res.rank;
  res.x.assign(nvars, 0);
  for (std::size_t i = 0; i < r; ++i) res.x[pivot_col[i]] = m[i][nvars];
  return res;
}

}  // namespace pcurv
