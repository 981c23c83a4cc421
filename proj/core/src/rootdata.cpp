#include "pcurv/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "pcurv/error.hpp"

namespace pcurv {

RootSystemSpec RootSystemSpec::parse(const std::string& s, int max_rank) {
  if (s.size() < 2 || !std::isupper(static_cast<unsigned char>(s[0])))
    throw ConfigError("bad root system '" + s + "'");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ConfigError("bad root system '" + s + "'");
  RootSystemSpec r;
  r.family = s[0];
  r.rank = std::stoi(s.substr(1));
  const bool ok = (r.family == 'A' && r.rank >= 1) || (r.family == 'B' && r.rank >= 2) ||
                  (r.family == 'C' && r.rank >= 2) || (r.family == 'D' && r.rank >= 4) ||
                  (r.family == 'G' && r.rank == 2);
  if (!ok) throw ConfigError("unsupported root system '" + s + "'");
  if (r.rank > max_rank)
    throw ConfigError("root system '" + s + "' exceeds the rank ceiling " + std::to_string(max_rank));
  return r;
}

IMat RootSystemSpec::cartan() const {
  const int r = rank;
  IMat A(r, IVec(r, 0));
  for (int i = 0; i < r; ++i) A[i][i] = 2;
  switch (family) {
    case 'A':
    case 'B':
    case 'C':
      for (int i = 0; i + 1 < r; ++i) A[i][i + 1] = A[i + 1][i] = -1;
      // B: last simple root short; C: last simple root long.
      if (family == 'B') A[r - 1][r - 2] = -2;
      if (family == 'C') A[r - 2][r - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) A[i][i + 1] = A[i + 1][i] = -1;
      A[r - 3][r - 1] = A[r - 1][r - 3] = -1;
      break;
    case 'G':
      A[0][1] = -3;
      A[1][0] = -1;
      break;
    default:
      throw ConfigError("unsupported family");
  }
  return A;
}

namespace {

IMat mat_mul(const IMat& x, const IMat& y) {
  const std::size_t n = x.size();
  IMat r(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (x[i][k])
        for (std::size_t j = 0; j < n; ++j) r[i][j] += x[i][k] * y[k][j];
  return r;
}

IMat eye(int n) {
  IMat r(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

}  // namespace

IVec coroot_act_word(const IMat& A, const IVec& word, IVec g) {
  const int r = static_cast<int>(A.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int j = *it;
    int c = 0;
    for (int k = 0; k < r; ++k) c += g[k] * A[k][j];
    g[j] -= c;
  }
  return g;
}

IVec RootSystem::simple_root(int j) const {
  IVec a(rank());
  for (int i = 0; i < rank(); ++i) a[i] = A_[i][j];
  return a;
}

int RootSystem::pair(const IVec& b, const IVec& a) {
  if (b.size() != a.size()) throw InternalError("pairing dimension mismatch");
  int s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += b[i] * a[i];
  return s;
}

RootSystem::RootSystem(const RootSystemSpec& spec) : spec_(spec), A_(spec.cartan()) {
  const int r = rank();

  // Weyl group by breadth-first right multiplication; BFS order gives reduced words.
  std::vector<IMat> S(r);
  for (int i = 0; i < r; ++i) {
    S[i] = eye(r);
    for (int k = 0; k < r; ++k) S[i][k][i] -= A_[k][i];  // chi -> chi - chi_i alpha_i
  }
  W_.push_back({eye(r), {}, 0});
  lookup_[W_[0].action] = 0;
  for (std::size_t head = 0; head < W_.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      IMat m = mat_mul(W_[head].action, S[i]);
      if (lookup_.count(m)) continue;
      WeylElement e{m, W_[head].word, W_[head].length + 1};
      e.word.push_back(i);
      lookup_[m] = static_cast<int>(W_.size());
      W_.push_back(std::move(e));
      if (W_.size() > 100000) throw ConfigError("Weyl group too large");
    }
  }
  const int n = order();
  mul_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mul_[x * n + y] = lookup_.at(mat_mul(W_[x].action, W_[y].action));
  inv_.assign(n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (mul_[x * n + y] == 0) inv_[x] = y;
  simple_.resize(r);
  for (int i = 0; i < r; ++i) simple_[i] = lookup_.at(S[i]);
  longest_ = 0;
  for (int x = 0; x < n; ++x)
    if (W_[x].length > W_[longest_].length) longest_ = x;

  // Positive roots in simple-root coordinates, with a witness u(alpha_i).
  std::set<IVec> seen;
  for (int u = 0; u < n; ++u)
    for (int i = 0; i < r; ++i) {
      IVec w = act(u, simple_root(i));
      // simple-root coordinates: solve by applying the word to e_i
      IVec c(r, 0);
      c[i] = 1;
      for (auto it = W_[u].word.rbegin(); it != W_[u].word.rend(); ++it) {
        const int j = *it;
        int pairing = 0;  // <beta, alpha_j^vee> = sum_k c_k A[j][k]
        for (int k = 0; k < r; ++k) pairing += c[k] * A_[j][k];
        c[j] -= pairing;
      }
      if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; })) continue;
      if (!seen.insert(c).second) continue;
      PositiveRoot pr;
      pr.weight = w;
      pr.simple = c;
      IVec e(r, 0);
      e[i] = 1;
      pr.coroot = coroot_act_word(A_, W_[u].word, e);
      pr.height = 0;
      for (int x : c) pr.height += x;
      pr.witness_elem = u;
      pr.witness_simple = i;
      pos_.push_back(std::move(pr));
    }
  std::sort(pos_.begin(), pos_.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    return a.height != b.height ? a.height < b.height : a.simple > b.simple;
  });
  two_rho_vee_.assign(r, 0);
  for (auto& b : pos_)
    for (int k = 0; k < r; ++k) two_rho_vee_[k] += b.coroot[k];

  // Reflections s_beta: chi -> chi - <chi, beta^vee> beta.
  for (auto& b : pos_) {
    IMat m = eye(r);
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l) m[k][l] -= b.weight[k] * b.coroot[l];
    refl_.push_back(lookup_.at(m));
  }

  // Bruhat lower sets via subwords of the fixed reduced words.
  below_.assign(n, std::vector<char>(n, 0));
  for (int w = 0; w < n; ++w) {
    std::vector<char> cur(n, 0);
    cur[0] = 1;
    for (int letter : W_[w].word) {
      std::vector<char> next = cur;
      for (int x = 0; x < n; ++x)
        if (cur[x]) next[mul(x, simple_[letter])] = 1;
      cur.swap(next);
    }
    below_[w] = cur;
  }
}

int RootSystem::find(const IMat& action) const {
  auto it = lookup_.find(action);
  return it == lookup_.end() ? -1 : it->second;
}

IVec RootSystem::act(int w, const IVec& chi) const {
  const auto& m = W_[w].action;
  IVec r(rank(), 0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) r[i] += m[i][j] * chi[j];
  return r;
}

int RootSystem::inversion_count(int w) const {
  int c = 0;
  for (auto& b : pos_)
    if (pair_rho(act(w, b.weight)) < 0) ++c;
  return c;
}

}  // namespace pcurv
