#pragma once

#include <map>
#include <string>
#include <vector>

namespace pcurv {

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;

struct RootSystemSpec {
  char family = 'A';
  int rank = 1;

  /// Parses strings like "A2" or "G2"; throws ConfigError.
  static RootSystemSpec parse(const std::string& s, int max_rank = 3);
  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  IMat cartan() const;
};

struct WeylElement {
  IMat action;  // on weights in fundamental-weight coordinates
  IVec word;    // reduced word, w = s_{word[0]} ... s_{word[k-1]}
  int length = 0;
};

/// A positive root with its coroot and a witness u(alpha_i) = root.
struct PositiveRoot {
  IVec weight;  // fundamental-weight coordinates
  IVec simple;  // simple-root coordinates
  IVec coroot;  // simple-coroot coordinates
  int height = 0;
  int witness_elem = 0;
  int witness_simple = 0;
};

class RootSystem {
 public:
  explicit RootSystem(const RootSystemSpec& spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  const IMat& cartan() const { return A_; }
  IVec simple_root(int i) const;
  const std::vector<PositiveRoot>& positive_roots() const { return pos_; }
  int num_positive() const { return static_cast<int>(pos_.size()); }
  /// Sum of positive coroots, in simple-coroot coordinates.
  const IVec& two_rho_vee() const { return two_rho_vee_; }

  int order() const { return static_cast<int>(W_.size()); }
  const WeylElement& elem(int w) const { return W_[w]; }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  int mul(int x, int y) const { return mul_[x * order() + y]; }
  int inverse(int x) const { return inv_[x]; }
  int simple_reflection(int i) const { return simple_[i]; }
  /// The reflection s_beta for a positive root index.
  int reflection(int root) const { return refl_[root]; }
  int find(const IMat& action) const;

  IVec act(int w, const IVec& chi) const;
  /// Bruhat order by the subword property.
  bool bruhat_leq(int v, int w) const { return below_[w][v]; }
  /// Positive roots sent to negative roots by w.
  int inversion_count(int w) const;

  /// Pairing of a weight with a coroot given in simple-coroot coordinates.
  static int pair(const IVec& weight, const IVec& coroot);
  /// Pairing with 2 rho-vee; sign decides positivity of roots.
  int pair_rho(const IVec& weight) const { return pair(weight, two_rho_vee_); }

 private:
  RootSystemSpec spec_;
  IMat A_;
  std::vector<PositiveRoot> pos_;
  IVec two_rho_vee_;
  std::vector<WeylElement> W_;
  std::map<IMat, int> lookup_;
  std::vector<int> mul_, inv_, simple_, refl_;
  std::vector<std::vector<char>> below_;
  int longest_ = 0;
};

/// Apply a word (leftmost letter acts last) of simple coroot reflections.
IVec coroot_act_word(const IMat& cartan, const IVec& word, IVec gamma);

}  // namespace pcurv
