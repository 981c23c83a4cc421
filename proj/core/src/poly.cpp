#include "pcurv/poly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "pcurv/error.hpp"
#include "pcurv/field.hpp"

namespace pcurv {

const PolyRing* PolyRing::get(std::uint32_t p, int rank) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, std::unique_ptr<PolyRing>> registry;
  if (rank < 0 || rank + 2 > mono::kMaxVars)
    throw ConfigError("polynomial ring supports rank at most " +
                      std::to_string(mono::kMaxVars - 2));
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, rank}];
  if (!slot) slot.reset(new PolyRing(p, rank));
  return slot.get();
}

std::string PolyRing::var_name(int i) const {
  if (i == h()) return "h";
  if (i == t()) return "t";
  return "l" + std::to_string(i + 1);
}

namespace mono {

std::uint64_t make(const std::vector<int>& e) {
  std::uint64_t m = 0;
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    d += e[i];
    m |= static_cast<std::uint64_t>(e[i]) << (kBits * i);
  }
  if (d > kMaxDeg) throw InternalError("monomial degree overflow");
  return m | (static_cast<std::uint64_t>(d) << kDegShift);
}

std::uint64_t var(int i, int e) {
  return (static_cast<std::uint64_t>(e) << (kBits * i)) |
         (static_cast<std::uint64_t>(e) << kDegShift);
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  if (deg(a) + deg(b) > kMaxDeg) throw InternalError("monomial degree overflow");
  return a + b;
}

}  // namespace mono

namespace {

// Open-addressing accumulator for products.
class Accumulator {
 public:
  explicit Accumulator(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    keys_.assign(cap, kEmpty);
    vals_.assign(cap, 0);
    mask_ = cap - 1;
  }
  void add(std::uint64_t key, std::uint64_t v) {
    std::size_t i = (key * 0x9E3779B97F4A7C15ULL) >> 20 & mask_;
    while (true) {
      if (keys_[i] == key) {
        vals_[i] += v;
        return;
      }
      if (keys_[i] == kEmpty) {
        keys_[i] = key;
        vals_[i] = v;
        ++size_;
        if (2 * size_ > keys_.size()) grow();
        return;
      }
      i = (i + 1) & mask_;
    }
  }
  std::vector<Poly::Term> extract(std::uint32_t p) const {
    std::vector<Poly::Term> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (keys_[i] == kEmpty) continue;
      auto c = static_cast<std::uint32_t>(vals_[i] % p);
      if (c) out.push_back({keys_[i], c});
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.m < b.m; });
    return out;
  }

 private:
  static constexpr std::uint64_t kEmpty = ~0ULL;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint64_t> vals_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;

  void grow() {
    std::vector<std::uint64_t> k, v;
    k.swap(keys_);
    v.swap(vals_);
    keys_.assign(k.size() * 2, kEmpty);
    vals_.assign(k.size() * 2, 0);
    mask_ = keys_.size() - 1;
    size_ = 0;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] != kEmpty) add(k[i], v[i]);
  }
};

}  // namespace

Poly Poly::constant(const PolyRing* R, long long c) {
  Poly r(R);
  auto v = fp::reduce(c, R->p());
  if (v) r.terms_.push_back({0, v});
  return r;
}

Poly Poly::var(const PolyRing* R, int i, int e) {
  return monomial(R, mono::var(i, e), 1);
}

Poly Poly::monomial(const PolyRing* R, std::uint64_t m, std::uint32_t c) {
  Poly r(R);
  c %= R->p();
  if (c) r.terms_.push_back({m, c});
  return r;
}

Poly Poly::from_terms(const PolyRing* R, std::vector<Term> t) {
  std::sort(t.begin(), t.end(), [](auto& a, auto& b) { return a.m < b.m; });
  Poly r(R);
  const auto p = R->p();
  for (std::size_t i = 0; i < t.size();) {
    std::uint64_t acc = 0;
    std::size_t j = i;
    for (; j < t.size() && t[j].m == t[i].m; ++j) acc += t[j].c % p;
    if (acc % p) r.terms_.push_back({t[i].m, static_cast<std::uint32_t>(acc % p)});
    i = j;
  }
  return r;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m == 0); }

std::uint32_t Poly::constant_term() const {
  return (!terms_.empty() && terms_[0].m == 0) ? terms_[0].c : 0;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : mono::deg(terms_.back().m); }

int Poly::degree_in(int v) const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, mono::exp(t.m, v));
  return d;
}

bool Poly::is_homogeneous(int d) const {
  for (auto& t : terms_)
    if (mono::deg(t.m) != d) return false;
  return true;
}

void Poly::adopt(const Poly& o) {
  if (!R_) R_ = o.R_;
  else if (o.R_ && o.R_ != R_) throw InternalError("polynomial ring mismatch");
}

void Poly::add_into(std::vector<Term>& out, const std::vector<Term>& a, const std::vector<Term>& b,
                    std::uint32_t p, bool subtract) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].m < b[j].m)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].m < a[i].m) {
      out.push_back({b[j].m, subtract ? fp::neg(b[j].c, p) : b[j].c});
      ++j;
    } else {
      auto c = subtract ? fp::sub(a[i].c, b[j].c, p) : fp::add(a[i].c, b[j].c, p);
      if (c) out.push_back({a[i].m, c});
      ++i;
      ++j;
    }
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = fp::neg(t.c, R_->p());
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  adopt(o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  add_into(out, terms_, o.terms_, R_->p(), false);
  terms_.swap(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  adopt(o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  add_into(out, terms_, o.terms_, R_->p(), true);
  terms_.swap(out);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.R_ ? a.R_ : b.R_);
  if (a.R_ && b.R_ && a.R_ != b.R_) throw InternalError("polynomial ring mismatch");
  if (a.terms_.empty() || b.terms_.empty()) return r;
  const auto p = r.R_->p();
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Poly& s = a.terms_.size() == 1 ? a : b;
    const Poly& o = a.terms_.size() == 1 ? b : a;
    const auto m = s.terms_[0].m;
    const auto c = s.terms_[0].c;
    r.terms_.reserve(o.terms_.size());
    for (auto& t : o.terms_) r.terms_.push_back({mono::mul(t.m, m), fp::mul(t.c, c, p)});
    return r;
  }
  if (mono::deg(a.terms_.back().m) + mono::deg(b.terms_.back().m) > mono::kMaxDeg)
    throw InternalError("monomial degree overflow");
  Accumulator acc(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1U << 22));
  // For small p the raw products can be summed without intermediate reduction.
  const bool small = p < (1U << 16);
  for (auto& x : a.terms_)
    for (auto& y : b.terms_) {
      std::uint64_t v = static_cast<std::uint64_t>(x.c) * y.c;
      acc.add(x.m + y.m, small ? v : v % p);
    }
  r.terms_ = acc.extract(p);
  return r;
}

Poly Poly::scaled(std::uint32_t c) const {
  if (!R_) return *this;
  c %= R_->p();
  if (c == 0) return Poly(R_);
  Poly r = *this;
  for (auto& t : r.terms_) t.c = fp::mul(t.c, c, R_->p());
  return r;
}

Poly Poly::pow(unsigned e) const {
  if (!R_) throw InternalError("pow of ring-less polynomial");
  Poly r = constant(R_, 1), b = *this;
  while (e) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::coeff_in(int v, int k) const {
  Poly r(R_);
  for (auto& t : terms_)
    if (mono::exp(t.m, v) == k) r.terms_.push_back({mono::without(t.m, v), t.c});
  std::sort(r.terms_.begin(), r.terms_.end(), [](auto& a, auto& b) { return a.m < b.m; });
  return r;
}

Poly Poly::substitute(int v, const Poly& g) const {
  if (terms_.empty()) return *this;
  const int d = degree_in(v);
  if (d <= 0) return *this;
  // Horner in v.
  Poly r = coeff_in(v, d);
  for (int k = d - 1; k >= 0; --k) r = r * g + coeff_in(v, k);
  r.R_ = R_;
  return r;
}

Poly Poly::frobenius() const {
  Poly r(R_);
  if (!R_) return r;
  const int p = static_cast<int>(R_->p());
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) {
    std::vector<int> e(R_->nvars());
    for (int i = 0; i < R_->nvars(); ++i) e[i] = mono::exp(t.m, i) * p;
    r.terms_.push_back({mono::make(e), t.c});
  }
  return r;
}

bool Poly::divide_linear(const LinearForm& l, Poly& q) const {
  q = Poly(R_ ? R_ : l.ring());
  if (terms_.empty()) return true;
  // l = x + m with x the pivot variable: synthetic division in x.
  const int x = l.pivot();
  Poly m = l.to_poly() - Poly::var(l.ring(), x);
  const int d = degree_in(x);
  if (d < 1) return false;
  std::vector<Poly> g(d);
  Poly carry(R_);
  for (int k = d; k >= 1; --k) {
    g[k - 1] = coeff_in(x, k) - carry;
    carry = m * g[k - 1];
  }
  if (!(coeff_in(x, 0) - carry).is_zero()) return false;
  std::vector<Term> all;
  for (int k = 0; k < d; ++k)
    for (auto& t : g[k].terms_) all.push_back({mono::mul(t.m, mono::var(x, k)), t.c});
  q = from_terms(R_, std::move(all));
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> f;
    for (int i = R_->nvars() - 1; i >= 0; --i) {
      int e = mono::exp(it->m, i);
      if (e == 0) continue;
      f.push_back(R_->var_name(i) + (e > 1 ? "^" + std::to_string(e) : ""));
    }
    if (it->c != 1 || f.empty()) f.insert(f.begin(), std::to_string(it->c));
    for (std::size_t k = 0; k < f.size(); ++k) os << (k ? "*" : "") << f[k];
  }
  return os.str();
}

LinearForm LinearForm::make(const PolyRing* R, std::vector<long long> coeffs, std::uint32_t* scale) {
  if (static_cast<int>(coeffs.size()) != R->rank() + 1)
    throw InternalError("linear form has wrong arity");
  LinearForm l;
  l.R_ = R;
  const auto p = R->p();
  l.c_.resize(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) l.c_[i] = fp::reduce(coeffs[i], p);
  for (int i = static_cast<int>(l.c_.size()) - 1; i >= 0; --i)
    if (l.c_[i]) {
      l.pivot_ = i;
      break;
    }
  if (l.pivot_ < 0) throw DegeneracyError("linear form vanishes mod " + std::to_string(p));
  const auto s = l.c_[l.pivot_];
  const auto si = fp::inv(s, p);
  for (auto& c : l.c_) c = fp::mul(c, si, p);
  if (scale) *scale = s;
  return l;
}

Poly LinearForm::to_poly() const {
  std::vector<Poly::Term> t;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i]) t.push_back({mono::var(static_cast<int>(i)), c_[i]});
  return Poly::from_terms(R_, std::move(t));
}

std::string LinearForm::to_string() const { return to_poly().to_string(); }

}  // namespace pcurv
