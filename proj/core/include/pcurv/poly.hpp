#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pcurv {

/// Variable layout for a root system of rank r: l1..lr, h, t.
/// Rings are interned, so pointer equality is ring equality.
class PolyRing {
 public:
  static const PolyRing* get(std::uint32_t p, int rank);

  std::uint32_t p() const { return p_; }
  int rank() const { return rank_; }
  int nvars() const { return rank_ + 2; }
  int h() const { return rank_; }
  int t() const { return rank_ + 1; }
  std::string var_name(int i) const;

 private:
  PolyRing(std::uint32_t p, int rank) : p_(p), rank_(rank) {}
  std::uint32_t p_;
  int rank_;
};

/// Packed monomial: 9 bits per variable (variable 0 lowest), total degree in
/// the top 10 bits. Unsigned comparison is graded lex with t > h > lr > ... > l1.
namespace mono {
constexpr int kBits = 9;
constexpr int kMaxVars = 6;
constexpr std::uint64_t kMask = (1U << kBits) - 1;
constexpr int kDegShift = 54;
constexpr int kMaxDeg = 511;

inline int exp(std::uint64_t m, int i) { return static_cast<int>((m >> (kBits * i)) & kMask); }
inline int deg(std::uint64_t m) { return static_cast<int>(m >> kDegShift); }
std::uint64_t make(const std::vector<int>& e);
std::uint64_t var(int i, int e = 1);
inline std::uint64_t without(std::uint64_t m, int i) {
  int e = exp(m, i);
  return m - (static_cast<std::uint64_t>(e) << (kBits * i)) -
         (static_cast<std::uint64_t>(e) << kDegShift);
}
std::uint64_t mul(std::uint64_t a, std::uint64_t b);
}  // namespace mono

class LinearForm;

class Poly {
 public:
  struct Term {
    std::uint64_t m;
    std::uint32_t c;
    bool operator==(const Term&) const = default;
  };

  Poly() = default;
  explicit Poly(const PolyRing* R) : R_(R) {}

  static Poly constant(const PolyRing* R, long long c);
  static Poly var(const PolyRing* R, int i, int e = 1);
  static Poly monomial(const PolyRing* R, std::uint64_t m, std::uint32_t c);
  /// Build from unsorted terms, combining duplicates and dropping zeros.
  static Poly from_terms(const PolyRing* R, std::vector<Term> t);

  const PolyRing* ring() const { return R_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::uint32_t constant_term() const;
  int total_degree() const;
  int degree_in(int var) const;
  bool is_homogeneous(int d) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly scaled(std::uint32_t c) const;
  Poly pow(unsigned e) const;
  /// Coefficient of var^k, with var removed.
  Poly coeff_in(int var, int k) const;
  /// Substitute var := g.
  Poly substitute(int var, const Poly& g) const;
  Poly specialize(int var, long long c) const { return substitute(var, constant(R_, c)); }
  /// Exponents multiplied by p; coefficients are fixed by Fermat.
  Poly frobenius() const;
  /// Exact division by a linear form; returns false if there is a remainder.
  bool divide_linear(const LinearForm& l, Poly& quotient) const;

  std::string to_string() const;

 private:
  const PolyRing* R_ = nullptr;
  std::vector<Term> terms_;  // strictly increasing m, c != 0

  void adopt(const Poly& o);
  static void add_into(std::vector<Term>& out, const std::vector<Term>& a,
                       const std::vector<Term>& b, std::uint32_t p, bool subtract);
};

/// Non-zero linear form in (l1..lr, h) over F_p, normalized so that the
/// highest variable present has coefficient 1.
class LinearForm {
 public:
  LinearForm() = default;
  /// Normalizes `coeffs` (length rank+1) and returns the removed scalar in `scale`.
  static LinearForm make(const PolyRing* R, std::vector<long long> coeffs,
                         std::uint32_t* scale = nullptr);

  const PolyRing* ring() const { return R_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  int pivot() const { return pivot_; }
  Poly to_poly() const;
  std::string to_string() const;

  auto operator<=>(const LinearForm& o) const { return c_ <=> o.c_; }
  bool operator==(const LinearForm& o) const { return c_ == o.c_; }

 private:
  const PolyRing* R_ = nullptr;
  std::vector<std::uint32_t> c_;
  int pivot_ = -1;
};

}  // namespace pcurv
