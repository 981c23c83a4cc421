#include "pcurv/serialize.hpp"

#include <cctype>
#include <sstream>

#include "pcurv/error.hpp"
#include "pcurv/field.hpp"

namespace pcurv {

namespace {

bool is_q0(const Exponent& e) {
  for (int x : e)
    if (x) return false;
  return true;
}

// Terms of a polynomial, highest first, optionally prefixed by a q-factor.
void poly_terms(const Poly& f, const std::string& q, std::vector<std::string>& out) {
  const PolyRing* R = f.ring();
  const auto& ts = f.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    std::vector<std::string> fac;
    if (!q.empty()) fac.push_back(q);
    for (int i = R->nvars() - 1; i >= 0; --i) {
      int e = mono::exp(it->m, i);
      if (e) fac.push_back(R->var_name(i) + (e > 1 ? "^" + std::to_string(e) : ""));
    }
    if (it->c != 1 || fac.empty()) fac.insert(fac.begin(), std::to_string(it->c));
    std::string s;
    for (std::size_t k = 0; k < fac.size(); ++k) s += (k ? "*" : "") + fac[k];
    out.push_back(s);
  }
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + v[k];
  return s;
}

template <class S, class F>
std::string series_text(const S& s, F&& coef) {
  std::vector<std::string> parts;
  for (std::size_t k = s.size(); k-- > 0;) {
    if (s[k].is_zero()) continue;
    const Exponent& e = s.index()->exponent(k);
    coef(s[k], is_q0(e) ? std::string() : exponent_to_string(e), parts);
  }
  return parts.empty() ? "0" : join(parts, " + ");
}

template <class M, class F>
std::string mat_text(const M& m, F&& entry) {
  std::ostringstream os;
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) os << (j ? " ; " : "") << entry(m(i, j));
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string to_text(const Poly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::string> t;
  poly_terms(f, "", t);
  return join(t, " + ");
}

std::string to_text(const RatFun& f) {
  if (f.is_polynomial()) return to_text(f.num());
  std::string s = "(" + to_text(f.num()) + ")/";
  for (std::size_t i = 0; i < f.den().size(); ++i) s += (i ? "*(" : "(") + to_text(f.den()[i].to_poly()) + ")";
  return s;
}

std::string to_text(const PSeries& s) {
  return series_text(s, [](const Poly& c, const std::string& q, std::vector<std::string>& out) {
    poly_terms(c, q, out);
  });
}

std::string to_text(const RSeries& s) {
  return series_text(s, [](const RatFun& c, const std::string& q, std::vector<std::string>& out) {
    if (c.is_polynomial()) {
      poly_terms(c.num(), q, out);
    } else {
      out.push_back(q.empty() ? to_text(c) : q + "*" + to_text(c));
    }
  });
}

std::string to_text(const PMat& M) { return mat_text(M, [](const Poly& x) { return to_text(x); }); }
std::string to_text(const PSMat& M) { return mat_text(M, [](const PSeries& x) { return to_text(x); }); }
std::string to_text(const RSMat& M) { return mat_text(M, [](const RSeries& x) { return to_text(x); }); }

std::string to_text(const std::vector<RSeries>& v) {
  std::string s;
  for (auto& x : v) s += to_text(x) + "\n";
  return s;
}

namespace {

// Recursive-descent parser over a restricted expression language.
class Parser {
 public:
  Parser(const std::string& s, const PolyRing* R, const NovikovIndex* I) : s_(s), R_(R), I_(I) {}

  RSeries parse_all() {
    RSeries r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  const std::string& s_;
  const PolyRing* R_;
  const NovikovIndex* I_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ConfigError("parse error at offset " + std::to_string(pos_) + ": " + why + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoll(s_.substr(start, pos_ - start));
  }
  RSeries scalar(const RatFun& x) const { return RSeries::constant(I_, x); }

  RSeries expr() {
    const bool lead = eat('-');
    RSeries r = term();
    if (lead) r = -r;
    while (true) {
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
      const bool neg = s_[pos_++] == '-';
      RSeries t = term();
      r += neg ? -t : t;
    }
    return r;
  }

  RSeries term() {
    RSeries r = factor();
    while (eat('*')) r = r * factor();
    return r;
  }

  RSeries factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RSeries inner = expr();
      if (!eat(')')) fail("expected ')'");
      if (eat('/')) {
        // denominator: (linear form)*(linear form)*...
        std::vector<LinearForm> den;
        std::uint32_t scale = 1;
        do {
          if (!eat('(')) fail("expected '(' in denominator");
          RSeries d = expr();
          if (!eat(')')) fail("expected ')'");
          den.push_back(to_form(d, &scale));
          skip();
        } while (pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '(' && (++pos_, true));
        for (std::size_t k = 0; k < inner.size(); ++k)
          if (!inner[k].is_polynomial()) fail("nested fraction");
        const auto inv = fp::inv(scale, R_->p());
        RSeries out(I_);
        for (std::size_t k = 0; k < inner.size(); ++k)
          if (!inner[k].is_zero()) out[k] = RatFun(inner[k].num().scaled(inv), den);
        return out;
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return scalar(RatFun(Poly::constant(R_, number() % R_->p())));
    if (c == 'q') {
      ++pos_;
      if (!eat('[')) fail("expected '['");
      Exponent e;
      do e.push_back(static_cast<int>(number()));
      while (eat(','));
      if (!eat(']')) fail("expected ']'");
      if (static_cast<int>(e.size()) != I_->rank()) fail("q exponent of wrong length");
      if (I_->find(e) < 0) fail("q exponent beyond the truncation order");
      return RSeries::monomial(I_, e, RatFun(Poly::constant(R_, 1)));
    }
    int var = -1;
    if (c == 'h') var = R_->h(), ++pos_;
    else if (c == 't') var = R_->t(), ++pos_;
    else if (c == 'l') {
      ++pos_;
      const long long k = number();
      if (k < 1 || k > R_->rank()) fail("variable index out of range");
      var = static_cast<int>(k - 1);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    int e = 1;
    if (eat('^')) e = static_cast<int>(number());
    return scalar(RatFun(Poly::var(R_, var, e)));
  }

  LinearForm to_form(const RSeries& d, std::uint32_t* scale) {
    for (std::size_t k = 1; k < d.size(); ++k)
      if (!d[k].is_zero()) fail("denominator depends on q");
    const RatFun& x = d[0];
    if (!x.is_polynomial() || !x.num().is_homogeneous(1) || x.num().degree_in(R_->t()) > 0)
      fail("denominator factor is not a linear form in (l, h)");
    std::vector<long long> c(R_->rank() + 1, 0);
    for (auto& t : x.num().terms())
      for (int i = 0; i <= R_->rank(); ++i)
        if (mono::exp(t.m, i)) c[i] = t.c;
    std::uint32_t s = 1;
    LinearForm l = LinearForm::make(R_, c, &s);
    *scale = fp::mul(*scale, s, R_->p());
    return l;
  }
};

}  // namespace

RSeries parse_rseries(const std::string& s, const PolyRing* R, const NovikovIndex* I) {
  return Parser(s, R, I).parse_all();
}

PSeries parse_pseries(const std::string& s, const PolyRing* R, const NovikovIndex* I) {
  RSeries r = parse_rseries(s, R, I);
  PSeries out(I);
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k].is_zero()) continue;
    if (!r[k].is_polynomial()) throw ConfigError("expected a polynomial series: '" + s + "'");
    out[k] = r[k].num();
  }
  return out;
}

RatFun parse_ratfun(const std::string& s, const PolyRing* R) {
  const NovikovIndex* I = NovikovIndex::get(R->rank(), 0);
  RSeries r = parse_rseries(s, R, I);
  return r[0].ring() ? r[0] : RatFun(Poly(R));
}

Poly parse_poly(const std::string& s, const PolyRing* R) {
  RatFun r = parse_ratfun(s, R);
  if (!r.is_polynomial()) throw ConfigError("expected a polynomial: '" + s + "'");
  return r.num().ring() ? r.num() : Poly(R);
}

namespace {
std::vector<std::vector<std::string>> split_matrix(const std::string& s) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> row;
    std::size_t start = 0;
    while (true) {
      std::size_t k = line.find(" ; ", start);
      row.push_back(line.substr(start, k == std::string::npos ? std::string::npos : k - start));
      if (k == std::string::npos) break;
      start = k + 3;
    }
    rows.push_back(std::move(row));
  }
  for (auto& r : rows)
    if (r.size() != rows.size()) throw ConfigError("matrix text is not square");
  return rows;
}
}  // namespace

PMat parse_pmat(const std::string& s, const PolyRing* R) {
  auto rows = split_matrix(s);
  PMat M(static_cast<int>(rows.size()));
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) M(i, j) = parse_poly(rows[i][j], R);
  return M;
}

PSMat parse_psmat(const std::string& s, const PolyRing* R, const NovikovIndex* I) {
  auto rows = split_matrix(s);
  PSMat M(static_cast<int>(rows.size()));
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j) M(i, j) = parse_pseries(rows[i][j], R, I);
  return M;
}

}  // namespace pcurv
