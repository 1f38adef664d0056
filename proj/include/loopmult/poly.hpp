#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "loopmult/rational.hpp"

namespace loopmult {

// Global variable order: x, y, z first, then the auxiliary parameter names
// k, l, m, a, b, c; every other identifier ranks after those, alphabetically.
inline int var_rank(const std::string& name) {
  static const char* canon[] = {"x", "y", "z", "k", "l", "m", "a", "b", "c"};
  for (int i = 0; i < 9; ++i)
    if (name == canon[i]) return i;
  return 9;
}

inline bool var_less(const std::string& lhs, const std::string& rhs) {
  int rl = var_rank(lhs), rr = var_rank(rhs);
  if (rl != rr) return rl < rr;
  return lhs < rhs;
}

using Exps = std::vector<int>;

inline int total_degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic order (ascending); the map below keeps terms sorted by
// it and serialization walks the terms in descending order.
struct GradedLexLess {
  bool operator()(const Exps& a, const Exps& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// Sparse multivariate polynomial over Rat with an explicit ordered variable
// list. Binary operations unify the variable lists, so polynomials over
// different variable sets mix freely.
class Poly {
 public:
  using TermMap = std::map<Exps, Rat, GradedLexLess>;

  Poly() = default;

  explicit Poly(const Rat& constant) {
    if (constant != 0) terms_[Exps{}] = constant;
  }

  static Poly constant(const Rat& c) { return Poly(c); }

  static Poly variable(const std::string& name) {
    Poly p;
    p.vars_ = {name};
    p.terms_[Exps{1}] = 1;
    return p;
  }

  static Poly zero(const std::vector<std::string>& vars) {
    Poly p;
    p.vars_ = vars;
    check_var_list(p.vars_);
    return p;
  }

  static Poly from_terms(std::vector<std::string> vars, TermMap terms) {
    check_var_list(vars);
    Poly p;
    p.vars_ = std::move(vars);
    for (auto& [e, c] : terms) {
      if (e.size() != p.vars_.size()) throw std::invalid_argument("Poly: exponent arity mismatch");
      if (c != 0) p.terms_.emplace(e, c);
    }
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t arity() const { return vars_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  Rat constant_term() const {
    Exps zero_exp(vars_.size(), 0);
    auto it = terms_.find(zero_exp);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  int degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
  }

  int degree_in(const std::string& var) const {
    int idx = var_index(var);
    if (idx < 0) return 0;
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
  }

  int var_index(const std::string& var) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == var) return static_cast<int>(i);
    return -1;
  }

  // Coefficient of the monomial given by (variable, exponent) pairs; omitted
  // variables mean exponent zero.
  Rat coeff(const std::vector<std::pair<std::string, int>>& mono) const {
    Exps e(vars_.size(), 0);
    for (auto& [v, d] : mono) {
      int idx = var_index(v);
      if (idx < 0) {
        if (d != 0) return 0;
        continue;
      }
      e[idx] = d;
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Poly aligned_to(const std::vector<std::string>& vars) const {
    check_var_list(vars);
    std::vector<int> where(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      for (std::size_t j = 0; j < vars.size(); ++j)
        if (vars_[i] == vars[j]) where[i] = static_cast<int>(j);
      if (where[i] < 0 && used(i))
        throw std::invalid_argument("Poly::aligned_to: target drops used variable " + vars_[i]);
    }
    Poly out;
    out.vars_ = vars;
    for (auto& [e, c] : terms_) {
      Exps ne(vars.size(), 0);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (e[i] != 0) ne[where[i]] = e[i];
      out.terms_[ne] = c;
    }
    return out;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    auto [pa, pb] = unified(a, b);
    for (auto& [e, c] : pb.terms_) pa.add_term(e, c);
    return pa;
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    auto [pa, pb] = unified(a, b);
    for (auto& [e, c] : pb.terms_) pa.add_term(e, -c);
    return pa;
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    auto [pa, pb] = unified(a, b);
    Poly out;
    out.vars_ = pa.vars_;
    for (auto& [ea, ca] : pa.terms_)
      for (auto& [eb, cb] : pb.terms_) {
        Exps e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  friend Poly operator*(const Rat& c, const Poly& p) {
    Poly out;
    out.vars_ = p.vars_;
    if (c == 0) return out;
    for (auto& [e, pc] : p.terms_) out.terms_[e] = c * pc;
    return out;
  }

  friend Poly operator*(const Poly& p, const Rat& c) { return c * p; }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(int n) const {
    if (n < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly out(Rat(1));
    Poly base = *this;
    while (n > 0) {
      if (n & 1) out = out * base;
      base = base * base;
      n >>= 1;
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    auto [pa, pb] = unified(a, b);
    return pa.terms_ == pb.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Rat eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size())
      throw std::invalid_argument("Poly::eval: point arity mismatch");
    Rat acc = 0;
    for (auto& [e, c] : terms_) {
      Rat t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int j = 0; j < e[i]; ++j) t *= point[i];
      acc += t;
    }
    return acc;
  }

  // Substitutes images[i] for variable i; the result lives over the union of
  // the image variable sets (whether or not every image ends up used).
  Poly substitute(const std::vector<Poly>& images) const {
    if (images.size() != vars_.size())
      throw std::invalid_argument("Poly::substitute: image arity mismatch");
    std::vector<std::string> u;
    for (auto& img : images) {
      std::vector<std::string> merged;
      std::merge(u.begin(), u.end(), img.vars().begin(), img.vars().end(),
                 std::back_inserter(merged), var_less);
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      u = std::move(merged);
    }
    // Power tables per variable, up to the largest exponent used.
    std::vector<std::vector<Poly>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) powers[i] = {Poly(Rat(1))};
    Poly acc;
    for (auto& [e, c] : terms_) {
      Poly t(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        auto& tab = powers[i];
        while (static_cast<int>(tab.size()) <= e[i]) tab.push_back(tab.back() * images[i]);
        if (e[i] > 0) t = t * tab[e[i]];
      }
      acc += t;
    }
    return acc.aligned_to(u);
  }

  // Substitution by variable name; unmentioned variables map to themselves.
  Poly substitute_named(const std::map<std::string, Poly>& repl) const {
    std::vector<Poly> images;
    images.reserve(vars_.size());
    for (auto& v : vars_) {
      auto it = repl.find(v);
      images.push_back(it == repl.end() ? Poly::variable(v) : it->second);
    }
    return substitute(images);
  }

  Poly set_var(const std::string& var, const Rat& value) const {
    return substitute_named({{var, Poly(value)}});
  }

  Poly shift(const std::vector<Rat>& offsets) const {
    if (offsets.size() != vars_.size())
      throw std::invalid_argument("Poly::shift: offset arity mismatch");
    std::vector<Poly> images;
    images.reserve(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
      images.push_back(Poly::variable(vars_[i]) + Poly(offsets[i]));
    return substitute(images);
  }

  // Partial derivative. A canonical variable absent from the list is a
  // variable the polynomial is constant in, so the derivative is zero; any
  // other absent name is an unknown variable.
  Poly diff(const std::string& var) const {
    int idx = var_index(var);
    if (idx < 0) {
      if (var_rank(var) < 9) return Poly::zero(vars_);
      throw std::invalid_argument("Poly::diff: unknown variable " + var);
    }
    Poly out;
    out.vars_ = vars_;
    for (auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      Exps ne(e);
      ne[idx] -= 1;
      out.add_term(ne, c * Rat(e[idx]));
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Rat& c = it->second;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Rat mag = c < 0 ? Rat(-c) : c;
      bool wrote = false;
      if (mag != 1 || total_degree(it->first) == 0) {
        os << loopmult::to_string(mag);
        wrote = true;
      }
      for (std::size_t i = 0; i < it->first.size(); ++i) {
        if (it->first[i] == 0) continue;
        if (wrote) os << "*";
        os << vars_[i];
        if (it->first[i] > 1) os << "^" << it->first[i];
        wrote = true;
      }
    }
    return os.str();
  }

  static Poly parse(const std::string& text);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  bool used(std::size_t i) const {
    for (auto& [e, c] : terms_)
      if (e[i] != 0) return true;
    return false;
  }

  void add_term(const Exps& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static void check_var_list(const std::vector<std::string>& vars) {
    for (std::size_t i = 0; i + 1 < vars.size(); ++i)
      if (!var_less(vars[i], vars[i + 1]))
        throw std::invalid_argument("Poly: variable list not in canonical order");
  }

  static std::pair<Poly, Poly> unified(const Poly& a, const Poly& b) {
    if (a.vars_ == b.vars_) return {a, b};
    std::vector<std::string> u;
    std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
               std::back_inserter(u), var_less);
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return {a.aligned_to(u), b.aligned_to(u)};
  }
};

// --- parser -----------------------------------------------------------------
//
// Grammar (whitespace insensitive):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | ident ['^' integer]
namespace detail {

struct PolyLexer {
  const std::string& s;
  std::size_t pos = 0;
  explicit PolyLexer(const std::string& text) : s(text) {}
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char get() {
    skip_ws();
    return pos < s.size() ? s[pos++] : '\0';
  }
};

inline Poly parse_factor(PolyLexer& lx) {
  char c = lx.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string num;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
      num += lx.s[lx.pos++];
    if (lx.peek() == '/') {
      lx.get();
      std::string den;
      lx.skip_ws();
      while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
        den += lx.s[lx.pos++];
      if (den.empty()) throw std::invalid_argument("Poly::parse: missing denominator");
      return Poly(parse_rational(num + "/" + den));
    }
    return Poly(parse_rational(num));
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::string name;
    while (lx.pos < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
      name += lx.s[lx.pos++];
    int exp = 1;
    if (lx.peek() == '^') {
      lx.get();
      lx.skip_ws();
      std::string digits;
      while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
        digits += lx.s[lx.pos++];
      if (digits.empty()) throw std::invalid_argument("Poly::parse: missing exponent");
      exp = std::stoi(digits);
    }
    return Poly::variable(name).pow(exp);
  }
  throw std::invalid_argument("Poly::parse: unexpected character '" + std::string(1, c) + "'");
}

inline Poly parse_term(PolyLexer& lx) {
  Poly p = parse_factor(lx);
  while (lx.peek() == '*') {
    lx.get();
    p = p * parse_factor(lx);
  }
  return p;
}

}  // namespace detail

inline Poly Poly::parse(const std::string& text) {
  detail::PolyLexer lx(text);
  Poly acc;
  bool negate = false;
  char c = lx.peek();
  if (c == '+' || c == '-') {
    lx.get();
    negate = (c == '-');
  }
  while (true) {
    Poly t = detail::parse_term(lx);
    acc = negate ? acc - t : acc + t;
    char op = lx.peek();
    if (op == '+' || op == '-') {
      lx.get();
      negate = (op == '-');
      continue;
    }
    if (op == '\0') break;
    throw std::invalid_argument("Poly::parse: unexpected character '" + std::string(1, op) +
                                "' in '" + text + "'");
  }
  return acc;
}

}  // namespace loopmult
