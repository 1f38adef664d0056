#pragma once

#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopmult/errors.hpp"
#include "loopmult/poly.hpp"

namespace loopmult {

// Coordinate variable names for a d-dimensional space: the first d canonical
// names. Everything vector-field-shaped in this project lives in d <= 9.
inline std::vector<std::string> coord_vars(int d) {
  static const char* names[] = {"x", "y", "z", "k", "l", "m", "a", "b", "c"};
  if (d < 0 || d > 9) throw std::invalid_argument("coord_vars: dimension out of range");
  return std::vector<std::string>(names, names + d);
}

// Polynomial vector field Sum_i comp[i] * d/dx_i on a fixed d-dimensional
// coordinate space; every coefficient is kept aligned to coord_vars(d).
class VectorField {
 public:
  VectorField() = default;

  explicit VectorField(std::vector<Poly> components) {
    int d = static_cast<int>(components.size());
    auto cv = coord_vars(d);
    comp_.reserve(components.size());
    for (auto& p : components) comp_.push_back(p.aligned_to(cv));
  }

  static VectorField zero(int d) {
    return VectorField(std::vector<Poly>(d, Poly::zero(coord_vars(d))));
  }

  static VectorField parse(const std::vector<std::string>& coeffs) {
    std::vector<Poly> c;
    c.reserve(coeffs.size());
    for (auto& s : coeffs) c.push_back(Poly::parse(s));
    return VectorField(std::move(c));
  }

  int dim() const { return static_cast<int>(comp_.size()); }
  const Poly& operator[](int i) const { return comp_[i]; }
  const std::vector<Poly>& components() const { return comp_; }

  bool is_zero() const {
    for (auto& p : comp_)
      if (!p.is_zero()) return false;
    return true;
  }

  int max_coeff_degree() const {
    int d = -1;
    for (auto& p : comp_) d = std::max(d, p.degree());
    return d;
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    out.reserve(comp_.size());
    for (auto& p : comp_) out.push_back(p.to_string());
    return out;
  }

  friend VectorField operator+(const VectorField& a, const VectorField& b) {
    check_same_space(a, b);
    std::vector<Poly> c;
    c.reserve(a.comp_.size());
    for (std::size_t i = 0; i < a.comp_.size(); ++i) c.push_back(a.comp_[i] + b.comp_[i]);
    return VectorField(std::move(c));
  }

  friend VectorField operator-(const VectorField& a, const VectorField& b) {
    check_same_space(a, b);
    std::vector<Poly> c;
    c.reserve(a.comp_.size());
    for (std::size_t i = 0; i < a.comp_.size(); ++i) c.push_back(a.comp_[i] - b.comp_[i]);
    return VectorField(std::move(c));
  }

  friend VectorField operator*(const Rat& s, const VectorField& a) {
    std::vector<Poly> c;
    c.reserve(a.comp_.size());
    for (auto& p : a.comp_) c.push_back(s * p);
    return VectorField(std::move(c));
  }

  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.comp_ == b.comp_;
  }

  // Derivation applied to a function: X(f) = Sum_j comp[j] * df/dx_j.
  Poly apply_to(const Poly& f) const {
    auto cv = coord_vars(dim());
    Poly g = f.aligned_to(cv);
    Poly acc = Poly::zero(cv);
    for (int j = 0; j < dim(); ++j) {
      if (comp_[j].is_zero()) continue;
      acc += comp_[j] * g.diff(cv[j]);
    }
    return acc;
  }

  static void check_same_space(const VectorField& a, const VectorField& b) {
    if (a.dim() != b.dim())
      throw std::invalid_argument("VectorField: coordinate space mismatch");
  }

 private:
  std::vector<Poly> comp_;
};

// Lie bracket of derivations: [X,Y]_i = Sum_j (X_j dY_i/dx_j - Y_j dX_i/dx_j).
inline VectorField bracket(const VectorField& x, const VectorField& y) {
  VectorField::check_same_space(x, y);
  int d = x.dim();
  auto cv = coord_vars(d);
  std::vector<Poly> c;
  c.reserve(d);
  for (int i = 0; i < d; ++i) {
    Poly acc = Poly::zero(cv);
    for (int j = 0; j < d; ++j) {
      if (!x[j].is_zero()) acc += x[j] * y[i].diff(cv[j]);
      if (!y[j].is_zero()) acc -= y[j] * x[i].diff(cv[j]);
    }
    c.push_back(std::move(acc));
  }
  return VectorField(std::move(c));
}

// Echelonized linear span of vector fields. Coefficient vectors are indexed
// by (coordinate, monomial) keys; the basis is kept in reduced echelon form,
// so a span has exactly one representation and membership tests are exact
// reductions to zero.
class FieldSpan {
 public:
  struct Key {
    int coord;
    Exps mono;
  };

  FieldSpan() = default;
  explicit FieldSpan(int d) : dim_space_(d) {}

  int space_dim() const { return dim_space_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<VectorField>& basis() const { return basis_; }
  const std::vector<Key>& pivots() const { return pivots_; }

  // Pivot key order: coordinate first, then graded-lex-largest monomial.
  static bool key_less(const Key& a, const Key& b) {
    if (a.coord != b.coord) return a.coord < b.coord;
    return GradedLexLess{}(b.mono, a.mono);
  }

  static Rat coeff_at(const VectorField& x, const Key& k) {
    auto it = x[k.coord].terms().find(k.mono);
    return it == x[k.coord].terms().end() ? Rat(0) : it->second;
  }

  static std::optional<Key> leading_key(const VectorField& x) {
    std::optional<Key> best;
    for (int i = 0; i < x.dim(); ++i)
      for (auto& [e, c] : x[i].terms()) {
        Key k{i, e};
        if (!best || key_less(k, *best)) best = k;
      }
    return best;
  }

  VectorField reduce(VectorField x) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      Rat c = coeff_at(x, pivots_[i]);
      if (c != 0) x = x - c * basis_[i];
    }
    return x;
  }

  bool contains(const VectorField& x) const { return reduce(x).is_zero(); }

  // Inserts x, returning whether the span grew and, when it did, the
  // normalized remainder that was appended.
  std::pair<bool, VectorField> insert(const VectorField& x) {
    if (dim_space_ == 0) dim_space_ = x.dim();
    if (x.dim() != dim_space_)
      throw std::invalid_argument("FieldSpan::insert: coordinate space mismatch");
    VectorField r = reduce(x);
    auto lead = leading_key(r);
    if (!lead) return {false, r};
    Rat lc = coeff_at(r, *lead);
    r = Rat(1) / lc * r;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      Rat c = coeff_at(basis_[i], *lead);
      if (c != 0) basis_[i] = basis_[i] - c * r;
    }
    std::size_t pos = 0;
    while (pos < basis_.size() && key_less(pivots_[pos], *lead)) ++pos;
    basis_.insert(basis_.begin() + pos, r);
    pivots_.insert(pivots_.begin() + pos, *lead);
    return {true, r};
  }

  // Coordinates of x in the basis; nullopt when x is outside the span.
  std::optional<std::vector<Rat>> coordinates(const VectorField& x) const {
    std::vector<Rat> coords(basis_.size(), Rat(0));
    VectorField r = x;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      coords[i] = coeff_at(r, pivots_[i]);
      if (coords[i] != 0) r = r - coords[i] * basis_[i];
    }
    if (!r.is_zero()) return std::nullopt;
    return coords;
  }

  friend bool operator==(const FieldSpan& a, const FieldSpan& b) {
    return a.basis_ == b.basis_;
  }

 private:
  int dim_space_ = 0;
  std::vector<VectorField> basis_;
  std::vector<Key> pivots_;
};

struct ClosureCaps {
  int max_dim = 64;
  int max_degree = 24;
};

// Smallest bracket-closed span containing the generators: repeated pairwise
// bracketing with a FIFO worklist until no insertion enlarges the span. The
// worklist holds the normalized remainders actually appended, so the pair
// bookkeeping never touches mutated basis elements.
inline FieldSpan lie_closure(const std::vector<VectorField>& generators,
                             const ClosureCaps& caps = {}) {
  if (generators.empty()) throw std::invalid_argument("lie_closure: no generators");
  FieldSpan span(generators.front().dim());
  std::vector<VectorField> work;
  std::deque<std::pair<int, int>> queue;

  auto push = [&](const VectorField& x) {
    auto [grew, rem] = span.insert(x);
    if (!grew) return;
    if (span.size() > caps.max_dim)
      throw ClosureCapExceeded("lie_closure: basis size exceeded max_dim", span.size(),
                               rem.max_coeff_degree());
    if (rem.max_coeff_degree() > caps.max_degree)
      throw ClosureCapExceeded("lie_closure: coefficient degree exceeded max_degree",
                               span.size(), rem.max_coeff_degree());
    int idx = static_cast<int>(work.size());
    work.push_back(rem);
    for (int i = 0; i < idx; ++i) queue.emplace_back(i, idx);
  };

  for (auto& g : generators) push(g);
  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    push(bracket(work[i], work[j]));
  }
  return span;
}

}  // namespace loopmult
