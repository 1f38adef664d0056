#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loopmult/loops.hpp"
#include "loopmult/sections.hpp"
#include "loopmult/structure.hpp"
#include "loopmult/triangular.hpp"
#include "loopmult/vfield.hpp"

namespace loopmult {

// --- logarithm / exponential of unipotent triangular maps ---------------------

// log of the pullback operator on coordinate functions: the series
// sum_{j>=1} (-1)^(j+1) (Phi - I)^j / j applied to each coordinate. Phi - I
// is locally nilpotent for a unipotent triangular map, so the series
// terminates; hitting the iteration cap therefore signals a non-unipotent
// input.
inline VectorField map_log(const TriangularMap& m, int iteration_cap = 256) {
  int d = m.dim();
  auto cv = coord_vars(d);
  std::vector<Poly> comp;
  comp.reserve(d);
  for (int i = 0; i < d; ++i) {
    Poly f = m.update(i);  // (Phi - I) x_i
    Poly acc = Poly::zero(cv);
    int j = 1;
    while (!f.is_zero()) {
      if (j > iteration_cap)
        throw std::runtime_error("map_log: series did not terminate (map not unipotent?)");
      Rat coeff = Rat(j % 2 == 1 ? 1 : -1, j);
      acc += coeff * f;
      f = m.pullback(f) - f;
      ++j;
    }
    comp.push_back(std::move(acc));
  }
  return VectorField(std::move(comp));
}

// Time-1 flow of a triangular-nilpotent field, as the terminating exponential
// series of the derivation. The coordinate order is inferred greedily; a
// field where no coordinate depends only on earlier ones is not triangular.
inline TriangularMap map_exp(const VectorField& v, int iteration_cap = 256) {
  int d = v.dim();
  auto cv = coord_vars(d);

  std::vector<int> order;
  std::vector<bool> picked(d, false);
  for (int round = 0; round < d; ++round) {
    int chosen = -1;
    for (int i = 0; i < d && chosen < 0; ++i) {
      if (picked[i]) continue;
      bool ok = true;
      for (int other = 0; other < d; ++other)
        if (!picked[other] && v[i].degree_in(cv[other]) > 0) ok = false;
      if (ok) chosen = i;
    }
    if (chosen < 0)
      throw std::invalid_argument("map_exp: field is not triangular-nilpotent");
    picked[chosen] = true;
    order.push_back(chosen);
  }

  std::vector<Poly> update;
  update.reserve(d);
  for (int i = 0; i < d; ++i) {
    Poly term = v[i];  // D(x_i)
    Poly acc = Poly::zero(cv);
    int j = 1;
    while (!term.is_zero()) {
      if (j > iteration_cap)
        throw std::runtime_error("map_exp: series did not terminate");
      acc += factorial_inv(j) * term;
      term = v.apply_to(term);
      ++j;
    }
    update.push_back(std::move(acc));
  }
  return TriangularMap(d, std::move(order), std::move(update));
}

// --- translation generators ----------------------------------------------------

enum class Side { Left, Right, Both };

inline int default_grid_radius(const LoopSpec& spec) { return spec.max_param_degree() + 1; }

// Logs of lambda_p (and/or rho_p) for p over the integer grid {-g..g}^3 with
// g = max parameter degree + 1, returned as the echelon basis of their span.
// The log of a translation depends polynomially on p with per-coordinate
// degree at most the parameter degrees, so by interpolation the grid values
// span the same space as all rational p.
inline std::vector<VectorField> translation_generators(const LoopSpec& spec, Side side,
                                                       int grid_radius = 0) {
  int g = grid_radius > 0 ? grid_radius : default_grid_radius(spec);
  FieldSpan span(3);
  for (int x = -g; x <= g; ++x)
    for (int y = -g; y <= g; ++y)
      for (int z = -g; z <= g; ++z) {
        LoopPoint p{Rat(x), Rat(y), Rat(z)};
        if (side != Side::Right) span.insert(map_log(left_translation(spec, p)));
        if (side != Side::Left) span.insert(map_log(right_translation(spec, p)));
      }
  return span.basis();
}

// --- identification pipeline ----------------------------------------------------

struct SideResult {
  int dim = 0;
  Fingerprint fp;
  std::vector<std::string> verdicts;
  std::vector<std::vector<std::string>> basis;  // serialized fields
};

struct PaperPrediction {
  std::string model_name;
  int dim;
};

// The models the source results predict for specific parameter shapes:
// LV with v = v(x) of degree n >= 2 -> f_{n+2} + R; LF with f = f(y) of
// degree n -> f_4 xZ f_{n+2}; LV with v = p(x) + q(z), both parts
// non-linear -> f_{n+2} xZ f_{m+2}.
inline std::optional<PaperPrediction> paper_predicted_model(const LoopSpec& spec) {
  auto amalg_name = [](int n, int m) {
    int lo = std::min(n, m), hi = std::max(n, m);
    return "f_" + std::to_string(lo + 2) + " xZ f_" + std::to_string(hi + 2);
  };
  if (spec.family == LoopFamily::LV) {
    const Poly& v = spec.v;
    int dx = v.degree_in("x"), dz = v.degree_in("z");
    if (dz == 0 && dx >= 2)
      return PaperPrediction{"f_" + std::to_string(dx + 2) + " + R^1", dx + 3};
    if (dx >= 1 && dz >= 1 && !(dx == 1 && dz == 1)) {
      bool split = true;
      for (auto& [e, c] : v.terms())
        if (total_degree(e) != e[v.var_index("x")] && total_degree(e) != e[v.var_index("z")])
          split = false;  // mixed monomial
      if (split) return PaperPrediction{amalg_name(dx, dz), dx + dz + 3};
    }
    return std::nullopt;
  }
  if (spec.family == LoopFamily::LF) {
    const Poly& f = spec.f;
    if (f.degree_in("x") == 0 && f.degree_in("y") >= 1)
      return PaperPrediction{amalg_name(2, f.degree_in("y")), f.degree_in("y") + 5};
    return std::nullopt;
  }
  return std::nullopt;
}

struct IdentifyReport {
  bool proper = false;
  std::string properness_reason;
  std::optional<SideResult> left, right, mult;
  std::optional<std::string> cap_error;
  std::optional<PaperPrediction> prediction;
  std::optional<bool> agreement;
  std::optional<int> inn_dim;
  std::optional<bool> inn_abelian;
};

namespace detail {

inline SideResult side_result(const FieldSpan& span, int catalog_max_n) {
  SideResult r;
  r.dim = span.size();
  auto algebra = from_field_span(span);
  r.fp = fingerprint(algebra);
  r.verdicts = identify_model(algebra, catalog_max_n);
  for (auto& b : span.basis()) r.basis.push_back(b.to_strings());
  return r;
}

// Basis of the subalgebra of fields vanishing at the origin: the stabilizer
// of the identity inside the closure.
inline std::vector<VectorField> stabilizer_subalgebra(const FieldSpan& span) {
  RatMat conditions;
  int d = span.space_dim();
  for (int c = 0; c < d; ++c) {
    RatVec row;
    for (auto& b : span.basis()) row.push_back(b[c].constant_term());
    conditions.push_back(std::move(row));
  }
  RatMat combos = kernel_basis(std::move(conditions), span.basis().size());
  std::vector<VectorField> out;
  for (auto& t : combos) {
    VectorField x = VectorField::zero(d);
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] != 0) x = x + t[i] * span.basis()[i];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace detail

// End-to-end: sample translation logs, close under brackets, fingerprint,
// identify, and compare with the predicted model where one exists. On a
// closure cap overflow the report records the cap error state instead of a
// multiplication-group result.
inline IdentifyReport identify_mult(const LoopSpec& spec, const ClosureCaps& caps = {},
                                    int catalog_max_n = 8, int grid_radius = 0) {
  auto prop = properness_check(spec);
  if (!prop.proper)
    throw std::invalid_argument("identify_mult: spec is not proper (" + prop.reason + ")");
  IdentifyReport rep;
  rep.proper = prop.proper;
  rep.properness_reason = prop.reason;
  rep.prediction = paper_predicted_model(spec);
  try {
    auto left_gens = translation_generators(spec, Side::Left, grid_radius);
    auto right_gens = translation_generators(spec, Side::Right, grid_radius);
    FieldSpan left = lie_closure(left_gens, caps);
    FieldSpan right = lie_closure(right_gens, caps);
    std::vector<VectorField> both = left_gens;
    both.insert(both.end(), right_gens.begin(), right_gens.end());
    FieldSpan mult = lie_closure(both, caps);

    rep.left = detail::side_result(left, catalog_max_n);
    rep.right = detail::side_result(right, catalog_max_n);
    rep.mult = detail::side_result(mult, catalog_max_n);
    rep.inn_dim = mult.size() - 3;

    auto stab = detail::stabilizer_subalgebra(mult);
    bool abelian = true;
    for (std::size_t i = 0; i < stab.size(); ++i)
      for (std::size_t j = i + 1; j < stab.size(); ++j)
        if (!bracket(stab[i], stab[j]).is_zero()) abelian = false;
    rep.inn_abelian = abelian;

    if (rep.prediction) {
      bool agrees = rep.mult->dim == rep.prediction->dim;
      std::string want = "consistent with " + rep.prediction->model_name;
      bool found = false;
      for (auto& v : rep.mult->verdicts)
        if (v == want) found = true;
      rep.agreement = agrees && found;
    }
  } catch (const ClosureCapExceeded&) {
    rep.cap_error = "multiplication group not a finite-dimensional Lie group at this cap";
    if (rep.prediction) rep.agreement = false;
  }
  return rep;
}

}  // namespace loopmult
