#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "loopmult/errors.hpp"
#include "loopmult/linalg.hpp"
#include "loopmult/vfield.hpp"

namespace loopmult {

// Finite-dimensional Lie algebra over Rat given by structure constants
// c^k_{ij}; antisymmetry and the Jacobi identity are validated on
// construction, so an AbstractLieAlgebra is always an actual Lie algebra.
class AbstractLieAlgebra {
 public:
  AbstractLieAlgebra(int dim, std::vector<Rat> constants) : dim_(dim), c_(std::move(constants)) {
    if (static_cast<int>(c_.size()) != dim_ * dim_ * dim_)
      throw std::invalid_argument("AbstractLieAlgebra: constants size mismatch");
    validate();
  }

  static AbstractLieAlgebra from_brackets(
      int dim, const std::vector<std::tuple<int, int, int, Rat>>& triples) {
    std::vector<Rat> c(static_cast<std::size_t>(dim) * dim * dim, Rat(0));
    for (auto& [i, j, k, v] : triples) {
      c[(static_cast<std::size_t>(i) * dim + j) * dim + k] += v;
      c[(static_cast<std::size_t>(j) * dim + i) * dim + k] -= v;
    }
    return AbstractLieAlgebra(dim, std::move(c));
  }

  int dim() const { return dim_; }

  const Rat& c(int i, int j, int k) const {
    return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  RatVec bracket_vec(const RatVec& u, const RatVec& v) const {
    RatVec out(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < dim_; ++j) {
        if (v[j] == 0) continue;
        Rat f = u[i] * v[j];
        for (int k = 0; k < dim_; ++k)
          if (c(i, j, k) != 0) out[k] += f * c(i, j, k);
      }
    }
    return out;
  }

  // Direct sum with an abelian factor R^extra.
  AbstractLieAlgebra plus_abelian(int extra) const {
    int nd = dim_ + extra;
    std::vector<Rat> nc(static_cast<std::size_t>(nd) * nd * nd, Rat(0));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
          nc[(static_cast<std::size_t>(i) * nd + j) * nd + k] = c(i, j, k);
    return AbstractLieAlgebra(nd, std::move(nc));
  }

  // Structure constants conjugated by an invertible matrix: new basis
  // f_i = Sum_j P[j][i] e_j.
  AbstractLieAlgebra change_basis(const RatMat& p) const {
    RatMat pinv = inverse_matrix(p);
    std::vector<Rat> nc(static_cast<std::size_t>(dim_) * dim_ * dim_, Rat(0));
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        RatVec fi(dim_), fj(dim_);
        for (int t = 0; t < dim_; ++t) {
          fi[t] = p[t][i];
          fj[t] = p[t][j];
        }
        RatVec br = bracket_vec(fi, fj);  // in the e-basis
        for (int k = 0; k < dim_; ++k) {
          Rat acc = 0;
          for (int t = 0; t < dim_; ++t) acc += pinv[k][t] * br[t];
          nc[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k] = acc;
        }
      }
    return AbstractLieAlgebra(dim_, std::move(nc));
  }

  static RatMat inverse_matrix(const RatMat& p) {
    int n = static_cast<int>(p.size());
    RatMat aug(n, RatVec(2 * n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug[i][j] = p[i][j];
      aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n)
      throw std::invalid_argument("inverse_matrix: singular matrix");
    RatMat inv(n, RatVec(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
  }

 private:
  int dim_;
  std::vector<Rat> c_;  // flattened c[i][j][k]

  void validate() const {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
          if (c(i, j, k) != -c(j, i, k))
            throw std::invalid_argument("AbstractLieAlgebra: constants not antisymmetric");
    RatVec ei(dim_, 0), ej(dim_, 0), ek(dim_, 0);
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int k = j + 1; k < dim_; ++k) {
          std::fill(ei.begin(), ei.end(), Rat(0));
          std::fill(ej.begin(), ej.end(), Rat(0));
          std::fill(ek.begin(), ek.end(), Rat(0));
          ei[i] = 1;
          ej[j] = 1;
          ek[k] = 1;
          RatVec s = bracket_vec(ei, bracket_vec(ej, ek));
          RatVec t = bracket_vec(ej, bracket_vec(ek, ei));
          RatVec u = bracket_vec(ek, bracket_vec(ei, ej));
          for (int t2 = 0; t2 < dim_; ++t2)
            if (s[t2] + t[t2] + u[t2] != 0)
              throw std::invalid_argument("AbstractLieAlgebra: Jacobi identity fails");
        }
  }
};

// Reads structure constants off a bracket-closed field span. The closedness
// recheck is part of the construction: a bracket that leaves the span is a
// hard error, never a silent projection.
inline AbstractLieAlgebra from_field_span(const FieldSpan& s) {
  int n = s.size();
  std::vector<Rat> c(static_cast<std::size_t>(n) * n * n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      VectorField br = bracket(s.basis()[i], s.basis()[j]);
      auto coords = s.coordinates(br);
      if (!coords)
        throw NotClosed("from_field_span: bracket of basis elements leaves the span");
      for (int k = 0; k < n; ++k) {
        c[(static_cast<std::size_t>(i) * n + j) * n + k] = (*coords)[k];
        c[(static_cast<std::size_t>(j) * n + i) * n + k] = -(*coords)[k];
      }
    }
  return AbstractLieAlgebra(n, std::move(c));
}

// Dimension data of the classical series; enough to match the models this
// project cares about against each other.
struct Fingerprint {
  int dim = 0;
  std::vector<int> lcs_dims;  // lower central series, starting at dim
  std::vector<int> dss_dims;  // derived series, starting at dim
  int center_dim = 0;
  std::vector<int> ucs_dims;  // upper central series, starting at 0

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "dim " << dim << ", lcs [";
    for (std::size_t i = 0; i < lcs_dims.size(); ++i) os << (i ? "," : "") << lcs_dims[i];
    os << "], dss [";
    for (std::size_t i = 0; i < dss_dims.size(); ++i) os << (i ? "," : "") << dss_dims[i];
    os << "], center " << center_dim << ", ucs [";
    for (std::size_t i = 0; i < ucs_dims.size(); ++i) os << (i ? "," : "") << ucs_dims[i];
    os << "]";
    return os.str();
  }
};

namespace detail {

// Span of all brackets [u, v], u in U, v in V (rows are basis vectors).
inline RatMat product_space(const AbstractLieAlgebra& g, const RatMat& u, const RatMat& v) {
  RatMat rows;
  for (auto& a : u)
    for (auto& b : v) rows.push_back(g.bracket_vec(a, b));
  return row_space(std::move(rows));
}

inline RatMat full_space(int dim) {
  RatMat rows(dim, RatVec(dim, 0));
  for (int i = 0; i < dim; ++i) rows[i][i] = 1;
  return rows;
}

// Rows r with r . x = 0 for exactly the x in the row span of `rows`.
inline RatMat annihilator(const RatMat& rows, int dim) {
  if (rows.empty()) return full_space(dim);
  return kernel_basis(rows, dim);
}

// {u : [e_i, u] in W for all i}; W given by rows.
inline RatMat bracket_preimage(const AbstractLieAlgebra& g, const RatMat& w) {
  int d = g.dim();
  RatMat ann = annihilator(w, d);
  RatMat conditions;
  for (int i = 0; i < d; ++i) {
    // Row t of ad(e_i) in matrix form: [e_i, u]_k = sum_j c(i,j,k) u_j.
    for (auto& a : ann) {
      RatVec cond(d, 0);
      for (int j = 0; j < d; ++j) {
        Rat acc = 0;
        for (int k = 0; k < d; ++k)
          if (g.c(i, j, k) != 0) acc += a[k] * g.c(i, j, k);
        cond[j] = acc;
      }
      conditions.push_back(std::move(cond));
    }
  }
  if (conditions.empty()) return full_space(d);
  return kernel_basis(std::move(conditions), d);
}

inline RatMat intersect(const RatMat& u, const RatMat& v, int dim) {
  // x in U cap V  <=>  ann(U) x = 0 and ann(V) x = 0.
  RatMat conditions = annihilator(u, dim);
  for (auto& r : annihilator(v, dim)) conditions.push_back(r);
  return kernel_basis(std::move(conditions), dim);
}

}  // namespace detail

inline Fingerprint fingerprint(const AbstractLieAlgebra& g) {
  Fingerprint fp;
  fp.dim = g.dim();
  RatMat full = detail::full_space(g.dim());

  RatMat cur = full;
  fp.lcs_dims.push_back(static_cast<int>(cur.size()));
  while (true) {
    RatMat next = detail::product_space(g, full, cur);
    if (next.size() == cur.size()) break;
    cur = std::move(next);
    fp.lcs_dims.push_back(static_cast<int>(cur.size()));
    if (cur.empty()) break;
  }

  cur = full;
  fp.dss_dims.push_back(static_cast<int>(cur.size()));
  while (true) {
    RatMat next = detail::product_space(g, cur, cur);
    if (next.size() == cur.size()) break;
    cur = std::move(next);
    fp.dss_dims.push_back(static_cast<int>(cur.size()));
    if (cur.empty()) break;
  }

  RatMat z;
  fp.ucs_dims.push_back(0);
  while (true) {
    RatMat next = detail::bracket_preimage(g, z);
    if (next.size() == z.size()) break;
    z = std::move(next);
    fp.ucs_dims.push_back(static_cast<int>(z.size()));
    if (static_cast<int>(z.size()) == g.dim()) break;
  }
  fp.center_dim = fp.ucs_dims.size() > 1 ? fp.ucs_dims[1] : 0;
  return fp;
}

// Greatest subspace of `subspace` that is an ideal of g: the stabilizing
// limit of W -> {w in W : [g, w] subset of W}.
inline RatMat largest_ideal_in(const AbstractLieAlgebra& g, RatMat subspace) {
  subspace = row_space(std::move(subspace));
  while (true) {
    RatMat pre = detail::bracket_preimage(g, subspace);
    RatMat next = detail::intersect(subspace, pre, g.dim());
    if (next.size() == subspace.size()) return subspace;
    subspace = std::move(next);
  }
}

// --- catalog ----------------------------------------------------------------

// Elementary filiform f_{n+2}: [e_1, e_i] = e_{i+1} for 2 <= i <= n+1.
inline AbstractLieAlgebra filiform_algebra(int n) {
  if (n < 1) throw std::invalid_argument("filiform_algebra: need n >= 1");
  int d = n + 2;
  std::vector<std::tuple<int, int, int, Rat>> br;
  for (int i = 1; i <= n; ++i) br.emplace_back(0, i, i + 1, Rat(1));
  return AbstractLieAlgebra::from_brackets(d, br);
}

inline AbstractLieAlgebra abelian_algebra(int d) {
  return AbstractLieAlgebra(d, std::vector<Rat>(static_cast<std::size_t>(d) * d * d, Rat(0)));
}

// f_{n+2} x_Z f_{m+2}: two filiform chains sharing the one-dimensional
// center. Basis: e_1..e_{n+1}, g_1..g_{m+1}, z.
inline AbstractLieAlgebra amalgamated_filiform_algebra(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("amalgamated_filiform_algebra: need n,m >= 1");
  int d = n + m + 3;
  int zc = d - 1;
  std::vector<std::tuple<int, int, int, Rat>> br;
  for (int i = 1; i <= n - 1; ++i) br.emplace_back(0, i, i + 1, Rat(1));
  br.emplace_back(0, n, zc, Rat(1));
  int g1 = n + 1;
  for (int j = 1; j <= m - 1; ++j) br.emplace_back(g1, g1 + j, g1 + j + 1, Rat(1));
  br.emplace_back(g1, g1 + m, zc, Rat(1));
  return AbstractLieAlgebra::from_brackets(d, br);
}

struct CatalogEntry {
  std::string name;
  Fingerprint fp;
};

// Catalog fingerprints are computed from generated structure constants by
// the same fingerprint code, never from hand tables.
inline std::vector<CatalogEntry> model_catalog(int dim, int max_n = 8) {
  std::vector<CatalogEntry> out;
  out.push_back({"R^" + std::to_string(dim), fingerprint(abelian_algebra(dim))});
  auto fname = [](int n) { return "f_" + std::to_string(n + 2); };
  if (dim >= 3 && dim - 2 <= max_n)
    out.push_back({fname(dim - 2), fingerprint(filiform_algebra(dim - 2))});
  for (int n = 1; n + 2 < dim && n <= max_n; ++n) {
    int k = dim - (n + 2);
    out.push_back({fname(n) + " + R^" + std::to_string(k),
                   fingerprint(filiform_algebra(n).plus_abelian(k))});
  }
  for (int n = 1; n <= max_n; ++n)
    for (int m = n; m <= max_n; ++m)
      if (n + m + 3 == dim)
        out.push_back({fname(n) + " xZ " + fname(m),
                       fingerprint(amalgamated_filiform_algebra(n, m))});
  return out;
}

// Fingerprint consistency against the catalog. Deliberately not an
// isomorphism certificate: the verdict lists every catalog model whose
// fingerprint matches, and says "consistent with".
inline std::vector<std::string> identify_model(const AbstractLieAlgebra& g, int max_n = 8) {
  Fingerprint fp = fingerprint(g);
  std::vector<std::string> verdicts;
  for (auto& entry : model_catalog(g.dim(), max_n))
    if (entry.fp == fp) verdicts.push_back("consistent with " + entry.name);
  if (verdicts.empty()) verdicts.push_back("no catalog match");
  return verdicts;
}

}  // namespace loopmult
