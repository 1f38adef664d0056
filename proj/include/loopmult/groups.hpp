#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "loopmult/poly.hpp"
#include "loopmult/structure.hpp"

namespace loopmult {

// The five coordinate models. F4Paper is the 4-dimensional filiform group in
// the coordinates of its 4x4 matrix representation; Filiform is F_{n+2} in
// the coordinates of its (n+2)x(n+2) unipotent representation; FiliformR
// carries the extra central R factor; Amalg is F_{n+2} x_Z F_{m+2} (two
// filiform blocks sharing the center coordinate k); G5 is the 5-dimensional
// indecomposable nilpotent group in Campbell-Hausdorff coordinates.
//
// All laws are templated over the scalar ring: Rat for concrete elements,
// Poly for element families with polynomial coordinates.

template <class S>
struct F4PaperElt {
  S x1{}, x2{}, x3{}, x4{};
};

template <class S>
struct FiliformElt {
  S c{};
  std::vector<S> a;  // a_1..a_n
  S k{};
};

template <class S>
struct FiliformRElt {
  S c{};
  std::vector<S> a;
  S k{};
  S d{};
};

template <class S>
struct AmalgElt {
  S c{};
  std::vector<S> a;  // a_1..a_n
  S b{};
  std::vector<S> d;  // d_1..d_m
  S k{};             // shared center coordinate
};

template <class S>
struct G5Elt {
  S x1{}, x2{}, x3{}, x4{}, x5{};
};

// --- F4Paper ------------------------------------------------------------

template <class S>
F4PaperElt<S> mul(const F4PaperElt<S>& g, const F4PaperElt<S>& h) {
  F4PaperElt<S> r;
  r.x1 = g.x1 + h.x1;
  r.x2 = g.x2 + h.x2;
  r.x3 = g.x3 + h.x3 - g.x2 * h.x1;
  r.x4 = g.x4 + h.x4 - h.x1 * g.x3 + rat(1, 2) * (g.x2 * h.x1 * h.x1);
  return r;
}

template <class S>
F4PaperElt<S> inv(const F4PaperElt<S>& g) {
  F4PaperElt<S> r;
  r.x1 = -g.x1;
  r.x2 = -g.x2;
  r.x3 = -g.x3 - g.x2 * g.x1;
  r.x4 = -g.x4 - g.x1 * g.x3 - rat(1, 2) * (g.x2 * g.x1 * g.x1);
  return r;
}

inline RatMat f4paper_matrix(const F4PaperElt<Rat>& g) {
  RatMat m(4, RatVec(4, 0));
  m[0][0] = 1;
  m[0][1] = g.x3;
  m[0][2] = g.x2;
  m[0][3] = g.x4;
  m[1][1] = 1;
  m[1][3] = -g.x1;
  m[2][1] = -g.x1;
  m[2][2] = 1;
  m[2][3] = g.x1 * g.x1 / 2;
  m[3][3] = 1;
  return m;
}

// --- filiform blocks ------------------------------------------------------

namespace detail {

// Sum_{r=j}^{n} a_r (-c2)^(r-j) / (r-j)!  packed for all j at once.
template <class S>
std::vector<S> block_a_mul(const std::vector<S>& a1, const std::vector<S>& a2, const S& c2) {
  int n = static_cast<int>(a1.size());
  std::vector<S> pw;  // pw[t] = (-c2)^(t+1)
  S mc2 = -c2;
  for (int t = 0; t < n; ++t) pw.push_back(t == 0 ? mc2 : S(pw.back() * mc2));
  std::vector<S> out(a2);
  for (int j = 1; j <= n; ++j) {
    S acc = out[j - 1] + a1[j - 1];
    for (int r = j + 1; r <= n; ++r)
      acc = acc + factorial_inv(r - j) * (a1[r - 1] * pw[r - j - 1]);
    out[j - 1] = acc;
  }
  return out;
}

// Sum_{r=1}^{n} a_r (-c2)^r / r!  -- the k-column accumulation.
template <class S>
S block_k_term(const std::vector<S>& a1, const S& c2) {
  int n = static_cast<int>(a1.size());
  S acc{};
  S mc2 = -c2;
  S pw{};
  for (int r = 1; r <= n; ++r) {
    pw = (r == 1) ? mc2 : S(pw * mc2);
    acc = acc + factorial_inv(r) * (a1[r - 1] * pw);
  }
  return acc;
}

// a-part of the inverse: a~_j = -Sum_{r=j}^n a_r c^(r-j)/(r-j)!.
template <class S>
std::vector<S> block_a_inv(const std::vector<S>& a, const S& c) {
  int n = static_cast<int>(a.size());
  std::vector<S> pw;
  for (int t = 0; t < n; ++t) pw.push_back(t == 0 ? c : S(pw.back() * c));
  std::vector<S> out(n);
  for (int j = 1; j <= n; ++j) {
    S acc = a[j - 1];
    for (int r = j + 1; r <= n; ++r)
      acc = acc + factorial_inv(r - j) * (a[r - 1] * pw[r - j - 1]);
    out[j - 1] = -acc;
  }
  return out;
}

// k~ = -k - Sum_r a_r c^r / r!.
template <class S>
S block_k_inv(const std::vector<S>& a, const S& c, const S& k) {
  int n = static_cast<int>(a.size());
  S acc = -k;
  S pw{};
  for (int r = 1; r <= n; ++r) {
    pw = (r == 1) ? c : S(pw * c);
    acc = acc - factorial_inv(r) * (a[r - 1] * pw);
  }
  return acc;
}

}  // namespace detail

template <class S>
FiliformElt<S> mul(const FiliformElt<S>& g, const FiliformElt<S>& h) {
  FiliformElt<S> r;
  r.c = g.c + h.c;
  r.a = detail::block_a_mul(g.a, h.a, h.c);
  r.k = g.k + h.k + detail::block_k_term(g.a, h.c);
  return r;
}

template <class S>
FiliformElt<S> inv(const FiliformElt<S>& g) {
  FiliformElt<S> r;
  r.c = -g.c;
  r.a = detail::block_a_inv(g.a, g.c);
  r.k = detail::block_k_inv(g.a, g.c, g.k);
  return r;
}

template <class S>
FiliformRElt<S> mul(const FiliformRElt<S>& g, const FiliformRElt<S>& h) {
  FiliformRElt<S> r;
  r.c = g.c + h.c;
  r.a = detail::block_a_mul(g.a, h.a, h.c);
  r.k = g.k + h.k + detail::block_k_term(g.a, h.c);
  r.d = g.d + h.d;
  return r;
}

template <class S>
FiliformRElt<S> inv(const FiliformRElt<S>& g) {
  FiliformRElt<S> r;
  r.c = -g.c;
  r.a = detail::block_a_inv(g.a, g.c);
  r.k = detail::block_k_inv(g.a, g.c, g.k);
  r.d = -g.d;
  return r;
}

template <class S>
AmalgElt<S> mul(const AmalgElt<S>& g, const AmalgElt<S>& h) {
  AmalgElt<S> r;
  r.c = g.c + h.c;
  r.a = detail::block_a_mul(g.a, h.a, h.c);
  r.b = g.b + h.b;
  r.d = detail::block_a_mul(g.d, h.d, h.b);
  r.k = g.k + h.k + detail::block_k_term(g.a, h.c) + detail::block_k_term(g.d, h.b);
  return r;
}

template <class S>
AmalgElt<S> inv(const AmalgElt<S>& g) {
  AmalgElt<S> r;
  r.c = -g.c;
  r.a = detail::block_a_inv(g.a, g.c);
  r.b = -g.b;
  r.d = detail::block_a_inv(g.d, g.b);
  r.k = detail::block_k_inv(g.a, g.c, g.k) + detail::block_k_inv(g.d, g.b, S{});
  return r;
}

// --- G5 -------------------------------------------------------------------

template <class S>
G5Elt<S> mul(const G5Elt<S>& g, const G5Elt<S>& h) {
  G5Elt<S> r;
  r.x1 = g.x1 + h.x1;
  r.x2 = g.x2 + h.x2;
  r.x3 = g.x3 + h.x3 + rat(1, 2) * (g.x1 * h.x2 - g.x2 * h.x1);
  r.x4 = g.x4 + h.x4;
  r.x5 = g.x5 + h.x5 + rat(1, 2) * (g.x1 * h.x4 - g.x4 * h.x1);
  return r;
}

template <class S>
G5Elt<S> inv(const G5Elt<S>& g) {
  return G5Elt<S>{-g.x1, -g.x2, -g.x3, -g.x4, -g.x5};
}

// --- matrix oracle ----------------------------------------------------------

// (n+2)x(n+2) unipotent matrix of a pure filiform element.
inline RatMat filiform_matrix(const Rat& c, const std::vector<Rat>& a, const Rat& k) {
  int n = static_cast<int>(a.size());
  int size = n + 2;
  RatMat mt(size, RatVec(size, 0));
  for (int i = 0; i < size; ++i) mt[i][i] = 1;
  for (int j = 1; j <= n; ++j) mt[0][j] = a[j - 1];
  mt[0][n + 1] = k;
  RatVec pw{Rat(1)};  // (-c)^t / t!
  for (int t = 1; t <= n; ++t) pw.push_back(pw.back() * (-c) / t);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) mt[i][j] = pw[i - j];
    mt[i][n + 1] = pw[i];
  }
  return mt;
}

inline RatMat matrix_embed(const FiliformElt<Rat>& g) { return filiform_matrix(g.c, g.a, g.k); }

// The (n+3)x(n+3) representation of FiliformR: the filiform block with the
// trivial R factor carried in the last column.
inline RatMat matrix_embed(const FiliformRElt<Rat>& g) {
  RatMat block = filiform_matrix(g.c, g.a, g.k);
  int size = static_cast<int>(block.size()) + 1;
  RatMat mt(size, RatVec(size, 0));
  for (int i = 0; i + 1 < size; ++i)
    for (int j = 0; j + 1 < size; ++j) mt[i][j] = block[i][j];
  mt[0][size - 1] = g.d;
  mt[size - 1][size - 1] = 1;
  return mt;
}

// Amalg oracle: the pair of block matrices with the center split k = k1 + k2;
// products of pairs recombine to the closed-form law for any split.
inline std::pair<RatMat, RatMat> matrix_embed_pair(const AmalgElt<Rat>& g) {
  return {filiform_matrix(g.c, g.a, g.k), filiform_matrix(g.b, g.d, Rat(0))};
}

// --- model dispatch ---------------------------------------------------------

enum class Model { F4Paper, Filiform, FiliformR, Amalg, G5 };

struct ModelSpec {
  Model model;
  int n = 0;
  int m = 0;

  int dim() const {
    switch (model) {
      case Model::F4Paper: return 4;
      case Model::Filiform: return n + 2;
      case Model::FiliformR: return n + 3;
      case Model::Amalg: return n + m + 3;
      case Model::G5: return 5;
    }
    return 0;
  }

  std::string name() const {
    switch (model) {
      case Model::F4Paper: return "F4Paper";
      case Model::Filiform: return "Filiform";
      case Model::FiliformR: return "FiliformR";
      case Model::Amalg: return "Amalg";
      case Model::G5: return "G5";
    }
    return "";
  }
};

// Flat coordinate layout: F4Paper (x1..x4); Filiform (c, a1..an, k);
// FiliformR (c, a1..an, k, d); Amalg (c, a1..an, b, d1..dm, k); G5 (x1..x5).
template <class S>
std::vector<S> model_mul(const ModelSpec& ms, const std::vector<S>& x, const std::vector<S>& y) {
  auto need = [&](std::size_t want) {
    if (x.size() != want || y.size() != want)
      throw std::invalid_argument("model_mul: coordinate count mismatch for " + ms.name());
  };
  switch (ms.model) {
    case Model::F4Paper: {
      need(4);
      auto r = mul(F4PaperElt<S>{x[0], x[1], x[2], x[3]}, F4PaperElt<S>{y[0], y[1], y[2], y[3]});
      return {r.x1, r.x2, r.x3, r.x4};
    }
    case Model::Filiform: {
      need(ms.n + 2);
      FiliformElt<S> g{x[0], {x.begin() + 1, x.begin() + 1 + ms.n}, x[ms.n + 1]};
      FiliformElt<S> h{y[0], {y.begin() + 1, y.begin() + 1 + ms.n}, y[ms.n + 1]};
      auto r = mul(g, h);
      std::vector<S> out{r.c};
      out.insert(out.end(), r.a.begin(), r.a.end());
      out.push_back(r.k);
      return out;
    }
    case Model::FiliformR: {
      need(ms.n + 3);
      FiliformRElt<S> g{x[0], {x.begin() + 1, x.begin() + 1 + ms.n}, x[ms.n + 1], x[ms.n + 2]};
      FiliformRElt<S> h{y[0], {y.begin() + 1, y.begin() + 1 + ms.n}, y[ms.n + 1], y[ms.n + 2]};
      auto r = mul(g, h);
      std::vector<S> out{r.c};
      out.insert(out.end(), r.a.begin(), r.a.end());
      out.push_back(r.k);
      out.push_back(r.d);
      return out;
    }
    case Model::Amalg: {
      need(ms.n + ms.m + 3);
      AmalgElt<S> g{x[0],
                    {x.begin() + 1, x.begin() + 1 + ms.n},
                    x[ms.n + 1],
                    {x.begin() + ms.n + 2, x.begin() + ms.n + 2 + ms.m},
                    x[ms.n + ms.m + 2]};
      AmalgElt<S> h{y[0],
                    {y.begin() + 1, y.begin() + 1 + ms.n},
                    y[ms.n + 1],
                    {y.begin() + ms.n + 2, y.begin() + ms.n + 2 + ms.m},
                    y[ms.n + ms.m + 2]};
      auto r = mul(g, h);
      std::vector<S> out{r.c};
      out.insert(out.end(), r.a.begin(), r.a.end());
      out.push_back(r.b);
      out.insert(out.end(), r.d.begin(), r.d.end());
      out.push_back(r.k);
      return out;
    }
    case Model::G5: {
      need(5);
      auto r = mul(G5Elt<S>{x[0], x[1], x[2], x[3], x[4]}, G5Elt<S>{y[0], y[1], y[2], y[3], y[4]});
      return {r.x1, r.x2, r.x3, r.x4, r.x5};
    }
  }
  throw std::logic_error("model_mul: unreachable");
}

template <class S>
std::vector<S> model_inv(const ModelSpec& ms, const std::vector<S>& x) {
  switch (ms.model) {
    case Model::F4Paper: {
      auto r = inv(F4PaperElt<S>{x[0], x[1], x[2], x[3]});
      return {r.x1, r.x2, r.x3, r.x4};
    }
    case Model::Filiform: {
      auto r = inv(FiliformElt<S>{x[0], {x.begin() + 1, x.begin() + 1 + ms.n}, x[ms.n + 1]});
      std::vector<S> out{r.c};
      out.insert(out.end(), r.a.begin(), r.a.end());
      out.push_back(r.k);
      return out;
    }
    case Model::FiliformR: {
      auto r = inv(FiliformRElt<S>{
          x[0], {x.begin() + 1, x.begin() + 1 + ms.n}, x[ms.n + 1], x[ms.n + 2]});
      std::vector<S> out{r.c};
      out.insert(out.end(), r.a.begin(), r.a.end());
      out.push_back(r.k);
      out.push_back(r.d);
      return out;
    }
    case Model::Amalg: {
      auto r = inv(AmalgElt<S>{x[0],
                               {x.begin() + 1, x.begin() + 1 + ms.n},
                               x[ms.n + 1],
                               {x.begin() + ms.n + 2, x.begin() + ms.n + 2 + ms.m},
                               x[ms.n + ms.m + 2]});
      std::vector<S> out{r.c};
      out.insert(out.end(), r.a.begin(), r.a.end());
      out.push_back(r.b);
      out.insert(out.end(), r.d.begin(), r.d.end());
      out.push_back(r.k);
      return out;
    }
    case Model::G5: {
      auto r = inv(G5Elt<S>{x[0], x[1], x[2], x[3], x[4]});
      return {r.x1, r.x2, r.x3, r.x4, r.x5};
    }
  }
  throw std::logic_error("model_inv: unreachable");
}

template <class S>
std::vector<S> model_identity(const ModelSpec& ms) {
  return std::vector<S>(ms.dim(), S{});
}

// --- subgroups --------------------------------------------------------------

enum class SubgroupTag {
  F4H1,            // {g(0,0,v,0)}
  F4H2,            // {g(v,0,0,0)}
  FiliformAslots,  // a_1..a_n slots in Filiform / FiliformR
  FiliformRCenter, // (k, d) slots of FiliformR
  AmalgADslots,    // a- and d-slots of Amalg
  AmalgCenter,     // k slot of Amalg
  G5KL,            // {g(0,k,0,l,0)}
  G5Center         // (x3, x5) slots
};

inline std::vector<int> subgroup_slots(const ModelSpec& ms, SubgroupTag tag) {
  switch (tag) {
    case SubgroupTag::F4H1: return {2};
    case SubgroupTag::F4H2: return {0};
    case SubgroupTag::FiliformAslots: {
      std::vector<int> s;
      for (int i = 1; i <= ms.n; ++i) s.push_back(i);
      return s;
    }
    case SubgroupTag::FiliformRCenter: return {ms.n + 1, ms.n + 2};
    case SubgroupTag::AmalgADslots: {
      std::vector<int> s;
      for (int i = 1; i <= ms.n; ++i) s.push_back(i);
      for (int j = 0; j < ms.m; ++j) s.push_back(ms.n + 2 + j);
      return s;
    }
    case SubgroupTag::AmalgCenter: return {ms.n + ms.m + 2};
    case SubgroupTag::G5KL: return {1, 3};
    case SubgroupTag::G5Center: return {2, 4};
  }
  throw std::invalid_argument("subgroup_slots: unsupported tag");
}

inline RatMat subgroup_subspace(const ModelSpec& ms, SubgroupTag tag) {
  RatMat rows;
  for (int slot : subgroup_slots(ms, tag)) {
    RatVec row(ms.dim(), 0);
    row[slot] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

// --- coset decompositions ---------------------------------------------------

// Unique factorization g = rep * h with h in the tagged subgroup and rep in
// the zero-slot transversal; returns (rep, subgroup coordinates).
template <class S>
std::pair<std::vector<S>, std::vector<S>> coset_reduce(const ModelSpec& ms, SubgroupTag tag,
                                                       const std::vector<S>& g) {
  std::vector<S> rep = g;
  std::vector<S> sub;
  switch (tag) {
    case SubgroupTag::F4H1:
      // g(x1,x2,x3,x4) = g(x1,x2,0,x4) g(0,0,x3,0)
      sub = {g[2]};
      rep[2] = S{};
      return {rep, sub};
    case SubgroupTag::F4H2: {
      // g = g(0,x,y,z) g(v,0,0,0) with v=x1, x=x2, y=x3+x1*x2,
      // z = x4 + x1*x3 + 1/2 x1^2*x2.
      sub = {g[0]};
      rep[0] = S{};
      rep[1] = g[1];
      rep[2] = g[2] + g[0] * g[1];
      rep[3] = g[3] + g[0] * g[2] + rat(1, 2) * (g[0] * g[0] * g[1]);
      return {rep, sub};
    }
    case SubgroupTag::FiliformAslots:
      // a-slots commute into place: g(c,a,k,d) = g(c,0,k,d) g(0,a,0,0).
      for (int i = 1; i <= ms.n; ++i) {
        sub.push_back(g[i]);
        rep[i] = S{};
      }
      return {rep, sub};
    case SubgroupTag::AmalgADslots:
      for (int i = 1; i <= ms.n; ++i) {
        sub.push_back(g[i]);
        rep[i] = S{};
      }
      for (int j = 0; j < ms.m; ++j) {
        sub.push_back(g[ms.n + 2 + j]);
        rep[ms.n + 2 + j] = S{};
      }
      return {rep, sub};
    case SubgroupTag::G5KL: {
      // g(w) = g(a,0,b,0,c) g(0,k,0,l,0): k=w2, l=w4, b=w3-1/2 w1 w2,
      // c = w5 - 1/2 w1 w4.
      sub = {g[1], g[3]};
      rep[1] = S{};
      rep[3] = S{};
      rep[2] = g[2] - rat(1, 2) * (g[0] * g[1]);
      rep[4] = g[4] - rat(1, 2) * (g[0] * g[3]);
      return {rep, sub};
    }
    default:
      throw std::invalid_argument("coset_reduce: unsupported subgroup tag");
  }
}

// --- Lie algebras of the models ----------------------------------------------

// Structure constants from the bilinear part of the coordinate law:
// m(x,y) = x + y + B(x,y) + higher order, with [u,v] = B(u,v) - B(v,u).
// Construction revalidates Jacobi, which cross-checks the law itself.
inline AbstractLieAlgebra model_lie_algebra(const ModelSpec& ms) {
  int d = ms.dim();
  auto name = [](const char* prefix, int i) {
    std::string s(prefix);
    if (i < 10) s += '0';
    return s + std::to_string(i);
  };
  std::vector<Poly> x, y;
  for (int i = 0; i < d; ++i) x.push_back(Poly::variable(name("g", i)));
  for (int i = 0; i < d; ++i) y.push_back(Poly::variable(name("h", i)));
  std::vector<Poly> prod = model_mul(ms, x, y);

  std::vector<Rat> c(static_cast<std::size_t>(d) * d * d, Rat(0));
  for (int t = 0; t < d; ++t) {
    const Poly& p = prod[t];
    for (auto& [e, coef] : p.terms()) {
      if (total_degree(e) != 2) continue;
      int gi = -1, hj = -1;
      bool clean = true;
      for (std::size_t v = 0; v < p.vars().size(); ++v) {
        if (e[v] == 0) continue;
        if (e[v] != 1) {
          clean = false;
          break;
        }
        const std::string& nm = p.vars()[v];
        int idx = std::stoi(nm.substr(1));
        if (nm[0] == 'g')
          gi = idx;
        else
          hj = idx;
      }
      if (!clean || gi < 0 || hj < 0) continue;  // g*g or h*h quadratic term
      c[(static_cast<std::size_t>(gi) * d + hj) * d + t] += coef;
      c[(static_cast<std::size_t>(hj) * d + gi) * d + t] -= coef;
    }
  }
  return AbstractLieAlgebra(d, std::move(c));
}

}  // namespace loopmult
