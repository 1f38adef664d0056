#pragma once

#include <array>
#include <string>
#include <vector>

#include "loopmult/poly.hpp"
#include "loopmult/triangular.hpp"

namespace loopmult {

// The six loop families, each a closed-form multiplication on R^3 with
// polynomial parameters vanishing at the origin:
//
//   LF      (x1,y1,z1)*(x2,y2,z2) = (x1+x2, y1+y2,
//              z1+z2 - x2 f(x1,y1) + 1/2 x2^2 y1)
//   LH      (x1+x2, y1+y2 + x2 h(x1), z1+z2 + y2 h(x1) + 1/2 x2 h(x1)^2)
//   LV      (x1+x2, y1+y2 - x2 v(x1,z1), z1+z2)
//   LVN     (x1+x2, y1+y2 + sum_i (-x2)^i/i! v_i(x1,z1), z1+z2)
//   LG5     (x1+x2, y1+y2 - x2 v1(x1), z1+z2 - x2 v2(x1))
//   LAMALG  (x1+x2, y1+y2, z1+z2 + sum_i (-x2)^i/i! v_i(x1,y1)
//                                 + sum_j (-y2)^j/j! u_j(x1,y1))
//
// Translations are triangular in the canonical coordinate order of the
// family: (x,y,z) for LF/LH/LG5/LAMALG and (x,z,y) for LV/LVN, so divisions
// are exact back-substitutions.

enum class LoopFamily { LF, LH, LV, LVN, LG5, LAMALG };

inline std::string family_name(LoopFamily f) {
  switch (f) {
    case LoopFamily::LF: return "LF";
    case LoopFamily::LH: return "LH";
    case LoopFamily::LV: return "LV";
    case LoopFamily::LVN: return "LVN";
    case LoopFamily::LG5: return "LG5";
    case LoopFamily::LAMALG: return "LAMALG";
  }
  return "";
}

template <class S>
using Pt3 = std::array<S, 3>;

using LoopPoint = Pt3<Rat>;

struct LoopSpec {
  LoopFamily family;
  Poly f;                // LF: f(x,y)
  Poly h;                // LH: h(x)
  Poly v;                // LV: v(x,z)
  std::vector<Poly> vs;  // LVN: v_i(x,z); LG5: v_1,v_2(x); LAMALG: v_i(x,y)
  std::vector<Poly> us;  // LAMALG: u_j(x,y)

  int n() const {
    switch (family) {
      case LoopFamily::LV: return 1;
      case LoopFamily::LVN:
      case LoopFamily::LAMALG: return static_cast<int>(vs.size());
      default: return 0;
    }
  }
  int m() const { return family == LoopFamily::LAMALG ? static_cast<int>(us.size()) : 0; }

  static LoopSpec lf(Poly f);
  static LoopSpec lh(Poly h);
  static LoopSpec lv(Poly v);
  static LoopSpec lvn(std::vector<Poly> vs);
  static LoopSpec lg5(Poly v1, Poly v2);
  static LoopSpec lamalg(std::vector<Poly> vs, std::vector<Poly> us);

  int max_param_degree() const {
    int d = 0;
    d = std::max(d, f.degree());
    d = std::max(d, h.degree());
    d = std::max(d, v.degree());
    for (auto& p : vs) d = std::max(d, p.degree());
    for (auto& p : us) d = std::max(d, p.degree());
    return d;
  }
};

namespace detail {

inline void check_param(const Poly& p, const std::vector<std::string>& allowed,
                        const std::string& what) {
  for (auto& v : p.vars()) {
    bool ok = false;
    for (auto& a : allowed)
      if (v == a) ok = true;
    if (!ok && p.degree_in(v) > 0)
      throw std::invalid_argument("LoopSpec: parameter " + what + " may not use variable " + v);
  }
  if (p.constant_term() != 0)
    throw std::invalid_argument("LoopSpec: parameter " + what + " must vanish at the origin");
}

// Value of a parameter polynomial at a point given per canonical coordinate
// name; works for rational points and for symbolic (Poly) points alike.
template <class S>
S eval_param(const Poly& param, const S& at_x, const S& at_y, const S& at_z) {
  if constexpr (std::is_same_v<S, Rat>) {
    std::vector<Rat> point;
    for (auto& v : param.vars()) {
      if (v == "x") point.push_back(at_x);
      else if (v == "y") point.push_back(at_y);
      else if (v == "z") point.push_back(at_z);
      else throw std::invalid_argument("eval_param: unexpected variable " + v);
    }
    return param.eval(point);
  } else {
    std::map<std::string, Poly> repl{{"x", at_x}, {"y", at_y}, {"z", at_z}};
    return param.substitute_named(repl);
  }
}

}  // namespace detail

inline LoopSpec LoopSpec::lf(Poly f) {
  detail::check_param(f, {"x", "y"}, "f");
  return LoopSpec{LoopFamily::LF, std::move(f), {}, {}, {}, {}};
}

inline LoopSpec LoopSpec::lh(Poly h) {
  detail::check_param(h, {"x"}, "h");
  return LoopSpec{LoopFamily::LH, {}, std::move(h), {}, {}, {}};
}

inline LoopSpec LoopSpec::lv(Poly v) {
  detail::check_param(v, {"x", "z"}, "v");
  return LoopSpec{LoopFamily::LV, {}, {}, std::move(v), {}, {}};
}

inline LoopSpec LoopSpec::lvn(std::vector<Poly> vs) {
  if (vs.empty()) throw std::invalid_argument("LoopSpec: LVN needs at least one v_i");
  for (std::size_t i = 0; i < vs.size(); ++i)
    detail::check_param(vs[i], {"x", "z"}, "v" + std::to_string(i + 1));
  return LoopSpec{LoopFamily::LVN, {}, {}, {}, std::move(vs), {}};
}

inline LoopSpec LoopSpec::lg5(Poly v1, Poly v2) {
  detail::check_param(v1, {"x"}, "v1");
  detail::check_param(v2, {"x"}, "v2");
  return LoopSpec{LoopFamily::LG5, {}, {}, {}, {std::move(v1), std::move(v2)}, {}};
}

inline LoopSpec LoopSpec::lamalg(std::vector<Poly> vs, std::vector<Poly> us) {
  if (vs.empty() || us.empty())
    throw std::invalid_argument("LoopSpec: LAMALG needs nonempty v and u lists");
  for (std::size_t i = 0; i < vs.size(); ++i)
    detail::check_param(vs[i], {"x", "y"}, "v" + std::to_string(i + 1));
  for (std::size_t j = 0; j < us.size(); ++j)
    detail::check_param(us[j], {"x", "y"}, "u" + std::to_string(j + 1));
  return LoopSpec{LoopFamily::LAMALG, {}, {}, {}, std::move(vs), std::move(us)};
}

// --- multiplication ----------------------------------------------------------

template <class S>
Pt3<S> loop_mul(const LoopSpec& spec, const Pt3<S>& p, const Pt3<S>& q) {
  using detail::eval_param;
  switch (spec.family) {
    case LoopFamily::LF: {
      S fv = eval_param(spec.f, p[0], p[1], p[2]);
      return {p[0] + q[0], p[1] + q[1],
              p[2] + q[2] - q[0] * fv + rat(1, 2) * (q[0] * q[0] * p[1])};
    }
    case LoopFamily::LH: {
      S hv = eval_param(spec.h, p[0], p[1], p[2]);
      return {p[0] + q[0], p[1] + q[1] + q[0] * hv,
              p[2] + q[2] + q[1] * hv + rat(1, 2) * (q[0] * hv * hv)};
    }
    case LoopFamily::LV: {
      S vv = eval_param(spec.v, p[0], p[1], p[2]);
      return {p[0] + q[0], p[1] + q[1] - q[0] * vv, p[2] + q[2]};
    }
    case LoopFamily::LVN: {
      S acc = p[1] + q[1];
      S pw{};
      for (std::size_t i = 1; i <= spec.vs.size(); ++i) {
        pw = (i == 1) ? S(-q[0]) : S(pw * (-q[0]));
        S vi = eval_param(spec.vs[i - 1], p[0], p[1], p[2]);
        acc = acc + factorial_inv(static_cast<int>(i)) * (pw * vi);
      }
      return {p[0] + q[0], acc, p[2] + q[2]};
    }
    case LoopFamily::LG5: {
      S v1 = eval_param(spec.vs[0], p[0], p[1], p[2]);
      S v2 = eval_param(spec.vs[1], p[0], p[1], p[2]);
      return {p[0] + q[0], p[1] + q[1] - q[0] * v1, p[2] + q[2] - q[0] * v2};
    }
    case LoopFamily::LAMALG: {
      S acc = p[2] + q[2];
      S pw{};
      for (std::size_t i = 1; i <= spec.vs.size(); ++i) {
        pw = (i == 1) ? S(-q[0]) : S(pw * (-q[0]));
        acc = acc + factorial_inv(static_cast<int>(i)) *
                        (pw * eval_param(spec.vs[i - 1], p[0], p[1], p[2]));
      }
      S pw2{};
      for (std::size_t j = 1; j <= spec.us.size(); ++j) {
        pw2 = (j == 1) ? S(-q[1]) : S(pw2 * (-q[1]));
        acc = acc + factorial_inv(static_cast<int>(j)) *
                        (pw2 * eval_param(spec.us[j - 1], p[0], p[1], p[2]));
      }
      return {p[0] + q[0], p[1] + q[1], acc};
    }
  }
  throw std::logic_error("loop_mul: unreachable");
}

inline std::vector<int> family_coordinate_order(LoopFamily f) {
  if (f == LoopFamily::LV || f == LoopFamily::LVN) return {0, 2, 1};
  return {0, 1, 2};
}

// --- translations ------------------------------------------------------------

// q |-> a*q as a triangular map in the family's canonical coordinate order.
inline TriangularMap left_translation(const LoopSpec& spec, const LoopPoint& a) {
  auto cv = coord_vars(3);
  Pt3<Poly> ap{Poly(a[0]), Poly(a[1]), Poly(a[2])};
  Pt3<Poly> q{Poly::variable(cv[0]), Poly::variable(cv[1]), Poly::variable(cv[2])};
  Pt3<Poly> image = loop_mul(spec, ap, q);
  std::vector<Poly> upd;
  for (int i = 0; i < 3; ++i) upd.push_back(image[i] - q[i]);
  return TriangularMap(3, family_coordinate_order(spec.family), std::move(upd));
}

// q |-> q*a.
inline TriangularMap right_translation(const LoopSpec& spec, const LoopPoint& a) {
  auto cv = coord_vars(3);
  Pt3<Poly> ap{Poly(a[0]), Poly(a[1]), Poly(a[2])};
  Pt3<Poly> q{Poly::variable(cv[0]), Poly::variable(cv[1]), Poly::variable(cv[2])};
  Pt3<Poly> image = loop_mul(spec, q, ap);
  std::vector<Poly> upd;
  for (int i = 0; i < 3; ++i) upd.push_back(image[i] - q[i]);
  return TriangularMap(3, family_coordinate_order(spec.family), std::move(upd));
}

// --- divisions ---------------------------------------------------------------

inline LoopPoint apply3(const TriangularMap& map, const LoopPoint& p) {
  auto out = map.apply({p[0], p[1], p[2]});
  return {out[0], out[1], out[2]};
}

// Unique y with a*y = b.
inline LoopPoint loop_ldiv(const LoopSpec& spec, const LoopPoint& a, const LoopPoint& b) {
  auto out = left_translation(spec, a).apply_inverse({b[0], b[1], b[2]});
  return {out[0], out[1], out[2]};
}

// Unique x with x*a = b.
inline LoopPoint loop_rdiv(const LoopSpec& spec, const LoopPoint& a, const LoopPoint& b) {
  auto out = right_translation(spec, a).apply_inverse({b[0], b[1], b[2]});
  return {out[0], out[1], out[2]};
}

// --- centre ------------------------------------------------------------------

// The four centre identities checked as polynomial identities in two fully
// symbolic points; zc may itself have polynomial coordinates (to certify a
// whole plane at once).
inline bool centre_test_symbolic(const LoopSpec& spec, const Pt3<Poly>& zc) {
  Pt3<Poly> xp{Poly::variable("x"), Poly::variable("y"), Poly::variable("z")};
  Pt3<Poly> yp{Poly::variable("k"), Poly::variable("l"), Poly::variable("m")};
  auto eq = [](const Pt3<Poly>& u, const Pt3<Poly>& v) {
    return u[0] == v[0] && u[1] == v[1] && u[2] == v[2];
  };
  auto mulp = [&](const Pt3<Poly>& u, const Pt3<Poly>& v) { return loop_mul(spec, u, v); };
  if (!eq(mulp(mulp(zc, xp), yp), mulp(zc, mulp(xp, yp)))) return false;
  if (!eq(mulp(xp, mulp(yp, zc)), mulp(mulp(xp, yp), zc))) return false;
  if (!eq(mulp(mulp(xp, zc), yp), mulp(xp, mulp(zc, yp)))) return false;
  if (!eq(mulp(zc, xp), mulp(xp, zc))) return false;
  return true;
}

inline bool centre_test(const LoopSpec& spec, const LoopPoint& z) {
  return centre_test_symbolic(spec, {Poly(z[0]), Poly(z[1]), Poly(z[2])});
}

// --- properness --------------------------------------------------------------

struct PropernessResult {
  bool proper;
  std::string reason;
};

namespace detail {

// "Linear" in the generation criteria means of the exact form c*t.
inline bool is_linear_form(const Poly& p) { return p.degree() <= 1 && p.constant_term() == 0; }

}  // namespace detail

// Evaluates the family's generation criterion on the polynomial parameters;
// true means the section generates the full group.
inline PropernessResult properness_check(const LoopSpec& spec) {
  using detail::is_linear_form;
  switch (spec.family) {
    case LoopFamily::LF:
      return {true, "LF sections generate for every f with f(0,0) = 0"};
    case LoopFamily::LH:
      if (spec.h.degree() >= 2) return {true, "h is non-linear"};
      return {false, "h is linear"};
    case LoopFamily::LV: {
      bool x_lin = is_linear_form(spec.v.set_var("z", 0));
      bool z_lin = is_linear_form(spec.v.set_var("x", 0));
      if (!x_lin || !z_lin) return {true, "v(x,0) or v(0,z) is non-linear"};
      return {false, "v(x,0) and v(0,z) are both linear"};
    }
    case LoopFamily::LVN: {
      const Poly& vn = spec.vs.back();
      bool x_lin = is_linear_form(vn.set_var("z", 0));
      bool z_lin = is_linear_form(vn.set_var("x", 0));
      if (!x_lin || !z_lin) return {true, "v_n(x,0) or v_n(0,z) is non-linear"};
      return {false, "v_n(x,0) and v_n(0,z) are both linear"};
    }
    case LoopFamily::LG5: {
      // v_i(0,y,z) = 0 is linear for x-only parameters, so each v_i itself
      // must be non-linear.
      for (std::size_t i = 0; i < spec.vs.size(); ++i)
        if (is_linear_form(spec.vs[i]))
          return {false, "v" + std::to_string(i + 1) + "(x) is linear"};
      return {true, "both v_i are non-linear"};
    }
    case LoopFamily::LAMALG: {
      const Poly& vn = spec.vs.back();
      const Poly& um = spec.us.back();
      bool all_linear = is_linear_form(vn.set_var("y", 0)) && is_linear_form(vn.set_var("x", 0)) &&
                        is_linear_form(um.set_var("y", 0)) && is_linear_form(um.set_var("x", 0));
      if (!all_linear) return {true, "v_n or u_m restricted to an axis is non-linear"};
      return {false, "v_n and u_m are linear on both axes"};
    }
  }
  throw std::logic_error("properness_check: unreachable");
}

}  // namespace loopmult
