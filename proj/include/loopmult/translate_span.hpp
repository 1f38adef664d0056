#pragma once

#include <map>
#include <vector>

#include "loopmult/linalg.hpp"
#include "loopmult/poly.hpp"

namespace loopmult {

// Dimension of the linear span of all rational translates {p(x + b)}.
//
// For a polynomial the span of all translates equals the span of the partial
// derivatives (Taylor), and that span is already reached by shifts over the
// integer grid {0..deg}^arity: the coefficient vector of p(x + b) depends
// polynomially on b with degree <= deg per coordinate, so deg+1 grid values
// per coordinate interpolate the whole family.
inline int translate_span_dim(const Poly& p) {
  if (p.is_zero()) return 0;
  if (p.is_constant()) return 1;
  int d = p.degree();
  std::size_t arity = p.arity();

  std::vector<Poly> shifts;
  std::vector<Rat> offsets(arity, 0);
  while (true) {
    shifts.push_back(p.shift(offsets));
    std::size_t i = 0;
    for (; i < arity; ++i) {
      if (offsets[i] < d) {
        offsets[i] += 1;
        break;
      }
      offsets[i] = 0;
    }
    if (i == arity) break;
  }

  std::map<Exps, int, GradedLexLess> column;
  for (auto& q : shifts)
    for (auto& [e, c] : q.terms())
      if (!column.count(e)) {
        int next = static_cast<int>(column.size());
        column[e] = next;
      }
  RatMat rows;
  for (auto& q : shifts) {
    RatVec row(column.size(), 0);
    for (auto& [e, c] : q.terms()) row[column.at(e)] = c;
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows));
}

}  // namespace loopmult
