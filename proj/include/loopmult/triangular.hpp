#pragma once

#include <map>
#include <string>
#include <vector>

#include "loopmult/poly.hpp"
#include "loopmult/vfield.hpp"

namespace loopmult {

// Unipotent triangular self-map of coordinate space: processed in `order`,
// each output coordinate is the input coordinate plus a polynomial in
// strictly earlier coordinates (constants allowed). The shape is validated
// on construction and is preserved under composition and inversion, so these
// maps invert by plain back-substitution.
class TriangularMap {
 public:
  TriangularMap(int dim, std::vector<int> order, std::vector<Poly> update)
      : dim_(dim), order_(std::move(order)), update_(std::move(update)) {
    if (static_cast<int>(order_.size()) != dim_ || static_cast<int>(update_.size()) != dim_)
      throw std::invalid_argument("TriangularMap: order/update size mismatch");
    auto cv = coord_vars(dim_);
    std::vector<bool> seen(dim_, false);
    std::vector<bool> allowed(dim_, false);
    for (int pos = 0; pos < dim_; ++pos) {
      int coord = order_[pos];
      if (coord < 0 || coord >= dim_ || seen[coord])
        throw std::invalid_argument("TriangularMap: order is not a permutation");
      seen[coord] = true;
      update_[coord] = update_[coord].aligned_to(cv);
      for (int other = 0; other < dim_; ++other)
        if (!allowed[other] && update_[coord].degree_in(cv[other]) > 0)
          throw std::invalid_argument("TriangularMap: update for " + cv[coord] +
                                      " uses non-earlier coordinate " + cv[other]);
      allowed[coord] = true;
    }
  }

  static TriangularMap identity(int dim, std::vector<int> order) {
    return TriangularMap(dim, std::move(order),
                         std::vector<Poly>(dim, Poly::zero(coord_vars(dim))));
  }

  int dim() const { return dim_; }
  const std::vector<int>& order() const { return order_; }
  const Poly& update(int coord) const { return update_[coord]; }

  std::vector<Rat> apply(const std::vector<Rat>& p) const {
    if (static_cast<int>(p.size()) != dim_)
      throw std::invalid_argument("TriangularMap::apply: point arity mismatch");
    std::vector<Rat> out(p);
    for (int i = 0; i < dim_; ++i) out[i] = p[i] + update_[i].eval(p);
    return out;
  }

  // Image coordinate functions x_i + u_i as polynomials.
  std::vector<Poly> image_polys() const {
    auto cv = coord_vars(dim_);
    std::vector<Poly> out;
    out.reserve(dim_);
    for (int i = 0; i < dim_; ++i) out.push_back(Poly::variable(cv[i]) + update_[i]);
    return out;
  }

  // Pullback f |-> f o m.
  Poly pullback(const Poly& f) const {
    auto cv = coord_vars(dim_);
    return f.aligned_to(cv).substitute(image_polys());
  }

  // (this o g): apply g first.
  TriangularMap compose_after(const TriangularMap& g) const {
    if (dim_ != g.dim_ || order_ != g.order_)
      throw std::invalid_argument("TriangularMap::compose_after: incompatible maps");
    std::vector<Poly> upd;
    upd.reserve(dim_);
    for (int i = 0; i < dim_; ++i) upd.push_back(g.update_[i] + g.pullback(update_[i]));
    return TriangularMap(dim_, order_, std::move(upd));
  }

  // Numeric back-substitution: the unique x with apply(x) = y. Updates only
  // involve earlier coordinates, so each step reads already-solved entries.
  std::vector<Rat> apply_inverse(const std::vector<Rat>& y) const {
    if (static_cast<int>(y.size()) != dim_)
      throw std::invalid_argument("TriangularMap::apply_inverse: point arity mismatch");
    std::vector<Rat> x(dim_, 0);
    for (int pos = 0; pos < dim_; ++pos) {
      int coord = order_[pos];
      x[coord] = y[coord] - update_[coord].eval(x);
    }
    return x;
  }

  TriangularMap inverse() const {
    auto cv = coord_vars(dim_);
    // Express the input coordinates in terms of the outputs by
    // back-substitution along the order.
    std::map<std::string, Poly> input_as_output;
    std::vector<Poly> upd(dim_, Poly::zero(coord_vars(dim_)));
    for (int pos = 0; pos < dim_; ++pos) {
      int coord = order_[pos];
      Poly x_expr = Poly::variable(cv[coord]) - update_[coord].substitute_named(input_as_output);
      input_as_output[cv[coord]] = x_expr;
      upd[coord] = x_expr - Poly::variable(cv[coord]);
    }
    return TriangularMap(dim_, order_, std::move(upd));
  }

  friend bool operator==(const TriangularMap& a, const TriangularMap& b) {
    return a.dim_ == b.dim_ && a.order_ == b.order_ && a.update_ == b.update_;
  }

 private:
  int dim_;
  std::vector<int> order_;
  std::vector<Poly> update_;  // indexed by coordinate, not by position
};

}  // namespace loopmult
