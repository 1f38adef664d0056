#pragma once

#include <random>
#include <string>
#include <vector>

#include "loopmult/poly.hpp"
#include "loopmult/rational.hpp"

namespace loopmult::testutil {

// Deterministic generator for small exact values; every test fixes its seed.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned long long seed) : eng(seed) {}

  int int_in(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(eng);
  }

  Rat small_rat(int num_mag = 5, int den_max = 3) {
    int n = int_in(-num_mag, num_mag);
    int d = int_in(1, den_max);
    return Rat(n, d);
  }

  Rat nonzero_rat(int num_mag = 5, int den_max = 3) {
    Rat r = small_rat(num_mag, den_max);
    while (r == 0) r = small_rat(num_mag, den_max);
    return r;
  }

  std::vector<Rat> point(std::size_t arity, int num_mag = 4, int den_max = 3) {
    std::vector<Rat> p;
    for (std::size_t i = 0; i < arity; ++i) p.push_back(small_rat(num_mag, den_max));
    return p;
  }

  Poly poly(const std::vector<std::string>& vars, int max_deg, int n_terms) {
    Poly acc = Poly::zero(vars);
    for (int t = 0; t < n_terms; ++t) {
      Poly mono(small_rat());
      int budget = int_in(0, max_deg);
      for (auto& v : vars) {
        int e = int_in(0, budget);
        budget -= e;
        if (e > 0) mono = mono * Poly::variable(v).pow(e);
      }
      acc += mono;
    }
    return acc;
  }
};

}  // namespace loopmult::testutil
