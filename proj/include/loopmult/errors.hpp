#pragma once

#include <stdexcept>
#include <string>

namespace loopmult {

// Raised when a Lie closure grows past its dimension or degree cap; the caps
// exist to distinguish an (apparently) infinite-dimensional closure from slow
// convergence, so exceeding them is always an explicit error.
struct ClosureCapExceeded : std::runtime_error {
  int basis_size;
  int degree;
  ClosureCapExceeded(const std::string& what, int basis_size_, int degree_)
      : std::runtime_error(what), basis_size(basis_size_), degree(degree_) {}
};

struct NotClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoUniqueSolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace loopmult
