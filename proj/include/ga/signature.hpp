#pragma once

#include <cstddef>
#include <string>

#include "ga/errors.hpp"

namespace ga {

enum class Field { Real, Complex };

// Upper bound on p+q for constructed algebras. Default 12 (a 4096-dimensional
// algebra); override with the GA_DIM_CAP environment variable.
int dim_cap();

struct Signature {
  int p = 0;
  int q = 0;
  Field field = Field::Real;

  Signature() = default;
  Signature(int p_, int q_, Field field_ = Field::Real);

  int dim() const { return p + q; }
  std::size_t basis_size() const { return std::size_t{1} << dim(); }

  bool operator==(const Signature&) const = default;

  std::string str() const;  // "G(p,q)" or "G(p,q;C)"
};

}  // namespace ga
