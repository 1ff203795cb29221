#pragma once

#include <string>
#include <vector>

#include "ga/classify.hpp"
#include "ga/rational.hpp"

namespace ga {

enum class RingOp { Add, Mul, Conj };

// One element of a building-block ring, stored as real coordinates:
//   R  : [x]
//   2R : [x | y]                       (componentwise pair)
//   C  : [re, im]
//   2C : [re1, im1 | re2, im2]
//   Q  : [1, i, j, k]
//   2Q : [q1... | q2...]
// Doubles multiply componentwise; quaternions follow i^2=j^2=k^2=-1, ij=k.
struct RingElement {
  BuildingBlock block = BuildingBlock::R;
  std::vector<Rational> coords;

  RingElement() : coords(1) {}
  explicit RingElement(BuildingBlock b) : block(b), coords(block_real_dim(b)) {}
  RingElement(BuildingBlock b, std::vector<Rational> c);

  static RingElement zero(BuildingBlock b) { return RingElement(b); }
  static RingElement one(BuildingBlock b);

  bool is_zero() const;
  RingElement conj() const;

  friend RingElement operator+(const RingElement& x, const RingElement& y);
  friend RingElement operator-(const RingElement& x, const RingElement& y);
  RingElement operator-() const;
  friend RingElement operator*(const RingElement& x, const RingElement& y);

  bool operator==(const RingElement&) const = default;

  std::string str() const;  // "3", "1+2i", "1+2i+3j+4k", "(x | y)"
};

RingElement ring_arith(const RingElement& x, const RingElement& y, RingOp op);

}  // namespace ga
