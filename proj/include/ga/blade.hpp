#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ga/signature.hpp"

namespace ga {

// A basis blade is a bit set over the n = p+q generator slots. Slots [0, p)
// are the e-generators (square +1), slots [p, n) the f-generators (square -1).
// Bit order matches the canonical blade spelling: ascending e-indices followed
// by ascending f-indices.
using BladeMask = std::uint32_t;

inline int blade_grade(BladeMask m) { return std::popcount(m); }

// Sign of the product of two canonically ordered blades: parity of the
// transpositions needed to interleave the two slot lists, times -1 for every
// shared f-slot (shared e-slots square to +1).
inline int blade_product_sign(const Signature& sig, BladeMask a, BladeMask b) {
  int swaps = 0;
  for (BladeMask t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  int sign = (swaps & 1) ? -1 : 1;
  BladeMask shared_f = (a & b) >> sig.p;
  if (std::popcount(shared_f) & 1) sign = -sign;
  return sign;
}

inline std::vector<int> blade_slots(BladeMask m) {
  std::vector<int> slots;
  while (m) {
    slots.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return slots;
}

// Display order: by grade, then lexicographically by the slot list (so e12
// precedes e1f1, which precedes e2f1).
inline bool blade_display_less(BladeMask a, BladeMask b) {
  int grade_a = std::popcount(a);
  int grade_b = std::popcount(b);
  if (grade_a != grade_b) return grade_a < grade_b;
  while (a && b) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

// Canonical blade spelling, e.g. "1", "e12f3", "e1[10]" for indices >= 10.
inline std::string blade_name(const Signature& sig, BladeMask m) {
  if (m == 0) return "1";
  auto append_index = [](std::string& out, int idx) {
    if (idx < 10)
      out += std::to_string(idx);
    else
      out += "[" + std::to_string(idx) + "]";
  };
  std::string e_part, f_part;
  for (int slot : blade_slots(m)) {
    if (slot < sig.p)
      append_index(e_part, slot + 1);
    else
      append_index(f_part, slot - sig.p + 1);
  }
  std::string out;
  if (!e_part.empty()) out += "e" + e_part;
  if (!f_part.empty()) out += "f" + f_part;
  return out;
}

}  // namespace ga
