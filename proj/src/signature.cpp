#include "ga/signature.hpp"

#include <cstdlib>

namespace ga {

int dim_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("GA_DIM_CAP")) {
      int v = std::atoi(env);
      if (v >= 1 && v <= 30) return v;
    }
    return 12;
  }();
  return cap;
}

Signature::Signature(int p_, int q_, Field field_) : p(p_), q(q_), field(field_) {
  if (p < 0 || q < 0)
    throw SignatureError("signature counts must be nonnegative, got (" + std::to_string(p) +
                         "," + std::to_string(q) + ")");
  if (p + q > dim_cap())
    throw SignatureError("signature G(" + std::to_string(p) + "," + std::to_string(q) +
                         ") exceeds dimension cap " + std::to_string(dim_cap()));
}

std::string Signature::str() const {
  std::string s = "G(" + std::to_string(p) + "," + std::to_string(q);
  if (field == Field::Complex) s += ";C";
  return s + ")";
}

}  // namespace ga
