#include "ga/ring.hpp"

#include <array>

namespace ga {

namespace {

void require_same_block(const RingElement& x, const RingElement& y) {
  if (x.block != y.block)
    throw RingError("ring mismatch: " + block_name(x.block) + " vs " + block_name(y.block));
}

// q = [1, i, j, k] with ij = k, jk = i, ki = j.
std::array<Rational, 4> quat_mul(const Rational* a, const Rational* b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

std::array<Rational, 2> complex_mul(const Rational* a, const Rational* b) {
  return {a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0]};
}

std::string complex_str(const Rational& re, const Rational& im) {
  if (im.is_zero()) return re.str();
  std::string s;
  if (!re.is_zero()) s = re.str() + (im.sgn() > 0 ? "+" : "-");
  else if (im.sgn() < 0) s = "-";
  Rational mag = im.abs();
  if (!(mag == Rational(1))) s += mag.str();
  return s + "i";
}

std::string quat_str(const Rational* c) {
  static const char* units[4] = {"", "i", "j", "k"};
  std::string s;
  for (int t = 0; t < 4; ++t) {
    if (c[t].is_zero()) continue;
    if (!s.empty()) s += c[t].sgn() > 0 ? "+" : "-";
    else if (c[t].sgn() < 0) s += "-";
    Rational mag = c[t].abs();
    if (t == 0 || !(mag == Rational(1))) s += mag.str();
    s += units[t];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

RingElement::RingElement(BuildingBlock b, std::vector<Rational> c)
    : block(b), coords(std::move(c)) {
  if (static_cast<int>(coords.size()) != block_real_dim(block))
    throw RingError("wrong coordinate count for " + block_name(block));
}

RingElement RingElement::one(BuildingBlock b) {
  RingElement r(b);
  switch (b) {
    case BuildingBlock::R:
    case BuildingBlock::C:
    case BuildingBlock::Q:
      r.coords[0] = 1;
      break;
    case BuildingBlock::R2:
      r.coords[0] = r.coords[1] = 1;
      break;
    case BuildingBlock::C2:
      r.coords[0] = r.coords[2] = 1;
      break;
    case BuildingBlock::Q2:
      r.coords[0] = r.coords[4] = 1;
      break;
  }
  return r;
}

bool RingElement::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

RingElement operator+(const RingElement& x, const RingElement& y) {
  require_same_block(x, y);
  RingElement r(x.block);
  for (size_t t = 0; t < r.coords.size(); ++t) r.coords[t] = x.coords[t] + y.coords[t];
  return r;
}

RingElement operator-(const RingElement& x, const RingElement& y) {
  require_same_block(x, y);
  RingElement r(x.block);
  for (size_t t = 0; t < r.coords.size(); ++t) r.coords[t] = x.coords[t] - y.coords[t];
  return r;
}

RingElement RingElement::operator-() const {
  RingElement r(block);
  for (size_t t = 0; t < coords.size(); ++t) r.coords[t] = -coords[t];
  return r;
}

RingElement operator*(const RingElement& x, const RingElement& y) {
  require_same_block(x, y);
  RingElement r(x.block);
  const Rational* a = x.coords.data();
  const Rational* b = y.coords.data();
  switch (x.block) {
    case BuildingBlock::R:
      r.coords[0] = a[0] * b[0];
      break;
    case BuildingBlock::R2:
      r.coords[0] = a[0] * b[0];
      r.coords[1] = a[1] * b[1];
      break;
    case BuildingBlock::C: {
      auto c = complex_mul(a, b);
      r.coords[0] = c[0];
      r.coords[1] = c[1];
      break;
    }
    case BuildingBlock::C2: {
      auto c1 = complex_mul(a, b);
      auto c2 = complex_mul(a + 2, b + 2);
      r.coords = {c1[0], c1[1], c2[0], c2[1]};
      break;
    }
    case BuildingBlock::Q: {
      auto qr = quat_mul(a, b);
      r.coords.assign(qr.begin(), qr.end());
      break;
    }
    case BuildingBlock::Q2: {
      auto q1 = quat_mul(a, b);
      auto q2 = quat_mul(a + 4, b + 4);
      r.coords.assign(q1.begin(), q1.end());
      r.coords.insert(r.coords.end(), q2.begin(), q2.end());
      break;
    }
  }
  return r;
}

RingElement RingElement::conj() const {
  RingElement r = *this;
  switch (block) {
    case BuildingBlock::R:
    case BuildingBlock::R2:
      break;  // identity componentwise on the reals
    case BuildingBlock::C:
      r.coords[1] = -r.coords[1];
      break;
    case BuildingBlock::C2:
      r.coords[1] = -r.coords[1];
      r.coords[3] = -r.coords[3];
      break;
    case BuildingBlock::Q:
      for (int t = 1; t < 4; ++t) r.coords[t] = -r.coords[t];
      break;
    case BuildingBlock::Q2:
      for (int t : {1, 2, 3, 5, 6, 7}) r.coords[t] = -r.coords[t];
      break;
  }
  return r;
}

std::string RingElement::str() const {
  const Rational* c = coords.data();
  switch (block) {
    case BuildingBlock::R: return c[0].str();
    case BuildingBlock::R2: return "(" + c[0].str() + " | " + c[1].str() + ")";
    case BuildingBlock::C: return complex_str(c[0], c[1]);
    case BuildingBlock::C2:
      return "(" + complex_str(c[0], c[1]) + " | " + complex_str(c[2], c[3]) + ")";
    case BuildingBlock::Q: return quat_str(c);
    case BuildingBlock::Q2: return "(" + quat_str(c) + " | " + quat_str(c + 4) + ")";
  }
  throw Error("unreachable building block");
}

RingElement ring_arith(const RingElement& x, const RingElement& y, RingOp op) {
  switch (op) {
    case RingOp::Add: return x + y;
    case RingOp::Mul: return x * y;
    case RingOp::Conj: return x.conj();
  }
  throw Error("unreachable ring op");
}

}  // namespace ga
