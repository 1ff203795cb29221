#include "ga/multivector.hpp"

#include <cmath>

namespace ga {

namespace {

void require_same_sig(const Multivector& a, const Multivector& b) {
  if (!(a.sig() == b.sig()))
    throw SignatureError("signature mismatch: " + a.sig().str() + " vs " + b.sig().str());
}

int conjugation_sign(Conjugation kind, int k) {
  int exponent = 0;
  switch (kind) {
    case Conjugation::Reverse: exponent = k * (k - 1) / 2; break;
    case Conjugation::Inversion: exponent = k; break;
    case Conjugation::Mixed: exponent = k * (k + 1) / 2; break;
  }
  return (exponent & 1) ? -1 : 1;
}

}  // namespace

Multivector Multivector::blade(const Signature& sig, BladeMask m, const Coeff& c) {
  Multivector g(sig);
  g.add_term(m, c);
  return g;
}

Multivector Multivector::generator(const Signature& sig, int slot) {
  if (slot < 0 || slot >= sig.dim())
    throw IndexError("generator slot " + std::to_string(slot) + " out of range for " + sig.str());
  return blade(sig, BladeMask{1} << slot);
}

Multivector Multivector::e(const Signature& sig, int i) {
  if (i < 1 || i > sig.p)
    throw IndexError("e" + std::to_string(i) + " not present in " + sig.str());
  return generator(sig, i - 1);
}

Multivector Multivector::f(const Signature& sig, int j) {
  if (j < 1 || j > sig.q)
    throw IndexError("f" + std::to_string(j) + " not present in " + sig.str());
  return generator(sig, sig.p + j - 1);
}

Multivector Multivector::pseudoscalar(const Signature& sig) {
  return blade(sig, static_cast<BladeMask>(sig.basis_size() - 1));
}

Coeff Multivector::coeff(BladeMask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff() : it->second;
}

bool Multivector::is_homogeneous(int* grade) const {
  if (terms_.empty()) {
    if (grade) *grade = -1;
    return true;
  }
  int k = blade_grade(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (blade_grade(m) != k) return false;
  if (grade) *grade = k;
  return true;
}

void Multivector::add_term(BladeMask m, const Coeff& c) {
  if (m >= sig_.basis_size())
    throw IndexError("blade mask out of range for " + sig_.str());
  if (sig_.field == Field::Real && !c.is_real())
    throw SignatureError("complex coefficient in real algebra " + sig_.str());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Multivector Multivector::grade_project(int k) const {
  if (k < 0 || k > sig_.dim())
    throw GradeError("grade " + std::to_string(k) + " out of range for " + sig_.str());
  Multivector out(sig_);
  for (const auto& [m, c] : terms_)
    if (blade_grade(m) == k) out.add_term(m, c);
  return out;
}

Multivector Multivector::conjugate(Conjugation kind) const {
  Multivector out(sig_);
  for (const auto& [m, c] : terms_) {
    int s = conjugation_sign(kind, blade_grade(m));
    out.add_term(m, s < 0 ? -c : c);
  }
  return out;
}

Multivector operator+(const Multivector& a, const Multivector& b) {
  require_same_sig(a, b);
  Multivector out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  require_same_sig(a, b);
  Multivector out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, -c);
  return out;
}

Multivector operator-(const Multivector& a) {
  Multivector out(a.sig());
  for (const auto& [m, c] : a.terms()) out.add_term(m, -c);
  return out;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  require_same_sig(a, b);
  Multivector out(a.sig());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int sign = blade_product_sign(a.sig(), ma, mb);
      Coeff c = ca * cb;
      out.add_term(ma ^ mb, sign < 0 ? -c : c);
    }
  }
  return out;
}

Multivector operator*(const Coeff& c, const Multivector& a) {
  Multivector out(a.sig());
  for (const auto& [m, t] : a.terms()) out.add_term(m, c * t);
  return out;
}

Multivector operator*(const Multivector& a, const Coeff& c) { return c * a; }

Multivector operator*(const Rational& c, const Multivector& a) { return Coeff(c) * a; }

std::pair<Multivector, Multivector> vector_kvector_split(const Multivector& v,
                                                         const Multivector& W) {
  require_same_sig(v, W);
  int kv = 0;
  if (!v.is_homogeneous(&kv) || (kv != 1 && kv != -1))
    throw GradeError("dot/wedge split requires a pure grade-1 left operand");
  int k = 0;
  if (!W.is_homogeneous(&k))
    throw GradeError("dot/wedge split requires a homogeneous right operand");
  if (kv == -1 || k == -1)
    return {Multivector::zero(v.sig()), Multivector::zero(v.sig())};
  Multivector vw = v * W;
  Multivector wv = W * v;
  Rational half(1, 2);
  if (k % 2 == 0) wv = -wv;  // (-1)^(k+1) factor
  return {half * (vw + wv), half * (vw - wv)};
}

Coeff scalar_product(const Multivector& a, const Multivector& b) {
  require_same_sig(a, b);
  // <a b-dagger>_0 only receives contributions from shared blades.
  Coeff total;
  const auto& bt = b.terms();
  for (const auto& [m, ca] : a.terms()) {
    auto it = bt.find(m);
    if (it == bt.end()) continue;
    int k = blade_grade(m);
    int sign = blade_product_sign(a.sig(), m, m);
    if ((k * (k - 1) / 2) & 1) sign = -sign;  // reverse of the right factor
    Coeff c = ca * it->second;
    total += (sign < 0) ? -c : c;
  }
  return total;
}

Coeff gg_reverse_scalar(const Multivector& g) { return scalar_product(g, g); }

double magnitude(const Multivector& g) {
  return std::sqrt(gg_reverse_scalar(g).modulus());
}

}  // namespace ga
