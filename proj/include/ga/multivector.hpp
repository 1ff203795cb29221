#pragma once

#include <map>
#include <utility>

#include "ga/blade.hpp"
#include "ga/rational.hpp"
#include "ga/signature.hpp"

namespace ga {

enum class Conjugation { Reverse, Inversion, Mixed };

// Sparse multivector over a fixed signature: blade mask -> exact coefficient.
// Zero coefficients are never stored. All operations are pure; values can be
// shared freely across threads.
class Multivector {
 public:
  explicit Multivector(const Signature& sig) : sig_(sig) {}

  static Multivector zero(const Signature& sig) { return Multivector(sig); }
  static Multivector scalar(const Signature& sig, const Coeff& c) {
    return blade(sig, 0, c);
  }
  static Multivector blade(const Signature& sig, BladeMask m, const Coeff& c = Coeff(1));
  static Multivector e(const Signature& sig, int i);  // e_i, 1-based
  static Multivector f(const Signature& sig, int j);  // f_j, 1-based
  static Multivector generator(const Signature& sig, int slot);  // 0-based slot
  static Multivector pseudoscalar(const Signature& sig);

  const Signature& sig() const { return sig_; }
  const std::map<BladeMask, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(BladeMask m) const;
  Coeff scalar_part() const { return coeff(0); }

  // True when all stored terms share one grade; the zero multivector counts
  // as homogeneous with grade -1.
  bool is_homogeneous(int* grade = nullptr) const;

  Multivector grade_project(int k) const;
  Multivector conjugate(Conjugation kind) const;
  Multivector reverse() const { return conjugate(Conjugation::Reverse); }
  Multivector inversion() const { return conjugate(Conjugation::Inversion); }
  Multivector mixed() const { return conjugate(Conjugation::Mixed); }

  // Accumulate a term, enforcing blade validity and the real-field invariant.
  void add_term(BladeMask m, const Coeff& c);

  bool operator==(const Multivector& o) const {
    return sig_ == o.sig_ && terms_ == o.terms_;
  }
  bool operator!=(const Multivector& o) const { return !(*this == o); }

 private:
  Signature sig_;
  std::map<BladeMask, Coeff> terms_;
};

Multivector operator+(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a);
Multivector operator*(const Multivector& a, const Multivector& b);  // geometric product
Multivector operator*(const Coeff& c, const Multivector& a);
Multivector operator*(const Multivector& a, const Coeff& c);
Multivector operator*(const Rational& c, const Multivector& a);

// v . W and v ^ W for a grade-1 vector against a homogeneous k-vector;
// dot + wedge equals the geometric product v*W.
std::pair<Multivector, Multivector> vector_kvector_split(const Multivector& v,
                                                         const Multivector& W);

Coeff scalar_product(const Multivector& a, const Multivector& b);

// Exact scalar part of g g-dagger (may be negative in mixed signatures).
Coeff gg_reverse_scalar(const Multivector& g);

double magnitude(const Multivector& g);

}  // namespace ga
