#include "ga/iso.hpp"

#include <set>

#include "ga/classify.hpp"
#include "ga/linalg.hpp"
#include "ga/sampling.hpp"

namespace ga {

namespace {

std::string kind_name(IsoKind k) {
  switch (k) {
    case IsoKind::EvenSub: return "EvenSub";
    case IsoKind::Swap: return "Swap";
    case IsoKind::Shift4: return "Shift4";
  }
  return "?";
}

}  // namespace

GeneratorMap build_iso(IsoKind kind, int p, int q) {
  if (p < 0 || q < 0) throw IsoError("build_iso requires p,q >= 0");
  GeneratorMap m;
  m.kind = kind;
  switch (kind) {
    case IsoKind::EvenSub: {
      m.domain = Signature(p, q);
      m.codomain = Signature(p, q + 1);
      Multivector fnew = Multivector::f(m.codomain, q + 1);
      for (int i = 1; i <= p; ++i) m.images.push_back(fnew * Multivector::e(m.codomain, i));
      for (int j = 1; j <= q; ++j) m.images.push_back(fnew * Multivector::f(m.codomain, j));
      break;
    }
    case IsoKind::Swap: {
      m.domain = Signature(q + 1, p);
      m.codomain = Signature(p + 1, q);
      Multivector enew = Multivector::e(m.codomain, p + 1);
      m.images.push_back(enew);
      for (int j = 1; j <= q; ++j) m.images.push_back(enew * Multivector::f(m.codomain, j));
      for (int i = 1; i <= p; ++i) m.images.push_back(enew * Multivector::e(m.codomain, i));
      break;
    }
    case IsoKind::Shift4: {
      if (p < 4) throw IsoError("Shift4 requires p >= 4");
      m.domain = Signature(p - 4, q + 4);
      m.codomain = Signature(p, q);
      for (int i = 1; i <= p - 4; ++i) m.images.push_back(Multivector::e(m.codomain, 4 + i));
      // f'_a..f'_d land on the cyclic trivectors in e_a..e_d = e_1..e_4.
      const int cyc[4][3] = {{2, 3, 4}, {3, 4, 1}, {4, 1, 2}, {1, 2, 3}};
      for (const auto& t : cyc) {
        Multivector tri = Multivector::e(m.codomain, t[0]) * Multivector::e(m.codomain, t[1]) *
                          Multivector::e(m.codomain, t[2]);
        m.images.push_back(tri);
      }
      for (int j = 1; j <= q; ++j) m.images.push_back(Multivector::f(m.codomain, j));
      break;
    }
  }
  m.name = kind_name(kind) + ": " + m.domain.str() + " -> " + m.codomain.str();
  return m;
}

Multivector apply_map(const GeneratorMap& m, const Multivector& g) {
  if (!(g.sig() == m.domain))
    throw SignatureError("apply_map: element lives in " + g.sig().str() + ", map domain is " +
                         m.domain.str());
  Multivector out(m.codomain);
  for (const auto& [mask, c] : g.terms()) {
    Multivector img = Multivector::scalar(m.codomain, Coeff(1));
    for (int slot : blade_slots(mask)) img = img * m.images[slot];
    out = out + c * img;
  }
  return out;
}

Report verify_map(const GeneratorMap& m, int samples, std::uint64_t seed) {
  Report report;
  std::string fmt_pair = "";

  const int n = m.domain.dim();
  bool count_ok = static_cast<int>(m.images.size()) == n;
  report.add("image_count", count_ok,
             count_ok ? "" : std::to_string(m.images.size()) + " images for " + m.domain.str());
  if (!count_ok) return report;

  {
    bool ok = true;
    std::string witness;
    for (int s = 0; s < n && ok; ++s) {
      if (!m.images[s].is_homogeneous()) {
        ok = false;
        witness = "image " + std::to_string(s) + " is not homogeneous";
      }
    }
    report.add("homogeneous_images", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int s = 0; s < n && ok; ++s) {
      int want = s < m.domain.p ? 1 : -1;
      Multivector sq = m.images[s] * m.images[s];
      if (!(sq == Multivector::scalar(m.codomain, Coeff(want)))) {
        ok = false;
        witness = "image " + std::to_string(s) + " squares to the wrong value";
      }
    }
    report.add("generator_squares", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n && ok; ++b) {
        Multivector anti = m.images[a] * m.images[b] + m.images[b] * m.images[a];
        if (!anti.is_zero()) {
          ok = false;
          witness = "images " + std::to_string(a) + "," + std::to_string(b) +
                    " do not anticommute";
        }
      }
    }
    report.add("anticommutation", ok, witness);
  }

  if (m.kind == IsoKind::EvenSub) {
    bool ok = true;
    std::string witness;
    for (int s = 0; s < n && ok; ++s) {
      int k = -1;
      m.images[s].is_homogeneous(&k);
      if (k % 2 != 0) {
        ok = false;
        witness = "image " + std::to_string(s) + " has odd grade " + std::to_string(k);
      }
    }
    report.add("even_subalgebra", ok, witness);
  }

  {
    SplitMix64 rng(seed);
    bool ok = true;
    std::string witness;
    for (int t = 0; t < samples && ok; ++t) {
      Multivector g1 = random_multivector(m.domain, rng);
      Multivector g2 = random_multivector(m.domain, rng);
      if (!(apply_map(m, g1 * g2) == apply_map(m, g1) * apply_map(m, g2))) {
        ok = false;
        witness = "multiplicativity failed on sample " + std::to_string(t);
      }
    }
    report.add("multiplicativity", ok, witness);
  }

  {
    // Images of the 2^n basis blades must be linearly independent. Structure
    // maps send blades to single signed blades, so a mask set suffices; fall
    // back to an exact rank for general images.
    bool monomial = true;
    for (const auto& img : m.images)
      if (img.terms().size() != 1) monomial = false;
    bool ok = true;
    std::string witness;
    if (monomial) {
      std::set<BladeMask> seen;
      for (BladeMask mask = 0; mask < m.domain.basis_size() && ok; ++mask) {
        Multivector img = apply_map(m, Multivector::blade(m.domain, mask));
        if (img.terms().size() != 1 || !seen.insert(img.terms().begin()->first).second) {
          ok = false;
          witness = "blade images collide at mask " + std::to_string(mask);
        }
      }
    } else {
      if (m.domain.dim() > 9) throw DimError("independence check too large for dense rank");
      std::vector<std::vector<Rational>> rows;
      for (BladeMask mask = 0; mask < m.domain.basis_size(); ++mask) {
        Multivector img = apply_map(m, Multivector::blade(m.domain, mask));
        std::vector<Rational> row(m.codomain.basis_size());
        for (const auto& [b, c] : img.terms()) row[b] = c.re;
        rows.push_back(std::move(row));
      }
      int rank = rational_rank(std::move(rows));
      ok = rank == static_cast<int>(m.domain.basis_size());
      if (!ok) witness = "rank " + std::to_string(rank);
    }
    report.add("blade_image_independence", ok, witness);
  }

  if (m.kind == IsoKind::Swap || m.kind == IsoKind::Shift4) {
    bool ok = classify_real(m.domain.p, m.domain.q) == classify_real(m.codomain.p, m.codomain.q);
    report.add("classification_agreement", ok,
               ok ? "" : m.domain.str() + " vs " + m.codomain.str());
  }

  return report;
}

std::string map_report_json(const Report& r) { return report_to_json(r); }

}  // namespace ga
