#pragma once

#include <optional>
#include <vector>

#include "ga/multivector.hpp"
#include "ga/report.hpp"

namespace ga {

enum class IsoKind { EvenSub, Swap, Shift4 };

// An algebra map given by the images of the domain generators (e_1..e_p then
// f_1..f_q), each a homogeneous multivector in the codomain. Valid maps have
// pairwise anticommuting images squaring to +1 (e-slots) or -1 (f-slots).
struct GeneratorMap {
  Signature domain;
  Signature codomain;
  std::vector<Multivector> images;
  std::optional<IsoKind> kind;  // set when built by build_iso
  std::string name;
};

// Constructs the structure-theorem maps. The (p,q) arguments follow the
// theorem statements:
//   EvenSub: G(p,q)   -> G(p,q+1), images f*e_i and f*f_j with f = f_{q+1};
//            lands in the even subalgebra.
//   Swap:    G(q+1,p) -> G(p+1,q), images e, e*f_j, e*e_i with e = e_{p+1}.
//   Shift4:  G(p-4,q+4) -> G(p,q) (requires p >= 4); the first four domain
//            f-generators map to the anticommuting trivectors in e_1..e_4.
GeneratorMap build_iso(IsoKind kind, int p, int q);

// Extends the generator map linearly and multiplicatively: a blade maps to
// the product of its generator images in blade order.
Multivector apply_map(const GeneratorMap& m, const Multivector& g);

// Checks every GeneratorMap invariant plus multiplicativity on seeded random
// pairs and linear independence of the basis-blade images. Failures become
// report entries, not exceptions.
Report verify_map(const GeneratorMap& m, int samples = 20, std::uint64_t seed = 1);

std::string map_report_json(const Report& r);

}  // namespace ga
