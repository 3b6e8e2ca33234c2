#pragma once

#include <vector>

#include "negbeta/interval.hpp"
#include "negbeta/number_field.hpp"

namespace negbeta {

struct ComplexRational {
  Rational re;
  Rational im;
};

// A complex embedding sigma: beta -> alpha of Q(beta). The root alpha is
// certified to lie in the closed disk |z - center| <= radius, and the disks
// of all roots are pairwise disjoint, so each holds exactly one root.
struct Embedding {
  NumberField field;
  ComplexRational center;
  Rational radius;
  bool identity = false;  // alpha is beta itself
  unsigned bits = 0;      // working precision used for the certificate
  std::size_t index = 0;  // position in the embeddings() list

  // Certified enclosure of the real box around alpha.
  RealInterval re() const { return RealInterval(center.re - radius, center.re + radius); }
  RealInterval im() const { return RealInterval(center.im - radius, center.im + radius); }
};

// All embeddings of the field, sorted by real part then imaginary part.
// Throws NoCertificate if the root disks cannot be separated (which for a
// squarefree polynomial only happens if `bits` is far too small).
std::vector<Embedding> embeddings(const NumberField& field, unsigned bits = 128);

// Validated enclosure of |sigma(a)|; recomputes the embedding at higher
// precision until the interval is narrower than 2^-width_bits.
RealInterval embed_abs(const Embedding& e, const FieldElement& a, unsigned width_bits = 40);

// Enclosure of |alpha|.
RealInterval abs_root(const Embedding& e, unsigned width_bits = 40);

}  // namespace negbeta
