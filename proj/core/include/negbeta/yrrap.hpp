#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "negbeta/embedding.hpp"
#include "negbeta/map.hpp"

namespace negbeta {

// Minimal (preperiod, period) of the T_{-beta} orbit of 1, if found.
std::optional<Period> yrrap_check(const NumberField& field, std::size_t max_steps);

struct ParryResult {
  enum class Kind { kAbsent, kPeriodic, kFinite };
  Kind kind = Kind::kAbsent;
  Period period;          // for kPeriodic
  std::size_t finite_n = 0;  // for kFinite: T_beta^n(1) = 0
};

ParryResult parry_check(const NumberField& field, std::size_t max_steps);

enum class Which { kPositive, kNegative };

struct Certificate {
  std::size_t n = 0;
  RealInterval value;      // encloses |sigma(z_n)|
  RealInterval threshold;  // encloses floor(beta) / (|alpha| - 1)
  RealInterval alpha_abs;
};

// Smallest n <= budget with |sigma(z_n)| certified above floor(beta) /
// (|alpha| - 1), where z_n = T_beta^n(1) for kPositive and
// 1/(beta+1) - T_{-beta}^n(1) for kNegative. Throws NoCertificate if
// |alpha| > 1 cannot be certified or the budget runs out.
Certificate aperiodicity_certificate(const NumberField& field, Which which, const Embedding& embedding,
                                     std::size_t budget);

// Orbit values z_0 .. z_n used by the certificate.
std::vector<FieldElement> certificate_orbit(const NumberField& field, Which which, std::size_t n);

struct PartitionAtom {
  FieldElement lo;  // predecessor in V u {0}
  FieldElement x;   // right endpoint, in V'
  FieldElement length;
};

struct TransitionMatrix {
  std::vector<PartitionAtom> atoms;  // increasing right endpoints
  std::vector<std::vector<std::uint64_t>> entries;

  std::size_t size() const { return atoms.size(); }
};

// Atoms J_x for x in V' (orbit points that are not right ends of gaps) and
// the counts of J_y inside T(J_x). Throws AtomImageMisaligned, or
// OutOfDomain when the orbit of 1 is not periodic within max_steps.
TransitionMatrix build_matrix(const NumberField& field, std::size_t max_steps = 10000);

struct PerronReport {
  bool eigen_identity = false;
  bool lengths_positive = false;
  bool primitive = false;
  std::size_t primitivity_exponent = 0;  // smallest k with M^k > 0
  double spectral_radius = 0;
  double beta = 0;
};

// Exact eigen identity, primitivity by boolean powers up to (d-1)^2+1 and
// a Collatz-Wielandt bracket on the spectral radius. Throws EigenMismatch
// or NotPrimitive.
PerronReport perron_verify(const TransitionMatrix& m, const NumberField& field);

}  // namespace negbeta
