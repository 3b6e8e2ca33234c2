#pragma once

#include <optional>
#include <string>
#include <vector>

#include "negbeta/interval_set.hpp"
#include "negbeta/map.hpp"
#include "negbeta/spectra.hpp"

namespace negbeta {

// An interval whose endpoints are points of the orbit of 1 (or 0).
struct OrbitInterval {
  char kind = 'G';  // 'G' gap, 'F' support atom
  unsigned level = 0;  // m for G_{m,k}, n for F_{n,k}
  std::size_t k = 0;
  std::optional<std::size_t> lo_index;  // empty means the endpoint 0
  std::size_t hi_index = 0;
  Value lo;
  Value hi;
  bool lo_open = true;
  bool hi_open = true;

  std::string label() const;  // e.g. "G_{1,0}"
};

// G_{m,k}: open, between T^{|phi^m(21)|+k}(1) and T^{|phi^m(2)|+k}(1).
OrbitInterval gap_interval(const OrbitRecord& orbit, unsigned m, std::size_t k);
// F_{n,k}: closed for k < g_n, and (0, T^{...}(1)] for k = g_n.
OrbitInterval support_interval(const OrbitRecord& orbit, unsigned n, std::size_t k);

struct GapStructure {
  Base beta;
  unsigned n = 0;
  OrbitRecord orbit;
  std::vector<OrbitInterval> gaps;      // ordered by (m, k)
  std::vector<OrbitInterval> supports;  // F_{n,0}, ..., F_{n,g_n}

  IntervalSet gap_set() const;
  IntervalSet support_set() const;
};

// Orbit length needed for all endpoints at band n.
std::size_t orbit_length_for_band(unsigned n);

// Classifies beta and builds both families at its band. Throws
// UnboundedIndex from the classification, and std::logic_error if the
// families fail to be intervals of positive length partitioning (0,1].
GapStructure build_structure(const Base& beta, unsigned cap = 64);

struct Check {
  std::string name;
  bool pass = false;
};

// Both families sorted by position tile (0,1] with matching endpoints.
bool partition_check(const GapStructure& s);

// F_{j-1,k} = F_{j,|phi^{j-1}(1)|+k} u G_{j-1,k} u F_{j,k} for 1 <= j <= n.
std::vector<Check> split_refinement(const GapStructure& s);

// T(union F) = union F, T^{-1}(union G) inside union G, and
// T(G_{m,k-1}) = G_{m,k} for 1 <= k < |phi^m(1)|.
std::vector<Check> invariance_check(const GapStructure& s);

// Lebesgue measure of T^{-k}(G) for k = 0..k_max as doubles (exact sums
// converted at the end). Throws ExplosionGuard past 10^6 pieces.
std::vector<double> preimage_decay(const GapStructure& s, std::size_t k_max);

// Number of forward steps until the image of (lo, hi) covers the support up
// to finitely many points. Throws NoCoverage past the step budget.
std::size_t coverage_probe(const GapStructure& s, const Value& lo, const Value& hi);
std::size_t coverage_budget(unsigned n);

}  // namespace negbeta
