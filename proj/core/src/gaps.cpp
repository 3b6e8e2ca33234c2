#include "negbeta/gaps.hpp"

#include <algorithm>
#include <stdexcept>

#include "negbeta/error.hpp"
#include "negbeta/words.hpp"

namespace negbeta {
namespace {

constexpr std::size_t kPieceLimit = 1000000;

std::size_t len1(unsigned n) { return word_lengths(n).len1.get_ui(); }
std::size_t len2(unsigned n) { return word_lengths(n).len2.get_ui(); }
std::size_t g_of(unsigned n) { return g(n).get_ui(); }

IntervalSet as_set(const Base& base, const OrbitInterval& iv) {
  IntervalSet s(base);
  s.add(iv.lo, iv.hi);
  return s;
}

bool positive_length(const OrbitInterval& iv) { return compare(iv.lo, iv.hi) < 0; }

}  // namespace

std::string OrbitInterval::label() const {
  return std::string(1, kind) + "_{" + std::to_string(level) + "," + std::to_string(k) + "}";
}

OrbitInterval gap_interval(const OrbitRecord& orbit, unsigned m, std::size_t k) {
  std::size_t a = (std::size_t{1} << (m + 1)) + k;  // |phi^m(21)| + k
  std::size_t b = len2(m) + k;
  if (k % 2 == 1) std::swap(a, b);
  return OrbitInterval{'G', m, k, a, b, orbit.point(a), orbit.point(b), true, true};
}

OrbitInterval support_interval(const OrbitRecord& orbit, unsigned n, std::size_t k) {
  const std::size_t gn = g_of(n);
  if (k > gn) throw std::out_of_range("support index beyond g_n");
  if (k == gn) {
    std::size_t top = (n % 2 == 0 ? len1(n) : len2(n)) - 1;
    return OrbitInterval{'F', n, k, std::nullopt, top, orbit.base.zero(), orbit.point(top), true, false};
  }
  std::size_t a = len1(n) + k, b = k;
  if (k % 2 == 1) std::swap(a, b);
  return OrbitInterval{'F', n, k, a, b, orbit.point(a), orbit.point(b), false, false};
}

IntervalSet GapStructure::gap_set() const {
  IntervalSet s(beta);
  for (const auto& iv : gaps) s.add(iv.lo, iv.hi);
  s.normalize();
  return s;
}

IntervalSet GapStructure::support_set() const {
  IntervalSet s(beta);
  for (const auto& iv : supports) s.add(iv.lo, iv.hi);
  s.normalize();
  return s;
}

std::size_t orbit_length_for_band(unsigned n) { return (std::size_t{1} << (n + 2)) + 8; }

GapStructure build_structure(const Base& beta, unsigned cap) {
  BetaClass cls = classify(beta, cap);
  const unsigned n = cls.gamma_n;
  GapStructure s{beta, n, orbit_of_one(beta, orbit_length_for_band(n)), {}, {}};
  for (unsigned m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < len1(m); ++k) s.gaps.push_back(gap_interval(s.orbit, m, k));
  }
  for (std::size_t k = 0; k <= g_of(n); ++k) s.supports.push_back(support_interval(s.orbit, n, k));
  if (!partition_check(s)) {
    throw std::logic_error("gap and support families do not partition (0,1] at beta = " + beta.describe());
  }
  return s;
}

bool partition_check(const GapStructure& s) {
  std::vector<const OrbitInterval*> all;
  for (const auto& iv : s.gaps) all.push_back(&iv);
  for (const auto& iv : s.supports) all.push_back(&iv);
  for (const auto* iv : all) {
    if (!positive_length(*iv)) return false;
  }
  std::sort(all.begin(), all.end(),
            [](const OrbitInterval* a, const OrbitInterval* b) { return compare(a->lo, b->lo) < 0; });
  if (all.front()->lo.sign() != 0) return false;
  if ((all.back()->hi - Rational(1)).sign() != 0) return false;
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (compare(all[i]->hi, all[i + 1]->lo) != 0) return false;
  }
  return true;
}

std::vector<Check> split_refinement(const GapStructure& s) {
  std::vector<Check> out;
  for (unsigned j = 1; j <= s.n; ++j) {
    for (std::size_t k = 0; k < len1(j - 1); ++k) {
      OrbitInterval whole = support_interval(s.orbit, j - 1, k);
      OrbitInterval parts[3] = {support_interval(s.orbit, j, len1(j - 1) + k), gap_interval(s.orbit, j - 1, k),
                                support_interval(s.orbit, j, k)};
      bool pass = positive_length(whole);
      IntervalSet u(s.beta);
      for (const auto& p : parts) {
        pass = pass && positive_length(p);
        u.add(p.lo, p.hi);
      }
      u.normalize();
      pass = pass && u.size() == 1 && u.same_as(as_set(s.beta, whole));
      out.push_back({whole.label() + " = " + parts[0].label() + " u " + parts[1].label() + " u " +
                         parts[2].label(),
                     pass});
    }
  }
  return out;
}

std::vector<Check> invariance_check(const GapStructure& s) {
  std::vector<Check> out;
  IntervalSet F = s.support_set();
  IntervalSet G = s.gap_set();
  IntervalSet TF = F.image();
  TF.normalize();
  out.push_back({"T(F) = F", TF.same_as(F)});
  IntervalSet preG = G.preimage();
  preG.normalize();
  out.push_back({"T^-1(G) in G", preG.subset_of(G)});
  for (unsigned m = 0; m < s.n; ++m) {
    for (std::size_t k = 1; k < len1(m); ++k) {
      IntervalSet img = as_set(s.beta, gap_interval(s.orbit, m, k - 1)).image();
      img.normalize();
      OrbitInterval target = gap_interval(s.orbit, m, k);
      out.push_back({"T(G_{" + std::to_string(m) + "," + std::to_string(k - 1) + "}) = " + target.label(),
                     img.same_as(as_set(s.beta, target))});
    }
  }
  return out;
}

std::vector<double> preimage_decay(const GapStructure& s, std::size_t k_max) {
  std::vector<double> out;
  IntervalSet cur = s.gap_set();
  out.push_back(cur.measure().to_double());
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (cur.empty()) {
      out.push_back(0.0);
      continue;
    }
    cur = cur.preimage();
    if (cur.size() > kPieceLimit) throw Error(ErrorCode::kExplosionGuard, "preimage has too many pieces");
    cur.normalize();
    out.push_back(cur.measure().to_double());
  }
  return out;
}

std::size_t coverage_budget(unsigned n) {
  std::size_t gn = g_of(n);
  return gn == 0 ? 60 : 10 * gn * (2 * gn + 1);
}

std::size_t coverage_probe(const GapStructure& s, const Value& lo, const Value& hi) {
  IntervalSet F = s.support_set();
  if (compare(lo, hi) >= 0 || !F.covers(lo, hi)) {
    throw Error(ErrorCode::kOutOfDomain, "seed must be an interval of positive length inside the support");
  }
  IntervalSet cur(s.beta);
  cur.add(lo, hi);
  const std::size_t budget = coverage_budget(s.n);
  for (std::size_t step = 0; step <= budget; ++step) {
    if (F.subset_of(cur)) return step;
    cur = cur.image();
    cur.normalize();
  }
  throw Error(ErrorCode::kNoCoverage, "seed did not cover the support within " + std::to_string(budget) + " steps");
}

}  // namespace negbeta
