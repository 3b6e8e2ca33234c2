#include "negbeta/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>
#include <thread>

#include "negbeta/error.hpp"

namespace negbeta {
namespace {

struct Triplet {
  std::size_t col;
  double weight;
};

// Row of the Ulam matrix for the cell [edges[i], edges[i+1]]: the fractions
// of the cell mapped into each cell.
std::vector<Triplet> ulam_row(long double beta, std::size_t i, const std::vector<long double>& edges) {
  std::vector<Triplet> row;
  const std::size_t n = edges.size() - 1;
  long double a = edges[i], b = edges[i + 1];
  long double m_lo = std::floor(beta * a);
  long double m_hi = std::ceil(beta * b) - 1;
  const long double total = beta * (b - a);
  for (long double m = m_lo; m <= m_hi; m += 1) {
    long double lo = std::max(a, m / beta), hi = std::min(b, (m + 1) / beta);
    if (!(hi > lo)) continue;
    // Image of (lo, hi) is (m + 1 - beta hi, m + 1 - beta lo).
    long double ylo = std::max(m + 1 - beta * hi, 0.0L);
    long double yhi = std::min(m + 1 - beta * lo, 1.0L);
    auto first = std::upper_bound(edges.begin(), edges.end(), ylo);
    std::size_t j = first == edges.begin() ? 0 : static_cast<std::size_t>(first - edges.begin()) - 1;
    for (; j < n && edges[j] < yhi; ++j) {
      long double olo = std::max(ylo, edges[j]), ohi = std::min(yhi, edges[j + 1]);
      if (ohi > olo) row.push_back({j, static_cast<double>((ohi - olo) / total)});
    }
  }
  return row;
}

std::vector<std::pair<double, double>> gap_bounds(const GapStructure& s) {
  std::vector<std::pair<double, double>> out;
  for (const auto& g : s.gaps) out.emplace_back(g.lo.to_double(), g.hi.to_double());
  std::sort(out.begin(), out.end());
  return out;
}

long double overlap(long double a, long double b, long double c, long double d) {
  return std::max(0.0L, std::min(b, d) - std::max(a, c));
}

template <typename Visit>
void walk(const Base& beta, long double x0, std::size_t iters, Visit visit) {
  if (!(x0 > 0 && x0 <= 1)) throw Error(ErrorCode::kOutOfDomain, "start point must lie in (0,1]");
  const long double b = beta.approx();
  long double x = x0;
  std::uint64_t state;
  std::memcpy(&state, &x0, sizeof state);
  std::mt19937_64 rng(state);
  const long double scale = std::ldexp(1.0L, -60) / static_cast<long double>(rng.max());
  for (std::size_t k = 0; k < iters; ++k) {
    long double y = b * x;
    x = std::floor(y) + 1 - y;
    x += (static_cast<long double>(rng()) - rng.max() / 2.0L) * scale;
    if (x <= 0) x = -x + std::ldexp(1.0L, -62);
    if (x > 1) x = 2 - x;
    visit(x);
  }
}

}  // namespace

SeriesValue density_series(const OrbitRecord& orbit, const Value& x, std::size_t n_terms) {
  const Base& base = orbit.base;
  if (x.sign() <= 0 || (base.one() - x).sign() < 0) {
    throw Error(ErrorCode::kOutOfDomain, "density is defined on (0,1]");
  }
  Value u = -base.beta().inverse();
  Value term = base.one();
  Value sum = base.zero();
  for (std::size_t n = 0; n <= n_terms; ++n) {
    if (compare(orbit.point(n), x) >= 0) sum += term;
    if (n < n_terms) term = term * u;
  }
  double b = base.approx();
  double tail = std::pow(b, -static_cast<double>(n_terms)) / (1.0 - 1.0 / b);
  return {sum, tail};
}

SeriesValue density_series(const Base& beta, const Value& x, std::size_t n_terms) {
  return density_series(orbit_of_one(beta, std::max<std::size_t>(n_terms, 1)), x, n_terms);
}

BinnedDensity series_profile(const OrbitRecord& orbit, std::size_t bins, std::size_t n_terms) {
  const long double beta = orbit.base.approx();
  std::vector<long double> t(n_terms + 1), c(n_terms + 1);
  long double coef = 1;
  for (std::size_t n = 0; n <= n_terms; ++n) {
    t[n] = orbit.point(n).to_double();
    c[n] = coef;
    coef /= -beta;
  }
  long double z = 0;
  for (std::size_t n = 0; n <= n_terms; ++n) z += c[n] * t[n];
  BinnedDensity out;
  out.values.assign(bins, 0.0);
  out.normalization = static_cast<double>(z);
  // Each term contributes c_n on (0, t_n]; add its overlap with every bin.
  std::vector<long double> acc(bins + 1, 0.0L);
  for (std::size_t n = 0; n <= n_terms; ++n) {
    long double pos = t[n] * bins;
    auto full = static_cast<std::size_t>(std::floor(pos));
    full = std::min(full, bins);
    // Bins [0, full) are covered completely: difference array.
    acc[0] += c[n];
    acc[full] -= c[n];
    if (full < bins) out.values[full] += static_cast<double>(c[n] * (pos - full));
  }
  long double run = 0;
  for (std::size_t i = 0; i < bins; ++i) {
    run += acc[i];
    out.values[i] = static_cast<double>((run + out.values[i]) / z);
  }
  return out;
}

BinnedDensity ulam_estimate(const Base& beta, const UlamOptions& opts) {
  const std::size_t bins = opts.bins;
  if (bins < 16) throw Error(ErrorCode::kOutOfDomain, "Ulam needs at least 16 bins");
  const long double b = beta.approx();
  std::vector<long double> edges;
  for (std::size_t i = 0; i <= bins; ++i) edges.push_back(static_cast<long double>(i) / bins);
  if (opts.adapt_to_gaps) {
    GapStructure s = build_structure(beta);
    for (const auto& g : s.gaps) {
      edges.push_back(static_cast<long double>(g.lo.to_double()));
      edges.push_back(static_cast<long double>(g.hi.to_double()));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  const std::size_t n = edges.size() - 1;
  std::vector<std::vector<Triplet>> rows(n);
  unsigned threads = std::max(1u, opts.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) rows[i] = ulam_row(b, i, edges);
    });
  }
  for (auto& th : pool) th.join();

  std::vector<double> pi(n), next(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = static_cast<double>(edges[i + 1] - edges[i]);
  double residual = 1.0;
  for (std::size_t iter = 0; iter < opts.power_iters; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& e : rows[i]) next[e.col] += pi[i] * e.weight;
    }
    double total = 0;
    for (double v : next) total += v;
    residual = 0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= total;
      residual += std::fabs(next[i] - pi[i]);
    }
    if (residual <= opts.tolerance) {
      pi.swap(next);
      break;
    }
    // Lazy step: average with the previous vector to damp periodic parts.
    for (std::size_t i = 0; i < n; ++i) pi[i] = 0.5 * (pi[i] + next[i]);
  }
  if (residual > opts.tolerance) {
    throw Error(ErrorCode::kConvergenceFailure,
                "Ulam power iteration residual " + std::to_string(residual) + " after " +
                    std::to_string(opts.power_iters) + " sweeps");
  }
  BinnedDensity out;
  out.values.assign(bins, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    auto bin = std::min(bins - 1, static_cast<std::size_t>(std::floor(edges[i] * bins)));
    out.values[bin] += pi[i] * bins;
  }
  return out;
}

std::vector<std::uint64_t> birkhoff_histogram(const Base& beta, long double x0, std::size_t iters,
                                              std::size_t bins) {
  std::vector<std::uint64_t> counts(bins, 0);
  walk(beta, x0, iters, [&](long double x) {
    auto idx = static_cast<std::size_t>(x * bins);
    counts[std::min(idx, bins - 1)]++;
  });
  return counts;
}

BinnedDensity birkhoff_density(const Base& beta, long double x0, std::size_t iters, std::size_t bins) {
  auto counts = birkhoff_histogram(beta, x0, iters, bins);
  BinnedDensity out;
  out.values.resize(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    out.values[i] = iters ? static_cast<double>(counts[i]) * bins / static_cast<double>(iters) : 0.0;
  }
  return out;
}

CrossValidationReport cross_validate(const Base& beta, const CrossValidationOptions& opts) {
  GapStructure s = build_structure(beta);
  const std::size_t n = opts.bins;
  auto gaps = gap_bounds(s);
  CrossValidationReport rep;
  rep.gap_count = gaps.size();

  OrbitRecord orbit = orbit_of_one(beta, opts.series_terms);
  BinnedDensity series = series_profile(orbit, n, opts.series_terms);
  UlamOptions uo;
  uo.bins = n;
  uo.threads = opts.threads;
  uo.adapt_to_gaps = opts.ulam_adapt_to_gaps;
  BinnedDensity ulam = ulam_estimate(beta, uo);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  long double x0 = 0;
  while (!(x0 > 0)) x0 = unif(rng);
  auto counts = birkhoff_histogram(beta, x0, opts.birkhoff_iters, n);

  // Series gap mass: exact integral of the truncated series over the gaps.
  {
    const long double b = beta.approx();
    long double coef = 1, mass = 0, z = 0;
    for (std::size_t k = 0; k <= opts.series_terms; ++k) {
      long double t = orbit.point(k).to_double();
      z += coef * t;
      for (const auto& [lo, hi] : gaps) mass += coef * overlap(0, t, lo, hi);
      coef /= -b;
    }
    rep.gap_mass_series = static_cast<double>(std::fabs(mass / z));
  }

  // Birkhoff gap mass: fraction of iterates inside a gap, along the same
  // pseudo-orbit.
  {
    std::size_t inside = 0;
    walk(beta, x0, opts.birkhoff_iters, [&](long double x) {
      auto it = std::upper_bound(gaps.begin(), gaps.end(), std::make_pair(static_cast<double>(x), 2.0));
      if (it != gaps.begin()) {
        --it;
        if (x > it->first && x < it->second) ++inside;
      }
    });
    rep.gap_mass_birkhoff = opts.birkhoff_iters ? static_cast<double>(inside) / opts.birkhoff_iters : 0.0;
  }

  // Bins fully inside a gap, and the support bins (all others).
  std::vector<bool> gap_bin(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    double a = static_cast<double>(i) / n, b = static_cast<double>(i + 1) / n;
    for (const auto& [lo, hi] : gaps) {
      if (lo <= a && b <= hi) gap_bin[i] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (gap_bin[i]) rep.gap_mass_ulam += ulam.values[i] / n;
  }

  double cs = 0, cu = 0, cb = 0, hmax = 0;
  for (std::size_t i = 0; i < n; ++i) hmax = std::max(hmax, series.values[i]);
  for (std::size_t i = 0; i < n; ++i) {
    double hb = opts.birkhoff_iters ? static_cast<double>(counts[i]) * n / opts.birkhoff_iters : 0.0;
    cs += series.values[i] / n;
    cu += ulam.values[i] / n;
    cb += hb / n;
    if (gap_bin[i]) continue;
    rep.support_bins++;
    rep.cdf_series_ulam = std::max(rep.cdf_series_ulam, std::fabs(cs - cu));
    rep.cdf_series_birkhoff = std::max(rep.cdf_series_birkhoff, std::fabs(cs - cb));
    rep.cdf_ulam_birkhoff = std::max(rep.cdf_ulam_birkhoff, std::fabs(cu - cb));
    rep.density_series_ulam = std::max(rep.density_series_ulam, std::fabs(series.values[i] - ulam.values[i]) / hmax);
    rep.density_series_birkhoff = std::max(rep.density_series_birkhoff, std::fabs(series.values[i] - hb) / hmax);
  }
  rep.pass = rep.gap_mass_series < opts.gap_mass_tolerance && rep.gap_mass_ulam < opts.gap_mass_tolerance &&
             rep.gap_mass_birkhoff < opts.gap_mass_tolerance && rep.cdf_series_ulam <= opts.discrepancy_tolerance &&
             rep.cdf_series_birkhoff <= opts.discrepancy_tolerance &&
             rep.cdf_ulam_birkhoff <= opts.discrepancy_tolerance;
  return rep;
}

}  // namespace negbeta
