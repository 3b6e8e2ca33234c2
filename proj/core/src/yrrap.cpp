#include "negbeta/yrrap.hpp"

#include <algorithm>
#include <cmath>

#include "negbeta/error.hpp"
#include "negbeta/gaps.hpp"

namespace negbeta {

std::optional<Period> yrrap_check(const NumberField& field, std::size_t max_steps) {
  return orbit_of_one(Base::exact(field), max_steps).period;
}

ParryResult parry_check(const NumberField& field, std::size_t max_steps) {
  OrbitRecord orbit = orbit_of_one(Base::exact(field), max_steps, true, true);
  ParryResult r;
  if (!orbit.period) return r;
  const Period& p = *orbit.period;
  if (p.period == 1 && orbit.points[p.preperiod].sign() == 0) {
    r.kind = ParryResult::Kind::kFinite;
    r.finite_n = p.preperiod;
  } else {
    r.kind = ParryResult::Kind::kPeriodic;
    r.period = p;
  }
  return r;
}

std::vector<FieldElement> certificate_orbit(const NumberField& field, Which which, std::size_t n) {
  Base base = Base::exact(field);
  std::vector<FieldElement> out;
  Value x = base.one();
  for (std::size_t k = 0; k <= n; ++k) {
    out.push_back(which == Which::kPositive ? x.element() : conjugate_is(x, base).element());
    if (k == n) break;
    x = (which == Which::kPositive ? step_pos(base, x) : step_neg(base, x)).value;
  }
  return out;
}

Certificate aperiodicity_certificate(const NumberField& field, Which which, const Embedding& embedding,
                                     std::size_t budget) {
  RealInterval a = abs_root(embedding, 60);
  if (!(a.lo() > 1)) {
    throw Error(ErrorCode::kNoCertificate, "the chosen conjugate is not certified to have modulus > 1");
  }
  Rational c(field.gen().floor());
  RealInterval threshold(c / (a.hi() - 1), c / (a.lo() - 1));
  Base base = Base::exact(field);
  Value x = base.one();
  for (std::size_t n = 0; n <= budget; ++n) {
    Value z = which == Which::kPositive ? x : conjugate_is(x, base);
    RealInterval v = embed_abs(embedding, z.element(), 60);
    if (v.lo() > threshold.hi()) return {n, v, threshold, a};
    if (n == budget) break;
    if (which == Which::kPositive) {
      x = step_pos(base, x).value;
    } else {
      x = step_neg(base, x).value;
    }
  }
  throw Error(ErrorCode::kNoCertificate, "no certified growth within " + std::to_string(budget) + " steps");
}

TransitionMatrix build_matrix(const NumberField& field, std::size_t max_steps) {
  Base base = Base::exact(field);
  OrbitRecord orbit = orbit_of_one(base, max_steps);
  if (!orbit.period) throw Error(ErrorCode::kOutOfDomain, "orbit of 1 is not eventually periodic within the step budget");
  const std::size_t distinct = orbit.period->preperiod + orbit.period->period;

  GapStructure gs = build_structure(base);
  std::vector<FieldElement> v;
  for (std::size_t i = 0; i < distinct; ++i) v.push_back(orbit.points[i].element());
  std::sort(v.begin(), v.end(), [](const FieldElement& a, const FieldElement& b) { return compare(a, b) < 0; });

  std::vector<FieldElement> boundary{field.zero()};
  boundary.insert(boundary.end(), v.begin(), v.end());
  TransitionMatrix m;
  for (std::size_t i = 1; i < boundary.size(); ++i) {
    const FieldElement& x = boundary[i];
    bool gap_end = std::any_of(gs.gaps.begin(), gs.gaps.end(),
                               [&](const OrbitInterval& g) { return g.hi.element() == x; });
    if (gap_end) continue;
    m.atoms.push_back({boundary[i - 1], x, x - boundary[i - 1]});
  }
  const std::size_t d = m.atoms.size();
  m.entries.assign(d, std::vector<std::uint64_t>(d, 0));
  FieldElement beta = field.gen();
  FieldElement beta_inv = beta.inverse();
  for (std::size_t i = 0; i < d; ++i) {
    const auto& atom = m.atoms[i];
    Integer m_lo = (beta * atom.lo).floor();
    FieldElement bhi = beta * atom.x;
    Integer m_hi = bhi.floor();
    if ((bhi - Rational(m_hi)).sign() == 0) m_hi -= 1;
    for (Integer br = m_lo; br <= m_hi; ++br) {
      FieldElement lo = atom.lo, hi = atom.x;
      if (br > m_lo) lo = beta_inv * Rational(br);
      if (br < m_hi) hi = beta_inv * Rational(br + 1);
      FieldElement ylo = field.from_rational(Rational(br + 1)) - beta * hi;
      FieldElement yhi = field.from_rational(Rational(br + 1)) - beta * lo;
      // The image must be tiled exactly by whole atoms.
      FieldElement covered = field.zero();
      for (std::size_t j = 0; j < d; ++j) {
        const auto& t = m.atoms[j];
        if (compare(t.lo, ylo) >= 0 && compare(t.x, yhi) <= 0) {
          m.entries[i][j] += 1;
          covered += t.length;
        }
      }
      if (!(covered == yhi - ylo)) {
        throw Error(ErrorCode::kAtomImageMisaligned,
                    "image of atom " + std::to_string(i) + " is not a union of atoms");
      }
    }
  }
  return m;
}

PerronReport perron_verify(const TransitionMatrix& m, const NumberField& field) {
  PerronReport rep;
  const std::size_t d = m.size();
  FieldElement beta = field.gen();
  rep.beta = beta.to_double();
  rep.lengths_positive = std::all_of(m.atoms.begin(), m.atoms.end(),
                                     [](const PartitionAtom& a) { return a.length.sign() > 0; });
  rep.eigen_identity = true;
  for (std::size_t i = 0; i < d; ++i) {
    FieldElement row = field.zero();
    for (std::size_t j = 0; j < d; ++j) {
      if (m.entries[i][j]) row += m.atoms[j].length * Rational(Integer(m.entries[i][j]));
    }
    if (!(row == beta * m.atoms[i].length)) rep.eigen_identity = false;
  }
  if (!rep.eigen_identity || !rep.lengths_positive) {
    throw Error(ErrorCode::kEigenMismatch, "atom lengths are not a positive eigenvector for beta");
  }

  // Boolean powers: a nonnegative matrix is primitive iff its
  // ((d-1)^2+1)-th power is positive.
  using Pattern = std::vector<std::vector<char>>;
  Pattern a(d, std::vector<char>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = m.entries[i][j] > 0;
  }
  Pattern p = a;
  const std::size_t limit = (d - 1) * (d - 1) + 1;
  auto positive = [&](const Pattern& q) {
    for (const auto& row : q) {
      if (std::find(row.begin(), row.end(), 0) != row.end()) return false;
    }
    return true;
  };
  for (std::size_t k = 1; k <= limit; ++k) {
    if (positive(p)) {
      rep.primitive = true;
      rep.primitivity_exponent = k;
      break;
    }
    Pattern next(d, std::vector<char>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t l = 0; l < d; ++l) {
        if (!p[i][l]) continue;
        for (std::size_t j = 0; j < d; ++j) next[i][j] |= a[l][j];
      }
    }
    p.swap(next);
  }
  if (!rep.primitive) throw Error(ErrorCode::kNotPrimitive, "transition matrix is not primitive");

  // Collatz-Wielandt: min_i (Mv)_i / v_i <= rho <= max_i (Mv)_i / v_i.
  std::vector<long double> v(d, 1.0L), w(d);
  long double lo = 0, hi = 0;
  for (int iter = 0; iter < 100000; ++iter) {
    lo = INFINITY;
    hi = 0;
    long double norm = 0;
    for (std::size_t i = 0; i < d; ++i) {
      long double s = 0;
      for (std::size_t j = 0; j < d; ++j) s += static_cast<long double>(m.entries[i][j]) * v[j];
      w[i] = s;
      lo = std::min(lo, s / v[i]);
      hi = std::max(hi, s / v[i]);
      norm += s;
    }
    for (std::size_t i = 0; i < d; ++i) v[i] = w[i] / norm;
    if (hi - lo < 1e-14L) break;
  }
  rep.spectral_radius = static_cast<double>((lo + hi) / 2);
  return rep;
}

}  // namespace negbeta
