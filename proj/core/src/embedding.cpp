#include "negbeta/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "negbeta/error.hpp"

namespace negbeta {
namespace {

using CLD = std::complex<long double>;

ComplexRational mul(const ComplexRational& a, const ComplexRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexRational sub(const ComplexRational& a, const ComplexRational& b) {
  return {a.re - b.re, a.im - b.im};
}

Rational norm2(const ComplexRational& a) { return a.re * a.re + a.im * a.im; }

ComplexRational div(const ComplexRational& a, const ComplexRational& b) {
  Rational n = norm2(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

ComplexRational horner(const std::vector<Rational>& c, const ComplexRational& z) {
  ComplexRational acc{Rational(0), Rational(0)};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mul(acc, z);
    acc.re += *it;
  }
  return acc;
}

ComplexRational round_c(const ComplexRational& z, unsigned bits) {
  return {round_to_bits(z.re, bits, Rounding::kDown), round_to_bits(z.im, bits, Rounding::kDown)};
}

// Simultaneous root approximation (Aberth iteration).
std::vector<CLD> aberth(const std::vector<Rational>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<long double> c(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = to_double(coeffs[i]);
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::fabs(c[i] / c[n]));
  bound += 1;
  std::vector<CLD> z(n);
  for (int k = 0; k < n; ++k) {
    long double ang = 2.0L * 3.14159265358979323846L * k / n + 0.4L;
    z[k] = std::polar(0.5L * bound, ang);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (int k = 0; k < n; ++k) {
      CLD p = 0, dp = 0;
      for (int i = n; i >= 0; --i) {
        dp = dp * z[k] + p;
        p = p * z[k] + c[i];
      }
      if (std::abs(p) == 0) continue;
      CLD ratio = p / dp;
      CLD sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      }
      CLD w = ratio / (1.0L - ratio * sum);
      z[k] -= w;
      change = std::max(change, std::abs(w));
    }
    if (change < 1e-30L) break;
  }
  return z;
}

struct Certified {
  std::vector<ComplexRational> centers;
  std::vector<Rational> radii;
};

Certified certify(const NumberField& field, unsigned bits) {
  const auto& coeffs = field.min_poly().coeffs();
  const std::size_t n = coeffs.size() - 1;
  std::vector<CLD> approx = aberth(coeffs);
  std::vector<Rational> dcoeffs = field.min_poly().derivative().coeffs();
  Certified out;
  for (const auto& a : approx) {
    ComplexRational z{Rational(static_cast<double>(a.real())), Rational(static_cast<double>(a.imag()))};
    // Newton in exact arithmetic, rounding the iterate each step.
    for (unsigned prec = 48; prec < 2 * bits; prec *= 2) {
      ComplexRational p = horner(coeffs, z);
      ComplexRational dp = horner(dcoeffs, z);
      if (sgn(norm2(dp)) == 0) break;
      z = round_c(sub(z, div(p, dp)), std::min(prec * 2, bits + 16));
    }
    for (int extra = 0; extra < 2; ++extra) {
      ComplexRational p = horner(coeffs, z);
      ComplexRational dp = horner(dcoeffs, z);
      if (sgn(norm2(dp)) == 0) break;
      z = round_c(sub(z, div(p, dp)), bits + 16);
    }
    out.centers.push_back(z);
  }
  // Weierstrass corrections W_i = p(z_i) / prod_{j != i}(z_i - z_j); the
  // disks |z - z_i| <= n |W_i| contain all roots, and a disk disjoint from
  // the others contains exactly one.
  Rational nn(static_cast<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Rational num = norm2(horner(coeffs, out.centers[i]));
    Rational den = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) den *= norm2(sub(out.centers[i], out.centers[j]));
    }
    if (sgn(den) == 0) throw Error(ErrorCode::kNoCertificate, "coincident root approximations");
    Rational r2 = nn * nn * num / den;
    Rational r = sqrt_upper(r2, bits);
    if (sgn(r) == 0) r = Rational(1, 1) / (Integer(1) << (bits + 32));
    out.radii.push_back(r);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational s = out.radii[i] + out.radii[j];
      if (!(s * s < norm2(sub(out.centers[i], out.centers[j])))) {
        throw Error(ErrorCode::kNoCertificate, "root disks overlap at this precision");
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Embedding> embeddings(const NumberField& field, unsigned bits) {
  Certified c = certify(field, bits);
  const std::size_t n = c.centers.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (c.centers[a].re != c.centers[b].re) return c.centers[a].re < c.centers[b].re;
    return c.centers[a].im < c.centers[b].im;
  });
  std::vector<Embedding> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = order[k];
    out.push_back(Embedding{field, c.centers[i], c.radii[i], false, bits, k});
  }
  // beta lies in exactly one disk; once the bracket around beta meets only
  // one disk, that disk is it.
  for (unsigned b = bits;; b *= 2) {
    RealInterval beta = field.beta_interval(b);
    std::vector<std::size_t> hits;
    for (std::size_t k = 0; k < n; ++k) {
      const Embedding& e = out[k];
      Rational x = std::clamp(e.center.re, beta.lo(), beta.hi());
      Rational dx = x - e.center.re;
      if (dx * dx + e.center.im * e.center.im <= e.radius * e.radius) hits.push_back(k);
    }
    if (hits.size() == 1) {
      out[hits[0]].identity = true;
      break;
    }
    if (hits.empty() || b > 1u << 16) throw Error(ErrorCode::kNoCertificate, "cannot locate beta among the root disks");
  }
  return out;
}

RealInterval embed_abs(const Embedding& e, const FieldElement& a, unsigned width_bits) {
  if (!(e.field == a.field())) throw Error(ErrorCode::kFieldMismatch, "embedding of another field");
  Embedding cur = e;
  Rational target(1);
  target /= Integer(1) << width_bits;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const auto& c = a.coeffs();
    ComplexRational value = horner(c, cur.center);
    // |a(z + delta) - a(z)| <= sum |c_i| ((|z| + r)^i - |z|^i)
    Rational zabs = sqrt_upper(norm2(cur.center), cur.bits + 8);
    Rational err = 0;
    Rational p_hi = 1, p_lo = 1;
    for (std::size_t i = 1; i < c.size(); ++i) {
      p_hi *= zabs + cur.radius;
      p_lo *= zabs;
      if (sgn(c[i]) != 0) err += abs(c[i]) * (p_hi - p_lo);
    }
    Rational n2 = norm2(value);
    Rational lo = sqrt_lower(n2, cur.bits + 8) - err;
    Rational hi = sqrt_upper(n2, cur.bits + 8) + err;
    if (sgn(lo) < 0) lo = 0;
    RealInterval r(lo, hi);
    if (r.width() <= target || attempt == 7) return r;
    auto all = embeddings(cur.field, cur.bits * 2);
    auto nearest = std::min_element(all.begin(), all.end(), [&](const Embedding& x, const Embedding& y) {
      return norm2(sub(x.center, cur.center)) < norm2(sub(y.center, cur.center));
    });
    cur = *nearest;
  }
  throw std::logic_error("unreachable");
}

RealInterval abs_root(const Embedding& e, unsigned width_bits) {
  return embed_abs(e, e.field.gen(), width_bits);
}

}  // namespace negbeta
