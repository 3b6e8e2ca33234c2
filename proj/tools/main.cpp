#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "beta_spec.hpp"
#include "negbeta/error.hpp"
#include "negbeta/measure.hpp"
#include "negbeta/serialize.hpp"

using namespace negbeta;

namespace {

struct Options {
  std::string beta;
  std::string x = "1";
  std::string minpoly;
  std::string bracket;
  std::string method = "all";
  std::string certify;
  std::string from, to;
  std::string out;
  std::size_t n = 20;
  std::size_t max_steps = 10000;
  std::size_t bins = 4096;
  std::size_t iters = 1000000;
  std::size_t terms = 400;
  std::size_t budget = 200;
  std::size_t steps = 100;
  std::size_t length = 1024;
  std::size_t embedding = 0;
  bool has_embedding = false;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  int digits = 20;
  bool json = false;
  bool csv = false;
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::kNumericAmbiguous:
      return 3;
    case ErrorCode::kAtomImageMisaligned:
    case ErrorCode::kEigenMismatch:
    case ErrorCode::kNotPrimitive:
      return 4;
    default:
      return 2;
  }
}

void cmd_expand(const Options& o, std::ostream& out) {
  Base base = cli::parse_beta(o.beta);
  Value x = base.from_rational(parse_rational(o.x));
  Word w = expand_point(base, x, o.n);
  if (o.json) {
    out << Json{{"beta", to_json(base)}, {"x", o.x}, {"digits", w}, {"word", to_string(w)}}.dump() << "\n";
  } else {
    out << to_string(w) << "\n";
  }
}

void cmd_orbit(const Options& o, std::ostream& out) {
  Base base = cli::parse_beta(o.beta);
  OrbitRecord orbit = orbit_of_one(base, o.max_steps);
  out << to_json(orbit, o.digits).dump(2) << "\n";
}

void cmd_classify(const Options& o, std::ostream& out) {
  Base base = cli::parse_beta(o.beta);
  BetaClass c = classify(base);
  Json levels = Json::array();
  for (unsigned n = 1; n <= c.prefix_level + 1; ++n) {
    levels.push_back({{"n", n}, {"predicate", prefix_predicate(base, n)}});
  }
  const Rational tol(1, Integer(1) << 60);
  Json brackets = {{"gamma_" + std::to_string(c.gamma_n + 1), to_json(gamma(c.gamma_n + 1, tol))}};
  if (c.gamma_n > 0) brackets["gamma_" + std::to_string(c.gamma_n)] = to_json(gamma(c.gamma_n, tol));
  Json j = {{"beta", to_json(base)},
            {"gamma_n", c.gamma_n},
            {"gap_count", c.gap_count.get_ui()},
            {"prefix_level", c.prefix_level},
            {"prefix_levels", levels},
            {"brackets", brackets}};
  out << j.dump(2) << "\n";
}

void cmd_gaps(const Options& o, std::ostream& out) {
  Base base = cli::parse_beta(o.beta);
  GapStructure s = build_structure(base);
  if (o.csv) {
    out << "kind,m,k,lo,hi,lo_orbit_index,hi_orbit_index,label,one_based_label\n";
    auto row = [&](const OrbitInterval& iv) {
      out << iv.kind << ',' << iv.level << ',' << iv.k << ',' << iv.lo.to_decimal(o.digits) << ','
          << iv.hi.to_decimal(o.digits) << ',' << (iv.lo_index ? std::to_string(*iv.lo_index) : "") << ','
          << iv.hi_index << ',' << iv.label() << ',';
      if (iv.kind == 'G') out << "G_{" << iv.level + 1 << ',' << iv.k + 1 << '}';
      out << '\n';
    };
    for (const auto& g : s.gaps) row(g);
    for (const auto& f : s.supports) row(f);
    return;
  }
  out << to_json(s, o.digits).dump(2) << "\n";
}

void cmd_density(const Options& o, std::ostream& out) {
  Base base = cli::parse_beta(o.beta);
  const bool all = o.method == "all";
  if (!all && o.method != "series" && o.method != "ulam" && o.method != "birkhoff") {
    throw Error(ErrorCode::kParse, "unknown method '" + o.method + "'");
  }
  std::vector<std::pair<std::string, BinnedDensity>> cols;
  if (all || o.method == "series") {
    cols.emplace_back("series", series_profile(orbit_of_one(base, o.terms), o.bins, o.terms));
  }
  if (all || o.method == "ulam") {
    UlamOptions uo;
    uo.bins = o.bins;
    uo.threads = o.threads;
    cols.emplace_back("ulam", ulam_estimate(base, uo));
  }
  if (all || o.method == "birkhoff") {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    long double x0 = 0;
    while (!(x0 > 0)) x0 = unif(rng);
    cols.emplace_back("birkhoff", birkhoff_density(base, x0, o.iters, o.bins));
  }
  out << "x";
  for (const auto& c : cols) out << ',' << c.first;
  out << '\n';
  out.precision(12);
  for (std::size_t i = 0; i < o.bins; ++i) {
    out << (i + 0.5) / static_cast<double>(o.bins);
    for (const auto& c : cols) out << ',' << c.second.values[i];
    out << '\n';
  }
}

void cmd_yrrap(const Options& o, std::ostream& out) {
  NumberField field = o.minpoly.empty() ? cli::parse_beta(o.beta).field() : cli::parse_field(o.minpoly, o.bracket);
  Json j;
  j["field"] = to_json(field);
  auto y = yrrap_check(field, o.max_steps);
  j["yrrap"] = to_json(y);
  j["parry"] = to_json(parry_check(field, o.max_steps));
  j["matrix"] = nullptr;
  j["perron"] = nullptr;
  if (y) {
    TransitionMatrix m = build_matrix(field, o.max_steps);
    PerronReport r = perron_verify(m, field);
    j["matrix"] = to_json(m);
    j["perron"] = {{"primitive", r.primitive},
                   {"eigen_identity", r.eigen_identity},
                   {"primitivity_exponent", r.primitivity_exponent},
                   {"spectral_radius", r.spectral_radius},
                   {"beta", r.beta}};
  }
  std::vector<Embedding> embs = embeddings(field);
  Json conj = Json::array();
  for (const auto& e : embs) {
    RealInterval a = abs_root(e);
    if (e.identity || !(a.lo() > 1)) continue;
    conj.push_back({{"index", e.index}, {"re", to_double(e.center.re)}, {"im", to_double(e.center.im)},
                    {"abs", a.approx()}});
  }
  j["conjugates"] = conj;
  j["certificate"] = nullptr;
  if (!o.certify.empty()) {
    if (o.certify != "pos" && o.certify != "neg") throw Error(ErrorCode::kParse, "--certify-aperiodic takes pos or neg");
    std::vector<std::size_t> candidates;
    if (o.has_embedding) {
      if (o.embedding >= embs.size()) throw Error(ErrorCode::kOutOfDomain, "embedding index out of range");
      candidates.push_back(o.embedding);
    } else {
      for (const auto& c : conj) candidates.push_back(c["index"].get<std::size_t>());
    }
    for (std::size_t idx : candidates) {
      try {
        Certificate c = aperiodicity_certificate(field, o.certify == "pos" ? Which::kPositive : Which::kNegative,
                                                 embs[idx], o.budget);
        j["certificate"] = {{"n", c.n},
                            {"embedding", idx},
                            {"bound", to_decimal(c.value.lo(), 12)},
                            {"threshold", to_decimal(c.threshold.hi(), 12)}};
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNoCertificate) throw;
      }
    }
  }
  out << j.dump(2) << "\n";
}

void cmd_identities(const Options& o, std::ostream& out) {
  Json arr = Json::array();
  for (const auto& r : verify_identities(static_cast<unsigned>(o.n), o.seed)) arr.push_back(to_json(r));
  out << arr.dump(2) << "\n";
}

void cmd_limit_word(const Options& o, std::ostream& out) { out << to_string(limit_word(o.n)) << "\n"; }

struct SweepRow {
  std::string beta;
  unsigned band = 0;
  std::string gaps;
  std::size_t agreement = 0;
};

void cmd_sweep(const Options& o, std::ostream& out) {
  out << "beta,gamma_n,gap_count,agreement\n";
  Rational lo = parse_rational(o.from), hi = parse_rational(o.to);
  if (o.steps == 0 || lo >= hi) return;
  if (lo <= 1) throw Error(ErrorCode::kOutOfDomain, "sweep range must lie in (1, infinity)");
  const Word limit = limit_word(o.length);
  std::vector<SweepRow> rows(o.steps);
  auto work = [&](std::size_t i) {
    Rational b = lo + (hi - lo) * ratio(Integer(i), Integer(o.steps));
    Base base = Base::rational(b);
    BetaClass c = classify(base);
    Word d = expand_point(base, base.one(), o.length);
    std::size_t k = 0;
    while (k < d.size() && d[k] == limit[k]) ++k;
    rows[i] = {to_decimal(b, 8), c.gamma_n, to_string(c.gap_count), k};
  };
  const unsigned t = std::max(1u, o.threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < t; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < o.steps; i += t) work(i);
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& r : rows) out << r.beta << ',' << r.band << ',' << r.gaps << ',' << r.agreement << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Negative beta transformation toolkit"};
  app.require_subcommand(1);
  Options o;
  auto beta_opt = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--beta", o.beta, "beta: p/q, decimal, minpoly:c0,c1,..@lo,hi or approx:x");
    if (required) opt->required();
  };
  auto out_opt = [&](CLI::App* c) { c->add_option("--out", o.out, "write output to a file"); };

  auto* expand = app.add_subcommand("expand", "digits of the (-beta)-expansion of x");
  beta_opt(expand);
  expand->add_option("--x", o.x, "point in (0,1]");
  expand->add_option("--n", o.n, "number of digits");
  expand->add_flag("--json", o.json);
  out_opt(expand);

  auto* orbit = app.add_subcommand("orbit", "orbit of 1 with period detection");
  beta_opt(orbit);
  orbit->add_option("--n,--max-steps", o.max_steps, "step budget");
  orbit->add_option("--digits", o.digits, "decimal digits for numeric points");
  orbit->add_flag("--json", o.json);
  out_opt(orbit);

  auto* cls = app.add_subcommand("classify", "gamma band, gap count and prefix levels");
  beta_opt(cls);
  cls->add_flag("--json", o.json);
  out_opt(cls);

  auto* gaps = app.add_subcommand("gaps", "gap and support intervals");
  beta_opt(gaps);
  gaps->add_flag("--json", o.json);
  gaps->add_flag("--csv", o.csv);
  gaps->add_option("--digits", o.digits, "decimal digits");
  out_opt(gaps);

  auto* density = app.add_subcommand("density", "invariant density estimates as CSV");
  beta_opt(density);
  density->add_option("--bins", o.bins, "number of bins");
  density->add_option("--method", o.method, "series|ulam|birkhoff|all");
  density->add_option("--iters", o.iters, "Birkhoff iterations");
  density->add_option("--terms", o.terms, "series terms");
  density->add_option("--seed", o.seed, "Birkhoff start seed");
  density->add_option("--threads", o.threads, "worker threads");
  density->add_flag("--csv", o.csv);
  out_opt(density);

  auto* yrrap = app.add_subcommand("yrrap", "Yrrap/Parry classification and Perron matrix");
  beta_opt(yrrap, false);
  yrrap->add_option("--minpoly", o.minpoly, "coefficients, constant first");
  yrrap->add_option("--bracket", o.bracket, "isolating bracket lo,hi");
  yrrap->add_option("--certify-aperiodic", o.certify, "pos or neg");
  yrrap->add_option("--embedding", o.embedding, "conjugate index for the certificate")->each([&](const std::string&) {
    o.has_embedding = true;
  });
  yrrap->add_option("--budget", o.budget, "certificate step budget");
  yrrap->add_option("--max-steps", o.max_steps, "orbit step budget");
  yrrap->add_flag("--json", o.json);
  out_opt(yrrap);

  auto* ids = app.add_subcommand("identities", "exact polynomial identity checks");
  ids->add_option("--n", o.n, "largest n")->default_val(12);
  ids->add_option("--seed", o.seed, "seed for random splits")->default_val(20240601);
  ids->add_flag("--json", o.json);
  out_opt(ids);

  auto* lw = app.add_subcommand("limit-word", "prefix of the fixed point of phi");
  lw->add_option("--n", o.n, "length")->default_val(21);
  out_opt(lw);

  auto* sweep = app.add_subcommand("sweep", "gap count and limit agreement over a beta range");
  sweep->add_option("--from", o.from, "range start")->required();
  sweep->add_option("--to", o.to, "range end")->required();
  sweep->add_option("--steps", o.steps, "number of samples");
  sweep->add_option("--length", o.length, "digits compared with the limit word");
  sweep->add_option("--threads", o.threads, "worker threads");
  sweep->add_flag("--csv", o.csv);
  out_opt(sweep);

  CLI11_PARSE(app, argc, argv);

  std::ostringstream buf;
  try {
    if (*expand) cmd_expand(o, buf);
    if (*orbit) cmd_orbit(o, buf);
    if (*cls) cmd_classify(o, buf);
    if (*gaps) cmd_gaps(o, buf);
    if (*density) cmd_density(o, buf);
    if (*yrrap) {
      if (o.minpoly.empty() && o.beta.empty()) throw Error(ErrorCode::kParse, "yrrap needs --minpoly or --beta");
      cmd_yrrap(o, buf);
    }
    if (*ids) cmd_identities(o, buf);
    if (*lw) cmd_limit_word(o, buf);
    if (*sweep) cmd_sweep(o, buf);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  if (o.out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot open " << o.out << "\n";
      return 2;
    }
    f << buf.str();
  }
  return 0;
}
