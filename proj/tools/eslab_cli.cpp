#include <unistd.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eslab/equidist/claims.hpp"
#include "eslab/equidist/tbij.hpp"
#include "eslab/error.hpp"
#include "eslab/formulas/verify.hpp"
#include "eslab/report.hpp"

namespace {

using namespace eslab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string format = "text";
  std::string output;
  bool no_timing = false;
  int workers = 1;
  int bound = kDefaultEnumerationBound;
};

void add_common(CLI::App* cmd, Common& c, bool csv) {
  std::vector<std::string> formats = {"text", "json"};
  if (csv) formats.push_back("csv");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_option("--output,-o", c.output, "write the report here instead of stdout");
  cmd->add_flag("--no-timing", c.no_timing, "write every elapsed_ms as 0");
  cmd->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1, 256));
  cmd->add_option("--bound", c.bound,
                  "largest n to enumerate; above the default it is refused unless the "
                  "memory estimate fits in physical memory")
      ->check(CLI::Range(1, 20));
}

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Worst case for the stored tables: every object of size n landing on its
// own key (or, for the bijection check, its own image), each costing a node
// plus its entries.
double estimate_bytes(int n) { return factorial(n) * (96.0 + 8.0 * n); }

double physical_bytes() {
  long pages = sysconf(_SC_PHYS_PAGES);
  long size = sysconf(_SC_PAGE_SIZE);
  return pages > 0 && size > 0 ? static_cast<double>(pages) * size : 0;
}

void check_bound_override(const Common& c) {
  if (c.bound <= kDefaultEnumerationBound) return;
  double need = estimate_bytes(c.bound);
  double have = physical_bytes();
  if (need > have) {
    throw BoundError("--bound " + std::to_string(c.bound) + " needs an estimated " +
                     std::to_string(static_cast<long long>(need / (1 << 20))) +
                     " MiB, more than the " +
                     std::to_string(static_cast<long long>(have / (1 << 20))) + " MiB available");
  }
  std::cerr << "warning: enumeration bound raised to " << c.bound << " (estimated "
            << static_cast<long long>(need / (1 << 20)) << " MiB)\n";
}

void require_n_max(int n_max, const Common& c) {
  if (n_max < 1) throw DomainError("--n-max must be at least 1");
  if (n_max > c.bound) {
    throw BoundError("n_max " + std::to_string(n_max) + " exceeds the enumeration bound " +
                     std::to_string(c.bound));
  }
}

void emit(const std::string& text, const Common& c) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw DomainError("cannot open " + c.output);
  out << text;
}

ReportStyle style_of(const Common& c) { return {!c.no_timing}; }

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string id;
  std::map<std::string, int> caps;
  std::vector<int> js;
  int points = 3;
  std::uint64_t seed = 1;
  std::vector<std::string> at;
  std::optional<int> n_max;
  std::string source = "perm";
};

int run_verify(VerifyArgs& a) {
  check_bound_override(a.common);
  VerifyOptions options;
  options.caps = a.caps;
  options.sampling.count = a.points;
  options.sampling.seed = a.seed;
  for (const auto& s : a.at) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("--at expects var=value, got " + s);
    options.sampling.pinned[s.substr(0, eq)] = parse_rational(s.substr(eq + 1));
  }
  if (!a.js.empty()) options.js = a.js;
  options.n_max = a.n_max;
  options.enumeration_bound = a.common.bound;
  options.workers = a.common.workers;
  options.source = parse_domain(a.source) == Domain::kPermutations ? LhsSource::kPermutations
                                                                  : LhsSource::kInversionSequences;

  std::vector<FormulaId> ids;
  if (a.id == "all") {
    ids = all_formulas();
  } else {
    try {
      ids.push_back(parse_formula(a.id));
    } catch (const DomainError& err) {
      std::string known;
      for (FormulaId id : all_formulas()) known += " " + std::string(formula_name(id));
      throw DomainError(std::string(err.what()) + "\nusage: eslab verify --id <id|all> [options]" +
                        "\nknown ids:" + known);
    }
  }

  std::vector<VerifyReport> reports;
  bool passed = true;
  for (FormulaId id : ids) {
    VerifyOptions o = options;
    // Caps that a formula does not use are ignored when running every formula.
    if (ids.size() > 1) {
      const auto& defaults = formula_info(id).default_caps;
      std::erase_if(o.caps, [&](const auto& kv) { return !defaults.contains(kv.first); });
      std::erase_if(o.sampling.pinned, [&](const auto& kv) {
        const auto& params = formula_info(id).parameters;
        return std::find(params.begin(), params.end(), kv.first) == params.end();
      });
    }
    reports.push_back(verify_formula(id, o));
    passed = passed && reports.back().passed;
  }
  const auto style = style_of(a.common);
  emit(a.common.format == "json" ? verify_json(reports, style) : verify_text(reports, style),
       a.common);
  return passed ? kExitPass : kExitFail;
}

// distribution checks --------------------------------------------------------

using Params = std::map<std::string, std::string>;

int emit_checks(const std::vector<CheckReport>& reports, const std::vector<Params>& params,
                const Common& c) {
  const auto style = style_of(c);
  emit(c.format == "json" ? check_json(reports, params, style) : check_text(reports, style), c);
  for (const auto& r : reports) {
    if (!r.passed) return kExitFail;
  }
  return kExitPass;
}

struct DistArgs {
  Common common;
  int n = 0;
  std::string stats;
  std::string domain = "perm";
};

int run_dist(const DistArgs& a) {
  check_bound_override(a.common);
  if (a.n < 1) throw DomainError("--n must be at least 1 (the empty domain is not enumerated)");
  auto start = std::chrono::steady_clock::now();
  Distribution d = joint_distribution(parse_stat_tuple(a.stats), a.n, parse_domain(a.domain),
                                      a.common.workers, a.common.bound);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  if (a.common.format == "json") {
    emit(distribution_json(d, ms, style_of(a.common)), a.common);
  } else if (a.common.format == "csv") {
    emit(distribution_csv(d), a.common);
  } else {
    emit(distribution_text(d), a.common);
  }
  return kExitPass;
}

struct ScanArgs {
  Common common;
  int n_max = 0;
  std::string claim = "all";
};

int run_conjecture(const ScanArgs& a) {
  check_bound_override(a.common);
  require_n_max(a.n_max, a.common);
  auto report = check_conjecture_op2(a.n_max, a.common.workers, a.common.bound);
  return emit_checks({report}, {Params{}}, a.common);
}

int run_equidist(const ScanArgs& a) {
  check_bound_override(a.common);
  std::vector<const EquidistClaim*> claims;
  if (a.claim == "all") {
    for (const auto& c : equidist_claims()) claims.push_back(&c);
  } else {
    claims.push_back(&find_claim(a.claim));
  }
  std::vector<CheckReport> reports;
  std::vector<Params> params;
  for (const auto* c : claims) {
    int n_max = a.n_max > 0 ? a.n_max : std::min(c->default_n_max, a.common.bound);
    require_n_max(n_max, a.common);
    reports.push_back(run_claim(*c, n_max, a.common.workers, a.common.bound));
    params.push_back({{"stats_a", stat_tuple_name(c->stats_a)},
                      {"domain_a", std::string(domain_name(c->domain_a))},
                      {"stats_b", stat_tuple_name(c->stats_b)},
                      {"domain_b", std::string(domain_name(c->domain_b))}});
  }
  return emit_checks(reports, params, a.common);
}

int run_tbij(const ScanArgs& a) {
  check_bound_override(a.common);
  require_n_max(a.n_max, a.common);
  return emit_checks({tbij_roundtrip_verify(a.n_max)}, {Params{}}, a.common);
}

int run_baselines(const ScanArgs& a) {
  check_bound_override(a.common);
  require_n_max(a.n_max, a.common);
  return emit_checks({check_baselines(a.n_max, a.common.bound)}, {Params{}}, a.common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of permutation and inversion-sequence statistic identities"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check a generating-function identity as truncated series");
  v->add_option("--id", verify.id, "formula id, or 'all'")->required();
  const std::pair<const char*, const char*> cap_flags[] = {
      {"--tcap", var::kT}, {"--xcap", var::kX},       {"--ucap", var::kU},
      {"--ubarcap", var::kUbar}, {"--xbarcap", var::kXbar}, {"--rcap", var::kR}};
  for (const auto& [flag, name] : cap_flags) {
    v->add_option_function<int>(
        flag, [&verify, name = std::string(name)](int cap) { verify.caps[name] = cap; },
        "truncation cap for " + std::string(name));
  }
  v->add_option("--j", verify.js, "tf43 shift index (repeatable)")->check(CLI::Range(0, 64));
  v->add_option("--points", verify.points, "sampled parameter points")->check(CLI::Range(1, 1000));
  v->add_option("--seed", verify.seed, "sampler seed");
  v->add_option("--at", verify.at, "pin a parameter, var=p/q (repeatable)");
  v->add_option("--n-max", verify.n_max, "enumeration depth of the left side");
  v->add_option("--source", verify.source, "domain enumerated for the left side")
      ->check(CLI::IsMember({"perm", "invseq"}));
  add_common(v, verify.common, false);

  DistArgs dist;
  auto* d = app.add_subcommand("dist", "print an exact joint distribution");
  d->add_option("--n", dist.n, "size")->required();
  d->add_option("--stats", dist.stats, "comma-separated statistics, Rmin for the set")->required();
  d->add_option("--domain", dist.domain, "perm or invseq")->check(CLI::IsMember({"perm", "invseq"}));
  add_common(d, dist.common, true);

  ScanArgs conj;
  conj.n_max = kConjectureDefaultNMax;
  auto* c = app.add_subcommand("conjecture", "scan inversion sequences for a counterexample");
  c->add_option("--n-max", conj.n_max, "largest n");
  add_common(c, conj.common, false);

  ScanArgs eq;
  auto* e = app.add_subcommand("equidist", "check registered equidistribution claims");
  e->add_option("--claim", eq.claim, "claim id, or 'all'");
  e->add_option("--n-max", eq.n_max, "largest n (default: the claim's own)");
  e->add_flag_callback("--list", [] {
    for (const auto& cl : equidist_claims()) std::cout << cl.id << "  " << cl.description << "\n";
    std::exit(kExitPass);
  }, "list claim ids");
  add_common(e, eq.common, false);

  ScanArgs tb;
  tb.n_max = 6;
  auto* t = app.add_subcommand("tbij", "check the one-step extension maps on inversion sequences");
  t->add_option("--n-max", tb.n_max, "largest n");
  add_common(t, tb.common, false);

  ScanArgs base;
  base.n_max = 8;
  auto* b = app.add_subcommand("baselines", "des and lmax against Eulerian and Stirling numbers");
  b->add_option("--n-max", base.n_max, "largest n");
  add_common(b, base.common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*v) return run_verify(verify);
    if (*d) return run_dist(dist);
    if (*c) return run_conjecture(conj);
    if (*e) return run_equidist(eq);
    if (*t) return run_tbij(tb);
    if (*b) return run_baselines(base);
  } catch (const Error& err) {
    // Bad ids, bounds and exhausted pole re-draws all land here.
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
