#include "eslab/formulas/lhs.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "eslab/error.hpp"
#include "eslab/formulas/formula_id.hpp"

namespace eslab {

namespace {

struct TableEntry {
  std::once_flag once;
  Distribution dist;
};

std::shared_ptr<TableEntry> table_entry(int n, LhsSource source) {
  static std::mutex mutex;
  static std::map<std::pair<int, LhsSource>, std::shared_ptr<TableEntry>> table;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = table[{n, source}];
  if (!slot) slot = std::make_shared<TableEntry>();
  return slot;
}

BigRational power_of(const BigRational& v, int k) { return pow(v, static_cast<unsigned>(k)); }

}  // namespace

const Distribution& lhs_distribution(int n, LhsSource source) {
  auto entry = table_entry(n, source);
  std::call_once(entry->once, [&] {
    const bool perm = source == LhsSource::kPermutations;
    const auto stats = parse_stat_tuple(perm ? "des,ides,rmax,lmin,lmax" : "asc,dist,rmin,max,zero");
    const int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    entry->dist = joint_distribution(
        stats, n, perm ? Domain::kPermutations : Domain::kInversionSequences, workers);
  });
  return entry->dist;
}

TruncatedSeries marked_fraction(const ContextPtr& ctx, const LhsArg& arg, int d, int e) {
  switch (arg.kind) {
    case LhsArg::Kind::kUnused:
      return TruncatedSeries::constant(ctx, 1);
    case LhsArg::Kind::kValue: {
      const BigRational base = 1 - arg.value;
      if (e > 0 && base == 0) throw PoleError("marking variable specialized to 1");
      return TruncatedSeries::constant(ctx, power_of(arg.value, d) / power_of(base, e));
    }
    case LhsArg::Kind::kVariable: {
      auto one_minus = TruncatedSeries::polynomial(ctx, arg.name, {1, -1});
      return TruncatedSeries::monomial(ctx, {{arg.name, d}}) * one_minus.pow(e).inverse();
    }
    case LhsArg::Kind::kReciprocal: {
      // u^d/(1-u)^e = (-1)^e w^{e-d} / (1-w)^e with w = 1/u.
      if (d > e) throw DomainError("marked fraction has a pole at infinity");
      auto one_minus = TruncatedSeries::polynomial(ctx, arg.name, {1, -1});
      return TruncatedSeries::monomial(ctx, {{arg.name, e - d}}, e % 2 ? -1 : 1) *
             one_minus.pow(e).inverse();
    }
  }
  return TruncatedSeries(ctx);
}

TruncatedSeries lhs_series(const ContextPtr& ctx, const LhsSpec& spec, int n_max, int bound) {
  const int tcap = ctx->cap(ctx->index_of(var::kT));
  if (n_max < tcap) {
    throw DomainError("enumeration depth " + std::to_string(n_max) + " is below the t-cap " +
                      std::to_string(tcap));
  }
  check_enumeration_size(std::max(n_max, 1), bound);
  for (const LhsArg* a : {&spec.v, &spec.q, &spec.z}) {
    if (a->kind == LhsArg::Kind::kReciprocal) {
      throw DomainError("only u and x may be expanded at infinity");
    }
  }

  TruncatedSeries total(ctx);
  if (spec.first_n <= 0) {
    total += marked_fraction(ctx, spec.u, 0, spec.extra_divisor) *
             marked_fraction(ctx, spec.x, 0, spec.extra_divisor);
  }
  for (int n = std::max(spec.first_n, 1); n <= tcap; ++n) {
    const auto& dist = lhs_distribution(n, spec.source);
    const int e = n + spec.extra_divisor;

    // Collapse the (v, q, z) part for each (des, ides) pair first.
    std::map<std::pair<int, int>, TruncatedSeries> rest;
    for (const auto& [key, count] : dist.counts) {
      const auto& s = key.scalars;  // des, ides, rmax, lmin, lmax
      const int du = spec.u.kind == LhsArg::Kind::kUnused ? 0 : s[0];
      const int dx = spec.x.kind == LhsArg::Kind::kUnused ? 0 : s[1];
      BigRational coeff(count);
      std::map<std::string, int> mono;
      const std::pair<const LhsArg*, int> marks[] = {{&spec.v, s[2]}, {&spec.q, s[3]}, {&spec.z, s[4]}};
      for (const auto& [arg, k] : marks) {
        if (arg->kind == LhsArg::Kind::kValue) coeff *= power_of(arg->value, k);
        if (arg->kind == LhsArg::Kind::kVariable) mono[arg->name] += k;
      }
      auto it = rest.try_emplace({du, dx}, ctx).first;
      it->second += TruncatedSeries::monomial(ctx, mono, coeff);
    }

    std::map<int, TruncatedSeries> fu, fx;
    TruncatedSeries level(ctx);
    for (const auto& [d, part] : rest) {
      auto u_it = fu.find(d.first);
      if (u_it == fu.end()) u_it = fu.emplace(d.first, marked_fraction(ctx, spec.u, d.first, e)).first;
      auto x_it = fx.find(d.second);
      if (x_it == fx.end()) x_it = fx.emplace(d.second, marked_fraction(ctx, spec.x, d.second, e)).first;
      level += u_it->second * x_it->second * part;
    }
    total += level.shift(var::kT, n);
  }
  return total;
}

}  // namespace eslab
