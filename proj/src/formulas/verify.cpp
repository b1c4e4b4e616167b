#include "eslab/formulas/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "eslab/error.hpp"
#include "eslab/formulas/evaluators.hpp"
#include "eslab/series/reciprocal.hpp"

namespace eslab {

namespace {

using S = TruncatedSeries;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Collects the checks of one task; evaluation errors become failing checks.
class Recorder {
 public:
  explicit Recorder(int point_index) : point_index_(point_index) {}

  void check(std::string name, const std::function<std::optional<Witness>()>& body) {
    SeriesCheck c;
    c.name = std::move(name);
    c.point_index = point_index_;
    const auto start = Clock::now();
    try {
      c.witness = body();
    } catch (const std::exception& e) {
      Witness w;
      w.add("error", e.what());
      c.witness = std::move(w);
    }
    c.passed = !c.witness;
    c.elapsed_ms = ms_since(start);
    checks_.push_back(std::move(c));
  }

  std::vector<SeriesCheck>& checks() { return checks_; }

 private:
  int point_index_;
  std::vector<SeriesCheck> checks_;
};

struct Task {
  int point_index;
  std::function<void(Recorder&)> run;
};

ContextPtr make_ctx(std::vector<VariableSpec> vars) { return SeriesContext::create(std::move(vars)); }

struct Setup {
  std::map<std::string, int> caps;
  int n_max;
  int bound;
  LhsSource source;

  int cap(const std::string& name) const { return caps.at(name); }

  S lhs(const ContextPtr& ctx, LhsSpec spec) const {
    spec.source = source;
    return lhs_series(ctx, spec, n_max, bound);
  }
};

LhsArg at(const RationalPoint& p, const char* name) { return LhsArg::at(point_value(p, name)); }

std::vector<Task> tasks_for(FormulaId id, const Setup& s, const std::vector<RationalPoint>& points,
                            const std::vector<int>& js) {
  std::vector<Task> tasks;
  auto per_point = [&](std::function<void(Recorder&, const RationalPoint&)> body) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const RationalPoint p = points[i];
      tasks.push_back({static_cast<int>(i), [body, p](Recorder& r) { body(r, p); }});
    }
  };
  auto once = [&](std::function<void(Recorder&)> body) { tasks.push_back({-1, std::move(body)}); };
  const int T = s.caps.count("t") ? s.cap("t") : 0;

  switch (id) {
    case FormulaId::kGg1:
      once([&s, T](Recorder& r) {
        r.check("lhs_vs_rhs", [&] {
          auto ctx = make_ctx({{var::kT, T}, {var::kX, s.cap("x")}, {var::kU, s.cap("u")}});
          LhsSpec spec;
          spec.u = LhsArg::graded(var::kU);
          spec.x = LhsArg::graded(var::kX);
          spec.first_n = 0;
          spec.extra_divisor = 1;
          return compare_series(s.lhs(ctx, spec), rhs_gg1(ctx));
        });
      });
      break;

    case FormulaId::kCor1Mid:
      per_point([&s, T](Recorder& r, const RationalPoint& p) {
        r.check("mid_vs_lhs", [&] {
          auto ctx = make_ctx({{var::kT, T}, {var::kUbar, s.cap("ubar")}});
          LhsSpec spec;
          spec.u = LhsArg::reciprocal(var::kUbar);
          spec.x = at(p, "x");
          spec.first_n = 0;
          spec.extra_divisor = 1;
          return compare_series(s.lhs(ctx, spec),
                                rhs_cor1_mid(ctx, S::constant(ctx, point_value(p, "x"))));
        });
      });
      once([&s, T](Recorder& r) {
        r.check("mid_vs_gg1_rhs", [&] {
          // The t^m slice of the gg1 side is N(u)/(1-u)^{m+1} with deg N <= m,
          // so a u-cap of T+1 determines it.
          auto ctx = make_ctx({{var::kT, T}, {var::kX, s.cap("x")}, {var::kU, T + 1}});
          const SliceShape shape{var::kT, [](int m) { return m + 1; }, [](int m) { return m; }};
          const S gg1 = reexpand_at_infinity(rhs_gg1(ctx), var::kU, var::kUbar, s.cap("ubar"), shape);
          const auto& w = gg1.context();
          return compare_series(gg1, rhs_cor1_mid(w, S::variable(w, var::kX)));
        });
      });
      break;

    case FormulaId::kThm1:
      per_point([&s, T](Recorder& r, const RationalPoint& p) {
        const auto& x = point_value(p, "x");
        const auto& v = point_value(p, "v");
        const auto& q = point_value(p, "q");
        LhsSpec spec;
        spec.u = LhsArg::graded(var::kU);
        spec.x = at(p, "x");
        spec.v = at(p, "v");
        spec.q = at(p, "q");
        auto ctx = make_ctx({{var::kT, T}, {var::kU, s.cap("u")}});
        std::optional<S> rhs;
        r.check("rhs_vs_lhs", [&] {
          rhs = rhs_thm1(ctx, x, v, q);
          return compare_series(s.lhs(ctx, spec), *rhs);
        });
        r.check("slices_at_u", [&] {
          // The t^m slice is N(u)/(1-u)^m with deg N <= m-1.
          auto wide = make_ctx({{var::kT, T}, {var::kU, std::max(s.cap("u"), T)}});
          const SliceShape shape{var::kT, [](int m) { return m; }, [](int m) { return m - 1; }};
          const S at_u = evaluate_slices(rhs_thm1(wide, x, v, q), var::kU, point_value(p, "u"), shape);
          LhsSpec fixed = spec;
          fixed.u = at(p, "u");
          return compare_series(s.lhs(at_u.context(), fixed), at_u);
        });
        r.check("swap_vq", [&] {
          if (!rhs) rhs = rhs_thm1(ctx, x, v, q);
          return compare_series(*rhs, rhs_thm1(ctx, x, q, v));
        });
      });
      break;

    case FormulaId::kAdr1:
      per_point([&s, T](Recorder& r, const RationalPoint& p) {
        r.check("rhs_vs_lhs", [&] {
          auto ctx = make_ctx({{var::kT, T}, {var::kU, s.cap("u")}});
          LhsSpec spec;
          spec.u = LhsArg::graded(var::kU);
          spec.x = at(p, "x");
          spec.v = at(p, "v");
          return compare_series(
              s.lhs(ctx, spec),
              rhs_adr1(ctx, S::constant(ctx, point_value(p, "x")), point_value(p, "v")));
        });
      });
      once([&s, T](Recorder& r) {
        r.check("v1_reproduces_gg1", [&] {
          // (1 + G(t; x, u, 1, 1, 1)) / ((1-u)(1-x)) is the gg1 generating function.
          auto ctx = make_ctx({{var::kT, T}, {var::kX, s.cap("x")}, {var::kU, s.cap("u")}});
          const S g = rhs_adr1(ctx, S::variable(ctx, var::kX), 1);
          const S d = S::polynomial(ctx, var::kU, {1, -1}) * S::polynomial(ctx, var::kX, {1, -1});
          return compare_series((g + BigRational(1)) * d.inverse(), rhs_gg1(ctx));
        });
      });
      break;

    case FormulaId::kAdr2:
      per_point([&s, T](Recorder& r, const RationalPoint& p) {
        r.check("rhs_vs_lhs", [&] {
          auto ctx = make_ctx({{var::kT, T}, {var::kUbar, s.cap("ubar")}});
          LhsSpec spec;
          spec.u = LhsArg::reciprocal(var::kUbar);
          spec.x = at(p, "x");
          spec.v = at(p, "v");
          return compare_series(
              s.lhs(ctx, spec),
              rhs_adr2(ctx, S::constant(ctx, point_value(p, "x")), point_value(p, "v")));
        });
      });
      break;

    case FormulaId::kThm4:
      per_point([&s, T](Recorder& r, const RationalPoint& p) {
        const auto& x = point_value(p, "x");
        const auto& v = point_value(p, "v");
        auto ctx = make_ctx({{var::kT, T}, {var::kUbar, s.cap("ubar")}});
        r.check("rhs_vs_lhs", [&] {
          LhsSpec spec;
          spec.u = LhsArg::reciprocal(var::kUbar);
          spec.x = at(p, "x");
          spec.v = at(p, "v");
          spec.z = at(p, "z");
          return compare_series(s.lhs(ctx, spec), rhs_thm4(ctx, x, v, point_value(p, "z")));
        });
        r.check("z1_collapse_to_adr2", [&] {
          return compare_series(rhs_thm4(ctx, x, v, 1), rhs_adr2(ctx, S::constant(ctx, x), v));
        });
      });
      break;

    case FormulaId::kAscZeroMax:
      per_point([&s, T](Recorder& r, const RationalPoint& p) {
        r.check("rhs_vs_lhs", [&] {
          auto ctx = make_ctx({{var::kT, T}, {var::kU, s.cap("u")}});
          LhsSpec spec;
          spec.u = LhsArg::graded(var::kU);
          spec.q = at(p, "q");
          spec.z = at(p, "z");
          return compare_series(s.lhs(ctx, spec),
                                rhs_asczeromax(ctx, point_value(p, "q"), point_value(p, "z")));
        });
      });
      break;

    case FormulaId::kH1Tilde:
      per_point([T](Recorder& r, const RationalPoint& p) {
        const auto& x = point_value(p, "x");
        const auto& u = point_value(p, "u");
        const auto& v = point_value(p, "v");
        const auto& q = point_value(p, "q");
        const auto& a = point_value(p, "a");
        auto ctx = make_ctx({{var::kT, T}});
        std::optional<S> base;
        auto h = [&] {
          if (!base) base = h1tilde_series(ctx, x, u, v, q, a);
          return *base;
        };
        r.check("swap_xu", [&] { return compare_series(h(), h1tilde_series(ctx, u, x, v, q, a)); });
        r.check("swap_vq", [&] { return compare_series(h(), h1tilde_series(ctx, x, u, q, v, a)); });
        r.check("swap_xu_vq",
                [&] { return compare_series(h(), h1tilde_series(ctx, u, x, q, v, a)); });
      });
      break;

    case FormulaId::kH1:
      per_point([&s, T](Recorder& r, const RationalPoint& p) {
        const auto& v = point_value(p, "v");
        const auto& q = point_value(p, "q");
        auto ctx = make_ctx({{var::kT, T}, {var::kX, s.cap("x")}, {var::kU, s.cap("u")}});
        const S x = S::variable(ctx, var::kX);
        const S u = S::variable(ctx, var::kU);
        std::optional<S> base;
        auto h = [&] {
          if (!base) base = h1_series(ctx, x, u, var::kU, v, q);
          return *base;
        };
        r.check("swap_xu", [&] { return compare_series(h(), h1_series(ctx, u, x, var::kX, v, q)); });
        r.check("swap_vq", [&] { return compare_series(h(), h1_series(ctx, x, u, var::kU, q, v)); });
      });
      break;

    case FormulaId::kH2:
      per_point([&s, T](Recorder& r, const RationalPoint& p) {
        const auto& x = point_value(p, "x");
        const auto& u = point_value(p, "u");
        const auto& q = point_value(p, "q");
        const auto& v = point_value(p, "v");
        const auto& a = point_value(p, "a");
        r.check("star_swap_xu", [&] {
          auto ctx = make_ctx({{var::kT, T}});
          return compare_series(h2star_series(ctx, x, u, q, v, a), h2star_series(ctx, u, x, q, v, a));
        });
        r.check("adr2_relation", [&] {
          // G(t; x, u, v, 1, 1) = vt / (ux(1 - vt)) H2(t; x, u, 1, v)
          auto ctx = make_ctx({{var::kT, T}, {var::kUbar, s.cap("ubar")}});
          const S w = S::variable(ctx, var::kUbar);
          const S h = h2_series(ctx, S::constant(ctx, BigRational(1 / x)), w, var::kUbar, v);
          const S pre = S::monomial(ctx, {{var::kT, 1}, {var::kUbar, 1}}, v / x) *
                        (BigRational(1) - v * S::variable(ctx, var::kT)).inverse();
          return compare_series(rhs_adr2(ctx, S::constant(ctx, x), v), pre * h);
        });
      });
      once([&s, T](Recorder& r) {
        r.check("bar_swap_xu", [&] {
          auto ctx = make_ctx({{var::kT, T}, {var::kXbar, s.cap("xbar")}, {var::kUbar, s.cap("ubar")}});
          const S xb = S::variable(ctx, var::kXbar);
          const S ub = S::variable(ctx, var::kUbar);
          // v is not sampled here; any fixed value off the pole set will do.
          const BigRational v = make_rational(2, 5);
          return compare_series(h2_series(ctx, xb, ub, var::kUbar, v),
                                h2_series(ctx, ub, xb, var::kXbar, v));
        });
      });
      break;

    case FormulaId::kTf43:
      per_point([&s, js](Recorder& r, const RationalPoint& p) {
        const Tf43Params params{point_value(p, "a"), point_value(p, "b"), point_value(p, "c"),
                                point_value(p, "d"), point_value(p, "e")};
        auto ctx = make_ctx({{var::kR, s.cap("r")}});
        for (int j : js) {
          r.check("sides_j" + std::to_string(j), [&] {
            auto [lhs, rhs] = tf43_sides(ctx, j, params);
            return compare_series(lhs, rhs);
          });
        }
      });
      break;
  }
  return tasks;
}

}  // namespace

std::optional<Witness> compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const auto& ctx = lhs.context();
  if (*rhs.context() != *ctx) throw ContextError("compared series live in different contexts");
  const S a = lhs.restrict_to(ctx);
  const S b = rhs.restrict_to(ctx);
  const auto diff = (a - b).terms();
  if (diff.empty()) return std::nullopt;
  const auto& e = diff.front().first;
  Witness w;
  w.add("monomial", TruncatedSeries::monomial_string(*ctx, e));
  w.add("lhs_coeff", to_string(a.coefficient(e)));
  w.add("rhs_coeff", to_string(b.coefficient(e)));
  return w;
}

VerifyReport verify_formula(FormulaId id, const VerifyOptions& options) {
  const auto start = Clock::now();
  const auto& info = formula_info(id);

  VerifyReport report;
  report.id = id;
  report.plan = info.plan;
  report.caps = info.default_caps;
  report.seed = options.sampling.seed;
  for (const auto& [name, cap] : options.caps) {
    auto it = report.caps.find(name);
    if (it == report.caps.end()) {
      throw DomainError("formula " + std::string(formula_name(id)) + " has no cap named '" + name + "'");
    }
    if (cap < 1) throw DomainError("caps must be at least 1");
    it->second = cap;
  }
  for (int j : options.js) {
    if (j < 0) throw DomainError("j must be non-negative");
  }

  Setup setup{report.caps, 0, options.enumeration_bound, options.source};
  if (auto t = report.caps.find("t"); t != report.caps.end()) {
    setup.n_max = options.n_max.value_or(t->second);
    if (setup.n_max < t->second) {
      throw DomainError("n-max " + std::to_string(setup.n_max) + " is below the t-cap");
    }
    check_enumeration_size(setup.n_max, options.enumeration_bound);
  }

  report.n_max = setup.n_max;
  if (id == FormulaId::kTf43) report.js = options.js;
  report.points = sample_points(id, options.sampling);
  const auto tasks = tasks_for(id, setup, report.points, options.js);

  std::vector<std::vector<SeriesCheck>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      Recorder rec(tasks[i].point_index);
      tasks[i].run(rec);
      results[i] = std::move(rec.checks());
    }
  };
  const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (auto& r : results) {
    for (auto& c : r) report.checks.push_back(std::move(c));
  }
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const SeriesCheck& a, const SeriesCheck& b) { return a.point_index < b.point_index; });
  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const SeriesCheck& c) { return c.passed; });
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace eslab
