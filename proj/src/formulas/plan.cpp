#include "eslab/formulas/plan.hpp"

#include <algorithm>
#include <random>

#include "eslab/error.hpp"

namespace eslab {

namespace {

using Reason = std::optional<std::string>;

BigRational q(long a, long b = 1) { return make_rational(a, b); }

const BigRational& get(const RationalPoint& p, const char* name) { return point_value(p, name); }

Reason nonzero(const RationalPoint& p, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (get(p, n) == 0) return std::string(n) + " = 0";
  }
  return std::nullopt;
}

Reason not_one(const RationalPoint& p, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (get(p, n) == 1) return std::string(n) + " = 1";
  }
  return std::nullopt;
}

Reason first_of(std::initializer_list<Reason> reasons) {
  for (const auto& r : reasons) {
    if (r) return r;
  }
  return std::nullopt;
}

// (1-qv)^2 / (ux(1-v)(1-q)) must not be 1, and qv != 1 keeps it finite.
Reason h_lower(const RationalPoint& p) {
  const auto& x = get(p, "x");
  const auto& u = get(p, "u");
  const auto& v = get(p, "v");
  const auto& qq = get(p, "q");
  if (qq * v == 1) return std::string("qv = 1");
  const BigRational s = 1 - qq * v;
  if (s * s == u * x * (1 - v) * (1 - qq)) return std::string("(1-qv)^2 = ux(1-v)(1-q)");
  return std::nullopt;
}

std::vector<FormulaInfo> build() {
  std::vector<FormulaInfo> out;
  auto none = [](const RationalPoint&) -> Reason { return std::nullopt; };
  auto x_not_one = [](const RationalPoint& p) { return not_one(p, {"x"}); };

  out.push_back({FormulaId::kGg1, "graded in x, u (total degree); t truncated",
                 {{"t", 8}, {"x", 4}, {"u", 4}}, {}, {}, none});
  out.push_back({FormulaId::kCor1Mid,
                 "graded in ubar = 1/u with x specialized; cross-check against gg1 with x graded",
                 {{"t", 8}, {"ubar", 6}, {"x", 3}}, {"x"}, {{"x", q(1, 3)}}, x_not_one});
  out.push_back({FormulaId::kThm1,
                 "graded in u with x, v, q specialized; u-slices also evaluated at the sampled u",
                 {{"t", 8}, {"u", 8}}, {"x", "u", "v", "q"},
                 {{"x", q(1, 3)}, {"u", q(1, 2)}, {"v", q(2, 5)}, {"q", q(3, 7)}},
                 [](const RationalPoint& p) { return not_one(p, {"x", "u"}); }});
  out.push_back({FormulaId::kAdr1, "graded in u with x, v specialized; x graded for the v = 1 check",
                 {{"t", 8}, {"u", 7}, {"x", 3}}, {"x", "v"}, {{"x", q(1, 3)}, {"v", q(2, 5)}},
                 x_not_one});
  out.push_back({FormulaId::kAdr2, "graded in ubar = 1/u with x, v specialized",
                 {{"t", 8}, {"ubar", 6}}, {"x", "v"}, {{"x", q(1, 3)}, {"v", q(2, 5)}},
                 x_not_one});
  out.push_back({FormulaId::kThm4,
                 "graded in ubar = 1/u with x, v, z specialized; inner G one ubar-degree deeper",
                 {{"t", 7}, {"ubar", 5}}, {"x", "v", "z"},
                 {{"x", q(1, 3)}, {"v", q(2, 5)}, {"z", q(5, 7)}}, x_not_one});
  out.push_back({FormulaId::kAscZeroMax, "graded in u with q, z specialized",
                 {{"t", 8}, {"u", 6}}, {"q", "z"}, {{"q", q(3, 7)}, {"z", q(2, 5)}}, none});
  out.push_back({FormulaId::kH1Tilde, "graded in t with x, u, v, q, a specialized",
                 {{"t", 8}}, {"x", "u", "v", "q", "a"},
                 {{"x", q(1, 3)}, {"u", q(1, 2)}, {"v", q(2, 5)}, {"q", q(3, 7)}, {"a", q(2, 3)}},
                 [](const RationalPoint& p) {
                   return first_of({not_one(p, {"x", "u", "v", "q"}), nonzero(p, {"x", "u"}),
                                    h_lower(p)});
                 }});
  out.push_back({FormulaId::kH1,
                 "t, x, u formal and graded in u (in x after the swap); v, q specialized",
                 {{"t", 6}, {"x", 3}, {"u", 3}}, {"v", "q"}, {{"v", q(2, 5)}, {"q", q(3, 7)}},
                 [](const RationalPoint& p) -> Reason {
                   if (auto r = not_one(p, {"v", "q"})) return r;
                   if (get(p, "q") * get(p, "v") == 1) return std::string("qv = 1");
                   return std::nullopt;
                 }});
  out.push_back({FormulaId::kH2,
                 "H2* graded in t; H2 graded in ubar = 1/u (xbar = 1/x after the swap)",
                 {{"t", 8}, {"ubar", 5}, {"xbar", 3}}, {"x", "u", "q", "v", "a"},
                 {{"x", q(1, 3)}, {"u", q(1, 2)}, {"q", q(3, 7)}, {"v", q(2, 5)}, {"a", q(2, 3)}},
                 [](const RationalPoint& p) -> Reason {
                   if (auto r = first_of({not_one(p, {"x", "u", "v", "q"}), nonzero(p, {"x", "u"})})) {
                     return r;
                   }
                   const auto& x = get(p, "x");
                   const auto& u = get(p, "u");
                   const auto& v = get(p, "v");
                   const auto& qq = get(p, "q");
                   const BigRational s = 1 - qq * v;
                   if (u * x * s * s == (1 - v) * (1 - qq)) {
                     return std::string("ux(1-qv)^2 = (1-v)(1-q)");
                   }
                   return std::nullopt;
                 }});
  out.push_back({FormulaId::kTf43, "graded in r with a -> a*r; b, c, d, e specialized",
                 {{"r", 8}}, {"a", "b", "c", "d", "e"},
                 {{"a", q(1, 2)}, {"b", q(1, 3)}, {"c", q(2, 5)}, {"d", q(3, 7)}, {"e", q(5, 7)}},
                 [](const RationalPoint& p) -> Reason {
                   if (auto r = first_of({nonzero(p, {"b", "c", "d", "e"}), not_one(p, {"d", "e"})})) {
                     return r;
                   }
                   if (get(p, "b") * get(p, "c") == get(p, "d") * get(p, "e")) {
                     return std::string("bc = de");
                   }
                   return std::nullopt;
                 }});
  std::sort(out.begin(), out.end(), [](const FormulaInfo& a, const FormulaInfo& b) {
    return formula_name(a.id) < formula_name(b.id);
  });
  return out;
}

}  // namespace

const BigRational& point_value(const RationalPoint& point, const std::string& name) {
  for (const auto& [n, v] : point) {
    if (n == name) return v;
  }
  throw DomainError("point has no value for '" + name + "'");
}

std::string point_string(const RationalPoint& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ", ";
    out += point[i].first + "=" + to_string(point[i].second);
  }
  return out + ")";
}

const FormulaInfo& formula_info(FormulaId id) {
  static const std::vector<FormulaInfo> infos = build();
  for (const auto& info : infos) {
    if (info.id == id) return info;
  }
  throw DomainError("no formula info");
}

const std::vector<BigRational>& default_sample_pool() {
  static const std::vector<BigRational> pool = {
      q(1, 2), q(1, 3),  q(2, 3),  q(1, 4),  q(3, 4),  q(2, 5),  q(3, 5),  q(3, 7),
      q(4, 7), q(5, 7),  q(2, 9),  q(4, 9),  q(5, 3),  q(7, 4),  q(5, 2),  q(3),
      q(2),    q(-1, 2), q(-1, 3), q(-2, 3), q(-3, 4), q(-2),
  };
  return pool;
}

std::vector<RationalPoint> sample_points(FormulaId id, const SampleOptions& options) {
  const auto& info = formula_info(id);
  if (options.count < 1) throw DomainError("need at least one point");
  if (options.pool.empty()) throw DomainError("empty sample pool");
  for (const auto& [name, value] : options.pinned) {
    if (std::find(info.parameters.begin(), info.parameters.end(), name) == info.parameters.end()) {
      throw DomainError("'" + name + "' is not a parameter of " + std::string(formula_name(id)));
    }
  }
  if (info.parameters.empty()) return {RationalPoint{}};

  auto pin = [&](RationalPoint p) {
    for (auto& [name, value] : p) {
      if (auto it = options.pinned.find(name); it != options.pinned.end()) value = it->second;
    }
    return p;
  };
  const bool all_pinned = options.pinned.size() == info.parameters.size();

  std::mt19937_64 rng(options.seed);
  std::vector<RationalPoint> points;
  int failures = 0;
  RationalPoint candidate = pin(info.example);
  std::string last_reason;
  while (static_cast<int>(points.size()) < (all_pinned ? 1 : options.count)) {
    const auto reason = info.pole(candidate);
    const bool repeated = std::find(points.begin(), points.end(), candidate) != points.end();
    if (!reason && !repeated) {
      points.push_back(candidate);
    } else {
      last_reason = reason ? *reason : "repeated point";
      if (++failures > options.max_redraws) {
        throw PoleError("no admissible point for " + std::string(formula_name(id)) + " after " +
                        std::to_string(options.max_redraws) + " draws (last: " + last_reason + ")");
      }
    }
    RationalPoint next;
    for (const auto& name : info.parameters) {
      next.emplace_back(name, options.pool[rng() % options.pool.size()]);
    }
    candidate = pin(std::move(next));
  }
  return points;
}

}  // namespace eslab
