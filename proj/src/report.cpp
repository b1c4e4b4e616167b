#include "eslab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace eslab {

namespace {

using Json = nlohmann::ordered_json;

double timing(double ms, const ReportStyle& style) {
  // Whole microseconds keep the numbers short and stable to print.
  return style.timing ? static_cast<double>(static_cast<long long>(ms * 1000)) / 1000 : 0.0;
}

Json witness_json(const Witness& w) {
  Json out = Json::object();
  for (const auto& [k, v] : w.fields) out[k] = v;
  return out;
}

Json point_json(const RationalPoint& p) {
  Json out = Json::object();
  for (const auto& [name, value] : p) out[name] = to_string(value);
  return out;
}

Json verify_object(const VerifyReport& r, const ReportStyle& style) {
  Json params;
  params["caps"] = Json::object();
  for (const auto& [name, cap] : r.caps) params["caps"][name] = cap;
  params["plan"] = r.plan;
  params["points"] = Json::array();
  for (const auto& p : r.points) params["points"].push_back(point_json(p));
  params["seed"] = r.seed;
  if (r.n_max > 0) params["n_max"] = r.n_max;
  if (!r.js.empty()) params["j"] = r.js;

  Json out;
  out["id"] = std::string(formula_name(r.id));
  out["params"] = std::move(params);
  out["status"] = r.passed ? "pass" : "fail";
  for (const auto& c : r.checks) {
    if (c.passed) continue;
    Json w = witness_json(*c.witness);
    w["check"] = c.name;
    w["point"] = c.point_index;
    out["witness"] = std::move(w);
    break;
  }
  out["checks"] = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["point"] = c.point_index < 0 ? Json(nullptr) : Json(c.point_index);
    j["status"] = c.passed ? "pass" : "fail";
    if (c.witness) j["witness"] = witness_json(*c.witness);
    j["elapsed_ms"] = timing(c.elapsed_ms, style);
    out["checks"].push_back(std::move(j));
  }
  out["elapsed_ms"] = timing(r.elapsed_ms, style);
  out["tool_version"] = tool_version();
  return out;
}

std::string dump(const std::vector<Json>& items) {
  if (items.size() == 1) return items.front().dump(2) + "\n";
  Json arr = Json::array();
  for (const auto& i : items) arr.push_back(i);
  return arr.dump(2) + "\n";
}

std::string format_ms(double ms, const ReportStyle& style) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << timing(ms, style) << " ms";
  return os.str();
}

}  // namespace

std::string tool_version() { return ESLAB_VERSION; }

std::string verify_json(const std::vector<VerifyReport>& reports, const ReportStyle& style) {
  std::vector<const VerifyReport*> sorted;
  for (const auto& r : reports) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const VerifyReport* a, const VerifyReport* b) {
    return formula_name(a->id) < formula_name(b->id);
  });
  std::vector<Json> items;
  for (const auto* r : sorted) items.push_back(verify_object(*r, style));
  return dump(items);
}

std::string verify_text(const std::vector<VerifyReport>& reports, const ReportStyle& style) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << formula_name(r.id) << ": " << (r.passed ? "pass" : "FAIL") << " ("
       << format_ms(r.elapsed_ms, style) << ")\n";
    os << "  plan: " << r.plan << "\n  caps:";
    for (const auto& [name, cap] : r.caps) os << " " << name << "=" << cap;
    os << "\n";
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      os << "  point " << i << ": " << point_string(r.points[i]) << "\n";
    }
    for (const auto& c : r.checks) {
      os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
      if (c.point_index >= 0) os << " @" << c.point_index;
      if (c.witness) os << "  " << c.witness->summary();
      os << "\n";
    }
  }
  return os.str();
}

std::string check_json(const std::vector<CheckReport>& reports,
                       const std::vector<std::map<std::string, std::string>>& params,
                       const ReportStyle& style) {
  std::vector<std::size_t> order(reports.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return reports[a].claim < reports[b].claim; });
  std::vector<Json> items;
  for (std::size_t i : order) {
    const auto& r = reports[i];
    Json out;
    out["id"] = r.claim;
    Json p = Json::object();
    p["n_min"] = r.n_min;
    p["n_max"] = r.n_max;
    if (i < params.size()) {
      for (const auto& [k, v] : params[i]) p[k] = v;
    }
    out["params"] = std::move(p);
    out["status"] = r.passed ? "pass" : "fail";
    if (r.witness) out["witness"] = witness_json(*r.witness);
    if (!r.detail.empty()) out["detail"] = r.detail;
    out["elapsed_ms"] = timing(r.elapsed_ms, style);
    out["tool_version"] = tool_version();
    items.push_back(std::move(out));
  }
  return dump(items);
}

std::string check_text(const std::vector<CheckReport>& reports, const ReportStyle& style) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << r.claim << " (n=" << r.n_min << ".." << r.n_max << "): " << (r.passed ? "pass" : "FAIL")
       << " (" << format_ms(r.elapsed_ms, style) << ")";
    if (!r.detail.empty()) os << "\n  " << r.detail;
    if (r.witness) os << "\n  witness: " << r.witness->summary();
    os << "\n";
  }
  return os.str();
}

std::string distribution_text(const Distribution& d) {
  std::ostringstream os;
  for (const auto& [key, count] : d.counts) {
    std::string tuple = key.to_string(d.stats);
    // A single scalar prints bare: "0 : 1" rather than "(0) : 1".
    if (d.stats.size() == 1 && !d.stats.front().is_rmin_set) tuple = tuple.substr(1, tuple.size() - 2);
    os << tuple << " : " << count.get_str() << "\n";
  }
  return os.str();
}

std::string distribution_csv(const Distribution& d) {
  std::ostringstream os;
  for (const auto& f : d.stats) os << f.name() << ",";
  os << "count\n";
  for (const auto& [key, count] : d.counts) {
    std::size_t scalar = 0;
    for (const auto& f : d.stats) {
      if (f.is_rmin_set) {
        os << "\"{";
        for (std::size_t i = 0; i < key.rmin_set.size(); ++i) {
          os << (i ? "," : "") << key.rmin_set[i];
        }
        os << "}\",";
      } else {
        os << key.scalars[scalar++] << ",";
      }
    }
    os << count.get_str() << "\n";
  }
  return os.str();
}

std::string distribution_json(const Distribution& d, double elapsed_ms, const ReportStyle& style) {
  Json out;
  out["id"] = "dist";
  Json p;
  p["n"] = d.n;
  p["stats"] = stat_tuple_name(d.stats);
  p["domain"] = std::string(domain_name(d.domain));
  out["params"] = std::move(p);
  out["status"] = "pass";
  out["rows"] = Json::array();
  for (const auto& [key, count] : d.counts) {
    Json row;
    row["tuple"] = key.to_string(d.stats);
    row["count"] = count.get_str();
    out["rows"].push_back(std::move(row));
  }
  out["total"] = d.total().get_str();
  out["elapsed_ms"] = timing(elapsed_ms, style);
  out["tool_version"] = tool_version();
  return out.dump(2) + "\n";
}

}  // namespace eslab
