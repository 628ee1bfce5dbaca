#include "hirschlab/io/report.hpp"

#include <iomanip>
#include <sstream>

#include "hirschlab/errors.hpp"

namespace hirschlab::io {

namespace {

void put_extended(Json& j, const std::string& key, const ExtendedNat& value) {
  j[key] = to_json(value);
  j[key + "_infinite"] = value.is_infinite();
}

std::string scalar_text(const Json& v, bool infinite = false) {
  if (v.is_null()) return infinite ? "inf" : "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(std::ostringstream& os, const Json& j, int indent);

void render_array(std::ostringstream& os, const Json& a, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  bool all_scalar = std::all_of(a.begin(), a.end(), [](const Json& e) { return !e.is_structured() || (e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) { return !x.is_structured(); })); });
  if (all_scalar) {
    std::string line;
    for (const auto& e : a) {
      if (!line.empty()) line += ", ";
      line += e.is_array() ? e.dump() : scalar_text(e);
    }
    os << " [" << line << "]\n";
    return;
  }
  os << "\n";
  for (const auto& e : a) {
    if (e.is_object()) {
      // One row per object: key=value pairs.
      os << pad << "-";
      for (const auto& [k, v] : e.items()) os << " " << k << "=" << (v.is_structured() ? v.dump() : scalar_text(v));
      os << "\n";
    } else {
      os << pad << "- " << e.dump() << "\n";
    }
  }
}

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (key.size() > 9 && key.ends_with("_infinite")) continue;
    os << pad << key << ":";
    if (value.is_object()) {
      os << "\n";
      render(os, value, indent + 2);
    } else if (value.is_array()) {
      render_array(os, value, indent + 2);
    } else {
      const bool infinite = key.starts_with("diam") || (j.contains(key + "_infinite") && j[key + "_infinite"].get<bool>());
      os << " " << scalar_text(value, infinite) << "\n";
    }
  }
}

}  // namespace

Json to_json(const ExtendedNat& value) {
  if (value.is_infinite()) return nullptr;
  return value.value();
}

Json ring_json(const PolyRing& ring) {
  return Json{{"field", ring.field().to_string()}, {"variables", ring.names()}};
}

Json graph_json(const DualGraphReport& report) {
  Json vertices = Json::array();
  for (std::size_t i = 0; i < report.vertices.size(); ++i) {
    vertices.push_back(Json{{"id", i + 1},
                            {"generators", report.vertices[i].generators},
                            {"height", report.vertices[i].height},
                            {"weight", report.graph.weight(i)}});
  }
  Json edges = Json::array();
  for (auto [u, v] : report.graph.edges()) edges.push_back(Json::array({u + 1, v + 1}));
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json dual_graph_json(const DualGraphReport& report) {
  Json j;
  j["graph"] = graph_json(report);
  j["height"] = report.height;
  j["unmixed"] = report.unmixed;
  j["connected"] = report.diameter.is_finite();
  j["diameter"] = to_json(report.diameter);
  j["hirsch"] = to_string(report.hirsch);
  Json bounds = Json::array();
  for (const auto& b : report.bounds) {
    bounds.push_back(Json{{"name", b.name},
                          {"value", b.value ? Json(*b.value) : Json(nullptr)},
                          {"applicable", b.applicable},
                          {"detail", b.detail}});
  }
  j["bounds"] = std::move(bounds);
  j["warnings"] = report.warnings;
  j["disclaimers"] = report.disclaimers;
  return j;
}

Json profile_json(const PrefixProfile& p) {
  Json levels = Json::array();
  for (const auto& lv : p.levels) {
    levels.push_back(Json{{"i", lv.i}, {"size", lv.prefix_length}, {"b", lv.deficiency}});
  }
  return Json{{"l", p.l},
              {"r", p.r},
              {"sorted_weights", p.sorted_weights},
              {"h", p.h ? Json(*p.h) : Json(nullptr)},
              {"levels", std::move(levels)},
              {"sum_b", p.deficiency_sum()}};
}

Json deg_json(const DegReport& r) {
  Json j;
  j["reg"] = r.reg;
  j["weights"] = r.weights;
  j["multiplicity"] = r.multiplicity;
  j["deg_bound"] = r.deg_bound;
  j["l"] = r.l;
  j["profile"] = r.profile ? profile_json(*r.profile) : Json(nullptr);
  j["refined_bound"] = r.refined ? Json(r.refined->value) : Json(nullptr);
  j["refined_fallback"] = r.refined ? Json(r.refined->fallback) : Json(nullptr);
  j["connected"] = r.diameter.is_finite();
  j["diameter"] = to_json(r.diameter);
  put_extended(j, "weighted_connectivity", r.weighted_connectivity);
  j["rw_connected"] = r.rw_connected;
  j["consistent"] = r.consistent;
  j["disclaimers"] = r.disclaimers;
  return j;
}

Json comp_json(const CompRecord& rec) {
  Json j;
  j["subsets_checked"] = rec.subsets_checked;
  j["hypothesis"] = rec.hypothesis_holds ? "holds" : "fails";
  j["failing_subsets"] = rec.failing_subsets;
  j["initial_ideal"] = rec.initial_of_intersection.to_string();
  j["ideal_connected"] = rec.diam_ideal.is_finite();
  j["diam_ideal"] = to_json(rec.diam_ideal);
  j["initial_connected"] = rec.diam_initial.is_finite();
  j["diam_initial"] = to_json(rec.diam_initial);
  j["inequality_holds"] = rec.inequality_holds;
  j["initial_commutes_with_intersection"] = rec.initial_commutes_with_intersection;
  j["initial_commutes_with_sum"] = rec.initial_commutes_with_sum;
  return j;
}

Json certificate_json(const CiCertificate& c) {
  return Json{{"positive", c.positive},
              {"basis_size", c.basis_size},
              {"height", c.height},
              {"squarefree", c.squarefree},
              {"pairwise_coprime", c.pairwise_coprime},
              {"initial_ideal", c.initial.to_string()},
              {"hirsch", c.positive ? "yes" : "unknown"}};
}

Json hilbert_json(const HilbertData& d) {
  return Json{{"numerator", d.numerator},
              {"raw_numerator", d.raw_numerator},
              {"dim", d.dim},
              {"multiplicity", d.multiplicity}};
}

Json connectivity_json(const WeightedGraph& g) {
  auto profile = connectivity_profile(g);
  Json j;
  j["s"] = g.size();
  j["connected"] = profile.connected;
  put_extended(j, "vertex_connectivity", profile.vertex_connectivity);
  put_extended(j, "weighted_connectivity", profile.weighted_connectivity);
  j["diameter"] = to_json(diameter(g));
  return j;
}

WeightedGraph graph_from_json(const Json& j) {
  try {
    const auto s = j.at("s").get<std::size_t>();
    std::vector<WeightedGraph::Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("each edge must be a pair [i, j]");
      auto u = e[0].get<std::size_t>();
      auto v = e[1].get<std::size_t>();
      if (u < 1 || v < 1) throw Error("edge endpoints are 1-based");
      edges.emplace_back(u - 1, v - 1);
    }
    std::vector<std::int64_t> weights;
    if (j.contains("weights")) weights = j.at("weights").get<std::vector<std::int64_t>>();
    return WeightedGraph(s, edges, std::move(weights));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed graph file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("invalid graph: ") + e.what());
  }
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace hirschlab::io
