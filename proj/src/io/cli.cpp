#include "hirschlab/io/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hirschlab/dual_graph.hpp"
#include "hirschlab/errors.hpp"
#include "hirschlab/groebner.hpp"
#include "hirschlab/io/parser.hpp"
#include "hirschlab/io/report.hpp"
#include "hirschlab/monomial_ideal.hpp"

namespace hirschlab::io {

namespace {

struct Options {
  std::string order;
  bool json = true;
  std::size_t prime_cap = kDefaultPrimeCap;
  std::size_t subset_cap = kDefaultSubsetCap;
  std::string file;
  std::string weights_mode;
  std::vector<std::int64_t> weights;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> l;
  std::optional<std::int64_t> s;
  std::vector<std::int64_t> hvec;
  std::vector<std::int64_t> ci_degrees;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Loaded {
  InputDocument doc;
  TermOrder order;
};

Loaded load(const Options& opt) {
  auto text = read_file(opt.file);
  InputDocument doc;
  try {
    doc = parse_document(text);
  } catch (const ParseError& e) {
    throw Error(opt.file + ":" + e.what());
  }
  TermOrder ord = TermOrder::lex();
  if (!opt.order.empty()) {
    ord = TermOrder::from_name(opt.order);
  } else if (doc.order) {
    ord = *doc.order;
  }
  return {std::move(doc), ord};
}

const GensBlock* first_gens(const InputDocument& doc) {
  for (const auto& b : doc.blocks) {
    if (const auto* g = std::get_if<GensBlock>(&b)) return g;
  }
  return nullptr;
}

const PrimesBlock* first_primes(const InputDocument& doc) {
  for (const auto& b : doc.blocks) {
    if (const auto* p = std::get_if<PrimesBlock>(&b)) return p;
  }
  return nullptr;
}

IdealPresentation intersect_all(const std::vector<IdealPresentation>& primes) {
  IdealPresentation acc = primes.front();
  for (std::size_t i = 1; i < primes.size(); ++i) acc = ideal_intersection(acc, primes[i]);
  return acc;
}

/// The ideal a file describes: its first block, a primes block standing for
/// the intersection of its members.
IdealPresentation ideal_of(const InputDocument& doc) {
  const auto& b = doc.blocks.front();
  if (const auto* g = std::get_if<GensBlock>(&b)) return g->ideal;
  return intersect_all(std::get<PrimesBlock>(b).primes);
}

MonomialIdeal as_monomial(const IdealPresentation& ideal) {
  std::vector<Monomial> ms;
  for (const auto& f : ideal.generators()) ms.push_back(f.leading_monomial(TermOrder::lex()));
  return MonomialIdeal(ideal.ring(), ms);
}

Json strings(const std::vector<Polynomial>& ps, const TermOrder& ord) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string(ord));
  return a;
}

Json monomial_gens(const MonomialIdeal& ideal) {
  Json a = Json::array();
  for (const auto& m : ideal.gens()) a.push_back(m.to_string(*ideal.ring()));
  return a;
}

Json header(const std::string& command, const Loaded& in) {
  Json j;
  j["command"] = command;
  j["ring"] = ring_json(*in.doc.ring);
  j["order"] = in.order.name();
  return j;
}

Json cmd_gb(const Options& opt) {
  auto in = load(opt);
  auto gb = buchberger(ideal_of(in.doc), in.order);
  Json j = header("gb", in);
  j["basis"] = strings(gb.elements, in.order);
  j["size"] = gb.elements.size();
  j["reduced"] = gb.reduced;
  j["unit_ideal"] = gb.contains_unit();
  return j;
}

Json cmd_initial(const Options& opt) {
  auto in = load(opt);
  auto init = initial_ideal(ideal_of(in.doc), in.order);
  Json j = header("initial", in);
  j["initial_ideal"] = monomial_gens(init);
  j["squarefree"] = is_squarefree(init);
  j["proper"] = !init.is_unit();
  j["height"] = init.is_unit() ? Json(nullptr) : Json(height(init, opt.prime_cap));
  return j;
}

MonomialIdeal require_monomial(const Loaded& in, const std::string& command) {
  const auto* g = first_gens(in.doc);
  if (g == nullptr) throw Error(command + " needs a gens: block");
  if (!g->ideal.is_monomial()) {
    throw Error(command + " needs monomial generators; run 'initial' first and use its output");
  }
  return as_monomial(g->ideal);
}

Json cmd_minprimes(const Options& opt) {
  auto in = load(opt);
  auto ideal = require_monomial(in, "minprimes");
  auto primes = minimal_primes(ideal, opt.prime_cap);
  Json j = header("minprimes", in);
  j["ideal"] = monomial_gens(ideal);
  Json list = Json::array();
  bool unmixed = true;
  for (const auto& p : primes) {
    list.push_back(p.to_string(*in.doc.ring));
    unmixed = unmixed && p.height() == primes.front().height();
  }
  j["primes"] = std::move(list);
  j["count"] = primes.size();
  j["height"] = primes.front().height();
  j["unmixed"] = unmixed;
  return j;
}

Json cmd_hilbert(const Options& opt) {
  auto in = load(opt);
  auto ideal = ideal_of(in.doc);
  const bool monomial = ideal.is_monomial();
  auto mono = monomial ? as_monomial(ideal) : initial_ideal(ideal, in.order);
  Json j = header("hilbert", in);
  j["via_initial"] = !monomial;
  j["monomial_ideal"] = monomial_gens(mono);
  auto data = hilbert(mono);
  j.update(hilbert_json(data));
  return j;
}

struct Analysis {
  DualGraphReport report;
  std::string source;
  std::optional<PrimeList> primes;
};

Analysis analyze(const Loaded& in, const Options& opt, bool multiplicity) {
  if (const auto* p = first_primes(in.doc); p != nullptr && std::holds_alternative<PrimesBlock>(in.doc.blocks.front())) {
    PrimeList list{in.doc.ring, p->primes, in.order};
    return {dual_graph_from_primes(list, multiplicity), "primes", std::move(list)};
  }
  auto ideal = require_monomial(in, "dualgraph");
  // Monomial primes all have multiplicity 1, so unit weights are already right.
  return {dual_graph_monomial(ideal, opt.prime_cap), "monomial", std::nullopt};
}

Json cmd_dualgraph(const Options& opt) {
  auto in = load(opt);
  if (!opt.weights_mode.empty() && opt.weights_mode != "multiplicity" && opt.weights_mode != "unit") {
    throw Error("--weights must be 'multiplicity' or 'unit'");
  }
  const bool multiplicity = opt.weights_mode == "multiplicity";
  auto a = analyze(in, opt, multiplicity);
  if (in.doc.weights) {
    if (in.doc.weights->size() != a.report.graph.size()) {
      throw Error("weights: annotation has " + std::to_string(in.doc.weights->size()) + " entries for " +
                  std::to_string(a.report.graph.size()) + " primes");
    }
    a.report.graph = a.report.graph.with_weights(*in.doc.weights);
  }
  Json j = header("dualgraph", in);
  j["source"] = a.source;
  j["weights"] = multiplicity ? "multiplicity" : (in.doc.weights ? "supplied" : "unit");
  const Json body = dual_graph_json(a.report);
  for (const auto& [k, v] : body.items()) {
    if (k == "bounds") j["connectivity"] = connectivity_json(a.report.graph);
    j[k] = v;
  }
  if (in.doc.reg) {
    WeightedGraph g = a.report.graph;
    if (!multiplicity && !in.doc.weights && a.primes) g = g.with_weights(multiplicity_weights(*a.primes));
    j["theorem_deg"] = deg_json(theorem_deg_report(g, *in.doc.reg));
  }
  return j;
}

Json cmd_hirsch(const Options& opt) {
  auto in = load(opt);
  Json j = header("hirsch", in);
  const auto* g = first_gens(in.doc);
  const bool gens_first = std::holds_alternative<GensBlock>(in.doc.blocks.front());
  if (gens_first && g != nullptr && !g->ideal.is_monomial()) {
    auto cert = certify_squarefree_ci(g->ideal, in.order);
    j["method"] = "squarefree-ci-certificate";
    j["hirsch"] = cert.positive ? "yes" : "unknown";
    j["height"] = cert.height;
    j["certificate"] = certificate_json(cert);
    return j;
  }
  auto a = analyze(in, opt, false);
  j["method"] = "dual-graph";
  j["hirsch"] = to_string(a.report.hirsch);
  j["height"] = a.report.height;
  j["connected"] = a.report.diameter.is_finite();
  j["diameter"] = to_json(a.report.diameter);
  return j;
}

Json cmd_bounds(const Options& opt) {
  Json j;
  j["command"] = "bounds";
  const bool graph_mode = !opt.weights.empty() || opt.r || opt.l || opt.s;
  if (!graph_mode && opt.hvec.empty() && opt.ci_degrees.empty()) {
    throw Error("bounds needs --weights/--r/--l/--s, --hvec or --ci-degrees");
  }
  if (graph_mode) {
    if (opt.weights.empty() || !opt.r || !opt.l) throw Error("bounds needs --weights, --r and --l together");
    const auto s = static_cast<std::int64_t>(opt.weights.size());
    if (opt.s && *opt.s != s) {
      throw Error("--s " + std::to_string(*opt.s) + " does not match " + std::to_string(s) + " weights");
    }
    std::int64_t e = 0;
    for (auto w : opt.weights) e += w;
    auto profile = prefix_profile(opt.weights, *opt.r, *opt.l);
    auto refined = refined_bound(s, profile);
    j["s"] = s;
    j["e"] = e;
    j["r"] = *opt.r;
    j["l"] = *opt.l;
    j["bounds"] = Json::array({
        Json{{"name", "menger"}, {"value", menger_bound(s, *opt.l)}, {"applicable", true},
             {"detail", "floor((s-2)/l)+1"}},
        Json{{"name", "rw"}, {"value", rw_bound(e, *opt.r)}, {"applicable", true},
             {"detail", "floor((e-2)/r)+1"}},
        Json{{"name", "refined"}, {"value", refined.value}, {"applicable", true},
             {"detail", refined.fallback ? "h absent: Menger bound" : "floor((s-2+sum b)/h)+1"}},
    });
    j["profile"] = profile_json(profile);
  }
  if (!opt.hvec.empty()) {
    j["hvec"] = opt.hvec;
    j["hvec_bound"] = gorenstein_hvec_bound(opt.hvec);
  }
  if (!opt.ci_degrees.empty()) {
    auto reg = ci_regularity(opt.ci_degrees);
    auto e = ci_multiplicity(opt.ci_degrees);
    j["ci"] = Json{{"degrees", opt.ci_degrees},
                   {"e", e},
                   {"r", reg},
                   {"bound", reg >= 1 ? Json(rw_bound(e, reg)) : Json(1)}};
  }
  return j;
}

Json cmd_connectivity(const Options& opt) {
  Json parsed;
  try {
    parsed = Json::parse(read_file(opt.file));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(opt.file + ": " + e.what());
  }
  auto g = graph_from_json(parsed);
  Json j;
  j["command"] = "connectivity";
  j.update(connectivity_json(g));
  j["weights"] = std::vector<std::int64_t>(g.weights().begin(), g.weights().end());
  j["total_weight"] = g.total_weight();
  return j;
}

Json cmd_compare(const Options& opt) {
  auto in = load(opt);
  PrimeList list{in.doc.ring, {}, in.order};
  if (const auto* p = first_primes(in.doc)) {
    list.primes = p->primes;
  } else {
    list = prime_list_from_monomial(require_monomial(in, "compare-initial"), in.order, opt.prime_cap);
  }
  Json j = header("compare-initial", in);
  j["primes"] = list.primes.size();
  j.update(comp_json(verify_comp(list, opt.subset_cap)));
  return j;
}

Json cmd_certify(const Options& opt) {
  auto in = load(opt);
  const auto* g = first_gens(in.doc);
  if (g == nullptr) throw Error("certify-ci needs a gens: block");
  Json j = header("certify-ci", in);
  j.update(certificate_json(certify_squarefree_ci(g->ideal, in.order)));
  return j;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Dual graphs, diameters and Hirsch bounds of polynomial ideals", "hirschlab"};
  app.require_subcommand(1);
  app.add_option("--order", opt.order, "Term order: lex, deglex or degrevlex")
      ->check(CLI::IsMember({"lex", "deglex", "degrevlex"}));
  bool text = false;
  bool json = false;
  auto* json_flag = app.add_flag("--json", json, "JSON report (default)");
  app.add_flag("--text", text, "Human-readable report")->excludes(json_flag);
  app.add_option("--prime-cap", opt.prime_cap, "Maximum number of minimal primes");
  app.add_option("--subset-cap", opt.subset_cap, "Maximum number of primes for compare-initial");

  using Handler = Json (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto file_command = [&](const std::string& name, const std::string& help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("file", opt.file, "Input file")->required();
    handlers.emplace_back(sub, h);
    return sub;
  };
  file_command("gb", "Reduced Groebner basis", cmd_gb);
  file_command("initial", "Initial ideal", cmd_initial);
  file_command("minprimes", "Minimal primes of a monomial ideal", cmd_minprimes);
  file_command("hilbert", "Hilbert series numerator, dimension and multiplicity", cmd_hilbert);
  file_command("dualgraph", "Dual graph report", cmd_dualgraph)
      ->add_option("--weights", opt.weights_mode, "Vertex weights: unit or multiplicity");
  file_command("hirsch", "Hirsch verdict", cmd_hirsch);
  file_command("connectivity", "Connectivity of a JSON graph file", cmd_connectivity);
  file_command("compare-initial", "Compare diam(I) with diam(in I)", cmd_compare);
  file_command("certify-ci", "Square-free complete intersection certificate", cmd_certify);
  auto* bounds = app.add_subcommand("bounds", "Diameter bounds from weights and connectivity");
  bounds->fallthrough();
  bounds->add_option("--weights", opt.weights, "Vertex weights")->delimiter(',');
  bounds->add_option("--r", opt.r, "Weighted connectivity r");
  bounds->add_option("--l", opt.l, "Vertex connectivity l");
  bounds->add_option("--s", opt.s, "Number of vertices");
  bounds->add_option("--hvec", opt.hvec, "Symmetric h-vector")->delimiter(',');
  bounds->add_option("--ci-degrees", opt.ci_degrees, "Complete intersection degrees")->delimiter(',');
  handlers.emplace_back(bounds, cmd_bounds);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hirschlab: " << e.what() << "\n";
    return kExitInputError;
  }
  opt.json = !text;

  try {
    const auto start = std::chrono::steady_clock::now();
    Json report;
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) report = handler(opt);
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    report["timing"] = Json{{"elapsed_ms", std::round(elapsed.count() * 1000.0) / 1000.0}};
    const std::string rendered = opt.json ? report.dump(2) + "\n" : render_text(report);
    out << rendered << std::flush;
    return kExitOk;
  } catch (const CapExceeded& e) {
    err << "hirschlab: cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const InvariantViolation& e) {
    err << "hirschlab: internal error: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const Error& e) {
    err << "hirschlab: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "hirschlab: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "hirschlab: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "hirschlab: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "hirschlab: internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace hirschlab::io
