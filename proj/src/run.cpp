#include "antf/run.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>

#include "antf/assprimes.hpp"
#include "antf/error.hpp"
#include "antf/io.hpp"

namespace antf {

using json = nlohmann::ordered_json;

Command parse_command(std::string_view name) {
  if (name == "ass-powers") return Command::AssPowers;
  if (name == "classify") return Command::Classify;
  if (name == "verify") return Command::Verify;
  if (name == "oracle-compare") return Command::OracleCompare;
  if (name == "rees-check") return Command::ReesCheck;
  throw InvalidArgument("unknown command '" + std::string(name) + "'");
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::AssPowers: return "ass-powers";
    case Command::Classify: return "classify";
    case Command::Verify: return "verify";
    case Command::OracleCompare: return "oracle-compare";
    case Command::ReesCheck: return "rees-check";
  }
  return "?";
}

void RunConfig::validate() const {
  if (kmax < 1) throw InvalidArgument("--kmax must be >= 1");
  if (!(budget_seconds > 0)) throw InvalidArgument("--budget-seconds must be > 0");
  if (threads < 1) throw InvalidArgument("--threads must be >= 1");
  static constexpr std::string_view kWhich[] = {"auto", "graph", "specialcycle", "ass", "deg2", "deg3"};
  if (std::find(std::begin(kWhich), std::end(kWhich), which) == std::end(kWhich))
    throw InvalidArgument("--which must be one of auto, graph, specialcycle, ass, deg2, deg3");
}

double default_budget_seconds() {
  if (const char* env = std::getenv("ANTF_BUDGET_SECONDS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 300.0;
}

int Report::exit_code() const {
  if (mismatch) return 1;
  if (budget_exhausted) return 3;
  return 0;
}

namespace {

json prime_json(const MonomialPrime& p) { return json(std::vector<std::size_t>(p.variables().begin(), p.variables().end())); }

json primes_json(const PrimeSet& primes) {
  json a = json::array();
  for (const auto& p : primes) a.push_back(prime_json(p));
  return a;
}

json ass_json(const std::map<int, PrimeSet>& powers) {
  json o = json::object();
  for (const auto& [k, primes] : powers) o[std::to_string(k)] = primes_json(primes);
  return o;
}

json input_json(const Input& input) {
  json o;
  o["kind"] = kind_name(input);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Graph>) {
          o["n"] = x.order();
          json edges = json::array();
          for (auto [i, j] : x.edges()) edges.push_back({i, j});
          o["edges"] = edges;
        } else if constexpr (std::is_same_v<T, SimplicialComplex>) {
          o["n"] = x.order();
          o["facets"] = x.facets();
        } else {
          o["t"] = x.t;
          o["n"] = x.n;
          o["u"] = x.indices;
        }
      },
      input);
  return o;
}

json cycle_json(const Cycle& c) { return json(c.vertices); }

PrimeSet with(PrimeSet base, const MonomialPrime& extra) {
  base.push_back(extra);
  canonicalize(base);
  return base;
}

std::string describe(const PrimeSet& primes) {
  std::string s = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? ", " : "") + to_string(primes[i]);
  return s + "}";
}

class Session {
public:
  Session(const RunConfig& config, Report& report)
      : config_(config),
        report_(report),
        budget_(std::chrono::duration<double>(config.budget_seconds), config.budget_steps) {
    opts_.threads = config.threads;
    opts_.budget = &budget_;
  }

  const AssOptions& opts() const { return opts_; }
  const Budget& budget() const { return budget_; }

  void check(std::string name, int power, std::string_view status, std::string detail) {
    json c;
    c["name"] = std::move(name);
    if (power > 0) c["power"] = power;
    c["status"] = status;
    c["detail"] = std::move(detail);
    if (status == "MISMATCH") report_.mismatch = true;
    report_.body["checks"].push_back(std::move(c));
  }

  /// Oracle Ass table for I, also written into the report.
  AssReport oracle(const MonomialIdeal& I) {
    AssReport r = ass_of_powers(I, config_.kmax, opts_);
    report_.body["min_primes"] = primes_json(r.min_primes);
    report_.body["ass"] = ass_json(r.powers);
    json ov;
    ov["classification"] = to_string(r.verdict.classification);
    ov["scope"] = r.powers.empty() ? std::string("no powers") : "powers 1.." + std::to_string(r.computed_through());
    if (r.verdict.k_index) ov["k_index"] = *r.verdict.k_index;
    if (r.verdict.extra_prime) ov["extra_prime"] = prime_json(*r.verdict.extra_prime);
    if (!r.verdict.offending.empty()) ov["offending"] = primes_json(r.verdict.offending);
    report_.body["oracle_verdict"] = ov;
    if (r.budget_exhausted) report_.budget_exhausted = true;
    return r;
  }

  /// Compares the oracle at every power with `predict(m)`; a nullopt
  /// prediction is recorded as UNCHECKED.
  template <class Predict>
  void compare_powers(const AssReport& r, std::string_view name, Predict&& predict) {
    for (int m = 1; m <= config_.kmax; ++m) {
      auto it = r.powers.find(m);
      if (it == r.powers.end()) {
        check(std::string(name), m, "UNCHECKED", "budget exhausted before this power");
        continue;
      }
      std::optional<PrimeSet> expected = predict(m);
      if (!expected) {
        check(std::string(name), m, "UNCHECKED", "no closed-form prediction at this power");
        continue;
      }
      const bool ok = *expected == it->second;
      check(std::string(name), m, ok ? "MATCH" : "MISMATCH",
            ok ? std::to_string(it->second.size()) + " primes"
               : "predicted " + describe(*expected) + ", oracle " + describe(it->second));
    }
  }

private:
  const RunConfig& config_;
  Report& report_;
  Budget budget_;
  AssOptions opts_;
};

MonomialIdeal ideal_of(const Input& input) {
  if (auto g = std::get_if<Graph>(&input)) return edge_ideal(*g);
  if (auto d = std::get_if<SimplicialComplex>(&input)) return facet_ideal(*d);
  return generate(std::get<BorelSpec>(input));
}

void require_which(const RunConfig& config, std::initializer_list<std::string_view> allowed,
                   std::string_view kind) {
  if (config.which == "auto") return;
  for (auto a : allowed)
    if (config.which == a) return;
  throw InvalidArgument("--which " + config.which + " does not apply to " + std::string(kind) + " input");
}

// Graphs

json graph_verdict_json(const Graph& G, const GraphVerdict& v) {
  json o;
  o["classification"] = to_string(v.classification);
  o["connected"] = v.connected;
  o["bipartite"] = v.bipartite;
  if (v.k_index) o["k_index"] = *v.k_index;
  if (v.failing_cycle) {
    o["failing_cycle"] = cycle_json(*v.failing_cycle);
    o["failing_cycle_closure"] = neighborhood_closure(G, *v.failing_cycle);
    json all = json::array();
    for (const auto& c : v.failing_cycles) all.push_back(cycle_json(c));
    o["failing_cycles"] = all;
  }
  return o;
}

/// Disconnected graphs: per-component verdicts plus Ass of powers of the
/// whole ideal assembled component by component.
void composite_graph(Session& s, const RunConfig& config, Report& report, const Graph& G) {
  json comps = json::array();
  std::vector<MonomialIdeal> parts;
  for (const auto& vertices : G.components()) {
    const Graph H = G.induced(vertices);
    json c;
    c["vertices"] = vertices;
    if (H.edges().empty()) {
      c["classification"] = "EMPTY";
      comps.push_back(c);
      continue;
    }
    c["verdict"] = graph_verdict_json(H, classify_edge_ideal(H));
    comps.push_back(c);
    std::vector<Monomial> gens;
    for (auto [i, j] : H.edges())
      gens.push_back(Monomial::from_variables(G.order(), {vertices[i - 1], vertices[j - 1]}));
    parts.emplace_back(G.order(), std::move(gens));
  }
  report.body["components"] = comps;
  if (parts.empty()) throw HypothesisViolation("graph has no edges", "add at least one edge");

  std::map<int, PrimeSet> powers;
  MonomialIdeal acc = parts.front();
  try {
    for (int k = 1; k <= config.kmax; ++k) {
      if (parts.size() == 1) {
        powers[k] = associated_primes(power(acc, k), s.opts());
        continue;
      }
      MonomialIdeal left = parts.front();
      PrimeSet primes;
      for (std::size_t c = 1; c < parts.size(); ++c) {
        primes = split_ass(left, parts[c], k, s.opts());
        left = ideal_sum(left, parts[c]);
      }
      powers[k] = primes;
    }
  } catch (const BudgetExceeded&) {
    report.budget_exhausted = true;
  }
  MonomialIdeal whole = parts.front();
  for (std::size_t c = 1; c < parts.size(); ++c) whole = ideal_sum(whole, parts[c]);
  const PrimeSet min = minimal_primes(whole);
  report.body["min_primes"] = primes_json(min);
  report.body["ass"] = ass_json(powers);
  const PowersVerdict pv = classify_powers(min, powers);
  json v;
  v["classification"] = "ORACLE_ONLY";
  v["oracle_classification"] = to_string(pv.classification);
  report.body["verdict"] = v;
}

void graph_command(Session& s, const RunConfig& config, Report& report, const Graph& G) {
  require_which(config, {"graph"}, "graph");
  if (!G.is_connected() && config.composite && config.command != Command::ReesCheck) {
    composite_graph(s, config, report, G);
    return;
  }
  const GraphVerdict v = classify_edge_ideal(G);
  report.body["verdict"] = graph_verdict_json(G, v);
  if (config.command == Command::Classify) return;

  if (config.command == Command::ReesCheck) {
    const bool rees = rees_generation_check(G);
    report.body["rees_generated"] = rees;
    const bool expected = v.classification != Classification::NOT_ANTF;
    s.check("rees_vs_classification", 0, rees == expected ? "MATCH" : "MISMATCH",
            std::string("generation condition ") + (rees ? "holds" : "fails") + ", classification " +
                std::string(to_string(v.classification)));

    std::vector<std::vector<int>> minimal;
    for (const auto& c : minimal_vertex_covers(G)) {
      std::vector<int> a(G.order(), 0);
      for (std::size_t x : c) a[x - 1] = 1;
      minimal.push_back(a);
    }
    std::sort(minimal.begin(), minimal.end());
    const auto order1 = indecomposable_covers(G, 1);
    s.check("order1_covers", 0, order1 == minimal ? "MATCH" : "MISMATCH",
            std::to_string(order1.size()) + " indecomposable covers of order 1");
    if (G.order() <= 8) {
      const auto order2 = indecomposable_covers(G, 2);
      report.body["order2_covers"] = order2;
      if (v.bipartite) {
        s.check("order2_covers", 0, order2.empty() ? "MATCH" : "MISMATCH",
                "bipartite: no order-2 generators expected");
      } else if (rees) {
        const bool ok = order2 == std::vector<std::vector<int>>{std::vector<int>(G.order(), 1)};
        s.check("order2_covers", 0, ok ? "MATCH" : "MISMATCH",
                "order-2 generators should be exactly x_1...x_n t^2");
      }
    }
    return;
  }

  const MonomialIdeal I = edge_ideal(G);
  if (config.command == Command::Verify) {
    const AssReport r = s.oracle(I);
    const PrimeSet& min = r.min_primes;
    if (v.classification == Classification::NTF) {
      s.compare_powers(r, "bipartite_ntf", [&](int) { return std::optional(min); });
    } else if (v.classification == Classification::ANTF) {
      const int k = *v.k_index;
      const auto m_ideal = MonomialPrime::maximal(G.order());
      s.compare_powers(r, "odd_cycle_closure", [&](int m) {
        return std::optional(m <= k ? min : with(min, m_ideal));
      });
    } else {
      // Each failing cycle C_{2j+1} forces its obstruction primes from
      // power j+1 on; nothing is claimed before that.
      for (int m = 1; m <= config.kmax; ++m) {
        PrimeSet expected;
        for (const auto& c : v.failing_cycles)
          if (static_cast<int>(c.length() - 1) / 2 + 1 <= m) {
            auto p = cycle_obstruction_primes(G, c);
            expected.insert(expected.end(), p.begin(), p.end());
          }
        canonicalize(expected);
        auto it = r.powers.find(m);
        if (it == r.powers.end()) {
          s.check("failing_cycle_primes", m, "UNCHECKED", "budget exhausted before this power");
        } else if (expected.empty()) {
          s.check("failing_cycle_primes", m, "UNCHECKED", "no failing cycle short enough");
        } else {
          const bool ok = is_subset(expected, it->second);
          s.check("failing_cycle_primes", m, ok ? "MATCH" : "MISMATCH",
                  std::to_string(expected.size()) + " predicted non-minimal primes " +
                      (ok ? "present" : "missing: " + describe(expected)));
        }
      }
    }
  }
}

// Simplicial complexes

void complex_command(Session& s, const RunConfig& config, Report& report, const SimplicialComplex& D) {
  require_which(config, {"specialcycle"}, "complex");
  const auto cycle = verify_special_cycle_complex(D);
  std::optional<SpecialCycle> any = cycle ? cycle : find_special_odd_cycle(D);
  json v;
  if (cycle) {
    v["classification"] = "ANTF";
    v["k_index"] = cycle->s;
    v["extra_prime"] = prime_json(cycle_prime(D, *cycle));
  } else if (!any) {
    v["classification"] = "NTF";
  } else {
    v["classification"] = "ORACLE_ONLY";
  }
  if (any) {
    json c;
    c["s"] = any->s;
    c["vertices"] = any->vertices;
    json facets = json::array();
    for (std::size_t fi : any->facet_index) facets.push_back(D.facets()[fi]);
    c["facets"] = facets;
    c["spans_complex"] = cycle.has_value();
    v["special_cycle"] = c;
  }
  report.body["verdict"] = v;
  if (config.command != Command::Verify) return;

  const MonomialIdeal I = facet_ideal(D);
  const AssReport r = s.oracle(I);
  if (cycle) {
    s.compare_powers(r, "special_cycle", [&](int m) { return std::optional(predicted_ass(D, m)); });
    const Monomial u = step1_witness(D);
    const MonomialIdeal Is1 = power(I, cycle->s + 1);
    const bool outside = !member(u, Is1);
    const bool colon_ok = colon(Is1, u) == prime_ideal(cycle_prime(D, *cycle));
    report.body["step1_witness"] = to_string(u);
    s.check("step1_witness", cycle->s + 1, outside && colon_ok ? "MATCH" : "MISMATCH",
            "u = " + to_string(u) + (outside ? " not in I^(s+1)" : " lies in I^(s+1)") +
                (colon_ok ? ", colon is the cycle prime" : ", colon differs from the cycle prime"));
  } else if (!any) {
    s.compare_powers(r, "no_special_odd_cycle", [&](int) { return std::optional(r.min_primes); });
  } else {
    s.compare_powers(r, "oracle_only", [](int) { return std::optional<PrimeSet>(); });
  }
}

// t-spread principal Borel ideals

void tspread_command(Session& s, const RunConfig& config, Report& report, const BorelSpec& spec) {
  require_which(config, {"ass", "deg2", "deg3"}, "tspread");
  const NormalizedSpec norm = normalize(spec);
  json nj;
  nj["t"] = norm.spec.t;
  nj["n"] = norm.spec.n;
  nj["u"] = norm.spec.indices;
  nj["variable_map"] = norm.variable_map;
  nj["exact"] = norm.exact;
  report.body["normalized"] = nj;

  const std::size_t d = norm.spec.degree();
  const bool tail_ok = norm.spec.indices.back() == norm.spec.n;
  auto back = [&](const MonomialPrime& p) { return pull_back(p, norm.variable_map, spec.n); };

  std::optional<PrimeSet> candidates;
  if (tail_ok && norm.exact && (config.which == "auto" || config.which == "ass")) {
    candidates.emplace();
    for (const auto& p : candidate_ass(norm.spec)) candidates->push_back(back(p));
    canonicalize(*candidates);
    report.body["candidate_ass"] = primes_json(*candidates);
  }

  std::optional<BorelVerdict> bv;
  std::string note;
  const bool want2 = config.which == "auto" || config.which == "deg2";
  const bool want3 = config.which == "auto" || config.which == "deg3";
  if (config.which == "deg2" && d != 2) throw HypothesisViolation("spec has degree " + std::to_string(d), "--which deg2 needs degree 2");
  if (config.which == "deg3" && d != 3) throw HypothesisViolation("spec has degree " + std::to_string(d), "--which deg3 needs degree 3");
  if (!tail_ok) note = "i_d < n: closed forms assume i_d = n";
  else if (!norm.exact) note = "i_1 < t in degree >= 3: dropping variables does not give a principal Borel ideal";
  else if (d == 2 && want2) bv = classify_deg2(norm.spec);
  else if (d == 3 && want3) bv = classify_deg3(norm.spec);
  else if (d != 2 && d != 3) note = "no closed form in degree " + std::to_string(d);

  json v;
  if (bv) {
    v["classification"] = to_string(bv->classification);
    if (bv->k_index) v["k_index"] = *bv->k_index;
    if (bv->extra_prime) v["extra_prime"] = prime_json(back(*bv->extra_prime));
    if (!bv->obstruction_primes.empty()) {
      PrimeSet ob;
      for (const auto& p : bv->obstruction_primes) ob.push_back(back(p));
      canonicalize(ob);
      v["obstruction_primes"] = primes_json(ob);
    }
  } else {
    v["classification"] = "ORACLE_ONLY";
    if (!note.empty()) v["note"] = note;
  }
  report.body["verdict"] = v;
  if (config.command != Command::Verify) return;

  const AssReport r = s.oracle(generate(spec));
  if (candidates) {
    auto it = r.powers.find(1);
    if (it != r.powers.end()) {
      const bool sub = is_subset(it->second, *candidates);
      const bool eq = it->second == *candidates;
      s.check("candidate_ass", 1, sub ? "MATCH" : "MISMATCH",
              std::to_string(it->second.size()) + " oracle primes, " + std::to_string(candidates->size()) +
                  " candidates" + (eq ? ", equal" : sub ? ", strict superset" : ", oracle prime outside candidates"));
    }
  }
  if (!bv) return;
  const PrimeSet& min = r.min_primes;
  if (bv->classification == Classification::NTF) {
    s.compare_powers(r, "ntf", [&](int) { return std::optional(min); });
  } else if (bv->classification == Classification::ANTF) {
    const int k = *bv->k_index;
    const MonomialPrime extra = back(*bv->extra_prime);
    s.compare_powers(r, "antf", [&](int m) { return std::optional(m <= k ? min : with(min, extra)); });
  } else {
    PrimeSet ob;
    for (const auto& p : bv->obstruction_primes) ob.push_back(back(p));
    for (int m = 1; m <= config.kmax; ++m) {
      auto it = r.powers.find(m);
      if (it == r.powers.end()) {
        s.check("obstruction_primes", m, "UNCHECKED", "budget exhausted before this power");
        continue;
      }
      bool ok = true;
      for (const auto& p : ob) {
        const bool present = std::find(it->second.begin(), it->second.end(), p) != it->second.end();
        ok = ok && (m == 1 ? !present : present);
      }
      s.check("obstruction_primes", m, ok ? "MATCH" : "MISMATCH",
              m == 1 ? "obstruction primes absent from Ass(I)" : "obstruction primes present in Ass(I^m)");
    }
  }
}

void oracle_compare(Session& s, const RunConfig& config, Report& report, const MonomialIdeal& I) {
  report.body["min_primes"] = primes_json(minimal_primes(I));
  json ass = json::object();
  try {
    MonomialIdeal J = I;
    for (int m = 1; m <= config.kmax; ++m) {
      if (m > 1) J = product(J, I);
      const PrimeSet witness_route = associated_primes(J, s.opts());
      const auto components = irreducible_decomposition(J, &s.budget());
      const PrimeSet split_route = component_radicals(components);
      ass[std::to_string(m)] = primes_json(witness_route);
      const bool ok = witness_route == split_route;
      s.check("witness_vs_decomposition", m, ok ? "MATCH" : "MISMATCH",
              std::to_string(components.size()) + " irreducible components, " +
                  std::to_string(witness_route.size()) + " associated primes");
    }
  } catch (const BudgetExceeded&) {
    report.budget_exhausted = true;
  }
  report.body["ass"] = ass;
}

}  // namespace

Report run(const RunConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const ParsedInput parsed =
      config.input_text ? parse_input(*config.input_text) : parse_input_file(config.input_path);

  Report report;
  report.body["command"] = to_string(config.command);
  report.body["input"] = input_json(parsed.value);
  report.body["kmax"] = config.kmax;
  if (!parsed.warnings.empty()) report.body["warnings"] = parsed.warnings;
  report.body["checks"] = json::array();

  Session session(config, report);
  if (config.command == Command::AssPowers) {
    session.oracle(ideal_of(parsed.value));
  } else if (config.command == Command::OracleCompare) {
    oracle_compare(session, config, report, ideal_of(parsed.value));
  } else if (auto g = std::get_if<Graph>(&parsed.value)) {
    graph_command(session, config, report, *g);
  } else if (config.command == Command::ReesCheck) {
    throw InvalidArgument("rees-check needs graph input");
  } else if (auto d = std::get_if<SimplicialComplex>(&parsed.value)) {
    complex_command(session, config, report, *d);
  } else {
    tspread_command(session, config, report, std::get<BorelSpec>(parsed.value));
  }

  if (report.body["checks"].empty()) report.body.erase("checks");
  report.body["budget_exhausted"] = report.budget_exhausted;
  if (config.timing)
    report.body["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

std::string primes_text(const json& primes) {
  std::string s;
  for (const auto& p : primes) {
    s += s.empty() ? "" : " ";
    s += "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::string("x") + std::to_string(p[i].get<std::size_t>());
    s += ")";
  }
  return s;
}

}  // namespace

std::string Report::render(bool as_json) const {
  if (as_json) return body.dump(2) + "\n";
  std::ostringstream os;
  const auto& in = body["input"];
  os << "command: " << body["command"].get<std::string>() << "\n";
  os << "input:   " << in["kind"].get<std::string>() << " on " << in["n"].get<std::size_t>() << " variables\n";
  if (body.contains("warnings"))
    for (const auto& w : body["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  if (body.contains("normalized")) {
    const auto& nz = body["normalized"];
    os << "normalized: t=" << nz["t"] << " n=" << nz["n"] << " u=" << nz["u"].dump()
       << (nz["exact"].get<bool>() ? "" : " (inexact)") << "\n";
  }
  if (body.contains("verdict")) {
    const auto& v = body["verdict"];
    os << "verdict: " << v["classification"].get<std::string>();
    if (v.contains("k_index")) os << " k=" << v["k_index"];
    if (v.contains("failing_cycle"))
      os << " failing cycle " << v["failing_cycle"].dump() << " closure " << v["failing_cycle_closure"].dump();
    if (v.contains("extra_prime")) os << " extra prime " << primes_text(json::array({v["extra_prime"]}));
    if (v.contains("obstruction_primes")) os << " obstruction primes " << primes_text(v["obstruction_primes"]);
    if (v.contains("note")) os << " (" << v["note"].get<std::string>() << ")";
    if (v.contains("oracle_classification")) os << " (oracle: " << v["oracle_classification"].get<std::string>() << ")";
    os << "\n";
  }
  if (body.contains("components"))
    for (const auto& c : body["components"]) {
      os << "  component " << c["vertices"].dump() << ": ";
      os << (c.contains("verdict") ? c["verdict"]["classification"] : c["classification"]).get<std::string>() << "\n";
    }
  if (body.contains("min_primes"))
    os << "Min [" << body["min_primes"].size() << "]: " << primes_text(body["min_primes"]) << "\n";
  if (body.contains("candidate_ass"))
    os << "candidates [" << body["candidate_ass"].size() << "]: " << primes_text(body["candidate_ass"]) << "\n";
  if (body.contains("ass"))
    for (const auto& [k, primes] : body["ass"].items())
      os << "Ass(I^" << k << ") [" << primes.size() << "]: " << primes_text(primes) << "\n";
  if (body.contains("oracle_verdict")) {
    const auto& ov = body["oracle_verdict"];
    os << "oracle: " << ov["classification"].get<std::string>() << " over " << ov["scope"].get<std::string>();
    if (ov.contains("k_index")) os << " k=" << ov["k_index"];
    os << "\n";
  }
  if (body.contains("rees_generated")) os << "rees generated: " << (body["rees_generated"].get<bool>() ? "yes" : "no") << "\n";
  if (body.contains("checks"))
    for (const auto& c : body["checks"]) {
      os << "  " << c["status"].get<std::string>() << "  " << c["name"].get<std::string>();
      if (c.contains("power")) os << " m=" << c["power"];
      os << "  " << c["detail"].get<std::string>() << "\n";
    }
  if (budget_exhausted) os << "budget exhausted: results are partial\n";
  if (body.contains("timing_ms")) os << "time: " << body["timing_ms"].get<double>() << " ms\n";
  return os.str();
}

}  // namespace antf
