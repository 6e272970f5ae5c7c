// koszul: closedness, pair verdicts, Gröbner bases, colon ideals, linear
// quotients and bar-complex Betti numbers from the command line.
//
// Exit codes: 0 success (any verdict), 1 failed fixture or inconsistent
// cross-check, 2 parse/config error, 3 resource cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "koszul/bar.hpp"
#include "koszul/errors.hpp"
#include "koszul/fixtures.hpp"
#include "koszul/graph.hpp"
#include "koszul/graph_io.hpp"
#include "koszul/koszul.hpp"
#include "koszul/pair_ideal.hpp"

using namespace koszul;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCap = 3;

struct RunConfig {
  std::uint32_t p = PrimeField::kDefaultPrime;
  std::size_t cap_gb = GbLimits{}.max_elements;
  std::size_t cap_bar = BarLimits{}.max_dimension;
  std::size_t cap_labelings = CheckConfig{}.labeling_cap;
  std::string format = "text";

  bool text() const { return format == "text"; }
  GbLimits gb() const {
    GbLimits l;
    l.max_elements = cap_gb;
    return l;
  }
  BarLimits bar() const {
    BarLimits l;
    l.max_dimension = cap_bar;
    return l;
  }
  CheckConfig check() const {
    CheckConfig c;
    c.prime = p;
    c.gb = gb();
    c.labeling_cap = cap_labelings;
    return c;
  }
};

/// Config problems found after CLI11 parsing.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_prime(const RunConfig& rc, const std::string& what) {
  if (rc.p == 0) throw ConfigError(what + " needs a prime field; --p 0 (rationals) is not supported here");
}

std::string set_string(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? ", " : "") + std::to_string(vs[k]);
  return s + "}";
}

std::string obstruction_phrase(const ClosednessCertificate& c) {
  const auto kind = certificate_kind(c);
  const auto w = witness_vertices(c);
  if (kind == "induced-cycle") return "induced " + std::to_string(w.size()) + "-cycle on " + set_string(w);
  return "induced " + kind + " on " + set_string(w);
}

std::string facets_string(const IntervalFacetList& fs) {
  std::string s;
  for (std::size_t k = 0; k < fs.size(); ++k)
    s += (k ? " " : "") + std::string("[") + std::to_string(fs[k].lo) + "," + std::to_string(fs[k].hi) + "]";
  return s;
}

// ---- check-graph / label ----

int cmd_check_graph(const RunConfig& rc, const std::string& path) {
  const Graph g = read_graph_file(path);
  const auto cert = is_closed(g);
  if (!rc.text()) {
    std::cout << json::parse(certificate_to_json(cert)).dump(2) << "\n";
    return kExitOk;
  }
  if (const auto* cl = std::get_if<ClosedLabeling>(&cert)) {
    std::cout << "CLOSED\n";
    std::cout << "labeling: " << json(cl->labeling.perm()).dump() << "\n";
    std::cout << "facets: " << facets_string(cl->facets) << "\n";
  } else {
    std::cout << "NOT CLOSED: " << obstruction_phrase(cert) << "\n";
  }
  return kExitOk;
}

int cmd_label(const RunConfig& rc, const std::string& path) {
  const Graph g = read_graph_file(path);
  const auto cert = is_closed(g);
  const auto* cl = std::get_if<ClosedLabeling>(&cert);
  if (!rc.text()) {
    json j;
    j["closed"] = cl != nullptr;
    if (cl) {
      j["labeling"] = cl->labeling.perm();
      j["graph"] = json::parse(graph_to_json(relabel(g, cl->labeling)));
    } else {
      j["obstruction"] = json::parse(certificate_to_json(cert));
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  if (!cl) {
    std::cout << "NOT CLOSED: " << obstruction_phrase(cert) << "\n";
    return kExitOk;
  }
  std::cout << "# labeling " << json(cl->labeling.perm()).dump() << "\n";
  std::cout << graph_to_edge_list(relabel(g, cl->labeling));
  return kExitOk;
}

// ---- check-pair ----

int cmd_check_pair(const RunConfig& rc, const std::string& f1, const std::string& f2, bool cross) {
  const Graph g1 = read_graph_file(f1), g2 = read_graph_file(f2);
  const auto v = decide_pair(g1, g2);
  if (!cross) {
    std::cout << (rc.text() ? verdict_to_text(v) : verdict_to_json(v)) << "\n";
    return kExitOk;
  }
  require_prime(rc, "--cross-check");
  const auto report = cross_check(g1, g2, v, rc.check());
  std::cout << (rc.text() ? verdict_to_text(v, &report) : verdict_to_json(v, &report)) << "\n";
  return report.consistent ? kExitOk : kExitFailure;
}

// ---- gb / colon / quotients, over GF(p) or Q ----

TermOrder pick_order(const std::string& name, int m, int n) {
  return name == "lex" ? order_iii(m, n) : order_iv(m, n);
}

template <class F>
json poly_list(const PolyRing<F>& R, const std::vector<Polynomial<F>>& ps, const TermOrder& o) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(R.format(p, &o));
  return a;
}

template <class F>
int run_gb(const RunConfig& rc, const F& field, const Graph& g1, const Graph& g2, const std::string& order_name) {
  const int m = g1.vertex_count(), n = g2.vertex_count();
  const auto R = grid_ring(field, m, n);
  const auto o = pick_order(order_name, m, n);
  const auto gb = buchberger_reduced(R, pair_ideal_generators(g1, g2, R), o, rc.gb());
  const bool quadratic = gb.max_degree() <= 2;
  if (rc.text()) {
    std::cout << "order: " << order_name << "\n";
    std::cout << "elements: " << gb.elements.size() << "\n";
    std::cout << "quadratic: " << (quadratic ? "true" : "false") << "\n";
    std::cout << "max degree: " << gb.max_degree() << "\n";
    for (const auto& p : gb.elements) std::cout << R.format(p, &o) << "\n";
  } else {
    json j;
    j["order"] = order_name;
    j["field"] = rc.p;
    j["quadratic"] = quadratic;
    j["max_degree"] = gb.max_degree();
    j["gb"] = poly_list(R, gb.elements, o);
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

std::vector<std::string> read_poly_lines(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(f, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    while (!line.empty() && (line.back() == ',' || std::isspace(static_cast<unsigned char>(line.back()))))
      line.pop_back();
    out.push_back(line);
  }
  return out;
}

struct ColonInput {
  int m = 0, n = 0;
  std::vector<std::string> ideal;  // empty: the pair ideal of the two graphs
  Graph g1, g2;
};

template <class F>
int run_colon(const RunConfig& rc, const F& field, const ColonInput& in, const std::string& by,
              const std::string& order_name) {
  const auto R = grid_ring(field, in.m, in.n);
  const auto o = pick_order(order_name, in.m, in.n);
  std::vector<Polynomial<F>> gens;
  if (in.ideal.empty()) {
    gens = pair_ideal_generators(in.g1, in.g2, R);
  } else {
    for (const auto& s : in.ideal) gens.push_back(R.parse(s));
  }
  const auto f = R.parse(by);
  if (f.is_zero()) throw ConfigError("--by must be nonzero");
  const auto colon = colon_by(R, gens, f, o, rc.gb());
  const auto base = buchberger_reduced(R, gens, o, rc.gb());
  const bool grew = buchberger_reduced(R, colon, o, rc.gb()).elements != base.elements;
  if (rc.text()) {
    std::cout << "colon by: " << R.format(f, &o) << "\n";
    std::cout << "order: " << order_name << "\n";
    std::cout << "equals ideal: " << (grew ? "no" : "yes") << "\n";
    for (const auto& p : colon) std::cout << R.format(p, &o) << "\n";
  } else {
    json j;
    j["by"] = R.format(f, &o);
    j["order"] = order_name;
    j["field"] = rc.p;
    j["equals_ideal"] = !grew;
    j["gb"] = poly_list(R, colon, o);
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

template <class F>
int run_quotients(const RunConfig& rc, const F& field, const Graph& g1, const Graph& g2, bool all_steps) {
  const int m = g1.vertex_count(), n = g2.vertex_count();
  const auto R = grid_ring(field, m, n);
  const auto o = order_iv(m, n);
  const auto rep = linear_quotients_check(g1, g2, R, !all_steps, rc.gb());
  auto var = [](const auto& s) { return "x[" + std::to_string(s.row) + "," + std::to_string(s.col) + "]"; };
  if (rc.text()) {
    std::cout << "linear quotients: " << (rep.ok() ? "yes" : "no") << "\n";
    for (const auto& s : rep.steps) {
      std::cout << var(s) << ": " << (s.linear ? "linear" : "NOT linear") << ", " << s.linear_part.size()
                << " linear generators, max degree " << s.max_gb_degree;
      if (s.witness) std::cout << ", witness " << R.format(*s.witness, &o);
      std::cout << "\n";
    }
  } else {
    json j;
    j["linear_quotients"] = rep.ok();
    j["field"] = rc.p;
    json steps = json::array();
    for (const auto& s : rep.steps) {
      json e;
      e["variable"] = var(s);
      e["linear"] = s.linear;
      e["max_degree"] = s.max_gb_degree;
      e["linear_part"] = poly_list(R, s.linear_part, o);
      e["witness"] = s.witness ? json(R.format(*s.witness, &o)) : json(nullptr);
      steps.push_back(e);
    }
    j["steps"] = steps;
    if (rep.first_failure) j["first_failure"] = var(rep.steps[*rep.first_failure]);
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

template <class Fn>
int with_field(const RunConfig& rc, Fn&& fn) {
  if (rc.p == 0) return fn(RationalField());
  return fn(PrimeField(rc.p));
}

// ---- betti ----

struct BettiRequest {
  int i = -1, j = -1;
  std::vector<int> table;  // {i_max, j_max}
  std::vector<int> probe;  // {i_max, j_max}
};

int cmd_betti(const RunConfig& rc, const std::string& f1, const std::string& f2, const BettiRequest& req) {
  require_prime(rc, "betti");
  const int modes = (req.i >= 0 || req.j >= 0) + !req.table.empty() + !req.probe.empty();
  if (modes != 1) throw ConfigError("give exactly one of --i/--j, --table or --probe");
  if ((req.i >= 0) != (req.j >= 0)) throw ConfigError("--i and --j go together");
  const Graph g1 = read_graph_file(f1), g2 = read_graph_file(f2);
  auto bar = pair_bar_complex(g1, g2, rc.p, rc.bar(), rc.gb());

  if (req.i >= 0) {
    const auto b = bar.betti(req.i, req.j);
    if (rc.text()) {
      std::cout << b << "\n";
    } else {
      json j;
      j["i"] = req.i;
      j["j"] = req.j;
      j["betti"] = b;
      j["dd_checked"] = bar.dd_checked();
      j["dd_failures"] = bar.dd_failures();
      std::cout << j.dump(2) << "\n";
    }
    return bar.dd_failures() == 0 ? kExitOk : kExitFailure;
  }

  if (!req.table.empty()) {
    BettiTable t;
    std::string cap;
    // Dimensions grow with j, so a cap ends the row but not the table.
    for (int i = 0; i <= req.table[0]; ++i)
      for (int j = i; j <= req.table[1]; ++j) {
        try {
          t.values[{i, j}] = bar.betti(i, j);
        } catch (const CapExceeded& e) {
          if (cap.empty()) cap = e.what();
          break;
        }
      }
    if (rc.text()) {
      std::cout << t.to_text();
      if (!cap.empty()) std::cout << "stopped: " << cap << "\n";
    } else {
      json j;
      j["table"] = json::parse(t.to_json());
      j["stopped_by_cap"] = cap.empty() ? json(nullptr) : json(cap);
      std::cout << j.dump(2) << "\n";
    }
    if (bar.dd_failures() != 0) return kExitFailure;
    return cap.empty() ? kExitOk : kExitCap;
  }

  const auto r = koszul_probe(bar, req.probe[0], req.probe[1]);
  if (rc.text()) {
    if (r.nonzero)
      std::cout << "nonzero off-diagonal beta at (" << r.nonzero->first << "," << r.nonzero->second << ")\n";
    else
      std::cout << "no off-diagonal beta up to (" << req.probe[0] << "," << req.probe[1] << ")\n";
    std::cout << "scanned " << r.scanned.size() << " bidegrees\n";
    if (r.stopped_by_cap) std::cout << "stopped: " << *r.stopped_by_cap << "\n";
  } else {
    json j;
    j["nonzero"] = r.nonzero ? json({r.nonzero->first, r.nonzero->second}) : json(nullptr);
    json sc = json::array();
    for (auto [a, b] : r.scanned) sc.push_back({a, b});
    j["scanned"] = sc;
    j["stopped_by_cap"] = r.stopped_by_cap ? json(*r.stopped_by_cap) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  }
  if (bar.dd_failures() != 0) return kExitFailure;
  return r.stopped_by_cap && !r.nonzero ? kExitCap : kExitOk;
}

// ---- verify-paper ----

int cmd_verify(const RunConfig& rc, bool stretch) {
  require_prime(rc, "verify-paper");
  FixtureConfig cfg;
  cfg.prime = rc.p;
  cfg.gb = rc.gb();
  cfg.bar = rc.bar();
  cfg.stretch = stretch;
  const auto report = verify_fixture_suite(cfg);
  std::cout << (rc.text() ? report.to_text() : report.to_json() + "\n");
  if (report.any(FixtureStatus::Fail)) return kExitFailure;
  if (report.any(FixtureStatus::Skipped)) return kExitCap;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul pairs of graphs: closedness, verdicts, Gröbner bases and Betti numbers"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig rc;
  app.add_option("--p", rc.p, "field characteristic (prime, or 0 for the rationals)")
      ->envname("KOSZUL_FIELD_P");
  app.add_option("--cap-gb", rc.cap_gb, "max Gröbner basis elements")
      ->envname("KOSZUL_CAP_GB")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-bar", rc.cap_bar, "max dimension of one bar space")
      ->envname("KOSZUL_CAP_BAR")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-labelings", rc.cap_labelings, "max labeling pairs in the exhaustive lex check")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", rc.format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string file1, file2;
  std::function<int()> action;

  auto* check_graph = app.add_subcommand("check-graph", "closedness with a certificate");
  check_graph->add_option("file", file1)->required();
  check_graph->callback([&] { action = [&] { return cmd_check_graph(rc, file1); }; });

  auto* label = app.add_subcommand("label", "print the graph under a closed labeling");
  label->add_option("file", file1)->required();
  label->callback([&] { action = [&] { return cmd_label(rc, file1); }; });

  bool cross = false;
  auto* check_pair = app.add_subcommand("check-pair", "Koszul verdict for a graph pair");
  check_pair->add_option("file1", file1)->required();
  check_pair->add_option("file2", file2)->required();
  check_pair->add_flag("--cross-check", cross, "confirm through Gröbner bases and linear quotients");
  check_pair->callback([&] { action = [&] { return cmd_check_pair(rc, file1, file2, cross); }; });

  std::string order_name = "lex";
  auto* gb = app.add_subcommand("gb", "reduced Gröbner basis of the pair ideal");
  gb->add_option("file1", file1)->required();
  gb->add_option("file2", file2)->required();
  gb->add_option("--order", order_name)->check(CLI::IsMember({"lex", "revlex"}));
  gb->callback([&] {
    action = [&] {
      const Graph g1 = read_graph_file(file1), g2 = read_graph_file(file2);
      return with_field(rc, [&](const auto& f) { return run_gb(rc, f, g1, g2, order_name); });
    };
  });

  std::string by, ideal_file;
  std::vector<int> grid;
  auto* colon = app.add_subcommand("colon", "colon ideal (I : f) in the grid ring");
  colon->add_option("file1", file1);
  colon->add_option("file2", file2);
  colon->add_option("--by", by, "the polynomial f")->required();
  colon->add_option("--ideal", ideal_file, "generators, one per line, instead of a graph pair");
  colon->add_option("--grid", grid, "rows and columns of the variable grid (with --ideal)")->expected(2);
  colon->add_option("--order", order_name)->check(CLI::IsMember({"lex", "revlex"}));
  colon->callback([&] {
    action = [&] {
      ColonInput in;
      if (!ideal_file.empty()) {
        if (grid.size() != 2 || grid[0] < 1 || grid[1] < 1) throw ConfigError("--ideal needs --grid M N");
        if (!file1.empty()) throw ConfigError("give either two graph files or --ideal");
        in.m = grid[0];
        in.n = grid[1];
        in.ideal = read_poly_lines(ideal_file);
      } else {
        if (file1.empty() || file2.empty()) throw ConfigError("colon needs two graph files or --ideal");
        in.g1 = read_graph_file(file1);
        in.g2 = read_graph_file(file2);
        in.m = in.g1.vertex_count();
        in.n = in.g2.vertex_count();
      }
      return with_field(rc, [&](const auto& f) { return run_colon(rc, f, in, by, order_name); });
    };
  });

  bool all_steps = false;
  auto* quotients = app.add_subcommand("quotients", "linear quotients of the pair ideal");
  quotients->add_option("file1", file1)->required();
  quotients->add_option("file2", file2)->required();
  quotients->add_flag("--all", all_steps, "keep going past the first failing step");
  quotients->callback([&] {
    action = [&] {
      const Graph g1 = read_graph_file(file1), g2 = read_graph_file(file2);
      return with_field(rc, [&](const auto& f) { return run_quotients(rc, f, g1, g2, all_steps); });
    };
  });

  BettiRequest breq;
  auto* betti = app.add_subcommand("betti", "graded Betti numbers of the residue field");
  betti->add_option("file1", file1)->required();
  betti->add_option("file2", file2)->required();
  betti->add_option("--i", breq.i)->check(CLI::NonNegativeNumber);
  betti->add_option("--j", breq.j)->check(CLI::NonNegativeNumber);
  betti->add_option("--table", breq.table, "all bidegrees up to I J")->expected(2);
  betti->add_option("--probe", breq.probe, "first off-diagonal nonzero up to I J")->expected(2);
  betti->callback([&] { action = [&] { return cmd_betti(rc, file1, file2, breq); }; });

  bool stretch = false;
  auto* verify = app.add_subcommand("verify-paper", "run the fixture suite");
  verify->add_flag("--stretch", stretch, "include the higher Betti values");
  verify->callback([&] { action = [&] { return cmd_verify(rc, stretch); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  if (rc.p != 0 && !PrimeField::is_prime(rc.p)) {
    std::cerr << "error: --p " << rc.p << " is not prime\n";
    return kExitConfig;
  }

  try {
    return action();
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
