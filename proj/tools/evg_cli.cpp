#include <atomic>
#include <fstream>
#include <functional>
#include <numeric>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "evg/catalog.hpp"
#include "evg/errors.hpp"
#include "evg/evolving.hpp"
#include "evg/report.hpp"
#include "evg/tate.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParseError = 1;
constexpr int kExitCapExceeded = 2;

evg::FiniteGroup load_group(const std::string& input, int closure_cap) {
  if (input.rfind("catalog:", 0) == 0) return evg::catalog_group(input.substr(8));
  std::ifstream in(input);
  if (!in) throw evg::ParseError(0, "cannot open " + input);
  std::stringstream buf;
  buf << in.rdbuf();
  auto gens = evg::parse_group_spec(buf.str());
  if (gens.empty()) throw evg::ParseError(0, "no permutations in " + input);
  return evg::FiniteGroup::closure(gens, closure_cap);
}

int run_analyze(const std::string& input, bool json_out, const evg::AnalysisCaps& caps) {
  std::string name = input;
  if (input.rfind("catalog:", 0) == 0) name = input.substr(8);
  evg::FiniteGroup G = load_group(input, caps.closure_cap);
  ordered_json report = evg::analyze_group(name, G, caps);
  if (json_out)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << evg::render_text_report(report);
  return kExitOk;
}

struct EntryResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs `check` over every catalog entry of order <= max_order, distributing
// entries across jobs; output order is deterministic.
int run_corpus(const std::string& label, int max_order, int jobs,
               const std::function<EntryResult(const evg::CatalogEntry&,
                                               const evg::FiniteGroup&)>& check) {
  std::vector<const evg::CatalogEntry*> selected;
  for (const auto& e : evg::catalog_manifest()) selected.push_back(&e);
  std::vector<EntryResult> results(selected.size());
  std::vector<char> skipped(selected.size(), 0);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1)) {
      try {
        evg::FiniteGroup G = evg::build_catalog_entry(*selected[i]);
        if (G.order() > max_order) {
          skipped[i] = 1;
          continue;
        }
        results[i] = check(*selected[i], G);
      } catch (const std::exception& ex) {
        results[i] = EntryResult{selected[i]->name, false, ex.what()};
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int failures = 0, ran = 0;
  for (size_t i = 0; i < selected.size(); ++i) {
    if (skipped[i]) continue;
    ++ran;
    const EntryResult& r = results[i];
    if (r.pass) {
      std::cout << "PASS " << r.name;
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << r.name << "  " << r.detail << "\n";
    }
  }
  std::cout << label << ": " << (ran - failures) << "/" << ran << " passed\n";
  return failures ? 1 : kExitOk;
}

int run_verify(const std::string& theorem, int max_order, int jobs) {
  using evg::CatalogEntry;
  using evg::FiniteGroup;

  if (theorem == "B") {
    return run_corpus("evolving == prime-intense", max_order, jobs,
                      [](const CatalogEntry& e, const FiniteGroup& G) {
                        auto subs = evg::all_subgroups(G);
                        bool ev = evg::is_evolving(G, &subs).evolving;
                        bool pi = evg::is_prime_intense(G, &subs).prime_intense;
                        return EntryResult{e.name, ev == pi,
                                           ev == pi ? (ev ? "evolving" : "not evolving")
                                                    : "evolving/prime-intense disagree"};
                      });
  }
  if (theorem == "A") {
    return run_corpus("cohomology criterion (degree 0)", max_order, jobs,
                      [](const CatalogEntry& e, const FiniteGroup& G) {
                        auto subs = evg::all_subgroups(G);
                        bool ev = evg::is_evolving(G, &subs).evolving;
                        bool tate = evg::evolving_via_tate(G, &subs);
                        return EntryResult{e.name, ev == tate,
                                           ev == tate ? "" : "tate criterion disagrees"};
                      });
  }
  if (theorem == "D") {
    return run_corpus("evolving implies supersolvable", max_order, jobs,
                      [](const CatalogEntry& e, const FiniteGroup& G) {
                        auto subs = evg::all_subgroups(G);
                        bool ev = evg::is_evolving(G, &subs).evolving;
                        bool ss = evg::is_supersolvable(G, &subs);
                        bool ok = !ev || ss;
                        if (e.expected_supersolvable && ss != *e.expected_supersolvable)
                          ok = false;
                        return EntryResult{e.name, ok, ok ? "" : "supersolvability mismatch"};
                      });
  }
  if (theorem == "lemma22") {
    return run_corpus(
        "normal subgroups and quotients stay evolving", max_order, jobs,
        [](const CatalogEntry& e, const FiniteGroup& G) {
          auto subs = evg::all_subgroups(G);
          if (!evg::is_evolving(G, &subs).evolving)
            return EntryResult{e.name, true, "not evolving, vacuous"};
          for (const auto& N : evg::normal_subgroups(G, &subs)) {
            auto sub = evg::subgroup_as_group(G, N);
            if (!evg::is_evolving(sub.group).evolving)
              return EntryResult{e.name, false, "normal subgroup not evolving"};
            auto Q = evg::quotient(G, N);
            if (!evg::is_evolving(Q.group).evolving)
              return EntryResult{e.name, false, "quotient not evolving"};
          }
          return EntryResult{e.name, true, ""};
        });
  }
  if (theorem == "C") {
    return run_corpus(
        "coprime semidirect construction", max_order, jobs,
        [](const CatalogEntry& e, const FiniteGroup& G) {
          auto subs = evg::all_subgroups(G);
          if (!evg::is_evolving(G, &subs).evolving)
            return EntryResult{e.name, true, "not evolving, vacuous"};
          auto d = evg::decompose(G, &subs);
          // N = target x isolated must be nilpotent, T = source nilpotent,
          // coprime, and T's conjugation action intense on N
          auto N = evg::generated_subgroup(G, {d.target, d.isolated});
          auto nal = evg::subgroup_as_group(G, N);
          auto tal = evg::subgroup_as_group(G, d.source);
          if (std::gcd(nal.group.order(), tal.group.order()) != 1)
            return EntryResult{e.name, false, "factors not coprime"};
          if (!evg::is_nilpotent(nal.group) || !evg::is_nilpotent(tal.group))
            return EntryResult{e.name, false, "factor not nilpotent"};
          auto nsubs = evg::all_subgroups(nal.group);
          for (int t : d.source.members) {
            std::vector<int> map(nal.group.order());
            for (int a = 0; a < nal.group.order(); ++a) {
              int img = nal.from_parent[G.conjugate(nal.to_parent[a], t)];
              if (img < 0) return EntryResult{e.name, false, "T does not normalize N"};
              map[a] = img;
            }
            if (!evg::is_intense(evg::GroupAutomorphism(nal.group, std::move(map)), &nsubs))
              return EntryResult{e.name, false, "action not intense"};
          }
          return EntryResult{e.name, true, "decomposed"};
        });
  }
  if (theorem == "prop61") {
    return run_corpus(
        "no consecutive edges / structure", max_order, jobs,
        [](const CatalogEntry& e, const FiniteGroup& G) {
          auto subs = evg::all_subgroups(G);
          if (!evg::is_evolving(G, &subs).evolving)
            return EntryResult{e.name, true, "not evolving, vacuous"};
          auto families = evg::sylow_families(G, &subs);
          auto graph = evg::associated_graph(G, families.front(), &subs);
          for (int v : graph.pi_s)
            for (int w : graph.pi_t)
              if (v == w) return EntryResult{e.name, false, "consecutive edges"};
          if (families.size() > 1) {
            auto graph2 = evg::associated_graph(G, families.back(), &subs);
            if (graph.edges != graph2.edges)
              return EntryResult{e.name, false, "graph depends on family choice"};
          }
          auto d = evg::decompose(G, &subs);
          return EntryResult{e.name, d.verified, d.verified ? "" : "structure unverified"};
        });
  }
  if (theorem == "gamma") {
    return run_corpus(
        "gamma isomorphism", max_order, jobs,
        [](const CatalogEntry& e, const FiniteGroup& G) {
          if (G.order() > evg::kDefaultOracleGroupCap)
            return EntryResult{e.name, true, "above oracle scale, skipped"};
          auto subs = evg::all_subgroups(G);
          int tested = 0;
          for (const auto& K : subs) {
            if (G.order() / K.order() > evg::kDefaultOraclePointCap) continue;
            auto X = evg::coset_gset(G, K);
            std::vector<long long> expect;
            for (int s : X.stabilizer_order)
              if (s > 1) expect.push_back(s);
            auto got = evg::tate_h0_oracle(G, X);
            if (evg::abelian_elementary_divisors(got) !=
                evg::abelian_elementary_divisors(expect))
              return EntryResult{e.name, false, "oracle mismatch"};
            ++tested;
          }
          return EntryResult{e.name, true, std::to_string(tested) + " G-sets"};
        });
  }
  std::cerr << "unknown theorem tag: " << theorem << "\n";
  return 1;
}

int run_catalog_list() {
  ordered_json out = ordered_json::array();
  for (const auto& e : evg::catalog_manifest()) {
    ordered_json j;
    j["name"] = e.name;
    j["constructor"] = e.constructor;
    j["params"] = e.params;
    ordered_json expected = ordered_json::object();
    if (e.expected_evolving) expected["evolving"] = *e.expected_evolving;
    if (e.expected_supersolvable) expected["supersolvable"] = *e.expected_supersolvable;
    j["expected_verdicts"] = expected;
    j["order"] = evg::build_catalog_entry(e).order();
    out.push_back(j);
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group analysis: evolving / prime-intense / Tate criteria"};
  app.require_subcommand(1);

  std::string input;
  bool json_out = false;
  evg::AnalysisCaps caps;
  auto* analyze = app.add_subcommand("analyze", "analyze a group spec file or catalog:NAME");
  analyze->add_option("input", input, "path to group spec, or catalog:NAME")->required();
  analyze->add_flag("--json", json_out, "emit JSON instead of text");
  analyze->add_option("--closure-cap", caps.closure_cap, "max group order for closure");
  analyze->add_option("--subgroup-cap", caps.subgroup_cap, "max order for subgroup enumeration");

  std::string theorem;
  int max_order = 200;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "run a theorem suite over the catalog");
  verify->add_option("theorem", theorem, "one of A, B, C, D, lemma22, prop61, gamma")
      ->required();
  verify->add_option("--max-order", max_order, "largest catalog order to include");
  verify->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "catalog operations");
  auto* list = catalog->add_subcommand("list", "print the catalog manifest");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(input, json_out, caps);
    if (*verify) return run_verify(theorem, max_order, jobs);
    if (*catalog && *list) return run_catalog_list();
    std::cerr << "missing subcommand\n";
    return 1;
  } catch (const evg::ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kExitParseError;
  } catch (const evg::CapExceeded& ex) {
    std::cerr << "cap exceeded: " << ex.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
