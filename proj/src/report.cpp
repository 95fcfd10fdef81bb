#include "evg/report.hpp"

#include <sstream>

#include "evg/evolving.hpp"
#include "evg/tate.hpp"

namespace evg {

using nlohmann::ordered_json;

ordered_json analyze_group(const std::string& name, const FiniteGroup& G,
                           const AnalysisCaps& caps) {
  std::vector<Subgroup> subs = all_subgroups(G, caps.subgroup_cap);

  ordered_json report;
  report["schema"] = 1;
  report["name"] = name;
  report["order"] = G.order();

  EvolvingVerdict ev = is_evolving(G, &subs);
  report["evolving"] = ev.evolving;
  if (!ev.evolving) {
    report["witness"] = {{"p", ev.witness->first},
                         {"subgroup", ev.witness->second.members}};
  }

  PrimeIntenseVerdict pi = is_prime_intense(G, &subs);
  report["prime_intense"] = pi.prime_intense;
  if (pi.family) {
    ordered_json fam = ordered_json::object();
    for (size_t i = 0; i < pi.family->primes.size(); ++i)
      fam[std::to_string(pi.family->primes[i])] = pi.family->members[i].members;
    report["sylow_family"] = fam;
  }

  report["supersolvable"] = is_supersolvable(G, &subs);

  if (ev.evolving) {
    StructureDecomposition d = decompose(G, &subs);
    ordered_json graph;
    graph["edges"] = ordered_json::array();
    for (auto& [q, p] : d.graph.edges) graph["edges"].push_back({q, p});
    graph["pi_s"] = d.graph.pi_s;
    graph["pi_t"] = d.graph.pi_t;
    graph["pi_0"] = d.graph.pi_0;
    report["graph"] = graph;
    report["decomposition"] = {{"target", d.target.members},
                               {"source", d.source.members},
                               {"isolated", d.isolated.members}};
  }

  std::vector<TateRecord> records;
  bool via_tate = evolving_via_tate(G, &subs, &records);
  report["evolving_via_tate"] = via_tate;
  ordered_json tate = ordered_json::array();
  for (const TateRecord& r : records) {
    tate.push_back({{"p", r.p},
                    {"alpha", r.alpha},
                    {"class_rep", r.class_rep},
                    {"index_set", r.index_set},
                    {"min", r.min},
                    {"gcd", r.gcd},
                    {"equal", r.equal}});
  }
  report["tate"] = tate;
  return report;
}

std::string render_text_report(const ordered_json& r) {
  std::ostringstream out;
  out << r["name"].get<std::string>() << " (order " << r["order"].get<int>() << ")\n";
  out << "  evolving:        " << (r["evolving"].get<bool>() ? "yes" : "no") << "\n";
  if (r.contains("witness"))
    out << "  witness:         p=" << r["witness"]["p"].get<int>()
        << " subgroup=" << r["witness"]["subgroup"].dump() << "\n";
  out << "  prime-intense:   " << (r["prime_intense"].get<bool>() ? "yes" : "no") << "\n";
  out << "  supersolvable:   " << (r["supersolvable"].get<bool>() ? "yes" : "no") << "\n";
  out << "  tate criterion:  " << (r["evolving_via_tate"].get<bool>() ? "yes" : "no") << "\n";
  if (r.contains("graph")) {
    out << "  graph edges:     " << r["graph"]["edges"].dump() << "\n";
    out << "  pi_s/pi_t/pi_0:  " << r["graph"]["pi_s"].dump() << " "
        << r["graph"]["pi_t"].dump() << " " << r["graph"]["pi_0"].dump() << "\n";
  }
  if (r.contains("decomposition")) {
    auto sz = [](const ordered_json& a) { return a.size(); };
    out << "  decomposition:   (|target|=" << sz(r["decomposition"]["target"])
        << " x| |source|=" << sz(r["decomposition"]["source"])
        << ") x |isolated|=" << sz(r["decomposition"]["isolated"]) << "\n";
  }
  for (const auto& t : r["tate"]) {
    out << "  tate p=" << t["p"].get<int>() << " alpha=" << t["alpha"].get<int>()
        << " min=" << t["min"].get<long long>() << " gcd=" << t["gcd"].get<long long>()
        << " equal=" << (t["equal"].get<bool>() ? "yes" : "no") << "\n";
  }
  return out.str();
}

}  // namespace evg
