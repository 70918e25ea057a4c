#pragma once

#include <string>

#include "json.hpp"

#include "hx/homology.hpp"
#include "hx/mayer_vietoris.hpp"
#include "hx/persistence.hpp"

namespace hx {

using json = nlohmann::ordered_json;

inline std::string edge_str(const VertexTable& table, const Hyperedge& e) {
  std::string s = "{";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + table.name(e[i]);
  return s + "}";
}

template <class F>
json homology_json(const HomologySummary<F>& s, const VertexTable& table) {
  json reps = json::array();
  for (const auto& chain : s.representative_chains()) {
    json terms = json::array();
    for (const auto& [e, c] : chain.terms) terms.push_back({c.str(), edge_str(table, e)});
    reps.push_back(terms);
  }
  return json{{"index", s.index},
              {"degree", s.degree_label},
              {"betti", s.betti},
              {"representatives", reps}};
}

template <class F>
json les_json(const LESDiagram<F>& d) {
  json nodes = json::array(), maps = json::array();
  for (const auto& n : d.nodes)
    nodes.push_back({{"role", mv_role_name(n.role)}, {"index", n.index}, {"betti", n.betti}});
  for (const auto& m : d.maps) maps.push_back({{"rank", m.rank()}});
  LESVerdict v = verify_les(d);
  return json{{"nodes", nodes}, {"maps", maps}, {"verdicts", {{"exact", v.exact()}}}};
}

template <class F>
json ladder_json(const MVLadder<F>& ladder) {
  json rungs = json::array();
  for (const auto& r : ladder.rungs) rungs.push_back({{"rank", r.rank()}});
  bool exact = verify_les(ladder.top).exact() && verify_les(ladder.bottom).exact();
  return json{{"top", les_json(ladder.top)},
              {"bottom", les_json(ladder.bottom)},
              {"rungs", rungs},
              {"verdicts", {{"exact", exact}, {"commuting", ladder.squares_commute}}}};
}

inline json barcode_json(const Barcode& bc) {
  json bars = json::array();
  for (const auto& b : bc.bars) {
    json bar{{"index", b.index}, {"birth", birth_str(b.birth)}};
    bar["death"] = b.death ? json(birth_str(*b.death)) : json(nullptr);
    bars.push_back(bar);
  }
  return json{{"bars", bars}};
}

inline std::string barcode_tsv(const Barcode& bc) {
  std::string out = "index\tbirth\tdeath\n";
  for (const auto& b : bc.bars) {
    out += std::to_string(b.index) + "\t" + birth_str(b.birth) + "\t" +
           (b.death ? birth_str(*b.death) : "inf") + "\n";
  }
  return out;
}

}  // namespace hx
