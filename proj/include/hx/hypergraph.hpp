#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hx {

struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ambient vertex set with a fixed total order: position in `names` is the
// order used for every sign convention downstream.
class VertexTable {
 public:
  VertexTable() = default;
  explicit VertexTable(std::vector<std::string> names) {
    for (auto& n : names) add(n);
  }

  int add(const std::string& name) {
    auto [it, inserted] = index_.emplace(name, static_cast<int>(names_.size()));
    if (!inserted) throw std::invalid_argument("duplicate vertex label: " + name);
    names_.push_back(name);
    return it->second;
  }

  int find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  int require(const std::string& name) const {
    int i = find(name);
    if (i < 0) throw std::out_of_range("unknown vertex: " + name);
    return i;
  }

  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const VertexTable& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

// Strictly increasing vertex indices; empty vector is the scalar-line marker.
using Hyperedge = std::vector<int>;

inline int edge_dim(const Hyperedge& e) { return static_cast<int>(e.size()) - 1; }

// Canonical order: dimension first, then lexicographic.
struct EdgeOrder {
  bool operator()(const Hyperedge& a, const Hyperedge& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using EdgeSet = std::set<Hyperedge, EdgeOrder>;

inline uint64_t edge_mask(const Hyperedge& e) {
  uint64_t m = 0;
  for (int v : e) m |= uint64_t{1} << v;
  return m;
}

inline Hyperedge edge_from_mask(uint64_t m) {
  Hyperedge e;
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1) e.push_back(v);
  return e;
}

class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(VertexTable ambient, EdgeSet edges = {})
      : ambient_(std::move(ambient)), edges_(std::move(edges)) {
    for (const auto& e : edges_) validate(e);
  }

  const VertexTable& ambient() const { return ambient_; }
  const EdgeSet& edges() const { return edges_; }
  size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Hyperedge& e) const { return edges_.count(e) > 0; }

  void insert(Hyperedge e) {
    std::sort(e.begin(), e.end());
    validate(e);
    edges_.insert(std::move(e));
  }

  int max_dim() const {
    return edges_.empty() ? -1 : edge_dim(*edges_.rbegin());
  }

  std::vector<Hyperedge> edges_of_dim(int n) const {
    std::vector<Hyperedge> out;
    for (const auto& e : edges_)
      if (edge_dim(e) == n) out.push_back(e);
    return out;
  }

  bool operator==(const Hypergraph& o) const {
    return ambient_ == o.ambient_ && edges_ == o.edges_;
  }

 private:
  void validate(const Hyperedge& e) const {
    if (e.empty()) throw std::invalid_argument("empty hyperedge");
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= static_cast<int>(ambient_.size()))
        throw std::out_of_range("vertex index out of range");
      if (i && e[i - 1] >= e[i]) throw std::invalid_argument("hyperedge not strictly increasing");
    }
  }

  VertexTable ambient_;
  EdgeSet edges_;
};

// Full complex on the ambient set: all non-empty subsets.
inline Hypergraph full_complex(const VertexTable& table) {
  if (table.size() > 25) throw std::invalid_argument("ambient too large to enumerate");
  EdgeSet edges;
  for (uint64_t m = 1; m < (uint64_t{1} << table.size()); ++m) edges.insert(edge_from_mask(m));
  return Hypergraph(table, std::move(edges));
}

// Smallest simplicial complex containing H.
inline Hypergraph delta_closure(const Hypergraph& h) {
  EdgeSet out;
  for (const auto& e : h.edges()) {
    uint64_t m = edge_mask(e);
    for (uint64_t s = m; s; s = (s - 1) & m) out.insert(edge_from_mask(s));
  }
  return Hypergraph(h.ambient(), std::move(out));
}

// Largest simplicial complex contained in H.
inline Hypergraph lower_delta(const Hypergraph& h) {
  EdgeSet out;
  for (const auto& e : h.edges()) {
    uint64_t m = edge_mask(e);
    bool ok = true;
    for (uint64_t s = m; s && ok; s = (s - 1) & m)
      if (!h.contains(edge_from_mask(s))) ok = false;
    if (ok) out.insert(e);
  }
  return Hypergraph(h.ambient(), std::move(out));
}

// Smallest independence hypergraph containing H (relative to the ambient set).
inline Hypergraph bar_delta_closure(const Hypergraph& h) {
  uint64_t full = (uint64_t{1} << h.ambient().size()) - 1;
  EdgeSet out;
  for (const auto& e : h.edges()) {
    uint64_t m = edge_mask(e), rest = full & ~m;
    for (uint64_t s = rest;; s = (s - 1) & rest) {
      out.insert(edge_from_mask(m | s));
      if (!s) break;
    }
  }
  return Hypergraph(h.ambient(), std::move(out));
}

// Largest independence hypergraph contained in H.
inline Hypergraph bar_lower_delta(const Hypergraph& h) {
  uint64_t full = (uint64_t{1} << h.ambient().size()) - 1;
  EdgeSet out;
  for (const auto& e : h.edges()) {
    uint64_t m = edge_mask(e), rest = full & ~m;
    bool ok = true;
    for (uint64_t s = rest;; s = (s - 1) & rest) {
      if (!h.contains(edge_from_mask(m | s))) {
        ok = false;
        break;
      }
      if (!s) break;
    }
    if (ok) out.insert(e);
  }
  return Hypergraph(h.ambient(), std::move(out));
}

inline void require_same_ambient(const Hypergraph& a, const Hypergraph& b) {
  if (!(a.ambient() == b.ambient()))
    throw precondition_error("hypergraphs live over different ambient vertex sets");
}

inline Hypergraph intersect(const Hypergraph& a, const Hypergraph& b) {
  require_same_ambient(a, b);
  EdgeSet out;
  for (const auto& e : a.edges())
    if (b.contains(e)) out.insert(e);
  return Hypergraph(a.ambient(), std::move(out));
}

inline Hypergraph unite(const Hypergraph& a, const Hypergraph& b) {
  require_same_ambient(a, b);
  EdgeSet out = a.edges();
  for (const auto& e : b.edges()) out.insert(e);
  return Hypergraph(a.ambient(), std::move(out));
}

// Complement inside the full complex on the same ambient set.
inline Hypergraph complement(const Hypergraph& h) {
  EdgeSet out;
  for (uint64_t m = 1; m < (uint64_t{1} << h.ambient().size()); ++m) {
    Hyperedge e = edge_from_mask(m);
    if (!h.contains(e)) out.insert(std::move(e));
  }
  return Hypergraph(h.ambient(), std::move(out));
}

enum class HypergraphClass { simplicial, independence, both, general };

inline HypergraphClass classify(const Hypergraph& h) {
  bool simp = lower_delta(h) == h;
  bool ind = bar_lower_delta(h) == h;
  if (simp && ind) return HypergraphClass::both;
  if (simp) return HypergraphClass::simplicial;
  if (ind) return HypergraphClass::independence;
  return HypergraphClass::general;
}

inline bool is_simplicial(const Hypergraph& h) {
  auto c = classify(h);
  return c == HypergraphClass::simplicial || c == HypergraphClass::both;
}

inline bool is_independence(const Hypergraph& h) {
  auto c = classify(h);
  return c == HypergraphClass::independence || c == HypergraphClass::both;
}

inline const char* class_name(HypergraphClass c) {
  switch (c) {
    case HypergraphClass::simplicial: return "simplicial";
    case HypergraphClass::independence: return "independence";
    case HypergraphClass::both: return "both";
    default: return "general";
  }
}

// Vertices v with d/dv mapping R_*(H) into itself.
inline std::vector<int> admissible_lower_vertices(const Hypergraph& h) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(h.ambient().size()); ++v) {
    bool ok = true;
    for (const auto& e : h.edges()) {
      if (e.size() < 2 || !std::binary_search(e.begin(), e.end(), v)) continue;
      Hyperedge f;
      for (int u : e)
        if (u != v) f.push_back(u);
      if (!h.contains(f)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(v);
  }
  return out;
}

// Vertices v with dv mapping R_*(H) into itself.
inline std::vector<int> admissible_upper_vertices(const Hypergraph& h) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(h.ambient().size()); ++v) {
    bool ok = true;
    for (const auto& e : h.edges()) {
      if (std::binary_search(e.begin(), e.end(), v)) continue;
      Hyperedge f = e;
      f.insert(std::upper_bound(f.begin(), f.end(), v), v);
      if (!h.contains(f)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(v);
  }
  return out;
}

struct DensityReport {
  std::map<int, boost::multiprecision::cpp_rational> per_dimension;
  boost::multiprecision::cpp_rational overall;
};

inline DensityReport density(const Hypergraph& h) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  size_t nv = h.ambient().size();
  if (nv == 0) throw std::invalid_argument("density needs a non-empty ambient set");
  DensityReport rep;
  std::map<int, size_t> counts;
  for (const auto& e : h.edges()) ++counts[edge_dim(e)];
  for (int n = 0; n < static_cast<int>(nv); ++n) {
    cpp_int binom = 1;
    for (int i = 0; i <= n; ++i) binom = binom * (static_cast<int>(nv) - i) / (i + 1);
    auto it = counts.find(n);
    rep.per_dimension[n] = cpp_rational(it == counts.end() ? 0 : it->second, binom);
  }
  cpp_int total = (cpp_int(1) << nv) - 1;
  rep.overall = cpp_rational(h.size(), total);
  return rep;
}

struct VertexMap {
  VertexTable target;
  std::vector<int> image;  // image[i] = target index of source vertex i

  bool is_bijection(size_t source_size) const {
    if (source_size != target.size() || image.size() != source_size) return false;
    std::vector<bool> seen(target.size(), false);
    for (int t : image) {
      if (t < 0 || t >= static_cast<int>(target.size()) || seen[t]) return false;
      seen[t] = true;
    }
    return true;
  }
};

// Set image of H under a vertex map; collapsed vertices deduplicate.
inline Hypergraph apply_vertex_map(const Hypergraph& h, const VertexMap& phi) {
  if (phi.image.size() != h.ambient().size())
    throw std::invalid_argument("vertex map not total on the ambient set");
  EdgeSet out;
  for (const auto& e : h.edges()) {
    std::set<int> img;
    for (int v : e) {
      int t = phi.image[v];
      if (t < 0 || t >= static_cast<int>(phi.target.size()))
        throw std::out_of_range("vertex map leaves the target table");
      img.insert(t);
    }
    out.insert(Hyperedge(img.begin(), img.end()));
  }
  return Hypergraph(phi.target, std::move(out));
}

}  // namespace hx
