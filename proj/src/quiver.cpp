#include "tauroot/quiver.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "tauroot/error.hpp"

namespace tauroot {

std::optional<std::size_t> ColoredQuiver::index_of(const VertexId& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return i;
  return std::nullopt;
}

std::vector<VertexId> ColoredQuiver::ids() const {
  std::vector<VertexId> out;
  out.reserve(vertices.size());
  for (const auto& v : vertices) out.push_back(v.id);
  return out;
}

void ColoredQuiver::add_arrow(const VertexId& src, const VertexId& dst, int mult,
                              std::optional<int> color) {
  if (mult == 0) return;
  for (auto& a : arrows) {
    if (a.src == src && a.dst == dst && a.color == color) {
      a.mult += mult;
      return;
    }
  }
  arrows.push_back(Arrow{src, dst, color, mult});
}

int ColoredQuiver::multiplicity(const VertexId& src, const VertexId& dst) const {
  int total = 0;
  for (const auto& a : arrows)
    if (a.src == src && a.dst == dst) total += a.mult;
  return total;
}

bool operator==(const ColoredQuiver& a, const ColoredQuiver& b) {
  if (a.vertices.size() != b.vertices.size() || a.arrows.size() != b.arrows.size())
    return false;
  auto va = a.vertices, vb = b.vertices;
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  if (va != vb) return false;
  auto aa = a.arrows, ab = b.arrows;
  std::sort(aa.begin(), aa.end());
  std::sort(ab.begin(), ab.end());
  return aa == ab;
}

void validate(const ColoredQuiver& q) {
  std::set<VertexId> seen;
  for (const auto& v : q.vertices)
    if (!seen.insert(v.id).second) throw Error(Errc::DuplicateVertex, "vertex '" + v.id + "'");

  std::set<std::tuple<VertexId, VertexId, std::optional<int>>> records;
  for (const auto& a : q.arrows) {
    if (!seen.contains(a.src))
      throw Error(Errc::DanglingArrow, "arrow source '" + a.src + "' is not a vertex");
    if (!seen.contains(a.dst))
      throw Error(Errc::DanglingArrow, "arrow target '" + a.dst + "' is not a vertex");
    if (a.mult < 1)
      throw Error(Errc::NonPositiveMult,
                  "arrow " + a.src + "->" + a.dst + " has mult " + std::to_string(a.mult));
    if (!records.emplace(a.src, a.dst, a.color).second)
      throw Error(Errc::DuplicateArrowRecord, "arrow " + a.src + "->" + a.dst);
  }
}

std::unordered_map<VertexId, std::size_t> index_map(const ColoredQuiver& q) {
  std::unordered_map<VertexId, std::size_t> idx;
  for (std::size_t i = 0; i < q.vertices.size(); ++i) idx.emplace(q.vertices[i].id, i);
  return idx;
}

std::vector<std::vector<int>> adjacency_matrix(const ColoredQuiver& q) {
  const auto idx = index_map(q);
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (const auto& a : q.arrows) m[idx.at(a.src)][idx.at(a.dst)] += a.mult;
  return m;
}

bool is_acyclic(const ColoredQuiver& q) {
  // Kahn's algorithm; a loop keeps its vertex's in-degree positive forever.
  const auto m = adjacency_matrix(q);
  const std::size_t n = m.size();
  std::vector<int> indeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j] > 0) ++indeg[j];
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t j = 0; j < n; ++j)
      if (m[v][j] > 0 && --indeg[j] == 0) ready.push_back(j);
  }
  return removed == n;
}

ColoredQuiver induced_subquiver(const ColoredQuiver& q, const std::vector<VertexId>& keep) {
  const std::set<VertexId> kept(keep.begin(), keep.end());
  ColoredQuiver out;
  for (const auto& v : q.vertices)
    if (kept.contains(v.id)) out.add_vertex(v);
  for (const auto& a : q.arrows)
    if (kept.contains(a.src) && kept.contains(a.dst)) out.arrows.push_back(a);
  return out;
}

ColoredQuiver merge_colors(const ColoredQuiver& q) {
  ColoredQuiver out;
  out.vertices = q.vertices;
  for (const auto& a : q.arrows) out.add_arrow(a.src, a.dst, a.mult);
  return out;
}

int UnderlyingGraph::multiplicity(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  auto it = edges.find({i, j});
  return it == edges.end() ? 0 : it->second;
}

std::vector<std::vector<std::size_t>> UnderlyingGraph::neighbours() const {
  std::vector<std::vector<std::size_t>> nb(vertices.size());
  for (const auto& [e, m] : edges) {
    nb[e.first].push_back(e.second);
    if (e.first != e.second) nb[e.second].push_back(e.first);
  }
  return nb;
}

UnderlyingGraph underlying_graph(const ColoredQuiver& q) {
  UnderlyingGraph g;
  g.vertices = q.ids();
  const auto idx = index_map(q);
  for (const auto& a : q.arrows) {
    std::size_t i = idx.at(a.src), j = idx.at(a.dst);
    if (i > j) std::swap(i, j);
    g.edges[{i, j}] += a.mult;
  }
  return g;
}

bool graph_automorphism_extends(const ColoredQuiver& q,
                                const std::map<VertexId, VertexId>& perm) {
  const auto idx = index_map(q);
  const std::size_t n = q.vertex_count();
  std::vector<std::size_t> p(n, n);
  std::vector<bool> hit(n, false);
  if (perm.size() != n) throw Error(Errc::NotABijection, "permutation size differs from vertex count");
  for (const auto& [from, to] : perm) {
    auto f = idx.find(from), t = idx.find(to);
    if (f == idx.end() || t == idx.end())
      throw Error(Errc::NotABijection, "permutation mentions unknown vertex");
    if (hit[t->second]) throw Error(Errc::NotABijection, "vertex '" + to + "' hit twice");
    hit[t->second] = true;
    p[f->second] = t->second;
  }
  const auto g = underlying_graph(q);
  for (const auto& [e, m] : g.edges)
    if (g.multiplicity(p[e.first], p[e.second]) != m) return false;
  return true;
}

}  // namespace tauroot
