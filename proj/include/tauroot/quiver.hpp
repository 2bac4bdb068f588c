#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tauroot {

using VertexId = std::string;

/// A quiver vertex. `level` and `group` are optional annotations used by the
/// shifted-sum builders (copy index, component group); plain quivers leave
/// them empty.
struct Vertex {
  VertexId id;
  std::optional<int> level;
  std::optional<int> group;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// One arrow record. Parallel arrows are a multiplicity, not repeated records.
struct Arrow {
  VertexId src;
  VertexId dst;
  std::optional<int> color;
  int mult = 1;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

/// Finite multidigraph with optional arrow colors. This is the exchange
/// format shared by every module. Equality ignores the order of vertices and
/// arrow records.
struct ColoredQuiver {
  std::vector<Vertex> vertices;
  std::vector<Arrow> arrows;

  std::size_t vertex_count() const noexcept { return vertices.size(); }
  std::optional<std::size_t> index_of(const VertexId& id) const;
  bool has_vertex(const VertexId& id) const { return index_of(id).has_value(); }
  std::vector<VertexId> ids() const;

  void add_vertex(Vertex v) { vertices.push_back(std::move(v)); }
  void add_vertex(VertexId id) { vertices.push_back(Vertex{std::move(id), {}, {}}); }

  /// Appends an arrow, folding it into an existing record with the same
  /// (src, dst, color). Zero multiplicity is a no-op.
  void add_arrow(const VertexId& src, const VertexId& dst, int mult = 1,
                 std::optional<int> color = std::nullopt);

  /// Total multiplicity of arrows src -> dst over all colors.
  int multiplicity(const VertexId& src, const VertexId& dst) const;

  friend bool operator==(const ColoredQuiver& a, const ColoredQuiver& b);
};

/// Throws tauroot::Error (DanglingArrow, DuplicateVertex,
/// DuplicateArrowRecord, NonPositiveMult) on the first violated invariant.
void validate(const ColoredQuiver& q);

bool is_acyclic(const ColoredQuiver& q);

std::unordered_map<VertexId, std::size_t> index_map(const ColoredQuiver& q);

/// Dense n x n matrix of total arrow multiplicities, colors ignored, indexed
/// by vertex order.
std::vector<std::vector<int>> adjacency_matrix(const ColoredQuiver& q);

/// Full subquiver on `keep`, in the order of q's vertex list.
ColoredQuiver induced_subquiver(const ColoredQuiver& q, const std::vector<VertexId>& keep);

/// Drops colors and merges records that become identical.
ColoredQuiver merge_colors(const ColoredQuiver& q);

/// Undirected multigraph underlying a quiver. Edge (i, j) is stored with
/// i <= j; loops are edges (i, i).
struct UnderlyingGraph {
  std::vector<VertexId> vertices;
  std::map<std::pair<std::size_t, std::size_t>, int> edges;

  int multiplicity(std::size_t i, std::size_t j) const;
  std::vector<std::vector<std::size_t>> neighbours() const;
};

UnderlyingGraph underlying_graph(const ColoredQuiver& q);

/// True iff `perm` preserves the edge multiset of the underlying graph.
/// Throws NotABijection if perm is not a bijection on q's vertices.
bool graph_automorphism_extends(const ColoredQuiver& q,
                                const std::map<VertexId, VertexId>& perm);

}  // namespace tauroot
