#include "tauroot/normal_form.hpp"

#include <map>
#include <set>

#include "tauroot/error.hpp"
#include "tauroot/root_search.hpp"

namespace tauroot {

namespace {

struct BlockIndex {
  std::vector<int> block;       // per vertex index
  std::vector<std::size_t> pos;  // position inside its block
};

BlockIndex index_blocks(const ColoredQuiver& qp, int l, const NormalFormPartition& p) {
  if (l < 1 || static_cast<int>(p.blocks.size()) != l)
    throw Error(Errc::BadPartition, "expected " + std::to_string(l) + " blocks, got " +
                                        std::to_string(p.blocks.size()));
  const auto idx = index_map(qp);
  BlockIndex bi{std::vector<int>(qp.vertex_count(), -1), std::vector<std::size_t>(qp.vertex_count(), 0)};
  const std::size_t size = p.blocks.front().size();
  for (int i = 0; i < l; ++i) {
    if (p.blocks[i].size() != size) throw Error(Errc::BadPartition, "blocks differ in size");
    for (std::size_t k = 0; k < size; ++k) {
      auto it = idx.find(p.blocks[i][k]);
      if (it == idx.end()) throw Error(Errc::BadPartition, "unknown vertex '" + p.blocks[i][k] + "'");
      if (bi.block[it->second] >= 0)
        throw Error(Errc::BadPartition, "vertex '" + p.blocks[i][k] + "' appears twice");
      bi.block[it->second] = i;
      bi.pos[it->second] = k;
    }
  }
  for (std::size_t v = 0; v < qp.vertex_count(); ++v)
    if (bi.block[v] < 0) throw Error(Errc::BadPartition, "vertex '" + qp.vertices[v].id + "' in no block");
  return bi;
}

std::map<VertexId, VertexId> block_shift(int l, const NormalFormPartition& p) {
  std::map<VertexId, VertexId> shift;
  for (int i = 0; i < l; ++i)
    for (std::size_t k = 0; k < p.blocks[i].size(); ++k)
      shift[p.blocks[i][k]] = p.blocks[(i + 1) % l][k];
  return shift;
}

}  // namespace

NormalFormCheck check_root_normal_form_detailed(const ColoredQuiver& qp, int l,
                                                const NormalFormPartition& p) {
  validate(qp);
  const auto bi = index_blocks(qp, l, p);
  const auto adj = adjacency_matrix(qp);
  const auto idx = index_map(qp);
  NormalFormCheck out;

  out.isomorphic_blocks = true;
  for (int i = 0; i + 1 < l && out.isomorphic_blocks; ++i) {
    const auto& from = p.blocks[i];
    const auto& to = p.blocks[i + 1];
    for (std::size_t a = 0; a < from.size() && out.isomorphic_blocks; ++a)
      for (std::size_t b = 0; b < from.size(); ++b)
        if (adj[idx.at(from[a])][idx.at(from[b])] != adj[idx.at(to[a])][idx.at(to[b])]) {
          out.isomorphic_blocks = false;
          break;
        }
  }

  out.forward_only = true;
  for (const auto& a : qp.arrows) {
    const int bs = bi.block[idx.at(a.src)], bd = bi.block[idx.at(a.dst)];
    if (bs > bd) out.forward_only = false;
  }

  out.graph_symmetry = graph_automorphism_extends(qp, block_shift(l, p));
  return out;
}

bool check_root_normal_form(const ColoredQuiver& qp, int l, const NormalFormPartition& p) {
  return check_root_normal_form_detailed(qp, l, p).ok();
}

TQAutomorphism root_from_normal_form(const ColoredQuiver& qp, int l, const NormalFormPartition& p) {
  const auto check = check_root_normal_form_detailed(qp, l, p);
  if (!check.ok()) {
    std::string why;
    if (!check.isomorphic_blocks) why += " blocks-not-isomorphic";
    if (!check.forward_only) why += " backward-cross-arrow";
    if (!check.graph_symmetry) why += " shift-not-graph-automorphism";
    throw Error(Errc::NormalFormViolated, "partition fails:" + why);
  }
  const auto idx = index_map(qp);
  const auto bi = index_blocks(qp, l, p);
  TQAutomorphism f;
  for (std::size_t v = 0; v < qp.vertex_count(); ++v) {
    const int b = bi.block[v];
    f.sigma.push_back(idx.at(p.blocks[(b + 1) % l][bi.pos[v]]));
    f.delta.push_back(b == l - 1 ? 1 : 0);
  }
  return f;
}

std::optional<NormalFormPartition> find_normal_form_partition(const ColoredQuiver& qp, int l) {
  validate(qp);
  const std::size_t n = qp.vertex_count();
  if (n > 10) throw Error(Errc::InvalidArgument, "partition search is limited to 10 vertices");
  if (l < 1 || n % static_cast<std::size_t>(l) != 0) return std::nullopt;
  if (n == 0) return NormalFormPartition{std::vector<std::vector<VertexId>>(l)};

  for (const auto& sigma : permutations_with_cycle_length(n, l)) {
    std::map<VertexId, VertexId> perm;
    for (std::size_t x = 0; x < n; ++x) perm[qp.vertices[x].id] = qp.vertices[sigma[x]].id;
    if (!graph_automorphism_extends(qp, perm)) continue;

    const auto orbits = permutation_orbits(sigma);
    std::vector<int> start(orbits.size(), 0);  // which orbit member lands in V_0
    for (;;) {
      NormalFormPartition p{std::vector<std::vector<VertexId>>(l)};
      for (std::size_t o = 0; o < orbits.size(); ++o) {
        std::size_t x = orbits[o][start[o]];
        for (int i = 0; i < l; ++i, x = sigma[x]) p.blocks[i].push_back(qp.vertices[x].id);
      }
      if (check_root_normal_form(qp, l, p)) return p;
      std::size_t k = 0;
      while (k < start.size() && start[k] == l - 1) start[k++] = 0;
      if (k == start.size()) break;
      ++start[k];
    }
  }
  return std::nullopt;
}

SectionQuiver normal_form_from_root(const ColoredQuiver& q, const TQAutomorphism& f, int l) {
  SectionQuiver out;
  out.f_section = construct_F_section(q, f, l);
  out.section = f_orbit_union(f, l, out.f_section);
  const auto adj = adjacency_matrix(q);
  auto name = [&](ZQVertex v) { return q.vertices[v.base].id + "@" + std::to_string(v.level); };

  for (const auto& v : out.section) out.quiver.add_vertex(Vertex{name(v), v.level, {}});
  for (const auto& u : out.section)
    for (const auto& v : out.section)
      out.quiver.add_arrow(name(u), name(v), zq_arrow_mult(adj, u, v));

  out.partition.blocks.assign(l, {});
  for (const auto& t : out.f_section)
    for (int i = 0; i < l; ++i) out.partition.blocks[i].push_back(name(f.power(t, i)));
  return out;
}

Json partition_to_json(const NormalFormPartition& p) {
  Json out = Json::object();
  out["blocks"] = Json::array();
  for (const auto& b : p.blocks) {
    Json jb = Json::array();
    for (const auto& v : b) jb.push_back(v);
    out["blocks"].push_back(std::move(jb));
  }
  return out;
}

NormalFormPartition partition_from_json(const Json& j) {
  using namespace schema;
  NormalFormPartition p;
  const auto& blocks = array_at(field(j, "blocks", "$"), "$.blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string at = "$.blocks[" + std::to_string(i) + "]";
    p.blocks.emplace_back();
    for (std::size_t k = 0; k < array_at(blocks[i], at).size(); ++k)
      p.blocks.back().push_back(string_at(blocks[i][k], at + "[" + std::to_string(k) + "]"));
  }
  return p;
}

}  // namespace tauroot
