#pragma once

#include <optional>
#include <vector>

#include "tauroot/io.hpp"
#include "tauroot/quiver.hpp"
#include "tauroot/ztranslation.hpp"

namespace tauroot {

/// Blocks V_0..V_{l-1}. The bijection V_i -> V_{i+1} is positional:
/// blocks[i][k] maps to blocks[i+1][k].
struct NormalFormPartition {
  std::vector<std::vector<VertexId>> blocks;

  friend bool operator==(const NormalFormPartition&, const NormalFormPartition&) = default;
};

/// Outcome of the three normal-form conditions.
struct NormalFormCheck {
  bool isomorphic_blocks = false;  // (a) blocks are copies of one quiver via the chain
  bool forward_only = false;       // (b) cross arrows only from V_i to V_j with i < j
  bool graph_symmetry = false;     // (c) the block shift is a graph automorphism

  bool ok() const noexcept { return isomorphic_blocks && forward_only && graph_symmetry; }
};

/// Throws BadPartition if p does not split the vertices into l equal blocks.
NormalFormCheck check_root_normal_form_detailed(const ColoredQuiver& qp, int l,
                                                const NormalFormPartition& p);
bool check_root_normal_form(const ColoredQuiver& qp, int l, const NormalFormPartition& p);

/// The block shift, wrapping V_{l-1} back to V_0 one level up:
/// delta = 0 on V_0..V_{l-2}, 1 on V_{l-1}. Throws NormalFormViolated.
TQAutomorphism root_from_normal_form(const ColoredQuiver& qp, int l, const NormalFormPartition& p);

/// Brute-force partition search; only for quivers with at most 10 vertices
/// (InvalidArgument otherwise).
std::optional<NormalFormPartition> find_normal_form_partition(const ColoredQuiver& qp, int l);

/// The section T u FT u ... u F^{l-1}T built from a root, as a quiver on
/// vertices "<base>@<level>", with blocks F^i T.
struct SectionQuiver {
  ColoredQuiver quiver;
  NormalFormPartition partition;
  std::vector<ZQVertex> f_section;
  std::vector<ZQVertex> section;
};
SectionQuiver normal_form_from_root(const ColoredQuiver& q, const TQAutomorphism& f, int l);

/// {"blocks":[["a","b"],["a'","b'"]]}
Json partition_to_json(const NormalFormPartition& p);
NormalFormPartition partition_from_json(const Json& j);

}  // namespace tauroot
