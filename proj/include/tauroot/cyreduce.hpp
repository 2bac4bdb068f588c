#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tauroot/dynkin.hpp"
#include "tauroot/io.hpp"
#include "tauroot/normal_form.hpp"
#include "tauroot/quiver.hpp"

namespace tauroot {

/// A relation between two vertices, known only by its endpoints. `support`,
/// when present, lists the intermediate vertices its paths pass through.
struct Relation {
  VertexId src;
  VertexId dst;
  std::optional<std::vector<VertexId>> support;
};

struct AlgebraPresentation {
  ColoredQuiver quiver;
  std::vector<Relation> relations;
};

/// Throws on an invalid, colored or cyclic quiver, or on relation endpoints
/// and supports that name unknown vertices.
void validate_presentation(const AlgebraPresentation& p);

/// Copy-1 vertex name: "<id>'".
std::string primed(const VertexId& v);

/// Vertices v (level 0) and v' (level 1) for v outside E; the arrows of
/// Q \ E on both levels; for each relation (a, b) with a, b outside E the
/// arrows a -> b' and b -> a'. Repeated relations add multiplicity.
/// Throws BadRemovedSet.
ColoredQuiver cy_reduce_quiver(const AlgebraPresentation& p, const std::vector<VertexId>& removed);

/// One warning per surviving relation that is not visibly killed by E: its
/// support misses E, or (without support) a path src ~> dst survives in Q \ E.
std::vector<std::string> hereditary_proxy_check(const AlgebraPresentation& p,
                                                const std::vector<VertexId>& removed);

struct ReductionReport {
  ColoredQuiver reduced;
  NormalFormPartition levels;  // {v : v kept}, {v' : v kept}
  bool normal_form = false;
  std::vector<ComponentType> components;
  bool equivalence_applies = false;  // every component non-Dynkin
  bool empty = false;
  std::vector<std::string> warnings;
};

ReductionReport reduction_report(const AlgebraPresentation& p, const std::vector<VertexId>& removed);

/// {"quiver":<quiver>,"relations":[{"src":..,"dst":..,"support":[..]|null}]}
Json presentation_to_json(const AlgebraPresentation& p);
AlgebraPresentation presentation_from_json(const Json& j);
/// {"removed":[..]}
std::vector<VertexId> removed_from_json(const Json& j);
Json report_to_json(const ReductionReport& r);

}  // namespace tauroot
