#pragma once

#include <string>
#include <vector>

#include "tauroot/quiver.hpp"

namespace tauroot {

enum class DynkinFamily { A, D, E, ExtendedA, ExtendedD, ExtendedE, Other };

/// Type of one connected component of an underlying graph.
struct ComponentType {
  DynkinFamily family = DynkinFamily::Other;
  int rank = 0;  // n of X_n; number of vertices for Other
  std::vector<VertexId> vertices;

  /// "A4", "E6", "extended-A5", "extended-D4", "other".
  std::string label() const;
  bool is_dynkin() const noexcept {
    return family == DynkinFamily::A || family == DynkinFamily::D || family == DynkinFamily::E;
  }
};

/// Connected components as sorted vertex-index lists, ordered by their
/// smallest index.
std::vector<std::vector<std::size_t>> connected_components(const UnderlyingGraph& g);

/// Labels each connected component as ADE, extended ADE, or other. Any
/// multi-edge or loop rules out ADE; the double edge on two vertices is
/// extended A1 and the single loop is extended A0.
std::vector<ComponentType> dynkin_classify(const UnderlyingGraph& g);

/// Fixed orientation of a Dynkin quiver on vertices "1".."n" from a label
/// "An" (n >= 1), "Dn" (n >= 4) or "E6".."E8":
///   A: 1 -> 2 -> ... -> n
///   D: 1 -> ... -> n-2, n-2 -> n-1, n-2 -> n
///   E: 1 -> ... -> n-1, 3 -> n
/// Throws InvalidArgument on any other label.
ColoredQuiver dynkin_quiver(const std::string& label);

}  // namespace tauroot
