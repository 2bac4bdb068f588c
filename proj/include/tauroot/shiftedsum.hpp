#pragma once

#include <map>
#include <optional>

#include "tauroot/io.hpp"
#include "tauroot/quiver.hpp"

namespace tauroot {

/// counts[a][b]: number of summands T_b in the object attached to a.
using SummandCounts = std::map<VertexId, std::map<VertexId, int>>;

struct ARSummandData {
  ColoredQuiver base;  // quiver of End(T); uncolored, acyclic
  SummandCounts A;
  std::optional<SummandCounts> B;

  /// A[a][b], 0 when absent.
  int a_count(const VertexId& a, const VertexId& b) const;
  int b_count(const VertexId& a, const VertexId& b) const;
};

enum class Parity { Odd, Even };

/// Checks the base quiver, that every key names a base vertex and every count
/// is non-negative, then the parity's symmetry: A[a][b] = A[b][a] (odd), or
/// A[b][a] = B[a][b] when B is present (even). Throws SymmetryViolated naming
/// the first bad pair.
void validate_ar_symmetry(const ARSummandData& data, Parity mode);

/// n disjoint groups g = 0..n-1. Group g has levels g and g + n, each a copy
/// of the base, plus (b, g) -> (a, g + n) with multiplicity A[a][b].
/// Vertex "(x,-i)" has level i and group i mod n.
ColoredQuiver build_odd_quiver(const ARSummandData& data, int n);

/// Levels 0..2n, each a copy of the base, with
///   (a, i)  -> (b, i + n)      multiplicity A[b][a]   for 0 <= i  <= n,
///   (a, i') -> (b, i' + n + 1) multiplicity A[a][b]   for 0 <= i' <= n - 1.
/// Throws MissingB without B.
ColoredQuiver build_even_quiver(const ARSummandData& data, int n);

/// Single-vertex base "T" with A = B = {T: {T: m}}, built by the even rule.
ColoredQuiver star_quiver(int n, int m);

/// {"base":<quiver>,"A":{"a":{"b":int}},"B":{...}|null}
Json ar_data_to_json(const ARSummandData& d);
ARSummandData ar_data_from_json(const Json& j);

}  // namespace tauroot
