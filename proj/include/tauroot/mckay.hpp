#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tauroot/io.hpp"
#include "tauroot/quiver.hpp"

namespace tauroot {

/// G = <1/n(a_0, ..., a_d)> inside SL_{d+1}; d = weights.size() - 1.
struct CyclicWeights {
  int n = 1;
  std::vector<int> weights;

  int dimension() const noexcept { return static_cast<int>(weights.size()) - 1; }
  bool is_sl() const noexcept;
  int residue(long long x) const noexcept { return static_cast<int>(((x % n) + n) % n); }
};

/// Throws InvalidArgument for n < 1, no weights, or a weight outside [0, n).
void validate_weights(const CyclicWeights& w);

/// Vertices of the quotient Gamma/(e); kept sorted and free of repeats.
struct CutSet {
  std::vector<int> kept;
};

/// Sorts, and rejects repeats or residues outside [0, n) (InvalidArgument).
CutSet normalize_cut(const CyclicWeights& w, CutSet cut);

/// Middle terms of the AR (d+2)-angle at `source`. terms[0] is the size-d
/// term, terms[d-1] the size-1 term; entries with multiplicity 0 are absent.
struct ARAngle {
  int source = 0;
  std::vector<std::map<int, std::uint64_t>> terms;

  int term_size(std::size_t idx) const noexcept { return static_cast<int>(terms.size() - idx); }
};

/// Vertices "0".."n-1"; per vertex j and weight index i one arrow
/// j -> j + a_i with color i. Throws NotSL.
ColoredQuiver mckay_quiver(const CyclicWeights& w);

/// No monochromatic cycle and no composable pair of differently colored
/// arrows inside the full subquiver on the kept vertices.
bool is_hereditary_quotient(const ColoredQuiver& q, const CutSet& cut);

/// The quotient Gamma/(e) as an uncolored quiver on the kept vertices.
ColoredQuiver quotient_quiver(const ColoredQuiver& q, const CutSet& cut);

/// Number of k-element index sets whose weights sum to s mod n.
std::uint64_t subset_sum_count(const CyclicWeights& w, int k, long long s);

/// Computed by explicit subset enumeration, independently of
/// subset_sum_count. Throws VertexNotKept, NotSL.
ARAngle ar_angle(const CyclicWeights& w, const CutSet& cut, int j);

/// Vertices "(j,0)" and "(j,-1)" (level 0 and 1) for j kept. Both levels carry
/// the quotient quiver; (j,0) -> (l,-1) has multiplicity
/// subset_sum_count(w, 2, l - j). Throws WrongDimension, NotSL, NotHereditary.
ColoredQuiver h_quiver_d3(const CyclicWeights& w, const CutSet& cut);

/// Vertices "(j,-i)" for i = 0, 1, 2. With m_jl = subset_sum_count(w, 2, l - j):
/// (j,0) -> (l,-1) and (j,-1) -> (l,-2) carry m_jl, (j,0) -> (l,-2) carries m_lj.
/// Throws WrongDimension, NotSL, NotSemisimple.
ColoredQuiver h_quiver_d4(const CyclicWeights& w, const CutSet& cut);

/// "(<j>,-<i>)" with level i.
std::string shifted_name(const std::string& base, int copy);

Json weights_to_json(const CyclicWeights& w);
CyclicWeights weights_from_json(const Json& j);
Json cut_to_json(const CutSet& c);
CutSet cut_from_json(const Json& j);
/// {"source":j,"terms":[{"size":k,"mult":{"<l>":m}}]}
Json ar_angle_to_json(const ARAngle& a);

}  // namespace tauroot
