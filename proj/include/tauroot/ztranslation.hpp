#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "tauroot/io.hpp"
#include "tauroot/quiver.hpp"

namespace tauroot {

/// Vertex (x, k) of the translation quiver ZQ; `base` indexes the generator's
/// vertex list.
struct ZQVertex {
  std::size_t base = 0;
  int level = 0;

  friend bool operator==(const ZQVertex&, const ZQVertex&) = default;
  friend auto operator<=>(const ZQVertex&, const ZQVertex&) = default;
};

struct ZArrow {
  ZQVertex src;
  ZQVertex dst;
  int mult = 1;
};

// Convention: every arrow x -> y of Q (mult m) gives (x,k) -> (y,k) and
// (y,k) -> (x,k+1), both with mult m. tau lowers the level.
inline ZQVertex tau(ZQVertex v) { return {v.base, v.level - 1}; }
inline ZQVertex tau_inverse(ZQVertex v) { return {v.base, v.level + 1}; }

/// Arrow multiplicity u -> v in the infinite ZQ, from Q's adjacency matrix.
int zq_arrow_mult(const std::vector<std::vector<int>>& adj, ZQVertex u, ZQVertex v);

/// Heads of the arrows leaving v in ZQ, with multiplicities.
std::vector<std::pair<ZQVertex, int>> zq_successors(const std::vector<std::vector<int>>& adj,
                                                    ZQVertex v);

/// Finite slice Q0 x [k_min, k_max] of ZQ with every arrow whose endpoints
/// both lie in the slice.
class ZWindow {
 public:
  const ColoredQuiver& generator() const noexcept { return generator_; }
  int k_min() const noexcept { return k_min_; }
  int k_max() const noexcept { return k_max_; }
  const std::vector<ZQVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<ZArrow>& arrows() const noexcept { return arrows_; }

  bool contains(ZQVertex v) const noexcept {
    return v.base < generator_.vertex_count() && v.level >= k_min_ && v.level <= k_max_;
  }
  /// 0 when there is no such arrow (or an endpoint lies outside).
  int arrow_mult(ZQVertex src, ZQVertex dst) const;

  /// The window as a plain quiver, vertex ids "<base>@<level>".
  ColoredQuiver to_quiver() const;

 private:
  friend ZWindow build_window(const ColoredQuiver& q, int k_min, int k_max);

  ColoredQuiver generator_;
  int k_min_ = 0;
  int k_max_ = 0;
  std::vector<ZQVertex> vertices_;
  std::vector<ZArrow> arrows_;
  std::map<std::pair<ZQVertex, ZQVertex>, int> index_;
};

/// Throws CyclicGenerator for cyclic Q, InvalidArgument for colored arrows,
/// BadRange when k_min > k_max.
ZWindow build_window(const ColoredQuiver& q, int k_min, int k_max);

/// Translation-quiver automorphism F(x, k) = (sigma(x), k + delta(x)), both
/// vectors indexed by the generator's vertex order.
struct TQAutomorphism {
  std::vector<std::size_t> sigma;
  std::vector<int> delta;

  ZQVertex operator()(ZQVertex v) const { return {sigma[v.base], v.level + delta[v.base]}; }
  ZQVertex inverse(ZQVertex v) const;
  /// F^a for any integer a.
  ZQVertex power(ZQVertex v, int a) const;

  friend bool operator==(const TQAutomorphism&, const TQAutomorphism&) = default;
  friend auto operator<=>(const TQAutomorphism&, const TQAutomorphism&) = default;
};

/// The automorphism tau^{-1} (sigma = id, delta = 1).
TQAutomorphism tau_inverse_autom(std::size_t vertex_count);

/// Orbits of a permutation, each starting at its smallest element, ordered by
/// that element.
std::vector<std::vector<std::size_t>> permutation_orbits(const std::vector<std::size_t>& sigma);

/// Checks that F is an automorphism of ZQ: the arrow rule on Q, then a
/// pointwise pass over a window comparing arrow multiplicities under F and
/// F^{-1}. Throws SigmaNotBijective or ArrowNotPreserved.
void validate_autom(const ColoredQuiver& q, const TQAutomorphism& f);
bool is_automorphism(const ColoredQuiver& q, const TQAutomorphism& f);

/// sigma^l = id, all sigma-orbits of length exactly l, delta summing to 1 on
/// each orbit.
bool is_root_algebraic(const TQAutomorphism& f, int l);
/// F^l(x, k) == (x, k+1) for every vertex of the window [-l, l].
bool is_root_pointwise(const TQAutomorphism& f, int l);
/// Both tests above; they must agree (std::logic_error otherwise).
bool is_root_of_tau(const ColoredQuiver& q, const TQAutomorphism& f, int l);

/// Throws MarginTooSmall unless the window extends at least one level past S
/// on both sides.
bool is_section(const ZWindow& w, const std::vector<ZQVertex>& s);

/// Throws NotARoot unless F is an l-th root of tau^{-1}.
bool is_F_section(const ColoredQuiver& q, const TQAutomorphism& f, int l,
                  const std::vector<ZQVertex>& t);

/// One slice-0 vertex per sigma-orbit: the one with the smallest exponent
/// a - l * s_a. Sorted by base. Throws NotARoot.
std::vector<ZQVertex> construct_F_section(const ColoredQuiver& q, const TQAutomorphism& f, int l);

/// T u F T u ... u F^{l-1} T, sorted.
std::vector<ZQVertex> f_orbit_union(const TQAutomorphism& f, int l, const std::vector<ZQVertex>& t);

/// No arrow F^a s -> t with s, t in T and a > 0.
bool no_backward_arrows(const ColoredQuiver& q, const TQAutomorphism& f, int l,
                        const std::vector<ZQVertex>& t);

/// Window [k_min, k_max] covering `levels` plus max(1, max|delta| * l).
std::pair<int, int> auto_window(const std::vector<int>& levels, const TQAutomorphism& f, int l);

// JSON: {"sigma":{"<v>":"<w>"},"delta":{"<v>":int}} and [{"base":..,"level":..}].
Json autom_to_json(const ColoredQuiver& q, const TQAutomorphism& f);
TQAutomorphism autom_from_json(const ColoredQuiver& q, const Json& j);
Json zvertices_to_json(const ColoredQuiver& q, const std::vector<ZQVertex>& vs);
std::vector<ZQVertex> zvertices_from_json(const ColoredQuiver& q, const Json& j);

}  // namespace tauroot
