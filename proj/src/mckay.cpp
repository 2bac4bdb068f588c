#include "tauroot/mckay.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <set>

#include "tauroot/error.hpp"

namespace tauroot {

bool CyclicWeights::is_sl() const noexcept {
  long long sum = 0;
  for (int a : weights) sum += a;
  return n >= 1 && residue(sum) == 0;
}

void validate_weights(const CyclicWeights& w) {
  if (w.n < 1) throw Error(Errc::InvalidArgument, "modulus n must be positive");
  if (w.weights.empty()) throw Error(Errc::InvalidArgument, "at least one weight is required");
  for (int a : w.weights)
    if (a < 0 || a >= w.n)
      throw Error(Errc::InvalidArgument,
                  "weight " + std::to_string(a) + " outside [0," + std::to_string(w.n) + ")");
}

namespace {

void require_sl(const CyclicWeights& w) {
  validate_weights(w);
  if (!w.is_sl()) {
    long long sum = std::accumulate(w.weights.begin(), w.weights.end(), 0LL);
    throw Error(Errc::NotSL, "weights sum to " + std::to_string(sum) + ", not 0 mod " +
                                 std::to_string(w.n));
  }
}

std::string vid(int j) { return std::to_string(j); }

std::vector<VertexId> kept_ids(const CutSet& cut) {
  std::vector<VertexId> ids;
  for (int j : cut.kept) ids.push_back(vid(j));
  return ids;
}

}  // namespace

CutSet normalize_cut(const CyclicWeights& w, CutSet cut) {
  std::sort(cut.kept.begin(), cut.kept.end());
  if (std::adjacent_find(cut.kept.begin(), cut.kept.end()) != cut.kept.end())
    throw Error(Errc::InvalidArgument, "kept set has a repeated vertex");
  for (int j : cut.kept)
    if (j < 0 || j >= w.n)
      throw Error(Errc::InvalidArgument, "kept vertex " + std::to_string(j) + " outside Z/" +
                                             std::to_string(w.n));
  return cut;
}

ColoredQuiver mckay_quiver(const CyclicWeights& w) {
  require_sl(w);
  ColoredQuiver q;
  for (int j = 0; j < w.n; ++j) q.add_vertex(vid(j));
  for (int j = 0; j < w.n; ++j)
    for (std::size_t i = 0; i < w.weights.size(); ++i)
      q.add_arrow(vid(j), vid(w.residue(j + w.weights[i])), 1, static_cast<int>(i));
  return q;
}

bool is_hereditary_quotient(const ColoredQuiver& q, const CutSet& cut) {
  for (const auto& id : kept_ids(cut))
    if (!q.has_vertex(id)) throw Error(Errc::UnknownVertex, "kept vertex '" + id + "' not in quiver");
  const ColoredQuiver sub = induced_subquiver(q, kept_ids(cut));

  std::set<std::optional<int>> colors;
  for (const auto& a : sub.arrows) colors.insert(a.color);
  for (const auto& c : colors) {
    ColoredQuiver mono{sub.vertices, {}};
    for (const auto& a : sub.arrows)
      if (a.color == c) mono.arrows.push_back(a);
    if (!is_acyclic(mono)) return false;
  }
  for (const auto& a : sub.arrows)
    for (const auto& b : sub.arrows)
      if (a.dst == b.src && a.color != b.color) return false;
  return true;
}

ColoredQuiver quotient_quiver(const ColoredQuiver& q, const CutSet& cut) {
  return merge_colors(induced_subquiver(q, kept_ids(cut)));
}

std::uint64_t subset_sum_count(const CyclicWeights& w, int k, long long s) {
  validate_weights(w);
  const int m = static_cast<int>(w.weights.size());
  if (k < 0 || k > m) return 0;
  // ways[c][r]: c-subsets of the weights seen so far with sum r mod n.
  std::vector<std::vector<std::uint64_t>> ways(k + 1, std::vector<std::uint64_t>(w.n, 0));
  ways[0][0] = 1;
  for (int a : w.weights)
    for (int c = k; c >= 1; --c)
      for (int r = 0; r < w.n; ++r) ways[c][w.residue(r + a)] += ways[c - 1][r];
  return ways[k][w.residue(s)];
}

ARAngle ar_angle(const CyclicWeights& w, const CutSet& cut_in, int j) {
  require_sl(w);
  const CutSet cut = normalize_cut(w, cut_in);
  if (!std::binary_search(cut.kept.begin(), cut.kept.end(), j))
    throw Error(Errc::VertexNotKept, "vertex " + std::to_string(j) + " is not kept");
  const int d = w.dimension();
  const int m = d + 1;
  if (m > 30) throw Error(Errc::InvalidArgument, "too many weights for subset enumeration");

  ARAngle out;
  out.source = j;
  out.terms.assign(d, {});
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const int size = std::popcount(mask);
    if (size > d) continue;
    long long sum = 0;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) sum += w.weights[i];
    const int l = w.residue(j - sum);
    if (std::binary_search(cut.kept.begin(), cut.kept.end(), l)) ++out.terms[d - size][l];
  }
  return out;
}

std::string shifted_name(const std::string& base, int copy) {
  return "(" + base + "," + (copy == 0 ? "0" : "-" + std::to_string(copy)) + ")";
}

namespace {

ColoredQuiver levelled_copies(const ColoredQuiver& quotient, int copies) {
  ColoredQuiver h;
  for (int i = 0; i < copies; ++i)
    for (const auto& v : quotient.vertices) h.add_vertex(Vertex{shifted_name(v.id, i), i, {}});
  for (int i = 0; i < copies; ++i)
    for (const auto& a : quotient.arrows) h.add_arrow(shifted_name(a.src, i), shifted_name(a.dst, i), a.mult);
  return h;
}

int as_mult(std::uint64_t m) {
  if (m > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
    throw Error(Errc::InvalidArgument, "multiplicity overflow");
  return static_cast<int>(m);
}

}  // namespace

ColoredQuiver h_quiver_d3(const CyclicWeights& w, const CutSet& cut_in) {
  if (w.dimension() != 3)
    throw Error(Errc::WrongDimension, "expected d = 3, got " + std::to_string(w.dimension()));
  const ColoredQuiver mq = mckay_quiver(w);
  const CutSet cut = normalize_cut(w, cut_in);
  if (!is_hereditary_quotient(mq, cut)) throw Error(Errc::NotHereditary, "Gamma/(e) is not hereditary");

  ColoredQuiver h = levelled_copies(quotient_quiver(mq, cut), 2);
  for (int j : cut.kept)
    for (int l : cut.kept)
      h.add_arrow(shifted_name(vid(j), 0), shifted_name(vid(l), 1), as_mult(subset_sum_count(w, 2, l - j)));
  return h;
}

ColoredQuiver h_quiver_d4(const CyclicWeights& w, const CutSet& cut_in) {
  if (w.dimension() != 4)
    throw Error(Errc::WrongDimension, "expected d = 4, got " + std::to_string(w.dimension()));
  const ColoredQuiver mq = mckay_quiver(w);
  const CutSet cut = normalize_cut(w, cut_in);
  const ColoredQuiver quotient = quotient_quiver(mq, cut);
  if (!quotient.arrows.empty()) {
    const auto& a = quotient.arrows.front();
    throw Error(Errc::NotSemisimple, "Gamma/(e) has arrow " + a.src + "->" + a.dst);
  }

  ColoredQuiver h = levelled_copies(quotient, 3);
  for (int j : cut.kept)
    for (int l : cut.kept) {
      const int m_jl = as_mult(subset_sum_count(w, 2, l - j));
      const int m_lj = as_mult(subset_sum_count(w, 2, j - l));
      h.add_arrow(shifted_name(vid(j), 0), shifted_name(vid(l), 1), m_jl);
      h.add_arrow(shifted_name(vid(j), 1), shifted_name(vid(l), 2), m_jl);
      h.add_arrow(shifted_name(vid(j), 0), shifted_name(vid(l), 2), m_lj);
    }
  return h;
}

Json weights_to_json(const CyclicWeights& w) {
  Json out = Json::object();
  out["n"] = w.n;
  out["weights"] = w.weights;
  return out;
}

CyclicWeights weights_from_json(const Json& j) {
  using namespace schema;
  object_at(j, "$");
  CyclicWeights w;
  w.n = int_at(field(j, "n", "$"), "$.n");
  const auto& ws = array_at(field(j, "weights", "$"), "$.weights");
  for (std::size_t i = 0; i < ws.size(); ++i)
    w.weights.push_back(int_at(ws[i], "$.weights[" + std::to_string(i) + "]"));
  validate_weights(w);
  return w;
}

Json cut_to_json(const CutSet& c) {
  Json out = Json::object();
  out["kept"] = c.kept;
  return out;
}

CutSet cut_from_json(const Json& j) {
  using namespace schema;
  object_at(j, "$");
  CutSet c;
  const auto& ks = array_at(field(j, "kept", "$"), "$.kept");
  for (std::size_t i = 0; i < ks.size(); ++i)
    c.kept.push_back(int_at(ks[i], "$.kept[" + std::to_string(i) + "]"));
  return c;
}

Json ar_angle_to_json(const ARAngle& a) {
  Json out = Json::object();
  out["source"] = a.source;
  out["terms"] = Json::array();
  for (std::size_t t = 0; t < a.terms.size(); ++t) {
    Json term = Json::object();
    term["size"] = a.term_size(t);
    term["mult"] = Json::object();
    for (const auto& [l, m] : a.terms[t]) term["mult"][std::to_string(l)] = m;
    out["terms"].push_back(std::move(term));
  }
  return out;
}

}  // namespace tauroot
