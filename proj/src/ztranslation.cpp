#include "tauroot/ztranslation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "tauroot/error.hpp"

namespace tauroot {

int zq_arrow_mult(const std::vector<std::vector<int>>& adj, ZQVertex u, ZQVertex v) {
  if (u.base >= adj.size() || v.base >= adj.size()) return 0;
  if (v.level == u.level) return adj[u.base][v.base];
  if (v.level == u.level + 1) return adj[v.base][u.base];
  return 0;
}

std::vector<std::pair<ZQVertex, int>> zq_successors(const std::vector<std::vector<int>>& adj,
                                                    ZQVertex v) {
  std::vector<std::pair<ZQVertex, int>> out;
  for (std::size_t y = 0; y < adj.size(); ++y) {
    if (adj[v.base][y] > 0) out.push_back({{y, v.level}, adj[v.base][y]});
    if (adj[y][v.base] > 0) out.push_back({{y, v.level + 1}, adj[y][v.base]});
  }
  return out;
}

int ZWindow::arrow_mult(ZQVertex src, ZQVertex dst) const {
  auto it = index_.find({src, dst});
  return it == index_.end() ? 0 : it->second;
}

ColoredQuiver ZWindow::to_quiver() const {
  auto name = [&](ZQVertex v) {
    return generator_.vertices[v.base].id + "@" + std::to_string(v.level);
  };
  ColoredQuiver q;
  for (const auto& v : vertices_) q.add_vertex(Vertex{name(v), v.level, {}});
  for (const auto& a : arrows_) q.add_arrow(name(a.src), name(a.dst), a.mult);
  return q;
}

namespace {

void require_generator(const ColoredQuiver& q) {
  validate(q);
  for (const auto& a : q.arrows)
    if (a.color) throw Error(Errc::InvalidArgument, "generator quiver must be uncolored");
  if (!is_acyclic(q)) throw Error(Errc::CyclicGenerator, "generator quiver has a directed cycle");
}

}  // namespace

ZWindow build_window(const ColoredQuiver& q, int k_min, int k_max) {
  require_generator(q);
  if (k_min > k_max)
    throw Error(Errc::BadRange,
                "k_min " + std::to_string(k_min) + " > k_max " + std::to_string(k_max));
  ZWindow w;
  w.generator_ = q;
  w.k_min_ = k_min;
  w.k_max_ = k_max;
  const auto adj = adjacency_matrix(q);
  const std::size_t n = q.vertex_count();
  for (int k = k_min; k <= k_max; ++k)
    for (std::size_t x = 0; x < n; ++x) w.vertices_.push_back({x, k});
  for (int k = k_min; k <= k_max; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const int m = adj[x][y];
        if (m == 0) continue;
        w.arrows_.push_back({{x, k}, {y, k}, m});
        if (k + 1 <= k_max) w.arrows_.push_back({{y, k}, {x, k + 1}, m});
      }
  for (const auto& a : w.arrows_) w.index_[{a.src, a.dst}] += a.mult;
  return w;
}

ZQVertex TQAutomorphism::inverse(ZQVertex v) const {
  for (std::size_t y = 0; y < sigma.size(); ++y)
    if (sigma[y] == v.base) return {y, v.level - delta[y]};
  throw Error(Errc::SigmaNotBijective, "no preimage for vertex index " + std::to_string(v.base));
}

ZQVertex TQAutomorphism::power(ZQVertex v, int a) const {
  for (; a > 0; --a) v = (*this)(v);
  for (; a < 0; ++a) v = inverse(v);
  return v;
}

TQAutomorphism tau_inverse_autom(std::size_t vertex_count) {
  TQAutomorphism f;
  for (std::size_t i = 0; i < vertex_count; ++i) {
    f.sigma.push_back(i);
    f.delta.push_back(1);
  }
  return f;
}

std::vector<std::vector<std::size_t>> permutation_orbits(const std::vector<std::size_t>& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < sigma.size(); ++s) {
    if (seen[s]) continue;
    out.emplace_back();
    for (std::size_t x = s; !seen[x]; x = sigma[x]) {
      seen[x] = true;
      out.back().push_back(x);
    }
  }
  return out;
}

namespace {

void require_bijective(const ColoredQuiver& q, const TQAutomorphism& f) {
  const std::size_t n = q.vertex_count();
  if (f.sigma.size() != n || f.delta.size() != n)
    throw Error(Errc::SigmaNotBijective, "sigma/delta must cover every vertex exactly once");
  std::vector<bool> hit(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (f.sigma[x] >= n || hit[f.sigma[x]])
      throw Error(Errc::SigmaNotBijective, "sigma is not a bijection at '" + q.vertices[x].id + "'");
    hit[f.sigma[x]] = true;
  }
}

std::string zname(const ColoredQuiver& q, ZQVertex v) {
  return "(" + q.vertices[v.base].id + "," + std::to_string(v.level) + ")";
}

}  // namespace

void validate_autom(const ColoredQuiver& q, const TQAutomorphism& f) {
  require_generator(q);
  require_bijective(q, f);
  const auto adj = adjacency_matrix(q);
  const std::size_t n = q.vertex_count();

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int m = adj[x][y];
      if (m == 0) continue;
      const bool same_level = f.delta[y] == f.delta[x] && adj[f.sigma[x]][f.sigma[y]] == m;
      const bool next_level = f.delta[y] == f.delta[x] + 1 && adj[f.sigma[y]][f.sigma[x]] == m;
      if (!same_level && !next_level)
        throw Error(Errc::ArrowNotPreserved,
                    "arrow " + q.vertices[x].id + "->" + q.vertices[y].id + " is not preserved");
    }

  int reach = 1;
  for (int d : f.delta) reach = std::max(reach, std::abs(d));
  const ZWindow w = build_window(q, -2 * reach, 2 * reach);
  for (const auto& a : w.arrows()) {
    const int fwd = zq_arrow_mult(adj, f(a.src), f(a.dst));
    const int back = zq_arrow_mult(adj, f.inverse(a.src), f.inverse(a.dst));
    if (fwd != a.mult || back != a.mult)
      throw Error(Errc::ArrowNotPreserved,
                  "window arrow " + zname(q, a.src) + "->" + zname(q, a.dst) + " is not preserved");
  }
}

bool is_automorphism(const ColoredQuiver& q, const TQAutomorphism& f) {
  try {
    validate_autom(q, f);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::ArrowNotPreserved || e.code() == Errc::SigmaNotBijective) return false;
    throw;
  }
}

bool is_root_algebraic(const TQAutomorphism& f, int l) {
  if (l < 1) return false;
  for (const auto& orbit : permutation_orbits(f.sigma)) {
    if (static_cast<int>(orbit.size()) != l) return false;
    int sum = 0;
    for (std::size_t x : orbit) sum += f.delta[x];
    if (sum != 1) return false;
  }
  return true;
}

bool is_root_pointwise(const TQAutomorphism& f, int l) {
  if (l < 1) return false;
  for (std::size_t x = 0; x < f.sigma.size(); ++x)
    for (int k = -l; k <= l; ++k) {
      const ZQVertex v{x, k};
      if (f.power(v, l) != tau_inverse(v)) return false;
    }
  return true;
}

bool is_root_of_tau(const ColoredQuiver& q, const TQAutomorphism& f, int l) {
  require_bijective(q, f);
  const bool algebraic = is_root_algebraic(f, l);
  const bool pointwise = is_root_pointwise(f, l);
  if (algebraic != pointwise)
    throw std::logic_error("root tests disagree: algebraic=" + std::to_string(algebraic) +
                           " pointwise=" + std::to_string(pointwise));
  return algebraic;
}

namespace {

void require_root(const ColoredQuiver& q, const TQAutomorphism& f, int l) {
  validate_autom(q, f);
  if (!is_root_of_tau(q, f, l))
    throw Error(Errc::NotARoot, "automorphism is not an l-th root of tau^-1 for l=" + std::to_string(l));
}

}  // namespace

bool is_section(const ZWindow& w, const std::vector<ZQVertex>& s) {
  const std::size_t n = w.generator().vertex_count();
  if (s.empty()) return n == 0;
  int lo = s.front().level, hi = s.front().level;
  for (const auto& v : s) {
    lo = std::min(lo, v.level);
    hi = std::max(hi, v.level);
    if (v.base >= n) throw Error(Errc::InvalidArgument, "section vertex outside the generator");
  }
  if (lo - 1 < w.k_min() || hi + 1 > w.k_max())
    throw Error(Errc::MarginTooSmall, "window must extend one level beyond the candidate section");

  std::vector<int> hits(n, 0);
  const std::set<ZQVertex> members(s.begin(), s.end());
  if (members.size() != s.size()) return false;
  for (const auto& v : s) ++hits[v.base];
  for (int h : hits)
    if (h != 1) return false;

  for (const auto& a : w.arrows()) {
    if (!members.contains(a.src)) continue;
    if (!members.contains(a.dst) && !members.contains(tau(a.dst))) return false;
  }
  return true;
}

std::vector<ZQVertex> f_orbit_union(const TQAutomorphism& f, int l, const std::vector<ZQVertex>& t) {
  std::set<ZQVertex> out;
  for (const auto& v : t)
    for (int a = 0; a < l; ++a) out.insert(f.power(v, a));
  return {out.begin(), out.end()};
}

bool is_F_section(const ColoredQuiver& q, const TQAutomorphism& f, int l,
                  const std::vector<ZQVertex>& t) {
  require_root(q, f, l);
  const std::size_t n = q.vertex_count();
  const auto orbits = permutation_orbits(f.sigma);
  std::vector<std::size_t> orbit_of(n);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t x : orbits[i]) orbit_of[x] = i;

  // (a) one vertex per F-orbit; F-orbits of ZQ are (sigma-orbit) x Z.
  std::vector<int> hits(orbits.size(), 0);
  for (const auto& v : t) {
    if (v.base >= n) throw Error(Errc::InvalidArgument, "F-section vertex outside the generator");
    ++hits[orbit_of[v.base]];
  }
  for (int h : hits)
    if (h != 1) return false;

  // (b) arrow condition.
  const auto adj = adjacency_matrix(q);
  const auto u = f_orbit_union(f, l, t);
  const std::set<ZQVertex> union_set(u.begin(), u.end());
  const std::set<ZQVertex> t_set(t.begin(), t.end());
  for (const auto& v : t)
    for (const auto& [x, m] : zq_successors(adj, v))
      if (!union_set.contains(x) && !t_set.contains(tau(x))) return false;
  return true;
}

std::vector<ZQVertex> construct_F_section(const ColoredQuiver& q, const TQAutomorphism& f, int l) {
  require_root(q, f, l);
  std::vector<ZQVertex> out;
  for (const auto& orbit : permutation_orbits(f.sigma)) {
    // (sigma^a t, 0) = F^{a - l*s_a}(t, 0) with s_a the partial delta sums.
    int partial = 0;
    int best_exp = 0;
    std::size_t best = orbit.front();
    for (std::size_t a = 0; a < orbit.size(); ++a) {
      const int e = static_cast<int>(a) - l * partial;
      if (a == 0 || e < best_exp) {
        best_exp = e;
        best = orbit[a];
      }
      partial += f.delta[orbit[a]];
    }
    out.push_back({best, 0});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool no_backward_arrows(const ColoredQuiver& q, const TQAutomorphism& f, int l,
                        const std::vector<ZQVertex>& t) {
  if (t.empty()) return true;
  const auto adj = adjacency_matrix(q);
  const auto u = f_orbit_union(f, l, t);
  int lo = u.front().level, hi = u.front().level;
  for (const auto& v : u) {
    lo = std::min(lo, v.level);
    hi = std::max(hi, v.level);
  }
  // F^{ql+r} s sits q levels above F^r s; arrows change level by at most one.
  const int bound = l * (hi - lo + 3);
  for (const auto& s : t) {
    ZQVertex v = s;
    for (int a = 1; a <= bound; ++a) {
      v = f(v);
      for (const auto& target : t)
        if (zq_arrow_mult(adj, v, target) > 0) return false;
    }
  }
  return true;
}

std::pair<int, int> auto_window(const std::vector<int>& levels, const TQAutomorphism& f, int l) {
  int reach = 0;
  for (int d : f.delta) reach = std::max(reach, std::abs(d));
  const int margin = std::max(1, reach * l);
  int lo = 0, hi = 0;
  if (!levels.empty()) {
    lo = *std::min_element(levels.begin(), levels.end());
    hi = *std::max_element(levels.begin(), levels.end());
  }
  return {lo - margin, hi + margin};
}

Json autom_to_json(const ColoredQuiver& q, const TQAutomorphism& f) {
  Json out = Json::object();
  out["sigma"] = Json::object();
  out["delta"] = Json::object();
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    out["sigma"][q.vertices[x].id] = q.vertices[f.sigma[x]].id;
    out["delta"][q.vertices[x].id] = f.delta[x];
  }
  return out;
}

TQAutomorphism autom_from_json(const ColoredQuiver& q, const Json& j) {
  using namespace schema;
  const auto idx = index_map(q);
  const std::size_t n = q.vertex_count();
  const auto& js = object_at(field(j, "sigma", "$"), "$.sigma");
  const auto& jd = object_at(field(j, "delta", "$"), "$.delta");
  TQAutomorphism f;
  f.sigma.assign(n, n);
  f.delta.assign(n, 0);
  std::vector<bool> has_delta(n, false);
  for (auto it = js.begin(); it != js.end(); ++it) {
    auto from = idx.find(it.key());
    if (from == idx.end()) throw Error(Errc::UnknownVertex, "$.sigma key '" + it.key() + "'");
    const auto to_id = string_at(it.value(), "$.sigma." + it.key());
    auto to = idx.find(to_id);
    if (to == idx.end()) throw Error(Errc::UnknownVertex, "$.sigma." + it.key() + " -> '" + to_id + "'");
    f.sigma[from->second] = to->second;
  }
  for (auto it = jd.begin(); it != jd.end(); ++it) {
    auto from = idx.find(it.key());
    if (from == idx.end()) throw Error(Errc::UnknownVertex, "$.delta key '" + it.key() + "'");
    f.delta[from->second] = int_at(it.value(), "$.delta." + it.key());
    has_delta[from->second] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (f.sigma[x] == n) throw Error(Errc::SchemaError, "$.sigma misses vertex '" + q.vertices[x].id + "'");
    if (!has_delta[x]) throw Error(Errc::SchemaError, "$.delta misses vertex '" + q.vertices[x].id + "'");
  }
  return f;
}

Json zvertices_to_json(const ColoredQuiver& q, const std::vector<ZQVertex>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    Json jv = Json::object();
    jv["base"] = q.vertices[v.base].id;
    jv["level"] = v.level;
    out.push_back(std::move(jv));
  }
  return out;
}

std::vector<ZQVertex> zvertices_from_json(const ColoredQuiver& q, const Json& j) {
  using namespace schema;
  const auto idx = index_map(q);
  std::vector<ZQVertex> out;
  const auto& arr = array_at(j, "$");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = "$[" + std::to_string(i) + "]";
    const auto base = string_at(field(arr[i], "base", at), at + ".base");
    auto it = idx.find(base);
    if (it == idx.end()) throw Error(Errc::UnknownVertex, at + ".base '" + base + "'");
    out.push_back({it->second, int_at(field(arr[i], "level", at), at + ".level")});
  }
  return out;
}

}  // namespace tauroot
