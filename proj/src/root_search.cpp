#include "tauroot/root_search.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tauroot/error.hpp"

namespace tauroot {

namespace {

void extend_cycles(std::vector<std::size_t>& sigma, std::vector<bool>& used, int l,
                   std::vector<std::vector<std::size_t>>& out) {
  const std::size_t n = sigma.size();
  std::size_t first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) {
    out.push_back(sigma);
    return;
  }
  // The cycle through `first` is first -> c[1] -> ... -> c[l-1] -> first.
  std::vector<std::size_t> cycle{first};
  used[first] = true;
  auto choose = [&](auto&& self) -> void {
    if (static_cast<int>(cycle.size()) == l) {
      for (std::size_t i = 0; i < cycle.size(); ++i) sigma[cycle[i]] = cycle[(i + 1) % cycle.size()];
      extend_cycles(sigma, used, l, out);
      return;
    }
    for (std::size_t y = first + 1; y < n; ++y) {
      if (used[y]) continue;
      used[y] = true;
      cycle.push_back(y);
      self(self);
      cycle.pop_back();
      used[y] = false;
    }
  };
  choose(choose);
  used[first] = false;
}

int resolve_bound(const ColoredQuiver& q, std::optional<int> bound) {
  const int b = bound.value_or(static_cast<int>(q.vertex_count()));
  if (b < 0) throw Error(Errc::InvalidArgument, "offset bound must be non-negative");
  return b;
}

void require_search_input(const ColoredQuiver& q, int l) {
  validate(q);
  if (!is_acyclic(q)) throw Error(Errc::CyclicGenerator, "root search needs an acyclic quiver");
  for (const auto& a : q.arrows)
    if (a.color) throw Error(Errc::InvalidArgument, "root search needs an uncolored quiver");
  if (l < 1) throw Error(Errc::InvalidArgument, "l must be at least 1");
}

struct Neighbour {
  std::size_t other;  // lower-indexed endpoint
  int mult;
  bool outgoing;  // arrow runs from `other` to the current vertex
};

/// Backtracking over delta for one fixed sigma. Vertices are assigned in
/// index order; the last vertex of each orbit is forced by the orbit sum.
class DeltaSearch {
 public:
  DeltaSearch(const std::vector<std::vector<int>>& adj, const std::vector<std::size_t>& sigma,
              int bound)
      : adj_(adj), sigma_(sigma), bound_(bound), n_(sigma.size()), delta_(n_, 0), lower_(n_) {
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t u = 0; u < v; ++u) {
        if (adj[u][v] > 0) lower_[v].push_back({u, adj[u][v], true});
        if (adj[v][u] > 0) lower_[v].push_back({u, adj[v][u], false});
      }
    orbit_last_.assign(n_, false);
    orbit_rest_.assign(n_, {});
    for (const auto& orbit : permutation_orbits(sigma)) {
      const std::size_t last = *std::max_element(orbit.begin(), orbit.end());
      orbit_last_[last] = true;
      for (std::size_t x : orbit)
        if (x != last) orbit_rest_[last].push_back(x);
    }
  }

  std::vector<TQAutomorphism> run() {
    if (!sigma_compatible()) return {};
    assign(0);
    return std::move(found_);
  }

 private:
  const std::vector<std::vector<int>>& adj_;
  const std::vector<std::size_t>& sigma_;
  int bound_;
  std::size_t n_;
  std::vector<int> delta_;
  std::vector<std::vector<Neighbour>> lower_;
  std::vector<bool> orbit_last_;
  std::vector<std::vector<std::size_t>> orbit_rest_;
  std::vector<TQAutomorphism> found_;

  // x -> y with mult m must land on sigma x -> sigma y (same level) or on
  // sigma y -> sigma x (one level up).
  bool arrow_ok(std::size_t x, std::size_t y, int m) const {
    if (delta_[y] == delta_[x]) return adj_[sigma_[x]][sigma_[y]] == m;
    if (delta_[y] == delta_[x] + 1) return adj_[sigma_[y]][sigma_[x]] == m;
    return false;
  }

  bool sigma_compatible() const {
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        const int m = adj_[x][y];
        if (m > 0 && adj_[sigma_[x]][sigma_[y]] != m && adj_[sigma_[y]][sigma_[x]] != m) return false;
      }
    return true;
  }

  bool consistent(std::size_t v) const {
    for (const auto& nb : lower_[v]) {
      const bool ok = nb.outgoing ? arrow_ok(nb.other, v, nb.mult) : arrow_ok(v, nb.other, nb.mult);
      if (!ok) return false;
    }
    return true;
  }

  void assign(std::size_t v) {
    if (v == n_) {
      found_.push_back(TQAutomorphism{sigma_, delta_});
      return;
    }
    if (orbit_last_[v]) {
      int rest = 0;
      for (std::size_t x : orbit_rest_[v]) rest += delta_[x];
      const int forced = 1 - rest;
      if (forced < -bound_ || forced > bound_) return;
      delta_[v] = forced;
      if (consistent(v)) assign(v + 1);
      return;
    }
    for (int d = -bound_; d <= bound_; ++d) {
      delta_[v] = d;
      if (consistent(v)) assign(v + 1);
    }
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> permutations_with_cycle_length(std::size_t n, int l) {
  std::vector<std::vector<std::size_t>> out;
  if (l < 1 || n % static_cast<std::size_t>(l) != 0) return out;
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<bool> used(n, false);
  extend_cycles(sigma, used, l, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TQAutomorphism> find_tau_roots(const ColoredQuiver& q, int l,
                                           std::optional<int> offset_bound) {
  require_search_input(q, l);
  const int bound = resolve_bound(q, offset_bound);
  const auto candidates = permutations_with_cycle_length(q.vertex_count(), l);
  const auto adj = adjacency_matrix(q);

  std::vector<std::vector<TQAutomorphism>> per_sigma(candidates.size());
  const long count = static_cast<long>(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) per_sigma[i] = DeltaSearch(adj, candidates[i], bound).run();

  std::vector<TQAutomorphism> roots;
  for (auto& batch : per_sigma)
    for (auto& f : batch) roots.push_back(std::move(f));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<TQAutomorphism> find_tau_roots_reference(const ColoredQuiver& q, int l,
                                                     std::optional<int> offset_bound) {
  require_search_input(q, l);
  const int bound = resolve_bound(q, offset_bound);
  const std::size_t n = q.vertex_count();
  std::vector<TQAutomorphism> roots;
  if (n % static_cast<std::size_t>(l) != 0) return roots;

  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    const auto orbits = permutation_orbits(sigma);
    if (!std::all_of(orbits.begin(), orbits.end(),
                     [&](const auto& o) { return static_cast<int>(o.size()) == l; }))
      continue;
    std::map<VertexId, VertexId> perm;
    for (std::size_t x = 0; x < n; ++x) perm[q.vertices[x].id] = q.vertices[sigma[x]].id;
    if (!graph_automorphism_extends(q, perm)) continue;

    // Free offsets: all orbit members except the first; the first is forced.
    std::vector<std::size_t> free_vertices;
    for (const auto& o : orbits) free_vertices.insert(free_vertices.end(), o.begin() + 1, o.end());
    std::vector<int> values(free_vertices.size(), -bound);
    for (;;) {
      TQAutomorphism f{sigma, std::vector<int>(n, 0)};
      for (std::size_t i = 0; i < free_vertices.size(); ++i) f.delta[free_vertices[i]] = values[i];
      bool in_bounds = true;
      for (const auto& o : orbits) {
        int rest = 0;
        for (std::size_t i = 1; i < o.size(); ++i) rest += f.delta[o[i]];
        f.delta[o[0]] = 1 - rest;
        if (f.delta[o[0]] < -bound || f.delta[o[0]] > bound) in_bounds = false;
      }
      if (in_bounds && is_automorphism(q, f) && is_root_of_tau(q, f, l)) roots.push_back(f);

      std::size_t k = 0;
      while (k < values.size() && values[k] == bound) values[k++] = -bound;
      if (k == values.size()) break;
      ++values[k];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace tauroot
