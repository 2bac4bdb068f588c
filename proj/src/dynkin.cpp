#include "tauroot/dynkin.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "tauroot/error.hpp"

namespace tauroot {

std::string ComponentType::label() const {
  switch (family) {
    case DynkinFamily::A: return "A" + std::to_string(rank);
    case DynkinFamily::D: return "D" + std::to_string(rank);
    case DynkinFamily::E: return "E" + std::to_string(rank);
    case DynkinFamily::ExtendedA: return "extended-A" + std::to_string(rank);
    case DynkinFamily::ExtendedD: return "extended-D" + std::to_string(rank);
    case DynkinFamily::ExtendedE: return "extended-E" + std::to_string(rank);
    case DynkinFamily::Other: return "other";
  }
  return "other";
}

std::vector<std::vector<std::size_t>> connected_components(const UnderlyingGraph& g) {
  const auto nb = g.neighbours();
  const std::size_t n = g.vertices.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (std::size_t w : nb[v])
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

namespace {

// Number of vertices on the arm leaving `centre` through `first`, in a tree.
int arm_length(const std::vector<std::vector<std::size_t>>& nb, std::size_t centre,
               std::size_t first) {
  int len = 1;
  std::size_t prev = centre, cur = first;
  while (nb[cur].size() == 2) {
    const std::size_t next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
    prev = cur;
    cur = next;
    ++len;
  }
  return len;
}

ComponentType classify_component(const UnderlyingGraph& g, const std::vector<std::size_t>& comp,
                                 const std::vector<std::vector<std::size_t>>& nb) {
  ComponentType t;
  for (std::size_t v : comp) t.vertices.push_back(g.vertices[v]);
  const int nv = static_cast<int>(comp.size());
  t.rank = nv;

  int simple_edges = 0;
  bool loop = false, multi = false;
  int max_mult = 0;
  for (const auto& [e, m] : g.edges) {
    if (!std::binary_search(comp.begin(), comp.end(), e.first)) continue;
    ++simple_edges;
    max_mult = std::max(max_mult, m);
    if (e.first == e.second) loop = true;
    if (m > 1) multi = true;
  }

  if (loop) {
    if (nv == 1 && simple_edges == 1 && max_mult == 1) {
      t.family = DynkinFamily::ExtendedA;
      t.rank = 0;
    }
    return t;
  }
  if (multi) {
    if (nv == 2 && max_mult == 2) {
      t.family = DynkinFamily::ExtendedA;
      t.rank = 1;
    }
    return t;
  }

  std::vector<std::size_t> deg3, deg4;
  int max_deg = 0;
  for (std::size_t v : comp) {
    const int d = static_cast<int>(nb[v].size());
    max_deg = std::max(max_deg, d);
    if (d == 3) deg3.push_back(v);
    if (d == 4) deg4.push_back(v);
  }

  if (simple_edges == nv) {
    if (max_deg == 2 && nv >= 3) {
      t.family = DynkinFamily::ExtendedA;
      t.rank = nv - 1;
    }
    return t;
  }
  if (simple_edges != nv - 1) return t;  // not a tree

  if (max_deg <= 2) {
    t.family = DynkinFamily::A;
    return t;
  }
  if (max_deg == 4) {
    if (nv == 5 && deg4.size() == 1) {
      t.family = DynkinFamily::ExtendedD;
      t.rank = 4;
    }
    return t;
  }
  if (deg3.size() == 1) {
    std::array<int, 3> arms{};
    for (std::size_t i = 0; i < 3; ++i) arms[i] = arm_length(nb, deg3[0], nb[deg3[0]][i]);
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      t.family = DynkinFamily::D;
    } else if (arms == std::array<int, 3>{1, 2, 2}) {
      t.family = DynkinFamily::E;
    } else if (arms == std::array<int, 3>{1, 2, 3}) {
      t.family = DynkinFamily::E;
    } else if (arms == std::array<int, 3>{1, 2, 4}) {
      t.family = DynkinFamily::E;
    } else if (arms == std::array<int, 3>{2, 2, 2} || arms == std::array<int, 3>{1, 3, 3} ||
               arms == std::array<int, 3>{1, 2, 5}) {
      t.family = DynkinFamily::ExtendedE;
      t.rank = nv - 1;
    }
    return t;
  }
  if (deg3.size() == 2) {
    // Extended D_n: two branch points, each carrying two leaves.
    for (std::size_t b : deg3) {
      int leaves = 0;
      for (std::size_t w : nb[b])
        if (nb[w].size() == 1) ++leaves;
      if (leaves != 2) return t;
    }
    t.family = DynkinFamily::ExtendedD;
    t.rank = nv - 1;
  }
  return t;
}

}  // namespace

std::vector<ComponentType> dynkin_classify(const UnderlyingGraph& g) {
  const auto nb = g.neighbours();
  std::vector<ComponentType> out;
  for (const auto& comp : connected_components(g)) out.push_back(classify_component(g, comp, nb));
  return out;
}

ColoredQuiver dynkin_quiver(const std::string& label) {
  int n = 0;
  const char* first = label.data() + 1;
  const char* last = label.data() + label.size();
  const auto [ptr, ec] = std::from_chars(first, last, n);
  const char family = label.empty() ? '?' : label.front();
  const bool ok = label.size() >= 2 && ec == std::errc() && ptr == last &&
                  ((family == 'A' && n >= 1) || (family == 'D' && n >= 4) ||
                   (family == 'E' && n >= 6 && n <= 8));
  if (!ok) throw Error(Errc::InvalidArgument, "unknown Dynkin type '" + label + "'");

  ColoredQuiver q;
  for (int i = 1; i <= n; ++i) q.add_vertex(std::to_string(i));
  const int chain = family == 'A' ? n : family == 'D' ? n - 2 : n - 1;
  for (int i = 1; i < chain; ++i) q.add_arrow(std::to_string(i), std::to_string(i + 1));
  if (family == 'D') {
    q.add_arrow(std::to_string(n - 2), std::to_string(n - 1));
    q.add_arrow(std::to_string(n - 2), std::to_string(n));
  } else if (family == 'E') {
    q.add_arrow("3", std::to_string(n));
  }
  return q;
}

}  // namespace tauroot
