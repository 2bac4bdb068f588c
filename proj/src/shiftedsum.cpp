#include "tauroot/shiftedsum.hpp"

#include "tauroot/error.hpp"
#include "tauroot/mckay.hpp"

namespace tauroot {

namespace {

int lookup(const SummandCounts& c, const VertexId& a, const VertexId& b) {
  auto it = c.find(a);
  if (it == c.end()) return 0;
  auto jt = it->second.find(b);
  return jt == it->second.end() ? 0 : jt->second;
}

void check_counts(const ColoredQuiver& base, const SummandCounts& c, const char* name) {
  for (const auto& [a, row] : c) {
    if (!base.has_vertex(a)) throw Error(Errc::UnknownVertex, std::string(name) + " key '" + a + "'");
    for (const auto& [b, m] : row) {
      if (!base.has_vertex(b)) throw Error(Errc::UnknownVertex, std::string(name) + " key '" + b + "'");
      if (m < 0)
        throw Error(Errc::InvalidArgument,
                    std::string(name) + "[" + a + "][" + b + "] = " + std::to_string(m) + " is negative");
    }
  }
}

std::string pair_counts(const VertexId& a, const VertexId& b, int x, int y) {
  return "(" + a + "," + b + "): " + std::to_string(x) + " vs " + std::to_string(y);
}

void add_level(ColoredQuiver& out, const ColoredQuiver& base, int level, std::optional<int> group) {
  for (const auto& v : base.vertices) out.add_vertex(Vertex{shifted_name(v.id, level), level, group});
}

void add_level_arrows(ColoredQuiver& out, const ColoredQuiver& base, int level) {
  for (const auto& a : base.arrows)
    out.add_arrow(shifted_name(a.src, level), shifted_name(a.dst, level), a.mult);
}

}  // namespace

int ARSummandData::a_count(const VertexId& a, const VertexId& b) const { return lookup(A, a, b); }

int ARSummandData::b_count(const VertexId& a, const VertexId& b) const {
  return B ? lookup(*B, a, b) : 0;
}

void validate_ar_symmetry(const ARSummandData& data, Parity mode) {
  validate(data.base);
  for (const auto& a : data.base.arrows)
    if (a.color) throw Error(Errc::InvalidArgument, "base quiver must be uncolored");
  if (!is_acyclic(data.base)) throw Error(Errc::CyclicGenerator, "base quiver has a cycle");
  check_counts(data.base, data.A, "A");
  if (data.B) check_counts(data.base, *data.B, "B");

  for (const auto& va : data.base.vertices)
    for (const auto& vb : data.base.vertices) {
      const VertexId &a = va.id, &b = vb.id;
      if (mode == Parity::Odd) {
        if (data.a_count(a, b) != data.a_count(b, a))
          throw Error(Errc::SymmetryViolated,
                      "A[a][b] != A[b][a] at " + pair_counts(a, b, data.a_count(a, b), data.a_count(b, a)));
      } else if (data.B && data.a_count(b, a) != data.b_count(a, b)) {
        throw Error(Errc::SymmetryViolated,
                    "A[b][a] != B[a][b] at " + pair_counts(a, b, data.a_count(b, a), data.b_count(a, b)));
      }
    }
}

ColoredQuiver build_odd_quiver(const ARSummandData& data, int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "copies must be at least 1");
  validate_ar_symmetry(data, Parity::Odd);
  ColoredQuiver out;
  for (int g = 0; g < n; ++g) {
    add_level(out, data.base, g, g);
    add_level(out, data.base, g + n, g);
  }
  for (int g = 0; g < n; ++g) {
    add_level_arrows(out, data.base, g);
    add_level_arrows(out, data.base, g + n);
    for (const auto& vb : data.base.vertices)
      for (const auto& va : data.base.vertices)
        out.add_arrow(shifted_name(vb.id, g), shifted_name(va.id, g + n), data.a_count(va.id, vb.id));
  }
  return out;
}

ColoredQuiver build_even_quiver(const ARSummandData& data, int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be at least 1");
  if (!data.B) throw Error(Errc::MissingB, "the even rule needs the B counts");
  validate_ar_symmetry(data, Parity::Even);
  ColoredQuiver out;
  for (int i = 0; i <= 2 * n; ++i) add_level(out, data.base, i, std::nullopt);
  for (int i = 0; i <= 2 * n; ++i) add_level_arrows(out, data.base, i);
  for (int i = 0; i <= n; ++i)
    for (const auto& va : data.base.vertices)
      for (const auto& vb : data.base.vertices)
        out.add_arrow(shifted_name(va.id, i), shifted_name(vb.id, i + n), data.a_count(vb.id, va.id));
  for (int i = 0; i <= n - 1; ++i)
    for (const auto& va : data.base.vertices)
      for (const auto& vb : data.base.vertices)
        out.add_arrow(shifted_name(va.id, i), shifted_name(vb.id, i + n + 1), data.a_count(va.id, vb.id));
  return out;
}

ColoredQuiver star_quiver(int n, int m) {
  if (m < 0) throw Error(Errc::InvalidArgument, "m must be non-negative");
  ARSummandData d;
  d.base.add_vertex("T");
  d.A["T"]["T"] = m;
  d.B = d.A;
  return build_even_quiver(d, n);
}

namespace {

Json counts_to_json(const SummandCounts& c) {
  Json out = Json::object();
  for (const auto& [a, row] : c) {
    out[a] = Json::object();
    for (const auto& [b, m] : row) out[a][b] = m;
  }
  return out;
}

SummandCounts counts_from_json(const Json& j, const std::string& where) {
  using namespace schema;
  object_at(j, where);
  SummandCounts c;
  for (const auto& [a, row] : j.items()) {
    const std::string at = where + "." + a;
    object_at(row, at);
    for (const auto& [b, m] : row.items()) c[a][b] = int_at(m, at + "." + b);
  }
  return c;
}

}  // namespace

Json ar_data_to_json(const ARSummandData& d) {
  Json out = Json::object();
  out["base"] = quiver_to_json(d.base);
  out["A"] = counts_to_json(d.A);
  out["B"] = d.B ? counts_to_json(*d.B) : Json(nullptr);
  return out;
}

ARSummandData ar_data_from_json(const Json& j) {
  using namespace schema;
  object_at(j, "$");
  ARSummandData d;
  d.base = quiver_from_json(field(j, "base", "$"), "$.base");
  d.A = counts_from_json(field(j, "A", "$"), "$.A");
  if (auto it = j.find("B"); it != j.end() && !it->is_null()) d.B = counts_from_json(*it, "$.B");
  return d;
}

}  // namespace tauroot
