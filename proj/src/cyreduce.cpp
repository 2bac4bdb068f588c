#include "tauroot/cyreduce.hpp"

#include <set>

#include "tauroot/error.hpp"

namespace tauroot {

std::string primed(const VertexId& v) { return v + "'"; }

void validate_presentation(const AlgebraPresentation& p) {
  validate(p.quiver);
  for (const auto& a : p.quiver.arrows)
    if (a.color) throw Error(Errc::InvalidArgument, "presentation quiver must be uncolored");
  if (!is_acyclic(p.quiver)) throw Error(Errc::CyclicGenerator, "presentation quiver has a cycle");
  for (const auto& r : p.relations) {
    for (const auto& v : {r.src, r.dst})
      if (!p.quiver.has_vertex(v)) throw Error(Errc::UnknownVertex, "relation endpoint '" + v + "'");
    if (r.support)
      for (const auto& v : *r.support)
        if (!p.quiver.has_vertex(v)) throw Error(Errc::UnknownVertex, "relation support '" + v + "'");
  }
}

namespace {

std::set<VertexId> removed_set(const AlgebraPresentation& p, const std::vector<VertexId>& removed) {
  std::set<VertexId> e;
  for (const auto& v : removed) {
    if (!p.quiver.has_vertex(v)) throw Error(Errc::BadRemovedSet, "'" + v + "' is not a vertex");
    if (!e.insert(v).second) throw Error(Errc::BadRemovedSet, "'" + v + "' listed twice");
  }
  return e;
}

std::vector<VertexId> kept(const ColoredQuiver& q, const std::set<VertexId>& e) {
  std::vector<VertexId> out;
  for (const auto& v : q.vertices)
    if (!e.contains(v.id)) out.push_back(v.id);
  return out;
}

bool reaches(const ColoredQuiver& q, const VertexId& from, const VertexId& to) {
  std::set<VertexId> seen{from};
  std::vector<VertexId> stack{from};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& a : q.arrows)
      if (a.src == v) {
        if (a.dst == to) return true;
        if (seen.insert(a.dst).second) stack.push_back(a.dst);
      }
  }
  return false;
}

}  // namespace

ColoredQuiver cy_reduce_quiver(const AlgebraPresentation& p, const std::vector<VertexId>& removed) {
  validate_presentation(p);
  const auto e = removed_set(p, removed);
  const ColoredQuiver sub = induced_subquiver(p.quiver, kept(p.quiver, e));

  ColoredQuiver out;
  for (const auto& v : sub.vertices) out.add_vertex(Vertex{v.id, 0, {}});
  for (const auto& v : sub.vertices) out.add_vertex(Vertex{primed(v.id), 1, {}});
  for (const auto& a : sub.arrows) out.add_arrow(a.src, a.dst, a.mult);
  for (const auto& a : sub.arrows) out.add_arrow(primed(a.src), primed(a.dst), a.mult);
  for (const auto& r : p.relations) {
    if (e.contains(r.src) || e.contains(r.dst)) continue;
    out.add_arrow(r.src, primed(r.dst));
    out.add_arrow(r.dst, primed(r.src));
  }
  validate(out);
  return out;
}

std::vector<std::string> hereditary_proxy_check(const AlgebraPresentation& p,
                                                const std::vector<VertexId>& removed) {
  validate_presentation(p);
  const auto e = removed_set(p, removed);
  const ColoredQuiver sub = induced_subquiver(p.quiver, kept(p.quiver, e));
  std::vector<std::string> warnings;
  for (const auto& r : p.relations) {
    if (e.contains(r.src) || e.contains(r.dst)) continue;
    const std::string name = "relation " + r.src + "->" + r.dst;
    if (r.support) {
      bool cleared = false;
      for (const auto& v : *r.support) cleared = cleared || e.contains(v);
      if (!cleared) warnings.push_back(name + ": support avoids the removed set");
    } else if (reaches(sub, r.src, r.dst)) {
      warnings.push_back(name + ": a path survives outside the removed set");
    }
  }
  return warnings;
}

ReductionReport reduction_report(const AlgebraPresentation& p, const std::vector<VertexId>& removed) {
  ReductionReport r;
  r.reduced = cy_reduce_quiver(p, removed);
  r.warnings = hereditary_proxy_check(p, removed);
  const auto e = removed_set(p, removed);
  r.levels.blocks.assign(2, {});
  for (const auto& v : kept(p.quiver, e)) {
    r.levels.blocks[0].push_back(v);
    r.levels.blocks[1].push_back(primed(v));
  }
  r.empty = r.reduced.vertices.empty();
  r.normal_form = check_root_normal_form(r.reduced, 2, r.levels);
  r.components = dynkin_classify(underlying_graph(r.reduced));
  r.equivalence_applies = true;
  for (const auto& c : r.components) r.equivalence_applies = r.equivalence_applies && !c.is_dynkin();
  return r;
}

Json presentation_to_json(const AlgebraPresentation& p) {
  Json out = Json::object();
  out["quiver"] = quiver_to_json(p.quiver);
  out["relations"] = Json::array();
  for (const auto& r : p.relations) {
    Json jr = Json::object();
    jr["src"] = r.src;
    jr["dst"] = r.dst;
    jr["support"] = r.support ? Json(*r.support) : Json(nullptr);
    out["relations"].push_back(std::move(jr));
  }
  return out;
}

AlgebraPresentation presentation_from_json(const Json& j) {
  using namespace schema;
  object_at(j, "$");
  AlgebraPresentation p;
  p.quiver = quiver_from_json(field(j, "quiver", "$"), "$.quiver");
  const auto& rs = array_at(field(j, "relations", "$"), "$.relations");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::string at = "$.relations[" + std::to_string(i) + "]";
    object_at(rs[i], at);
    Relation r{string_at(field(rs[i], "src", at), at + ".src"),
               string_at(field(rs[i], "dst", at), at + ".dst"), std::nullopt};
    if (auto it = rs[i].find("support"); it != rs[i].end() && !it->is_null()) {
      const auto& sup = array_at(*it, at + ".support");
      r.support.emplace();
      for (std::size_t k = 0; k < sup.size(); ++k)
        r.support->push_back(string_at(sup[k], at + ".support[" + std::to_string(k) + "]"));
    }
    p.relations.push_back(std::move(r));
  }
  validate_presentation(p);
  return p;
}

std::vector<VertexId> removed_from_json(const Json& j) {
  using namespace schema;
  object_at(j, "$");
  std::vector<VertexId> out;
  const auto& rs = array_at(field(j, "removed", "$"), "$.removed");
  for (std::size_t i = 0; i < rs.size(); ++i)
    out.push_back(string_at(rs[i], "$.removed[" + std::to_string(i) + "]"));
  return out;
}

Json report_to_json(const ReductionReport& r) {
  Json out = Json::object();
  out["quiver"] = quiver_to_json(r.reduced);
  out["partition"] = partition_to_json(r.levels);
  out["normal_form"] = r.normal_form;
  out["components"] = Json::array();
  for (const auto& c : r.components) {
    Json jc = Json::object();
    jc["type"] = c.label();
    jc["vertices"] = c.vertices;
    out["components"].push_back(std::move(jc));
  }
  out["equivalence-statement-applies"] = r.equivalence_applies;
  out["empty"] = r.empty;
  out["warnings"] = r.warnings;
  return out;
}

}  // namespace tauroot
