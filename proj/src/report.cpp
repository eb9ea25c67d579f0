#include "hocofin/report.hpp"

namespace hocofin {

Json to_json(const AbelianInvariants& a) { return a.to_string(); }

Json to_json(const std::vector<AbelianInvariants>& h) {
  Json out = Json::array();
  for (const auto& a : h) out.push_back(to_json(a));
  return out;
}

Json to_json(const GroupPresentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.spelled_relators()) rels.push_back(r);
  return {{"generators", p.generators}, {"relators", rels}};
}

namespace {

Json fingerprint_json(const std::optional<std::vector<std::uint64_t>>& f) {
  if (!f) return nullptr;
  return *f;
}

Json optional_n0(const std::optional<DegreeZero>& d) {
  if (!d) return nullptr;
  return to_json(*d);
}

}  // namespace

Json to_json(const DegreeZero& d) {
  return {{"presentation", to_json(d.presentation)}, {"fingerprint", fingerprint_json(d.fingerprint)}};
}

Json to_json(const ContractibilityCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.collapses) steps.push_back({{"removed", s.removed}, {"rule", s.rule}});
  Json out{{"verdict", to_string(c.verdict)},
           {"reason", c.reason},
           {"collapses", steps},
           {"n_max", c.n_max},
           {"homology", to_json(c.homology)},
           {"pi1_fingerprint", c.pi1_fingerprint},
           {"witness", c.witness}};
  if (c.cone) {
    out["cone"] = *c.cone;
    out["cone_is_final"] = c.cone_is_final;
  } else {
    out["cone"] = nullptr;
  }
  return out;
}

Json to_json(const CofinalReport& r, const FinCat& target) {
  Json per = Json::object();
  for (std::size_t d = 0; d < r.per_object.size(); ++d) per[target.object_name(d)] = to_json(r.per_object[d]);
  return {{"coinitial", r.coinitial}, {"aggregate", to_string(r.aggregate)}, {"per_object", per}};
}

Json to_json(const FinallyDiscreteReport& r, const FinCat& c) {
  Json comps = Json::array();
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    std::vector<std::string> names;
    for (std::size_t x : r.components[k]) names.push_back(c.object_name(x));
    Json item{{"objects", names}};
    item["final"] = r.finals[k] ? Json(c.object_name(*r.finals[k])) : Json(nullptr);
    comps.push_back(item);
  }
  return {{"ok", r.ok}, {"components", comps}};
}

Json to_json(const VdcReport& r, const FinCat& target) {
  Json out{{"ok", r.ok}};
  out["failing_object"] = r.failing_object ? Json(target.object_name(*r.failing_object)) : Json(nullptr);
  Json fibres = Json::object();
  for (std::size_t d = 0; d < r.fibres.size(); ++d) {
    Json comps = Json::array();
    for (std::size_t k = 0; k < r.fibres[d].components.size(); ++k)
      comps.push_back({{"size", r.fibres[d].components[k].size()}, {"has_final", r.fibres[d].finals[k].has_value()}});
    fibres[target.object_name(d)] = {{"finally_discrete", r.fibres[d].ok}, {"components", comps}};
  }
  out["fibres"] = fibres;
  return out;
}

Json to_json(const GzResult& r) {
  return {{"n0", optional_n0(r.n0)},
          {"n0_lan", optional_n0(r.n0_lan)},
          {"abelian", to_json(r.abelian)},
          {"lan_route", to_json(r.lan_route)},
          {"routes_agree", r.routes_agree}};
}

Json to_json(const BwResult& r) {
  return {{"n0", optional_n0(r.n0)},
          {"factorization_route", to_json(r.factorization_route)},
          {"nerve_route", to_json(r.nerve_route)},
          {"routes_agree", r.routes_agree}};
}

Json to_json(const HocolimComparison& r) {
  return {{"homology", {{"lhs", to_json(r.lhs_homology)}, {"rhs", to_json(r.rhs_homology)}}},
          {"pi1", {{"lhs", fingerprint_json(r.lhs_pi1)}, {"rhs", fingerprint_json(r.rhs_pi1)}}},
          {"verdict", r.agree ? "agree" : "disagree"},
          {"hypothesis", to_string(r.hypothesis)},
          {"label", r.label},
          {"map_is_simplicial", r.map_is_simplicial}};
}

Json to_json(const LcodecarReport& r) {
  return {{"ok", r.ok},
          {"witness", r.witness},
          {"nerve_counts", r.nerve_counts},
          {"total_counts", r.total_counts},
          {"quotient_counts", r.quotient_counts}};
}

Json to_json(const ImageComparison& r) {
  return {{"hypothesis", to_string(r.hypothesis)},
          {"witness", r.witness},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"agree", r.agree}};
}

Json to_json(const AndreResult& r) {
  Json out{{"n0", optional_n0(r.n0)}, {"abelian", to_json(r.abelian)}};
  out["inverted"] = r.inverted ? to_json(*r.inverted) : Json(nullptr);
  out["inverted_agrees"] = r.inverted ? Json(r.inverted_agrees) : Json(nullptr);
  return out;
}

Json to_json(const BwComparison& r) {
  return {{"hypothesis", to_string(r.hypothesis)},
          {"witness", r.witness},
          {"lhs", to_json(r.lhs)},
          {"rhs", to_json(r.rhs)},
          {"agree", r.agree}};
}

Json to_json(const FreeProduct& g) {
  Json out = Json::array();
  for (const auto& [label, grp] : g.factors()) out.push_back({{"label", label}, {"order", grp.order()}});
  return out;
}

Json to_json(const GroupDiagram& g) {
  const FinCat& c = g.base();
  Json values = Json::object();
  for (std::size_t x = 0; x < c.num_objects(); ++x) values[c.object_name(x)] = to_json(g.value(x));
  Json actions = Json::object();
  for (std::size_t m = c.num_objects(); m < c.num_morphisms(); ++m) {
    const GroupHom& h = g.action(m);
    Json per = Json::array();
    for (std::size_t f = 0; f < h.source().num_factors(); ++f) {
      Json images = Json::array();
      for (std::size_t e = 0; e < h.source().factor(f).order(); ++e) images.push_back(h.target().format(h.image(f, e)));
      per.push_back(images);
    }
    actions[c.morphism_name(m)] = per;
  }
  return {{"base", to_json(c)}, {"values", values}, {"actions", actions}};
}

Json to_json(const FinCat& c) {
  std::vector<std::string> objects;
  for (std::size_t x = 0; x < c.num_objects(); ++x) objects.push_back(c.object_name(x));
  Json mors = Json::array();
  for (std::size_t m = c.num_objects(); m < c.num_morphisms(); ++m)
    mors.push_back({{"id", c.morphism_name(m)}, {"dom", c.object_name(c.dom(m))}, {"cod", c.object_name(c.cod(m))}});
  return {{"objects", objects}, {"morphisms", mors}};
}

}  // namespace hocofin
