#include "hocofin/workspace.hpp"

#include <fstream>

#include "hocofin/error.hpp"
#include "hocofin/fixtures.hpp"

namespace hocofin {

namespace fx = fixtures;

namespace {

const Json& section(const Json& j, const char* key) {
  static const Json empty = Json::object();
  if (!j.contains(key)) return empty;
  if (!j.at(key).is_object()) fail(ErrorCode::InvalidInput, std::string("section '") + key + "' must be an object");
  return j.at(key);
}

template <class T>
T field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) fail(ErrorCode::InvalidInput, where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    fail(ErrorCode::InvalidInput, where + ": field '" + key + "' has the wrong type");
  }
}

template <class T>
T optional_field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) return T{};
  return field<T>(j, key, where);
}

RawCategory raw_category(const Json& j, const std::string& where) {
  RawCategory raw;
  raw.objects = field<std::vector<std::string>>(j, "objects", where);
  for (const auto& m : optional_field<Json>(j, "morphisms", where))
    raw.morphisms.push_back({field<std::string>(m, "id", where), field<std::string>(m, "dom", where),
                             field<std::string>(m, "cod", where)});
  for (const auto& c : optional_field<Json>(j, "composition", where))
    raw.composition.push_back({field<std::string>(c, "g", where), field<std::string>(c, "f", where),
                               field<std::string>(c, "eq", where)});
  return raw;
}

FinGroup parse_group(const Json& j, const std::string& where) {
  auto elements = field<std::vector<std::string>>(j, "elements", where);
  auto unit = field<std::string>(j, "unit", where);
  auto names = field<std::vector<std::vector<std::string>>>(j, "table", where);
  auto index = [&](const std::string& e) -> std::size_t {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == e) return i;
    fail(ErrorCode::UnknownLabel, where + ": no element '" + e + "'");
  };
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : names) {
    table.emplace_back();
    for (const auto& e : row) table.back().push_back(index(e));
  }
  return FinGroup(elements, index(unit), table);
}

template <class T>
const T* lookup(const std::map<std::string, T>& m, const std::string& name) {
  auto it = m.find(name);
  return it == m.end() ? nullptr : &it->second;
}

}  // namespace

Workspace Workspace::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot read '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::InvalidInput, "'" + path + "' is not JSON: " + e.what());
  }
  return from_json(j);
}

Workspace Workspace::from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "top level must be an object");
  Workspace w;
  for (const auto& [name, c] : section(j, "categories").items())
    w.categories_.emplace(name, validate_category(raw_category(c, "category '" + name + "'")));
  for (const auto& [name, g] : section(j, "groups").items())
    w.groups_.emplace(name, parse_group(g, "group '" + name + "'"));
  for (const auto& [name, f] : section(j, "functors").items()) {
    const std::string where = "functor '" + name + "'";
    w.functors_.emplace(name, functor_from_names(w.category(field<std::string>(f, "source", where)),
                                                 w.category(field<std::string>(f, "target", where)),
                                                 optional_field<std::map<std::string, std::string>>(f, "objects", where),
                                                 optional_field<std::map<std::string, std::string>>(f, "morphisms", where)));
  }
  for (const auto& [name, d] : section(j, "diagrams").items()) {
    const std::string where = "diagram '" + name + "'";
    FinCat c = w.category(field<std::string>(d, "category", where));
    Json values = field<Json>(d, "values", where);
    std::vector<FreeProduct> vals;
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
      std::vector<std::pair<std::string, FinGroup>> factors;
      if (values.contains(c.object_name(x)))
        for (const auto& f : values.at(c.object_name(x)))
          factors.emplace_back(field<std::string>(f, "label", where), w.group(field<std::string>(f, "group", where)));
      vals.emplace_back(std::move(factors));
    }
    for (const auto& [obj, v] : values.items()) c.object(obj);
    Json actions = optional_field<Json>(d, "actions", where);
    for (const auto& [mor, v] : actions.items()) c.morphism(mor);
    std::vector<GroupHom> homs;
    for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
      const FreeProduct& src = vals[c.dom(m)];
      const FreeProduct& dst = vals[c.cod(m)];
      if (c.is_identity(m)) {
        homs.push_back(identity_hom(src));
        continue;
      }
      Json spec = actions.contains(c.morphism_name(m)) ? actions.at(c.morphism_name(m)) : Json::object();
      std::vector<std::vector<Word>> per;
      for (std::size_t f = 0; f < src.num_factors(); ++f) {
        const FinGroup& g = src.factor(f);
        std::vector<Word> images(g.order());
        Json table = spec.contains(src.label(f)) ? spec.at(src.label(f)) : Json::object();
        for (const auto& [e, word] : table.items()) {
          try {
            images[g.element(e)] = dst.parse(word.get<std::vector<std::string>>());
          } catch (const Json::exception&) {
            fail(ErrorCode::InvalidInput, where + ": image of '" + e + "' must be a list of letters");
          }
        }
        per.push_back(std::move(images));
      }
      homs.emplace_back(src, dst, std::move(per));
    }
    w.diagrams_.emplace(name, GroupDiagram(c, std::move(vals), std::move(homs)));
  }
  for (const auto& [name, d] : section(j, "dsets").items()) {
    const std::string where = "dset '" + name + "'";
    w.dsets_.emplace(
        name, dset_from_names(w.category(field<std::string>(d, "category", where)),
                              field<std::map<std::string, std::vector<std::string>>>(d, "sets", where),
                              optional_field<std::map<std::string, std::map<std::string, std::string>>>(d, "maps", where)));
  }
  for (const auto& [name, p] : section(j, "presentations").items()) {
    const std::string where = "presentation '" + name + "'";
    w.presentations_.emplace(name,
                             make_presentation(field<std::vector<std::string>>(p, "generators", where),
                                               optional_field<std::vector<std::vector<std::string>>>(p, "relators", where)));
  }
  return w;
}

FinCat Workspace::category(const std::string& name) const {
  if (auto* c = lookup(categories_, name)) return *c;
  return fx::category(name);
}

FinGroup Workspace::group(const std::string& name) const {
  if (auto* g = lookup(groups_, name)) return *g;
  for (const auto& [n, g] : group_catalog())
    if (n == name) return g;
  fail(ErrorCode::UnknownObject, "no group '" + name + "'");
}

Functor Workspace::functor(const std::string& name) const {
  if (auto* f = lookup(functors_, name)) return *f;
  return fx::functor(name);
}

GroupDiagram Workspace::diagram(const std::string& name) const {
  if (auto* d = lookup(diagrams_, name)) return *d;
  return fx::diagram(name);
}

DSet Workspace::dset(const std::string& name) const {
  if (auto* d = lookup(dsets_, name)) return *d;
  return fx::dset(name);
}

GroupPresentation Workspace::presentation(const std::string& name) const {
  if (auto* p = lookup(presentations_, name)) return *p;
  if (name.rfind("colim0:", 0) == 0) return colim0(diagram(name.substr(7)));
  return presentation_of(group(name));
}

TruncSSet Workspace::sset(const std::string& name, std::size_t level) const {
  if (name == "point") return point_sset(level);
  if (name == "circle") return simplicial_circle(level);
  if (name.rfind("nerve:", 0) == 0) return nerve(category(name.substr(6)), level);
  if (name.rfind("B:", 0) == 0) return classifying_space(group(name.substr(2)), level);
  if (name.rfind("hocolim:", 0) == 0) return hocolim_pointed(fx::pointed_diagram(name.substr(8), level), level);
  fail(ErrorCode::UnknownObject, "no simplicial set '" + name + "'");
}

Json Workspace::summary() const {
  auto names = [](const auto& m) {
    std::vector<std::string> out;
    for (const auto& [k, v] : m) out.push_back(k);
    return out;
  };
  return {{"categories", names(categories_)}, {"groups", names(groups_)},
          {"functors", names(functors_)},     {"diagrams", names(diagrams_)},
          {"dsets", names(dsets_)},           {"presentations", names(presentations_)}};
}

}  // namespace hocofin
