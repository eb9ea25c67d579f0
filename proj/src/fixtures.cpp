#include "hocofin/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hocofin/error.hpp"

namespace hocofin::fixtures {

FinCat one() { return terminal_category(); }

FinCat two() { return validate_category({{"a", "b"}, {{"u", "a", "b"}}, {}}); }

FinCat span() {
  return validate_category({{"l", "c", "r"}, {{"p", "c", "l"}, {"q", "c", "r"}}, {}});
}

FinCat cospan() { return opposite(span()); }

FinCat discrete2() { return discrete_category({"x", "y"}); }

FinCat chain3() { return poset_category({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }

FinCat square() {
  return poset_category({"00", "01", "10", "11"},
                        {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
}

FinCat z2() { return monoid_category({"e", "t"}, 0, {{0, 1}, {1, 0}}); }

FinCat z3() { return monoid_category({"e", "g", "h"}, 0, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}); }

FinCat idempotent() { return monoid_category({"1", "u"}, 0, {{0, 1}, {1, 1}}); }

FinCat delta1() { return simplex_category(1); }

FinCat delta2() { return simplex_category(2); }

FinCat span_plus_one() { return disjoint_union(span(), one()); }

namespace {

const std::map<std::string, std::function<FinCat()>>& category_table() {
  static const std::map<std::string, std::function<FinCat()>> t{
      {"one", one},       {"two", two},         {"span", span},
      {"cospan", cospan}, {"discrete2", discrete2}, {"chain3", chain3},
      {"square", square}, {"z2", z2},           {"z3", z3},
      {"idempotent", idempotent}, {"delta1", delta1}, {"delta2", delta2},
      {"span+one", span_plus_one},
  };
  return t;
}

Functor inclusion_of(const FinCat& c, const std::vector<std::string>& objects) {
  std::vector<std::size_t> idx;
  for (const auto& o : objects) idx.push_back(c.object(o));
  return full_subcategory(c, idx).inclusion;
}

const std::map<std::string, std::function<Functor()>>& functor_table() {
  static const std::map<std::string, std::function<Functor()>> t{
      {"final-in-2", [] { return inclusion_of(two(), {"b"}); }},
      {"noncofinal-a-in-2", [] { return inclusion_of(two(), {"a"}); }},
      {"id-span", [] { return identity_functor(span()); }},
      {"id-two", [] { return identity_functor(two()); }},
      {"span-to-one", [] { return constant_functor(span(), one(), 0); }},
      {"z2-to-one", [] { return constant_functor(z2(), one(), 0); }},
      {"bc-in-chain3", [] { return inclusion_of(chain3(), {"b", "c"}); }},
      {"final-in-square", [] { return inclusion_of(square(), {"11"}); }},
      {"mono-delta1", [] { return opposite(simplex_monos(1).inclusion); }},
      {"mono-delta2", [] { return opposite(delta2_monos().inclusion); }},
      {"cod-two", [] { return opposite(factorization(two()).cod); }},
      {"cod-span", [] { return opposite(factorization(span()).cod); }},
      {"cod-z2", [] { return opposite(factorization(z2()).cod); }},
      {"cod-chain3", [] { return opposite(factorization(chain3()).cod); }},
  };
  return t;
}

}  // namespace

std::vector<std::string> category_names() {
  std::vector<std::string> out;
  for (auto& [k, v] : category_table()) out.push_back(k);
  return out;
}

FinCat category(const std::string& name) {
  auto it = category_table().find(name);
  if (it == category_table().end()) fail(ErrorCode::UnknownObject, "no category fixture '" + name + "'");
  return it->second();
}

Subcategory simplex_monos(std::size_t n) {
  FinCat d = simplex_category(n);
  std::vector<std::size_t> monos;
  for (std::size_t m = 0; m < d.num_morphisms(); ++m) {
    // injective iff injective on vertices, seen as the maps [0] -> [i]
    std::size_t i = d.dom(m);
    std::size_t images = 0;
    std::vector<bool> hit(d.cod(m) + 1, false);
    for (std::size_t v : d.hom(0, i)) {
      std::size_t w = d.compose(m, v);
      std::size_t target = 0;
      for (std::size_t k : d.hom(0, d.cod(m))) {
        if (k == w) break;
        ++target;
      }
      if (!hit[target]) ++images;
      hit[target] = true;
    }
    if (images == i + 1) monos.push_back(m);
  }
  return subcategory(d, monos);
}

Subcategory delta2_monos() { return simplex_monos(2); }

std::vector<std::string> functor_names() {
  std::vector<std::string> out;
  for (auto& [k, v] : functor_table()) out.push_back(k);
  return out;
}

Functor functor(const std::string& name) {
  auto it = functor_table().find(name);
  if (it == functor_table().end()) fail(ErrorCode::UnknownObject, "no functor fixture '" + name + "'");
  return it->second();
}

GroupHom cyclic_hom(std::size_t n, const FreeProduct& target, std::size_t factor, std::size_t generator) {
  FreeProduct src = FreeProduct::single("Z" + std::to_string(n), cyclic_group(n));
  const FinGroup& t = target.factor(factor);
  std::vector<Word> img;
  std::size_t x = t.unit();
  for (std::size_t k = 0; k < n; ++k) {
    img.push_back(target.letter(factor, x));
    x = t.mul(x, generator);
  }
  return GroupHom(src, target, {img});
}

GroupDiagram corepresentable_diagram(const FinCat& c, std::size_t x0, const FinGroup& g) {
  std::vector<FreeProduct> values;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    std::vector<std::pair<std::string, FinGroup>> factors;
    for (std::size_t h : c.hom(x0, x)) factors.emplace_back(c.morphism_name(h), g);
    values.emplace_back(std::move(factors));
  }
  std::vector<GroupHom> actions;
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const auto& src = c.hom(x0, c.dom(m));
    const auto& dst = c.hom(x0, c.cod(m));
    std::vector<std::vector<Word>> per;
    for (std::size_t h : src) {
      std::size_t f = static_cast<std::size_t>(std::find(dst.begin(), dst.end(), c.compose(m, h)) - dst.begin());
      std::vector<Word> img;
      for (std::size_t e = 0; e < g.order(); ++e) img.push_back(values[c.cod(m)].letter(f, e));
      per.push_back(std::move(img));
    }
    actions.emplace_back(values[c.dom(m)], values[c.cod(m)], per);
  }
  return GroupDiagram(c, values, actions);
}

namespace {

FreeProduct single(const std::string& label, const FinGroup& g) { return FreeProduct::single(label, g); }

std::size_t element_of_order(const FinGroup& g, std::size_t k) {
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) return x;
  fail(ErrorCode::InvalidInput, "no element of order " + std::to_string(k));
}

// Diagram from per-object groups and per-morphism homomorphisms given for the
// non-identity morphisms in order.
GroupDiagram assemble(const FinCat& c, std::vector<FreeProduct> values, std::vector<GroupHom> non_identity) {
  std::vector<GroupHom> actions;
  for (std::size_t x = 0; x < c.num_objects(); ++x) actions.push_back(identity_hom(values[x]));
  for (auto& h : non_identity) actions.push_back(std::move(h));
  return GroupDiagram(c, std::move(values), std::move(actions));
}

GroupDiagram span_z2_z3() {
  FinCat c = span();  // objects l, c, r; p: c -> l, q: c -> r
  FreeProduct l = single("Z2", cyclic_group(2)), r = single("Z3", cyclic_group(3)), t = single("1", FinGroup());
  return assemble(c, {l, t, r}, {trivial_hom(t, l), trivial_hom(t, r)});
}

GroupDiagram two_z2_s3() {
  FreeProduct a = single("Z2", cyclic_group(2)), b = single("S3", symmetric_group_3());
  return assemble(two(), {a, b}, {cyclic_hom(2, b, 0, element_of_order(symmetric_group_3(), 2))});
}

GroupDiagram cospan_s3() {
  FinCat c = cospan();  // p: l -> c, q: r -> c
  FinGroup s3 = symmetric_group_3();
  FreeProduct l = single("Z2", cyclic_group(2)), m = single("S3", s3), r = single("Z3", cyclic_group(3));
  return assemble(c, {l, m, r}, {cyclic_hom(2, m, 0, element_of_order(s3, 2)), cyclic_hom(3, m, 0, element_of_order(s3, 3))});
}

GroupDiagram z2_on_z3(bool invert) {
  FreeProduct g = single("Z3", cyclic_group(3));
  GroupHom t = invert ? table_hom(g, g, {0, 2, 1}) : identity_hom(g);
  return assemble(z2(), {g}, {t});
}

GroupDiagram chain3_z2_z4() {
  FinCat c = chain3();
  FreeProduct a = single("Z2", cyclic_group(2)), b = single("Z4", cyclic_group(4)), d = single("Z4", cyclic_group(4));
  std::vector<GroupHom> actions(c.num_morphisms());
  for (std::size_t x = 0; x < 3; ++x) actions[x] = identity_hom(x == 0 ? a : (x == 1 ? b : d));
  actions[c.morphism("a<b")] = cyclic_hom(2, b, 0, 2);
  actions[c.morphism("b<c")] = identity_hom(d);
  actions[c.morphism("a<c")] = cyclic_hom(2, d, 0, 2);
  return GroupDiagram(c, {a, b, d}, actions);
}

GroupDiagram two_z2_trivial() {
  FreeProduct a = single("Z2", cyclic_group(2)), b = single("1", FinGroup());
  return assemble(two(), {a, b}, {trivial_hom(a, b)});
}

GroupDiagram idempotent_z2() {
  FreeProduct g = single("Z2", cyclic_group(2));
  return assemble(idempotent(), {g}, {trivial_hom(g, g)});
}

const std::map<std::string, std::function<GroupDiagram()>>& diagram_table() {
  static const std::map<std::string, std::function<GroupDiagram()>> t{
      {"span-z2-z3", span_z2_z3},
      {"two-z2-s3", two_z2_s3},
      {"two-z2-1", two_z2_trivial},
      {"cospan-s3", cospan_s3},
      {"z2-inv-z3", [] { return z2_on_z3(true); }},
      {"z2-triv-z3", [] { return z2_on_z3(false); }},
      {"chain3-z2-z4", chain3_z2_z4},
      {"idempotent-z2", idempotent_z2},
      {"one-s3", [] { return constant_diagram(one(), single("S3", symmetric_group_3())); }},
      {"square-z2", [] { return constant_diagram(square(), single("Z2", cyclic_group(2))); }},
      {"span-corep-z2", [] { return corepresentable_diagram(span(), span().object("c"), cyclic_group(2)); }},
      {"mono-delta1-z2", [] { return constant_diagram(functor("mono-delta1").source(), single("Z2", cyclic_group(2))); }},
      {"mono-delta2-z2", [] { return constant_diagram(functor("mono-delta2").source(), single("Z2", cyclic_group(2))); }},
  };
  return t;
}

}  // namespace

std::vector<std::string> diagram_names() {
  std::vector<std::string> out;
  for (auto& [k, v] : diagram_table()) out.push_back(k);
  return out;
}

GroupDiagram diagram(const std::string& name) {
  auto it = diagram_table().find(name);
  if (it == diagram_table().end()) fail(ErrorCode::UnknownObject, "no diagram fixture '" + name + "'");
  return it->second();
}

namespace {

const std::vector<std::string>& point_bases() {
  static const std::vector<std::string> b{"one", "two", "span", "z2", "chain3", "square"};
  return b;
}

const std::vector<std::string>& classified_diagrams() {
  static const std::vector<std::string> d{"span-z2-z3", "two-z2-s3", "two-z2-1", "cospan-s3", "z2-inv-z3",
                                          "z2-triv-z3", "chain3-z2-z4", "idempotent-z2", "one-s3", "square-z2",
                                          "span-corep-z2"};
  return d;
}

PointedDiagram circle_collapse(std::size_t level) {
  TruncSSet circle = simplicial_circle(level), pt = point_sset(level);
  PointedDiagram::Maps id_a(level + 1), id_b(level + 1, {0}), u(level + 1);
  for (std::size_t n = 0; n <= level; ++n)
    for (std::size_t x = 0; x < circle.count(n); ++x) {
      id_a[n].push_back(x);
      u[n].push_back(0);
    }
  return PointedDiagram(two(), {circle, pt}, {id_a, id_b, u});
}

}  // namespace

std::vector<std::string> pointed_diagram_names() {
  std::vector<std::string> out;
  for (const auto& b : point_bases()) out.push_back("point-" + b);
  for (const auto& d : classified_diagrams()) out.push_back("B-" + d);
  out.push_back("circle-collapse-2");
  return out;
}

PointedDiagram pointed_diagram(const std::string& name, std::size_t level) {
  if (name == "circle-collapse-2") return circle_collapse(level);
  if (name.rfind("point-", 0) == 0) {
    std::string b = name.substr(6);
    if (std::find(point_bases().begin(), point_bases().end(), b) != point_bases().end())
      return constant_point_diagram(category(b), level);
  }
  if (name.rfind("B-", 0) == 0) {
    std::string d = name.substr(2);
    if (std::find(classified_diagrams().begin(), classified_diagrams().end(), d) != classified_diagrams().end())
      return classifying_diagram(diagram(d), level);
  }
  fail(ErrorCode::UnknownObject, "no pointed diagram fixture '" + name + "'");
}

namespace {

DSet v_shape() {
  return dset_from_names(two(), {{"a", {"x"}}, {"b", {"y1", "y2"}}}, {{"u", {{"y1", "x"}, {"y2", "x"}}}});
}

DSet circle_delta1() {
  return dset_from_names(delta1(), {{"[0]", {"v"}}, {"[1]", {"deg", "e"}}},
                         {{"[0]->[1]", {{"deg", "v"}, {"e", "v"}}},
                          {"[1]->[1]", {{"deg", "v"}, {"e", "v"}}},
                          {"[0,0]->[0]", {{"v", "deg"}}},
                          {"[0,0]->[1]", {{"deg", "deg"}, {"e", "deg"}}},
                          {"[1,1]->[1]", {{"deg", "deg"}, {"e", "deg"}}}});
}

const std::map<std::string, std::function<DSet()>>& dset_table() {
  static const std::map<std::string, std::function<DSet()>> t{
      {"empty-2", [] { return dset_from_names(two(), {}, {}); }},
      {"terminal-2", [] { return terminal_dset(two()); }},
      {"h-a-2", [] { return representable(two(), 0); }},
      {"h-b-2", [] { return representable(two(), 1); }},
      {"h-a+h-b-2", [] { return coproduct(representable(two(), 0), representable(two(), 1)); }},
      {"two-points-2", [] { return coproduct(terminal_dset(two()), terminal_dset(two())); }},
      {"V-2", v_shape},
      {"terminal-span", [] { return terminal_dset(span()); }},
      {"h-l-span", [] { return representable(span(), span().object("l")); }},
      {"h-c-span", [] { return representable(span(), span().object("c")); }},
      {"circle-delta1", circle_delta1},
      {"h1-delta1", [] { return representable(delta1(), 1); }},
  };
  return t;
}

// Components given by element names; every element of the source must be listed.
DSetMorphism by_names(const DSet& x, const DSet& y,
                      const std::function<std::string(std::size_t, const std::string&)>& image) {
  std::vector<std::vector<std::size_t>> comp(x.base().num_objects());
  for (std::size_t a = 0; a < x.base().num_objects(); ++a)
    for (std::size_t e = 0; e < x.size(a); ++e) comp[a].push_back(y.element(a, image(a, x.name(a, e))));
  return DSetMorphism(x, y, comp);
}

DSetMorphism to_terminal(const DSet& x) {
  return by_names(x, terminal_dset(x.base()), [](std::size_t, const std::string&) { return std::string("*"); });
}

const std::map<std::string, std::function<DSetMorphism()>>& dset_morphism_table() {
  static const std::map<std::string, std::function<DSetMorphism()>> t{
      {"id-h-b-2", [] { return identity_morphism(dset("h-b-2")); }},
      {"incl-h-b-2",
       [] { return by_names(dset("h-b-2"), dset("h-a+h-b-2"), [](std::size_t, const std::string& n) { return n; }); }},
      {"fold-2", [] { return to_terminal(dset("two-points-2")); }},
      {"V-to-terminal-2", [] { return to_terminal(dset("V-2")); }},
      {"h-a-to-terminal-2", [] { return to_terminal(dset("h-a-2")); }},
      {"h-b-to-terminal-2", [] { return to_terminal(dset("h-b-2")); }},
      {"h-c-to-terminal-span", [] { return to_terminal(dset("h-c-span")); }},
      {"circle-to-point-delta1", [] { return to_terminal(dset("circle-delta1")); }},
      {"h1-to-terminal-delta1", [] { return to_terminal(dset("h1-delta1")); }},
  };
  return t;
}

}  // namespace

std::vector<std::string> dset_names() {
  std::vector<std::string> out;
  for (auto& [k, v] : dset_table()) out.push_back(k);
  return out;
}

DSet dset(const std::string& name) {
  auto it = dset_table().find(name);
  if (it == dset_table().end()) fail(ErrorCode::UnknownObject, "no D-set fixture '" + name + "'");
  return it->second();
}

std::vector<std::string> dset_morphism_names() {
  std::vector<std::string> out;
  for (auto& [k, v] : dset_morphism_table()) out.push_back(k);
  return out;
}

DSetMorphism dset_morphism(const std::string& name) {
  auto it = dset_morphism_table().find(name);
  if (it == dset_morphism_table().end()) fail(ErrorCode::UnknownObject, "no D-set morphism fixture '" + name + "'");
  return it->second();
}

std::vector<std::string> system_names() { return {"const-Z", "const-Z2", "const-S3", "corep-Z2"}; }

bool is_abelian_system(const std::string& name) { return name == "const-Z"; }

GroupDiagram group_system(const std::string& name, const FinCat& base) {
  if (name == "const-Z2") return constant_diagram(base, single("Z2", cyclic_group(2)));
  if (name == "const-S3") return constant_diagram(base, single("S3", symmetric_group_3()));
  if (name == "corep-Z2") {
    if (base.num_objects() == 0) return constant_diagram(base, FreeProduct());
    return corepresentable_diagram(base, 0, cyclic_group(2));
  }
  fail(ErrorCode::UnknownObject, "no group system '" + name + "'");
}

AbDiagram abelian_system(const std::string& name, const FinCat& base) {
  if (name == "const-Z") return constant_diagram(base, FGAb::free(1));
  return abelianize_diagram(group_system(name, base));
}

}  // namespace hocofin::fixtures
