#include "hocofin/fincat.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "hocofin/error.hpp"

namespace hocofin {

FinCat::FinCat() : d_(index(Data{})) {}

std::shared_ptr<const FinCat::Data> FinCat::index(Data d) {
  const std::size_t n = d.objects.size();
  d.homs.assign(n * n, {});
  d.out.assign(n, {});
  d.in.assign(n, {});
  d.object_index.clear();
  d.morphism_index.clear();
  for (std::size_t i = 0; i < n; ++i)
    if (!d.object_index.emplace(d.objects[i], i).second)
      fail(ErrorCode::InvalidInput, "duplicate object '" + d.objects[i] + "'");
  for (std::size_t m = 0; m < d.morphisms.size(); ++m) {
    const auto& mo = d.morphisms[m];
    if (!d.morphism_index.emplace(mo.name, m).second)
      fail(ErrorCode::InvalidInput, "duplicate morphism '" + mo.name + "'");
    d.homs[mo.dom * n + mo.cod].push_back(m);
    d.out[mo.dom].push_back(m);
    d.in[mo.cod].push_back(m);
  }
  return std::make_shared<const Data>(std::move(d));
}

std::optional<std::size_t> FinCat::find_object(const std::string& name) const {
  auto it = d_->object_index.find(name);
  if (it == d_->object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FinCat::find_morphism(const std::string& name) const {
  auto it = d_->morphism_index.find(name);
  if (it == d_->morphism_index.end()) return std::nullopt;
  return it->second;
}

std::size_t FinCat::object(const std::string& name) const {
  auto x = find_object(name);
  if (!x) fail(ErrorCode::UnknownObject, "'" + name + "'");
  return *x;
}

std::size_t FinCat::morphism(const std::string& name) const {
  auto m = find_morphism(name);
  if (!m) fail(ErrorCode::UnknownMorphism, "'" + name + "'");
  return *m;
}

bool operator==(const FinCat& a, const FinCat& b) {
  if (a.d_ == b.d_) return true;
  if (a.d_->objects != b.d_->objects || a.d_->comp != b.d_->comp) return false;
  if (a.num_morphisms() != b.num_morphisms()) return false;
  for (std::size_t m = 0; m < a.num_morphisms(); ++m) {
    const auto &x = a.d_->morphisms[m], &y = b.d_->morphisms[m];
    if (x.name != y.name || x.dom != y.dom || x.cod != y.cod) return false;
  }
  return true;
}

void FinCat::check_laws() const {
  const std::size_t n = num_objects();
  for (std::size_t f = 0; f < num_morphisms(); ++f) {
    if (compose(identity(cod(f)), f) != f || compose(f, identity(dom(f))) != f)
      fail(ErrorCode::IdentityViolation, "unit law fails for '" + morphism_name(f) + "'");
  }
  for (std::size_t f = 0; f < num_morphisms(); ++f)
    for (std::size_t g : out_of(cod(f))) {
      std::size_t gf = compose(g, f);
      if (gf == npos || dom(gf) != dom(f) || cod(gf) != cod(g))
        fail(ErrorCode::InvalidComposite,
             "composite of '" + morphism_name(g) + "' and '" + morphism_name(f) + "'");
      for (std::size_t h : out_of(cod(g))) {
        if (compose(h, gf) != compose(compose(h, g), f))
          fail(ErrorCode::AssociativityViolation,
               "(" + morphism_name(h) + " " + morphism_name(g) + ") " + morphism_name(f));
      }
    }
  (void)n;
}

std::size_t FinCat::Assembler::add_object(std::string name) {
  if (!morphisms_.empty())
    fail(ErrorCode::InvalidInput, "objects must be added before morphisms");
  objects_.push_back(std::move(name));
  return objects_.size() - 1;
}

std::size_t FinCat::Assembler::add_morphism(std::string name, std::size_t dom, std::size_t cod) {
  if (dom >= objects_.size() || cod >= objects_.size())
    fail(ErrorCode::DanglingId, "morphism '" + name + "' has unknown endpoint");
  morphisms_.emplace_back(std::move(name), dom, cod);
  return objects_.size() + morphisms_.size() - 1;
}

FinCat FinCat::Assembler::finish(
    const std::function<std::size_t(std::size_t, std::size_t)>& compose) && {
  Data d;
  d.objects = objects_;
  const std::size_t n = objects_.size();
  for (std::size_t i = 0; i < n; ++i) d.morphisms.push_back({"id_" + objects_[i], i, i});
  for (auto& [name, dom, cod] : morphisms_) d.morphisms.push_back({name, dom, cod});
  const std::size_t m = d.morphisms.size();
  if (m > max_category_morphisms)
    fail(ErrorCode::SizeLimitExceeded, std::to_string(m) + " morphisms exceed the limit of " +
                                           std::to_string(max_category_morphisms));
  d.comp.assign(m * m, npos);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (d.morphisms[f].cod != d.morphisms[g].dom) continue;
      std::size_t r;
      if (g < n) {
        r = f;
      } else if (f < n) {
        r = g;
      } else {
        r = compose(g, f);
        if (r >= m || d.morphisms[r].dom != d.morphisms[f].dom ||
            d.morphisms[r].cod != d.morphisms[g].cod)
          fail(ErrorCode::InvalidComposite, "composite of '" + d.morphisms[g].name + "' and '" +
                                                d.morphisms[f].name + "' has wrong endpoints");
      }
      d.comp[g * m + f] = r;
    }
  FinCat c(index(std::move(d)));
  c.check_laws();
  return c;
}

FinCat validate_category(const RawCategory& raw) {
  FinCat::Assembler a;
  std::map<std::string, std::size_t> objects;
  for (const auto& o : raw.objects) {
    if (o.empty()) fail(ErrorCode::InvalidInput, "empty object id");
    if (!objects.emplace(o, a.add_object(o)).second)
      fail(ErrorCode::InvalidInput, "duplicate object '" + o + "'");
  }
  std::map<std::string, std::size_t> morphisms;
  for (std::size_t i = 0; i < raw.objects.size(); ++i) morphisms["id_" + raw.objects[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < raw.objects.size(); ++i) ends.emplace_back(i, i);
  for (const auto& mo : raw.morphisms) {
    auto d = objects.find(mo.dom), c = objects.find(mo.cod);
    if (d == objects.end() || c == objects.end())
      fail(ErrorCode::DanglingId, "morphism '" + mo.id + "' references an unknown object");
    if (mo.id.empty()) fail(ErrorCode::InvalidInput, "empty morphism id");
    std::size_t idx = a.add_morphism(mo.id, d->second, c->second);
    if (!morphisms.emplace(mo.id, idx).second)
      fail(ErrorCode::InvalidInput, "duplicate or reserved morphism id '" + mo.id + "'");
    ends.emplace_back(d->second, c->second);
  }
  const std::size_t n = raw.objects.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> table;
  auto resolve = [&](const std::string& id) {
    auto it = morphisms.find(id);
    if (it == morphisms.end()) fail(ErrorCode::DanglingId, "unknown morphism '" + id + "'");
    return it->second;
  };
  for (const auto& e : raw.composition) {
    std::size_t g = resolve(e.g), f = resolve(e.f), r = resolve(e.eq);
    if (ends[f].second != ends[g].first)
      fail(ErrorCode::InvalidComposite, "'" + e.g + "' and '" + e.f + "' are not composable");
    if (ends[r].first != ends[f].first || ends[r].second != ends[g].second)
      fail(ErrorCode::InvalidComposite, "composite '" + e.eq + "' has wrong endpoints");
    if (g < n || f < n) {
      if (r != (g < n ? f : g))
        fail(ErrorCode::IdentityViolation, "'" + e.g + "' o '" + e.f + "' must be the other factor");
      continue;
    }
    auto [it, inserted] = table.emplace(std::make_pair(g, f), r);
    if (!inserted && it->second != r)
      fail(ErrorCode::InvalidComposite, "conflicting entries for '" + e.g + "' o '" + e.f + "'");
  }
  std::vector<std::string> names(ends.size());
  for (auto& [name, idx] : morphisms) names[idx] = name;
  return std::move(a).finish([&](std::size_t g, std::size_t f) {
    auto it = table.find({g, f});
    if (it == table.end())
      fail(ErrorCode::MissingComposite, "no entry for '" + names[g] + "' o '" + names[f] + "'");
    return it->second;
  });
}

RawCategory describe(const FinCat& c) {
  RawCategory raw;
  for (std::size_t x = 0; x < c.num_objects(); ++x) raw.objects.push_back(c.object_name(x));
  for (std::size_t m = c.num_objects(); m < c.num_morphisms(); ++m)
    raw.morphisms.push_back(
        {c.morphism_name(m), c.object_name(c.dom(m)), c.object_name(c.cod(m))});
  for (std::size_t g = c.num_objects(); g < c.num_morphisms(); ++g)
    for (std::size_t f = c.num_objects(); f < c.num_morphisms(); ++f) {
      std::size_t r = c.compose(g, f);
      if (r != npos) raw.composition.push_back({c.morphism_name(g), c.morphism_name(f), c.morphism_name(r)});
    }
  return raw;
}

FinCat opposite(const FinCat& c) {
  FinCat::Data d;
  d.objects = c.d_->objects;
  d.morphisms = c.d_->morphisms;
  for (auto& m : d.morphisms) std::swap(m.dom, m.cod);
  const std::size_t m = c.num_morphisms();
  d.comp.assign(m * m, npos);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) d.comp[g * m + f] = c.compose(f, g);
  return FinCat(FinCat::index(std::move(d)));
}

// ---------------------------------------------------------------------------

FinCat terminal_category() { return discrete_category({"*"}); }

FinCat discrete_category(const std::vector<std::string>& objects) {
  FinCat::Assembler a;
  for (const auto& o : objects) a.add_object(o);
  return std::move(a).finish([](std::size_t, std::size_t) -> std::size_t { return npos; });
}

FinCat poset_category(const std::vector<std::string>& objects,
                      const std::vector<std::pair<std::string, std::string>>& leq) {
  const std::size_t n = objects.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[objects[i]] = i;
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [x, y] : leq) {
    if (!idx.count(x) || !idx.count(y)) fail(ErrorCode::DanglingId, "poset relation " + x + "<=" + y);
    le[idx[x]][idx[y]] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  FinCat::Assembler a;
  for (const auto& o : objects) a.add_object(o);
  std::vector<std::vector<std::size_t>> mor(n, std::vector<std::size_t>(n, npos));
  for (std::size_t i = 0; i < n; ++i) mor[i][i] = i;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !le[i][j]) continue;
      if (le[j][i]) fail(ErrorCode::InvalidInput, "poset relation is not antisymmetric");
      mor[i][j] = a.add_morphism(objects[i] + "<" + objects[j], i, j);
    }
  std::vector<std::pair<std::size_t, std::size_t>> ends(n);
  for (std::size_t i = 0; i < n; ++i) ends[i] = {i, i};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && le[i][j]) ends.emplace_back(i, j);
  return std::move(a).finish([&](std::size_t g, std::size_t f) {
    return mor[ends[f].first][ends[g].second];
  });
}

FinCat monoid_category(const std::vector<std::string>& elements, std::size_t unit,
                       const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = elements.size();
  if (unit >= n || table.size() != n)
    fail(ErrorCode::InvalidInput, "monoid table does not match its elements");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) fail(ErrorCode::InvalidInput, "monoid table row size");
    if (table[a][unit] != a || table[unit][a] != a)
      fail(ErrorCode::IdentityViolation, "'" + elements[unit] + "' is not a two-sided unit");
  }
  FinCat::Assembler as;
  as.add_object("*");
  std::vector<std::size_t> to_morphism(n), to_element;
  to_element.push_back(unit);
  to_morphism[unit] = 0;
  for (std::size_t e = 0; e < n; ++e) {
    if (e == unit) continue;
    to_morphism[e] = as.add_morphism(elements[e], 0, 0);
    to_element.push_back(e);
  }
  return std::move(as).finish([&](std::size_t g, std::size_t f) {
    std::size_t r = table[to_element[g]][to_element[f]];
    if (r >= n) fail(ErrorCode::InvalidInput, "monoid table entry out of range");
    return to_morphism[r];
  });
}

FinCat simplex_category(std::size_t n) {
  FinCat::Assembler a;
  auto obj_name = [](std::size_t k) { return "[" + std::to_string(k) + "]"; };
  for (std::size_t k = 0; k <= n; ++k) a.add_object(obj_name(k));
  struct Map {
    std::size_t dom, cod;
    std::vector<std::size_t> values;
  };
  std::vector<Map> maps;
  for (std::size_t k = 0; k <= n; ++k) maps.push_back({k, k, {}});
  for (std::size_t k = 0; k <= n; ++k) {
    maps[k].values.resize(k + 1);
    std::iota(maps[k].values.begin(), maps[k].values.end(), 0);
  }
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t k = 0; k <= n; ++k) index[{k, k, maps[k].values}] = k;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      // nondecreasing maps {0..i} -> {0..j}, lexicographic
      std::vector<std::size_t> v(i + 1, 0);
      while (true) {
        bool is_id = (i == j);
        for (std::size_t t = 0; is_id && t <= i; ++t) is_id = (v[t] == t);
        if (!is_id) {
          std::string name = "[";
          for (std::size_t t = 0; t <= i; ++t) name += (t ? "," : "") + std::to_string(v[t]);
          name += "]->" + obj_name(j);
          std::size_t idx = a.add_morphism(name, i, j);
          index[{i, j, v}] = idx;
          maps.push_back({i, j, v});
        }
        // next nondecreasing sequence
        std::size_t p = i + 1;
        while (p > 0 && v[p - 1] == j) --p;
        if (p == 0) break;
        ++v[p - 1];
        for (std::size_t t = p; t <= i; ++t) v[t] = v[p - 1];
      }
    }
  return std::move(a).finish([&](std::size_t g, std::size_t f) {
    std::vector<std::size_t> v(maps[f].values.size());
    for (std::size_t t = 0; t < v.size(); ++t) v[t] = maps[g].values[maps[f].values[t]];
    return index.at({maps[f].dom, maps[g].cod, v});
  });
}

FinCat disjoint_union(const FinCat& x, const FinCat& y) {
  FinCat::Assembler a;
  const std::size_t nx = x.num_objects(), ny = y.num_objects();
  for (std::size_t i = 0; i < nx; ++i) a.add_object(x.object_name(i));
  for (std::size_t i = 0; i < ny; ++i) a.add_object(y.object_name(i));
  // new index of each morphism of x and y
  std::vector<std::size_t> mx(x.num_morphisms()), my(y.num_morphisms());
  for (std::size_t i = 0; i < nx; ++i) mx[i] = i;
  for (std::size_t i = 0; i < ny; ++i) my[i] = nx + i;
  std::vector<std::pair<int, std::size_t>> origin(nx + ny);
  for (std::size_t i = 0; i < nx; ++i) origin[i] = {0, i};
  for (std::size_t i = 0; i < ny; ++i) origin[nx + i] = {1, i};
  for (std::size_t m = nx; m < x.num_morphisms(); ++m) {
    mx[m] = a.add_morphism(x.morphism_name(m), x.dom(m), x.cod(m));
    origin.emplace_back(0, m);
  }
  for (std::size_t m = ny; m < y.num_morphisms(); ++m) {
    my[m] = a.add_morphism(y.morphism_name(m), nx + y.dom(m), nx + y.cod(m));
    origin.emplace_back(1, m);
  }
  return std::move(a).finish([&](std::size_t g, std::size_t f) {
    auto [sg, ig] = origin[g];
    auto [sf, i_f] = origin[f];
    if (sg != sf) return npos;
    return sg == 0 ? mx[x.compose(ig, i_f)] : my[y.compose(ig, i_f)];
  });
}

// ---------------------------------------------------------------------------

Functor::Functor(FinCat source, FinCat target, std::vector<std::size_t> obj_map,
                 std::vector<std::size_t> mor_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      obj_map_(std::move(obj_map)),
      mor_map_(std::move(mor_map)) {
  const FinCat &c = source_, &d = target_;
  if (obj_map_.size() != c.num_objects() || mor_map_.size() != c.num_morphisms())
    fail(ErrorCode::FunctorViolation, "object/morphism map has wrong size");
  for (std::size_t x : obj_map_)
    if (x >= d.num_objects()) fail(ErrorCode::FunctorViolation, "object image out of range");
  for (std::size_t m : mor_map_)
    if (m >= d.num_morphisms()) fail(ErrorCode::FunctorViolation, "morphism image out of range");
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    if (d.dom(mor_map_[m]) != obj_map_[c.dom(m)] || d.cod(mor_map_[m]) != obj_map_[c.cod(m)])
      fail(ErrorCode::FunctorViolation, "'" + c.morphism_name(m) + "' is not mapped compatibly");
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (mor_map_[c.identity(x)] != d.identity(obj_map_[x]))
      fail(ErrorCode::FunctorViolation, "identity of '" + c.object_name(x) + "' not preserved");
  for (std::size_t f = 0; f < c.num_morphisms(); ++f)
    for (std::size_t g : c.out_of(c.cod(f)))
      if (mor_map_[c.compose(g, f)] != d.compose(mor_map_[g], mor_map_[f]))
        fail(ErrorCode::FunctorViolation,
             "composition '" + c.morphism_name(g) + "' o '" + c.morphism_name(f) + "' not preserved");
}

Functor identity_functor(const FinCat& c) {
  std::vector<std::size_t> o(c.num_objects()), m(c.num_morphisms());
  std::iota(o.begin(), o.end(), 0);
  std::iota(m.begin(), m.end(), 0);
  return Functor(c, c, o, m);
}

Functor constant_functor(const FinCat& source, const FinCat& target, std::size_t object) {
  return Functor(source, target, std::vector<std::size_t>(source.num_objects(), object),
                 std::vector<std::size_t>(source.num_morphisms(), target.identity(object)));
}

Functor compose(const Functor& g, const Functor& f) {
  if (!(f.target() == g.source())) fail(ErrorCode::FunctorViolation, "functors not composable");
  std::vector<std::size_t> o(f.source().num_objects()), m(f.source().num_morphisms());
  for (std::size_t x = 0; x < o.size(); ++x) o[x] = g.obj(f.obj(x));
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = g.mor(f.mor(x));
  return Functor(f.source(), g.target(), o, m);
}

Functor opposite(const Functor& f) {
  return Functor(opposite(f.source()), opposite(f.target()), f.obj_map(), f.mor_map());
}

Functor functor_from_names(const FinCat& source, const FinCat& target,
                           const std::map<std::string, std::string>& objects,
                           const std::map<std::string, std::string>& morphisms) {
  std::vector<std::size_t> o(source.num_objects()), m(source.num_morphisms());
  for (std::size_t x = 0; x < o.size(); ++x) {
    auto it = objects.find(source.object_name(x));
    if (it == objects.end())
      fail(ErrorCode::InvalidInput, "no image for object '" + source.object_name(x) + "'");
    o[x] = target.object(it->second);
  }
  for (const auto& [k, v] : objects) source.object(k);
  for (const auto& [k, v] : morphisms) source.morphism(k);
  for (std::size_t x = 0; x < m.size(); ++x) {
    auto it = morphisms.find(source.morphism_name(x));
    if (it != morphisms.end()) {
      m[x] = target.morphism(it->second);
    } else if (source.is_identity(x)) {
      m[x] = target.identity(o[x]);
    } else {
      fail(ErrorCode::InvalidInput, "no image for morphism '" + source.morphism_name(x) + "'");
    }
  }
  return Functor(source, target, o, m);
}

Subcategory full_subcategory(const FinCat& c, const std::vector<std::size_t>& objects) {
  std::vector<std::size_t> mors;
  std::vector<bool> in(c.num_objects(), false);
  for (std::size_t x : objects) in.at(x) = true;
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    if (in[c.dom(m)] && in[c.cod(m)]) mors.push_back(m);
  return subcategory(c, mors);
}

Subcategory subcategory(const FinCat& c, const std::vector<std::size_t>& morphisms) {
  std::set<std::size_t> mors(morphisms.begin(), morphisms.end());
  std::set<std::size_t> objs;
  for (std::size_t m : mors) {
    objs.insert(c.dom(m));
    objs.insert(c.cod(m));
  }
  for (std::size_t x : objs) mors.insert(c.identity(x));
  FinCat::Assembler a;
  std::map<std::size_t, std::size_t> new_obj, new_mor;
  std::vector<std::size_t> obj_map, mor_map;
  for (std::size_t x : objs) {
    new_obj[x] = a.add_object(c.object_name(x));
    obj_map.push_back(x);
  }
  for (std::size_t x : objs) {
    new_mor[c.identity(x)] = new_obj[x];
  }
  mor_map.resize(objs.size());
  for (std::size_t x : objs) mor_map[new_obj[x]] = c.identity(x);
  for (std::size_t m : mors) {
    if (c.is_identity(m)) continue;
    new_mor[m] = a.add_morphism(c.morphism_name(m), new_obj[c.dom(m)], new_obj[c.cod(m)]);
    mor_map.push_back(m);
  }
  FinCat sub = std::move(a).finish([&](std::size_t g, std::size_t f) {
    std::size_t r = c.compose(mor_map[g], mor_map[f]);
    auto it = new_mor.find(r);
    if (it == new_mor.end())
      fail(ErrorCode::InvalidInput, "subcategory not closed under composition at '" +
                                        c.morphism_name(r) + "'");
    return it->second;
  });
  return {sub, Functor(sub, c, obj_map, mor_map)};
}

namespace {

std::string pair_name(const FinCat& c, const FinCat& d, std::size_t x, std::size_t m) {
  return "(" + c.object_name(x) + "," + d.morphism_name(m) + ")";
}

// Shared construction of left fibres (over = true) and coslices.
CommaCategory comma(const Functor& s, std::size_t d, bool over) {
  const FinCat &c = s.source(), &t = s.target();
  if (d >= t.num_objects()) fail(ErrorCode::UnknownObject, "comma base object out of range");
  CommaCategory out{FinCat(), identity_functor(FinCat()), {}, {}};
  FinCat::Assembler a;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> obj_index;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const auto& hs = over ? t.hom(s.obj(x), d) : t.hom(d, s.obj(x));
    for (std::size_t b : hs) {
      obj_index[{x, b}] = a.add_object(pair_name(c, t, x, b));
      out.objects.emplace_back(x, b);
    }
  }
  const std::size_t n = out.objects.size();
  out.underlying.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.underlying[i] = c.identity(out.objects[i].first);
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> mor_index;
  std::vector<std::pair<std::size_t, std::size_t>> ends(n);
  for (std::size_t i = 0; i < n; ++i) {
    ends[i] = {i, i};
    mor_index[{i, i, c.identity(out.objects[i].first)}] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto [x, b] = out.objects[i];
    for (std::size_t alpha : c.out_of(x)) {
      std::size_t y = c.cod(alpha);
      const auto& hs = over ? t.hom(s.obj(y), d) : t.hom(d, s.obj(y));
      for (std::size_t b2 : hs) {
        bool ok = over ? t.compose(b2, s.mor(alpha)) == b : t.compose(s.mor(alpha), b) == b2;
        if (!ok) continue;
        std::size_t j = obj_index.at({y, b2});
        if (c.is_identity(alpha) && i == j) continue;
        std::size_t idx = a.add_morphism(
            c.morphism_name(alpha) + ":" + pair_name(c, t, x, b) + "->" + pair_name(c, t, y, b2), i, j);
        mor_index[{i, j, alpha}] = idx;
        out.underlying.push_back(alpha);
        ends.emplace_back(i, j);
      }
    }
  }
  out.category = std::move(a).finish([&](std::size_t g, std::size_t f) {
    return mor_index.at({ends[f].first, ends[g].second,
                         c.compose(out.underlying[g], out.underlying[f])});
  });
  std::vector<std::size_t> om(n);
  for (std::size_t i = 0; i < n; ++i) om[i] = out.objects[i].first;
  out.projection = Functor(out.category, c, om, out.underlying);
  return out;
}

}  // namespace

CommaCategory comma_left_fibre(const Functor& s, std::size_t d) { return comma(s, d, true); }
CommaCategory comma_coslice(const Functor& s, std::size_t d) { return comma(s, d, false); }

std::size_t Factorization::morphism_for(std::size_t f, std::size_t a, std::size_t b) const {
  auto it = lookup.find({f, a, b});
  if (it == lookup.end()) fail(ErrorCode::UnknownMorphism, "no such factorization morphism");
  return it->second;
}

Factorization factorization(const FinCat& c) {
  FinCat::Assembler a;
  const std::size_t n = c.num_morphisms();
  for (std::size_t f = 0; f < n; ++f) a.add_object(c.morphism_name(f));
  Factorization out{FinCat(), identity_functor(FinCat()), identity_functor(FinCat()), {}, {}};
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t f = 0; f < n; ++f) {
    out.pairs.emplace_back(c.identity(c.dom(f)), c.identity(c.cod(f)));
    out.lookup[{f, c.identity(c.dom(f)), c.identity(c.cod(f))}] = f;
    ends.emplace_back(f, f);
  }
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t alpha : c.into(c.dom(f)))
      for (std::size_t beta : c.out_of(c.cod(f))) {
        if (c.is_identity(alpha) && c.is_identity(beta)) continue;
        std::size_t g = c.compose(beta, c.compose(f, alpha));
        std::size_t idx = a.add_morphism("(" + c.morphism_name(alpha) + "," + c.morphism_name(beta) +
                                             "):" + c.morphism_name(f) + "->" + c.morphism_name(g),
                                         f, g);
        out.pairs.emplace_back(alpha, beta);
        out.lookup[{f, alpha, beta}] = idx;
        ends.emplace_back(f, g);
      }
  out.category = std::move(a).finish([&](std::size_t g, std::size_t f) {
    auto [a1, b1] = out.pairs[f];
    auto [a2, b2] = out.pairs[g];
    return out.lookup.at({ends[f].first, c.compose(a1, a2), c.compose(b2, b1)});
  });
  std::vector<std::size_t> cod_obj(n), dom_obj(n), cod_mor, dom_mor;
  for (std::size_t f = 0; f < n; ++f) {
    cod_obj[f] = c.cod(f);
    dom_obj[f] = c.dom(f);
  }
  for (auto [al, be] : out.pairs) {
    dom_mor.push_back(al);
    cod_mor.push_back(be);
  }
  out.cod = Functor(out.category, c, cod_obj, cod_mor);
  out.dom = Functor(opposite(out.category), c, dom_obj, dom_mor);
  return out;
}

Functor factor_functor(const Functor& s) {
  Factorization fc = factorization(s.source());
  Factorization fd = factorization(s.target());
  std::vector<std::size_t> om(fc.category.num_objects()), mm(fc.category.num_morphisms());
  for (std::size_t f = 0; f < om.size(); ++f) om[f] = s.mor(f);
  for (std::size_t m = 0; m < mm.size(); ++m) {
    std::size_t f = fc.category.dom(m);
    auto [u, v] = fc.pairs[m];
    mm[m] = fd.morphism_for(s.mor(f), s.mor(u), s.mor(v));
  }
  return Functor(fc.category, fd.category, om, mm);
}

FactorSlice factor_slice(const Functor& s, std::size_t alpha) {
  const FinCat &c = s.source(), &d = s.target();
  if (alpha >= d.num_morphisms()) fail(ErrorCode::UnknownMorphism, "factor slice morphism");
  const std::size_t a0 = d.dom(alpha), a1 = d.cod(alpha);
  FactorSlice out;
  FinCat::Assembler as;
  std::map<std::array<std::size_t, 3>, std::size_t> obj_index;
  auto name = [&](const std::array<std::size_t, 3>& o) {
    return "(" + c.object_name(o[0]) + "," + d.morphism_name(o[1]) + "," + d.morphism_name(o[2]) + ")";
  };
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    for (std::size_t u : d.hom(a0, s.obj(x)))
      for (std::size_t v : d.hom(s.obj(x), a1))
        if (d.compose(v, u) == alpha) {
          std::array<std::size_t, 3> o{x, u, v};
          obj_index[o] = as.add_object(name(o));
          out.objects.push_back(o);
        }
  const std::size_t n = out.objects.size();
  std::vector<std::size_t> underlying(n);
  std::vector<std::pair<std::size_t, std::size_t>> ends(n);
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> mor_index;
  for (std::size_t i = 0; i < n; ++i) {
    underlying[i] = c.identity(out.objects[i][0]);
    ends[i] = {i, i};
    mor_index[{i, i, underlying[i]}] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto [x, u, v] = out.objects[i];
    for (std::size_t beta : c.out_of(x)) {
      std::size_t y = c.cod(beta);
      std::size_t u2 = d.compose(s.mor(beta), u);
      for (std::size_t v2 : d.hom(s.obj(y), a1)) {
        if (d.compose(v2, s.mor(beta)) != v) continue;
        std::size_t j = obj_index.at({y, u2, v2});
        if (c.is_identity(beta) && i == j) continue;
        std::size_t idx =
            as.add_morphism(c.morphism_name(beta) + ":" + name(out.objects[i]) + "->" + name(out.objects[j]), i, j);
        underlying.push_back(beta);
        ends.emplace_back(i, j);
        mor_index[{i, j, beta}] = idx;
      }
    }
  }
  out.category = std::move(as).finish([&](std::size_t g, std::size_t f) {
    return mor_index.at({ends[f].first, ends[g].second, c.compose(underlying[g], underlying[f])});
  });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class IsoSearch {
 public:
  IsoSearch(const FinCat& c, const FinCat& d) : c_(c), d_(d) {
    const std::size_t n = c.num_objects();
    obj_.assign(n, npos);
    used_obj_.assign(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      sig_c_.push_back(signature(c, x));
      sig_d_.push_back(signature(d, x));
    }
  }

  std::optional<Functor> run() {
    if (assign_object(0)) return Functor(c_, d_, obj_, fwd_);
    return std::nullopt;
  }

 private:
  using Signature = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;

  static Signature signature(const FinCat& c, std::size_t x) {
    std::vector<std::size_t> out, in;
    for (std::size_t y = 0; y < c.num_objects(); ++y) {
      out.push_back(c.hom(x, y).size());
      in.push_back(c.hom(y, x).size());
    }
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    return {c.hom(x, x).size(), out, in};
  }

  bool assign_object(std::size_t x) {
    const std::size_t n = c_.num_objects();
    if (x == n) return morphisms();
    for (std::size_t y = 0; y < n; ++y) {
      if (used_obj_[y] || sig_c_[x] != sig_d_[y]) continue;
      bool ok = true;
      for (std::size_t x2 = 0; x2 < x && ok; ++x2) {
        std::size_t y2 = obj_[x2];
        ok = c_.hom(x, x2).size() == d_.hom(y, y2).size() &&
             c_.hom(x2, x).size() == d_.hom(y2, y).size();
      }
      if (!ok) continue;
      obj_[x] = y;
      used_obj_[y] = true;
      if (assign_object(x + 1)) return true;
      used_obj_[y] = false;
      obj_[x] = npos;
    }
    return false;
  }

  bool morphisms() {
    const std::size_t m = c_.num_morphisms();
    fwd_.assign(m, npos);
    bwd_.assign(m, npos);
    trail_.clear();
    for (std::size_t x = 0; x < c_.num_objects(); ++x)
      if (!propagate(c_.identity(x), d_.identity(obj_[x]))) return false;
    return assign_morphism(c_.num_objects());
  }

  bool propagate(std::size_t a, std::size_t b) {
    std::vector<std::pair<std::size_t, std::size_t>> queue{{a, b}};
    while (!queue.empty()) {
      auto [p, q] = queue.back();
      queue.pop_back();
      if (q == npos) return false;
      if (fwd_[p] != npos) {
        if (fwd_[p] != q) return false;
        continue;
      }
      if (bwd_[q] != npos) return false;
      if (d_.dom(q) != obj_[c_.dom(p)] || d_.cod(q) != obj_[c_.cod(p)]) return false;
      fwd_[p] = q;
      bwd_[q] = p;
      trail_.push_back(p);
      for (std::size_t r : trail_) {
        std::size_t pr = c_.compose(p, r);
        if (pr != npos) queue.emplace_back(pr, d_.compose(q, fwd_[r]));
        std::size_t rp = c_.compose(r, p);
        if (rp != npos) queue.emplace_back(rp, d_.compose(fwd_[r], q));
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      std::size_t p = trail_.back();
      trail_.pop_back();
      bwd_[fwd_[p]] = npos;
      fwd_[p] = npos;
    }
  }

  bool assign_morphism(std::size_t from) {
    std::size_t m = from;
    while (m < c_.num_morphisms() && fwd_[m] != npos) ++m;
    if (m == c_.num_morphisms()) return true;
    for (std::size_t q : d_.hom(obj_[c_.dom(m)], obj_[c_.cod(m)])) {
      if (bwd_[q] != npos) continue;
      std::size_t mark = trail_.size();
      if (propagate(m, q) && assign_morphism(m + 1)) return true;
      undo(mark);
    }
    return false;
  }

  const FinCat &c_, &d_;
  std::vector<Signature> sig_c_, sig_d_;
  std::vector<std::size_t> obj_;
  std::vector<bool> used_obj_;
  std::vector<std::size_t> fwd_, bwd_, trail_;
};

}  // namespace

std::optional<Functor> iso_check(const FinCat& c, const FinCat& d, IsoLimits limits) {
  for (const FinCat* x : {&c, &d})
    if (x->num_objects() > limits.max_objects || x->num_morphisms() > limits.max_morphisms)
      fail(ErrorCode::SizeLimitExceeded,
           std::to_string(x->num_objects()) + " objects / " + std::to_string(x->num_morphisms()) +
               " morphisms");
  if (c.num_objects() != d.num_objects() || c.num_morphisms() != d.num_morphisms())
    return std::nullopt;
  return IsoSearch(c, d).run();
}

std::vector<std::vector<std::size_t>> connected_components(const FinCat& c) {
  std::vector<std::size_t> parent(c.num_objects());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    std::size_t a = find(c.dom(m)), b = find(c.cod(m));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t x = 0; x < c.num_objects(); ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> final_objects(const FinCat& c) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < c.num_objects(); ++t) {
    bool ok = true;
    for (std::size_t x = 0; x < c.num_objects() && ok; ++x) ok = c.hom(x, t).size() == 1;
    if (ok) out.push_back(t);
  }
  return out;
}

std::vector<std::size_t> initial_objects(const FinCat& c) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < c.num_objects(); ++t) {
    bool ok = true;
    for (std::size_t x = 0; x < c.num_objects() && ok; ++x) ok = c.hom(t, x).size() == 1;
    if (ok) out.push_back(t);
  }
  return out;
}

}  // namespace hocofin
