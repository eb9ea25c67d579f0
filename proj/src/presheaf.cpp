#include "hocofin/presheaf.hpp"

#include <deque>
#include <functional>
#include <set>

#include "hocofin/error.hpp"

namespace hocofin {

namespace {

void shape(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidInput, what);
}

}  // namespace

TruncSSet::TruncSSet(std::vector<std::size_t> counts, Table faces, Table degeneracies,
                     std::optional<std::size_t> basepoint, std::vector<std::vector<std::string>> names)
    : counts_(std::move(counts)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)),
      basepoint_(basepoint),
      names_(std::move(names)) {
  shape(!counts_.empty(), "simplicial set needs level >= 0");
  const std::size_t n_top = counts_.size() - 1;
  shape(faces_.size() == n_top + 1 && faces_[0].empty(), "face table has wrong shape");
  shape(degeneracies_.size() == n_top, "degeneracy table has wrong shape");
  for (std::size_t n = 1; n <= n_top; ++n) {
    shape(faces_[n].size() == n + 1, "face table has wrong shape");
    for (const auto& f : faces_[n]) {
      shape(f.size() == counts_[n], "face map has wrong size");
      for (std::size_t v : f) shape(v < counts_[n - 1], "face value out of range");
    }
  }
  for (std::size_t n = 0; n < n_top; ++n) {
    shape(degeneracies_[n].size() == n + 1, "degeneracy table has wrong shape");
    for (const auto& s : degeneracies_[n]) {
      shape(s.size() == counts_[n], "degeneracy map has wrong size");
      for (std::size_t v : s) shape(v < counts_[n + 1], "degeneracy value out of range");
    }
  }
  if (basepoint_) shape(*basepoint_ < counts_[0], "basepoint out of range");
  if (!names_.empty()) {
    shape(names_.size() == counts_.size(), "name table has wrong shape");
    for (std::size_t n = 0; n <= n_top; ++n) shape(names_[n].size() == counts_[n], "name table has wrong shape");
  }
  degenerate_.assign(n_top + 1, {});
  for (std::size_t n = 0; n <= n_top; ++n) degenerate_[n].assign(counts_[n], false);
  for (std::size_t n = 0; n < n_top; ++n)
    for (const auto& s : degeneracies_[n])
      for (std::size_t v : s) degenerate_[n + 1][v] = true;
  check_simplicial_identities(*this);
}

std::size_t TruncSSet::basepoint_at(std::size_t n) const {
  if (!basepoint_) fail(ErrorCode::InvalidInput, "simplicial set is not pointed");
  std::size_t x = *basepoint_;
  for (std::size_t k = 0; k < n; ++k) x = degeneracy(k, 0, x);
  return x;
}

std::vector<std::size_t> TruncSSet::nondegenerate(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < count(n); ++x)
    if (!degenerate_[n][x]) out.push_back(x);
  return out;
}

std::string TruncSSet::name(std::size_t n, std::size_t x) const {
  if (!names_.empty()) return names_[n][x];
  return std::to_string(n) + ":" + std::to_string(x);
}

TruncSSet TruncSSet::with_basepoint(std::size_t vertex) const {
  return TruncSSet(counts_, faces_, degeneracies_, vertex, names_);
}

void check_simplicial_identities(const TruncSSet& x) {
  const std::size_t top = x.level();
  auto violation = [&](const std::string& what, std::size_t n, std::size_t s) {
    fail(ErrorCode::SimplicialIdentityViolation, what + " on simplex " + x.name(n, s));
  };
  for (std::size_t n = 2; n <= top; ++n)
    for (std::size_t s = 0; s < x.count(n); ++s)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (x.face(n - 1, i, x.face(n, j, s)) != x.face(n - 1, j - 1, x.face(n, i, s)))
            violation("d" + std::to_string(i) + " d" + std::to_string(j), n, s);
  for (std::size_t n = 0; n + 2 <= top; ++n)
    for (std::size_t s = 0; s < x.count(n); ++s)
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          if (x.degeneracy(n + 1, i, x.degeneracy(n, j, s)) != x.degeneracy(n + 1, j + 1, x.degeneracy(n, i, s)))
            violation("s" + std::to_string(i) + " s" + std::to_string(j), n, s);
  for (std::size_t n = 0; n + 1 <= top; ++n)
    for (std::size_t s = 0; s < x.count(n); ++s)
      for (std::size_t j = 0; j <= n; ++j) {
        std::size_t up = x.degeneracy(n, j, s);
        for (std::size_t i = 0; i <= n + 1; ++i) {
          std::size_t lhs = x.face(n + 1, i, up);
          std::size_t rhs;
          if (i == j || i == j + 1)
            rhs = s;
          else if (i < j)
            rhs = x.degeneracy(n - 1, j - 1, x.face(n, i, s));
          else
            rhs = x.degeneracy(n - 1, j, x.face(n, i - 1, s));
          if (lhs != rhs) violation("d" + std::to_string(i) + " s" + std::to_string(j), n, s);
        }
      }
}

// ---------------------------------------------------------------------------

std::size_t chain_object(const FinCat& c, const Chain& s, std::size_t k) {
  return k == 0 ? s.c0 : c.cod(s.mors[k - 1]);
}

Chain chain_face(const FinCat& c, const Chain& s, std::size_t i) {
  const std::size_t n = s.length();
  if (n == 0 || i > n) fail(ErrorCode::IndexOutOfRange, "face index");
  Chain out;
  if (i == 0) {
    out.c0 = c.cod(s.mors[0]);
    out.mors.assign(s.mors.begin() + 1, s.mors.end());
  } else if (i == n) {
    out.c0 = s.c0;
    out.mors.assign(s.mors.begin(), s.mors.end() - 1);
  } else {
    out.c0 = s.c0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i - 1) {
        out.mors.push_back(c.compose(s.mors[k + 1], s.mors[k]));
        ++k;
      } else {
        out.mors.push_back(s.mors[k]);
      }
    }
  }
  return out;
}

Chain chain_degeneracy(const FinCat& c, const Chain& s, std::size_t i) {
  if (i > s.length()) fail(ErrorCode::IndexOutOfRange, "degeneracy index");
  Chain out = s;
  out.mors.insert(out.mors.begin() + static_cast<std::ptrdiff_t>(i), c.identity(chain_object(c, s, i)));
  return out;
}

bool chain_is_degenerate(const FinCat& c, const Chain& s) {
  for (std::size_t m : s.mors)
    if (c.is_identity(m)) return true;
  return false;
}

std::size_t chain_composite(const FinCat& c, const Chain& s) {
  std::size_t r = c.identity(s.c0);
  for (std::size_t m : s.mors) r = c.compose(m, r);
  return r;
}

std::string chain_name(const FinCat& c, const Chain& s) {
  if (s.mors.empty()) return c.object_name(s.c0);
  std::string out;
  for (std::size_t k = 0; k < s.mors.size(); ++k) out += (k ? "|" : "") + c.morphism_name(s.mors[k]);
  return out;
}

namespace {

void extend(const FinCat& c, Chain& cur, std::size_t n, bool skip_identities, std::size_t cap,
            std::vector<Chain>& out) {
  if (cur.length() == n) {
    if (out.size() >= cap)
      fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " chains of length " + std::to_string(n));
    out.push_back(cur);
    return;
  }
  for (std::size_t m : c.out_of(chain_object(c, cur, cur.length()))) {
    if (skip_identities && c.is_identity(m)) continue;
    cur.mors.push_back(m);
    extend(c, cur, n, skip_identities, cap, out);
    cur.mors.pop_back();
  }
}

}  // namespace

std::vector<Chain> all_chains(const FinCat& c, std::size_t n) {
  std::vector<Chain> out;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    Chain cur{x, {}};
    extend(c, cur, n, false, static_cast<std::size_t>(-1), out);
  }
  return out;
}

std::vector<Chain> nondegenerate_chains(const FinCat& c, std::size_t n, std::size_t cap) {
  std::vector<Chain> out;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    Chain cur{x, {}};
    extend(c, cur, n, true, cap, out);
  }
  return out;
}

Nerve nerve_with_chains(const FinCat& c, std::size_t level) {
  Nerve out;
  std::vector<std::map<Chain, std::size_t>> index(level + 1);
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::string>> names(level + 1);
  for (std::size_t n = 0; n <= level; ++n) {
    out.chains.push_back(all_chains(c, n));
    counts.push_back(out.chains[n].size());
    for (std::size_t k = 0; k < out.chains[n].size(); ++k) {
      index[n][out.chains[n][k]] = k;
      names[n].push_back(chain_name(c, out.chains[n][k]));
    }
  }
  TruncSSet::Table faces(level + 1), degens(level);
  for (std::size_t n = 1; n <= level; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<std::size_t> f;
      for (const Chain& s : out.chains[n]) f.push_back(index[n - 1].at(chain_face(c, s, i)));
      faces[n].push_back(std::move(f));
    }
  for (std::size_t n = 0; n < level; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<std::size_t> d;
      for (const Chain& s : out.chains[n]) d.push_back(index[n + 1].at(chain_degeneracy(c, s, i)));
      degens[n].push_back(std::move(d));
    }
  out.sset = TruncSSet(counts, faces, degens, std::nullopt, names);
  return out;
}

TruncSSet nerve(const FinCat& c, std::size_t level) { return nerve_with_chains(c, level).sset; }

std::vector<AbelianInvariants> homology_ss(const TruncSSet& x, std::size_t n_max) {
  if (x.level() < n_max + 1)
    fail(ErrorCode::LevelTooLow, "homology through degree " + std::to_string(n_max) + " needs level " +
                                     std::to_string(n_max + 1) + ", have " + std::to_string(x.level()));
  std::vector<std::vector<std::size_t>> nd(n_max + 2);
  std::vector<std::map<std::size_t, std::size_t>> pos(n_max + 2);
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    nd[n] = x.nondegenerate(n);
    for (std::size_t k = 0; k < nd[n].size(); ++k) pos[n][nd[n][k]] = k;
  }
  std::vector<FGAb> groups;
  std::map<int, IntMatrix> boundaries;
  for (std::size_t n = 0; n <= n_max + 1; ++n) groups.push_back(FGAb::free(nd[n].size()));
  for (std::size_t n = 1; n <= n_max + 1; ++n) {
    IntMatrix d(nd[n - 1].size(), nd[n].size());
    for (std::size_t k = 0; k < nd[n].size(); ++k)
      for (std::size_t i = 0; i <= n; ++i) {
        std::size_t f = x.face(n, i, nd[n][k]);
        if (x.is_degenerate(n - 1, f)) continue;
        d(pos[n - 1].at(f), k) += (i % 2 ? -1 : 1);
      }
    boundaries[static_cast<int>(n)] = std::move(d);
  }
  ChainComplex k(0, groups, boundaries);
  k.validate();
  std::vector<AbelianInvariants> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(homology(k, static_cast<int>(n)));
  return out;
}

GroupPresentation edge_path_group(const TruncSSet& x) {
  if (x.level() < 2) fail(ErrorCode::LevelTooLow, "edge-path group needs level 2");
  const std::size_t v0 = x.basepoint().value_or(0);
  if (x.count(0) == 0) fail(ErrorCode::NotConnected, "empty simplicial set");
  std::vector<std::size_t> edges = x.nondegenerate(1);
  std::map<std::size_t, int> gen;
  GroupPresentation p;
  for (std::size_t e : edges) {
    p.generators.push_back(x.name(1, e));
    gen[e] = static_cast<int>(p.generators.size());
  }
  // BFS spanning tree from the basepoint, edges scanned in index order
  std::vector<bool> seen(x.count(0), false);
  std::deque<std::size_t> queue{v0};
  seen[v0] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : edges) {
      std::size_t src = x.face(1, 1, e), dst = x.face(1, 0, e);
      std::size_t other;
      if (src == v && !seen[dst])
        other = dst;
      else if (dst == v && !seen[src])
        other = src;
      else
        continue;
      seen[other] = true;
      queue.push_back(other);
      p.relators.push_back({gen[e]});
    }
  }
  for (std::size_t v = 0; v < x.count(0); ++v)
    if (!seen[v]) fail(ErrorCode::NotConnected, "vertex " + x.name(0, v) + " is not reachable");
  for (std::size_t t : x.nondegenerate(2)) {
    // gen(d1) = gen(d0) gen(d2)
    std::vector<int> r;
    std::size_t d0 = x.face(2, 0, t), d1 = x.face(2, 1, t), d2 = x.face(2, 2, t);
    if (!x.is_degenerate(1, d0)) r.push_back(gen[d0]);
    if (!x.is_degenerate(1, d2)) r.push_back(gen[d2]);
    if (!x.is_degenerate(1, d1)) r.push_back(-gen[d1]);
    if (!r.empty()) p.relators.push_back(std::move(r));
  }
  return p;
}

// ---------------------------------------------------------------------------

DSet::DSet(FinCat base, std::vector<std::vector<std::string>> elements,
           std::vector<std::vector<std::size_t>> maps)
    : base_(std::move(base)), elements_(std::move(elements)), maps_(std::move(maps)) {
  const FinCat& c = base_;
  if (elements_.size() != c.num_objects()) fail(ErrorCode::InvalidInput, "one element set per object");
  for (const auto& set : elements_) {
    std::set<std::string> names(set.begin(), set.end());
    if (names.size() != set.size()) fail(ErrorCode::InvalidInput, "duplicate element names");
  }
  if (maps_.size() != c.num_morphisms()) fail(ErrorCode::InvalidInput, "one map per morphism");
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    if (maps_[m].size() != size(c.cod(m)))
      fail(ErrorCode::FunctorViolation, "map of '" + c.morphism_name(m) + "' has wrong size");
    for (std::size_t v : maps_[m])
      if (v >= size(c.dom(m)))
        fail(ErrorCode::FunctorViolation, "map of '" + c.morphism_name(m) + "' leaves its codomain");
  }
  for (std::size_t a = 0; a < c.num_objects(); ++a)
    for (std::size_t x = 0; x < size(a); ++x)
      if (maps_[c.identity(a)][x] != x)
        fail(ErrorCode::FunctorViolation, "identity of '" + c.object_name(a) + "' acts non-trivially");
  for (std::size_t f = 0; f < c.num_morphisms(); ++f)
    for (std::size_t g : c.out_of(c.cod(f))) {
      std::size_t gf = c.compose(g, f);
      for (std::size_t x = 0; x < size(c.cod(g)); ++x)
        if (maps_[gf][x] != maps_[f][maps_[g][x]])
          fail(ErrorCode::FunctorViolation,
               "X(" + c.morphism_name(g) + " o " + c.morphism_name(f) + ") differs from the composite");
    }
}

std::size_t DSet::total_size() const {
  std::size_t k = 0;
  for (const auto& s : elements_) k += s.size();
  return k;
}

std::size_t DSet::element(std::size_t a, const std::string& name) const {
  for (std::size_t x = 0; x < size(a); ++x)
    if (elements_[a][x] == name) return x;
  fail(ErrorCode::UnknownLabel, "no element '" + name + "' over '" + base_.object_name(a) + "'");
}

DSet dset_from_names(const FinCat& base, const std::map<std::string, std::vector<std::string>>& sets,
                     const std::map<std::string, std::map<std::string, std::string>>& maps) {
  std::vector<std::vector<std::string>> elements(base.num_objects());
  for (const auto& [obj, elems] : sets) elements[base.object(obj)] = elems;
  for (const auto& [m, tbl] : maps) base.morphism(m);
  std::vector<std::vector<std::size_t>> table(base.num_morphisms());
  auto find = [&](std::size_t a, const std::string& n) {
    for (std::size_t x = 0; x < elements[a].size(); ++x)
      if (elements[a][x] == n) return x;
    fail(ErrorCode::UnknownLabel, "no element '" + n + "' over '" + base.object_name(a) + "'");
  };
  for (std::size_t m = 0; m < base.num_morphisms(); ++m) {
    std::size_t a = base.cod(m), b = base.dom(m);
    auto it = maps.find(base.morphism_name(m));
    if (it == maps.end()) {
      if (!base.is_identity(m) && !elements[a].empty())
        fail(ErrorCode::InvalidInput, "no map given for '" + base.morphism_name(m) + "'");
      for (std::size_t x = 0; x < elements[a].size(); ++x) table[m].push_back(x);
      continue;
    }
    for (const auto& x : elements[a]) {
      auto jt = it->second.find(x);
      if (jt == it->second.end())
        fail(ErrorCode::InvalidInput, "map of '" + base.morphism_name(m) + "' misses '" + x + "'");
      table[m].push_back(find(b, jt->second));
    }
  }
  return DSet(base, elements, table);
}

DSet representable(const FinCat& c, std::size_t d) {
  std::vector<std::vector<std::string>> elements(c.num_objects());
  std::vector<std::vector<std::size_t>> position(c.num_objects());
  for (std::size_t a = 0; a < c.num_objects(); ++a)
    for (std::size_t m : c.hom(a, d)) elements[a].push_back(c.morphism_name(m));
  std::vector<std::vector<std::size_t>> maps(c.num_morphisms());
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const auto& src = c.hom(c.cod(m), d);
    const auto& dst = c.hom(c.dom(m), d);
    for (std::size_t beta : src) {
      std::size_t v = c.compose(beta, m);
      maps[m].push_back(static_cast<std::size_t>(std::find(dst.begin(), dst.end(), v) - dst.begin()));
    }
  }
  return DSet(c, elements, maps);
}

DSet coproduct(const DSet& x, const DSet& y) {
  if (!(x.base() == y.base())) fail(ErrorCode::InvalidInput, "coproduct over different bases");
  const FinCat& c = x.base();
  std::vector<std::vector<std::string>> elements(c.num_objects());
  for (std::size_t a = 0; a < c.num_objects(); ++a) {
    std::set<std::string> left(x.elements()[a].begin(), x.elements()[a].end());
    bool clash = false;
    for (const auto& n : y.elements()[a]) clash = clash || left.count(n);
    for (const auto& n : x.elements()[a]) elements[a].push_back(clash ? "0." + n : n);
    for (const auto& n : y.elements()[a]) elements[a].push_back(clash ? "1." + n : n);
  }
  std::vector<std::vector<std::size_t>> maps(c.num_morphisms());
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    std::size_t shift = x.size(c.dom(m));
    maps[m] = x.maps()[m];
    for (std::size_t v : y.maps()[m]) maps[m].push_back(v + shift);
  }
  return DSet(c, elements, maps);
}

DSet terminal_dset(const FinCat& c) {
  return DSet(c, std::vector<std::vector<std::string>>(c.num_objects(), {"*"}),
              std::vector<std::vector<std::size_t>>(c.num_morphisms(), {0}));
}

DSetMorphism::DSetMorphism(DSet source, DSet target, std::vector<std::vector<std::size_t>> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  const FinCat& c = source_.base();
  if (!(c == target_.base())) fail(ErrorCode::NaturalityViolation, "D-sets over different bases");
  if (components_.size() != c.num_objects()) fail(ErrorCode::NaturalityViolation, "one component per object");
  for (std::size_t a = 0; a < c.num_objects(); ++a) {
    if (components_[a].size() != source_.size(a))
      fail(ErrorCode::NaturalityViolation, "component at '" + c.object_name(a) + "' has wrong size");
    for (std::size_t v : components_[a])
      if (v >= target_.size(a)) fail(ErrorCode::NaturalityViolation, "component value out of range");
  }
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    for (std::size_t x = 0; x < source_.size(c.cod(m)); ++x)
      if (components_[c.dom(m)][source_.act(m, x)] != target_.act(m, components_[c.cod(m)][x]))
        fail(ErrorCode::NaturalityViolation, "square of '" + c.morphism_name(m) + "' does not commute at '" +
                                                 source_.name(c.cod(m), x) + "'");
}

DSetMorphism identity_morphism(const DSet& x) {
  std::vector<std::vector<std::size_t>> comp(x.base().num_objects());
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t v = 0; v < x.size(a); ++v) comp[a].push_back(v);
  return DSetMorphism(x, x, comp);
}

ElementsCategory elements(const DSet& x) {
  const FinCat& c = x.base();
  ElementsCategory out{FinCat(), identity_functor(FinCat()), {}, {}, {}, {}};
  FinCat::Assembler as;
  auto obj_name = [&](std::size_t d, std::size_t e) {
    return "(" + c.object_name(d) + "," + x.name(d, e) + ")";
  };
  for (std::size_t d = 0; d < c.num_objects(); ++d)
    for (std::size_t e = 0; e < x.size(d); ++e) {
      out.index[{d, e}] = as.add_object(obj_name(d, e));
      out.objects.emplace_back(d, e);
    }
  const std::size_t n = out.objects.size();
  std::vector<std::pair<std::size_t, std::size_t>> ends(n);
  for (std::size_t i = 0; i < n; ++i) {
    ends[i] = {i, i};
    out.underlying.push_back(c.identity(out.objects[i].first));
    out.morphism_index[{i, i, out.underlying[i]}] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto [d, e] = out.objects[i];
    for (std::size_t alpha : c.out_of(d)) {
      std::size_t d2 = c.cod(alpha);
      for (std::size_t e2 = 0; e2 < x.size(d2); ++e2) {
        if (x.act(alpha, e2) != e) continue;
        std::size_t j = out.index.at({d2, e2});
        if (c.is_identity(alpha)) continue;
        std::size_t idx = as.add_morphism(c.morphism_name(alpha) + ":" + obj_name(d, e) + "->" + obj_name(d2, e2), i, j);
        out.underlying.push_back(alpha);
        out.morphism_index[{i, j, alpha}] = idx;
        ends.emplace_back(i, j);
      }
    }
  }
  out.category = std::move(as).finish([&](std::size_t g, std::size_t f) {
    return out.morphism_index.at({ends[f].first, ends[g].second, c.compose(out.underlying[g], out.underlying[f])});
  });
  std::vector<std::size_t> om;
  for (auto [d, e] : out.objects) om.push_back(d);
  out.projection = Functor(out.category, c, om, out.underlying);
  return out;
}

Functor elements_functor(const DSetMorphism& f, const ElementsCategory& ex, const ElementsCategory& ey) {
  std::vector<std::size_t> om, mm;
  for (auto [d, e] : ex.objects) om.push_back(ey.index.at({d, f.apply(d, e)}));
  const FinCat& c = ex.category;
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    mm.push_back(ey.morphism_index.at({om[c.dom(m)], om[c.cod(m)], ex.underlying[m]}));
  return Functor(ex.category, ey.category, om, mm);
}

DSet inverse_fibre(const DSetMorphism& f, std::size_t d, std::size_t y) {
  const DSet &x = f.source(), &t = f.target();
  const FinCat& c = x.base();
  if (d >= c.num_objects()) fail(ErrorCode::UnknownObject, "inverse fibre object");
  if (y >= t.size(d)) fail(ErrorCode::UnknownLabel, "inverse fibre element");
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(c.num_objects());
  std::vector<std::vector<std::string>> names(c.num_objects());
  for (std::size_t a = 0; a < c.num_objects(); ++a)
    for (std::size_t e = 0; e < x.size(a); ++e)
      for (std::size_t alpha : c.hom(a, d))
        if (f.apply(a, e) == t.act(alpha, y)) {
          pairs[a].emplace_back(e, alpha);
          names[a].push_back("(" + x.name(a, e) + "," + c.morphism_name(alpha) + ")");
        }
  std::vector<std::vector<std::size_t>> maps(c.num_morphisms());
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    std::size_t a = c.cod(m), b = c.dom(m);
    for (auto [e, alpha] : pairs[a]) {
      std::pair<std::size_t, std::size_t> img{x.act(m, e), c.compose(alpha, m)};
      auto it = std::find(pairs[b].begin(), pairs[b].end(), img);
      maps[m].push_back(static_cast<std::size_t>(it - pairs[b].begin()));
    }
  }
  return DSet(c, names, maps);
}

}  // namespace hocofin
