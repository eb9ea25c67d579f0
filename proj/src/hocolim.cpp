#include "hocofin/hocolim.hpp"

#include <map>
#include <set>

#include "hocofin/error.hpp"
#include "hocofin/parallel.hpp"

namespace hocofin {

namespace {

std::string n_str(std::size_t n) { return std::to_string(n); }

bool simplicial_map_ok(const TruncSSet& a, const TruncSSet& b, const PointedDiagram::Maps& f, std::size_t top) {
  for (std::size_t n = 1; n <= top; ++n)
    for (std::size_t x = 0; x < a.count(n); ++x)
      for (std::size_t i = 0; i <= n; ++i)
        if (f[n - 1][a.face(n, i, x)] != b.face(n, i, f[n][x])) return false;
  for (std::size_t n = 0; n < top; ++n)
    for (std::size_t x = 0; x < a.count(n); ++x)
      for (std::size_t i = 0; i <= n; ++i)
        if (f[n + 1][a.degeneracy(n, i, x)] != b.degeneracy(n, i, f[n][x])) return false;
  return true;
}

}  // namespace

PointedDiagram::PointedDiagram(FinCat base, std::vector<TruncSSet> values, std::vector<Maps> maps)
    : base_(std::move(base)), values_(std::move(values)), maps_(std::move(maps)) {
  const FinCat& c = base_;
  if (values_.size() != c.num_objects()) fail(ErrorCode::InvalidInput, "one simplicial set per object expected");
  if (maps_.size() != c.num_morphisms()) fail(ErrorCode::InvalidInput, "one map per morphism expected");
  level_ = values_.empty() ? 0 : values_[0].level();
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x].level() != level_)
      fail(ErrorCode::LevelMismatch, "value at '" + c.object_name(x) + "' has level " + n_str(values_[x].level()) +
                                         ", expected " + n_str(level_));
    if (!values_[x].basepoint()) fail(ErrorCode::InvalidInput, "value at '" + c.object_name(x) + "' is not pointed");
  }
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const TruncSSet& a = values_[c.dom(m)];
    const TruncSSet& b = values_[c.cod(m)];
    const std::string name = "'" + c.morphism_name(m) + "'";
    if (maps_[m].size() != level_ + 1) fail(ErrorCode::InvalidInput, "map of " + name + " has wrong depth");
    for (std::size_t n = 0; n <= level_; ++n) {
      if (maps_[m][n].size() != a.count(n)) fail(ErrorCode::InvalidInput, "map of " + name + " has wrong size");
      for (std::size_t v : maps_[m][n])
        if (v >= b.count(n)) fail(ErrorCode::InvalidInput, "map of " + name + " leaves its target");
    }
    if (maps_[m][0][*a.basepoint()] != *b.basepoint())
      fail(ErrorCode::FunctorViolation, "map of " + name + " moves the basepoint");
    if (!simplicial_map_ok(a, b, maps_[m], level_))
      fail(ErrorCode::FunctorViolation, "map of " + name + " is not simplicial");
    if (c.is_identity(m))
      for (std::size_t n = 0; n <= level_; ++n)
        for (std::size_t x = 0; x < a.count(n); ++x)
          if (maps_[m][n][x] != x) fail(ErrorCode::FunctorViolation, "identity " + name + " acts nontrivially");
  }
  for (std::size_t g = 0; g < c.num_morphisms(); ++g)
    for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
      if (c.dom(g) != c.cod(f)) continue;
      const std::size_t gf = c.compose(g, f);
      for (std::size_t n = 0; n <= level_; ++n)
        for (std::size_t x = 0; x < values_[c.dom(f)].count(n); ++x)
          if (maps_[gf][n][x] != maps_[g][n][maps_[f][n][x]])
            fail(ErrorCode::FunctorViolation,
                 "X(" + c.morphism_name(g) + " o " + c.morphism_name(f) + ") differs from the composite");
    }
}

TruncSSet point_sset(std::size_t level) {
  TruncSSet::Table faces(level + 1), degens(level);
  for (std::size_t n = 1; n <= level; ++n) faces[n].assign(n + 1, {0});
  for (std::size_t n = 0; n < level; ++n) degens[n].assign(n + 1, {0});
  return TruncSSet(std::vector<std::size_t>(level + 1, 1), faces, degens, 0);
}

TruncSSet simplicial_circle(std::size_t level) {
  // Delta[1]_n = monotone maps [n] -> [1], coded by the number k of zeros;
  // k = 0 and k = n + 1 are the two constant maps, both sent to simplex 0.
  auto code = [](std::size_t n, std::size_t k) { return (k == 0 || k == n + 1) ? 0 : k; };
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::string>> names(level + 1);
  for (std::size_t n = 0; n <= level; ++n) {
    counts.push_back(n + 1);
    names[n].push_back("*");
    for (std::size_t k = 1; k <= n; ++k) names[n].push_back(std::string(k, '0') + std::string(n + 1 - k, '1'));
  }
  TruncSSet::Table faces(level + 1), degens(level);
  for (std::size_t n = 1; n <= level; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<std::size_t> f(n + 1, 0);
      for (std::size_t k = 1; k <= n; ++k) f[k] = code(n - 1, i < k ? k - 1 : k);
      faces[n].push_back(f);
    }
  for (std::size_t n = 0; n < level; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<std::size_t> s(n + 1, 0);
      for (std::size_t k = 1; k <= n; ++k) s[k] = code(n + 1, i < k ? k + 1 : k);
      degens[n].push_back(s);
    }
  return TruncSSet(counts, faces, degens, 0, names);
}

PointedDiagram constant_point_diagram(const FinCat& c, std::size_t level) {
  PointedDiagram::Maps ident(level + 1, std::vector<std::size_t>{0});
  return PointedDiagram(c, std::vector<TruncSSet>(c.num_objects(), point_sset(level)),
                        std::vector<PointedDiagram::Maps>(c.num_morphisms(), ident));
}

PointedDiagram pullback(const PointedDiagram& x, const Functor& s) {
  if (!(s.target() == x.base())) fail(ErrorCode::InvalidInput, "functor target is not the diagram base");
  std::vector<TruncSSet> values;
  std::vector<PointedDiagram::Maps> maps;
  for (std::size_t c = 0; c < s.source().num_objects(); ++c) values.push_back(x.value(s.obj(c)));
  for (std::size_t m = 0; m < s.source().num_morphisms(); ++m) maps.push_back(x.maps()[s.mor(m)]);
  return PointedDiagram(s.source(), values, maps);
}

namespace {

FinCat group_category(const FinGroup& g) { return monoid_category(g.elements(), g.unit(), g.table()); }

// Morphism of group_category(g) carrying the element e.
std::size_t element_morphism(const FinGroup& g, std::size_t e) {
  if (e == g.unit()) return 0;
  return e < g.unit() ? e + 1 : e;
}

std::size_t morphism_element(const FinGroup& g, std::size_t m) {
  if (m == 0) return g.unit();
  return m <= g.unit() ? m - 1 : m;
}

// The only nontrivial factor of a free product, if any.
std::optional<std::size_t> sole_factor(const FreeProduct& g) {
  std::optional<std::size_t> out;
  for (std::size_t i = 0; i < g.num_factors(); ++i) {
    if (g.factor(i).is_trivial()) continue;
    if (out)
      fail(ErrorCode::CapExceeded, "free product with several nontrivial factors has an infinite classifying space");
    out = i;
  }
  return out;
}

FinGroup sole_group(const FreeProduct& g) {
  auto f = sole_factor(g);
  return f ? g.factor(*f) : FinGroup();
}

}  // namespace

TruncSSet classifying_space(const FinGroup& g, std::size_t level) {
  return nerve(group_category(g), level).with_basepoint(0);
}

TruncSSet classifying_space(const FreeProduct& g, std::size_t level) {
  return classifying_space(sole_group(g), level);
}

PointedDiagram classifying_diagram(const GroupDiagram& g, std::size_t level) {
  const FinCat& c = g.base();
  std::vector<FinGroup> groups;
  std::vector<Nerve> nerves;
  std::vector<std::vector<std::map<Chain, std::size_t>>> index(c.num_objects());
  std::vector<TruncSSet> values;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    groups.push_back(sole_group(g.value(x)));
    nerves.push_back(nerve_with_chains(group_category(groups[x]), level));
    index[x].resize(level + 1);
    for (std::size_t n = 0; n <= level; ++n)
      for (std::size_t k = 0; k < nerves[x].chains[n].size(); ++k) index[x][n][nerves[x].chains[n][k]] = k;
    values.push_back(nerves[x].sset.with_basepoint(0));
  }
  std::vector<PointedDiagram::Maps> maps;
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const std::size_t a = c.dom(m), b = c.cod(m);
    const GroupHom& phi = g.action(m);
    auto fa = sole_factor(g.value(a));
    auto fb = sole_factor(g.value(b));
    // element map on the sole factors
    std::vector<std::size_t> elem(groups[a].order(), groups[b].unit());
    if (fa)
      for (std::size_t e = 0; e < groups[a].order(); ++e) {
        const Word& w = phi.image(*fa, e);
        if (w.empty()) continue;
        if (w.size() != 1 || !fb || w[0].factor != *fb)
          fail(ErrorCode::InvalidInput, "action of '" + c.morphism_name(m) + "' leaves the nontrivial factor");
        elem[e] = w[0].element;
      }
    PointedDiagram::Maps f(level + 1);
    for (std::size_t n = 0; n <= level; ++n)
      for (const Chain& s : nerves[a].chains[n]) {
        Chain t{0, {}};
        for (std::size_t mor : s.mors)
          t.mors.push_back(element_morphism(groups[b], elem[morphism_element(groups[a], mor)]));
        f[n].push_back(index[b][n].at(t));
      }
    maps.push_back(std::move(f));
  }
  return PointedDiagram(c, values, maps);
}

namespace {

HocolimIndex make_index(const FinCat& c, const PointedDiagram& x, std::size_t level, bool pointed) {
  HocolimIndex ix;
  ix.chains.resize(level + 1);
  ix.offsets.resize(level + 1);
  ix.chain_index.resize(level + 1);
  for (std::size_t n = 0; n <= level; ++n) {
    ix.chains[n] = all_chains(c, n);
    std::size_t at = pointed ? 1 : 0;
    for (std::size_t k = 0; k < ix.chains[n].size(); ++k) {
      ix.chain_index[n][ix.chains[n][k]] = k;
      ix.offsets[n].push_back(at);
      at += x.value(ix.chains[n][k].c0).count(n) - (pointed ? 1 : 0);
    }
    ix.offsets[n].push_back(at);  // total
  }
  return ix;
}

void check_level(const PointedDiagram& x, std::size_t level) {
  if (level > x.level())
    fail(ErrorCode::LevelMismatch, "requested level " + n_str(level) + " exceeds the diagram level " + n_str(x.level()));
}

TruncSSet diagonal(const PointedDiagram& x, std::size_t level, bool pointed, HocolimIndex* out) {
  check_level(x, level);
  const FinCat& c = x.base();
  HocolimIndex ix = make_index(c, x, level, pointed);
  // index of (chain, simplex) in degree n
  auto at = [&](std::size_t n, const Chain& s, std::size_t v) -> std::size_t {
    const TruncSSet& val = x.value(s.c0);
    const std::size_t k = ix.chain_index[n].at(s);
    if (!pointed) return ix.offsets[n][k] + v;
    const std::size_t b = val.basepoint_at(n);
    if (v == b) return 0;
    return ix.offsets[n][k] + (v < b ? v : v - 1);
  };
  std::vector<std::size_t> counts(level + 1);
  for (std::size_t n = 0; n <= level; ++n) counts[n] = ix.offsets[n].back();
  TruncSSet::Table faces(level + 1), degens(level);
  std::vector<std::vector<std::string>> names(level + 1);
  parallel_for(level + 1, [&](std::size_t n) {
    if (n > 0) faces[n].assign(n + 1, std::vector<std::size_t>(counts[n], 0));
    if (n < level) degens[n].assign(n + 1, std::vector<std::size_t>(counts[n], 0));
    names[n].assign(counts[n], "*");
    for (const Chain& s : ix.chains[n]) {
      const TruncSSet& val = x.value(s.c0);
      for (std::size_t v = 0; v < val.count(n); ++v) {
        const std::size_t y = at(n, s, v);
        if (pointed && y == 0) continue;
        names[n][y] = chain_name(c, s) + ":" + val.name(n, v);
        for (std::size_t i = 1; i <= n && n > 0; ++i) faces[n][i][y] = at(n - 1, chain_face(c, s, i), val.face(n, i, v));
        if (n > 0) {
          const std::size_t moved = x.apply(s.mors[0], n, v);
          const Chain d0 = chain_face(c, s, 0);
          faces[n][0][y] = at(n - 1, d0, x.value(d0.c0).face(n, 0, moved));
        }
        if (n < level)
          for (std::size_t i = 0; i <= n; ++i)
            degens[n][i][y] = at(n + 1, chain_degeneracy(c, s, i), val.degeneracy(n, i, v));
      }
    }
  });
  if (out) *out = ix;
  std::optional<std::size_t> base;
  if (pointed) base = 0;
  return TruncSSet(counts, faces, degens, base, names);
}

}  // namespace

TruncSSet hocolim_unpointed(const PointedDiagram& x, std::size_t level, HocolimIndex* index) {
  return diagonal(x, level, false, index);
}

TruncSSet hocolim_pointed(const PointedDiagram& x, std::size_t level) { return diagonal(x, level, true, nullptr); }

LcodecarReport lcodecar_check(const PointedDiagram& x, std::size_t level) {
  LcodecarReport r;
  auto bad = [&](const std::string& w) {
    if (r.ok) r.witness = w;
    r.ok = false;
  };
  const FinCat& c = x.base();
  HocolimIndex ix;
  TruncSSet u = hocolim_unpointed(x, level, &ix);
  TruncSSet p = hocolim_pointed(x, level);
  Nerve bc = nerve_with_chains(c, level);
  // inclusion of the nerve
  std::vector<std::vector<std::size_t>> inc(level + 1);
  std::vector<std::vector<bool>> in_image(level + 1);
  for (std::size_t n = 0; n <= level; ++n) {
    in_image[n].assign(u.count(n), false);
    for (const Chain& s : bc.chains[n]) {
      const std::size_t y = ix.offsets[n][ix.chain_index[n].at(s)] + x.value(s.c0).basepoint_at(n);
      if (in_image[n][y]) bad("inclusion not injective in degree " + n_str(n) + " at " + chain_name(c, s));
      in_image[n][y] = true;
      inc[n].push_back(y);
    }
    r.nerve_counts.push_back(bc.sset.count(n));
    r.total_counts.push_back(u.count(n));
  }
  for (std::size_t n = 0; n <= level; ++n)
    for (std::size_t k = 0; k < bc.sset.count(n); ++k) {
      for (std::size_t i = 0; n > 0 && i <= n; ++i)
        if (u.face(n, i, inc[n][k]) != inc[n - 1][bc.sset.face(n, i, k)])
          bad("inclusion does not commute with d" + n_str(i) + " at " + bc.sset.name(n, k));
      for (std::size_t i = 0; n < level && i <= n; ++i)
        if (u.degeneracy(n, i, inc[n][k]) != inc[n + 1][bc.sset.degeneracy(n, i, k)])
          bad("inclusion does not commute with s" + n_str(i) + " at " + bc.sset.name(n, k));
    }
  // quotient by the image: one class for the image, singletons elsewhere
  std::vector<std::vector<std::size_t>> q(level + 1);
  for (std::size_t n = 0; n <= level; ++n) {
    std::size_t next = 1;
    for (std::size_t y = 0; y < u.count(n); ++y) q[n].push_back(in_image[n][y] ? 0 : next++);
    r.quotient_counts.push_back(next);
    if (next != p.count(n))
      bad("quotient has " + n_str(next) + " simplices in degree " + n_str(n) + ", pointed hocolim has " +
          n_str(p.count(n)));
  }
  if (!r.ok) return r;
  for (std::size_t n = 0; n <= level; ++n)
    for (std::size_t y = 0; y < u.count(n); ++y) {
      if (q[n][y] != 0 && u.name(n, y) != p.name(n, q[n][y]))
        bad("quotient identifies " + u.name(n, y) + " with " + p.name(n, q[n][y]));
      for (std::size_t i = 0; n > 0 && i <= n; ++i)
        if (q[n - 1][u.face(n, i, y)] != p.face(n, i, q[n][y]))
          bad("quotient does not commute with d" + n_str(i) + " at " + u.name(n, y));
      for (std::size_t i = 0; n < level && i <= n; ++i)
        if (q[n + 1][u.degeneracy(n, i, y)] != p.degeneracy(n, i, q[n][y]))
          bad("quotient does not commute with s" + n_str(i) + " at " + u.name(n, y));
    }
  return r;
}

std::optional<std::vector<std::uint64_t>> pi1_fingerprint(const TruncSSet& x) {
  try {
    return fingerprint(tietze_simplify(edge_path_group(x)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    return std::nullopt;
  }
}

HocolimComparison cofinal_hocolim_compare(const Functor& s, const PointedDiagram& x, std::size_t level,
                                          std::size_t n_max, const CertifyOptions& opts) {
  HocolimComparison r;
  r.hypothesis = certify_homotopy_cofinal(s, false, opts).aggregate;
  r.label = r.hypothesis == Verdict::Contractible      ? "certified"
            : r.hypothesis == Verdict::NonContractible ? "unconditional comparison"
                                                       : "conditional";
  PointedDiagram xs = pullback(x, s);
  TruncSSet lhs = hocolim_pointed(xs, level), rhs = hocolim_pointed(x, level);
  r.lhs_homology = homology_ss(lhs, n_max);
  r.rhs_homology = homology_ss(rhs, n_max);
  if (s.source().num_objects() > 0 && s.target().num_objects() > 0) {
    r.lhs_pi1 = pi1_fingerprint(lhs);
    r.rhs_pi1 = pi1_fingerprint(rhs);
  }

  // (sigma, v) |-> (S sigma, v) on the unpointed diagonals
  HocolimIndex li, ri;
  TruncSSet ul = hocolim_unpointed(xs, level, &li), ur = hocolim_unpointed(x, level, &ri);
  std::vector<std::vector<std::size_t>> f(level + 1);
  for (std::size_t n = 0; n <= level; ++n)
    for (const Chain& sigma : li.chains[n]) {
      Chain t{s.obj(sigma.c0), {}};
      for (std::size_t m : sigma.mors) t.mors.push_back(s.mor(m));
      const std::size_t base = ri.offsets[n][ri.chain_index[n].at(t)];
      for (std::size_t v = 0; v < xs.value(sigma.c0).count(n); ++v) f[n].push_back(base + v);
    }
  r.map_is_simplicial = simplicial_map_ok(ul, ur, f, level);

  r.agree = r.lhs_homology == r.rhs_homology;
  if (r.lhs_pi1 && r.rhs_pi1) r.agree = r.agree && *r.lhs_pi1 == *r.rhs_pi1;
  return r;
}

}  // namespace hocofin
