#include "hocofin/gz.hpp"

#include "hocofin/error.hpp"
#include "hocofin/parallel.hpp"

namespace hocofin {

namespace {

void require_base(const FinCat& have, const FinCat& want, const std::string& what) {
  if (!(have == want)) fail(ErrorCode::InvalidInput, what);
}

Word shift(const Word& w, std::size_t offset) {
  Word out = w;
  for (auto& l : out) l.factor += offset;
  return out;
}

bool same_n0(const std::optional<DegreeZero>& a, const std::optional<DegreeZero>& b) {
  if (!a || !b || !a->fingerprint || !b->fingerprint) return true;
  return *a->fingerprint == *b->fingerprint;
}

std::string show(const std::vector<AbelianInvariants>& h) {
  std::string s;
  for (const auto& g : h) s += (s.empty() ? "" : "; ") + g.to_string();
  return s;
}

}  // namespace

DegreeZero degree_zero(const GroupDiagram& g) {
  DegreeZero out{colim0(g), std::nullopt};
  try {
    out.fingerprint = fingerprint(out.presentation);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
  }
  return out;
}

GroupDiagram lan_along_elements(const DSet& x, const GroupDiagram& g) {
  ElementsCategory ex = elements(x);
  require_base(g.base(), opposite(ex.category), "coefficients are not over the opposite elements category");
  const FinCat& d = x.base();
  const FinCat dop = opposite(d);
  std::vector<FreeProduct> values;
  std::vector<std::vector<std::size_t>> offset(d.num_objects());
  for (std::size_t a = 0; a < d.num_objects(); ++a) {
    std::vector<std::pair<std::string, FinGroup>> factors;
    for (std::size_t e = 0; e < x.size(a); ++e) {
      offset[a].push_back(factors.size());
      const FreeProduct& v = g.value(ex.index.at({a, e}));
      for (const auto& [label, grp] : v.factors()) factors.emplace_back(x.name(a, e) + ":" + label, grp);
    }
    values.emplace_back(std::move(factors));
  }
  std::vector<GroupHom> actions;
  for (std::size_t m = 0; m < d.num_morphisms(); ++m) {
    const std::size_t a = dop.dom(m), b = dop.cod(m);
    std::vector<std::vector<Word>> per;
    for (std::size_t e = 0; e < x.size(a); ++e) {
      const std::size_t y = x.act(m, e);
      const std::size_t src = ex.index.at({a, e}), tgt = ex.index.at({b, y});
      const GroupHom& h = g.action(ex.morphism_index.at({tgt, src, m}));
      for (std::size_t f = 0; f < h.source().num_factors(); ++f) {
        std::vector<Word> img;
        for (std::size_t k = 0; k < h.source().factor(f).order(); ++k) img.push_back(shift(h.image(f, k), offset[b][y]));
        per.push_back(std::move(img));
      }
    }
    actions.emplace_back(values[a], values[b], std::move(per));
  }
  return GroupDiagram(dop, values, actions);
}

AbDiagram lan_along_elements(const DSet& x, const AbDiagram& m) {
  ElementsCategory ex = elements(x);
  require_base(m.base(), opposite(ex.category), "coefficients are not over the opposite elements category");
  const FinCat& d = x.base();
  const FinCat dop = opposite(d);
  std::vector<FGAb> values;
  std::vector<std::vector<std::size_t>> offset(d.num_objects());
  for (std::size_t a = 0; a < d.num_objects(); ++a) {
    std::vector<FGAb> parts;
    std::size_t at = 0;
    for (std::size_t e = 0; e < x.size(a); ++e) {
      offset[a].push_back(at);
      parts.push_back(m.value(ex.index.at({a, e})));
      at += parts.back().gens();
    }
    values.push_back(FGAb::direct_sum(parts));
  }
  std::vector<IntMatrix> matrices;
  for (std::size_t k = 0; k < d.num_morphisms(); ++k) {
    const std::size_t a = dop.dom(k), b = dop.cod(k);
    IntMatrix out(values[b].gens(), values[a].gens());
    for (std::size_t e = 0; e < x.size(a); ++e) {
      const std::size_t y = x.act(k, e);
      const std::size_t src = ex.index.at({a, e}), tgt = ex.index.at({b, y});
      const IntMatrix& blk = m.matrix(ex.morphism_index.at({tgt, src, k}));
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c) out(offset[b][y] + r, offset[a][e] + c) = blk(r, c);
    }
    matrices.push_back(std::move(out));
  }
  return AbDiagram(dop, values, matrices);
}

namespace {

GzResult cross_check(GzResult r) {
  r.routes_agree = r.abelian == r.lan_route && same_n0(r.n0, r.n0_lan);
  if (!r.routes_agree)
    fail(ErrorCode::RouteMismatch, "elements route gives " + show(r.abelian) + ", Lan route gives " + show(r.lan_route));
  return r;
}

}  // namespace

GzResult gz_homology(const DSet& x, const GroupDiagram& g, std::size_t n_max, std::size_t cap) {
  GroupDiagram lan = lan_along_elements(x, g);
  GzResult r;
  parallel_for(2, [&](std::size_t route) {
    if (route == 0) {
      r.n0 = degree_zero(g);
      r.abelian = ab_colim_derived(abelianize_diagram(g), n_max, cap);
    } else {
      r.n0_lan = degree_zero(lan);
      r.lan_route = ab_colim_derived(abelianize_diagram(lan), n_max, cap);
    }
  });
  return cross_check(std::move(r));
}

GzResult gz_homology(const DSet& x, const AbDiagram& m, std::size_t n_max, std::size_t cap) {
  AbDiagram lan = lan_along_elements(x, m);
  GzResult r;
  parallel_for(2, [&](std::size_t route) {
    if (route == 0)
      r.abelian = ab_colim_derived(m, n_max, cap);
    else
      r.lan_route = ab_colim_derived(lan, n_max, cap);
  });
  return cross_check(std::move(r));
}

Functor elements_functor_op(const DSetMorphism& f) {
  return opposite(elements_functor(f, elements(f.source()), elements(f.target())));
}

GroupDiagram direct_image(const DSetMorphism& f, const GroupDiagram& g) {
  return kan_extend_vdc(elements_functor_op(f), g);
}

AbDiagram direct_image(const DSetMorphism& f, const AbDiagram& m) { return kan_extend_vdc(elements_functor_op(f), m); }

GroupDiagram inverse_image(const DSetMorphism& f, const GroupDiagram& g) { return pullback(g, elements_functor_op(f)); }

AbDiagram inverse_image(const DSetMorphism& f, const AbDiagram& m) { return pullback(m, elements_functor_op(f)); }

namespace {

bool results_agree(const GzResult& a, const GzResult& b) { return a.abelian == b.abelian && same_n0(a.n0, b.n0); }

}  // namespace

ImageComparison dliso_check(const DSetMorphism& f, const GroupDiagram& g, std::size_t n_max) {
  ImageComparison r;
  r.lhs = gz_homology(f.source(), g, n_max);
  r.rhs = gz_homology(f.target(), direct_image(f, g), n_max);
  r.agree = results_agree(r.lhs, r.rhs);
  return r;
}

ImageComparison dhiso_check(const DSetMorphism& f, const GroupDiagram& g, std::size_t n_max,
                            const CertifyOptions& opts) {
  ImageComparison r;
  const DSet& y = f.target();
  std::vector<std::pair<std::size_t, std::size_t>> points;
  for (std::size_t d = 0; d < y.base().num_objects(); ++d)
    for (std::size_t e = 0; e < y.size(d); ++e) points.emplace_back(d, e);
  std::vector<ContractibilityCertificate> certs(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    certs[i] = certify_contractible(elements(inverse_fibre(f, points[i].first, points[i].second)).category, opts);
  });
  for (std::size_t i = 0; i < points.size(); ++i) {
    Verdict v = weakest(r.hypothesis, certs[i].verdict);
    if (v != r.hypothesis) {
      r.hypothesis = v;
      r.witness = "fibre over (" + y.base().object_name(points[i].first) + "," + y.name(points[i].first, points[i].second) +
                  "): " + certs[i].reason + (certs[i].witness.empty() ? "" : ", " + certs[i].witness);
    }
  }
  r.lhs = gz_homology(f.source(), inverse_image(f, g), n_max);
  r.rhs = gz_homology(y, g, n_max);
  r.agree = results_agree(r.lhs, r.rhs);
  return r;
}

AndreResult andre_homology(const DSet& x, const GroupDiagram& g, std::size_t n_max) {
  require_base(g.base(), x.base(), "diagram is not over the base of the D-set");
  ElementsCategory ex = elements(x);
  GroupDiagram pulled = pullback(g, ex.projection);
  AndreResult r;
  r.n0 = degree_zero(pulled);
  r.abelian = ab_colim_derived(abelianize_diagram(pulled), n_max);
  std::optional<GroupDiagram> inv;
  try {
    inv = inverted(pulled);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidInput) throw;
  }
  if (inv) {
    r.inverted = gz_homology(x, *inv, n_max);
    r.inverted_agrees = r.abelian == r.inverted->abelian && same_n0(r.n0, r.inverted->n0);
  }
  return r;
}

ChainComplex bw_nerve_complex(const FinCat& c, const AbDiagram& m, std::size_t top, std::size_t cap) {
  Factorization fc = factorization(c);
  require_base(m.base(), opposite(fc.category), "natural system is not over the opposite factorization category");
  ChainCoefficients k;
  k.value = [c, m](const Chain& s) { return m.value(chain_composite(c, s)); };
  k.face = [c, m, fc](const Chain& s, std::size_t i) {
    const std::size_t n = s.length();
    if (i == 0) {
      const std::size_t f = chain_composite(c, chain_face(c, s, 0));
      return m.matrix(fc.morphism_for(f, s.mors[0], c.identity(chain_object(c, s, n))));
    }
    if (i == n) {
      const std::size_t f = chain_composite(c, chain_face(c, s, n));
      return m.matrix(fc.morphism_for(f, c.identity(s.c0), s.mors[n - 1]));
    }
    return IntMatrix::identity(m.value(chain_composite(c, s)).gens());
  };
  return normalized_complex(c, k, top, cap);
}

BwResult bw_homology(const FinCat& c, const AbDiagram& m, std::size_t n_max, std::size_t cap) {
  BwResult r;
  parallel_for(2, [&](std::size_t route) {
    if (route == 0)
      r.factorization_route = ab_colim_derived(m, n_max, cap);
    else
      r.nerve_route = complex_homology(bw_nerve_complex(c, m, n_max + 1, cap), n_max);
  });
  r.routes_agree = r.factorization_route == r.nerve_route;
  if (!r.routes_agree)
    fail(ErrorCode::RouteMismatch, "factorization route gives " + show(r.factorization_route) + ", nerve route gives " +
                                       show(r.nerve_route));
  return r;
}

BwResult bw_homology(const FinCat& c, const GroupDiagram& g, std::size_t n_max, std::size_t cap) {
  BwResult r = bw_homology(c, abelianize_diagram(g), n_max, cap);
  r.n0 = degree_zero(g);
  return r;
}

BwComparison confhomol_bw_check(const Functor& s, const GroupDiagram& g, std::size_t n_max,
                                const CertifyOptions& opts) {
  BwComparison r;
  const FinCat& d = s.target();
  std::vector<ContractibilityCertificate> certs(d.num_morphisms());
  parallel_for(d.num_morphisms(), [&](std::size_t a) { certs[a] = certify_contractible(factor_slice(s, a).category, opts); });
  for (std::size_t a = 0; a < d.num_morphisms(); ++a) {
    Verdict v = weakest(r.hypothesis, certs[a].verdict);
    if (v != r.hypothesis) {
      r.hypothesis = v;
      r.witness = "S<" + d.morphism_name(a) + ">: " + certs[a].reason +
                  (certs[a].witness.empty() ? "" : ", " + certs[a].witness);
    }
  }
  r.lhs = bw_homology(s.source(), pullback(g, opposite(factor_functor(s))), n_max);
  r.rhs = bw_homology(d, g, n_max);
  r.agree = r.lhs.factorization_route == r.rhs.factorization_route && same_n0(r.lhs.n0, r.rhs.n0);
  return r;
}

}  // namespace hocofin
