#include "hocofin/diagrams.hpp"

#include <algorithm>

#include "hocofin/cofinal.hpp"
#include "hocofin/error.hpp"

namespace hocofin {

GroupDiagram::GroupDiagram(FinCat base, std::vector<FreeProduct> values, std::vector<GroupHom> actions)
    : base_(std::move(base)), values_(std::move(values)), actions_(std::move(actions)) {
  const FinCat& c = base_;
  if (values_.size() != c.num_objects()) fail(ErrorCode::InvalidInput, "one group per object");
  if (actions_.size() != c.num_morphisms()) fail(ErrorCode::InvalidInput, "one homomorphism per morphism");
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    if (!(actions_[m].source() == values_[c.dom(m)]) || !(actions_[m].target() == values_[c.cod(m)]))
      fail(ErrorCode::FunctorViolation, "homomorphism of '" + c.morphism_name(m) + "' has wrong endpoints");
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (!actions_[c.identity(x)].is_identity())
      fail(ErrorCode::FunctorViolation, "identity of '" + c.object_name(x) + "' acts non-trivially");
  for (std::size_t f = 0; f < c.num_morphisms(); ++f)
    for (std::size_t g : c.out_of(c.cod(f))) {
      if (c.is_identity(f) || c.is_identity(g)) continue;
      if (!(compose(actions_[g], actions_[f]) == actions_[c.compose(g, f)]))
        fail(ErrorCode::FunctorViolation,
             "G(" + c.morphism_name(g) + " o " + c.morphism_name(f) + ") differs from the composite");
    }
}

GroupDiagram constant_diagram(const FinCat& c, const FreeProduct& g) {
  return GroupDiagram(c, std::vector<FreeProduct>(c.num_objects(), g),
                      std::vector<GroupHom>(c.num_morphisms(), identity_hom(g)));
}

GroupDiagram pullback(const GroupDiagram& g, const Functor& s) {
  if (!(s.target() == g.base())) fail(ErrorCode::InvalidInput, "functor target is not the diagram base");
  std::vector<FreeProduct> values;
  std::vector<GroupHom> actions;
  for (std::size_t c = 0; c < s.source().num_objects(); ++c) values.push_back(g.value(s.obj(c)));
  for (std::size_t m = 0; m < s.source().num_morphisms(); ++m) actions.push_back(g.action(s.mor(m)));
  return GroupDiagram(s.source(), values, actions);
}

GroupDiagram inverted(const GroupDiagram& g) {
  std::vector<GroupHom> actions;
  for (std::size_t m = 0; m < g.base().num_morphisms(); ++m) {
    auto inv = invert(g.action(m));
    if (!inv) fail(ErrorCode::InvalidInput, "action of '" + g.base().morphism_name(m) + "' is not invertible");
    actions.push_back(*inv);
  }
  return GroupDiagram(opposite(g.base()), g.values(), actions);
}

namespace {

bool columns_in_lattice(const IntMatrix& a, const FGAb& target) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!target.contains_relation(a.column(j))) return false;
  return true;
}

IntMatrix difference(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  return out;
}

}  // namespace

AbDiagram::AbDiagram(FinCat base, std::vector<FGAb> values, std::vector<IntMatrix> matrices)
    : base_(std::move(base)), values_(std::move(values)), matrices_(std::move(matrices)) {
  const FinCat& c = base_;
  if (values_.size() != c.num_objects()) fail(ErrorCode::InvalidInput, "one group per object");
  if (matrices_.size() != c.num_morphisms()) fail(ErrorCode::InvalidInput, "one matrix per morphism");
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    const FGAb &src = values_[c.dom(m)], &dst = values_[c.cod(m)];
    const IntMatrix& a = matrices_[m];
    if (a.rows() != dst.gens() || a.cols() != src.gens())
      fail(ErrorCode::FunctorViolation, "matrix of '" + c.morphism_name(m) + "' has wrong shape");
    if (!columns_in_lattice(a * src.rels(), dst))
      fail(ErrorCode::FunctorViolation, "matrix of '" + c.morphism_name(m) + "' does not respect relations");
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (!columns_in_lattice(difference(matrices_[x], IntMatrix::identity(values_[x].gens())), values_[x]))
      fail(ErrorCode::FunctorViolation, "identity of '" + c.object_name(x) + "' acts non-trivially");
  for (std::size_t f = 0; f < c.num_morphisms(); ++f)
    for (std::size_t g : c.out_of(c.cod(f))) {
      if (c.is_identity(f) || c.is_identity(g)) continue;
      if (!columns_in_lattice(difference(matrices_[c.compose(g, f)], matrices_[g] * matrices_[f]), values_[c.cod(g)]))
        fail(ErrorCode::FunctorViolation,
             "M(" + c.morphism_name(g) + " o " + c.morphism_name(f) + ") differs from the composite");
    }
}

AbDiagram constant_diagram(const FinCat& c, const FGAb& a) {
  return AbDiagram(c, std::vector<FGAb>(c.num_objects(), a),
                   std::vector<IntMatrix>(c.num_morphisms(), IntMatrix::identity(a.gens())));
}

AbDiagram pullback(const AbDiagram& m, const Functor& s) {
  if (!(s.target() == m.base())) fail(ErrorCode::InvalidInput, "functor target is not the diagram base");
  std::vector<FGAb> values;
  std::vector<IntMatrix> matrices;
  for (std::size_t c = 0; c < s.source().num_objects(); ++c) values.push_back(m.value(s.obj(c)));
  for (std::size_t k = 0; k < s.source().num_morphisms(); ++k) matrices.push_back(m.matrix(s.mor(k)));
  return AbDiagram(s.source(), values, matrices);
}

AbDiagram abelianize_diagram(const GroupDiagram& g) {
  const FinCat& c = g.base();
  std::vector<AbelianizedProduct> ab;
  std::vector<FGAb> values;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    ab.push_back(abelianize(g.value(x)));
    values.push_back(ab.back().group);
  }
  std::vector<IntMatrix> matrices;
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    matrices.push_back(abelianize(g.action(m), ab[c.dom(m)], ab[c.cod(m)]));
  return AbDiagram(c, values, matrices);
}

// ---------------------------------------------------------------------------

SrepLevel srep_level(const GroupDiagram& g, std::size_t n) {
  const FinCat& c = g.base();
  SrepLevel out;
  out.degree = n;
  out.chains = all_chains(c, n);
  std::vector<std::pair<std::string, FinGroup>> factors;
  for (std::size_t k = 0; k < out.chains.size(); ++k) {
    const Chain& s = out.chains[k];
    out.index[s] = k;
    out.offsets.push_back(factors.size());
    const std::string name = chain_name(c, s);
    for (const auto& [label, grp] : g.value(s.c0).factors()) factors.emplace_back(name + "/" + label, grp);
  }
  out.group = FreeProduct(std::move(factors));
  return out;
}

namespace {

Word shift(const Word& w, std::size_t offset) {
  Word out = w;
  for (auto& l : out) l.factor += offset;
  return out;
}

}  // namespace

GroupHom srep_face(const GroupDiagram& g, std::size_t n, std::size_t i) {
  if (n == 0 || i > n) fail(ErrorCode::IndexOutOfRange, "face d" + std::to_string(i) + " on degree " + std::to_string(n));
  const FinCat& c = g.base();
  SrepLevel src = srep_level(g, n), dst = srep_level(g, n - 1);
  std::vector<std::vector<Word>> images;
  for (std::size_t k = 0; k < src.chains.size(); ++k) {
    const Chain& s = src.chains[k];
    const std::size_t target = dst.offsets[dst.index.at(chain_face(c, s, i))];
    const FreeProduct& v = g.value(s.c0);
    for (std::size_t f = 0; f < v.num_factors(); ++f) {
      std::vector<Word> img;
      for (std::size_t x = 0; x < v.factor(f).order(); ++x) {
        if (i == 0)
          img.push_back(shift(g.action(s.mors[0]).image(f, x), target));
        else
          img.push_back(dst.group.letter(target + f, x));
      }
      images.push_back(std::move(img));
    }
  }
  return GroupHom(src.group, dst.group, images);
}

GroupHom srep_degeneracy(const GroupDiagram& g, std::size_t n, std::size_t i) {
  if (i > n) fail(ErrorCode::IndexOutOfRange, "degeneracy s" + std::to_string(i) + " on degree " + std::to_string(n));
  const FinCat& c = g.base();
  SrepLevel src = srep_level(g, n), dst = srep_level(g, n + 1);
  std::vector<std::vector<Word>> images;
  for (std::size_t k = 0; k < src.chains.size(); ++k) {
    const Chain& s = src.chains[k];
    const std::size_t target = dst.offsets[dst.index.at(chain_degeneracy(c, s, i))];
    const FreeProduct& v = g.value(s.c0);
    for (std::size_t f = 0; f < v.num_factors(); ++f) {
      std::vector<Word> img;
      for (std::size_t x = 0; x < v.factor(f).order(); ++x) img.push_back(dst.group.letter(target + f, x));
      images.push_back(std::move(img));
    }
  }
  return GroupHom(src.group, dst.group, images);
}

GroupPresentation colim0_raw(const GroupDiagram& g) {
  const FinCat& c = g.base();
  GroupPresentation p;
  // gen[object][factor][element], 0 for the unit
  std::vector<std::vector<std::vector<int>>> gen(c.num_objects());
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const FreeProduct& v = g.value(x);
    for (std::size_t f = 0; f < v.num_factors(); ++f) {
      const FinGroup& grp = v.factor(f);
      std::vector<int> ids(grp.order(), 0);
      for (std::size_t e = 0; e < grp.order(); ++e) {
        if (e == grp.unit()) continue;
        p.generators.push_back(c.object_name(x) + "/" + v.label(f) + "/" + grp.name(e));
        ids[e] = static_cast<int>(p.generators.size());
      }
      gen[x].push_back(std::move(ids));
    }
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const FreeProduct& v = g.value(x);
    for (std::size_t f = 0; f < v.num_factors(); ++f) {
      const FinGroup& grp = v.factor(f);
      for (std::size_t a = 0; a < grp.order(); ++a)
        for (std::size_t b = 0; b < grp.order(); ++b) {
          if (a == grp.unit() || b == grp.unit()) continue;
          std::vector<int> r{gen[x][f][a], gen[x][f][b]};
          if (std::size_t ab = grp.mul(a, b); ab != grp.unit()) r.push_back(-gen[x][f][ab]);
          p.relators.push_back(std::move(r));
        }
    }
  }
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    const std::size_t src = c.dom(m), dst = c.cod(m);
    const FreeProduct& v = g.value(src);
    for (std::size_t f = 0; f < v.num_factors(); ++f)
      for (std::size_t e = 0; e < v.factor(f).order(); ++e) {
        if (e == v.factor(f).unit()) continue;
        std::vector<int> r{gen[src][f][e]};
        const Word& w = g.action(m).image(f, e);
        for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-gen[dst][it->factor][it->element]);
        p.relators.push_back(std::move(r));
      }
  }
  return p;
}

GroupPresentation colim0(const GroupDiagram& g) { return tietze_simplify(colim0_raw(g)); }

ChainComplex replacement_complex(const AbDiagram& m, std::size_t top, std::size_t cap) {
  return normalized_complex(m.base(), replacement_coefficients(m.base(), m.values(), m.matrices()), top, cap);
}

std::vector<AbelianInvariants> ab_colim_derived(const AbDiagram& m, std::size_t n_max, std::size_t cap) {
  return complex_homology(replacement_complex(m, n_max + 1, cap), n_max);
}

// ---------------------------------------------------------------------------

std::vector<VdcFibre> vdc_fibres(const Functor& s) {
  std::vector<VdcFibre> out;
  for (std::size_t d = 0; d < s.target().num_objects(); ++d) {
    VdcFibre fib{comma_left_fibre(s, d), {}, {}, {}};
    const FinCat& l = fib.comma.category;
    FinallyDiscreteReport fd = finally_discrete(l);
    if (!fd.ok)
      fail(ErrorCode::NotVDC, "the fibre over '" + s.target().object_name(d) + "' is not finally discrete");
    fib.component.assign(l.num_objects(), 0);
    fib.to_final.assign(l.num_objects(), 0);
    for (std::size_t k = 0; k < fd.components.size(); ++k) {
      std::size_t fin = *fd.finals[k];
      fib.finals.push_back(fin);
      for (std::size_t x : fd.components[k]) {
        fib.component[x] = k;
        fib.to_final[x] = fib.comma.underlying[l.hom(x, fin).front()];
      }
    }
    out.push_back(std::move(fib));
  }
  return out;
}

namespace {

std::string final_label(const Functor& s, const VdcFibre& fib, std::size_t k) {
  auto [c, b] = fib.comma.objects[fib.finals[k]];
  return "(" + s.source().object_name(c) + "," + s.target().morphism_name(b) + ")";
}

// Comma object of S|d' reached from the final (c, b) of S|d along beta.
std::size_t transport(const Functor& s, const VdcFibre& to, std::size_t c, std::size_t b, std::size_t beta) {
  std::pair<std::size_t, std::size_t> key{c, s.target().compose(beta, b)};
  auto it = std::find(to.comma.objects.begin(), to.comma.objects.end(), key);
  return static_cast<std::size_t>(it - to.comma.objects.begin());
}

}  // namespace

GroupDiagram kan_extend_vdc(const Functor& s, const GroupDiagram& g) {
  if (!(s.source() == g.base())) fail(ErrorCode::InvalidInput, "diagram base is not the functor source");
  const FinCat& d = s.target();
  std::vector<VdcFibre> fibres = vdc_fibres(s);
  std::vector<FreeProduct> values;
  std::vector<std::vector<std::size_t>> block(d.num_objects());  // first factor of each final
  for (std::size_t x = 0; x < d.num_objects(); ++x) {
    std::vector<std::pair<std::string, FinGroup>> factors;
    for (std::size_t k = 0; k < fibres[x].finals.size(); ++k) {
      block[x].push_back(factors.size());
      std::size_t c = fibres[x].comma.objects[fibres[x].finals[k]].first;
      for (const auto& [label, grp] : g.value(c).factors())
        factors.emplace_back(final_label(s, fibres[x], k) + ":" + label, grp);
    }
    values.emplace_back(std::move(factors));
  }
  std::vector<GroupHom> actions;
  for (std::size_t beta = 0; beta < d.num_morphisms(); ++beta) {
    const std::size_t x = d.dom(beta), y = d.cod(beta);
    std::vector<std::vector<Word>> images;
    for (std::size_t k = 0; k < fibres[x].finals.size(); ++k) {
      auto [c, b] = fibres[x].comma.objects[fibres[x].finals[k]];
      std::size_t obj = transport(s, fibres[y], c, b, beta);
      std::size_t comp = fibres[y].component[obj];
      std::size_t a = fibres[y].to_final[obj];
      const FreeProduct& v = g.value(c);
      for (std::size_t f = 0; f < v.num_factors(); ++f) {
        std::vector<Word> img;
        for (std::size_t e = 0; e < v.factor(f).order(); ++e)
          img.push_back(shift(g.action(a).image(f, e), block[y][comp]));
        images.push_back(std::move(img));
      }
    }
    actions.emplace_back(values[x], values[y], images);
  }
  return GroupDiagram(d, values, actions);
}

AbDiagram kan_extend_vdc(const Functor& s, const AbDiagram& m) {
  if (!(s.source() == m.base())) fail(ErrorCode::InvalidInput, "diagram base is not the functor source");
  const FinCat& d = s.target();
  std::vector<VdcFibre> fibres = vdc_fibres(s);
  std::vector<FGAb> values;
  std::vector<std::vector<std::size_t>> block(d.num_objects());
  for (std::size_t x = 0; x < d.num_objects(); ++x) {
    std::vector<FGAb> parts;
    std::size_t at = 0;
    for (std::size_t k = 0; k < fibres[x].finals.size(); ++k) {
      block[x].push_back(at);
      parts.push_back(m.value(fibres[x].comma.objects[fibres[x].finals[k]].first));
      at += parts.back().gens();
    }
    values.push_back(FGAb::direct_sum(parts));
  }
  std::vector<IntMatrix> matrices;
  for (std::size_t beta = 0; beta < d.num_morphisms(); ++beta) {
    const std::size_t x = d.dom(beta), y = d.cod(beta);
    IntMatrix out(values[y].gens(), values[x].gens());
    for (std::size_t k = 0; k < fibres[x].finals.size(); ++k) {
      auto [c, b] = fibres[x].comma.objects[fibres[x].finals[k]];
      std::size_t obj = transport(s, fibres[y], c, b, beta);
      const IntMatrix& a = m.matrix(fibres[y].to_final[obj]);
      const std::size_t row0 = block[y][fibres[y].component[obj]], col0 = block[x][k];
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t q = 0; q < a.cols(); ++q) out(row0 + r, col0 + q) = a(r, q);
    }
    matrices.push_back(std::move(out));
  }
  return AbDiagram(d, values, matrices);
}

}  // namespace hocofin
