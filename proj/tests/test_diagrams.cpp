#include <doctest.h>

#include <functional>

#include "hocofin/diagrams.hpp"
#include "hocofin/error.hpp"
#include "hocofin/fixtures.hpp"
#include "oracles.hpp"

using namespace hocofin;
namespace fx = hocofin::fixtures;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

std::string show(const std::vector<AbelianInvariants>& h) {
  std::string s;
  for (const auto& g : h) s += (s.empty() ? "" : "; ") + g.to_string();
  return s;
}

// Cokernel of  (+)_alpha M(dom alpha) -> (+)_c M(c),  x |-> M(alpha) x - x,
// assembled directly as one presentation.
AbelianInvariants coequalizer(const AbDiagram& m) {
  const FinCat& c = m.base();
  std::vector<std::size_t> offset;
  std::size_t gens = 0;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    offset.push_back(gens);
    gens += m.value(x).gens();
  }
  std::vector<std::vector<BigInt>> cols;
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const IntMatrix& r = m.value(x).rels();
    for (std::size_t j = 0; j < r.cols(); ++j) {
      std::vector<BigInt> v(gens);
      for (std::size_t i = 0; i < r.rows(); ++i) v[offset[x] + i] = r(i, j);
      cols.push_back(v);
    }
  }
  for (std::size_t a = 0; a < c.num_morphisms(); ++a) {
    if (c.is_identity(a)) continue;
    const IntMatrix& ma = m.matrix(a);
    for (std::size_t j = 0; j < ma.cols(); ++j) {
      std::vector<BigInt> v(gens);
      for (std::size_t i = 0; i < ma.rows(); ++i) v[offset[c.cod(a)] + i] += ma(i, j);
      v[offset[c.dom(a)] + j] -= 1;
      cols.push_back(v);
    }
  }
  IntMatrix rels(gens, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < gens; ++i) rels(i, j) = cols[j][i];
  return FGAb(gens, rels).invariants();
}

std::vector<std::uint64_t> group_fingerprint(const FinGroup& g) { return fingerprint(presentation_of(g)); }

}  // namespace

TEST_CASE("group diagrams validate functoriality") {
  for (const auto& name : fx::diagram_names()) {
    CAPTURE(name);
    CHECK_NOTHROW(fx::diagram(name));
  }
  FinCat z2 = fx::z2();
  FreeProduct g = FreeProduct::single("Z3", cyclic_group(3));
  // u u = u fails for inversion
  CHECK(code_of([&] {
          GroupDiagram(fx::idempotent(), {g}, {identity_hom(g), table_hom(g, g, {0, 2, 1})});
        }) == ErrorCode::FunctorViolation);
  CHECK(code_of([&] { GroupDiagram(z2, {g}, {table_hom(g, g, {0, 2, 1}), table_hom(g, g, {0, 2, 1})}); }) ==
        ErrorCode::FunctorViolation);
  FreeProduct z4 = FreeProduct::single("Z4", cyclic_group(4));
  CHECK_NOTHROW(GroupDiagram(z2, {z4}, {identity_hom(z4), table_hom(z4, z4, {0, 3, 2, 1})}));
  // doubling squares to zero, not the identity
  CHECK(code_of([&] { GroupDiagram(z2, {z4}, {identity_hom(z4), table_hom(z4, z4, {0, 2, 0, 2})}); }) ==
        ErrorCode::FunctorViolation);
}

TEST_CASE("abelian diagrams validate relations and functoriality") {
  FinCat z2 = fx::z2();
  FGAb c2 = FGAb::cyclic(2);
  CHECK_NOTHROW(AbDiagram(z2, {c2}, {IntMatrix{{1}}, IntMatrix{{3}}}));
  CHECK(code_of([&] { AbDiagram(z2, {FGAb::cyclic(0)}, {IntMatrix{{1}}, IntMatrix{{2}}}); }) ==
        ErrorCode::FunctorViolation);
  CHECK(code_of([&] { AbDiagram(fx::two(), {FGAb::cyclic(2), FGAb::cyclic(3)}, {IntMatrix{{1}}, IntMatrix{{1}}, IntMatrix{{1}}}); }) ==
        ErrorCode::FunctorViolation);
  CHECK(code_of([&] { AbDiagram(z2, {c2}, {IntMatrix{{1, 0}}, IntMatrix{{1}}}); }) == ErrorCode::FunctorViolation);
}

TEST_CASE("simplicial replacement faces and degeneracies") {
  GroupDiagram g = fx::diagram("two-z2-s3");
  FinCat two = g.base();
  SrepLevel l1 = srep_level(g, 1);
  // chains of length 1: id_a, u, id_b
  REQUIRE(l1.chains.size() == 3);
  std::size_t k = l1.index.at(Chain{0, {two.morphism("u")}});
  std::size_t f = l1.offsets[k];
  Word x = l1.group.letter(f, 1);
  GroupHom d0 = srep_face(g, 1, 0), d1 = srep_face(g, 1, 1);
  SrepLevel l0 = srep_level(g, 0);
  // d0 pushes forward along u, d1 forgets u
  Word image = l0.group.letter(l0.offsets[1], g.action(two.morphism("u")).image(0, 1)[0].element);
  CHECK(d0.apply(x) == image);
  CHECK(l0.group.format(d1.apply(x)) == "a/Z2:1");
  GroupHom s0 = srep_degeneracy(g, 0, 0);
  CHECK(l1.group.format(s0.apply(l0.group.letter(0, 1))) == "id_a/Z2:1");
  CHECK(code_of([&] { srep_face(g, 0, 0); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { srep_face(g, 2, 3); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { srep_degeneracy(g, 1, 2); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("simplicial identities of the simplicial replacement") {
  for (const char* name : {"two-z2-s3", "span-z2-z3", "z2-inv-z3", "chain3-z2-z4"}) {
    CAPTURE(name);
    GroupDiagram g = fx::diagram(name);
    const std::size_t top = std::string(name) == "chain3-z2-z4" ? 3 : 4;
    std::map<std::pair<std::size_t, std::size_t>, GroupHom> d, s;
    for (std::size_t n = 1; n <= top; ++n)
      for (std::size_t i = 0; i <= n; ++i) d[{n, i}] = srep_face(g, n, i);
    for (std::size_t n = 0; n < top; ++n)
      for (std::size_t i = 0; i <= n; ++i) s[{n, i}] = srep_degeneracy(g, n, i);
    for (std::size_t n = 2; n <= top; ++n)
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 0; i < j; ++i)
          CHECK(compose(d[{n - 1, i}], d[{n, j}]) == compose(d[{n - 1, j - 1}], d[{n, i}]));
    for (std::size_t n = 0; n + 2 <= top; ++n)
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= j; ++i)
          CHECK(compose(s[{n + 1, i}], s[{n, j}]) == compose(s[{n + 1, j + 1}], s[{n, i}]));
    for (std::size_t n = 0; n + 1 <= top; ++n)
      for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t i = 0; i <= n + 1; ++i) {
          GroupHom lhs = compose(d[{n + 1, i}], s[{n, j}]);
          if (i == j || i == j + 1)
            CHECK(lhs.is_identity());
          else if (i < j)
            CHECK(lhs == compose(s[{n - 1, j - 1}], d[{n, i}]));
          else
            CHECK(lhs == compose(s[{n - 1, j}], d[{n, i - 1}]));
        }
  }
}

TEST_CASE("colim0") {
  GroupPresentation span = colim0(fx::diagram("span-z2-z3"));
  CHECK(hom_count(span, symmetric_group_3()) == 12);
  CHECK(oracle::brute_force_homs(2, {{1, 1}, {2, 2, 2}}, 6, oracle::s3_mul) == 12);
  CHECK(fingerprint(span) == fingerprint(make_presentation({"x", "y"}, {{"x", "x"}, {"y", "y", "y"}})));

  // final object b
  CHECK(fingerprint(colim0(fx::diagram("two-z2-s3"))) == group_fingerprint(symmetric_group_3()));
  CHECK(fingerprint(colim0(fx::diagram("cospan-s3"))) == group_fingerprint(symmetric_group_3()));
  CHECK(fingerprint(colim0(fx::diagram("z2-triv-z3"))) == group_fingerprint(cyclic_group(3)));
  // x = x^-1 in Z/3 forces x = 1
  CHECK(fingerprint(colim0(fx::diagram("z2-inv-z3"))) == group_fingerprint(FinGroup()));
  CHECK(fingerprint(colim0(fx::diagram("chain3-z2-z4"))) == group_fingerprint(cyclic_group(4)));
  CHECK(fingerprint(colim0(fx::diagram("idempotent-z2"))) == group_fingerprint(FinGroup()));
  CHECK(fingerprint(colim0(fx::diagram("span-corep-z2"))) == group_fingerprint(cyclic_group(2)));
  GroupPresentation raw = colim0_raw(fx::diagram("span-z2-z3"));
  CHECK(raw.generators == std::vector<std::string>{"l/Z2/1", "r/Z3/1", "r/Z3/2"});
}

TEST_CASE("derived abelian colimits") {
  AbDiagram z = constant_diagram(fx::z2(), FGAb::cyclic(0));
  CHECK(show(ab_colim_derived(z, 3)) == "Z; Z/2; 0; Z/2");
  auto bar = oracle::group_homology_bar(2, [](std::size_t a, std::size_t b) { return a ^ b; }, 3);
  auto ours = ab_colim_derived(z, 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(ours[n].free_rank == bar[n].free_rank);
    REQUIRE(ours[n].torsion.size() == bar[n].torsion.size());
    for (std::size_t k = 0; k < bar[n].torsion.size(); ++k) CHECK(ours[n].torsion[k] == bar[n].torsion[k]);
  }
  CHECK(show(ab_colim_derived(abelianize_diagram(fx::diagram("span-z2-z3")), 1)) == "Z/6; 0");
  CHECK(show(ab_colim_derived(abelianize_diagram(fx::diagram("two-z2-s3")), 2)) == "Z/2; 0; 0");
  CHECK(show(ab_colim_derived(abelianize_diagram(fx::diagram("chain3-z2-z4")), 2)) == "Z/4; 0; 0");
  // H_*(Z/2; Z/3 twisted by inversion) vanishes: 2 is invertible mod 3
  CHECK(show(ab_colim_derived(abelianize_diagram(fx::diagram("z2-inv-z3")), 3)) == "0; 0; 0; 0");
  CHECK(show(ab_colim_derived(abelianize_diagram(fx::diagram("z2-triv-z3")), 2)) == "Z/3; 0; 0");
  // two nondegenerate 1-chains on the span
  CHECK(code_of([] { ab_colim_derived(abelianize_diagram(fx::diagram("span-z2-z3")), 1, 1); }) ==
        ErrorCode::TruncationUnsound);
}

TEST_CASE("degree zero is the coequalizer") {
  for (const auto& name : fx::diagram_names()) {
    CAPTURE(name);
    AbDiagram m = abelianize_diagram(fx::diagram(name));
    CHECK(ab_colim_derived(m, 0)[0] == coequalizer(m));
  }
}

TEST_CASE("abelianized diagrams") {
  GroupDiagram g = fx::diagram("cospan-s3");
  AbDiagram a = abelianize_diagram(g);
  CHECK(a.value(1).to_string() == "Z/2");
  FreeProduct fp({{"x", cyclic_group(2)}, {"y", cyclic_group(3)}});
  CHECK(abelianize_diagram(constant_diagram(fx::one(), fp)).value(0).to_string() == "Z/6");
  CHECK(abelianize_diagram(constant_diagram(fx::span(), FreeProduct())).value(0).to_string() == "0");
  // conjugation by a transposition on S3 abelianizes to the identity
  FinGroup s3 = symmetric_group_3();
  FreeProduct s = FreeProduct::single("S3", s3);
  std::size_t t = 0;
  while (s3.element_order(t) != 2) ++t;
  std::vector<std::size_t> conj;
  for (std::size_t x = 0; x < 6; ++x) conj.push_back(s3.mul(s3.mul(t, x), t));
  AbDiagram c = abelianize_diagram(GroupDiagram(fx::z2(), {s}, {identity_hom(s), table_hom(s, s, conj)}));
  REQUIRE(c.matrix(1).rows() == 1);
  CHECK(c.value(0).contains_relation({c.matrix(1)(0, 0) - 1}));
}

TEST_CASE("Kan extension along virtual discrete cofibrations") {
  GroupDiagram g = fx::diagram("span-z2-z3");
  GroupDiagram same = kan_extend_vdc(identity_functor(g.base()), g);
  for (std::size_t x = 0; x < 3; ++x) CHECK(same.value(x).nontrivial_factors() == g.value(x).nontrivial_factors());

  Functor fin = fx::functor("final-in-2");
  GroupDiagram gb = pullback(fx::diagram("two-z2-s3"), fin);
  GroupDiagram lan = kan_extend_vdc(fin, gb);
  CHECK(lan.value(0).num_factors() == 0);
  CHECK(lan.value(1).num_factors() == 1);
  CHECK(lan.value(1).label(0) == "(b,id_b):S3");

  Functor mono = fx::functor("mono-delta2");
  GroupDiagram m2 = kan_extend_vdc(mono, fx::diagram("mono-delta2-z2"));
  // one factor per epimorphism out of [n]
  CHECK(m2.value(0).num_factors() == 1);
  CHECK(m2.value(1).num_factors() == 2);
  CHECK(m2.value(2).num_factors() == 4);

  CHECK(code_of([] { kan_extend_vdc(fx::functor("span-to-one"), fx::diagram("span-z2-z3")); }) == ErrorCode::NotVDC);
}

TEST_CASE("Kan extension preserves derived colimits") {
  struct Case {
    Functor s;
    GroupDiagram g;
    std::size_t n_max;
  };
  std::vector<Case> cases{
      {fx::functor("id-span"), fx::diagram("span-z2-z3"), 3},
      {fx::functor("final-in-2"), pullback(fx::diagram("two-z2-s3"), fx::functor("final-in-2")), 3},
      {fx::functor("bc-in-chain3"), pullback(fx::diagram("chain3-z2-z4"), fx::functor("bc-in-chain3")), 3},
      {fx::functor("mono-delta1"), fx::diagram("mono-delta1-z2"), 3},
      {fx::functor("mono-delta2"), fx::diagram("mono-delta2-z2"), 1},
  };
  for (const auto& [s, g, n_max] : cases) {
    GroupDiagram lan = kan_extend_vdc(s, g);
    AbDiagram m = abelianize_diagram(g);
    CHECK(show(ab_colim_derived(m, n_max)) == show(ab_colim_derived(kan_extend_vdc(s, m), n_max)));
    CHECK(show(ab_colim_derived(m, n_max)) == show(ab_colim_derived(abelianize_diagram(lan), n_max)));
    CHECK(fingerprint(colim0(g)) == fingerprint(colim0(lan)));
  }
}
