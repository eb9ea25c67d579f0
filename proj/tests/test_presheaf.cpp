#include <doctest.h>

#include <functional>

#include "hocofin/error.hpp"
#include "hocofin/fixtures.hpp"
#include "hocofin/presheaf.hpp"
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

std::vector<std::size_t> nondeg_counts(const TruncSSet& x) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= x.level(); ++n) out.push_back(x.nondegenerate(n).size());
  return out;
}

std::string show(const std::vector<AbelianInvariants>& h) {
  std::string s;
  for (const auto& g : h) s += (s.empty() ? "" : "; ") + g.to_string();
  return s;
}

std::string show(const oracle::Homology& h) {
  AbelianInvariants a;
  a.free_rank = h.free_rank;
  for (auto t : h.torsion) a.torsion.push_back(t);
  return a.to_string();
}

// One vertex, loops a and b, level 2 with only degenerate 2-simplices.
TruncSSet wedge_of_two_circles() {
  // X_1 = {s0 v, a, b}; X_2 = s0 s0 v, s0 a, s1 a, s0 b, s1 b.
  TruncSSet::Table faces(3), degens(2);
  faces[1] = {{0, 0, 0}, {0, 0, 0}};
  // d_i on X_2, entries index X_1
  faces[2] = {{0, 1, 0, 2, 0}, {0, 1, 1, 2, 2}, {0, 0, 1, 0, 2}};
  degens[0] = {{0}};
  degens[1] = {{0, 1, 3}, {0, 2, 4}};
  return TruncSSet({1, 3, 5}, faces, degens, 0);
}

FinCat group_category(const FinGroup& g) {
  return monoid_category(g.elements(), g.unit(), g.table());
}

}  // namespace

TEST_CASE("nerve simplex counts") {
  CHECK(nondeg_counts(nerve(fx::two(), 2)) == std::vector<std::size_t>{2, 1, 0});
  CHECK(nondeg_counts(nerve(fx::span(), 2)) == std::vector<std::size_t>{3, 2, 0});
  TruncSSet z2 = nerve(fx::z2(), 3);
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(z2.count(n) == (std::size_t{1} << n));
    CHECK(z2.nondegenerate(n).size() == 1);
  }
  // chains of length n in a poset chain of k elements: multisets, C(k+n-1... )
  TruncSSet c3 = nerve(fx::chain3(), 3);
  CHECK(c3.count(2) == 10);
  CHECK(nondeg_counts(c3) == std::vector<std::size_t>{3, 3, 1, 0});
}

TEST_CASE("chain faces and degeneracies") {
  FinCat c = fx::chain3();
  Chain s{c.object("a"), {c.morphism("a<b"), c.morphism("b<c")}};
  CHECK(chain_name(c, s) == "a<b|b<c");
  CHECK(chain_face(c, s, 0) == Chain{c.object("b"), {c.morphism("b<c")}});
  CHECK(chain_face(c, s, 1) == Chain{c.object("a"), {c.morphism("a<c")}});
  CHECK(chain_face(c, s, 2) == Chain{c.object("a"), {c.morphism("a<b")}});
  Chain t = chain_degeneracy(c, s, 1);
  CHECK(t.mors[1] == c.identity(c.object("b")));
  CHECK(chain_is_degenerate(c, t));
  CHECK(chain_composite(c, s) == c.morphism("a<c"));
  CHECK(code_of([&] { chain_face(c, s, 3); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([&] { nondegenerate_chains(fx::z2(), 3, 0); }) == ErrorCode::CapExceeded);
}

TEST_CASE("simplicial identities hold on every fixture nerve") {
  for (const auto& name : fx::category_names()) {
    FinCat c = fx::category(name);
    if (c.num_morphisms() > 12) continue;
    CAPTURE(name);
    CHECK_NOTHROW(check_simplicial_identities(nerve(c, 3)));
  }
}

TEST_CASE("simplicial identity violations are reported") {
  TruncSSet x = wedge_of_two_circles();
  TruncSSet::Table faces = x.faces();
  faces[2][1][1] = 2;  // d1 s0 a would be b
  CHECK(code_of([&] { TruncSSet({1, 3, 5}, faces, x.degeneracies(), 0); }) ==
        ErrorCode::SimplicialIdentityViolation);
  CHECK(code_of([&] { TruncSSet({1, 3, 5}, faces, {}, 0); }) == ErrorCode::InvalidInput);
}

TEST_CASE("homology of nerves") {
  CHECK(show(homology_ss(nerve(fx::two(), 3), 2)) == "Z; 0; 0");
  CHECK(show(homology_ss(nerve(fx::discrete2(), 1), 0)) == "Z^2");
  CHECK(code_of([] { homology_ss(nerve(fx::two(), 2), 2); }) == ErrorCode::LevelTooLow);
  for (const char* name : {"one", "two", "chain3", "square", "idempotent", "span"}) {
    CAPTURE(name);
    FinCat c = fx::category(name);
    if (final_objects(c).empty()) continue;
    CHECK(show(homology_ss(nerve(c, 4), 3)) == "Z; 0; 0; 0");
  }
}

TEST_CASE("nerve homology of finite groups matches the bar complex") {
  CHECK(show(homology_ss(nerve(fx::z2(), 4), 3)) == "Z; Z/2; 0; Z/2");
  struct Case {
    FinGroup g;
    std::size_t n_max;
  };
  for (const auto& [g, n_max] : {Case{cyclic_group(2), 3}, Case{cyclic_group(3), 3}, Case{symmetric_group_3(), 2},
                                 Case{direct_product(cyclic_group(2), cyclic_group(2)), 2}}) {
    CAPTURE(g.order());
    auto ours = homology_ss(nerve(group_category(g), n_max + 1), n_max);
    auto bar = oracle::group_homology_bar(
        g.order(), [&](std::size_t a, std::size_t b) { return g.mul(a, b); }, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) CHECK(ours[n].to_string() == show(bar[n]));
  }
}

TEST_CASE("edge-path groups") {
  TruncSSet z2 = nerve(fx::z2(), 2);
  GroupPresentation p = edge_path_group(z2);
  CHECK(hom_count(p, cyclic_group(2)) == 2);
  CHECK(tietze_simplify(p).to_string() == "<t | t t>");

  GroupPresentation w = edge_path_group(wedge_of_two_circles());
  CHECK(w.generators.size() == 2);
  CHECK(hom_count(w, symmetric_group_3()) == 36);
  CHECK(oracle::brute_force_homs(2, w.relators, 6, oracle::s3_mul) == 36);

  GroupPresentation d1 = edge_path_group(nerve(fx::two(), 2));
  for (const auto& [name, g] : group_catalog()) CHECK(hom_count(d1, g) == 1);

  CHECK(code_of([] { edge_path_group(nerve(fx::two(), 1)); }) == ErrorCode::LevelTooLow);
  CHECK(code_of([] { edge_path_group(nerve(fx::discrete2(), 2)); }) == ErrorCode::NotConnected);
}

TEST_CASE("edge-path group of a group nerve has the group's fingerprint") {
  for (const auto& [name, g] : group_catalog()) {
    if (g.order() > 6) continue;
    CAPTURE(name);
    GroupPresentation p = tietze_simplify(edge_path_group(nerve(group_category(g), 2)));
    auto fp = fingerprint(p);
    std::size_t k = 0;
    for (const auto& [tname, t] : group_catalog()) {
      // homomorphisms G -> T by brute force over element maps of G's generators
      auto direct = oracle::brute_force_homs(g.order() - 1, presentation_of(g).relators, t.order(),
                                             [&](std::size_t a, std::size_t b) { return t.mul(a, b); });
      CHECK(fp[k++] == direct);
      if (g.order() > 4 && t.order() > 4) break;
    }
  }
}

TEST_CASE("D-sets validate functoriality") {
  FinCat two = fx::two();
  CHECK_NOTHROW(dset_from_names(two, {{"a", {"x", "y"}}, {"b", {"z"}}}, {{"u", {{"z", "y"}}}}));
  CHECK(code_of([&] { DSet(two, {{"x"}, {"z"}}, {{0}, {0}, {1}}); }) == ErrorCode::FunctorViolation);
  CHECK(code_of([&] { DSet(two, {{"x", "y"}, {"z"}}, {{1, 0}, {0}, {0}}); }) == ErrorCode::FunctorViolation);
  CHECK(code_of([&] { dset_from_names(two, {{"a", {"x"}}, {"b", {"z"}}}, {{"u", {{"z", "w"}}}}); }) ==
        ErrorCode::UnknownLabel);
  FinCat z2 = fx::z2();
  // t must act as an involution
  CHECK(code_of([&] { DSet(z2, {{"p", "q", "r"}}, {{0, 1, 2}, {1, 2, 0}}); }) == ErrorCode::FunctorViolation);
  CHECK_NOTHROW(DSet(z2, {{"p", "q", "r"}}, {{0, 1, 2}, {1, 0, 2}}));
}

TEST_CASE("categories of elements") {
  FinCat two = fx::two();
  DSet hb = representable(two, two.object("b"));
  CHECK(hb.elements()[0] == std::vector<std::string>{"u"});
  CHECK(hb.elements()[1] == std::vector<std::string>{"id_b"});
  ElementsCategory e = elements(hb);
  CHECK(iso_check(e.category, two).has_value());
  auto fin = final_objects(e.category);
  REQUIRE(fin.size() == 1);
  CHECK(e.category.object_name(fin[0]) == "(b,id_b)");

  for (const auto& name : fx::category_names()) {
    FinCat c = fx::category(name);
    if (c.num_morphisms() > 12) continue;
    for (std::size_t d = 0; d < c.num_objects(); ++d) {
      CAPTURE(name);
      ElementsCategory ed = elements(representable(c, d));
      std::size_t top = ed.index.at({d, static_cast<std::size_t>(std::find(c.hom(d, d).begin(), c.hom(d, d).end(),
                                                                           c.identity(d)) -
                                                                 c.hom(d, d).begin())});
      auto f = final_objects(ed.category);
      CHECK(std::find(f.begin(), f.end(), top) != f.end());
    }
  }

  FinCat span = fx::span();
  DSet empty(span, {{}, {}, {}}, std::vector<std::vector<std::size_t>>(span.num_morphisms()));
  CHECK(elements(empty).category.num_objects() == 0);
  CHECK(iso_check(elements(terminal_dset(span)).category, span).has_value());
}

TEST_CASE("morphisms of D-sets") {
  FinCat two = fx::two();
  DSet ha = representable(two, two.object("a"));
  DSet hb = representable(two, two.object("b"));
  DSet x = coproduct(ha, hb);
  CHECK(x.size(0) == 2);
  CHECK(x.size(1) == 1);
  // induced by u : a -> b and id_b
  DSetMorphism f(x, hb, {{0, 0}, {0}});
  CHECK(code_of([&] { DSetMorphism(hb, x, {{0}, {0}}); }) == ErrorCode::NaturalityViolation);
  CHECK_NOTHROW(DSetMorphism(hb, x, {{1}, {0}}));
  ElementsCategory ex = elements(x), ey = elements(hb);
  Functor ef = elements_functor(f, ex, ey);
  CHECK(ef.source() == ex.category);
  CHECK(compose(ey.projection, ef) == ex.projection);
  CHECK_NOTHROW(identity_morphism(x));
}

TEST_CASE("inverse fibres agree with brute-force pullbacks") {
  auto table = [](const DSet& x) {
    oracle::TablePresheaf t;
    for (std::size_t a = 0; a < x.base().num_objects(); ++a) t.sizes.push_back(x.size(a));
    t.maps = x.maps();
    return t;
  };
  auto check_all = [&](const DSetMorphism& f) {
    const FinCat& c = f.source().base();
    std::vector<std::size_t> dom, cod;
    for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
      dom.push_back(c.dom(m));
      cod.push_back(c.cod(m));
    }
    for (std::size_t d = 0; d < c.num_objects(); ++d)
      for (std::size_t y = 0; y < f.target().size(d); ++y) {
        DSet fib = inverse_fibre(f, d, y);
        auto ref = oracle::pullback_pairs(table(f.source()), table(f.target()), f.components(), dom, cod, d, y);
        for (std::size_t a = 0; a < c.num_objects(); ++a) {
          REQUIRE(fib.size(a) == ref[a].size());
          for (std::size_t k = 0; k < ref[a].size(); ++k)
            CHECK(fib.name(a, k) ==
                  "(" + f.source().name(a, ref[a][k].first) + "," + c.morphism_name(ref[a][k].second) + ")");
        }
      }
  };
  FinCat two = fx::two();
  DSet ha = representable(two, 0), hb = representable(two, 1);
  DSetMorphism f(coproduct(ha, hb), hb, {{0, 0}, {0}});
  check_all(f);
  DSet fib = inverse_fibre(f, 1, 0);
  CHECK(fib.size(0) == 2);
  CHECK(fib.size(1) == 1);

  check_all(identity_morphism(hb));
  // id over h_d at id_d recovers h_d
  DSet same = inverse_fibre(identity_morphism(hb), 1, 0);
  CHECK(same.size(0) == hb.size(0));
  CHECK(same.size(1) == hb.size(1));

  FinCat z2 = fx::z2();
  DSet free2(z2, {{"p", "q"}}, {{0, 1}, {1, 0}});
  check_all(DSetMorphism(free2, terminal_dset(z2), {{0, 0}}));
  check_all(DSetMorphism(coproduct(free2, free2), free2, {{0, 1, 1, 0}}));

  FinCat span = fx::span();
  DSet empty(span, {{}, {}, {}}, std::vector<std::vector<std::size_t>>(span.num_morphisms()));
  DSet fe = inverse_fibre(DSetMorphism(empty, terminal_dset(span), {{}, {}, {}}), 0, 0);
  CHECK(fe.total_size() == 0);
}
