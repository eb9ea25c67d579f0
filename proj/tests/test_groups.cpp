#include <doctest.h>

#include <random>

#include "hocofin/error.hpp"
#include "hocofin/groups.hpp"
#include "oracles.hpp"

using namespace hocofin;

namespace {

GroupPresentation pres(std::vector<std::string> gens, std::vector<std::vector<std::string>> rels) {
  return make_presentation(std::move(gens), rels);
}

std::vector<std::uint64_t> involution_counts() {
  std::vector<std::uint64_t> out;
  for (const auto& [name, g] : group_catalog()) {
    std::uint64_t k = 0;
    for (std::size_t x = 0; x < g.order(); ++x) k += g.mul(x, x) == g.unit();
    out.push_back(k);
  }
  return out;
}

}  // namespace

TEST_CASE("group axioms are enforced") {
  CHECK_THROWS_AS(FinGroup({"e", "a"}, 0, {{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(FinGroup({"e", "a"}, 1, {{0, 1}, {1, 0}}), Error);
  CHECK_NOTHROW(FinGroup({"e", "a"}, 0, {{0, 1}, {1, 0}}));
}

TEST_CASE("catalog of groups of order at most 8") {
  const auto& cat = group_catalog();
  REQUIRE(cat.size() == 14);
  std::map<std::size_t, int> per_order;
  for (const auto& [name, g] : cat) per_order[g.order()]++;
  CHECK(per_order == std::map<std::size_t, int>{{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 2}, {7, 1}, {8, 5}});
  // pairwise distinguishable by their own fingerprints (hence non-isomorphic)
  std::set<std::vector<std::uint64_t>> prints;
  for (const auto& [name, g] : cat) prints.insert(fingerprint(presentation_of(g)));
  CHECK(prints.size() == 14);
  CHECK(cat[7].second.is_abelian() == false);
  CHECK(cat[13].second.is_abelian() == false);
}

TEST_CASE("homomorphism counts") {
  CHECK(hom_count(pres({"x"}, {{"x", "x"}}), cyclic_group(2)) == 2);
  CHECK(hom_count(pres({"x"}, {}), cyclic_group(3)) == 3);
  auto span = pres({"x", "y"}, {{"x", "x"}, {"y", "y", "y"}});
  CHECK(hom_count(span, symmetric_group_3()) == 12);
  CHECK(oracle::brute_force_homs(2, span.relators, 6, oracle::s3_mul) == 12);
  CHECK(hom_count(pres({"x", "y"}, {}), symmetric_group_3()) == 36);
  CHECK(oracle::brute_force_homs(2, {}, 6, oracle::s3_mul) == 36);
  CHECK_THROWS_AS(hom_count(pres({"a", "b", "c", "d", "e"}, {}), cyclic_group(8), {1000}), Error);
}

TEST_CASE("hom counts agree with brute force on random presentations into S3") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> gen(1, 3), sign(0, 1), len(1, 5), nrel(0, 3);
  FinGroup s3 = symmetric_group_3();
  for (int trial = 0; trial < 50; ++trial) {
    GroupPresentation p;
    p.generators = {"a", "b", "c"};
    for (int r = nrel(rng); r > 0; --r) {
      std::vector<int> w;
      for (int k = len(rng); k > 0; --k) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
      p.relators.push_back(w);
    }
    CHECK(hom_count(p, s3) == oracle::brute_force_homs(3, p.relators, 6, oracle::s3_mul));
  }
}

TEST_CASE("fingerprints") {
  auto trivial = fingerprint(pres({}, {}));
  CHECK(trivial == std::vector<std::uint64_t>(14, 1));
  CHECK(fingerprint(pres({"x"}, {{"x", "x"}})) == involution_counts());
  std::vector<std::uint64_t> orders;
  for (const auto& [n, g] : group_catalog()) orders.push_back(g.order());
  CHECK(fingerprint(pres({"x"}, {})) == orders);
}

TEST_CASE("hom counts are multiplicative over direct products") {
  FinGroup z2 = cyclic_group(2);
  FinGroup v4 = direct_product(z2, z2);
  for (const auto& p : {pres({"x", "y"}, {{"x", "x"}, {"x", "y", "x!", "y!"}}), pres({"x"}, {{"x", "x", "x", "x"}}),
                        pres({"x", "y"}, {{"x", "y", "x", "y"}})}) {
    CHECK(hom_count(p, v4) == hom_count(p, z2) * hom_count(p, z2));
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianization(pres({"x", "y"}, {{"x", "x"}, {"y", "y", "y"}})).to_string() == "Z/6");
  CHECK(abelianization(pres({"x", "y"}, {})).to_string() == "Z^2");
  CHECK(abelianization(pres({"x"}, {{"x"}})).to_string() == "0");
  CHECK(abelianization(presentation_of(symmetric_group_3())).to_string() == "Z/2");
  CHECK(abelianization(presentation_of(quaternion_group())).to_string() == "Z/2 (+) Z/2");
}

TEST_CASE("Tietze simplification") {
  auto p = tietze_simplify(pres({"x", "y"}, {{"y", "x!"}, {"y", "y"}}));
  CHECK(p.generators == std::vector<std::string>{"x"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == std::vector<int>{1, 1});
  auto free1 = tietze_simplify(pres({"x"}, {}));
  CHECK(free1.generators.size() == 1);
  CHECK(free1.relators.empty());
  auto cancel = tietze_simplify(pres({"x"}, {{"x", "x!"}}));
  CHECK(cancel.generators.size() == 1);
  CHECK(cancel.relators.empty());

  // invariants of simplification
  for (const auto& [name, g] : group_catalog()) {
    CAPTURE(name);
    auto full = presentation_of(g);
    auto small = tietze_simplify(full);
    CHECK(small.generators.size() <= full.generators.size());
    CHECK(fingerprint(small) == fingerprint(full));
    CHECK(abelianization(small).invariants() == abelianization(full).invariants());
  }
}

TEST_CASE("free product words") {
  FinGroup z2 = cyclic_group(2), z3 = cyclic_group(3);
  FreeProduct g({{"A", z2}, {"B", z3}});
  Word t = g.letter(0, 1);
  CHECK(g.multiply(t, t).empty());
  Word w = g.parse({"A:1", "B:1", "B:1", "A:1"});
  CHECK(g.format(w) == "A:1 B:2 A:1");
  CHECK(g.multiply(w, g.inverse(w)).empty());
  CHECK_THROWS_AS(g.parse({"C:1"}), Error);
  // confluence: reducing pieces first gives the same normal form
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> f(0, 1), e(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    Word raw;
    for (int k = 0; k < 8; ++k) {
      std::size_t fac = static_cast<std::size_t>(f(rng));
      raw.push_back({fac, static_cast<std::size_t>(e(rng)) % g.factor(fac).order()});
    }
    Word left(raw.begin(), raw.begin() + 4), right(raw.begin() + 4, raw.end());
    CHECK(g.reduce(raw) == g.multiply(g.reduce(left), g.reduce(right)));
  }
}

TEST_CASE("homomorphisms between free products") {
  FinGroup z2 = cyclic_group(2), z3 = cyclic_group(3);
  FreeProduct a = FreeProduct::single("A", z2);
  FreeProduct ab({{"A", z2}, {"B", z3}});
  GroupHom into = GroupHom(a, ab, {{{}, ab.letter(0, 1)}});
  CHECK(into.apply(a.letter(0, 1)) == ab.letter(0, 1));
  CHECK(identity_hom(ab).is_identity());
  CHECK(compose(identity_hom(ab), into) == into);
  CHECK_THROWS_AS(GroupHom(FreeProduct::single("B", z3), FreeProduct::single("A", z2),
                           {{{}, {{0, 1}}, {}}}),
                  Error);
  // inversion of x -> -x on Z/3
  FreeProduct b = FreeProduct::single("B", z3);
  GroupHom neg = table_hom(b, b, {0, 2, 1});
  auto inv = invert(neg);
  REQUIRE(inv);
  CHECK(compose(*inv, neg).is_identity());
  CHECK(!invert(trivial_hom(b, b)));
}

TEST_CASE("abelianized free products") {
  FinGroup z2 = cyclic_group(2), z3 = cyclic_group(3);
  FreeProduct ab({{"A", z2}, {"B", z3}});
  auto abel = abelianize(ab);
  CHECK(abel.group.to_string() == "Z/6");
  FreeProduct s = FreeProduct::single("S", symmetric_group_3());
  auto as = abelianize(s);
  CHECK(as.group.to_string() == "Z/2");
  // conjugation by a transposition abelianizes to the identity
  FinGroup s3 = symmetric_group_3();
  std::size_t t = s3.element("213");
  std::vector<std::size_t> conj(6);
  for (std::size_t x = 0; x < 6; ++x) conj[x] = s3.mul(s3.mul(t, x), s3.inv(t));
  IntMatrix m = abelianize(table_hom(s, s, conj), as, as);
  REQUIRE(m.rows() == 1);
  CHECK(as.group.contains_relation({m(0, 0) - 1}));
  CHECK(abelianize(FreeProduct()).group.gens() == 0);
}
