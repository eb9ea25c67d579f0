#include <doctest.h>

#include "hocofin/error.hpp"
#include "hocofin/fincat.hpp"
#include "hocofin/fixtures.hpp"

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

// Exhaustive check of unit and associativity laws, written independently of
// FinCat::check_laws.
bool laws_hold(const FinCat& c) {
  for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
    if (c.compose(c.identity(c.cod(f)), f) != f) return false;
    if (c.compose(f, c.identity(c.dom(f))) != f) return false;
    for (std::size_t g = 0; g < c.num_morphisms(); ++g) {
      bool composable = c.cod(f) == c.dom(g);
      if (composable != (c.compose(g, f) != npos)) return false;
      if (!composable) continue;
      for (std::size_t h = 0; h < c.num_morphisms(); ++h)
        if (c.cod(g) == c.dom(h) && c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f))
          return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("validation synthesizes identities") {
  FinCat two = fx::two();
  CHECK(two.num_morphisms() == 3);
  CHECK(two.morphism_name(0) == "id_a");
  CHECK(two.morphism(two.morphism_name(2)) == 2);
  CHECK(fx::span().num_morphisms() == 5);
  FinCat idem = validate_category({{"*"}, {{"u", "*", "*"}}, {{"u", "u", "u"}}});
  CHECK(idem.num_morphisms() == 2);
  CHECK(laws_hold(idem));
}

TEST_CASE("validation errors") {
  CHECK(code_of([] { validate_category({{"*"}, {{"u", "*", "*"}}, {}}); }) ==
        ErrorCode::MissingComposite);
  CHECK(code_of([] { validate_category({{"a"}, {{"u", "a", "zz"}}, {}}); }) == ErrorCode::DanglingId);
  CHECK(code_of([] {
          validate_category({{"a", "b"}, {{"u", "a", "b"}}, {{"u", "id_a", "id_b"}}});
        }) == ErrorCode::InvalidComposite);
  CHECK(code_of([] {
          validate_category({{"a", "b"}, {{"u", "a", "b"}, {"v", "a", "b"}}, {{"id_b", "u", "v"}}});
        }) == ErrorCode::IdentityViolation);
  // monoid {1, x, y} with x x = y, x y = x, y x = x, y y = y: not associative
  // ((x x) x = y x = x but x (x x) = x y = x holds; use x y = y instead)
  CHECK(code_of([] {
          validate_category({{"*"},
                             {{"x", "*", "*"}, {"y", "*", "*"}},
                             {{"x", "x", "y"}, {"x", "y", "y"}, {"y", "x", "x"}, {"y", "y", "y"}}});
        }) == ErrorCode::AssociativityViolation);
}

TEST_CASE("every fixture satisfies the category laws") {
  for (const auto& name : fx::category_names()) {
    CAPTURE(name);
    FinCat c = fx::category(name);
    CHECK(laws_hold(c));
    CHECK(opposite(opposite(c)) == c);
    CHECK(laws_hold(opposite(c)));
  }
  CHECK(fx::delta1().num_morphisms() == 7);
  CHECK(fx::delta2().num_morphisms() == 31);
}

TEST_CASE("opposite") {
  FinCat op = opposite(fx::two());
  std::size_t u = op.morphism("u");
  CHECK(op.object_name(op.dom(u)) == "b");
  CHECK(op.object_name(op.cod(u)) == "a");
  // abelian group: the transposed table is the table itself
  FinCat z2 = fx::z2();
  CHECK(opposite(z2) == z2);
  // span becomes the cospan
  FinCat cs = opposite(fx::span());
  CHECK(final_objects(cs) == std::vector<std::size_t>{cs.object("c")});
}

TEST_CASE("left fibres and coslices") {
  Functor incl_b = fx::functor("final-in-2");
  FinCat two = fx::two();
  CHECK(comma_left_fibre(incl_b, two.object("a")).category.num_objects() == 0);
  auto over_b = comma_left_fibre(incl_b, two.object("b"));
  CHECK(over_b.category.num_objects() == 1);
  CHECK(over_b.category.num_morphisms() == 1);

  FinCat p = fx::span();
  auto over_l = comma_left_fibre(identity_functor(p), p.object("l"));
  CHECK(over_l.category.num_objects() == 2);
  CHECK(over_l.category.num_morphisms() == 3);
  CHECK(over_l.category.object_name(0) == "(l,id_l)");
  CHECK(over_l.category.object_name(1) == "(c,p)");
  CHECK(over_l.category.hom(1, 0).size() == 1);
  // projection is a functor landing in the source
  CHECK(over_l.projection.target() == p);

  auto under_a = comma_coslice(incl_b, two.object("a"));
  CHECK(under_a.category.num_objects() == 1);
  CHECK(under_a.category.object_name(0) == "(b,u)");
  CHECK(comma_coslice(incl_b, two.object("b")).category.num_objects() == 1);

  auto under_c = comma_coslice(identity_functor(p), p.object("c"));
  CHECK(under_c.category.num_objects() == 3);
  CHECK(under_c.category.num_morphisms() == 5);
  std::size_t lp = under_c.category.object("(l,p)"), rq = under_c.category.object("(r,q)");
  CHECK(under_c.category.hom(lp, rq).empty());
  CHECK(under_c.category.hom(rq, lp).empty());

  CHECK_THROWS_AS(comma_left_fibre(incl_b, 7), Error);
}

TEST_CASE("factorization categories") {
  FinCat two = fx::two();
  auto f2 = factorization(two);
  CHECK(f2.category.num_objects() == 3);
  CHECK(f2.category.num_morphisms() == 5);
  std::size_t u = f2.category.object("u");
  CHECK(final_objects(f2.category) == std::vector<std::size_t>{u});
  CHECK(f2.category.hom(f2.category.object("id_a"), u).size() == 1);
  CHECK(f2.category.hom(f2.category.object("id_b"), u).size() == 1);
  CHECK(iso_check(f2.category, fx::cospan()).has_value());

  auto f1 = factorization(fx::one());
  CHECK(f1.category.num_morphisms() == 1);

  for (const auto& name : fx::category_names()) {
    FinCat c = fx::category(name);
    if (c.num_morphisms() > 8) continue;
    CAPTURE(name);
    auto fc = factorization(c);
    auto fco = factorization(opposite(c));
    CHECK(laws_hold(fc.category));
    CHECK(iso_check(fc.category, fco.category, {16, 128}).has_value());
  }
}

TEST_CASE("factor functor") {
  FinCat two = fx::two();
  Functor id = identity_functor(two);
  CHECK(factor_functor(id) == identity_functor(factorization(two).category));
  Functor incl = fx::functor("final-in-2");
  Functor fi = factor_functor(incl);
  CHECK(fi.target().object_name(fi.obj(0)) == "id_b");
  Functor collapse = fx::functor("span-to-one");
  Functor fc = factor_functor(collapse);
  for (std::size_t x = 0; x < fc.source().num_objects(); ++x) CHECK(fc.obj(x) == 0);
}

TEST_CASE("factor slices") {
  FinCat two = fx::two();
  Functor id = identity_functor(two);
  CHECK(factor_slice(id, two.morphism("id_a")).category.num_objects() == 1);
  auto s = factor_slice(id, two.morphism("u"));
  CHECK(s.category.num_objects() == 2);
  CHECK(s.category.num_morphisms() == 3);
  CHECK(initial_objects(s.category).size() == 1);
  CHECK(final_objects(s.category).size() == 1);
  auto t = factor_slice(fx::functor("final-in-2"), two.morphism("u"));
  CHECK(t.category.num_objects() == 1);
  CHECK(t.category.object_name(0) == "(b,u,id_b)");
  CHECK_THROWS_AS(factor_slice(id, 99), Error);
}

TEST_CASE("isomorphism search") {
  FinCat two = fx::two();
  auto iso = iso_check(two, opposite(two));
  REQUIRE(iso.has_value());
  CHECK(iso->obj(two.object("a")) == two.object("b"));
  CHECK(!iso_check(two, fx::span()).has_value());
  CHECK(!iso_check(fx::z2(), fx::idempotent()).has_value());
  CHECK(!iso_check(fx::span(), fx::cospan()).has_value());
  CHECK(iso_check(fx::delta2(), fx::delta2()).has_value());
  FinCat fd1 = factorization(fx::delta1()).category;
  CHECK_THROWS_AS(iso_check(fd1, fd1), Error);
  CHECK(iso_check(fd1, fd1, {16, 128}).has_value());
}

TEST_CASE("proposition: factorization of fibres") {
  for (const char* name : {"id-two", "final-in-2", "span-to-one", "bc-in-chain3", "id-span"}) {
    CAPTURE(name);
    Functor s = fx::functor(name);
    Functor fs = factor_functor(s);
    for (std::size_t alpha = 0; alpha < s.target().num_morphisms(); ++alpha) {
      auto lhs = comma_left_fibre(fs, alpha).category;
      auto rhs = factorization(factor_slice(s, alpha).category).category;
      CHECK(iso_check(lhs, rhs, {32, 256}).has_value());
    }
  }
}

TEST_CASE("components and final objects") {
  CHECK(connected_components(fx::discrete2()).size() == 2);
  CHECK(connected_components(fx::two()).size() == 1);
  CHECK(connected_components(fx::span_plus_one()).size() == 2);
  CHECK(final_objects(fx::two()) == std::vector<std::size_t>{1});
  CHECK(final_objects(fx::span()).empty());
  CHECK(final_objects(fx::z2()).empty());
  CHECK(initial_objects(fx::span()) == std::vector<std::size_t>{fx::span().object("c")});
}

TEST_CASE("builders") {
  CHECK_THROWS_AS(poset_category({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  FinCat sq = fx::square();
  CHECK(sq.num_morphisms() == 9);
  CHECK(sq.hom(sq.object("00"), sq.object("11")).size() == 1);
  FinCat d1 = fx::delta1();
  CHECK(d1.hom(1, 0).size() == 1);
  CHECK(d1.hom(0, 1).size() == 2);
  CHECK(d1.hom(1, 1).size() == 3);
  auto monos = fx::delta2_monos();
  CHECK(monos.category.num_objects() == 3);
  // injective maps: 1 + 2 + 3 into [0],[1],[2] from [0]; [1]->[1]: 1, [1]->[2]: 3, [2]->[2]: 1
  CHECK(monos.category.num_morphisms() == 1 + 1 + 1 + 2 + 3 + 3);
  auto fn = functor_from_names(fx::two(), fx::chain3(), {{"a", "a"}, {"b", "c"}}, {{"u", "a<c"}});
  CHECK(fn.mor(2) == fx::chain3().morphism("a<c"));
  CHECK_THROWS_AS(functor_from_names(fx::two(), fx::chain3(), {{"a", "c"}, {"b", "a"}}, {{"u", "a<c"}}),
                  Error);
  for (const auto& n : fx::functor_names()) {
    CAPTURE(n);
    CHECK_NOTHROW(fx::functor(n));
  }
}
