#include <doctest.h>

#include "hocofin/chains.hpp"
#include "hocofin/cofinal.hpp"
#include "hocofin/fixtures.hpp"
#include "oracles.hpp"

using namespace hocofin;
namespace fx = hocofin::fixtures;

TEST_CASE("verdict order") {
  CHECK(weakest(Verdict::Contractible, Verdict::Evidence) == Verdict::Evidence);
  CHECK(weakest(Verdict::Inconclusive, Verdict::Evidence) == Verdict::Inconclusive);
  CHECK(weakest(Verdict::NonContractible, Verdict::Inconclusive) == Verdict::NonContractible);
  CHECK(to_string(Verdict::Evidence) == "EVIDENCE");
}

TEST_CASE("nerve homology through nondegenerate chains") {
  CHECK(nerve_homology(fx::z2(), 3)[3].to_string() == "Z/2");
  CHECK(nerve_homology(fx::discrete2(), 1)[0].to_string() == "Z^2");
  CHECK(nerve_homology(fx::z3(), 2)[1].to_string() == "Z/3");
  CHECK(nerve_homology(fx::idempotent(), 3)[1].is_zero());
  auto bar = oracle::group_homology_bar(2, [](std::size_t a, std::size_t b) { return a ^ b; }, 4);
  auto ours = nerve_homology(fx::z2(), 4);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(ours[n].free_rank == bar[n].free_rank);
}

TEST_CASE("finally discrete categories") {
  CHECK(finally_discrete(fx::discrete2()).ok);
  CHECK(finally_discrete(fx::two()).ok);
  auto span = finally_discrete(fx::span());
  CHECK_FALSE(span.ok);
  CHECK(span.failing_component == 0u);
  CHECK(finally_discrete(fx::span_plus_one()).finals.size() == 2);
  CHECK_FALSE(finally_discrete(fx::z2()).ok);
  CHECK(finally_discrete(fx::idempotent()).ok == false);
}

TEST_CASE("virtual discrete cofibrations") {
  CHECK(is_vdc(identity_functor(fx::span())).ok);
  CHECK(is_vdc(fx::functor("mono-delta2")).ok);
  CHECK(is_vdc(fx::functor("final-in-2")).ok);
  CHECK_FALSE(is_vdc(fx::functor("span-to-one")).ok);
  CHECK_FALSE(is_vdc(fx::functor("z2-to-one")).ok);
}

TEST_CASE("contractibility certificates") {
  auto two = certify_contractible(fx::two());
  CHECK(two.verdict == Verdict::Contractible);
  CHECK(two.cone == "b");
  auto z2 = certify_contractible(fx::z2());
  CHECK(z2.verdict == Verdict::NonContractible);
  CHECK(z2.witness == "H1 = Z/2");
  CHECK(certify_contractible(FinCat()).verdict == Verdict::NonContractible);
  CHECK(certify_contractible(fx::discrete2()).witness == "H0 = Z^2");
  CHECK(certify_contractible(fx::span()).verdict == Verdict::Contractible);
  CHECK(certify_contractible(fx::cospan()).verdict == Verdict::Contractible);
  // zig-zag of length two with no cone object
  FinCat zz = poset_category({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "b"}, {"c", "d"}});
  auto z = certify_contractible(zz);
  CHECK(z.verdict == Verdict::Contractible);
  CHECK_FALSE(z.collapses.empty());
  // boundary of a square: circle
  FinCat circle = poset_category({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "d"}, {"c", "b"}, {"c", "d"}});
  auto ci = certify_contractible(circle);
  CHECK(ci.verdict == Verdict::NonContractible);
  CHECK(ci.witness == "H1 = Z");
  // contractible nerve, but no cone and nothing to collapse
  CHECK(certify_contractible(fx::idempotent()).verdict == Verdict::Evidence);
}

TEST_CASE("homotopy cofinality") {
  auto fin = certify_homotopy_cofinal(fx::functor("final-in-2"));
  CHECK(fin.aggregate == Verdict::Contractible);
  auto bad = certify_homotopy_cofinal(fx::functor("noncofinal-a-in-2"));
  CHECK(bad.aggregate == Verdict::NonContractible);
  CHECK(bad.per_object[1].reason == "empty");
  CHECK(certify_homotopy_cofinal(fx::functor("z2-to-one")).aggregate == Verdict::NonContractible);
  CHECK(certify_homotopy_cofinal(fx::functor("span-to-one")).aggregate == Verdict::Contractible);
}

TEST_CASE("codomain functors are homotopy coinitial") {
  for (const auto& name : fx::category_names()) {
    FinCat c = fx::category(name);
    if (c.num_morphisms() > 8) continue;
    CAPTURE(name);
    auto r = certify_homotopy_cofinal(factorization(c).cod, true);
    for (const auto& cert : r.per_object) {
      CAPTURE(cert.reason);
      CHECK(cert.verdict == Verdict::Contractible);
    }
  }
}
