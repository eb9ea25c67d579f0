#include <doctest.h>

#include <fstream>

#include "hocofin/error.hpp"
#include "hocofin/fixtures.hpp"
#include "hocofin/theorems.hpp"
#include "hocofin/workspace.hpp"

using namespace hocofin;
namespace fx = hocofin::fixtures;

namespace {

std::string data(const std::string& file) { return std::string(HOCOFIN_TEST_DATA) + "/" + file; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(exit_code(Outcome::Agree) == 0);
  CHECK(exit_code(Outcome::Disagree) == 2);
  CHECK(exit_code(Outcome::NotCertified) == 3);
  CHECK(theorem_names().size() == 12);
  for (const auto& t : theorem_names()) CHECK_FALSE(fixture_names(t).empty());
}

TEST_CASE("homoliso on cofinal and non-cofinal inclusions") {
  TheoremReport r = verify("homoliso", "final-in-2");
  CHECK(r.outcome == Outcome::Agree);
  CHECK(r.label == "certified");
  // fixture diagrams on 2 plus the three group systems
  CHECK(r.details["comparisons"].size() == 5);

  TheoremReport n = verify("homoliso", "noncofinal-a-in-2");
  CHECK(n.outcome == Outcome::NotCertified);
  CHECK(n.details["hypothesis"]["per_object"]["b"]["verdict"] == "NONCONTRACTIBLE");
  CHECK_FALSE(n.details.contains("comparisons"));

  VerifyOptions o;
  o.unconditional = true;
  TheoremReport u = verify("homoliso", "noncofinal-a-in-2", o);
  CHECK(u.outcome == Outcome::Disagree);
  CHECK(u.label == "unconditional comparison");
  bool found = false;
  for (const auto& c : u.details["comparisons"])
    if (c["coefficients"] == "two-z2-1") {
      found = true;
      CHECK(c["agree"] == false);
      CHECK(c["lhs"]["abelian"][0] == "Z/2");
      CHECK(c["rhs"]["abelian"][0] == "0");
    }
  CHECK(found);
}

TEST_CASE("homoliso on cod in coinitial form") {
  for (const char* f : {"cod-two", "cod-span", "cod-chain3"}) {
    CAPTURE(std::string(f));
    CHECK(verify("homoliso", f).outcome == Outcome::Agree);
  }
}

TEST_CASE("discvirt needs a virtual discrete cofibration") {
  CHECK(verify("discvirt", "final-in-2").outcome == Outcome::Agree);
  CHECK(verify("discvirt", "mono-delta1").outcome == Outcome::Agree);
  TheoremReport r = verify("discvirt", "span-to-one");
  CHECK(r.outcome == Outcome::NotCertified);
  CHECK(r.details["hypothesis"]["ok"] == false);
}

TEST_CASE("pointed comparison and negative control") {
  CHECK(verify("cofpointed", "final-in-2").outcome == Outcome::Agree);
  VerifyOptions o;
  o.unconditional = true;
  TheoremReport r = verify("cofpointed", "noncofinal-a-in-2", o);
  CHECK(r.outcome == Outcome::Disagree);
}

TEST_CASE("single-fixture theorems") {
  CHECK(verify("main2-n0", "span-z2-z3").outcome == Outcome::Agree);
  CHECK(verify("contralan", "V-2").outcome == Outcome::Agree);
  CHECK(verify("corfact", "span").outcome == Outcome::Agree);
  CHECK(verify("factfibres", "span-to-one").outcome == Outcome::Agree);
  CHECK(verify("wefrac", "z2").outcome == Outcome::Agree);
  CHECK(verify("lcodecar", "B-span-z2-z3").outcome == Outcome::Agree);
  CHECK(verify("dliso", "fold-2").outcome == Outcome::Agree);
  CHECK(verify("dhiso", "V-to-terminal-2").outcome == Outcome::Agree);
  CHECK(verify("confhomolBW", "id-span").outcome == Outcome::Agree);
}

TEST_CASE("hypothesis failures are reported with a witness") {
  TheoremReport d = verify("dhiso", "fold-2");
  CHECK(d.outcome == Outcome::NotCertified);
  CHECK(d.summary.find("fibre over") != std::string::npos);
  VerifyOptions o;
  o.unconditional = true;
  CHECK(verify("dhiso", "fold-2", o).outcome == Outcome::Disagree);

  TheoremReport b = verify("confhomolBW", "final-in-2");
  CHECK(b.outcome == Outcome::NotCertified);
  CHECK(b.details["hypothesis"]["witness"].get<std::string>().rfind("S<id_a>", 0) == 0);
}

TEST_CASE("computation bounds become not certified") {
  TheoremReport r = verify("corfact", "delta2");
  CHECK(r.outcome == Outcome::NotCertified);
  CHECK(r.details.contains("error"));
}

TEST_CASE("unknown names") {
  CHECK(code_of([] { verify("nosuch", "final-in-2"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { verify("homoliso", "nosuch"); }) == ErrorCode::UnknownObject);
}

TEST_CASE("reports are deterministic") {
  VerifyOptions o;
  std::string a = to_json(verify("homoliso", "id-span", o), o).dump();
  std::string b = to_json(verify("homoliso", "id-span", o), o).dump();
  CHECK(a == b);
  Json j = Json::parse(a);
  CHECK(j["header"]["fingerprint_bound"] == 8);
  CHECK(j["header"]["chain_cap"] == 200000);
  CHECK(j["exit_code"] == 0);
}

TEST_CASE("workspace loading") {
  Workspace w = Workspace::load(data("workspace.json"));
  CHECK(w.category("chain").num_morphisms() == 6);
  // fixtures stay reachable
  CHECK(w.category("span").num_objects() == 3);
  DegreeZero wedge = degree_zero(w.diagram("wedge-c2-z3"));
  DegreeZero span = degree_zero(fx::diagram("span-z2-z3"));
  REQUIRE(wedge.fingerprint);
  CHECK(*wedge.fingerprint == *span.fingerprint);
  CHECK(fingerprint(w.presentation("dihedral3")) == fingerprint(presentation_of(symmetric_group_3())));
  CHECK(w.sset("circle", 3).count(1) == 2);
  CHECK(homology_ss(w.sset("nerve:chain", 3), 2)[0].to_string() == "Z");
  CHECK(certify_homotopy_cofinal(w.functor("top-in-chain")).aggregate == Verdict::Contractible);
  CHECK(w.dset("two-over-chain").total_size() == 4);
}

TEST_CASE("workspace errors") {
  CHECK(code_of([] { Workspace::load(data("broken.json")); }) == ErrorCode::MissingComposite);
  CHECK(code_of([] { Workspace::load(data("missing-file.json")); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { Workspace::from_json(Json::array()); }) == ErrorCode::InvalidInput);
  Json bad_functor = Json::parse(R"({
    "categories": {"p": {"objects": ["*"]}},
    "functors": {"f": {"source": "two", "target": "p", "objects": {"a": "*", "b": "*"}, "morphisms": {"u": "nosuch"}}}
  })");
  CHECK(code_of([&] { Workspace::from_json(bad_functor); }) == ErrorCode::UnknownMorphism);
  Json bad_group = Json::parse(R"({"groups": {"g": {"elements": ["e", "a"], "unit": "e", "table": [["e", "a"], ["a", "a"]]}}})");
  CHECK(code_of([&] { Workspace::from_json(bad_group); }) == ErrorCode::GroupAxiomViolation);
  Json bad_ref = Json::parse(R"({"diagrams": {"d": {"category": "one", "values": {"*": [{"label": "A", "group": "nosuch"}]}}}})");
  CHECK(code_of([&] { Workspace::from_json(bad_ref); }) == ErrorCode::UnknownObject);
  Json bad_action = Json::parse(R"({"diagrams": {"d": {"category": "two",
      "values": {"a": [{"label": "A", "group": "Z2"}], "b": [{"label": "B", "group": "Z3"}]},
      "actions": {"u": {"A": {"1": ["B:1"]}}}}}})");
  CHECK(code_of([&] { Workspace::from_json(bad_action); }) == ErrorCode::NotAHomomorphism);
  CHECK(code_of([&] { Workspace{}.sset("nosuch", 2); }) == ErrorCode::UnknownObject);
}
