#include "hocofin/theorems.hpp"

#include <functional>
#include <map>

#include "hocofin/error.hpp"
#include "hocofin/fixtures.hpp"

namespace hocofin {

namespace fx = fixtures;

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Agree: return "agree";
    case Outcome::Disagree: return "disagree";
    case Outcome::NotCertified: return "not certified";
  }
  return "?";
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::Agree: return 0;
    case Outcome::Disagree: return 2;
    case Outcome::NotCertified: return 3;
  }
  return 1;
}

CertifyOptions certify_options(const VerifyOptions& o) {
  CertifyOptions c;
  c.effort = o.effort;
  c.n_max = o.n_max;
  c.chain_cap = o.chain_cap;
  c.hom_budget = o.hom_budget;
  return c;
}

Json report_header(const VerifyOptions& o) {
  return {{"n_max", o.n_max},
          {"effort", o.effort},
          {"level", o.level},
          {"unconditional", o.unconditional},
          {"fingerprint_bound", 8},
          {"chain_cap", o.chain_cap},
          {"hom_budget", o.hom_budget}};
}

Json to_json(const TheoremReport& r, const VerifyOptions& o) {
  return {{"header", report_header(o)},
          {"theorem", r.theorem},
          {"fixture", r.fixture},
          {"outcome", to_string(r.outcome)},
          {"exit_code", exit_code(r.outcome)},
          {"label", r.label},
          {"summary", r.summary},
          {"details", r.details}};
}

namespace {

using Family = std::vector<std::pair<std::string, GroupDiagram>>;

const std::vector<std::string> group_systems{"const-Z2", "corep-Z2", "const-S3"};

// Fixture diagrams living on c, then the group systems over c.
Family diagrams_on(const FinCat& c) {
  Family out;
  for (const auto& name : fx::diagram_names()) {
    GroupDiagram g = fx::diagram(name);
    if (g.base() == c) out.emplace_back(name, std::move(g));
  }
  for (const auto& s : group_systems) out.emplace_back(s, fx::group_system(s, c));
  return out;
}

Family systems_on(const FinCat& c) {
  Family out;
  for (const auto& s : group_systems) out.emplace_back(s, fx::group_system(s, c));
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : ", ") + p;
  return s;
}

std::string show(const std::vector<AbelianInvariants>& h) {
  std::string s;
  for (const auto& g : h) s += (s.empty() ? "" : "; ") + g.to_string();
  return s;
}

std::string label_for(Verdict v) {
  switch (v) {
    case Verdict::Contractible: return "certified";
    case Verdict::Evidence: return "conditional";
    default: return "unconditional comparison";
  }
}

bool certified(Verdict v) { return v == Verdict::Contractible || v == Verdict::Evidence; }

// Outcome of a comparison under a hypothesis verdict.
void settle(TheoremReport& r, Verdict hypothesis, bool agree, const VerifyOptions& o) {
  if (!certified(hypothesis) && !o.unconditional) {
    r.outcome = Outcome::NotCertified;
    r.label = "not certified";
    return;
  }
  r.label = label_for(hypothesis);
  r.outcome = agree ? Outcome::Agree : Outcome::Disagree;
}

struct Side {
  std::vector<AbelianInvariants> abelian;
  DegreeZero n0;
};

Side side_of(const GroupDiagram& g, const VerifyOptions& o) {
  return {ab_colim_derived(abelianize_diagram(g), o.n_max, o.chain_cap), degree_zero(g)};
}

Json side_json(const Side& s) { return {{"abelian", to_json(s.abelian)}, {"n0", to_json(s.n0)}}; }

// Abelian lists must match exactly; fingerprints only when both fit the budget.
bool sides_agree(const Side& a, const Side& b) {
  if (a.abelian != b.abelian) return false;
  if (a.n0.fingerprint && b.n0.fingerprint) return *a.n0.fingerprint == *b.n0.fingerprint;
  return true;
}

// Runs lhs/rhs for every family member and records them under "comparisons".
bool compare_family(TheoremReport& r, const Family& family,
                    const std::function<std::pair<GroupDiagram, GroupDiagram>(const GroupDiagram&)>& sides,
                    const VerifyOptions& o, std::vector<std::string>& failed) {
  Json list = Json::array();
  bool all = true;
  for (const auto& [name, g] : family) {
    auto [l, rr] = sides(g);
    Side a = side_of(l, o), b = side_of(rr, o);
    bool ok = sides_agree(a, b);
    list.push_back({{"coefficients", name}, {"lhs", side_json(a)}, {"rhs", side_json(b)}, {"agree", ok}});
    if (!ok) {
      all = false;
      failed.push_back(name + " (" + show(a.abelian) + " vs " + show(b.abelian) + ")");
    }
  }
  r.details["comparisons"] = list;
  return all;
}

void homoliso(TheoremReport& r, const std::string& fixture, const VerifyOptions& o) {
  Functor s = fx::functor(fixture);
  CofinalReport cof = certify_homotopy_cofinal(s, false, certify_options(o));
  r.details["hypothesis"] = to_json(cof, s.target());
  if (!certified(cof.aggregate) && !o.unconditional) {
    settle(r, cof.aggregate, false, o);
    r.summary = "homotopy cofinality is " + to_string(cof.aggregate) + "; no comparison made";
    return;
  }
  std::vector<std::string> failed;
  bool agree = compare_family(r, diagrams_on(s.target()),
                              [&](const GroupDiagram& g) { return std::pair{pullback(g, s), g}; }, o, failed);
  settle(r, cof.aggregate, agree, o);
  r.summary = agree ? "colim_n of G S and G indistinguishable for every coefficient diagram"
                    : "disagreement for " + join(failed);
}

void discvirt(TheoremReport& r, const std::string& fixture, const VerifyOptions& o) {
  Functor s = fx::functor(fixture);
  VdcReport vdc = is_vdc(s);
  r.details["hypothesis"] = to_json(vdc, s.target());
  if (!vdc.ok) {
    r.outcome = Outcome::NotCertified;
    r.label = "not certified";
    r.summary = "not a virtual discrete cofibration at " + s.target().object_name(*vdc.failing_object);
    return;
  }
  std::vector<std::string> failed;
  bool agree = compare_family(r, diagrams_on(s.source()),
                              [&](const GroupDiagram& g) { return std::pair{g, kan_extend_vdc(s, g)}; }, o, failed);
  r.label = "certified";
  r.outcome = agree ? Outcome::Agree : Outcome::Disagree;
  r.summary = agree ? "colim_n preserved by the Kan extension for every coefficient diagram"
                    : "disagreement for " + join(failed);
}

void cofpointed(TheoremReport& r, const std::string& fixture, const VerifyOptions& o) {
  Functor s = fx::functor(fixture);
  const std::size_t level = std::max<std::size_t>(o.level, 2);
  const std::size_t n = std::min(o.n_max, level - 1);
  CofinalReport cof = certify_homotopy_cofinal(s, false, certify_options(o));
  r.details["hypothesis"] = to_json(cof, s.target());
  r.details["level"] = level;
  r.details["degrees"] = n;
  if (!certified(cof.aggregate) && !o.unconditional) {
    settle(r, cof.aggregate, false, o);
    r.summary = "homotopy cofinality is " + to_string(cof.aggregate) + "; no comparison made";
    return;
  }
  std::vector<std::pair<std::string, PointedDiagram>> family;
  for (const auto& name : fx::pointed_diagram_names()) {
    PointedDiagram x = fx::pointed_diagram(name, level);
    if (x.base() == s.target()) family.emplace_back(name, std::move(x));
  }
  family.emplace_back("point", constant_point_diagram(s.target(), level));
  family.emplace_back("B-const-Z2", classifying_diagram(fx::group_system("const-Z2", s.target()), level));
  Json list = Json::array();
  std::vector<std::string> failed;
  for (const auto& [name, x] : family) {
    HocolimComparison c = cofinal_hocolim_compare(s, x, level, n, certify_options(o));
    Json item = to_json(c);
    item["diagram"] = name;
    list.push_back(item);
    if (!c.agree) failed.push_back(name + " (" + show(c.lhs_homology) + " vs " + show(c.rhs_homology) + ")");
  }
  r.details["comparisons"] = list;
  settle(r, cof.aggregate, failed.empty(), o);
  r.summary = failed.empty() ? "pointed hocolims indistinguishable for every diagram"
                             : "disagreement for " + join(failed);
}

void main2_n0(TheoremReport& r, const std::string& fixture, const VerifyOptions& o) {
  GroupDiagram g = fx::diagram(fixture);
  const std::size_t level = std::max<std::size_t>(o.level, 2);
  TruncSSet h = hocolim_pointed(classifying_diagram(g, level), level);
  auto lhs = pi1_fingerprint(h);
  DegreeZero rhs = degree_zero(g);
  r.details["pi1_fingerprint"] = lhs ? Json(*lhs) : Json(nullptr);
  r.details["colim0"] = to_json(rhs);
  r.details["level"] = level;
  r.label = "certified";
  if (!lhs || !rhs.fingerprint) {
    r.outcome = Outcome::NotCertified;
    r.label = "not certified";
    r.summary = "fingerprint over the hom budget";
    return;
  }
  bool agree = *lhs == *rhs.fingerprint;
  r.outcome = agree ? Outcome::Agree : Outcome::Disagree;
  r.summary = agree ? "pi_1 of the pointed hocolim and colim_0 have equal fingerprints"
                    : "fingerprints of pi_1 and colim_0 differ";
}

void contralan(TheoremReport& r, const std::string& fixture, const VerifyOptions& o) {
  DSet x = fx::dset(fixture);
  FinCat base = opposite(elements(x).category);
  Json list = Json::array();
  std::vector<std::string> failed;
  for (const auto& sys : fx::system_names()) {
    try {
      GzResult g = fx::is_abelian_system(sys) ? gz_homology(x, fx::abelian_system(sys, base), o.n_max, o.chain_cap)
                                              : gz_homology(x, fx::group_system(sys, base), o.n_max, o.chain_cap);
      Json item = to_json(g);
      item["system"] = sys;
      list.push_back(item);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RouteMismatch) throw;
      list.push_back({{"system", sys}, {"routes_agree", false}, {"error", e.what()}});
      failed.push_back(sys);
    }
  }
  r.details["results"] = list;
  r.label = "certified";
  r.outcome = failed.empty() ? Outcome::Agree : Outcome::Disagree;
  r.summary = failed.empty() ? "elements route and Lan route agree for every system"
                             : "routes differ for " + join(failed);
}

void corfact(TheoremReport& r, const std::string& fixture, const VerifyOptions& o) {
  FinCat c = fx::category(fixture);
  FinCat base = opposite(factorization(c).category);
  Json list = Json::array();
  std::vector<std::string> failed;
  for (const auto& sys : fx::system_names()) {
    try {
      BwResult b = fx::is_abelian_system(sys) ? bw_homology(c, fx::abelian_system(sys, base), o.n_max, o.chain_cap)
                                              : bw_homology(c, fx::group_system(sys, base), o.n_max, o.chain_cap);
      Json item = to_json(b);
      item["system"] = sys;
      list.push_back(item);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RouteMismatch) throw;
      list.push_back({{"system", sys}, {"routes_agree", false}, {"error", e.what()}});
      failed.push_back(sys);
    }
  }
  r.details["results"] = list;
  r.label = "certified";
  r.outcome = failed.empty() ? Outcome::Agree : Outcome::Disagree;
  r.summary = failed.empty() ? "factorization route and nerve route agree for every system"
                             : "routes differ for " + join(failed);
}

void factfibres(TheoremReport& r, const std::string& fixture, const VerifyOptions&) {
  Functor s = fx::functor(fixture);
  Functor fs = factor_functor(s);
  Json list = Json::array();
  std::vector<std::string> failed;
  for (std::size_t a = 0; a < s.target().num_morphisms(); ++a) {
    FinCat lhs = comma_left_fibre(fs, a).category;
    FinCat rhs = factorization(factor_slice(s, a).category).category;
    bool iso = iso_check(lhs, rhs).has_value();
    list.push_back({{"morphism", s.target().morphism_name(a)},
                    {"lhs_objects", lhs.num_objects()},
                    {"lhs_morphisms", lhs.num_morphisms()},
                    {"rhs_objects", rhs.num_objects()},
                    {"rhs_morphisms", rhs.num_morphisms()},
                    {"isomorphic", iso}});
    if (!iso) failed.push_back(s.target().morphism_name(a));
  }
  r.details["fibres"] = list;
  r.label = "certified";
  r.outcome = failed.empty() ? Outcome::Agree : Outcome::Disagree;
  r.summary = failed.empty() ? "isomorphism found for every morphism of the target"
                             : "no isomorphism for " + join(failed);
}

void wefrac(TheoremReport& r, const std::string& fixture, const VerifyOptions& o) {
  FinCat c = fx::category(fixture);
  CofinalReport cof = certify_homotopy_cofinal(factorization(c).cod, true, certify_options(o));
  r.details["certificate"] = to_json(cof, c);
  switch (cof.aggregate) {
    case Verdict::Contractible:
    case Verdict::Evidence:
      r.outcome = Outcome::Agree;
      r.label = label_for(cof.aggregate);
      break;
    case Verdict::Inconclusive:
      r.outcome = Outcome::NotCertified;
      r.label = "not certified";
      break;
    case Verdict::NonContractible:
      r.outcome = Outcome::Disagree;
      r.label = "certified";
      break;
  }
  r.summary = "cod is homotopy coinitial: weakest fibre verdict " + to_string(cof.aggregate);
}

void lcodecar(TheoremReport& r, const std::string& fixture, const VerifyOptions& o) {
  const std::size_t level = std::max<std::size_t>(o.level, 1);
  LcodecarReport l = lcodecar_check(fx::pointed_diagram(fixture, level), level);
  r.details["check"] = to_json(l);
  r.details["level"] = level;
  r.label = "certified";
  r.outcome = l.ok ? Outcome::Agree : Outcome::Disagree;
  r.summary = l.ok ? "quotient by the nerve matches the pointed hocolim in every degree" : l.witness;
}

void images(TheoremReport& r, const std::string& fixture, const VerifyOptions& o, bool direct) {
  DSetMorphism f = fx::dset_morphism(fixture);
  FinCat base = opposite(elements(direct ? f.source() : f.target()).category);
  Json list = Json::array();
  std::vector<std::string> failed;
  Verdict hypothesis = Verdict::Contractible;
  std::string witness;
  for (const auto& [name, g] : systems_on(base)) {
    ImageComparison c = direct ? dliso_check(f, g, o.n_max) : dhiso_check(f, g, o.n_max, certify_options(o));
    hypothesis = c.hypothesis;
    witness = c.witness;
    if (!certified(c.hypothesis) && !o.unconditional) break;
    Json item = to_json(c);
    item["system"] = name;
    list.push_back(item);
    if (!c.agree) failed.push_back(name + " (" + show(c.lhs.abelian) + " vs " + show(c.rhs.abelian) + ")");
  }
  r.details["hypothesis"] = {{"verdict", to_string(hypothesis)}, {"witness", witness}};
  r.details["comparisons"] = list;
  settle(r, hypothesis, failed.empty(), o);
  if (r.outcome == Outcome::NotCertified)
    r.summary = "hypothesis fails: " + witness;
  else
    r.summary = failed.empty() ? "homology over the source and the target agree for every system"
                               : "disagreement for " + join(failed);
}

void confhomol_bw(TheoremReport& r, const std::string& fixture, const VerifyOptions& o) {
  Functor s = fx::functor(fixture);
  FinCat base = opposite(factorization(s.target()).category);
  Json list = Json::array();
  std::vector<std::string> failed;
  Verdict hypothesis = Verdict::Contractible;
  std::string witness;
  for (const auto& [name, g] : systems_on(base)) {
    BwComparison c = confhomol_bw_check(s, g, o.n_max, certify_options(o));
    hypothesis = c.hypothesis;
    witness = c.witness;
    if (!certified(c.hypothesis) && !o.unconditional) break;
    Json item = to_json(c);
    item["system"] = name;
    list.push_back(item);
    if (!c.agree)
      failed.push_back(name + " (" + show(c.lhs.factorization_route) + " vs " + show(c.rhs.factorization_route) + ")");
  }
  r.details["hypothesis"] = {
      {"verdict", to_string(hypothesis)}, {"witness", witness}, {"quantified_over", "morphisms of the target"}};
  r.details["comparisons"] = list;
  settle(r, hypothesis, failed.empty(), o);
  if (r.outcome == Outcome::NotCertified)
    r.summary = "hypothesis fails at " + witness;
  else
    r.summary = failed.empty() ? "BW homology of the source and the target agree for every system"
                               : "disagreement for " + join(failed);
}

struct Entry {
  std::string kind;
  std::function<void(TheoremReport&, const std::string&, const VerifyOptions&)> run;
};

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> t{
      {"homoliso", {"functor", homoliso}},
      {"discvirt", {"functor", discvirt}},
      {"cofpointed", {"functor", cofpointed}},
      {"main2-n0", {"diagram", main2_n0}},
      {"contralan", {"dset", contralan}},
      {"corfact", {"category", corfact}},
      {"factfibres", {"functor", factfibres}},
      {"wefrac", {"category", wefrac}},
      {"lcodecar", {"pointed-diagram", lcodecar}},
      {"dliso", {"dset-morphism", [](auto& r, auto& f, auto& o) { images(r, f, o, true); }}},
      {"dhiso", {"dset-morphism", [](auto& r, auto& f, auto& o) { images(r, f, o, false); }}},
      {"confhomolBW", {"functor", confhomol_bw}},
  };
  return t;
}

const Entry& entry(const std::string& theorem) {
  auto it = registry().find(theorem);
  if (it == registry().end()) fail(ErrorCode::InvalidInput, "unknown theorem '" + theorem + "'");
  return it->second;
}

}  // namespace

std::vector<std::string> theorem_names() {
  return {"homoliso", "discvirt", "cofpointed", "main2-n0", "contralan", "corfact",
          "factfibres", "wefrac", "lcodecar", "dliso", "dhiso", "confhomolBW"};
}

std::string fixture_kind(const std::string& theorem) { return entry(theorem).kind; }

std::vector<std::string> fixture_names(const std::string& theorem) {
  const std::string kind = fixture_kind(theorem);
  if (kind == "functor") return fx::functor_names();
  if (kind == "diagram") return fx::diagram_names();
  if (kind == "dset") return fx::dset_names();
  if (kind == "category") return fx::category_names();
  if (kind == "pointed-diagram") return fx::pointed_diagram_names();
  return fx::dset_morphism_names();
}

TheoremReport verify(const std::string& theorem, const std::string& fixture, const VerifyOptions& opts) {
  const Entry& e = entry(theorem);
  TheoremReport r;
  r.theorem = theorem;
  r.fixture = fixture;
  r.details = Json::object();
  try {
    e.run(r, fixture, opts);
  } catch (const Error& err) {
    switch (err.code()) {
      case ErrorCode::CapExceeded:
      case ErrorCode::TruncationUnsound:
      case ErrorCode::BudgetExceeded:
      case ErrorCode::SizeLimitExceeded:
        r.outcome = Outcome::NotCertified;
        r.label = "not certified";
        r.summary = std::string("computation bound reached: ") + err.what();
        r.details["error"] = err.what();
        break;
      default:
        throw;
    }
  }
  return r;
}

}  // namespace hocofin
