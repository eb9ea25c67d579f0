// Command-line front end. Exit codes: 0 success or agreement, 1 input error,
// 2 mathematical disagreement, 3 hypothesis not certified.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "hocofin/error.hpp"
#include "hocofin/fixtures.hpp"
#include "hocofin/report.hpp"
#include "hocofin/theorems.hpp"
#include "hocofin/workspace.hpp"

using namespace hocofin;

namespace {

struct Settings {
  std::string format = "text";
  std::string input;
};

void render_text(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [&](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
      if (e.is_structured()) return false;
    return true;
  };
  auto inline_list = [&](const Json& v) {
    std::string line;
    for (const auto& e : v) line += (line.empty() ? "" : ", ") + scalar(e);
    return "[" + line + "]";
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !flat(v)) {
        out << pad << k << ":\n";
        render_text(out, v, indent + 1);
      } else if (flat(v)) {
        out << pad << k << ": " << inline_list(v) << "\n";
      } else {
        out << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (flat(v)) {
        out << pad << "- " << inline_list(v) << "\n";
      } else if (v.is_structured()) {
        out << pad << "-\n";
        render_text(out, v, indent + 1);
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

void emit(const Settings& s, const Json& j) {
  if (s.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    render_text(std::cout, j, 0);
  }
}

Workspace workspace(const Settings& s) { return s.input.empty() ? Workspace{} : Workspace::load(s.input); }

bool is_abelian_value(const FreeProduct& g) { return g.nontrivial_factors() <= 1 && [&] {
  for (const auto& [label, f] : g.factors())
    if (!f.is_abelian()) return false;
  return true;
}(); }

CofinalReport cofinal_for(const Functor& f, bool coinitial, int effort, std::size_t n_max) {
  CertifyOptions o;
  o.effort = effort;
  o.n_max = n_max;
  return certify_homotopy_cofinal(f, coinitial, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of group diagrams over finite categories"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--input", s.input, "JSON workspace file; its names shadow the built-in fixtures");

  std::string name, name2, file, system;
  std::size_t n_max = 3, level = 3;
  int effort = 1;
  bool abelian = false, abelianize = false, coinitial = false, unconditional = false;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Validate a JSON workspace file");
  validate->add_option("file", file)->required();
  validate->callback([&] {
    action = [&] {
      Workspace w = Workspace::load(file);
      emit(s, {{"valid", true}, {"defined", w.summary()}});
      return 0;
    };
  });

  auto* homology = app.add_subcommand("homology", "colim_n of a group diagram");
  homology->add_option("--diagram", name)->required();
  homology->add_option("--nmax", n_max);
  auto* ab_flag = homology->add_flag("--abelian", abelian, "Values must be abelian; compute colim_n directly");
  homology->add_flag("--abelianize", abelianize, "Derived colimits of the abelianized diagram")->excludes(ab_flag);
  homology->callback([&] {
    action = [&] {
      GroupDiagram g = workspace(s).diagram(name);
      if (abelian)
        for (const auto& v : g.values())
          if (!is_abelian_value(v)) fail(ErrorCode::InvalidInput, "--abelian needs abelian values");
      Json out{{"diagram", name}, {"n_max", n_max}};
      out["abelian"] = to_json(ab_colim_derived(abelianize_diagram(g), n_max));
      if (!abelian && !abelianize) out["n0"] = to_json(degree_zero(g));
      emit(s, out);
      return 0;
    };
  });

  auto* colim = app.add_subcommand("colim0", "Presentation and fingerprint of colim_0");
  colim->add_option("--diagram", name)->required();
  colim->callback([&] {
    action = [&] {
      GroupDiagram g = workspace(s).diagram(name);
      DegreeZero d = degree_zero(g);
      Json out = to_json(d);
      out["diagram"] = name;
      out["raw"] = to_json(colim0_raw(g));
      out["abelianization"] = abelianization(d.presentation).to_string();
      emit(s, out);
      return 0;
    };
  });

  auto* cofinal = app.add_subcommand("check-cofinal", "Certify homotopy cofinality of a functor");
  cofinal->add_option("--functor", name)->required();
  cofinal->add_flag("--coinitial", coinitial);
  cofinal->add_option("--effort", effort);
  cofinal->add_option("--nmax", n_max);
  cofinal->callback([&] {
    action = [&] {
      Functor f = workspace(s).functor(name);
      CofinalReport r = cofinal_for(f, coinitial, effort, n_max);
      Json out = to_json(r, f.target());
      out["functor"] = name;
      emit(s, out);
      return r.aggregate == Verdict::Contractible || r.aggregate == Verdict::Evidence ? 0 : 3;
    };
  });

  auto* vdc = app.add_subcommand("check-vdc", "Check that every left fibre is finally discrete");
  vdc->add_option("--functor", name)->required();
  vdc->callback([&] {
    action = [&] {
      Functor f = workspace(s).functor(name);
      VdcReport r = is_vdc(f);
      Json out = to_json(r, f.target());
      out["functor"] = name;
      emit(s, out);
      return r.ok ? 0 : 3;
    };
  });

  auto* kan = app.add_subcommand("kan-extend", "Left Kan extension along a virtual discrete cofibration");
  kan->add_option("--functor", name)->required();
  kan->add_option("--diagram", name2)->required();
  kan->callback([&] {
    action = [&] {
      Workspace w = workspace(s);
      emit(s, to_json(kan_extend_vdc(w.functor(name), w.diagram(name2))));
      return 0;
    };
  });

  auto* fact = app.add_subcommand("factorization", "Factorization category");
  fact->add_option("--category", name)->required();
  fact->callback([&] {
    action = [&] {
      emit(s, to_json(factorization(workspace(s).category(name)).category));
      return 0;
    };
  });

  auto* bw = app.add_subcommand("bw", "Baues-Wirsching homology with a named natural system");
  bw->add_option("--category", name)->required();
  bw->add_option("--system", system)->required();
  bw->add_option("--nmax", n_max);
  bw->callback([&] {
    action = [&] {
      FinCat c = workspace(s).category(name);
      FinCat base = opposite(factorization(c).category);
      BwResult r = fixtures::is_abelian_system(system) ? bw_homology(c, fixtures::abelian_system(system, base), n_max)
                                                       : bw_homology(c, fixtures::group_system(system, base), n_max);
      emit(s, to_json(r));
      return 0;
    };
  });

  auto* gz = app.add_subcommand("gz", "Gabriel-Zisman homology of a D-set with a named system");
  gz->add_option("--dset", name)->required();
  gz->add_option("--system", system)->required();
  gz->add_option("--nmax", n_max);
  gz->callback([&] {
    action = [&] {
      DSet x = workspace(s).dset(name);
      FinCat base = opposite(elements(x).category);
      GzResult r = fixtures::is_abelian_system(system) ? gz_homology(x, fixtures::abelian_system(system, base), n_max)
                                                       : gz_homology(x, fixtures::group_system(system, base), n_max);
      emit(s, to_json(r));
      return 0;
    };
  });

  auto* andre = app.add_subcommand("andre", "Andre homology of a D-set with a diagram on D");
  andre->add_option("--dset", name)->required();
  andre->add_option("--diagram", name2)->required();
  andre->add_option("--nmax", n_max);
  andre->callback([&] {
    action = [&] {
      Workspace w = workspace(s);
      emit(s, to_json(andre_homology(w.dset(name), w.diagram(name2), n_max)));
      return 0;
    };
  });

  auto* hoc = app.add_subcommand("hocolim", "Pointed homotopy colimit of a pointed diagram");
  hoc->add_option("--pointed-diagram", name)->required();
  hoc->add_option("--level", level);
  hoc->add_option("--nmax", n_max);
  hoc->callback([&] {
    action = [&] {
      if (n_max + 1 > level) fail(ErrorCode::LevelTooLow, "--nmax needs --level at least nmax + 1");
      TruncSSet h = hocolim_pointed(fixtures::pointed_diagram(name, level), level);
      std::vector<std::size_t> counts;
      for (std::size_t n = 0; n <= level; ++n) counts.push_back(h.count(n));
      auto fp = pi1_fingerprint(h);
      emit(s, {{"pointed_diagram", name},
               {"level", level},
               {"counts", counts},
               {"homology", to_json(homology_ss(h, n_max))},
               {"pi1_fingerprint", fp ? Json(*fp) : Json(nullptr)}});
      return 0;
    };
  });

  auto* pi1 = app.add_subcommand("pi1", "Edge-path presentation of the fundamental group");
  pi1->add_option("--sset", name)->required();
  pi1->add_option("--level", level);
  pi1->callback([&] {
    action = [&] {
      TruncSSet x = workspace(s).sset(name, level);
      GroupPresentation p = tietze_simplify(edge_path_group(x));
      auto fp = pi1_fingerprint(x);
      emit(s, {{"sset", name},
               {"presentation", to_json(p)},
               {"abelianization", abelianization(p).to_string()},
               {"fingerprint", fp ? Json(*fp) : Json(nullptr)}});
      return 0;
    };
  });

  auto* finger = app.add_subcommand("fingerprint", "Hom counts into every group of order at most 8");
  finger->add_option("--presentation", name)->required();
  finger->callback([&] {
    action = [&] {
      GroupPresentation p = workspace(s).presentation(name);
      std::vector<std::string> catalog;
      for (const auto& [n, g] : group_catalog()) catalog.push_back(n);
      emit(s, {{"presentation", to_json(p)}, {"catalog", catalog}, {"fingerprint", fingerprint(p)}});
      return 0;
    };
  });

  auto* list = app.add_subcommand("fixtures", "List built-in fixtures, or those a theorem accepts");
  std::string theorem;
  list->add_option("--theorem", theorem)->check(CLI::IsMember(theorem_names()));
  list->callback([&] {
    action = [&] {
      if (!theorem.empty()) {
        emit(s, {{"theorem", theorem}, {"kind", fixture_kind(theorem)}, {"fixtures", fixture_names(theorem)}});
        return 0;
      }
      emit(s, {{"categories", fixtures::category_names()},
               {"functors", fixtures::functor_names()},
               {"diagrams", fixtures::diagram_names()},
               {"pointed_diagrams", fixtures::pointed_diagram_names()},
               {"dsets", fixtures::dset_names()},
               {"dset_morphisms", fixtures::dset_morphism_names()},
               {"systems", fixtures::system_names()},
               {"theorems", theorem_names()}});
      return 0;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem on a fixture");
  verify_cmd->add_option("--theorem", theorem)->required()->check(CLI::IsMember(theorem_names()));
  verify_cmd->add_option("--fixture", name)->required();
  verify_cmd->add_option("--nmax", n_max);
  verify_cmd->add_option("--effort", effort);
  verify_cmd->add_option("--level", level);
  verify_cmd->add_flag("--unconditional", unconditional, "Compare even when the hypothesis is not certified");
  verify_cmd->callback([&] {
    action = [&] {
      VerifyOptions o;
      o.n_max = n_max;
      o.effort = effort;
      o.level = level;
      o.unconditional = unconditional;
      TheoremReport r = verify(theorem, name, o);
      emit(s, to_json(r, o));
      return exit_code(r.outcome);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    if (s.format == "json") std::cout << Json{{"error", {{"code", "UsageError"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (s.format == "json")
      std::cout << Json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  }
}
