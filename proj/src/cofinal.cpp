#include "hocofin/cofinal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "hocofin/chains.hpp"
#include "hocofin/error.hpp"
#include "hocofin/groups.hpp"
#include "hocofin/parallel.hpp"
#include "hocofin/presheaf.hpp"

namespace hocofin {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NonContractible:
      return "NONCONTRACTIBLE";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
    case Verdict::Evidence:
      return "EVIDENCE";
    case Verdict::Contractible:
      return "CONTRACTIBLE";
  }
  return "?";
}

Verdict weakest(Verdict a, Verdict b) { return static_cast<int>(a) <= static_cast<int>(b) ? a : b; }

FinallyDiscreteReport finally_discrete(const FinCat& b) {
  FinallyDiscreteReport r;
  r.components = connected_components(b);
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    const auto& comp = r.components[k];
    std::optional<std::size_t> fin;
    for (std::size_t t : comp) {
      bool final = true;
      for (std::size_t x : comp) final = final && b.hom(x, t).size() == 1;
      if (final) {
        fin = t;
        break;
      }
    }
    r.finals.push_back(fin);
    if (!fin && r.ok) {
      r.ok = false;
      r.failing_component = k;
    }
  }
  return r;
}

VdcReport is_vdc(const Functor& s) {
  VdcReport r;
  for (std::size_t d = 0; d < s.target().num_objects(); ++d) {
    r.fibres.push_back(finally_discrete(comma_left_fibre(s, d).category));
    if (!r.fibres.back().ok && r.ok) {
      r.ok = false;
      r.failing_object = d;
    }
  }
  return r;
}

namespace {

std::optional<std::pair<std::size_t, bool>> cone_of(const FinCat& b) {
  auto fin = final_objects(b);
  if (!fin.empty()) return std::make_pair(fin.front(), true);
  auto ini = initial_objects(b);
  if (!ini.empty()) return std::make_pair(ini.front(), false);
  return std::nullopt;
}

bool has_cone(const FinCat& b) { return b.num_objects() > 0 && cone_of(b).has_value(); }

struct Collapser {
  const FinCat& b;
  const CertifyOptions& opts;

  // The comma categories x|i and i|x for the inclusion of `rest` into the full
  // subcategory on rest + removed.
  struct Fibres {
    FinCat coslice, slice;
  };

  Fibres fibres(const std::vector<std::size_t>& current, const std::vector<std::size_t>& rest, std::size_t x) const {
    Subcategory cur = full_subcategory(b, current);
    std::vector<std::size_t> local;
    for (std::size_t o : rest)
      local.push_back(static_cast<std::size_t>(std::find(current.begin(), current.end(), o) - current.begin()));
    Subcategory sub = full_subcategory(cur.category, local);
    std::size_t lx = static_cast<std::size_t>(std::find(current.begin(), current.end(), x) - current.begin());
    return {comma_coslice(sub.inclusion, lx).category, comma_left_fibre(sub.inclusion, lx).category};
  }

  bool contractible(const FinCat& c) const {
    if (opts.effort <= 1) return has_cone(c);
    CertifyOptions inner = opts;
    inner.effort = opts.effort - 1;
    return certify_contractible(c, inner).verdict == Verdict::Contractible;
  }

  // Tries to remove `xs`; returns the rule used.
  std::optional<std::string> try_remove(const std::vector<std::size_t>& current, const std::vector<std::size_t>& xs) const {
    std::vector<std::size_t> rest;
    for (std::size_t o : current)
      if (std::find(xs.begin(), xs.end(), o) == xs.end()) rest.push_back(o);
    if (rest.empty()) return std::nullopt;
    std::vector<Fibres> fs;
    for (std::size_t x : xs) fs.push_back(fibres(current, rest, x));
    std::string how = opts.effort <= 1 ? "cone" : "recursive";
    bool left = true, right = true;
    for (const auto& f : fs) {
      left = left && contractible(f.coslice);
      if (!left) break;
    }
    if (left) return "x|i " + how;
    for (const auto& f : fs) {
      right = right && contractible(f.slice);
      if (!right) break;
    }
    if (right) return "i|x " + how;
    return std::nullopt;
  }

  // For each object t, the largest full subcategory in which t is initial
  // (or final), tested as in subset_collapse.
  std::optional<std::pair<CollapseStep, std::pair<std::size_t, bool>>> cone_collapse(
      const std::vector<std::size_t>& current) const {
    Subcategory cur = full_subcategory(b, current);
    const FinCat& c = cur.category;
    for (std::size_t t = 0; t < c.num_objects(); ++t)
      for (bool final : {true, false}) {
        std::vector<std::size_t> keep, drop;
        for (std::size_t y = 0; y < c.num_objects(); ++y)
          ((final ? c.hom(y, t) : c.hom(t, y)).size() == 1 ? keep : drop).push_back(y);
        if (drop.empty()) continue;
        if (auto step = collapse_onto(cur, current, keep, drop)) return std::make_pair(*step, std::make_pair(current[t], final));
      }
    return std::nullopt;
  }

  std::optional<CollapseStep> collapse_onto(const Subcategory& cur, const std::vector<std::size_t>& current,
                                            const std::vector<std::size_t>& keep,
                                            const std::vector<std::size_t>& drop) const {
    Subcategory sub = full_subcategory(cur.category, keep);
    for (int side = 0; side < 2; ++side) {
      bool ok = true;
      for (std::size_t x : drop) {
        FinCat f = side == 0 ? comma_coslice(sub.inclusion, x).category : comma_left_fibre(sub.inclusion, x).category;
        if (!has_cone(f)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      CollapseStep step;
      for (std::size_t x : drop) step.removed.push_back(b.object_name(current[x]));
      step.rule = side == 0 ? "x|i cone" : "i|x cone";
      return step;
    }
    return std::nullopt;
  }

  std::size_t subset_limit() const { return opts.effort >= 2 ? 12 : 10; }

  // Looks for a full subcategory B' with a cone object such that x|i (or i|x)
  // has a cone for every x outside B'. Larger B' first.
  std::optional<std::pair<CollapseStep, std::pair<std::size_t, bool>>> subset_collapse(
      const std::vector<std::size_t>& current) const {
    const std::size_t k = current.size();
    Subcategory cur = full_subcategory(b, current);
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m + 1 < (1u << k); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t c) { return std::popcount(a) > std::popcount(c); });
    for (std::uint32_t m : masks) {
      std::vector<std::size_t> keep, drop;
      for (std::size_t j = 0; j < k; ++j) (m >> j & 1 ? keep : drop).push_back(j);
      auto c = cone_of(full_subcategory(cur.category, keep).category);
      if (!c) continue;
      if (auto step = collapse_onto(cur, current, keep, drop))
        return std::make_pair(*step, std::make_pair(current[keep[c->first]], c->second));
    }
    return std::nullopt;
  }
};

}  // namespace

namespace {
ContractibilityCertificate certify_unguarded(const FinCat& b, const CertifyOptions& opts);
}

ContractibilityCertificate certify_contractible(const FinCat& b, const CertifyOptions& opts) {
  try {
    return certify_unguarded(b, opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeLimitExceeded) throw;
    ContractibilityCertificate cert;
    cert.verdict = Verdict::Inconclusive;
    cert.reason = "size limit";
    cert.n_max = opts.n_max;
    cert.witness = e.what();
    return cert;
  }
}

namespace {

ContractibilityCertificate certify_unguarded(const FinCat& b, const CertifyOptions& opts) {
  ContractibilityCertificate cert;
  cert.n_max = opts.n_max + static_cast<std::size_t>(std::max(0, opts.effort - 2));
  if (b.num_objects() == 0) {
    cert.verdict = Verdict::NonContractible;
    cert.reason = "empty";
    cert.witness = "empty category";
    return cert;
  }
  if (auto c = cone_of(b)) {
    cert.verdict = Verdict::Contractible;
    cert.reason = c->second ? "final object" : "initial object";
    cert.cone = b.object_name(c->first);
    cert.cone_is_final = c->second;
    return cert;
  }
  if (opts.effort >= 1) {
    Collapser col{b, opts};
    std::vector<std::size_t> current;
    for (std::size_t x = 0; x < b.num_objects(); ++x) current.push_back(x);
    bool progress = true;
    while (progress && current.size() > 1) {
      progress = false;
      for (std::size_t x : current) {
        if (auto rule = col.try_remove(current, {x})) {
          cert.collapses.push_back({{b.object_name(x)}, *rule});
          current.erase(std::find(current.begin(), current.end(), x));
          progress = true;
          break;
        }
      }
      if (!progress && opts.effort >= 2) {
        for (std::size_t i = 0; i < current.size() && !progress; ++i)
          for (std::size_t j = i + 1; j < current.size() && !progress; ++j)
            if (auto rule = col.try_remove(current, {current[i], current[j]})) {
              cert.collapses.push_back({{b.object_name(current[i]), b.object_name(current[j])}, *rule});
              std::size_t xi = current[i], xj = current[j];
              std::erase(current, xi);
              std::erase(current, xj);
              progress = true;
            }
      }
      if (progress) {
        FinCat rest = full_subcategory(b, current).category;
        if (auto c = cone_of(rest)) {
          cert.verdict = Verdict::Contractible;
          cert.reason = "collapse";
          cert.cone = rest.object_name(c->first);
          cert.cone_is_final = c->second;
          return cert;
        }
      }
    }
    auto found = col.cone_collapse(current);
    if (!found && current.size() <= col.subset_limit()) found = col.subset_collapse(current);
    {
      if (found) {
        cert.collapses.push_back(found->first);
        cert.verdict = Verdict::Contractible;
        cert.reason = "collapse";
        cert.cone = b.object_name(found->second.first);
        cert.cone_is_final = found->second.second;
        return cert;
      }
    }
  }
  // Homology and fingerprint stage.
  try {
    cert.homology = nerve_homology(b, cert.n_max, opts.chain_cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TruncationUnsound) throw;
    cert.verdict = Verdict::Inconclusive;
    cert.reason = "chain cap";
    cert.witness = e.what();
    return cert;
  }
  for (std::size_t n = 0; n < cert.homology.size(); ++n) {
    const auto& h = cert.homology[n];
    bool acyclic = n == 0 ? (h.free_rank == 1 && h.torsion.empty()) : h.is_zero();
    if (!acyclic) {
      cert.verdict = Verdict::NonContractible;
      cert.reason = "homology";
      cert.witness = "H" + std::to_string(n) + " = " + h.to_string();
      return cert;
    }
  }
  try {
    GroupPresentation p = tietze_simplify(edge_path_group(nerve(b, 2)));
    cert.pi1_fingerprint = fingerprint(p, HomBudget{opts.hom_budget});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    cert.verdict = Verdict::Inconclusive;
    cert.reason = "hom budget";
    cert.witness = e.what();
    return cert;
  }
  const auto& cat = group_catalog();
  for (std::size_t k = 0; k < cert.pi1_fingerprint.size(); ++k)
    if (cert.pi1_fingerprint[k] != 1) {
      cert.verdict = Verdict::NonContractible;
      cert.reason = "pi1";
      cert.witness = "pi1 has " + std::to_string(cert.pi1_fingerprint[k]) + " homomorphisms to " + cat[k].first;
      return cert;
    }
  cert.verdict = Verdict::Evidence;
  cert.reason = "acyclic through degree " + std::to_string(cert.n_max) + ", trivial pi1 fingerprint";
  return cert;
}

}  // namespace

CofinalReport certify_homotopy_cofinal(const Functor& s, bool coinitial, const CertifyOptions& opts) {
  CofinalReport r;
  r.coinitial = coinitial;
  const std::size_t n = s.target().num_objects();
  r.per_object.resize(n);
  parallel_for(n, [&](std::size_t d) {
    FinCat fibre = coinitial ? comma_left_fibre(s, d).category : comma_coslice(s, d).category;
    r.per_object[d] = certify_contractible(fibre, opts);
  });
  for (const auto& c : r.per_object) r.aggregate = weakest(r.aggregate, c.verdict);
  return r;
}

}  // namespace hocofin
