#pragma once

// Diagrams of pointed truncated simplicial sets, classifying spaces and
// homotopy colimits as diagonals of the simplicial replacement.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hocofin/cofinal.hpp"
#include "hocofin/diagrams.hpp"
#include "hocofin/fincat.hpp"
#include "hocofin/presheaf.hpp"

namespace hocofin {

/// Functor C -> sSet_* with values sharing one truncation level.
class PointedDiagram {
 public:
  using Maps = std::vector<std::vector<std::size_t>>;  // [n][x]

  PointedDiagram() = default;
  /// maps[m][n][x] = X(m)_n(x). Throws LevelMismatch on mixed levels,
  /// InvalidInput on unpointed values and FunctorViolation when a map is not
  /// simplicial, moves a basepoint, or breaks identities or composition.
  PointedDiagram(FinCat base, std::vector<TruncSSet> values, std::vector<Maps> maps);

  const FinCat& base() const { return base_; }
  std::size_t level() const { return level_; }
  const TruncSSet& value(std::size_t c) const { return values_[c]; }
  std::size_t apply(std::size_t m, std::size_t n, std::size_t x) const { return maps_[m][n][x]; }
  const std::vector<TruncSSet>& values() const { return values_; }
  const std::vector<Maps>& maps() const { return maps_; }

 private:
  FinCat base_;
  std::size_t level_ = 0;
  std::vector<TruncSSet> values_;
  std::vector<Maps> maps_;
};

/// Delta[0] at every object, pointed.
TruncSSet point_sset(std::size_t level);
/// Delta[1] with its two vertices identified, pointed at the vertex.
TruncSSet simplicial_circle(std::size_t level);

PointedDiagram constant_point_diagram(const FinCat& c, std::size_t level);
PointedDiagram pullback(const PointedDiagram& x, const Functor& s);

/// Nerve of the one-object category of G, pointed at its vertex.
TruncSSet classifying_space(const FinGroup& g, std::size_t level);
/// Free products with more than one nontrivial factor are infinite and raise
/// CapExceeded.
TruncSSet classifying_space(const FreeProduct& g, std::size_t level);
/// B o G. Same restriction on values as classifying_space.
PointedDiagram classifying_diagram(const GroupDiagram& g, std::size_t level);

/// Unpointed diagonal: n-simplices are the pairs (sigma, x) with sigma a
/// length-n chain c0 -> ... -> cn and x in X(c0)_n, in order of sigma then x.
struct HocolimIndex {
  std::vector<std::vector<Chain>> chains;               // per degree
  std::vector<std::vector<std::size_t>> offsets;        // per degree, per chain
  std::vector<std::map<Chain, std::size_t>> chain_index;
};
TruncSSet hocolim_unpointed(const PointedDiagram& x, std::size_t level, HocolimIndex* index = nullptr);

/// Pointed diagonal: index 0 in every degree is the class of all (sigma, *);
/// the other simplices are the pairs with x off the basepoint, in the same
/// order as in the unpointed version. LevelMismatch when level exceeds the
/// diagram's level.
TruncSSet hocolim_pointed(const PointedDiagram& x, std::size_t level);

struct LcodecarReport {
  bool ok = true;
  std::string witness;                 // first failure
  std::vector<std::size_t> nerve_counts, total_counts, quotient_counts;
};
/// Inclusion sigma |-> (sigma, *) of the nerve into the unpointed hocolim,
/// injectivity, closure of its image, and a degreewise bijection of the
/// quotient with the pointed hocolim commuting with faces and degeneracies.
LcodecarReport lcodecar_check(const PointedDiagram& x, std::size_t level);

struct HocolimComparison {
  Verdict hypothesis = Verdict::Inconclusive;
  std::string label;  // certified, conditional or unconditional comparison
  std::vector<AbelianInvariants> lhs_homology, rhs_homology;
  std::optional<std::vector<std::uint64_t>> lhs_pi1, rhs_pi1;  // empty when over budget
  bool map_is_simplicial = false;
  bool agree = false;
};
/// hocolim over C of X o S against hocolim over D of X, through degree
/// n_max (needs level >= n_max + 1).
HocolimComparison cofinal_hocolim_compare(const Functor& s, const PointedDiagram& x, std::size_t level,
                                          std::size_t n_max, const CertifyOptions& opts = {});

/// Fingerprint of the edge-path group; nullopt when the budget runs out.
std::optional<std::vector<std::uint64_t>> pi1_fingerprint(const TruncSSet& x);

}  // namespace hocofin
