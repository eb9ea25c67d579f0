#pragma once

// Truncated simplicial sets, nerves of finite categories, finite presheaves
// (D-sets), categories of elements and inverse fibres.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hocofin/fincat.hpp"
#include "hocofin/groups.hpp"
#include "hocofin/homalg.hpp"

namespace hocofin {

/// Simplicial set truncated at level N: simplices X_0..X_N, faces d_i on
/// X_1..X_N and degeneracies s_i on X_0..X_{N-1}. Degenerate simplices are
/// stored explicitly. Construction checks every simplicial identity.
class TruncSSet {
 public:
  using Table = std::vector<std::vector<std::vector<std::size_t>>>;  // [n][i][x]

  TruncSSet() = default;
  /// faces[n][i] is d_i : X_n -> X_{n-1} (faces[0] is empty);
  /// degeneracies[n][i] is s_i : X_n -> X_{n+1} for n < N.
  TruncSSet(std::vector<std::size_t> counts, Table faces, Table degeneracies,
            std::optional<std::size_t> basepoint = std::nullopt,
            std::vector<std::vector<std::string>> names = {});

  std::size_t level() const { return counts_.size() - 1; }
  std::size_t count(std::size_t n) const { return counts_[n]; }
  std::size_t face(std::size_t n, std::size_t i, std::size_t x) const { return faces_[n][i][x]; }
  std::size_t degeneracy(std::size_t n, std::size_t i, std::size_t x) const {
    return degeneracies_[n][i][x];
  }
  std::optional<std::size_t> basepoint() const { return basepoint_; }
  /// The totally degenerate n-simplex on the basepoint.
  std::size_t basepoint_at(std::size_t n) const;
  bool is_degenerate(std::size_t n, std::size_t x) const { return degenerate_[n][x]; }
  std::vector<std::size_t> nondegenerate(std::size_t n) const;
  std::string name(std::size_t n, std::size_t x) const;
  const Table& faces() const { return faces_; }
  const Table& degeneracies() const { return degeneracies_; }

  TruncSSet with_basepoint(std::size_t vertex) const;

 private:
  std::vector<std::size_t> counts_{0};
  Table faces_{{}}, degeneracies_;
  std::optional<std::size_t> basepoint_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<bool>> degenerate_{{}};
};

/// Throws SimplicialIdentityViolation naming the first failing identity.
void check_simplicial_identities(const TruncSSet& x);

/// A chain c0 -> c1 -> ... -> cn of composable morphisms.
struct Chain {
  std::size_t c0 = 0;
  std::vector<std::size_t> mors;

  std::size_t length() const { return mors.size(); }
  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

std::size_t chain_object(const FinCat& c, const Chain& s, std::size_t k);
Chain chain_face(const FinCat& c, const Chain& s, std::size_t i);
Chain chain_degeneracy(const FinCat& c, const Chain& s, std::size_t i);
bool chain_is_degenerate(const FinCat& c, const Chain& s);
/// Composite of the whole chain (identity of c0 for length 0).
std::size_t chain_composite(const FinCat& c, const Chain& s);
std::string chain_name(const FinCat& c, const Chain& s);

/// All length-n chains in lexicographic order of (c0, morphism ids).
std::vector<Chain> all_chains(const FinCat& c, std::size_t n);
/// Chains without identities. Throws CapExceeded beyond `cap` chains.
std::vector<Chain> nondegenerate_chains(const FinCat& c, std::size_t n,
                                        std::size_t cap = static_cast<std::size_t>(-1));

struct Nerve {
  TruncSSet sset;
  std::vector<std::vector<Chain>> chains;  // per degree, index = simplex id
};
Nerve nerve_with_chains(const FinCat& c, std::size_t level);
TruncSSet nerve(const FinCat& c, std::size_t level);

/// Homology of the normalized chain complex in degrees 0..n_max; needs
/// level >= n_max + 1 (LevelTooLow otherwise).
std::vector<AbelianInvariants> homology_ss(const TruncSSet& x, std::size_t n_max);

/// Edge-path presentation of pi_1 at the basepoint (vertex 0 when unpointed).
/// Throws LevelTooLow below level 2 and NotConnected.
GroupPresentation edge_path_group(const TruncSSet& x);

/// Finite presheaf X : D^op -> Set. For m : b -> a, act(m, x) maps X(a) to
/// X(b).
class DSet {
 public:
  DSet() = default;
  /// maps[m][x] = X(m)(x) for x in X(cod m). Checks X(id) = id and
  /// X(g o f) = X(f) X(g) (FunctorViolation).
  DSet(FinCat base, std::vector<std::vector<std::string>> elements,
       std::vector<std::vector<std::size_t>> maps);

  const FinCat& base() const { return base_; }
  std::size_t size(std::size_t a) const { return elements_[a].size(); }
  std::size_t total_size() const;
  const std::string& name(std::size_t a, std::size_t x) const { return elements_[a][x]; }
  const std::vector<std::vector<std::string>>& elements() const { return elements_; }
  std::size_t element(std::size_t a, const std::string& name) const;  // UnknownLabel
  std::size_t act(std::size_t m, std::size_t x) const { return maps_[m][x]; }
  const std::vector<std::vector<std::size_t>>& maps() const { return maps_; }

 private:
  FinCat base_;
  std::vector<std::vector<std::string>> elements_;
  std::vector<std::vector<std::size_t>> maps_;
};

/// Builds a D-set from element names; identity actions may be omitted.
DSet dset_from_names(const FinCat& base, const std::map<std::string, std::vector<std::string>>& sets,
                     const std::map<std::string, std::map<std::string, std::string>>& maps);

/// h_d(a) = Hom(a, d), elements named by morphism names.
DSet representable(const FinCat& c, std::size_t d);
DSet coproduct(const DSet& x, const DSet& y);
/// Terminal D-set: one element "*" everywhere.
DSet terminal_dset(const FinCat& c);

class DSetMorphism {
 public:
  /// components[a][x] in target(a); NaturalityViolation when not natural.
  DSetMorphism(DSet source, DSet target, std::vector<std::vector<std::size_t>> components);

  const DSet& source() const { return source_; }
  const DSet& target() const { return target_; }
  std::size_t apply(std::size_t a, std::size_t x) const { return components_[a][x]; }
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }

 private:
  DSet source_, target_;
  std::vector<std::vector<std::size_t>> components_;
};

DSetMorphism identity_morphism(const DSet& x);

/// Category of elements D|X: objects (d, x); a morphism (d, x) -> (d', x') is
/// a : d -> d' with X(a)(x') = x.
struct ElementsCategory {
  FinCat category;
  Functor projection;
  std::vector<std::pair<std::size_t, std::size_t>> objects;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::size_t> underlying;  // per morphism
  // (source object, target object, underlying morphism) -> morphism
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> morphism_index;
};
ElementsCategory elements(const DSet& x);
/// D|f : D|X -> D|Y, (d, x) |-> (d, f(x)).
Functor elements_functor(const DSetMorphism& f, const ElementsCategory& ex, const ElementsCategory& ey);

/// Pullback of f against the element y in Y(d): at a, the pairs (x, a: a -> d)
/// with f(x) = Y(a)(y).
DSet inverse_fibre(const DSetMorphism& f, std::size_t d, std::size_t y);

}  // namespace hocofin
