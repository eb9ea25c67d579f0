#pragma once

// Group diagrams and abelian diagrams over finite categories, their
// simplicial replacement, colim_0, derived abelian colimits and Kan extension
// along virtual discrete cofibrations.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hocofin/chains.hpp"
#include "hocofin/fincat.hpp"
#include "hocofin/groups.hpp"
#include "hocofin/homalg.hpp"
#include "hocofin/presheaf.hpp"

namespace hocofin {

/// Functor C -> Grp with free products of finite groups as values.
class GroupDiagram {
 public:
  GroupDiagram() = default;
  /// Checks endpoints, G(id) = id and G(g o f) = G(g) G(f) on every element
  /// of every factor (FunctorViolation).
  GroupDiagram(FinCat base, std::vector<FreeProduct> values, std::vector<GroupHom> actions);

  const FinCat& base() const { return base_; }
  const FreeProduct& value(std::size_t c) const { return values_[c]; }
  const GroupHom& action(std::size_t m) const { return actions_[m]; }
  const std::vector<FreeProduct>& values() const { return values_; }
  const std::vector<GroupHom>& actions() const { return actions_; }

 private:
  FinCat base_;
  std::vector<FreeProduct> values_;
  std::vector<GroupHom> actions_;
};

GroupDiagram constant_diagram(const FinCat& c, const FreeProduct& g);
/// G o S.
GroupDiagram pullback(const GroupDiagram& g, const Functor& s);
/// Every action replaced by its inverse, as a diagram on the opposite
/// category. InvalidInput unless all actions are invertible.
GroupDiagram inverted(const GroupDiagram& g);

/// Functor C -> Ab; matrices[m] maps generators of value(dom m) to
/// generators of value(cod m).
class AbDiagram {
 public:
  AbDiagram() = default;
  /// Checks that relations map into relations and functoriality modulo the
  /// relation lattices (FunctorViolation).
  AbDiagram(FinCat base, std::vector<FGAb> values, std::vector<IntMatrix> matrices);

  const FinCat& base() const { return base_; }
  const FGAb& value(std::size_t c) const { return values_[c]; }
  const IntMatrix& matrix(std::size_t m) const { return matrices_[m]; }
  const std::vector<FGAb>& values() const { return values_; }
  const std::vector<IntMatrix>& matrices() const { return matrices_; }

 private:
  FinCat base_;
  std::vector<FGAb> values_;
  std::vector<IntMatrix> matrices_;
};

AbDiagram constant_diagram(const FinCat& c, const FGAb& a);
AbDiagram pullback(const AbDiagram& m, const Functor& s);
AbDiagram abelianize_diagram(const GroupDiagram& g);

/// Degree-n group of the simplicial replacement: the free product of G(c0)
/// over all length-n chains. The factors of the chain with index k start at
/// offsets[k] and are labelled "<chain>/<label>".
struct SrepLevel {
  std::size_t degree = 0;
  std::vector<Chain> chains;
  std::vector<std::size_t> offsets;
  std::map<Chain, std::size_t> index;
  FreeProduct group;
};
SrepLevel srep_level(const GroupDiagram& g, std::size_t n);
/// d_i : C_n -> C_{n-1}; IndexOutOfRange unless n >= 1 and i <= n.
GroupHom srep_face(const GroupDiagram& g, std::size_t n, std::size_t i);
/// s_i : C_n -> C_{n+1}; IndexOutOfRange unless i <= n.
GroupHom srep_degeneracy(const GroupDiagram& g, std::size_t n, std::size_t i);

/// Presentation of the colimit before simplification. Generators are
/// "<object>/<label>/<element>" for the non-unit elements.
GroupPresentation colim0_raw(const GroupDiagram& g);
GroupPresentation colim0(const GroupDiagram& g);

/// Normalized simplicial replacement complex of M through degree `top`.
ChainComplex replacement_complex(const AbDiagram& m, std::size_t top, std::size_t cap = default_chain_cap);
/// colim_n M for n = 0..n_max.
std::vector<AbelianInvariants> ab_colim_derived(const AbDiagram& m, std::size_t n_max,
                                                std::size_t cap = default_chain_cap);

/// Chosen final objects of the components of S|d, with the unique morphism
/// from every comma object to the final object of its component.
struct VdcFibre {
  CommaCategory comma;
  std::vector<std::size_t> finals;     // comma objects, one per component
  std::vector<std::size_t> component;  // per comma object
  std::vector<std::size_t> to_final;   // per comma object, underlying morphism of the source
};
/// Throws NotVDC naming the first object whose fibre is not finally discrete.
std::vector<VdcFibre> vdc_fibres(const Functor& s);

/// Lan^S G for a VDC S. The value at d is the free product over the chosen
/// finals (c, b) of S|d of the factors of G(c), labelled "(c,b):label".
GroupDiagram kan_extend_vdc(const Functor& s, const GroupDiagram& g);
AbDiagram kan_extend_vdc(const Functor& s, const AbDiagram& m);

}  // namespace hocofin
