#pragma once

// Finite groups by multiplication table, free products of finite groups with
// reduced-word elements, homomorphisms between them, finite presentations,
// homomorphism counting and Tietze simplification.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hocofin/homalg.hpp"

namespace hocofin {

class FinGroup {
 public:
  /// Trivial group with one element "e".
  FinGroup();
  /// Verifies closure, unit, inverses and associativity exhaustively.
  FinGroup(std::vector<std::string> elements, std::size_t unit,
           std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return d_->elements.size(); }
  std::size_t unit() const { return d_->unit; }
  const std::string& name(std::size_t x) const { return d_->elements[x]; }
  const std::vector<std::string>& elements() const { return d_->elements; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t element(const std::string& name) const;  // throws UnknownLabel

  std::size_t mul(std::size_t a, std::size_t b) const { return d_->table[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return d_->inverse[a]; }
  std::size_t element_order(std::size_t a) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  std::vector<std::vector<std::size_t>> table() const;

  friend bool operator==(const FinGroup& a, const FinGroup& b);

 private:
  struct Data {
    std::vector<std::string> elements;
    std::size_t unit = 0;
    std::vector<std::size_t> table, inverse;
  };
  std::shared_ptr<const Data> d_;
};

/// Z/n with elements "0".."n-1".
FinGroup cyclic_group(std::size_t n);
/// Pairs "(x,y)" ordered lexicographically.
FinGroup direct_product(const FinGroup& a, const FinGroup& b);
/// Dihedral group of order 2n: r^k and s r^k, named "r0".."r{n-1}", "s0"..
FinGroup dihedral_group(std::size_t n);
FinGroup symmetric_group_3();
FinGroup quaternion_group();

/// Groups of order <= 8 up to isomorphism, one representative each, in a
/// fixed order (by order, then by construction).
const std::vector<std::pair<std::string, FinGroup>>& group_catalog();

/// A letter is a non-unit element of one factor.
struct Letter {
  std::size_t factor;
  std::size_t element;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// Formal free product of labelled finite groups. Elements are reduced words:
/// no unit letters and no two consecutive letters from the same factor.
class FreeProduct {
 public:
  FreeProduct() = default;
  explicit FreeProduct(std::vector<std::pair<std::string, FinGroup>> factors);
  static FreeProduct single(const std::string& label, const FinGroup& g);

  std::size_t num_factors() const { return factors_.size(); }
  const std::string& label(std::size_t i) const { return factors_[i].first; }
  const FinGroup& factor(std::size_t i) const { return factors_[i].second; }
  const std::vector<std::pair<std::string, FinGroup>>& factors() const { return factors_; }
  std::size_t factor_index(const std::string& label) const;  // throws UnknownLabel

  std::size_t nontrivial_factors() const;
  bool is_trivial() const { return nontrivial_factors() == 0; }

  /// Single-letter word, empty for the unit.
  Word letter(std::size_t factor, std::size_t element) const;
  Word reduce(const Word& w) const;
  Word multiply(const Word& a, const Word& b) const;
  Word inverse(const Word& w) const;

  std::string format(const Word& w) const;
  /// Parses "label:element" letters; a group with a single factor also accepts
  /// bare element names.
  Word parse(const std::vector<std::string>& letters) const;

  friend bool operator==(const FreeProduct&, const FreeProduct&) = default;

 private:
  std::vector<std::pair<std::string, FinGroup>> factors_;
  std::map<std::string, std::size_t> index_;
};

/// Homomorphism between free products, determined on each source factor by
/// the image word of every element.
class GroupHom {
 public:
  GroupHom() = default;
  /// Checks multiplicativity exhaustively on each factor.
  GroupHom(FreeProduct source, FreeProduct target, std::vector<std::vector<Word>> per_factor);

  const FreeProduct& source() const { return source_; }
  const FreeProduct& target() const { return target_; }
  const Word& image(std::size_t factor, std::size_t element) const {
    return per_factor_[factor][element];
  }
  const std::vector<std::vector<Word>>& per_factor() const { return per_factor_; }

  Word apply(const Word& w) const;
  bool is_identity() const;

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  FreeProduct source_, target_;
  std::vector<std::vector<Word>> per_factor_;
};

GroupHom identity_hom(const FreeProduct& g);
GroupHom trivial_hom(const FreeProduct& source, const FreeProduct& target);
GroupHom compose(const GroupHom& g, const GroupHom& f);  // g o f
/// Inverse of a homomorphism that maps every factor isomorphically onto a
/// distinct factor of the target, hitting all nontrivial target factors.
std::optional<GroupHom> invert(const GroupHom& h);
/// Homomorphism between single finite groups given by an element map.
GroupHom table_hom(const FreeProduct& source, const FreeProduct& target,
                   const std::vector<std::size_t>& element_map);

/// Generators and relators. A relator letter is +k for generator k-1 and -k
/// for its inverse.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;

  /// Relators with inverses spelled "x!".
  std::vector<std::vector<std::string>> spelled_relators() const;
  std::string to_string() const;
  void validate() const;  // throws UnknownLabel
};

GroupPresentation make_presentation(std::vector<std::string> generators,
                                    const std::vector<std::vector<std::string>>& relators);
/// Generators are the non-unit elements; relators are the table entries.
GroupPresentation presentation_of(const FinGroup& g);

struct HomBudget {
  std::uint64_t max_evaluations = 10'000'000;
};

/// Number of homomorphisms from the presented group into t.
std::uint64_t hom_count(const GroupPresentation& p, const FinGroup& t, HomBudget budget = {});
/// hom_count into every catalog group.
std::vector<std::uint64_t> fingerprint(const GroupPresentation& p, HomBudget budget = {});

FGAb abelianization(const GroupPresentation& p);

/// Free and cyclic reduction, duplicate removal and elimination of generators
/// occurring exactly once in some relator. `budget` bounds the total relator
/// length that an elimination may produce.
GroupPresentation tietze_simplify(const GroupPresentation& p, std::size_t budget = 4096);

/// Abelianization of a free product as a reduced f.g. abelian group, with the
/// coordinates of every letter.
struct AbelianizedProduct {
  FGAb group;
  // coords[factor][element] = coordinate vector in `group`.
  std::vector<std::vector<std::vector<BigInt>>> coords;
  // generator j of `group` as a sum of letters: (factor, element, coefficient).
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, BigInt>>> lifts;

  std::vector<BigInt> word_coords(const Word& w) const;
};
AbelianizedProduct abelianize(const FreeProduct& g);
/// Matrix of the induced map between abelianizations.
IntMatrix abelianize(const GroupHom& h, const AbelianizedProduct& source,
                     const AbelianizedProduct& target);

}  // namespace hocofin
