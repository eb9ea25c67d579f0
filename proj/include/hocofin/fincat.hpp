#pragma once

// Finite categories given by full composition tables, functors between them,
// comma categories, factorization categories and isomorphism search.

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hocofin {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);
/// Composition is tabulated densely; larger categories raise SizeLimitExceeded.
inline constexpr std::size_t max_category_morphisms = 4096;

/// Category description as it arrives from input: identities are implicit
/// (reserved ids `id_<obj>`), composites of non-identity pairs are listed.
struct RawCategory {
  struct Morphism {
    std::string id, dom, cod;
  };
  struct Composite {
    std::string g, f, eq;  // g o f = eq
  };
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<Composite> composition;
};

/// Immutable finite category. Object i has identity morphism index i; the
/// remaining morphisms follow in input order. Copies share storage.
class FinCat {
 public:
  FinCat();

  std::size_t num_objects() const { return d_->objects.size(); }
  std::size_t num_morphisms() const { return d_->morphisms.size(); }

  const std::string& object_name(std::size_t x) const { return d_->objects[x]; }
  const std::string& morphism_name(std::size_t m) const { return d_->morphisms[m].name; }
  std::optional<std::size_t> find_object(const std::string& name) const;
  std::optional<std::size_t> find_morphism(const std::string& name) const;
  /// Throws UnknownObject / UnknownMorphism.
  std::size_t object(const std::string& name) const;
  std::size_t morphism(const std::string& name) const;

  std::size_t dom(std::size_t m) const { return d_->morphisms[m].dom; }
  std::size_t cod(std::size_t m) const { return d_->morphisms[m].cod; }
  std::size_t identity(std::size_t x) const { return x; }
  bool is_identity(std::size_t m) const { return m < num_objects(); }

  /// g o f, or npos when cod f != dom g.
  std::size_t compose(std::size_t g, std::size_t f) const {
    return d_->comp[g * num_morphisms() + f];
  }
  const std::vector<std::size_t>& hom(std::size_t x, std::size_t y) const {
    return d_->homs[x * num_objects() + y];
  }
  const std::vector<std::size_t>& out_of(std::size_t x) const { return d_->out[x]; }
  const std::vector<std::size_t>& into(std::size_t x) const { return d_->in[x]; }

  friend bool operator==(const FinCat& a, const FinCat& b);

  /// Builds a category from objects, non-identity morphisms and a composition
  /// rule on non-identity composable pairs, then verifies unit and
  /// associativity laws.
  class Assembler {
   public:
    std::size_t add_object(std::string name);
    std::size_t add_morphism(std::string name, std::size_t dom, std::size_t cod);
    std::size_t num_objects() const { return objects_.size(); }
    // Morphisms must all be added after the objects.
    FinCat finish(const std::function<std::size_t(std::size_t g, std::size_t f)>& compose) &&;

   private:
    friend class FinCat;
    std::vector<std::string> objects_;
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> morphisms_;
  };

 private:
  struct MorphismData {
    std::string name;
    std::size_t dom, cod;
  };
  struct Data {
    std::vector<std::string> objects;
    std::vector<MorphismData> morphisms;
    std::vector<std::size_t> comp;
    std::vector<std::vector<std::size_t>> homs, out, in;
    std::unordered_map<std::string, std::size_t> object_index, morphism_index;
  };
  explicit FinCat(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static std::shared_ptr<const Data> index(Data d);
  void check_laws() const;

  friend FinCat validate_category(const RawCategory& raw);
  friend FinCat opposite(const FinCat& c);

  std::shared_ptr<const Data> d_;
};

FinCat validate_category(const RawCategory& raw);
RawCategory describe(const FinCat& c);

FinCat opposite(const FinCat& c);

// Convenience builders.
FinCat terminal_category();
FinCat discrete_category(const std::vector<std::string>& objects);
/// Poset from generating relations x <= y (reflexive-transitive closure);
/// the morphism x -> y is named "x<y". Throws InvalidInput on cycles.
FinCat poset_category(const std::vector<std::string>& objects,
                      const std::vector<std::pair<std::string, std::string>>& leq);
/// One-object category from a monoid multiplication table (table[a][b] = a*b).
FinCat monoid_category(const std::vector<std::string>& elements, std::size_t unit,
                       const std::vector<std::vector<std::size_t>>& table);
/// Full subcategory of the simplex category on [0..n]; morphisms are
/// nondecreasing maps named by value list and codomain, e.g. "[0,0,1]->[1]".
FinCat simplex_category(std::size_t n);
FinCat disjoint_union(const FinCat& a, const FinCat& b);

class Functor {
 public:
  /// Validates that dom, cod, identities and composition are preserved.
  Functor(FinCat source, FinCat target, std::vector<std::size_t> obj_map,
          std::vector<std::size_t> mor_map);

  const FinCat& source() const { return source_; }
  const FinCat& target() const { return target_; }
  std::size_t obj(std::size_t x) const { return obj_map_[x]; }
  std::size_t mor(std::size_t m) const { return mor_map_[m]; }
  const std::vector<std::size_t>& obj_map() const { return obj_map_; }
  const std::vector<std::size_t>& mor_map() const { return mor_map_; }

  friend bool operator==(const Functor&, const Functor&) = default;

 private:
  FinCat source_, target_;
  std::vector<std::size_t> obj_map_, mor_map_;
};

Functor identity_functor(const FinCat& c);
Functor constant_functor(const FinCat& source, const FinCat& target, std::size_t object);
Functor compose(const Functor& g, const Functor& f);  // g o f
Functor opposite(const Functor& f);
/// Functor determined by an object assignment and a morphism assignment given
/// by names; unspecified identities are filled in.
Functor functor_from_names(const FinCat& source, const FinCat& target,
                           const std::map<std::string, std::string>& objects,
                           const std::map<std::string, std::string>& morphisms);

struct Subcategory {
  FinCat category;
  Functor inclusion;
};
Subcategory full_subcategory(const FinCat& c, const std::vector<std::size_t>& objects);
/// Wide/narrow subcategory on the given morphisms (must be closed under
/// composition and contain the identities of their endpoints).
Subcategory subcategory(const FinCat& c, const std::vector<std::size_t>& morphisms);

/// Left fibre S|d: objects (c, b: S(c) -> d); morphisms a: c -> c' with
/// b' o S(a) = b. `projection` is the forgetful functor to the source of S.
struct CommaCategory {
  FinCat category;
  Functor projection;
  // For each comma object, the pair (source object, morphism of target).
  std::vector<std::pair<std::size_t, std::size_t>> objects;
  // For each comma morphism, the underlying source morphism.
  std::vector<std::size_t> underlying;
};
CommaCategory comma_left_fibre(const Functor& s, std::size_t d);
/// d|S: objects (c, b: d -> S(c)); morphisms a with S(a) o b = b'.
CommaCategory comma_coslice(const Functor& s, std::size_t d);

/// Factorization category: objects are the morphisms of C; a morphism f -> g
/// is a pair (a, b) with g = b o f o a.
struct Factorization {
  FinCat category;
  Functor cod;          // FC -> C, (a, b) |-> b
  Functor dom;          // (FC)^op -> C, (a, b) |-> a
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // per morphism
  std::map<std::array<std::size_t, 3>, std::size_t> lookup;  // (f, a, b) -> morphism

  std::size_t morphism_for(std::size_t f, std::size_t a, std::size_t b) const;
};
Factorization factorization(const FinCat& c);

/// FS : FC -> FD on objects f |-> S f and on morphisms (u, v) |-> (Su, Sv).
Functor factor_functor(const Functor& s);

/// S<a>: objects (d, u, v) with a = v o u, u: dom a -> S d, v: S d -> cod a;
/// morphisms b: d -> d' with u' = S(b) u and v = v' S(b).
struct FactorSlice {
  FinCat category;
  std::vector<std::array<std::size_t, 3>> objects;  // (d, u, v)
};
FactorSlice factor_slice(const Functor& s, std::size_t alpha);

struct IsoLimits {
  std::size_t max_objects = 12;
  std::size_t max_morphisms = 64;
};
/// Invertible functor C -> D if one exists. Throws SizeLimitExceeded beyond
/// the limits.
std::optional<Functor> iso_check(const FinCat& c, const FinCat& d, IsoLimits limits = {});

std::vector<std::vector<std::size_t>> connected_components(const FinCat& c);
std::vector<std::size_t> final_objects(const FinCat& c);
std::vector<std::size_t> initial_objects(const FinCat& c);

}  // namespace hocofin
