#pragma once

// Built-in desk-scale instances, addressable by name from the CLI and used
// throughout the tests.

#include <string>
#include <vector>

#include "hocofin/diagrams.hpp"
#include "hocofin/fincat.hpp"
#include "hocofin/groups.hpp"
#include "hocofin/hocolim.hpp"
#include "hocofin/presheaf.hpp"

namespace hocofin::fixtures {

FinCat one();              // single object "*"
FinCat two();              // a --u--> b
FinCat span();             // l <--p-- c --q--> r
FinCat cospan();           // opposite of span
FinCat discrete2();        // objects x, y
FinCat chain3();           // a < b < c
FinCat square();           // commutative square 00 < 01, 10 < 11
FinCat z2();               // one object, Z/2 = {e, t}
FinCat z3();               // one object, Z/3 = {e, g, h}
FinCat idempotent();       // one object, monoid {1, u} with u u = u
FinCat delta1();           // simplex category on [0], [1]
FinCat delta2();           // simplex category on [0], [1], [2]
FinCat span_plus_one();    // span disjoint union the terminal category

std::vector<std::string> category_names();
FinCat category(const std::string& name);  // throws UnknownObject

/// Inclusion of the monomorphisms (injective maps) of the simplex category
/// on [0..n].
Subcategory simplex_monos(std::size_t n);
Subcategory delta2_monos();

std::vector<std::string> functor_names();
Functor functor(const std::string& name);  // throws UnknownObject

/// Homomorphism Z/n -> g sending 1 to `generator`.
GroupHom cyclic_hom(std::size_t n, const FreeProduct& target, std::size_t factor, std::size_t generator);

/// c |-> free product of copies of g indexed by Hom(x0, c), labelled by the
/// morphism names; m acts by postcomposition on the labels.
GroupDiagram corepresentable_diagram(const FinCat& c, std::size_t x0, const FinGroup& g);

std::vector<std::string> diagram_names();
GroupDiagram diagram(const std::string& name);  // throws UnknownObject

/// "point-<category>", "B-<diagram>" for the diagrams with at most one
/// nontrivial factor per value, and "circle-collapse-2" (S^1 -> point on 2).
std::vector<std::string> pointed_diagram_names();
PointedDiagram pointed_diagram(const std::string& name, std::size_t level);  // throws UnknownObject

/// D-sets over 2, span and the simplex category on [0], [1].
std::vector<std::string> dset_names();
DSet dset(const std::string& name);  // throws UnknownObject
std::vector<std::string> dset_morphism_names();
DSetMorphism dset_morphism(const std::string& name);  // throws UnknownObject

/// Coefficient systems that make sense over any base: "const-Z" (abelian,
/// constant Z), and the group systems "const-Z2", "const-S3" and "corep-Z2"
/// (corepresented by object 0 of the base).
std::vector<std::string> system_names();
bool is_abelian_system(const std::string& name);
GroupDiagram group_system(const std::string& name, const FinCat& base);  // throws UnknownObject
AbDiagram abelian_system(const std::string& name, const FinCat& base);  // abelianizes group systems

}  // namespace hocofin::fixtures
