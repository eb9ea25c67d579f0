#pragma once

// Exact integer linear algebra: Smith normal form, finitely generated abelian
// groups, bounded chain complexes and their homology.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hocofin {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const;
  IntMatrix transpose() const;
  std::vector<BigInt> column(std::size_t c) const;

  // Horizontal concatenation; both operands must have the same row count.
  IntMatrix hcat(const IntMatrix& rhs) const;
  IntMatrix select_columns(const std::vector<std::size_t>& cols) const;
  IntMatrix select_rows(const std::vector<std::size_t>& rows) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<BigInt> operator*(const IntMatrix& a,
                                       const std::vector<BigInt>& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& a);

struct SmithForm {
  IntMatrix U;     // rows x rows, unimodular
  IntMatrix D;     // rows x cols, diagonal d1 | d2 | ... , di >= 0
  IntMatrix V;     // cols x cols, unimodular
  std::size_t rank = 0;

  std::vector<BigInt> diagonal() const;
};

/// Which transforms to accumulate alongside the diagonal form. Homology only
/// needs some of them; skipping the rest keeps large complexes tractable.
struct SmithOptions {
  bool want_u = true;
  bool want_u_inverse = false;
  bool want_v = true;
  bool want_v_inverse = false;
};

struct SmithResult {
  IntMatrix D;
  std::size_t rank = 0;
  std::optional<IntMatrix> U, U_inverse, V, V_inverse;
};

/// U * A * V = D with U, V unimodular and d1 | d2 | ... on the diagonal.
/// Pivot choice is deterministic: smallest nonzero absolute value, ties broken
/// by row-major position.
SmithForm smith_normal_form(const IntMatrix& a);
SmithResult smith_normal_form(const IntMatrix& a, const SmithOptions& options);

/// Only the nonzero diagonal entries, in divisibility order.
std::vector<BigInt> invariant_factors(const IntMatrix& a);

/// Checks U A V = D, unimodularity of U and V and the divisibility chain.
bool verify_smith_form(const IntMatrix& a, const SmithForm& s);

/// Integer solution x of A x = v, if one exists.
std::optional<std::vector<BigInt>> lattice_membership(const std::vector<BigInt>& v,
                                                      const IntMatrix& a);

/// Runtime switch: when on, every Smith decomposition is verified in place.
void set_self_checks(bool on);
bool self_checks();

/// Canonical form of a finitely generated abelian group: Z^free_rank plus
/// cyclic factors Z/d with d > 1 and d_i | d_{i+1}.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants parse_invariants(const std::string& text);

/// Finitely generated abelian group presented by generators and a relation
/// matrix whose columns are relations (gens x r).
class FGAb {
 public:
  FGAb() = default;
  FGAb(std::size_t gens, IntMatrix rels);

  static FGAb free(std::size_t rank);
  static FGAb cyclic(const BigInt& order);  // order 0 means Z
  static FGAb from_invariants(const AbelianInvariants& inv);

  std::size_t gens() const { return gens_; }
  const IntMatrix& rels() const { return rels_; }

  AbelianInvariants invariants() const;
  std::string to_string() const { return invariants().to_string(); }

  bool contains_relation(const std::vector<BigInt>& v) const;

  // Direct sum; relation columns are placed block-diagonally.
  static FGAb direct_sum(const std::vector<FGAb>& parts);

 private:
  std::size_t gens_ = 0;
  IntMatrix rels_;
};

/// A presentation in reduced form: generators are the nontrivial invariant
/// factor generators, together with the change of coordinates.
struct ReducedFGAb {
  FGAb group;
  IntMatrix to_reduced;    // reduced.gens x original.gens
  IntMatrix from_reduced;  // original.gens x reduced.gens
};

ReducedFGAb reduce(const FGAb& a);

/// Bounded chain complex of f.g. abelian groups C_lo .. C_hi. boundary(n) is the
/// matrix of d_n : C_n -> C_{n-1} on generators (gens(n-1) x gens(n)).
class ChainComplex {
 public:
  ChainComplex(int lo, std::vector<FGAb> groups, std::map<int, IntMatrix> boundaries);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(groups_.size()) - 1; }
  bool has_degree(int n) const { return n >= lo() && n <= hi(); }
  const FGAb& group(int n) const;
  // Zero matrix when the degree below is outside the complex.
  IntMatrix boundary(int n) const;

  /// Verifies d_{n} d_{n+1} lands in the relation lattice and each d_n maps
  /// relations to relations. Throws ComplexViolation.
  void validate() const;

 private:
  int lo_;
  std::vector<FGAb> groups_;
  std::map<int, IntMatrix> boundaries_;
};

/// H_n = ker d_n / im d_{n+1}. Needs degrees n-1 (unless n == lo), n and n+1
/// (unless n == hi) to be present.
AbelianInvariants homology(const ChainComplex& k, int n);

/// Homology of a free complex given only by its boundary matrices, where
/// d_n : Z^{dims[n]} -> Z^{dims[n-1]}.
AbelianInvariants free_homology(std::size_t dim_n, const IntMatrix& d_n,
                                const IntMatrix& d_n_plus_1);

}  // namespace hocofin
