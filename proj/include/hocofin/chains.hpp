#pragma once

// Normalized chain complexes over the nondegenerate nerve chains of a finite
// category, with a coefficient group attached to every chain.

#include <cstddef>
#include <functional>
#include <vector>

#include "hocofin/fincat.hpp"
#include "hocofin/homalg.hpp"
#include "hocofin/presheaf.hpp"

namespace hocofin {

inline constexpr std::size_t default_chain_cap = 200'000;
// Boundary matrices are dense; larger ones are refused.
inline constexpr std::size_t default_cell_limit = 4'000'000;

struct ChainCoefficients {
  std::function<FGAb(const Chain&)> value;
  /// Coefficient map value(s) -> value(d_i s) attached to face i.
  std::function<IntMatrix(const Chain&, std::size_t i)> face;
};

/// Degrees 0..top: direct sum over nondegenerate length-n chains,
/// boundary sum (-1)^i d_i with faces landing on degenerate chains dropped.
/// Throws TruncationUnsound when a degree has more than `cap` chains or a
/// boundary matrix would exceed default_cell_limit entries. The result is
/// validated (d d = 0).
ChainComplex normalized_complex(const FinCat& c, const ChainCoefficients& coeff, std::size_t top,
                                std::size_t cap = default_chain_cap);

/// Coefficients of a functor C -> Ab: value M(c0), d_0 acts by M(a1).
ChainCoefficients replacement_coefficients(const FinCat& c, std::vector<FGAb> values,
                                           std::vector<IntMatrix> matrices);

/// Homology in degrees 0..n_max of a normalized complex built through n_max+1.
std::vector<AbelianInvariants> complex_homology(const ChainComplex& k, std::size_t n_max);

/// Integral homology of the nerve in degrees 0..n_max.
std::vector<AbelianInvariants> nerve_homology(const FinCat& c, std::size_t n_max,
                                              std::size_t cap = default_chain_cap);

}  // namespace hocofin
