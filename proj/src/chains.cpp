#include "hocofin/chains.hpp"

#include <map>

#include "hocofin/error.hpp"

namespace hocofin {

ChainComplex normalized_complex(const FinCat& c, const ChainCoefficients& coeff, std::size_t top, std::size_t cap) {
  std::vector<std::vector<Chain>> chains(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    try {
      chains[n] = nondegenerate_chains(c, n, cap);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      fail(ErrorCode::TruncationUnsound, "degree " + std::to_string(n) + " has more than " + std::to_string(cap) +
                                             " nondegenerate chains");
    }
  }
  std::vector<FGAb> groups;
  // generator offset of each chain inside its degree
  std::vector<std::map<Chain, std::size_t>> offset(top + 1);
  std::vector<std::vector<FGAb>> parts(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    std::size_t at = 0, rels = 0;
    for (const Chain& s : chains[n]) {
      parts[n].push_back(coeff.value(s));
      offset[n][s] = at;
      at += parts[n].back().gens();
      rels += parts[n].back().rels().cols();
    }
    // relation matrices are dense as well
    if (at * rels > default_cell_limit)
      fail(ErrorCode::TruncationUnsound, "relation matrix in degree " + std::to_string(n) + " would have " +
                                             std::to_string(at) + " x " + std::to_string(rels) + " entries");
    groups.push_back(FGAb::direct_sum(parts[n]));
  }
  std::map<int, IntMatrix> boundaries;
  for (std::size_t n = 1; n <= top; ++n) {
    if (groups[n - 1].gens() * groups[n].gens() > default_cell_limit)
      fail(ErrorCode::TruncationUnsound, "boundary matrix in degree " + std::to_string(n) + " would have " +
                                             std::to_string(groups[n - 1].gens()) + " x " +
                                             std::to_string(groups[n].gens()) + " entries");
    IntMatrix d(groups[n - 1].gens(), groups[n].gens());
    for (std::size_t k = 0; k < chains[n].size(); ++k) {
      const Chain& s = chains[n][k];
      const std::size_t col = offset[n].at(s);
      for (std::size_t i = 0; i <= n; ++i) {
        Chain f = chain_face(c, s, i);
        if (chain_is_degenerate(c, f)) continue;
        IntMatrix m = coeff.face(s, i);
        const std::size_t row = offset[n - 1].at(f);
        const int sign = i % 2 ? -1 : 1;
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t q = 0; q < m.cols(); ++q)
            if (m(r, q) != 0) d(row + r, col + q) += sign * m(r, q);
      }
    }
    boundaries[static_cast<int>(n)] = std::move(d);
  }
  ChainComplex out(0, std::move(groups), std::move(boundaries));
  out.validate();
  return out;
}

ChainCoefficients replacement_coefficients(const FinCat& c, std::vector<FGAb> values, std::vector<IntMatrix> matrices) {
  ChainCoefficients k;
  k.value = [values](const Chain& s) { return values[s.c0]; };
  k.face = [c, values, matrices](const Chain& s, std::size_t i) {
    if (i == 0) return matrices[s.mors[0]];
    return IntMatrix::identity(values[s.c0].gens());
  };
  return k;
}

std::vector<AbelianInvariants> complex_homology(const ChainComplex& k, std::size_t n_max) {
  std::vector<AbelianInvariants> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(homology(k, static_cast<int>(n)));
  return out;
}

std::vector<AbelianInvariants> nerve_homology(const FinCat& c, std::size_t n_max, std::size_t cap) {
  std::vector<FGAb> values(c.num_objects(), FGAb::free(1));
  std::vector<IntMatrix> matrices(c.num_morphisms(), IntMatrix::identity(1));
  return complex_homology(normalized_complex(c, replacement_coefficients(c, values, matrices), n_max + 1, cap), n_max);
}

}  // namespace hocofin
