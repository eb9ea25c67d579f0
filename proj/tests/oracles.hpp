#pragma once

// Reference computations used to cross-check the library. Nothing here calls
// into hocofin; everything is plain int64 arithmetic and brute force.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Determinant by cofactor expansion (small matrices only).
inline std::int64_t det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    s += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return s;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
                    std::vector<std::size_t>& cur, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

// Invariant factors as quotients of determinantal divisors: d_k is the gcd of
// all k x k minors, and the k-th invariant factor is d_k / d_{k-1}.
inline std::vector<std::int64_t> invariant_factors(const Mat& a) {
  const std::size_t r = a.size(), c = r ? a[0].size() : 0;
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(r, k, rs, cur);
    subsets(c, k, cs, cur);
    std::int64_t g = 0;
    for (auto& ri : rs)
      for (auto& ci : cs) {
        Mat m(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a[ri[i]][ci[j]];
        g = gcd64(g, det(m));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Textbook diagonalization with first-nonzero pivots; returns the nonzero
// diagonal after enforcing divisibility through gcd/lcm swaps.
inline std::vector<std::int64_t> diagonal_elimination(Mat a) {
  const std::size_t r = a.size(), c = r ? a[0].size() : 0;
  std::vector<std::int64_t> diag;
  std::size_t t = 0;
  while (t < std::min(r, c)) {
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r && pi == r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == r) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        std::int64_t q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < c; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        std::int64_t q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < r; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
    }
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      std::int64_t g = gcd64(diag[i], diag[j]);
      std::int64_t l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

// Homology of a free complex: rank via elimination over Q and torsion from
// the invariant factors of the incoming boundary.
struct Homology {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;
  bool operator==(const Homology&) const = default;
};

inline Homology free_homology(std::size_t dim, const Mat& d_n, const Mat& d_n1) {
  std::size_t rank_out = d_n.empty() ? 0 : diagonal_elimination(d_n).size();
  auto inc = d_n1.empty() ? std::vector<std::int64_t>{} : diagonal_elimination(d_n1);
  Homology h;
  h.free_rank = dim - rank_out - inc.size();
  for (auto d : inc)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

// Normalized bar complex of a finite group with trivial integer coefficients.
// Group elements are 0..n-1 with unit 0 and multiplication mul(a, b).
inline std::vector<Homology> group_homology_bar(std::size_t n,
                                                const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                                                std::size_t n_max) {
  std::vector<std::vector<std::vector<std::size_t>>> cells(n_max + 2);
  cells[0].push_back({});
  for (std::size_t k = 1; k <= n_max + 1; ++k)
    for (const auto& c : cells[k - 1])
      for (std::size_t g = 1; g < n; ++g) {
        auto d = c;
        d.push_back(g);
        cells[k].push_back(d);
      }
  auto index = [&](std::size_t k, const std::vector<std::size_t>& c) -> std::optional<std::size_t> {
    for (auto g : c)
      if (g == 0) return std::nullopt;
    auto it = std::find(cells[k].begin(), cells[k].end(), c);
    return static_cast<std::size_t>(it - cells[k].begin());
  };
  std::vector<Mat> d(n_max + 2);
  for (std::size_t k = 1; k <= n_max + 1; ++k) {
    d[k] = Mat(cells[k - 1].size(), std::vector<std::int64_t>(cells[k].size(), 0));
    for (std::size_t j = 0; j < cells[k].size(); ++j) {
      const auto& c = cells[k][j];
      for (std::size_t i = 0; i <= k; ++i) {
        std::vector<std::size_t> f;
        if (i == 0) {
          f.assign(c.begin() + 1, c.end());
        } else if (i == k) {
          f.assign(c.begin(), c.end() - 1);
        } else {
          for (std::size_t t = 0; t < k; ++t) {
            if (t == i - 1) {
              f.push_back(mul(c[t], c[t + 1]));
              ++t;
            } else {
              f.push_back(c[t]);
            }
          }
        }
        if (auto row = index(k - 1, f)) d[k][*row][j] += (i % 2 ? -1 : 1);
      }
    }
  }
  std::vector<Homology> out;
  for (std::size_t k = 0; k <= n_max; ++k)
    out.push_back(free_homology(cells[k].size(), k ? d[k] : Mat{}, d[k + 1]));
  return out;
}

// Number of assignments of the generators into a finite group satisfying the
// relators; relators use +g / -g for generator g-1 and its inverse.
inline std::uint64_t brute_force_homs(std::size_t gens, const std::vector<std::vector<int>>& relators,
                                      std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  auto inv = [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) == 0) return b;
    return n;
  };
  std::uint64_t total = 0;
  std::vector<std::size_t> v(gens, 0);
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < gens; ++i) combos *= n;
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::uint64_t x = code;
    for (std::size_t i = 0; i < gens; ++i) {
      v[i] = x % n;
      x /= n;
    }
    bool ok = true;
    for (const auto& r : relators) {
      std::size_t acc = 0;
      for (int l : r) {
        std::size_t g = v[static_cast<std::size_t>(std::abs(l)) - 1];
        acc = mul(acc, l > 0 ? g : inv(g));
      }
      if (acc != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++total;
  }
  return total;
}

// Symmetric group on three letters as permutation composition; element 0 is
// the identity.
inline std::size_t s3_mul(std::size_t a, std::size_t b) {
  static const std::vector<std::vector<int>> perms = [] {
    std::vector<std::vector<int>> p;
    std::vector<int> q{0, 1, 2};
    do p.push_back(q);
    while (std::next_permutation(q.begin(), q.end()));
    return p;
  }();
  std::vector<int> c(3);
  for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
  return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
}

// Bounded search for an integer x with A x = v.
inline std::optional<std::vector<std::int64_t>> box_solve(const Mat& a, const std::vector<std::int64_t>& v,
                                                          std::int64_t bound) {
  const std::size_t r = a.size(), c = r ? a[0].size() : 0;
  std::vector<std::int64_t> x(c, -bound);
  if (c == 0) {
    for (auto e : v)
      if (e != 0) return std::nullopt;
    return x;
  }
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < c; ++j) s += a[i][j] * x[j];
      ok = s == v[i];
    }
    if (ok) return x;
    std::size_t k = 0;
    while (k < c && x[k] == bound) x[k++] = -bound;
    if (k == c) return std::nullopt;
    ++x[k];
  }
}

// Presheaf given by explicit tables: maps[m][x] is X(m)(x) for m: b -> a,
// sending X(a) to X(b). dom/cod describe the base category's morphisms.
struct TablePresheaf {
  std::vector<std::size_t> sizes;              // per object
  std::vector<std::vector<std::size_t>> maps;  // per morphism
};

// Pullback X x_Y h_d by enumerating every (object, element, morphism) triple
// and keeping the matching ones. Returns the list of (x, alpha) per object.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pullback_pairs(
    const TablePresheaf& x, const TablePresheaf& y, const std::vector<std::vector<std::size_t>>& f,
    const std::vector<std::size_t>& dom, const std::vector<std::size_t>& cod, std::size_t d, std::size_t elem) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out(x.sizes.size());
  for (std::size_t a = 0; a < x.sizes.size(); ++a)
    for (std::size_t e = 0; e < x.sizes[a]; ++e)
      for (std::size_t m = 0; m < dom.size(); ++m)
        if (dom[m] == a && cod[m] == d && f[a][e] == y.maps[m][elem]) out[a].emplace_back(e, m);
  return out;
}

}  // namespace oracle
