#include "hocofin/homalg.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <utility>

#include "hocofin/error.hpp"

namespace hocofin {

namespace {

std::atomic<bool> g_self_checks{false};

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Extended Euclid: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
  BigInt old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

// Accumulates the elementary operations of a Smith reduction on A and on
// whichever transforms were requested.
class SmithEngine {
 public:
  SmithEngine(const IntMatrix& a, const SmithOptions& opt) : a_(a) {
    if (opt.want_u) u_ = IntMatrix::identity(a.rows());
    if (opt.want_u_inverse) ui_ = IntMatrix::identity(a.rows());
    if (opt.want_v) v_ = IntMatrix::identity(a.cols());
    if (opt.want_v_inverse) vi_ = IntMatrix::identity(a.cols());
  }

  void run() {
    diagonalize();
    fix_divisibility();
  }

  SmithResult result() && {
    SmithResult r;
    r.D = std::move(a_);
    r.rank = rank_;
    r.U = std::move(u_);
    r.U_inverse = std::move(ui_);
    r.V = std::move(v_);
    r.V_inverse = std::move(vi_);
    return r;
  }

 private:
  static void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
    // row dst -= q * row src
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const BigInt& s = m(src, c);
      if (s != 0) m(dst, c) -= q * s;
    }
  }
  static void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const BigInt& s = m(r, src);
      if (s != 0) m(r, dst) -= q * s;
    }
  }
  static void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
  }
  static void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
  }

  // Elementary row operations on A (and U), dual updates on U^-1.
  void row_sub(std::size_t i, std::size_t t, const BigInt& q) {
    row_axpy(a_, i, t, q);
    if (u_) row_axpy(*u_, i, t, q);
    if (ui_) col_axpy(*ui_, t, i, -q);
  }
  void row_swap(std::size_t i, std::size_t j) {
    swap_rows(a_, i, j);
    if (u_) swap_rows(*u_, i, j);
    if (ui_) swap_cols(*ui_, i, j);
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    if (u_)
      for (std::size_t c = 0; c < u_->cols(); ++c) (*u_)(i, c) = -(*u_)(i, c);
    if (ui_)
      for (std::size_t r = 0; r < ui_->rows(); ++r) (*ui_)(r, i) = -(*ui_)(r, i);
  }
  void col_sub(std::size_t j, std::size_t t, const BigInt& q) {
    col_axpy(a_, j, t, q);
    if (v_) col_axpy(*v_, j, t, q);
    if (vi_) row_axpy(*vi_, t, j, -q);
  }
  void col_swap(std::size_t i, std::size_t j) {
    swap_cols(a_, i, j);
    if (v_) swap_cols(*v_, i, j);
    if (vi_) swap_rows(*vi_, i, j);
  }

  // [row i; row j] <- P [row i; row j]
  static void rows2(IntMatrix& m, std::size_t i, std::size_t j, const BigInt p[2][2]) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      BigInt x = m(i, c), y = m(j, c);
      if (x == 0 && y == 0) continue;
      m(i, c) = p[0][0] * x + p[0][1] * y;
      m(j, c) = p[1][0] * x + p[1][1] * y;
    }
  }
  // [col i, col j] <- [col i, col j] Q
  static void cols2(IntMatrix& m, std::size_t i, std::size_t j, const BigInt q[2][2]) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      BigInt x = m(r, i), y = m(r, j);
      if (x == 0 && y == 0) continue;
      m(r, i) = x * q[0][0] + y * q[1][0];
      m(r, j) = x * q[0][1] + y * q[1][1];
    }
  }

  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    BigInt best;
    for (std::size_t r = t; r < a_.rows(); ++r)
      for (std::size_t c = t; c < a_.cols(); ++c) {
        const BigInt& x = a_(r, c);
        if (x == 0) continue;
        BigInt ax = babs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pr = r;
          pc = c;
          if (best == 1) return true;
        }
      }
    return found;
  }

  void diagonalize() {
    const std::size_t lim = std::min(a_.rows(), a_.cols());
    std::size_t t = 0;
    for (; t < lim; ++t) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(t, pr, pc)) break;
      row_swap(t, pr);
      col_swap(t, pc);
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
          if (a_(i, t) == 0) continue;
          BigInt q = a_(i, t) / a_(t, t);
          if (q != 0) row_sub(i, t, q);
          if (a_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
          if (a_(t, j) == 0) continue;
          BigInt q = a_(t, j) / a_(t, t);
          if (q != 0) col_sub(j, t, q);
          if (a_(t, j) != 0) clean = false;
        }
        if (clean) break;
        // Remainders are strictly smaller than the pivot; bring the smallest in,
        // scanning row t before column t (row-major order).
        bool found = false;
        BigInt best;
        std::size_t br = t, bc = t;
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
          if (a_(t, j) != 0 && (!found || babs(a_(t, j)) < best)) {
            found = true;
            best = babs(a_(t, j));
            br = t;
            bc = j;
          }
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
          if (a_(i, t) != 0 && (!found || babs(a_(i, t)) < best)) {
            found = true;
            best = babs(a_(i, t));
            br = i;
            bc = t;
          }
        row_swap(t, br);
        col_swap(t, bc);
      }
      if (a_(t, t) < 0) row_negate(t);
    }
    rank_ = t;
  }

  void fix_divisibility() {
    for (std::size_t i = 0; i < rank_; ++i) {
      for (std::size_t j = i + 1; j < rank_; ++j) {
        const BigInt a = a_(i, i), b = a_(j, j);
        if (a == 1) break;
        if (b % a == 0) continue;
        BigInt s, t;
        BigInt g = ext_gcd(a, b, s, t);
        BigInt ag = a / g, bg = b / g;
        const BigInt p[2][2] = {{s, t}, {-bg, ag}};
        const BigInt p_inv[2][2] = {{ag, -t}, {bg, s}};
        const BigInt q[2][2] = {{1, -t * bg}, {1, s * ag}};
        const BigInt q_inv[2][2] = {{s * ag, t * bg}, {-1, 1}};
        rows2(a_, i, j, p);
        cols2(a_, i, j, q);
        if (u_) rows2(*u_, i, j, p);
        if (ui_) cols2(*ui_, i, j, p_inv);
        if (v_) cols2(*v_, i, j, q);
        if (vi_) rows2(*vi_, i, j, q_inv);
      }
    }
  }

  IntMatrix a_;
  std::optional<IntMatrix> u_, ui_, v_, vi_;
  std::size_t rank_ = 0;
};

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::InvalidInput, "ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
  std::vector<BigInt> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::hcat(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) fail(ErrorCode::InvalidInput, "hcat row mismatch");
  IntMatrix m(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) m(r, cols_ + c) = rhs(r, c);
  }
  return m;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  IntMatrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = (*this)(r, cols[k]);
  return m;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  IntMatrix m(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(rows[k], c);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::InvalidInput, "matrix product shape mismatch");
  IntMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const BigInt& y = b(k, j);
        if (y != 0) m(i, j) += x * y;
      }
    }
  return m;
}

std::vector<BigInt> operator*(const IntMatrix& a, const std::vector<BigInt>& v) {
  if (a.cols() != v.size()) fail(ErrorCode::InvalidInput, "matrix-vector shape mismatch");
  std::vector<BigInt> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
  return out;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::InvalidInput, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_with, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

void set_self_checks(bool on) { g_self_checks = on; }
bool self_checks() { return g_self_checks; }

namespace {

bool is_unimodular(const IntMatrix& m, const std::optional<IntMatrix>& inverse) {
  if (inverse) return m * *inverse == IntMatrix::identity(m.rows());
  if (m.rows() > 48) return true;  // determinant check would dominate runtime
  BigInt d = determinant(m);
  return d == 1 || d == -1;
}

bool diagonal_ok(const IntMatrix& d, std::size_t rank) {
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (r != c && d(r, c) != 0) return false;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
    if (i < rank) {
      if (d(i, i) <= 0) return false;
      if (i + 1 < rank && d(i + 1, i + 1) % d(i, i) != 0) return false;
    } else if (d(i, i) != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a, const SmithOptions& options) {
  SmithEngine engine(a, options);
  engine.run();
  SmithResult r = std::move(engine).result();
  if (self_checks()) {
    bool ok = diagonal_ok(r.D, r.rank);
    if (ok && r.U && r.V) ok = (*r.U) * a * (*r.V) == r.D;
    if (ok && r.U) ok = is_unimodular(*r.U, r.U_inverse);
    if (ok && r.V) ok = is_unimodular(*r.V, r.V_inverse);
    if (!ok) fail(ErrorCode::ComplexViolation, "Smith normal form self-check failed");
  }
  return r;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithResult r = smith_normal_form(a, SmithOptions{});
  return SmithForm{std::move(*r.U), std::move(r.D), std::move(*r.V), r.rank};
}

std::vector<BigInt> invariant_factors(const IntMatrix& a) {
  SmithResult r = smith_normal_form(a, SmithOptions{false, false, false, false});
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.D(i, i));
  return out;
}

bool verify_smith_form(const IntMatrix& a, const SmithForm& s) {
  if (s.U.rows() != a.rows() || s.U.cols() != a.rows()) return false;
  if (s.V.rows() != a.cols() || s.V.cols() != a.cols()) return false;
  if (!diagonal_ok(s.D, s.rank)) return false;
  if (s.U * a * s.V != s.D) return false;
  BigInt du = determinant(s.U), dv = determinant(s.V);
  return (du == 1 || du == -1) && (dv == 1 || dv == -1);
}

std::optional<std::vector<BigInt>> lattice_membership(const std::vector<BigInt>& v,
                                                      const IntMatrix& a) {
  if (v.size() != a.rows()) fail(ErrorCode::InvalidInput, "lattice membership shape mismatch");
  SmithResult s = smith_normal_form(a, SmithOptions{true, false, true, false});
  std::vector<BigInt> w = (*s.U) * v;
  std::vector<BigInt> y(a.cols());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < s.rank) {
      if (w[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = w[i] / s.D(i, i);
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return (*s.V) * y;
}

// ---------------------------------------------------------------------------

std::string AbelianInvariants::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (free_rank == 1) parts.emplace_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const BigInt& d : torsion) parts.push_back("Z/" + d.str());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " (+) ";
    out += parts[i];
  }
  return out;
}

AbelianInvariants parse_invariants(const std::string& text) {
  AbelianInvariants inv;
  if (text == "0") return inv;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" (+) ", pos);
    std::string part = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part == "Z") {
      inv.free_rank += 1;
    } else if (part.rfind("Z^", 0) == 0) {
      inv.free_rank += std::stoul(part.substr(2));
    } else if (part.rfind("Z/", 0) == 0) {
      inv.torsion.emplace_back(part.substr(2));
    } else {
      fail(ErrorCode::InvalidInput, "bad abelian group literal '" + text + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 5;
  }
  return inv;
}

FGAb::FGAb(std::size_t gens, IntMatrix rels) : gens_(gens), rels_(std::move(rels)) {
  if (rels_.rows() != gens_ && !(rels_.rows() == 0 && rels_.cols() == 0))
    fail(ErrorCode::InvalidInput, "relation matrix must have one row per generator");
  if (rels_.rows() == 0) rels_ = IntMatrix(gens_, 0);
}

FGAb FGAb::free(std::size_t rank) { return FGAb(rank, IntMatrix(rank, 0)); }

FGAb FGAb::cyclic(const BigInt& order) {
  if (order == 0) return free(1);
  IntMatrix r(1, 1);
  r(0, 0) = order;
  return FGAb(1, r);
}

FGAb FGAb::from_invariants(const AbelianInvariants& inv) {
  std::vector<FGAb> parts;
  for (const BigInt& d : inv.torsion) parts.push_back(cyclic(d));
  parts.push_back(free(inv.free_rank));
  return direct_sum(parts);
}

AbelianInvariants FGAb::invariants() const {
  AbelianInvariants inv;
  std::vector<BigInt> f = invariant_factors(rels_);
  inv.free_rank = gens_ - f.size();
  for (const BigInt& d : f)
    if (d != 1) inv.torsion.push_back(d);
  return inv;
}

bool FGAb::contains_relation(const std::vector<BigInt>& v) const {
  if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; })) return true;
  if (rels_.cols() == 0) return false;
  return lattice_membership(v, rels_).has_value();
}

FGAb FGAb::direct_sum(const std::vector<FGAb>& parts) {
  std::size_t g = 0, r = 0;
  for (const FGAb& p : parts) {
    g += p.gens();
    r += p.rels().cols();
  }
  IntMatrix rels(g, r);
  std::size_t go = 0, ro = 0;
  for (const FGAb& p : parts) {
    for (std::size_t i = 0; i < p.gens(); ++i)
      for (std::size_t j = 0; j < p.rels().cols(); ++j) rels(go + i, ro + j) = p.rels()(i, j);
    go += p.gens();
    ro += p.rels().cols();
  }
  return FGAb(g, std::move(rels));
}

ReducedFGAb reduce(const FGAb& a) {
  SmithResult s = smith_normal_form(a.rels(), SmithOptions{true, true, false, false});
  std::vector<std::size_t> keep;
  std::vector<BigInt> orders;
  for (std::size_t i = 0; i < a.gens(); ++i) {
    if (i < s.rank && s.D(i, i) == 1) continue;
    keep.push_back(i);
    orders.push_back(i < s.rank ? s.D(i, i) : BigInt(0));
  }
  std::size_t torsion = 0;
  for (const BigInt& d : orders)
    if (d != 0) ++torsion;
  IntMatrix rels(keep.size(), torsion);
  for (std::size_t k = 0, col = 0; k < keep.size(); ++k)
    if (orders[k] != 0) rels(k, col++) = orders[k];
  ReducedFGAb out;
  out.group = FGAb(keep.size(), std::move(rels));
  out.to_reduced = s.U->select_rows(keep);
  out.from_reduced = s.U_inverse->select_columns(keep);
  return out;
}

// ---------------------------------------------------------------------------

ChainComplex::ChainComplex(int lo, std::vector<FGAb> groups, std::map<int, IntMatrix> boundaries)
    : lo_(lo), groups_(std::move(groups)), boundaries_(std::move(boundaries)) {
  for (auto& [n, m] : boundaries_) {
    if (!has_degree(n) || !has_degree(n - 1))
      fail(ErrorCode::DegreeMissing, "boundary in degree " + std::to_string(n) + " out of range");
    if (m.rows() != group(n - 1).gens() || m.cols() != group(n).gens())
      fail(ErrorCode::InvalidInput, "boundary " + std::to_string(n) + " has wrong shape");
  }
}

const FGAb& ChainComplex::group(int n) const {
  if (!has_degree(n)) fail(ErrorCode::DegreeMissing, "degree " + std::to_string(n));
  return groups_[static_cast<std::size_t>(n - lo_)];
}

IntMatrix ChainComplex::boundary(int n) const {
  std::size_t rows = has_degree(n - 1) ? group(n - 1).gens() : 0;
  std::size_t cols = has_degree(n) ? group(n).gens() : 0;
  auto it = boundaries_.find(n);
  if (it != boundaries_.end()) return it->second;
  return IntMatrix(rows, cols);
}

void ChainComplex::validate() const {
  for (int n = lo() + 1; n <= hi(); ++n) {
    IntMatrix d = boundary(n);
    const FGAb& src = group(n);
    const FGAb& dst = group(n - 1);
    IntMatrix image_of_rels = d * src.rels();
    for (std::size_t c = 0; c < image_of_rels.cols(); ++c)
      if (!dst.contains_relation(image_of_rels.column(c)))
        fail(ErrorCode::ComplexViolation,
             "boundary " + std::to_string(n) + " does not respect relations");
    if (n - 1 > lo()) {
      IntMatrix dd = boundary(n - 1) * d;
      const FGAb& target = group(n - 2);
      for (std::size_t c = 0; c < dd.cols(); ++c)
        if (!target.contains_relation(dd.column(c)))
          fail(ErrorCode::ComplexViolation, "d d != 0 at degree " + std::to_string(n));
    }
  }
}

namespace {

AbelianInvariants invariants_of_quotient(std::size_t rank, const IntMatrix& rel_coords) {
  AbelianInvariants inv;
  std::vector<BigInt> f = invariant_factors(rel_coords);
  inv.free_rank = rank - f.size();
  for (const BigInt& d : f)
    if (d != 1) inv.torsion.push_back(d);
  return inv;
}

}  // namespace

AbelianInvariants free_homology(std::size_t dim_n, const IntMatrix& d_n,
                                const IntMatrix& d_n_plus_1) {
  if (d_n.cols() != dim_n || d_n_plus_1.rows() != dim_n)
    fail(ErrorCode::InvalidInput, "free_homology shape mismatch");
  SmithResult s = smith_normal_form(d_n, SmithOptions{false, false, false, true});
  std::vector<std::size_t> kernel_rows;
  for (std::size_t i = s.rank; i < dim_n; ++i) kernel_rows.push_back(i);
  IntMatrix coords = s.V_inverse->select_rows(kernel_rows) * d_n_plus_1;
  return invariants_of_quotient(kernel_rows.size(), coords);
}

AbelianInvariants homology(const ChainComplex& k, int n) {
  if (!k.has_degree(n)) fail(ErrorCode::DegreeMissing, "degree " + std::to_string(n));
  const FGAb& cn = k.group(n);
  IntMatrix dn = k.boundary(n);
  IntMatrix dn1 = k.boundary(n + 1);
  IntMatrix below_rels = k.has_degree(n - 1) ? k.group(n - 1).rels() : IntMatrix(0, 0);
  IntMatrix boundaries = dn1.hcat(cn.rels());

  if (below_rels.cols() == 0) return free_homology(cn.gens(), dn, boundaries);

  // Cycles are x with d x in the relation lattice below: project ker [d | -R].
  IntMatrix neg = below_rels;
  for (std::size_t r = 0; r < neg.rows(); ++r)
    for (std::size_t c = 0; c < neg.cols(); ++c) neg(r, c) = -neg(r, c);
  IntMatrix m = dn.hcat(neg);
  SmithResult s = smith_normal_form(m, SmithOptions{false, false, true, false});
  std::vector<std::size_t> top;
  for (std::size_t i = 0; i < cn.gens(); ++i) top.push_back(i);
  std::vector<std::size_t> kernel_cols;
  for (std::size_t j = s.rank; j < m.cols(); ++j) kernel_cols.push_back(j);
  IntMatrix cycles = s.V->select_rows(top).select_columns(kernel_cols);

  // Basis of the cycle lattice from its generating set, and coordinates of
  // the boundaries in that basis.
  SmithResult g = smith_normal_form(cycles, SmithOptions{true, false, false, false});
  IntMatrix ub = (*g.U) * boundaries;
  IntMatrix coords(g.rank, ub.cols());
  for (std::size_t i = 0; i < g.rank; ++i)
    for (std::size_t c = 0; c < ub.cols(); ++c) {
      if (ub(i, c) % g.D(i, i) != 0)
        fail(ErrorCode::ComplexViolation, "boundary not contained in cycles");
      coords(i, c) = ub(i, c) / g.D(i, i);
    }
  for (std::size_t i = g.rank; i < ub.rows(); ++i)
    for (std::size_t c = 0; c < ub.cols(); ++c)
      if (ub(i, c) != 0) fail(ErrorCode::ComplexViolation, "boundary not contained in cycles");
  return invariants_of_quotient(g.rank, coords);
}

}  // namespace hocofin
