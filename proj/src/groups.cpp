#include "hocofin/groups.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "hocofin/error.hpp"

namespace hocofin {

FinGroup::FinGroup() : FinGroup({"e"}, 0, {{0}}) {}

FinGroup::FinGroup(std::vector<std::string> elements, std::size_t unit,
                   std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = elements.size();
  if (n == 0) fail(ErrorCode::GroupAxiomViolation, "empty group");
  if (unit >= n) fail(ErrorCode::GroupAxiomViolation, "unit out of range");
  if (table.size() != n) fail(ErrorCode::GroupAxiomViolation, "table has wrong size");
  std::set<std::string> names(elements.begin(), elements.end());
  if (names.size() != n) fail(ErrorCode::GroupAxiomViolation, "duplicate element names");
  Data d;
  d.elements = std::move(elements);
  d.unit = unit;
  d.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) fail(ErrorCode::GroupAxiomViolation, "table row has wrong size");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) fail(ErrorCode::GroupAxiomViolation, "table entry out of range");
      d.table[a * n + b] = table[a][b];
    }
  }
  auto mul = [&](std::size_t a, std::size_t b) { return d.table[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a)
    if (mul(unit, a) != a || mul(a, unit) != a)
      fail(ErrorCode::GroupAxiomViolation, "'" + d.elements[unit] + "' is not a unit");
  d.inverse.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) == unit && mul(b, a) == unit) d.inverse[a] = b;
    if (d.inverse[a] == n)
      fail(ErrorCode::GroupAxiomViolation, "'" + d.elements[a] + "' has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          fail(ErrorCode::GroupAxiomViolation, "associativity fails at (" + d.elements[a] + "," +
                                                   d.elements[b] + "," + d.elements[c] + ")");
  d_ = std::make_shared<const Data>(std::move(d));
}

std::optional<std::size_t> FinGroup::find(const std::string& name) const {
  for (std::size_t i = 0; i < order(); ++i)
    if (d_->elements[i] == name) return i;
  return std::nullopt;
}

std::size_t FinGroup::element(const std::string& name) const {
  auto x = find(name);
  if (!x) fail(ErrorCode::UnknownLabel, "no group element '" + name + "'");
  return *x;
}

std::size_t FinGroup::element_order(std::size_t a) const {
  std::size_t k = 1, x = a;
  while (x != unit()) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FinGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> FinGroup::table() const {
  std::vector<std::vector<std::size_t>> t(order(), std::vector<std::size_t>(order()));
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b) t[a][b] = mul(a, b);
  return t;
}

bool operator==(const FinGroup& a, const FinGroup& b) {
  return a.d_ == b.d_ || (a.d_->elements == b.d_->elements && a.d_->unit == b.d_->unit &&
                          a.d_->table == b.d_->table);
}

FinGroup cyclic_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidInput, "cyclic group of order 0");
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FinGroup(names, 0, t);
}

FinGroup direct_product(const FinGroup& a, const FinGroup& b) {
  const std::size_t n = a.order(), m = b.order();
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < m; ++y) names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
  std::vector<std::vector<std::size_t>> t(n * m, std::vector<std::size_t>(n * m));
  for (std::size_t p = 0; p < n * m; ++p)
    for (std::size_t q = 0; q < n * m; ++q)
      t[p][q] = a.mul(p / m, q / m) * m + b.mul(p % m, q % m);
  return FinGroup(names, a.unit() * m + b.unit(), t);
}

FinGroup dihedral_group(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("r" + std::to_string(k));
  for (std::size_t k = 0; k < n; ++k) names.push_back("s" + std::to_string(k));
  // r^k -> k, s r^k -> n + k
  std::vector<std::vector<std::size_t>> t(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t x = 0; x < 2 * n; ++x)
    for (std::size_t y = 0; y < 2 * n; ++y) {
      bool xs = x >= n, ys = y >= n;
      std::size_t a = x % n, b = y % n;
      // s^e1 r^a s^e2 r^b = s^(e1+e2) r^(+-a + b)
      std::size_t exp = ys ? (n - a + b) % n : (a + b) % n;
      t[x][y] = ((xs != ys) ? n : 0) + exp;
    }
  return FinGroup(names, 0, t);
}

FinGroup symmetric_group_3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (auto& q : perms) names.push_back(std::to_string(q[0] + 1) + std::to_string(q[1] + 1) +
                                        std::to_string(q[2] + 1));
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<std::size_t, 3> c{};
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FinGroup(names, 0, t);
}

FinGroup quaternion_group() {
  // element 2*u + s: unit u in {1,i,j,k}, sign s (0 = +, 1 = -)
  const std::array<std::string, 4> unit_names{"1", "i", "j", "k"};
  // unit products: {sign, unit}
  const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const std::size_t prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::string> names;
  for (std::size_t u = 0; u < 4; ++u) {
    names.push_back(unit_names[u]);
    names.push_back("-" + unit_names[u]);
  }
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      std::size_t u = x / 2, v = y / 2;
      std::size_t s = (x % 2 + y % 2 + static_cast<std::size_t>(sign[u][v])) % 2;
      t[x][y] = 2 * prod[u][v] + s;
    }
  return FinGroup(names, 0, t);
}

const std::vector<std::pair<std::string, FinGroup>>& group_catalog() {
  static const std::vector<std::pair<std::string, FinGroup>> catalog = [] {
    FinGroup z2 = cyclic_group(2);
    return std::vector<std::pair<std::string, FinGroup>>{
        {"1", FinGroup()},
        {"Z2", z2},
        {"Z3", cyclic_group(3)},
        {"Z4", cyclic_group(4)},
        {"Z2xZ2", direct_product(z2, z2)},
        {"Z5", cyclic_group(5)},
        {"Z6", cyclic_group(6)},
        {"S3", symmetric_group_3()},
        {"Z7", cyclic_group(7)},
        {"Z8", cyclic_group(8)},
        {"Z4xZ2", direct_product(cyclic_group(4), z2)},
        {"Z2xZ2xZ2", direct_product(direct_product(z2, z2), z2)},
        {"D4", dihedral_group(4)},
        {"Q8", quaternion_group()},
    };
  }();
  return catalog;
}

// ---------------------------------------------------------------------------

FreeProduct::FreeProduct(std::vector<std::pair<std::string, FinGroup>> factors)
    : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].first.empty()) fail(ErrorCode::InvalidInput, "empty factor label");
    if (!index_.emplace(factors_[i].first, i).second)
      fail(ErrorCode::InvalidInput, "duplicate factor label '" + factors_[i].first + "'");
  }
}

FreeProduct FreeProduct::single(const std::string& label, const FinGroup& g) {
  return FreeProduct({{label, g}});
}

std::size_t FreeProduct::factor_index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) fail(ErrorCode::UnknownLabel, "no factor '" + label + "'");
  return it->second;
}

std::size_t FreeProduct::nontrivial_factors() const {
  std::size_t k = 0;
  for (auto& [l, g] : factors_) k += g.is_trivial() ? 0 : 1;
  return k;
}

Word FreeProduct::letter(std::size_t factor, std::size_t element) const {
  if (factor >= factors_.size() || element >= factors_[factor].second.order())
    fail(ErrorCode::UnknownLabel, "letter out of range");
  if (element == factors_[factor].second.unit()) return {};
  return {{factor, element}};
}

Word FreeProduct::reduce(const Word& w) const {
  Word out;
  for (const Letter& l : w) {
    if (l.factor >= factors_.size() || l.element >= factors_[l.factor].second.order())
      fail(ErrorCode::UnknownLabel, "letter out of range");
    const FinGroup& g = factors_[l.factor].second;
    if (l.element == g.unit()) continue;
    if (!out.empty() && out.back().factor == l.factor) {
      std::size_t p = g.mul(out.back().element, l.element);
      if (p == g.unit())
        out.pop_back();
      else
        out.back().element = p;
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word FreeProduct::multiply(const Word& a, const Word& b) const {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return reduce(w);
}

Word FreeProduct::inverse(const Word& w) const {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->factor, factors_[it->factor].second.inv(it->element)});
  return reduce(out);
}

std::string FreeProduct::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += label(w[i].factor) + ":" + factor(w[i].factor).name(w[i].element);
  }
  return s;
}

Word FreeProduct::parse(const std::vector<std::string>& letters) const {
  Word w;
  for (const auto& s : letters) {
    if (factors_.size() == 1) {
      if (auto e = factors_[0].second.find(s)) {
        w.push_back({0, *e});
        continue;
      }
    }
    auto pos = s.rfind(':');
    if (pos == std::string::npos) fail(ErrorCode::UnknownLabel, "cannot parse letter '" + s + "'");
    std::size_t f = factor_index(s.substr(0, pos));
    w.push_back({f, factor(f).element(s.substr(pos + 1))});
  }
  return reduce(w);
}

// ---------------------------------------------------------------------------

GroupHom::GroupHom(FreeProduct source, FreeProduct target, std::vector<std::vector<Word>> per_factor)
    : source_(std::move(source)), target_(std::move(target)), per_factor_(std::move(per_factor)) {
  if (per_factor_.size() != source_.num_factors())
    fail(ErrorCode::NotAHomomorphism, "one image table per source factor is required");
  for (std::size_t f = 0; f < source_.num_factors(); ++f) {
    const FinGroup& g = source_.factor(f);
    auto& img = per_factor_[f];
    if (img.size() != g.order())
      fail(ErrorCode::NotAHomomorphism, "image table of '" + source_.label(f) + "' has wrong size");
    for (auto& w : img)
      if (target_.reduce(w) != w)
        fail(ErrorCode::NotAHomomorphism, "image words must be reduced");
    if (!img[g.unit()].empty())
      fail(ErrorCode::NotAHomomorphism, "unit of '" + source_.label(f) + "' not sent to unit");
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b)
        if (target_.multiply(img[a], img[b]) != img[g.mul(a, b)])
          fail(ErrorCode::NotAHomomorphism, "not multiplicative on '" + source_.label(f) + "' at (" +
                                                g.name(a) + "," + g.name(b) + ")");
  }
}

Word GroupHom::apply(const Word& w) const {
  Word out;
  for (const Letter& l : w) {
    if (l.factor >= per_factor_.size() || l.element >= per_factor_[l.factor].size())
      fail(ErrorCode::UnknownLabel, "letter outside the source");
    const Word& img = per_factor_[l.factor][l.element];
    out.insert(out.end(), img.begin(), img.end());
  }
  return target_.reduce(out);
}

bool GroupHom::is_identity() const {
  if (!(source_ == target_)) return false;
  for (std::size_t f = 0; f < per_factor_.size(); ++f)
    for (std::size_t e = 0; e < per_factor_[f].size(); ++e)
      if (per_factor_[f][e] != source_.letter(f, e)) return false;
  return true;
}

GroupHom identity_hom(const FreeProduct& g) {
  std::vector<std::vector<Word>> pf(g.num_factors());
  for (std::size_t f = 0; f < g.num_factors(); ++f)
    for (std::size_t e = 0; e < g.factor(f).order(); ++e) pf[f].push_back(g.letter(f, e));
  return GroupHom(g, g, pf);
}

GroupHom trivial_hom(const FreeProduct& source, const FreeProduct& target) {
  std::vector<std::vector<Word>> pf(source.num_factors());
  for (std::size_t f = 0; f < source.num_factors(); ++f) pf[f].resize(source.factor(f).order());
  return GroupHom(source, target, pf);
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.target() == g.source())) fail(ErrorCode::NotAHomomorphism, "homomorphisms not composable");
  std::vector<std::vector<Word>> pf(f.source().num_factors());
  for (std::size_t k = 0; k < pf.size(); ++k)
    for (const Word& w : f.per_factor()[k]) pf[k].push_back(g.apply(w));
  return GroupHom(f.source(), g.target(), pf);
}

std::optional<GroupHom> invert(const GroupHom& h) {
  const FreeProduct &s = h.source(), &t = h.target();
  std::vector<std::vector<Word>> pf(t.num_factors());
  for (std::size_t f = 0; f < t.num_factors(); ++f) pf[f].resize(t.factor(f).order());
  std::vector<bool> hit(t.num_factors(), false);
  for (std::size_t f = 0; f < s.num_factors(); ++f) {
    const FinGroup& g = s.factor(f);
    if (g.is_trivial()) continue;
    std::optional<std::size_t> tf;
    std::set<std::size_t> seen;
    for (std::size_t e = 0; e < g.order(); ++e) {
      if (e == g.unit()) continue;
      const Word& w = h.image(f, e);
      if (w.size() != 1) return std::nullopt;
      if (tf && *tf != w[0].factor) return std::nullopt;
      tf = w[0].factor;
      seen.insert(w[0].element);
      pf[w[0].factor][w[0].element] = s.letter(f, e);
    }
    if (hit[*tf] || seen.size() + 1 != t.factor(*tf).order()) return std::nullopt;
    hit[*tf] = true;
  }
  for (std::size_t f = 0; f < t.num_factors(); ++f)
    if (!hit[f] && !t.factor(f).is_trivial()) return std::nullopt;
  return GroupHom(t, s, pf);
}

GroupHom table_hom(const FreeProduct& source, const FreeProduct& target,
                   const std::vector<std::size_t>& element_map) {
  if (source.num_factors() != 1 || target.num_factors() != 1)
    fail(ErrorCode::InvalidInput, "table_hom needs single-factor groups");
  if (element_map.size() != source.factor(0).order())
    fail(ErrorCode::NotAHomomorphism, "element map has wrong size");
  std::vector<std::vector<Word>> pf(1);
  for (std::size_t e : element_map) pf[0].push_back(target.letter(0, e));
  return GroupHom(source, target, pf);
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::string>> GroupPresentation::spelled_relators() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : relators) {
    std::vector<std::string> w;
    for (int l : r) {
      const std::string& g = generators[static_cast<std::size_t>(std::abs(l)) - 1];
      w.push_back(l > 0 ? g : g + "!");
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::string GroupPresentation::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? "," : "") + generators[i];
  s += " |";
  auto spelled = spelled_relators();
  for (std::size_t i = 0; i < spelled.size(); ++i) {
    s += i ? ", " : " ";
    for (std::size_t j = 0; j < spelled[i].size(); ++j) s += (j ? " " : "") + spelled[i][j];
  }
  return s + ">";
}

void GroupPresentation::validate() const {
  std::set<std::string> names(generators.begin(), generators.end());
  if (names.size() != generators.size()) fail(ErrorCode::InvalidInput, "duplicate generators");
  for (const auto& r : relators)
    for (int l : r)
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > generators.size())
        fail(ErrorCode::UnknownLabel, "relator letter out of range");
}

GroupPresentation make_presentation(std::vector<std::string> generators,
                                    const std::vector<std::vector<std::string>>& relators) {
  GroupPresentation p;
  p.generators = std::move(generators);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (p.generators[i].empty() || p.generators[i].back() == '!')
      fail(ErrorCode::InvalidInput, "bad generator name '" + p.generators[i] + "'");
    if (!index.emplace(p.generators[i], static_cast<int>(i) + 1).second)
      fail(ErrorCode::InvalidInput, "duplicate generator '" + p.generators[i] + "'");
  }
  for (const auto& r : relators) {
    std::vector<int> w;
    for (const auto& s : r) {
      bool inv = !s.empty() && s.back() == '!';
      auto it = index.find(inv ? s.substr(0, s.size() - 1) : s);
      if (it == index.end()) fail(ErrorCode::UnknownLabel, "relator uses undeclared '" + s + "'");
      w.push_back(inv ? -it->second : it->second);
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

GroupPresentation presentation_of(const FinGroup& g) {
  GroupPresentation p;
  std::vector<int> gen(g.order(), 0);
  for (std::size_t e = 0; e < g.order(); ++e) {
    if (e == g.unit()) continue;
    p.generators.push_back(g.name(e));
    gen[e] = static_cast<int>(p.generators.size());
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (a == g.unit() || b == g.unit()) continue;
      std::vector<int> r{gen[a], gen[b]};
      std::size_t c = g.mul(a, b);
      if (c != g.unit()) r.push_back(-gen[c]);
      p.relators.push_back(std::move(r));
    }
  return p;
}

std::uint64_t hom_count(const GroupPresentation& p, const FinGroup& t, HomBudget budget) {
  p.validate();
  const std::size_t k = p.generators.size();
  // Relators are checked as soon as their last generator is assigned.
  std::vector<std::vector<const std::vector<int>*>> due(k + 1);
  for (const auto& r : p.relators) {
    std::size_t last = 0;
    for (int l : r) last = std::max(last, static_cast<std::size_t>(std::abs(l)));
    due[last].push_back(&r);
  }
  std::uint64_t spent = 0, count = 0;
  auto charge = [&]() {
    if (++spent > budget.max_evaluations)
      fail(ErrorCode::BudgetExceeded, "homomorphism count into a group of order " +
                                          std::to_string(t.order()) + " exceeds the budget");
  };
  std::vector<std::size_t> value(k + 1, t.unit());
  auto holds = [&](const std::vector<int>& r) {
    charge();
    std::size_t x = t.unit();
    for (int l : r) {
      std::size_t v = value[static_cast<std::size_t>(std::abs(l))];
      x = t.mul(x, l > 0 ? v : t.inv(v));
    }
    return x == t.unit();
  };
  for (const auto* r : due[0])
    if (!holds(*r)) return 0;
  std::function<void(std::size_t)> assign = [&](std::size_t g) {
    if (g > k) {
      ++count;
      return;
    }
    for (std::size_t v = 0; v < t.order(); ++v) {
      charge();
      value[g] = v;
      bool ok = true;
      for (const auto* r : due[g])
        if (!holds(*r)) {
          ok = false;
          break;
        }
      if (ok) assign(g + 1);
    }
  };
  assign(1);
  return count;
}

std::vector<std::uint64_t> fingerprint(const GroupPresentation& p, HomBudget budget) {
  std::vector<std::uint64_t> out;
  for (const auto& [name, g] : group_catalog()) out.push_back(hom_count(p, g, budget));
  return out;
}

FGAb abelianization(const GroupPresentation& p) {
  p.validate();
  IntMatrix m(p.generators.size(), p.relators.size());
  for (std::size_t j = 0; j < p.relators.size(); ++j)
    for (int l : p.relators[j]) m(static_cast<std::size_t>(std::abs(l)) - 1, j) += l > 0 ? 1 : -1;
  return FGAb(p.generators.size(), m);
}

// ---------------------------------------------------------------------------

namespace {

using Rel = std::vector<int>;

Rel free_reduce(const Rel& w) {
  Rel out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Rel cyclic_reduce(Rel w) {
  w = free_reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) {
    ++a;
    --b;
  }
  return Rel(w.begin() + static_cast<std::ptrdiff_t>(a), w.begin() + static_cast<std::ptrdiff_t>(b));
}

Rel invert_rel(const Rel& w) {
  Rel out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

// Letters ordered x < x! < y < y! ...
bool rel_less(const Rel& a, const Rel& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](int x, int y) {
    return std::make_pair(std::abs(x), x < 0) < std::make_pair(std::abs(y), y < 0);
  });
}

// Least rotation of the word or of its inverse.
Rel canonical(const Rel& w) {
  Rel best = w;
  for (const Rel& v : {w, invert_rel(w)})
    for (std::size_t s = 0; s < v.size(); ++s) {
      Rel r(v.begin() + static_cast<std::ptrdiff_t>(s), v.end());
      r.insert(r.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(s));
      if (rel_less(r, best)) best = r;
    }
  return best;
}

void normalize(std::vector<Rel>& rels) {
  std::set<Rel> seen;
  std::vector<Rel> out;
  for (auto& r : rels) {
    Rel c = canonical(cyclic_reduce(r));
    if (c.empty() || !seen.insert(c).second) continue;
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Rel& a, const Rel& b) {
    return a.size() != b.size() ? a.size() < b.size() : rel_less(a, b);
  });
  rels = std::move(out);
}

}  // namespace

GroupPresentation tietze_simplify(const GroupPresentation& p, std::size_t budget) {
  p.validate();
  std::vector<std::string> gens = p.generators;
  std::vector<Rel> rels = p.relators;
  normalize(rels);
  while (true) {
    bool eliminated = false;
    std::size_t total = 0;
    for (auto& r : rels) total += r.size();
    for (std::size_t ri = 0; ri < rels.size() && !eliminated; ++ri) {
      const Rel& r = rels[ri];
      for (int g = static_cast<int>(gens.size()); g >= 1 && !eliminated; --g) {
        std::size_t occurrences = 0, pos = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
          if (std::abs(r[i]) == g) {
            ++occurrences;
            pos = i;
          }
        if (occurrences != 1) continue;
        // rotate so the generator comes first: x^e w = 1
        Rel rot(r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
        Rel w(rot.begin() + 1, rot.end());
        Rel value = rot[0] > 0 ? invert_rel(w) : w;  // x = value
        Rel value_inv = invert_rel(value);
        std::vector<Rel> next;
        std::size_t new_total = 0;
        for (std::size_t rj = 0; rj < rels.size(); ++rj) {
          if (rj == ri) continue;
          Rel s;
          for (int l : rels[rj]) {
            if (l == g)
              s.insert(s.end(), value.begin(), value.end());
            else if (l == -g)
              s.insert(s.end(), value_inv.begin(), value_inv.end());
            else
              s.push_back(l);
          }
          new_total += s.size();
          next.push_back(std::move(s));
        }
        if (new_total > std::max(budget, total)) continue;
        for (auto& s : next)
          for (int& l : s)
            if (std::abs(l) > g) l += l > 0 ? -1 : 1;
        gens.erase(gens.begin() + (g - 1));
        rels = std::move(next);
        normalize(rels);
        eliminated = true;
      }
    }
    if (!eliminated) break;
  }
  return GroupPresentation{gens, rels};
}

// ---------------------------------------------------------------------------

std::vector<BigInt> AbelianizedProduct::word_coords(const Word& w) const {
  std::vector<BigInt> v(group.gens());
  for (const Letter& l : w) {
    const auto& c = coords[l.factor][l.element];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[i];
  }
  return v;
}

AbelianizedProduct abelianize(const FreeProduct& g) {
  AbelianizedProduct out;
  std::vector<FGAb> parts;
  std::vector<ReducedFGAb> reduced;
  for (std::size_t f = 0; f < g.num_factors(); ++f) {
    reduced.push_back(reduce(abelianization(presentation_of(g.factor(f)))));
    parts.push_back(reduced.back().group);
  }
  out.group = FGAb::direct_sum(parts);
  const std::size_t n = out.group.gens();
  std::size_t offset = 0;
  out.coords.resize(g.num_factors());
  for (std::size_t f = 0; f < g.num_factors(); ++f) {
    const FinGroup& grp = g.factor(f);
    const ReducedFGAb& r = reduced[f];
    // generator index of each non-unit element in the table presentation
    std::vector<std::size_t> gen(grp.order(), static_cast<std::size_t>(-1));
    std::size_t k = 0;
    for (std::size_t e = 0; e < grp.order(); ++e)
      if (e != grp.unit()) gen[e] = k++;
    out.coords[f].assign(grp.order(), std::vector<BigInt>(n));
    for (std::size_t e = 0; e < grp.order(); ++e) {
      if (e == grp.unit()) continue;
      for (std::size_t i = 0; i < r.group.gens(); ++i) out.coords[f][e][offset + i] = r.to_reduced(i, gen[e]);
    }
    for (std::size_t j = 0; j < r.group.gens(); ++j) {
      std::vector<std::tuple<std::size_t, std::size_t, BigInt>> lift;
      for (std::size_t e = 0; e < grp.order(); ++e)
        if (e != grp.unit() && r.from_reduced(gen[e], j) != 0)
          lift.emplace_back(f, e, r.from_reduced(gen[e], j));
      out.lifts.push_back(std::move(lift));
    }
    offset += r.group.gens();
  }
  return out;
}

IntMatrix abelianize(const GroupHom& h, const AbelianizedProduct& source,
                     const AbelianizedProduct& target) {
  IntMatrix m(target.group.gens(), source.group.gens());
  for (std::size_t j = 0; j < source.group.gens(); ++j)
    for (const auto& [f, e, c] : source.lifts[j]) {
      auto v = target.word_coords(h.image(f, e));
      for (std::size_t i = 0; i < v.size(); ++i) m(i, j) += c * v[i];
    }
  return m;
}

}  // namespace hocofin
