#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace oracle {

Exps exps(const gotzmann::Monomial& m) { return m.exponents(); }

int degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

static void fill(std::size_t n, int d, std::size_t i, Exps& cur, std::vector<Exps>& out) {
  if (i + 1 == n) {
    cur[i] = d;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= d; ++e) {
    cur[i] = e;
    fill(n, d - e, i + 1, cur, out);
  }
}

std::vector<Exps> all_monomials(std::size_t n, int d) {
  std::vector<Exps> out;
  if (d < 0 || n == 0) return out;
  Exps cur(n, 0);
  fill(n, d, 0, cur, out);
  return out;
}

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool in_ideal(const std::vector<Exps>& gens, const Exps& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, m); });
}

std::vector<Exps> ideal_piece(const std::vector<Exps>& gens, std::size_t n, int d) {
  std::vector<Exps> out;
  for (auto& m : all_monomials(n, d))
    if (in_ideal(gens, m)) out.push_back(m);
  return out;
}

std::vector<Exps> standard_piece(const std::vector<Exps>& gens, std::size_t n, int d) {
  std::vector<Exps> out;
  for (auto& m : all_monomials(n, d))
    if (!in_ideal(gens, m)) out.push_back(m);
  return out;
}

std::vector<Exps> gens_of(const gotzmann::MonomialIdeal& ideal) {
  std::vector<Exps> out;
  for (const auto& g : ideal.generators()) out.push_back(g.exponents());
  return out;
}

bool borel_leq_bfs(const Exps& a, const Exps& b) {
  if (degree(a) != degree(b)) return false;
  std::set<Exps> seen{a};
  std::deque<Exps> queue{a};
  while (!queue.empty()) {
    Exps cur = queue.front();
    queue.pop_front();
    if (cur == b) return true;
    for (std::size_t i = 1; i < cur.size(); ++i) {
      if (cur[i] == 0) continue;
      Exps next = cur;
      --next[i];
      ++next[i - 1];
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

bool borel_fixed_brute(const std::vector<Exps>& gens, std::size_t n, int top) {
  for (int d = 0; d <= top; ++d)
    for (const auto& m : ideal_piece(gens, n, d))
      for (std::size_t i = 1; i < n; ++i) {
        if (m[i] == 0) continue;
        Exps moved = m;
        --moved[i];
        ++moved[i - 1];
        if (!in_ideal(gens, moved)) return false;
      }
  return true;
}

std::vector<Factorization> ek_factorizations(const std::vector<Exps>& gens, const Exps& m) {
  std::vector<Factorization> out;
  for (const auto& g : gens) {
    if (!divides(g, m)) continue;
    Exps u(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) u[i] = m[i] - g[i];
    int max_g = -1;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] > 0) max_g = static_cast<int>(i);
    int min_u = static_cast<int>(u.size());
    for (std::size_t i = u.size(); i-- > 0;)
      if (u[i] > 0) min_u = static_cast<int>(i);
    if (max_g <= min_u) out.push_back({g, u});
  }
  return out;
}

mpq_class det_leibniz(const Mat& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpq_class prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m[i][perm[i]];
    total += (inversions % 2 ? -prod : prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

static bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::size_t rank_by_minors(const Mat& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<std::size_t> r(k);
    std::iota(r.begin(), r.end(), 0);
    do {
      std::vector<std::size_t> c(k);
      std::iota(c.begin(), c.end(), 0);
      do {
        Mat sub(k, Row(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        if (det_leibniz(sub) != 0) return k;
      } while (next_subset(c, cols));
    } while (next_subset(r, rows));
  }
  return 0;
}

std::size_t rank_gauss(Mat m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::size_t krull_dim_brute(const std::vector<Exps>& gens, std::size_t n) {
  std::size_t best = 0;
  bool any = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool independent = true;
    for (const auto& g : gens) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > 0 && !(mask >> i & 1)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) {
      any = true;
      best = std::max<std::size_t>(best, std::popcount(mask));
    }
  }
  return any ? best : 0;
}

static long dot(const Exps& e, const std::vector<long>& w) {
  long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * w[i];
  return s;
}

bool separates(const std::vector<Exps>& gens, std::size_t n, int m, const std::vector<long>& w) {
  auto in = ideal_piece(gens, n, m);
  auto out = standard_piece(gens, n, m);
  if (in.empty()) return false;
  long lo = dot(in[0], w);
  for (auto& a : in) lo = std::min(lo, dot(a, w));
  for (auto& b : out)
    if (dot(b, w) >= lo) return false;
  return true;
}

std::optional<std::vector<long>> grid_certificate(const std::vector<Exps>& gens, std::size_t n, int m, long bound) {
  std::vector<long> w(n, 0);
  while (true) {
    if (separates(gens, n, m, w)) return w;
    std::size_t i = 0;
    while (i < n && w[i] == bound) w[i++] = 0;
    if (i == n) return std::nullopt;
    ++w[i];
  }
}

bool Order::greater(const Exps& a, const Exps& b) const {
  using gotzmann::OrderKind;
  auto lex = [&] {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  };
  auto revlex = [&] {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  };
  if (kind == OrderKind::Lex) return lex();
  int da = degree(a), db = degree(b);
  if (da != db) return da > db;
  if (kind == OrderKind::Weighted) {
    mpq_class wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      wa += weight[i] * a[i];
      wb += weight[i] * b[i];
    }
    if (wa != wb) return wa > wb;
    return tiebreak == OrderKind::Lex ? lex() : revlex();
  }
  return revlex();
}

Order order_of(const gotzmann::TermOrder& o) {
  Order out{o.kind(), o.tiebreak(), {}};
  for (std::size_t i = 0; i < o.weight().size(); ++i) out.weight.push_back(o.weight()[i]);
  return out;
}

Poly poly(const gotzmann::MultiPoly& p) {
  Poly out;
  for (const auto& t : p.terms()) out[t.mono.exponents()] = t.coef;
  return out;
}

static const Exps* leading(const Poly& p, const Order& order) {
  const Exps* best = nullptr;
  for (const auto& [e, c] : p)
    if (!best || order.greater(e, *best)) best = &e;
  return best;
}

static void add_scaled(Poly& f, const Poly& g, const Exps& shift, const mpq_class& c) {
  for (const auto& [e, coef] : g) {
    Exps s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    mpq_class& slot = f[s];
    slot += c * coef;
    if (slot == 0) f.erase(s);
  }
}

Poly remainder(Poly f, const std::vector<Poly>& divisors, const Order& order) {
  Poly rem;
  while (!f.empty()) {
    Exps lt = *leading(f, order);
    mpq_class lc = f[lt];
    bool divided = false;
    for (const auto& g : divisors) {
      const Exps* lg = leading(g, order);
      if (!lg || !divides(*lg, lt)) continue;
      Exps shift(lt.size());
      for (std::size_t i = 0; i < lt.size(); ++i) shift[i] = lt[i] - (*lg)[i];
      add_scaled(f, g, shift, -lc / g.at(*lg));
      divided = true;
      break;
    }
    if (!divided) {
      rem[lt] = lc;
      f.erase(lt);
    }
  }
  return rem;
}

bool s_pairs_reduce_to_zero(const std::vector<Poly>& basis, const Order& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Exps& a = *leading(basis[i], order);
      const Exps& b = *leading(basis[j], order);
      Exps l(a.size()), sa(a.size()), sb(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        l[k] = std::max(a[k], b[k]);
        sa[k] = l[k] - a[k];
        sb[k] = l[k] - b[k];
      }
      Poly s;
      add_scaled(s, basis[i], sa, 1 / basis[i].at(a));
      add_scaled(s, basis[j], sb, -1 / basis[j].at(b));
      if (!remainder(s, basis, order).empty()) return false;
    }
  return true;
}

bool s_pairs_reduce_to_zero(const gotzmann::GroebnerBasis& gb) {
  std::vector<Poly> basis;
  for (const auto& g : gb.generators()) basis.push_back(poly(g));
  return s_pairs_reduce_to_zero(basis, order_of(gb.order()));
}

} // namespace oracle
