#include "fcs/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>

namespace fcs {

namespace {

constexpr const char* kMod = "abelian";

std::int64_t chk_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(kMod, "integer overflow (add)");
  return r;
}

std::int64_t chk_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError(kMod, "integer overflow (sub)");
  return r;
}

std::int64_t chk_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(kMod, "integer overflow (mul)");
  return r;
}

std::uint64_t chk_umul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(kMod, "integer overflow (mul)");
  return r;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> fs;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      std::uint32_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fs.emplace_back(p, e);
    }
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

// Exact base-p logarithm, or -1 if x is not a power of p.
int plog(std::uint64_t x, std::uint64_t p) {
  int k = 0;
  while (x > 1) {
    if (x % p != 0) return -1;
    x /= p;
    ++k;
  }
  return k;
}

AbelianType assemble_from_prime_exponents(
    const std::map<std::uint64_t, std::vector<std::uint32_t>>& per_prime) {
  std::size_t width = 0;
  for (const auto& [p, exps] : per_prime) width = std::max(width, exps.size());
  AbelianType t;
  // Row i (0 = largest) collects the i-th largest exponent of every prime.
  std::vector<std::uint64_t> desc;
  for (std::size_t i = 0; i < width; ++i) {
    std::uint64_t f = 1;
    for (const auto& [p, exps] : per_prime) {
      if (i < exps.size()) {
        for (std::uint32_t e = 0; e < exps[i]; ++e) f = chk_umul(f, p);
      }
    }
    desc.push_back(f);
  }
  for (auto it = desc.rbegin(); it != desc.rend(); ++it) {
    if (*it > 1) t.factors.push_back(*it);
  }
  validate_abelian_type(t);
  return t;
}

} // namespace

std::uint64_t AbelianType::order() const {
  std::uint64_t n = 1;
  for (std::uint64_t f : factors) n = chk_umul(n, f);
  return n;
}

void validate_abelian_type(const AbelianType& t) {
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (t.factors[i] < 2) {
      throw DomainError(kMod, "invariant factor " + std::to_string(t.factors[i]) +
                                  " is below 2");
    }
    if (i + 1 < t.factors.size() && t.factors[i + 1] % t.factors[i] != 0) {
      throw DomainError(kMod, "invariant factors violate divisibility: " +
                                  std::to_string(t.factors[i]) + " does not divide " +
                                  std::to_string(t.factors[i + 1]));
    }
  }
}

std::string format_abelian_type(const AbelianType& t) {
  if (t.factors.empty()) return "C_1";
  std::string s;
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (i) s += " x ";
    s += "C_" + std::to_string(t.factors[i]);
  }
  return s;
}

AbelianType abelian_type_from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
  std::map<std::uint64_t, std::vector<std::uint32_t>> per_prime;
  for (std::uint64_t n : orders) {
    if (n == 0) throw DomainError(kMod, "cyclic order must be positive");
    for (auto [p, e] : factorize(n)) per_prime[p].push_back(e);
  }
  for (auto& [p, exps] : per_prime) std::sort(exps.begin(), exps.end(), std::greater<>());
  return assemble_from_prime_exponents(per_prime);
}

namespace {

// Per prime p: a_k = log_p #{x with order dividing p^k}, k = 0..K where K is
// the point of stabilization. a_0 = 0.
std::vector<int> dividing_profile(const std::map<std::uint64_t, std::uint64_t>& counts,
                                  std::uint64_t p) {
  std::vector<int> a{0};
  std::uint64_t total = 1; // the identity
  std::uint64_t pk = 1;
  while (true) {
    pk = chk_umul(pk, p);
    auto it = counts.find(pk);
    std::uint64_t here = it == counts.end() ? 0 : it->second;
    if (here == 0) break;
    if (total > std::numeric_limits<std::uint64_t>::max() - here) {
      throw OverflowError(kMod, "order profile counts overflow");
    }
    total += here;
    int lg = plog(total, p);
    if (lg < 0) {
      throw DomainError(kMod, "not an Abelian group order profile: count " +
                                  std::to_string(total) + " of elements with order dividing " +
                                  std::to_string(pk) + " is not a power of " + std::to_string(p));
    }
    a.push_back(lg);
  }
  return a;
}

std::map<std::uint64_t, std::vector<std::uint32_t>> prime_exponents_incremental(
    const std::map<std::uint64_t, std::uint64_t>& counts) {
  std::map<std::uint64_t, std::vector<std::uint32_t>> per_prime;
  std::vector<std::uint64_t> primes;
  for (const auto& [d, c] : counts) {
    if (d < 2 || c == 0) continue;
    auto fs = factorize(d);
    if (fs.size() == 1) primes.push_back(fs[0].first);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (std::uint64_t p : primes) {
    std::vector<int> a = dividing_profile(counts, p);
    // c_k = a_k - a_{k-1} counts cyclic factors of exponent >= k; it must be
    // non-increasing for a direct product of cyclic p-groups.
    std::vector<int> c;
    for (std::size_t k = 1; k < a.size(); ++k) c.push_back(a[k] - a[k - 1]);
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      if (c[k] < c[k + 1]) {
        throw DomainError(kMod,
                          "not an Abelian group order profile: dividing counts for prime " +
                              std::to_string(p) + " are not log-concave");
      }
    }
    if (!c.empty() && c.back() < 0) {
      throw DomainError(kMod, "not an Abelian group order profile");
    }
    // Transpose: the j-th factor (1-based) has exponent #{k : c_k >= j}.
    std::vector<std::uint32_t> exps;
    if (!c.empty()) {
      for (int j = 1; j <= c[0]; ++j) {
        std::uint32_t e = 0;
        for (std::size_t k = 0; k < c.size(); ++k) {
          if (c[k] >= j) ++e;
        }
        exps.push_back(e);
      }
    }
    per_prime[p] = std::move(exps);
  }
  return per_prime;
}

} // namespace

std::map<std::uint64_t, std::uint64_t> order_profile(const AbelianType& t) {
  validate_abelian_type(t);
  std::uint64_t expnt = t.factors.empty() ? 1 : t.factors.back();
  // Divisors of the exponent, ascending.
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d * d <= expnt; ++d) {
    if (expnt % d == 0) {
      divs.push_back(d);
      if (d != expnt / d) divs.push_back(expnt / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  std::map<std::uint64_t, std::uint64_t> dividing;
  for (std::uint64_t d : divs) {
    std::uint64_t cnt = 1;
    for (std::uint64_t f : t.factors) cnt = chk_umul(cnt, std::gcd(d, f));
    dividing[d] = cnt;
  }
  std::map<std::uint64_t, std::uint64_t> exact;
  for (std::uint64_t d : divs) {
    std::uint64_t cnt = dividing[d];
    for (std::uint64_t d2 : divs) {
      if (d2 < d && d % d2 == 0) cnt -= exact[d2];
    }
    if (cnt > 0) exact[d] = cnt;
  }
  return exact;
}

AbelianType order_statistics_type(const std::map<std::uint64_t, std::uint64_t>& counts) {
  auto it1 = counts.find(1);
  if (it1 == counts.end() || it1->second != 1) {
    throw DomainError(kMod, "not an Abelian group order profile: need exactly one identity");
  }
  AbelianType t = assemble_from_prime_exponents(prime_exponents_incremental(counts));
  // Full round trip: the synthesized type must reproduce the input exactly;
  // this catches profiles whose per-prime parts look fine but whose
  // composite-order counts are inconsistent.
  std::map<std::uint64_t, std::uint64_t> expected = order_profile(t);
  std::map<std::uint64_t, std::uint64_t> given;
  for (const auto& [d, c] : counts) {
    if (c > 0) given[d] = c;
  }
  if (expected != given) {
    throw DomainError(kMod, "not an Abelian group order profile: counts do not match any "
                            "direct product of cyclic groups");
  }
  return t;
}

AbelianType order_statistics_type_second_difference(
    const std::map<std::uint64_t, std::uint64_t>& counts) {
  auto it1 = counts.find(1);
  if (it1 == counts.end() || it1->second != 1) {
    throw DomainError(kMod, "not an Abelian group order profile: need exactly one identity");
  }
  std::vector<std::uint64_t> primes;
  for (const auto& [d, c] : counts) {
    if (d < 2 || c == 0) continue;
    auto fs = factorize(d);
    if (fs.size() == 1) primes.push_back(fs[0].first);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  std::map<std::uint64_t, std::vector<std::uint32_t>> per_prime;
  for (std::uint64_t p : primes) {
    std::vector<int> a = dividing_profile(counts, p);
    // s_k = 2 a_k - a_{k+1} - a_{k-1} factors of exponent exactly k, with the
    // profile held constant past its stable point.
    auto at = [&](std::size_t k) { return k < a.size() ? a[k] : a.back(); };
    std::vector<std::uint32_t> exps;
    for (std::size_t k = a.size(); k-- > 1;) {
      int s = 2 * at(k) - int(at(k + 1)) - int(at(k - 1));
      if (s < 0) {
        throw DomainError(kMod, "not an Abelian group order profile: negative factor count");
      }
      for (int r = 0; r < s; ++r) exps.push_back(std::uint32_t(k));
    }
    per_prime[p] = std::move(exps);
  }
  return assemble_from_prime_exponents(per_prime);
}

IntMatrix IntMatrix::zero(int r, int c) {
  IntMatrix m;
  m.rows = r;
  m.cols = c;
  m.a.assign(std::size_t(r) * std::size_t(c), 0);
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows == o.rows && cols == o.cols && a == o.a;
}

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw DomainError(kMod, "matrix shape mismatch in product");
  IntMatrix r = IntMatrix::zero(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      std::int64_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        r.at(i, j) = chk_add(r.at(i, j), chk_mul(v, y.at(k, j)));
      }
    }
  }
  return r;
}

namespace {

struct SnfWork {
  IntMatrix a, c, b;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int t = 0; t < a.cols; ++t) std::swap(a.at(i, t), a.at(j, t));
    for (int t = 0; t < c.cols; ++t) std::swap(c.at(i, t), c.at(j, t));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int t = 0; t < a.rows; ++t) std::swap(a.at(t, i), a.at(t, j));
    for (int t = 0; t < b.rows; ++t) std::swap(b.at(t, i), b.at(t, j));
  }
  // row_i -= q * row_j
  void row_sub(int i, int j, std::int64_t q) {
    if (q == 0) return;
    for (int t = 0; t < a.cols; ++t) a.at(i, t) = chk_sub(a.at(i, t), chk_mul(q, a.at(j, t)));
    for (int t = 0; t < c.cols; ++t) c.at(i, t) = chk_sub(c.at(i, t), chk_mul(q, c.at(j, t)));
  }
  void col_sub(int i, int j, std::int64_t q) {
    if (q == 0) return;
    for (int t = 0; t < a.rows; ++t) a.at(t, i) = chk_sub(a.at(t, i), chk_mul(q, a.at(t, j)));
    for (int t = 0; t < b.rows; ++t) b.at(t, i) = chk_sub(b.at(t, i), chk_mul(q, b.at(t, j)));
  }
  void negate_row(int i) {
    for (int t = 0; t < a.cols; ++t) a.at(i, t) = chk_sub(0, a.at(i, t));
    for (int t = 0; t < c.cols; ++t) c.at(i, t) = chk_sub(0, c.at(i, t));
  }
};

} // namespace

SmithResult smith_normal_form(const IntMatrix& input) {
  SnfWork w;
  w.a = input;
  w.c = IntMatrix::identity(input.rows);
  w.b = IntMatrix::identity(input.cols);

  int r = std::min(input.rows, input.cols);
  for (int t = 0; t < r; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      int pi = -1, pj = -1;
      for (int i = t; i < w.a.rows; ++i) {
        for (int j = t; j < w.a.cols; ++j) {
          std::int64_t v = w.a.at(i, j);
          if (v == 0) continue;
          if (pi == -1 || std::abs(v) < std::abs(w.a.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == -1) {
        // Trailing submatrix is zero; the diagonal ends here.
        t = r;
        break;
      }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      std::int64_t piv = w.a.at(t, t);

      bool clean = true;
      for (int i = t + 1; i < w.a.rows; ++i) {
        std::int64_t v = w.a.at(i, t);
        if (v == 0) continue;
        w.row_sub(i, t, v / piv);
        if (w.a.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < w.a.cols; ++j) {
        std::int64_t v = w.a.at(t, j);
        if (v == 0) continue;
        w.col_sub(j, t, v / piv);
        if (w.a.at(t, j) != 0) clean = false;
      }
      if (!clean) continue; // remainders become the next, smaller pivot

      // Pivot must divide everything that remains; fold a bad row in and
      // repeat with a smaller pivot.
      bool divides_all = true;
      for (int i = t + 1; i < w.a.rows && divides_all; ++i) {
        for (int j = t + 1; j < w.a.cols && divides_all; ++j) {
          if (w.a.at(i, j) % piv != 0) {
            w.row_sub(t, i, -1); // add row i to row t
            divides_all = false;
          }
        }
      }
      if (divides_all) break;
    }
    if (t >= r) break;
    if (w.a.at(t, t) < 0) w.negate_row(t);
  }
  for (int t = 0; t < r; ++t) {
    if (w.a.at(t, t) < 0) w.negate_row(t);
  }

  SmithResult res;
  res.d = w.a;
  res.c = w.c;
  res.b = w.b;
  if (!(matmul(matmul(res.c, input), res.b) == res.d)) {
    throw DomainError(kMod, "internal error: transform product mismatch");
  }
  return res;
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows != m.cols) throw DomainError(kMod, "determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division is exact.
  IntMatrix w = m;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (w.at(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap == -1) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        std::int64_t num =
            chk_sub(chk_mul(w.at(i, j), w.at(k, k)), chk_mul(w.at(i, k), w.at(k, j)));
        w.at(i, j) = num / prev;
      }
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return chk_mul(sign, w.at(n - 1, n - 1));
}

RfagType rfag_type(const IntMatrix& relations) {
  RfagType out;
  if (relations.cols <= 0) throw DomainError(kMod, "need at least one generator column");
  SmithResult snf = smith_normal_form(relations);
  int r = std::min(relations.rows, relations.cols);
  std::vector<std::uint64_t> nonzero;
  int zero_slots = relations.cols - r;
  for (int i = 0; i < r; ++i) {
    std::int64_t d = snf.d.at(i, i);
    if (d == 0) {
      ++zero_slots;
    } else if (d > 1) {
      nonzero.push_back(std::uint64_t(d));
    }
  }
  if (zero_slots > 0) {
    out.finite = false;
    out.free_rank = std::uint32_t(zero_slots);
    return out;
  }
  out.finite = true;
  out.type.factors = std::move(nonzero);
  validate_abelian_type(out.type);
  return out;
}

TminTmax tmin_tmax(const AbelianType& t) {
  validate_abelian_type(t);
  TminTmax r;
  r.t_min = std::uint32_t(t.factors.size());
  r.invariant_factors_desc.assign(t.factors.rbegin(), t.factors.rend());
  for (std::uint64_t f : r.invariant_factors_desc) {
    std::vector<std::uint64_t> row;
    for (auto [p, e] : factorize(f)) {
      std::uint64_t pe = 1;
      for (std::uint32_t i = 0; i < e; ++i) pe = chk_umul(pe, p);
      row.push_back(pe);
      ++r.t_max;
    }
    std::sort(row.begin(), row.end());
    r.rows.push_back(std::move(row));
  }
  return r;
}

std::uint64_t partition_count(std::uint32_t n) {
  std::vector<std::uint64_t> dp(std::size_t(n) + 1, 0);
  dp[0] = 1;
  for (std::uint32_t part = 1; part <= n; ++part) {
    for (std::uint32_t s = part; s <= n; ++s) {
      std::uint64_t v = dp[std::size_t(s)] + dp[std::size_t(s - part)];
      if (v < dp[std::size_t(s)]) throw OverflowError(kMod, "partition count overflow");
      dp[std::size_t(s)] = v;
    }
  }
  return dp[std::size_t(n)];
}

std::uint64_t count_abelian_groups_of_order(std::uint64_t p, std::uint32_t n) {
  if (p < 2) throw DomainError(kMod, "p must be a prime");
  auto fs = factorize(p);
  if (fs.size() != 1 || fs[0].second != 1) {
    throw DomainError(kMod, std::to_string(p) + " is not prime");
  }
  return partition_count(n);
}

IntMatrix parse_matrix(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int rows = -1, cols = -1;
  std::vector<std::int64_t> vals;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    if (rows == -1) {
      if (!(ls >> rows >> cols)) continue; // blank or comment line before header
      if (rows < 0 || cols <= 0) throw ParseError(kMod, "bad matrix header", lineno);
      continue;
    }
    std::int64_t v;
    while (ls >> v) vals.push_back(v);
  }
  if (rows == -1) throw ParseError(kMod, "missing matrix header");
  if (vals.size() != std::size_t(rows) * std::size_t(cols)) {
    throw ParseError(kMod, "expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                               " entries, got " + std::to_string(vals.size()));
  }
  IntMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.a = std::move(vals);
  return m;
}

IntMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(kMod, "cannot open '" + path + "'");
  return parse_matrix(in);
}

} // namespace fcs
