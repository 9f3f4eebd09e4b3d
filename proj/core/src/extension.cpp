#include "fcs/extension.hpp"

#include <string>

#include "fcs/cyclic.hpp"
#include "fcs/error.hpp"

namespace fcs {

namespace {

std::uint64_t mul_u64(std::uint64_t a, std::uint64_t b, const char* where) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(where, "64-bit overflow in multiplication");
  return r;
}

std::uint64_t add_u64(std::uint64_t a, std::uint64_t b, const char* where) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(where, "64-bit overflow in addition");
  return r;
}

} // namespace

void validate_quintuple(const Quintuple& q) {
  if (q.m < 1 || q.n < 1 || q.mp < 1 || q.np < 1)
    throw DomainError("quintuple", "indices and periods must be >= 1");
  if (q.k > q.mp + q.np - 1)
    throw DomainError("quintuple", "k = " + std::to_string(q.k) + " exceeds the canonical window [0, " +
                                       std::to_string(q.mp + q.np - 1) + "]");
}

bool is_realizable(const Quintuple& q) {
  validate_quintuple(q);
  if (q.k == 0) return true;
  std::uint64_t mk = mul_u64(q.m, q.k, "is_realizable");
  std::uint64_t nk = mul_u64(q.n, q.k, "is_realizable");
  return q.mp - 1 <= mk && nk % q.np == 0;
}

bool is_strongly_realizable(const Quintuple& q) {
  validate_quintuple(q);
  if (q.k == 0) return false;
  std::uint64_t mk = mul_u64(q.m, q.k, "is_strongly_realizable");
  std::uint64_t nk = mul_u64(q.n, q.k, "is_strongly_realizable");
  return q.mp <= mk && nk % q.np == 0;
}

Realization realize(const Quintuple& q) {
  const char* where = "realize";
  validate_quintuple(q);
  if (!is_realizable(q)) {
    CyclicType bt{q.mp, q.np};
    std::uint64_t lo = canonical_exponent(add_u64(mul_u64(q.m, q.k, where), 1, where), bt);
    std::uint64_t hi = canonical_exponent(
        add_u64(mul_u64(add_u64(q.m, q.n, where), q.k, where), 1, where), bt);
    std::uint64_t mk = q.m * q.k;
    std::uint64_t nk = q.n * q.k;
    std::string why;
    if (q.mp - 1 > mk)
      why = "index condition m'-1 <= m*k fails (" + std::to_string(q.mp - 1) + " > " +
            std::to_string(mk) + ")";
    else
      why = "period condition n' | n*k fails (n*k = " + std::to_string(nk) + ", n' = " +
            std::to_string(q.np) + ")";
    throw DomainError(where, why + "; a^" + std::to_string(q.m) + " = a^" +
                                 std::to_string(q.m + q.n) + " but the products with b give b^" +
                                 std::to_string(lo) + " != b^" + std::to_string(hi));
  }

  CyclicType at{q.m, q.n};
  CyclicType bt{q.mp, q.np};
  std::uint64_t sa = q.m + q.n - 1;
  std::uint64_t sb = q.mp + q.np - 1;
  std::uint64_t total = add_u64(sa, sb, where);
  if (total > 100000) throw DomainError(where, "realization too large");
  int nn = static_cast<int>(total);
  int isa = static_cast<int>(sa);

  std::vector<std::string> names(nn);
  for (std::uint64_t i = 1; i <= sa; ++i)
    names[i - 1] = i == 1 ? "a" : "a^" + std::to_string(i);
  for (std::uint64_t j = 1; j <= sb; ++j)
    names[sa + j - 1] = j == 1 ? "b" : "b^" + std::to_string(j);

  auto a_el = [&](std::uint64_t e) { return static_cast<int>(canonical_exponent(e, at) - 1); };
  auto b_el = [&](std::uint64_t e) { return isa + static_cast<int>(canonical_exponent(e, bt) - 1); };

  std::vector<int> tab(static_cast<std::size_t>(nn) * nn);
  auto put = [&](int x, int y, int z) { tab[static_cast<std::size_t>(x) * nn + y] = z; };
  for (std::uint64_t i = 1; i <= sa; ++i)
    for (std::uint64_t j = 1; j <= sa; ++j)
      put(static_cast<int>(i - 1), static_cast<int>(j - 1), a_el(i + j));
  for (std::uint64_t i = 1; i <= sb; ++i)
    for (std::uint64_t j = 1; j <= sb; ++j)
      put(isa + static_cast<int>(i - 1), isa + static_cast<int>(j - 1), b_el(i + j));
  for (std::uint64_t i = 1; i <= sa; ++i)
    for (std::uint64_t j = 1; j <= sb; ++j) {
      int z = b_el(add_u64(mul_u64(i, q.k, where), j, where));
      put(static_cast<int>(i - 1), isa + static_cast<int>(j - 1), z);
      put(isa + static_cast<int>(j - 1), static_cast<int>(i - 1), z);
    }

  Realization out;
  out.sgr = from_table(nn, tab, names);
  out.a_id = 0;
  out.b_id = isa;
  return out;
}

std::vector<KClassification> classify_extensions(std::uint64_t m, std::uint64_t n,
                                                 std::uint64_t mp, std::uint64_t np) {
  if (m < 1 || n < 1 || mp < 1 || np < 1)
    throw DomainError("classify_extensions", "indices and periods must be >= 1");
  CyclicType bt{mp, np};
  std::vector<KClassification> out;
  std::vector<std::uint64_t> realizable_ks;
  for (std::uint64_t k = 0; k <= mp + np - 1; ++k) {
    Quintuple q{m, n, mp, np, k};
    KClassification c;
    c.k = k;
    c.trivial = k == 0;
    c.realizable = is_realizable(q);
    c.strong = is_strongly_realizable(q);
    if (c.realizable) {
      std::uint64_t img = canonical_exponent(k + 1, bt);
      for (std::uint64_t kp : realizable_ks) {
        if (canonical_exponent(kp + 1, bt) == img) {
          c.duplicate_of = kp;
          break;
        }
      }
      realizable_ks.push_back(k);
    }
    out.push_back(c);
  }
  return out;
}

} // namespace fcs
