#include "fcs/zn.hpp"

#include <algorithm>
#include <numeric>

namespace fcs {

namespace {

constexpr const char* kMod = "zn";

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

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return std::uint64_t((unsigned __int128)(a) * b % n);
}

void require_n(std::uint64_t n) {
  if (n < 2) throw DomainError(kMod, "modulus must be at least 2");
}

} // namespace

CayleySemigroup zn_semigroup(std::uint64_t n, const ElementBudget& eb) {
  require_n(n);
  if (n > eb.max_elements) {
    throw BudgetError(kMod, "table for modulus " + std::to_string(n) +
                                " exceeds element budget " + std::to_string(eb.max_elements));
  }
  int sz = int(n);
  std::vector<int> tab(std::size_t(sz) * sz);
  for (int i = 0; i < sz; ++i) {
    for (int j = 0; j < sz; ++j) {
      tab[std::size_t(i) * sz + j] = int(std::uint64_t(i) * std::uint64_t(j) % n);
    }
  }
  std::vector<std::string> names(static_cast<std::size_t>(sz));
  for (int i = 0; i < sz; ++i) names[std::size_t(i)] = std::to_string(i);
  return from_table(sz, std::move(tab), std::move(names));
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t x, std::uint64_t n) {
  require_n(n);
  // Extended Euclid on (x mod n, n).
  std::int64_t a = std::int64_t(x % n), b = std::int64_t(n);
  std::int64_t s0 = 1, s1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (a != 1) return std::nullopt;
  std::int64_t inv = s0 % std::int64_t(n);
  if (inv < 0) inv += std::int64_t(n);
  return std::uint64_t(inv);
}

std::vector<std::uint64_t> units_zn(std::uint64_t n) {
  require_n(n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < n; ++x) {
    if (std::gcd(x, n) == 1) out.push_back(x);
  }
  return out;
}

std::uint64_t phi(std::uint64_t n) {
  if (n == 0) throw DomainError(kMod, "phi(0) undefined");
  std::uint64_t r = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    r -= r / p;
  }
  return r;
}

namespace {

// Cyclic factor orders of the unit group of Z_(p^g).
std::vector<std::uint64_t> unit_cyclic_orders(std::uint64_t p, std::uint32_t g) {
  std::vector<std::uint64_t> orders;
  if (p == 2) {
    if (g == 1) return orders; // trivial
    if (g == 2) {
      orders.push_back(2);
      return orders;
    }
    orders.push_back(2);
    std::uint64_t big = 1;
    for (std::uint32_t i = 0; i < g - 2; ++i) big *= 2;
    orders.push_back(big);
    return orders;
  }
  std::uint64_t big = p - 1;
  for (std::uint32_t i = 1; i < g; ++i) big *= p;
  orders.push_back(big);
  return orders;
}

} // namespace

AbelianType unit_group_type(std::uint64_t n) {
  require_n(n);
  std::vector<std::uint64_t> orders;
  for (auto [p, e] : factorize(n)) {
    for (std::uint64_t o : unit_cyclic_orders(p, e)) orders.push_back(o);
  }
  return abelian_type_from_cyclic_orders(orders);
}

CrtContext crt_context(std::uint64_t n) {
  require_n(n);
  CrtContext c;
  c.n = n;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> qs; // (q, p)
  for (auto [p, e] : factorize(n)) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    qs.emplace_back(q, p);
  }
  std::sort(qs.begin(), qs.end()); // ascending by prime power value
  for (auto [q, p] : qs) {
    c.moduli.push_back(q);
    c.primes.push_back(p);
    std::uint64_t m = n / q;
    auto inv = inverse_mod(m % q, q);
    if (q == 1 || !inv) throw DomainError(kMod, "internal CRT failure");
    c.basis.push_back(mulmod(m, *inv, n));
  }
  return c;
}

std::vector<std::uint64_t> crt_decompose(const CrtContext& c, std::uint64_t x) {
  std::vector<std::uint64_t> parts;
  parts.reserve(c.moduli.size());
  for (std::uint64_t q : c.moduli) parts.push_back(x % q);
  return parts;
}

std::uint64_t crt_recompose(const CrtContext& c, const std::vector<std::uint64_t>& parts) {
  if (parts.size() != c.moduli.size()) {
    throw DomainError(kMod, "component count mismatch in recomposition");
  }
  unsigned __int128 acc = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    acc += (unsigned __int128)(parts[i] % c.moduli[i]) * c.basis[i];
  }
  return std::uint64_t(acc % c.n);
}

std::vector<std::uint64_t> idempotents_zn(std::uint64_t n) {
  CrtContext c = crt_context(n);
  std::size_t t = c.moduli.size();
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t(1) << t);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << t); ++mask) {
    unsigned __int128 acc = 0;
    for (std::size_t i = 0; i < t; ++i) {
      // First modulus is the most significant pattern bit.
      if ((mask >> (t - 1 - i)) & 1) acc += c.basis[i];
    }
    out.push_back(std::uint64_t(acc % n));
  }
  return out;
}

ZnComponentReport zn_component_report(std::uint64_t n, std::uint64_t materialize_budget) {
  ZnComponentReport rep;
  rep.n = n;
  rep.crt = crt_context(n);
  std::size_t t = rep.crt.moduli.size();

  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << t); ++mask) {
    ZnComponent comp;
    comp.pattern.resize(t);
    unsigned __int128 acc = 0;
    comp.size = 1;
    std::vector<std::uint64_t> unit_orders;
    comp.kernel_size = 1;
    for (std::size_t i = 0; i < t; ++i) {
      int bit = int((mask >> (t - 1 - i)) & 1);
      comp.pattern[i] = bit;
      std::uint64_t q = rep.crt.moduli[i];
      std::uint64_t p = rep.crt.primes[i];
      if (bit) {
        acc += rep.crt.basis[i];
        comp.size *= phi(q);
        comp.kernel_size *= phi(q);
        for (std::uint64_t o : unit_cyclic_orders(p, std::uint32_t(factorize(q)[0].second))) {
          unit_orders.push_back(o);
        }
      } else {
        comp.size *= q / p;
      }
    }
    comp.idempotent = std::uint64_t(acc % n);
    comp.kernel_type = abelian_type_from_cyclic_orders(unit_orders);
    rep.components.push_back(std::move(comp));
  }

  if (n <= materialize_budget) {
    rep.materialized = true;
    for (std::uint64_t x = 0; x < n; ++x) {
      std::uint64_t mask = 0;
      bool in_kernel = true;
      for (std::size_t i = 0; i < t; ++i) {
        std::uint64_t q = rep.crt.moduli[i];
        std::uint64_t p = rep.crt.primes[i];
        std::uint64_t xi = x % q;
        bool unit = xi % p != 0;
        if (unit) {
          mask |= std::uint64_t(1) << (t - 1 - i);
        } else if (xi != 0) {
          in_kernel = false; // nil coordinate not yet at its zero
        }
      }
      ZnComponent& comp = rep.components[std::size_t(mask)];
      comp.elements.push_back(x);
      if (in_kernel) comp.kernel_elements.push_back(x);
    }
  }
  return rep;
}

} // namespace fcs
