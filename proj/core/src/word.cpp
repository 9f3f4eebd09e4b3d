#include "fcs/word.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace fcs {

namespace {

constexpr const char* kMod = "free_words";

void check_same_k(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DomainError(kMod, "dimension mismatch: " + std::to_string(a) +
                                " generators vs " + std::to_string(b));
  }
}

Exp checked_add(Exp a, Exp b) {
  std::uint64_t s = std::uint64_t(a) + std::uint64_t(b);
  if (s > std::numeric_limits<Exp>::max()) {
    throw OverflowError(kMod, "exponent overflow in product");
  }
  return Exp(s);
}

} // namespace

Word::Word(std::vector<Exp> exps) : e(std::move(exps)) {
  if (e.empty()) throw DomainError(kMod, "a word needs at least one generator");
  bool all_zero = std::all_of(e.begin(), e.end(), [](Exp x) { return x == 0; });
  if (all_zero) {
    throw DomainError(kMod, "the empty word is not an element of the free semigroup");
  }
}

std::uint64_t Word::length() const {
  std::uint64_t n = 0;
  for (Exp x : e) n += x;
  return n;
}

bool AugmentedWord::is_identity() const {
  return std::all_of(e.begin(), e.end(), [](Exp x) { return x == 0; });
}

Word AugmentedWord::to_word() const {
  if (is_identity()) throw DomainError(kMod, "identity element has no Word form");
  return Word(e);
}

Word mul(const Word& v, const Word& w) {
  check_same_k(v.k(), w.k());
  std::vector<Exp> r(v.k());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(v.e[i], w.e[i]);
  return Word(std::move(r));
}

Word mul(const Word& v, const AugmentedWord& w) {
  check_same_k(v.k(), w.k());
  std::vector<Exp> r(v.k());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(v.e[i], w.e[i]);
  return Word(std::move(r));
}

bool divides(const Word& v, const Word& w) {
  check_same_k(v.k(), w.k());
  for (std::size_t i = 0; i < v.k(); ++i) {
    if (v.e[i] > w.e[i]) return false;
  }
  return true;
}

Word lcm(const Word& v, const Word& w) {
  check_same_k(v.k(), w.k());
  std::vector<Exp> r(v.k());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(v.e[i], w.e[i]);
  return Word(std::move(r));
}

AugmentedWord quotient(const Word& w, const Word& v) {
  check_same_k(v.k(), w.k());
  std::vector<Exp> r(v.k());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (v.e[i] > w.e[i]) throw DomainError(kMod, "quotient of non-divisor");
    r[i] = w.e[i] - v.e[i];
  }
  return AugmentedWord(std::move(r));
}

int military_cmp(const Word& v, const Word& w) {
  check_same_k(v.k(), w.k());
  std::uint64_t lv = v.length(), lw = w.length();
  if (lv != lw) return lv < lw ? -1 : 1;
  for (std::size_t i = 0; i < v.k(); ++i) {
    if (v.e[i] != w.e[i]) return v.e[i] > w.e[i] ? -1 : 1;
  }
  return 0;
}

bool military_less(const Word& v, const Word& w) { return military_cmp(v, w) < 0; }

std::uint64_t count_words_of_length(std::uint64_t n, std::uint32_t k) {
  if (k == 0) throw DomainError(kMod, "k must be positive");
  if (n == 0) return 0; // no empty word in the semigroup
  if (n > std::numeric_limits<std::uint64_t>::max() - (k - 1)) {
    throw OverflowError(kMod, "word count exceeds 64 bits");
  }
  // binom(n+k-1, k-1), multiplicative form with overflow checks.
  std::uint64_t top = n + k - 1;
  std::uint64_t r = std::min<std::uint64_t>(k - 1, top - (k - 1));
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc = acc * (top - r + i) / i, exact at every step
    std::uint64_t f = top - r + i;
    std::uint64_t g = std::gcd(acc, i);
    std::uint64_t acc2 = acc / g;
    std::uint64_t i2 = i / g;
    std::uint64_t g2 = std::gcd(f, i2);
    f /= g2;
    i2 /= g2;
    if (i2 != 1) throw OverflowError(kMod, "internal binomial reduction failure");
    if (acc2 != 0 && f > std::numeric_limits<std::uint64_t>::max() / acc2) {
      throw OverflowError(kMod, "word count exceeds 64 bits");
    }
    acc = acc2 * f;
  }
  return acc;
}

bool Box::contains(const std::vector<Exp>& v) const {
  if (v.size() != lo.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < lo[i] || v[i] > hi[i]) return false;
  }
  return true;
}

std::uint64_t Box::volume() const {
  std::uint64_t vol = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    std::uint64_t side = std::uint64_t(hi[i]) - lo[i] + 1;
    if (side != 0 && vol > std::numeric_limits<std::uint64_t>::max() / side) {
      throw OverflowError(kMod, "box volume exceeds 64 bits");
    }
    vol *= side;
  }
  return vol;
}

std::uint64_t BoxCover::cardinality() const {
  std::uint64_t total = 0;
  for (const Box& b : boxes) {
    std::uint64_t v = b.volume();
    if (total > std::numeric_limits<std::uint64_t>::max() - v) {
      throw OverflowError(kMod, "cover cardinality exceeds 64 bits");
    }
    total += v;
  }
  return total;
}

bool BoxCover::contains(const Word& w) const {
  for (const Box& b : boxes) {
    if (b.contains(w.e)) return true;
  }
  return false;
}

std::vector<Word> BoxCover::expand() const {
  std::vector<Word> out;
  for (const Box& b : boxes) {
    std::vector<Exp> cur = b.lo;
    while (true) {
      out.push_back(Word(cur));
      std::size_t i = 0;
      while (i < cur.size()) {
        if (cur[i] < b.hi[i]) {
          ++cur[i];
          break;
        }
        cur[i] = b.lo[i];
        ++i;
      }
      if (i == cur.size()) break;
    }
  }
  std::sort(out.begin(), out.end(), military_less);
  return out;
}

namespace {

// Splits `box` minus the all-zero point into disjoint boxes, assuming the box
// contains that point (all lo == 0). Partition by the first coordinate that
// is nonzero.
void split_out_origin(const Box& box, std::vector<Box>& out) {
  std::size_t k = box.k();
  for (std::size_t i = 0; i < k; ++i) {
    if (box.hi[i] == 0) continue;
    Box piece;
    piece.lo.assign(k, 0);
    piece.hi = box.hi;
    piece.lo[i] = 1;
    for (std::size_t j = 0; j < i; ++j) piece.hi[j] = 0;
    out.push_back(std::move(piece));
  }
}

} // namespace

IdealComplement ideal_complement(const std::vector<Word>& generators, std::uint32_t k) {
  if (k == 0) throw DomainError(kMod, "k must be positive");
  for (const Word& g : generators) check_same_k(g.k(), k);

  IdealComplement res;

  // The complement is finite iff every coordinate has a pure power generator:
  // otherwise arbitrarily high powers of that generator avoid the ideal.
  std::vector<std::uint64_t> bound(k, 0); // exclusive upper bound per coordinate
  std::vector<bool> have(k, false);
  for (const Word& g : generators) {
    std::size_t support = 0, idx = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (g.e[i] > 0) {
        ++support;
        idx = i;
      }
    }
    if (support == 1) {
      if (!have[idx] || g.e[idx] < bound[idx]) bound[idx] = g.e[idx];
      have[idx] = true;
    }
  }
  for (std::uint32_t i = 0; i < k; ++i) {
    if (!have[i]) {
      res.finite = false;
      return res;
    }
  }

  // Start from the full box under the pure power bounds, then intersect with
  // the complement condition of every remaining generator g: some coordinate
  // must stay strictly below g. The union over coordinates is made disjoint
  // with the usual staircase (coordinate i low, all earlier coordinates high).
  std::vector<Box> region;
  {
    Box all;
    all.lo.assign(k, 0);
    all.hi.resize(k);
    for (std::uint32_t i = 0; i < k; ++i) all.hi[i] = Exp(bound[i] - 1);
    region.push_back(std::move(all));
  }

  for (const Word& g : generators) {
    std::size_t support = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (g.e[i] > 0) ++support;
    }
    // Pure powers are already folded into the starting bounds.
    if (support <= 1) continue;

    std::vector<Box> next;
    for (const Box& b : region) {
      for (std::uint32_t i = 0; i < k; ++i) {
        if (g.e[i] == 0) continue; // w_i < 0 impossible
        // Piece: w_i < g_i, and w_j >= g_j for all earlier constrained j.
        Box piece = b;
        if (piece.lo[i] > Exp(g.e[i] - 1)) continue;
        piece.hi[i] = std::min(piece.hi[i], Exp(g.e[i] - 1));
        bool empty = false;
        for (std::uint32_t j = 0; j < i && !empty; ++j) {
          if (g.e[j] == 0) continue;
          piece.lo[j] = std::max(piece.lo[j], g.e[j]);
          if (piece.lo[j] > piece.hi[j]) empty = true;
        }
        if (!empty && piece.hi[i] >= piece.lo[i]) next.push_back(std::move(piece));
      }
    }
    region = std::move(next);
  }

  // Drop the all-zero vector: it is not a word.
  res.cover.k = k;
  for (Box& b : region) {
    bool holds_origin = std::all_of(b.lo.begin(), b.lo.end(), [](Exp x) { return x == 0; });
    if (holds_origin) {
      split_out_origin(b, res.cover.boxes);
    } else {
      res.cover.boxes.push_back(std::move(b));
    }
  }
  res.finite = true;
  res.cardinality = res.cover.cardinality();
  return res;
}

std::string format_word(const AugmentedWord& w, const std::vector<std::string>& names) {
  if (names.size() != w.k()) throw DomainError(kMod, "name list does not match word arity");
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < w.k(); ++i) {
    if (w.e[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << names[i];
    if (w.e[i] > 1) os << '^' << w.e[i];
  }
  return os.str();
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  return format_word(AugmentedWord(w), names);
}

std::string word_name(const Word& w, const std::vector<std::string>& names) {
  if (names.size() != w.k()) throw DomainError(kMod, "name list does not match word arity");
  std::ostringstream os;
  for (std::size_t i = 0; i < w.k(); ++i) {
    if (w.e[i] == 0) continue;
    os << names[i];
    if (w.e[i] > 1) os << '^' << w.e[i];
  }
  return os.str();
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::vector<Exp> e(names.size(), 0);
  std::istringstream is(text);
  std::string tok;
  bool any = false;
  while (is >> tok) {
    any = true;
    std::string base = tok;
    std::uint64_t exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      base = tok.substr(0, caret);
      std::string num = tok.substr(caret + 1);
      if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(kMod, "bad exponent in '" + tok + "'");
      }
      exp = std::stoull(num);
      if (exp == 0) throw ParseError(kMod, "zero exponent in '" + tok + "'");
      if (exp > std::numeric_limits<Exp>::max()) {
        throw OverflowError(kMod, "exponent too large in '" + tok + "'");
      }
    }
    auto it = std::find(names.begin(), names.end(), base);
    if (it == names.end()) throw ParseError(kMod, "unknown generator '" + base + "'");
    std::size_t idx = std::size_t(it - names.begin());
    std::uint64_t s = std::uint64_t(e[idx]) + exp;
    if (s > std::numeric_limits<Exp>::max()) {
      throw OverflowError(kMod, "exponent overflow for generator '" + base + "'");
    }
    e[idx] = Exp(s);
  }
  if (!any) throw ParseError(kMod, "empty word");
  return Word(std::move(e));
}

} // namespace fcs
