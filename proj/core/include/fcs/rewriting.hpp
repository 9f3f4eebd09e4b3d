#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcs/word.hpp"

namespace fcs {

// Rewrite rule lhs -> rhs between words of the free commutative semigroup;
// the right side is always military-smaller, so rewriting terminates.
struct Rule {
  Word lhs;
  Word rhs;

  bool operator==(const Rule& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

// A finite set of rules over named generators. Rules keep their insertion
// order; reduction always applies the first applicable rule.
struct RuleSystem {
  std::vector<std::string> gens;
  std::vector<Rule> rules;

  std::uint32_t k() const { return std::uint32_t(gens.size()); }
};

// Commutative presentation: relations not yet oriented.
struct Presentation {
  std::vector<std::string> gens;
  std::vector<std::pair<Word, Word>> relations;
};

// Throws DomainError on duplicate rules, arity mismatches, or a rule whose
// right side is not military-smaller than its left side.
void validate_rule_system(const RuleSystem& rs);

// Orders a relation into a rule, larger side left. Equal sides are a
// degenerate relation and raise DomainError.
Rule orient(const Word& u, const Word& v);
RuleSystem orient(const Presentation& p);

// Fully reduces w: repeatedly applies the first rule (system order) whose
// left side divides w. Deterministic; terminates because every step is a
// strict military descent.
Word reduce(const Word& w, const RuleSystem& rs);
bool is_reducible(const Word& w, const RuleSystem& rs);

struct CriticalPair {
  std::size_t i = 0; // rule indices, i < j
  std::size_t j = 0;
  Word overlap;      // lcm of the two left sides
  Word left_result;  // overlap rewritten by rule i
  Word right_result; // overlap rewritten by rule j
};

// One pair per unordered pair of distinct rules whose left-side supports
// intersect; disjoint supports always join and are skipped.
std::vector<CriticalPair> critical_pairs(const RuleSystem& rs);

struct LocalConfluence {
  bool confluent = true;
  std::optional<CriticalPair> failing;  // first failing pair if any
  std::optional<std::pair<Word, Word>> distinct_normal_forms;
};

LocalConfluence is_locally_confluent(const RuleSystem& rs);

struct CompletionBudget {
  std::size_t max_rules = 10000;
  std::uint64_t max_word_length = 64;
};

// BudgetError specialization carrying the partial system at the point the
// budget tripped.
class CompletionBudgetError : public BudgetError {
public:
  CompletionBudgetError(const std::string& what, RuleSystem partial)
      : BudgetError("rewriting", what), partial_(std::move(partial)) {}
  const RuleSystem& partial() const noexcept { return partial_; }

private:
  RuleSystem partial_;
};

// Knuth-Bendix completion for commutative presentations. Critical pairs are
// processed in military order of their overlaps; failing pairs add the rule
// reduce(larger) -> reduce(smaller); rules whose left side becomes reducible
// by the rest of the system are removed (their reduced sides re-enter as a
// relation if they no longer join). The result is inter-reduced and sorted,
// so completion is idempotent.
RuleSystem complete(const RuleSystem& rs, const CompletionBudget& budget = {});

struct NormalForms {
  bool finite = false;
  std::vector<Word> forms; // military-sorted; meaningful only when finite
  std::uint64_t cardinality = 0;
};

// Words irreducible under rs: the complement of the ideal generated by the
// left sides. Infinite complements are reported, not thrown.
NormalForms enumerate_normal_forms(const RuleSystem& rs);

// Congruence classes of all words of length <= bound under the symmetric
// closure of the rules, computed by closing the rewrite digraph. Independent
// of completion; used as an oracle against it.
struct ThueClasses {
  std::vector<std::vector<Word>> classes; // each class military-sorted;
                                          // classes sorted by least member
};

ThueClasses thue_oracle(const RuleSystem& rs, std::uint64_t bound,
                        std::uint64_t max_words = 5'000'000);

// Text format:
//   # comment
//   gens: a b c
//   rel: a^2 = a
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation_file(const std::string& path);
std::string format_rule(const Rule& r, const std::vector<std::string>& names);
std::string format_rule_system(const RuleSystem& rs);

} // namespace fcs
