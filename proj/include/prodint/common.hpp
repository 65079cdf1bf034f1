#ifndef PRODINT_COMMON_HPP_
#define PRODINT_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prodint {

// Ordered-tuple budget for the brute-force power oracle.
inline constexpr long long kDefaultTupleBudget = 10'000'000;

// Carrier-size budget for table-backed semigroups (including direct products).
inline constexpr long long kDefaultTableBudget = 10'000;

// Alphabet bound L used by word-cap oracle instantiations.
inline constexpr int kDefaultOracleLetterBound = 6;

// Largest carrier for which construction runs the exhaustive O(m^3)
// associativity scan; bigger tables get a seeded sampled scan instead and
// remain checkable with check_associativity.
inline constexpr int kAssocExhaustiveLimit = 1024;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed0001ULL;

struct Budgets {
  long long tuple = kDefaultTupleBudget;
  long long table = kDefaultTableBudget;
};

// An instance would exceed a size or tuple budget. The caller must shrink the
// instance; results are never silently truncated.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, long long required, long long budget)
      : std::runtime_error(std::move(what) + " (required " +
                           std::to_string(required) + ", budget " +
                           std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}

  long long required() const noexcept { return required_; }
  long long budget() const noexcept { return budget_; }

 private:
  long long required_;
  long long budget_;
};

// A finitely checked post-condition of a verification run failed.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace prodint

#endif  // PRODINT_COMMON_HPP_
