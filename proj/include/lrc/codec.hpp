#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lrc/builder.hpp"

namespace lrc {

struct Generator {
    std::size_t k = 0;
    Matrix G;  // k x n, rows span the null space of H
};

Generator dimension_and_generator(const LrcCode& code);

enum class DistanceStrategy { Auto, MessageEnumeration, SupportEnumeration };

struct DistanceResult {
    /// nullopt when the budget ran out, or when the code is {0}
    std::optional<std::size_t> d;
    std::string strategy;
    std::uint64_t work = 0;
};

/// Message enumeration is preferred in Auto mode while q^k <= 2^22.
inline constexpr std::uint64_t kMessageEnumerationLimit = 1ULL << 22;
inline constexpr std::uint64_t kDefaultDistanceBudget = 50'000'000;

/// Cap on the weight searched by support enumeration: n-k-ceil(k/r)+2 when
/// r > 0, else n-k+1.
std::size_t singleton_upper(std::size_t n, std::size_t k, int r);

/// budget counts codewords (message enumeration) or column subsets (support
/// enumeration) visited.
DistanceResult min_distance_exact(const LrcCode& code, std::uint64_t budget = kDefaultDistanceBudget,
                                  DistanceStrategy strategy = DistanceStrategy::Auto);

struct LocalityWitness {
    std::size_t coordinate = 0;
    std::vector<std::size_t> repair_set;
    std::string method;  // "group-row" or "exhaustive"
};

struct LocalityResult {
    bool certified = false;
    std::vector<LocalityWitness> witnesses;
    /// Empty when certified, otherwise the first coordinate that failed and why.
    std::string reason;
};

/// Exhaustive projection comparison runs for coordinates lacking a group
/// witness when n <= 14, q <= 4 and q^k <= 2^16.
LocalityResult verify_locality(const LrcCode& code, int r);

inline constexpr std::uint64_t kDefaultSubsetBudget = 20'000'000;

/// Throws BudgetExceeded when C(n, t) > budget.
bool verify_t_independence(const LrcCode& code, int t, std::uint64_t budget = kDefaultSubsetBudget);

using ErasedWord = std::vector<std::optional<FieldElement>>;

struct Repair {
    std::size_t position = 0;
    FieldElement value;
    std::vector<FieldElement> word;
};

/// Restores the single erased symbol as minus the sum of the rest of its group.
/// Throws NoErasure, MultipleErasures, NotInAnyGroup, or NotACodeword when the
/// restored word fails H w = 0.
Repair repair_erasure(const LrcCode& code, const ErasedWord& word);

struct CodeReport {
    std::size_t n = 0;
    std::size_t k_exact = 0;
    std::optional<long> k_lower_bound;
    std::optional<std::size_t> d_exact;
    std::string distance_strategy;
    std::optional<std::size_t> d_lower;
    std::optional<std::size_t> d_singleton_upper;
    int r = 0;
    std::optional<bool> locality_certified;
    std::vector<LocalityWitness> locality_witnesses;
    std::optional<int> t;
    /// nullopt when not requested or the subset budget ran out
    std::optional<bool> t_independence_certified;
    std::vector<std::string> notes;
};

struct AnalyzeOptions {
    bool exact_distance = true;
    bool verify_locality = true;
    bool check_independence = true;
    /// defaults to the code's own t when it was built
    std::optional<int> independence_t;
    std::uint64_t distance_budget = kDefaultDistanceBudget;
    std::uint64_t subset_budget = kDefaultSubsetBudget;
};

CodeReport analyze(const LrcCode& code, const AnalyzeOptions& options = {});

/// (n - k - ceil(k/r) + 2) - d. Throws DistanceUnknown without d_exact.
long singleton_defect(const CodeReport& report);

/// Uniformly random codeword from the generator rows.
std::vector<FieldElement> random_codeword(const Field& F, const Matrix& G, std::mt19937_64& rng);

}  // namespace lrc
