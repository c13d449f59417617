#pragma once

#include "braidnorm/braid.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace braidnorm {

/// Every word in the standard generators on n strands with length <= max_len,
/// shorter words first, each length in lexicographic letter order
/// (s1, s1^-1, s2, s2^-1, ...).
void for_each_word(int n, int max_len, const std::function<void(const BraidWord&)>& visit);

/// Every band word on 3 strands with length <= max_len over a12, a23, a13
/// and their inverses.
void for_each_band3_word(int max_len, const std::function<void(const BraidWord&)>& visit);

/// Uniform random standard word with length uniform in [0, max_len].
BraidWord random_word(std::mt19937_64& rng, int n, int max_len);

/// Limits for a verification sweep. Unset fields take per-suite defaults.
struct VerifyLimits {
    std::optional<int> max_strands;
    std::optional<int> max_len;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 1;
    std::optional<int> k;
    std::optional<int> max_l;
    std::size_t budget = 2'000'000;
};

struct SuiteResult {
    std::string suite;
    std::size_t checked = 0;
    std::vector<std::string> failures; ///< sorted
    std::vector<std::string> notes;
    bool passed() const noexcept { return failures.empty(); }
};

/// Hard ceilings for exhaustive (4 strands) and sampled (5 strands) sweeps.
constexpr int max_exhaustive_strands = 4;
constexpr int max_sampled_strands = 5;

/// Exhaustive length ceiling for n strands: 8 up to 3 strands, 6 for 4.
int max_exhaustive_length(int n);

const std::vector<std::string>& suite_names();

/// Run one of: skein, mfw, homogeneous, linearity, morton3, kanda.
/// Throws DomainError for an unknown suite or limits beyond the ceilings,
/// BudgetExceeded when the skein oracle runs out of budget.
SuiteResult run_suite(const std::string& suite, const VerifyLimits& limits);

} // namespace braidnorm
