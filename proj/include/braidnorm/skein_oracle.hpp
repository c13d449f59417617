#pragma once

#include "braidnorm/braid.hpp"
#include "braidnorm/laurent.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace braidnorm {

/// Reference evaluation of P by the skein relations alone, used to check
/// homfly_p. Exponential in the word length; each call gets `budget` work
/// units and an overrun throws BudgetExceeded. The memo persists across
/// calls. Not thread-safe: use one instance per thread.
class SkeinOracle {
public:
    explicit SkeinOracle(std::size_t budget = 2'000'000) : budget_(budget) {}

    LaurentVZ operator()(const BraidWord& word);

    /// Work units (recursive steps plus search states) spent by the last call.
    std::size_t spent() const noexcept { return spent_; }
    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    using Word = std::vector<int>; // +-g for s_g^{+-1}, g 1-based

    LaurentVZ eval(int n, Word w);
    LaurentVZ eval_positive(int n, const Word& w);
    void charge(std::size_t units);

    std::size_t budget_;
    std::size_t spent_ = 0;
    std::map<std::pair<int, Word>, LaurentVZ> memo_;
};

} // namespace braidnorm
