#pragma once

#include "braidnorm/braid.hpp"

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace braidnorm {

struct BandMinimum {
    BraidWord word;          ///< shortest representative found, band letters on 3 strands
    bool certified = false;  ///< the search exhausted its length bound within max_states
    std::size_t states = 0;  ///< conjugacy-class states visited
};

/// Search for a shortest band word conjugate to `word` (3 strands) using the
/// band relations a12 a13 = a23 a12 = a13 a23 and their inverses, free
/// cancellation, insertion of x x^-1 up to length |word| + 2, and cyclic
/// rotation. Throws DomainError unless the word has 3 strands.
BandMinimum band_minimize(const BraidWord& word, std::size_t max_states = 2'000'000);

/// Shared search for many words: states up to a fixed length bound are
/// grouped once into components, each with its shortest representative.
class BandMinimizer {
public:
    explicit BandMinimizer(int length_bound, std::size_t max_states = 5'000'000);

    BandMinimum minimize(const BraidWord& word);
    int length_bound() const noexcept { return bound_; }

private:
    struct Component {
        std::uint64_t best;
        std::size_t states;
    };

    int bound_;
    std::size_t max_states_;
    std::unordered_map<std::uint64_t, std::size_t> label_;
    std::vector<Component> components_;
};

struct MortonReport {
    int e_P = 0;
    int neg_b_min = 0;
    bool holds = false;
    bool certified = false;
    BraidWord minimal;
};

/// e_P <= 2 neg_b on the minimized word.
MortonReport morton_check_3braid(const BraidWord& word, std::size_t max_states = 2'000'000);
MortonReport morton_check_3braid(const BraidWord& word, BandMinimizer& minimizer);

} // namespace braidnorm
