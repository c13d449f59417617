#include "braidnorm/braid.hpp"
#include "braidnorm/error.hpp"
#include "braidnorm/verify.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace braidnorm;

TEST_SUITE("braid") {

TEST_CASE("parse expands exponents") {
    const BraidWord w = parse_braid("s1^4", 2);
    CHECK(w.strands() == 2);
    REQUIRE(w.length() == 4);
    for (const auto& l : w.letters())
        CHECK(l == BraidLetter::sigma(1, 1));

    const BraidWord m = parse_braid("a1,3 s2^-1", 3);
    REQUIRE(m.length() == 2);
    CHECK(m[0] == BraidLetter::band(1, 3, 1));
    CHECK(m[1] == BraidLetter::sigma(2, -1));

    CHECK(parse_braid("s2^-3", 3).length() == 3);
    CHECK(parse_braid("s1^0 s2", 3).length() == 1);
    CHECK(parse_braid("", 4).empty());
    CHECK(parse_braid("  s1   s2 ", 3).length() == 2);
}

TEST_CASE("parse rejects bad input") {
    CHECK_THROWS_AS(parse_braid("s3", 3), ParseError);
    CHECK_THROWS_AS(parse_braid("s0", 3), ParseError);
    CHECK_THROWS_AS(parse_braid("a2,2", 3), ParseError);
    CHECK_THROWS_AS(parse_braid("a3,1", 3), ParseError);
    CHECK_THROWS_AS(parse_braid("a1,4", 3), ParseError);
    CHECK_THROWS_AS(parse_braid("x1", 3), ParseError);
    CHECK_THROWS_AS(parse_braid("s1^", 3), ParseError);
    CHECK_THROWS_AS(parse_braid("s1^x", 3), ParseError);
    CHECK_THROWS_AS(parse_braid("s", 3), ParseError);
    CHECK_THROWS_AS(parse_braid("a1", 3), ParseError);
    CHECK_THROWS_AS(parse_braid("s1", 0), ParseError);
}

TEST_CASE("band expansion") {
    CHECK(band_to_standard(parse_braid("a1,2", 2)) == parse_braid("s1", 2));
    CHECK(band_to_standard(parse_braid("a1,3", 3)) == parse_braid("s1^-1 s2 s1", 3));
    CHECK(band_to_standard(parse_braid("a2,4", 4)) == parse_braid("s2^-1 s3 s2", 4));
    CHECK(band_to_standard(parse_braid("a1,4^-1", 4)) == parse_braid("s1^-1 s2^-1 s3^-1 s2 s1", 4));
    CHECK(band_to_standard(parse_braid("s2 a1,3", 3)) == parse_braid("s2 s1^-1 s2 s1", 3));
}

TEST_CASE("band expansion keeps permutation and exponent sum") {
    for (int n = 2; n <= 8; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int sign : {1, -1}) {
                    const BraidWord band(n, {BraidLetter::band(i, j, sign)});
                    const BraidWord std_word = band_to_standard(band);
                    CHECK(std_word.length() == static_cast<std::size_t>(2 * (j - i) - 1));
                    int sum = 0;
                    for (const auto& l : std_word.letters())
                        sum += l.sign;
                    CHECK(sum == sign);
                    CHECK(permutation(band) == permutation(std_word));
                    Permutation transposition(static_cast<std::size_t>(n));
                    for (int s = 0; s < n; ++s)
                        transposition[static_cast<std::size_t>(s)] = s;
                    std::swap(transposition[static_cast<std::size_t>(i - 1)], transposition[static_cast<std::size_t>(j - 1)]);
                    CHECK(permutation(band) == transposition);
                }
}

TEST_CASE("permutations and cycles") {
    CHECK(permutation(BraidWord::identity(3)) == Permutation{0, 1, 2});
    CHECK(permutation(parse_braid("s1", 2)) == Permutation{1, 0});
    const Permutation p = permutation(parse_braid("s1 s2", 3));
    CHECK(cycles(p).size() == 1);
    CHECK(cycles(p)[0].size() == 3);
    CHECK(cycles(permutation(parse_braid("s1^4", 2))).size() == 2);

    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        const BraidWord w = random_word(rng, 1 + k % 6, 12);
        const Permutation id = permutation(w * w.inverse());
        for (int s = 0; s < w.strands(); ++s)
            CHECK(id[static_cast<std::size_t>(s)] == s);
        // Cycles agree with an independent strand walk.
        std::vector<int> signed_word;
        for (const auto& l : w.letters())
            signed_word.push_back(l.sign * l.i);
        const auto walk = oracle::walk_components(w.strands(), signed_word);
        CHECK(cycles(permutation(w)).size() == static_cast<std::size_t>(walk.components));
    }
}

TEST_CASE("generator profile") {
    const GeneratorProfile a = generator_profile(parse_braid("s1^4", 2));
    CHECK(a.pos == 4);
    CHECK(a.neg == 0);
    CHECK(a.homogeneous);
    CHECK(a.n_n == 0);
    CHECK(a.n_p == 1);

    for (int k : {1, 3, 5}) {
        const GeneratorProfile b =
            generator_profile(parse_braid("s2^-" + std::to_string(k) + " s1^" + std::to_string(k), 3));
        CHECK(b.homogeneous);
        CHECK(b.n_n == 1);
        CHECK(b.n_p == 1);
        CHECK(b.neg == k);
        CHECK(b.pos == k);
    }

    const GeneratorProfile c = generator_profile(parse_braid("s1 s1^-1", 2));
    CHECK_FALSE(c.homogeneous);
    CHECK(c.use[0] == GeneratorUse::mixed);

    const GeneratorProfile d = generator_profile(parse_braid("a1,3^-1 s1", 3));
    CHECK(d.pos_b == 1);
    CHECK(d.neg_b == 1);
    CHECK(d.pos == 2);
    CHECK(d.neg == 2);

    CHECK_FALSE(generator_profile(parse_braid("s1", 3)).homogeneous);
    CHECK_FALSE(generator_profile(BraidWord::identity(3)).homogeneous);
    CHECK(generator_profile(BraidWord::identity(1)).homogeneous);
}

TEST_CASE("homogeneous implies n = n_n + n_p + 1") {
    for (int n = 1; n <= 4; ++n)
        for_each_word(n, n <= 3 ? 6 : 4, [&](const BraidWord& w) {
            const GeneratorProfile g = generator_profile(w);
            if (g.homogeneous)
                CHECK(w.strands() == g.n_n + g.n_p + 1);
        });
}

TEST_CASE("print and parse round trip") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int k = 0; k < 300; ++k) {
        const int n = 2 + k % 5;
        std::vector<BraidLetter> letters;
        std::uniform_int_distribution<int> len(0, 10);
        const int m = len(rng);
        for (int t = 0; t < m; ++t) {
            std::uniform_int_distribution<int> a(1, n - 1);
            const int i = a(rng);
            std::uniform_int_distribution<int> b(i + 1, n);
            const int j = b(rng);
            const int sign = coin(rng) ? 1 : -1;
            letters.push_back(coin(rng) ? BraidLetter::sigma(i, sign) : BraidLetter::band(i, j, sign));
        }
        const BraidWord w(n, letters);
        CHECK(parse_braid(to_string(w), n) == w);
    }
    CHECK(to_string(parse_braid("s1 s1 s1 s1", 2)) == "s1^4");
    CHECK(to_string(parse_braid("a1,3^-1 a1,3^-1", 3)) == "a1,3^-2");
}

TEST_CASE("word operations") {
    const BraidWord w = parse_braid("s1 s2^-1", 3);
    CHECK(w.inverse() == parse_braid("s2 s1^-1", 3));
    CHECK((w * w).length() == 4);
    CHECK_THROWS_AS(w * BraidWord::identity(2), DomainError);
    CHECK(w.widened(5).strands() == 5);
    CHECK(w.appended(BraidLetter::sigma(3, 1)).strands() == 4);
    CHECK(parse_braid("a1,3", 3).is_standard() == false);
    CHECK(parse_braid("a1,2 s2", 3).is_standard());
}

} // TEST_SUITE
