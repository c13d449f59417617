#include "braidnorm/diagram.hpp"
#include "braidnorm/error.hpp"
#include "braidnorm/verify.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace braidnorm;

TEST_SUITE("diagram") {

TEST_CASE("closure of s1^4") {
    const ClosureProfile p = closure_profile(parse_braid("s1^4", 2));
    CHECK(p.r == 2);
    CHECK(p.cr[0][1] == 4);
    CHECK(p.cr[1][0] == 4);
    CHECK(p.cr[0][0] == 0);
    CHECK(p.cr[1][1] == 0);
    CHECK(p.n_i == std::vector<int>{1, 1});
    CHECK(p.u == std::vector<int>{2, 2});
    CHECK(p.l_u == std::vector<int>{0, 0});
    CHECK(linking_matrix(p)[0][1] == 2);
}

TEST_CASE("closure of the trefoil and trivial links") {
    const ClosureProfile t = closure_profile(parse_braid("s1^3", 2));
    CHECK(t.r == 1);
    CHECK(t.cr[0][0] == 3);
    CHECK(t.n_i[0] == 2);
    CHECK(t.l_u[0] == 3);

    const ClosureProfile id = closure_profile(BraidWord::identity(3));
    CHECK(id.r == 3);
    for (const auto& row : id.cr)
        for (int x : row)
            CHECK(x == 0);
    CHECK(linking_matrix(closure_profile(BraidWord::identity(2)))[0][1] == 0);
    CHECK(linking_matrix(closure_profile(parse_braid("s1^-2", 2)))[0][1] == -1);
}

TEST_CASE("crossing attribution") {
    const auto pos = crossings(parse_braid("s1", 2));
    REQUIRE(pos.size() == 1);
    CHECK(pos[0].over == 0);
    CHECK(pos[0].under == 1);
    CHECK(pos[0].sign == 1);
    const auto neg = crossings(parse_braid("s1^-1", 2));
    CHECK(neg[0].over == 1);
    CHECK(neg[0].under == 0);
    CHECK(neg[0].sign == -1);
}

TEST_CASE("seifert euler characteristics") {
    CHECK(seifert_euler(parse_braid("s1^4", 2)).chi == -2);
    CHECK(seifert_euler(BraidWord::identity(1)).chi == 1);
    CHECK(seifert_euler(parse_braid("s1^3", 2)).chi == -1);
    CHECK(seifert_euler(parse_braid("a1,3", 3)).chi == 0);
}

TEST_CASE("band surface") {
    const BraidWord ko_lee = parse_braid("a4,5^2 a2,4^2 a1,3 a3,4 a2,4 a1,3^2", 5);
    const EulerReport e = band_seifert_euler(ko_lee);
    CHECK(e.chi == -4);
    CHECK(e.chi_minus == 4);
    CHECK(band_seifert_euler(BraidWord::identity(4)).chi == 4);
    const BraidWord positive = parse_braid("a1,3 a2,3 a1,2 a1,3", 3);
    CHECK(-band_seifert_euler(positive).chi == 4 - 3);
}

TEST_CASE("punctured component surfaces") {
    CHECK(punctured_component_euler(parse_braid("s1^4", 2), 0).chi == -1);
    CHECK(punctured_component_euler(BraidWord::identity(2), 0).chi == 1);
    CHECK(punctured_component_euler(BraidWord::identity(2), 0).chi_minus == 0);
    CHECK(punctured_component_euler(parse_braid("s1^3", 2), 0).chi == -1);
    CHECK_THROWS_AS(punctured_component_euler(parse_braid("s1^3", 2), 1), DomainError);
    CHECK_THROWS_AS(punctured_component_euler(parse_braid("s1^3", 2), -1), DomainError);
}

TEST_CASE("sublink surfaces") {
    const BraidWord w = parse_braid("s1^4", 2);
    CHECK(sublink_euler(w, {true, true}).chi == -2);
    CHECK(sublink_euler(w, {true, false}).chi == -1);
    CHECK(sublink_euler(w, {false, true}).chi == -1);
    CHECK_THROWS_AS(sublink_euler(w, {true}), DomainError);
    // Split pieces are counted separately in chi_minus.
    const EulerReport split = sublink_euler(parse_braid("s1^3 s3^3", 4), {true, true});
    CHECK(split.chi == -2);
    CHECK(split.chi_minus == 2);
    const EulerReport with_disk = seifert_euler(parse_braid("s1^3", 3));
    CHECK(with_disk.chi == 0);
    CHECK(with_disk.chi_minus == 1);
}

TEST_CASE("profile invariants on random words") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 300; ++k) {
        const BraidWord w = random_word(rng, 1 + k % 5, 10);
        const ClosureProfile p = closure_profile(w);
        int total = 0;
        int strands = 0;
        for (int c = 0; c < p.r; ++c) {
            total += p.l_u[static_cast<std::size_t>(c)] + p.u[static_cast<std::size_t>(c)];
            strands += p.n_i[static_cast<std::size_t>(c)];
        }
        CHECK(total == static_cast<int>(w.length()));
        CHECK(strands == w.strands());
        const auto lk = linking_matrix(p);
        for (int i = 0; i < p.r; ++i)
            for (int j = 0; j < p.r; ++j) {
                CHECK(p.cr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                      p.cr[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
                CHECK(lk[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                      lk[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
            }
        CHECK(seifert_euler(w).chi == band_seifert_euler(w).chi);
        CHECK(seifert_euler(w).chi == w.strands() - static_cast<long long>(w.length()));

        // Conjugation by a generator keeps the multiset of matrix entries and counts.
        if (w.strands() >= 2) {
            std::uniform_int_distribution<int> g(1, w.strands() - 1);
            const BraidLetter s = BraidLetter::sigma(g(rng), 1);
            const BraidWord conj = BraidWord(w.strands(), {s}) * w * BraidWord(w.strands(), {s.inverse()});
            const ClosureProfile q = closure_profile(conj);
            REQUIRE(q.r == p.r);
            std::vector<int> a;
            std::vector<int> b;
            for (const auto& row : p.cr)
                a.insert(a.end(), row.begin(), row.end());
            for (const auto& row : q.cr)
                b.insert(b.end(), row.begin(), row.end());
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
    }
}

} // TEST_SUITE
