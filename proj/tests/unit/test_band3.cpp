#include "braidnorm/band3.hpp"
#include "braidnorm/error.hpp"
#include "braidnorm/homfly.hpp"
#include "braidnorm/verify.hpp"

#include <doctest.h>

using namespace braidnorm;

TEST_SUITE("band3") {

TEST_CASE("minimization examples") {
    const BandMinimum a = band_minimize(parse_braid("a1,2 a1,2^-1", 3));
    CHECK(a.word.empty());
    CHECK(a.certified);

    const BandMinimum b = band_minimize(parse_braid("a2,3 a1,2", 3));
    CHECK(b.word.length() == 2);
    CHECK(b.certified);

    const BandMinimum c = band_minimize(parse_braid("a1,2 a2,3 a1,3", 3));
    CHECK(c.word.length() == 3);
    CHECK(c.certified);

    const BandMinimum d = band_minimize(parse_braid("a1,2 a1,3 a2,3^-1", 3));
    CHECK(d.word.length() == 1);

    CHECK_THROWS_AS(band_minimize(parse_braid("s1", 2)), DomainError);
    CHECK_THROWS_AS(band_minimize(parse_braid("s1", 4)), DomainError);
}

TEST_CASE("minimal words represent the same closure") {
    BandMinimizer m(6);
    for_each_band3_word(4, [&](const BraidWord& w) {
        const BandMinimum r = m.minimize(w);
        CHECK(r.word.length() <= w.length());
        CHECK(homfly_p(r.word) == homfly_p(w));
    });
}

TEST_CASE("shared minimizer agrees with single searches") {
    BandMinimizer m(5);
    for_each_band3_word(3, [&](const BraidWord& w) {
        const BandMinimum shared = m.minimize(w);
        const BandMinimum single = band_minimize(w);
        CHECK(shared.word.length() == single.word.length());
    });
}

TEST_CASE("morton base cases") {
    const MortonReport one = morton_check_3braid(parse_braid("a1,3^-1", 3));
    CHECK(one.e_P == 2);
    CHECK(one.neg_b_min == 1);
    CHECK(one.holds);
    CHECK(one.certified);

    const MortonReport two = morton_check_3braid(parse_braid("a1,2^-1 a2,3", 3));
    CHECK(two.e_P == 2);
    CHECK(two.holds);

    for (const char* w : {"a1,2", "a1,2 a2,3 a1,3", "a1,3^3 a2,3"}) {
        const MortonReport p = morton_check_3braid(parse_braid(w, 3));
        CHECK(p.e_P == 0);
        CHECK(p.neg_b_min == 0);
        CHECK(p.holds);
    }
    CHECK_THROWS_AS(morton_check_3braid(parse_braid("s1", 2)), DomainError);
}

} // TEST_SUITE
