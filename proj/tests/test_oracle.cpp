#include <doctest.h>

#include "tsj/oracle.hpp"

using namespace tsj;

TEST_CASE("spectrum of one-variable powers") {
    std::map<Rational, long> s2 = bp_spectrum(BPExponents{{2}});
    REQUIRE(s2.size() == 1);
    CHECK(s2.at(rat(1, 2)) == 1);

    std::map<Rational, long> s23 = bp_spectrum(BPExponents{{2, 3}});
    CHECK(s23 == std::map<Rational, long>{{rat(5, 6), 1}, {rat(7, 6), 1}});

    std::map<Rational, long> s22 = bp_spectrum(BPExponents{{2, 2}});
    CHECK(s22 == std::map<Rational, long>{{rat(1), 1}});
}

TEST_CASE("milnor numbers") {
    CHECK(milnor_number(BPExponents{{2}}) == 1);
    CHECK(milnor_number(BPExponents{{2, 3}}) == 2);
    CHECK(milnor_number(BPExponents{{3, 3, 3}}) == 8);
}

TEST_CASE("exponent validation") {
    CHECK_THROWS_AS(BPExponents(std::vector<long>{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(BPExponents(std::vector<long>{}), std::invalid_argument);
}

TEST_CASE("spectrum size equals the milnor number") {
    for (long a = 2; a <= 6; ++a)
        for (long b = 2; b <= 6; ++b)
            for (long c = 2; c <= 6; ++c) {
                BPExponents e{{a, b, c}};
                long total = 0;
                for (const auto& [s, m] : bp_spectrum(e)) total += m;
                CHECK(total == milnor_number(e));
            }
}

TEST_CASE("spectrum symmetry") {
    CHECK(symmetry_check({{rat(1), 1}}, 2));
    CHECK(symmetry_check({{rat(5, 6), 1}, {rat(7, 6), 1}}, 2));
    CHECK(!symmetry_check({{rat(1, 2), 1}, {rat(3, 4), 1}}, 2));
    for (long a = 2; a <= 6; ++a)
        for (long b = 2; b <= 6; ++b) {
            BPExponents e{{a, b}};
            CHECK(symmetry_check(bp_spectrum(e), e.vars()));
        }
}

TEST_CASE("parallel enumeration equals the serial reference") {
    std::vector<std::vector<long>> cases = {{2}, {4, 5}, {2, 3, 4}, {6, 6, 6}, {3, 4, 5, 2}};
    for (const auto& exps : cases) {
        BPExponents e{exps};
        CHECK(bp_spectrum(e) == bp_spectrum_serial(e));
    }
}

TEST_CASE("hodge structures of the base cases") {
    Mhsm m2 = bp_mhsm(BPExponents{{2}});
    REQUIRE(m2.blocks().size() == 1);
    const ElementaryBlock& b = m2.blocks()[0];
    CHECK(b.alpha.value() == rat(-1, 2));
    CHECK(b.p == 0);
    CHECK(b.w == 0);
    CHECK(b.k == 1);
    std::vector<SpectralPair> sp = spectral_pairs(m2);
    REQUIRE(sp.size() == 1);
    CHECK(sp[0] == SpectralPair{rat(1, 2), 0, 1});

    Mhsm m22 = bp_mhsm(BPExponents{{2, 2}});
    REQUIRE(m22.blocks().size() == 1);
    CHECK(m22.blocks()[0].alpha.value() == rat(0));
    CHECK(m22.blocks()[0].p == -1);
    CHECK(m22.blocks()[0].w == 2);
    std::vector<SpectralPair> sp22 = spectral_pairs(m22);
    CHECK(sp22[0] == SpectralPair{rat(1), 2, 1});

    Mhsm m23 = bp_mhsm(BPExponents{{2, 3}});
    std::vector<ElementaryBlock> blocks = m23.blocks();
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].alpha.value() == rat(-5, 6));
    CHECK(blocks[0].p == 0);
    CHECK(blocks[0].w == 1);
    CHECK(blocks[1].alpha.value() == rat(-1, 6));
    CHECK(blocks[1].p == -1);
    CHECK(blocks[1].w == 1);
}

TEST_CASE("oracle structures validate and have trivial N") {
    for (long a = 2; a <= 5; ++a)
        for (long b = 2; b <= 5; ++b) {
            Mhsm m = bp_mhsm(BPExponents{{a, b}});
            CHECK(validate(m).empty());
            Mhsm e = m.materialized();
            CHECK(validate(e).empty());
            for (const auto& [alpha, part] : e.parts()) CHECK(part.N.is_zero());
        }
}
