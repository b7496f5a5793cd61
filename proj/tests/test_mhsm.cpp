#include <doctest.h>

#include "test_util.hpp"
#include "tsj/mhsm.hpp"

using namespace tsj;

namespace {

ElementaryBlock blk(const char* alpha, long p, long w, long k, long mult = 1) {
    return {EigExp(rational_from_string(alpha)), p, w, k, mult};
}

std::vector<ElementaryBlock> random_blocks(std::mt19937& rng, int count) {
    static const char* pool[] = {"0", "-1/2", "-1/3", "-2/3", "-1/6", "-5/6", "-1/4", "-3/4"};
    std::uniform_int_distribution<int> a(0, 7);
    std::uniform_int_distribution<long> pw(-2, 2);
    std::uniform_int_distribution<long> kk(1, 4);
    std::uniform_int_distribution<long> mm(1, 2);
    std::vector<ElementaryBlock> out;
    for (int i = 0; i < count; ++i)
        out.push_back(blk(pool[a(rng)], pw(rng), pw(rng), kk(rng), mm(rng)));
    return out;
}

} // namespace

TEST_CASE("validation of simple structures") {
    CHECK(validate(Mhsm::zero()).empty());
    CHECK(validate(Mhsm::from_blocks({blk("-1/2", 0, 0, 1)})).empty());
    CHECK(validate(Mhsm::from_blocks({blk("-1/2", 0, 0, 1)}).materialized()).empty());
}

TEST_CASE("validation flags a corrupted weight filtration") {
    Mhsm good = Mhsm::from_blocks({blk("0", 0, 0, 2)}).materialized();
    std::map<Rational, MhsmPart> parts = good.parts();
    MhsmPart& part = parts.begin()->second;
    // swap the two W steps: bigger space below the smaller one
    std::map<long, Subspace> corrupt;
    corrupt.emplace(0, part.W.step(2));
    corrupt.emplace(2, part.W.step(0));
    part.W = Filtration::from_steps_unchecked(part.dim, corrupt);
    Mhsm bad = Mhsm::from_parts(parts);
    std::vector<std::string> v = validate(bad);
    REQUIRE(!v.empty());
    bool names_w = false;
    for (const auto& msg : v)
        if (msg.find("W not increasing") != std::string::npos) names_w = true;
    CHECK(names_w);
}

TEST_CASE("from_blocks expands the unipotent rank-two model") {
    Mhsm m = Mhsm::from_blocks({blk("0", 0, 0, 2)});
    CHECK(m.total_dim() == 2);
    Mhsm e = m.materialized();
    const MhsmPart& part = e.parts().at(Rational(0));
    CHECK(part.W.graded_dim(0) == 1);
    CHECK(part.W.graded_dim(2) == 1);
    CHECK(validate(e).empty());

    Mhsm two = Mhsm::from_blocks({blk("0", 0, 0, 2), blk("0", 0, 0, 2)});
    CHECK(two.total_dim() == 4);
    CHECK(two.blocks().size() == 1);
    CHECK(two.blocks()[0].mult == 2);
}

TEST_CASE("graded dimensions, split and explicit agree") {
    Mhsm m = Mhsm::from_blocks({blk("-1/2", 0, 0, 1)});
    auto g = graded_dims(m);
    CHECK(g.size() == 1);
    CHECK(g.at({rat(-1, 2), 0, 0}) == 1);

    Mhsm e1 = Mhsm::from_blocks({blk("0", 0, 0, 2)});
    auto g2 = graded_dims(e1);
    CHECK(g2.at({Rational(0), 0, 0}) == 1);
    CHECK(g2.at({Rational(0), 1, 2}) == 1);
    CHECK(graded_dims(e1.materialized()) == g2);

    std::mt19937 rng(53);
    for (int it = 0; it < 15; ++it) {
        Mhsm s = Mhsm::from_blocks(random_blocks(rng, 4));
        CHECK(graded_dims(s) == graded_dims(s.materialized()));
    }
}

TEST_CASE("spectral pairs of base blocks") {
    Mhsm x2 = Mhsm::from_blocks({blk("-1/2", 0, 0, 1)});
    std::vector<SpectralPair> sp = spectral_pairs(x2);
    REQUIRE(sp.size() == 1);
    CHECK(sp[0] == SpectralPair{rat(1, 2), 0, 1});

    Mhsm x3 = Mhsm::from_blocks({blk("-1/3", 0, 0, 1), blk("-2/3", 0, 0, 1)});
    std::vector<SpectralPair> sp3 = spectral_pairs(x3);
    REQUIRE(sp3.size() == 2);
    CHECK(sp3[0] == SpectralPair{rat(1, 3), 0, 1});
    CHECK(sp3[1] == SpectralPair{rat(2, 3), 0, 1});

    CHECK(spectral_pairs(Mhsm::zero()).empty());
}

TEST_CASE("spectral multiplicity totals the dimension") {
    std::mt19937 rng(59);
    for (int it = 0; it < 20; ++it) {
        Mhsm m = Mhsm::from_blocks(random_blocks(rng, 5));
        long total = 0;
        for (const auto& p : spectral_pairs(m)) total += p.mult;
        CHECK(total == m.total_dim());
    }
}

TEST_CASE("plain tensor with the unit block") {
    Mhsm m = Mhsm::from_blocks({blk("-1/2", 1, 2, 2)});
    Mhsm unit = Mhsm::from_blocks({blk("0", 0, 0, 1)});
    CHECK(iso_invariants(tensor_plain(m, unit)) == iso_invariants(m));
}

TEST_CASE("plain tensor folds exponents without weight shift") {
    Mhsm half = Mhsm::from_blocks({blk("-1/2", 0, 0, 1)});
    Mhsm t = tensor_plain(half, half);
    auto g = graded_dims(t);
    REQUIRE(g.size() == 1);
    CHECK(g.count({Rational(0), 0, 0}) == 1); // no weight shift here

    std::mt19937 rng(61);
    Mhsm a = Mhsm::from_blocks(random_blocks(rng, 3));
    CHECK(tensor_plain(a, half).total_dim() == a.total_dim());
}

TEST_CASE("plain tensor dims multiply") {
    std::mt19937 rng(67);
    Mhsm a = Mhsm::from_blocks(random_blocks(rng, 3));
    Mhsm b = Mhsm::from_blocks(random_blocks(rng, 2));
    CHECK(tensor_plain(a, b).total_dim() == a.total_dim() * b.total_dim());
}

TEST_CASE("plain tensor split path agrees with the literal path") {
    std::mt19937 rng(71);
    for (int it = 0; it < 8; ++it) {
        Mhsm a = Mhsm::from_blocks(random_blocks(rng, 2));
        Mhsm b = Mhsm::from_blocks(random_blocks(rng, 2));
        Mhsm split = tensor_plain(a, b);
        Mhsm literal = tensor_plain(a.materialized(), b.materialized());
        CHECK(iso_invariants(split) == iso_invariants(literal));
    }
}

TEST_CASE("certificates distinguish and identify") {
    Mhsm a = Mhsm::from_blocks({blk("0", 0, 0, 2)});
    Mhsm b = Mhsm::from_blocks({blk("0", 0, 0, 1), blk("0", 1, 2, 1)});
    CHECK(iso_invariants(a) != iso_invariants(b)); // jordan {2} vs {1,1}

    std::mt19937 rng(73);
    std::vector<ElementaryBlock> blocks = random_blocks(rng, 5);
    std::vector<ElementaryBlock> shuffled = blocks;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(iso_invariants(Mhsm::from_blocks(blocks)) ==
          iso_invariants(Mhsm::from_blocks(shuffled)));

    CHECK(iso_invariants(Mhsm::zero()) == iso_invariants(Mhsm::zero()));
}

TEST_CASE("split and explicit certificates agree") {
    std::mt19937 rng(79);
    for (int it = 0; it < 12; ++it) {
        Mhsm m = Mhsm::from_blocks(random_blocks(rng, 4));
        CHECK(iso_invariants(m) == iso_invariants(m.materialized()));
    }
}

TEST_CASE("block decomposition reads back off the certificate") {
    std::mt19937 rng(83);
    for (int it = 0; it < 30; ++it) {
        std::vector<ElementaryBlock> blocks =
            canonicalize_blocks(random_blocks(rng, 1 + it % 12));
        auto rec = blocks_from_certificate(iso_invariants(Mhsm::from_blocks(blocks)));
        REQUIRE(rec.has_value());
        // multiplicity-flattened comparison
        CHECK(Mhsm::from_blocks(*rec).blocks() == blocks);
    }
}

TEST_CASE("elementary block weight filtration is the monodromy filtration") {
    std::mt19937 rng(89);
    for (int it = 0; it < 10; ++it) {
        std::vector<ElementaryBlock> one = random_blocks(rng, 1);
        one[0].mult = 1;
        Mhsm m = Mhsm::from_blocks(one).materialized();
        const MhsmPart& part = m.parts().begin()->second;
        Filtration expect =
            weight_filtration_of_n(NilpotentOp(part.N), one[0].w + one[0].k - 1);
        CHECK(part.W == expect);
    }
}
