#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crystalkit/json_io.hpp"
#include "crystalkit/verify.hpp"
#include "oracles.hpp"

using namespace crystalkit;

namespace {

LusztigDatum random_datum(std::mt19937& rng, int rank) {
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<int> exps(static_cast<std::size_t>(Rank(rank).positive_roots()));
    for (int& a : exps) a = pick(rng);
    return LusztigDatum(Rank(rank), std::move(exps));
}

}  // namespace

TEST_CASE("root order") {
    CHECK(root_order(2) == std::vector<Segment>{{1, 1}, {1, 2}, {2, 2}});
    CHECK(root_order(3)[3] == Segment{2, 2});
    CHECK(root_order(5)[14] == Segment{5, 5});
    for (int n : {1, 2, 3, 5}) {
        const auto order = root_order(n);
        CHECK(static_cast<int>(order.size()) == Rank(n).positive_roots());
        for (std::size_t p = 0; p < order.size(); ++p)
            CHECK(root_position(n, order[p]) == static_cast<int>(p) + 1);
    }
    CHECK_THROWS_AS(root_position(2, Segment{1, 3}), ValidationError);
}

TEST_CASE("datum validation") {
    CHECK_THROWS_AS(LusztigDatum(Rank(2), {1, 2}), ValidationError);
    CHECK_THROWS_AS(LusztigDatum(Rank(2), {1, -1, 0}), ValidationError);
    LusztigDatum a(Rank(2), {3, 1, 2});
    CHECK(a.exponent(1) == 3);
    CHECK(a.exponent(3) == 2);
    CHECK_THROWS_AS(a.exponent(4), UsageError);
}

TEST_CASE("dictionary with multisegments") {
    CHECK(to_multisegment(LusztigDatum(Rank(3))) == Multisegment(Rank(3)));
    CHECK(to_multisegment(LusztigDatum(Rank(2), {1, 0, 2})) ==
          Multisegment(Rank(2), {{{1, 1}, 1}, {{2, 2}, 2}}));

    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 1000; ++trial) {
        int rank = 2 + trial % 4;
        LusztigDatum a = random_datum(rng, rank);
        CHECK(from_multisegment(to_multisegment(a)) == a);
    }
}

TEST_CASE("native coordinate contracts") {
    LusztigDatum a(Rank(2), {3, 1, 2});
    CHECK(a.eps(1) == 3);
    CHECK(a.eps_star(2) == 2);

    for (int n : {2, 3}) {
        LusztigDatum zero((Rank(n)));
        for (int i = 1; i <= n; ++i) {
            LusztigDatum fz = zero.f(i);
            for (int p = 1; p <= Rank(n).positive_roots(); ++p)
                CHECK(fz.exponent(p) == (p == root_position(n, {i, i}) ? 1 : 0));
        }
    }

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int rank = 2 + trial % 3;
        LusztigDatum a = random_datum(rng, rank);
        for (int i = 1; i <= rank; ++i) {
            CHECK(a.f(i).e(i) == a);
            CHECK(a.f_star(i).e_star(i) == a);
        }
    }
}

TEST_CASE("weight from exponents") {
    CHECK(LusztigDatum(Rank(2)).weight() == Weight(Rank(2)));
    CHECK(LusztigDatum(Rank(2), {0, 1, 0}).weight() == Weight(Rank(2), {-1, -1}));

    std::mt19937 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        int rank = 2 + trial % 4;
        LusztigDatum a = random_datum(rng, rank);
        CHECK(a.weight() == to_multisegment(a).weight());
    }
}

TEST_CASE("block shift drops the first root block") {
    CHECK(block_shift(LusztigDatum(Rank(2), {5, 7, 3})) == LusztigDatum(Rank(1), {3}));
    CHECK_THROWS_AS(block_shift(LusztigDatum(Rank(1), {4})), UsageError);

    std::mt19937 rng(123);
    for (int trial = 0; trial < 300; ++trial) {
        int rank = 2 + trial % 3;
        LusztigDatum a = random_datum(rng, rank);
        CHECK(to_multisegment(block_shift(a)) ==
              shift_down(to_multisegment(a)).with_rank(Rank(rank - 1)));
    }

    // the reflection chain transported through the dictionary is the block
    // shift; spot-checked here, swept fully by the verification suites
    for (int rank : {2, 3})
        for (const auto& m : enumerate_multisegments(rank, 5)) {
            LusztigDatum a = from_multisegment(m);
            CHECK(block_shift(a) ==
                  from_multisegment(sigma_chain(m).with_rank(Rank(rank - 1))));
        }
}

TEST_CASE("text form") {
    CHECK(to_text(LusztigDatum(Rank(2), {1, 0, 2})) == "(1,0,2)");
}
