#include <random>
#include <stdexcept>

#include "catch_amalgamated.hpp"
#include "lscat/f2.hpp"
#include "oracles.hpp"

using namespace lscat;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c);
    return m;
}

}  // namespace

TEST_CASE("BitVec basics", "[f2]") {
    BitVec v(130);
    CHECK(v.is_zero());
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.popcount() == 3);
    CHECK(v.find_first() == 0);
    CHECK(v.find_next(1) == 64);
    CHECK(v.find_next(65) == 129);
    CHECK(v.find_next(130) == BitVec::npos);
    CHECK(v.ones() == std::vector<std::size_t>{0, 64, 129});
    v.flip(64);
    CHECK_FALSE(v.get(64));
    CHECK((v ^ v).is_zero());
    CHECK(BitVec{1, 0, 1}.to_string() == "101");
    CHECK(BitVec{1, 1, 0}.dot(BitVec{0, 1, 1}));
    CHECK_FALSE(BitVec{1, 1, 0}.dot(BitVec{1, 1, 1}));
}

TEST_CASE("rank of small matrices", "[f2]") {
    CHECK(rank(BitMatrix{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}) == 2);
    CHECK(rank(BitMatrix::identity(5)) == 5);
    CHECK(rank(BitMatrix(3, 4)) == 0);
    CHECK(rank(BitMatrix{{1, 1}, {1, 1}}) == 1);
}

TEST_CASE("in_span and injectivity", "[f2]") {
    const BitMatrix b{{1, 1, 0}, {0, 1, 1}};
    CHECK(in_span(BitVec{1, 0, 1}, b));
    CHECK_FALSE(in_span(BitVec{1, 0, 0}, b));
    CHECK(in_span(BitVec(3), b));
    CHECK_THROWS_AS(in_span(BitVec(4), b), std::invalid_argument);
    CHECK(is_injective(BitMatrix{{1, 0}, {0, 1}, {1, 1}}));
    CHECK_FALSE(is_injective(BitMatrix{{1, 1}, {1, 1}}));
}

TEST_CASE("matrix product and transpose", "[f2]") {
    const BitMatrix a{{1, 1}, {0, 1}};
    CHECK(a * a == BitMatrix::identity(2));
    CHECK(a.transpose() == BitMatrix{{1, 0}, {1, 1}});
    CHECK(a.apply(BitVec{1, 1}) == BitVec{0, 1});
    CHECK(a.column(1) == BitVec{1, 1});
}

TEST_CASE("EchelonBasis tracks a span", "[f2]") {
    EchelonBasis e(4);
    CHECK(e.insert(BitVec{1, 1, 0, 0}));
    CHECK(e.insert(BitVec{0, 1, 1, 0}));
    CHECK_FALSE(e.insert(BitVec{1, 0, 1, 0}));
    CHECK(e.size() == 2);
    CHECK(e.contains(BitVec{1, 0, 1, 0}));
    CHECK_FALSE(e.contains(BitVec{0, 0, 0, 1}));
}

TEST_CASE("rank agrees with the dense oracle", "[f2][property]") {
    std::mt19937_64 rng(oracle::seed());
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 90;
        const auto m = random_matrix(rng, rows, cols, trial % 2 ? 0.5 : 0.1);
        INFO("trial " << trial << " seed " << oracle::seed());
        const auto r = rank(m);
        CHECK(r == oracle::rank(oracle::dense(m)));
        CHECK(r == rank(m.transpose()));
    }
}

TEST_CASE("in_span iff rank does not grow", "[f2][property]") {
    std::mt19937_64 rng(oracle::seed() + 1);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 20;
        const auto m = random_matrix(rng, rows, cols, 0.3);
        const auto v = random_matrix(rng, 1, cols, 0.3).row(0);
        auto extended = m;
        extended.append_row(v);
        CHECK(in_span(v, m) == (rank(extended) == rank(m)));
    }
}

TEST_CASE("matrix product is associative and matches apply", "[f2][property]") {
    std::mt19937_64 rng(oracle::seed() + 2);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t a = 1 + rng() % 12, b = 1 + rng() % 12, c = 1 + rng() % 12, d = 1 + rng() % 12;
        const auto x = random_matrix(rng, a, b), y = random_matrix(rng, b, c), z = random_matrix(rng, c, d);
        CHECK((x * y) * z == x * (y * z));
        const auto v = random_matrix(rng, 1, c).row(0);
        CHECK((x * y).apply(v) == x.apply(y.apply(v)));
    }
}
