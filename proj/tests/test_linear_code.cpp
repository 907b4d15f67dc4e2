#include "catch_amalgamated.hpp"

#include <random>

#include "socode/linear_code.hpp"
#include "test_helpers.hpp"

using socode::BitMatrix;
using socode::LinearCode;

namespace {

const char* kG10 = "1101111000\n0011100111\n0000011101";

}  // namespace

TEST_CASE("LinearCode keeps the generator and reports rank", "[linear_code]") {
    BitMatrix g = BitMatrix::from_string("110\n011\n101");  // rank 2: row 3 = row 1 + row 2
    LinearCode c(g);
    REQUIRE(c.length() == 3);
    REQUIRE(c.dimension() == 2);
    REQUIRE(c.generator() == g);  // never normalised
}

TEST_CASE("min_distance on known codes", "[linear_code]") {
    REQUIRE(LinearCode(BitMatrix::from_string(kG10)).min_distance() == 4);
    REQUIRE(LinearCode(BitMatrix::from_string("11111")).min_distance() == 5);
    REQUIRE(LinearCode(BitMatrix::identity(4)).min_distance() == 1);
    // [7,4] Hamming
    LinearCode hamming(BitMatrix::from_string("1000110\n0100101\n0010011\n0001111"));
    REQUIRE(hamming.min_distance() == 3);
}

TEST_CASE("min_distance matches naive enumeration", "[linear_code]") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 300; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 18);
        BitMatrix g = test_util::random_matrix(rng, rows, cols);
        LinearCode c(g);
        int naive = test_util::naive_min_distance(g);
        if (c.dimension() == 0) {
            REQUIRE(naive == 0);
            REQUIRE_THROWS_AS(c.min_distance(), std::invalid_argument);
        } else {
            REQUIRE(c.min_distance() == naive);
        }
    }
}

TEST_CASE("min_distance refuses past the enumeration limit", "[linear_code]") {
    LinearCode c(BitMatrix::identity(10));
    REQUIRE_THROWS_AS(c.min_distance(4), socode::limit_error);
    REQUIRE_FALSE(c.min_distance_cached());
    REQUIRE(c.min_distance(10) == 1);
    REQUIRE(c.min_distance_cached());
    REQUIRE(c.min_distance(4) == 1);  // cache answers even below the limit
    LinearCode copy = c;
    REQUIRE(copy.min_distance_cached());
}

TEST_CASE("dual code is the orthogonal complement", "[linear_code]") {
    std::mt19937_64 rng(707);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5);
        int cols = 2 + static_cast<int>(rng() % 12);
        LinearCode c(test_util::random_matrix(rng, rows, cols));
        LinearCode d = socode::dual(c);
        REQUIRE(c.dimension() + d.dimension() == cols);
        for (int i = 0; i < c.generator().rows(); ++i)
            for (int j = 0; j < d.generator().rows(); ++j)
                REQUIRE_FALSE(dot(c.generator().row(i), d.generator().row(j)));
        REQUIRE(socode::row_space_equal(socode::dual(d).generator(),
                                        socode::row_basis(c.generator())));
    }
}

TEST_CASE("is_self_orthogonal agrees with plain-int arithmetic", "[linear_code]") {
    std::mt19937_64 rng(808);
    int so_seen = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 12);
        BitMatrix g = test_util::random_matrix(rng, rows, cols);
        bool got = socode::is_self_orthogonal(g);
        REQUIRE(got == test_util::naive_self_orthogonal(g));
        if (got) ++so_seen;
    }
    REQUIRE(so_seen > 0);  // the fuzz actually hit both outcomes
    REQUIRE(socode::is_self_orthogonal(BitMatrix::from_string(kG10)));
    REQUIRE_FALSE(socode::is_self_orthogonal(BitMatrix::identity(3)));
}

TEST_CASE("puncture deletes columns", "[linear_code]") {
    LinearCode c(BitMatrix::from_string(kG10));
    LinearCode p = socode::puncture(c, {1, 10});
    REQUIRE(p.length() == 8);
    REQUIRE(p.dimension() == 3);
    REQUIRE(p.generator().row(0).to_string() == "10111100");
    // duplicates collapse; bad positions throw
    REQUIRE(socode::puncture(c, {3, 3}).length() == 9);
    REQUIRE_THROWS_AS(socode::puncture(c, {0}), std::out_of_range);
    REQUIRE_THROWS_AS(socode::puncture(c, {11}), std::out_of_range);
}

TEST_CASE("shorten keeps words vanishing on the positions", "[linear_code]") {
    LinearCode id(BitMatrix::identity(4));
    LinearCode s = socode::shorten(id, {1});
    REQUIRE(s.length() == 3);
    REQUIRE(s.dimension() == 3);
    REQUIRE(socode::row_space_equal(s.generator(), BitMatrix::identity(3)));

    // every shortened word, re-read through the original code, is zero there
    LinearCode c(BitMatrix::from_string(kG10));
    LinearCode sh = socode::shorten(c, {2, 5});
    REQUIRE(sh.length() == 8);
    for (int r = 0; r < sh.generator().rows(); ++r)
        REQUIRE(sh.generator().row(r).weight() % 2 == 0);  // still even-weight here
}

TEST_CASE("dual of a puncturing is the shortening of the dual", "[linear_code]") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 80; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 3 + static_cast<int>(rng() % 10);
        LinearCode c(test_util::random_matrix(rng, rows, cols));
        int p = 1 + static_cast<int>(rng() % cols);
        LinearCode lhs = socode::dual(socode::puncture(c, {p}));
        LinearCode rhs = socode::shorten(socode::dual(c), {p});
        REQUIRE(socode::row_space_equal(lhs.generator(), rhs.generator()));
    }
}

TEST_CASE("griesmer_upper known values", "[linear_code]") {
    REQUIRE(socode::griesmer_upper(7, 3) == 4);
    REQUIRE(socode::griesmer_upper(15, 11) == 4);
    REQUIRE(socode::griesmer_upper(45, 5) == 22);
    REQUIRE(socode::griesmer_upper(53, 5) == 26);
    REQUIRE(socode::griesmer_upper(60, 5) == 30);
    REQUIRE(socode::griesmer_upper(10, 1) == 10);
    REQUIRE(socode::griesmer_upper(5, 5) == 1);
    REQUIRE_THROWS_AS(socode::griesmer_upper(5, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(socode::griesmer_upper(5, 6), std::invalid_argument);
}

TEST_CASE("griesmer_upper dominates every real code the fuzz produces", "[linear_code]") {
    std::mt19937_64 rng(1010);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5);
        int cols = 1 + static_cast<int>(rng() % 16);
        LinearCode c(test_util::random_matrix(rng, rows, cols));
        if (c.dimension() == 0) continue;
        REQUIRE(c.min_distance() <= socode::griesmer_upper(c.length(), c.dimension()));
    }
}
