#include "catch_amalgamated.hpp"

#include <random>
#include <vector>

#include "socode/bitmat.hpp"
#include "test_helpers.hpp"

using socode::BitMatrix;
using socode::BitVector;

TEST_CASE("BitVector basics", "[bitmat]") {
    BitVector v = BitVector::from_string("0110 01");
    REQUIRE(v.size() == 6);
    REQUIRE(v.to_string() == "011001");
    REQUIRE(v.weight() == 3);
    REQUIRE_FALSE(v.bit(0));
    REQUIRE(v.bit(1));
    v.flip_bit(0);
    REQUIRE(v.bit(0));
    v.set_bit(0, false);
    REQUIRE(v.to_string() == "011001");
    REQUIRE_FALSE(v.is_zero());
    REQUIRE(BitVector(4).is_zero());
    REQUIRE_THROWS_AS(v.bit(6), std::out_of_range);
    REQUIRE_THROWS_AS(BitVector::from_string("01x"), std::invalid_argument);
}

TEST_CASE("BitVector xor and dot", "[bitmat]") {
    BitVector a = BitVector::from_string("1100");
    BitVector b = BitVector::from_string("1010");
    REQUIRE((a ^ b).to_string() == "0110");
    REQUIRE(dot(a, b));          // overlap of size 1
    REQUIRE_FALSE(dot(a, a));    // even self-overlap
    REQUIRE_THROWS_AS(dot(a, BitVector(3)), std::invalid_argument);
}

TEST_CASE("BitVector spans word boundaries", "[bitmat]") {
    std::mt19937_64 rng(11);
    for (int len : {63, 64, 65, 130}) {
        BitVector v(len);
        int expect_weight = 0;
        for (int i = 0; i < len; ++i)
            if (rng() & 1) {
                v.set_bit(i, true);
                ++expect_weight;
            }
        REQUIRE(v.weight() == expect_weight);
        REQUIRE(BitVector::from_string(v.to_string()) == v);
    }
}

TEST_CASE("BitMatrix construction and access", "[bitmat]") {
    BitMatrix m = BitMatrix::from_string("011\n101");
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    REQUIRE(m.bit(0, 1));
    REQUIRE_FALSE(m.bit(1, 1));
    REQUIRE(m.row(1).to_string() == "101");
    REQUIRE(BitMatrix::from_string("011;101") == m);
    REQUIRE_THROWS_AS(BitMatrix::from_string("01\n011"), std::invalid_argument);
    REQUIRE_THROWS_AS(BitMatrix::from_string(""), std::invalid_argument);

    BitMatrix id = BitMatrix::identity(3);
    REQUIRE(id.bit(2, 2));
    REQUIRE_FALSE(id.bit(2, 1));
}

TEST_CASE("column_value reads columns MSB-first from row 0", "[bitmat]") {
    BitMatrix m = BitMatrix::from_string("100\n011\n001");
    REQUIRE(m.column_value(0) == 4u);  // column (1,0,0)
    REQUIRE(m.column_value(1) == 2u);  // column (0,1,0)
    REQUIRE(m.column_value(2) == 3u);  // column (0,1,1)
}

TEST_CASE("append_column and without_columns", "[bitmat]") {
    BitMatrix m = BitMatrix::from_string("10\n01");
    m.append_column(BitVector::from_string("11"));
    REQUIRE(m.cols() == 3);
    REQUIRE(m.row(0).to_string() == "101");
    REQUIRE(m.row(1).to_string() == "011");

    BitMatrix cut = m.without_columns({1});
    REQUIRE(cut == BitMatrix::from_string("11\n01"));
    REQUIRE_THROWS_AS(m.append_column(BitVector(3)), std::invalid_argument);
}

TEST_CASE("rank matches a naive elimination", "[bitmat]") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8);
        int cols = 1 + static_cast<int>(rng() % 20);
        BitMatrix m = test_util::random_matrix(rng, rows, cols);
        REQUIRE(socode::rank(m) == test_util::naive_rank(test_util::to_ints(m)));
    }
}

TEST_CASE("rref is idempotent with increasing pivots", "[bitmat]") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 16);
        BitMatrix m = test_util::random_matrix(rng, rows, cols);
        socode::RrefResult rr = socode::rref(m);
        REQUIRE(static_cast<int>(rr.pivots.size()) == socode::rank(m));
        for (size_t i = 1; i < rr.pivots.size(); ++i) REQUIRE(rr.pivots[i - 1] < rr.pivots[i]);
        // pivot columns are unit vectors; rows past the rank are zero
        for (size_t i = 0; i < rr.pivots.size(); ++i)
            for (int r = 0; r < m.rows(); ++r)
                REQUIRE(rr.matrix.bit(r, rr.pivots[i] - 1) == (r == static_cast<int>(i)));
        for (int r = static_cast<int>(rr.pivots.size()); r < m.rows(); ++r)
            REQUIRE(rr.matrix.row_is_zero(r));
        REQUIRE(socode::rref(rr.matrix).matrix == rr.matrix);
        REQUIRE(socode::row_space_equal(m, rr.matrix));
    }
}

TEST_CASE("mat_mul matches naive multiplication", "[bitmat]") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 100; ++trial) {
        int a = 1 + static_cast<int>(rng() % 5);
        int b = 1 + static_cast<int>(rng() % 5);
        int c = 1 + static_cast<int>(rng() % 70);
        BitMatrix x = test_util::random_matrix(rng, a, b);
        BitMatrix y = test_util::random_matrix(rng, b, c);
        BitMatrix z = socode::mat_mul(x, y);
        REQUIRE(z.rows() == a);
        REQUIRE(z.cols() == c);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < c; ++j) {
                int acc = 0;
                for (int t = 0; t < b; ++t) acc ^= x.bit(i, t) & y.bit(t, j);
                REQUIRE(z.bit(i, j) == (acc != 0));
            }
    }
}

TEST_CASE("transpose involutes", "[bitmat]") {
    std::mt19937_64 rng(404);
    BitMatrix m = test_util::random_matrix(rng, 5, 9);
    BitMatrix t = socode::transpose(m);
    REQUIRE(t.rows() == 9);
    REQUIRE(t.cols() == 5);
    REQUIRE(socode::transpose(t) == m);
}

TEST_CASE("nullspace spans the kernel", "[bitmat]") {
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 14);
        BitMatrix m = test_util::random_matrix(rng, rows, cols);
        BitMatrix ker = socode::nullspace(m);
        REQUIRE(ker.rows() == cols - socode::rank(m));
        REQUIRE(ker.cols() == cols);
        if (ker.rows() > 0) {
            REQUIRE(socode::rank(ker) == ker.rows());  // basis, not just spanning set
            for (int r = 0; r < ker.rows(); ++r)
                for (int i = 0; i < rows; ++i) REQUIRE_FALSE(dot(m.row(i), ker.row(r)));
        }
    }
}

TEST_CASE("row_space_equal is permutation- and combination-invariant", "[bitmat]") {
    BitMatrix a = BitMatrix::from_string("110\n011");
    BitMatrix b = BitMatrix::from_string("011\n110");
    BitMatrix c = BitMatrix::from_string("110\n101");  // second row = sum
    BitMatrix d = BitMatrix::from_string("110\n111");
    REQUIRE(socode::row_space_equal(a, b));
    REQUIRE(socode::row_space_equal(a, c));
    REQUIRE_FALSE(socode::row_space_equal(a, d));
    REQUIRE(socode::row_basis(a) == socode::row_basis(c));
}
