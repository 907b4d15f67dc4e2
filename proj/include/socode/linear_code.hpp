#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "socode/bitmat.hpp"

namespace socode {

// Raised when an exact computation would exceed a configured enumeration
// limit; callers are expected to refuse rather than fall back to a bound.
class limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMinDistanceLimit = 28;

// An [n, k] binary linear code carried by a generator matrix.
//
// The generator is kept exactly as given (never normalised to standard form):
// the column census ell(G) and the embedding both depend on the matrix, not
// just the row space.  Rank-deficient generators are accepted; dimension() is
// the rank and the codeword set is the row space.
class LinearCode {
  public:
    explicit LinearCode(BitMatrix generator)
        : gen_(std::move(generator)), dimension_(rank(gen_)) {}

    const BitMatrix& generator() const { return gen_; }
    int length() const { return gen_.cols(); }
    int dimension() const { return dimension_; }

    // Exact minimum nonzero codeword weight, by Gray-code enumeration of all
    // 2^dimension - 1 nonzero codewords.  Refuses (limit_error) when the
    // dimension exceeds limit_k instead of returning an approximation.
    int min_distance(int limit_k = kDefaultMinDistanceLimit) const {
        int cached = dist_cache_.load(std::memory_order_relaxed);
        if (cached > 0) return cached;
        if (dimension_ < 1) throw std::invalid_argument("min_distance: zero-dimensional code");
        if (dimension_ > limit_k)
            throw limit_error("min_distance: dimension " + std::to_string(dimension_) +
                              " exceeds enumeration limit " + std::to_string(limit_k));
        int d = enumerate_min_weight();
        dist_cache_.store(d, std::memory_order_relaxed);
        return d;
    }

    bool min_distance_cached() const { return dist_cache_.load(std::memory_order_relaxed) > 0; }

    LinearCode(const LinearCode& other)
        : gen_(other.gen_), dimension_(other.dimension_),
          dist_cache_(other.dist_cache_.load(std::memory_order_relaxed)) {}

    LinearCode& operator=(const LinearCode& other) {
        gen_ = other.gen_;
        dimension_ = other.dimension_;
        dist_cache_.store(other.dist_cache_.load(std::memory_order_relaxed));
        return *this;
    }

  private:
    int enumerate_min_weight() const {
        // Enumerate the row space from a basis, XORing one basis row per step.
        BitMatrix basis = row_basis(gen_);
        int r = basis.rows();
        std::vector<uint64_t> word(basis.row_words(0).size(), 0);
        int best = length() + 1;
        uint64_t total = (uint64_t{1} << r) - 1;
        for (uint64_t g = 1; g <= total; ++g) {
            int flip = std::countr_zero(g);
            auto rw = basis.row_words(flip);
            int w = 0;
            for (size_t i = 0; i < word.size(); ++i) {
                word[i] ^= rw[i];
                w += std::popcount(word[i]);
            }
            best = std::min(best, w);
        }
        return best;
    }

    BitMatrix gen_;
    int dimension_;
    mutable std::atomic<int> dist_cache_{-1};
};

// The dual code: all vectors orthogonal to every codeword.
inline LinearCode dual(const LinearCode& c) {
    return LinearCode(nullspace(c.generator()));
}

// G * G^T == 0: every pair of generator rows, a row with itself included,
// has zero inner product.  This is the ground-truth self-orthogonality test
// the SO_k machinery is checked against.
inline bool is_self_orthogonal(const BitMatrix& g) {
    for (int i = 0; i < g.rows(); ++i) {
        auto wi = g.row_words(i);
        for (int j = i; j < g.rows(); ++j) {
            auto wj = g.row_words(j);
            uint64_t acc = 0;
            for (size_t w = 0; w < wi.size(); ++w) acc ^= wi[w] & wj[w];
            if (std::popcount(acc) & 1) return false;
        }
    }
    return true;
}

inline bool is_self_orthogonal(const LinearCode& c) { return is_self_orthogonal(c.generator()); }

namespace detail {

inline std::vector<int> checked_positions(const std::vector<int>& positions, int n, const char* what) {
    std::vector<int> sorted = positions;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int p : sorted)
        if (p < 1 || p > n)
            throw std::out_of_range(std::string(what) + ": position " + std::to_string(p) +
                                    " outside 1.." + std::to_string(n));
    for (int& p : sorted) --p;
    return sorted;
}

}  // namespace detail

// Deletes the listed columns (1-based) from the generator.  The dimension is
// recomputed and may drop.
inline LinearCode puncture(const LinearCode& c, const std::vector<int>& positions) {
    auto cols = detail::checked_positions(positions, c.length(), "puncture");
    return LinearCode(c.generator().without_columns(cols));
}

// Codewords that are zero on all listed positions (1-based), with those
// coordinates deleted.  Solved on information vectors: u G vanishes on the
// positions iff u is orthogonal to each selected column of G.
inline LinearCode shorten(const LinearCode& c, const std::vector<int>& positions) {
    auto cols = detail::checked_positions(positions, c.length(), "shorten");
    const BitMatrix& g = c.generator();
    BitMatrix constraints(static_cast<int>(cols.size()), g.rows());
    for (size_t i = 0; i < cols.size(); ++i)
        for (int r = 0; r < g.rows(); ++r)
            if (g.bit(r, cols[i])) constraints.set_bit(static_cast<int>(i), r, true);
    BitMatrix info = nullspace(constraints);  // u with u . column = 0 for all selected columns
    BitMatrix words = mat_mul(info, g);
    return LinearCode(words.without_columns(cols));
}

// Largest d satisfying n >= sum_{i=0}^{k-1} ceil(d / 2^i): an upper bound on
// the minimum distance of any [n, k] code.
inline int griesmer_upper(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("griesmer_upper: need 1 <= k <= n");
    auto fits = [&](int d) {
        long long sum = 0;
        for (int i = 0; i < k; ++i) {
            sum += (d + (1LL << i) - 1) >> i;
            if (sum > n) return false;
        }
        return true;
    };
    int d = 1;
    while (fits(d + 1)) ++d;
    return d;
}

}  // namespace socode
