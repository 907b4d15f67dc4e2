#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "socode/bitmat.hpp"
#include "socode/linear_code.hpp"

// CSS parameter derivation.
//
// A self-orthogonal [n, k] code C sits inside its dual, and the CSS recipe on
// the pair (C, dual(C)) yields an [[n, n-2k, d]] quantum code with
// d = dist(dual(C) \ C).  Whenever the dual's minimum weight is attained by a
// word outside C -- in particular always when d(dual) < d(C) -- this
// simplifies to d = d(dual(C)).  The simplification is verified here by
// enumeration, never assumed.

namespace socode {

inline constexpr int kDefaultMaxDualDim = 24;

// [[n, k_q, d_q]] derived from a classical self-orthogonal code.
struct QuantumParams {
    int n = 0;
    int k_q = 0;         // logical dimension, n - 2 dim(C)
    int d_q = 0;         // exact minimum distance of dual(C)
    std::string source;  // the classical code the parameters come from
};

namespace detail {

// Minimum weight over row_space(big) \ row_space(small), by Gray-code walk
// of big with membership tested against the rref of small only when a word
// would improve the running minimum.  nullopt when the difference is empty.
inline std::optional<int> min_weight_outside(const BitMatrix& big, const BitMatrix& small,
                                             int limit_k = kDefaultMinDistanceLimit) {
    if (big.cols() != small.cols())
        throw std::invalid_argument("min_weight_outside: length mismatch");
    BitMatrix basis = row_basis(big);
    int r = basis.rows();
    if (r < 1) return std::nullopt;
    if (r > limit_k)
        throw limit_error("min_weight_outside: dimension " + std::to_string(r) +
                          " exceeds enumeration limit " + std::to_string(limit_k));
    RrefResult small_rr = rref(small);
    auto in_small = [&](const std::vector<uint64_t>& w) {
        std::vector<uint64_t> tmp = w;
        for (size_t i = 0; i < small_rr.pivots.size(); ++i) {
            int p = small_rr.pivots[i] - 1;
            if ((tmp[static_cast<size_t>(p) >> 6] >> (p & 63)) & 1) {
                auto rw = small_rr.matrix.row_words(static_cast<int>(i));
                for (size_t j = 0; j < tmp.size(); ++j) tmp[j] ^= rw[j];
            }
        }
        for (uint64_t v : tmp)
            if (v) return false;
        return true;
    };

    std::vector<uint64_t> word(basis.row_words(0).size(), 0);
    std::optional<int> best;
    uint64_t total = (uint64_t{1} << r) - 1;
    for (uint64_t g = 1; g <= total; ++g) {
        auto rw = basis.row_words(std::countr_zero(g));
        int w = 0;
        for (size_t i = 0; i < word.size(); ++i) {
            word[i] ^= rw[i];
            w += std::popcount(word[i]);
        }
        if ((!best || w < *best) && !in_small(word)) best = w;
    }
    return best;
}

}  // namespace detail

// [[n, n-2k, d(dual(C))]] for a self-orthogonal C.  The claimed distance is
// validated exactly: the minimum over dual words outside C must equal
// d(dual(C)); when every minimum-weight dual word lies inside C the
// simplification is wrong for this code and the call fails rather than
// report an unproven distance.
inline QuantumParams css_params(const LinearCode& c, int max_dual_dim = kDefaultMaxDualDim) {
    if (c.dimension() < 1) throw std::invalid_argument("css_params: zero-dimensional code");
    if (!is_self_orthogonal(c))
        throw std::runtime_error("css_params: code is not self-orthogonal");
    int n = c.length();
    int k = c.dimension();
    if (n - k > max_dual_dim)
        throw limit_error("css_params: dual dimension " + std::to_string(n - k) +
                          " exceeds limit " + std::to_string(max_dual_dim));
    LinearCode dual_code = dual(c);
    int d_dual = dual_code.min_distance(max_dual_dim);
    std::optional<int> d_outside =
        detail::min_weight_outside(dual_code.generator(), c.generator(), max_dual_dim);
    if (!d_outside || *d_outside != d_dual)
        throw std::runtime_error("css_params: hypothesis violated -- the dual's minimum weight " +
                                 std::to_string(d_dual) +
                                 " is attained only inside the code, so d_q would exceed d(dual)");
    QuantumParams q;
    q.n = n;
    q.k_q = n - 2 * k;
    q.d_q = d_dual;
    q.source = "[" + std::to_string(n) + "," + std::to_string(k);
    if (k <= kDefaultMinDistanceLimit) q.source += "," + std::to_string(c.min_distance());
    q.source += "] self-orthogonal code";
    return q;
}

// General nested construction: for C1 strictly inside C2,
// [[n, k2 - k1, min(dist(C2 \ C1), dist(dual(C1) \ dual(C2)))]], both minima
// by enumeration.  Strict containment keeps both set differences nonempty.
inline QuantumParams css_params_nested(const LinearCode& c1, const LinearCode& c2,
                                       int max_dual_dim = kDefaultMaxDualDim) {
    if (c1.length() != c2.length())
        throw std::invalid_argument("css_params_nested: length mismatch");
    if (c1.dimension() < 1)
        throw std::invalid_argument("css_params_nested: C1 is zero-dimensional");
    int n = c1.length();
    const BitMatrix& g1 = c1.generator();
    const BitMatrix& g2 = c2.generator();
    BitMatrix both(g1.rows() + g2.rows(), n);
    for (int r = 0; r < g2.rows(); ++r) both.set_row(r, g2.row(r));
    for (int r = 0; r < g1.rows(); ++r) both.set_row(g2.rows() + r, g1.row(r));
    if (rank(both) != c2.dimension())
        throw std::invalid_argument("css_params_nested: C1 is not contained in C2");
    if (c1.dimension() >= c2.dimension())
        throw std::invalid_argument("css_params_nested: containment must be strict");
    if (n - c1.dimension() > max_dual_dim)
        throw limit_error("css_params_nested: dual dimension " + std::to_string(n - c1.dimension()) +
                          " exceeds limit " + std::to_string(max_dual_dim));

    LinearCode d1 = dual(c1);
    LinearCode d2 = dual(c2);
    std::optional<int> in_codes = detail::min_weight_outside(g2, g1);
    std::optional<int> in_duals =
        detail::min_weight_outside(d1.generator(), d2.generator(), max_dual_dim);
    QuantumParams q;
    q.n = n;
    q.k_q = c2.dimension() - c1.dimension();
    q.d_q = std::min(*in_codes, *in_duals);
    q.source = "nested [" + std::to_string(n) + "," + std::to_string(c1.dimension()) + "] in [" +
               std::to_string(n) + "," + std::to_string(c2.dimension()) + "] pair";
    return q;
}

}  // namespace socode
