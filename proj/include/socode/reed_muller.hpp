#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "socode/bitmat.hpp"

// Constructions tied to the simplex matrix H_k:
//
//   - simplex_matrix(k): the k x (2^k - 1) matrix whose j-th column is the
//     binary representation of j, most significant bit in row 1.
//   - rm_generator(r, m): generator of the Reed-Muller code RM(r, m).
//   - so_matrix(k): the self-orthogonality matrix SO_k, rows r_i (x) r_j for
//     1 <= i <= j <= k, where r_i are the rows of H_k and (x) is the
//     component-wise product.
//
// The point ordering of rm_generator is chosen so that the all-zeros
// evaluation point is the first coordinate; after shortening RM(2, k) there,
// column t+1 lines up with h_t and the row space equals that of SO_k exactly.

namespace socode {

inline BitMatrix simplex_matrix(int k) {
    if (k < 2 || k > 16) throw std::invalid_argument("simplex_matrix: k must be in [2, 16]");
    int n = (1 << k) - 1;
    BitMatrix h(k, n);
    for (int t = 1; t <= n; ++t)
        for (int i = 0; i < k; ++i)
            if ((t >> (k - 1 - i)) & 1) h.set_bit(i, t - 1, true);
    return h;
}

namespace detail {

// Variable subsets of {1..m} with |S| = deg, as MSB-first masks, in
// lexicographic order of the sorted index tuple.
inline void monomial_masks(int m, int deg, uint32_t mask, int next_var, std::vector<uint32_t>& out) {
    if (deg == 0) {
        out.push_back(mask);
        return;
    }
    for (int v = next_var; v <= m - deg + 1; ++v)
        monomial_masks(m, deg - 1, mask | (uint32_t{1} << (m - v)), v + 1, out);
}

}  // namespace detail

// Generator matrix of RM(r, m): one row per monomial of degree <= r in m
// boolean variables, ordered by increasing degree and lexicographically by
// variable tuple within a degree.  Point t sits at column t+1 and assigns to
// x_v the bit (m - v) of t, so x_1 reads the most significant bit.
inline BitMatrix rm_generator(int r, int m) {
    if (m < 1 || m > 16 || r < 0 || r > m)
        throw std::invalid_argument("rm_generator: need 0 <= r <= m <= 16");
    std::vector<uint32_t> masks;
    for (int deg = 0; deg <= r; ++deg) detail::monomial_masks(m, deg, 0, 1, masks);
    uint32_t points = uint32_t{1} << m;
    BitMatrix g(static_cast<int>(masks.size()), static_cast<int>(points));
    for (size_t row = 0; row < masks.size(); ++row)
        for (uint32_t t = 0; t < points; ++t)
            if ((t & masks[row]) == masks[row]) g.set_bit(static_cast<int>(row), static_cast<int>(t), true);
    return g;
}

namespace detail {

// SO_k construction without the public-range check; the syndrome machinery
// uses it for any k the column census supports.
inline BitMatrix build_so_matrix(int k) {
    BitMatrix h = simplex_matrix(k);
    int n = h.cols();
    BitMatrix so(k * (k + 1) / 2, n);
    for (int i = 0; i < k; ++i) so.set_row(i, h.row(i));
    int out = k;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j, ++out)
            for (int c = 0; c < n; ++c)
                if (h.bit(i, c) && h.bit(j, c)) so.set_bit(out, c, true);
    return so;
}

}  // namespace detail

// SO_k, size k(k+1)/2 x (2^k - 1).  Row order: the k diagonal products
// r_i (x) r_i = r_i first (these are exactly the rows of H_k), then r_i (x) r_j
// for i < j in lexicographic (i, j) order.
inline BitMatrix so_matrix(int k) {
    if (k < 2 || k > 10) throw std::invalid_argument("so_matrix: k must be in [2, 10]");
    return detail::build_so_matrix(k);
}

}  // namespace socode
