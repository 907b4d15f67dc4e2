#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "socode/bitmat.hpp"
#include "socode/reed_muller.hpp"

// Self-orthogonality analysis through the column census.
//
// ell_vector(G) counts, for each nonzero k-bit pattern h_t, how many columns
// of G equal h_t; its mod-2 image ell(G) is what SO_k acts on.  A code is
// self-orthogonal iff SO_k ell(G)^T = 0 (the so_check route), iff all the
// multiset intersections |I(j) n I(j')| are even (the so_check_multiset
// route).  Both agree with the direct G G^T = 0 oracle; the three routes are
// kept independent so each can check the others.

namespace socode {

// Column-type census of a k-row generator matrix.  counts[t] is the number of
// columns equal to h_t for t = 1 .. 2^k - 1; all-zero columns are tallied
// separately (they are inert for self-orthogonality but must not disturb the
// census).
struct EllVector {
    int k = 0;
    std::vector<uint32_t> counts;  // size 2^k, index t = column value; counts[0] unused
    BitVector parity;              // length 2^k - 1, bit t-1 = counts[t] mod 2
    uint32_t zero_columns = 0;

    uint32_t count(int t) const {
        if (t < 1 || t >= static_cast<int>(counts.size()))
            throw std::out_of_range("EllVector::count: index outside 1..2^k-1");
        return counts[static_cast<size_t>(t)];
    }
};

// Syndrome SO_k ell(G)^T, bits in SO_k row order.
struct Syndrome {
    int k = 0;
    BitVector bits;  // length k(k+1)/2

    bool is_zero() const { return bits.is_zero(); }
    std::string to_string() const { return bits.to_string(); }

    // Bits read as an MSB-first integer (row 1 of SO_k = top bit); this is the
    // record index used by the coset-leader table.
    uint64_t to_index() const {
        uint64_t v = 0;
        for (int i = 0; i < bits.size(); ++i) v = (v << 1) | static_cast<uint64_t>(bits.bit(i));
        return v;
    }

    friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

namespace detail {

inline void check_census_rows(int k, const char* what) {
    if (k < 1 || k > 16)
        throw std::invalid_argument(std::string(what) + ": row count must be in [1, 16]");
}

// SO_k matrices memoized per k; immutable once published.
inline const BitMatrix& cached_so_matrix(int k) {
    static std::mutex mu;
    static std::map<int, BitMatrix> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, build_so_matrix(k)).first;
    return it->second;
}

}  // namespace detail

inline EllVector ell_vector(const BitMatrix& g) {
    detail::check_census_rows(g.rows(), "ell_vector");
    int k = g.rows();
    EllVector ell;
    ell.k = k;
    ell.counts.assign(size_t{1} << k, 0);
    ell.parity = BitVector((1 << k) - 1);
    for (int c = 0; c < g.cols(); ++c) ++ell.counts[g.column_value(c)];
    ell.zero_columns = ell.counts[0];
    for (int t = 1; t < (1 << k); ++t)
        if (ell.counts[static_cast<size_t>(t)] & 1) ell.parity.set_bit(t - 1, true);
    return ell;
}

inline Syndrome syndrome_of(const BitMatrix& g) {
    if (g.rows() < 2) throw std::invalid_argument("syndrome_of: need at least 2 rows");
    EllVector ell = ell_vector(g);
    const BitMatrix& so = detail::cached_so_matrix(ell.k);
    Syndrome s;
    s.k = ell.k;
    s.bits = BitVector(so.rows());
    for (int r = 0; r < so.rows(); ++r)
        if (dot(so.row(r), ell.parity)) s.bits.set_bit(r, true);
    return s;
}

// Self-orthogonality via the SO_k test: true iff SO_k ell(G)^T = 0.
inline bool so_check(const BitMatrix& g) { return syndrome_of(g).is_zero(); }

// Multiset intersection sizes |I(j) n I(j')| for 1 <= j <= j' <= k, in
// lexicographic (j, j') order.  I(j) collects the columns equal to some h_t
// with floor(t / 2^(j-1)) odd, i.e. bit j-1 of t in LSB indexing; the values
// are reported with that literal indexing.
inline std::vector<std::pair<std::pair<int, int>, uint64_t>> ij_intersections(const BitMatrix& g) {
    detail::check_census_rows(g.rows(), "ij_intersections");
    EllVector ell = ell_vector(g);
    int k = ell.k;
    std::vector<std::pair<std::pair<int, int>, uint64_t>> out;
    for (int j = 1; j <= k; ++j)
        for (int jp = j; jp <= k; ++jp) {
            uint64_t size = 0;
            for (int t = 1; t < (1 << k); ++t)
                if (((t >> (j - 1)) & 1) && ((t >> (jp - 1)) & 1))
                    size += ell.counts[static_cast<size_t>(t)];
            out.push_back({{j, jp}, size});
        }
    return out;
}

// Independent self-orthogonality oracle: every |I(j) n I(j')| even.
inline bool so_check_multiset(const BitMatrix& g) {
    for (const auto& [pair, size] : ij_intersections(g))
        if (size & 1) return false;
    return true;
}

}  // namespace socode
