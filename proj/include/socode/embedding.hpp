#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "socode/bitmat.hpp"
#include "socode/linear_code.hpp"
#include "socode/so_analysis.hpp"

// Shortest self-orthogonal embedding.
//
// A generator matrix that fails the SO_k test has a nonzero syndrome
// s = SO_k ell(G)^T.  Appending the column h_i flips bit i of ell(G), so the
// set of columns to append is exactly a coset leader for s: a minimum-weight
// vector over the positions 1 .. 2^k - 1 whose column syndromes XOR to s.
// The table below stores one leader per syndrome; its maximum leader weight
// is the covering radius, k+1 for even k and k for odd k, which bounds the
// number of columns any embedding needs.

namespace socode {

class cache_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// One minimum-weight coset leader per SO_k syndrome, stored as its support.
//
// Leaders are packed into a uint64 per syndrome: weight in the low 4 bits,
// then the support positions in ascending order, 7 bits each.  Ties among
// equal-weight leaders are broken toward the lexicographically smallest
// support, which the build order guarantees.
class CosetLeaderTable {
  public:
    // Exhaustive build: error patterns are enumerated by increasing weight
    // and, within a weight, in lexicographic support order; the first pattern
    // reaching a syndrome is recorded.  k = 7 (2^28 syndromes, ~2 GB in
    // memory) must be enabled explicitly.
    static CosetLeaderTable build(int k, bool allow_k7 = false) {
        int k_max = allow_k7 ? 7 : 6;
        if (k < 2 || k > k_max)
            throw std::invalid_argument("CosetLeaderTable: k must be in [2, " +
                                        std::to_string(k_max) + "]");
        CosetLeaderTable t;
        t.init_dimensions(k);
        uint64_t size = t.size();
        t.packed_.assign(size, kEmpty);
        t.packed_[0] = 0;
        std::vector<uint64_t> filled(static_cast<size_t>((size + 63) / 64), 0);
        filled[0] = 1;
        uint64_t remaining = size - 1;

        for (int w = 1; remaining > 0; ++w) {
            if (w > t.length_) throw std::logic_error("coset table build did not converge");
            auto fill = [&](auto&& self, int depth, int start, uint32_t syn,
                            uint64_t prefix) -> bool {
                if (depth == w - 1) {
                    for (int p = start; p <= t.length_; ++p) {
                        uint32_t s = syn ^ t.col_syn_[static_cast<size_t>(p)];
                        uint64_t word = filled[s >> 6];
                        if (!((word >> (s & 63)) & 1)) {
                            filled[s >> 6] = word | (uint64_t{1} << (s & 63));
                            t.packed_[s] =
                                prefix | (uint64_t{static_cast<uint64_t>(p)} << (4 + 7 * depth)) |
                                static_cast<uint64_t>(w);
                            t.rho_ = w;
                            if (--remaining == 0) return true;
                        }
                    }
                    return false;
                }
                int limit = t.length_ - (w - 1 - depth);
                for (int p = start; p <= limit; ++p)
                    if (self(self, depth + 1, p + 1, syn ^ t.col_syn_[static_cast<size_t>(p)],
                             prefix | (uint64_t{static_cast<uint64_t>(p)} << (4 + 7 * depth))))
                        return true;
                return false;
            };
            if (fill(fill, 0, 1, 0, 0)) break;
        }
        return t;
    }

    int k() const { return k_; }
    int syndrome_bits() const { return m_; }
    uint64_t size() const { return uint64_t{1} << m_; }
    int covering_radius() const { return rho_; }

    // Support of the coset leader for syndrome index s, ascending, 1-based.
    std::vector<int> leader_by_index(uint64_t s) const {
        if (s >= size()) throw std::out_of_range("leader_by_index: syndrome out of range");
        uint64_t rec = packed_[s];
        int w = static_cast<int>(rec & 15);
        std::vector<int> support(static_cast<size_t>(w));
        for (int i = 0; i < w; ++i)
            support[static_cast<size_t>(i)] = static_cast<int>((rec >> (4 + 7 * i)) & 127);
        return support;
    }

    std::vector<int> leader(const Syndrome& s) const {
        if (s.k != k_ || s.bits.size() != m_)
            throw std::invalid_argument("leader: syndrome does not match table dimensions");
        return leader_by_index(s.to_index());
    }

    // Syndrome index of the weight-1 pattern at position p (column p of SO_k).
    uint32_t column_syndrome(int p) const {
        if (p < 1 || p > length_) throw std::out_of_range("column_syndrome: position out of range");
        return col_syn_[static_cast<size_t>(p)];
    }

    friend bool operator==(const CosetLeaderTable&, const CosetLeaderTable&) = default;

    // "SOCT1" cache format: magic SOCT, version byte 1, byte k, byte rho,
    // then 2^(k(k+1)/2) records of 1 + (k+1) bytes each -- weight w followed
    // by w ascending 1-based position bytes, zero-padded -- ordered by
    // syndrome integer.
    void save(std::ostream& os) const {
        static const char magic[4] = {'S', 'O', 'C', 'T'};
        os.write(magic, 4);
        char header[3] = {1, static_cast<char>(k_), static_cast<char>(rho_)};
        os.write(header, 3);
        int rec_len = 1 + (k_ + 1);
        std::vector<char> rec(static_cast<size_t>(rec_len));
        for (uint64_t s = 0; s < size(); ++s) {
            uint64_t packed = packed_[s];
            int w = static_cast<int>(packed & 15);
            rec.assign(static_cast<size_t>(rec_len), 0);
            rec[0] = static_cast<char>(w);
            for (int i = 0; i < w; ++i)
                rec[static_cast<size_t>(1 + i)] = static_cast<char>((packed >> (4 + 7 * i)) & 127);
            os.write(rec.data(), rec_len);
        }
        if (!os) throw cache_error("coset table save: write failed");
    }

    void save_file(const std::filesystem::path& path) const {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw cache_error("coset table save: cannot open " + path.string());
        save(os);
    }

    // Loads and fully revalidates a cached table: header fields, record
    // structure, and the syndrome of every stored leader.  Any mismatch
    // raises cache_error so the caller can fall back to a rebuild.
    static CosetLeaderTable load(std::istream& is, std::optional<int> expect_k = std::nullopt) {
        char header[7];
        is.read(header, 7);
        if (!is || header[0] != 'S' || header[1] != 'O' || header[2] != 'C' || header[3] != 'T')
            throw cache_error("coset table load: bad magic");
        if (header[4] != 1) throw cache_error("coset table load: unsupported version");
        int k = static_cast<unsigned char>(header[5]);
        int rho = static_cast<unsigned char>(header[6]);
        if (k < 2 || k > 7) throw cache_error("coset table load: k out of range");
        if (expect_k && k != *expect_k) throw cache_error("coset table load: k mismatch");

        CosetLeaderTable t;
        t.init_dimensions(k);
        uint64_t size = t.size();
        t.packed_.assign(size, 0);
        t.rho_ = rho;
        int rec_len = 1 + (k + 1);
        std::vector<char> rec(static_cast<size_t>(rec_len));
        int max_seen = 0;
        for (uint64_t s = 0; s < size; ++s) {
            is.read(rec.data(), rec_len);
            if (!is) throw cache_error("coset table load: truncated record section");
            int w = static_cast<unsigned char>(rec[0]);
            if (w > k + 1 || w > rho) throw cache_error("coset table load: leader weight out of range");
            uint64_t packed = static_cast<uint64_t>(w);
            uint32_t syn = 0;
            int prev = 0;
            for (int i = 0; i < w; ++i) {
                int p = static_cast<unsigned char>(rec[static_cast<size_t>(1 + i)]);
                if (p <= prev || p > t.length_)
                    throw cache_error("coset table load: support not ascending");
                prev = p;
                syn ^= t.col_syn_[static_cast<size_t>(p)];
                packed |= uint64_t{static_cast<uint64_t>(p)} << (4 + 7 * i);
            }
            for (int i = w; i < k + 1; ++i)
                if (rec[static_cast<size_t>(1 + i)] != 0)
                    throw cache_error("coset table load: nonzero padding");
            if (syn != s) throw cache_error("coset table load: leader syndrome mismatch");
            t.packed_[s] = packed;
            if (w > max_seen) max_seen = w;
        }
        is.peek();
        if (!is.eof()) throw cache_error("coset table load: trailing data");
        if (max_seen != rho) throw cache_error("coset table load: covering radius mismatch");
        return t;
    }

    static CosetLeaderTable load_file(const std::filesystem::path& path,
                                      std::optional<int> expect_k = std::nullopt) {
        std::ifstream is(path, std::ios::binary);
        if (!is) throw cache_error("coset table load: cannot open " + path.string());
        return load(is, expect_k);
    }

  private:
    static constexpr uint64_t kEmpty = ~uint64_t{0};

    void init_dimensions(int k) {
        k_ = k;
        m_ = k * (k + 1) / 2;
        length_ = (1 << k) - 1;
        const BitMatrix& so = detail::cached_so_matrix(k);
        col_syn_.assign(static_cast<size_t>(length_) + 1, 0);
        for (int p = 1; p <= length_; ++p) {
            uint32_t s = 0;
            for (int r = 0; r < m_; ++r)
                s = (s << 1) | static_cast<uint32_t>(so.bit(r, p - 1));
            col_syn_[static_cast<size_t>(p)] = s;
        }
    }

    int k_ = 0;
    int m_ = 0;       // syndrome bits, k(k+1)/2
    int length_ = 0;  // 2^k - 1 positions
    int rho_ = 0;
    std::vector<uint32_t> col_syn_;
    std::vector<uint64_t> packed_;
};

enum class TableSource { built, cache_hit, rebuilt_after_invalid_cache };

inline std::filesystem::path coset_cache_path(const std::filesystem::path& cache_dir, int k) {
    return cache_dir / ("soct1_k" + std::to_string(k) + ".bin");
}

// Returns the coset-leader table for k, using a cached SOCT1 file under
// cache_dir when one exists and validates; otherwise builds (and caches when
// a directory is given).  Invalid caches are replaced.
inline CosetLeaderTable build_coset_table(int k, const std::filesystem::path& cache_dir = {},
                                          bool allow_k7 = false,
                                          TableSource* source = nullptr) {
    bool had_invalid_cache = false;
    if (!cache_dir.empty()) {
        auto path = coset_cache_path(cache_dir, k);
        if (std::filesystem::exists(path)) {
            try {
                CosetLeaderTable t = CosetLeaderTable::load_file(path, k);
                if (source) *source = TableSource::cache_hit;
                return t;
            } catch (const cache_error&) {
                had_invalid_cache = true;
            }
        }
    }
    CosetLeaderTable t = CosetLeaderTable::build(k, allow_k7);
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        t.save_file(coset_cache_path(cache_dir, k));
    }
    if (source)
        *source = had_invalid_cache ? TableSource::rebuilt_after_invalid_cache : TableSource::built;
    return t;
}

inline int covering_radius(const CosetLeaderTable& table) { return table.covering_radius(); }

// Record of one embedding run.
struct EmbeddingReport {
    int input_n = 0;
    int k = 0;
    std::optional<int> input_min_distance;
    Syndrome syndrome;
    std::vector<int> leader_support;            // 1-based h-indices, ascending
    std::vector<std::string> appended_columns;  // k-bit columns, MSB first
    int output_n = 0;
    std::optional<int> output_min_distance;
    bool was_already_so = false;
};

// Shortest SO embedding: if G already passes the SO_k test it is returned
// unchanged; otherwise the coset leader of its syndrome names the columns
// h_i to append, in increasing i.
inline std::pair<BitMatrix, EmbeddingReport> embed(const BitMatrix& g,
                                                   const CosetLeaderTable& table) {
    if (g.rows() != table.k())
        throw std::invalid_argument("embed: generator row count does not match table k");
    EmbeddingReport rep;
    rep.input_n = g.cols();
    rep.k = g.rows();
    rep.syndrome = syndrome_of(g);
    LinearCode input_code(g);
    if (input_code.dimension() >= 1) rep.input_min_distance = input_code.min_distance();

    if (rep.syndrome.is_zero()) {
        rep.was_already_so = true;
        rep.output_n = g.cols();
        rep.output_min_distance = rep.input_min_distance;
        return {g, rep};
    }

    rep.leader_support = table.leader(rep.syndrome);
    BitMatrix out = g;
    for (int p : rep.leader_support) {
        BitVector column(g.rows());
        for (int r = 0; r < g.rows(); ++r)
            if ((p >> (g.rows() - 1 - r)) & 1) column.set_bit(r, true);
        out.append_column(column);
        rep.appended_columns.push_back(column.to_string());
    }
    rep.output_n = out.cols();
    LinearCode output_code(out);
    if (output_code.dimension() >= 1) rep.output_min_distance = output_code.min_distance();
    return {out, rep};
}

// Independent verifier for embedding minimality: the smallest w such that
// some set of w column types XORed into ell(G) clears the syndrome, found by
// exhausting all supports of each smaller weight first.  Works straight off
// the SO_k columns, no table involved.
inline int min_embedding_columns(const BitMatrix& g, int w_max) {
    Syndrome syn = syndrome_of(g);
    if (syn.is_zero()) return 0;
    int k = g.rows();
    int m = syn.bits.size();
    int length = (1 << k) - 1;
    const BitMatrix& so = detail::cached_so_matrix(k);
    std::vector<uint32_t> col(static_cast<size_t>(length) + 1, 0);
    for (int p = 1; p <= length; ++p)
        for (int r = 0; r < m; ++r)
            col[static_cast<size_t>(p)] =
                (col[static_cast<size_t>(p)] << 1) | static_cast<uint32_t>(so.bit(r, p - 1));
    uint32_t target = static_cast<uint32_t>(syn.to_index());

    for (int w = 1; w <= w_max; ++w) {
        auto search = [&](auto&& self, int depth, int start, uint32_t acc) -> bool {
            if (depth == w - 1) {
                for (int p = start; p <= length; ++p)
                    if ((acc ^ col[static_cast<size_t>(p)]) == target) return true;
                return false;
            }
            int limit = length - (w - 1 - depth);
            for (int p = start; p <= limit; ++p)
                if (self(self, depth + 1, p + 1, acc ^ col[static_cast<size_t>(p)])) return true;
            return false;
        };
        if (search(search, 0, 1, 0)) return w;
    }
    throw limit_error("min_embedding_columns: no embedding within weight " + std::to_string(w_max));
}

}  // namespace socode
