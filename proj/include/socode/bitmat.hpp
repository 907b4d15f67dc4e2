#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Dense bit-packed linear algebra over GF(2).
//
// BitVector and BitMatrix use 0-based bit indices.  The coding-theory layers
// on top (pivot lists, column positions, coset-leader supports) are 1-based,
// matching the usual h_i / c_j conventions; the conversion happens there.

namespace socode {

class BitVector {
  public:
    BitVector() = default;

    explicit BitVector(int length) : len_(length), words_(word_count(length), 0) {
        if (length < 0) throw std::invalid_argument("BitVector: negative length");
    }

    // Parses a string of '0'/'1' characters; whitespace is skipped.
    static BitVector from_string(std::string_view s) {
        std::vector<bool> bits;
        for (char ch : s) {
            if (ch == '0' || ch == '1')
                bits.push_back(ch == '1');
            else if (ch != ' ' && ch != '\t')
                throw std::invalid_argument(std::string("BitVector: invalid character '") + ch + "'");
        }
        BitVector v(static_cast<int>(bits.size()));
        for (int i = 0; i < v.len_; ++i)
            if (bits[static_cast<size_t>(i)]) v.set_bit(i, true);
        return v;
    }

    int size() const { return len_; }

    bool bit(int i) const {
        check_index(i);
        return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void set_bit(int i, bool v) {
        check_index(i);
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v)
            words_[static_cast<size_t>(i) >> 6] |= mask;
        else
            words_[static_cast<size_t>(i) >> 6] &= ~mask;
    }

    void flip_bit(int i) {
        check_index(i);
        words_[static_cast<size_t>(i) >> 6] ^= uint64_t{1} << (i & 63);
    }

    int weight() const {
        int w = 0;
        for (uint64_t word : words_) w += std::popcount(word);
        return w;
    }

    bool is_zero() const {
        for (uint64_t word : words_)
            if (word != 0) return false;
        return true;
    }

    BitVector& operator^=(const BitVector& other) {
        if (other.len_ != len_) throw std::invalid_argument("BitVector: length mismatch in xor");
        for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::string to_string() const {
        std::string s(static_cast<size_t>(len_), '0');
        for (int i = 0; i < len_; ++i)
            if (bit(i)) s[static_cast<size_t>(i)] = '1';
        return s;
    }

    std::span<const uint64_t> words() const { return words_; }

  private:
    static size_t word_count(int length) { return (static_cast<size_t>(length) + 63) / 64; }

    void check_index(int i) const {
        if (i < 0 || i >= len_) throw std::out_of_range("BitVector: bit index out of range");
    }

    int len_ = 0;
    std::vector<uint64_t> words_;
};

// Inner product x.y over GF(2): parity of the AND of the two vectors.
inline bool dot(const BitVector& x, const BitVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
    auto xw = x.words();
    auto yw = y.words();
    uint64_t acc = 0;
    for (size_t i = 0; i < xw.size(); ++i) acc ^= xw[i] & yw[i];
    return std::popcount(acc) & 1;
}

class BitMatrix {
  public:
    BitMatrix() = default;

    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), stride_((static_cast<size_t>(cols) + 63) / 64),
          data_(static_cast<size_t>(rows) * stride_, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix: negative dimension");
    }

    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set_bit(i, i, true);
        return m;
    }

    // Parses rows of '0'/'1' separated by newlines or ';'.  All rows must have
    // the same length; whitespace inside a row is skipped.
    static BitMatrix from_string(std::string_view s) {
        std::vector<BitVector> rows;
        size_t start = 0;
        while (start <= s.size()) {
            size_t end = s.find_first_of("\n;", start);
            if (end == std::string_view::npos) end = s.size();
            std::string_view line = s.substr(start, end - start);
            bool has_digit = line.find_first_of("01") != std::string_view::npos;
            if (has_digit) rows.push_back(BitVector::from_string(line));
            start = end + 1;
        }
        if (rows.empty()) throw std::invalid_argument("BitMatrix: empty input");
        BitMatrix m(static_cast<int>(rows.size()), rows[0].size());
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_)
                throw std::invalid_argument("BitMatrix: ragged rows in input");
            m.set_row(static_cast<int>(r), rows[r]);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool bit(int r, int c) const {
        check(r, c);
        return (data_[word_index(r, c)] >> (c & 63)) & 1u;
    }

    void set_bit(int r, int c, bool v) {
        check(r, c);
        uint64_t mask = uint64_t{1} << (c & 63);
        if (v)
            data_[word_index(r, c)] |= mask;
        else
            data_[word_index(r, c)] &= ~mask;
    }

    BitVector row(int r) const {
        check_row(r);
        BitVector v(cols_);
        for (int c = 0; c < cols_; ++c)
            if (bit(r, c)) v.set_bit(c, true);
        return v;
    }

    void set_row(int r, const BitVector& v) {
        check_row(r);
        if (v.size() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
        auto w = v.words();
        for (size_t i = 0; i < stride_; ++i) data_[static_cast<size_t>(r) * stride_ + i] = w[i];
    }

    std::span<const uint64_t> row_words(int r) const {
        check_row(r);
        return {data_.data() + static_cast<size_t>(r) * stride_, stride_};
    }

    // rows[dst] ^= rows[src]
    void xor_row_into(int src, int dst) {
        check_row(src);
        check_row(dst);
        const uint64_t* sp = data_.data() + static_cast<size_t>(src) * stride_;
        uint64_t* dp = data_.data() + static_cast<size_t>(dst) * stride_;
        for (size_t i = 0; i < stride_; ++i) dp[i] ^= sp[i];
    }

    // rows[dst] ^= src.rows[src_row]; both matrices must have the same width.
    void xor_row_from(const BitMatrix& src, int src_row, int dst) {
        src.check_row(src_row);
        check_row(dst);
        if (src.cols_ != cols_) throw std::invalid_argument("xor_row_from: width mismatch");
        const uint64_t* sp = src.data_.data() + static_cast<size_t>(src_row) * stride_;
        uint64_t* dp = data_.data() + static_cast<size_t>(dst) * stride_;
        for (size_t i = 0; i < stride_; ++i) dp[i] ^= sp[i];
    }

    void swap_rows(int a, int b) {
        check_row(a);
        check_row(b);
        if (a == b) return;
        uint64_t* pa = data_.data() + static_cast<size_t>(a) * stride_;
        uint64_t* pb = data_.data() + static_cast<size_t>(b) * stride_;
        for (size_t i = 0; i < stride_; ++i) std::swap(pa[i], pb[i]);
    }

    bool row_is_zero(int r) const {
        auto w = row_words(r);
        for (uint64_t word : w)
            if (word != 0) return false;
        return true;
    }

    bool is_zero() const {
        for (uint64_t word : data_)
            if (word != 0) return false;
        return true;
    }

    // Column c read as an MSB-first integer: row 0 contributes the top bit.
    // This is the h_t labelling used throughout: a column equal to the binary
    // representation of t has column_value t.  Requires rows <= 31.
    uint32_t column_value(int c) const {
        if (rows_ > 31) throw std::invalid_argument("column_value: too many rows");
        uint32_t t = 0;
        for (int r = 0; r < rows_; ++r) t = (t << 1) | static_cast<uint32_t>(bit(r, c));
        return t;
    }

    void append_column(const BitVector& col) {
        if (col.size() != rows_) throw std::invalid_argument("append_column: length mismatch");
        BitMatrix out(rows_, cols_ + 1);
        for (int r = 0; r < rows_; ++r) {
            for (size_t i = 0; i < stride_; ++i)
                out.data_[static_cast<size_t>(r) * out.stride_ + i] =
                    data_[static_cast<size_t>(r) * stride_ + i];
            if (col.bit(r)) out.set_bit(r, cols_, true);
        }
        *this = std::move(out);
    }

    // Removes the listed columns (0-based, sorted, distinct).
    BitMatrix without_columns(const std::vector<int>& sorted_cols) const {
        for (size_t i = 0; i < sorted_cols.size(); ++i) {
            if (sorted_cols[i] < 0 || sorted_cols[i] >= cols_)
                throw std::out_of_range("without_columns: index out of range");
            if (i > 0 && sorted_cols[i] <= sorted_cols[i - 1])
                throw std::invalid_argument("without_columns: columns not strictly increasing");
        }
        BitMatrix out(rows_, cols_ - static_cast<int>(sorted_cols.size()));
        for (int r = 0; r < rows_; ++r) {
            int dst = 0;
            size_t skip = 0;
            for (int c = 0; c < cols_; ++c) {
                if (skip < sorted_cols.size() && sorted_cols[skip] == c) {
                    ++skip;
                    continue;
                }
                if (bit(r, c)) out.set_bit(r, dst, true);
                ++dst;
            }
        }
        return out;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    std::string to_string() const {
        std::string s;
        for (int r = 0; r < rows_; ++r) {
            if (r) s += '\n';
            for (int c = 0; c < cols_; ++c) s += bit(r, c) ? '1' : '0';
        }
        return s;
    }

  private:
    size_t word_index(int r, int c) const {
        return static_cast<size_t>(r) * stride_ + (static_cast<size_t>(c) >> 6);
    }

    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("BitMatrix: index out of range");
    }

    void check_row(int r) const {
        if (r < 0 || r >= rows_) throw std::out_of_range("BitMatrix: row index out of range");
    }

    int rows_ = 0;
    int cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

struct RrefResult {
    BitMatrix matrix;
    std::vector<int> pivots;  // pivot columns, 1-based, strictly increasing
};

// Reduced row-echelon form over GF(2).  Inputs are never modified.
inline RrefResult rref(const BitMatrix& m) {
    RrefResult result{m, {}};
    BitMatrix& a = result.matrix;
    int pivot_row = 0;
    for (int c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        int r = pivot_row;
        while (r < a.rows() && !a.bit(r, c)) ++r;
        if (r == a.rows()) continue;
        a.swap_rows(r, pivot_row);
        for (int i = 0; i < a.rows(); ++i)
            if (i != pivot_row && a.bit(i, c)) a.xor_row_into(pivot_row, i);
        result.pivots.push_back(c + 1);
        ++pivot_row;
    }
    return result;
}

inline int rank(const BitMatrix& m) {
    // Forward elimination only; cheaper than full rref.
    BitMatrix a = m;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int p = r;
        while (p < a.rows() && !a.bit(p, c)) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        for (int i = r + 1; i < a.rows(); ++i)
            if (a.bit(i, c)) a.xor_row_into(r, i);
        ++r;
    }
    return r;
}

// C = A * B over GF(2), accumulated row-wise: row i of C is the XOR of the
// rows of B selected by the set bits of row i of A.
inline BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    BitMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.bit(i, j)) c.xor_row_from(b, j, i);
    return c;
}

inline BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.bit(r, c)) t.set_bit(c, r, true);
    return t;
}

// Basis of the right kernel {x : M x^T = 0}, one basis vector per row.
// Row count is always cols - rank(M).
inline BitMatrix nullspace(const BitMatrix& m) {
    RrefResult rr = rref(m);
    int n = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : rr.pivots) is_pivot[static_cast<size_t>(p - 1)] = true;
    BitMatrix basis(n - static_cast<int>(rr.pivots.size()), n);
    int out = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        basis.set_bit(out, f, true);
        for (size_t pr = 0; pr < rr.pivots.size(); ++pr)
            if (rr.matrix.bit(static_cast<int>(pr), f))
                basis.set_bit(out, rr.pivots[pr] - 1, true);
        ++out;
    }
    return basis;
}

// Canonical basis of the row space: nonzero rows of the rref.
inline BitMatrix row_basis(const BitMatrix& m) {
    RrefResult rr = rref(m);
    BitMatrix basis(static_cast<int>(rr.pivots.size()), m.cols());
    for (int r = 0; r < basis.rows(); ++r) basis.set_row(r, rr.matrix.row(r));
    return basis;
}

// Two matrices span the same row space iff their canonical bases coincide.
inline bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return row_basis(a) == row_basis(b);
}

}  // namespace socode
