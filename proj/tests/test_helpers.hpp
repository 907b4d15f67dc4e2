#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "socode/socode.hpp"

// Shared test utilities: seeded random matrices and naive reference
// implementations kept deliberately independent of the library's bit-packed
// code paths (plain int arithmetic, no words, no popcount).

namespace test_util {

inline std::filesystem::path data_dir() { return SOCODE_DATA_DIR; }

inline std::filesystem::path data_file(const std::string& name) { return data_dir() / name; }

inline socode::BitMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
    socode::BitMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng() & 1) m.set_bit(r, c, true);
    return m;
}

inline std::vector<std::vector<int>> to_ints(const socode::BitMatrix& m) {
    std::vector<std::vector<int>> rows(static_cast<size_t>(m.rows()),
                                       std::vector<int>(static_cast<size_t>(m.cols()), 0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.bit(r, c);
    return rows;
}

inline int naive_rank(std::vector<std::vector<int>> rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    int r = 0;
    for (size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (size_t i = static_cast<size_t>(r); i < rows.size(); ++i)
            if (rows[i][c]) {
                pivot = static_cast<int>(i);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(pivot)]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != r && rows[i][c])
                for (size_t j = 0; j < cols; ++j) rows[i][j] ^= rows[static_cast<size_t>(r)][j];
        ++r;
    }
    return r;
}

// Minimum nonzero weight over all row combinations; 0 when only the zero
// word exists.  Plain subset enumeration, no Gray code.
inline int naive_min_distance(const socode::BitMatrix& m) {
    auto rows = to_ints(m);
    int k = m.rows();
    int best = m.cols() + 1;
    bool any = false;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> word(static_cast<size_t>(m.cols()), 0);
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1)
                for (int j = 0; j < m.cols(); ++j) word[static_cast<size_t>(j)] ^= rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        int w = 0;
        for (int v : word) w += v;
        if (w > 0) {
            any = true;
            best = std::min(best, w);
        }
    }
    return any ? best : 0;
}

inline bool naive_self_orthogonal(const socode::BitMatrix& m) {
    auto rows = to_ints(m);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i; j < rows.size(); ++j) {
            int acc = 0;
            for (size_t c = 0; c < rows[i].size(); ++c) acc += rows[i][c] * rows[j][c];
            if (acc % 2) return false;
        }
    return true;
}

// Fresh scratch directory under the system temp dir; wiped first.
inline std::filesystem::path scratch_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("socode_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace test_util
