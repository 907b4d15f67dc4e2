#pragma once

#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "socode/bitmat.hpp"
#include "socode/embedding.hpp"
#include "socode/search.hpp"
#include "socode/so_analysis.hpp"

// File formats and report serialization.
//
// Matrix files ("MTX1"): '#' lines are comments, the first content line is
// `k n`, then k rows of n digits from {0, 1} with optional whitespace between
// digits.  Bounds tables are CSV with an `n,k,d` header.  Reports are JSON
// with fixed key order so output is stable across runs.

namespace socode {

class parse_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct MatrixFile {
    std::filesystem::path path;
    int k = 0;
    int n = 0;
    BitMatrix matrix;
};

namespace detail {

inline bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;  // all whitespace
}

[[noreturn]] inline void parse_fail(const std::string& name, int line_no, const std::string& what) {
    throw parse_error(name + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace detail

// Parses the MTX1 format from a stream; `name` labels error messages
// (normally the file path).
inline MatrixFile parse_matrix_stream(std::istream& is, const std::string& name) {
    MatrixFile out;
    std::string line;
    int line_no = 0;
    int header_line = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (detail::blank_or_comment(line)) continue;
        std::istringstream header(line);
        long k = 0, n = 0;
        std::string trailing;
        if (!(header >> k >> n) || (header >> trailing))
            detail::parse_fail(name, line_no, "malformed header, expected 'k n'");
        if (k < 1 || n < 1 || k > (1 << 16) || n > (1 << 24))
            detail::parse_fail(name, line_no, "header dimensions out of range");
        out.k = static_cast<int>(k);
        out.n = static_cast<int>(n);
        header_line = line_no;
        break;
    }
    if (header_line == 0) detail::parse_fail(name, line_no + 1, "missing header, expected 'k n'");

    out.matrix = BitMatrix(out.k, out.n);
    int row = 0;
    while (row < out.k && std::getline(is, line)) {
        ++line_no;
        if (detail::blank_or_comment(line)) continue;
        int col = 0;
        for (char ch : line) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (ch != '0' && ch != '1')
                detail::parse_fail(name, line_no,
                                   std::string("invalid character '") + ch + "' in matrix row");
            if (col >= out.n)
                detail::parse_fail(name, line_no,
                                   "row " + std::to_string(row + 1) + " longer than " +
                                       std::to_string(out.n) + " columns");
            if (ch == '1') out.matrix.set_bit(row, col, true);
            ++col;
        }
        if (col != out.n)
            detail::parse_fail(name, line_no,
                               "row " + std::to_string(row + 1) + " has " + std::to_string(col) +
                                   " columns, expected " + std::to_string(out.n));
        ++row;
    }
    if (row != out.k)
        detail::parse_fail(name, line_no + 1,
                           "expected " + std::to_string(out.k) + " rows, found " +
                               std::to_string(row));
    while (std::getline(is, line)) {
        ++line_no;
        if (!detail::blank_or_comment(line))
            detail::parse_fail(name, line_no, "unexpected content after matrix rows");
    }
    return out;
}

inline MatrixFile parse_matrix(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw parse_error("cannot open " + path.string());
    MatrixFile out = parse_matrix_stream(is, path.string());
    out.path = path;
    return out;
}

inline void write_matrix_stream(std::ostream& os, const BitMatrix& m,
                                const std::string& comment = "") {
    if (!comment.empty()) {
        std::istringstream lines(comment);
        std::string line;
        while (std::getline(lines, line)) os << "# " << line << "\n";
    }
    os << m.rows() << " " << m.cols() << "\n";
    for (int r = 0; r < m.rows(); ++r) os << m.row(r).to_string() << "\n";
}

inline void write_matrix(const std::filesystem::path& path, const BitMatrix& m,
                         const std::string& comment = "") {
    std::ofstream os(path);
    if (!os) throw parse_error("cannot open " + path.string() + " for writing");
    write_matrix_stream(os, m, comment);
    if (!os) throw parse_error("write failed for " + path.string());
}

// CSV of best known minimum distances: header `n,k,d`, one record per line.
inline BoundsTable load_bounds_csv_stream(std::istream& is, const std::string& name) {
    BoundsTable table;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (detail::blank_or_comment(line)) continue;
        std::string compact;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
        if (!header_seen) {
            if (compact != "n,k,d")
                detail::parse_fail(name, line_no, "expected header 'n,k,d', got '" + compact + "'");
            header_seen = true;
            continue;
        }
        std::istringstream fields(compact);
        int n = 0, k = 0, d = 0;
        char c1 = 0, c2 = 0;
        if (!(fields >> n >> c1 >> k >> c2 >> d) || c1 != ',' || c2 != ',' || fields.peek() != EOF)
            detail::parse_fail(name, line_no, "expected 'n,k,d' integers, got '" + compact + "'");
        if (n < 1 || k < 1 || k > n || d < 1 || d > n)
            detail::parse_fail(name, line_no, "implausible bound " + compact);
        if (table.lookup(n, k))
            detail::parse_fail(name, line_no,
                               "duplicate entry for n=" + std::to_string(n) +
                                   ", k=" + std::to_string(k));
        table.set(n, k, d);
    }
    if (!header_seen) detail::parse_fail(name, line_no + 1, "empty bounds file");
    return table;
}

inline BoundsTable load_bounds_csv(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw parse_error("cannot open " + path.string());
    return load_bounds_csv_stream(is, path.string());
}

using json = nlohmann::ordered_json;

inline json to_json(const EmbeddingReport& rep) {
    json j;
    j["input"] = {{"n", rep.input_n}, {"k", rep.k}};
    j["input"]["min_distance"] =
        rep.input_min_distance ? json(*rep.input_min_distance) : json(nullptr);
    j["syndrome"] = rep.syndrome.to_string();
    j["was_already_so"] = rep.was_already_so;
    j["leader_support"] = rep.leader_support;
    j["appended_columns"] = rep.appended_columns;
    j["output"] = {{"n", rep.output_n}, {"k", rep.k}};
    j["output"]["min_distance"] =
        rep.output_min_distance ? json(*rep.output_min_distance) : json(nullptr);
    return j;
}

inline EmbeddingReport embedding_report_from_json(const json& j) {
    EmbeddingReport rep;
    rep.input_n = j.at("input").at("n").get<int>();
    rep.k = j.at("input").at("k").get<int>();
    if (!j.at("input").at("min_distance").is_null())
        rep.input_min_distance = j.at("input").at("min_distance").get<int>();
    rep.syndrome.k = rep.k;
    rep.syndrome.bits = BitVector::from_string(j.at("syndrome").get<std::string>());
    rep.was_already_so = j.at("was_already_so").get<bool>();
    rep.leader_support = j.at("leader_support").get<std::vector<int>>();
    rep.appended_columns = j.at("appended_columns").get<std::vector<std::string>>();
    rep.output_n = j.at("output").at("n").get<int>();
    if (!j.at("output").at("min_distance").is_null())
        rep.output_min_distance = j.at("output").at("min_distance").get<int>();
    return rep;
}

inline json to_json(const SearchRecord& rec) {
    json j;
    j["n"] = rec.n;
    j["k"] = rec.k;
    j["d"] = rec.d;
    j["seed"] = rec.seed;
    j["punctured_positions"] = rec.punctured_positions;
    j["appended_h_indices"] = rec.appended_h_indices;
    j["appended_columns"] = rec.appended_columns;
    j["optimality"] = to_string(rec.optimality);
    return j;
}

inline SearchRecord search_record_from_json(const json& j) {
    SearchRecord rec;
    rec.n = j.at("n").get<int>();
    rec.k = j.at("k").get<int>();
    rec.d = j.at("d").get<int>();
    rec.seed = j.at("seed").get<std::string>();
    rec.punctured_positions = j.at("punctured_positions").get<std::vector<int>>();
    rec.appended_h_indices = j.at("appended_h_indices").get<std::vector<int>>();
    rec.appended_columns = j.at("appended_columns").get<std::vector<std::string>>();
    rec.optimality = optimality_from_string(j.at("optimality").get<std::string>());
    return rec;
}

inline json to_json(const ConjectureEntry& e) {
    json j;
    j["n"] = e.n;
    j["residue"] = e.residue;
    j["class"] = e.conjecture_class;
    j["best_d"] = e.best_d ? json(*e.best_d) : json(nullptr);
    j["has_confirmed_optimal"] = e.has_confirmed_optimal;
    j["verdict"] = e.verdict;
    return j;
}

}  // namespace socode
