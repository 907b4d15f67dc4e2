#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "socode/bitmat.hpp"
#include "socode/embedding.hpp"
#include "socode/linear_code.hpp"

// Puncture-and-embed search: delete small column sets from a seed code,
// re-embed each puncturing into a self-orthogonal code, and keep the best
// distance found at every resulting length.  This is how the record SO codes
// are produced from good linear seeds.

namespace socode {

enum class Optimality { confirmed_optimal_so, griesmer_gap, unknown };

inline std::string to_string(Optimality o) {
    switch (o) {
        case Optimality::confirmed_optimal_so: return "confirmed-optimal-SO";
        case Optimality::griesmer_gap: return "griesmer-gap";
        default: return "unknown";
    }
}

inline Optimality optimality_from_string(const std::string& s) {
    if (s == "confirmed-optimal-SO") return Optimality::confirmed_optimal_so;
    if (s == "griesmer-gap") return Optimality::griesmer_gap;
    if (s == "unknown") return Optimality::unknown;
    throw std::invalid_argument("optimality_from_string: unrecognised label '" + s + "'");
}

// Best known minimum distances d(n, k), typically loaded from a CSV of code
// tables.  Pairs with no entry fall back to the Griesmer bound.
struct BoundsTable {
    std::map<std::pair<int, int>, int> best;

    std::optional<int> lookup(int n, int k) const {
        auto it = best.find({n, k});
        if (it == best.end()) return std::nullopt;
        return it->second;
    }

    void set(int n, int k, int d) { best[{n, k}] = d; }
};

// Labels an achieved SO distance d against the best upper bound available.
// The best SO distance at (n, k) is 2*floor(d(n,k)/2), so hitting that value
// for the bound in hand settles optimality.  With only the Griesmer bound
// and a shortfall, the label records the gap; a shortfall against a known
// d(n, k) stays unknown (the true d_so may be smaller than the bound allows).
inline Optimality assess_optimality(int n, int k, int d, const BoundsTable& bounds = {}) {
    if (k < 1 || k > n) throw std::invalid_argument("assess_optimality: need 1 <= k <= n");
    if (d < 1 || d % 2 != 0)
        throw std::invalid_argument("assess_optimality: SO distances are positive and even");
    int griesmer = griesmer_upper(n, k);
    if (d > griesmer)
        throw std::invalid_argument("assess_optimality: d = " + std::to_string(d) +
                                    " exceeds the Griesmer bound " + std::to_string(griesmer));
    std::optional<int> known = bounds.lookup(n, k);
    int d_upper = known ? *known : griesmer;
    if (d == 2 * (d_upper / 2)) return Optimality::confirmed_optimal_so;
    if (!known && d < 2 * (griesmer / 2)) return Optimality::griesmer_gap;
    return Optimality::unknown;
}

// One best-at-its-length result of a search.  The provenance fields
// reconstruct the generator exactly: puncture the seed on
// punctured_positions, then append the columns named by appended_h_indices.
struct SearchRecord {
    int n = 0;
    int k = 0;
    int d = 0;
    std::string seed;                           // caller-supplied seed identity
    std::vector<int> punctured_positions;       // 1-based, ascending
    std::vector<int> appended_h_indices;        // coset-leader support, ascending
    std::vector<std::string> appended_columns;  // the same columns as k-bit strings
    Optimality optimality = Optimality::unknown;
};

struct SearchOptions {
    int t_max = 6;                       // largest punctured column set
    std::string seed_name = "seed";
    uint64_t subset_budget = 2'000'000;  // enumeration cap
    bool override_budget = false;
    BoundsTable bounds;
};

// Number of column subsets of size at most t_max, saturating at UINT64_MAX.
inline uint64_t subset_count(int n, int t_max) {
    constexpr uint64_t cap = ~uint64_t{0};
    uint64_t total = 1;  // the empty subset
    uint64_t c = 1;
    for (int i = 1; i <= std::min(t_max, n); ++i) {
        uint64_t factor = static_cast<uint64_t>(n - i + 1);
        if (c > cap / factor) return cap;
        c = c * factor / static_cast<uint64_t>(i);
        if (cap - total < c) return cap;
        total += c;
    }
    return total;
}

// Rebuilds the generator a SearchRecord describes from its seed.
inline std::pair<BitMatrix, EmbeddingReport> reconstruct(const LinearCode& seed,
                                                         const CosetLeaderTable& table,
                                                         const SearchRecord& rec) {
    BitMatrix punctured =
        rec.punctured_positions.empty()
            ? seed.generator()
            : seed.generator().without_columns(
                  detail::checked_positions(rec.punctured_positions, seed.length(), "reconstruct"));
    return embed(punctured, table);
}

// For every column subset P with |P| <= t_max: puncture the seed on P, skip
// the puncturing if its rank drops, embed the rest, and record (n', k, d).
// Only the best d per resulting length survives; among equal d the earliest
// subset in the enumeration order (size ascending, colexicographic within a
// size) wins, which makes the output deterministic.
inline std::vector<SearchRecord> puncture_embed_search(const LinearCode& seed,
                                                       const CosetLeaderTable& table,
                                                       const SearchOptions& opts = {}) {
    const BitMatrix& g = seed.generator();
    if (g.rows() != table.k())
        throw std::invalid_argument("puncture_embed_search: seed row count does not match table k");
    if (seed.dimension() != g.rows())
        throw std::invalid_argument("puncture_embed_search: seed generator must have full rank");
    if (opts.t_max < 0) throw std::invalid_argument("puncture_embed_search: t_max must be >= 0");
    int n = seed.length();
    int t_cap = std::min(opts.t_max, n);
    uint64_t planned = subset_count(n, t_cap);
    if (planned > opts.subset_budget && !opts.override_budget)
        throw limit_error("puncture_embed_search: " + std::to_string(planned) +
                          " column subsets exceed the budget of " +
                          std::to_string(opts.subset_budget) + "; raise the budget or override");

    std::map<int, SearchRecord> best_by_length;
    std::vector<int> zero_based;
    auto consider = [&](const std::vector<int>& subset) {
        BitMatrix punctured = g;
        if (!subset.empty()) {
            zero_based.assign(subset.begin(), subset.end());
            for (int& p : zero_based) --p;
            punctured = g.without_columns(zero_based);
        }
        if (rank(punctured) != g.rows()) return;  // dimension must stay k
        auto embedded = embed(punctured, table);
        const EmbeddingReport& rep = embedded.second;
        SearchRecord rec;
        rec.n = rep.output_n;
        rec.k = g.rows();
        rec.d = *rep.output_min_distance;
        rec.seed = opts.seed_name;
        rec.punctured_positions = subset;
        rec.appended_h_indices = rep.leader_support;
        rec.appended_columns = rep.appended_columns;
        rec.optimality = assess_optimality(rec.n, rec.k, rec.d, opts.bounds);
        int key = rec.n;
        auto it = best_by_length.find(key);
        if (it == best_by_length.end())
            best_by_length.emplace(key, std::move(rec));
        else if (rec.d > it->second.d)
            it->second = std::move(rec);
    };

    consider({});
    for (int t = 1; t <= t_cap; ++t) {
        std::vector<int> c(static_cast<size_t>(t));
        for (int i = 0; i < t; ++i) c[static_cast<size_t>(i)] = i + 1;
        while (true) {
            consider(c);
            int i = 0;
            while (i < t) {
                int next = (i + 1 < t) ? c[static_cast<size_t>(i) + 1] : n + 1;
                if (c[static_cast<size_t>(i)] + 1 < next) break;
                ++i;
            }
            if (i == t) break;
            ++c[static_cast<size_t>(i)];
            for (int j = 0; j < i; ++j) c[static_cast<size_t>(j)] = j + 1;
        }
    }

    std::vector<SearchRecord> out;
    out.reserve(best_by_length.size());
    for (auto& [len, rec] : best_by_length) out.push_back(std::move(rec));
    return out;
}

// One length's entry in a conjecture scan: its residue class, what the
// conjectures say about it, and what the supplied records show.
struct ConjectureEntry {
    int n = 0;
    int residue = 0;  // n mod 31 for k = 5, n mod 63 for k = 6
    std::string conjecture_class;
    std::optional<int> best_d;
    bool has_confirmed_optimal = false;
    std::string verdict;  // supports | contradicts | no-evidence | outside-conjectures
};

namespace detail {

// k = 5 classes: lengths conjectured to admit optimal SO codes
// (n >= 32, n = 14, 22, 29 mod 31) and lengths conjectured to fall two short
// (n in {14, 21, 22, 28, 29}, or n >= 32 with n = 6, 13, 21, 28 mod 31).
inline std::string residue_class_k5(int n, int residue) {
    if (n >= 32 && (residue == 14 || residue == 22 || residue == 29)) return "optimal-conjectured";
    if (n == 14 || n == 21 || n == 22 || n == 28 || n == 29) return "gap-conjectured";
    if (n >= 32 && (residue == 6 || residue == 13 || residue == 21 || residue == 28))
        return "gap-conjectured";
    return "unclassified";
}

// k = 6 classes: the settled range 41 <= n with the listed exceptions --
// three individual lengths and eight residues mod 63.
inline std::string residue_class_k6(int n, int residue) {
    if (n == 46 || n == 54 || n == 61) return "excluded-length";
    switch (residue) {
        case 7: case 14: case 22: case 29: case 38: case 45: case 53: case 60:
            return "excluded-residue";
        default: break;
    }
    return n < 41 ? "below-range" : "covered";
}

}  // namespace detail

// Classifies each length in [n_lo, n_hi] by its residue class and reports
// whether the supplied records carry a confirmed-optimal SO code there.
// Evidence only: a confirmed record at an "optimal-conjectured" or "covered"
// length supports the claim, one at a "gap-conjectured" length contradicts
// it, and absence of a record proves nothing.
inline std::vector<ConjectureEntry> conjecture_scan(int k, int n_lo, int n_hi,
                                                    const std::vector<SearchRecord>& records) {
    if (k != 5 && k != 6)
        throw std::invalid_argument("conjecture_scan: residue classifications exist for k = 5 and 6");
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("conjecture_scan: bad length range");
    int mod = (k == 5) ? 31 : 63;

    struct Seen {
        int best_d = 0;
        bool confirmed = false;
    };
    std::map<int, Seen> by_length;
    for (const SearchRecord& r : records) {
        if (r.k != k) continue;
        Seen& s = by_length[r.n];
        s.best_d = std::max(s.best_d, r.d);
        if (r.optimality == Optimality::confirmed_optimal_so) s.confirmed = true;
    }

    std::vector<ConjectureEntry> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        ConjectureEntry e;
        e.n = n;
        e.residue = n % mod;
        e.conjecture_class =
            (k == 5) ? detail::residue_class_k5(n, e.residue) : detail::residue_class_k6(n, e.residue);
        auto it = by_length.find(n);
        if (it != by_length.end()) {
            e.best_d = it->second.best_d;
            e.has_confirmed_optimal = it->second.confirmed;
        }
        bool positive_claim = e.conjecture_class == "optimal-conjectured" ||
                              e.conjecture_class == "covered";
        if (positive_claim)
            e.verdict = e.has_confirmed_optimal ? "supports" : "no-evidence";
        else if (e.conjecture_class == "gap-conjectured")
            e.verdict = e.has_confirmed_optimal ? "contradicts" : "no-evidence";
        else
            e.verdict = "outside-conjectures";
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace socode
