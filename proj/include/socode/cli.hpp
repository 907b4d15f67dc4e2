#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "socode/embedding.hpp"
#include "socode/io.hpp"
#include "socode/linear_code.hpp"
#include "socode/quantum.hpp"
#include "socode/reed_muller.hpp"
#include "socode/search.hpp"
#include "socode/so_analysis.hpp"

// Command-line surface.  Exit codes: 0 success, 1 domain errors (bad files,
// infeasible inputs, exceeded limits), 2 usage errors.  All commands are
// deterministic given identical inputs and configuration; JSON output has
// fixed key order.

namespace socode {

struct Config {
    int max_k = 6;        // largest row count accepted by census commands
    int max_table_k = 6;  // largest k for coset-table commands (7 opt-in)
    int mindist_limit_k = kDefaultMinDistanceLimit;
    int max_dual_dim = kDefaultMaxDualDim;
    std::filesystem::path cache_dir;  // empty: caching disabled
    std::string format = "text";      // text | json
};

namespace detail {

inline CosetLeaderTable table_for(int k, const Config& cfg, std::ostream& err) {
    if (k < 2 || k > cfg.max_table_k) {
        std::string msg = "k = " + std::to_string(k) + " outside supported table range [2, " +
                          std::to_string(cfg.max_table_k) + "]";
        if (k == 7 && cfg.max_table_k == 6) msg += "; pass --allow-k7 to enable";
        throw std::runtime_error(msg);
    }
    TableSource source = TableSource::built;
    CosetLeaderTable t = build_coset_table(k, cfg.cache_dir, cfg.max_table_k >= 7, &source);
    if (source == TableSource::rebuilt_after_invalid_cache)
        err << "warning: invalid coset-table cache for k = " << k << ", rebuilt\n";
    return t;
}

inline void print_rows(std::ostream& out, const BitMatrix& m) {
    for (int r = 0; r < m.rows(); ++r) out << m.row(r).to_string() << "\n";
}

inline json rows_json(const BitMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r).to_string());
    return rows;
}

}  // namespace detail

// Runs one command; args exclude the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"binary self-orthogonal code toolkit", "socode"};
    app.require_subcommand(1);

    Config cfg;
    bool allow_k7 = false;
    std::string cache_dir;
    app.add_option("--max-k", cfg.max_k, "largest row count accepted by census commands")
        ->check(CLI::Range(2, 16))
        ->capture_default_str();
    app.add_option("--mindist-limit", cfg.mindist_limit_k,
                   "largest dimension enumerated for exact minimum distance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-dual-dim", cfg.max_dual_dim,
                   "largest dual dimension accepted when deriving quantum parameters")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "directory for coset-table caches");
    app.add_flag("--allow-k7", allow_k7, "enable the k = 7 coset table (2 GB in memory)");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string in_path, out_path, report_path, bounds_path, seed_name;
    int opt_k = 0, opt_r = 0, opt_m = 0, opt_n = 0;
    int max_puncture = 6;
    uint64_t budget = 2'000'000;
    bool force_budget = false;

    CLI::App* cmd_check =
        app.add_subcommand("check", "self-orthogonality verdict, column census and syndrome");
    cmd_check->add_option("-i,--input", in_path, "generator matrix (MTX1)")->required();

    CLI::App* cmd_embed = app.add_subcommand("embed", "shortest self-orthogonal embedding");
    cmd_embed->add_option("-i,--input", in_path, "generator matrix (MTX1)")->required();
    cmd_embed->add_option("-o,--output", out_path, "destination for the embedded matrix")
        ->required();
    cmd_embed->add_option("--report", report_path, "write a JSON embedding report here");

    CLI::App* cmd_mindist = app.add_subcommand("mindist", "exact minimum distance");
    cmd_mindist->add_option("-i,--input", in_path, "generator matrix (MTX1)")->required();

    CLI::App* cmd_so = app.add_subcommand("so-matrix", "print the self-orthogonality matrix SO_k");
    cmd_so->add_option("-k", opt_k, "row count of the generators SO_k tests")
        ->required()
        ->check(CLI::Range(2, 10));

    CLI::App* cmd_rm = app.add_subcommand("rm", "print a Reed-Muller generator matrix");
    cmd_rm->add_option("-r", opt_r, "order")->required()->check(CLI::Range(0, 16));
    cmd_rm->add_option("-m", opt_m, "number of variables (length 2^m)")
        ->required()
        ->check(CLI::Range(0, 16));

    CLI::App* cmd_covrad =
        app.add_subcommand("covrad", "covering radius from an exhaustive coset-table build");
    cmd_covrad->add_option("-k", opt_k, "table parameter")->required();

    CLI::App* cmd_quantum =
        app.add_subcommand("quantum", "CSS quantum parameters from a self-orthogonal code");
    cmd_quantum->add_option("-i,--input", in_path, "generator matrix (MTX1)")->required();

    CLI::App* cmd_search =
        app.add_subcommand("search", "puncture-and-embed search over a seed code");
    cmd_search->add_option("-i,--input", in_path, "seed generator matrix (MTX1)")->required();
    cmd_search->add_option("--max-puncture", max_puncture, "largest punctured column set")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    cmd_search->add_option("--bounds", bounds_path, "CSV of best known distances (n,k,d)");
    cmd_search->add_option("--budget", budget, "largest number of column subsets to enumerate")
        ->capture_default_str();
    cmd_search->add_flag("--force", force_budget, "enumerate past the subset budget");
    cmd_search->add_option("--seed-name", seed_name,
                           "seed identity recorded in results (default: input file stem)");

    CLI::App* cmd_griesmer = app.add_subcommand("griesmer", "Griesmer upper bound on d(n, k)");
    cmd_griesmer->add_option("-n", opt_n, "length")->required()->check(CLI::PositiveNumber);
    cmd_griesmer->add_option("-k", opt_k, "dimension")->required()->check(CLI::PositiveNumber);

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes the vector back-to-front
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    cfg.max_table_k = allow_k7 ? 7 : 6;
    cfg.cache_dir = cache_dir;
    bool json_out = cfg.format == "json";

    try {
        if (cmd_check->parsed()) {
            MatrixFile mf = parse_matrix(in_path);
            const BitMatrix& g = mf.matrix;
            if (g.rows() > cfg.max_k)
                throw std::runtime_error("check: k = " + std::to_string(g.rows()) +
                                         " exceeds --max-k = " + std::to_string(cfg.max_k));
            bool so = is_self_orthogonal(g);
            EllVector ell = ell_vector(g);
            std::optional<Syndrome> syn;
            if (g.rows() >= 2) syn = syndrome_of(g);
            if (json_out) {
                json j;
                j["n"] = g.cols();
                j["k"] = g.rows();
                j["self_orthogonal"] = so;
                j["ell"] = ell.parity.to_string();
                j["zero_columns"] = ell.zero_columns;
                j["syndrome"] = syn ? json(syn->to_string()) : json(nullptr);
                out << j.dump() << "\n";
            } else {
                out << "[" << g.cols() << "," << g.rows() << "] generator: "
                    << (so ? "self-orthogonal" : "not self-orthogonal") << "\n";
                out << "ell(G) = " << ell.parity.to_string() << " (" << ell.zero_columns
                    << " zero columns)\n";
                if (syn) out << "syndrome = " << syn->to_string() << "\n";
            }
        } else if (cmd_embed->parsed()) {
            MatrixFile mf = parse_matrix(in_path);
            CosetLeaderTable table = detail::table_for(mf.matrix.rows(), cfg, err);
            auto result = embed(mf.matrix, table);
            const EmbeddingReport& rep = result.second;
            write_matrix(out_path, result.first,
                         "self-orthogonal embedding of " +
                             std::filesystem::path(in_path).filename().string());
            if (!report_path.empty()) {
                std::ofstream rf(report_path);
                if (!rf) throw parse_error("cannot open " + report_path + " for writing");
                rf << to_json(rep).dump(2) << "\n";
            }
            if (json_out) {
                json j = to_json(rep);
                j["output_file"] = out_path;
                out << j.dump() << "\n";
            } else {
                out << "input: [" << rep.input_n << "," << rep.k << "]";
                if (rep.input_min_distance) out << " d = " << *rep.input_min_distance;
                out << "\n";
                out << "syndrome = " << rep.syndrome.to_string() << "\n";
                if (rep.was_already_so) {
                    out << "already self-orthogonal; no columns appended\n";
                } else {
                    out << "appended h-indices:";
                    for (int p : rep.leader_support) out << " " << p;
                    out << "\n";
                }
                out << "output: [" << rep.output_n << "," << rep.k << "]";
                if (rep.output_min_distance) out << " d = " << *rep.output_min_distance;
                out << " -> " << out_path << "\n";
            }
        } else if (cmd_mindist->parsed()) {
            MatrixFile mf = parse_matrix(in_path);
            LinearCode c(mf.matrix);
            int d = c.min_distance(cfg.mindist_limit_k);
            if (json_out) {
                json j;
                j["n"] = c.length();
                j["k"] = c.dimension();
                j["d"] = d;
                out << j.dump() << "\n";
            } else {
                out << d << "\n";
            }
        } else if (cmd_so->parsed()) {
            BitMatrix so = so_matrix(opt_k);
            if (json_out) {
                json j;
                j["k"] = opt_k;
                j["rows"] = detail::rows_json(so);
                out << j.dump() << "\n";
            } else {
                detail::print_rows(out, so);
            }
        } else if (cmd_rm->parsed()) {
            BitMatrix rm = rm_generator(opt_r, opt_m);
            if (json_out) {
                json j;
                j["r"] = opt_r;
                j["m"] = opt_m;
                j["rows"] = detail::rows_json(rm);
                out << j.dump() << "\n";
            } else {
                detail::print_rows(out, rm);
            }
        } else if (cmd_covrad->parsed()) {
            CosetLeaderTable table = detail::table_for(opt_k, cfg, err);
            if (json_out) {
                json j;
                j["k"] = opt_k;
                j["covering_radius"] = table.covering_radius();
                out << j.dump() << "\n";
            } else {
                out << table.covering_radius() << "\n";
            }
        } else if (cmd_quantum->parsed()) {
            MatrixFile mf = parse_matrix(in_path);
            LinearCode c(mf.matrix);
            QuantumParams q = css_params(c, cfg.max_dual_dim);
            if (json_out) {
                json j;
                j["n"] = q.n;
                j["k_q"] = q.k_q;
                j["d_q"] = q.d_q;
                j["source"] = q.source;
                out << j.dump() << "\n";
            } else {
                out << "[[" << q.n << "," << q.k_q << "," << q.d_q << "]] from " << q.source
                    << "\n";
            }
        } else if (cmd_search->parsed()) {
            MatrixFile mf = parse_matrix(in_path);
            LinearCode seed(mf.matrix);
            CosetLeaderTable table = detail::table_for(mf.matrix.rows(), cfg, err);
            SearchOptions sopts;
            sopts.t_max = max_puncture;
            sopts.subset_budget = budget;
            sopts.override_budget = force_budget;
            sopts.seed_name =
                seed_name.empty() ? std::filesystem::path(in_path).stem().string() : seed_name;
            if (!bounds_path.empty()) sopts.bounds = load_bounds_csv(bounds_path);
            std::vector<SearchRecord> records = puncture_embed_search(seed, table, sopts);
            for (const SearchRecord& r : records) out << to_json(r).dump() << "\n";
        } else if (cmd_griesmer->parsed()) {
            int d = griesmer_upper(opt_n, opt_k);
            if (json_out) {
                json j;
                j["n"] = opt_n;
                j["k"] = opt_k;
                j["griesmer_upper"] = d;
                out << j.dump() << "\n";
            } else {
                out << d << "\n";
            }
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace socode
