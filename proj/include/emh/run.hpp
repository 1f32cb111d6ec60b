#pragma once

// orchestration for the compute subcommand: resolve the input source,
// run the first-diagonal pipeline, optionally replay everything through
// the definition-level oracle, and render the report.

#include <optional>
#include <string>

#include "emh/generators.hpp"
#include "emh/homology.hpp"
#include "emh/io.hpp"
#include "emh/oracle.hpp"
#include "emh/report.hpp"

namespace emh {

// exit-code contract shared by the library and the cli front end
enum class exit_code : int {
    ok = 0,
    usage = 2,           // bad flags, bad values, invalid requests
    parse = 3,           // malformed input text (edge lists, specs)
    resource = 4,        // configured cap exceeded
    oracle_mismatch = 5, // cross-check against the oracle failed
    io = 6,              // unreadable input / unwritable output
    internal = 7,        // broken invariant; please report
};

struct oracle_mismatch_error : std::runtime_error {
    explicit oracle_mismatch_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct run_config {
    std::optional<std::string> input_path;
    std::optional<std::string> generator; // spec text
    std::optional<std::uint32_t> k_max;   // nullopt: auto
    field_spec field;
    bool oracle_check = false;
    enum format_t { text, json, csv } format = text;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    std::size_t max_nnz = default_max_nnz;
    std::size_t oracle_cap = 10;
};

struct run_result {
    graph g;
    betti_report report;
    std::string rendered;
};

inline graph resolve_input(const run_config& cfg, report_context& ctx) {
    if (cfg.input_path && cfg.generator)
        throw domain_error("exactly one input source allowed: --input or --gen");
    if (cfg.input_path) {
        ctx.input_kind = "file";
        ctx.input_name = *cfg.input_path;
        return read_edge_list_file(*cfg.input_path);
    }
    if (cfg.generator) {
        generator_spec spec = parse_generator_spec(*cfg.generator);
        ctx.input_kind = "generator";
        ctx.input_name = spec.text;
        if (spec.family == "er") {
            std::optional<std::uint64_t> seed = spec.seed;
            if (cfg.seed) {
                if (seed && *seed != *cfg.seed)
                    throw domain_error("er seed given twice with different values");
                seed = cfg.seed;
            }
            ctx.seed = seed; // recorded for reproducibility
        }
        return build_generator(spec, cfg.seed);
    }
    throw domain_error("an input source is required: --input FILE or --gen SPEC");
}

// per-k agreement between the pipeline and the definition-level oracle
inline void oracle_cross_check(const graph& g, const betti_report& report, std::size_t cap) {
    oracle_options opt{cap};
    for (const auto& row : report.rows) {
        chain_basis diag = oracle_chain_basis(g, row.k, row.k, opt);
        if (diag.size() != row.dim_diag)
            throw oracle_mismatch_error("oracle mismatch at k=" + std::to_string(row.k) +
                                        ": |EMC_{k,k}| fda=" + std::to_string(row.dim_diag) +
                                        " oracle=" + std::to_string(diag.size()));
        if (row.k >= 1) {
            chain_basis sub = oracle_chain_basis(g, row.k - 1, row.k, opt);
            if (sub.size() != row.dim_subdiag)
                throw oracle_mismatch_error(
                    "oracle mismatch at k=" + std::to_string(row.k) + ": |EMC_{k-1,k}| fda=" +
                    std::to_string(row.dim_subdiag) + " oracle=" + std::to_string(sub.size()));
        }
        std::size_t betti = oracle_betti(g, row.k, row.k, opt);
        if (betti != row.betti)
            throw oracle_mismatch_error("oracle mismatch at k=" + std::to_string(row.k) +
                                        ": betti fda=" + std::to_string(row.betti) +
                                        " oracle=" + std::to_string(betti));
    }
}

inline run_result run_compute(const run_config& cfg) {
    report_context ctx;
    ctx.k_max = cfg.k_max;
    ctx.workers = cfg.workers;
    graph g = resolve_input(cfg, ctx);
    ctx.n = g.vertex_count();
    ctx.m = g.edge_count();

    homology_options opt{cfg.k_max, cfg.field, cfg.workers, cfg.max_nnz};
    betti_report report = betti_first_diagonal(g, opt);
    if (cfg.oracle_check) oracle_cross_check(g, report, cfg.oracle_cap);

    run_result result{std::move(g), std::move(report), {}};
    switch (cfg.format) {
        case run_config::json: result.rendered = render_json(result.report, ctx); break;
        case run_config::csv: result.rendered = render_csv(result.report); break;
        default: result.rendered = render_text(result.report, ctx); break;
    }
    return result;
}

} // namespace emh
