#pragma once

// report rendering.  json and csv are machine formats and must be
// byte-stable across runs and worker counts, so they carry no wall-clock
// fields and no worker echo; the human text table gets the timing.

#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "emh/homology.hpp"

namespace emh {

struct report_context {
    std::string input_kind; // "file" or "generator"
    std::string input_name; // path or spec text
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> k_max; // nullopt: auto
    std::size_t n = 0;
    std::size_t m = 0;
    unsigned workers = 1; // echoed in text output only
};

inline constexpr int report_schema_version = 1;

inline std::string render_json(const betti_report& report, const report_context& ctx) {
    nlohmann::ordered_json j;
    j["schema_version"] = report_schema_version;
    nlohmann::ordered_json input;
    input["kind"] = ctx.input_kind;
    input[ctx.input_kind == "file" ? "path" : "spec"] = ctx.input_name;
    if (ctx.seed) input["seed"] = *ctx.seed;
    j["input"] = input;
    j["n"] = ctx.n;
    j["edges"] = ctx.m;
    if (ctx.k_max)
        j["k_max"] = *ctx.k_max;
    else
        j["k_max"] = "auto";
    j["field"] = report.field.name();
    j["op_counter"] = report.op_counter;
    j["observed_max_k"] = report.observed_max_k;
    nlohmann::ordered_json betti;
    for (const auto& row : report.rows) betti[std::to_string(row.k)] = row.betti;
    j["betti"] = betti;
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const auto& row : report.rows)
        table.push_back({{"k", row.k},
                         {"dim_diag", row.dim_diag},
                         {"dim_subdiag", row.dim_subdiag},
                         {"rank", row.rank},
                         {"betti", row.betti}});
    j["table"] = table;
    return j.dump(2) + "\n";
}

inline std::string render_csv(const betti_report& report) {
    std::ostringstream out;
    out << "k,dim_diag,dim_subdiag,rank,betti\n";
    for (const auto& row : report.rows)
        out << row.k << ',' << row.dim_diag << ',' << row.dim_subdiag << ',' << row.rank << ','
            << row.betti << '\n';
    return out.str();
}

inline std::string render_text(const betti_report& report, const report_context& ctx) {
    std::ostringstream out;
    out << "graph: n=" << ctx.n << " m=" << ctx.m << " (" << ctx.input_kind << " "
        << ctx.input_name;
    if (ctx.seed) out << ", seed " << *ctx.seed;
    out << ")\n";
    out << "field: " << report.field.name() << "   k_max: ";
    if (ctx.k_max)
        out << *ctx.k_max;
    else
        out << "auto";
    out << "   workers: " << ctx.workers << "\n\n";
    out << "  k | dim EMC_{k,k} | dim EMC_{k-1,k} |  rank | beta_{k,k}\n";
    out << "----+---------------+-----------------+-------+-----------\n";
    for (const auto& row : report.rows)
        out << std::setw(3) << row.k << " | " << std::setw(13) << row.dim_diag << " | "
            << std::setw(15) << row.dim_subdiag << " | " << std::setw(5) << row.rank << " | "
            << std::setw(10) << row.betti << '\n';
    out << "\nop_counter: " << report.op_counter << "   observed max nonempty k: "
        << report.observed_max_k << "   wall: " << std::fixed << std::setprecision(1)
        << report.wall_ms << " ms\n";
    return out.str();
}

} // namespace emh
