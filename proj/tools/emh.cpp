// emh: first-diagonal Eulerian magnitude homology of finite simple graphs.
//
// subcommands:
//   compute  betti numbers beta_{k,k} via the two-phase enumerator + exact rank
//   bench    enumeration cost sweep over graph families, csv output
//   witness  support subgraphs for homology classes (single trail, trail pair,
//            grid family, arbitrary integer chains)
//   oracle   definition-level recomputation of dim EMC_{k,l} and beta_{k,l}

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <emh/emh.hpp>

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw emh::io_error("cannot open output file: " + out_path);
    out << text;
    out.flush();
    if (!out) throw emh::io_error("failed writing output file: " + out_path);
}

std::optional<std::uint32_t> parse_kmax(const std::string& s) {
    if (s == "auto") return std::nullopt;
    try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(s, &pos);
        if (pos == s.size() && v >= 1 && v <= 0xffffffffUL) return (std::uint32_t)v;
    } catch (...) {
    }
    throw emh::domain_error("--kmax expects a positive integer or 'auto', got: " + s);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

// shared --input/--gen/--seed trio used by the witness and oracle subcommands
struct graph_source {
    std::string input_path;
    std::string generator;
    std::optional<std::uint64_t> seed;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input_path, "edge-list file (one 'u v' pair per line)");
        cmd->add_option("--gen", generator,
                        "generator spec, e.g. 'cycle 5', 'complete 4', 'er 20 0.2 7'");
        cmd->add_option("--seed", seed, "seed for the er generator");
    }

    emh::graph resolve() const {
        if (!input_path.empty() && !generator.empty())
            throw emh::domain_error("exactly one input source allowed: --input or --gen");
        if (!input_path.empty()) return emh::read_edge_list_file(input_path);
        if (!generator.empty())
            return emh::build_generator(emh::parse_generator_spec(generator), seed);
        throw emh::domain_error("an input source is required: --input FILE or --gen SPEC");
    }
};

// ---------------------------------------------------------------- compute --

struct compute_args {
    std::string input_path;
    std::string generator;
    std::string kmax = "auto";
    std::string field = "rational";
    std::string format = "text";
    std::string out_path;
    std::optional<std::uint64_t> seed;
    bool oracle = false;
    std::size_t oracle_cap = 10;
    unsigned workers = 1;
    std::size_t max_nnz = emh::default_max_nnz;
};

int run_compute_cmd(const compute_args& a) {
    emh::run_config cfg;
    if (!a.input_path.empty()) cfg.input_path = a.input_path;
    if (!a.generator.empty()) cfg.generator = a.generator;
    cfg.k_max = parse_kmax(a.kmax);
    cfg.field = emh::field_spec::parse(a.field);
    cfg.oracle_check = a.oracle;
    cfg.oracle_cap = a.oracle_cap;
    cfg.seed = a.seed;
    cfg.workers = a.workers == 0 ? 1 : a.workers;
    cfg.max_nnz = a.max_nnz;
    if (a.format == "text")
        cfg.format = emh::run_config::text;
    else if (a.format == "json")
        cfg.format = emh::run_config::json;
    else if (a.format == "csv")
        cfg.format = emh::run_config::csv;
    else
        throw emh::domain_error("--format must be text, json or csv, got: " + a.format);

    emh::run_result result = emh::run_compute(cfg);
    emit(result.rendered, a.out_path);
    return (int)emh::exit_code::ok;
}

// ------------------------------------------------------------------ bench --

struct bench_args {
    std::string family;
    std::vector<std::size_t> sizes;
    double p = 0.25;
    std::vector<std::uint64_t> seeds = {1};
    std::string kmax = "auto";
    unsigned workers = 1;
    std::string out_path;
};

int run_bench_cmd(const bench_args& a) {
    emh::bench_config cfg;
    cfg.family = a.family;
    cfg.sizes = a.sizes;
    cfg.p = a.p;
    cfg.seeds = a.seeds;
    cfg.k_max = parse_kmax(a.kmax);
    cfg.workers = a.workers == 0 ? 1 : a.workers;
    if (cfg.sizes.empty()) throw emh::domain_error("--sizes needs at least one value");
    emit(emh::bench_csv(emh::run_bench(cfg)), a.out_path);
    return (int)emh::exit_code::ok;
}

// ---------------------------------------------------------------- witness --

struct witness_args {
    graph_source src;
    std::optional<std::uint32_t> grid;
    std::string trail;
    std::string trail_a, trail_b;
    std::string chain;
    std::string out_path;
};

emh::chain parse_chain_text(const emh::graph& g, const std::string& text) {
    emh::chain c;
    std::istringstream in(text);
    std::string term_text;
    while (in >> term_text) {
        emh::chain_term term{1, {}};
        std::string verts_part = term_text;
        if (auto star = term_text.find('*'); star != std::string::npos) {
            const std::string coeff_part = term_text.substr(0, star);
            verts_part = term_text.substr(star + 1);
            try {
                std::size_t pos = 0;
                term.coeff = std::stoll(coeff_part, &pos);
                if (pos != coeff_part.size()) throw emh::parse_error("");
            } catch (...) {
                throw emh::parse_error("bad chain coefficient: " + coeff_part);
            }
        }
        for (const std::string& label : split(verts_part, ','))
            term.verts.push_back(emh::resolve_label(g, label));
        c.terms.push_back(std::move(term));
    }
    if (c.terms.empty()) throw emh::domain_error("--chain is empty");
    return c;
}

int run_witness_cmd(const witness_args& a) {
    const int modes = (a.grid.has_value() ? 1 : 0) + (!a.trail.empty() ? 1 : 0) +
                      (!a.trail_a.empty() || !a.trail_b.empty() ? 1 : 0) +
                      (!a.chain.empty() ? 1 : 0);
    if (modes != 1)
        throw emh::domain_error(
            "pick exactly one witness mode: --grid K | --trail T | --trail-a A --trail-b B | "
            "--chain C");

    if (a.grid) {
        emh::witness_graph w = emh::grid_family_graph(*a.grid);
        emh::cycle_check check = emh::cycle_support(w.g, emh::grid_alternating_chain(*a.grid));
        if (!check.is_cycle)
            throw std::logic_error("grid family alternating chain failed its cycle check");
        emit(emh::witness_to_string(w), a.out_path);
        std::cerr << "alternating chain over " << (1u << (*a.grid - 1))
                  << " trails is a cycle on this graph\n";
        return (int)emh::exit_code::ok;
    }

    if (!a.trail.empty()) {
        emh::graph g = a.src.resolve();
        std::vector<emh::vertex_id> verts;
        for (const std::string& label : split(a.trail, ','))
            verts.push_back(emh::resolve_label(g, label));
        emh::witness_graph w = emh::single_trail_support(g, emh::make_trail(g, verts));
        emit(emh::witness_to_string(w), a.out_path);
        return (int)emh::exit_code::ok;
    }

    if (!a.trail_a.empty() || !a.trail_b.empty()) {
        if (a.trail_a.empty() || a.trail_b.empty())
            throw emh::domain_error("--trail-a and --trail-b must be given together");
        emh::witness_graph w =
            emh::two_trail_witness(split(a.trail_a, ','), split(a.trail_b, ','));
        emit(emh::witness_to_string(w), a.out_path);
        return (int)emh::exit_code::ok;
    }

    emh::graph g = a.src.resolve();
    emh::cycle_check check = emh::cycle_support(g, parse_chain_text(g, a.chain));
    emit(emh::witness_to_string(check.support), a.out_path);
    if (check.is_cycle) {
        std::cerr << "chain is a cycle\n";
    } else {
        std::cerr << "chain is NOT a cycle; boundary survives at "
                  << emh::format_trail(g, *check.surviving) << "\n";
    }
    return (int)emh::exit_code::ok;
}

// ----------------------------------------------------------------- oracle --

struct oracle_args {
    graph_source src;
    std::uint32_t ell_max = 4;
    std::size_t cap = 10;
    std::string format = "text";
    std::string out_path;
};

int run_oracle_cmd(const oracle_args& a) {
    emh::graph g = a.src.resolve();
    emh::oracle_options opt{a.cap};

    std::vector<std::vector<std::size_t>> dim(a.ell_max + 1), betti(a.ell_max + 1);
    for (std::uint32_t k = 0; k <= a.ell_max; ++k)
        for (std::uint32_t ell = 0; ell <= a.ell_max; ++ell) {
            dim[k].push_back(emh::oracle_chain_basis(g, k, ell, opt).size());
            betti[k].push_back(emh::oracle_betti(g, k, ell, opt));
        }

    std::ostringstream out;
    if (a.format == "csv") {
        out << "k,l,dim,betti\n";
        for (std::uint32_t k = 0; k <= a.ell_max; ++k)
            for (std::uint32_t ell = 0; ell <= a.ell_max; ++ell)
                out << k << ',' << ell << ',' << dim[k][ell] << ',' << betti[k][ell] << '\n';
    } else if (a.format == "text") {
        auto table = [&](const char* title, const std::vector<std::vector<std::size_t>>& t) {
            out << title << " (rows k, columns l)\n";
            out << std::setw(4) << "k\\l";
            for (std::uint32_t ell = 0; ell <= a.ell_max; ++ell) out << std::setw(8) << ell;
            out << '\n';
            for (std::uint32_t k = 0; k <= a.ell_max; ++k) {
                out << std::setw(4) << k;
                for (std::uint32_t ell = 0; ell <= a.ell_max; ++ell)
                    out << std::setw(8) << t[k][ell];
                out << '\n';
            }
        };
        table("dim EMC_{k,l}", dim);
        out << '\n';
        table("beta_{k,l}", betti);
    } else {
        throw emh::domain_error("--format must be text or csv, got: " + a.format);
    }
    emit(out.str(), a.out_path);
    return (int)emh::exit_code::ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-diagonal Eulerian magnitude homology of finite simple graphs"};
    app.require_subcommand(1);
    app.footer("Exit codes:\n"
               "  0  success\n"
               "  2  usage error (bad flags or values)\n"
               "  3  malformed input (edge list, generator spec, field spec)\n"
               "  4  resource cap exceeded\n"
               "  5  oracle cross-check mismatch\n"
               "  6  unreadable input or unwritable output\n"
               "  7  internal error");

    compute_args ca;
    CLI::App* compute = app.add_subcommand("compute", "betti numbers on the first diagonal");
    compute->add_option("--input", ca.input_path, "edge-list file (one 'u v' pair per line)");
    compute->add_option("--gen", ca.generator,
                        "generator spec, e.g. 'cycle 5', 'complete 4', 'er 20 0.2 7'");
    compute->add_option("--kmax", ca.kmax, "max degree k to compute, or 'auto' (default)");
    compute->add_option("--field", ca.field, "rank field: rational (default) or prime:P")
        ->envname("EMH_FIELD");
    compute->add_flag("--oracle", ca.oracle, "cross-check every row against the oracle");
    compute->add_option("--oracle-cap", ca.oracle_cap,
                        "max vertex count admitted to the oracle (default 10)");
    compute->add_option("--format", ca.format, "output format: text (default), json or csv");
    compute->add_option("--out", ca.out_path, "write the report to a file instead of stdout");
    compute->add_option("--seed", ca.seed, "seed for the er generator");
    compute->add_option("--workers", ca.workers, "worker threads for enumeration (default 1)")
        ->envname("EMH_WORKERS");
    compute->add_option("--max-nnz", ca.max_nnz, "cap on boundary matrix entries")
        ->envname("EMH_MAX_NNZ");

    bench_args ba;
    CLI::App* bench = app.add_subcommand("bench", "enumeration cost sweep, csv output");
    bench->add_option("--family", ba.family, "path|cycle|star|complete|friendship|er")
        ->required();
    bench->add_option("--sizes", ba.sizes, "sizes to sweep, e.g. --sizes 10 20 40")
        ->required()
        ->delimiter(',');
    bench->add_option("--p", ba.p, "er edge probability (default 0.25)");
    bench->add_option("--seeds", ba.seeds, "er seeds to sweep (default 1)")->delimiter(',');
    bench->add_option("--kmax", ba.kmax, "max degree k to enumerate, or 'auto' (default)");
    bench->add_option("--workers", ba.workers, "worker threads for enumeration (default 1)")
        ->envname("EMH_WORKERS");
    bench->add_option("--out", ba.out_path, "write the csv to a file instead of stdout");

    witness_args wa;
    CLI::App* witness =
        app.add_subcommand("witness", "support subgraphs for first-diagonal homology classes");
    wa.src.attach(witness);
    witness->add_option("--grid", wa.grid,
                        "emit the degree-K doubled-landmark grid graph and verify its "
                        "alternating 2^{K-1}-trail cycle");
    witness->add_option("--trail", wa.trail,
                        "comma-separated landmarks of one diagonal trail in the input graph");
    witness->add_option("--trail-a", wa.trail_a,
                        "first trail of a cancelling pair (labels, comma separated)");
    witness->add_option("--trail-b", wa.trail_b,
                        "second trail: same landmarks except one interior position");
    witness->add_option("--chain", wa.chain,
                        "integer chain over diagonal trails of the input graph, e.g. "
                        "'1*a,b,c -1*a,d,c'");
    witness->add_option("--out", wa.out_path, "write the witness to a file instead of stdout");

    oracle_args oa;
    CLI::App* oracle =
        app.add_subcommand("oracle", "definition-level dim EMC_{k,l} and beta_{k,l} tables");
    oa.src.attach(oracle);
    oracle->add_option("--ell-max", oa.ell_max, "largest length l to tabulate (default 4)");
    oracle->add_option("--cap", oa.cap, "max vertex count admitted (default 10)");
    oracle->add_option("--format", oa.format, "output format: text (default) or csv");
    oracle->add_option("--out", oa.out_path, "write the table to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? (int)emh::exit_code::ok : (int)emh::exit_code::usage;
    }

    try {
        if (*compute) return run_compute_cmd(ca);
        if (*bench) return run_bench_cmd(ba);
        if (*witness) return run_witness_cmd(wa);
        return run_oracle_cmd(oa);
    } catch (const emh::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return (int)emh::exit_code::parse;
    } catch (const emh::resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return (int)emh::exit_code::resource;
    } catch (const emh::oracle_mismatch_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return (int)emh::exit_code::oracle_mismatch;
    } catch (const emh::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return (int)emh::exit_code::io;
    } catch (const emh::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return (int)emh::exit_code::usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return (int)emh::exit_code::internal;
    }
}
