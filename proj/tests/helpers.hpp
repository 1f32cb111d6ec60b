#pragma once

// shared test utilities: driving the command-line binary as a subprocess,
// and enumerating small graph corpora (all connected graphs up to
// isomorphism via minimum-permutation canonical forms).

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <emh/graph.hpp>

namespace test_helpers {

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s)
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    return out + "'";
}

struct cli_result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string temp_path(const std::string& tag) {
    static std::uint64_t counter = 0;
    return "/tmp/emh_test_" + std::to_string(getpid()) + "_" + tag + "_" +
           std::to_string(counter++);
}

#ifdef EMH_CLI_PATH
inline cli_result run_cli(const std::vector<std::string>& args,
                          const std::string& env_prefix = "") {
    const std::string out_path = temp_path("out");
    const std::string err_path = temp_path("err");
    std::string cmd = env_prefix + shell_quote(EMH_CLI_PATH);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " >" + shell_quote(out_path) + " 2>" + shell_quote(err_path);
    const int rc = std::system(cmd.c_str());
    cli_result res;
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return res;
}
#endif

inline std::string write_temp_file(const std::string& tag, const std::string& content) {
    const std::string path = temp_path(tag);
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

// ------------------------------------------------------------- corpora --

// bit index of the unordered pair {i,j}, i < j < n
inline int pair_bit(int n, int i, int j) {
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++idx)
            if (a == i && b == j) return idx;
    (void)n;
    return -1;
}

inline bool mask_connected(int n, std::uint32_t mask) {
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++idx)
            if (mask >> idx & 1) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

inline std::uint32_t relabel_mask(int n, std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    int idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++idx)
            if (mask >> idx & 1) {
                int pa = perm[a], pb = perm[b];
                if (pa > pb) std::swap(pa, pb);
                out |= 1u << pair_bit(n, pa, pb);
            }
    return out;
}

// all connected graphs on exactly n vertices, one representative per
// isomorphism class (the lexicographically least edge bitmask)
inline std::vector<emh::graph> connected_graphs_exactly(int n) {
    std::vector<emh::graph> out;
    if (n == 1) {
        out.emplace_back(1, std::vector<std::pair<emh::vertex_id, emh::vertex_id>>{});
        return out;
    }
    const int pairs = n * (n - 1) / 2;
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<char> seen(1u << pairs, 0);
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        if (seen[mask] || !mask_connected(n, mask)) continue;
        std::uint32_t canon = mask;
        for (const auto& p : perms) {
            std::uint32_t m = relabel_mask(n, mask, p);
            seen[m] = 1;
            canon = std::min(canon, m);
        }
        std::vector<std::pair<emh::vertex_id, emh::vertex_id>> edges;
        int idx = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b, ++idx)
                if (canon >> idx & 1) edges.emplace_back(a, b);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

inline std::vector<emh::graph> connected_graphs_upto(int max_n) {
    std::vector<emh::graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto batch = connected_graphs_exactly(n);
        out.insert(out.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
    }
    return out;
}

} // namespace test_helpers
