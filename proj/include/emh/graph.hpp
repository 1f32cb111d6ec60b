#pragma once

// undirected simple graph on dense vertex ids.  neighbour lists are kept
// sorted (determinism), and the two derived views the rest of the code
// leans on -- per-source bfs distance rows and exact distance-2 lists --
// are memoized lazily behind insert-once cells so several enumeration
// workers can share one immutable graph.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <deque>
#include <limits>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "emh/errors.hpp"

namespace emh {

using vertex_id = std::uint32_t;

// hop distance with an explicit point at infinity for disconnected pairs
class hop_distance {
  public:
    constexpr hop_distance() = default;
    static constexpr hop_distance finite(std::uint32_t d) { return hop_distance(d); }
    static constexpr hop_distance infinite() { return hop_distance(); }

    constexpr bool is_finite() const { return raw_ != unreachable; }
    std::uint32_t value() const {
        if (!is_finite()) throw domain_error("hop_distance: value() on an infinite distance");
        return raw_;
    }
    constexpr std::uint32_t raw() const { return raw_; }

    friend constexpr bool operator==(hop_distance a, hop_distance b) { return a.raw_ == b.raw_; }
    // infinite compares greater than every finite distance
    friend constexpr bool operator<(hop_distance a, hop_distance b) { return a.raw_ < b.raw_; }

    static constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

  private:
    constexpr explicit hop_distance(std::uint32_t raw) : raw_(raw) {}
    std::uint32_t raw_ = unreachable;
};

class graph {
  public:
    graph() { init_caches(); }

    // ids must lie in [0,n); self-loops are rejected, duplicates collapse
    graph(std::size_t n, std::vector<std::pair<vertex_id, vertex_id>> edge_pairs,
          std::vector<std::string> labels = {})
        : adj_(n), labels_(std::move(labels)) {
        if (!labels_.empty() && labels_.size() != n)
            throw domain_error("graph: label count does not match vertex count");
        for (auto& [u, v] : edge_pairs) {
            if (u >= n || v >= n)
                throw domain_error("graph: edge endpoint out of range: (" + std::to_string(u) +
                                   "," + std::to_string(v) + ") with n=" + std::to_string(n));
            if (u == v)
                throw domain_error("graph: self-loop on vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_pairs.begin(), edge_pairs.end());
        edge_pairs.erase(std::unique(edge_pairs.begin(), edge_pairs.end()), edge_pairs.end());
        edges_ = std::move(edge_pairs);
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
        init_caches();
    }

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<vertex_id, vertex_id>>& edges() const { return edges_; }

    const std::vector<vertex_id>& neighbors(vertex_id v) const {
        check_vertex(v);
        return adj_[v];
    }

    bool adjacent(vertex_id u, vertex_id v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        vertex_id other = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::binary_search(nb.begin(), nb.end(), other);
    }

    std::uint32_t degree(vertex_id v) const { return (std::uint32_t)neighbors(v).size(); }

    std::uint32_t max_degree() const {
        std::size_t best = 0;
        for (const auto& nb : adj_) best = std::max(best, nb.size());
        return (std::uint32_t)best;
    }

    // bfs hop counts from src; hop_distance::unreachable marks other components
    const std::vector<std::uint32_t>& distance_row(vertex_id src) const {
        check_vertex(src);
        return caches_->dist.get(src, [&] { return bfs_row(src); });
    }

    hop_distance distance(vertex_id u, vertex_id v) const {
        check_vertex(v);
        std::uint32_t raw = distance_row(u)[v];
        return raw == hop_distance::unreachable ? hop_distance::infinite() : hop_distance::finite(raw);
    }

    // vertices at hop distance exactly 2 from v, sorted ascending
    const std::vector<vertex_id>& two_hop(vertex_id v) const {
        check_vertex(v);
        return caches_->hop2.get(v, [&] { return two_hop_row(v); });
    }

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(vertex_id v) const {
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    graph(const graph& other) : adj_(other.adj_), edges_(other.edges_), labels_(other.labels_) {
        init_caches();
    }
    graph& operator=(const graph& other) {
        if (this != &other) {
            adj_ = other.adj_;
            edges_ = other.edges_;
            labels_ = other.labels_;
            init_caches();
        }
        return *this;
    }
    graph(graph&&) noexcept = default;
    graph& operator=(graph&&) noexcept = default;

  private:
    void check_vertex(vertex_id v) const {
        if (v >= adj_.size())
            throw domain_error("graph: vertex id " + std::to_string(v) + " out of range (n=" +
                               std::to_string(adj_.size()) + ")");
    }

    std::vector<std::uint32_t> bfs_row(vertex_id src) const {
        std::vector<std::uint32_t> dist(adj_.size(), hop_distance::unreachable);
        std::deque<vertex_id> queue{src};
        dist[src] = 0;
        while (!queue.empty()) {
            vertex_id u = queue.front();
            queue.pop_front();
            for (vertex_id w : adj_[u])
                if (dist[w] == hop_distance::unreachable) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

    std::vector<vertex_id> two_hop_row(vertex_id v) const {
        std::vector<char> seen(adj_.size(), 0);
        seen[v] = 1;
        for (vertex_id w : adj_[v]) seen[w] = 1;
        std::vector<vertex_id> out;
        for (vertex_id w : adj_[v])
            for (vertex_id u : adj_[w])
                if (!seen[u]) {
                    seen[u] = 1;
                    out.push_back(u);
                }
        std::sort(out.begin(), out.end());
        return out;
    }

    // insert-once slot table: lock-free hit on the atomic pointer, misses
    // fill under the mutex so each row is computed exactly once
    template <class T>
    struct once_table {
        explicit once_table(std::size_t n) : slots(n) {}
        std::vector<std::atomic<const T*>> slots;
        std::deque<T> store; // stable addresses
        std::mutex mu;

        template <class Fn>
        const T& get(std::size_t i, Fn&& compute) {
            const T* p = slots[i].load(std::memory_order_acquire);
            if (p) return *p;
            std::lock_guard<std::mutex> lock(mu);
            p = slots[i].load(std::memory_order_relaxed);
            if (!p) {
                store.push_back(compute());
                p = &store.back();
                slots[i].store(p, std::memory_order_release);
            }
            return *p;
        }
    };

    struct caches {
        explicit caches(std::size_t n) : dist(n), hop2(n) {}
        once_table<std::vector<std::uint32_t>> dist;
        once_table<std::vector<vertex_id>> hop2;
    };

    void init_caches() { caches_ = std::make_unique<caches>(adj_.size()); }

    std::vector<std::vector<vertex_id>> adj_;
    std::vector<std::pair<vertex_id, vertex_id>> edges_; // u < v, sorted
    std::vector<std::string> labels_;                    // empty: numeric labels
    mutable std::unique_ptr<caches> caches_;
};

inline bool is_connected(const graph& g) {
    if (g.vertex_count() <= 1) return true;
    const auto& row = g.distance_row(0);
    return std::find(row.begin(), row.end(), hop_distance::unreachable) == row.end();
}

// largest finite pairwise hop distance (ignores cross-component pairs)
inline std::uint32_t finite_diameter(const graph& g) {
    std::uint32_t best = 0;
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        for (std::uint32_t d : g.distance_row(v))
            if (d != hop_distance::unreachable) best = std::max(best, d);
    return best;
}

} // namespace emh
