#pragma once

// trails: ordered tuples of pairwise-distinct vertices graded by the sum
// of consecutive hop distances.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "emh/graph.hpp"

namespace emh {

// total hop length of an arbitrary vertex tuple (no distinctness demanded
// here -- the oracle measures every tuple it deletes landmarks from);
// a single vertex measures 0, a disconnected consecutive pair is infinite
inline hop_distance trail_length(const graph& g, std::span<const vertex_id> verts) {
    if (verts.empty()) throw domain_error("trail_length: empty tuple");
    std::uint32_t total = 0;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
        hop_distance d = g.distance(verts[i], verts[i + 1]);
        if (!d.is_finite()) return hop_distance::infinite();
        total += d.value();
    }
    // the final vertex is range-checked even when it starts no step
    if (verts.size() == 1) g.distance(verts[0], verts[0]);
    return hop_distance::finite(total);
}

struct trail {
    std::vector<vertex_id> verts;
    std::uint32_t length = 0; // sum of consecutive hop distances

    std::uint32_t landmarks() const { return (std::uint32_t)verts.size(); }

    friend bool operator==(const trail& a, const trail& b) { return a.verts == b.verts; }
    friend bool operator<(const trail& a, const trail& b) { return a.verts < b.verts; }
};

// validated construction: pairwise-distinct landmarks, finite steps
inline trail make_trail(const graph& g, std::vector<vertex_id> verts) {
    hop_distance len = trail_length(g, verts);
    if (!len.is_finite()) throw domain_error("trail: consecutive landmarks in different components");
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (verts[i] == verts[j])
                throw domain_error("trail: repeated landmark " + std::to_string(verts[i]));
    return trail{std::move(verts), len.value()};
}

inline std::string format_trail(const graph& g, const trail& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.verts.size(); ++i) {
        if (i) out += ",";
        out += g.label(t.verts[i]);
    }
    return out + ")";
}

} // namespace emh
