#pragma once

// exact rank and kernel computation for sparse signed boundary matrices.
//
// rational rank runs fraction-free over arbitrary-precision integers:
// rows are combined by cross-multiplication (p*row - f*pivot) and each
// updated row is stripped to its content, so no rational division ever
// happens and only rows meeting the pivot column are touched.  pivots
// prefer sparse rows and, inside them, sparse columns; ties break on the
// lowest index, so elimination order is deterministic.  the prime-field
// fast path reuses the same pivoting with arithmetic mod p.
//
// kernels are extracted over exact rationals (rref with pivot columns in
// ascending column order) and normalized to primitive integer vectors
// whose first nonzero entry is positive, ordered by free column.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "emh/boundary.hpp"
#include "emh/errors.hpp"

namespace emh {

using big_int = boost::multiprecision::cpp_int;
using big_rat = boost::multiprecision::cpp_rational;

// deterministic miller-rabin for 64-bit inputs
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % p == 0) return n == p;
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return (std::uint64_t)((unsigned __int128)a * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
            if (e & 1) r = mulmod(r, a, m);
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

struct field_spec {
    enum kind_t { rational, prime } kind = rational;
    std::uint64_t p = 0;

    // "rational" or "prime:P"
    static field_spec parse(const std::string& text) {
        if (text == "rational") return {};
        if (text.rfind("prime:", 0) == 0) {
            field_spec f;
            f.kind = prime;
            std::size_t pos = 0;
            try {
                f.p = std::stoull(text.substr(6), &pos);
            } catch (...) {
                throw parse_error("bad field spec: " + text);
            }
            if (pos != text.size() - 6) throw parse_error("bad field spec: " + text);
            return f;
        }
        throw parse_error("bad field spec (want rational or prime:P): " + text);
    }

    std::string name() const {
        return kind == rational ? "rational" : "prime:" + std::to_string(p);
    }
};

namespace detail {

template <class T>
using sparse_row = std::vector<std::pair<std::uint32_t, T>>; // sorted by column

template <class T>
inline std::vector<sparse_row<T>> rows_of(const boundary_matrix& m) {
    // entries arrive sorted by (col,row); bucket them per row, then sort
    std::vector<sparse_row<T>> rows(m.rows);
    for (const auto& e : m.entries) rows[e.row].emplace_back(e.col, (T)e.sign);
    for (auto& r : rows)
        std::sort(r.begin(), r.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return rows;
}

template <class T>
inline const T* row_at(const sparse_row<T>& r, std::uint32_t col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, std::uint32_t c) { return e.first < c; });
    return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

// pivot choice: sparsest live row, then its column with fewest live rows
template <class T>
inline bool pick_pivot(const std::vector<sparse_row<T>>& rows, const std::vector<char>& done,
                       const std::vector<std::uint32_t>& col_live, std::size_t& pr,
                       std::uint32_t& pc) {
    std::size_t best_row = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (done[r] || rows[r].empty()) continue;
        if (best_row == rows.size() || rows[r].size() < rows[best_row].size()) best_row = r;
    }
    if (best_row == rows.size()) return false;
    pr = best_row;
    pc = rows[pr].front().first;
    for (const auto& [c, v] : rows[pr])
        if (col_live[c] < col_live[pc]) pc = c;
    return true;
}

inline big_int row_content(const sparse_row<big_int>& r) {
    big_int g = 0;
    for (const auto& [c, v] : r) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

inline std::size_t rank_fraction_free(std::vector<sparse_row<big_int>> rows, std::uint64_t cols) {
    std::vector<char> done(rows.size(), 0);
    std::vector<std::uint32_t> col_live(cols, 0);
    for (const auto& r : rows)
        for (const auto& [c, v] : r) ++col_live[c];

    std::size_t rank = 0;
    std::size_t pr;
    std::uint32_t pc;
    while (pick_pivot(rows, done, col_live, pr, pc)) {
        const sparse_row<big_int> pivot = rows[pr];
        const big_int pval = *row_at(pivot, pc);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pr || done[r] || rows[r].empty()) continue;
            const big_int* f = row_at(rows[r], pc);
            if (!f) continue;
            // new_row = pval*row - f*pivot, stripped to content
            sparse_row<big_int> upd;
            upd.reserve(rows[r].size() + pivot.size());
            auto a = rows[r].begin(), ae = rows[r].end();
            auto b = pivot.begin(), be = pivot.end();
            const big_int fv = *f;
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    upd.emplace_back(a->first, pval * a->second);
                    ++a;
                } else if (a == ae || b->first < a->first) {
                    upd.emplace_back(b->first, -fv * b->second);
                    ++b;
                } else {
                    big_int v = pval * a->second - fv * b->second;
                    if (!v.is_zero()) upd.emplace_back(a->first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            big_int content = row_content(upd);
            if (content > 1)
                for (auto& [c, v] : upd) v /= content;
            for (const auto& [c, v] : rows[r]) --col_live[c];
            for (const auto& [c, v] : upd) ++col_live[c];
            rows[r] = std::move(upd);
        }
        for (const auto& [c, v] : pivot) --col_live[c];
        done[pr] = 1;
        rows[pr].clear();
        ++rank;
    }
    return rank;
}

inline std::size_t rank_mod_p(std::vector<sparse_row<std::uint64_t>> rows, std::uint64_t cols,
                              std::uint64_t p) {
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
        return (std::uint64_t)((unsigned __int128)a * b % p);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        for (a %= p; e; e >>= 1, a = mulmod(a, a)) // p > 1 here
            if (e & 1) r = mulmod(r, a);
        return r;
    };
    for (auto& r : rows) // signs arrive as +1/-1 cast to uint64
        for (auto& [c, v] : r) v = (v == (std::uint64_t)-1) ? p - 1 : v % p;

    std::vector<char> done(rows.size(), 0);
    std::vector<std::uint32_t> col_live(cols, 0);
    for (auto& r : rows) {
        r.erase(std::remove_if(r.begin(), r.end(), [](const auto& e) { return e.second == 0; }),
                r.end());
        for (const auto& [c, v] : r) ++col_live[c];
    }

    std::size_t rank = 0;
    std::size_t pr;
    std::uint32_t pc;
    while (pick_pivot(rows, done, col_live, pr, pc)) {
        const sparse_row<std::uint64_t> pivot = rows[pr];
        const std::uint64_t pinv = powmod(*row_at(pivot, pc), p - 2);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pr || done[r] || rows[r].empty()) continue;
            const std::uint64_t* f = row_at(rows[r], pc);
            if (!f) continue;
            const std::uint64_t scale = mulmod(*f, pinv); // row -= scale*pivot
            sparse_row<std::uint64_t> upd;
            upd.reserve(rows[r].size() + pivot.size());
            auto a = rows[r].begin(), ae = rows[r].end();
            auto b = pivot.begin(), be = pivot.end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    upd.push_back(*a);
                    ++a;
                } else if (a == ae || b->first < a->first) {
                    upd.emplace_back(b->first, p - mulmod(scale, b->second));
                    ++b;
                } else {
                    std::uint64_t v = (a->second + p - mulmod(scale, b->second)) % p;
                    if (v) upd.emplace_back(a->first, v);
                    ++a;
                    ++b;
                }
            }
            for (const auto& [c, v] : rows[r]) --col_live[c];
            for (const auto& [c, v] : upd) ++col_live[c];
            rows[r] = std::move(upd);
        }
        for (const auto& [c, v] : pivot) --col_live[c];
        done[pr] = 1;
        rows[pr].clear();
        ++rank;
    }
    return rank;
}

} // namespace detail

inline std::size_t matrix_rank(const boundary_matrix& m, const field_spec& field = {}) {
    if (field.kind == field_spec::prime) {
        if (!is_prime_u64(field.p) || field.p >= (1ull << 62))
            throw domain_error("field prime:" + std::to_string(field.p) +
                               " is not a prime below 2^62");
        return detail::rank_mod_p(detail::rows_of<std::uint64_t>(m), m.cols, field.p);
    }
    return detail::rank_fraction_free(detail::rows_of<big_int>(m), m.cols);
}

// kernel vector: (column, integer coefficient), sorted by column
using kernel_vector = std::vector<std::pair<std::uint32_t, big_int>>;

inline std::vector<kernel_vector> kernel_basis(const boundary_matrix& m) {
    using detail::sparse_row;
    std::vector<sparse_row<big_rat>> rows = detail::rows_of<big_rat>(m);
    // rref with pivot columns chosen in ascending column order
    std::vector<std::int64_t> pivot_row_of(m.cols, -1);
    std::vector<char> pivoted(rows.size(), 0);
    for (std::uint32_t c = 0; c < m.cols; ++c) {
        std::size_t pr = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!pivoted[r] && detail::row_at(rows[r], c)) {
                pr = r;
                break;
            }
        if (pr == rows.size()) continue;
        big_rat pv = *detail::row_at(rows[pr], c);
        for (auto& [col, v] : rows[pr]) v /= pv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pr) continue;
            const big_rat* f = detail::row_at(rows[r], c);
            if (!f) continue;
            const big_rat fv = *f;
            sparse_row<big_rat> upd;
            auto a = rows[r].begin(), ae = rows[r].end();
            auto b = rows[pr].begin(), be = rows[pr].end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    upd.push_back(*a);
                    ++a;
                } else if (a == ae || b->first < a->first) {
                    upd.emplace_back(b->first, -fv * b->second);
                    ++b;
                } else {
                    big_rat v = a->second - fv * b->second;
                    if (!v.is_zero()) upd.emplace_back(a->first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            rows[r] = std::move(upd);
        }
        pivot_row_of[c] = (std::int64_t)pr;
        pivoted[pr] = 1;
    }

    std::vector<kernel_vector> basis;
    for (std::uint32_t f = 0; f < m.cols; ++f) {
        if (pivot_row_of[f] >= 0) continue;
        // free column f: x_f = 1, x_c = -rref_row(c)[f] at each pivot column c
        std::vector<std::pair<std::uint32_t, big_rat>> vec;
        for (std::uint32_t c = 0; c < m.cols; ++c) {
            if (c == f) {
                vec.emplace_back(f, big_rat(1));
                continue;
            }
            if (pivot_row_of[c] < 0) continue;
            const big_rat* entry = detail::row_at(rows[(std::size_t)pivot_row_of[c]], f);
            if (entry) vec.emplace_back(c, -*entry);
        }
        // clear denominators, strip content, make the leading entry positive
        big_int scale = 1;
        for (const auto& [c, v] : vec)
            scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(v));
        kernel_vector out;
        out.reserve(vec.size());
        big_int content = 0;
        for (const auto& [c, v] : vec) {
            big_int num = boost::multiprecision::numerator(v) *
                          (scale / boost::multiprecision::denominator(v));
            content = boost::multiprecision::gcd(content, num);
            out.emplace_back(c, std::move(num));
        }
        if (content > 1)
            for (auto& [c, v] : out) v /= content;
        if (!out.empty() && out.front().second < 0)
            for (auto& [c, v] : out) v = -v;
        basis.push_back(std::move(out));
    }
    return basis;
}

// image of a sparse coefficient vector under the matrix (dense result)
template <class Int>
inline std::vector<big_int> apply_matrix(const boundary_matrix& m,
                                         const std::vector<std::pair<std::uint32_t, Int>>& coeffs) {
    std::vector<big_int> image(m.rows, big_int(0));
    for (const auto& [col, coef] : coeffs) {
        auto lo = std::lower_bound(m.entries.begin(), m.entries.end(), col,
                                   [](const matrix_entry& e, std::uint32_t c) { return e.col < c; });
        for (auto it = lo; it != m.entries.end() && it->col == col; ++it)
            image[it->row] += big_int(it->sign) * big_int(coef);
    }
    return image;
}

} // namespace emh
