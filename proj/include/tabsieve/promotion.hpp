#pragma once

// Jeu-de-taquin promotion on tableaux over the alphabet [m], its inverse,
// and orbit decomposition.

#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tabsieve/tableau.hpp"

namespace tabsieve {

namespace detail {

constexpr int kDot = 0;

// Slide a single dot at (r, c) to an outer corner, exchanging with the
// smaller of the right/below neighbours (below on ties); a missing
// neighbour or another dot counts as +infinity.
template <typename Grid>
inline void slide_dot_out(const SkewShape& shape, Grid& at, std::size_t r, int c) {
    const int inf = 1 << 30;
    while (true) {
        int right = shape.has_cell(r, c + 1) && at(r, c + 1) != kDot ? at(r, c + 1) : inf;
        int below = shape.has_cell(r + 1, c) && at(r + 1, c) != kDot ? at(r + 1, c) : inf;
        if (right == inf && below == inf) return;
        if (below <= right) {
            at(r, c) = below;
            at(r + 1, c) = kDot;
            ++r;
        } else {
            at(r, c) = right;
            at(r, c + 1) = kDot;
            ++c;
        }
    }
}

// Reverse slide toward an inner corner: exchange with the larger of the
// left/above neighbours (above on ties); missing or dot counts as -infinity.
template <typename Grid>
inline void slide_dot_in(const SkewShape& shape, Grid& at, std::size_t r, int c) {
    const int ninf = -(1 << 30);
    while (true) {
        int left = shape.has_cell(r, c - 1) && at(r, c - 1) != kDot ? at(r, c - 1) : ninf;
        int above = r > 0 && shape.has_cell(r - 1, c) && at(r - 1, c) != kDot ? at(r - 1, c) : ninf;
        if (left == ninf && above == ninf) return;
        if (above >= left) {
            at(r, c) = above;
            at(r - 1, c) = kDot;
            --r;
        } else {
            at(r, c) = left;
            at(r, c - 1) = kDot;
            --c;
        }
    }
}

}  // namespace detail

inline Tableau promote(const Tableau& t, int m) {
    std::vector<std::vector<int>> rows = t.rows();
    const SkewShape& shape = t.shape();
    auto at = [&](std::size_t r, int c) -> int& {
        return rows[r][static_cast<std::size_t>(c - shape.row_begin(r))];
    };
    std::vector<std::pair<std::size_t, int>> dots;
    for (std::size_t r = 0; r < shape.num_rows(); ++r)
        for (int c = shape.row_begin(r); c < shape.row_end(r); ++c) {
            int v = at(r, c);
            if (v < 1 || v > m) throw std::invalid_argument("promote: entry out of range");
            if (v == 1) {
                at(r, c) = detail::kDot;
                dots.emplace_back(r, c);
            }
        }
    // The 1s form a horizontal strip, so the dots occupy distinct columns;
    // the rightmost dot must slide first so no dot blocks another's path.
    std::sort(dots.begin(), dots.end(),
              [](const auto& x, const auto& y) { return x.second > y.second; });
    for (auto [r, c] : dots) detail::slide_dot_out(shape, at, r, c);
    for (auto& row : rows)
        for (int& v : row) v = (v == detail::kDot) ? m : v - 1;
    Tableau result(shape, std::move(rows));
    assert(result.is_semistandard());
    assert(content(result, m) == content(t, m).rotated_left());
    return result;
}

inline Tableau promote(const Tableau& t, int m, long long power) {
    Tableau cur = t;
    for (long long i = 0; i < power; ++i) cur = promote(cur, m);
    return cur;
}

inline Tableau promote_inverse(const Tableau& t, int m) {
    std::vector<std::vector<int>> rows = t.rows();
    const SkewShape& shape = t.shape();
    auto at = [&](std::size_t r, int c) -> int& {
        return rows[r][static_cast<std::size_t>(c - shape.row_begin(r))];
    };
    std::vector<std::pair<std::size_t, int>> dots;
    for (std::size_t r = shape.num_rows(); r-- > 0;)
        for (int c = shape.row_end(r) - 1; c >= shape.row_begin(r); --c) {
            int v = at(r, c);
            if (v < 1 || v > m) throw std::invalid_argument("promote_inverse: entry out of range");
            if (v == m) {
                at(r, c) = detail::kDot;
                dots.emplace_back(r, c);
            }
        }
    // mirror of promote: the leftmost dot slides first
    std::sort(dots.begin(), dots.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    for (auto [r, c] : dots) detail::slide_dot_in(shape, at, r, c);
    for (auto& row : rows)
        for (int& v : row) v = (v == detail::kDot) ? 1 : v + 1;
    Tableau result(shape, std::move(rows));
    assert(result.is_semistandard());
    return result;
}

/// Cyclically ordered orbit under promotion; promote maps element i to
/// element i+1 (mod size). Element 0 is the lexicographically least.
struct Orbit {
    std::vector<Tableau> elements;
    std::size_t size() const { return elements.size(); }
};

struct OrbitDecomposition {
    std::vector<Orbit> orbits;
    long long order = 1;  // lcm of orbit sizes

    std::vector<std::size_t> sizes() const {
        std::vector<std::size_t> s;
        s.reserve(orbits.size());
        for (const Orbit& o : orbits) s.push_back(o.size());
        return s;
    }
};

/// X must be closed under promotion with alphabet m.
inline OrbitDecomposition orbit_decomposition(const std::vector<Tableau>& X, int m) {
    std::map<Tableau, bool> seen;
    for (const Tableau& t : X) seen[t] = false;
    OrbitDecomposition result;
    for (const Tableau& t : X) {
        auto it = seen.find(t);
        if (it->second) continue;
        // walk the cycle
        std::vector<Tableau> cycle;
        Tableau cur = t;
        do {
            auto cit = seen.find(cur);
            if (cit == seen.end())
                throw std::invalid_argument("orbit_decomposition: set not closed under promotion");
            cit->second = true;
            cycle.push_back(cur);
            cur = promote(cur, m);
        } while (!(cur == t));
        // rotate so the lexicographically least tableau comes first
        auto least = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), least, cycle.end());
        result.order = std::lcm(result.order, static_cast<long long>(cycle.size()));
        result.orbits.push_back(Orbit{std::move(cycle)});
    }
    return result;
}

}  // namespace tabsieve
