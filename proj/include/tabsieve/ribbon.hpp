#pragma once

// k-ribbon (rim hook) tableaux: exhaustive strip-by-strip counting, the
// sign epsilon_k, and the root-of-unity identity linking the two.

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "tabsieve/kostka.hpp"
#include "tabsieve/partition.hpp"
#include "tabsieve/qpoly.hpp"

namespace tabsieve {

namespace detail {

// All partitions mu' with mu <= mu' <= cap (componentwise) and
// |mu'| = |mu| + extra.
inline std::vector<Partition> partitions_between(const Partition& mu, const Partition& cap,
                                                 long long extra) {
    std::vector<Partition> out;
    std::size_t max_rows = cap.length();
    std::vector<int> cur;
    std::function<void(std::size_t, long long)> rec = [&](std::size_t r, long long left) {
        if (left == 0) {
            std::vector<int> parts = cur;
            for (std::size_t i = r; i < mu.length(); ++i) parts.push_back(mu.part(i));
            // check it is still a partition containing mu
            bool ok = true;
            for (std::size_t i = 0; i + 1 < parts.size(); ++i)
                if (parts[i] < parts[i + 1]) ok = false;
            if (ok) out.push_back(Partition(std::move(parts)));
            return;
        }
        if (r == max_rows) return;
        int lo = mu.part(r);
        int hi = cap.part(r);
        if (r > 0) hi = std::min(hi, cur[r - 1]);
        for (int v = lo; v <= hi; ++v) {
            if (v - lo > left) break;
            cur.push_back(v);
            rec(r + 1, left - (v - lo));
            cur.pop_back();
        }
    };
    rec(0, extra);
    return out;
}

// Is lambda/mu a single k-ribbon? Rows touched must be contiguous, each
// row an interval, and each lower row must end directly below the start
// of the row above.
inline bool is_ribbon(const Partition& outer, const Partition& inner, int k) {
    long long cells = outer.size() - inner.size();
    if (cells != k) return false;
    int r1 = -1, r2 = -1;
    for (std::size_t r = 0; r < outer.length(); ++r)
        if (outer.part(r) > inner.part(r)) {
            if (r1 < 0) r1 = static_cast<int>(r);
            r2 = static_cast<int>(r);
        }
    for (int r = r1; r <= r2; ++r)
        if (outer.part(static_cast<std::size_t>(r)) <= inner.part(static_cast<std::size_t>(r)))
            return false;  // gap in the touched rows
    for (int r = r1; r < r2; ++r) {
        // row r spans [inner_r, outer_r), row r+1 spans [inner_{r+1}, outer_{r+1});
        // the ribbon condition is outer_{r+1} - 1 == inner_r
        if (outer.part(static_cast<std::size_t>(r + 1)) - 1 != inner.part(static_cast<std::size_t>(r)))
            return false;
    }
    return true;
}

inline int ribbon_height(const Partition& outer, const Partition& inner) {
    int h = 0;
    for (std::size_t r = 0; r < outer.length(); ++r)
        if (outer.part(r) > inner.part(r)) ++h;
    return h;
}

// Head column of the ribbon lambda/mu: rightmost cell of the topmost row.
inline int ribbon_head_column(const Partition& outer, const Partition& inner) {
    for (std::size_t r = 0; r < outer.length(); ++r)
        if (outer.part(r) > inner.part(r)) return outer.part(r) - 1;
    return -1;
}

// A k-ribbon is exactly a path of k cells walking down or left from its
// head (the upper-right-most cell); this drives the tiling enumerators.
// `visit` receives each tiling as a list of blocks, each block a list of
// cells starting with the head; return true from `visit` to stop early.
inline bool for_each_ribbon_tiling(
    const std::vector<std::pair<int, int>>& cells, int k,
    const std::function<bool(const std::vector<std::vector<std::pair<int, int>>>&)>& visit) {
    if (cells.size() % static_cast<std::size_t>(k) != 0) return false;
    std::set<std::pair<int, int>> available(cells.begin(), cells.end());
    std::vector<std::vector<std::pair<int, int>>> blocks;

    std::function<bool()> rec = [&]() -> bool {
        if (available.empty()) return visit(blocks);
        // the ribbon covering the topmost-leftmost remaining cell
        std::pair<int, int> first = *available.begin();
        for (const auto& head : std::vector<std::pair<int, int>>(available.begin(),
                                                                 available.end())) {
            // walk down/left from the candidate head
            std::vector<std::pair<int, int>> block = {head};
            std::function<bool()> grow = [&]() -> bool {
                if (static_cast<int>(block.size()) == k) {
                    bool covers_first = false;
                    for (const auto& c : block) covers_first |= (c == first);
                    if (!covers_first) return false;
                    for (const auto& c : block) available.erase(c);
                    blocks.push_back(block);
                    bool stop = rec();
                    blocks.pop_back();
                    for (const auto& c : block) available.insert(c);
                    return stop;
                }
                auto [r, c] = block.back();
                for (auto next : {std::pair{r, c - 1}, std::pair{r + 1, c}}) {
                    if (!available.count(next)) continue;
                    block.push_back(next);
                    if (grow()) return true;
                    block.pop_back();
                }
                return false;
            };
            if (grow()) return true;
        }
        return false;
    };
    return rec();
}

inline std::vector<std::pair<int, int>> shape_cells(const SkewShape& shape) {
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < shape.num_rows(); ++r)
        for (int c = shape.row_begin(r); c < shape.row_end(r); ++c)
            cells.emplace_back(static_cast<int>(r), c);
    return cells;
}

// Is lambda/mu tileable by `count` k-ribbons whose heads all lie on the
// top boundary of the strip (no strip cell directly above a head)? That
// forces the heads into distinct columns.
inline bool is_horizontal_ribbon_strip(const Partition& mu, const Partition& lambda,
                                       int k, int count) {
    if (lambda.size() - mu.size() != static_cast<long long>(k) * count) return false;
    if (count == 0) return mu == lambda;
    std::vector<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < lambda.length(); ++r)
        for (int c = mu.part(r); c < lambda.part(r); ++c)
            cells.emplace_back(static_cast<int>(r), c);
    std::set<std::pair<int, int>> cell_set(cells.begin(), cells.end());
    return for_each_ribbon_tiling(
        cells, k, [&](const std::vector<std::vector<std::pair<int, int>>>& blocks) {
            for (const auto& block : blocks) {
                auto [r, c] = block.front();  // the head
                if (cell_set.count({r - 1, c})) return false;
            }
            return true;  // found a valid tiling; stop
        });
}

}  // namespace detail

/// Number of semistandard k-ribbon tableaux of the given shape and
/// content: chains of partitions where step i adds a horizontal strip of
/// content_i k-ribbons.
inline long long count_ribbon_tableaux(const SkewShape& shape, const Composition& content,
                                       int k) {
    if (k < 1) throw std::invalid_argument("count_ribbon_tableaux: k >= 1 required");
    const Partition& lambda = shape.outer();
    std::function<long long(const Partition&, std::size_t)> rec =
        [&](const Partition& cur, std::size_t step) -> long long {
        if (step == content.length()) return cur == lambda ? 1 : 0;
        int t = content.part(step);
        long long total = 0;
        for (const Partition& next :
             detail::partitions_between(cur, lambda, static_cast<long long>(k) * t))
            if (detail::is_horizontal_ribbon_strip(cur, next, k, t))
                total += rec(next, step + 1);
        return total;
    };
    return rec(shape.inner(), 0);
}

/// All sign products over tilings of the shape's cell set by k-ribbons.
/// Empty when no tiling exists.
inline std::set<int> epsilon_signs(const SkewShape& shape, int k) {
    std::set<int> signs;
    detail::for_each_ribbon_tiling(
        detail::shape_cells(shape), k,
        [&](const std::vector<std::vector<std::pair<int, int>>>& blocks) {
            int sign = 1;
            for (const auto& block : blocks) {
                std::set<int> rows;
                for (const auto& [r, c] : block) rows.insert(r);
                if (rows.size() % 2 == 0) sign = -sign;
            }
            signs.insert(sign);
            return false;  // keep enumerating
        });
    return signs;
}

/// epsilon_k: the common sign over tilings; 0 when no tiling exists.
inline int epsilon(const SkewShape& shape, int k) {
    std::set<int> signs = epsilon_signs(shape, k);
    if (signs.empty()) return 0;
    if (signs.size() > 1)
        throw std::logic_error("epsilon: tilings disagree on the sign");
    return *signs.begin();
}

/// Exact check of K^{(j)} = (-1)^{|nu|(j-1)} * eps_j * K_{shape,nu^j}(xi).
struct DltResult {
    long long ribbon_count = 0;
    int sign_factor = 1;     // (-1)^{|nu|(j-1)} * epsilon_j
    BigInt evaluation = 0;   // K_{shape,nu^j}(xi), must be an integer
    bool evaluation_integer = false;
    bool ok = false;
};

inline DltResult dlt_check(const SkewShape& shape, const Composition& nu, int j) {
    DltResult res;
    res.ribbon_count = count_ribbon_tableaux(shape, nu, j);
    int eps = epsilon(shape, j);
    long long abs_nu = nu.size();
    int parity = static_cast<int>((abs_nu * (j - 1)) % 2);
    res.sign_factor = (parity == 0 ? 1 : -1) * eps;
    // nu with each part repeated j times, sorted for the charge statistic
    std::vector<int> rep;
    for (int p : nu.parts())
        for (int i = 0; i < j; ++i) rep.push_back(p);
    QPoly kf = kostka_foulkes_sorted(shape, Composition(std::move(rep)));
    auto value = eval_at_root(kf, j, 1).as_integer();
    res.evaluation_integer = value.has_value();
    if (value) {
        res.evaluation = *value;
        res.ok = BigInt(res.sign_factor) * res.evaluation ==
                 BigInt(static_cast<long>(res.ribbon_count));
    }
    return res;
}

}  // namespace tabsieve
