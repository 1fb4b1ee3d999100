#pragma once

// GT-patterns, plane partitions, the bijection between stretched hook
// tableaux and plane partitions, and rowmotion.

#include <stdexcept>
#include <vector>

#include "tabsieve/tableau.hpp"

namespace tabsieve {

/// Triangular array with rows of lengths m, m-1, ..., 1 (stored top-down).
/// Entry (j, i), with j counted from below and i from the left, is the
/// number of cells in tableau row i labeled j or smaller.
class GTPattern {
public:
    explicit GTPattern(std::vector<std::vector<int>> rows_top_down)
        : rows_(std::move(rows_top_down)) {
        std::size_t m = rows_.size();
        for (std::size_t r = 0; r < m; ++r)
            if (rows_[r].size() != m - r)
                throw std::invalid_argument("GT-pattern rows must have lengths m..1");
    }

    std::size_t num_rows() const { return rows_.size(); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// j from below (1..m), i from the left (1..j).
    int entry(std::size_t j, std::size_t i) const {
        return rows_[rows_.size() - j][i - 1];
    }

    bool operator==(const GTPattern& o) const { return rows_ == o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
};

/// GT-pattern of a straight-shape tableau over the alphabet [m].
inline GTPattern gt_pattern(const Tableau& t, int m = 0) {
    if (!t.shape().is_straight())
        throw std::invalid_argument("gt_pattern: straight shape required");
    if (m == 0) m = t.max_entry();
    std::vector<std::vector<int>> rows;
    for (int j = m; j >= 1; --j) {
        std::vector<int> row;
        for (int i = 1; i <= j; ++i) {
            int count = 0;
            if (i <= static_cast<int>(t.shape().num_rows()))
                for (int e : t.rows()[static_cast<std::size_t>(i - 1)])
                    if (e <= j) ++count;
            row.push_back(count);
        }
        rows.push_back(std::move(row));
    }
    return GTPattern(std::move(rows));
}

/// Inverse of gt_pattern.
inline Tableau gt_inverse(const GTPattern& g) {
    std::size_t m = g.num_rows();
    auto entry = [&](std::size_t j, std::size_t i) -> int {
        return (i <= j && j >= 1) ? g.entry(j, i) : 0;
    };
    std::vector<int> outer;
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 1; i <= m; ++i) {
        std::vector<int> row;
        for (std::size_t j = i; j <= m; ++j) {
            int count = entry(j, i) - entry(j - 1, i);
            for (int k = 0; k < count; ++k) row.push_back(static_cast<int>(j));
        }
        if (row.empty()) break;
        outer.push_back(static_cast<int>(row.size()));
        rows.push_back(std::move(row));
    }
    return Tableau(SkewShape(Partition(std::move(outer))), std::move(rows));
}

/// a x b array with entries in [0, n], rows and columns weakly increasing.
class PlanePartition {
public:
    PlanePartition(std::vector<std::vector<int>> rows, int bound)
        : rows_(std::move(rows)), bound_(bound) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].size() != rows_[0].size())
                throw std::invalid_argument("plane partition must be rectangular");
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                int v = rows_[r][c];
                if (v < 0 || v > bound_)
                    throw std::invalid_argument("plane partition entry out of range");
                if (c > 0 && rows_[r][c - 1] > v)
                    throw std::invalid_argument("plane partition rows must weakly increase");
                if (r > 0 && rows_[r - 1][c] > v)
                    throw std::invalid_argument("plane partition columns must weakly increase");
            }
        }
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::size_t height() const { return rows_.size(); }
    std::size_t width() const { return rows_.empty() ? 0 : rows_[0].size(); }
    int bound() const { return bound_; }

    long long sum() const {
        long long s = 0;
        for (const auto& row : rows_)
            for (int v : row) s += v;
        return s;
    }

    bool operator==(const PlanePartition& o) const {
        return rows_ == o.rows_ && bound_ == o.bound_;
    }
    bool operator<(const PlanePartition& o) const { return rows_ < o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    int bound_;
};

/// Shape ((a+1)n, n^b); together with content n^{a+b+1} this cuts out
/// SHST(a,b,n).
inline SkewShape shst_shape(int a, int b, int n) {
    std::vector<int> parts;
    parts.push_back((a + 1) * n);
    for (int i = 0; i < b; ++i) parts.push_back(n);
    return SkewShape(Partition(std::move(parts)));
}

inline Composition shst_content(int a, int b, int n) {
    return Composition(std::vector<int>(static_cast<std::size_t>(a + b + 1), n));
}

inline std::vector<Tableau> enumerate_shst(int a, int b, int n) {
    return enumerate_ssyt(shst_shape(a, b, n), shst_content(a, b, n));
}

inline bool is_shst(const Tableau& t, int a, int b, int n) {
    return t.shape() == shst_shape(a, b, n) &&
           content(t, a + b + 1) == shst_content(a, b, n);
}

/// The bijection Phi: free entries of the GT-pattern, reindexed into an
/// a x b rectangle with the increasing convention.
inline PlanePartition shst_to_pp(const Tableau& t, int a, int b, int n) {
    if (!is_shst(t, a, b, n))
        throw std::invalid_argument("shst_to_pp: tableau not in SHST(a,b,n)");
    GTPattern g = gt_pattern(t, a + b + 1);
    std::vector<std::vector<int>> pp(static_cast<std::size_t>(a),
                                     std::vector<int>(static_cast<std::size_t>(b), 0));
    for (int r = 0; r < a; ++r)
        for (int c = 0; c < b; ++c) {
            std::size_t i = static_cast<std::size_t>(b + 1 - c);
            std::size_t j = i + static_cast<std::size_t>(r);
            pp[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                g.entry(j, i);
        }
    return PlanePartition(std::move(pp), n);
}

/// Inverse of shst_to_pp.
inline Tableau pp_to_shst(const PlanePartition& p, int a, int b, int n) {
    if (static_cast<int>(p.height()) != a || static_cast<int>(p.width()) != b ||
        p.bound() != n)
        throw std::invalid_argument("pp_to_shst: wrong plane partition dimensions");
    const int m = a + b + 1;
    // g[j][i]: entries <= j in tableau row i (1-based, i = 1..b+1)
    std::vector<std::vector<int>> g(static_cast<std::size_t>(m + 1),
                                    std::vector<int>(static_cast<std::size_t>(b + 2), 0));
    for (int i = 2; i <= b + 1; ++i)
        for (int j = 1; j <= m; ++j) {
            if (j < i) continue;
            if (j >= i + a) {
                g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = n;
            } else {
                int r = j - i;             // 0..a-1
                int c = b + 1 - i;         // 0..b-1
                g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    p.rows()[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            }
        }
    for (int j = 1; j <= m; ++j) {
        long long rest = 0;
        for (int i = 2; i <= b + 1; ++i)
            rest += g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        g[static_cast<std::size_t>(j)][1] = static_cast<int>(static_cast<long long>(j) * n - rest);
    }
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= b + 1; ++i) {
        std::vector<int> row;
        for (int j = 1; j <= m; ++j) {
            int prev = j > 1 ? g[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)] : 0;
            int count = g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] - prev;
            if (count < 0) throw std::invalid_argument("pp_to_shst: inconsistent pattern");
            for (int k = 0; k < count; ++k) row.push_back(j);
        }
        rows.push_back(std::move(row));
    }
    Tableau t(shst_shape(a, b, n), std::move(rows));
    if (!t.is_semistandard())
        throw std::invalid_argument("pp_to_shst: result not semistandard");
    return t;
}

namespace detail {

// Piecewise-linear toggle at cell (r, c) of the a x b rectangle poset,
// ordered componentwise with (0,0) minimal: replace the value by
// (min over upper covers, or n) + (max over lower covers, or 0) - value.
inline void pl_toggle(std::vector<std::vector<int>>& v, std::size_t r, std::size_t c,
                      int n) {
    std::size_t a = v.size(), b = v[0].size();
    int up = n;
    if (r + 1 < a) up = std::min(up, v[r + 1][c]);
    if (c + 1 < b) up = std::min(up, v[r][c + 1]);
    int down = 0;
    if (r > 0) down = std::max(down, v[r - 1][c]);
    if (c > 0) down = std::max(down, v[r][c - 1]);
    v[r][c] = up + down - v[r][c];
}

}  // namespace detail

/// The toggle-product action on PP(a,b,n): piecewise-linear toggles on
/// the a x b rectangle poset with values in [0, n], swept column by
/// column left to right, bottom to top within each column. Each orbit
/// length divides a+b, and the action satisfies
/// shst_to_pp(promote_inverse(T)) == pp_rowmotion(shst_to_pp(T)).
inline PlanePartition pp_rowmotion(const PlanePartition& p) {
    auto v = p.rows();
    std::size_t a = p.height(), b = p.width();
    for (std::size_t c = 0; c < b; ++c)
        for (std::size_t r = a; r-- > 0;) detail::pl_toggle(v, r, c, p.bound());
    return PlanePartition(std::move(v), p.bound());
}

/// The reverse sweep; toggles are involutions, so this inverts
/// pp_rowmotion exactly.
inline PlanePartition pp_rowmotion_inverse(const PlanePartition& p) {
    auto v = p.rows();
    std::size_t a = p.height(), b = p.width();
    for (std::size_t c = b; c-- > 0;)
        for (std::size_t r = 0; r < a; ++r) detail::pl_toggle(v, r, c, p.bound());
    return PlanePartition(std::move(v), p.bound());
}

/// All plane partitions in the a x b x n box, lexicographic by rows.
inline std::vector<PlanePartition> enumerate_pp(int a, int b, int n) {
    std::vector<PlanePartition> out;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(a),
                                       std::vector<int>(static_cast<std::size_t>(b), 0));
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == a) {
            out.emplace_back(rows, n);
            return;
        }
        if (c == b) {
            fill(r + 1, 0);
            return;
        }
        int lo = 0;
        if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)]);
        for (int v = lo; v <= n; ++v) {
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            fill(r, c + 1);
        }
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    };
    fill(0, 0);
    return out;
}

}  // namespace tabsieve
