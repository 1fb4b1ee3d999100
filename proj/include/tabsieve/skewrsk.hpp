#pragma once

// Disjoint-row tableaux SM(nu,n): matrix and biword encodings, RSK row
// insertion, and column rotation.

#include <stdexcept>
#include <vector>

#include "tabsieve/partition.hpp"
#include "tabsieve/tableau.hpp"

namespace tabsieve {

/// Non-negative integer matrix; row i sums to n*nu_i, every column sums
/// to n.
struct ContingencyMatrix {
    std::vector<std::vector<int>> entries;

    std::size_t num_rows() const { return entries.size(); }
    std::size_t num_cols() const { return entries.empty() ? 0 : entries[0].size(); }

    bool operator==(const ContingencyMatrix& o) const { return entries == o.entries; }
    bool operator<(const ContingencyMatrix& o) const { return entries < o.entries; }
};

/// Lexicographically sorted list of (top, bottom) pairs.
struct Biword {
    std::vector<std::pair<int, int>> pairs;

    Word top() const {
        Word w;
        w.reserve(pairs.size());
        for (auto& p : pairs) w.push_back(p.first);
        return w;
    }
    Word bottom() const {
        Word w;
        w.reserve(pairs.size());
        for (auto& p : pairs) w.push_back(p.second);
        return w;
    }
};

inline bool is_sm_tableau(const Tableau& t, const Partition& nu, int n) {
    if (t.shape() != sm_shape(nu, n)) return false;
    Composition c = content(t, static_cast<int>(nu.size()));
    if (static_cast<long long>(c.length()) != nu.size()) return false;
    for (std::size_t i = 0; i < c.length(); ++i)
        if (c.part(i) != n) return false;
    return true;
}

inline std::vector<Tableau> enumerate_sm(const Partition& nu, int n) {
    int m = static_cast<int>(nu.size());
    return enumerate_ssyt(sm_shape(nu, n),
                          Composition(std::vector<int>(static_cast<std::size_t>(m), n)));
}

/// M_ij = number of entries in row i of T with value j.
inline ContingencyMatrix tableau_to_matrix(const Tableau& t, const Partition& nu, int n) {
    if (!is_sm_tableau(t, nu, n))
        throw std::invalid_argument("tableau_to_matrix: not an SM(nu,n) tableau");
    int m = static_cast<int>(nu.size());
    ContingencyMatrix M;
    M.entries.assign(nu.length(), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (std::size_t r = 0; r < t.rows().size(); ++r)
        for (int e : t.rows()[r]) ++M.entries[r][static_cast<std::size_t>(e - 1)];
    return M;
}

inline Tableau matrix_to_tableau(const ContingencyMatrix& M, const Partition& nu, int n) {
    std::vector<std::vector<int>> rows;
    for (std::size_t r = 0; r < M.num_rows(); ++r) {
        std::vector<int> row;
        for (std::size_t j = 0; j < M.num_cols(); ++j)
            for (int k = 0; k < M.entries[r][j]; ++k) row.push_back(static_cast<int>(j) + 1);
        rows.push_back(std::move(row));
    }
    return Tableau(sm_shape(nu, n), std::move(rows));
}

/// (i over j) appears M_{l+1-i, j} times, l the number of matrix rows;
/// the bottom row of the result is the reading word of the tableau.
inline Biword matrix_to_biword(const ContingencyMatrix& M) {
    Biword w;
    std::size_t l = M.num_rows();
    for (std::size_t i = 1; i <= l; ++i)
        for (std::size_t j = 0; j < M.num_cols(); ++j) {
            int count = M.entries[l - i][j];
            for (int k = 0; k < count; ++k)
                w.pairs.emplace_back(static_cast<int>(i), static_cast<int>(j) + 1);
        }
    // pairs are generated in lexicographic order already
    return w;
}

/// RSK row insertion of the bottom letters, recording the top letters.
inline std::pair<Tableau, Tableau> rsk(const Biword& w) {
    std::vector<std::vector<int>> p_rows, q_rows;
    for (const auto& [top, bottom] : w.pairs) {
        int value = bottom;
        std::size_t r = 0;
        while (true) {
            if (r == p_rows.size()) {
                p_rows.emplace_back();
                q_rows.emplace_back();
            }
            auto& row = p_rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), value);
            if (it == row.end()) {
                row.push_back(value);
                q_rows[r].push_back(top);
                break;
            }
            std::swap(*it, value);
            ++r;
        }
    }
    std::vector<int> outer;
    outer.reserve(p_rows.size());
    for (const auto& row : p_rows) outer.push_back(static_cast<int>(row.size()));
    SkewShape shape{Partition(outer)};
    return {Tableau(shape, std::move(p_rows)), Tableau(shape, std::move(q_rows))};
}

/// Column j moves to column j - steps (mod m).
inline ContingencyMatrix rotate_columns(const ContingencyMatrix& M, int steps) {
    int m = static_cast<int>(M.num_cols());
    if (m == 0) return M;
    steps = ((steps % m) + m) % m;
    ContingencyMatrix out;
    out.entries.assign(M.num_rows(), std::vector<int>(static_cast<std::size_t>(m), 0));
    for (std::size_t r = 0; r < M.num_rows(); ++r)
        for (int j = 0; j < m; ++j)
            out.entries[r][static_cast<std::size_t>((j - steps + m) % m)] =
                M.entries[r][static_cast<std::size_t>(j)];
    return out;
}

/// All matrices with row sums n*nu and every column sum n, m columns.
inline std::vector<ContingencyMatrix> enumerate_matrices(const Partition& nu, int n) {
    int m = static_cast<int>(nu.size());
    std::size_t l = nu.length();
    std::vector<ContingencyMatrix> out;
    ContingencyMatrix M;
    M.entries.assign(l, std::vector<int>(static_cast<std::size_t>(m), 0));
    std::vector<int> col_remaining(static_cast<std::size_t>(m), n);

    std::function<void(std::size_t, int, int)> fill = [&](std::size_t r, int j, int row_remaining) {
        if (r == l) {
            out.push_back(M);
            return;
        }
        if (j == m) {
            if (row_remaining == 0) fill(r + 1, 0, r + 1 < l ? n * nu.parts()[r + 1] : 0);
            return;
        }
        int cap = std::min(row_remaining, col_remaining[static_cast<std::size_t>(j)]);
        for (int v = 0; v <= cap; ++v) {
            M.entries[r][static_cast<std::size_t>(j)] = v;
            col_remaining[static_cast<std::size_t>(j)] -= v;
            fill(r, j + 1, row_remaining - v);
            col_remaining[static_cast<std::size_t>(j)] += v;
        }
        M.entries[r][static_cast<std::size_t>(j)] = 0;
    };
    fill(0, 0, l > 0 ? n * nu.parts()[0] : 0);
    return out;
}

}  // namespace tabsieve
