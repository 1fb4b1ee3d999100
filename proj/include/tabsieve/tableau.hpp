#pragma once

// Semistandard and standard tableaux on (skew) shapes: validation,
// reading words, content, exhaustive enumeration.

#include <functional>
#include <stdexcept>
#include <vector>

#include "tabsieve/partition.hpp"

namespace tabsieve {

/// A word is a list of positive integers.
using Word = std::vector<int>;

/// Filling of a skew shape, row-major; rows_[r] holds the entries of the
/// cells present in row r, left to right.
class Tableau {
public:
    Tableau() = default;

    Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (rows_.size() != shape_.num_rows())
            throw std::invalid_argument("tableau row count does not match shape");
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (static_cast<int>(rows_[r].size()) != shape_.row_length(r))
                throw std::invalid_argument("tableau row length does not match shape");
    }

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// Entry at absolute column c of row r; the cell must exist.
    int at(std::size_t r, int c) const {
        return rows_[r][static_cast<std::size_t>(c - shape_.row_begin(r))];
    }
    int& at(std::size_t r, int c) {
        return rows_[r][static_cast<std::size_t>(c - shape_.row_begin(r))];
    }

    long long num_cells() const { return shape_.num_cells(); }

    /// Rows weakly increasing, columns strictly increasing.
    bool is_semistandard() const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t i = 0; i < rows_[r].size(); ++i) {
                if (rows_[r][i] < 1) return false;
                if (i + 1 < rows_[r].size() && rows_[r][i] > rows_[r][i + 1]) return false;
            }
            if (r + 1 < rows_.size()) {
                for (int c = shape_.row_begin(r + 1); c < shape_.row_end(r + 1); ++c)
                    if (shape_.has_cell(r, c) && at(r, c) >= at(r + 1, c)) return false;
            }
        }
        return true;
    }

    int max_entry() const {
        int m = 0;
        for (const auto& row : rows_)
            for (int e : row) m = std::max(m, e);
        return m;
    }

    bool operator==(const Tableau& o) const {
        return shape_ == o.shape_ && rows_ == o.rows_;
    }
    bool operator!=(const Tableau& o) const { return !(*this == o); }
    bool operator<(const Tableau& o) const {
        if (shape_ != o.shape_) return shape_ < o.shape_;
        return rows_ < o.rows_;
    }

private:
    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

/// Row by row, left to right, bottom row first.
inline Word reading_word(const Tableau& t) {
    Word w;
    w.reserve(static_cast<std::size_t>(t.num_cells()));
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

inline Composition word_content(const Word& w, int min_length = 0) {
    int m = min_length;
    for (int letter : w) m = std::max(m, letter);
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    for (int letter : w) {
        if (letter < 1) throw std::invalid_argument("word letters must be positive");
        ++counts[static_cast<std::size_t>(letter - 1)];
    }
    return Composition(std::move(counts));
}

inline Composition content(const Tableau& t, int min_length = 0) {
    return word_content(reading_word(t), min_length);
}

/// All semistandard fillings of `shape` with the given content, in
/// lexicographic order of the top-down row-major reading.
inline std::vector<Tableau> enumerate_ssyt(const SkewShape& shape,
                                           const Composition& content) {
    if (shape.num_cells() != content.size())
        throw std::invalid_argument("enumerate_ssyt: |shape| != |content|");
    std::vector<Tableau> out;
    std::vector<int> remaining = content.parts();
    const int m = static_cast<int>(remaining.size());

    std::vector<std::vector<int>> rows(shape.num_rows());
    for (std::size_t r = 0; r < shape.num_rows(); ++r)
        rows[r].assign(static_cast<std::size_t>(shape.row_length(r)), 0);

    auto entry_at = [&](std::size_t r, int c) -> int& {
        return rows[r][static_cast<std::size_t>(c - shape.row_begin(r))];
    };

    std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
        if (r == shape.num_rows()) {
            out.emplace_back(shape, rows);
            return;
        }
        if (c == shape.row_end(r)) {
            fill(r + 1, r + 1 < shape.num_rows() ? shape.row_begin(r + 1) : 0);
            return;
        }
        int lo = 1;
        if (c > shape.row_begin(r)) lo = std::max(lo, entry_at(r, c - 1));
        if (r > 0 && shape.has_cell(r - 1, c)) lo = std::max(lo, entry_at(r - 1, c) + 1);
        for (int v = lo; v <= m; ++v) {
            if (remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<std::size_t>(v - 1)];
            entry_at(r, c) = v;
            fill(r, c + 1);
            ++remaining[static_cast<std::size_t>(v - 1)];
        }
        entry_at(r, c) = 0;
    };

    if (shape.num_rows() == 0) {
        out.emplace_back(shape, rows);
        return out;
    }
    fill(0, shape.row_begin(0));
    return out;
}

/// All semistandard fillings with entries at most `max_entry`, any content.
inline std::vector<Tableau> enumerate_ssyt_bounded(const SkewShape& shape,
                                                   int max_entry) {
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows(shape.num_rows());
    for (std::size_t r = 0; r < shape.num_rows(); ++r)
        rows[r].assign(static_cast<std::size_t>(shape.row_length(r)), 0);

    auto entry_at = [&](std::size_t r, int c) -> int& {
        return rows[r][static_cast<std::size_t>(c - shape.row_begin(r))];
    };

    std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
        if (r == shape.num_rows()) {
            out.emplace_back(shape, rows);
            return;
        }
        if (c == shape.row_end(r)) {
            fill(r + 1, r + 1 < shape.num_rows() ? shape.row_begin(r + 1) : 0);
            return;
        }
        int lo = 1;
        if (c > shape.row_begin(r)) lo = std::max(lo, entry_at(r, c - 1));
        if (r > 0 && shape.has_cell(r - 1, c)) lo = std::max(lo, entry_at(r - 1, c) + 1);
        for (int v = lo; v <= max_entry; ++v) {
            entry_at(r, c) = v;
            fill(r, c + 1);
        }
        entry_at(r, c) = 0;
    };

    if (shape.num_rows() == 0) {
        out.emplace_back(shape, rows);
        return out;
    }
    fill(0, shape.row_begin(0));
    return out;
}

/// Ribbon shape with alpha_i cells in row i (top to bottom), consecutive
/// rows overlapping in exactly one column, later rows below-left.
inline SkewShape ribbon_shape(const Composition& alpha) {
    const auto& a = alpha.parts();
    for (int p : a)
        if (p < 1) throw std::invalid_argument("ribbon_shape: parts must be positive");
    std::size_t ell = a.size();
    std::vector<int> outer(ell), inner(ell);
    int start = 0;  // column where row i begins
    for (std::size_t i = ell; i-- > 0;) {
        inner[i] = start;
        outer[i] = start + a[i];
        start = outer[i] - 1;
    }
    Partition in(std::vector<int>(inner.begin(), inner.end()));
    return SkewShape(Partition(std::move(outer)), std::move(in));
}

/// Standard fillings of the ribbon with row lengths alpha.
inline std::vector<Tableau> enumerate_syt_ribbon(const Composition& alpha) {
    SkewShape shape = ribbon_shape(alpha);
    long long n = shape.num_cells();
    std::vector<int> counts(static_cast<std::size_t>(n), 1);
    return enumerate_ssyt(shape, Composition(std::move(counts)));
}

}  // namespace tabsieve
