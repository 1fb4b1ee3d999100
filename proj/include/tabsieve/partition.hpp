#pragma once

// Partitions, compositions and skew shapes (including disjoint direct sums).

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tabsieve {

/// Weakly decreasing list of positive integers. The empty list is the
/// empty partition.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    static Partition rectangle(int width, int height) {
        return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Part i, with trailing zeros implied.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    long long size() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    bool contains(const Partition& inner) const {
        for (std::size_t i = 0; i < inner.length(); ++i)
            if (inner.part(i) > part(i)) return false;
        return true;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

private:
    std::vector<int> parts_;
};

/// List of non-negative integers.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    long long size() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    bool is_partition() const {
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1]) return false;
        return parts_.empty() || parts_.back() >= 0;
    }

    /// Sort parts decreasingly and drop zeros.
    Partition sorted() const {
        std::vector<int> p = parts_;
        std::sort(p.begin(), p.end(), std::greater<int>());
        while (!p.empty() && p.back() == 0) p.pop_back();
        return Partition(std::move(p));
    }

    /// Rotate one step: part 1 moves to the last position.
    Composition rotated_left() const {
        if (parts_.empty()) return *this;
        std::vector<int> p(parts_.begin() + 1, parts_.end());
        p.push_back(parts_.front());
        return Composition(std::move(p));
    }

    /// rot^d, moving the first d parts to the end.
    Composition rotated_left(int d) const {
        Composition c = *this;
        int m = static_cast<int>(parts_.size());
        if (m == 0) return c;
        d = ((d % m) + m) % m;
        for (int i = 0; i < d; ++i) c = c.rotated_left();
        return c;
    }

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return !(*this == o); }

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> out;
    int cols = p.part(0);
    out.reserve(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) {
        int cnt = 0;
        for (int part : p.parts())
            if (part >= j + 1) ++cnt;
        out.push_back(cnt);
    }
    return Partition(std::move(out));
}

/// n(lambda) = sum_j C(lambda'_j, 2).
inline long long n_stat(const Partition& p) {
    Partition c = conjugate(p);
    long long s = 0;
    for (int part : c.parts()) s += static_cast<long long>(part) * (part - 1) / 2;
    return s;
}

/// Multiply every part by n.
inline Partition stretch(const Partition& p, int n) {
    std::vector<int> out;
    out.reserve(p.length());
    for (int part : p.parts()) out.push_back(part * n);
    return Partition(std::move(out));
}

/// Cells of outer not in inner, stored as a pair of partitions.
class SkewShape {
public:
    SkewShape() = default;

    SkewShape(Partition outer, Partition inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_))
            throw std::invalid_argument("inner partition not contained in outer");
    }

    explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    std::size_t num_rows() const { return outer_.length(); }
    int row_begin(std::size_t r) const { return inner_.part(r); }
    int row_end(std::size_t r) const { return outer_.part(r); }
    int row_length(std::size_t r) const { return row_end(r) - row_begin(r); }

    long long num_cells() const { return outer_.size() - inner_.size(); }

    bool has_cell(std::size_t r, int c) const {
        return r < num_rows() && c >= row_begin(r) && c < row_end(r);
    }

    bool is_straight() const { return inner_.empty(); }

    bool operator==(const SkewShape& o) const {
        return outer_ == o.outer_ && inner_ == o.inner_;
    }
    bool operator!=(const SkewShape& o) const { return !(*this == o); }
    bool operator<(const SkewShape& o) const {
        if (outer_ != o.outer_) return outer_ < o.outer_;
        return inner_ < o.inner_;
    }

    std::string to_string() const {
        std::string s = outer_.to_string();
        if (!inner_.empty()) s += "/" + inner_.to_string();
        return s;
    }

private:
    Partition outer_;
    Partition inner_;
};

/// Corner-to-corner placement: earlier summands end up top-right, no two
/// components share a row or column.
inline SkewShape direct_sum(const std::vector<SkewShape>& shapes) {
    std::vector<int> outer, inner;
    int width = 0;
    for (const SkewShape& s : shapes) width += s.outer().part(0);
    int col_shift = width;
    for (const SkewShape& s : shapes) {
        col_shift -= s.outer().part(0);
        for (std::size_t r = 0; r < s.num_rows(); ++r) {
            outer.push_back(s.outer().part(r) + col_shift);
            inner.push_back(s.inner().part(r) + col_shift);
        }
    }
    // inner rows of a fully blank row equal outer; drop nothing, but the
    // stacked lists must still be partitions.
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

/// Disjoint rows of lengths n*nu_j.
inline SkewShape sm_shape(const Partition& nu, int n) {
    if (nu.empty()) throw std::invalid_argument("sm_shape: nu must be non-empty");
    std::vector<SkewShape> rows;
    rows.reserve(nu.length());
    for (int part : nu.parts())
        rows.push_back(SkewShape(Partition({part * n})));
    return direct_sum(rows);
}

/// All partitions of n, largest part at most max_part (0 = no cap).
inline std::vector<Partition> all_partitions(int n, int max_part = 0) {
    if (max_part <= 0 || max_part > n) max_part = n;
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(cap, left); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

/// "outer/inner", e.g. "12,6,3/6,3"; the inner part is optional.
inline SkewShape parse_skew_shape(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(parse_partition(text));
    return SkewShape(parse_partition(text.substr(0, slash)),
                     parse_partition(text.substr(slash + 1)));
}

}  // namespace tabsieve
