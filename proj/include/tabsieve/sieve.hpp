#pragma once

// The CSP/biCSP verification engine: fixed-point censuses compared with
// exact root-of-unity evaluations, shift-exponent search, and the named
// instances packaged for the CLI and tests.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tabsieve/kostka.hpp"
#include "tabsieve/partition.hpp"
#include "tabsieve/planepart.hpp"
#include "tabsieve/promotion.hpp"
#include "tabsieve/qpoly.hpp"
#include "tabsieve/skewrsk.hpp"
#include "tabsieve/tableau.hpp"

namespace tabsieve {

/// A bijection on {0,...,N-1} together with its declared cyclic order.
struct CyclicAction {
    std::vector<std::size_t> next;
    long order = 1;

    std::size_t size() const { return next.size(); }
};

/// Build the index permutation of `act` on X; every image must lie in X.
template <typename T, typename F>
CyclicAction make_action(const std::vector<T>& X, F&& act, long order) {
    std::map<T, std::size_t> index;
    for (std::size_t i = 0; i < X.size(); ++i) index[X[i]] = i;
    CyclicAction a;
    a.order = order;
    a.next.resize(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) {
        auto it = index.find(act(X[i]));
        if (it == index.end())
            throw std::invalid_argument("make_action: set not closed under the action");
        a.next[i] = it->second;
    }
    return a;
}

/// Permutation composition: (a then b) as index maps.
inline std::vector<std::size_t> compose(const std::vector<std::size_t>& a,
                                        const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
    return out;
}

inline std::vector<std::size_t> identity_permutation(std::size_t n) {
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    return id;
}

inline std::vector<std::size_t> permutation_power(const std::vector<std::size_t>& p,
                                                  long long e) {
    std::vector<std::size_t> out = identity_permutation(p.size());
    for (long long i = 0; i < e; ++i) out = compose(out, p);
    return out;
}

/// Lengths of the cycles of the permutation.
inline std::vector<std::size_t> cycle_lengths(const std::vector<std::size_t>& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<std::size_t> lens;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        lens.push_back(len);
    }
    return lens;
}

/// Every cycle length must divide the declared order.
inline void validate_action(const CyclicAction& a) {
    for (std::size_t len : cycle_lengths(a.next))
        if (a.order % static_cast<long>(len) != 0)
            throw std::invalid_argument("CyclicAction: cycle length does not divide order");
}

/// Number of fixed points of act^d, from the cycle lengths.
inline long long fixed_points(const std::vector<std::size_t>& lens, long long d) {
    long long s = 0;
    for (std::size_t len : lens)
        if (d % static_cast<long long>(len) == 0) s += static_cast<long long>(len);
    return s;
}

struct CspRow {
    long d = 0;        // exponent of the first generator
    long d2 = 0;       // exponent of the second generator (biCSP only)
    long long fixed = 0;
    std::string eval;  // decimal value, or a diagnostic for non-integers
    bool integer = false;
    bool ok = false;
};

struct CheckReport {
    bool bivariate = false;
    long order = 0;
    long order2 = 0;  // biCSP only
    std::vector<CspRow> rows;
    bool pass = false;
    std::string note;

    long long total() const {
        return rows.empty() ? 0 : rows.front().fixed;  // row d=0 counts everything
    }
};

/// Compare brute-force fixed points of act^d with f(xi^d) for every
/// d in 0..order-1. A non-integer evaluation is a failure of its own kind.
inline CheckReport csp_check(const CyclicAction& act, const QPoly& f) {
    validate_action(act);
    CheckReport report;
    report.order = act.order;
    report.pass = true;
    std::vector<std::size_t> lens = cycle_lengths(act.next);
    for (long d = 0; d < act.order; ++d) {
        CspRow row;
        row.d = d;
        row.fixed = fixed_points(lens, d);
        if (d == 0) {
            BigInt v = f.eval_at_one();
            row.integer = true;
            row.eval = v.get_str();
            row.ok = v == static_cast<long>(row.fixed);
        } else {
            auto v = eval_at_root(f, act.order, d).as_integer();
            row.integer = v.has_value();
            if (v) {
                row.eval = v->get_str();
                row.ok = *v == static_cast<long>(row.fixed);
            } else {
                row.eval = "non-integer";
                row.ok = false;
            }
        }
        if (!row.ok) report.pass = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

/// Exact biCSP check: f(xi^i, zeta^j) vs fixed points of act1^i act2^j.
/// The two actions must commute.
inline CheckReport bicsp_check(const CyclicAction& act1, const CyclicAction& act2,
                               const QTPoly& f) {
    validate_action(act1);
    validate_action(act2);
    if (act1.size() != act2.size())
        throw std::invalid_argument("bicsp_check: actions on different sets");
    if (compose(act1.next, act2.next) != compose(act2.next, act1.next))
        throw std::invalid_argument("bicsp_check: actions do not commute");
    CheckReport report;
    report.bivariate = true;
    report.order = act1.order;
    report.order2 = act2.order;
    report.pass = true;
    // powers of each generator
    std::vector<std::vector<std::size_t>> pow1 = {identity_permutation(act1.size())};
    for (long i = 1; i < act1.order; ++i) pow1.push_back(compose(pow1.back(), act1.next));
    std::vector<std::vector<std::size_t>> pow2 = {identity_permutation(act2.size())};
    for (long j = 1; j < act2.order; ++j) pow2.push_back(compose(pow2.back(), act2.next));
    for (long i = 0; i < act1.order; ++i)
        for (long j = 0; j < act2.order; ++j) {
            CspRow row;
            row.d = i;
            row.d2 = j;
            std::vector<std::size_t> p = compose(pow1[static_cast<std::size_t>(i)],
                                                 pow2[static_cast<std::size_t>(j)]);
            long long fixed = 0;
            for (std::size_t x = 0; x < p.size(); ++x)
                if (p[x] == x) ++fixed;
            row.fixed = fixed;
            auto v = eval_at_roots(f, act1.order, i, act2.order, j).as_integer();
            row.integer = v.has_value();
            if (v) {
                row.eval = v->get_str();
                row.ok = *v == static_cast<long>(fixed);
            } else {
                row.eval = "non-integer";
                row.ok = false;
            }
            if (!row.ok) report.pass = false;
            report.rows.push_back(std::move(row));
        }
    return report;
}

/// Smallest E in 0..n-1 with q^E f(q) a non-negative integer at every
/// n-th root of unity (shifting by n changes nothing, so this range is
/// exhaustive); nullopt when no such E exists.
inline std::optional<long> find_shift(const QPoly& f, long n) {
    for (long e = 0; e < n; ++e) {
        QPoly g = f.shifted(e);
        bool ok = true;
        for (long d = 0; d < n && ok; ++d) {
            auto v = eval_at_root(g, n, d).as_integer();
            ok = v.has_value() && *v >= 0;
        }
        if (ok) return e;
    }
    return std::nullopt;
}

/// The CSP polynomial read off the cycle type: an orbit of size s
/// contributes sum_i q^{i * order/s}. csp_check against this polynomial
/// passes by construction (internal oracle).
inline QPoly cycle_type_polynomial(const CyclicAction& act) {
    validate_action(act);
    QPoly f;
    for (std::size_t len : cycle_lengths(act.next)) {
        long step = act.order / static_cast<long>(len);
        for (std::size_t i = 0; i < len; ++i)
            f.add_term(static_cast<long>(i) * step, 1);
    }
    return f;
}

/// The action "apply promotion `power` times" on a set closed under that
/// power (the set need not be closed under single promotion steps).
inline CyclicAction promotion_power_action(const std::vector<Tableau>& X, int m,
                                           long long power, long order) {
    return make_action(
        X, [m, power](const Tableau& t) { return promote(t, m, power); }, order);
}

/// A packaged CSP or biCSP instance: the set size, action(s) as index
/// permutations, and the exact polynomial being verified.
struct CspInstance {
    std::string name;
    std::string description;
    bool bivariate = false;
    CyclicAction act;
    QPoly f;
    CyclicAction act2;  // biCSP only
    QTPoly f2;          // biCSP only
    QPoly alt_f;        // optional competing polynomial, reported in the note
    std::string alt_label;

    CheckReport run() const {
        CheckReport rep = bivariate ? bicsp_check(act, act2, f2) : csp_check(act, f);
        if (!alt_label.empty()) {
            bool alt_pass = csp_check(act, alt_f).pass;
            rep.note = alt_label + ": " + (alt_pass ? "pass" : "fail");
        }
        return rep;
    }
};

/// Parameters accepted by named_instance; each instance reads the fields
/// it needs and ignores the rest.
struct InstanceParams {
    int a = 0, b = 0, n = 0, m = 0, d = 1;
    Partition nu;
    Composition gamma;
    std::vector<int> widths, heights;  // disjoint rectangles a_i^{b_i}
};

namespace detail {

inline CspInstance stretched_hooks_instance(int a, int b, int n) {
    CspInstance inst;
    inst.name = "stretched-hooks";
    inst.description = "SHST(" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(n) + ") under promotion";
    std::vector<Tableau> X = enumerate_shst(a, b, n);
    inst.act = promotion_power_action(X, a + b + 1, 1, a + b);
    QPoly kf = modified_kf(shst_shape(a, b, n), shst_content(a, b, n));
    long shift = static_cast<long>(n) * b * (b + 1) / 2;
    inst.f = kf.shifted(-shift);
    // the competing shift n*C(b,2); the report records its outcome too
    long alt_shift = static_cast<long>(n) * b * (b - 1) / 2;
    inst.alt_f = kf.shifted(-alt_shift);
    inst.alt_label = "alternative shift n*b*(b-1)/2 = " + std::to_string(alt_shift);
    return inst;
}

inline CspInstance disjoint_rows_instance(const Partition& nu, int n) {
    CspInstance inst;
    inst.name = "disjoint-rows";
    inst.description = "SM(" + nu.to_string() + "," + std::to_string(n) + ") under promotion";
    int m = static_cast<int>(nu.size());
    std::vector<Tableau> X = enumerate_sm(nu, n);
    inst.act = promotion_power_action(X, m, 1, m);
    // The charge-graded skew Kostka polynomial needs the cocharge twist
    // q^{n(n^m)} to evaluate correctly at roots of unity.
    Composition rect(std::vector<int>(static_cast<std::size_t>(m), n));
    inst.f = kostka_foulkes(sm_shape(nu, n), rect)
                 .shifted(n_stat(Partition(rect.parts())));
    return inst;
}

inline CspInstance rectangle_fixed_content_instance(int a, int b, const Composition& gamma,
                                                    int d) {
    int m = static_cast<int>(gamma.length());
    if (d < 1 || m % d != 0 || gamma.rotated_left(d) != gamma)
        throw std::invalid_argument("rectangle-fixed-content: gamma must be rot^d-symmetric");
    CspInstance inst;
    inst.name = "rectangle-fixed-content";
    inst.description = "SSYT(" + std::to_string(a) + "^" + std::to_string(b) +
                       ", fixed content) under promotion^" + std::to_string(d);
    SkewShape shape(Partition::rectangle(a, b));
    std::vector<Tableau> X = enumerate_ssyt(shape, gamma);
    inst.act = promotion_power_action(X, m, d, m / d);
    long long sq = 0;
    for (int g : gamma.parts()) sq += static_cast<long long>(g) * g;
    long shift = static_cast<long>((static_cast<long long>(a) * a * b - sq) / 2);
    inst.f = kostka_foulkes_sorted(shape, gamma).shifted(shift);
    return inst;
}

inline CspInstance disjoint_rectangles_instance(const std::vector<int>& widths,
                                                const std::vector<int>& heights,
                                                const Composition& gamma, int d) {
    if (widths.size() != heights.size() || widths.empty())
        throw std::invalid_argument("disjoint-rectangles: need matching width/height lists");
    int m = static_cast<int>(gamma.length());
    if (d < 1 || m % d != 0 || gamma.rotated_left(d) != gamma)
        throw std::invalid_argument("disjoint-rectangles: gamma must be rot^d-symmetric");
    std::vector<SkewShape> rects;
    for (std::size_t i = 0; i < widths.size(); ++i)
        rects.push_back(SkewShape(Partition::rectangle(widths[i], heights[i])));
    SkewShape shape = direct_sum(rects);
    CspInstance inst;
    inst.name = "disjoint-rectangles";
    inst.description = "SSYT on disjoint rectangles under promotion^" + std::to_string(d);
    std::vector<Tableau> X = enumerate_ssyt(shape, gamma);
    inst.act = promotion_power_action(X, m, d, m / d);
    QPoly kf = kostka_foulkes_sorted(shape, gamma);
    std::optional<long> e = find_shift(kf, m / d);
    if (!e)
        throw std::runtime_error("disjoint-rectangles: no shift exponent exists");
    inst.f = kf.shifted(*e);
    return inst;
}

inline std::vector<Tableau> two_row_set(int m, int b) {
    return enumerate_syt_ribbon(Composition({m - b, b}));
}

inline CspInstance two_row_q_instance(int m, int b) {
    CspInstance inst;
    inst.name = "two-row-q";
    inst.description = "SYT_R(" + std::to_string(m - b) + "," + std::to_string(b) +
                       ") under promotion^" + std::to_string(m);
    std::vector<Tableau> X = two_row_set(m, b);
    inst.act = promotion_power_action(X, m, m, m - 1);
    // binom(m,b) - m + [m-1]_q
    QPoly binom = q_binomial(m, b);
    inst.f = QPoly::constant(binom.eval_at_one() - m) + q_int(m - 1);
    return inst;
}

inline CspInstance two_row_t_instance(int m, int b) {
    CspInstance inst;
    inst.name = "two-row-t";
    inst.description = "SYT_R(" + std::to_string(m - b) + "," + std::to_string(b) +
                       ") under promotion^" + std::to_string(m - 1);
    std::vector<Tableau> X = two_row_set(m, b);
    inst.act = promotion_power_action(X, m, m - 1, m);
    // qbinom(m,b) - [m]_q + (m-1)
    inst.f = q_binomial(m, b) - q_int(m) + QPoly::constant(m - 1);
    return inst;
}

inline CspInstance two_row_bicsp_instance(int m, int b) {
    CspInstance inst;
    inst.name = "two-row-bicsp";
    inst.description = "SYT_R(" + std::to_string(m - b) + "," + std::to_string(b) +
                       ") under promotion^" + std::to_string(m) + " x promotion^" +
                       std::to_string(m - 1);
    inst.bivariate = true;
    std::vector<Tableau> X = two_row_set(m, b);
    inst.act = promotion_power_action(X, m, m, m - 1);       // q tracks this one
    inst.act2 = promotion_power_action(X, m, m - 1, m);      // t tracks this one
    inst.f2 = QTPoly::from_q(q_int(m - 1)) + QTPoly::from_t(q_binomial(m, b) - q_int(m));
    return inst;
}

inline CspInstance three_row_bicsp_instance(int m) {
    if (m <= 3) throw std::invalid_argument("three-row-bicsp: m > 3 required");
    CspInstance inst;
    inst.name = "three-row-bicsp";
    inst.description = "SYT_R(1," + std::to_string(m - 2) + ",1) under promotion^" +
                       std::to_string(m - 2) + " x promotion^" + std::to_string(m - 1);
    inst.bivariate = true;
    std::vector<Tableau> X = enumerate_syt_ribbon(Composition({1, m - 2, 1}));
    inst.act = promotion_power_action(X, m, m - 2, m - 1);   // q tracks this one
    inst.act2 = promotion_power_action(X, m, m - 1, m - 2);  // t tracks this one
    inst.f2 = QTPoly::from_t(q_int(m - 2)) +
              QTPoly::from_q(QPoly::constant(m - 3) * q_int(m - 1));
    return inst;
}

inline CspInstance matrix_rotation_instance(const Partition& nu, int n) {
    CspInstance inst;
    inst.name = "matrix-rotation";
    inst.description = "M(" + std::to_string(n) + "*" + nu.to_string() + "," +
                       std::to_string(n) + "^m) under column rotation";
    int m = static_cast<int>(nu.size());
    std::vector<ContingencyMatrix> X = enumerate_matrices(nu, n);
    inst.act = make_action(
        X, [](const ContingencyMatrix& M) { return rotate_columns(M, 1); }, m);
    // sum over lambda |- mn of K_{lambda,n^m}(q) * K_{lambda,n nu}(1)
    Composition rect(std::vector<int>(static_cast<std::size_t>(m), n));
    Partition nnu = stretch(nu, n);
    QPoly f;
    for (const Partition& lam : all_partitions(m * n)) {
        SkewShape shape{lam};
        BigInt mult(enumerate_ssyt(shape, Composition(nnu.parts())).size());
        if (mult == 0) continue;
        QPoly kf = kostka_foulkes(shape, rect);
        for (const auto& [e, c] : kf.coeffs()) f.add_term(e, c * mult);
    }
    // same cocharge twist as the disjoint-rows instance
    inst.f = f.shifted(n_stat(Partition(rect.parts())));
    return inst;
}

}  // namespace detail

inline CspInstance named_instance(const std::string& name, const InstanceParams& p) {
    if (name == "stretched-hooks") return detail::stretched_hooks_instance(p.a, p.b, p.n);
    if (name == "disjoint-rows") return detail::disjoint_rows_instance(p.nu, p.n);
    if (name == "rectangle-fixed-content")
        return detail::rectangle_fixed_content_instance(p.a, p.b, p.gamma, p.d);
    if (name == "disjoint-rectangles")
        return detail::disjoint_rectangles_instance(p.widths, p.heights, p.gamma, p.d);
    if (name == "two-row-q") return detail::two_row_q_instance(p.m, p.b);
    if (name == "two-row-t") return detail::two_row_t_instance(p.m, p.b);
    if (name == "two-row-bicsp") return detail::two_row_bicsp_instance(p.m, p.b);
    if (name == "three-row-bicsp") return detail::three_row_bicsp_instance(p.m);
    if (name == "matrix-rotation") return detail::matrix_rotation_instance(p.nu, p.n);
    throw std::invalid_argument("named_instance: unknown instance '" + name + "'");
}

}  // namespace tabsieve
