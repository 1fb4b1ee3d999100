#pragma once

// Kostka-Foulkes generating functions, MacMahon's box formula and
// principal specializations, all computed exactly.

#include "tabsieve/charge.hpp"
#include "tabsieve/qpoly.hpp"
#include "tabsieve/tableau.hpp"

namespace tabsieve {

namespace detail {
inline void require_partition(const Composition& c, const char* who) {
    if (!c.is_partition())
        throw std::invalid_argument(std::string(who) + ": content must be a partition");
}
}  // namespace detail

/// K_{shape,content}(q) = sum of q^charge over SSYT(shape, content).
/// The content must already be a partition; callers with compositions
/// sort first (count-safe, not charge-safe).
inline QPoly kostka_foulkes(const SkewShape& shape, const Composition& content) {
    detail::require_partition(content, "kostka_foulkes");
    QPoly out;
    for (const Tableau& t : enumerate_ssyt(shape, content))
        out.add_term(charge(t), 1);
    return out;
}

/// Cocharge generating function.
inline QPoly modified_kf(const SkewShape& shape, const Composition& content) {
    detail::require_partition(content, "modified_kf");
    QPoly out;
    for (const Tableau& t : enumerate_ssyt(shape, content))
        out.add_term(cocharge(t), 1);
    return out;
}

/// K_{shape,gamma}(q) for an arbitrary composition gamma, via sorting the
/// content to a partition. Permuting the content leaves the polynomial
/// unchanged, so this is the charge-graded polynomial as well.
inline QPoly kostka_foulkes_sorted(const SkewShape& shape, const Composition& gamma) {
    Partition nu = gamma.sorted();
    if (shape.num_cells() != nu.size()) return QPoly::zero();
    return kostka_foulkes(shape, Composition(nu.parts()));
}

/// MacMahon box formula: size generating function of PP(a,b,n),
/// prod [i+j+n-1]_q/[i+j-1]_q over i<=a, j<=b.
inline QPoly macmahon(int a, int b, int n) {
    if (a < 0 || b < 0 || n < 0) throw std::invalid_argument("macmahon: negative argument");
    QPoly num = QPoly::one(), den = QPoly::one();
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) {
            num *= q_int(i + j + n - 1);
            den *= q_int(i + j - 1);
        }
    return num.divided_exactly(den);
}

/// s_lambda(1, q, ..., q^{k-1}) = sum over SSYT(lambda) with entries <= k
/// of q^{sum(entries) - |lambda|}.
inline QPoly principal_specialization(const Partition& lam, int k) {
    QPoly out;
    SkewShape shape(lam);
    for (const Tableau& t : enumerate_ssyt_bounded(shape, k)) {
        long long s = 0;
        for (const auto& row : t.rows())
            for (int e : row) s += e - 1;
        out.add_term(s, 1);
    }
    return out;
}

}  // namespace tabsieve
