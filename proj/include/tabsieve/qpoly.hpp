#pragma once

// Exact univariate/bivariate Laurent polynomials over arbitrary-precision
// integers, q-analogs, cyclotomic polynomials, and exact evaluation at
// roots of unity via cyclotomic residues.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tabsieve {

using BigInt = mpz_class;

/// Laurent polynomial in q with integer coefficients; zero coefficients
/// are never stored.
class QPoly {
public:
    QPoly() = default;

    /// Monomial c * q^e.
    static QPoly term(BigInt c, long e) {
        QPoly p;
        if (c != 0) p.coeffs_[e] = std::move(c);
        return p;
    }

    static QPoly constant(BigInt c) { return term(std::move(c), 0); }
    static QPoly zero() { return QPoly(); }
    static QPoly one() { return constant(1); }

    const std::map<long, BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    BigInt coeff(long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    long min_exponent() const {
        if (coeffs_.empty()) throw std::logic_error("min_exponent of zero polynomial");
        return coeffs_.begin()->first;
    }
    long max_exponent() const {
        if (coeffs_.empty()) throw std::logic_error("max_exponent of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    QPoly& operator+=(const QPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly out;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
        return out;
    }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    /// Multiply by q^e.
    QPoly shifted(long e) const {
        QPoly out;
        for (const auto& [k, c] : coeffs_) out.coeffs_[k + e] = c;
        return out;
    }

    /// Substitute q -> q^{-1}.
    QPoly reversed() const {
        QPoly out;
        for (const auto& [k, c] : coeffs_) out.coeffs_[-k] = c;
        return out;
    }

    /// Substitute q -> q^s (s >= 1).
    QPoly inflated(long s) const {
        QPoly out;
        for (const auto& [k, c] : coeffs_) out.coeffs_[k * s] = c;
        return out;
    }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    void add_term(long e, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    /// Exact division; throws when the remainder is non-zero.
    QPoly divided_exactly(const QPoly& divisor) const {
        if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
        if (is_zero()) return QPoly();
        // normalize Laurent parts
        long shift_num = min_exponent();
        long shift_den = divisor.min_exponent();
        std::vector<BigInt> num = dense(*this), den = dense(divisor);
        std::vector<BigInt> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigInt(0));
        if (num.size() < den.size())
            throw std::invalid_argument("inexact polynomial division");
        const BigInt& lead = den.back();
        for (std::size_t i = num.size(); i-- >= den.size() && i + 1 > 0;) {
            if (num[i] == 0) continue;
            BigInt q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num[i].get_mpz_t(), lead.get_mpz_t());
            if (r != 0) throw std::invalid_argument("inexact polynomial division");
            std::size_t off = i - (den.size() - 1);
            quot[off] = q;
            for (std::size_t j = 0; j < den.size(); ++j) num[off + j] -= q * den[j];
        }
        for (const BigInt& c : num)
            if (c != 0) throw std::invalid_argument("inexact polynomial division");
        QPoly out;
        for (std::size_t i = 0; i < quot.size(); ++i)
            out.add_term(static_cast<long>(i) + shift_num - shift_den, quot[i]);
        return out;
    }

    /// Terms "c*q^e" joined by "+", ascending exponents.
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            BigInt a = c;
            if (first) {
                if (a < 0) { os << '-'; a = -a; }
            } else {
                os << (a < 0 ? '-' : '+');
                if (a < 0) a = -a;
            }
            first = false;
            if (e == 0) {
                os << a.get_str();
            } else {
                if (a != 1) os << a.get_str() << '*';
                os << 'q';
                if (e != 1) os << '^' << e;
            }
        }
        return os.str();
    }

private:
    // dense coefficient vector starting at min_exponent()
    static std::vector<BigInt> dense(const QPoly& p) {
        long lo = p.min_exponent(), hi = p.max_exponent();
        std::vector<BigInt> v(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
        for (const auto& [e, c] : p.coeffs_) v[static_cast<std::size_t>(e - lo)] = c;
        return v;
    }

    std::map<long, BigInt> coeffs_;
};

/// [n]_q = 1 + q + ... + q^{n-1}.
inline QPoly q_int(long n) {
    QPoly p;
    for (long i = 0; i < n; ++i) p.add_term(i, 1);
    return p;
}

inline QPoly q_factorial(long n) {
    QPoly p = QPoly::one();
    for (long i = 1; i <= n; ++i) p *= q_int(i);
    return p;
}

inline QPoly q_binomial(long m, long b) {
    if (b < 0 || b > m) throw std::invalid_argument("q_binomial: need 0 <= b <= m");
    return q_factorial(m).divided_exactly(q_factorial(b) * q_factorial(m - b));
}

inline QPoly q_multinomial(long m, const std::vector<long>& parts) {
    long total = 0;
    QPoly den = QPoly::one();
    for (long p : parts) {
        if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
        total += p;
        den *= q_factorial(p);
    }
    if (total != m) throw std::invalid_argument("q_multinomial: parts do not sum to m");
    return q_factorial(m).divided_exactly(den);
}

/// n-th cyclotomic polynomial, by recursive exact division of q^n - 1.
inline QPoly cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n >= 1 required");
    static std::map<long, QPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    QPoly p = QPoly::term(1, n) - QPoly::one();
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = p.divided_exactly(cyclotomic(d));
    cache[n] = p;
    return p;
}

/// Exact element of Z[q]/Phi_n(q): the value of a polynomial at a fixed
/// primitive n-th root of unity.
class CycloValue {
public:
    CycloValue(long order, std::vector<BigInt> residue)
        : order_(order), residue_(std::move(residue)) {}

    static CycloValue zero(long order) {
        return CycloValue(order, std::vector<BigInt>(phi_degree(order), BigInt(0)));
    }

    long order() const { return order_; }
    const std::vector<BigInt>& residue() const { return residue_; }

    static std::size_t phi_degree(long order) {
        QPoly c = cyclotomic(order);
        return static_cast<std::size_t>(c.max_exponent());
    }

    bool operator==(const CycloValue& o) const {
        return order_ == o.order_ && residue_ == o.residue_;
    }
    bool operator!=(const CycloValue& o) const { return !(*this == o); }

    /// The value as a rational integer, when it is one.
    std::optional<BigInt> as_integer() const {
        for (std::size_t i = 1; i < residue_.size(); ++i)
            if (residue_[i] != 0) return std::nullopt;
        return residue_.empty() ? BigInt(0) : residue_[0];
    }

    CycloValue operator+(const CycloValue& o) const {
        require_same_order(o);
        std::vector<BigInt> r = residue_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.residue_[i];
        return CycloValue(order_, std::move(r));
    }

    CycloValue operator*(const CycloValue& o) const {
        require_same_order(o);
        std::vector<BigInt> prod(residue_.size() * 2, BigInt(0));
        for (std::size_t i = 0; i < residue_.size(); ++i) {
            if (residue_[i] == 0) continue;
            for (std::size_t j = 0; j < o.residue_.size(); ++j)
                prod[i + j] += residue_[i] * o.residue_[j];
        }
        return CycloValue(order_, reduce(order_, std::move(prod)));
    }

    /// Reduce a dense coefficient vector mod Phi_n.
    static std::vector<BigInt> reduce(long order, std::vector<BigInt> v) {
        QPoly phi = cyclotomic(order);
        std::size_t deg = static_cast<std::size_t>(phi.max_exponent());
        std::vector<BigInt> phic(deg + 1, BigInt(0));
        for (const auto& [e, c] : phi.coeffs()) phic[static_cast<std::size_t>(e)] = c;
        // Phi_n is monic
        for (std::size_t i = v.size(); i-- > deg;) {
            if (v[i] == 0) continue;
            BigInt c = v[i];
            for (std::size_t j = 0; j <= deg; ++j) v[i - deg + j] -= c * phic[j];
        }
        v.resize(deg);
        return v;
    }

private:
    void require_same_order(const CycloValue& o) const {
        if (order_ != o.order_)
            throw std::invalid_argument("CycloValue: mismatched root orders");
    }

    long order_;
    std::vector<BigInt> residue_;
};

/// f(xi^d) for xi a fixed primitive n-th root of unity, exactly.
inline CycloValue eval_at_root(const QPoly& f, long n, long d) {
    std::vector<BigInt> acc(static_cast<std::size_t>(n), BigInt(0));
    for (const auto& [e, c] : f.coeffs()) {
        long k = ((e * d) % n + n) % n;
        acc[static_cast<std::size_t>(k)] += c;
    }
    return CycloValue(n, CycloValue::reduce(n, std::move(acc)));
}

/// Whether f(xi^d) is fixed by complex conjugation (i.e. is real).
inline bool is_real_at_root(const QPoly& f, long n, long d) {
    return eval_at_root(f, n, d) == eval_at_root(f, n, -d);
}

/// Bivariate polynomial in q and t, integer coefficients.
class QTPoly {
public:
    QTPoly() = default;

    static QTPoly from_q(const QPoly& p) {
        QTPoly out;
        for (const auto& [e, c] : p.coeffs()) out.coeffs_[{e, 0}] = c;
        return out;
    }
    static QTPoly from_t(const QPoly& p) {
        QTPoly out;
        for (const auto& [e, c] : p.coeffs()) out.coeffs_[{0, e}] = c;
        return out;
    }
    static QTPoly constant(BigInt c) {
        QTPoly out;
        if (c != 0) out.coeffs_[{0, 0}] = std::move(c);
        return out;
    }

    const std::map<std::pair<long, long>, BigInt>& coeffs() const { return coeffs_; }

    QTPoly& operator+=(const QTPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e.first, e.second, c);
        return *this;
    }
    QTPoly& operator-=(const QTPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }

    void add_term(long eq, long et, const BigInt& c) {
        if (c == 0) return;
        auto key = std::make_pair(eq, et);
        auto [it, inserted] = coeffs_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    BigInt eval_at_one_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            BigInt a = c;
            if (first) {
                if (a < 0) { os << '-'; a = -a; }
            } else {
                os << (a < 0 ? '-' : '+');
                if (a < 0) a = -a;
            }
            first = false;
            bool has_var = e.first != 0 || e.second != 0;
            if (!has_var || a != 1) os << a.get_str();
            if (!has_var) continue;
            if (a != 1) os << '*';
            if (e.first != 0) {
                os << 'q';
                if (e.first != 1) os << '^' << e.first;
            }
            if (e.second != 0) {
                if (e.first != 0) os << '*';
                os << 't';
                if (e.second != 1) os << '^' << e.second;
            }
        }
        return os.str();
    }

private:
    std::map<std::pair<long, long>, BigInt> coeffs_;
};

/// Element of Z[q]/Phi_{n1} tensor Z[t]/Phi_{n2}; exact value of a
/// bivariate polynomial at a pair of roots of unity.
class TensorCycloValue {
public:
    TensorCycloValue(long n1, long n2)
        : n1_(n1), n2_(n2),
          mat_(CycloValue::phi_degree(n1),
               std::vector<BigInt>(CycloValue::phi_degree(n2), BigInt(0))) {}

    std::optional<BigInt> as_integer() const {
        for (std::size_t i = 0; i < mat_.size(); ++i)
            for (std::size_t j = 0; j < mat_[i].size(); ++j)
                if ((i || j) && mat_[i][j] != 0) return std::nullopt;
        if (mat_.empty() || mat_[0].empty()) return BigInt(0);
        return mat_[0][0];
    }

    void add_outer(const std::vector<BigInt>& u, const std::vector<BigInt>& v,
                   const BigInt& c) {
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                mat_[i][j] += c * u[i] * v[j];
        }
    }

private:
    long n1_, n2_;
    std::vector<std::vector<BigInt>> mat_;
};

/// f(xi^i, zeta^j) for xi, zeta fixed primitive n1-th and n2-th roots.
inline TensorCycloValue eval_at_roots(const QTPoly& f, long n1, long i, long n2, long j) {
    TensorCycloValue out(n1, n2);
    for (const auto& [e, c] : f.coeffs()) {
        std::vector<BigInt> u(static_cast<std::size_t>(n1), BigInt(0));
        u[static_cast<std::size_t>(((e.first * i) % n1 + n1) % n1)] = 1;
        std::vector<BigInt> v(static_cast<std::size_t>(n2), BigInt(0));
        v[static_cast<std::size_t>(((e.second * j) % n2 + n2) % n2)] = 1;
        out.add_outer(CycloValue::reduce(n1, std::move(u)),
                      CycloValue::reduce(n2, std::move(v)), c);
    }
    return out;
}

}  // namespace tabsieve
