#include "mpberg/allowability.hpp"

#include <algorithm>

namespace mpberg {

bool is_p_allowable(const IntMatrix& a, const MultiIndex& beta,
                    const Rational& p) {
    if (p <= 0) throw DomainError("allowability: exponent p must be positive");
    if (beta.size() != a.rows())
        throw DimensionError("allowability: wrong index length");
    std::vector<Rational> v(beta.size());
    for (std::size_t k = 0; k < beta.size(); ++k)
        v[k] = p * Rational(beta[k]) + 2;
    const std::vector<Rational> w = row_times(v, a);
    for (const Rational& e : w)
        if (!(e > 0)) return false;
    return true;
}

bool is_square_integrable(const IntMatrix& a, const MultiIndex& beta) {
    if (beta.size() != a.rows())
        throw DimensionError("allowability: wrong index length");
    MultiIndex shifted(beta.size());
    for (std::size_t k = 0; k < beta.size(); ++k) shifted[k] = beta[k] + 1;
    const MultiIndex w = row_times(shifted, a);
    for (std::size_t j = 0; j < w.size(); ++j) {
        const BigInt g = gcd_vector(a.column(j));
        if (w[j] < g) return false;
    }
    return true;
}

MonomialNorm monomial_lp_norm(const MonomialPolyhedron& p,
                              const MultiIndex& beta, const Rational& pexp) {
    MonomialNorm norm;
    norm.two_pi_power = static_cast<unsigned>(p.dim());
    if (!is_p_allowable(p.exponent_matrix(), beta, pexp)) {
        norm.finite = false;
        return norm;
    }
    // (2 pi)^n det(A) prod_j 1 / ((p beta + 2*1) a_j)
    std::vector<Rational> v(beta.size());
    for (std::size_t k = 0; k < beta.size(); ++k)
        v[k] = pexp * Rational(beta[k]) + 2;
    const std::vector<Rational> w = row_times(v, p.exponent_matrix());
    Rational coeff(p.det_A());
    for (const Rational& e : w) coeff /= e;
    norm.finite = true;
    norm.coeff = coeff;
    return norm;
}

std::vector<MultiIndex> enumerate_s2_box(const IntMatrix& a, long bound) {
    if (bound < 0) throw DomainError("enumerate_s2_box: negative bound");
    const std::size_t n = a.rows();
    std::vector<MultiIndex> found;
    MultiIndex beta(n, BigInt(-bound));
    for (;;) {
        if (is_square_integrable(a, beta)) found.push_back(beta);
        std::size_t pos = n;
        bool rolled_over = true;
        while (pos-- > 0) {
            beta[pos] += 1;
            if (beta[pos] <= bound) {
                rolled_over = false;
                break;
            }
            beta[pos] = -bound;
        }
        if (rolled_over) return found;
    }
}

namespace {

// Left-to-right extended Euclid: x with x . col == gcd(col).
MultiIndex particular_solution(const std::vector<BigInt>& col) {
    const std::size_t n = col.size();
    MultiIndex x(n, BigInt(0));
    BigInt g = col[0];
    x[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        BigInt g2, u, v;
        mpz_gcdext(g2.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t(),
                   col[k].get_mpz_t());
        for (std::size_t i = 0; i < k; ++i) x[i] *= u;
        x[k] = v;
        g = g2;
    }
    if (g < 0) {  // col[0] < 0 and n == 1
        for (BigInt& e : x) e = -e;
    }
    return x;
}

// Basis of the row-vector kernel of x -> x . col: reduce the column to
// (g, 0, ..., 0)^T by unimodular row operations U (smallest pivot index
// first); the rows of U below the first span the kernel.
IntMatrix kernel_basis(const std::vector<BigInt>& col) {
    const std::size_t n = col.size();
    std::vector<BigInt> w = col;
    IntMatrix u = IntMatrix::identity(n);
    for (std::size_t k = 1; k < n; ++k) {
        if (w[k] == 0) continue;
        BigInt g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   w[0].get_mpz_t(), w[k].get_mpz_t());
        BigInt ag, bg;
        mpz_divexact(ag.get_mpz_t(), w[0].get_mpz_t(), g.get_mpz_t());
        mpz_divexact(bg.get_mpz_t(), w[k].get_mpz_t(), g.get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            const BigInt u0 = u(0, j), uk = u(k, j);
            u(0, j) = s * u0 + t * uk;
            u(k, j) = ag * uk - bg * u0;
        }
        w[k] = 0;
        w[0] = g;
    }
    IntMatrix d(n - 1, n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(i - 1, j) = u(i, j);
    return d;
}

}  // namespace

std::optional<WitnessReport> find_witness(const MonomialPolyhedron& p,
                                          long shell_cap) {
    if (p.complexity() == 1) return std::nullopt;

    const IntMatrix& a = p.exponent_matrix();
    const std::size_t n = p.dim();
    const MultiIndex colsum = ones_times(a);

    // Critical column: smallest J maximizing 1.a_j / gcd(a_j); the ratio is
    // an integer because gcd(a_j) divides the column sum.
    std::size_t J = 0;
    BigInt best(-1);
    for (std::size_t j = 0; j < n; ++j) {
        const BigInt ratio = colsum[j] / p.column_gcds()[j];
        if (ratio > best) {
            best = ratio;
            J = j;
        }
    }

    const std::vector<BigInt> a_J = a.column(J);
    const BigInt g_J = p.column_gcds()[J];

    const MultiIndex x = particular_solution(a_J);  // x . a_J == g_J
    const MultiIndex xa = row_times(x, a);

    // Target for the kernel search: t (D A) >= g(A) - x A.
    MultiIndex target(n);
    BigInt max_abs_target(0);
    for (std::size_t j = 0; j < n; ++j) {
        target[j] = p.column_gcds()[j] - xa[j];
        max_abs_target = std::max(max_abs_target, big_abs(target[j]));
    }

    if (shell_cap <= 0) {
        const BigInt cap = 10 * (1 + max_abs_target);
        if (!cap.fits_slong_p())
            throw SearchExhaustedError("witness search cap overflows");
        shell_cap = cap.get_si();
    }

    const std::size_t m = n - 1;  // kernel rank
    IntMatrix d(0, n);
    IntMatrix e(0, n);
    if (m > 0) {
        d = kernel_basis(a_J);
        e = d * a;
    }

    auto emit = [&](const MultiIndex& beta) {
        WitnessReport rep;
        rep.critical_column = J;
        rep.beta = beta;
        MultiIndex shifted(n);
        for (std::size_t k = 0; k < n; ++k) shifted[k] = beta[k] + 1;
        rep.on_plane = (dot(shifted, a_J) == g_J);
        rep.in_s2 = is_square_integrable(a, beta);
        if (!rep.on_plane || !rep.in_s2)
            throw Error("witness construction produced an invalid candidate");
        const Rational upper = *p.lp_interval().upper;
        rep.excluded_exponent =
            upper * Rational(g_J - colsum[J]) + 2 * Rational(colsum[J]);
        return rep;
    };

    auto satisfied = [&](const std::vector<BigInt>& t) {
        for (std::size_t j = 0; j < n; ++j) {
            BigInt s = target[j];
            for (std::size_t i = 0; i < m; ++i) s -= t[i] * e(i, j);
            if (s > 0) return false;
        }
        return true;
    };

    if (m == 0) {
        // One variable: the particular solution is the only candidate.
        std::vector<BigInt> t;
        if (satisfied(t)) {
            MultiIndex beta(n);
            for (std::size_t k = 0; k < n; ++k) beta[k] = x[k] - 1;
            return emit(beta);
        }
        throw SearchExhaustedError("witness search exhausted (cap 0)");
    }

    for (long s = 0; s <= shell_cap; ++s) {
        std::vector<BigInt> t(m, BigInt(-s));
        for (;;) {
            // Skip interior points already covered by smaller shells.
            bool on_shell = false;
            for (const BigInt& ti : t)
                if (big_abs(ti) == s) {
                    on_shell = true;
                    break;
                }
            if (on_shell && satisfied(t)) {
                MultiIndex beta(n);
                for (std::size_t k = 0; k < n; ++k) {
                    beta[k] = x[k] - 1;
                    for (std::size_t i = 0; i < m; ++i)
                        beta[k] += t[i] * d(i, k);
                }
                return emit(beta);
            }
            std::size_t pos = m;
            bool rolled_over = true;
            while (pos-- > 0) {
                t[pos] += 1;
                if (t[pos] <= s) {
                    rolled_over = false;
                    break;
                }
                t[pos] = -s;
            }
            if (rolled_over) break;
        }
    }
    throw SearchExhaustedError(
        "witness search exhausted past shell cap ||t||_inf <= " +
        std::to_string(shell_cap));
}

Rational unboundedness_exponent(const MonomialPolyhedron& p,
                                const WitnessReport& report,
                                const Rational& pexp) {
    const MultiIndex colsum = ones_times(p.exponent_matrix());
    const BigInt& g_J = p.column_gcds()[report.critical_column];
    const BigInt& sum_J = colsum[report.critical_column];
    return pexp * Rational(g_J - sum_J) + 2 * Rational(sum_J);
}

}  // namespace mpberg
