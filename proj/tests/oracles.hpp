#pragma once

// Test-only oracles: independent reference implementations used to pin
// expected values.  Each deliberately takes a different computational route
// than the library code it checks.

#include <complex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mpberg/deck_group.hpp"
#include "mpberg/matrix.hpp"

namespace oracles {

using namespace mpberg;

inline IntMatrix im(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

inline RatMatrix rm(const std::vector<std::vector<std::string>>& rows) {
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(i, j) = rational_from_string(rows[i][j]);
    return m;
}

// Determinant by recursive cofactor (Laplace) expansion along the first row.
inline BigInt laplace_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return BigInt(1);
    if (n == 1) return m(0, 0);
    BigInt acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub(r - 1, cc++) = m(r, c);
            }
        }
        const BigInt term = m(0, j) * laplace_det(sub);
        acc += (j % 2 == 0) ? term : BigInt(-term);
    }
    return acc;
}

// Adjugate built entrywise from Laplace cofactors.
inline IntMatrix laplace_adjugate(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return im({{1}});
    IntMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix sub(n - 1, n - 1);
            std::size_t rr = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    sub(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            BigInt cof = laplace_det(sub);
            if ((i + j) % 2 != 0) cof = -cof;
            adj(j, i) = cof;
        }
    return adj;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                          std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        bool more = false;
        while (i-- > 0) {
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                more = true;
                break;
            }
        }
        if (!more) return out;
    }
}

// Invariant factors through gcds of k x k minors: d_k = g_k / g_{k-1}.
inline std::vector<BigInt> minor_gcd_invariant_factors(const IntMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<BigInt> g(n + 1);
    g[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        BigInt acc(0);
        for (const auto& rows : combinations(n, k))
            for (const auto& cols : combinations(n, k)) {
                IntMatrix sub(k, k);
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b)
                        sub(a, b) = m(rows[a], cols[b]);
                acc = big_gcd(acc, laplace_det(sub));
            }
        g[k] = acc;
    }
    std::vector<BigInt> d(n);
    for (std::size_t k = 1; k <= n; ++k) d[k - 1] = g[k] / g[k - 1];
    return d;
}

// Brute-force audit of a coset representative list: the canonical key of a
// vector x is the fractional part of A^{-1} x.  The representatives must be
// pairwise inequivalent, include the identity, and their coset set must be
// closed under adding every unit vector; a finite set containing zero and
// closed under those (bijective) shifts is the full quotient group.
inline bool coset_closure_check(const IntMatrix& a, const DeckGroup& g) {
    const std::size_t n = a.rows();
    const RatMatrix ainv = inverse(a);
    auto key_of = [&](const MultiIndex& x) {
        std::string key;
        for (std::size_t j = 0; j < n; ++j) {
            Rational s(0);
            for (std::size_t k = 0; k < n; ++k)
                s += ainv(j, k) * Rational(x[k]);
            key += to_string(frac(s));
            key += ',';
        }
        return key;
    };

    std::set<std::string> keys;
    for (const DeckElement& e : g.elements())
        if (!keys.insert(key_of(e.nu)).second) return false;  // collision

    const BigInt expected = big_abs(det(a));
    if (BigInt(static_cast<long>(keys.size())) != expected) return false;

    MultiIndex zero(n, BigInt(0));
    if (keys.find(key_of(zero)) == keys.end()) return false;

    for (const DeckElement& e : g.elements())
        for (std::size_t i = 0; i < n; ++i) {
            MultiIndex shifted = e.nu;
            shifted[i] += 1;
            if (keys.find(key_of(shifted)) == keys.end()) return false;
        }
    return true;
}

// Central finite-difference Jacobian determinant of z -> z^A.
inline std::complex<double> fd_jacobian_det(const IntMatrix& a,
                                            const ComplexPoint& z, double h) {
    const std::size_t n = z.size();
    std::vector<std::vector<std::complex<double>>> jac(
        n, std::vector<std::complex<double>>(n));
    for (std::size_t j = 0; j < n; ++j) {
        ComplexPoint zp = z, zm = z;
        zp[j] += h;
        zm[j] -= h;
        const ComplexPoint fp = monomial_map(a, zp);
        const ComplexPoint fm = monomial_map(a, zm);
        for (std::size_t k = 0; k < n; ++k)
            jac[k][j] = (fp[k] - fm[k]) / (2.0 * h);
    }
    // Laplace expansion; n stays tiny in tests.
    struct Det {
        static std::complex<double> of(
            std::vector<std::vector<std::complex<double>>> m) {
            const std::size_t n = m.size();
            if (n == 1) return m[0][0];
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<std::vector<std::complex<double>>> sub;
                for (std::size_t r = 1; r < n; ++r) {
                    std::vector<std::complex<double>> row;
                    for (std::size_t c = 0; c < n; ++c)
                        if (c != j) row.push_back(m[r][c]);
                    sub.push_back(row);
                }
                const auto term = m[0][j] * of(sub);
                acc += (j % 2 == 0) ? term : -term;
            }
            return acc;
        }
    };
    return Det::of(jac);
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t n,
                                   long lo, long hi) {
    IntMatrix m(n, n);
    std::uniform_int_distribution<long> d(lo, hi);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

// Strictly diagonally dominant matrix with nonpositive off-diagonal entries:
// always a valid defining matrix (det > 0 and nonnegative inverse).
inline IntMatrix random_monotone_matrix(std::mt19937_64& rng, std::size_t n) {
    IntMatrix m(n, n);
    std::uniform_int_distribution<long> off(0, 2), extra(1, 3);
    for (std::size_t i = 0; i < n; ++i) {
        long row_sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const long c = off(rng);
            m(i, j) = -c;
            row_sum += c;
        }
        m(i, i) = row_sum + extra(rng);
    }
    return m;
}

// Monomial L2 norm on the Hartogs triangle {|z1| < |z2| < 1} for the
// integrand |z1|^{c1} |z2|^{c2}, by hand iterated integration:
//   (2 pi)^2 \int_0^1 r2^{c2+1} \int_0^{r2} r1^{c1+1} dr1 dr2
//     = (2 pi)^2 / ((c1 + 2)(c1 + c2 + 4)).
inline double hartogs_l2_closed_form(long c1, long c2) {
    const double two_pi = 6.283185307179586476925286766559;
    return two_pi * two_pi /
           (static_cast<double>(c1 + 2) * static_cast<double>(c1 + c2 + 4));
}

}  // namespace oracles
