#include "mpberg/smith.hpp"

#include <utility>

namespace mpberg {

namespace {

// Working state: M is reduced in place while P and Q absorb the inverses of
// the elementary operations, so that P * M * Q == input at every step.
struct Reduction {
    IntMatrix M, P, Q;
    std::size_t n;

    explicit Reduction(const IntMatrix& input)
        : M(input),
          P(IntMatrix::identity(input.rows())),
          Q(IntMatrix::identity(input.rows())),
          n(input.rows()) {}

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(M(i, c), M(j, c));
            std::swap(P(c, i), P(c, j));  // columns of P
        }
    }

    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < n; ++r) {
            std::swap(M(r, i), M(r, j));
            std::swap(Q(i, r), Q(j, r));  // rows of Q
        }
    }

    // row_i -= q * row_j  (M);  col_j += q * col_i  (P)
    void add_row(std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t c = 0; c < n; ++c) {
            M(i, c) -= q * M(j, c);
            P(c, j) += q * P(c, i);
        }
    }

    // col_i -= q * col_j  (M);  row_j += q * row_i  (Q)
    void add_col(std::size_t i, std::size_t j, const BigInt& q) {
        for (std::size_t r = 0; r < n; ++r) {
            M(r, i) -= q * M(r, j);
            Q(j, r) += q * Q(i, r);
        }
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < n; ++c) {
            M(i, c) = -M(i, c);
            P(c, i) = -P(c, i);
        }
    }

    // Bezout combination of rows (i, j) keyed on column k: afterwards
    // M(i, k) = gcd and M(j, k) = 0.
    void bezout_rows(std::size_t i, std::size_t j, std::size_t k) {
        const BigInt a = M(i, k), b = M(j, k);
        BigInt g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        BigInt ag, bg;
        mpz_divexact(ag.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(bg.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
        for (std::size_t c = 0; c < n; ++c) {
            const BigInt mi = M(i, c), mj = M(j, c);
            M(i, c) = u * mi + v * mj;
            M(j, c) = ag * mj - bg * mi;
            const BigInt pi = P(c, i), pj = P(c, j);
            P(c, i) = ag * pi + bg * pj;
            P(c, j) = u * pj - v * pi;
        }
    }

    // Bezout combination of columns (i, j) keyed on row k.
    void bezout_cols(std::size_t i, std::size_t j, std::size_t k) {
        const BigInt a = M(k, i), b = M(k, j);
        BigInt g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(),
                   b.get_mpz_t());
        BigInt ag, bg;
        mpz_divexact(ag.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(bg.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
        for (std::size_t r = 0; r < n; ++r) {
            const BigInt mi = M(r, i), mj = M(r, j);
            M(r, i) = u * mi + v * mj;
            M(r, j) = ag * mj - bg * mi;
            const BigInt qi = Q(i, r), qj = Q(j, r);
            Q(i, r) = ag * qi + bg * qj;
            Q(j, r) = u * qj - v * qi;
        }
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    if (!m.square()) throw DimensionError("smith_normal_form: not square");
    const std::size_t n = m.rows();
    Reduction r(m);

    for (std::size_t t = 0; t < n; ++t) {
        // Move the first nonzero entry of the trailing submatrix to (t, t).
        std::size_t pi = n, pj = n;
        for (std::size_t i = t; i < n && pi == n; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (r.M(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n)
            throw SingularMatrixError(
                "smith_normal_form: singular input (quotient group infinite)");
        if (pi != t) r.swap_rows(t, pi);
        if (pj != t) r.swap_cols(t, pj);

        // Clear column t and row t off the pivot; the pivot's absolute value
        // strictly decreases at every Bezout step, so this terminates.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (r.M(i, t) == 0) continue;
                if (mpz_divisible_p(r.M(i, t).get_mpz_t(),
                                    r.M(t, t).get_mpz_t())) {
                    BigInt q;
                    mpz_divexact(q.get_mpz_t(), r.M(i, t).get_mpz_t(),
                                 r.M(t, t).get_mpz_t());
                    r.add_row(i, t, q);
                } else {
                    r.bezout_rows(t, i, t);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (r.M(t, j) == 0) continue;
                if (mpz_divisible_p(r.M(t, j).get_mpz_t(),
                                    r.M(t, t).get_mpz_t())) {
                    BigInt q;
                    mpz_divexact(q.get_mpz_t(), r.M(t, j).get_mpz_t(),
                                 r.M(t, t).get_mpz_t());
                    r.add_col(j, t, q);
                } else {
                    r.bezout_cols(t, j, t);
                    dirty = true;
                }
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        if (r.M(i, i) < 0) r.negate_row(i);

    // Enforce the divisibility chain d_i | d_j for i < j: splice d_j into
    // column i and re-reduce; the pair becomes (gcd, lcm).
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (mpz_divisible_p(r.M(j, j).get_mpz_t(), r.M(i, i).get_mpz_t()))
                continue;
            r.add_col(i, j, BigInt(-1));  // col_i += col_j
            r.bezout_rows(i, j, i);
            // Clear the fill-in M(i, j); exact since M(i, i) = gcd.
            BigInt q;
            mpz_divexact(q.get_mpz_t(), r.M(i, j).get_mpz_t(),
                         r.M(i, i).get_mpz_t());
            r.add_col(j, i, q);
        }
    }

    IntMatrix D(n, n);
    for (std::size_t i = 0; i < n; ++i) D(i, i) = r.M(i, i);
    return SmithDecomposition{std::move(r.P), std::move(D), std::move(r.Q)};
}

}  // namespace mpberg
