#include "mpberg/matrix.hpp"

#include <algorithm>

namespace mpberg {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw UsageError("cannot parse rational: '" + s + "'");
    if (q.get_den() == 0)
        throw UsageError("zero denominator in rational: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

BigInt det(const IntMatrix& m) {
    if (!m.square()) throw DimensionError("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return BigInt(1);

    IntMatrix w = m;
    BigInt prev_pivot(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Pivot on the first nonzero entry in column k.
        std::size_t piv = k;
        while (piv < n && w(piv, k) == 0) ++piv;
        if (piv == n) return BigInt(0);
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(w(k, j), w(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss step: division by the previous pivot is exact.
                BigInt t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
                mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev_pivot.get_mpz_t());
            }
            w(i, k) = 0;
        }
        prev_pivot = w(k, k);
    }
    BigInt d = w(n - 1, n - 1);
    return sign < 0 ? BigInt(-d) : d;
}

namespace {

IntMatrix minor_matrix(const IntMatrix& m, std::size_t drop_row,
                       std::size_t drop_col) {
    const std::size_t n = m.rows();
    IntMatrix sub(n - 1, n - 1);
    std::size_t si = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == drop_row) continue;
        std::size_t sj = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == drop_col) continue;
            sub(si, sj) = m(i, j);
            ++sj;
        }
        ++si;
    }
    return sub;
}

}  // namespace

IntMatrix adjugate(const IntMatrix& m) {
    if (!m.square()) throw DimensionError("adjugate: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    if (n == 1) {
        IntMatrix a(1, 1);
        a(0, 0) = 1;
        return a;
    }
    IntMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigInt c = det(minor_matrix(m, i, j));
            if ((i + j) % 2 != 0) c = -c;
            adj(j, i) = c;  // transpose of the cofactor matrix
        }
    return adj;
}

RatMatrix inverse(const IntMatrix& m) {
    const BigInt d = det(m);
    if (d == 0) throw SingularMatrixError("inverse: matrix is singular");
    const IntMatrix adj = adjugate(m);
    RatMatrix inv(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            inv(i, j) = make_rational(adj(i, j), d);
    return inv;
}

BigInt gcd_vector(std::span<const BigInt> v) {
    BigInt g(0);
    for (const BigInt& x : v) g = big_gcd(g, x);
    if (g == 0) throw DegenerateInputError("gcd of the all-zero vector");
    return g;
}

MultiIndex row_times(const MultiIndex& row, const IntMatrix& m) {
    if (row.size() != m.rows())
        throw DimensionError("row * matrix: length mismatch");
    MultiIndex out(m.cols(), BigInt(0));
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += row[k] * m(k, j);
    }
    return out;
}

std::vector<Rational> row_times(const std::vector<Rational>& row,
                                const IntMatrix& m) {
    if (row.size() != m.rows())
        throw DimensionError("row * matrix: length mismatch");
    std::vector<Rational> out(m.cols(), Rational(0));
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] += row[k] * Rational(m(k, j));
    }
    return out;
}

BigInt dot(const MultiIndex& row, const std::vector<BigInt>& col) {
    if (row.size() != col.size()) throw DimensionError("dot: length mismatch");
    BigInt s(0);
    for (std::size_t i = 0; i < row.size(); ++i) s += row[i] * col[i];
    return s;
}

MultiIndex ones_times(const IntMatrix& m) {
    MultiIndex out(m.cols(), BigInt(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += m(i, j);
    return out;
}

bool lex_less(const MultiIndex& a, const MultiIndex& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace mpberg
