#include "mpberg/polyhedron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mpberg {

namespace {

Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r;
    // base is canonical, so num^e / den^e already is.
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;
}

unsigned long to_ulong_exponent(const BigInt& e) {
    BigInt a = big_abs(e);
    if (!a.fits_ulong_p())
        throw DomainError("exponent too large for exact power");
    return a.get_ui();
}

}  // namespace

BigInt projective_height(std::span<const Rational> x) {
    bool all_zero = true;
    BigInt den_lcm(1);
    for (const Rational& q : x) {
        if (q != 0) all_zero = false;
        den_lcm = big_lcm(den_lcm, q.get_den());
    }
    if (all_zero)
        throw DegenerateInputError("projective height of the zero vector");

    std::vector<BigInt> y;
    y.reserve(x.size());
    for (const Rational& q : x) {
        Rational scaled = q * Rational(den_lcm);
        y.push_back(scaled.get_num());  // den is 1 after scaling
    }
    const BigInt g = gcd_vector(y);
    BigInt h(0);
    for (const BigInt& v : y) h += big_abs(v) / g;
    return h;
}

IntMatrix MonomialPolyhedron::normalize(const RatMatrix& raw) {
    if (!raw.square()) throw DimensionError("normalize: matrix not square");
    const std::size_t n = raw.rows();
    if (n == 0) throw DimensionError("normalize: empty matrix");

    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        bool all_zero = true;
        BigInt den_lcm(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (raw(i, j) != 0) all_zero = false;
            den_lcm = big_lcm(den_lcm, raw(i, j).get_den());
        }
        if (all_zero)
            throw DegenerateInputError("row " + std::to_string(i + 1) +
                                       " is zero: the domain is empty");
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = raw(i, j) * Rational(den_lcm);
            b(i, j) = scaled.get_num();
        }
    }

    BigInt d = det(b);
    if (d == 0)
        throw UnboundedDomainError(
            "defining matrix is singular: the domain is unbounded");
    if (d < 0) {
        if (n < 2)
            throw UnboundedDomainError(
                "negative exponent in one variable: the domain is unbounded");
        for (std::size_t j = 0; j < n; ++j) std::swap(b(0, j), b(1, j));
    }
    return b;
}

MonomialPolyhedron MonomialPolyhedron::validate(const IntMatrix& b) {
    if (!b.square()) throw DimensionError("validate: matrix not square");
    const std::size_t n = b.rows();
    if (n == 0) throw DimensionError("validate: empty matrix");

    MonomialPolyhedron p;
    p.n_ = n;
    p.B_ = b;
    p.det_B_ = det(b);
    if (p.det_B_ == 0)
        throw UnboundedDomainError(
            "defining matrix is singular: the domain is unbounded");
    if (p.det_B_ < 0)
        throw UnboundedDomainError(
            "determinant is negative: reorder the rows (normalize first)");

    p.A_ = adjugate(b);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p.A_(i, j) < 0)
                throw UnboundedDomainError(
                    "B^{-1} has a negative entry at (" + std::to_string(i + 1) +
                    "," + std::to_string(j + 1) + "): the domain is unbounded");

    p.det_A_ = det(p.A_);
    p.B_inv_ = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p.B_inv_(i, j) = make_rational(p.A_(i, j), p.det_B_);

    p.heights_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::vector<Rational> col = p.B_inv_.column(k);
        p.heights_[k] = projective_height(col);
    }
    p.kappa_ = *std::max_element(p.heights_.begin(), p.heights_.end());

    p.lp_.lower = make_rational(2 * p.kappa_, p.kappa_ + 1);
    if (p.kappa_ > 1)
        p.lp_.upper = make_rational(2 * p.kappa_, p.kappa_ - 1);
    else
        p.lp_.upper.reset();

    p.g_of_A_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::vector<BigInt> col = p.A_.column(j);
        p.g_of_A_[j] = gcd_vector(col);
    }

    for (std::size_t k = 0; k < n; ++k) {
        bool has_negative = false;
        for (std::size_t j = 0; j < n; ++j)
            if (p.B_(j, k) < 0) {
                has_negative = true;
                break;
            }
        if (has_negative) p.K_set_.push_back(k);
    }
    for (std::size_t l = 0; l < n; ++l) {
        bool needed = false;
        for (std::size_t k : p.K_set_)
            if (p.A_(k, l) != 0) {
                needed = true;
                break;
            }
        if (needed) p.L_set_.push_back(l);
    }
    return p;
}

MonomialPolyhedron MonomialPolyhedron::from_rational(const RatMatrix& raw) {
    return validate(normalize(raw));
}

bool MonomialPolyhedron::contains(
    std::span<const std::complex<double>> z) const {
    if (z.size() != n_) throw DimensionError("contains: wrong point dimension");
    std::vector<double> r(n_);
    for (std::size_t k = 0; k < n_; ++k) r[k] = std::abs(z[k]);
    return contains_radii(r);
}

bool MonomialPolyhedron::contains_radii(std::span<const double> r) const {
    if (r.size() != n_) throw DimensionError("contains: wrong point dimension");
    for (std::size_t j = 0; j < n_; ++j) {
        bool zero_factor = false;
        double s = 0.0;
        for (std::size_t k = 0; k < n_; ++k) {
            const BigInt& b = B_(j, k);
            if (b == 0) continue;  // 0^0 = 1 convention
            if (r[k] == 0.0) {
                if (b < 0) return false;  // undefined monomial
                zero_factor = true;
            } else {
                s += b.get_d() * std::log(r[k]);
            }
        }
        if (zero_factor) continue;  // product is 0 < 1
        if (!(s < 0.0)) return false;
    }
    return true;
}

bool MonomialPolyhedron::contains_moduli(std::span<const Rational> r) const {
    if (r.size() != n_) throw DimensionError("contains: wrong point dimension");
    for (std::size_t j = 0; j < n_; ++j) {
        bool zero_factor = false;
        Rational lhs(1), rhs(1);
        for (std::size_t k = 0; k < n_; ++k) {
            const BigInt& b = B_(j, k);
            if (b == 0) continue;
            if (r[k] == 0) {
                if (b < 0) return false;
                zero_factor = true;
            } else if (b > 0) {
                lhs *= rational_pow(r[k], to_ulong_exponent(b));
            } else {
                rhs *= rational_pow(r[k], to_ulong_exponent(b));
            }
        }
        if (zero_factor) continue;
        if (!(lhs < rhs)) return false;
    }
    return true;
}

namespace {

// Closure membership of a shadow point, with a small relative slack so that
// points generated on a face survive rounding.
bool in_closed_shadow(const IntMatrix& b, double r1, double r2) {
    const double r[2] = {r1, r2};
    for (std::size_t j = 0; j < 2; ++j) {
        double lhs = 1.0, rhs = 1.0;
        for (std::size_t k = 0; k < 2; ++k) {
            const double e = b(j, k).get_d();
            if (e == 0.0) continue;
            if (e > 0)
                lhs *= std::pow(r[k], e);
            else
                rhs *= std::pow(r[k], -e);
        }
        if (lhs == 0.0) continue;
        if (rhs == 0.0) return false;
        if (lhs > rhs * (1.0 + 1e-9)) return false;
    }
    return true;
}

}  // namespace

std::vector<ShadowPoint> shadow_boundary(const MonomialPolyhedron& p,
                                         std::size_t resolution) {
    if (p.dim() != 2)
        throw DimensionError("shadow_boundary supports n = 2 only");
    std::vector<ShadowPoint> out;
    if (resolution == 0) return out;

    const IntMatrix& b = p.defining_matrix();
    for (std::size_t j = 0; j < 2; ++j) {
        const double b1 = b(j, 0).get_d();
        const double b2 = b(j, 1).get_d();
        for (std::size_t i = 0; i <= resolution; ++i) {
            const double t = static_cast<double>(i) / resolution;
            double r1, r2;
            if (b2 != 0.0) {
                r1 = t;
                r2 = std::pow(r1, -b1 / b2);
            } else {
                r1 = 1.0;  // face |z1|^{b1} = 1
                r2 = t;
            }
            if (!std::isfinite(r2)) continue;
            if (in_closed_shadow(b, r1, r2))
                out.push_back(ShadowPoint{j + 1, r1, r2});
        }
    }
    return out;
}

}  // namespace mpberg
