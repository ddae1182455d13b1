#include "mpberg/deck_group.hpp"

#include <cmath>
#include <numbers>

namespace mpberg {

Rational frac(const Rational& q) {
    BigInt fq;
    mpz_fdiv_q(fq.get_mpz_t(), q.get_num().get_mpz_t(),
               q.get_den().get_mpz_t());
    return q - Rational(fq);
}

std::vector<std::complex<double>> DeckElement::factors() const {
    std::vector<std::complex<double>> f(phase.size());
    for (std::size_t k = 0; k < phase.size(); ++k) {
        const double t = 2.0 * std::numbers::pi * phase[k].get_d();
        f[k] = {std::cos(t), std::sin(t)};
    }
    return f;
}

DeckGroup DeckGroup::build(const IntMatrix& a) {
    if (!a.square()) throw DimensionError("deck group: matrix not square");
    const std::size_t n = a.rows();

    const SmithDecomposition snf = smith_normal_form(a);  // throws if singular
    const std::vector<BigInt> d = snf.invariant_factors();

    DeckGroup g;
    g.A_ = a;
    g.A_inv_ = inverse(a);
    g.order_ = 1;
    for (const BigInt& di : d) g.order_ *= di;

    if (!g.order_.fits_ulong_p() || g.order_ > (1L << 22))
        throw DomainError("deck group too large to enumerate (order " +
                          to_string(g.order_) + ")");
    const unsigned long count = g.order_.get_ui();
    g.elements_.reserve(count);

    std::vector<BigInt> r(n, BigInt(0));
    for (unsigned long idx = 0; idx < count; ++idx) {
        // nu = P r
        MultiIndex nu(n, BigInt(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) nu[i] += snf.P(i, j) * r[j];

        DeckElement e;
        e.nu = std::move(nu);
        e.phase.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational s(0);
            for (std::size_t j = 0; j < n; ++j)
                s += g.A_inv_(i, j) * Rational(e.nu[j]);
            e.phase[i] = frac(s);
        }
        g.elements_.push_back(std::move(e));

        // lexicographic odometer over the box prod [0, d_i)
        for (std::size_t pos = n; pos-- > 0;) {
            r[pos] += 1;
            if (r[pos] < d[pos]) break;
            r[pos] = 0;
        }
    }
    return g;
}

ComplexPoint apply_deck(const DeckElement& e,
                        std::span<const std::complex<double>> z) {
    if (e.phase.size() != z.size())
        throw DimensionError("apply_deck: wrong point dimension");
    const auto f = e.factors();
    ComplexPoint out(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) out[k] = f[k] * z[k];
    return out;
}

std::complex<double> pow_int(const std::complex<double>& z, const BigInt& e) {
    if (e == 0) return {1.0, 0.0};
    if (e < 0) {
        if (z == std::complex<double>(0.0, 0.0))
            throw DomainError("zero raised to a negative power");
        return 1.0 / pow_int(z, BigInt(-e));
    }
    if (!e.fits_ulong_p()) throw DomainError("exponent too large");
    unsigned long k = e.get_ui();
    std::complex<double> base = z, acc = {1.0, 0.0};
    while (k != 0) {
        if (k & 1UL) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

ComplexPoint monomial_map(const IntMatrix& a,
                          std::span<const std::complex<double>> z) {
    if (!a.square() || a.rows() != z.size())
        throw DimensionError("monomial_map: dimension mismatch");
    const std::size_t n = z.size();
    ComplexPoint out(n, {1.0, 0.0});
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) out[k] *= pow_int(z[j], a(k, j));
    return out;
}

std::complex<double> jacobian_det(const IntMatrix& a,
                                  std::span<const std::complex<double>> z) {
    if (!a.square() || a.rows() != z.size())
        throw DimensionError("jacobian_det: dimension mismatch");
    const MultiIndex colsum = ones_times(a);
    std::complex<double> v(det(a).get_d(), 0.0);
    for (std::size_t j = 0; j < z.size(); ++j)
        v *= pow_int(z[j], BigInt(colsum[j] - 1));
    return v;
}

ComplexPoint principal_preimage(const DeckGroup& g,
                                std::span<const std::complex<double>> w) {
    const std::size_t n = g.exponent_matrix().rows();
    if (w.size() != n)
        throw DimensionError("principal_preimage: wrong point dimension");

    std::vector<double> logr(n), theta(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double m = std::abs(w[k]);
        if (m == 0.0)
            throw BranchError("point on a coordinate axis: no branch of w^{A^{-1}}");
        logr[k] = std::log(m);
        double t = std::arg(w[k]);
        if (t == -std::numbers::pi) t = std::numbers::pi;  // branch (-pi, pi]
        theta[k] = t;
    }

    const RatMatrix& ainv = g.inverse_matrix();
    ComplexPoint z(n);
    for (std::size_t k = 0; k < n; ++k) {
        double lr = 0.0, th = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double c = ainv(k, j).get_d();
            lr += c * logr[j];
            th += c * theta[j];
        }
        z[k] = std::exp(lr) * std::complex<double>(std::cos(th), std::sin(th));
    }
    return z;
}

std::vector<ComplexPoint> fibers(const MonomialPolyhedron& p,
                                 const DeckGroup& g,
                                 std::span<const std::complex<double>> w) {
    if (!p.contains(w))
        throw DomainError("fibers: point is not inside the domain");
    const ComplexPoint z0 = principal_preimage(g, w);
    std::vector<ComplexPoint> fiber;
    fiber.reserve(g.elements().size());
    for (const DeckElement& e : g.elements()) fiber.push_back(apply_deck(e, z0));
    return fiber;
}

std::vector<ComplexPoint> fibers(const MonomialPolyhedron& p,
                                 std::span<const std::complex<double>> w) {
    const DeckGroup g = DeckGroup::build(p.exponent_matrix());
    return fibers(p, g, w);
}

InvarianceCertificate is_invariant_monomial(const DeckGroup& g,
                                            const MultiIndex& alpha) {
    const RatMatrix& ainv = g.inverse_matrix();
    const std::size_t n = ainv.rows();
    if (alpha.size() != n)
        throw DimensionError("is_invariant_monomial: wrong index length");

    InvarianceCertificate cert;
    cert.beta.resize(n);
    bool integral = true;
    for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t k = 0; k < n; ++k)
            s += Rational(alpha[k] + 1) * ainv(k, j);
        if (s.get_den() != 1) {
            integral = false;
            break;
        }
        cert.beta[j] = s.get_num();
    }
    cert.invariant = integral;
    if (!integral) cert.beta.clear();
    return cert;
}

Rational pullback_phase(const MultiIndex& alpha, const DeckElement& e) {
    if (alpha.size() != e.phase.size())
        throw DimensionError("pullback_phase: wrong index length");
    Rational s(0);
    for (std::size_t k = 0; k < alpha.size(); ++k)
        s += Rational(alpha[k] + 1) * e.phase[k];
    return frac(s);
}

Rational determinant_phase(const DeckElement& e) {
    Rational s(0);
    for (const Rational& p : e.phase) s += p;
    return frac(s);
}

}  // namespace mpberg
