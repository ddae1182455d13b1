#pragma once

// Deck transformations of the monomial uniformization.  The quotient map
// z -> z^A identifies the group with Z^n / A Z^n; every element acts as a
// diagonal scaling by exact roots of unity,
//   z  ->  exp(2 pi i A^{-1} nu) (.) z,
// whose phases are kept as rationals mod 1 and only materialized to complex
// doubles at evaluation time.

#include <complex>
#include <span>
#include <vector>

#include "mpberg/matrix.hpp"
#include "mpberg/polyhedron.hpp"
#include "mpberg/smith.hpp"

namespace mpberg {

using ComplexPoint = std::vector<std::complex<double>>;

struct DeckElement {
    MultiIndex nu;                // coset representative (column vector)
    std::vector<Rational> phase;  // frac(A^{-1} nu), entries in [0, 1)

    bool is_identity() const {
        for (const Rational& p : phase)
            if (p != 0) return false;
        return true;
    }

    // Order of the cyclic subgroup generated by this element.
    BigInt cyclic_order() const {
        BigInt o(1);
        for (const Rational& p : phase) o = big_lcm(o, p.get_den());
        return o;
    }

    // exp(2 pi i phase_k) for each coordinate.
    std::vector<std::complex<double>> factors() const;
};

class DeckGroup {
  public:
    // Enumerates coset representatives through the Smith decomposition
    // A = P D Q: the representatives are P r for r in the box
    // prod [0, d_i), traversed in lexicographic order of r (the identity
    // comes first).  Throws SingularMatrixError when det A == 0.
    static DeckGroup build(const IntMatrix& a);

    const IntMatrix& exponent_matrix() const { return A_; }
    const RatMatrix& inverse_matrix() const { return A_inv_; }
    const BigInt& order() const { return order_; }
    const std::vector<DeckElement>& elements() const { return elements_; }

  private:
    DeckGroup() = default;
    IntMatrix A_;
    RatMatrix A_inv_;
    BigInt order_;
    std::vector<DeckElement> elements_;
};

// z_k -> exp(2 pi i phase_k) z_k.
ComplexPoint apply_deck(const DeckElement& e, std::span<const std::complex<double>> z);

// Integer power with the 0^0 = 1 convention; throws DomainError when a zero
// base meets a negative exponent.
std::complex<double> pow_int(const std::complex<double>& z, const BigInt& e);

// z -> z^A: the k-th output is prod_j z_j^{A(k,j)}.
ComplexPoint monomial_map(const IntMatrix& a, std::span<const std::complex<double>> z);

// Closed-form complex Jacobian determinant of z -> z^A:
// det(A) * z^{1A - 1}, where 1A is the row of column sums of A.
std::complex<double> jacobian_det(const IntMatrix& a,
                                  std::span<const std::complex<double>> z);

// Principal preimage of w under z -> z^A: moduli are |w|^{A^{-1}} and
// arguments A^{-1} theta with theta the principal argument in (-pi, pi].
ComplexPoint principal_preimage(const DeckGroup& g,
                                std::span<const std::complex<double>> w);

// Full fiber of w: the deck orbit of the principal preimage, in group
// element order.  Requires w off the coordinate axes and inside the domain.
std::vector<ComplexPoint> fibers(const MonomialPolyhedron& p,
                                 const DeckGroup& g,
                                 std::span<const std::complex<double>> w);
std::vector<ComplexPoint> fibers(const MonomialPolyhedron& p,
                                 std::span<const std::complex<double>> w);

// A Laurent monomial z^alpha is invariant under the whole group exactly when
// (alpha + 1) A^{-1} is integral; that row vector is the certificate.
struct InvarianceCertificate {
    bool invariant = false;
    MultiIndex beta;  // meaningful only when invariant
};
InvarianceCertificate is_invariant_monomial(const DeckGroup& g,
                                            const MultiIndex& alpha);

// Phase (mod 1) picked up by z^alpha dz under pullback along the element:
// frac((alpha + 1) . phase).
Rational pullback_phase(const MultiIndex& alpha, const DeckElement& e);

// Phase of det sigma = exp(2 pi i sum(phase)).
Rational determinant_phase(const DeckElement& e);

// Fractional part in [0, 1).
Rational frac(const Rational& q);

}  // namespace mpberg
