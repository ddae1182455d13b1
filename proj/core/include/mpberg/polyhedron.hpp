#pragma once

// Model of a bounded monomial polyhedron
//   U = { z in C^n : prod_k |z_k|^{B(j,k)} < 1 for each row j },
// where a product is undefined (and the point excluded) if a zero coordinate
// is raised to a negative power.  A defining rational matrix is normalized to
// an integer matrix with det B > 0 and B^{-1} >= 0 entrywise; boundedness is
// exactly equivalent to those two conditions holding.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mpberg/matrix.hpp"

namespace mpberg {

// Open interval of Lebesgue exponents with exact rational endpoints; an empty
// upper endpoint means +infinity.
struct LpInterval {
    Rational lower;
    std::optional<Rational> upper;

    bool finite_upper() const { return upper.has_value(); }

    // 1/lower + 1/upper == 1 whenever the upper endpoint is finite.
    bool endpoints_conjugate() const {
        if (!upper) return false;
        return Rational(1) / lower + Rational(1) / *upper == 1;
    }

    bool operator==(const LpInterval&) const = default;
};

// Projective height: clear denominators, divide out the gcd, sum the absolute
// values of the resulting primitive integer vector.
BigInt projective_height(std::span<const Rational> x);

class MonomialPolyhedron {
  public:
    // Clears denominators row by row (each row is multiplied by the lcm of
    // its entries' denominators only; rows are never divided by their gcd)
    // and swaps the first two rows if the determinant comes out negative.
    // Throws DegenerateInputError on a zero row (empty domain) and
    // UnboundedDomainError when the determinant vanishes.
    static IntMatrix normalize(const RatMatrix& raw);

    // Validates boundedness of an integer defining matrix and caches the
    // derived data.  Throws UnboundedDomainError with a diagnosis when
    // det <= 0 or B^{-1} has a negative entry.
    static MonomialPolyhedron validate(const IntMatrix& b);

    // normalize + validate.
    static MonomialPolyhedron from_rational(const RatMatrix& raw);

    std::size_t dim() const { return n_; }
    const IntMatrix& defining_matrix() const { return B_; }
    const IntMatrix& exponent_matrix() const { return A_; }  // adj(B)
    const BigInt& det_B() const { return det_B_; }
    const BigInt& det_A() const { return det_A_; }
    const RatMatrix& inverse_matrix() const { return B_inv_; }

    // Heights of the columns of B^{-1}; complexity is their maximum.
    const std::vector<BigInt>& column_heights() const { return heights_; }
    const BigInt& complexity() const { return kappa_; }
    const LpInterval& lp_interval() const { return lp_; }

    // Column gcds of A as a row vector.
    const MultiIndex& column_gcds() const { return g_of_A_; }

    // Indices (0-based) of columns of B containing a negative entry, and of
    // the coordinates that must stay nonzero in the uniformizing polydisc.
    const std::vector<std::size_t>& negative_column_set() const {
        return K_set_;
    }
    const std::vector<std::size_t>& punctured_set() const { return L_set_; }

    // Strict membership test with floating-point moduli.  Total: undefined
    // monomials and boundary points report false.
    bool contains(std::span<const std::complex<double>> z) const;
    bool contains_radii(std::span<const double> r) const;

    // Exact membership for points given by rational moduli.
    bool contains_moduli(std::span<const Rational> r) const;

  private:
    MonomialPolyhedron() = default;

    std::size_t n_ = 0;
    IntMatrix B_, A_;
    BigInt det_B_, det_A_;
    RatMatrix B_inv_;
    std::vector<BigInt> heights_;
    BigInt kappa_;
    LpInterval lp_;
    MultiIndex g_of_A_;
    std::vector<std::size_t> K_set_, L_set_;
};

// One sampled point of a face curve of the two-dimensional Reinhardt shadow.
struct ShadowPoint {
    std::size_t face;  // 1-based row index into B
    double r1, r2;
};

// Polyline samples of the face curves |z2| = |z1|^{-b1/b2}, clipped to the
// closure of the shadow; `resolution` segments per face (resolution + 1
// parameter values), empty for resolution 0.  Only defined for n == 2.
std::vector<ShadowPoint> shadow_boundary(const MonomialPolyhedron& p,
                                         std::size_t resolution);

}  // namespace mpberg
