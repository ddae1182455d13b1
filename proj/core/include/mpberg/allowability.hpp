#pragma once

// Exact integrability arithmetic for Laurent monomials z^beta on a bounded
// monomial polyhedron:
//   * z^beta lies in L^p  iff  (p beta + 2*1) A > 0 entrywise,
//   * for p = 2 this is equivalent to (beta + 1) A >= g(A) entrywise,
// where A = adj(B) and g(A) is the row of column gcds.  On top of these
// sit the closed-form norm, box enumeration of the square-integrable
// exponents, and the construction of an unboundedness witness: a
// square-integrable beta with (beta + 1) a_J = gcd(a_J) on the critical
// column J, whose monomial leaves L^p at the upper endpoint.

#include <limits>
#include <optional>

#include "mpberg/matrix.hpp"
#include "mpberg/polyhedron.hpp"

namespace mpberg {

bool is_p_allowable(const IntMatrix& a, const MultiIndex& beta,
                    const Rational& p);

bool is_square_integrable(const IntMatrix& a, const MultiIndex& beta);

// L^p norm of z^beta to the p-th power, carried exactly as
// coeff * (2 pi)^two_pi_power; infinite when beta is not p-allowable.
struct MonomialNorm {
    bool finite = false;
    Rational coeff;
    unsigned two_pi_power = 0;

    double value() const {
        if (!finite) return std::numeric_limits<double>::infinity();
        double v = coeff.get_d();
        for (unsigned i = 0; i < two_pi_power; ++i) v *= 6.283185307179586476925286766559;
        return v;
    }
};

MonomialNorm monomial_lp_norm(const MonomialPolyhedron& p,
                              const MultiIndex& beta, const Rational& pexp);

// All square-integrable beta with max-norm at most `bound`, in lexicographic
// order.
std::vector<MultiIndex> enumerate_s2_box(const IntMatrix& a, long bound);

struct WitnessReport {
    std::size_t critical_column = 0;  // 0-based column index J
    MultiIndex beta;
    bool on_plane = false;  // (beta + 1) a_J == gcd(a_J)
    bool in_s2 = false;     // (beta + 1) A >= g(A)
    // J-th entry of (p beta + 2*1) A evaluated at the upper endpoint.
    Rational excluded_exponent;
};

// Deterministic witness construction.  Returns nullopt when the complexity is
// 1 (the projection is then bounded for every finite p > 1 and no witness
// exists).  The critical column is the smallest index attaining the
// complexity; the particular solution of the gcd equation comes from
// left-to-right extended Euclid over the column entries; the kernel lattice
// is searched over expanding max-norm shells in lexicographic order.  A
// `shell_cap` of 0 selects the default cap 10 * (1 + max |target entry|);
// exceeding the cap raises SearchExhaustedError naming it.
std::optional<WitnessReport> find_witness(const MonomialPolyhedron& p,
                                          long shell_cap = 0);

// J-th entry of (p beta + 2*1) A in the simplified form
// p (gcd(a_J) - 1.a_J) + 2 * 1.a_J; nonpositive exactly when p is at or past
// the upper endpoint.
Rational unboundedness_exponent(const MonomialPolyhedron& p,
                                const WitnessReport& report,
                                const Rational& pexp);

}  // namespace mpberg
