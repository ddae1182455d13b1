#pragma once

// Smith normal form of a nonsingular integer matrix:
//   input = P * D * Q,  P and Q unimodular, D = diag(d_1, ..., d_n) with
//   d_i > 0 and d_1 | d_2 | ... | d_n.

#include "mpberg/matrix.hpp"

namespace mpberg {

struct SmithDecomposition {
    IntMatrix P;  // unimodular (|det| = 1)
    IntMatrix D;  // positive diagonal, divisibility chain
    IntMatrix Q;  // unimodular

    std::vector<BigInt> invariant_factors() const {
        std::vector<BigInt> d(D.rows());
        for (std::size_t i = 0; i < D.rows(); ++i) d[i] = D(i, i);
        return d;
    }
};

// gcd-driven row/column reduction with explicit P and Q trackers.
// Throws DimensionError for non-square input and SingularMatrixError when
// det == 0 (the associated quotient group would be infinite).
SmithDecomposition smith_normal_form(const IntMatrix& m);

}  // namespace mpberg
