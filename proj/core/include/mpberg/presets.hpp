#pragma once

// Ready-made defining matrices for the classical example families.

#include <vector>

#include "mpberg/matrix.hpp"

namespace mpberg {

// Generalized Hartogs triangle { |z1|^{k1/k2} < |z2| < 1 }: raw rows
// (k1/k2, -1) and (0, 1).
RatMatrix hartogs_matrix(long k1, long k2);

// { z in D^n : |z1|^{k1} < prod_{j>=2} |z_j|^{k_j} }: first row
// (k1, -k2, ..., -kn), then rows of the identity.
IntMatrix elementary_signature_matrix(const std::vector<long>& k);

// { |z1|^{k1} < |z2|^{k2} < ... < |zn|^{k_n} < 1 }: bidiagonal rows
// (k_j, -k_{j+1}) and a last row k_n e_n.
IntMatrix chain_matrix(const std::vector<long>& k);

// Unit polydisc D^n (identity matrix).
IntMatrix polydisc_matrix(std::size_t n);

}  // namespace mpberg
