#pragma once

// Floating-point verification layer: seeded, reproducible Monte-Carlo
// integration over the domain (rejection from the enclosing unit polydisc),
// the pullback norm identity of the uniformizing map, fiber counting, and two
// independent Bergman kernel evaluators (truncated monomial series vs. the
// transformation-formula sum over the deck group) that cross-check each
// other.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "mpberg/allowability.hpp"
#include "mpberg/deck_group.hpp"
#include "mpberg/matrix.hpp"
#include "mpberg/polyhedron.hpp"

namespace mpberg {

struct McConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    std::uint32_t batch = 1u << 16;

    // Deterministic per-batch generator seed.
    static std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag);
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t accepted = 0;
    std::uint64_t total = 0;

    double acceptance_ratio() const {
        return total == 0 ? 0.0
                          : static_cast<double>(accepted) / static_cast<double>(total);
    }
};

// Monte-Carlo estimate of the integral of |z^beta|^p over the domain, by
// uniform rejection sampling from the unit polydisc (the integrand and the
// membership test depend only on the moduli, so only radii are drawn).
// The acceptance ratio estimates vol(U) / pi^n.  Throws
// DegenerateEstimateError when no sample is accepted.
McEstimate mc_integral(const MonomialPolyhedron& p, const MultiIndex& beta,
                       const Rational& pexp, const McConfig& cfg);

// Both sides of the pullback norm identity: the weighted pullback norm over
// the polydisc must equal det(A) times the norm over the domain.
struct HomothetyReport {
    McEstimate pullback_side;  // integral over D^n
    McEstimate domain_side;    // integral over U
    double group_order = 0.0;  // det A
    double ratio = 0.0;        // pullback / domain
    double tolerance = 0.0;    // 3 sigma of the difference
    bool pass = false;
};

HomothetyReport check_homothety(const MonomialPolyhedron& p,
                                const DeckGroup& g, const MultiIndex& beta,
                                const Rational& pexp, const McConfig& cfg);

// Bergman kernel by the orthonormal monomial series, truncated to the
// square-integrable exponents in a max-norm box whose bound doubles until the
// relative change drops below tol (cap 256).
struct KernelSeriesResult {
    std::complex<double> value{0.0, 0.0};
    std::size_t truncation_order = 0;  // final box bound
    bool converged = false;
};

KernelSeriesResult kernel_series(const MonomialPolyhedron& p,
                                 std::span<const std::complex<double>> z,
                                 std::span<const std::complex<double>> w,
                                 double tol);

// Bergman kernel of the unit polydisc.
std::complex<double> polydisc_kernel(std::span<const std::complex<double>> z,
                                     std::span<const std::complex<double>> w);

// Bergman kernel through the transformation formula: evaluate the polydisc
// kernel at a preimage of z against the deck orbit of the principal preimage
// of w, and divide by the Jacobian.  `fiber_spread` is the relative
// discrepancy when the computation is repeated from a second preimage of z
// (branch independence); requires all coordinates at least `axis_floor` in
// modulus.
struct KernelBellResult {
    std::complex<double> value{0.0, 0.0};
    double fiber_spread = 0.0;
};

KernelBellResult kernel_bell(const MonomialPolyhedron& p, const DeckGroup& g,
                             std::span<const std::complex<double>> z,
                             std::span<const std::complex<double>> w,
                             double axis_floor = 1e-3);

// Fiber audit over random interior points: every fiber must have exactly
// det(A) pairwise-distinct points, each mapping back onto its base point.
struct FiberCountReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    double max_roundtrip_error = 0.0;
    double min_pairwise_distance = 0.0;
    bool pass = false;
};

FiberCountReport check_fiber_counts(const MonomialPolyhedron& p,
                                    const DeckGroup& g, std::size_t trials,
                                    const McConfig& cfg);

// Uniformly random point of the unit polydisc (area-uniform per coordinate),
// optionally redrawn until it lies in the domain with all moduli above
// `axis_floor`.  Exposed for tests and the CLI.
ComplexPoint random_interior_point(const MonomialPolyhedron& p,
                                   std::uint64_t seed, double axis_floor,
                                   double modulus_cap = 1.0);

}  // namespace mpberg
