#include "mpberg/numeric_verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

namespace mpberg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u == 0.0) u = 0x1.0p-54;  // keep radii strictly positive
    return u;
}

struct BatchStats {
    double sum = 0.0;
    double sumsq = 0.0;
    std::uint64_t accepted = 0;
    std::uint64_t count = 0;
};

// Runs `batches` independent jobs and merges their statistics in batch-index
// order, so the result does not depend on the thread schedule.
template <typename Job>
BatchStats run_batches(std::uint64_t samples, std::uint32_t batch_size,
                       Job job) {
    const std::uint64_t batches = (samples + batch_size - 1) / batch_size;
    std::vector<BatchStats> stats(batches);

    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(threads, batches));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::uint64_t b = t; b < batches; b += threads) {
                const std::uint64_t lo = b * batch_size;
                const std::uint64_t hi = std::min<std::uint64_t>(samples, lo + batch_size);
                stats[b] = job(b, hi - lo);
            }
        });
    }
    for (auto& th : pool) th.join();

    BatchStats total;
    for (const BatchStats& s : stats) {
        total.sum += s.sum;
        total.sumsq += s.sumsq;
        total.accepted += s.accepted;
        total.count += s.count;
    }
    return total;
}

McEstimate finish_estimate(const BatchStats& s, double scale) {
    McEstimate est;
    est.total = s.count;
    est.accepted = s.accepted;
    const double n = static_cast<double>(s.count);
    const double mean = s.sum / n;
    double var = s.sumsq / n - mean * mean;
    if (s.count > 1) var *= n / (n - 1.0);
    if (var < 0.0) var = 0.0;
    est.mean = scale * mean;
    est.std_error = scale * std::sqrt(var / n);
    return est;
}

double pow_double(double pi_val, std::size_t n) {
    double v = 1.0;
    for (std::size_t i = 0; i < n; ++i) v *= pi_val;
    return v;
}

// Row-major long copy of an integer matrix (kernel hot loops avoid bignums).
std::vector<long> to_long(const IntMatrix& m) {
    std::vector<long> out(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).fits_slong_p())
                throw DomainError("matrix entry too large for kernel evaluation");
            out[i * m.cols() + j] = m(i, j).get_si();
        }
    return out;
}

}  // namespace

std::uint64_t McConfig::sub_seed(std::uint64_t seed, std::uint64_t tag) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ull * (tag + 1));
}

McEstimate mc_integral(const MonomialPolyhedron& p, const MultiIndex& beta,
                       const Rational& pexp, const McConfig& cfg) {
    if (cfg.samples == 0) throw UsageError("mc_integral: samples must be >= 1");
    if (beta.size() != p.dim())
        throw DimensionError("mc_integral: wrong index length");
    const std::size_t n = p.dim();

    // B rows and integrand exponents as doubles.
    const IntMatrix& b = p.defining_matrix();
    std::vector<double> brows(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) brows[j * n + k] = b(j, k).get_d();
    std::vector<double> expo(n);
    const double pd = pexp.get_d();
    for (std::size_t k = 0; k < n; ++k) expo[k] = pd * beta[k].get_d();

    auto job = [&](std::uint64_t batch_index, std::uint64_t count) {
        std::mt19937_64 rng(McConfig::sub_seed(cfg.seed, batch_index));
        BatchStats s;
        std::vector<double> logr(n);
        for (std::uint64_t i = 0; i < count; ++i) {
            for (std::size_t k = 0; k < n; ++k)
                logr[k] = 0.5 * std::log(uniform01(rng));  // r = sqrt(u)
            bool inside = true;
            for (std::size_t j = 0; j < n && inside; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    acc += brows[j * n + k] * logr[k];
                inside = acc < 0.0;
            }
            ++s.count;
            if (!inside) continue;
            ++s.accepted;
            double le = 0.0;
            for (std::size_t k = 0; k < n; ++k) le += expo[k] * logr[k];
            const double v = std::exp(le);
            s.sum += v;
            s.sumsq += v * v;
        }
        return s;
    };

    const BatchStats total = run_batches(cfg.samples, cfg.batch, job);
    if (total.accepted == 0)
        throw DegenerateEstimateError("mc_integral: no sample accepted");
    return finish_estimate(total, pow_double(std::numbers::pi, n));
}

HomothetyReport check_homothety(const MonomialPolyhedron& p,
                                const DeckGroup& g, const MultiIndex& beta,
                                const Rational& pexp, const McConfig& cfg) {
    if (!is_p_allowable(p.exponent_matrix(), beta, pexp))
        throw DomainError(
            "check_homothety: monomial norm is infinite for this exponent");
    const std::size_t n = p.dim();
    const double det_a = p.det_A().get_d();

    // Pullback integrand over the polydisc:
    //   det(A)^2 * rho^{p beta A + 2*1A - 2*1}.
    const MultiIndex beta_a = row_times(beta, p.exponent_matrix());
    const MultiIndex colsum = ones_times(p.exponent_matrix());
    const double pd = pexp.get_d();
    std::vector<double> expo(n);
    for (std::size_t k = 0; k < n; ++k)
        expo[k] = pd * beta_a[k].get_d() + 2.0 * colsum[k].get_d() - 2.0;

    McConfig pull_cfg = cfg;
    pull_cfg.seed = McConfig::sub_seed(cfg.seed, 0x70756c6cull);  // "pull"
    auto job = [&](std::uint64_t batch_index, std::uint64_t count) {
        std::mt19937_64 rng(McConfig::sub_seed(pull_cfg.seed, batch_index));
        BatchStats s;
        std::vector<double> logr(n);
        for (std::uint64_t i = 0; i < count; ++i) {
            for (std::size_t k = 0; k < n; ++k)
                logr[k] = 0.5 * std::log(uniform01(rng));
            double le = 0.0;
            for (std::size_t k = 0; k < n; ++k) le += expo[k] * logr[k];
            const double v = det_a * det_a * std::exp(le);
            ++s.count;
            ++s.accepted;
            s.sum += v;
            s.sumsq += v * v;
        }
        return s;
    };
    const BatchStats pull_stats = run_batches(cfg.samples, cfg.batch, job);

    HomothetyReport rep;
    rep.pullback_side =
        finish_estimate(pull_stats, pow_double(std::numbers::pi, n));

    McConfig dom_cfg = cfg;
    dom_cfg.seed = McConfig::sub_seed(cfg.seed, 0x646f6dull);  // "dom"
    rep.domain_side = mc_integral(p, beta, pexp, dom_cfg);

    rep.group_order = g.order().get_d();
    rep.ratio = rep.pullback_side.mean / rep.domain_side.mean;
    rep.tolerance =
        3.0 * std::sqrt(rep.pullback_side.std_error * rep.pullback_side.std_error +
                        rep.group_order * rep.group_order *
                            rep.domain_side.std_error * rep.domain_side.std_error);
    rep.pass = std::abs(rep.pullback_side.mean -
                        rep.group_order * rep.domain_side.mean) <= rep.tolerance;
    return rep;
}

KernelSeriesResult kernel_series(const MonomialPolyhedron& p,
                                 std::span<const std::complex<double>> z,
                                 std::span<const std::complex<double>> w,
                                 double tol) {
    const std::size_t n = p.dim();
    if (z.size() != n || w.size() != n)
        throw DimensionError("kernel_series: wrong point dimension");
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(z[k]) == 0.0 || std::abs(w[k]) == 0.0)
            throw BranchError("kernel_series: point on a coordinate axis");

    const std::vector<long> a = to_long(p.exponent_matrix());
    std::vector<long> g(n), colsum(n);
    for (std::size_t j = 0; j < n; ++j) {
        g[j] = p.column_gcds()[j].get_si();
        long s = 0;
        for (std::size_t k = 0; k < n; ++k) s += a[k * n + j];
        colsum[j] = s;
    }
    const double det_a = p.det_A().get_d();
    const double two_pi_n = pow_double(kTwoPi, n);

    std::vector<std::complex<double>> t(n);
    for (std::size_t k = 0; k < n; ++k) t[k] = z[k] * std::conj(w[k]);

    constexpr long kCap = 256;
    // Power tables t_k^e for e in [-kCap, kCap].
    std::vector<std::vector<std::complex<double>>> pows(n);
    for (std::size_t k = 0; k < n; ++k) {
        pows[k].resize(2 * kCap + 1);
        pows[k][kCap] = {1.0, 0.0};
        for (long e = 1; e <= kCap; ++e) {
            pows[k][kCap + e] = pows[k][kCap + e - 1] * t[k];
            pows[k][kCap - e] = pows[k][kCap - e + 1] / t[k];
        }
    }

    auto sum_box = [&](long bound) {
        std::complex<double> acc{0.0, 0.0};
        std::vector<long> alpha(n, -bound);
        for (;;) {
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j) {
                long e = 0;
                for (std::size_t k = 0; k < n; ++k)
                    e += (alpha[k] + 1) * a[k * n + j];
                ok = e >= g[j];
            }
            if (ok) {
                // 1 / ||z^alpha||^2 = prod_j (2 alpha a_j + 2 colsum_j)
                //                     / ((2 pi)^n det A)
                double inv_norm = 1.0;
                std::complex<double> term{1.0, 0.0};
                for (std::size_t j = 0; j < n; ++j) {
                    long e = 0;
                    for (std::size_t k = 0; k < n; ++k)
                        e += alpha[k] * a[k * n + j];
                    inv_norm *= static_cast<double>(2 * e + 2 * colsum[j]);
                }
                for (std::size_t k = 0; k < n; ++k)
                    term *= pows[k][kCap + alpha[k]];
                acc += term * (inv_norm / (two_pi_n * det_a));
            }
            std::size_t pos = n;
            bool done = true;
            while (pos-- > 0) {
                if (++alpha[pos] <= bound) {
                    done = false;
                    break;
                }
                alpha[pos] = -bound;
            }
            if (done) break;
        }
        return acc;
    };

    KernelSeriesResult res;
    std::complex<double> prev = sum_box(4);
    for (long bound = 8; bound <= kCap; bound *= 2) {
        const std::complex<double> cur = sum_box(bound);
        res.value = cur;
        res.truncation_order = static_cast<std::size_t>(bound);
        const double denom = std::max(std::abs(cur), 1e-300);
        if (std::abs(cur - prev) <= tol * denom) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    res.converged = false;  // truncation report: cap reached
    return res;
}

std::complex<double> polydisc_kernel(std::span<const std::complex<double>> z,
                                     std::span<const std::complex<double>> w) {
    if (z.size() != w.size())
        throw DimensionError("polydisc_kernel: dimension mismatch");
    std::complex<double> v{1.0, 0.0};
    for (std::size_t k = 0; k < z.size(); ++k) {
        const std::complex<double> d = 1.0 - z[k] * std::conj(w[k]);
        v *= d * d;
    }
    return 1.0 / (pow_double(std::numbers::pi, z.size()) * v);
}

KernelBellResult kernel_bell(const MonomialPolyhedron& p, const DeckGroup& g,
                             std::span<const std::complex<double>> z,
                             std::span<const std::complex<double>> w,
                             double axis_floor) {
    const std::size_t n = p.dim();
    if (z.size() != n || w.size() != n)
        throw DimensionError("kernel_bell: wrong point dimension");
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(z[k]) < axis_floor || std::abs(w[k]) < axis_floor)
            throw BranchError(
                "kernel_bell: point too close to a coordinate axis");
    if (!p.contains(z) || !p.contains(w))
        throw DomainError("kernel_bell: points must lie inside the domain");

    const ComplexPoint psi_w = principal_preimage(g, w);

    std::complex<double> w_ones{1.0, 0.0}, psi_ones{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        w_ones *= w[k];
        psi_ones *= psi_w[k];
    }
    const double det_a = g.order().get_d();

    auto eval_at = [&](const ComplexPoint& x) {
        std::complex<double> sum{0.0, 0.0};
        for (const DeckElement& e : g.elements()) {
            const ComplexPoint y = apply_deck(e, psi_w);
            const double ph = kTwoPi * determinant_phase(e).get_d();
            const std::complex<double> det_sigma{std::cos(ph), std::sin(ph)};
            sum += polydisc_kernel(x, y) * std::conj(det_sigma);
        }
        sum *= std::conj(psi_ones / (det_a * w_ones));
        return sum / jacobian_det(p.exponent_matrix(), x);
    };

    const ComplexPoint x0 = principal_preimage(g, z);
    KernelBellResult res;
    res.value = eval_at(x0);
    if (g.elements().size() > 1) {
        const ComplexPoint x1 = apply_deck(g.elements()[1], x0);
        const std::complex<double> v1 = eval_at(x1);
        res.fiber_spread =
            std::abs(res.value - v1) / std::max(std::abs(res.value), 1e-300);
    }
    return res;
}

ComplexPoint random_interior_point(const MonomialPolyhedron& p,
                                   std::uint64_t seed, double axis_floor,
                                   double modulus_cap) {
    const std::size_t n = p.dim();
    std::mt19937_64 rng(splitmix64(seed));
    ComplexPoint z(n);
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
        bool off_axis = true;
        for (std::size_t k = 0; k < n; ++k) {
            const double r = modulus_cap * std::sqrt(uniform01(rng));
            const double th = kTwoPi * uniform01(rng);
            z[k] = std::polar(r, th);
            if (r < axis_floor) off_axis = false;
        }
        if (off_axis && p.contains(z)) return z;
    }
    throw DegenerateEstimateError(
        "random_interior_point: could not hit the domain interior");
}

FiberCountReport check_fiber_counts(const MonomialPolyhedron& p,
                                    const DeckGroup& g, std::size_t trials,
                                    const McConfig& cfg) {
    FiberCountReport rep;
    rep.trials = trials;
    rep.min_pairwise_distance = std::numeric_limits<double>::infinity();
    if (!g.order().fits_ulong_p())
        throw DomainError("check_fiber_counts: group too large");
    const std::size_t expected = g.order().get_ui();

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const ComplexPoint w = random_interior_point(
            p, McConfig::sub_seed(cfg.seed, trial), 1e-3);
        const std::vector<ComplexPoint> fiber = fibers(p, g, w);
        bool ok = fiber.size() == expected;

        for (std::size_t i = 0; i < fiber.size() && ok; ++i) {
            const ComplexPoint img = monomial_map(p.exponent_matrix(), fiber[i]);
            double err = 0.0;
            for (std::size_t k = 0; k < w.size(); ++k)
                err = std::max(err, std::abs(img[k] - w[k]));
            rep.max_roundtrip_error = std::max(rep.max_roundtrip_error, err);
            if (err >= 1e-9) ok = false;
            for (std::size_t j = i + 1; j < fiber.size() && ok; ++j) {
                double dist = 0.0;
                for (std::size_t k = 0; k < w.size(); ++k)
                    dist = std::max(dist, std::abs(fiber[i][k] - fiber[j][k]));
                rep.min_pairwise_distance =
                    std::min(rep.min_pairwise_distance, dist);
                if (dist <= 1e-9) ok = false;
            }
        }
        if (!ok) ++rep.failures;
    }
    rep.pass = rep.failures == 0;
    return rep;
}

}  // namespace mpberg
