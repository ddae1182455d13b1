#include "mpberg/presets.hpp"

namespace mpberg {

namespace {

void require_positive(const std::vector<long>& k, std::size_t min_len) {
    if (k.size() < min_len)
        throw UsageError("preset needs at least " + std::to_string(min_len) +
                         " exponents");
    for (long v : k)
        if (v <= 0) throw UsageError("preset exponents must be positive");
}

}  // namespace

RatMatrix hartogs_matrix(long k1, long k2) {
    require_positive({k1, k2}, 2);
    RatMatrix b(2, 2);
    b(0, 0) = make_rational(BigInt(k1), BigInt(k2));
    b(0, 1) = Rational(-1);
    b(1, 0) = Rational(0);
    b(1, 1) = Rational(1);
    return b;
}

IntMatrix elementary_signature_matrix(const std::vector<long>& k) {
    require_positive(k, 2);
    const std::size_t n = k.size();
    IntMatrix b(n, n);
    b(0, 0) = k[0];
    for (std::size_t j = 1; j < n; ++j) b(0, j) = -k[j];
    for (std::size_t i = 1; i < n; ++i) b(i, i) = 1;
    return b;
}

IntMatrix chain_matrix(const std::vector<long>& k) {
    require_positive(k, 2);
    const std::size_t n = k.size();
    IntMatrix b(n, n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        b(j, j) = k[j];
        b(j, j + 1) = -k[j + 1];
    }
    b(n - 1, n - 1) = k[n - 1];
    return b;
}

IntMatrix polydisc_matrix(std::size_t n) {
    if (n == 0) throw UsageError("polydisc needs n >= 1");
    return IntMatrix::identity(n);
}

}  // namespace mpberg
