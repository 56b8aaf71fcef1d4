#include "glnq/valuations.hpp"

#include "glnq/check.hpp"
#include "glnq/partitions.hpp"

namespace glnq {

unsigned v_int(std::uint64_t ell, std::int64_t m) {
    GLNQ_REQUIRE(ell >= 2, "ell must be at least 2");
    GLNQ_REQUIRE(m != 0, "valuation of zero is undefined");
    std::uint64_t a = m < 0 ? -static_cast<std::uint64_t>(m) : static_cast<std::uint64_t>(m);
    unsigned v = 0;
    while (a % ell == 0) { a /= ell; ++v; }
    return v;
}

unsigned digit_sum(std::uint64_t ell, std::uint64_t n) {
    unsigned s = 0;
    while (n) { s += static_cast<unsigned>(n % ell); n /= ell; }
    return s;
}

unsigned v_factorial(std::uint64_t ell, std::uint64_t n) {
    GLNQ_REQUIRE(ell >= 2, "ell must be at least 2");
    return static_cast<unsigned>((n - digit_sum(ell, n)) / (ell - 1));
}

unsigned v_falling(std::uint64_t ell, std::uint64_t n, std::uint64_t k) {
    GLNQ_REQUIRE(k <= n, "falling factorial needs k <= n");
    return v_factorial(ell, n) - v_factorial(ell, n - k);
}

unsigned v2_qpow_minus_one(std::uint64_t q, std::uint64_t m) {
    GLNQ_REQUIRE(q >= 3 && q % 2 == 1, "q must be odd and >= 3");
    GLNQ_REQUIRE(m >= 1, "m must be positive");
    if (m % 2 == 1) return v_int(2, static_cast<std::int64_t>(q - 1));
    return v_int(2, static_cast<std::int64_t>(q - 1)) +
           v_int(2, static_cast<std::int64_t>(q + 1)) +
           v_int(2, static_cast<std::int64_t>(m)) - 1;
}

unsigned v2_psi(std::uint64_t q, unsigned n) {
    unsigned v = 0;
    for (unsigned i = 1; i <= n; ++i) v += v2_qpow_minus_one(q, i);
    return v;
}

unsigned v2_H_denominator(const Partition& lambda, std::uint64_t q, unsigned d) {
    GLNQ_REQUIRE(d >= 1, "degree must be positive");
    unsigned v = 0;
    for (unsigned h : hooks(lambda).lengths) v += v2_qpow_minus_one(q, std::uint64_t(d) * h);
    return v;
}

} // namespace glnq
