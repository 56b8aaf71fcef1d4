#include "glnq/bigint.hpp"

#include <algorithm>
#include <ostream>

#include "glnq/check.hpp"

namespace glnq {

Nat::Nat(std::uint64_t v) {
    if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void Nat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Nat Nat::power(std::uint64_t base, unsigned exp) {
    Nat r(1);
    for (unsigned i = 0; i < exp; ++i) r.mul_small(base);
    return r;
}

Nat Nat::factorial(unsigned n) {
    Nat r(1);
    for (unsigned i = 2; i <= n; ++i) r.mul_small(i);
    return r;
}

Nat& Nat::operator+=(const Nat& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

Nat& Nat::operator-=(const Nat& o) {
    GLNQ_INTERNAL(*this >= o, "Nat subtraction would underflow");
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow -
                         (i < o.limbs_.size() ? o.limbs_[i] : 0);
        borrow = d < 0;
        if (d < 0) d += (std::int64_t(1) << 32);
        limbs_[i] = static_cast<std::uint32_t>(d);
    }
    GLNQ_INTERNAL(borrow == 0, "Nat subtraction borrow out");
    trim();
    return *this;
}

Nat Nat::operator*(const Nat& o) const {
    if (is_zero() || o.is_zero()) return Nat();
    Nat r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] +
                                std::uint64_t(limbs_[i]) * o.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

Nat& Nat::mul_small(std::uint64_t m) {
    *this = *this * Nat(m);
    return *this;
}

std::uint64_t Nat::divmod_small(std::uint64_t d) {
    GLNQ_REQUIRE(d != 0, "division by zero");
    if (d >> 32) {
        // Two-limb divisor: fall back to 128-bit chunks.
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<std::uint64_t>(rem);
    }
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return rem;
}

Nat& Nat::divexact_small(std::uint64_t d) {
    std::uint64_t r = divmod_small(d);
    GLNQ_INTERNAL(r == 0, "inexact division");
    return *this;
}

std::strong_ordering Nat::operator<=>(const Nat& o) const {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() <=> o.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    return std::strong_ordering::equal;
}

unsigned Nat::v2() const {
    GLNQ_REQUIRE(!is_zero(), "v2 of zero");
    unsigned v = 0;
    std::size_t i = 0;
    while (limbs_[i] == 0) { v += 32; ++i; }
    std::uint32_t w = limbs_[i];
    while ((w & 1) == 0) { ++v; w >>= 1; }
    return v;
}

unsigned Nat::valuation(std::uint64_t ell) const {
    GLNQ_REQUIRE(!is_zero(), "valuation of zero");
    if (ell == 2) return v2();
    Nat t = *this;
    unsigned v = 0;
    for (;;) {
        Nat u = t;
        if (u.divmod_small(ell) != 0) return v;
        t = u;
        ++v;
    }
}

std::uint64_t Nat::as_u64() const {
    GLNQ_REQUIRE(fits_u64(), "Nat does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 0) v = limbs_[0];
    if (limbs_.size() > 1) v |= std::uint64_t(limbs_[1]) << 32;
    return v;
}

std::string Nat::to_string() const {
    if (is_zero()) return "0";
    Nat t = *this;
    std::string out;
    while (!t.is_zero()) {
        std::uint64_t chunk = t.divmod_small(1000000000ull);
        std::string part = std::to_string(chunk);
        if (!t.is_zero()) part.insert(0, 9 - part.size(), '0');
        out.insert(0, part);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Nat& n) {
    return os << n.to_string();
}

} // namespace glnq
