#include "glnq/cyclotomic.hpp"

#include "glnq/check.hpp"

namespace glnq {

namespace {

using Poly = std::vector<std::int64_t>; // ascending powers, no trailing zeros

Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Exact division of integer polynomials (divisor monic up to sign).
Poly divexact_poly(Poly num, const Poly& den) {
    GLNQ_INTERNAL(!den.empty() && (den.back() == 1 || den.back() == -1),
                  "cyclotomic divisor must be monic up to sign");
    Poly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    while (num.size() >= den.size() && !num.empty()) {
        std::int64_t c = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        GLNQ_INTERNAL(num.back() == 0, "inexact polynomial division");
        num.pop_back();
        num = trim(std::move(num));
        if (num.empty()) break;
    }
    GLNQ_INTERNAL(num.empty(), "inexact polynomial division remainder");
    return quot;
}

Poly cyclotomic_poly(unsigned M) {
    // Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d
    Poly num(M + 1, 0);
    num[0] = -1;
    num[M] = 1;
    for (unsigned d = 1; d < M; ++d) {
        if (M % d != 0) continue;
        num = divexact_poly(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

} // namespace

CycRing::CycRing(unsigned M) : M_(M) {
    GLNQ_REQUIRE(M >= 1 && M <= 4096, "cyclotomic order out of range");
    phi_ = cyclotomic_poly(M);
    deg_ = static_cast<unsigned>(phi_.size()) - 1;
    rows_.resize(M_);
    // x^k mod Phi_M iteratively: multiply by x, eliminate the top term.
    std::vector<std::int64_t> cur(deg_, 0);
    if (deg_ > 0) cur[0] = 1;
    for (unsigned k = 0; k < M_; ++k) {
        rows_[k] = cur;
        std::vector<std::int64_t> nxt(deg_, 0);
        std::int64_t top = deg_ ? cur[deg_ - 1] : 0;
        for (unsigned i = deg_; i-- > 1;) nxt[i] = cur[i - 1];
        // x^deg = -phi_[0..deg-1]
        for (unsigned i = 0; i < deg_; ++i) nxt[i] -= top * phi_[i];
        cur = std::move(nxt);
    }
    if (deg_ > 0)
        GLNQ_INTERNAL(rows_[0][0] == 1, "power table must start at 1");
}

CycInt CycInt::zeta_power(const CycRing& ring, std::uint64_t k) {
    CycInt v(ring);
    v.c_ = ring.zeta_row(k);
    return v;
}

CycInt CycInt::integer(const CycRing& ring, std::int64_t value) {
    CycInt v(ring);
    if (ring.degree() > 0) v.c_[0] = value;
    return v;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycInt CycInt::operator*(const CycInt& o) const {
    const CycRing& R = *ring_;
    unsigned d = R.degree();
    std::vector<std::int64_t> prod(2 * d, 0);
    for (unsigned i = 0; i < d; ++i) {
        if (!c_[i]) continue;
        for (unsigned j = 0; j < d; ++j)
            if (o.c_[j]) prod[i + j] += c_[i] * o.c_[j];
    }
    CycInt out(R);
    for (unsigned k = 0; k < 2 * d; ++k) {
        if (!prod[k]) continue;
        if (k < d) {
            out.c_[k] += prod[k];
        } else {
            // zeta^M = 1, so the row lookup reduces k mod M first.
            const auto& row = R.zeta_row(k);
            for (unsigned i = 0; i < d; ++i) out.c_[i] += prod[k] * row[i];
        }
    }
    return out;
}

CycInt& CycInt::add_zeta_multiple(std::uint64_t k, std::int64_t mult) {
    const auto& row = ring_->zeta_row(k);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += mult * row[i];
    return *this;
}

CycInt& CycInt::scale(std::int64_t m) {
    for (auto& x : c_) x *= m;
    return *this;
}

CycInt& CycInt::divexact(std::int64_t d) {
    GLNQ_REQUIRE(d != 0, "division by zero");
    for (auto& x : c_) {
        GLNQ_INTERNAL(x % d == 0, "inexact cyclotomic division");
        x /= d;
    }
    return *this;
}

CycInt CycInt::conjugate() const {
    const CycRing& R = *ring_;
    CycInt out(R);
    for (unsigned i = 0; i < R.degree(); ++i) {
        if (!c_[i]) continue;
        out.add_zeta_multiple((R.order() - i % R.order()) % R.order(), c_[i]);
    }
    return out;
}

bool CycInt::is_zero() const {
    for (std::int64_t x : c_)
        if (x) return false;
    return true;
}

bool CycInt::is_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

std::int64_t CycInt::as_integer() const {
    GLNQ_INTERNAL(is_integer(), "cyclotomic value is not a rational integer");
    return c_.empty() ? 0 : c_[0];
}

std::string CycInt::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (!s.empty()) s += c_[i] > 0 ? "+" : "";
        if (i == 0) {
            s += std::to_string(c_[i]);
        } else {
            if (c_[i] == -1) s += "-";
            else if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
            s += "z^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace glnq
