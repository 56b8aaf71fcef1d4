#include "glnq/fqpoly.hpp"

#include <algorithm>
#include <string>

namespace glnq {

namespace {

bool is_prime_u(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomial arithmetic over the prime field, used only to pick the modulus.
using PPoly = std::vector<unsigned>; // coeffs mod p, no trailing zeros

PPoly pmod(PPoly a, const PPoly& m, unsigned p) {
    while (a.size() >= m.size()) {
        unsigned lead = a.back();
        if (lead) {
            std::size_t shift = a.size() - m.size();
            // m is monic
            for (std::size_t i = 0; i < m.size(); ++i)
                a[shift + i] = (a[shift + i] + p - static_cast<unsigned>((std::uint64_t(lead) * m[i]) % p)) % p;
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

bool pdivides(const PPoly& d, PPoly f, unsigned p) { return pmod(std::move(f), d, p).empty(); }

// Trial division by every monic divisor of degree <= e/2.
bool prime_field_irreducible(const PPoly& f, unsigned p) {
    unsigned e = static_cast<unsigned>(f.size()) - 1;
    for (unsigned d = 1; 2 * d <= e; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t k = 0; k < count; ++k) {
            PPoly g(d + 1);
            std::uint64_t t = k;
            for (unsigned i = 0; i < d; ++i) { g[i] = static_cast<unsigned>(t % p); t /= p; }
            g[d] = 1;
            if (pdivides(g, f, p)) return false;
        }
    }
    return true;
}

} // namespace

FieldFq::FieldFq(unsigned p, unsigned e) : p_(p), e_(e) {
    GLNQ_REQUIRE(is_prime_u(p) && p % 2 == 1, "p must be an odd prime");
    GLNQ_REQUIRE(e >= 1 && e <= 8, "extension degree out of range");
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) {
        q_ *= p;
        GLNQ_REQUIRE(q_ <= (1u << 20), "field too large");
    }
    if (e_ > 1) {
        // Lexicographically least monic irreducible of degree e over F_p,
        // comparing coefficient tuples from x^{e-1} down to the constant.
        std::uint64_t count = q_; // p^e tuples
        bool found = false;
        for (std::uint64_t k = 0; k < count && !found; ++k) {
            // digit i of k is the coefficient of x^i, so ascending k is
            // lexicographic on (a_{e-1}, ..., a_0)
            std::vector<unsigned> lower(e_);
            std::uint64_t t = k;
            for (unsigned i = 0; i < e_; ++i) {
                lower[i] = static_cast<unsigned>(t % p_);
                t /= p_;
            }
            PPoly f(lower);
            f.push_back(1);
            if (prime_field_irreducible(f, p_)) {
                modulus_ = lower;
                found = true;
            }
        }
        GLNQ_INTERNAL(found, "no irreducible modulus found");
    }
    // Fixed generator: least primitive element.
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t m = q_ - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (unsigned g = 1; g < q_; ++g) {
        bool ok = true;
        for (std::uint64_t f : prime_factors)
            if (pow(g, (q_ - 1) / f) == one()) { ok = false; break; }
        if (ok) { generator_ = g; break; }
    }
    GLNQ_INTERNAL(generator_ != 0, "no generator found");
    dlog_.assign(q_, 0);
    unsigned x = one();
    for (unsigned k = 0; k + 1 < q_; ++k) {
        dlog_[x] = k;
        x = mul(x, generator_);
    }
    GLNQ_INTERNAL(x == one(), "generator order is not q - 1");
}

FieldFq FieldFq::from_q(std::uint64_t q) {
    GLNQ_REQUIRE(q >= 3 && q % 2 == 1, "q must be odd and >= 3");
    std::uint64_t p = q; // smallest prime factor; q itself when prime
    for (std::uint64_t d = 3; d * d <= q; d += 2)
        if (q % d == 0) { p = d; break; }
    std::uint64_t t = q;
    unsigned e = 0;
    while (t % p == 0) { t /= p; ++e; }
    if (t != 1) throw std::invalid_argument("glnq: q is not an odd prime power");
    return FieldFq(static_cast<unsigned>(p), e);
}

std::vector<unsigned> FieldFq::unpack(unsigned a) const {
    std::vector<unsigned> d(e_);
    for (unsigned i = 0; i < e_; ++i) { d[i] = a % p_; a /= p_; }
    return d;
}

unsigned FieldFq::pack(const std::vector<unsigned>& digits) const {
    unsigned a = 0;
    for (unsigned i = e_; i-- > 0;) a = a * p_ + digits[i];
    return a;
}

unsigned FieldFq::add(unsigned a, unsigned b) const {
    if (e_ == 1) return (a + b) % p_;
    auto da = unpack(a), db = unpack(b);
    for (unsigned i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
    return pack(da);
}

unsigned FieldFq::sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

unsigned FieldFq::neg(unsigned a) const {
    if (e_ == 1) return (p_ - a) % p_;
    auto d = unpack(a);
    for (unsigned i = 0; i < e_; ++i) d[i] = (p_ - d[i]) % p_;
    return pack(d);
}

unsigned FieldFq::mul(unsigned a, unsigned b) const {
    if (e_ == 1) return static_cast<unsigned>((std::uint64_t(a) * b) % p_);
    auto da = unpack(a), db = unpack(b);
    std::vector<unsigned> prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i)
        for (unsigned j = 0; j < e_; ++j)
            prod[i + j] = static_cast<unsigned>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
    // reduce by x^e = -modulus_
    for (unsigned k = 2 * e_ - 2; k >= e_; --k) {
        unsigned c = prod[k];
        if (c) {
            prod[k] = 0;
            for (unsigned i = 0; i < e_; ++i)
                prod[k - e_ + i] =
                    static_cast<unsigned>((prod[k - e_ + i] + std::uint64_t(c) * (p_ - modulus_[i])) % p_);
        }
    }
    prod.resize(e_);
    return pack(prod);
}

unsigned FieldFq::pow(unsigned a, std::uint64_t k) const {
    unsigned r = one(), base = a;
    while (k) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

unsigned FieldFq::inv(unsigned a) const {
    GLNQ_REQUIRE(a != 0, "inverse of zero");
    return pow(a, q_ - 2);
}

unsigned FieldFq::dlog(unsigned a) const {
    GLNQ_REQUIRE(a != 0, "dlog of zero");
    return dlog_[a];
}

bool FieldFq::is_square(unsigned a) const {
    GLNQ_REQUIRE(a != 0, "squareness of zero is degenerate");
    return dlog(a) % 2 == 0;
}

unsigned FieldFq::least_nonsquare() const {
    for (unsigned a = 1; a < q_; ++a)
        if (!is_square(a)) return a;
    GLNQ_INTERNAL(false, "odd field must have a nonsquare");
    return 0;
}

std::uint64_t poly_key(const FqPoly& f) {
    const FieldFq& F = *f.field;
    std::uint64_t key = 0;
    for (unsigned i = f.degree(); i-- > 0;) key = key * F.q() + F.neg(f.coeffs[i]);
    return key;
}

FqPoly poly_from_key(const FieldFq& field, unsigned degree, std::uint64_t key) {
    FqPoly f;
    f.field = &field;
    f.coeffs.resize(degree + 1);
    for (unsigned i = 0; i < degree; ++i) {
        f.coeffs[i] = field.neg(static_cast<unsigned>(key % field.q()));
        key /= field.q();
    }
    f.coeffs[degree] = 1;
    return f;
}

std::string poly_to_string(const FqPoly& f) {
    std::string s;
    for (unsigned i = f.degree() + 1; i-- > 0;) {
        unsigned c = f.coeffs[i];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || c != 1) s += std::to_string(c);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

unsigned poly_eval(const FqPoly& f, unsigned x) {
    const FieldFq& F = *f.field;
    unsigned v = 0;
    for (unsigned i = f.degree() + 1; i-- > 0;) v = F.add(F.mul(v, x), f.coeffs[i]);
    return v;
}

namespace {

using Coeffs = std::vector<unsigned>;

Coeffs trim(Coeffs a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Coeffs poly_rem(const FieldFq& F, Coeffs a, const Coeffs& m) {
    while (a.size() >= m.size()) {
        unsigned lead = F.mul(a.back(), F.inv(m.back()));
        if (lead) {
            std::size_t shift = a.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i)
                a[shift + i] = F.sub(a[shift + i], F.mul(lead, m[i]));
        }
        a.pop_back();
    }
    return trim(std::move(a));
}

Coeffs poly_mulmod(const FieldFq& F, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
    Coeffs prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
    }
    return poly_rem(F, std::move(prod), m);
}

Coeffs poly_gcd(const FieldFq& F, Coeffs a, Coeffs b) {
    while (!b.empty()) {
        Coeffs r = poly_rem(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(q^k) mod f by iterated Frobenius.
Coeffs frobenius_power(const FieldFq& F, const Coeffs& f, unsigned k) {
    Coeffs x = {0, 1};
    if (f.size() <= 2) return poly_rem(F, std::move(x), f);
    Coeffs r = poly_rem(F, x, f);
    for (unsigned step = 0; step < k; ++step) {
        // r <- r^q mod f
        Coeffs acc = {1};
        Coeffs base = r;
        std::uint64_t e = F.q();
        while (e) {
            if (e & 1) acc = poly_mulmod(F, acc, base, f);
            base = poly_mulmod(F, base, base, f);
            e >>= 1;
        }
        r = std::move(acc);
    }
    return r;
}

} // namespace

bool poly_irreducible(const FqPoly& f) {
    const FieldFq& F = *f.field;
    unsigned d = f.degree();
    if (d == 0) return false;
    if (d == 1) return true;
    // Distinct-degree criterion: x^(q^d) = x mod f, and gcd(x^(q^(d/r)) - x, f)
    // trivial for every prime r | d.
    Coeffs fc = f.coeffs;
    Coeffs xqd = frobenius_power(F, fc, d);
    Coeffs x = poly_rem(F, Coeffs{0, 1}, fc);
    if (xqd != x) return false;
    for (unsigned r = 2; r <= d; ++r) {
        if (d % r != 0) continue;
        bool prime = true;
        for (unsigned t = 2; t * t <= r; ++t)
            if (r % t == 0) { prime = false; break; }
        if (!prime) continue;
        Coeffs pw = frobenius_power(F, fc, d / r);
        // pw - x
        Coeffs diff = pw;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = F.sub(diff[1], 1);
        diff = trim(std::move(diff));
        Coeffs g = poly_gcd(F, fc, std::move(diff));
        if (g.size() > 1) return false;
    }
    return true;
}

FqPoly reciprocal(const FqPoly& f) {
    const FieldFq& F = *f.field;
    GLNQ_REQUIRE(f.constant_term() != 0, "reciprocal needs f(0) != 0");
    FqPoly r;
    r.field = f.field;
    r.coeffs.assign(f.coeffs.rbegin(), f.coeffs.rend());
    unsigned lead_inv = F.inv(r.coeffs.back());
    for (unsigned& c : r.coeffs) c = F.mul(c, lead_inv);
    return r;
}

void irreducibles(const FieldFq& field, unsigned d, Budget& budget,
                  const std::function<void(const FqPoly&)>& fn) {
    GLNQ_REQUIRE(d >= 1, "degree must be positive");
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) {
        count *= field.q();
        GLNQ_REQUIRE(count <= (1ull << 40), "degree too large to enumerate");
    }
    for (std::uint64_t key = 0; key < count; ++key) {
        budget.charge();
        FqPoly f = poly_from_key(field, d, key);
        if (f.constant_term() == 0) continue; // multiples of x, and x itself
        if (poly_irreducible(f)) fn(f);
    }
}

std::vector<FqPoly> irreducibles_of(const FieldFq& field, unsigned d, Budget& budget) {
    std::vector<FqPoly> out;
    irreducibles(field, d, budget, [&](const FqPoly& f) { out.push_back(f); });
    return out;
}

int moebius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

std::uint64_t irreducible_count(std::uint64_t q, unsigned d) {
    std::int64_t total = 0;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        int mu = moebius(e);
        if (mu == 0) continue;
        std::uint64_t pw = 1;
        for (unsigned i = 0; i < d / e; ++i) pw *= q;
        total += mu * static_cast<std::int64_t>(pw);
    }
    GLNQ_INTERNAL(total > 0 && total % d == 0, "Moebius count must divide");
    std::uint64_t n = static_cast<std::uint64_t>(total) / d;
    return d == 1 ? n - 1 : n; // exclude x
}

std::vector<PolyOrbit> orbits(const FieldFq& field, unsigned d, Budget& budget) {
    std::vector<PolyOrbit> out;
    irreducibles(field, d, budget, [&](const FqPoly& f) {
        FqPoly g = reciprocal(f);
        std::uint64_t kf = poly_key(f), kg = poly_key(g);
        if (kf < kg)
            out.push_back(PolyOrbit{f, 2});
        else if (kf == kg)
            out.push_back(PolyOrbit{f, 1});
        // kf > kg: counted at its partner
    });
    return out;
}

} // namespace glnq
