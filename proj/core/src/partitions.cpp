#include "glnq/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "glnq/check.hpp"
#include "glnq/valuations.hpp"

namespace glnq {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        GLNQ_REQUIRE(parts_[i] > 0, "partition parts must be positive");
        GLNQ_REQUIRE(i == 0 || parts_[i - 1] >= parts_[i],
                     "partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<unsigned> c(parts_[0], 0);
    for (unsigned p : parts_)
        for (unsigned j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

void enumerate_partitions(unsigned n, const std::function<void(const Partition&)>& fn) {
    if (n == 0) {
        fn(Partition{});
        return;
    }
    std::vector<unsigned> a{n};
    for (;;) {
        fn(Partition(a));
        // Decreasing-lex successor: strip trailing 1s, decrement the last
        // part > 1, refill greedily with parts bounded by the new value.
        unsigned ones = 0;
        while (!a.empty() && a.back() == 1) { a.pop_back(); ++ones; }
        if (a.empty()) return;
        unsigned x = --a.back();
        unsigned rest = ones + 1;
        while (rest >= x) { a.push_back(x); rest -= x; }
        if (rest) a.push_back(rest);
    }
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    enumerate_partitions(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

Nat partition_count(unsigned n) {
    // p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
    std::vector<Nat> p(n + 1);
    p[0] = Nat(1);
    for (unsigned m = 1; m <= n; ++m) {
        Nat plus, minus;
        for (unsigned k = 1;; ++k) {
            unsigned long long g1 = static_cast<unsigned long long>(k) * (3 * k - 1) / 2;
            unsigned long long g2 = static_cast<unsigned long long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            Nat term;
            if (g1 <= m) term += p[m - g1];
            if (g2 <= m) term += p[m - g2];
            if (k % 2 == 1) plus += term; else minus += term;
        }
        p[m] = plus - minus;
    }
    return p[n];
}

HookMultiset hooks(const Partition& lambda) {
    HookMultiset out;
    out.lengths.reserve(lambda.size());
    const auto& parts = lambda.parts();
    const Partition conj = lambda.conjugate();
    for (unsigned i = 0; i < parts.size(); ++i)
        for (unsigned j = 0; j < parts[i]; ++j)
            out.lengths.push_back(parts[i] - (j + 1) + conj.parts()[j] - (i + 1) + 1);
    return out;
}

Nat specht_dimension(const Partition& lambda) {
    // n!/prod(h) assembled prime by prime so every division is implicit.
    unsigned n = lambda.size();
    if (n == 0) return Nat(1);
    std::vector<unsigned> hook_count(n + 1, 0);
    for (unsigned h : hooks(lambda).lengths) ++hook_count[h];
    Nat f(1);
    for (std::uint64_t p = 2; p <= n; ++p) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        long long e = v_factorial(p, n);
        for (unsigned h = 2; h <= n; ++h)
            if (hook_count[h]) e -= static_cast<long long>(hook_count[h]) * v_int(p, h);
        GLNQ_INTERNAL(e >= 0, "hook quotient not integral");
        for (long long i = 0; i < e; ++i) f.mul_small(p);
    }
    return f;
}

unsigned long long alpha(const Partition& lambda) {
    unsigned long long a = 0;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) a += i * static_cast<unsigned long long>(parts[i]);
    return a;
}

unsigned v_specht(std::uint64_t ell, const Partition& lambda) {
    long long v = v_factorial(ell, lambda.size());
    for (unsigned h : hooks(lambda).lengths) v -= v_int(ell, h);
    GLNQ_INTERNAL(v >= 0, "negative valuation for a Specht dimension");
    return static_cast<unsigned>(v);
}

namespace {

// Beta-set representation: strictly decreasing first-column hook lengths.
std::vector<unsigned> beta_set(const Partition& lambda) {
    const auto& parts = lambda.parts();
    unsigned k = lambda.length();
    std::vector<unsigned> b(k);
    for (unsigned i = 0; i < k; ++i) b[i] = parts[i] + (k - 1 - i);
    return b;
}

Partition from_beta(std::vector<unsigned> b) {
    std::sort(b.begin(), b.end(), std::greater<>());
    unsigned k = static_cast<unsigned>(b.size());
    std::vector<unsigned> parts;
    for (unsigned i = 0; i < k; ++i) {
        unsigned p = b[i] - (k - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

struct MnMemo {
    std::map<std::pair<std::vector<unsigned>, std::size_t>, std::int64_t> cache;
    std::vector<unsigned> cycles; // processed front to back

    std::int64_t eval(const Partition& shape, std::size_t idx) {
        if (shape.empty()) return 1;
        auto key = std::make_pair(shape.parts(), idx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        GLNQ_INTERNAL(idx < cycles.size(), "cycle list exhausted with cells left");
        unsigned t = cycles[idx];
        std::vector<unsigned> b = beta_set(shape);
        std::int64_t total = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] < t) continue;
            unsigned target = b[i] - t;
            if (std::find(b.begin(), b.end(), target) != b.end()) continue;
            unsigned height = 0;
            for (unsigned x : b)
                if (x < b[i] && x > target) ++height;
            std::vector<unsigned> nb = b;
            nb[i] = target;
            std::int64_t sub = eval(from_beta(std::move(nb)), idx + 1);
            total += (height % 2 == 0) ? sub : -sub;
        }
        cache.emplace(std::move(key), total);
        return total;
    }
};

} // namespace

std::int64_t mn_character(const Partition& lambda, const CycleType& ct) {
    GLNQ_REQUIRE(ct.ambient_n >= ct.mu.size(), "cycle type exceeds ambient degree");
    GLNQ_REQUIRE(ct.ambient_n == lambda.size(),
                 "cycle type and partition sizes must agree");
    MnMemo memo;
    memo.cycles = ct.mu.parts();
    memo.cycles.resize(memo.cycles.size() + (ct.ambient_n - ct.mu.size()), 1);
    return memo.eval(lambda, 0);
}

std::int64_t lassalle_coefficient(const Partition& lambda, const Partition& mu) {
    unsigned n = lambda.size(), k = mu.size();
    GLNQ_REQUIRE(k <= n, "mu must not exceed lambda in size");
    GLNQ_REQUIRE(n <= 20, "lassalle_coefficient is word-sized, n <= 20");
    std::int64_t chi = mn_character(lambda, CycleType{mu, n});
    __int128 falling = 1;
    for (unsigned i = 0; i < k; ++i) falling *= (n - i);
    Nat f = specht_dimension(lambda);
    std::uint64_t fd = f.as_u64();
    __int128 num = static_cast<__int128>(chi) * falling;
    GLNQ_INTERNAL(num % static_cast<__int128>(fd) == 0,
                  "Lassalle coefficient failed to be an integer");
    __int128 a = num / static_cast<__int128>(fd);
    return static_cast<std::int64_t>(a);
}

Nat chiral_count_closed_form(unsigned n) {
    GLNQ_REQUIRE(n >= 2, "chiral counts start at n = 2");
    unsigned eps = n & 1;
    std::vector<unsigned> ks; // exponents of the binary expansion, ascending
    for (unsigned bit = 1; bit < 32; ++bit)
        if (n & (1ull << bit)) ks.push_back(bit);
    GLNQ_INTERNAL(!ks.empty(), "n >= 2 has a nonzero high bit");
    unsigned k1 = ks[0];
    unsigned tail = 0;
    for (std::size_t i = 1; i < ks.size(); ++i) tail += ks[i];

    Nat inner = Nat::power(2, k1 - 1);
    for (unsigned v = 1; v + 1 <= k1; ++v) {
        long long e = static_cast<long long>(v + 1) * (static_cast<long long>(k1) - 2) -
                      static_cast<long long>(v) * (v - 1) / 2;
        GLNQ_INTERNAL(e >= 0, "negative exponent in the chiral closed form");
        inner += Nat::power(2, static_cast<unsigned>(e));
    }
    if (eps) inner += Nat::power(2, k1 * (k1 - 1) / 2);
    return Nat::power(2, tail) * inner;
}

namespace {

// chi_lambda(transposition) = f * (sum of contents) / C(n,2), Frobenius.
// Returns (f - chi)/2 mod 2, i.e. whether det pi_lambda is sign.
bool is_chiral(const Partition& lambda) {
    unsigned n = lambda.size();
    long long content = 0; // row i contributes sum_{j=0..p-1} (j - i)
    const auto& parts = lambda.parts();
    for (unsigned i = 0; i < parts.size(); ++i) {
        long long p = parts[i];
        content += p * (p - 1) / 2 - static_cast<long long>(i) * p;
    }
    Nat f = specht_dimension(lambda);
    unsigned long long C = static_cast<unsigned long long>(n) * (n - 1) / 2;
    Nat chi_abs = f * Nat(content < 0 ? -content : content);
    chi_abs.divexact_small(C);
    // (f - chi) mod 4 is 0 or 2; chiral iff 2.
    Nat f4 = f;
    Nat c4 = chi_abs;
    unsigned fm = static_cast<unsigned>(f4.divmod_small(4));
    unsigned cm = static_cast<unsigned>(c4.divmod_small(4));
    unsigned diff = content >= 0 ? (fm + 4 - cm) % 4 : (fm + cm) % 4;
    GLNQ_INTERNAL(diff % 2 == 0, "f and chi must have equal parity");
    return diff == 2;
}

} // namespace

Nat chiral_count_brute(unsigned n) {
    GLNQ_REQUIRE(n >= 2, "chiral counts start at n = 2");
    GLNQ_REQUIRE(n <= 40, "brute-force chiral count is guarded at n <= 40");
    Nat count(0);
    enumerate_partitions(n, [&](const Partition& lambda) {
        if (is_chiral(lambda)) count += Nat(1);
    });
    return count;
}

bool VThreshold::below(unsigned v, unsigned n, std::uint64_t ell) const {
    long long lv = static_cast<long long>(v);
    if (!add_log_n) return lv < r;
    if (lv < r) return true;
    // v - r < log_ell(n)  <=>  ell^(v-r) < n, exactly.
    unsigned long long p = 1;
    for (long long i = 0; i < lv - r; ++i) {
        if (p >= n) return false;
        p *= ell;
    }
    return p < n;
}

ValuationStat valuation_statistic(unsigned n, std::uint64_t ell, const VThreshold& t) {
    GLNQ_REQUIRE(n >= 1, "n must be positive");
    ValuationStat st;
    st.histogram.assign(v_factorial(ell, n) + 1, 0);
    // Per-partition work is one conjugate pass plus a table lookup per cell.
    std::vector<unsigned> vtab(n + 1, 0);
    for (unsigned h = 2; h <= n; ++h) vtab[h] = v_int(ell, h);
    unsigned vfact = v_factorial(ell, n);
    std::vector<unsigned> conj(n + 1);
    enumerate_partitions(n, [&](const Partition& lambda) {
        const auto& parts = lambda.parts();
        unsigned width = parts[0];
        for (unsigned j = 0; j < width; ++j) conj[j] = 0;
        for (unsigned p : parts)
            for (unsigned j = 0; j < p; ++j) ++conj[j];
        long long v = vfact;
        for (unsigned i = 0; i < parts.size(); ++i)
            for (unsigned j = 0; j < parts[i]; ++j)
                v -= vtab[parts[i] - (j + 1) + conj[j] - i];
        GLNQ_INTERNAL(v >= 0, "negative Specht valuation");
        ++st.histogram[static_cast<std::size_t>(v)];
        ++st.total;
        if (t.below(static_cast<unsigned>(v), n, ell)) ++st.count_below;
    });
    while (!st.histogram.empty() && st.histogram.back() == 0) st.histogram.pop_back();
    return st;
}

} // namespace glnq
