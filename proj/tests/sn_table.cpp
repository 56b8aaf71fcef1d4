#include "sn_table.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

using glnq::Partition;

namespace sn_oracle {

namespace {

std::uint64_t factorial_u64(unsigned n) {
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// |class of cycle type mu| = n! / prod_i (i^{m_i} m_i!)
std::uint64_t class_size(unsigned n, const Partition& mu) {
    std::uint64_t z = 1;
    unsigned run = 0, prev = 0;
    for (unsigned part : mu.parts()) {
        if (part == prev) ++run;
        else { run = 1; prev = part; }
        z *= part * run; // accumulates i^{m_i} m_i! across the run
    }
    return factorial_u64(n) / z;
}

// Number of ways to distribute the cycles of mu into the rows of lambda
// with row i receiving total lambda_i: the permutation-module character.
std::int64_t perm_module_char(const Partition& lambda, const Partition& mu) {
    std::vector<unsigned> load(lambda.parts());
    std::int64_t count = 0;
    const auto& cyc = mu.parts();
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cyc.size()) { ++count; return; }
        for (auto& cap : load) {
            if (cap >= cyc[i]) {
                cap -= cyc[i];
                rec(i + 1);
                cap += cyc[i];
            }
        }
    };
    rec(0);
    return count;
}

} // namespace

Table build_table(unsigned n) {
    Table t;
    t.lambdas = glnq::partitions_of(n);
    t.cycle_types = t.lambdas;
    for (const auto& mu : t.cycle_types) t.class_sizes.push_back(class_size(n, mu));

    std::uint64_t order = factorial_u64(n);
    auto inner = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < a.size(); ++j)
            s += static_cast<std::int64_t>(t.class_sizes[j]) * a[j] * b[j];
        if (s % static_cast<std::int64_t>(order) != 0)
            throw std::logic_error("sn_oracle: inner product not integral");
        return s / static_cast<std::int64_t>(order);
    };

    // Gram-Schmidt over decreasing lex (which refines dominance): the
    // permutation module M^lambda contains S^lambda once plus Specht modules
    // for strictly dominating shapes.
    for (const auto& lam : t.lambdas) {
        std::vector<std::int64_t> row(t.cycle_types.size());
        for (std::size_t j = 0; j < t.cycle_types.size(); ++j)
            row[j] = perm_module_char(lam, t.cycle_types[j]);
        for (const auto& done : t.chi) {
            std::int64_t m = inner(row, done);
            if (m == 0) continue;
            for (std::size_t j = 0; j < row.size(); ++j) row[j] -= m * done[j];
        }
        if (inner(row, row) != 1)
            throw std::logic_error("sn_oracle: orthogonalization failed");
        t.chi.push_back(std::move(row));
    }
    return t;
}

std::uint64_t syt_count(const Partition& lambda) {
    static std::map<std::vector<unsigned>, std::uint64_t> memo;
    if (lambda.empty()) return 1;
    auto it = memo.find(lambda.parts());
    if (it != memo.end()) return it->second;
    std::uint64_t total = 0;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        // removable corner: last cell of row i
        if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;
        std::vector<unsigned> next(parts);
        if (--next[i] == 0) next.erase(next.begin() + static_cast<long>(i));
        total += syt_count(Partition(next));
    }
    memo[lambda.parts()] = total;
    return total;
}

} // namespace sn_oracle
