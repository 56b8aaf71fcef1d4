#pragma once

#include <stdexcept>
#include <string>

namespace glnq {

// Thrown when an enumeration would exceed the configured item budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

#define GLNQ_STRINGIFY_(x) #x
#define GLNQ_STRINGIFY(x) GLNQ_STRINGIFY_(x)

// Precondition on caller-supplied data.
#define GLNQ_REQUIRE(cond, msg)                                                   \
    do {                                                                          \
        if (!(cond))                                                              \
            throw std::invalid_argument(std::string("glnq: ") + (msg) + " [" +    \
                                        __FILE__ ":" GLNQ_STRINGIFY(__LINE__) "]"); \
    } while (0)

// Invariant that falsifies the implementation if it ever fires.
#define GLNQ_INTERNAL(cond, msg)                                                  \
    do {                                                                          \
        if (!(cond))                                                              \
            throw std::logic_error(std::string("glnq internal: ") + (msg) + " [" + \
                                   __FILE__ ":" GLNQ_STRINGIFY(__LINE__) "]");    \
    } while (0)

// Budget bookkeeping for streamed enumerations.
struct Budget {
    unsigned long long limit = 1ull << 24;
    unsigned long long used = 0;

    void charge(unsigned long long items = 1) {
        used += items;
        if (used > limit) throw budget_error("enumeration budget exceeded");
    }
};

} // namespace glnq
