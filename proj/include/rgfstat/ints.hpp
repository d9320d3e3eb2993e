#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace rgfstat {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw OverflowError("64-bit addition overflow");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw OverflowError("64-bit multiplication overflow");
    return out;
}

/// Binomial coefficient with the empty-selection convention:
/// C(a, 0) = 1 for every integer a, C(a, b) = 0 when b < 0 or b > a,
/// and the usual value for 0 <= b <= a.
inline std::int64_t binom(std::int64_t a, std::int64_t b) {
    if (b < 0) return 0;
    if (b == 0) return 1;
    if (a < b) return 0;
    if (b > a - b) b = a - b;
    std::int64_t result = 1;
    for (std::int64_t i = 0; i < b; ++i) {
        result = checked_mul(result, a - i);
        result /= (i + 1); // exact: product of b consecutive integers is divisible by b!
    }
    return result;
}

inline std::int64_t factorial(std::int64_t n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    std::int64_t result = 1;
    for (std::int64_t i = 2; i <= n; ++i) result = checked_mul(result, i);
    return result;
}

/// (2j)!! in the odd-product sense: 1 * 3 * 5 * ... * (2j-1), with empty product 1.
inline std::int64_t odd_double_factorial(std::int64_t two_j) {
    if (two_j < 0 || two_j % 2 != 0) throw DomainError("odd_double_factorial expects an even nonnegative argument");
    std::int64_t result = 1;
    for (std::int64_t i = 1; i < two_j; i += 2) result = checked_mul(result, i);
    return result;
}

/// Stirling number of the second kind via the triangle recurrence
/// S(n,k) = k*S(n-1,k) + S(n-1,k-1).
inline std::int64_t stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("stirling2 requires 0 <= k <= n");
    std::vector<std::int64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                checked_add(checked_mul(j, row[static_cast<std::size_t>(j)]),
                            row[static_cast<std::size_t>(j) - 1]);
        row[0] = 0; // S(i,0) = 0 for i >= 1
    }
    return row[static_cast<std::size_t>(k)];
}

inline std::int64_t bell(int n) {
    if (n < 0) throw DomainError("bell requires n >= 0");
    std::int64_t total = 0;
    for (int k = 0; k <= n; ++k) total = checked_add(total, stirling2(n, k));
    return total;
}

} // namespace rgfstat
