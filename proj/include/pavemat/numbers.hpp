#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace pavemat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

namespace detail {

struct NumberTables {
    std::mutex mu;
    int row_limit = 64;
    std::vector<Int> factorials{Int(1)};
    std::vector<std::vector<Int>> eulerian_rows{{Int(1)}};
    std::vector<std::vector<Int>> stirling_rows{{Int(1)}};
};

inline NumberTables& number_tables() {
    static NumberTables t;
    return t;
}

}  // namespace detail

/// Caps how many recurrence rows the Eulerian/Stirling caches retain.
inline void set_memo_row_limit(int n_max) {
    auto& t = detail::number_tables();
    std::scoped_lock lock(t.mu);
    t.row_limit = n_max < 0 ? 0 : n_max;
}

inline int memo_row_limit() {
    auto& t = detail::number_tables();
    std::scoped_lock lock(t.mu);
    return t.row_limit;
}

inline Int factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    auto& t = detail::number_tables();
    std::scoped_lock lock(t.mu);
    while (static_cast<long long>(t.factorials.size()) <= n)
        t.factorials.push_back(t.factorials.back() * static_cast<long long>(t.factorials.size()));
    return t.factorials[static_cast<std::size_t>(n)];
}

/// Binomial coefficient; generalized to negative upper argument by the
/// falling-factorial product, so binomial(-1, 2) == 1.
inline Int binomial(long long n, long long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        if (k > n - k) k = n - k;
        Int num = 1;
        for (long long j = 0; j < k; ++j) num *= (n - j);
        return num / factorial(k);
    }
    Int num = 1;
    for (long long j = 0; j < k; ++j) num *= (n - j);
    return num / factorial(k);
}

inline Int multinomial(const std::vector<long long>& parts) {
    long long total = 0;
    for (long long p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        total += p;
    }
    Int result = factorial(total);
    for (long long p : parts) result /= factorial(p);
    return result;
}

/// Integer power with the 0^0 == 1 convention used by the descent-statistic sums.
inline Int ipow(const Int& base, long long exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    Int result = 1;
    for (long long i = 0; i < exp; ++i) result *= base;
    return result;
}

namespace detail {

// Rows are cached up to row_limit; larger rows are recomputed from the last
// cached one so callers above the cap still get exact values.
template <typename Step>
Int row_value(std::vector<std::vector<Int>>& rows, int n, int k, Step step) {
    auto& t = number_tables();
    std::vector<Int> row;
    int have;
    {
        std::scoped_lock lock(t.mu);
        while (static_cast<int>(rows.size()) <= std::min(n, t.row_limit))
            rows.push_back(step(rows.back(), static_cast<int>(rows.size())));
        if (n < static_cast<int>(rows.size())) return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        row = rows.back();
        have = static_cast<int>(rows.size()) - 1;
    }
    for (int m = have + 1; m <= n; ++m) row = step(row, m);
    return row[static_cast<std::size_t>(k)];
}

inline std::vector<Int> eulerian_step(const std::vector<Int>& prev, int n) {
    // A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)
    std::vector<Int> row(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Int v = 0;
        if (k < static_cast<int>(prev.size())) v += (k + 1) * prev[static_cast<std::size_t>(k)];
        if (k >= 1 && k - 1 < static_cast<int>(prev.size())) v += (n - k) * prev[static_cast<std::size_t>(k - 1)];
        row[static_cast<std::size_t>(k)] = v;
    }
    return row;
}

inline std::vector<Int> stirling_step(const std::vector<Int>& prev, int n) {
    // c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
    std::vector<Int> row(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Int v = 0;
        if (k >= 1) v += prev[static_cast<std::size_t>(k - 1)];
        if (k < static_cast<int>(prev.size())) v += (n - 1) * prev[static_cast<std::size_t>(k)];
        row[static_cast<std::size_t>(k)] = v;
    }
    return row;
}

}  // namespace detail

/// Eulerian number A(n,k): permutations of [n] with exactly k descents.
inline Int eulerian(int n, int k) {
    if (n < 0) throw std::invalid_argument("eulerian: negative n");
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 0 || k > n - 1) return 0;
    return detail::row_value(detail::number_tables().eulerian_rows, n, k, detail::eulerian_step);
}

/// Unsigned Stirling number of the first kind c(n,k): permutations of [n] with k cycles.
inline Int stirling_first_unsigned(int n, int k) {
    if (n < 0) throw std::invalid_argument("stirling_first_unsigned: negative n");
    if (k < 0 || k > n) return 0;
    return detail::row_value(detail::number_tables().stirling_rows, n, k, detail::stirling_step);
}

/// Elementary symmetric polynomial e_m evaluated on the integers a, a+1, ..., b.
/// Equals 1 for m == 0 (empty product) and 0 for m < 0 or m > b-a+1.
inline Int elm(int m, int a, int b) {
    if (m < 0) return 0;
    if (m == 0) return 1;
    if (b - a + 1 < m) return 0;
    std::vector<Int> e(static_cast<std::size_t>(m) + 1);
    e[0] = 1;
    for (int v = a; v <= b; ++v)
        for (int j = m; j >= 1; --j) e[static_cast<std::size_t>(j)] += v * e[static_cast<std::size_t>(j - 1)];
    return e[static_cast<std::size_t>(m)];
}

}  // namespace pavemat
