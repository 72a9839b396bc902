#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pavemat/matroid.hpp"
#include "pavemat/numbers.hpp"
#include "pavemat/polynomial.hpp"

namespace pavemat {

/// Resource guards for the brute-force counters.  Configuration values, not
/// hard limits: raise them at your own expense.
struct OracleGuards {
    int panhandle_max_n = 12;
    int panhandle_max_t = 8;
    int matroid_max_n = 9;
    int matroid_max_t = 6;
};

inline OracleGuards& oracle_guards() {
    static OracleGuards g;
    return g;
}

/// Lattice points of t * P_{Pan_{r,s,n}}: x in [0,t]^n with sum = t*r and
/// tail sum (coordinates s+1..n) at most t.  Dynamic program over coordinates
/// with state (running total, running tail sum).
inline Int count_panhandle_points(const PanhandleParams& p, int t) {
    if (t < 0) throw std::invalid_argument("count_panhandle_points: negative dilation");
    const auto& g = oracle_guards();
    if (p.n > g.panhandle_max_n || t > g.panhandle_max_t)
        throw std::invalid_argument("count_panhandle_points: guard exceeded (raise oracle_guards() to override)");
    const int target = t * p.r;
    // dp[total][tail]
    std::vector<std::vector<Int>> dp(static_cast<std::size_t>(target) + 1,
                                     std::vector<Int>(static_cast<std::size_t>(t) + 1));
    dp[0][0] = 1;
    for (int i = 1; i <= p.n; ++i) {
        std::vector<std::vector<Int>> next(static_cast<std::size_t>(target) + 1,
                                           std::vector<Int>(static_cast<std::size_t>(t) + 1));
        for (int total = 0; total <= target; ++total) {
            for (int tail = 0; tail <= t; ++tail) {
                const Int& ways = dp[static_cast<std::size_t>(total)][static_cast<std::size_t>(tail)];
                if (ways == 0) continue;
                for (int x = 0; x <= t && total + x <= target; ++x) {
                    int new_tail = tail + (i > p.s ? x : 0);
                    if (new_tail > t) break;
                    next[static_cast<std::size_t>(total + x)][static_cast<std::size_t>(new_tail)] += ways;
                }
            }
        }
        dp = std::move(next);
    }
    Int total = 0;
    for (int tail = 0; tail <= t; ++tail) total += dp[static_cast<std::size_t>(target)][static_cast<std::size_t>(tail)];
    return total;
}

namespace detail {

struct FlatConstraint {
    std::uint32_t mask;
    int limit;  // t * rank(F)
};

// Keeps only flat constraints that the box bounds and other flats do not imply.
inline std::vector<FlatConstraint> matroid_constraints(const Matroid& m, int t) {
    std::vector<std::pair<std::uint32_t, int>> kept;
    for (std::uint32_t f : m.flats()) {
        int rf = m.rank_of(f);
        if (rf >= m.rank()) continue;               // implied by the total-sum equation
        if (std::popcount(f) <= rf) continue;       // implied by x_i <= t
        kept.emplace_back(f, rf);
    }
    std::vector<FlatConstraint> out;
    for (const auto& [f, rf] : kept) {
        bool implied = false;
        for (const auto& [g, rg] : kept) {
            if (g == f || (g & ~f)) continue;  // need g proper subset of f
            if (rf == rg + std::popcount(f & ~g)) {
                implied = true;
                break;
            }
        }
        if (!implied) out.push_back({f, t * rf});
    }
    return out;
}

}  // namespace detail

/// Lattice points of t * P_M for an explicit matroid, from the flat description:
/// x in [0,t]^n, sum x = t*rank, and sum_{i in F} x_i <= t*rank(F) for every flat.
inline Int count_matroid_points(const Matroid& m, int t) {
    if (t < 0) throw std::invalid_argument("count_matroid_points: negative dilation");
    const auto& g = oracle_guards();
    if (m.ground_size() > g.matroid_max_n || t > g.matroid_max_t)
        throw std::invalid_argument("count_matroid_points: guard exceeded (raise oracle_guards() to override)");
    if (t == 0) return 1;

    const int n = m.ground_size();
    auto constraints = detail::matroid_constraints(m, t);
    std::vector<std::vector<int>> touching(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < constraints.size(); ++c)
        for (int i = 0; i < n; ++i)
            if (constraints[c].mask >> i & 1u) touching[static_cast<std::size_t>(i)].push_back(static_cast<int>(c));

    std::vector<int> sums(constraints.size(), 0);
    Int count = 0;
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == n) {
            if (rem == 0) ++count;
            return;
        }
        int lo = std::max(0, rem - t * (n - 1 - i));
        int hi = std::min(t, rem);
        for (int c : touching[static_cast<std::size_t>(i)]) hi = std::min(hi, constraints[static_cast<std::size_t>(c)].limit - sums[static_cast<std::size_t>(c)]);
        for (int x = lo; x <= hi; ++x) {
            for (int c : touching[static_cast<std::size_t>(i)]) sums[static_cast<std::size_t>(c)] += x;
            self(self, i + 1, rem - x);
            for (int c : touching[static_cast<std::size_t>(i)]) sums[static_cast<std::size_t>(c)] -= x;
        }
    };
    rec(rec, 0, t * m.rank());
    return count;
}

/// Exact Ehrhart polynomial of P_M by sampling t = 0..dim and interpolating;
/// dim P_M = n - (number of components).
inline Polynomial interpolate_matroid_ehrhart(const Matroid& m) {
    int d = m.ground_size() - m.component_count();
    if (d > oracle_guards().matroid_max_t)
        throw std::invalid_argument("interpolate_matroid_ehrhart: dimension exceeds the dilation guard");
    std::vector<std::pair<long long, Int>> points;
    for (int t = 0; t <= d; ++t) points.emplace_back(t, count_matroid_points(m, t));
    return lagrange_interpolate(points);
}

/// Same reconstruction for panhandle polytopes via the dedicated counter
/// (panhandle matroids are connected, so dim = n-1).
inline Polynomial interpolate_panhandle_ehrhart(const PanhandleParams& p) {
    std::vector<std::pair<long long, Int>> points;
    for (int t = 0; t <= p.n - 1; ++t) points.emplace_back(t, count_panhandle_points(p, t));
    return lagrange_interpolate(points);
}

}  // namespace pavemat
