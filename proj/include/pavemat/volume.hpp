#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pavemat/matroid.hpp"
#include "pavemat/numbers.hpp"
#include "pavemat/subsets.hpp"

namespace pavemat {

namespace detail {

inline std::vector<int> sorted_descent_set(int n, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n - 2) throw std::invalid_argument("descent set not contained in [n-2]");
        if (i > 0 && s[i] == s[i - 1]) throw std::invalid_argument("descent set has a repeated element");
    }
    return s;
}

// Descent-set mask (bit i-1 = position i) for every w in S_{n-1}, bucketed.
inline std::map<std::uint32_t, Int> descent_mask_counts(int n) {
    if (n < 2 || n > 9) throw std::invalid_argument("descent oracle: need 2 <= n <= 9");
    std::vector<int> w(static_cast<std::size_t>(n - 1));
    std::iota(w.begin(), w.end(), 1);
    std::map<std::uint32_t, Int> counts;
    do {
        std::uint32_t mask = 0;
        for (int i = 0; i + 1 < n - 1; ++i)
            if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)]) mask |= std::uint32_t{1} << i;
        counts[mask] += 1;
    } while (std::next_permutation(w.begin(), w.end()));
    return counts;
}

}  // namespace detail

/// alpha_n(S) = #{w in S_{n-1} : Des(w) ⊆ S} as the multinomial of the gaps of S.
inline Int alpha(int n, const std::vector<int>& s_in) {
    auto s = detail::sorted_descent_set(n, s_in);
    std::vector<long long> parts;
    int prev = 0;
    for (int x : s) {
        parts.push_back(x - prev);
        prev = x;
    }
    parts.push_back(n - 1 - prev);
    return multinomial(parts);
}

/// beta_n(S) = #{w in S_{n-1} : Des(w) = S} by inclusion/exclusion over alpha.
inline Int beta(int n, const std::vector<int>& s_in) {
    auto s = detail::sorted_descent_set(n, s_in);
    Int total = 0;
    const std::size_t k = s.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        std::vector<int> t;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1u) t.push_back(s[i]);
        Int a = alpha(n, t);
        total += ((k - t.size()) % 2 == 0) ? a : -a;
    }
    return total;
}

/// Brute-force count of w in S_{n-1} with Des(w) = S.  Ground truth for beta.
inline Int descent_oracle_exact(int n, const std::vector<int>& s_in) {
    auto s = detail::sorted_descent_set(n, s_in);
    std::uint32_t want = 0;
    for (int x : s) want |= std::uint32_t{1} << (x - 1);
    auto counts = detail::descent_mask_counts(n);
    auto it = counts.find(want);
    return it == counts.end() ? Int(0) : it->second;
}

/// Brute-force count of w in S_{n-1} with Des(w) ⊆ S.  Ground truth for alpha.
inline Int descent_oracle_contained(int n, const std::vector<int>& s_in) {
    auto s = detail::sorted_descent_set(n, s_in);
    std::uint32_t allowed = 0;
    for (int x : s) allowed |= std::uint32_t{1} << (x - 1);
    Int total = 0;
    for (const auto& [mask, count] : detail::descent_mask_counts(n))
        if ((mask & ~allowed) == 0) total += count;
    return total;
}

/// delta_<=(b): permutations of [n-1] whose descent string lies below b in the
/// dominance (partial-sum) order on L(r,n).  b is a binary string, MSB first.
inline Int delta_leq_oracle(int r, int n, const std::string& b) {
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("delta_leq_oracle: string length must be n");
    int ones = 0;
    for (char c : b) {
        if (c != '0' && c != '1') throw std::invalid_argument("delta_leq_oracle: string must be binary");
        ones += (c == '1');
    }
    if (b.front() != '1' || b.back() != '0' || ones != r)
        throw std::invalid_argument("delta_leq_oracle: string not in L(r,n)");
    auto counts = detail::descent_mask_counts(n);

    std::vector<int> b_prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j)
        b_prefix[static_cast<std::size_t>(j)] = b_prefix[static_cast<std::size_t>(j - 1)] + (b[static_cast<std::size_t>(j - 1)] == '1');

    Int total = 0;
    // Strings in L(r,n) are 1 d_1 ... d_{n-2} 0 with exactly r-1 descents.
    for_each_ksubset(n - 2, r - 1, [&](std::uint32_t mask) {
        int prefix = 1;  // a_1 = 1
        bool leq = prefix <= b_prefix[1];
        for (int j = 2; j <= n - 1 && leq; ++j) {
            prefix += (mask >> (j - 2)) & 1u;
            leq = prefix <= b_prefix[static_cast<std::size_t>(j)];
        }
        if (!leq) return;
        auto it = counts.find(mask);
        if (it != counts.end()) total += it->second;
    });
    return total;
}

/// Normalized volume of P_{Pan_{r,s,n}}: sum of beta_n(S) over the
/// (r-1)-subsets S of [n-s, n-2].
inline Int volume_panhandle(const PanhandleParams& p) {
    Int total = 0;
    std::vector<int> window;
    for (int x = p.n - p.s; x <= p.n - 2; ++x) window.push_back(x);
    const int k = p.r - 1;
    for_each_ksubset(static_cast<int>(window.size()), k, [&](std::uint32_t mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < window.size(); ++i)
            if (mask >> i & 1u) s.push_back(window[i]);
        total += beta(p.n, s);
    });
    return total;
}

/// Normalized volume of the hypersimplex Delta_{r,n}: the Eulerian number A(n-1, r-1).
inline Int volume_hypersimplex(int r, int n) {
    if (n < 1 || r < 0 || r > n) throw std::invalid_argument("volume_hypersimplex: need 0 <= r <= n");
    if (r == 0 || r == n) return 1;
    return eulerian(n - 1, r - 1);
}

/// Volume of P_M from the volume of its relaxation at a stressed hyperplane.
inline Int volume_relaxation(const Int& vol_relaxed, const PanhandleParams& p) {
    Int result = vol_relaxed - volume_panhandle(p);
    if (result < 0) throw std::invalid_argument("volume_relaxation: inconsistent inputs (negative volume)");
    return result;
}

/// Normalized volume of a paving matroid's base polytope from its profile:
///   A(n-1, r-1) - sum_s |H_s| * sum_{S ⊆ [n-s,n-2], |S|=r-1} beta_n(S).
inline Int volume_paving(const PavingProfile& profile) {
    profile.validate();
    Int total = volume_hypersimplex(profile.r, profile.n);
    for (const auto& [s, count] : profile.hyperplanes_by_size) {
        if (count == 0) continue;
        total -= count * volume_panhandle(PanhandleParams(profile.r, s, profile.n));
    }
    return total;
}

}  // namespace pavemat
