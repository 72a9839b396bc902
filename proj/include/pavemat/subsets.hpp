#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace pavemat {

/// Visits every k-subset of {0,..,n-1} as a bitmask, in increasing mask order.
template <typename F>
void for_each_ksubset(int n, int k, F&& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(std::uint32_t{0});
        return;
    }
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        fn(static_cast<std::uint32_t>(mask));
        std::uint64_t low = mask & (~mask + 1);
        std::uint64_t ripple = mask + low;
        mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
}

/// Visits every k-subset of the set encoded by `mask`.
template <typename F>
void for_each_ksubset_of(std::uint32_t mask, int k, F&& fn) {
    std::vector<int> bits;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1u) bits.push_back(i);
    const int m = static_cast<int>(bits.size());
    if (k < 0 || k > m) return;
    for_each_ksubset(m, k, [&](std::uint32_t sub) {
        std::uint32_t out = 0;
        for (int i = 0; i < m; ++i)
            if (sub >> i & 1u) out |= std::uint32_t{1} << bits[i];
        fn(out);
    });
}

/// Bitmask (bit i-1 = element i) to sorted 1-based element list.
inline std::vector<int> mask_to_elements(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1u) out.push_back(i + 1);
    return out;
}

/// Sorted-or-not 1-based element list to bitmask; elements must be distinct and in [1, n].
inline std::uint32_t elements_to_mask(const std::vector<int>& elements, int n) {
    std::uint32_t mask = 0;
    for (int e : elements) {
        if (e < 1 || e > n) throw std::invalid_argument("element out of range [1, n]");
        std::uint32_t bit = std::uint32_t{1} << (e - 1);
        if (mask & bit) throw std::invalid_argument("duplicate element in set");
        mask |= bit;
    }
    return mask;
}

}  // namespace pavemat
