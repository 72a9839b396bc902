#pragma once

// Enumeration of all rank-r paving matroids on [n] through their families of
// nontrivial hyperplanes: blocks of size in [r, n-1] pairwise intersecting in
// at most r-2 elements (so that every (r-1)-set lies in at most one block),
// with at least one surviving basis.

#include <bit>
#include <cstdint>
#include <vector>

#include "pavemat/matroid.hpp"
#include "pavemat/subsets.hpp"

namespace testsupport {

using HyperplaneFamily = std::vector<std::uint32_t>;

inline std::vector<std::uint32_t> paving_bases_from_family(int n, int r, const HyperplaneFamily& family) {
    std::vector<std::uint32_t> bases;
    pavemat::for_each_ksubset(n, r, [&](std::uint32_t b) {
        for (std::uint32_t h : family)
            if ((b & ~h) == 0) return;
        bases.push_back(b);
    });
    return bases;
}

/// All nontrivial-hyperplane families for rank r on [n], including the empty
/// family (the uniform matroid).  Families whose blocks cover every r-set are
/// dropped: they leave no basis.
inline std::vector<HyperplaneFamily> enumerate_paving_families(int n, int r) {
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m) {
        int pc = std::popcount(m);
        if (pc >= r && pc <= n - 1) candidates.push_back(m);
    }
    std::vector<std::uint32_t> rsets;
    pavemat::for_each_ksubset(n, r, [&](std::uint32_t b) { rsets.push_back(b); });

    std::vector<HyperplaneFamily> out;
    HyperplaneFamily family;
    auto has_basis = [&] {
        for (std::uint32_t b : rsets) {
            bool covered = false;
            for (std::uint32_t h : family)
                if ((b & ~h) == 0) {
                    covered = true;
                    break;
                }
            if (!covered) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (family.empty() || has_basis()) out.push_back(family);
        for (std::size_t j = start; j < candidates.size(); ++j) {
            std::uint32_t b = candidates[j];
            bool compatible = true;
            for (std::uint32_t h : family)
                if (std::popcount(b & h) > r - 2) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;
            family.push_back(b);
            self(self, j + 1);
            family.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline pavemat::Matroid paving_matroid_from_family(int n, int r, const HyperplaneFamily& family,
                                                   bool check_exchange = false) {
    return pavemat::Matroid(n, r, paving_bases_from_family(n, r, family), check_exchange);
}

}  // namespace testsupport
