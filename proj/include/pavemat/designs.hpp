#pragma once

#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pavemat/ehrhart.hpp"
#include "pavemat/matroid.hpp"
#include "pavemat/numbers.hpp"
#include "pavemat/subsets.hpp"
#include "pavemat/volume.hpp"

namespace pavemat {

/// Steiner system S(t,k,n): every t-subset of [n] lies in exactly one k-block.
/// The block list is optional; the Ehrhart/volume formulas depend only on the
/// parameters.
struct SteinerSystem {
    int t = 0, k = 0, n = 0;
    std::optional<std::vector<std::vector<int>>> blocks;

    nlohmann::json to_json() const {
        nlohmann::json j{{"t", t}, {"k", k}, {"n", n}};
        if (blocks) j["blocks"] = *blocks;
        return j;
    }

    static SteinerSystem from_json(const nlohmann::json& j) {
        if (!j.is_object()) throw std::invalid_argument("steiner: expected a JSON object");
        for (const char* field : {"t", "k", "n"})
            if (!j.contains(field) || !j[field].is_number_integer())
                throw std::invalid_argument(std::string("steiner: missing integer field '") + field + "'");
        SteinerSystem s;
        s.t = j["t"].get<int>();
        s.k = j["k"].get<int>();
        s.n = j["n"].get<int>();
        if (j.contains("blocks")) {
            if (!j["blocks"].is_array()) throw std::invalid_argument("steiner: field 'blocks' must be an array");
            std::vector<std::vector<int>> blocks;
            for (const auto& b : j["blocks"]) {
                if (!b.is_array()) throw std::invalid_argument("steiner: field 'blocks' must contain arrays");
                std::vector<int> block;
                for (const auto& e : b) {
                    if (!e.is_number_integer())
                        throw std::invalid_argument("steiner: field 'blocks' must contain integer elements");
                    block.push_back(e.get<int>());
                }
                blocks.push_back(std::move(block));
            }
            s.blocks = std::move(blocks);
        }
        return s;
    }
};

/// Number of blocks C(n,t)/C(k,t); errors out when the quotient is not an
/// integer (a necessary existence condition).
inline Int steiner_block_count(int t, int k, int n) {
    if (!(0 <= t && t <= k && k <= n)) throw std::invalid_argument("steiner_block_count: need 0 <= t <= k <= n");
    Int num = binomial(n, t);
    Int den = binomial(k, t);
    if (num % den != 0)
        throw std::invalid_argument("steiner_block_count: C(n,t) is not divisible by C(k,t); no such system exists");
    return num / den;
}

/// Exhaustive uniqueness check of the defining property.  Requires blocks.
inline bool validate_steiner(const SteinerSystem& s) {
    if (!s.blocks) throw std::invalid_argument("validate_steiner: block list is absent");
    if (s.n < 1 || s.n > 15 || s.t < 1) throw std::invalid_argument("validate_steiner: need 1 <= t and n <= 15");
    std::map<std::uint32_t, int> cover;
    for (const auto& block : *s.blocks) {
        if (static_cast<int>(block.size()) != s.k) return false;
        std::uint32_t mask;
        try {
            mask = elements_to_mask(block, s.n);
        } catch (const std::invalid_argument&) {
            return false;
        }
        bool repeated = false;
        for_each_ksubset_of(mask, s.t, [&](std::uint32_t sub) {
            if (++cover[sub] > 1) repeated = true;
        });
        if (repeated) return false;
    }
    Int expected = binomial(s.n, s.t);
    return Int(cover.size()) == expected;
}

/// A Steiner system S(t,k,n) yields a rank-(t+1) paving matroid whose
/// hyperplanes are the blocks: the profile is {k: block count}.
inline PavingProfile steiner_to_profile(int t, int k, int n) {
    if (!(1 <= t && t <= k && k < n)) throw std::invalid_argument("steiner_to_profile: need 1 <= t <= k < n");
    PavingProfile profile;
    profile.r = t + 1;
    profile.n = n;
    if (k > t) profile.hyperplanes_by_size[k] = steiner_block_count(t, k, n);
    profile.validate();
    return profile;
}

inline PavingProfile steiner_to_profile(const SteinerSystem& s) { return steiner_to_profile(s.t, s.k, s.n); }

/// Explicit paving matroid of a Steiner system with a concrete block list:
/// bases are the (t+1)-sets not contained in any block.
inline Matroid steiner_matroid(const SteinerSystem& s) {
    if (!s.blocks) throw std::invalid_argument("steiner_matroid: block list is absent");
    std::vector<std::uint32_t> block_masks;
    for (const auto& block : *s.blocks) block_masks.push_back(elements_to_mask(block, s.n));
    std::vector<std::uint32_t> bases;
    for_each_ksubset(s.n, s.t + 1, [&](std::uint32_t b) {
        for (std::uint32_t h : block_masks)
            if ((b & ~h) == 0) return;
        bases.push_back(b);
    });
    return Matroid(s.n, s.t + 1, std::move(bases));
}

inline Polynomial ehrhart_steiner(int t, int k, int n) { return ehrhart_paving(steiner_to_profile(t, k, n)); }

inline Int volume_steiner(int t, int k, int n) { return volume_paving(steiner_to_profile(t, k, n)); }

/// Projective plane of order q = Steiner system S(2, q+1, q^2+q+1).
inline Polynomial ehrhart_projective_plane(int q) {
    if (q < 2) throw std::invalid_argument("ehrhart_projective_plane: need q >= 2");
    return ehrhart_steiner(2, q + 1, q * q + q + 1);
}

inline Int volume_projective_plane(int q) {
    if (q < 2) throw std::invalid_argument("volume_projective_plane: need q >= 2");
    return volume_steiner(2, q + 1, q * q + q + 1);
}

/// The Fano plane PG(2,2) with its standard cyclic line set.
inline SteinerSystem fano_plane() {
    SteinerSystem s;
    s.t = 2;
    s.k = 3;
    s.n = 7;
    s.blocks = std::vector<std::vector<int>>{{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                             {1, 5, 6}, {2, 6, 7}, {1, 3, 7}};
    return s;
}

}  // namespace pavemat
