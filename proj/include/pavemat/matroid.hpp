#pragma once

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pavemat/numbers.hpp"
#include "pavemat/subsets.hpp"

namespace pavemat {

// Exhaustive queries (flats, connectivity, exchange validation) are gated here.
inline constexpr int kMatroidEnumerationLimit = 16;

/// Parameters (r, s, n) of a panhandle matroid: rank r, head [s], ground set [n].
struct PanhandleParams {
    int r, s, n;

    PanhandleParams(int r_, int s_, int n_) : r(r_), s(s_), n(n_) {
        if (r < 1) throw std::invalid_argument("panhandle: rank must be >= 1");
        if (!(r <= s && s < n)) throw std::invalid_argument("panhandle: need 1 <= r <= s < n");
    }

    std::uint32_t head_mask() const { return (std::uint32_t{1} << s) - 1; }

    friend bool operator==(const PanhandleParams&, const PanhandleParams&) = default;
};

/// Matroid on ground set [n] given by its basis system, stored as bitmasks
/// (bit i-1 = element i).
class Matroid {
public:
    Matroid(int n, int rank, std::vector<std::uint32_t> bases, bool check_exchange = true)
        : n_(n), rank_(rank), bases_(std::move(bases)) {
        if (n_ < 1 || n_ > 31) throw std::invalid_argument("matroid: ground-set size out of range [1, 31]");
        if (rank_ < 0 || rank_ > n_) throw std::invalid_argument("matroid: rank out of range [0, n]");
        if (bases_.empty()) throw std::invalid_argument("matroid: basis system is empty");
        std::sort(bases_.begin(), bases_.end());
        bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
        for (std::uint32_t b : bases_) {
            if (b & ~full_mask()) throw std::invalid_argument("matroid: basis contains element outside [n]");
            if (std::popcount(b) != rank_) throw std::invalid_argument("matroid: basis of wrong cardinality");
        }
        if (check_exchange && n_ <= kMatroidEnumerationLimit && !exchange_axiom_holds(n_, bases_))
            throw std::invalid_argument("matroid: basis exchange axiom fails");
    }

    static Matroid from_basis_sets(int n, const std::vector<std::vector<int>>& sets, bool check_exchange = true) {
        std::vector<std::uint32_t> masks;
        masks.reserve(sets.size());
        for (const auto& s : sets) masks.push_back(elements_to_mask(s, n));
        const int rank = masks.empty() ? 0 : std::popcount(masks.front());
        return Matroid(n, rank, std::move(masks), check_exchange);
    }

    static Matroid uniform(int rank, int n) {
        std::vector<std::uint32_t> bases;
        for_each_ksubset(n, rank, [&](std::uint32_t b) { bases.push_back(b); });
        return Matroid(n, rank, std::move(bases), false);
    }

    int ground_size() const { return n_; }
    int rank() const { return rank_; }
    const std::vector<std::uint32_t>& bases() const { return bases_; }
    std::uint32_t full_mask() const { return (std::uint32_t{1} << n_) - 1; }

    bool is_basis(std::uint32_t b) const { return std::binary_search(bases_.begin(), bases_.end(), b); }

    /// rank(T) = max over bases of |T ∩ B|.
    int rank_of(std::uint32_t t) const {
        int best = 0;
        for (std::uint32_t b : bases_) best = std::max(best, std::popcount(t & b));
        return best;
    }

    bool is_independent(std::uint32_t t) const { return rank_of(t) == std::popcount(t); }

    bool is_flat(std::uint32_t f) const {
        int rf = rank_of(f);
        for (int x = 0; x < n_; ++x)
            if (!(f >> x & 1u) && rank_of(f | (std::uint32_t{1} << x)) == rf) return false;
        return true;
    }

    std::vector<std::uint32_t> flats() const {
        auto rt = rank_table();
        std::vector<std::uint32_t> out;
        for (std::uint32_t f = 0; f <= full_mask(); ++f) {
            bool flat = true;
            for (int x = 0; x < n_ && flat; ++x)
                if (!(f >> x & 1u) && rt[f | (std::uint32_t{1} << x)] == rt[f]) flat = false;
            if (flat) out.push_back(f);
        }
        return out;
    }

    std::vector<std::uint32_t> hyperplanes() const {
        auto rt = rank_table();
        std::vector<std::uint32_t> out;
        for (std::uint32_t f = 0; f <= full_mask(); ++f) {
            if (rt[f] != rank_ - 1) continue;
            bool flat = true;
            for (int x = 0; x < n_ && flat; ++x)
                if (!(f >> x & 1u) && rt[f | (std::uint32_t{1} << x)] == rt[f]) flat = false;
            if (flat) out.push_back(f);
        }
        return out;
    }

    /// Whether every (rank-1)-subset of the hyperplane H is independent.
    /// Throws if H is not a hyperplane.
    bool is_stressed_hyperplane(std::uint32_t h) const {
        if (rank_of(h) != rank_ - 1 || !is_flat(h))
            throw std::invalid_argument("is_stressed_hyperplane: H is not a hyperplane");
        bool ok = true;
        for_each_ksubset_of(h, rank_ - 1, [&](std::uint32_t sub) {
            if (ok && !is_independent(sub)) ok = false;
        });
        return ok;
    }

    /// Whether adjoining all r-subsets of S yields a matroid basis system.
    /// Requires |S| >= r and that S contains no basis.
    bool can_relax(std::uint32_t s) const {
        std::vector<std::uint32_t> candidate = relax_candidate(s);
        return exchange_axiom_holds(n_, candidate);
    }

    Matroid relaxed(std::uint32_t s) const {
        std::vector<std::uint32_t> candidate = relax_candidate(s);
        if (!exchange_axiom_holds(n_, candidate))
            throw std::invalid_argument("relaxed: exchange axiom fails for the relaxation");
        return Matroid(n_, rank_, std::move(candidate), false);
    }

    /// Every circuit has cardinality >= rank, i.e. every (rank-1)-set is independent.
    bool is_paving() const {
        if (rank_ == 0) return true;
        bool ok = true;
        for_each_ksubset(n_, rank_ - 1, [&](std::uint32_t sub) {
            if (ok && !is_independent(sub)) ok = false;
        });
        return ok;
    }

    bool is_connected() const { return component_count() == 1; }

    int component_count() const {
        require_enumerable("component_count");
        auto rt = rank_table();
        const std::uint32_t full = full_mask();
        // Separators E1 (rank E1 + rank E\E1 = rank) form a lattice; the
        // component of an element is the intersection of all separators
        // containing it.
        std::vector<std::uint32_t> comp(static_cast<std::size_t>(n_), full);
        for (std::uint32_t e1 = 0; e1 <= full; ++e1) {
            if (rt[e1] + rt[full & ~e1] != rank_) continue;
            for (int x = 0; x < n_; ++x)
                if (e1 >> x & 1u) comp[static_cast<std::size_t>(x)] &= e1;
        }
        std::vector<std::uint32_t> distinct(comp);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        return static_cast<int>(distinct.size());
    }

    nlohmann::json to_json() const {
        nlohmann::json bases = nlohmann::json::array();
        for (std::uint32_t b : bases_) bases.push_back(mask_to_elements(b));
        return nlohmann::json{{"n", n_}, {"r", rank_}, {"bases", bases}};
    }

    static Matroid from_json(const nlohmann::json& j) {
        if (!j.is_object()) throw std::invalid_argument("matroid: expected a JSON object");
        for (const char* field : {"n", "r", "bases"})
            if (!j.contains(field)) throw std::invalid_argument(std::string("matroid: missing field '") + field + "'");
        if (!j["n"].is_number_integer()) throw std::invalid_argument("matroid: field 'n' must be an integer");
        if (!j["r"].is_number_integer()) throw std::invalid_argument("matroid: field 'r' must be an integer");
        if (!j["bases"].is_array()) throw std::invalid_argument("matroid: field 'bases' must be an array");
        int n = j["n"].get<int>();
        int r = j["r"].get<int>();
        std::vector<std::uint32_t> bases;
        for (const auto& b : j["bases"]) {
            if (!b.is_array()) throw std::invalid_argument("matroid: field 'bases' must contain arrays");
            std::vector<int> elements;
            for (const auto& e : b) {
                if (!e.is_number_integer())
                    throw std::invalid_argument("matroid: field 'bases' must contain integer elements");
                elements.push_back(e.get<int>());
            }
            bases.push_back(elements_to_mask(elements, n));
        }
        return Matroid(n, r, std::move(bases));
    }

    friend bool operator==(const Matroid&, const Matroid&) = default;

private:
    int n_, rank_;
    std::vector<std::uint32_t> bases_;  // sorted, unique

    void require_enumerable(const char* what) const {
        if (n_ > kMatroidEnumerationLimit)
            throw std::invalid_argument(std::string(what) + ": ground set too large (n <= 16)");
    }

    std::vector<int> rank_table() const {
        require_enumerable("flat enumeration");
        std::vector<int> rt(std::size_t{1} << n_, 0);
        for (std::uint32_t t = 0; t <= full_mask(); ++t) rt[t] = rank_of(t);
        return rt;
    }

    std::vector<std::uint32_t> relax_candidate(std::uint32_t s) const {
        if (std::popcount(s) < rank_) throw std::invalid_argument("relax: |S| must be at least the rank");
        for (std::uint32_t b : bases_)
            if ((b & ~s) == 0) throw std::invalid_argument("relax: S contains a basis");
        std::vector<std::uint32_t> candidate = bases_;
        for_each_ksubset_of(s, rank_, [&](std::uint32_t b) { candidate.push_back(b); });
        std::sort(candidate.begin(), candidate.end());
        return candidate;
    }

    static bool exchange_axiom_holds(int n, const std::vector<std::uint32_t>& bases) {
        std::vector<char> present(std::size_t{1} << n, 0);
        for (std::uint32_t b : bases) present[b] = 1;
        for (std::uint32_t b1 : bases) {
            for (std::uint32_t b2 : bases) {
                if (b1 == b2) continue;
                std::uint32_t out = b1 & ~b2;
                std::uint32_t in = b2 & ~b1;
                for (std::uint32_t e = out; e; e &= e - 1) {
                    std::uint32_t removed = b1 & ~(e & (~e + 1));
                    bool found = false;
                    for (std::uint32_t f = in; f && !found; f &= f - 1)
                        if (present[removed | (f & (~f + 1))]) found = true;
                    if (!found) return false;
                }
            }
        }
        return true;
    }
};

/// Rank-r matroid on [n] whose bases are the r-sets meeting [s] in >= r-1 elements.
inline Matroid panhandle_matroid(const PanhandleParams& p) {
    if (binomial(p.n, p.r) > 10'000'000)
        throw std::invalid_argument(
            "panhandle_matroid: C(n,r) exceeds the enumeration guard; use the closed-form "
            "ehrhart/volume paths instead");
    std::vector<std::uint32_t> bases;
    const std::uint32_t head = p.head_mask();
    for_each_ksubset(p.n, p.r, [&](std::uint32_t b) {
        if (std::popcount(b & head) >= p.r - 1) bases.push_back(b);
    });
    Matroid m(p.n, p.r, std::move(bases), false);
    Int expected = binomial(p.s, p.r) + binomial(p.s, p.r - 1) * (p.n - p.s);
    if (Int(m.bases().size()) != expected) throw std::logic_error("panhandle_matroid: basis count mismatch");
    return m;
}

/// Closed-form rank function of Pan_{r,s,n}: min(|T1|, r) if T misses [s+1,n],
/// else min(|T1|+1, r), where T1 = T ∩ [s].
inline int panhandle_rank(const PanhandleParams& p, std::uint32_t t) {
    if (t & ~((std::uint32_t{1} << p.n) - 1)) throw std::invalid_argument("panhandle_rank: T outside [n]");
    int t1 = std::popcount(t & p.head_mask());
    bool tail_empty = (t & ~p.head_mask()) == 0;
    return tail_empty ? std::min(t1, p.r) : std::min(t1 + 1, p.r);
}

/// Hyperplane counts |H_s| of a paving matroid, keyed by size s in [r, n-1].
/// Hyperplanes of size r-1 need no correction terms and are omitted.
struct PavingProfile {
    int r = 0, n = 0;
    std::map<int, Int> hyperplanes_by_size;

    void validate() const {
        if (n < 1) throw std::invalid_argument("profile: field 'n' must be positive");
        if (r < 0 || r > n) throw std::invalid_argument("profile: field 'r' out of range [0, n]");
        for (const auto& [s, count] : hyperplanes_by_size) {
            if (s < r || s > n - 1)
                throw std::invalid_argument("profile: field 'hyperplanes_by_size' has size outside [r, n-1]");
            if (count < 0) throw std::invalid_argument("profile: field 'hyperplanes_by_size' has negative count");
        }
    }

    nlohmann::json to_json() const {
        nlohmann::json counts = nlohmann::json::object();
        for (const auto& [s, count] : hyperplanes_by_size) counts[std::to_string(s)] = count.str();
        return nlohmann::json{{"n", n}, {"r", r}, {"hyperplanes_by_size", counts}};
    }

    static PavingProfile from_json(const nlohmann::json& j) {
        if (!j.is_object()) throw std::invalid_argument("profile: expected a JSON object");
        for (const char* field : {"n", "r", "hyperplanes_by_size"})
            if (!j.contains(field)) throw std::invalid_argument(std::string("profile: missing field '") + field + "'");
        if (!j["n"].is_number_integer()) throw std::invalid_argument("profile: field 'n' must be an integer");
        if (!j["r"].is_number_integer()) throw std::invalid_argument("profile: field 'r' must be an integer");
        if (!j["hyperplanes_by_size"].is_object())
            throw std::invalid_argument("profile: field 'hyperplanes_by_size' must be an object");
        PavingProfile p;
        p.n = j["n"].get<int>();
        p.r = j["r"].get<int>();
        for (const auto& [key, value] : j["hyperplanes_by_size"].items()) {
            int s;
            try {
                s = std::stoi(key);
            } catch (const std::exception&) {
                throw std::invalid_argument("profile: field 'hyperplanes_by_size' has non-integer key '" + key + "'");
            }
            Int count;
            if (value.is_number_integer())
                count = value.get<long long>();
            else if (value.is_string())
                count = Int(value.get<std::string>());
            else
                throw std::invalid_argument("profile: field 'hyperplanes_by_size' has non-integer count");
            p.hyperplanes_by_size[s] = count;
        }
        p.validate();
        return p;
    }

    friend bool operator==(const PavingProfile&, const PavingProfile&) = default;
};

inline PavingProfile paving_profile(const Matroid& m) {
    if (!m.is_paving()) throw std::invalid_argument("paving_profile: matroid is not paving");
    PavingProfile p;
    p.r = m.rank();
    p.n = m.ground_size();
    for (std::uint32_t h : m.hyperplanes()) {
        int size = std::popcount(h);
        if (size >= m.rank()) p.hyperplanes_by_size[size] += 1;
    }
    return p;
}

}  // namespace pavemat
