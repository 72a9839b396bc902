#pragma once

#include <json.hpp>

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pavemat/numbers.hpp"

namespace pavemat {

inline std::string rational_to_string(const Rat& q) { return q.str(); }

inline Rat rational_from_string(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + s + "'");
    }
}

/// Dense univariate polynomial in t over exact rationals.  Coefficients are
/// stored exponent-ascending with trailing zeros trimmed; the zero polynomial
/// has an empty coefficient vector and no degree.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(Rat constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }

    explicit Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial variable() { return Polynomial(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    const std::vector<Rat>& coefficients() const { return coeffs_; }

    Rat coefficient(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    Rat leading_coefficient() const {
        if (coeffs_.empty()) return Rat(0);
        return coeffs_.back();
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }

    Polynomial& operator*=(const Rat& s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(Polynomial a, const Rat& s) { return a *= s; }
    friend Polynomial operator*(const Rat& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= Rat(-1); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Rat evaluate(const Rat& x) const {
        Rat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Exact integer value; throws if the evaluation is not integral.
    Int evaluate_integer(long long x) const {
        Rat v = evaluate(Rat(x));
        if (denominator(v) != 1) throw std::domain_error("polynomial value is not an integer");
        return numerator(v);
    }

    /// Composition p(t + delta); delta = -1 realizes the t -> t-1 substitution.
    Polynomial shift_argument(const Rat& delta) const {
        Polynomial lin(std::vector<Rat>{delta, Rat(1)});
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Polynomial(*it);
        return acc;
    }

    bool has_nonnegative_coefficients() const {
        for (const auto& c : coeffs_)
            if (c < 0) return false;
        return true;
    }

    /// True iff the polynomial is nonzero and every coefficient t^0..t^deg is > 0.
    bool has_positive_coefficients() const {
        if (coeffs_.empty()) return false;
        for (const auto& c : coeffs_)
            if (c <= 0) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : coeffs_) coeffs.push_back(rational_to_string(c));
        return nlohmann::json{{"var", "t"}, {"coeffs", coeffs}};
    }

    static Polynomial from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
            throw std::invalid_argument("polynomial: missing 'coeffs' array");
        if (j.contains("var") && j["var"] != "t") throw std::invalid_argument("polynomial: 'var' must be \"t\"");
        std::vector<Rat> coeffs;
        for (const auto& c : j["coeffs"]) {
            if (!c.is_string()) throw std::invalid_argument("polynomial: 'coeffs' entries must be strings");
            coeffs.push_back(rational_from_string(c.get<std::string>()));
        }
        return Polynomial(std::move(coeffs));
    }

private:
    std::vector<Rat> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

/// The polynomial C(a*t + b, k) = prod_{j=0}^{k-1} (a t + b - j) / k!.
inline Polynomial binom_affine_poly(long long a, long long b, int k) {
    if (k < 0) throw std::invalid_argument("binom_affine_poly: negative k");
    Polynomial result(Rat(1));
    for (int j = 0; j < k; ++j) result *= Polynomial(std::vector<Rat>{Rat(b - j), Rat(a)});
    result *= Rat(Int(1), factorial(k));
    return result;
}

/// Unique polynomial of degree < #points through the given (abscissa, value) pairs.
inline Polynomial lagrange_interpolate(const std::vector<std::pair<long long, Int>>& points) {
    if (points.empty()) throw std::invalid_argument("lagrange_interpolate: no points");
    std::set<long long> seen;
    for (const auto& [x, v] : points)
        if (!seen.insert(x).second) throw std::invalid_argument("lagrange_interpolate: duplicate abscissae");

    // Newton divided differences.
    const std::size_t m = points.size();
    std::vector<Rat> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = Rat(points[i].second);
    std::vector<Rat> top(m);
    top[0] = dd[0];
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = 0; i + level < m; ++i)
            dd[i] = (dd[i + 1] - dd[i]) / Rat(points[i + level].first - points[i].first);
        top[level] = dd[0];
    }
    Polynomial result;
    Polynomial basis(Rat(1));
    for (std::size_t level = 0; level < m; ++level) {
        result += basis * top[level];
        basis *= Polynomial(std::vector<Rat>{Rat(-points[level].first), Rat(1)});
    }
    return result;
}

inline bool has_nonnegative_coefficients(const Polynomial& p) { return p.has_nonnegative_coefficients(); }
inline bool has_positive_coefficients(const Polynomial& p) { return p.has_positive_coefficients(); }

}  // namespace pavemat
