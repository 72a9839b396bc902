#pragma once

#include <stdexcept>

#include "pavemat/matroid.hpp"
#include "pavemat/numbers.hpp"
#include "pavemat/polynomial.hpp"

namespace pavemat {

/// Katzman's Ehrhart polynomial of the hypersimplex Delta_{r,n}:
///   sum_{j=0}^{r-1} (-1)^j C(n,j) C((r-j)t + n-1-j, n-1).
/// Accepts r = 0 and r = n, where the polytope is a point.
inline Polynomial ehrhart_hypersimplex(int r, int n) {
    if (n < 1) throw std::invalid_argument("ehrhart_hypersimplex: n must be positive");
    if (r < 0 || r > n) throw std::invalid_argument("ehrhart_hypersimplex: need 0 <= r <= n");
    if (r == 0 || r == n) return Polynomial(Rat(1));
    Polynomial result;
    for (int j = 0; j < r; ++j) {
        Rat sign((j % 2 == 0) ? 1 : -1);
        result += binom_affine_poly(r - j, n - 1 - j, n - 1) * (sign * Rat(binomial(n, j)));
    }
    return result;
}

/// Number of integer solutions of x_1 + ... + x_s = t*r - m with 0 <= x_j <= t:
///   sum_i (-1)^i C(s,i) C(t(s-r-i)+m+s-1-i, s-1).
inline Int count_box_solutions(long long t, int r, long long m, int s) {
    if (m < 0 || m > t) throw std::invalid_argument("count_box_solutions: need 0 <= m <= t");
    if (s < 1 || r < 1 || r > s) throw std::invalid_argument("count_box_solutions: need 1 <= r <= s");
    Int total = 0;
    for (int i = 0; i <= s - r; ++i) {
        Int term = binomial(s, i) * binomial(t * (s - r - i) + m + s - 1 - i, s - 1);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

/// Direct evaluation of the double sum with m from 0 to t.  The dilation t is a
/// summation limit here, so this is an evaluator rather than a Polynomial
/// constructor; ehrhart_panhandle builds the polynomial itself.
inline Int panhandle_ehrhart_eval(const PanhandleParams& p, long long t) {
    if (t < 0) throw std::invalid_argument("panhandle_ehrhart_eval: negative dilation");
    Int total = 0;
    for (long long m = 0; m <= t; ++m)
        total += count_box_solutions(t, p.r, m, p.s) * binomial(m + p.n - p.s - 1, m);
    return total;
}

/// Ehrhart polynomial of Pan_{r,s,n} via the i,l double sum
///   sum_i (-1)^i C(s,i) sum_l C(t(s-r-i)+s-1-i, s-1-l) C(t+n-s, n-s) C(t,l) (n-s)/(n-s+l).
inline Polynomial ehrhart_panhandle(const PanhandleParams& p) {
    const Polynomial tail = binom_affine_poly(1, p.n - p.s, p.n - p.s);  // C(t+n-s, n-s)
    Polynomial result;
    for (int i = 0; i <= p.s - p.r; ++i) {
        Rat sign_binom(((i % 2 == 0) ? Int(1) : Int(-1)) * binomial(p.s, i));
        for (int l = 0; l <= p.s - 1; ++l) {
            Polynomial term = binom_affine_poly(p.s - p.r - i, p.s - 1 - i, p.s - 1 - l) * tail *
                              binom_affine_poly(1, 0, l);
            result += term * (sign_binom * Rat(p.n - p.s, p.n - p.s + l));
        }
    }
    return result;
}

/// phi_{r,s,n}(t): the degree s-1 factor in
///   ehr_{Pan_{r,s,n}}(t) = (n-s)/(n-1)! C(t+n-s, n-s) phi_{r,s,n}(t).
inline Polynomial phi(const PanhandleParams& p) {
    Polynomial result;
    for (int i = 0; i <= p.s - p.r; ++i) {
        Int sign_binom = ((i % 2 == 0) ? Int(1) : Int(-1)) * binomial(p.s, i);
        for (int l = 0; l <= p.s - 1; ++l) {
            Polynomial term = binom_affine_poly(p.s - p.r - i + 1, p.s - 1 - l - i, p.s - 1 - l) *
                              binom_affine_poly(p.s - p.r - i, p.s - 1 - i, l);
            result += term * Rat(sign_binom * factorial(p.n - 2 - l) * factorial(l));
        }
    }
    return result;
}

/// tilde_phi_{r,s,n}(t): as phi but with the first binomial's constant lowered by one.
inline Polynomial tilde_phi(const PanhandleParams& p) {
    Polynomial result;
    for (int i = 0; i <= p.s - p.r; ++i) {
        Int sign_binom = ((i % 2 == 0) ? Int(1) : Int(-1)) * binomial(p.s, i);
        for (int l = 0; l <= p.s - 1; ++l) {
            Polynomial term = binom_affine_poly(p.s - p.r - i + 1, p.s - 2 - l - i, p.s - 1 - l) *
                              binom_affine_poly(p.s - p.r - i, p.s - 1 - i, l);
            result += term * Rat(sign_binom * factorial(p.n - 2 - l) * factorial(l));
        }
    }
    return result;
}

/// Second route to ehr_{Pan_{r,s,n}}; must agree with ehrhart_panhandle.
inline Polynomial ehrhart_panhandle_via_phi(const PanhandleParams& p) {
    Polynomial result = binom_affine_poly(1, p.n - p.s, p.n - p.s) * phi(p);
    result *= Rat(Int(p.n - p.s), factorial(p.n - 1));
    return result;
}

/// Ehrhart increment of relaxing a stressed hyperplane of size s on [n], rank r:
///   (n-s)/(n-1)! C(t-1+n-s, n-s) tilde_phi_{r,s,n}(t).
inline Polynomial relaxation_delta(const PanhandleParams& p) {
    Polynomial result = binom_affine_poly(1, p.n - p.s - 1, p.n - p.s) * tilde_phi(p);
    result *= Rat(Int(p.n - p.s), factorial(p.n - 1));
    return result;
}

/// Ehrhart polynomial of Rel_H(M) given ehr_M and the (r, |H|, n) parameters.
inline Polynomial ehrhart_relaxation(const Polynomial& ehr_m, const PanhandleParams& p) {
    return ehr_m + relaxation_delta(p);
}

/// Ehrhart polynomial of a paving matroid from its hyperplane profile:
///   ehr_{U_{r,n}} - sum_s |H_s| (n-s)/(n-1)! C(t-1+n-s, n-s) tilde_phi_{r,s,n}(t).
inline Polynomial ehrhart_paving(const PavingProfile& profile) {
    profile.validate();
    Polynomial result = ehrhart_hypersimplex(profile.r, profile.n);
    for (const auto& [s, count] : profile.hyperplanes_by_size) {
        if (count == 0) continue;
        result -= relaxation_delta(PanhandleParams(profile.r, s, profile.n)) * Rat(count);
    }
    return result;
}

/// Sparse paving matroid with lambda circuit-hyperplanes: the profile {r: lambda}.
inline Polynomial ehrhart_sparse_paving(int r, int n, const Int& lambda) {
    if (lambda < 0) throw std::invalid_argument("ehrhart_sparse_paving: negative count");
    PavingProfile profile;
    profile.r = r;
    profile.n = n;
    if (lambda > 0) profile.hyperplanes_by_size[r] = lambda;
    return ehrhart_paving(profile);
}

}  // namespace pavemat
