#pragma once

#include <stdexcept>
#include <string>

#include "equichroma/families.hpp"
#include "equichroma/rational.hpp"
#include "equichroma/stats.hpp"

namespace equichroma {

// The eight published closed-form results, one per family (the cycle has no
// closed form of its own). String ids follow the external interface.
enum class Theorem {
    thm1_wheel,
    thm1a_double_wheel,
    thm2_helm,
    thm3_closed_helm,
    thm4_flower,
    thm5_sunflower,
    thm6_closed_sunflower,
    thm7_blossom,
};

inline constexpr Theorem kAllTheorems[] = {
    Theorem::thm1_wheel,    Theorem::thm1a_double_wheel, Theorem::thm2_helm,
    Theorem::thm3_closed_helm, Theorem::thm4_flower,     Theorem::thm5_sunflower,
    Theorem::thm6_closed_sunflower, Theorem::thm7_blossom,
};

inline std::string to_string(Theorem t) {
    switch (t) {
        case Theorem::thm1_wheel: return "thm1_wheel";
        case Theorem::thm1a_double_wheel: return "thm1a_double_wheel";
        case Theorem::thm2_helm: return "thm2_helm";
        case Theorem::thm3_closed_helm: return "thm3_closed_helm";
        case Theorem::thm4_flower: return "thm4_flower";
        case Theorem::thm5_sunflower: return "thm5_sunflower";
        case Theorem::thm6_closed_sunflower: return "thm6_closed_sunflower";
        case Theorem::thm7_blossom: return "thm7_blossom";
    }
    throw std::logic_error("unknown theorem");
}

inline Theorem theorem_from_string(const std::string& name) {
    for (Theorem t : kAllTheorems)
        if (to_string(t) == name) return t;
    throw std::invalid_argument("unknown theorem: " + name);
}

inline FamilyKind family_of(Theorem t) {
    switch (t) {
        case Theorem::thm1_wheel: return FamilyKind::wheel;
        case Theorem::thm1a_double_wheel: return FamilyKind::double_wheel;
        case Theorem::thm2_helm: return FamilyKind::helm;
        case Theorem::thm3_closed_helm: return FamilyKind::closed_helm;
        case Theorem::thm4_flower: return FamilyKind::flower;
        case Theorem::thm5_sunflower: return FamilyKind::sunflower;
        case Theorem::thm6_closed_sunflower: return FamilyKind::closed_sunflower;
        case Theorem::thm7_blossom: return FamilyKind::blossom;
    }
    throw std::logic_error("unknown theorem");
}

namespace detail {

inline void require_formula_n(int n) {
    if (n < 3) throw std::invalid_argument("closed form: n must be >= 3");
}

// Horner evaluation of c4 n^4 + c3 n^3 + c2 n^2 + c1 n + c0 in exact integers.
inline BigInt quartic(long long c4, long long c3, long long c2, long long c1, long long c0,
                      int n) {
    const BigInt x = n;
    return (((BigInt(c4) * x + c3) * x + c2) * x + c1) * x + c0;
}

} // namespace detail

// The printed closed forms, exactly as published, including the known-bad
// odd-wheel variance. The verifier's job is to demonstrate that misprint, so
// this function must not repair it; see corrected_wheel_odd_variance.
inline ChromaticStats closed_form(Theorem t, int n) {
    detail::require_formula_n(n);
    const BigInt x = n;
    const bool even = n % 2 == 0;

    switch (t) {
        case Theorem::thm1_wheel: {
            if (even) {
                Rational mean((x + 2) * (x + 2), 4 * (x + 1));
                Rational var(x * (x + 2) * (x * x + 2 * x + 4), 48 * (x + 1) * (x + 1));
                return {mean, var};
            }
            Rational mean(x * x + 4 * x + 7, 4 * (x + 1));
            Rational var(detail::quartic(1, 4, 26, -44, -27, n), 48 * (x + 1) * (x + 1));
            return {mean, var};
        }
        case Theorem::thm1a_double_wheel:
        case Theorem::thm4_flower:
        case Theorem::thm7_blossom: {
            Rational mean((x + 1) * (x + 1), 2 * x + 1);
            Rational var(detail::quartic(1, 2, 2, 1, 0, n), 3 * (2 * x + 1) * (2 * x + 1));
            return {mean, var};
        }
        case Theorem::thm2_helm:
        case Theorem::thm3_closed_helm:
        case Theorem::thm5_sunflower:
        case Theorem::thm6_closed_sunflower: {
            Rational mean(5 * x + 1, 2 * x + 1);
            Rational var = even ? Rational(5 * x * x + 7 * x, (2 * x + 1) * (2 * x + 1))
                                : Rational(5 * x * x + 3 * x - 2, (2 * x + 1) * (2 * x + 1));
            return {mean, var};
        }
    }
    throw std::logic_error("unknown theorem");
}

// Odd-wheel variance with the sign of the linear term repaired:
// (n^4 + 4n^3 + 26n^2 + 44n - 27) / (48 (n+1)^2). This is the polynomial that
// agrees with direct computation over the class sizes {2 x (n-1)/2, 1, 1}.
inline Rational corrected_wheel_odd_variance(int n) {
    detail::require_formula_n(n);
    if (n % 2 == 0)
        throw std::invalid_argument("corrected_wheel_odd_variance: n must be odd");
    const BigInt x = n;
    return Rational(detail::quartic(1, 4, 26, 44, -27, n), 48 * (x + 1) * (x + 1));
}

// The variance expression the odd-wheel derivation arrives at,
// (n^4 + 76n^3 + 386n^2 + 692n + 333) / (48 (n+1)^2). It disagrees with both
// the stated formula and direct computation; kept evaluable for the
// mismatch report.
inline Rational wheel_odd_variance_proof_form(int n) {
    detail::require_formula_n(n);
    if (n % 2 == 0)
        throw std::invalid_argument("wheel_odd_variance_proof_form: n must be odd");
    const BigInt x = n;
    return Rational(detail::quartic(1, 76, 386, 692, 333, n), 48 * (x + 1) * (x + 1));
}

} // namespace equichroma
