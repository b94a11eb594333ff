#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "obswave/schedule.hpp"

namespace obswave {

/// Case classification of the constant-rate switching family
/// F = {{lambda_k} x (k T0, (k+1) T0)}.
enum class RateCase {
    large,                 // T0 in (pi, 2pi)
    half_even,             // T0 = pi / 2m
    odd_denominator,       // T0 = pi / (2n+1): not observable in any T
    two_over_odd_even_h,   // T0 = 2pi / (2h+1), h even
    two_over_odd_odd_h,    // T0 = 2pi / (2h+1), h odd
    gen_even_even,         // 2pi/T0 not integer; N, j even
    gen_even_odd,          // N even, j odd
    gen_odd_even,          // N odd, j even
    gen_odd_odd,           // N, j odd
};

inline const char* rate_case_name(RateCase c) {
    switch (c) {
        case RateCase::large: return "large";
        case RateCase::half_even: return "half_even";
        case RateCase::odd_denominator: return "odd_denominator";
        case RateCase::two_over_odd_even_h: return "two_over_odd_even_h";
        case RateCase::two_over_odd_odd_h: return "two_over_odd_odd_h";
        case RateCase::gen_even_even: return "gen_even_even";
        case RateCase::gen_even_odd: return "gen_even_odd";
        case RateCase::gen_odd_even: return "gen_odd_even";
        case RateCase::gen_odd_odd: return "gen_odd_odd";
    }
    return "?";
}

template <class T>
struct RateAnalysis {
    T t0{};
    RateCase kind = RateCase::gen_even_even;
    long long bigN = 0;  ///< floor(2pi / T0)
    long long j = 0;     ///< floor(pi / T0)
    // case parameters; meaningful fields depend on kind
    long long n = 0;       // large: (n+2)/(n+1) pi <= T0 < (n+1)/n pi; odd_denominator: T0 = pi/(2n+1)
    long long m = 0;       // half_even: T0 = pi/(2m)
    long long h = 0;       // two_over_odd: T0 = 2pi/(2h+1)
    long long h_star = 0, k_star = 0;  // gen_even_odd
    long long l_star = 0, q_star = 0;  // gen_odd_even
    bool observable = false;
    std::optional<T> t_opt;
};

namespace detail {

template <class T>
long long floor_ratio(const T& num, const T& den);

inline long long floor_ratio(const Rational& num, const Rational& den) {
    return (num / den).floor();
}
inline long long floor_ratio(double num, double den) {
    return static_cast<long long>(std::floor(num / den));
}

template <class T>
long long ceil_ratio(const T& num, const T& den);

inline long long ceil_ratio(const Rational& num, const Rational& den) {
    return (num / den).ceil();
}
inline long long ceil_ratio(double num, double den) {
    return static_cast<long long>(std::ceil(num / den));
}

/// 2pi/T0 as an integer if it is one (exactly in exact mode, within a
/// relative snap of 1e-12 in float mode).
inline std::optional<long long> turns_ratio_integer(const Rational& t0) {
    const Rational r = Rational(2) / t0;  // t0 stored in pi units
    if (r.is_integer()) return r.num();
    return std::nullopt;
}
inline std::optional<long long> turns_ratio_integer(double t0) {
    const double r = 2.0 * std::numbers::pi / t0;
    const double nearest = std::round(r);
    if (nearest >= 1.0 && std::abs(r - nearest) <= 1e-12 * r)
        return static_cast<long long>(nearest);
    return std::nullopt;
}

template <class T>
T from_pi_units(long long num, long long den);

template <>
inline Rational from_pi_units<Rational>(long long num, long long den) {
    return Rational(num, den);
}
template <>
inline double from_pi_units<double>(long long num, long long den) {
    return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
}

} // namespace detail

/// Full case classification with the closed-form optimal control time.
/// Domain: 0 < T0 < 2pi.
template <class T>
RateAnalysis<T> classify_constant_rate(const T& t0) {
    using traits = circle_traits<T>;
    const T half = traits::half_turn();
    const T full = traits::full_turn();
    if (!(traits::zero() < t0) || !(t0 < full))
        throw std::domain_error("constant rate: T0 must lie in (0, 2pi)");

    RateAnalysis<T> a;
    a.t0 = t0;
    a.bigN = detail::floor_ratio(full, t0);
    a.j = detail::floor_ratio(half, t0);

    if (half < t0) {
        // T0 in (pi, 2pi): n = least k >= 1 with T0 >= (k+2)pi/(k+1),
        // i.e. the unique n with (n+2)/(n+1) pi <= T0 < (n+1)/n pi.
        a.kind = RateCase::large;
        a.n = detail::ceil_ratio(full - t0, t0 - half);
        a.observable = true;
        a.t_opt = half * T(a.n + 2);
        return a;
    }

    if (auto turns = detail::turns_ratio_integer(t0)) {
        const long long M = *turns;  // T0 = 2pi / M, M >= 2
        if (M % 2 == 0) {
            const long long q = M / 2;  // T0 = pi / q
            if (q % 2 == 0) {
                a.kind = RateCase::half_even;
                a.m = q / 2;
                a.observable = true;
                a.t_opt = full;
            } else {
                a.kind = RateCase::odd_denominator;
                a.n = (q - 1) / 2;
                a.observable = false;
            }
        } else {
            const long long h = (M - 1) / 2;  // M = 2h+1 odd, h >= 1 since T0 <= pi
            a.h = h;
            if (h % 2 == 0) {
                a.kind = RateCase::two_over_odd_even_h;
                a.observable = true;
                a.t_opt = half * T(3) - t0 / T(2);
            } else {
                a.kind = RateCase::two_over_odd_odd_h;
                a.observable = true;
                a.t_opt = half * T(3);
            }
        }
        return a;
    }

    // generic T0 in (0, pi), 2pi/T0 not an integer
    const bool n_even = a.bigN % 2 == 0;
    const bool j_even = a.j % 2 == 0;
    a.observable = true;
    if (n_even && j_even) {
        a.kind = RateCase::gen_even_even;
        a.t_opt = full + t0 * T(a.j);
    } else if (n_even && !j_even) {
        a.kind = RateCase::gen_even_odd;
        const T gap = full - t0 * T(a.bigN);
        a.h_star = detail::ceil_ratio(half - t0 * T(a.j) + t0, gap);
        a.k_star = detail::ceil_ratio(t0, gap);
        if (a.h_star == a.k_star + 1) {
            a.t_opt = half + t0 * T(a.bigN * a.k_star + 1);
        } else if (a.h_star == a.k_star) {
            a.t_opt = half + t0 * T(a.bigN * a.k_star - a.j + 1);
        } else {
            throw std::logic_error("constant rate: h* outside [k*, k*+1]");
        }
    } else if (!n_even && j_even) {
        a.kind = RateCase::gen_odd_even;
        const T gap = t0 * T(a.bigN + 1) - full;
        a.l_star = detail::ceil_ratio(t0, gap);
        a.q_star = detail::ceil_ratio(half - t0 * T(a.j), gap);
        if (a.l_star == a.q_star) {
            a.t_opt = full * T(a.q_star) + t0 * T(a.j);
        } else if (a.l_star == a.q_star + 1) {
            a.t_opt = full * T(a.q_star) + t0 * T(a.j) + half;
        } else {
            throw std::logic_error("constant rate: l* outside [q*, q*+1]");
        }
    } else {
        a.kind = RateCase::gen_odd_odd;
        a.t_opt = t0 * T(a.bigN) + half;
    }
    return a;
}

/// Optimal control time of the constant-rate family; nullopt when the
/// system is not observable in any time (T0 = pi/(2n+1)).
template <class T>
std::optional<T> topt_constant_rate(const T& t0) {
    return classify_constant_rate(t0).t_opt;
}

/// Segment count sufficient for the sweep oracle to reach the covering
/// index of an observable constant-rate family, sized from the closed form
/// when available and falling back to the default truncation otherwise.
template <class T>
std::size_t constant_rate_sweep_segments(const T& t0, const std::optional<T>& closed_form) {
    using traits = circle_traits<T>;
    if (closed_form) {
        const double ratio =
            traits::to_double(*closed_form) / traits::to_double(t0);
        return static_cast<std::size_t>(std::ceil(ratio)) + 2;
    }
    const double ratio =
        traits::to_double(traits::full_turn()) / traits::to_double(t0);
    return 10 * static_cast<std::size_t>(std::ceil(ratio));
}

template <class T>
struct MapPoint {
    T t0{};
    RateCase kind = RateCase::gen_even_even;
    std::optional<T> t_opt;
};

/// Sampled map T0 -> T_opt over [from, to] with the given step. Grid points
/// outside (0, 2pi) are skipped.
template <class T>
std::vector<MapPoint<T>> topt_map(const T& from, const T& to, const T& step) {
    using traits = circle_traits<T>;
    if (!(traits::zero() < step)) throw std::domain_error("topt_map: step must be positive");
    std::vector<MapPoint<T>> out;
    if (to < from) return out;
    for (T t = from; t <= to; t = t + step) {
        if (!(traits::zero() < t) || !(t < traits::full_turn())) continue;
        const auto a = classify_constant_rate(t);
        out.push_back({t, a.kind, a.t_opt});
    }
    return out;
}

enum class DiscontinuityKind {
    lambda_n,              // (n+2)pi/(n+1), n >= 1
    pi_over_2n,            // pi/2n
    pi_over_odd,           // pi/(2n+1): both one-sided limits +infinity
    two_pi_over_odd_even,  // 2pi/(2h+1), h even
    two_pi_over_odd_odd,   // 2pi/(2h+1), h odd
    mu_m,                  // pi/(k + 1/(m+2)), k odd, inside A_k
    xi_m,                  // pi/(k + (m+1)/(m+2)), k even, inside B_k
};

inline const char* discontinuity_kind_name(DiscontinuityKind k) {
    switch (k) {
        case DiscontinuityKind::lambda_n: return "lambda_n";
        case DiscontinuityKind::pi_over_2n: return "pi_over_2n";
        case DiscontinuityKind::pi_over_odd: return "pi_over_odd";
        case DiscontinuityKind::two_pi_over_odd_even: return "two_pi_over_odd_even";
        case DiscontinuityKind::two_pi_over_odd_odd: return "two_pi_over_odd_odd";
        case DiscontinuityKind::mu_m: return "mu_m";
        case DiscontinuityKind::xi_m: return "xi_m";
    }
    return "?";
}

/// One discontinuity of the map T0 -> T_opt. All fields are exact rational
/// multiples of pi; nullopt limits are +infinity, nullopt value_at means the
/// point itself is not observable.
struct CatalogPoint {
    Rational location;
    DiscontinuityKind kind = DiscontinuityKind::lambda_n;
    std::optional<Rational> left_limit;
    std::optional<Rational> right_limit;
    std::optional<Rational> value_at;
    long long param_k = 0;  // family index: n, h, or the interval index k
    long long param_m = 0;  // depth index of mu/xi families
};

/// Enumerates the discontinuities of T0 -> T_opt strictly inside the range
/// (from, to) in pi units, sorted by location.
///
/// The mu/xi families accumulate at the singular points pi/(2n+1); `depth`
/// bounds how many of them are listed per interval A_k / B_k (m = 1..depth).
/// The countable families lambda_n / pi over integers are cut off at
/// family index 500, beyond which consecutive points are closer than 4e-6.
std::vector<CatalogPoint> discontinuity_catalog(const Rational& from,
                                                const Rational& to,
                                                long long depth = 1);

} // namespace obswave
