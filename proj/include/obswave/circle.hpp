#pragma once

#include <cmath>
#include <numbers>

#include "obswave/rational.hpp"

namespace obswave {

/// Arithmetic-mode traits for values on the circle R/(2*pi*Z).
///
/// Exact mode stores the coefficient of pi (Rational), so the full turn is
/// the number 2; float mode stores radians. Every covering computation is
/// written against these traits and instantiated for both modes.
template <class T>
struct circle_traits;

template <>
struct circle_traits<Rational> {
    static constexpr bool exact = true;
    static Rational full_turn() { return Rational(2); }
    static Rational half_turn() { return Rational(1); }
    static Rational zero() { return Rational(0); }
    // Exact mode merges only on true equality.
    static Rational touch_tol() { return Rational(0); }
    static Rational mod_full(const Rational& t) { return t.mod(Rational(2)); }
    static double to_double(const Rational& t) {
        return t.to_double() * std::numbers::pi;
    }
};

template <>
struct circle_traits<double> {
    static constexpr bool exact = false;
    static double full_turn() { return 2.0 * std::numbers::pi; }
    static double half_turn() { return std::numbers::pi; }
    static double zero() { return 0.0; }
    static double touch_tol() { return 1e-12; }
    static double mod_full(double t) {
        const double full = full_turn();
        double r = std::fmod(t, full);
        if (r < 0) r += full;
        if (r >= full) r = 0.0; // fmod rounding at the seam
        return r;
    }
    static double to_double(double t) { return t; }
};

} // namespace obswave
