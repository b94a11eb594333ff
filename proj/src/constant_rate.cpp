#include "obswave/constant_rate.hpp"

#include <algorithm>

namespace obswave {

namespace {

constexpr long long kFamilyCap = 500;

Rational topt_or_nan(const Rational& loc, std::optional<Rational>* out) {
    const auto a = classify_constant_rate<Rational>(loc);
    *out = a.t_opt;
    return loc;
}

bool in_range(const Rational& x, const Rational& from, const Rational& to) {
    return from < x && x < to;
}

} // namespace

std::vector<CatalogPoint> discontinuity_catalog(const Rational& from,
                                                const Rational& to,
                                                long long depth) {
    if (!(Rational(0) <= from) || !(to <= Rational(2)) || !(from < to))
        throw std::domain_error("discontinuity_catalog: range must lie in (0, 2pi)");
    if (depth < 0) throw std::domain_error("discontinuity_catalog: negative depth");

    std::vector<CatalogPoint> out;

    // lambda_n = (n+2)/(n+1), n >= 1: decreasing from 3/2 towards 1.
    for (long long n = 1; n <= kFamilyCap; ++n) {
        const Rational loc(n + 2, n + 1);
        if (!(from < loc)) break;  // past the lower end of the range
        if (!in_range(loc, from, to)) continue;
        CatalogPoint p;
        p.kind = DiscontinuityKind::lambda_n;
        p.param_k = n;
        p.left_limit = Rational(n + 3);
        p.right_limit = Rational(n + 2);
        p.location = topt_or_nan(loc, &p.value_at);
        out.push_back(p);
    }

    // pi/2n: value 2pi, limits 3pi and 3pi - pi/2n.
    for (long long n = 1; n <= kFamilyCap; ++n) {
        const Rational loc(1, 2 * n);
        if (!(from < loc)) break;
        if (!in_range(loc, from, to)) continue;
        CatalogPoint p;
        p.kind = DiscontinuityKind::pi_over_2n;
        p.param_k = n;
        p.left_limit = Rational(3);
        p.right_limit = Rational(3) - loc;
        p.location = topt_or_nan(loc, &p.value_at);
        out.push_back(p);
    }

    // pi/(2n+1): both limits blow up; the point itself is not observable.
    for (long long n = 0; n <= kFamilyCap; ++n) {
        const Rational loc(1, 2 * n + 1);
        if (!(from < loc)) break;
        if (!in_range(loc, from, to)) continue;
        CatalogPoint p;
        p.kind = DiscontinuityKind::pi_over_odd;
        p.param_k = n;
        p.location = loc;
        out.push_back(p);
    }

    // 2pi/(2h+1), h >= 1.
    for (long long h = 1; h <= kFamilyCap; ++h) {
        const Rational loc(2, 2 * h + 1);
        if (!(from < loc)) break;
        if (!in_range(loc, from, to)) continue;
        CatalogPoint p;
        p.param_k = h;
        const Rational tail = Rational(2 * h, 2 * h + 1);
        if (h % 2 == 0) {
            p.kind = DiscontinuityKind::two_pi_over_odd_even;
            p.left_limit = Rational(3) + tail;
            p.right_limit = Rational(2) + tail;
        } else {
            p.kind = DiscontinuityKind::two_pi_over_odd_odd;
            p.left_limit = Rational(3);
            p.right_limit = Rational(3) + tail;
        }
        p.location = topt_or_nan(loc, &p.value_at);
        out.push_back(p);
    }

    // mu_m = pi/(k + 1/(m+2)) inside A_k, k odd; increasing in m towards pi/k.
    for (long long k = 1; Rational(1, k) > from; k += 2) {
        for (long long m = 1; m <= depth; ++m) {
            const Rational loc(m + 2, k * (m + 2) + 1);
            if (!in_range(loc, from, to)) continue;
            CatalogPoint p;
            p.kind = DiscontinuityKind::mu_m;
            p.param_k = k;
            p.param_m = m;
            p.left_limit = Rational(1) + loc * Rational(k * (m + 2) + 1);
            p.right_limit = Rational(1) + loc * Rational(k * (m + 3) + 1);
            p.location = topt_or_nan(loc, &p.value_at);
            out.push_back(p);
        }
    }

    // xi_m = pi/(k + (m+1)/(m+2)) inside B_k, k even; decreasing towards pi/(k+1).
    for (long long k = 2; Rational(2, 2 * k + 1) > from; k += 2) {
        for (long long m = 1; m <= depth; ++m) {
            const Rational loc(m + 2, k * (m + 2) + m + 1);
            if (!in_range(loc, from, to)) continue;
            CatalogPoint p;
            p.kind = DiscontinuityKind::xi_m;
            p.param_k = k;
            p.param_m = m;
            p.left_limit = Rational(m + 3) + loc * Rational(k);
            p.right_limit = Rational(m + 2) + loc * Rational(k);
            p.location = topt_or_nan(loc, &p.value_at);
            out.push_back(p);
        }
    }

    std::sort(out.begin(), out.end(),
              [](const CatalogPoint& a, const CatalogPoint& b) {
                  return a.location < b.location;
              });
    return out;
}

} // namespace obswave
