#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "obswave/arcs.hpp"

namespace obswave {

enum class Endpoint { zero, pi };

inline const char* endpoint_name(Endpoint e) {
    return e == Endpoint::zero ? "0" : "pi";
}

/// One observation window {lambda} x (from, to); to == nullopt is +infinity
/// (allowed on the last segment only).
template <class T>
struct Segment {
    Endpoint lambda = Endpoint::zero;
    T from{};
    std::optional<T> to;

    T shift() const {
        return lambda == Endpoint::pi ? circle_traits<T>::half_turn()
                                      : circle_traits<T>::zero();
    }
};

/// Consecutive family of observation windows starting at time 0.
/// Endpoint labels are arbitrary; the alternating family of the switching
/// problem is built with make_alternating / make_constant_rate below.
template <class T>
struct Schedule {
    std::vector<Segment<T>> segments;

    void validate() const {
        using traits = circle_traits<T>;
        if (segments.empty()) throw std::invalid_argument("schedule: no segments");
        if (!(segments.front().from == traits::zero()))
            throw std::invalid_argument("schedule: first interval must start at 0");
        for (std::size_t k = 0; k < segments.size(); ++k) {
            const auto& s = segments[k];
            if (s.to) {
                if (!(s.from < *s.to))
                    throw std::invalid_argument("schedule: empty interval");
                if (k + 1 < segments.size() && !(*s.to == segments[k + 1].from))
                    throw std::invalid_argument("schedule: intervals must be consecutive");
            } else if (k + 1 < segments.size()) {
                throw std::invalid_argument("schedule: only the last interval may be unbounded");
            }
        }
    }
};

template <class T>
ArcSet<T> project_segment(const Segment<T>& s) {
    return project_interval<T>(s.from, s.to, s.shift());
}

/// Alternating schedule of consecutive intervals with breakpoints
/// 0 < t_0 < t_1 < ...; lambda_k = 0 for even k, pi for odd k.
template <class T>
Schedule<T> make_alternating(const std::vector<T>& breakpoints, bool last_unbounded = false) {
    Schedule<T> s;
    T prev = circle_traits<T>::zero();
    for (std::size_t k = 0; k < breakpoints.size(); ++k) {
        Segment<T> seg;
        seg.lambda = (k % 2 == 0) ? Endpoint::zero : Endpoint::pi;
        seg.from = prev;
        seg.to = breakpoints[k];
        prev = breakpoints[k];
        s.segments.push_back(seg);
    }
    if (last_unbounded) {
        Segment<T> seg;
        seg.lambda = (s.segments.size() % 2 == 0) ? Endpoint::zero : Endpoint::pi;
        seg.from = prev;
        s.segments.push_back(seg);
    }
    s.validate();
    return s;
}

/// F = {{lambda_k} x (k T0, (k+1) T0)} truncated to `count` segments.
template <class T>
Schedule<T> make_constant_rate(const T& t0, std::size_t count) {
    Schedule<T> s;
    T prev = circle_traits<T>::zero();
    for (std::size_t k = 0; k < count; ++k) {
        Segment<T> seg;
        seg.lambda = (k % 2 == 0) ? Endpoint::zero : Endpoint::pi;
        seg.from = prev;
        seg.to = prev + t0;
        prev = *seg.to;
        s.segments.push_back(seg);
    }
    s.validate();
    return s;
}

/// 10 * ceil(2pi / shortest bounded interval); the truncation that makes
/// non-observability decidable in finite time.
template <class T>
std::size_t default_horizon_segments(const Schedule<T>& s) {
    using traits = circle_traits<T>;
    std::optional<T> min_len;
    for (const auto& seg : s.segments) {
        if (!seg.to) continue;
        T len = *seg.to - seg.from;
        if (!min_len || len < *min_len) min_len = len;
    }
    if (!min_len) return s.segments.size();
    const double ratio = traits::to_double(traits::full_turn()) / traits::to_double(*min_len);
    const auto n = static_cast<std::size_t>(std::ceil(ratio));
    return 10 * (n == 0 ? 1 : n);
}

template <class T>
struct ObservabilityReport {
    bool observable = false;
    std::optional<T> t_opt;
    /// Residual complement of the examined projections (empty if observable).
    ArcSet<T> uncovered;
    std::optional<std::size_t> least_index_h;
    std::size_t segments_examined = 0;
};

/// Covering test of Theorem-type condition at index n:
/// |S^1 \ union_{k<=n} I~_k| = 0.
template <class T>
bool is_observable_at(const Schedule<T>& s, std::size_t n) {
    if (n >= s.segments.size()) throw std::out_of_range("is_observable_at: index");
    ArcSet<T> covered = ArcSet<T>::empty_set();
    for (std::size_t k = 0; k <= n; ++k)
        covered = covered.union_with(project_segment(s.segments[k]));
    return covered.covers_circle();
}

/// Covering test with the schedule clipped to the time window (0, horizon).
template <class T>
bool is_observable_in_time(const Schedule<T>& s, const T& horizon) {
    ArcSet<T> covered = ArcSet<T>::empty_set();
    for (const auto& seg : s.segments) {
        if (!(seg.from < horizon)) break;
        std::optional<T> to = seg.to;
        if (!to || horizon < *to) to = horizon;
        covered = covered.union_with(project_interval<T>(seg.from, to, seg.shift()));
    }
    return covered.covers_circle();
}

namespace detail {

/// Least delta such that the forward-growing arc [anchor, anchor + delta)
/// contains the piece [lo, hi).
template <class T>
T cover_delta(const T& lo, const T& hi, const T& anchor) {
    using traits = circle_traits<T>;
    const T full = traits::full_turn();
    const T a = traits::mod_full(lo - anchor);
    T b = traits::mod_full(hi - anchor);
    if (b == traits::zero()) b = full;
    return a < b ? b : full;
}

} // namespace detail

/// Sweep oracle: walks the segments, subtracting each projection from the
/// uncovered set, and extracts T_opt exactly from the residual at the first
/// covering index h. The infimum is attained at
///   t_{h-1} + max over uncovered pieces of the forward covering distance
/// from the anchor r(t_{h-1} - lambda_h), since the projection of segment h
/// grows as a single forward arc.
template <class T>
ObservabilityReport<T> optimal_time(
    const Schedule<T>& s,
    std::size_t max_segments = std::numeric_limits<std::size_t>::max()) {
    ObservabilityReport<T> rep;
    ArcSet<T> uncovered = ArcSet<T>::full_circle();
    const std::size_t n = std::min(max_segments, s.segments.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto& seg = s.segments[k];
        const ArcSet<T> remaining = uncovered.minus(project_segment(seg));
        if (remaining.empty()) {
            const T anchor = quotient<T>(seg.from - seg.shift());
            T required = circle_traits<T>::zero();
            for (const auto& [lo, hi] : uncovered.pieces()) {
                const T d = detail::cover_delta<T>(lo, hi, anchor);
                if (required < d) required = d;
            }
            rep.observable = true;
            rep.t_opt = seg.from + required;
            rep.least_index_h = k;
            rep.segments_examined = k + 1;
            return rep;
        }
        uncovered = remaining;
    }
    rep.observable = false;
    rep.uncovered = uncovered;
    rep.segments_examined = n;
    return rep;
}

/// A labeled open interval {lambda} x (from, to) of a reduced family F'.
template <class T>
struct LabeledInterval {
    Endpoint lambda = Endpoint::zero;
    T from{};
    T to{};
};

template <class T>
struct SingleExchangeResult {
    T t_opt{};
    std::vector<LabeledInterval<T>> reduced;
    /// For T0 <= pi the covering can also be done from the second endpoint
    /// alone: I'_0 empty, I'_1 = (T0, 2pi + T0).
    std::optional<std::vector<LabeledInterval<T>>> alternative;
};

/// Closed form for K = {0,1}, I_0 = (0,T0), I_1 = (T0, inf), 0 < T0 < 2pi.
template <class T>
SingleExchangeResult<T> single_exchange_topt(const T& t0) {
    using traits = circle_traits<T>;
    const T h = traits::half_turn();
    const T full = traits::full_turn();
    if (!(traits::zero() < t0) || !(t0 < full))
        throw std::domain_error("single_exchange_topt: T0 must lie in (0, 2pi)");
    SingleExchangeResult<T> out;
    if (h < t0) {
        out.t_opt = h + h + h;
        out.reduced = {{Endpoint::zero, traits::zero(), t0},
                       {Endpoint::pi, h + t0, out.t_opt}};
    } else {
        out.t_opt = full + t0;
        out.reduced = {{Endpoint::zero, traits::zero(), t0},
                       {Endpoint::pi, t0 + t0, out.t_opt}};
        out.alternative = std::vector<LabeledInterval<T>>{
            {Endpoint::pi, t0, out.t_opt}};
    }
    return out;
}

template <class T>
struct DisjointifyResult {
    /// Pullbacks I'_k, one interval list per segment (possibly empty).
    std::vector<std::vector<std::pair<T, T>>> intervals;
    T total_measure{};
};

/// Greedy disjointification J~_0 = I~_0, J~_k = I~_k \ union of earlier J~'s,
/// pulled back to time subintervals of I_k (first pass through each arc).
/// When the covering condition holds at n the pullback lengths sum to 2pi.
template <class T>
DisjointifyResult<T> disjointify(const Schedule<T>& s, std::size_t n) {
    using traits = circle_traits<T>;
    if (!is_observable_at(s, n))
        throw std::invalid_argument("disjointify: schedule not observable at index n");
    DisjointifyResult<T> out;
    out.total_measure = traits::zero();
    ArcSet<T> covered = ArcSet<T>::empty_set();
    for (std::size_t k = 0; k <= n; ++k) {
        const auto& seg = s.segments[k];
        const ArcSet<T> proj = project_segment(seg);
        const ArcSet<T> fresh = proj.minus(covered);
        covered = covered.union_with(proj);
        std::vector<std::pair<T, T>> pulled;
        const T anchor = quotient<T>(seg.from - seg.shift());
        for (const auto& [lo, hi] : fresh.pieces()) {
            const T off = traits::mod_full(lo - anchor);
            const T len = hi - lo;
            pulled.push_back({seg.from + off, seg.from + off + len});
            out.total_measure = out.total_measure + len;
        }
        out.intervals.push_back(std::move(pulled));
    }
    return out;
}

inline Schedule<double> to_float(const Schedule<Rational>& s) {
    Schedule<double> out;
    for (const auto& seg : s.segments) {
        Segment<double> f;
        f.lambda = seg.lambda;
        f.from = circle_traits<Rational>::to_double(seg.from);
        if (seg.to) f.to = circle_traits<Rational>::to_double(*seg.to);
        out.segments.push_back(f);
    }
    return out;
}

/// Two-endpoint generalized family B: disjoint interval lists observed at
/// x = 0 and x = pi, possibly overlapping across the families.
template <class T>
struct GeneralizedSchedule {
    std::vector<std::pair<T, std::optional<T>>> zero_intervals;
    std::vector<std::pair<T, std::optional<T>>> pi_intervals;

    void validate() const {
        auto check = [](const std::vector<std::pair<T, std::optional<T>>>& v) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i].second && !(v[i].first < *v[i].second))
                    throw std::invalid_argument("generalized schedule: empty interval");
                if (i + 1 < v.size()) {
                    if (!v[i].second || !(*v[i].second <= v[i + 1].first))
                        throw std::invalid_argument(
                            "generalized schedule: intervals within a family must be disjoint and ordered");
                }
            }
        };
        check(zero_intervals);
        check(pi_intervals);
    }
};

template <class T>
bool is_generalized_observable(const GeneralizedSchedule<T>& b) {
    using traits = circle_traits<T>;
    b.validate();
    ArcSet<T> covered = ArcSet<T>::empty_set();
    for (const auto& [from, to] : b.zero_intervals)
        covered = covered.union_with(project_interval<T>(from, to, traits::zero()));
    for (const auto& [from, to] : b.pi_intervals)
        covered = covered.union_with(project_interval<T>(from, to, traits::half_turn()));
    return covered.covers_circle();
}

} // namespace obswave
