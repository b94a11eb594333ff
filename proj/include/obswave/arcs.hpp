#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "obswave/circle.hpp"

namespace obswave {

/// One arc of the circle, half-open [lo, hi). wraps means the arc crosses
/// the seam 2pi -> 0; the canonical full circle is lo = 0, hi = full turn.
template <class T>
struct Arc {
    T lo;
    T hi;
    bool wraps = false;
};

/// Finite union of disjoint, non-adjacent half-open arcs on R/(2*pi*Z).
///
/// Internally kept as maximal non-wrapping pieces [a, b), 0 <= a < b <= full,
/// sorted by a. A set wrapping the seam is stored split; the decomposition
/// into maximal pieces is unique, so piece-list equality is set equality.
/// Touching arcs are merged (within touch_tol in float mode) and slivers of
/// length <= touch_tol are dropped.
template <class T>
class ArcSet {
    using traits = circle_traits<T>;

public:
    using Piece = std::pair<T, T>;

    ArcSet() = default;

    static ArcSet empty_set() { return ArcSet(); }

    static ArcSet full_circle() {
        ArcSet s;
        s.pieces_.push_back({traits::zero(), traits::full_turn()});
        return s;
    }

    /// Arc [lo, hi) with lo in [0, full), hi in (0, full]; hi <= lo wraps.
    /// lo == hi yields the empty set.
    static ArcSet circle_arc(const T& lo, const T& hi) {
        ArcSet s;
        if (lo == hi) return s;
        if (lo < hi) {
            s.pieces_.push_back({lo, hi});
        } else {
            if (!(hi == traits::zero())) s.pieces_.push_back({traits::zero(), hi});
            s.pieces_.push_back({lo, traits::full_turn()});
        }
        s.renormalize();
        return s;
    }

    static ArcSet from_pieces(std::vector<Piece> raw) {
        ArcSet s;
        s.pieces_ = std::move(raw);
        s.renormalize();
        return s;
    }

    bool empty() const { return pieces_.empty(); }

    bool is_full_circle() const {
        return pieces_.size() == 1 && pieces_[0].first == traits::zero() &&
               pieces_[0].second == traits::full_turn();
    }

    const std::vector<Piece>& pieces() const { return pieces_; }

    T measure() const {
        T m = traits::zero();
        for (const auto& [a, b] : pieces_) m = m + (b - a);
        return m;
    }

    ArcSet union_with(const ArcSet& other) const {
        std::vector<Piece> raw = pieces_;
        raw.insert(raw.end(), other.pieces_.begin(), other.pieces_.end());
        return from_pieces(std::move(raw));
    }

    ArcSet complement() const {
        const T full = traits::full_turn();
        ArcSet out;
        T cursor = traits::zero();
        for (const auto& [a, b] : pieces_) {
            if (cursor < a) out.pieces_.push_back({cursor, a});
            cursor = b;
        }
        if (cursor < full) out.pieces_.push_back({cursor, full});
        out.renormalize();
        return out;
    }

    ArcSet intersect_with(const ArcSet& other) const {
        ArcSet out;
        std::size_t i = 0, j = 0;
        while (i < pieces_.size() && j < other.pieces_.size()) {
            const T lo = std::max(pieces_[i].first, other.pieces_[j].first);
            const T hi = std::min(pieces_[i].second, other.pieces_[j].second);
            if (lo < hi) out.pieces_.push_back({lo, hi});
            if (pieces_[i].second < other.pieces_[j].second) ++i; else ++j;
        }
        out.renormalize();
        return out;
    }

    ArcSet minus(const ArcSet& other) const {
        return intersect_with(other.complement());
    }

    /// Covering up to measure zero: with half-open arcs this is exactly
    /// "complement empty".
    bool covers_circle() const { return complement().empty(); }

    friend bool operator==(const ArcSet& a, const ArcSet& b) {
        return a.pieces_ == b.pieces_;
    }
    friend bool operator!=(const ArcSet& a, const ArcSet& b) { return !(a == b); }

    bool approx_equal(const ArcSet& other, const T& tol) const {
        if (pieces_.size() != other.pieces_.size()) return false;
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            T da = pieces_[i].first - other.pieces_[i].first;
            T db = pieces_[i].second - other.pieces_[i].second;
            if (da < traits::zero()) da = -da;
            if (db < traits::zero()) db = -db;
            if (tol < da || tol < db) return false;
        }
        return true;
    }

    /// Presentation view: seam-adjacent pieces joined into one wrapping arc.
    std::vector<Arc<T>> arcs() const {
        std::vector<Arc<T>> out;
        if (pieces_.empty()) return out;
        if (is_full_circle()) {
            out.push_back({traits::zero(), traits::full_turn(), false});
            return out;
        }
        const bool seam_wrap = pieces_.front().first == traits::zero() &&
                               pieces_.back().second == traits::full_turn() &&
                               pieces_.size() >= 2;
        std::size_t begin = 0, end = pieces_.size();
        if (seam_wrap) {
            out.push_back({pieces_.back().first, pieces_.front().second, true});
            begin = 1;
            end = pieces_.size() - 1;
        }
        for (std::size_t i = begin; i < end; ++i)
            out.push_back({pieces_[i].first, pieces_[i].second, false});
        return out;
    }

private:
    void renormalize() {
        const T tol = traits::touch_tol();
        const T full = traits::full_turn();
        std::vector<Piece> clean;
        clean.reserve(pieces_.size());
        for (auto& p : pieces_)
            if (p.first < p.second) clean.push_back(p);
        std::sort(clean.begin(), clean.end());
        std::vector<Piece> merged;
        for (const auto& p : clean) {
            if (!merged.empty() && p.first <= merged.back().second + tol) {
                if (merged.back().second < p.second) merged.back().second = p.second;
            } else {
                merged.push_back(p);
            }
        }
        // drop slivers, clamp the last piece to the full turn
        pieces_.clear();
        for (auto& p : merged) {
            if (full < p.second) p.second = full;
            if (p.second - p.first <= tol) continue;
            pieces_.push_back(p);
        }
        if (!pieces_.empty()) {
            if (pieces_.front().first <= tol && !(pieces_.front().first == traits::zero()))
                pieces_.front().first = traits::zero();
            if (full - pieces_.back().second <= tol && !(pieces_.back().second == full))
                pieces_.back().second = full;
        }
    }

    std::vector<Piece> pieces_;
};

/// Image of the open time interval (from, to) shifted by -lambda under the
/// quotient map, treated half-open [r(from - lambda), r(to - lambda)).
/// to == nullopt means +infinity; any length >= 2*pi gives the full circle.
template <class T>
ArcSet<T> project_interval(const T& from, const std::optional<T>& to, const T& lambda) {
    using traits = circle_traits<T>;
    const T full = traits::full_turn();
    if (!to) return ArcSet<T>::full_circle();
    if (*to <= from) return ArcSet<T>::empty_set();
    const T len = *to - from;
    if (full <= len) return ArcSet<T>::full_circle();
    const T lo = traits::mod_full(from - lambda);
    const T hi_line = lo + len;
    if (hi_line <= full) return ArcSet<T>::circle_arc(lo, hi_line);
    return ArcSet<T>::circle_arc(lo, hi_line - full);
}

/// r(t): representative of t in [0, 2*pi).
template <class T>
T quotient(const T& t) {
    return circle_traits<T>::mod_full(t);
}

inline ArcSet<double> to_float(const ArcSet<Rational>& s) {
    std::vector<ArcSet<double>::Piece> pieces;
    pieces.reserve(s.pieces().size());
    for (const auto& [a, b] : s.pieces())
        pieces.push_back({circle_traits<Rational>::to_double(a),
                          circle_traits<Rational>::to_double(b)});
    return ArcSet<double>::from_pieces(std::move(pieces));
}

} // namespace obswave
