#pragma once

#include <compare>

#include "spantruss/edge.hpp"

namespace spantruss {

/// Inclusive timestamp interval [t_start, t_end].
struct Interval {
    Timestamp t_start = 0;
    Timestamp t_end = 0;

    auto operator<=>(const Interval&) const = default;

    Timestamp length() const { return t_end - t_start + 1; }
};

/// True iff outer spans inner: outer.t_start <= inner.t_start and
/// outer.t_end >= inner.t_end. An interval contains itself.
inline bool interval_contains(const Interval& outer, const Interval& inner) {
    return outer.t_start <= inner.t_start && outer.t_end >= inner.t_end;
}

}  // namespace spantruss
