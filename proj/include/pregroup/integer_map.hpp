#pragma once

#include <functional>
#include <map>

#include "pregroup/core.hpp"

namespace pregroup {

// Lambek's arithmetic model of a pregroup: order-preserving maps Z -> Z that
// are unbounded in both directions. A map is stored as a finite exception
// table over a window [lo, hi] plus one translation per tail, so
//
//   f(n) = n + tail_offset_neg            for n < lo
//   f(n) = exceptions[n], defaulting to n for lo <= n <= hi
//   f(n) = n + tail_offset_pos            for n > hi
//
// The slope-one tails keep the represented map unbounded and make both
// adjoints computable in finite time. Order preservation is validated at
// construction by walking the window plus one point on each side.
class IntegerMap {
public:
    // Identity map.
    IntegerMap() : IntegerMap(0, -1, {}, 0, 0) {}

    IntegerMap(long long lo, long long hi, std::map<long long, long long> exceptions,
               long long tail_offset_neg, long long tail_offset_pos);

    static IntegerMap translation(long long offset) {
        return IntegerMap(0, -1, {}, offset, offset);
    }

    // Samples fn over [lo, hi] and extends it with the matching translations.
    static IntegerMap from_window(long long lo, long long hi,
                                  const std::function<long long(long long)>& fn);

    long long operator()(long long n) const;

    // The adjoint map, computed exactly for the represented map:
    //   left:  g(m) = min { n | m <= f(n) }
    //   right: g(m) = max { n | f(n) <= m }
    // so that f(g(m)) <= m <= g(f(m)) holds pointwise for the right adjoint
    // and g(f(m)) <= m <= f(g(m)) for the left one.
    IntegerMap adjoint(AdjointDirection direction) const;

    long long window_lo() const { return lo_; }
    long long window_hi() const { return hi_; }
    long long tail_offset_neg() const { return neg_; }
    long long tail_offset_pos() const { return pos_; }
    const std::map<long long, long long>& exceptions() const { return exceptions_; }

private:
    long long lo_, hi_;
    std::map<long long, long long> exceptions_;
    long long neg_, pos_;
};

}  // namespace pregroup
