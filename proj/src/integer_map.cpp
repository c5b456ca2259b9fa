#include "pregroup/integer_map.hpp"

#include <string>

namespace pregroup {

IntegerMap::IntegerMap(long long lo, long long hi, std::map<long long, long long> exceptions,
                       long long tail_offset_neg, long long tail_offset_pos)
    : lo_(lo), hi_(hi), exceptions_(std::move(exceptions)),
      neg_(tail_offset_neg), pos_(tail_offset_pos) {
    if (lo_ > hi_) {
        // Empty window: the two tails must partition Z at a fixed point.
        lo_ = 0;
        hi_ = -1;
        if (!exceptions_.empty()) throw Error("integer map: exceptions outside empty window");
    }
    for (const auto& [n, v] : exceptions_) {
        (void)v;
        if (n < lo_ || n > hi_)
            throw Error("integer map: exception at " + std::to_string(n) + " outside window");
    }
    long long prev = (*this)(lo_ - 1);
    for (long long n = lo_; n <= hi_ + 1; ++n) {
        long long cur = (*this)(n);
        if (cur < prev)
            throw Error("integer map: not order-preserving at n = " + std::to_string(n));
        prev = cur;
    }
}

IntegerMap IntegerMap::from_window(long long lo, long long hi,
                                   const std::function<long long(long long)>& fn) {
    std::map<long long, long long> table;
    for (long long n = lo; n <= hi; ++n) table[n] = fn(n);
    return IntegerMap(lo, hi, std::move(table), fn(lo) - lo, fn(hi) - hi);
}

long long IntegerMap::operator()(long long n) const {
    if (n < lo_) return n + neg_;
    if (n > hi_) return n + pos_;
    auto it = exceptions_.find(n);
    return it != exceptions_.end() ? it->second : n;
}

IntegerMap IntegerMap::adjoint(AdjointDirection direction) const {
    const IntegerMap& f = *this;
    // Outside [f(lo-1), f(hi+1)] the adjoint agrees with the inverted tails;
    // inside, it is found by scanning the window, which covers all candidates
    // because the tails are strictly increasing with slope one.
    const long long glo = f(lo_ - 1);
    const long long ghi = f(hi_ + 1);

    auto right_at = [&](long long m) -> long long {
        if (m >= ghi) return m - pos_;
        for (long long n = hi_; n >= lo_ - 1; --n)
            if (f(n) <= m) return n;
        return m - neg_;
    };
    auto left_at = [&](long long m) -> long long {
        if (m <= glo) return m - neg_;
        for (long long n = lo_; n <= hi_ + 1; ++n)
            if (f(n) >= m) return n;
        return m - pos_;
    };

    std::map<long long, long long> table;
    for (long long m = glo; m <= ghi; ++m)
        table[m] = direction == AdjointDirection::Right ? right_at(m) : left_at(m);
    return IntegerMap(glo, ghi, std::move(table), -neg_, -pos_);
}

}  // namespace pregroup
