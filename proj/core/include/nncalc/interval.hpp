#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace nncalc {

// Interval of finite reals, open or closed at either end. Infinite endpoints
// mean "unbounded on that side"; contains() always rejects NaN and infinities
// themselves.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = true;
    bool hi_open = true;

    static Interval all() { return {}; }

    static Interval positive() {
        return {0.0, std::numeric_limits<double>::infinity(), true, true};
    }

    static Interval negative() {
        return {-std::numeric_limits<double>::infinity(), 0.0, true, true};
    }

    static Interval closed(double a, double b) { return {a, b, false, false}; }

    bool contains(double x) const {
        if (!std::isfinite(x)) return false;
        if (lo_open ? !(x > lo) : !(x >= lo)) return false;
        if (hi_open ? !(x < hi) : !(x <= hi)) return false;
        return true;
    }

    std::string str() const;
};

}  // namespace nncalc
