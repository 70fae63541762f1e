#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace posetcalc {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Element of [0, inf]: a nonnegative rational or the top element.
/// Used as the value poset for filtration functions and ordered diagrams.
struct ExtReal {
    bool inf = false;
    Rat value = 0;

    ExtReal() = default;
    ExtReal(Rat v) : value(std::move(v)) {}
    ExtReal(int v) : value(v) {}

    static ExtReal infinity() {
        ExtReal r;
        r.inf = true;
        return r;
    }

    bool is_finite() const { return !inf; }

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.inf || b.inf) return a.inf == b.inf;
        return a.value == b.value;
    }
    friend bool operator!=(const ExtReal& a, const ExtReal& b) { return !(a == b); }
    friend bool operator<(const ExtReal& a, const ExtReal& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.value < b.value;
    }
    friend bool operator<=(const ExtReal& a, const ExtReal& b) { return a < b || a == b; }
    friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
    friend bool operator>=(const ExtReal& a, const ExtReal& b) { return b <= a; }
};

inline ExtReal ext_max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
inline ExtReal ext_min(const ExtReal& a, const ExtReal& b) { return a < b ? a : b; }

/// |a - b| <= tol, with infinities equal only to each other.
inline bool ext_close(const ExtReal& a, const ExtReal& b, const Rat& tol) {
    if (a.inf || b.inf) return a.inf == b.inf;
    Rat d = a.value - b.value;
    if (d < 0) d = -d;
    return d <= tol;
}

/// Parses "3", "-5/7" or decimal notation "0.125" into an exact rational.
Rat parse_rational(const std::string& s);

std::string format_rational(const Rat& r);
std::string format_ext_real(const ExtReal& r);
std::optional<ExtReal> parse_ext_real(const std::string& s);

double to_double(const Rat& r);

} // namespace posetcalc
