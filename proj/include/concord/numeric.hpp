#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace concord {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }
inline Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline int sign_of(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// Smallest integer power: returns base^e for e >= 0.
inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
    Rat r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

/// A rational u with u >= sqrt(x), within a factor (1 + 2^-20) of it. x >= 0.
inline Rat rat_sqrt_upper(const Rat& x) {
    if (x == 0) return 0;
    // scale to integer, take integer sqrt of num/den separately with rounding
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    const Int scale = Int(1) << 40;
    Int n2 = num * scale * scale;
    Int lo = boost::multiprecision::sqrt(n2 / den); // floor sqrt of scaled value
    return Rat(lo + 1, scale);
}

inline std::string rat_to_string(const Rat& x) {
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double rat_to_double(const Rat& x) { return x.convert_to<double>(); }

}  // namespace concord
