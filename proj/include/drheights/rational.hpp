#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

namespace drh {

// All polygon and height arithmetic is exact; slopes q^i are unbounded
// integers, break abscissae and heights are unbounded rationals.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow_bigint(const BigInt& base, std::int64_t exp) {
    BigInt r = 1;
    BigInt b = base;
    std::int64_t e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline bool is_integer(const BigRat& x) {
    return boost::multiprecision::denominator(x) == 1;
}

/// Floor of an exact rational.
inline BigInt floor_rat(const BigRat& x) {
    BigInt n = boost::multiprecision::numerator(x);
    BigInt d = boost::multiprecision::denominator(x);  // d > 0
    BigInt q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

/// Ceiling of an exact rational.
inline BigInt ceil_rat(const BigRat& x) {
    BigInt n = boost::multiprecision::numerator(x);
    BigInt d = boost::multiprecision::denominator(x);
    BigInt q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return q;
}

inline std::string rat_to_string(const BigRat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace drh
