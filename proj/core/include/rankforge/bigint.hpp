#ifndef RANKFORGE_BIGINT_HPP
#define RANKFORGE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace rankforge {

// Exact arithmetic everywhere: counts and bounds routinely exceed 64 bits.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& base, std::uint64_t exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

/// q^e for a possibly negative exponent, as an exact rational.
inline Rat rat_pow(const Int& base, std::int64_t exp) {
    if (exp >= 0) return Rat(int_pow(base, static_cast<std::uint64_t>(exp)));
    return Rat(Int(1), int_pow(base, static_cast<std::uint64_t>(-exp)));
}

inline bool is_integral(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

inline Int to_integer(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }

/// Ordinary binomial coefficient; zero outside 0 <= b <= a.
inline Int binomial(std::int64_t a, std::int64_t b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Int r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;  // partial products are binomials, division is exact
    }
    return r;
}

/// n(n-1)/2, the exponent of q attached to alternating sums over the subspace lattice.
inline Int choose2(std::int64_t n) { return binomial(n, 2); }

inline std::string decimal(const Int& v) { return v.str(); }

}  // namespace rankforge

#endif
