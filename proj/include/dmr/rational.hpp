#ifndef DMR_RATIONAL_HPP
#define DMR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dmr {

// Exact arbitrary-precision rational scalar. boost keeps it canonical
// (lowest terms, positive denominator), which is all we need: every
// combinatorial quantity in this library is compared with operator==.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num, den);
}

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool rat_is_integer(const Rational& r) { return rat_den(r) == 1; }

inline double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

// "3", "-3/2"
inline std::string rat_to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (!rat_is_integer(r)) s += "/" + rat_den(r).str();
    return s;
}

}  // namespace dmr

#endif
