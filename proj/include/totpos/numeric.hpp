#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace totpos {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int parse_int(std::string_view s) {
    if (s.empty()) throw ParseError("empty integer literal");
    try {
        return Int(std::string(s));
    } catch (const std::exception&) {
        throw ParseError("bad integer literal: " + std::string(s));
    }
}

/// Parses `p/q` or `p` into an exact rational.
inline Rat parse_rat(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational literal");
    return Rat(num, den);
}

inline std::string rat_to_string(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

inline long long to_ll(const Int& v) { return v.convert_to<long long>(); }

}  // namespace totpos
