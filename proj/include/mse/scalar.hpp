#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "mse/errors.hpp"

namespace mse {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational.  Stored reduced with a positive
/// denominator, so equality is plain value equality.  No floating point
/// is used anywhere in the core: every coordinate, height and certificate
/// entry is one of these.
using Scalar = boost::multiprecision::cpp_rational;

inline int sign(const Scalar& x) { return x.sign(); }

/// Canonical text form: "p/q", or just "p" when q == 1.  Base 10.
inline std::string scalar_to_string(const Scalar& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) {
        s += '/';
        s += denominator(x).str();
    }
    return s;
}

/// Parse the canonical form (also accepts non-reduced "p/q"; the result
/// is normalized).  Rejects anything else.
inline Scalar scalar_from_string(std::string_view text) {
    const auto bad = [&] { return Error("invalid rational: '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Scalar(Integer(std::string(text)));
        }
        Integer num{std::string(text.substr(0, slash))};
        Integer den{std::string(text.substr(slash + 1))};
        if (den == 0) throw bad();
        return Scalar(num) / Scalar(den);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

} // namespace mse
