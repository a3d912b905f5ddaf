#pragma once

#include <gmpxx.h>

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "credal/errors.hpp"

namespace credal {

/// Exact rational number. Always kept in canonical (reduced) form.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "a/b", "-a/b" or an integer. Rejects decimals, blanks and zero
/// denominators so that every accepted string round-trips through to_string.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_int(num)) throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        if (!is_int(den) || den.front() == '-' || den.front() == '+')
            throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
    }
    std::string buf(text.front() == '+' ? text.substr(1) : text);
    Rational r;
    if (r.set_str(buf, 10) != 0 || r.get_den() == 0)
        throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

/// "a/b" with b > 1, or "a" when the value is an integer.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline Rational sum(std::span<const Rational> a) {
    Rational acc = 0;
    for (const auto& x : a) acc += x;
    return acc;
}

inline std::string to_string(std::span<const Rational> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += to_string(v[i]);
    }
    return out + ")";
}

}  // namespace credal
