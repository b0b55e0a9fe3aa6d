#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyparr {

using BigInt = mpz_class;

/// Exact rational number. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Malformed user input: files, flags, out-of-domain arguments.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search or enumeration hit its configured work bound.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational field_inverse(const Rational& x) { return Rational(1) / x; }

inline Rational pow(Rational base, long e)
{
    if (e < 0) {
        base = field_inverse(base);
        e = -e;
    }
    Rational acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

/// Parses `p`, `-p`, `p/q`. Rejects zero denominators and trailing junk.
inline Rational parse_rational(std::string_view text)
{
    std::string s = trim(text);
    if (s.empty()) throw input_error("empty rational literal");
    auto valid_int = [](std::string_view t) {
        std::size_t i = 0;
        if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return t;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw input_error("malformed rational literal '" + s + "'");
    Rational r(BigInt(strip_plus(num)), BigInt(den));
    if (sgn(r.get_den()) == 0) throw input_error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace hyparr
