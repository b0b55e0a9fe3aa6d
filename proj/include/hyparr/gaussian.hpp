#pragma once

#include "hyparr/rational.hpp"

#include <ostream>
#include <string>

namespace hyparr {

/// Exact element of Q(i); used for points of the complex torus.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(r), im(0) {}

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b)
    {
        return a * field_inverse(b);
    }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }

    friend bool is_zero(const GaussianRational& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

    friend GaussianRational field_inverse(const GaussianRational& z)
    {
        if (is_zero(z)) throw std::domain_error("inverse of zero");
        Rational norm = z.re * z.re + z.im * z.im;
        return {z.re / norm, -z.im / norm};
    }

    friend GaussianRational pow(GaussianRational base, long e)
    {
        if (e < 0) {
            base = field_inverse(base);
            e = -e;
        }
        GaussianRational acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string str() const
    {
        if (sgn(im) == 0) return re.get_str();
        std::string s = sgn(re) == 0 ? "" : re.get_str();
        if (sgn(im) > 0 && !s.empty()) s += "+";
        return s + im.get_str() + "i";
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }
};

/// Parses `a`, `a/b`, `a+bi`, `a/b-c/di`, `bi`, `i`.
inline GaussianRational parse_gaussian(std::string_view text)
{
    std::string s = trim(text);
    if (s.empty()) throw input_error("empty complex literal");
    if (s.back() != 'i') return {parse_rational(s), 0};
    s.pop_back();
    // split at the last sign that is not the leading one
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    }
    auto imag_part = [](std::string t) {
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        return parse_rational(t);
    };
    if (split == std::string::npos) return {0, imag_part(s)};
    return {parse_rational(s.substr(0, split)), imag_part(s.substr(split))};
}

}  // namespace hyparr
