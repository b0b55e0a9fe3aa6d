#pragma once

#include "hyparr/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hyparr {

/// Univariate polynomial with big-integer coefficients, index = degree.
/// Canonical: no trailing zeros; the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<long> coeffs)
    {
        for (long x : coeffs) c_.emplace_back(x);
        trim();
    }

    static IntPolynomial monomial(long coeff, std::size_t degree)
    {
        std::vector<BigInt> c(degree + 1, 0);
        c[degree] = coeff;
        return IntPolynomial(std::move(c));
    }

    /// prod (1 + d_i T)
    static IntPolynomial exponent_product(const std::vector<int>& exponents)
    {
        IntPolynomial p{1};
        for (int d : exponents) p = p * IntPolynomial{1, d};
        return p;
    }

    const std::vector<BigInt>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

    BigInt operator()(const BigInt& x) const
    {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntPolynomial truncated(std::size_t max_degree) const
    {
        std::vector<BigInt> c(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(c_.size(), max_degree + 1)));
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
    {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator-(const IntPolynomial& a)
    {
        auto c = a.c_;
        for (auto& x : c) x = -x;
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(c));
    }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    /// Coefficientwise a >= b.
    friend bool dominates(const IntPolynomial& a, const IntPolynomial& b)
    {
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.coeff(i) < b.coeff(i)) return false;
        return true;
    }

    std::string str(const char* var = "T") const
    {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (sgn(c_[k]) == 0) continue;
            BigInt mag = abs(c_[k]);
            if (first) {
                if (sgn(c_[k]) < 0) os << "-";
            } else {
                os << (sgn(c_[k]) < 0 ? " - " : " + ");
            }
            if (k == 0 || mag != 1) os << mag;
            if (k > 0) os << var;
            if (k > 1) os << "^" << k;
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

private:
    void trim()
    {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

}  // namespace hyparr
