#pragma once

#include "hyparr/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace hyparr {

using Exponents = std::vector<int>;

/// Integer Laurent polynomial in a fixed number of commuting variables,
/// stored sparsely. Zero coefficients are never stored; iteration order of
/// the term map is the canonical order.
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, BigInt>;

    explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, long c)
    {
        LaurentPoly p(nvars);
        p.add_term(Exponents(nvars, 0), BigInt(c));
        return p;
    }

    static LaurentPoly monomial(Exponents e, BigInt c = 1)
    {
        LaurentPoly p(e.size());
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    /// x_i^power
    static LaurentPoly variable(std::size_t nvars, std::size_t i, int power = 1)
    {
        Exponents e(nvars, 0);
        e.at(i) = power;
        return monomial(std::move(e));
    }

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Exponents e, const BigInt& c)
    {
        if (e.size() != nvars_) throw std::invalid_argument("exponent vector length mismatch");
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    /// Image under the augmentation x_i -> 1.
    BigInt augmentation() const
    {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// Value at a point of the torus; F needs pow(F, long) and field ops.
    template <typename F>
    F evaluate(const std::vector<F>& point) const
    {
        if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
        F acc(0);
        for (const auto& [e, c] : terms_) {
            F term{Rational(c)};
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] != 0) term *= pow(point[i], static_cast<long>(e[i]));
            acc += term;
        }
        return acc;
    }

    /// x_i -> prod_j x_j^{phi[i][j]}; phi is nvars x target_nvars.
    LaurentPoly substitute(const std::vector<std::vector<int>>& phi) const
    {
        if (phi.size() != nvars_) throw std::invalid_argument("substitution matrix has wrong row count");
        const std::size_t target = phi.empty() ? 0 : phi.front().size();
        LaurentPoly out(target);
        for (const auto& [e, c] : terms_) {
            Exponents f(target, 0);
            for (std::size_t i = 0; i < nvars_; ++i)
                for (std::size_t j = 0; j < target; ++j) f[j] += e[i] * phi[i][j];
            out.add_term(std::move(f), c);
        }
        return out;
    }

    /// x_i -> x_i^{-1}: turns right-module matrices into left-module ones.
    LaurentPoly inverted() const
    {
        LaurentPoly out(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            for (auto& x : f) x = -x;
            out.add_term(std::move(f), c);
        }
        return out;
    }

    /// Re-expresses in `total` variables, this polynomial's variables
    /// occupying positions offset..offset+nvars-1.
    LaurentPoly embedded(std::size_t total, std::size_t offset) const
    {
        LaurentPoly out(total);
        for (const auto& [e, c] : terms_) {
            Exponents f(total, 0);
            std::copy(e.begin(), e.end(), f.begin() + static_cast<std::ptrdiff_t>(offset));
            out.add_term(std::move(f), c);
        }
        return out;
    }

    /// Representative of the associate class: divided by the largest
    /// monomial dividing it and signed so the last term is positive.
    LaurentPoly normalized_unit() const
    {
        if (terms_.empty()) return *this;
        Exponents low = terms_.begin()->first;
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < nvars_; ++i) low[i] = std::min(low[i], e[i]);
        const bool flip = sgn(terms_.rbegin()->second) < 0;
        LaurentPoly out(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            for (std::size_t i = 0; i < nvars_; ++i) f[i] -= low[i];
            out.add_term(std::move(f), flip ? BigInt(-c) : c);
        }
        return out;
    }

    std::vector<bool> variables_used() const
    {
        std::vector<bool> used(nvars_, false);
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] != 0) used[i] = true;
        return used;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b)
    {
        a.check_compatible(b);
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend LaurentPoly operator-(const LaurentPoly& a)
    {
        LaurentPoly out(a.nvars_);
        for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        a.check_compatible(b);
        LaurentPoly out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.nvars_);
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
        return a.terms_ < b.terms_;
    }

    std::string str(const std::vector<std::string>& symbols) const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
            BigInt mag = abs(c);
            os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
            first = false;
            if (constant || mag != 1) os << mag;
            bool need_star = !constant && mag != 1;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << "*";
                os << (i < symbols.size() ? symbols[i] : "x" + std::to_string(i + 1));
                if (e[i] != 1) os << "^" << e[i];
                need_star = true;
            }
        }
        return os.str();
    }

    std::string str() const
    {
        std::vector<std::string> s;
        for (std::size_t i = 0; i < nvars_; ++i) s.push_back("x" + std::to_string(i + 1));
        return str(s);
    }

private:
    void check_compatible(const LaurentPoly& b) const
    {
        if (nvars_ != b.nvars_) throw std::invalid_argument("Laurent polynomials over different variable sets");
    }

    std::size_t nvars_;
    TermMap terms_;
};

/// Dense matrix over LaurentPoly, row-major.
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
        : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, LaurentPoly(nvars))
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    LaurentPoly& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    const LaurentPoly& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
    }

    /// Entrywise image; `target_nvars` is the variable count of the results.
    template <typename Fn>
    LaurentMatrix map(Fn fn, std::size_t target_nvars) const
    {
        LaurentMatrix out = *this;
        for (auto& e : out.data_) e = fn(e);
        out.nvars_ = target_nvars;
        return out;
    }

    template <typename Fn>
    LaurentMatrix map(Fn fn) const
    {
        return map(fn, nvars_);
    }

    LaurentMatrix inverted() const { return map([](const LaurentPoly& p) { return p.inverted(); }); }

    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
    std::vector<LaurentPoly> data_;
};

}  // namespace hyparr
