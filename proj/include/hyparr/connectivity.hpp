#pragma once

#include "hyparr/hypersolvable.hpp"
#include "hyparr/os_algebra.hpp"
#include "hyparr/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace hyparr {

/// Order of pi_1-connectivity: a positive integer or infinity.
class ConnectivityOrder {
public:
    static ConnectivityOrder infinity() { return ConnectivityOrder(true, 0); }
    static ConnectivityOrder finite(int p) { return ConnectivityOrder(false, p); }

    bool is_infinite() const { return infinite_; }
    int value() const
    {
        if (infinite_) throw std::logic_error("connectivity order is infinite");
        return value_;
    }
    std::string str() const { return infinite_ ? "infinity" : std::to_string(value_); }

    friend bool operator==(const ConnectivityOrder&, const ConnectivityOrder&) = default;

private:
    ConnectivityOrder(bool inf, int v) : infinite_(inf), value_(v) {}
    bool infinite_;
    int value_;
};

class not_hypersolvable : public input_error {
public:
    not_hypersolvable(std::vector<IndexSet> frontier)
        : input_error("arrangement is not hypersolvable"), frontier_(std::move(frontier))
    {
    }
    const std::vector<IndexSet>& frontier() const { return frontier_; }

private:
    std::vector<IndexSet> frontier_;
};

struct ConnectivityReport {
    ConnectivityOrder p = ConnectivityOrder::infinity();
    bool aspherical = true;
    BigInt c_next = 0;            // coefficient of T^{p+1} in Pbar - P; 0 when p is infinite
    IntPolynomial p_poly;         // Poincare polynomial from the nbc basis
    IntPolynomial pbar_poly;      // prod (1 + d_i T) over the exponents
    CompositionSeries series;
    bool supersolvable = false;
    std::optional<GradedDims> pbar_linear_algebra;  // present when cross-checked
};

struct ConnectivityOptions {
    SearchOptions search;
    bool cross_check_quadratic = false;
    QuadraticOsOptions quadratic;
};

/// Largest k with P = Pbar mod T^{k+1}, or infinity when they are equal.
inline ConnectivityOrder agreement_order(const IntPolynomial& p, const IntPolynomial& pbar)
{
    if (p == pbar) return ConnectivityOrder::infinity();
    std::size_t k = 0;
    while (p.coeff(k) == pbar.coeff(k)) ++k;
    return ConnectivityOrder::finite(static_cast<int>(k) - 1);
}

inline ConnectivityReport connectivity(const Arrangement& arr, ConnectivityOptions opt = {})
{
    auto hs = analyze_hypersolvability(arr, opt.search);
    if (!hs.series) throw not_hypersolvable(hs.frontier);

    ConnectivityReport r;
    r.series = *hs.series;
    r.p_poly = poincare_polynomial(arr);
    r.pbar_poly = r.series.exponent_product();
    r.p = agreement_order(r.p_poly, r.pbar_poly);
    r.aspherical = r.p.is_infinite();
    if (!r.p.is_infinite()) {
        auto k = static_cast<std::size_t>(r.p.value() + 1);
        r.c_next = r.pbar_poly.coeff(k) - r.p_poly.coeff(k);
    }
    r.supersolvable = is_supersolvable(arr, opt.search).supersolvable;
    if (r.supersolvable != r.aspherical)
        throw std::logic_error("supersolvability verdict disagrees with P = Pbar");
    if (r.p_poly.truncated(2) != r.pbar_poly.truncated(2))
        throw std::logic_error("P and Pbar differ below degree 3");

    if (opt.cross_check_quadratic) {
        auto dims = quadratic_os_dims(arr, opt.quadratic);
        for (std::size_t q = 0; q < dims.size(); ++q)
            if (r.pbar_poly.coeff(q) != static_cast<unsigned long>(dims[q]))
                throw std::logic_error("quadratic OS dimension in degree " + std::to_string(q) +
                                       " disagrees with the exponent product");
        r.pbar_linear_algebra = std::move(dims);
    }
    return r;
}

/// b_3 of a deconed rank-3 hypersolvable arrangement: the third elementary
/// symmetric function of the exponents after dropping d_1.
inline BigInt decone_b3(const CompositionSeries& s)
{
    std::vector<int> rest(s.exponents.begin() + 1, s.exponents.end());
    return IntPolynomial::exponent_product(rest).coeff(3);
}

/// Rank of the free abelian group of coinvariants of pi_p: c_{p+1}.
inline BigInt coinvariants_rank(const Arrangement& arr, ConnectivityOptions opt = {})
{
    auto r = connectivity(arr, opt);
    if (r.p.is_infinite()) throw input_error("coinvariants_rank: complement is aspherical (p is infinite)");
    if (rank(arr) == 3 && r.c_next != decone_b3(r.series))
        throw std::logic_error("c_3 disagrees with b_3 of the decone");
    return r.c_next;
}

}  // namespace hyparr
