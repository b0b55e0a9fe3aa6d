#pragma once

#include "hyparr/arrangement.hpp"
#include "hyparr/linalg.hpp"
#include "hyparr/polynomial.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

namespace hyparr {

/// Hyperplane indices listed from lowest to highest.
using Ordering = std::vector<int>;

inline Ordering natural_ordering(const Arrangement& arr)
{
    Ordering o(arr.size());
    std::iota(o.begin(), o.end(), 0);
    return o;
}

namespace detail {

using Mask = std::uint64_t;

inline Mask to_mask(const IndexSet& s)
{
    Mask m = 0;
    for (int i : s) m |= Mask{1} << i;
    return m;
}

inline IndexSet from_mask(Mask m)
{
    IndexSet s;
    while (m) {
        s.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

inline std::vector<int> positions_of(const Arrangement& arr, const Ordering& ordering)
{
    const std::size_t n = arr.size();
    if (ordering.size() != n) throw input_error("ordering must list every hyperplane exactly once");
    std::vector<int> pos(n, -1);
    for (std::size_t r = 0; r < n; ++r) {
        int i = ordering[r];
        if (i < 0 || static_cast<std::size_t>(i) >= n || pos[static_cast<std::size_t>(i)] != -1)
            throw input_error("ordering is not a permutation of the hyperplanes");
        pos[static_cast<std::size_t>(i)] = static_cast<int>(r);
    }
    return pos;
}

inline void require_mask_capacity(const Arrangement& arr)
{
    if (arr.size() > 63) throw input_error("arrangements with more than 63 hyperplanes are not supported");
}

}  // namespace detail

/// Each circuit minus its highest element under `ordering`; sorted, unique.
inline std::vector<IndexSet> broken_circuits(const Arrangement& arr, const Ordering& ordering,
                                             CircuitOptions opt = {})
{
    detail::require_central(arr, "broken_circuits");
    auto pos = detail::positions_of(arr, ordering);
    auto circ = circuits(arr, rank(arr) + 1, opt);
    std::set<IndexSet> out;
    for (auto c : circ.circuits) {
        auto top = std::max_element(c.begin(), c.end(), [&](int a, int b) { return pos[a] < pos[b]; });
        c.erase(top);
        out.insert(std::move(c));
    }
    return {out.begin(), out.end()};
}

/// Subsets with no broken circuit, grouped by cardinality 0..rank.
struct NbcBasis {
    std::vector<std::vector<IndexSet>> by_degree;

    std::vector<std::size_t> counts() const
    {
        std::vector<std::size_t> c;
        for (const auto& d : by_degree) c.push_back(d.size());
        return c;
    }
};

inline NbcBasis nbc_basis(const Arrangement& arr, const Ordering& ordering, CircuitOptions opt = {})
{
    detail::require_mask_capacity(arr);
    auto bcs = broken_circuits(arr, ordering, opt);
    const int n = static_cast<int>(arr.size());
    const std::size_t top = rank(arr);
    // broken circuits bucketed by their largest index, for the DFS below
    std::vector<std::vector<detail::Mask>> ending_at(static_cast<std::size_t>(n));
    for (const auto& bc : bcs) ending_at[static_cast<std::size_t>(bc.back())].push_back(detail::to_mask(bc));

    NbcBasis basis;
    basis.by_degree.resize(top + 1);
    auto rec = [&](auto&& self, detail::Mask set, std::size_t size, int next) -> void {
        basis.by_degree[size].push_back(detail::from_mask(set));
        if (size == top) return;
        for (int k = next; k < n; ++k) {
            detail::Mask grown = set | (detail::Mask{1} << k);
            bool broken = false;
            for (auto bc : ending_at[static_cast<std::size_t>(k)])
                if ((bc & grown) == bc) {
                    broken = true;
                    break;
                }
            if (!broken) self(self, grown, size + 1, k + 1);
        }
    };
    rec(rec, 0, 0, 0);
    for (auto& d : basis.by_degree) std::sort(d.begin(), d.end());
    return basis;
}

inline IntPolynomial poincare_polynomial(const Arrangement& arr, const Ordering& ordering, CircuitOptions opt = {})
{
    auto counts = nbc_basis(arr, ordering, opt).counts();
    std::vector<BigInt> c;
    for (auto x : counts) c.emplace_back(static_cast<unsigned long>(x));
    return IntPolynomial(std::move(c));
}

inline IntPolynomial poincare_polynomial(const Arrangement& arr)
{
    return poincare_polynomial(arr, natural_ordering(arr));
}

/// Hilbert function of a graded algebra, index = degree.
using GradedDims = std::vector<std::size_t>;

struct QuadraticOsOptions {
    std::size_t max_degree = 5;
    /// refuse degrees whose monomial basis C(n, q) exceeds this
    std::size_t work_bound = 50000;
};

inline std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace detail {

inline void for_each_subset(int n, int k, const std::function<void(Mask)>& fn)
{
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(0);
        return;
    }
    // Gosper's hack
    Mask s = (Mask{1} << k) - 1;
    const Mask limit = Mask{1} << n;
    while (s < limit) {
        fn(s);
        Mask c = s & (~s + 1);
        Mask r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

/// All 3-subsets of the listed rank-2 flats.
inline std::vector<std::array<int, 3>> dependent_triples(const CollinearityData& coll)
{
    std::vector<std::array<int, 3>> out;
    for (const auto& l : coll.lines)
        for (std::size_t a = 0; a < l.size(); ++a)
            for (std::size_t b = a + 1; b < l.size(); ++b)
                for (std::size_t c = b + 1; c < l.size(); ++c) out.push_back({l[a], l[b], l[c]});
    return out;
}

}  // namespace detail

/// Degree-q dimensions of the exterior algebra modulo the ideal generated by
/// d(e_B) over dependent triples B, computed by exact rational rank of the
/// span of d(e_B) ^ e_K (|K| = q-2) in the degree-q monomial basis.
inline GradedDims quadratic_os_dims(const Arrangement& arr, QuadraticOsOptions opt = {})
{
    detail::require_central(arr, "quadratic_os_dims");
    detail::require_mask_capacity(arr);
    const int n = static_cast<int>(arr.size());
    if (opt.max_degree > arr.size()) opt.max_degree = arr.size();
    for (std::size_t q = 0; q <= opt.max_degree; ++q)
        if (binomial(arr.size(), q) > opt.work_bound)
            throw budget_exceeded("quadratic OS degree " + std::to_string(q) + " needs C(" + std::to_string(n) + "," +
                                  std::to_string(q) + ") = " + std::to_string(binomial(arr.size(), q)) +
                                  " monomials, above the work bound " + std::to_string(opt.work_bound));
    const auto triples = detail::dependent_triples(rank2_flats(arr));

    GradedDims dims;
    for (std::size_t q = 0; q <= opt.max_degree; ++q) {
        const std::size_t full = binomial(arr.size(), q);
        if (q < 2 || triples.empty()) {
            dims.push_back(full);
            continue;
        }
        std::unordered_map<detail::Mask, std::size_t> column;
        detail::for_each_subset(n, static_cast<int>(q), [&](detail::Mask s) { column.emplace(s, column.size()); });

        SparseRankAccumulator acc;
        detail::for_each_subset(n, static_cast<int>(q) - 2, [&](detail::Mask k) {
            for (const auto& t : triples) {
                // d(e_abc) = e_bc - e_ac + e_ab
                const std::array<std::pair<std::array<int, 2>, int>, 3> terms{
                    {{{t[1], t[2]}, 1}, {{t[0], t[2]}, -1}, {{t[0], t[1]}, 1}}};
                SparseRankAccumulator::Row row;
                for (const auto& [pair, coeff] : terms) {
                    detail::Mask pm = (detail::Mask{1} << pair[0]) | (detail::Mask{1} << pair[1]);
                    if (pm & k) continue;
                    // sign of sorting (x, y, K...) into increasing order
                    int swaps = std::popcount(k & ((detail::Mask{1} << pair[0]) - 1)) +
                                std::popcount(k & ((detail::Mask{1} << pair[1]) - 1));
                    int sign = (swaps % 2 ? -1 : 1) * coeff;
                    row.emplace_back(column.at(pm | k), Rational(sign));
                }
                if (row.empty()) continue;
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                acc.insert(std::move(row));
            }
        });
        dims.push_back(full - acc.rank());
    }
    return dims;
}

/// Rank of the kernel of the projection from the quadratic OS algebra onto
/// the OS algebra in degree q.
inline std::size_t kernel_rank(const Arrangement& arr, std::size_t q, QuadraticOsOptions opt = {})
{
    opt.max_degree = q;
    auto qdims = quadratic_os_dims(arr, opt);
    auto p = poincare_polynomial(arr);
    std::size_t pq = p.coeff(q).get_ui();
    std::size_t qq = q < qdims.size() ? qdims[q] : 0;
    return qq - pq;
}

}  // namespace hyparr
