#pragma once

#include "hyparr/laurent.hpp"
#include "hyparr/linalg.hpp"
#include "hyparr/os_algebra.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hyparr {

/// Equivariant cellular chain complex of the universal cover of a minimal
/// CW-complex, as free right modules over the group ring.
///
/// Group-ring entries are commutative Laurent polynomials. This is exact for
/// the complexes built here: tori, wedges of circles, and their products.
/// Every boundary entry is a binomial in one generator, and the only products
/// formed (by the product rule or by composing boundaries) multiply entries
/// from different direct-product factors. Multiplying entries in two distinct
/// generators of the same free factor is refused.
///
/// boundaries[q] maps C_q to C_{q-1}; rows index the basis of C_q, columns
/// the basis of C_{q-1}. boundaries[0] is an empty rank(C_0) x 0 matrix.
struct MinimalChainComplex {
    std::vector<std::string> generators;
    std::vector<int> factor_of;        // factor id per generator
    std::vector<bool> factor_abelian;  // per factor
    std::vector<std::size_t> ranks;
    std::vector<LaurentMatrix> boundaries;
    std::vector<std::vector<std::string>> basis_labels;

    std::size_t dim() const { return ranks.empty() ? 0 : ranks.size() - 1; }
    std::size_t nvars() const { return generators.size(); }
    const LaurentMatrix& boundary(std::size_t q) const { return boundaries.at(q); }

    /// Cell counts as a polynomial: sum rank(C_q) T^q.
    IntPolynomial rank_polynomial() const
    {
        std::vector<BigInt> c;
        for (auto r : ranks) c.emplace_back(static_cast<unsigned long>(r));
        return IntPolynomial(std::move(c));
    }
};

namespace detail {

inline std::vector<std::string> default_symbols(std::size_t n, std::size_t first = 1)
{
    std::vector<std::string> s;
    for (std::size_t i = 0; i < n; ++i) s.push_back("x" + std::to_string(first + i));
    return s;
}

inline LaurentPoly inverse_minus_one(std::size_t nvars, std::size_t i)
{
    return LaurentPoly::variable(nvars, i, -1) - LaurentPoly::constant(nvars, 1);
}

inline std::string cell_label(const std::vector<std::string>& symbols, const IndexSet& idx)
{
    std::string s = "[";
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + symbols[static_cast<std::size_t>(idx[k])];
    return s + "]";
}

}  // namespace detail

/// Product in the group ring, refusing products that would need the
/// non-commutative structure of a free factor.
inline LaurentPoly group_ring_product(const MinimalChainComplex& cx, const LaurentPoly& a, const LaurentPoly& b)
{
    if (!a.is_zero() && !b.is_zero()) {
        auto ua = a.variables_used(), ub = b.variables_used();
        for (std::size_t u = 0; u < ua.size(); ++u) {
            if (!ua[u]) continue;
            for (std::size_t v = 0; v < ub.size(); ++v) {
                if (!ub[v] || u == v) continue;
                int f = cx.factor_of[u];
                if (f == cx.factor_of[v] && !cx.factor_abelian[static_cast<std::size_t>(f)])
                    throw std::domain_error("product of entries in distinct generators of a free factor (" +
                                            cx.generators[u] + ", " + cx.generators[v] + ") is not commutative");
            }
        }
    }
    return a * b;
}

/// Composite of boundaries: row-convention product boundary(q) * boundary(q-1).
inline LaurentMatrix compose_boundaries(const MinimalChainComplex& cx, std::size_t q)
{
    const auto& a = cx.boundary(q);
    const auto& b = cx.boundary(q - 1);
    LaurentMatrix out(a.rows(), b.cols(), cx.nvars());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) out.at(i, j) += group_ring_product(cx, a.at(i, k), b.at(k, j));
        }
    return out;
}

inline bool boundary_squares_to_zero(const MinimalChainComplex& cx)
{
    for (std::size_t q = 2; q <= cx.dim(); ++q)
        if (!compose_boundaries(cx, q).is_zero()) return false;
    return true;
}

inline bool is_epsilon_minimal(const LaurentMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m.at(i, j).augmentation()) != 0) return false;
    return true;
}

inline bool is_epsilon_minimal(const MinimalChainComplex& cx)
{
    for (const auto& b : cx.boundaries)
        if (!is_epsilon_minimal(b)) return false;
    return true;
}

/// Minimal complex of the n-torus: C_q has basis sigma_I, |I| = q, and
/// d(sigma_I) = sum_r (-1)^{r-1} sigma_{I - i_r} (x_{i_r}^{-1} - 1).
inline MinimalChainComplex torus_complex(std::size_t n, std::vector<std::string> symbols = {})
{
    if (n < 1) throw input_error("torus_complex needs n >= 1");
    if (symbols.empty()) symbols = detail::default_symbols(n);
    if (symbols.size() != n) throw input_error("torus_complex: wrong number of symbols");
    MinimalChainComplex cx;
    cx.generators = symbols;
    cx.factor_of.assign(n, 0);
    cx.factor_abelian = {true};

    std::vector<std::vector<IndexSet>> cells(n + 1);
    for (std::size_t q = 0; q <= n; ++q) {
        detail::for_each_subset(static_cast<int>(n), static_cast<int>(q),
                                [&](detail::Mask m) { cells[q].push_back(detail::from_mask(m)); });
        std::sort(cells[q].begin(), cells[q].end());
        cx.ranks.push_back(cells[q].size());
        std::vector<std::string> labels;
        for (const auto& c : cells[q]) labels.push_back(detail::cell_label(symbols, c));
        cx.basis_labels.push_back(std::move(labels));
    }
    cx.boundaries.emplace_back(1, 0, n);
    for (std::size_t q = 1; q <= n; ++q) {
        LaurentMatrix d(cells[q].size(), cells[q - 1].size(), n);
        for (std::size_t row = 0; row < cells[q].size(); ++row) {
            const auto& I = cells[q][row];
            for (std::size_t r = 0; r < I.size(); ++r) {
                IndexSet face = I;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(r));
                auto col = static_cast<std::size_t>(
                    std::lower_bound(cells[q - 1].begin(), cells[q - 1].end(), face) - cells[q - 1].begin());
                LaurentPoly e = detail::inverse_minus_one(n, static_cast<std::size_t>(I[r]));
                d.at(row, col) = r % 2 == 0 ? e : -e;
            }
        }
        cx.boundaries.push_back(std::move(d));
    }
    return cx;
}

/// Minimal complex of a wedge of d circles: d(sigma_i) = x_i^{-1} - 1.
inline MinimalChainComplex wedge_complex(std::size_t d, std::vector<std::string> symbols = {})
{
    if (d < 1) throw input_error("wedge_complex needs d >= 1");
    if (symbols.empty()) symbols = detail::default_symbols(d);
    if (symbols.size() != d) throw input_error("wedge_complex: wrong number of symbols");
    MinimalChainComplex cx;
    cx.generators = symbols;
    cx.factor_of.assign(d, 0);
    cx.factor_abelian = {d == 1};
    cx.ranks = {1, d};
    cx.basis_labels = {{"[]"}, {}};
    cx.boundaries.emplace_back(1, 0, d);
    LaurentMatrix b(d, 1, d);
    for (std::size_t i = 0; i < d; ++i) {
        b.at(i, 0) = detail::inverse_minus_one(d, i);
        cx.basis_labels[1].push_back("[" + symbols[i] + "]");
    }
    cx.boundaries.push_back(std::move(b));
    return cx;
}

/// Tensor product complex of a direct product of groups. Degree-q basis:
/// pairs (c, d) ordered by the degree of c, then c's index, then d's index.
/// d(c x d) = dc x d + (-1)^{deg c} c x dd.
inline MinimalChainComplex kunneth_product(const MinimalChainComplex& C, const MinimalChainComplex& D)
{
    std::set<std::string> seen(C.generators.begin(), C.generators.end());
    for (const auto& g : D.generators)
        if (seen.count(g)) throw input_error("kunneth_product: generator symbol '" + g + "' occurs in both factors");

    MinimalChainComplex out;
    const std::size_t nc = C.nvars(), nd = D.nvars(), nv = nc + nd;
    out.generators = C.generators;
    out.generators.insert(out.generators.end(), D.generators.begin(), D.generators.end());
    out.factor_abelian = C.factor_abelian;
    out.factor_abelian.insert(out.factor_abelian.end(), D.factor_abelian.begin(), D.factor_abelian.end());
    out.factor_of = C.factor_of;
    const int shift = static_cast<int>(C.factor_abelian.size());
    for (int f : D.factor_of) out.factor_of.push_back(f + shift);

    const std::size_t dim = C.dim() + D.dim();
    // offset[q][a] = first basis index of the (a, q-a) block in degree q
    std::vector<std::vector<std::size_t>> offset(dim + 1, std::vector<std::size_t>(C.dim() + 2, 0));
    auto rank_c = [&](std::size_t a) { return a <= C.dim() ? C.ranks[a] : 0; };
    auto rank_d = [&](std::size_t b) { return b <= D.dim() ? D.ranks[b] : 0; };
    for (std::size_t q = 0; q <= dim; ++q) {
        std::size_t total = 0;
        std::vector<std::string> labels;
        for (std::size_t a = 0; a <= C.dim(); ++a) {
            offset[q][a] = total;
            if (a > q || q - a > D.dim()) continue;
            total += rank_c(a) * rank_d(q - a);
            for (std::size_t i = 0; i < rank_c(a); ++i)
                for (std::size_t j = 0; j < rank_d(q - a); ++j)
                    labels.push_back(C.basis_labels[a][i] + D.basis_labels[q - a][j]);
        }
        offset[q][C.dim() + 1] = total;
        out.ranks.push_back(total);
        out.basis_labels.push_back(std::move(labels));
    }
    auto index = [&](std::size_t q, std::size_t a, std::size_t i, std::size_t j) {
        return offset[q][a] + i * rank_d(q - a) + j;
    };

    out.boundaries.emplace_back(out.ranks[0], 0, nv);
    for (std::size_t q = 1; q <= dim; ++q) {
        LaurentMatrix bd(out.ranks[q], out.ranks[q - 1], nv);
        for (std::size_t a = 0; a <= std::min(q, C.dim()); ++a) {
            const std::size_t b = q - a;
            if (b > D.dim()) continue;
            for (std::size_t i = 0; i < rank_c(a); ++i)
                for (std::size_t j = 0; j < rank_d(b); ++j) {
                    const std::size_t row = index(q, a, i, j);
                    if (a >= 1)
                        for (std::size_t k = 0; k < rank_c(a - 1); ++k) {
                            const auto& e = C.boundary(a).at(i, k);
                            if (!e.is_zero()) bd.at(row, index(q - 1, a - 1, k, j)) += e.embedded(nv, 0);
                        }
                    if (b >= 1)
                        for (std::size_t l = 0; l < rank_d(b - 1); ++l) {
                            const auto& e = D.boundary(b).at(j, l);
                            if (e.is_zero()) continue;
                            LaurentPoly term = e.embedded(nv, nc);
                            bd.at(row, index(q - 1, a, i, l)) += a % 2 == 0 ? term : -term;
                        }
                }
        }
        out.boundaries.push_back(std::move(bd));
    }
    (void)nd;
    return out;
}

/// Presentation of a module over the group ring: the cokernel of
/// R^{relations} -> R^{generators}. Rows are relations (row vectors), columns
/// generators.
struct PresentationMatrix {
    LaurentMatrix matrix;
    std::vector<std::string> symbols;

    std::size_t n_generators() const { return matrix.cols(); }
    std::size_t n_relations() const { return matrix.rows(); }

    /// Same presentation with x_i -> x_i^{-1}, the left-module form.
    PresentationMatrix left_module() const { return {matrix.inverted(), symbols}; }
};

/// pi_p of the p-skeleton X of an aspherical minimal complex Y is the
/// cokernel of the boundary d_{p+2}: C_{p+2}(Y) -> C_{p+1}(Y).
inline PresentationMatrix skeleton_presentation(const MinimalChainComplex& Y, std::size_t p)
{
    if (p < 1) throw input_error("skeleton_presentation needs p >= 1");
    if (p + 1 > Y.dim())
        throw input_error("skeleton_presentation: p + 1 exceeds dim Y, so the skeleton is all of Y and pi_p = 0");
    if (p + 2 <= Y.dim()) return {Y.boundary(p + 2), Y.generators};
    return {LaurentMatrix(0, Y.ranks[p + 1], Y.nvars()), Y.generators};
}

/// Free resolution 0 -> C_d -> ... -> C_{p+2} -> C_{p+1} -> pi_p -> 0.
struct Resolution {
    std::vector<LaurentMatrix> maps;        // d_d, ..., d_{p+2}
    std::vector<std::size_t> module_ranks;  // rank C_d, ..., rank C_{p+1}

    /// Number of free modules, d - p.
    std::size_t length() const { return module_ranks.size(); }
};

inline Resolution pi_p_resolution(const MinimalChainComplex& Y, std::size_t p)
{
    (void)skeleton_presentation(Y, p);
    Resolution r;
    for (std::size_t q = Y.dim(); q >= p + 1; --q) {
        r.module_ranks.push_back(Y.ranks[q]);
        if (q >= p + 2) r.maps.push_back(Y.boundary(q));
    }
    return r;
}

/// Rank of the coinvariants of the presented module: b minus the rank of the
/// matrix under x_i -> 1.
inline std::size_t coinvariant_rank(const PresentationMatrix& P)
{
    DenseMatrix<Rational> rows;
    for (std::size_t i = 0; i < P.matrix.rows(); ++i) {
        std::vector<Rational> row;
        for (std::size_t j = 0; j < P.matrix.cols(); ++j) row.emplace_back(P.matrix.at(i, j).augmentation());
        rows.push_back(std::move(row));
    }
    return P.n_generators() - matrix_rank(rows, P.n_generators());
}

/// Complement of n generic hyperplanes in C^l, modeled by the l-skeleton of
/// the n-torus: pi_k = 0 for 1 < k < l, and pi_l presented by d_{l+2}.
struct HattoriModel {
    MinimalChainComplex torus;
    std::size_t n = 0;
    std::size_t ell = 0;
    std::vector<std::size_t> vanishing;  // k with pi_k = 0, 1 < k < l
    bool aspherical = false;             // l = n: the skeleton is the whole torus
    std::optional<PresentationMatrix> presentation;
    std::optional<Resolution> resolution;
};

inline HattoriModel hattori_model(std::size_t n, std::size_t ell)
{
    if (ell < 2 || n < ell) throw input_error("hattori_model needs n >= l >= 2");
    HattoriModel h;
    h.torus = torus_complex(n);
    h.n = n;
    h.ell = ell;
    for (std::size_t k = 2; k < ell; ++k) h.vanishing.push_back(k);
    h.aspherical = n == ell;
    if (!h.aspherical) {
        h.presentation = skeleton_presentation(h.torus, ell);
        h.resolution = pi_p_resolution(h.torus, ell);
    }
    return h;
}

}  // namespace hyparr
