#pragma once

#include "hyparr/chain_complex.hpp"
#include "hyparr/gaussian.hpp"
#include "hyparr/laurent.hpp"
#include "hyparr/linalg.hpp"

#include <complex>
#include <map>
#include <set>
#include <vector>

namespace hyparr {

/// Extension of scalars along the abelianization of the group. Entries are
/// already commutative Laurent polynomials, so this is the identity.
inline LaurentMatrix abelianized_matrix(const PresentationMatrix& P) { return P.matrix; }

struct FittingIdeal {
    std::size_t k = 0;
    std::size_t n_generators = 0;  // b, generators of the presented module
    std::size_t nvars = 0;
    std::vector<LaurentPoly> generators;  // empty: the zero ideal

    bool is_zero_ideal() const { return generators.empty(); }
    bool is_unit_ideal() const
    {
        return generators.size() == 1 && generators.front() == LaurentPoly::constant(nvars, 1);
    }
};

struct FittingOptions {
    std::size_t max_minors = 200000;  // cap on C(rows, s) * C(cols, s)
};

namespace detail {

/// Determinant of the submatrix on `rows` x `cols` by Laplace expansion along
/// the first row, memoized on the set of remaining columns.
inline LaurentPoly laurent_minor(const LaurentMatrix& m, const IndexSet& rows, const IndexSet& cols)
{
    const std::size_t s = rows.size();
    const std::size_t nv = m.nvars();
    std::vector<std::map<Mask, LaurentPoly>> memo(s + 1);
    std::function<LaurentPoly(std::size_t, Mask)> det = [&](std::size_t level, Mask avail) -> LaurentPoly {
        if (level == s) return LaurentPoly::constant(nv, 1);
        auto it = memo[level].find(avail);
        if (it != memo[level].end()) return it->second;
        LaurentPoly acc(nv);
        int sign = 1;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (!(avail >> j & 1)) continue;
            const auto& e = m.at(static_cast<std::size_t>(rows[level]), static_cast<std::size_t>(cols[j]));
            if (!e.is_zero()) {
                LaurentPoly sub = det(level + 1, avail & ~(Mask(1) << j));
                if (!sub.is_zero()) acc += sign > 0 ? e * sub : -(e * sub);
            }
            sign = -sign;
        }
        memo[level].emplace(avail, acc);
        return acc;
    };
    return det(0, (Mask(1) << cols.size()) - 1);
}

inline void check_point(const LaurentMatrix& m, const std::vector<GaussianRational>& t)
{
    if (t.size() != m.nvars())
        throw input_error("torus point has " + std::to_string(t.size()) + " coordinates, expected " +
                          std::to_string(m.nvars()));
    for (const auto& z : t)
        if (is_zero(z)) throw input_error("torus point has a zero coordinate");
}

}  // namespace detail

/// F_k: the ideal of (b-k+1)-minors. (0) when the minor size exceeds the
/// number of relations; the unit ideal when k > b.
inline FittingIdeal fitting_ideal(const PresentationMatrix& P, std::size_t k, FittingOptions opt = {})
{
    const std::size_t b = P.n_generators(), r = P.n_relations();
    if (k < 1) throw input_error("fitting_ideal needs k >= 1");
    FittingIdeal F;
    F.k = k;
    F.n_generators = b;
    F.nvars = P.matrix.nvars();
    if (k > b) {
        F.generators.push_back(LaurentPoly::constant(F.nvars, 1));
        return F;
    }
    const std::size_t s = b - k + 1;
    if (s > r) return F;
    if (b > 63 || r > 63) throw input_error("fitting_ideal: matrix too large");
    BigInt cr, cb;
    mpz_bin_uiui(cr.get_mpz_t(), r, s);
    mpz_bin_uiui(cb.get_mpz_t(), b, s);
    BigInt count = cr * cb;
    if (count > BigInt(static_cast<unsigned long>(opt.max_minors)))
        throw budget_exceeded("fitting_ideal: " + count.get_str() + " minors exceed the cap of " +
                              std::to_string(opt.max_minors));
    std::set<LaurentPoly> gens;
    detail::for_each_subset(static_cast<int>(r), static_cast<int>(s), [&](detail::Mask rm) {
        IndexSet rows = detail::from_mask(rm);
        detail::for_each_subset(static_cast<int>(b), static_cast<int>(s), [&](detail::Mask cm) {
            LaurentPoly d = detail::laurent_minor(P.matrix, rows, detail::from_mask(cm));
            if (!d.is_zero()) gens.insert(d.normalized_unit());
        });
    });
    if (gens.count(LaurentPoly::constant(F.nvars, 1))) {
        F.generators.push_back(LaurentPoly::constant(F.nvars, 1));
        return F;
    }
    F.generators.assign(gens.begin(), gens.end());
    return F;
}

inline bool variety_membership(const FittingIdeal& F, const std::vector<GaussianRational>& t)
{
    if (t.size() != F.nvars)
        throw input_error("torus point has " + std::to_string(t.size()) + " coordinates, expected " +
                          std::to_string(F.nvars));
    for (const auto& z : t)
        if (is_zero(z)) throw input_error("torus point has a zero coordinate");
    for (const auto& g : F.generators)
        if (!is_zero(g.evaluate(t))) return false;
    return true;
}

inline DenseMatrix<GaussianRational> specialize(const LaurentMatrix& m, const std::vector<GaussianRational>& t)
{
    detail::check_point(m, t);
    DenseMatrix<GaussianRational> out(m.rows(), std::vector<GaussianRational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).evaluate(t);
    return out;
}

/// b minus the rank of the presentation specialized at t.
inline std::size_t coker_dim_at(const PresentationMatrix& P, const std::vector<GaussianRational>& t)
{
    auto m = specialize(P.matrix, t);
    return P.n_generators() - matrix_rank(m, P.n_generators());
}

/// Floating-point variant for exploration; rank decided with tolerance tol.
inline std::size_t coker_dim_at_float(const PresentationMatrix& P, const std::vector<std::complex<double>>& t,
                                      double tol = 1e-9)
{
    if (t.size() != P.matrix.nvars()) throw input_error("torus point has the wrong number of coordinates");
    const std::size_t rows = P.n_relations(), cols = P.n_generators();
    std::vector<std::vector<std::complex<double>>> a(rows, std::vector<std::complex<double>>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (const auto& [e, c] : P.matrix.at(i, j).terms()) {
                std::complex<double> term = c.get_d();
                for (std::size_t v = 0; v < e.size(); ++v) term *= std::pow(t[v], e[v]);
                a[i][j] += term;
            }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        for (std::size_t i = rank; i < rows; ++i)
            if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
        if (std::abs(a[piv][col]) <= tol) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            auto f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return cols - rank;
}

/// dim H_{p+1}(Y, X; C_t) >= k for X the p-skeleton of Y, computed as the
/// cokernel dimension of d_{p+2} at t.
inline bool char_variety_membership(const MinimalChainComplex& Y, std::size_t p, std::size_t k,
                                    const std::vector<GaussianRational>& t)
{
    return coker_dim_at(skeleton_presentation(Y, p), t) >= k;
}

inline void require_unimodular(const std::vector<std::vector<int>>& phi, std::size_t n)
{
    if (phi.size() != n) throw input_error("substitution matrix must be " + std::to_string(n) + " x " + std::to_string(n));
    DenseMatrix<BigInt> m;
    for (const auto& row : phi) {
        if (row.size() != n) throw input_error("substitution matrix is not square");
        m.emplace_back(row.begin(), row.end());
    }
    BigInt d = integer_determinant(m);
    if (d != 1 && d != -1) throw input_error("substitution matrix is not unimodular (det " + d.get_str() + ")");
}

/// x_i -> prod_j x_j^{phi[i][j]} in every entry.
inline PresentationMatrix monomial_substitution(const PresentationMatrix& P, const std::vector<std::vector<int>>& phi)
{
    require_unimodular(phi, P.matrix.nvars());
    return {P.matrix.map([&](const LaurentPoly& e) { return e.substitute(phi); }), P.symbols};
}

/// The torus map s -> t with t_i = prod_j s_j^{phi[i][j]}; a polynomial
/// substituted by phi evaluates at s as the original evaluates at t.
inline std::vector<GaussianRational> apply_monomial_map(const std::vector<std::vector<int>>& phi,
                                                        const std::vector<GaussianRational>& s)
{
    std::vector<GaussianRational> t;
    for (const auto& row : phi) {
        GaussianRational acc(1);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) acc *= pow(s.at(j), static_cast<long>(row[j]));
        t.push_back(acc);
    }
    return t;
}

struct HilbertFunction {
    std::vector<BigInt> values;  // values[k] = dim I^k M / I^{k+1} M
    bool non_nilpotent = false;  // values at the top computed degree is nonzero
};

namespace detail {

/// Truncated polynomial ring Q[s_1..s_n]/(s)^{N+1}, monomials indexed by
/// total degree then lexicographically.
class TruncatedRing {
public:
    TruncatedRing(std::size_t n, std::size_t N) : n_(n), N_(N)
    {
        Exponents e(n, 0);
        enumerate(0, N, e);
        std::sort(monos_.begin(), monos_.end(), [](const Exponents& a, const Exponents& b) {
            int da = 0, db = 0;
            for (int x : a) da += x;
            for (int x : b) db += x;
            return da != db ? da < db : a < b;
        });
        for (std::size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = i;
    }

    std::size_t size() const { return monos_.size(); }
    const std::vector<Exponents>& monomials() const { return monos_; }
    std::size_t index(const Exponents& e) const { return index_.at(e); }

    using Element = std::map<Exponents, Rational>;

    Element multiply(const Element& a, const Element& b) const
    {
        Element out;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                Exponents e(n_);
                int deg = 0;
                for (std::size_t i = 0; i < n_; ++i) deg += e[i] = ea[i] + eb[i];
                if (static_cast<std::size_t>(deg) > N_) continue;
                out[e] += ca * cb;
            }
        return prune(std::move(out));
    }

    /// Image of a Laurent polynomial under x_i = 1 + s_i.
    Element from_laurent(const LaurentPoly& p) const
    {
        Element out;
        for (const auto& [e, c] : p.terms()) {
            Element term{{Exponents(n_, 0), Rational(c)}};
            for (std::size_t i = 0; i < n_; ++i)
                if (e[i] != 0) term = multiply(term, binomial_series(i, e[i]));
            for (auto& [m, v] : term) out[m] += v;
        }
        return prune(std::move(out));
    }

private:
    void enumerate(std::size_t i, std::size_t left, Exponents& e)
    {
        if (i == n_) {
            monos_.push_back(e);
            return;
        }
        for (std::size_t d = 0; d <= left; ++d) {
            e[i] = static_cast<int>(d);
            enumerate(i + 1, left - d, e);
        }
        e[i] = 0;
    }

    /// (1 + s_i)^power truncated; generalized binomial for negative powers.
    Element binomial_series(std::size_t i, int power) const
    {
        Element out;
        Rational coeff = 1;
        for (std::size_t j = 0; j <= N_; ++j) {
            if (sgn(coeff) == 0) break;
            Exponents e(n_, 0);
            e[i] = static_cast<int>(j);
            out[e] = coeff;
            coeff = coeff * Rational(power - static_cast<long>(j)) / Rational(static_cast<long>(j + 1));
        }
        return out;
    }

    static Element prune(Element e)
    {
        for (auto it = e.begin(); it != e.end();) it = sgn(it->second) == 0 ? e.erase(it) : std::next(it);
        return e;
    }

    std::size_t n_, N_;
    std::vector<Exponents> monos_;
    std::map<Exponents, std::size_t> index_;
};

/// dim_Q M / I^{k} M for the module presented by P (k >= 1).
inline std::size_t truncated_quotient_dim(const PresentationMatrix& P, std::size_t k)
{
    const std::size_t n = P.matrix.nvars(), b = P.n_generators();
    TruncatedRing R(n, k - 1);
    const std::size_t width = b * R.size();
    std::vector<std::vector<TruncatedRing::Element>> entries(P.n_relations());
    for (std::size_t i = 0; i < P.n_relations(); ++i)
        for (std::size_t j = 0; j < b; ++j) entries[i].push_back(R.from_laurent(P.matrix.at(i, j)));
    SparseRankAccumulator acc;
    for (std::size_t i = 0; i < P.n_relations(); ++i)
        for (const auto& mono : R.monomials()) {
            TruncatedRing::Element shift{{mono, Rational(1)}};
            std::map<std::size_t, Rational> row;
            for (std::size_t j = 0; j < b; ++j)
                for (const auto& [e, c] : R.multiply(shift, entries[i][j])) row[j * R.size() + R.index(e)] += c;
            SparseRankAccumulator::Row r;
            for (auto& [col, v] : row)
                if (sgn(v) != 0) r.emplace_back(col, v);
            if (!r.empty()) acc.insert(std::move(r));
        }
    return width - acc.rank();
}

}  // namespace detail

/// Hilbert function of the associated graded module of the presented module
/// with respect to the augmentation ideal, in degrees 0..D.
inline HilbertFunction hilbert_function(const PresentationMatrix& P, std::size_t D)
{
    if (!is_epsilon_minimal(P.matrix))
        throw input_error("hilbert_function needs entries in the augmentation ideal");
    HilbertFunction h;
    std::size_t prev = 0;
    for (std::size_t k = 0; k <= D; ++k) {
        std::size_t cur = detail::truncated_quotient_dim(P, k + 1);
        h.values.emplace_back(static_cast<unsigned long>(cur - prev));
        prev = cur;
    }
    h.non_nilpotent = sgn(h.values.back()) > 0;
    return h;
}

}  // namespace hyparr
