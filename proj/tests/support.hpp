#pragma once

#include "hyparr/connectivity.hpp"
#include "hyparr/fitting.hpp"
#include "hyparr/graph.hpp"

#include <bit>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#ifndef HYPARR_DATA_DIR
#define HYPARR_DATA_DIR "data"
#endif

namespace hyparr::testing {

inline std::string data_path(const std::string& name) { return std::string(HYPARR_DATA_DIR) + "/" + name; }

/// Reads a fixture and cones it when affine.
inline Arrangement load_fixture(const std::string& name)
{
    std::ifstream in(data_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    auto a = read_arrangement(in);
    return a.central() ? a : cone(a);
}

inline Graph load_graph(const std::string& name)
{
    std::ifstream in(data_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    return read_graph(in);
}

inline MinimalChainComplex fan_model()
{
    auto a = wedge_complex(2, {"x1", "x2"});
    auto b = wedge_complex(2, {"x3", "x4"});
    auto c = wedge_complex(2, {"x5", "x6"});
    return kunneth_product(kunneth_product(a, b), c);
}

inline MinimalChainComplex torus_wedge_model()
{
    return kunneth_product(torus_complex(3, {"x1", "x2", "x3"}), wedge_complex(2, {"x4", "x5"}));
}

/// Reference left-module presentation of the torus-wedge model, columns in
/// reference order.
inline LaurentMatrix reference_matrix()
{
    const std::size_t n = 5;
    auto x = [&](std::size_t i) { return LaurentPoly::variable(n, i - 1); };
    auto one = LaurentPoly::constant(n, 1);
    LaurentMatrix m(2, 7, n);
    m.at(0, 0) = one - x(4);
    m.at(0, 1) = one - x(3);
    m.at(0, 3) = x(2) - one;
    m.at(0, 5) = one - x(1);
    m.at(1, 0) = one - x(5);
    m.at(1, 2) = one - x(3);
    m.at(1, 4) = x(2) - one;
    m.at(1, 6) = one - x(1);
    return m;
}

/// Basis map from our Kunneth order [s12t4, s12t5, s13t4, s13t5, s23t4,
/// s23t5, s123] to the reference columns: reference column 0 is our column 6, and
/// reference column j >= 1 is minus our column j - 1.
inline LaurentMatrix to_reference_basis(const LaurentMatrix& ours)
{
    LaurentMatrix out(ours.rows(), ours.cols(), ours.nvars());
    for (std::size_t i = 0; i < ours.rows(); ++i) {
        out.at(i, 0) = ours.at(i, 6);
        for (std::size_t j = 1; j < 7; ++j) out.at(i, j) = -ours.at(i, j - 1);
    }
    return out;
}

// ---------------------------------------------------------------- generators

/// Random central arrangement with small integer coefficients; nullopt when
/// the draw repeats a hyperplane.
inline std::optional<Arrangement> random_arrangement(std::mt19937_64& rng, std::size_t max_size = 8)
{
    std::uniform_int_distribution<int> dim_d(2, 4), coeff(-1, 1), size_d(3, static_cast<int>(max_size));
    const int dim = dim_d(rng);
    const int n = size_d(rng);
    std::vector<LinearForm> forms;
    for (int i = 0; i < n; ++i) {
        LinearForm f;
        for (int j = 0; j < dim; ++j) f.coeffs.emplace_back(coeff(rng));
        forms.push_back(std::move(f));
    }
    try {
        return Arrangement(dim, std::move(forms), true);
    } catch (const input_error&) {
        return std::nullopt;
    }
}

inline Arrangement draw_arrangement(std::mt19937_64& rng, std::size_t max_size = 8)
{
    for (;;)
        if (auto a = random_arrangement(rng, max_size)) return *a;
}

/// Random graph without isolated vertices on at most max_vertices vertices.
inline Graph random_graph(std::mt19937_64& rng, int max_vertices = 8, std::size_t max_edges = 12)
{
    std::uniform_int_distribution<int> nv(2, max_vertices);
    const int m = nv(rng);
    std::vector<Edge> all;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) all.emplace_back(i, j);
    std::shuffle(all.begin(), all.end(), rng);
    std::uniform_int_distribution<std::size_t> ne(1, std::min(max_edges, all.size()));
    all.resize(ne(rng));
    std::map<int, int> relabel;
    for (auto [i, j] : all) relabel.emplace(i, 0), relabel.emplace(j, 0);
    int next = 1;
    for (auto& [v, l] : relabel) l = next++;
    for (auto& [i, j] : all) i = relabel[i], j = relabel[j];
    return Graph(next - 1, std::move(all));
}

inline std::vector<GaussianRational> random_torus_point(std::mt19937_64& rng, std::size_t n, bool special = true)
{
    std::uniform_int_distribution<long> num(-7, 7), den(1, 4);
    std::uniform_int_distribution<int> pick(0, 5);
    std::vector<GaussianRational> t;
    while (t.size() < n) {
        int s = special ? pick(rng) : 5;
        if (s == 0 || s == 1) {
            t.emplace_back(1);
        } else if (s == 2) {
            t.emplace_back(-1);
        } else if (s == 3) {
            t.emplace_back(Rational(0), Rational(1));
        } else {
            GaussianRational z(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
            z.re.canonicalize();
            z.im.canonicalize();
            if (!is_zero(z)) t.push_back(z);
        }
    }
    return t;
}

/// Unimodular n x n integer matrix as a product of random elementary moves.
inline std::vector<std::vector<int>> random_unimodular(std::mt19937_64& rng, std::size_t n)
{
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    if (n < 2) return m;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> mult(-1, 1), move(0, 2);
    for (int step = 0; step < 6; ++step) {
        std::size_t a = idx(rng), b = idx(rng);
        if (a == b) continue;
        switch (move(rng)) {
        case 0: {
            int c = mult(rng);
            for (std::size_t j = 0; j < n; ++j) m[a][j] += c * m[b][j];
            break;
        }
        case 1: std::swap(m[a], m[b]); break;
        default:
            for (auto& x : m[a]) x = -x;
        }
    }
    return m;
}

/// Random product of tori and wedges with at most 5 generators.
inline MinimalChainComplex random_model(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> factors(1, 3), kind(0, 1), size(1, 3);
    const int f = factors(rng);
    std::optional<MinimalChainComplex> acc;
    std::size_t next = 1;
    for (int i = 0; i < f; ++i) {
        std::size_t s = static_cast<std::size_t>(size(rng));
        if (next + s > 6) break;
        auto syms = detail::default_symbols(s, next);
        next += s;
        auto c = kind(rng) ? torus_complex(s, syms) : wedge_complex(s, syms);
        acc = acc ? kunneth_product(*acc, c) : c;
    }
    return *acc;
}

// ------------------------------------------------------------------- oracles

/// Poincare polynomial from the Moebius function of the lattice of flats:
/// sum over flats F of mu(F) (-T)^{rank F}. Flats are closures of subsets.
inline IntPolynomial moebius_poincare(const Arrangement& arr)
{
    const std::size_t n = arr.size();
    std::map<std::uint32_t, std::size_t> flats;  // closure mask -> rank
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        IndexSet idx;
        for (std::size_t i = 0; i < n; ++i)
            if (s >> i & 1) idx.push_back(static_cast<int>(i));
        std::size_t r = subset_rank(arr, idx);
        std::uint32_t closure = s;
        for (std::size_t h = 0; h < n; ++h) {
            if (s >> h & 1) continue;
            IndexSet with = idx;
            with.push_back(static_cast<int>(h));
            std::sort(with.begin(), with.end());
            if (subset_rank(arr, with) == r) closure |= 1u << h;
        }
        flats.emplace(closure, r);
    }
    std::map<std::uint32_t, BigInt> mu;
    std::vector<std::pair<std::uint32_t, std::size_t>> order(flats.begin(), flats.end());
    std::sort(order.begin(), order.end(), [](auto& a, auto& b) { return a.second < b.second; });
    std::vector<BigInt> coeffs(n + 1, 0);
    for (auto [f, r] : order) {
        BigInt m = f == 0 ? BigInt(1) : BigInt(0);
        if (f != 0)
            for (auto [g, rg] : order)
                if (rg < r && (g & ~f) == 0) m -= mu[g];
        mu[f] = m;
        coeffs[r] += r % 2 == 0 ? m : BigInt(-m);
    }
    return IntPolynomial(std::move(coeffs));
}

/// Collinearity of triples and ranks of all subsets, computed directly.
struct OracleTables {
    int n = 0;
    std::vector<char> collinear;      // n^3
    std::vector<std::size_t> ranks;   // by subset mask

    explicit OracleTables(const Arrangement& arr) : n(static_cast<int>(arr.size()))
    {
        ranks.resize(std::size_t{1} << n);
        for (std::uint32_t m = 0; m < ranks.size(); ++m) {
            IndexSet s;
            for (int i = 0; i < n; ++i)
                if (m >> i & 1) s.push_back(i);
            ranks[m] = subset_rank(arr, s);
        }
        collinear.assign(static_cast<std::size_t>(n * n * n), 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (a != b && b != c && a != c)
                        collinear[static_cast<std::size_t>((a * n + b) * n + c)] =
                            ranks[(1u << a) | (1u << b) | (1u << c)] == 2;
    }

    bool coll(int a, int b, int c) const { return collinear[static_cast<std::size_t>((a * n + b) * n + c)]; }
};

/// Axioms (I)-(III) evaluated straight from the tables; returns the
/// extension kind of (A, B), both given as bit masks.
inline ExtensionKind oracle_extension(const OracleTables& T, std::uint32_t A, std::uint32_t B)
{
    std::vector<int> bar, inB;
    for (int i = 0; i < T.n; ++i) {
        if ((A >> i & 1) && !(B >> i & 1)) bar.push_back(i);
        if (B >> i & 1) inB.push_back(i);
    }
    for (int a : bar)
        for (std::size_t x = 0; x < inB.size(); ++x)
            for (std::size_t y = x + 1; y < inB.size(); ++y)
                if (T.coll(a, inB[x], inB[y])) return ExtensionKind::not_solvable;
    std::map<std::pair<int, int>, int> f;
    for (std::size_t i = 0; i < bar.size(); ++i)
        for (std::size_t j = i + 1; j < bar.size(); ++j) {
            int found = -1;
            for (int b : inB)
                if (T.coll(bar[i], bar[j], b)) found = b;
            if (found < 0) return ExtensionKind::not_solvable;
            f[{bar[i], bar[j]}] = found;
        }
    for (std::size_t i = 0; i < bar.size(); ++i)
        for (std::size_t j = i + 1; j < bar.size(); ++j)
            for (std::size_t k = j + 1; k < bar.size(); ++k) {
                int p = f[{bar[i], bar[j]}], q = f[{bar[i], bar[k]}], r = f[{bar[j], bar[k]}];
                std::set<int> distinct{p, q, r};
                if (distinct.size() == 3 && !T.coll(p, q, r)) return ExtensionKind::not_solvable;
            }
    std::size_t ra = T.ranks[A], rb = T.ranks[B];
    if (ra == rb + 1) return ExtensionKind::fibered;
    if (ra == rb) return ExtensionKind::singular;
    return ExtensionKind::not_solvable;
}

/// All lengths of composition series, by dynamic programming over subsets.
/// With fibered_only, only all-fibered series count.
inline std::set<std::size_t> oracle_series_lengths(const Arrangement& arr, bool fibered_only = false)
{
    const std::size_t n = arr.size();
    const OracleTables tables(arr);
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::set<std::size_t>> lengths(full + 1);
    // lengths[B] = lengths of chains from B up to the full arrangement
    std::vector<std::uint32_t> masks(full + 1);
    std::iota(masks.begin(), masks.end(), 0u);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) > std::popcount(b);
    });
    lengths[full] = {0};
    for (std::uint32_t B : masks) {
        if (B == full || B == 0) continue;
        const std::uint32_t rest = full & ~B;
        for (std::uint32_t add = rest; add; add = (add - 1) & rest) {
            std::uint32_t A = B | add;
            if (lengths[A].empty()) continue;
            auto kind = oracle_extension(tables, A, B);
            if (kind == ExtensionKind::not_solvable) continue;
            if (fibered_only && kind != ExtensionKind::fibered) continue;
            for (auto l : lengths[A]) lengths[B].insert(l + 1);
        }
    }
    std::set<std::size_t> out;
    for (std::size_t h = 0; h < n; ++h)
        for (auto l : lengths[1u << h]) out.insert(l + 1);
    return out;
}

/// Number of proper colourings with T colours, by brute force.
inline long count_colourings(const Graph& g, int T)
{
    const int m = g.vertices();
    if (T == 0) return 0;
    std::vector<int> col(static_cast<std::size_t>(m) + 1, 0);
    long count = 0;
    std::function<void(int)> go = [&](int v) {
        if (v > m) {
            ++count;
            return;
        }
        for (int c = 0; c < T; ++c) {
            bool ok = true;
            for (int u = 1; u < v && ok; ++u)
                if (g.adjacent(u, v) && col[static_cast<std::size_t>(u)] == c) ok = false;
            if (!ok) continue;
            col[static_cast<std::size_t>(v)] = c;
            go(v + 1);
        }
    };
    go(1);
    return count;
}

/// Interpolates the colouring counts at T = 0..m (Newton forward differences).
inline IntPolynomial interpolated_chromatic(const Graph& g)
{
    const int m = g.vertices();
    std::vector<Rational> values;
    for (int T = 0; T <= m; ++T) values.emplace_back(count_colourings(g, T));
    // Newton basis binom(T, k) expanded into monomials
    std::vector<Rational> diffs = values, coeff(static_cast<std::size_t>(m) + 1, 0);
    std::vector<Rational> basis{1};  // binom(T, k) as coefficient vector
    for (int k = 0; k <= m; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) coeff[i] += diffs[0] * basis[i];
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
        diffs.pop_back();
        std::vector<Rational> next(basis.size() + 1, 0);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i] / (k + 1);
            next[i] -= basis[i] * k / (k + 1);
        }
        basis = next;
    }
    std::vector<BigInt> c;
    for (auto& x : coeff) {
        if (x.get_den() != 1) throw std::logic_error("non-integral chromatic coefficient");
        c.push_back(x.get_num());
    }
    return IntPolynomial(std::move(c));
}

// ------------------------------------------------------------------ properties

struct PropertyOutcome {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0 && cases > 0; }
    void fail(const std::string& why)
    {
        if (failures++ == 0) first_failure = why;
    }
};

/// (a) P from the nbc basis does not depend on the ordering, and matches the
/// Moebius oracle.
inline PropertyOutcome property_ordering_independence(std::uint64_t seed, std::size_t cases)
{
    std::mt19937_64 rng(seed);
    PropertyOutcome out;
    while (out.cases < cases) {
        auto arr = draw_arrangement(rng);
        auto base = poincare_polynomial(arr);
        Ordering ord = natural_ordering(arr);
        std::shuffle(ord.begin(), ord.end(), rng);
        ++out.cases;
        if (poincare_polynomial(arr, ord) != base) out.fail("ordering changes P for\n" + format_arrangement(arr));
        if (moebius_poincare(arr) != base) out.fail("nbc and Moebius disagree for\n" + format_arrangement(arr));
    }
    return out;
}

/// (b) d o d = 0 and epsilon-minimality for constructed complexes.
inline PropertyOutcome property_chain_complexes(std::uint64_t seed, std::size_t cases)
{
    std::mt19937_64 rng(seed);
    PropertyOutcome out;
    while (out.cases < cases) {
        auto Y = random_model(rng);
        ++out.cases;
        if (!boundary_squares_to_zero(Y)) out.fail("boundary does not square to zero");
        if (!is_epsilon_minimal(Y)) out.fail("complex is not epsilon-minimal");
        std::size_t total = 0;
        for (auto r : Y.ranks) total += r;
        if (Y.rank_polynomial()(BigInt(1)) != BigInt(static_cast<unsigned long>(total))) out.fail("rank bookkeeping");
    }
    return out;
}

/// Presentations reachable from random models: pi_p of a skeleton.
inline std::optional<PresentationMatrix> random_presentation(std::mt19937_64& rng)
{
    auto Y = random_model(rng);
    if (Y.dim() < 2) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pd(1, Y.dim() - 1);
    return skeleton_presentation(Y, pd(rng));
}

/// (c) F_k membership agrees with the cokernel-dimension test.
inline PropertyOutcome property_minor_coker(std::uint64_t seed, std::size_t cases)
{
    std::mt19937_64 rng(seed);
    PropertyOutcome out;
    std::size_t positives = 0;
    while (out.cases < cases) {
        auto P = random_presentation(rng);
        if (!P || P->n_generators() > 10) continue;
        std::uniform_int_distribution<std::size_t> kd(1, P->n_generators() + 1);
        std::size_t k = kd(rng);
        FittingIdeal F;
        try {
            F = fitting_ideal(*P, k);
        } catch (const budget_exceeded&) {
            continue;
        }
        auto t = random_torus_point(rng, P->matrix.nvars());
        ++out.cases;
        bool minors = variety_membership(F, t);
        bool coker = coker_dim_at(*P, t) >= k;
        positives += minors;
        if (minors != coker) out.fail("minor and coker tests disagree at " + std::to_string(k));
    }
    if (positives == 0) out.fail("no sampled point landed in a variety");
    return out;
}

/// (d) Membership is invariant under monomial changes of variables.
inline PropertyOutcome property_monomial_invariance(std::uint64_t seed, std::size_t cases)
{
    std::mt19937_64 rng(seed);
    PropertyOutcome out;
    while (out.cases < cases) {
        auto P = random_presentation(rng);
        if (!P || P->n_generators() > 10) continue;
        const std::size_t n = P->matrix.nvars();
        auto phi = random_unimodular(rng, n);
        auto Q = monomial_substitution(*P, phi);
        std::uniform_int_distribution<std::size_t> kd(1, P->n_generators());
        std::size_t k = kd(rng);
        FittingIdeal FP, FQ;
        try {
            FP = fitting_ideal(*P, k);
            FQ = fitting_ideal(Q, k);
        } catch (const budget_exceeded&) {
            continue;
        }
        auto s = random_torus_point(rng, n);
        auto t = apply_monomial_map(phi, s);
        ++out.cases;
        if (variety_membership(FQ, s) != variety_membership(FP, t)) out.fail("membership changed under substitution");
        if (coker_dim_at(Q, s) != coker_dim_at(*P, t)) out.fail("coker dimension changed under substitution");
    }
    return out;
}

/// (e) Graph and arrangement solvability agree: per extension and per series.
inline PropertyOutcome property_graph_arrangement(std::uint64_t seed, std::size_t cases)
{
    std::mt19937_64 rng(seed);
    PropertyOutcome out;
    while (out.cases < cases) {
        auto g = random_graph(rng);
        auto arr = graphic_arrangement(g);
        ++out.cases;
        auto gs = hypersolvable_graph_series(g);
        auto as = composition_series(arr);
        if (gs.has_value() != as.has_value()) {
            out.fail("series existence differs for\n" + format_graph(g));
            continue;
        }
        if (gs && gs->exponents != as->exponents) out.fail("exponents differ for\n" + format_graph(g));
        if (g.size() >= 2) {
            auto coll = rank2_flats(arr);
            std::uniform_int_distribution<std::uint64_t> sub(1, (std::uint64_t{1} << g.size()) - 2);
            for (int rep = 0; rep < 4; ++rep) {
                IndexSet K = detail::from_mask(sub(rng));
                IndexSet all(g.size());
                std::iota(all.begin(), all.end(), 0);
                auto gv = solvable_graph_extension(g, K);
                auto av = solvable_extension(arr, all, K, coll);
                if (gv.solvable != av.solvable() || gv.kind != av.kind)
                    out.fail("extension verdict differs for\n" + format_graph(g));
            }
        }
    }
    return out;
}

/// (f) chordal <=> vertex series <=> supersolvable graphic arrangement.
inline PropertyOutcome property_supersolvable_graphs(std::uint64_t seed, std::size_t cases)
{
    std::mt19937_64 rng(seed);
    PropertyOutcome out;
    while (out.cases < cases) {
        auto g = random_graph(rng);
        ++out.cases;
        bool chordal = is_chordal(g);
        bool order = supersolvable_series(g).has_value();
        bool ss = is_supersolvable(graphic_arrangement(g)).supersolvable;
        if (chordal != order || chordal != ss) out.fail("supersolvability verdicts differ for\n" + format_graph(g));
    }
    return out;
}

/// (g) For hypersolvable arrangements Pbar dominates P, with equality
/// through degree 2.
inline PropertyOutcome property_pbar_dominates(std::uint64_t seed, std::size_t cases)
{
    std::mt19937_64 rng(seed);
    PropertyOutcome out;
    std::size_t attempts = 0;
    while (out.cases < cases && attempts < 50 * cases) {
        ++attempts;
        std::optional<Arrangement> arr;
        if (attempts % 2) {
            arr = draw_arrangement(rng);
        } else {
            arr = graphic_arrangement(random_graph(rng));
        }
        auto s = composition_series(*arr);
        if (!s) continue;
        ++out.cases;
        auto P = poincare_polynomial(*arr);
        auto Pbar = s->exponent_product();
        if (!dominates(Pbar, P)) out.fail("Pbar does not dominate P for\n" + format_arrangement(*arr));
        if (P.truncated(2) != Pbar.truncated(2)) out.fail("P and Pbar differ below degree 3 for\n" + format_arrangement(*arr));
    }
    return out;
}

/// (h) All composition series have the same length, which the search
/// reports; hypersolvability and supersolvability verdicts match the oracle.
inline PropertyOutcome property_series_length(std::uint64_t seed, std::size_t cases)
{
    std::mt19937_64 rng(seed);
    PropertyOutcome out;
    while (out.cases < cases) {
        Arrangement arr = out.cases % 3 == 2 ? graphic_arrangement(random_graph(rng, 6, 8)) : draw_arrangement(rng, 7);
        if (arr.size() > 8) continue;
        ++out.cases;
        auto lengths = oracle_series_lengths(arr);
        auto res = analyze_hypersolvability(arr);
        if (lengths.size() > 1) out.fail("several series lengths for\n" + format_arrangement(arr));
        if (res.hypersolvable() != !lengths.empty()) {
            out.fail("hypersolvability verdict disagrees with the oracle for\n" + format_arrangement(arr));
            continue;
        }
        if (res.series && res.series->length() != *lengths.begin()) out.fail("series length disagrees with oracle");
        bool ss = !oracle_series_lengths(arr, true).empty();
        if (ss != is_supersolvable(arr).supersolvable) out.fail("supersolvable verdict disagrees with oracle");
    }
    return out;
}

}  // namespace hyparr::testing
