#pragma once

#include "hyparr/arrangement.hpp"
#include "hyparr/chain_complex.hpp"
#include "hyparr/hypersolvable.hpp"
#include "hyparr/os_algebra.hpp"
#include "hyparr/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hyparr {

using Edge = std::pair<int, int>;  // 1-based vertex labels

/// Simple graph on vertices 1..m; the edge order defines e_1 < e_2 < ...
class Graph {
public:
    Graph() = default;

    /// Throws input_error on loops, out-of-range or repeated edges, an empty
    /// edge list, or isolated vertices.
    Graph(int vertices, std::vector<Edge> edges) : m_(vertices), edges_(std::move(edges))
    {
        if (m_ < 1) throw input_error("graph needs at least one vertex");
        if (edges_.empty()) throw input_error("graph has no edges");
        std::set<Edge> seen;
        std::vector<bool> touched(static_cast<std::size_t>(m_) + 1, false);
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            auto [i, j] = edges_[k];
            const std::string name = "edge " + std::to_string(k + 1);
            if (i < 1 || j < 1 || i > m_ || j > m_) throw input_error(name + " has a vertex out of range");
            if (i == j) throw input_error(name + " is a loop");
            if (!seen.insert({std::min(i, j), std::max(i, j)}).second) throw input_error(name + " repeats an edge");
            touched[static_cast<std::size_t>(i)] = touched[static_cast<std::size_t>(j)] = true;
        }
        for (int v = 1; v <= m_; ++v)
            if (!touched[static_cast<std::size_t>(v)]) throw input_error("vertex " + std::to_string(v) + " is isolated");
        adj_.assign(static_cast<std::size_t>(m_) + 1, std::vector<int>(static_cast<std::size_t>(m_) + 1, -1));
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            auto [i, j] = edges_[k];
            adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(k);
            adj_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = static_cast<int>(k);
        }
    }

    int vertices() const { return m_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t k) const { return edges_.at(k); }

    /// Index of the edge {i, j}, or -1.
    int edge_index(int i, int j) const { return adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    bool adjacent(int i, int j) const { return edge_index(i, j) >= 0; }

private:
    int m_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Reads `vertices m` followed by one `i j` line per edge; `#` starts a comment.
inline Graph read_graph(std::istream& in)
{
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw input_error("empty graph file");
    std::istringstream head(lines[0]);
    std::string word, extra;
    long m = 0;
    if (!(head >> word >> m) || word != "vertices" || (head >> extra))
        throw input_error("graph header must be 'vertices m'");
    if (m < 1 || m > 62) throw input_error("vertex count must be between 1 and 62");
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        std::istringstream row(lines[k]);
        long i = 0, j = 0;
        if (!(row >> i >> j) || (row >> extra)) throw input_error("malformed edge line '" + lines[k] + "'");
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    return Graph(static_cast<int>(m), std::move(edges));
}

inline Graph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    return read_graph(in);
}

inline std::string format_graph(const Graph& g)
{
    std::ostringstream os;
    os << "vertices " << g.vertices() << "\n";
    for (auto [i, j] : g.edges()) os << i << " " << j << "\n";
    return os.str();
}

/// Central arrangement in C^m with the form z_i - z_j for each edge, in order.
inline Arrangement graphic_arrangement(const Graph& g)
{
    std::vector<LinearForm> forms;
    for (auto [i, j] : g.edges()) {
        LinearForm f;
        f.coeffs.assign(static_cast<std::size_t>(g.vertices()), Rational(0));
        f.coeffs[static_cast<std::size_t>(i - 1)] = 1;
        f.coeffs[static_cast<std::size_t>(j - 1)] = -1;
        forms.push_back(std::move(f));
    }
    return Arrangement(g.vertices(), std::move(forms), true);
}

namespace detail {

/// Simple graph on vertices 0..n-1 as adjacency bitmasks.
struct BitGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    bool operator<(const BitGraph& o) const { return n != o.n ? n < o.n : adj < o.adj; }

    int edge_count() const
    {
        int c = 0;
        for (auto a : adj) c += std::popcount(a);
        return c / 2;
    }

    BitGraph without_vertex(int v) const
    {
        BitGraph out;
        out.n = n - 1;
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            std::uint64_t a = adj[static_cast<std::size_t>(u)];
            std::uint64_t low = a & ((std::uint64_t{1} << v) - 1);
            std::uint64_t high = (a >> (v + 1)) << v;
            out.adj.push_back(low | high);
        }
        return out;
    }
};

inline IntPolynomial falling_factorial(int n)
{
    IntPolynomial p{1};
    for (int k = 0; k < n; ++k) p = p * IntPolynomial{-k, 1};
    return p;
}

class ChromaticSolver {
public:
    IntPolynomial solve(const BitGraph& g)
    {
        if (g.n == 0) return IntPolynomial{1};
        auto it = memo_.find(g);
        if (it != memo_.end()) return it->second;
        IntPolynomial out = compute(g);
        memo_.emplace(g, out);
        return out;
    }

private:
    IntPolynomial compute(const BitGraph& g)
    {
        const int edges = g.edge_count();
        if (edges == 0) return IntPolynomial::monomial(1, static_cast<std::size_t>(g.n));
        if (2 * edges == g.n * (g.n - 1)) return falling_factorial(g.n);
        // a simplicial vertex of degree d contributes a factor (T - d)
        for (int v = 0; v < g.n; ++v) {
            std::uint64_t nb = g.adj[static_cast<std::size_t>(v)];
            bool clique = true;
            for (std::uint64_t m = nb; clique && m; m &= m - 1) {
                int u = std::countr_zero(m);
                clique = (nb & ~(std::uint64_t{1} << u) & ~g.adj[static_cast<std::size_t>(u)]) == 0;
            }
            if (clique) return IntPolynomial{-std::popcount(nb), 1} * solve(g.without_vertex(v));
        }
        // deletion-contraction on an edge at the highest-degree vertex
        int v = 0;
        for (int u = 1; u < g.n; ++u)
            if (std::popcount(g.adj[static_cast<std::size_t>(u)]) > std::popcount(g.adj[static_cast<std::size_t>(v)])) v = u;
        int w = std::countr_zero(g.adj[static_cast<std::size_t>(v)]);
        BitGraph del = g;
        del.adj[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << w);
        del.adj[static_cast<std::size_t>(w)] &= ~(std::uint64_t{1} << v);
        BitGraph con = del;
        // merge w into v
        for (std::uint64_t m = con.adj[static_cast<std::size_t>(w)]; m; m &= m - 1) {
            int u = std::countr_zero(m);
            con.adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
            con.adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        }
        return solve(del) - solve(con.without_vertex(w));
    }

    std::map<BitGraph, IntPolynomial> memo_;
};

inline BitGraph to_bitgraph(const Graph& g)
{
    BitGraph b;
    b.n = g.vertices();
    b.adj.assign(static_cast<std::size_t>(b.n), 0);
    for (auto [i, j] : g.edges()) {
        b.adj[static_cast<std::size_t>(i - 1)] |= std::uint64_t{1} << (j - 1);
        b.adj[static_cast<std::size_t>(j - 1)] |= std::uint64_t{1} << (i - 1);
    }
    return b;
}

}  // namespace detail

/// Deletion-contraction with simplicial-vertex and complete-graph shortcuts,
/// memoized on labeled subgraphs.
inline IntPolynomial chromatic_polynomial(const Graph& g)
{
    detail::ChromaticSolver solver;
    return solver.solve(detail::to_bitgraph(g));
}

/// (-T)^m chi(-1/T). Its degree is m minus the number of components, the
/// rank of the graphic arrangement, so no further normalization is needed.
inline IntPolynomial poincare_from_chromatic(const Graph& g)
{
    auto chi = chromatic_polynomial(g);
    const std::size_t m = static_cast<std::size_t>(g.vertices());
    std::vector<BigInt> c(m + 1, 0);
    for (std::size_t k = 0; k <= m; ++k) {
        std::size_t j = m - k;
        c[j] = j % 2 == 0 ? chi.coeff(k) : BigInt(-chi.coeff(k));
    }
    return IntPolynomial(std::move(c));
}

/// Perfect elimination order (1-based vertices), smallest simplicial vertex
/// first, or nothing when the graph is not chordal.
inline std::optional<std::vector<int>> perfect_elimination_order(const Graph& g)
{
    const int m = g.vertices();
    std::vector<bool> gone(static_cast<std::size_t>(m) + 1, false);
    std::vector<int> order;
    for (int step = 0; step < m; ++step) {
        int pick = 0;
        for (int v = 1; v <= m && !pick; ++v) {
            if (gone[static_cast<std::size_t>(v)]) continue;
            std::vector<int> nb;
            for (int u = 1; u <= m; ++u)
                if (!gone[static_cast<std::size_t>(u)] && g.adjacent(u, v)) nb.push_back(u);
            bool clique = true;
            for (std::size_t a = 0; clique && a < nb.size(); ++a)
                for (std::size_t b = a + 1; clique && b < nb.size(); ++b) clique = g.adjacent(nb[a], nb[b]);
            if (clique) pick = v;
        }
        if (!pick) return std::nullopt;
        gone[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick);
    }
    return order;
}

inline bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

/// Vertex order v_1, ..., v_m such that the neighbours of v_i among
/// v_1..v_{i-1} form a clique: the reversed perfect elimination order.
inline std::optional<std::vector<int>> supersolvable_series(const Graph& g)
{
    auto peo = perfect_elimination_order(g);
    if (!peo) return std::nullopt;
    std::reverse(peo->begin(), peo->end());
    return peo;
}

struct GraphExtensionVerdict {
    bool solvable = false;
    ExtensionKind kind = ExtensionKind::not_solvable;
    int condition = 0;  // violated condition (1 or 2); 0 when solvable
    std::string detail;
};

namespace detail {

using EdgeMask = std::uint64_t;

/// rank of the graphic arrangement on an edge set: touched vertices minus
/// connected components
inline std::size_t graphic_rank(const Graph& g, EdgeMask edges)
{
    std::vector<int> parent(static_cast<std::size_t>(g.vertices()) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
    };
    std::size_t rank = 0;
    for (EdgeMask m = edges; m; m &= m - 1) {
        auto [i, j] = g.edge(static_cast<std::size_t>(std::countr_zero(m)));
        int a = find(i), b = find(j);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            ++rank;
        }
    }
    return rank;
}

inline std::vector<bool> vertices_of(const Graph& g, EdgeMask edges)
{
    std::vector<bool> v(static_cast<std::size_t>(g.vertices()) + 1, false);
    for (EdgeMask m = edges; m; m &= m - 1) {
        auto [i, j] = g.edge(static_cast<std::size_t>(std::countr_zero(m)));
        v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(j)] = true;
    }
    return v;
}

inline bool in_mask(EdgeMask m, int e) { return e >= 0 && (m >> e & 1); }

/// Condition (1) for a single new edge: no triangle through it whose other
/// two edges lie in K.
inline bool condition_one(const Graph& g, EdgeMask K, int e)
{
    auto [a, b] = g.edge(static_cast<std::size_t>(e));
    for (int c = 1; c <= g.vertices(); ++c)
        if (c != a && c != b && in_mask(K, g.edge_index(a, c)) && in_mask(K, g.edge_index(b, c))) return false;
    return true;
}

/// Condition (2) for the new edge set N over K.
inline bool condition_two(const Graph& g, EdgeMask K, EdgeMask N)
{
    auto vk = vertices_of(g, K);
    IndexSet added = from_mask(N);
    // a single edge meets V_K in one endpoint (k = 1) or in none
    if (added.size() == 1) return true;
    // all new edges share exactly one common vertex v
    auto [a0, b0] = g.edge(static_cast<std::size_t>(added[0]));
    for (int v : {a0, b0}) {
        std::vector<int> others;
        bool star = true;
        for (int e : added) {
            auto [x, y] = g.edge(static_cast<std::size_t>(e));
            if (x == v)
                others.push_back(y);
            else if (y == v)
                others.push_back(x);
            else
                star = false;
        }
        if (!star) continue;
        bool ok = true;
        for (int u : others) ok = ok && vk[static_cast<std::size_t>(u)];
        for (std::size_t s = 0; ok && s < others.size(); ++s)
            for (std::size_t t = s + 1; ok && t < others.size(); ++t) ok = in_mask(K, g.edge_index(others[s], others[t]));
        if (ok) return true;
    }
    return false;
}

inline GraphExtensionVerdict check_graph_extension(const Graph& g, EdgeMask G, EdgeMask K)
{
    GraphExtensionVerdict v;
    const EdgeMask N = G & ~K;
    for (EdgeMask m = N; m; m &= m - 1) {
        int e = std::countr_zero(m);
        if (!condition_one(g, K, e)) {
            v.condition = 1;
            v.detail = "edge e" + std::to_string(e + 1) + " closes a 3-cycle with two edges of K";
            return v;
        }
    }
    if (!condition_two(g, K, N)) {
        v.condition = 2;
        v.detail = "new edges do not form a star over a complete subgraph of K";
        return v;
    }
    const std::size_t rg = graphic_rank(g, G), rk = graphic_rank(g, K);
    v.solvable = true;
    v.kind = rg == rk + 1 ? ExtensionKind::fibered : ExtensionKind::singular;
    return v;
}

inline void require_edge_capacity(const Graph& g)
{
    if (g.size() > 63) throw input_error("graphs with more than 63 edges are not supported");
}

}  // namespace detail

/// Checks Definition-style conditions (1) and (2) for the subgraph K given
/// by edge indices (0-based) inside G.
inline GraphExtensionVerdict solvable_graph_extension(const Graph& g, const IndexSet& K)
{
    detail::require_edge_capacity(g);
    const detail::EdgeMask full = g.size() == 64 ? ~detail::EdgeMask{0} : (detail::EdgeMask{1} << g.size()) - 1;
    for (int e : K)
        if (e < 0 || static_cast<std::size_t>(e) >= g.size()) throw input_error("edge index out of range");
    const detail::EdgeMask km = detail::to_mask(K);
    if (km == 0 || km == full) throw input_error("solvable_graph_extension needs a nonempty proper edge subset");
    return detail::check_graph_extension(g, full, km);
}

/// Same extension test on an intermediate pair of edge sets K inside G'.
inline GraphExtensionVerdict solvable_graph_extension(const Graph& g, const IndexSet& Gsub, const IndexSet& K)
{
    detail::require_edge_capacity(g);
    const detail::EdgeMask gm = detail::to_mask(Gsub), km = detail::to_mask(K);
    if (km == 0 || (km & ~gm) != 0 || km == gm)
        throw input_error("solvable_graph_extension needs a nonempty proper edge subset");
    return detail::check_graph_extension(g, gm, km);
}

namespace detail {

/// Composition-series search in graph terms. Candidate extensions are single
/// edges and stars over cliques of K, tried smallest first and
/// lexicographically within a size, as in the arrangement search.
class GraphSeriesSearch {
public:
    GraphSeriesSearch(const Graph& g, SearchOptions opt) : g_(g), opt_(opt)
    {
        full_ = (EdgeMask{1} << g.size()) - 1;
    }

    std::optional<CompositionSeries> run()
    {
        for (std::size_t e = 0; e < g_.size(); ++e) {
            chain_ = {EdgeMask{1} << e};
            if (extend(chain_.back())) return build();
        }
        return std::nullopt;
    }

private:
    bool extend(EdgeMask K)
    {
        if (K == full_) return true;
        if (dead_.count(K)) return false;
        if (++nodes_ > opt_.node_budget)
            throw budget_exceeded("graph composition series search exceeded the node budget of " +
                                  std::to_string(opt_.node_budget));
        const EdgeMask rest = full_ & ~K;
        for (EdgeMask m = rest; m; m &= m - 1)
            if (!condition_one(g_, K, std::countr_zero(m))) {
                dead_.insert(K);
                return false;
            }
        for (EdgeMask N : candidates(K, rest)) {
            chain_.push_back(K | N);
            if (extend(K | N)) return true;
            chain_.pop_back();
        }
        dead_.insert(K);
        return false;
    }

    std::vector<EdgeMask> candidates(EdgeMask K, EdgeMask rest) const
    {
        std::set<IndexSet> found;
        for (EdgeMask m = rest; m; m &= m - 1) found.insert({std::countr_zero(m)});
        auto vk = vertices_of(g_, K);
        for (int v = 1; v <= g_.vertices(); ++v) {
            // new edges at v whose other endpoint lies in V_K
            std::vector<std::pair<int, int>> spokes;  // (edge, other endpoint)
            for (int u = 1; u <= g_.vertices(); ++u) {
                int e = g_.edge_index(v, u);
                if (e >= 0 && in_mask(rest, e) && vk[static_cast<std::size_t>(u)]) spokes.emplace_back(e, u);
            }
            std::vector<std::pair<int, int>> cur;
            std::function<void(std::size_t)> grow = [&](std::size_t from) {
                if (cur.size() >= 2) {
                    IndexSet s;
                    for (auto [e, u] : cur) s.push_back(e);
                    std::sort(s.begin(), s.end());
                    found.insert(s);
                }
                for (std::size_t i = from; i < spokes.size(); ++i) {
                    bool ok = true;
                    for (auto [e, u] : cur) ok = ok && in_mask(K, g_.edge_index(u, spokes[i].second));
                    if (!ok) continue;
                    cur.push_back(spokes[i]);
                    grow(i + 1);
                    cur.pop_back();
                }
            };
            grow(0);
        }
        std::vector<IndexSet> sorted(found.begin(), found.end());
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
        std::vector<EdgeMask> out;
        for (const auto& s : sorted) out.push_back(to_mask(s));
        return out;
    }

    CompositionSeries build() const
    {
        CompositionSeries s;
        EdgeMask prev = 0;
        for (std::size_t i = 0; i < chain_.size(); ++i) {
            s.steps.push_back(from_mask(chain_[i]));
            s.exponents.push_back(std::popcount(chain_[i] & ~prev));
            s.fibered.push_back(i == 0 || graphic_rank(g_, chain_[i]) == graphic_rank(g_, prev) + 1);
            prev = chain_[i];
        }
        return s;
    }

    const Graph& g_;
    SearchOptions opt_;
    EdgeMask full_ = 0;
    std::size_t nodes_ = 0;
    std::vector<EdgeMask> chain_;
    std::unordered_set<EdgeMask> dead_;
};

}  // namespace detail

inline std::optional<CompositionSeries> hypersolvable_graph_series(const Graph& g, SearchOptions opt = {})
{
    detail::require_edge_capacity(g);
    if (g.size() > opt.max_arrangement_size)
        throw budget_exceeded("graph series search refused: " + std::to_string(g.size()) +
                              " edges exceeds the cap of " + std::to_string(opt.max_arrangement_size));
    return detail::GraphSeriesSearch(g, opt).run();
}

inline bool has_triangle(const Graph& g)
{
    for (auto [a, b] : g.edges())
        for (int c = 1; c <= g.vertices(); ++c)
            if (g.adjacent(a, c) && g.adjacent(b, c)) return true;
    return false;
}

/// Simple 4-cycles as sorted edge-index sets, in lexicographic order. Each
/// cycle a-b-c-d is found from its diagonal pairs via common neighbours.
inline std::vector<IndexSet> four_cycles(const Graph& g)
{
    std::set<IndexSet> out;
    const int m = g.vertices();
    for (int a = 1; a <= m; ++a)
        for (int c = a + 1; c <= m; ++c) {
            std::vector<int> common;
            for (int b = 1; b <= m; ++b)
                if (b != a && b != c && g.adjacent(a, b) && g.adjacent(b, c)) common.push_back(b);
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    int b = common[i], d = common[j];
                    IndexSet cyc{g.edge_index(a, b), g.edge_index(b, c), g.edge_index(c, d), g.edge_index(d, a)};
                    std::sort(cyc.begin(), cyc.end());
                    out.insert(cyc);
                }
        }
    return {out.begin(), out.end()};
}

struct TriangleFreeReport {
    std::size_t n_edges = 0;
    CompositionSeries series;              // G_i = {e_1, ..., e_i}
    std::size_t pi1_rank = 0;              // pi_1 = Z^n
    IntPolynomial poincare;
    std::vector<IndexSet> cycles;          // 4-cycles
    bool pi2_zero = true;
    std::size_t coinvariant_rank = 0;      // |4-cycles|
    std::size_t kernel_rank3 = 0;          // rank of the degree-3 kernel of the quadratic OS map
    std::string model = "torus-skeleton (heuristic beyond coinvariants)";
    PresentationMatrix presentation;       // rows: 4-cells of the n-torus; columns: broken 4-circuits
};

/// Triangle-free graph: exponents all 1, pi_1 free abelian of rank n, and the
/// coinvariants of pi_2 free abelian on the 4-cycles.
inline TriangleFreeReport triangle_free_report(const Graph& g, SearchOptions opt = {})
{
    if (has_triangle(g)) throw input_error("graph has a 3-cycle");
    detail::require_edge_capacity(g);
    TriangleFreeReport r;
    const std::size_t n = g.size();
    r.n_edges = n;
    r.pi1_rank = n;
    opt.max_arrangement_size = std::max(opt.max_arrangement_size, n);
    auto series = hypersolvable_graph_series(g, opt);
    if (!series) throw std::logic_error("triangle-free graph without a composition series");
    r.series = *series;
    r.poincare = poincare_from_chromatic(g);
    r.cycles = four_cycles(g);
    r.pi2_zero = r.cycles.empty();
    r.coinvariant_rank = r.cycles.size();
    r.kernel_rank3 = kernel_rank(graphic_arrangement(g), 3);

    // columns: 3-cells sigma_I with I a 4-cycle minus its highest edge
    auto torus = torus_complex(n);
    std::vector<std::size_t> cols;
    for (const auto& c : r.cycles) {
        IndexSet broken(c.begin(), c.end() - 1);
        const auto& labels = torus.basis_labels[3];
        std::string want = detail::cell_label(torus.generators, broken);
        cols.push_back(static_cast<std::size_t>(std::find(labels.begin(), labels.end(), want) - labels.begin()));
    }
    std::vector<std::size_t> rows;
    if (n >= 4) {
        const auto& d4 = torus.boundary(4);
        for (std::size_t i = 0; i < d4.rows(); ++i)
            for (auto j : cols)
                if (!d4.at(i, j).is_zero()) {
                    rows.push_back(i);
                    break;
                }
    }
    LaurentMatrix m(rows.size(), cols.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = torus.boundary(4).at(rows[i], cols[j]);
    r.presentation = {std::move(m), torus.generators};
    if (coinvariant_rank(r.presentation) != r.coinvariant_rank)
        throw std::logic_error("presentation coinvariants disagree with the 4-cycle count");
    return r;
}

/// Different coinvariant ranks of pi_2 with equal Betti numbers b_1, b_2
/// certify distinct homotopy 2-types.
inline bool distinct_two_types(const TriangleFreeReport& a, const TriangleFreeReport& b)
{
    return a.poincare.truncated(2) == b.poincare.truncated(2) && a.coinvariant_rank != b.coinvariant_rank;
}

}  // namespace hyparr
