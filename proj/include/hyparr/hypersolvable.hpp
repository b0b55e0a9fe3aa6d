#pragma once

#include "hyparr/arrangement.hpp"
#include "hyparr/os_algebra.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace hyparr {

/// Result of looking up f(a, b): the point of B on the line through a and b.
struct CollinearPoint {
    enum class Kind { none, unique, ambiguous };
    Kind kind = Kind::none;
    int index = -1;
    IndexSet candidates;
};

inline CollinearPoint collinear_point(int a, int b, const IndexSet& B, const CollinearityData& coll)
{
    CollinearPoint out;
    const IndexSet* line = coll.line_through(a, b);
    if (!line) return out;
    for (int x : *line)
        if (x != a && x != b && std::binary_search(B.begin(), B.end(), x)) out.candidates.push_back(x);
    if (out.candidates.size() == 1) {
        out.kind = CollinearPoint::Kind::unique;
        out.index = out.candidates.front();
    } else if (out.candidates.size() > 1) {
        out.kind = CollinearPoint::Kind::ambiguous;
    }
    return out;
}

enum class ExtensionKind { not_solvable, fibered, singular };

inline const char* to_string(ExtensionKind k)
{
    switch (k) {
    case ExtensionKind::fibered: return "fibered";
    case ExtensionKind::singular: return "singular";
    default: return "not_solvable";
    }
}

struct AxiomViolation {
    int axiom = 0;  // 1, 2, 3; 0 for an impossible rank jump
    IndexSet points;
    std::string detail;
};

struct ExtensionVerdict {
    ExtensionKind kind = ExtensionKind::not_solvable;
    std::optional<AxiomViolation> witness;

    bool solvable() const { return kind != ExtensionKind::not_solvable; }
};

namespace detail {

/// Pairwise line lookup and per-line masks for fast axiom checks.
class CollinearityIndex {
public:
    CollinearityIndex(const Arrangement& arr, const CollinearityData& coll)
        : arr_(&arr), n_(static_cast<int>(arr.size())), line_of_(static_cast<std::size_t>(n_ * n_), -1)
    {
        for (std::size_t l = 0; l < coll.lines.size(); ++l) {
            masks_.push_back(to_mask(coll.lines[l]));
            for (int a : coll.lines[l])
                for (int b : coll.lines[l])
                    if (a != b) line_of_[static_cast<std::size_t>(a * n_ + b)] = static_cast<int>(l);
        }
        lines_through_.resize(static_cast<std::size_t>(n_));
        for (std::size_t l = 0; l < masks_.size(); ++l)
            for (Mask m = masks_[l]; m; m &= m - 1) lines_through_[static_cast<std::size_t>(std::countr_zero(m))].push_back(static_cast<int>(l));
    }

    int size() const { return n_; }
    int line_of(int a, int b) const { return line_of_[static_cast<std::size_t>(a * n_ + b)]; }
    Mask line_mask(int l) const { return masks_[static_cast<std::size_t>(l)]; }

    /// Axiom (I) for a single point: no line through a carries two points of B.
    bool clear_of(int a, Mask B) const
    {
        for (int l : lines_through_[static_cast<std::size_t>(a)])
            if (std::popcount(masks_[static_cast<std::size_t>(l)] & B) >= 2) return false;
        return true;
    }

    /// f(a,b) given axiom (I); -1 if absent.
    int f(int a, int b, Mask B) const
    {
        int l = line_of(a, b);
        if (l < 0) return -1;
        Mask hit = masks_[static_cast<std::size_t>(l)] & B;
        return hit ? std::countr_zero(hit) : -1;
    }

    bool collinear(int a, int b, int c) const
    {
        int l = line_of(a, b);
        return l >= 0 && (masks_[static_cast<std::size_t>(l)] >> c & 1);
    }

    /// Axiom (III) for a triple of points of B-bar.
    bool triple_ok(int a, int b, int c, Mask B) const
    {
        int fab = f(a, b, B), fac = f(a, c, B), fbc = f(b, c, B);
        if (fab == fac && fac == fbc) return true;
        if (fab == fac || fab == fbc || fac == fbc) return true;
        return collinear(fab, fac, fbc);
    }

    std::size_t rank(Mask m) const
    {
        auto it = rank_cache_.find(m);
        if (it != rank_cache_.end()) return it->second;
        std::size_t r = subset_rank(*arr_, from_mask(m));
        rank_cache_.emplace(m, r);
        return r;
    }

    ExtensionVerdict check(Mask A, Mask B) const
    {
        ExtensionVerdict v;
        const Mask bar = A & ~B;
        IndexSet pts = from_mask(bar);
        for (int a : pts)
            if (!clear_of(a, B)) {
                v.witness = AxiomViolation{1, {a}, "point lies on a line through two points of the sub-arrangement"};
                return v;
            }
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (f(pts[i], pts[j], B) < 0) {
                    v.witness = AxiomViolation{2, {pts[i], pts[j]}, "no point of the sub-arrangement on the line through the pair"};
                    return v;
                }
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                for (std::size_t k = j + 1; k < pts.size(); ++k)
                    if (!triple_ok(pts[i], pts[j], pts[k], B)) {
                        v.witness = AxiomViolation{3, {pts[i], pts[j], pts[k]}, "f-values are distinct and not collinear"};
                        return v;
                    }
        std::size_t ra = rank(A), rb = rank(B);
        if (ra == rb + 1) {
            v.kind = ExtensionKind::fibered;
        } else if (ra == rb) {
            v.kind = ExtensionKind::singular;
        } else {
            v.witness = AxiomViolation{0, pts, "rank grows by more than one"};
        }
        return v;
    }

private:
    const Arrangement* arr_;
    int n_;
    std::vector<int> line_of_;
    std::vector<Mask> masks_;
    std::vector<std::vector<int>> lines_through_;
    mutable std::unordered_map<Mask, std::size_t> rank_cache_;
};

}  // namespace detail

/// Checks axioms (I)-(III) for the pair (A, B) of index sets, B a proper
/// nonempty subset of A, and classifies the extension by rank.
inline ExtensionVerdict solvable_extension(const Arrangement& arr, const IndexSet& A, const IndexSet& B,
                                           const CollinearityData& coll)
{
    detail::require_central(arr, "solvable_extension");
    detail::require_mask_capacity(arr);
    const detail::Mask am = detail::to_mask(A), bm = detail::to_mask(B);
    if (bm == 0 || (bm & ~am) != 0 || bm == am)
        throw input_error("solvable_extension needs a nonempty proper subset B of A");
    detail::CollinearityIndex idx(arr, coll);
    return idx.check(am, bm);
}

struct CompositionSeries {
    std::vector<IndexSet> steps;   // A_1 subset ... subset A_l
    std::vector<int> exponents;    // d_i = |A_i \ A_{i-1}|, d_1 = |A_1|
    std::vector<bool> fibered;     // per step; the first step counts as fibered

    std::size_t length() const { return steps.size(); }

    bool all_fibered() const
    {
        return std::all_of(fibered.begin(), fibered.end(), [](bool b) { return b; });
    }

    IntPolynomial exponent_product() const { return IntPolynomial::exponent_product(exponents); }
};

struct SearchOptions {
    std::size_t max_arrangement_size = 18;
    std::size_t node_budget = 2'000'000;
};

/// Outcome of the composition-series search. When no series exists,
/// `frontier` lists the largest sub-arrangements reached by any chain.
struct HypersolvabilityResult {
    std::optional<CompositionSeries> series;
    std::vector<IndexSet> frontier;
    std::size_t nodes = 0;

    bool hypersolvable() const { return series.has_value(); }
};

namespace detail {

class SeriesSearch {
public:
    SeriesSearch(const Arrangement& arr, SearchOptions opt, bool fibered_only)
        : arr_(arr), idx_(arr, rank2_flats(arr)), opt_(opt), fibered_only_(fibered_only)
    {
        full_ = arr.size() == 64 ? ~Mask{0} : (Mask{1} << arr.size()) - 1;
    }

    HypersolvabilityResult run()
    {
        HypersolvabilityResult res;
        if (arr_.size() == 0) throw input_error("composition series of an empty arrangement");
        for (int h = 0; h < idx_.size(); ++h) {
            chain_ = {Mask{1} << h};
            kinds_ = {ExtensionKind::fibered};
            if (extend(Mask{1} << h)) {
                res.series = build();
                break;
            }
        }
        res.nodes = nodes_;
        if (!res.series) {
            int best = 0;
            for (Mask m : dead_) best = std::max(best, std::popcount(m));
            std::set<IndexSet> frontier;
            for (Mask m : dead_)
                if (std::popcount(m) == best) frontier.insert(from_mask(m));
            res.frontier.assign(frontier.begin(), frontier.end());
        }
        return res;
    }

private:
    bool extend(Mask B)
    {
        if (B == full_) return true;
        if (dead_.count(B)) return false;
        if (++nodes_ > opt_.node_budget)
            throw budget_exceeded("composition series search exceeded the node budget of " +
                                  std::to_string(opt_.node_budget));
        const Mask rest = full_ & ~B;
        IndexSet eligible;
        for (Mask m = rest; m; m &= m - 1) {
            int a = std::countr_zero(m);
            // a point failing axiom (I) now fails it for every larger B
            if (!idx_.clear_of(a, B)) {
                dead_.insert(B);
                return false;
            }
            eligible.push_back(a);
        }
        const std::size_t rb = idx_.rank(B);
        for (std::size_t size = 1; size <= eligible.size(); ++size) {
            IndexSet clique;
            bool found = cliques(B, eligible, size, 0, clique, [&](Mask bar) {
                Mask A = B | bar;
                std::size_t ra = idx_.rank(A);
                ExtensionKind kind;
                if (ra == rb + 1)
                    kind = ExtensionKind::fibered;
                else if (ra == rb)
                    kind = ExtensionKind::singular;
                else
                    return false;
                if (fibered_only_ && kind != ExtensionKind::fibered) return false;
                chain_.push_back(A);
                kinds_.push_back(kind);
                if (extend(A)) return true;
                chain_.pop_back();
                kinds_.pop_back();
                return false;
            });
            if (found) return true;
        }
        dead_.insert(B);
        return false;
    }

    /// Enumerates, in lexicographic order, subsets of `pool` of the given
    /// size satisfying axioms (II) and (III) over B; stops when fn succeeds.
    bool cliques(Mask B, const IndexSet& pool, std::size_t size, std::size_t from, IndexSet& cur,
                 const std::function<bool(Mask)>& fn)
    {
        if (cur.size() == size) return fn(to_mask(cur));
        for (std::size_t i = from; i + (size - cur.size()) <= pool.size(); ++i) {
            int c = pool[i];
            bool ok = true;
            for (std::size_t x = 0; ok && x < cur.size(); ++x) ok = idx_.f(cur[x], c, B) >= 0;
            for (std::size_t x = 0; ok && x < cur.size(); ++x)
                for (std::size_t y = x + 1; ok && y < cur.size(); ++y) ok = idx_.triple_ok(cur[x], cur[y], c, B);
            if (!ok) continue;
            cur.push_back(c);
            if (cliques(B, pool, size, i + 1, cur, fn)) return true;
            cur.pop_back();
        }
        return false;
    }

    CompositionSeries build() const
    {
        CompositionSeries s;
        Mask prev = 0;
        for (std::size_t i = 0; i < chain_.size(); ++i) {
            s.steps.push_back(from_mask(chain_[i]));
            s.exponents.push_back(std::popcount(chain_[i] & ~prev));
            s.fibered.push_back(kinds_[i] == ExtensionKind::fibered);
            prev = chain_[i];
        }
        return s;
    }

    const Arrangement& arr_;
    CollinearityIndex idx_;
    SearchOptions opt_;
    bool fibered_only_;
    Mask full_ = 0;
    std::size_t nodes_ = 0;
    std::vector<Mask> chain_;
    std::vector<ExtensionKind> kinds_;
    std::unordered_set<Mask> dead_;
};

inline void check_search_input(const Arrangement& arr, const SearchOptions& opt)
{
    require_central(arr, "composition_series");
    require_mask_capacity(arr);
    if (arr.size() > opt.max_arrangement_size)
        throw budget_exceeded("hypersolvability search refused: " + std::to_string(arr.size()) +
                              " hyperplanes exceeds the cap of " + std::to_string(opt.max_arrangement_size));
}

}  // namespace detail

/// Backtracking search for a hypersolvable composition series. Candidate
/// extensions are tried smallest first, lexicographically within a size.
inline HypersolvabilityResult analyze_hypersolvability(const Arrangement& arr, SearchOptions opt = {})
{
    detail::check_search_input(arr, opt);
    return detail::SeriesSearch(arr, opt, false).run();
}

inline std::optional<CompositionSeries> composition_series(const Arrangement& arr, SearchOptions opt = {})
{
    return analyze_hypersolvability(arr, opt).series;
}

struct SupersolvableVerdict {
    bool supersolvable = false;
    std::optional<CompositionSeries> series;  // all steps fibered
};

/// Searches for a composition series whose extensions are all fibered.
inline SupersolvableVerdict is_supersolvable(const Arrangement& arr, SearchOptions opt = {})
{
    detail::check_search_input(arr, opt);
    auto res = detail::SeriesSearch(arr, opt, true).run();
    return {res.series.has_value(), std::move(res.series)};
}

}  // namespace hyparr
