#pragma once

#include "hyparr/linalg.hpp"
#include "hyparr/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hyparr {

/// Sorted list of hyperplane indices (0-based).
using IndexSet = std::vector<int>;

/// Affine or linear form c.z + constant. Central forms have constant 0.
struct LinearForm {
    std::vector<Rational> coeffs;
    Rational constant = 0;

    bool coefficients_zero() const
    {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return is_zero(c); });
    }

    /// Scales so the first nonzero coefficient is 1.
    LinearForm canonical() const
    {
        LinearForm out = *this;
        auto it = std::find_if(coeffs.begin(), coeffs.end(), [](const Rational& c) { return !is_zero(c); });
        if (it == coeffs.end()) return out;
        Rational inv = field_inverse(*it);
        for (auto& c : out.coeffs) c *= inv;
        out.constant *= inv;
        return out;
    }

    friend bool operator==(const LinearForm& a, const LinearForm& b)
    {
        return a.coeffs == b.coeffs && a.constant == b.constant;
    }
    friend bool operator<(const LinearForm& a, const LinearForm& b)
    {
        if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
        return a.constant < b.constant;
    }

    std::string str() const
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? " " : "") << coeffs[i];
        if (!is_zero(constant)) os << " | " << constant;
        return os.str();
    }
};

/// Finite set of distinct hyperplanes with exact rational equations.
class Arrangement {
public:
    Arrangement() = default;

    /// Validates and canonicalizes. Throws input_error on zero forms,
    /// proportional (repeated) hyperplanes, or constants in a central family.
    Arrangement(int ambient_dim, std::vector<LinearForm> forms, bool central)
        : dim_(ambient_dim), central_(central)
    {
        if (ambient_dim < 1) throw input_error("ambient dimension must be positive");
        std::set<LinearForm> seen;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            auto& f = forms[i];
            if (f.coeffs.size() != static_cast<std::size_t>(ambient_dim))
                throw input_error("form " + std::to_string(i + 1) + " has wrong length");
            if (f.coefficients_zero())
                throw input_error("form " + std::to_string(i + 1) + " has no linear part");
            if (central && !is_zero(f.constant))
                throw input_error("central arrangement with nonzero constant in form " + std::to_string(i + 1));
            LinearForm c = f.canonical();
            if (!seen.insert(c).second)
                throw input_error("form " + std::to_string(i + 1) + " repeats an earlier hyperplane");
            forms_.push_back(std::move(c));
        }
    }

    int ambient_dim() const { return dim_; }
    bool central() const { return central_; }
    std::size_t size() const { return forms_.size(); }
    const std::vector<LinearForm>& forms() const { return forms_; }
    const LinearForm& form(std::size_t i) const { return forms_.at(i); }

    /// Central arrangement formed by a subset of the hyperplanes, in the
    /// order given.
    Arrangement restrict_to(const IndexSet& idx) const
    {
        std::vector<LinearForm> sub;
        for (int i : idx) sub.push_back(forms_.at(static_cast<std::size_t>(i)));
        return Arrangement(dim_, std::move(sub), central_);
    }

    friend bool operator==(const Arrangement& a, const Arrangement& b)
    {
        return a.dim_ == b.dim_ && a.central_ == b.central_ && a.forms_ == b.forms_;
    }

private:
    int dim_ = 0;
    bool central_ = true;
    std::vector<LinearForm> forms_;
};

inline Arrangement cone(const Arrangement& arr);

namespace detail {

inline std::vector<Rational> homogenized(const LinearForm& f)
{
    std::vector<Rational> v = f.coeffs;
    v.push_back(f.constant);
    return v;
}

inline void require_central(const Arrangement& arr, const char* what)
{
    if (!arr.central()) throw input_error(std::string(what) + " requires a central arrangement; cone it first");
}

}  // namespace detail

/// Rank of the forms indexed by `idx` (central arrangements).
inline std::size_t subset_rank(const Arrangement& arr, const IndexSet& idx)
{
    RowEchelon<Rational> ech(static_cast<std::size_t>(arr.ambient_dim()));
    for (int i : idx) ech.insert(arr.form(static_cast<std::size_t>(i)).coeffs);
    return ech.rank();
}

/// Dimension of the span of the forms. For affine input the rank of the
/// cone minus one is reported.
inline std::size_t rank(const Arrangement& arr)
{
    if (!arr.central()) return rank(cone(arr)) - 1;
    IndexSet all(arr.size());
    std::iota(all.begin(), all.end(), 0);
    return subset_rank(arr, all);
}

/// Codimension of the span of the forms in the dual space: how far the
/// arrangement is from being essential.
inline std::size_t rank_deficit(const Arrangement& arr)
{
    detail::require_central(arr, "rank_deficit");
    return static_cast<std::size_t>(arr.ambient_dim()) - rank(arr);
}

/// Homogenizes with a new last coordinate z0 and appends the hyperplane z0.
inline Arrangement cone(const Arrangement& arr)
{
    if (arr.central()) throw input_error("cone: arrangement is already central");
    const int m = arr.ambient_dim();
    std::vector<LinearForm> forms;
    for (const auto& f : arr.forms()) forms.push_back({detail::homogenized(f), 0});
    LinearForm z0{std::vector<Rational>(static_cast<std::size_t>(m + 1), 0), 0};
    z0.coeffs.back() = 1;
    forms.push_back(std::move(z0));
    return Arrangement(m + 1, std::move(forms), true);
}

/// Sets form h equal to 1 by solving for the last coordinate it involves,
/// and restricts the remaining hyperplanes to that affine chart.
inline Arrangement decone(const Arrangement& arr, std::size_t h)
{
    if (!arr.central()) throw input_error("decone: arrangement is not central");
    if (h >= arr.size()) throw input_error("decone: hyperplane index out of range");
    if (arr.ambient_dim() < 2) throw input_error("decone: ambient dimension must be at least 2");
    const auto& hf = arr.form(h).coeffs;
    std::size_t pivot = hf.size();
    while (pivot-- > 0)
        if (!is_zero(hf[pivot])) break;
    const Rational hp = hf[pivot];
    std::vector<LinearForm> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i == h) continue;
        const auto& f = arr.form(i).coeffs;
        LinearForm g;
        Rational ratio = f[pivot] / hp;
        for (std::size_t j = 0; j < f.size(); ++j)
            if (j != pivot) g.coeffs.push_back(f[j] - ratio * hf[j]);
        g.constant = ratio;
        out.push_back(std::move(g));
    }
    return Arrangement(arr.ambient_dim() - 1, std::move(out), false);
}

/// Maximal sets of >= 3 hyperplanes whose forms span a 2-dimensional space
/// (collinear points in the dual projective space).
struct CollinearityData {
    std::vector<IndexSet> lines;

    /// The unique listed line containing both a and b, if any.
    const IndexSet* line_through(int a, int b) const
    {
        for (const auto& l : lines)
            if (std::binary_search(l.begin(), l.end(), a) && std::binary_search(l.begin(), l.end(), b))
                return &l;
        return nullptr;
    }

    bool collinear(int a, int b, int c) const
    {
        const IndexSet* l = line_through(a, b);
        return l && std::binary_search(l->begin(), l->end(), c);
    }
};

inline CollinearityData rank2_flats(const Arrangement& arr)
{
    detail::require_central(arr, "rank2_flats");
    const int n = static_cast<int>(arr.size());
    const std::size_t m = static_cast<std::size_t>(arr.ambient_dim());
    std::set<IndexSet> found;
    std::vector<std::vector<bool>> covered(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (covered[i][j]) continue;
            RowEchelon<Rational> plane(m);
            plane.insert(arr.form(static_cast<std::size_t>(i)).coeffs);
            plane.insert(arr.form(static_cast<std::size_t>(j)).coeffs);
            IndexSet line;
            for (int k = 0; k < n; ++k)
                if (k == i || k == j || plane.in_span(arr.form(static_cast<std::size_t>(k)).coeffs)) line.push_back(k);
            for (int a : line)
                for (int b : line) covered[a][b] = true;
            if (line.size() >= 3) found.insert(std::move(line));
        }
    }
    return {std::vector<IndexSet>(found.begin(), found.end())};
}

/// Minimal dependent subsets of size <= max_size.
struct CircuitList {
    std::vector<IndexSet> circuits;
};

struct CircuitOptions {
    std::size_t max_arrangement_size = 20;
};

inline CircuitList circuits(const Arrangement& arr, std::size_t max_size, CircuitOptions opt = {})
{
    detail::require_central(arr, "circuits");
    if (arr.size() > opt.max_arrangement_size)
        throw budget_exceeded("circuit enumeration refused: " + std::to_string(arr.size()) +
                              " hyperplanes exceeds the cap of " + std::to_string(opt.max_arrangement_size));
    const int n = static_cast<int>(arr.size());
    const std::size_t m = static_cast<std::size_t>(arr.ambient_dim());
    std::vector<IndexSet> out;

    // DFS over independent sets I in increasing order; I u {k} with k > max I
    // is a circuit iff it is dependent and k's expression in I uses every
    // member of I.
    IndexSet current;
    auto rec = [&](auto&& self, const RowEchelon<Rational>& ech, int next) -> void {
        if (current.size() + 1 > max_size) return;
        for (int k = next; k < n; ++k) {
            const auto& v = arr.form(static_cast<std::size_t>(k)).coeffs;
            if (ech.in_span(v)) {
                DenseMatrix<Rational> rows;
                for (int i : current) rows.push_back(arr.form(static_cast<std::size_t>(i)).coeffs);
                rows.push_back(v);
                auto ker = left_kernel(rows, m);
                if (ker.size() == 1 &&
                    std::none_of(ker[0].begin(), ker[0].end(), [](const Rational& c) { return is_zero(c); })) {
                    IndexSet c = current;
                    c.push_back(k);
                    out.push_back(std::move(c));
                }
            } else if (current.size() + 2 <= max_size) {
                RowEchelon<Rational> grown = ech;
                grown.insert(v);
                current.push_back(k);
                self(self, grown, k + 1);
                current.pop_back();
            }
        }
    };
    rec(rec, RowEchelon<Rational>(m), 0);
    std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return {std::move(out)};
}

// ---------------------------------------------------------------------------
// Text format:
//   dim m central|affine
//   one form per line: m rationals (+1 trailing constant when affine)
//   '#' starts a comment.

inline Arrangement read_arrangement(std::istream& in)
{
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string t; ls >> t;) tokens.push_back(t);
        if (!tokens.empty()) rows.push_back(std::move(tokens));
    }
    if (rows.empty()) throw input_error("arrangement file is empty");
    const auto& header = rows.front();
    if (header.size() != 3 || header[0] != "dim" || (header[2] != "central" && header[2] != "affine"))
        throw input_error("arrangement header must read 'dim m central|affine'");
    int m = 0;
    try {
        std::size_t used = 0;
        m = std::stoi(header[1], &used);
        if (used != header[1].size()) throw input_error("bad dimension");
    } catch (const std::logic_error&) {
        throw input_error("bad ambient dimension '" + header[1] + "'");
    }
    if (m < 1) throw input_error("ambient dimension must be positive");
    const bool central = header[2] == "central";
    const std::size_t width = static_cast<std::size_t>(m) + (central ? 0 : 1);
    std::vector<LinearForm> forms;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != width)
            throw input_error("form on data line " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                              " entries, expected " + std::to_string(width));
        LinearForm f;
        for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) f.coeffs.push_back(parse_rational(rows[r][j]));
        if (!central) f.constant = parse_rational(rows[r][width - 1]);
        forms.push_back(std::move(f));
    }
    return Arrangement(m, std::move(forms), central);
}

inline Arrangement parse_arrangement(const std::string& text)
{
    std::istringstream in(text);
    return read_arrangement(in);
}

inline std::string format_arrangement(const Arrangement& arr)
{
    std::ostringstream os;
    os << "dim " << arr.ambient_dim() << (arr.central() ? " central" : " affine") << "\n";
    for (const auto& f : arr.forms()) {
        for (std::size_t j = 0; j < f.coeffs.size(); ++j) os << (j ? " " : "") << f.coeffs[j];
        if (!arr.central()) os << " " << f.constant;
        os << "\n";
    }
    return os.str();
}

}  // namespace hyparr
