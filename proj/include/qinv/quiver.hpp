#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "qinv/matrix.hpp"

namespace qinv {

using IntVec = std::vector<long long>;  // dimension vectors and weights alike

struct Arrow {
    std::string name;
    int tail;
    int head;
};

// Finite quiver without oriented cycles. Vertex and arrow declaration order
// is canonical: every vector encoding follows it.
class Quiver {
public:
    Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
        : vertex_names_(std::move(vertex_names)), arrows_(std::move(arrows)) {
        validate();
    }

    static Quiver parse(const std::string& text);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int a) const { return arrows_[static_cast<std::size_t>(a)]; }
    const std::string& vertex_name(int x) const { return vertex_names_[static_cast<std::size_t>(x)]; }
    bool connected() const { return connected_; }
    const std::vector<int>& topological_order() const { return topo_; }

    int vertex_index(const std::string& name) const {
        for (int i = 0; i < vertex_count(); ++i) {
            if (vertex_names_[static_cast<std::size_t>(i)] == name) return i;
        }
        throw PreconditionError("unknown vertex '" + name + "'");
    }
    int arrow_index(const std::string& name) const {
        for (int i = 0; i < arrow_count(); ++i) {
            if (arrows_[static_cast<std::size_t>(i)].name == name) return i;
        }
        throw PreconditionError("unknown arrow '" + name + "'");
    }

    const std::vector<int>& in_arrows(int x) const { return in_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& out_arrows(int x) const { return out_[static_cast<std::size_t>(x)]; }

    bool same_shape(const Quiver& o) const {
        if (vertex_names_ != o.vertex_names_ || arrow_count() != o.arrow_count()) return false;
        for (int a = 0; a < arrow_count(); ++a) {
            const Arrow& x = arrow(a);
            const Arrow& y = o.arrow(a);
            if (x.name != y.name || x.tail != y.tail || x.head != y.head) return false;
        }
        return true;
    }

    std::string to_text() const {
        std::string out;
        for (const auto& v : vertex_names_) out += "v " + v + "\n";
        for (const auto& a : arrows_) {
            out += "a " + a.name + " " + vertex_name(a.tail) + " " + vertex_name(a.head) + "\n";
        }
        return out;
    }

private:
    void validate() {
        std::set<std::string> seen;
        for (const auto& v : vertex_names_) {
            if (!seen.insert(v).second) throw ParseError("duplicate vertex name '" + v + "'");
        }
        seen.clear();
        for (const auto& a : arrows_) {
            if (!seen.insert(a.name).second) throw ParseError("duplicate arrow name '" + a.name + "'");
            if (a.tail < 0 || a.tail >= vertex_count() || a.head < 0 || a.head >= vertex_count()) {
                throw ParseError("arrow '" + a.name + "' references an undeclared vertex");
            }
        }
        in_.assign(static_cast<std::size_t>(vertex_count()), {});
        out_.assign(static_cast<std::size_t>(vertex_count()), {});
        for (int i = 0; i < arrow_count(); ++i) {
            out_[static_cast<std::size_t>(arrows_[static_cast<std::size_t>(i)].tail)].push_back(i);
            in_[static_cast<std::size_t>(arrows_[static_cast<std::size_t>(i)].head)].push_back(i);
        }
        // Kahn; deterministic order by smallest vertex index
        std::vector<int> indeg(static_cast<std::size_t>(vertex_count()), 0);
        for (const auto& a : arrows_) ++indeg[static_cast<std::size_t>(a.head)];
        std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
        for (int x = 0; x < vertex_count(); ++x) {
            if (indeg[static_cast<std::size_t>(x)] == 0) ready.push(x);
        }
        topo_.clear();
        while (!ready.empty()) {
            const int x = ready.top();
            ready.pop();
            topo_.push_back(x);
            for (int a : out_[static_cast<std::size_t>(x)]) {
                if (--indeg[static_cast<std::size_t>(arrows_[static_cast<std::size_t>(a)].head)] == 0) {
                    ready.push(arrows_[static_cast<std::size_t>(a)].head);
                }
            }
        }
        if (static_cast<int>(topo_.size()) != vertex_count()) throw ParseError("quiver has an oriented cycle");

        // undirected connectivity
        connected_ = true;
        if (vertex_count() > 0) {
            std::vector<char> vis(static_cast<std::size_t>(vertex_count()), 0);
            std::queue<int> q;
            q.push(0);
            vis[0] = 1;
            int count = 1;
            while (!q.empty()) {
                const int x = q.front();
                q.pop();
                auto visit = [&](int y) {
                    if (!vis[static_cast<std::size_t>(y)]) {
                        vis[static_cast<std::size_t>(y)] = 1;
                        ++count;
                        q.push(y);
                    }
                };
                for (int a : out_[static_cast<std::size_t>(x)]) visit(arrows_[static_cast<std::size_t>(a)].head);
                for (int a : in_[static_cast<std::size_t>(x)]) visit(arrows_[static_cast<std::size_t>(a)].tail);
            }
            connected_ = (count == vertex_count());
        }
    }

    std::vector<std::string> vertex_names_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> in_, out_;
    std::vector<int> topo_;
    bool connected_ = true;
};

inline Quiver Quiver::parse(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<std::string> arrow_names;
    std::vector<std::pair<std::string, std::string>> arrow_ends;
    int line_no = 0;
    for (const auto& raw : split_on(text, '\n')) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "v") {
            if (tokens.size() != 2) throw ParseError("expected 'v NAME'", line_no);
            vertices.push_back(tokens[1]);
        } else if (tokens[0] == "a") {
            if (tokens.size() != 4) throw ParseError("expected 'a NAME TAIL HEAD'", line_no);
            arrow_names.push_back(tokens[1]);
            arrow_ends.emplace_back(tokens[2], tokens[3]);
        } else {
            throw ParseError("unknown directive '" + tokens[0] + "'", line_no);
        }
    }
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (vertices[i] == name) return static_cast<int>(i);
        }
        throw ParseError("arrow endpoint '" + name + "' is not a declared vertex");
    };
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < arrow_names.size(); ++i) {
        arrows.push_back({arrow_names[i], index_of(arrow_ends[i].first), index_of(arrow_ends[i].second)});
    }
    return Quiver(std::move(vertices), std::move(arrows));
}

inline void check_sized(const Quiver& q, const IntVec& v, const char* what) {
    if (static_cast<int>(v.size()) != q.vertex_count()) {
        throw PreconditionError(std::string(what) + " has wrong length for this quiver");
    }
}

// <a,b> = sum_x a(x)b(x) - sum_{arrows} a(tail)b(head)
inline long long euler_form(const Quiver& q, const IntVec& a, const IntVec& b) {
    check_sized(q, a, "vector");
    check_sized(q, b, "vector");
    long long total = 0;
    for (int x = 0; x < q.vertex_count(); ++x) {
        total += a[static_cast<std::size_t>(x)] * b[static_cast<std::size_t>(x)];
    }
    for (const auto& ar : q.arrows()) {
        total -= a[static_cast<std::size_t>(ar.tail)] * b[static_cast<std::size_t>(ar.head)];
    }
    return total;
}

// The unique alpha with <alpha, e_x> = sigma(x) for all x. The system is
// unitriangular in topological order, so it solves by forward substitution
// over the integers.
inline IntVec alpha_of_weight(const Quiver& q, const IntVec& sigma) {
    check_sized(q, sigma, "weight");
    IntVec alpha(sigma.size(), 0);
    for (int x : q.topological_order()) {
        long long v = sigma[static_cast<std::size_t>(x)];
        for (int a : q.in_arrows(x)) v += alpha[static_cast<std::size_t>(q.arrow(a).tail)];
        alpha[static_cast<std::size_t>(x)] = v;
    }
    return alpha;
}

inline IntVec weight_of_alpha(const Quiver& q, const IntVec& alpha) {
    check_sized(q, alpha, "vector");
    IntVec sigma(alpha.size(), 0);
    for (int x = 0; x < q.vertex_count(); ++x) {
        long long v = alpha[static_cast<std::size_t>(x)];
        for (int a : q.in_arrows(x)) v -= alpha[static_cast<std::size_t>(q.arrow(a).tail)];
        sigma[static_cast<std::size_t>(x)] = v;
    }
    return sigma;
}

struct SupportRestriction {
    Quiver quiver;
    std::vector<int> vertex_map;  // subquiver vertex -> original vertex
    std::vector<int> arrow_map;   // subquiver arrow -> original arrow
};

// Full subquiver on { x : beta(x) > 0 }.
inline SupportRestriction support_restrict(const Quiver& q, const IntVec& beta) {
    check_sized(q, beta, "vector");
    for (long long v : beta) {
        if (v < 0) throw PreconditionError("support restriction requires a nonnegative vector");
    }
    std::vector<int> vmap, inverse(static_cast<std::size_t>(q.vertex_count()), -1);
    std::vector<std::string> names;
    for (int x = 0; x < q.vertex_count(); ++x) {
        if (beta[static_cast<std::size_t>(x)] > 0) {
            inverse[static_cast<std::size_t>(x)] = static_cast<int>(vmap.size());
            vmap.push_back(x);
            names.push_back(q.vertex_name(x));
        }
    }
    std::vector<Arrow> arrows;
    std::vector<int> amap;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const int t = inverse[static_cast<std::size_t>(ar.tail)];
        const int h = inverse[static_cast<std::size_t>(ar.head)];
        if (t >= 0 && h >= 0) {
            arrows.push_back({ar.name, t, h});
            amap.push_back(a);
        }
    }
    return {Quiver(std::move(names), std::move(arrows)), std::move(vmap), std::move(amap)};
}

// --- representation-type classification -------------------------------------

enum class QuiverClassTag { Dynkin, Euclidean, Wild };

struct QuiverClass {
    QuiverClassTag tag;
    std::string label;  // e.g. "A3", "~A1"; empty for Wild

    std::string to_string() const {
        switch (tag) {
            case QuiverClassTag::Dynkin:
                return "Dynkin " + label;
            case QuiverClassTag::Euclidean: {
                // ~X n printed with a combining tilde: A~ -> "Ã"
                std::string pretty = label;
                if (!pretty.empty() && pretty[0] == '~') {
                    if (pretty[1] == 'A') {
                        pretty = "Ã" + pretty.substr(2);
                    } else {
                        pretty = pretty.substr(1, 1) + "̃" + pretty.substr(2);
                    }
                }
                return "Euclidean " + pretty;
            }
            case QuiverClassTag::Wild:
                return "Wild";
        }
        return "";
    }
};

namespace detail {

// 2 * symmetrized Euler matrix (the generalized Cartan matrix of the
// underlying graph).
inline IntegerMatrix tits_matrix(const Quiver& q) {
    const int n = q.vertex_count();
    IntegerMatrix c(n, n);
    for (int i = 0; i < n; ++i) c(i, i) = 2;
    for (const auto& a : q.arrows()) {
        c(a.tail, a.head) -= 1;
        c(a.head, a.tail) -= 1;
    }
    return c;
}

inline Integer principal_minor(const IntegerMatrix& c, const std::vector<int>& idx) {
    const int k = static_cast<int>(idx.size());
    RationalMatrix sub(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            sub(i, j) = Rational(c(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]));
        }
    }
    return numerator_of(determinant(sub));
}

inline QuiverClassTag classify_by_form(const Quiver& q) {
    const int n = q.vertex_count();
    IntegerMatrix c = tits_matrix(q);

    bool positive_definite = true;
    for (int k = 1; k <= n && positive_definite; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        if (principal_minor(c, idx) <= 0) positive_definite = false;
    }
    if (positive_definite) return QuiverClassTag::Dynkin;

    RationalMatrix cr(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) cr(i, j) = Rational(c(i, j));
    }
    if (rank_of(cr) != n - 1) return QuiverClassTag::Wild;

    if (n <= 16) {
        // all principal minors >= 0
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> idx;
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i)) idx.push_back(i);
            }
            if (principal_minor(c, idx) < 0) return QuiverClassTag::Wild;
        }
        return QuiverClassTag::Euclidean;
    }
    // larger quivers: exact diagonal-pivot elimination decides semidefiniteness
    RationalMatrix a = cr;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (;;) {
        int piv = -1;
        for (int i = 0; i < n; ++i) {
            if (!used[static_cast<std::size_t>(i)] && a(i, i) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) break;
        if (a(piv, piv) < 0) return QuiverClassTag::Wild;
        used[static_cast<std::size_t>(piv)] = 1;
        for (int i = 0; i < n; ++i) {
            if (used[static_cast<std::size_t>(i)] || a(i, piv) == 0) continue;
            const Rational f = a(i, piv) / a(piv, piv);
            for (int j = 0; j < n; ++j) {
                if (!used[static_cast<std::size_t>(j)]) a(i, j) -= f * a(piv, j);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (used[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < n; ++j) {
            if (!used[static_cast<std::size_t>(j)] && a(i, j) != 0) return QuiverClassTag::Wild;
        }
    }
    return QuiverClassTag::Euclidean;
}

// Underlying-graph match against the ADE and affine ADE lists.
inline QuiverClass classify_by_graph(const Quiver& q) {
    const int n = q.vertex_count();
    const int m = q.arrow_count();
    const QuiverClass wild{QuiverClassTag::Wild, ""};

    std::map<std::pair<int, int>, int> edge_mult;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& a : q.arrows()) {
        const int u = std::min(a.tail, a.head), v = std::max(a.tail, a.head);
        ++edge_mult[{u, v}];
        ++deg[static_cast<std::size_t>(a.tail)];
        ++deg[static_cast<std::size_t>(a.head)];
    }
    bool has_multi = false;
    for (const auto& [e, k] : edge_mult) {
        (void)e;
        if (k >= 2) has_multi = true;
    }
    if (has_multi) {
        if (n == 2 && m == 2) return {QuiverClassTag::Euclidean, "~A1"};
        return wild;
    }
    if (m == n) {
        for (int d : deg) {
            if (d != 2) return wild;
        }
        return {QuiverClassTag::Euclidean, "~A" + std::to_string(n - 1)};
    }
    if (m != n - 1) return wild;  // extra independent cycles

    // tree cases
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [e, k] : edge_mult) {
        (void)k;
        adj[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
    std::vector<int> branch, big;
    for (int x = 0; x < n; ++x) {
        if (deg[static_cast<std::size_t>(x)] == 3) branch.push_back(x);
        if (deg[static_cast<std::size_t>(x)] >= 4) big.push_back(x);
    }
    if (!big.empty()) {
        if (big.size() == 1 && deg[static_cast<std::size_t>(big[0])] == 4 && n == 5 && branch.empty()) {
            return {QuiverClassTag::Euclidean, "~D4"};
        }
        return wild;
    }
    if (branch.empty()) return {QuiverClassTag::Dynkin, "A" + std::to_string(n)};
    if (branch.size() == 1) {
        // arm lengths from the single branch vertex
        std::vector<int> arms;
        for (int start : adj[static_cast<std::size_t>(branch[0])]) {
            int len = 1, prev = branch[0], cur = start;
            while (deg[static_cast<std::size_t>(cur)] == 2) {
                for (int nxt : adj[static_cast<std::size_t>(cur)]) {
                    if (nxt != prev) {
                        prev = cur;
                        cur = nxt;
                        break;
                    }
                }
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        const std::vector<int>& a = arms;
        if (a[0] == 1 && a[1] == 1) return {QuiverClassTag::Dynkin, "D" + std::to_string(n)};
        if (a == std::vector<int>{1, 2, 2}) return {QuiverClassTag::Dynkin, "E6"};
        if (a == std::vector<int>{1, 2, 3}) return {QuiverClassTag::Dynkin, "E7"};
        if (a == std::vector<int>{1, 2, 4}) return {QuiverClassTag::Dynkin, "E8"};
        if (a == std::vector<int>{2, 2, 2}) return {QuiverClassTag::Euclidean, "~E6"};
        if (a == std::vector<int>{1, 3, 3}) return {QuiverClassTag::Euclidean, "~E7"};
        if (a == std::vector<int>{1, 2, 5}) return {QuiverClassTag::Euclidean, "~E8"};
        return wild;
    }
    if (branch.size() == 2) {
        for (int x : branch) {
            int leaf_neighbors = 0;
            for (int y : adj[static_cast<std::size_t>(x)]) {
                if (deg[static_cast<std::size_t>(y)] == 1) ++leaf_neighbors;
            }
            if (leaf_neighbors != 2) return wild;
        }
        return {QuiverClassTag::Euclidean, "~D" + std::to_string(n - 1)};
    }
    return wild;
}

}  // namespace detail

// Classification by the symmetrized Tits form, cross-checked against explicit
// matching of the underlying graph with the ADE / affine ADE lists.
inline QuiverClass classify_quiver(const Quiver& q) {
    if (!q.connected()) throw PreconditionError("classification requires a connected quiver");
    const QuiverClassTag by_form = detail::classify_by_form(q);
    const QuiverClass by_graph = detail::classify_by_graph(q);
    if (by_form != by_graph.tag) {
        throw Error("internal: quadratic-form and graph classifications disagree");
    }
    return by_graph;
}

// --- reflection at a vertex --------------------------------------------------

inline Quiver reflect_quiver(const Quiver& q, int x) {
    if (x < 0 || x >= q.vertex_count()) throw PreconditionError("unknown vertex");
    std::vector<Arrow> arrows = q.arrows();
    for (auto& a : arrows) {
        if (a.tail == x || a.head == x) std::swap(a.tail, a.head);
    }
    return Quiver(q.vertex_names(), std::move(arrows));
}

inline IntVec reflect_vector(const Quiver& q, int x, const IntVec& alpha) {
    if (x < 0 || x >= q.vertex_count()) throw PreconditionError("unknown vertex");
    check_sized(q, alpha, "vector");
    IntVec out = alpha;
    long long v = -alpha[static_cast<std::size_t>(x)];
    for (int a : q.in_arrows(x)) v += alpha[static_cast<std::size_t>(q.arrow(a).tail)];
    for (int a : q.out_arrows(x)) v += alpha[static_cast<std::size_t>(q.arrow(a).head)];
    out[static_cast<std::size_t>(x)] = v;
    return out;
}

inline bool is_sink(const Quiver& q, int x) { return q.out_arrows(x).empty(); }
inline bool is_source(const Quiver& q, int x) { return q.in_arrows(x).empty(); }

}  // namespace qinv
