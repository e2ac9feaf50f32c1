#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qinv/membership.hpp"

namespace qinv {

using FlowVector = std::vector<long long>;  // one nonnegative integer per arrow

// Boundary map: I(lambda)_x = sum of lambda over arrows leaving x minus the
// sum over arrows entering x.
inline IntVec boundary(const Quiver& q, const FlowVector& lambda) {
    if (static_cast<int>(lambda.size()) != q.arrow_count()) {
        throw PreconditionError("flow vector has wrong length");
    }
    for (long long v : lambda) {
        if (v < 0) throw PreconditionError("negative flow entry");
    }
    IntVec out(static_cast<std::size_t>(q.vertex_count()), 0);
    for (int a = 0; a < q.arrow_count(); ++a) {
        out[static_cast<std::size_t>(q.arrow(a).tail)] += lambda[static_cast<std::size_t>(a)];
        out[static_cast<std::size_t>(q.arrow(a).head)] -= lambda[static_cast<std::size_t>(a)];
    }
    return out;
}

namespace detail {

// Enumerate nonnegative integer flows with boundary sigma, restricted to the
// allowed arrows. Vertices are visited in topological order; at each vertex
// the outflow is forced to sigma(x) plus the already-decided inflow, and is
// split over the outgoing arrows in all possible ways. Acyclicity bounds every
// branch, so the walk terminates.
inline void enumerate_flows(const Quiver& q, const IntVec& sigma, const std::vector<char>& allowed,
                            const std::function<bool(const FlowVector&)>& visit) {
    const auto& topo = q.topological_order();
    FlowVector lambda(static_cast<std::size_t>(q.arrow_count()), 0);
    IntVec inflow(static_cast<std::size_t>(q.vertex_count()), 0);

    std::function<bool(std::size_t)> vertex_step = [&](std::size_t pos) -> bool {
        if (pos == topo.size()) return visit(lambda);
        const int x = topo[pos];
        const long long need = sigma[static_cast<std::size_t>(x)] + inflow[static_cast<std::size_t>(x)];
        if (need < 0) return true;  // dead branch, keep enumerating elsewhere
        std::vector<int> outs;
        for (int a : q.out_arrows(x)) {
            if (allowed[static_cast<std::size_t>(a)]) outs.push_back(a);
        }
        if (outs.empty()) {
            bool blocked = need != 0;
            // arrows leaving x that are forbidden must carry zero flow anyway
            if (!blocked) return vertex_step(pos + 1);
            return true;
        }
        std::function<bool(std::size_t, long long)> split = [&](std::size_t k, long long rest) -> bool {
            if (k + 1 == outs.size()) {
                const int a = outs[k];
                lambda[static_cast<std::size_t>(a)] = rest;
                inflow[static_cast<std::size_t>(q.arrow(a).head)] += rest;
                const bool keep_going = vertex_step(pos + 1);
                inflow[static_cast<std::size_t>(q.arrow(a).head)] -= rest;
                lambda[static_cast<std::size_t>(a)] = 0;
                return keep_going;
            }
            for (long long v = 0; v <= rest; ++v) {
                const int a = outs[k];
                lambda[static_cast<std::size_t>(a)] = v;
                inflow[static_cast<std::size_t>(q.arrow(a).head)] += v;
                const bool keep_going = split(k + 1, rest - v);
                inflow[static_cast<std::size_t>(q.arrow(a).head)] -= v;
                lambda[static_cast<std::size_t>(a)] = 0;
                if (!keep_going) return false;
            }
            return true;
        };
        return split(0, need);
    };
    vertex_step(0);
}

// Exact Fourier-Motzkin elimination deciding rational feasibility of
// { lambda >= 0, I(lambda) = sigma } on the allowed arrows. Rows are kept as
// gcd-normalized integer vectors; variables are eliminated in the order that
// produces the fewest new rows.
inline bool rational_flow_feasible(const Quiver& q, const IntVec& sigma, const std::vector<char>& allowed) {
    // flow conservation per weakly-connected component of the allowed
    // subgraph: the boundary entries of each component must sum to zero
    {
        std::vector<int> comp(static_cast<std::size_t>(q.vertex_count()));
        for (int x = 0; x < q.vertex_count(); ++x) comp[static_cast<std::size_t>(x)] = x;
        std::function<int(int)> find = [&](int x) {
            while (comp[static_cast<std::size_t>(x)] != x) {
                comp[static_cast<std::size_t>(x)] =
                    comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
                x = comp[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (int a = 0; a < q.arrow_count(); ++a) {
            if (!allowed[static_cast<std::size_t>(a)]) continue;
            comp[static_cast<std::size_t>(find(q.arrow(a).tail))] = find(q.arrow(a).head);
        }
        std::map<int, long long> totals;
        for (int x = 0; x < q.vertex_count(); ++x) totals[find(x)] += sigma[static_cast<std::size_t>(x)];
        for (const auto& [root, total] : totals) {
            (void)root;
            if (total != 0) return false;
        }
    }

    std::vector<int> vars;
    for (int a = 0; a < q.arrow_count(); ++a) {
        if (allowed[static_cast<std::size_t>(a)]) vars.push_back(a);
    }
    const std::size_t m = vars.size();
    // rows encode c[0] + sum c[i+1] * lambda_i >= 0
    using Row = std::vector<Integer>;
    std::set<Row> rows;
    auto normalized = [](Row row) -> std::optional<Row> {
        Integer g = 0;
        for (const auto& c : row) g = boost::multiprecision::gcd(g, c);
        if (g == 0) return std::nullopt;  // trivially satisfied 0 >= 0
        if (g > 1) {
            for (auto& c : row) c /= g;
        }
        return row;
    };
    for (int x = 0; x < q.vertex_count(); ++x) {
        Row row(m + 1);
        row[0] = -sigma[static_cast<std::size_t>(x)];
        for (std::size_t i = 0; i < m; ++i) {
            const Arrow& ar = q.arrow(vars[i]);
            if (ar.tail == x) row[i + 1] += 1;
            if (ar.head == x) row[i + 1] -= 1;
        }
        Row neg(row);
        for (auto& c : neg) c = -c;
        if (auto r = normalized(std::move(row))) rows.insert(std::move(*r));
        if (auto r = normalized(std::move(neg))) rows.insert(std::move(*r));
    }
    for (std::size_t i = 0; i < m; ++i) {
        Row row(m + 1);
        row[i + 1] = 1;
        rows.insert(std::move(row));
    }

    std::vector<char> eliminated(m + 1, 0);
    for (std::size_t round = 0; round < m; ++round) {
        // pick the remaining variable with the fewest pos*neg combinations
        std::size_t best = 0;
        long long best_cost = -1;
        for (std::size_t v = 1; v <= m; ++v) {
            if (eliminated[v]) continue;
            long long pos = 0, neg = 0;
            for (const auto& row : rows) {
                if (row[v] > 0) ++pos;
                if (row[v] < 0) ++neg;
            }
            const long long cost = pos * neg;
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                best = v;
            }
        }
        const std::size_t v = best;
        eliminated[v] = 1;
        std::vector<Row> pos, neg;
        std::set<Row> next;
        for (const auto& row : rows) {
            if (row[v] > 0) {
                pos.push_back(row);
            } else if (row[v] < 0) {
                neg.push_back(row);
            } else {
                next.insert(row);
            }
        }
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                Row combined(m + 1);
                for (std::size_t i = 0; i <= m; ++i) combined[i] = p[i] * (-n[v]) + n[i] * p[v];
                if (auto r = normalized(std::move(combined))) next.insert(std::move(*r));
            }
        }
        rows = std::move(next);
    }
    for (const auto& row : rows) {
        if (row[0] < 0) return false;
    }
    return true;
}

}  // namespace detail

inline bool is_thin(const Representation& w) {
    for (long long d : w.dim()) {
        if (d > 1) return false;
    }
    return true;
}

struct ThinVerdict {
    MemberStatus status = MemberStatus::NotMember;  // always certified in the thin case
    std::optional<FlowVector> flow;                 // over the full quiver, Member only
    std::optional<SparsePolynomial> monomial;       // f_lambda in the arrow variables
    Rational value;                                 // f_lambda evaluated at W, nonzero
    std::string reason;                             // NotMember explanation
};

// Membership for thin representations: sigma is in S(W) iff some nonnegative
// integer flow with boundary sigma(restricted to supp W) is supported on the
// arrows where W is nonzero. Rational feasibility is decided by exact
// Fourier-Motzkin elimination; the incidence matrix is totally unimodular, so
// a rational point guarantees the integer witness that the search then finds.
inline ThinVerdict thin_membership(const Representation& w, const IntVec& sigma) {
    if (!is_thin(w)) throw PreconditionError("thin membership requires dimensions <= 1 everywhere");
    check_sized(w.quiver(), sigma, "weight");
    ThinVerdict verdict;

    RestrictedRepresentation restricted = restrict_to_support(w);
    const Quiver& sub = restricted.rep.quiver();
    IntVec sigma_sub;
    for (int orig : restricted.support.vertex_map) sigma_sub.push_back(sigma[static_cast<std::size_t>(orig)]);

    std::vector<char> allowed(static_cast<std::size_t>(sub.arrow_count()), 0);
    for (int a = 0; a < sub.arrow_count(); ++a) {
        allowed[static_cast<std::size_t>(a)] = restricted.rep.matrix(a)(0, 0) != 0;
    }

    if (!detail::rational_flow_feasible(sub, sigma_sub, allowed)) {
        verdict.status = MemberStatus::NotMember;
        verdict.reason = "no nonnegative flow with boundary sigma on the support of W";
        return verdict;
    }
    std::optional<FlowVector> found;
    detail::enumerate_flows(sub, sigma_sub, allowed, [&](const FlowVector& lambda) {
        found = lambda;
        return false;  // stop at the first witness
    });
    if (!found) {
        throw Error("internal: rational flow feasible but integer search failed");
    }

    verdict.status = MemberStatus::Member;
    FlowVector full(static_cast<std::size_t>(w.quiver().arrow_count()), 0);
    for (int a = 0; a < sub.arrow_count(); ++a) {
        full[static_cast<std::size_t>(restricted.support.arrow_map[static_cast<std::size_t>(a)])] =
            (*found)[static_cast<std::size_t>(a)];
    }
    std::vector<std::string> names;
    for (const auto& ar : w.quiver().arrows()) names.push_back("t_" + ar.name);
    VarContext ctx = make_var_context(std::move(names));
    SparsePolynomial mono = SparsePolynomial::constant(ctx, Rational(1));
    for (std::size_t a = 0; a < full.size(); ++a) {
        for (long long k = 0; k < full[a]; ++k) {
            mono = mono * SparsePolynomial::variable(ctx, a);
        }
    }
    Rational value(1);
    for (int a = 0; a < sub.arrow_count(); ++a) {
        for (long long k = 0; k < (*found)[static_cast<std::size_t>(a)]; ++k) {
            value *= restricted.rep.matrix(a)(0, 0);
        }
    }
    verdict.flow = std::move(full);
    verdict.monomial = std::move(mono);
    verdict.value = std::move(value);
    return verdict;
}

// Exact size of the lattice fiber I^{-1}(sigma) over the nonnegative flows.
inline long long fiber_count(const Quiver& q, const IntVec& sigma) {
    check_sized(q, sigma, "weight");
    std::vector<char> allowed(static_cast<std::size_t>(q.arrow_count()), 1);
    long long count = 0;
    detail::enumerate_flows(q, sigma, allowed, [&](const FlowVector&) {
        ++count;
        return true;
    });
    return count;
}

struct ThinSaturationViolation {
    IntVec sigma;
    long long multiple;
};

struct ThinSaturationReport {
    long long weights_checked = 0;
    std::vector<ThinSaturationViolation> violations;
};

// For every weight in the box and n = 2..4: membership of n*sigma must imply
// membership of sigma.
inline ThinSaturationReport thin_saturation_check(const Representation& w, const IntVec& box,
                                                  long long n_max = 4) {
    if (!is_thin(w)) throw PreconditionError("thin saturation check requires a thin representation");
    check_sized(w.quiver(), box, "weight box");
    ThinSaturationReport report;
    const int n = w.quiver().vertex_count();
    long long total = 1;
    for (long long b : box) {
        if (b < 0) throw PreconditionError("negative box bound");
        total *= 2 * b + 1;
    }
    for (long long index = 0; index < total; ++index) {
        IntVec sigma(static_cast<std::size_t>(n));
        long long rem = index;
        for (int x = n - 1; x >= 0; --x) {
            const long long width = 2 * box[static_cast<std::size_t>(x)] + 1;
            sigma[static_cast<std::size_t>(x)] = rem % width - box[static_cast<std::size_t>(x)];
            rem /= width;
        }
        ++report.weights_checked;
        const bool base = thin_membership(w, sigma).status == MemberStatus::Member;
        if (base) continue;
        for (long long mult = 2; mult <= n_max; ++mult) {
            IntVec scaled(sigma);
            for (auto& s : scaled) s *= mult;
            if (thin_membership(w, scaled).status == MemberStatus::Member) {
                report.violations.push_back({sigma, mult});
                break;
            }
        }
    }
    return report;
}

}  // namespace qinv
