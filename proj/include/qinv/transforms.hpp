#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qinv/canonical.hpp"
#include "qinv/representation.hpp"

namespace qinv {

// --- reflection functors -------------------------------------------------------

enum class ReflectDir { Plus, Minus };

// s_x on dimension vectors together with the reflected quiver.
inline std::pair<Quiver, IntVec> reflect_dim(const Quiver& q, int x, const IntVec& alpha) {
    return {reflect_quiver(q, x), reflect_vector(q, x, alpha)};
}

// C+ at a sink: the space at x becomes ker((+)_{ha=x} V(ta) -> V(x)) with the
// component projections as the new arrow maps; C- at a source is the dual
// cokernel construction. Kernel and cokernel bases come from the reduced row
// echelon form, so witnesses transport deterministically.
inline Representation reflect_rep(const Representation& v, int x, ReflectDir dir) {
    const Quiver& q = v.quiver();
    if (x < 0 || x >= q.vertex_count()) throw PreconditionError("unknown vertex");
    auto reflected = std::make_shared<const Quiver>(reflect_quiver(q, x));

    if (dir == ReflectDir::Plus) {
        if (!is_sink(q, x)) throw PreconditionError("C+ requires a sink");
        const auto& in = q.in_arrows(x);
        int total = 0;
        for (int a : in) total += v.matrix(a).cols();
        RationalMatrix stacked(v.dim_at(x), total);
        int c = 0;
        for (int a : in) {
            const auto& m = v.matrix(a);
            for (int i = 0; i < m.rows(); ++i) {
                for (int j = 0; j < m.cols(); ++j) stacked(i, c + j) = m(i, j);
            }
            c += m.cols();
        }
        const auto kernel = row_reduce(stacked).kernel;
        const int d = static_cast<int>(kernel.size());

        IntVec dim = v.dim();
        dim[static_cast<std::size_t>(x)] = d;
        std::vector<RationalMatrix> mats;
        for (int a = 0; a < q.arrow_count(); ++a) {
            if (q.arrow(a).head != x) {
                mats.push_back(v.matrix(a));
                continue;
            }
            // component block of the kernel inclusion, one per reversed arrow
            int offset = 0;
            for (int b : in) {
                if (b == a) break;
                offset += v.matrix(b).cols();
            }
            const int rows = v.matrix(a).cols();
            RationalMatrix m(rows, d);
            for (int k = 0; k < d; ++k) {
                for (int i = 0; i < rows; ++i) m(i, k) = kernel[static_cast<std::size_t>(k)][static_cast<std::size_t>(offset + i)];
            }
            mats.push_back(std::move(m));
        }
        return Representation(reflected, std::move(dim), std::move(mats));
    }

    if (!is_source(q, x)) throw PreconditionError("C- requires a source");
    const auto& out = q.out_arrows(x);
    int total = 0;
    for (int a : out) total += v.matrix(a).rows();
    RationalMatrix stacked(total, v.dim_at(x));
    int r = 0;
    for (int a : out) {
        const auto& m = v.matrix(a);
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) stacked(r + i, j) = m(i, j);
        }
        r += m.rows();
    }
    // cokernel projection: rows spanning the left null space
    const auto left_null = row_reduce(stacked.transpose()).kernel;
    const int d = static_cast<int>(left_null.size());

    IntVec dim = v.dim();
    dim[static_cast<std::size_t>(x)] = d;
    std::vector<RationalMatrix> mats;
    for (int a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).tail != x) {
            mats.push_back(v.matrix(a));
            continue;
        }
        int offset = 0;
        for (int b : out) {
            if (b == a) break;
            offset += v.matrix(b).rows();
        }
        const int cols = v.matrix(a).rows();
        RationalMatrix m(d, cols);
        for (int k = 0; k < d; ++k) {
            for (int j = 0; j < cols; ++j) m(k, j) = left_null[static_cast<std::size_t>(k)][static_cast<std::size_t>(offset + j)];
        }
        mats.push_back(std::move(m));
    }
    return Representation(reflected, std::move(dim), std::move(mats));
}

// --- shrinking -------------------------------------------------------------------

struct ShrinkResult {
    Quiver quiver;
    std::vector<int> vertex_map;  // new vertex -> original vertex
    std::optional<IntVec> beta;
    std::optional<Representation> rep;
    std::optional<IntVec> sigma;
};

// Replace a through-vertex v0 (one arrow to w, l >= 1 arrows in from the
// other side, or the fully reversed picture) by the composed arrows. Requires
// beta(v0) >= beta(w) and, when a weight is supplied, sigma(v0) = 0.
inline ShrinkResult shrink(const Quiver& q, int v0, const std::optional<Representation>& w_rep,
                           const std::optional<IntVec>& sigma, std::optional<IntVec> beta_opt = std::nullopt) {
    if (v0 < 0 || v0 >= q.vertex_count()) throw PreconditionError("unknown vertex");
    std::vector<std::string> violations;

    const auto& outs = q.out_arrows(v0);
    const auto& ins = q.in_arrows(v0);
    bool forward = false;
    int bridge = -1;
    std::vector<int> sides;
    if (outs.size() == 1 && ins.size() >= 1) {
        forward = true;
        bridge = outs[0];
        sides = ins;
    } else if (ins.size() == 1 && outs.size() >= 1) {
        forward = false;
        bridge = ins[0];
        sides = outs;
    } else {
        violations.push_back("vertex does not match the shrink pattern (need exactly one arrow on one side "
                             "and at least one on the other)");
    }

    std::optional<IntVec> beta = beta_opt;
    if (!beta && w_rep) beta = w_rep->dim();
    int w_vertex = -1;
    if (bridge >= 0) {
        const Arrow& b = q.arrow(bridge);
        w_vertex = forward ? b.head : b.tail;
        if (w_vertex == v0) violations.push_back("bridge arrow is a loop");
    }
    if (beta && bridge >= 0) {
        check_sized(q, *beta, "dimension vector");
        if ((*beta)[static_cast<std::size_t>(v0)] < (*beta)[static_cast<std::size_t>(w_vertex)]) {
            violations.push_back("dimension condition fails: beta(v0) < beta(w)");
        }
    }
    if (sigma) {
        check_sized(q, *sigma, "weight");
        if ((*sigma)[static_cast<std::size_t>(v0)] != 0) {
            violations.push_back("weight condition fails: sigma(v0) != 0");
        }
    }
    if (!violations.empty()) {
        std::string msg;
        for (std::size_t i = 0; i < violations.size(); ++i) {
            if (i) msg += "; ";
            msg += violations[i];
        }
        throw PreconditionError(msg);
    }

    std::vector<int> vmap;
    std::vector<int> inverse(static_cast<std::size_t>(q.vertex_count()), -1);
    std::vector<std::string> names;
    for (int x = 0; x < q.vertex_count(); ++x) {
        if (x == v0) continue;
        inverse[static_cast<std::size_t>(x)] = static_cast<int>(vmap.size());
        vmap.push_back(x);
        names.push_back(q.vertex_name(x));
    }
    std::vector<Arrow> arrows;
    std::vector<int> kept;  // original arrow index per kept arrow
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        if (ar.tail == v0 || ar.head == v0) continue;
        arrows.push_back({ar.name, inverse[static_cast<std::size_t>(ar.tail)],
                          inverse[static_cast<std::size_t>(ar.head)]});
        kept.push_back(a);
    }
    const Arrow& b = q.arrow(bridge);
    std::vector<std::pair<int, int>> composed;  // (side arrow, new arrow index)
    for (int a : sides) {
        const Arrow& s = q.arrow(a);
        std::string name = b.name + s.name;
        for (const auto& existing : arrows) {
            if (existing.name == name) name += "'";
        }
        if (forward) {
            arrows.push_back({name, inverse[static_cast<std::size_t>(s.tail)],
                              inverse[static_cast<std::size_t>(b.head)]});
        } else {
            arrows.push_back({name, inverse[static_cast<std::size_t>(b.tail)],
                              inverse[static_cast<std::size_t>(s.head)]});
        }
        composed.emplace_back(a, static_cast<int>(arrows.size()) - 1);
    }
    ShrinkResult result{Quiver(std::move(names), std::move(arrows)), std::move(vmap), std::nullopt,
                        std::nullopt, std::nullopt};

    if (beta) {
        IntVec nb;
        for (int orig : result.vertex_map) nb.push_back((*beta)[static_cast<std::size_t>(orig)]);
        result.beta = std::move(nb);
    }
    if (sigma) {
        IntVec ns;
        for (int orig : result.vertex_map) ns.push_back((*sigma)[static_cast<std::size_t>(orig)]);
        result.sigma = std::move(ns);
    }
    if (w_rep) {
        auto qp = std::make_shared<const Quiver>(result.quiver);
        std::vector<RationalMatrix> mats(static_cast<std::size_t>(result.quiver.arrow_count()));
        for (std::size_t i = 0; i < kept.size(); ++i) mats[i] = w_rep->matrix(kept[static_cast<std::size_t>(i)]);
        for (const auto& [side, idx] : composed) {
            mats[static_cast<std::size_t>(idx)] = forward
                                                      ? w_rep->matrix(bridge) * w_rep->matrix(side)
                                                      : w_rep->matrix(side) * w_rep->matrix(bridge);
        }
        result.rep = Representation(qp, *result.beta, std::move(mats));
    }
    return result;
}

// --- exceptional sequences --------------------------------------------------------

struct SequenceItemCheck {
    IntVec eps;
    bool euler_self_one = false;  // <e,e> = 1, exact
    bool schur = false;           // generic hom(e,e) = 1, ext = 0 (randomized)
};

struct SequencePairCheck {
    int i = 0, j = 0;              // 0-based, i < j
    bool orthogonal = false;       // generic hom and ext of (e_i, e_j) vanish
    bool backward_nonpos = false;  // <e_j, e_i> <= 0, exact
    long long backward_euler = 0;
};

struct SequenceValidation {
    std::vector<IntVec> eps;
    std::vector<SequenceItemCheck> items;
    std::vector<SequencePairCheck> pairs;
    bool valid = false;
    std::optional<Quiver> derived;  // Q(eps), present iff valid
};

inline Quiver epsilon_quiver_from(const std::vector<IntVec>& eps,
                                  const std::vector<SequencePairCheck>& pairs) {
    const int r = static_cast<int>(eps.size());
    std::vector<std::string> names;
    for (int i = 1; i <= r; ++i) names.push_back(std::to_string(i));
    std::vector<Arrow> arrows;
    for (const auto& pc : pairs) {
        const long long count = -pc.backward_euler;
        for (long long k = 0; k < count; ++k) {
            arrows.push_back({"e" + std::to_string(pc.j + 1) + "_" + std::to_string(pc.i + 1) + "_" +
                                  std::to_string(k),
                              pc.j, pc.i});
        }
    }
    return Quiver(std::move(names), std::move(arrows));
}

// Checks, per item, that eps_i is a real Schur root, and per pair i < j that
// eps_i is generically orthogonal to eps_j and <eps_j, eps_i> <= 0; on
// success builds Q(eps) with -<eps_j, eps_i> arrows from j to i.
inline SequenceValidation validate_exceptional_sequence(const Quiver& q, const std::vector<IntVec>& eps,
                                                        std::uint64_t seed = 1,
                                                        const GenericHomExtOptions& opts = {}) {
    if (eps.size() > static_cast<std::size_t>(q.vertex_count())) {
        throw PreconditionError("sequence longer than the number of vertices");
    }
    SequenceValidation sv;
    sv.eps = eps;
    bool ok = !eps.empty();
    for (std::size_t i = 0; i < eps.size(); ++i) {
        check_sized(q, eps[i], "dimension vector");
        SequenceItemCheck item;
        item.eps = eps[i];
        item.euler_self_one = euler_form(q, eps[i], eps[i]) == 1;
        HomExt he = generic_hom_ext(q, eps[i], eps[i], derive_seed(seed, {static_cast<long long>(i)}), opts);
        item.schur = (he.hom == 1 && he.ext == 0);
        ok = ok && item.euler_self_one && item.schur;
        sv.items.push_back(std::move(item));
    }
    for (std::size_t i = 0; i < eps.size(); ++i) {
        for (std::size_t j = i + 1; j < eps.size(); ++j) {
            SequencePairCheck pc;
            pc.i = static_cast<int>(i);
            pc.j = static_cast<int>(j);
            HomExt he = generic_hom_ext(q, eps[i], eps[j],
                                        derive_seed(seed, {static_cast<long long>(i), static_cast<long long>(j)}),
                                        opts);
            pc.orthogonal = (he.hom == 0 && he.ext == 0);
            pc.backward_euler = euler_form(q, eps[j], eps[i]);
            pc.backward_nonpos = pc.backward_euler <= 0;
            ok = ok && pc.orthogonal && pc.backward_nonpos;
            sv.pairs.push_back(std::move(pc));
        }
    }
    sv.valid = ok;
    if (ok) sv.derived = epsilon_quiver_from(sv.eps, sv.pairs);
    return sv;
}

inline Quiver epsilon_quiver(const SequenceValidation& sv) {
    if (!sv.valid || !sv.derived) throw PreconditionError("sequence did not validate");
    return *sv.derived;
}

}  // namespace qinv
