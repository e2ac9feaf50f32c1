#pragma once

#include <utility>
#include <vector>

#include "qinv/representation.hpp"

namespace qinv {

// Endomorphisms of V as per-vertex matrix tuples: the kernel of d^V_V,
// unpacked against the frozen block order and scaled to integer entries.
inline std::vector<std::vector<RationalMatrix>> endomorphism_basis(const Representation& v) {
    const Quiver& q = v.quiver();
    const auto offsets = detail::hom_block_offsets(q, v.dim(), v.dim());
    const auto kernel = row_reduce(interaction_matrix(v, v)).kernel;
    std::vector<std::vector<RationalMatrix>> basis;
    for (const auto& vec : kernel) {
        Integer scale = 1;
        for (const auto& c : vec) scale = boost::multiprecision::lcm(scale, denominator_of(c));
        std::vector<RationalMatrix> phi;
        for (int x = 0; x < q.vertex_count(); ++x) {
            const int d = v.dim_at(x);
            RationalMatrix m(d, d);
            for (int p = 0; p < d; ++p) {
                for (int qq = 0; qq < d; ++qq) {
                    m(p, qq) = vec[static_cast<std::size_t>(offsets[static_cast<std::size_t>(x)] + p * d + qq)] *
                               Rational(scale);
                }
            }
            phi.push_back(std::move(m));
        }
        basis.push_back(std::move(phi));
    }
    return basis;
}

struct Summand {
    Representation rep;
    // per-vertex inclusion into the original representation, dim_orig(x) x dim_sub(x)
    std::vector<RationalMatrix> embedding;
    bool schur_certified = false;  // endomorphism space is one-dimensional
    long long endo_dim = 0;
};

struct Decomposition {
    std::vector<Summand> summands;
    IntVec total_dim;
};

struct DecomposeOptions {
    int rounds = 16;
    long long combo_bound = 4;
    long long vector_bound = 3;
};

namespace detail {

// Express columns of (V(a) * emb_tail) in the basis emb_head; the image is
// contained in the span by construction, so the system is always solvable.
inline RationalMatrix restricted_map(const RationalMatrix& va, const RationalMatrix& emb_tail,
                                     const RationalMatrix& emb_head) {
    auto x = solve(emb_head, va * emb_tail);
    if (!x) throw Error("internal: restriction of an invariant subspace failed");
    return *x;
}

inline Representation subrepresentation(const Representation& v, const std::vector<RationalMatrix>& emb) {
    const Quiver& q = v.quiver();
    IntVec dim(static_cast<std::size_t>(q.vertex_count()));
    for (int x = 0; x < q.vertex_count(); ++x) dim[static_cast<std::size_t>(x)] = emb[static_cast<std::size_t>(x)].cols();
    std::vector<RationalMatrix> mats;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        mats.push_back(restricted_map(v.matrix(a), emb[static_cast<std::size_t>(ar.tail)],
                                      emb[static_cast<std::size_t>(ar.head)]));
    }
    return Representation(v.quiver_ptr(), std::move(dim), std::move(mats));
}

inline RationalMatrix columns_matrix(const std::vector<std::vector<Rational>>& cols, int rows) {
    RationalMatrix m(rows, static_cast<int>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (int r = 0; r < rows; ++r) m(r, static_cast<int>(c)) = cols[c][static_cast<std::size_t>(r)];
    }
    return m;
}

// Kernel of p(phi)^power at one vertex, as an embedding matrix.
inline RationalMatrix generalized_eigenspace(const UniPoly& p, const RationalMatrix& phi, int power) {
    const int n = phi.rows();
    if (n == 0) return RationalMatrix(0, 0);
    RationalMatrix pm = eval_at_matrix(p, phi);
    RationalMatrix acc = RationalMatrix::identity(n);
    for (int i = 0; i < power; ++i) acc = acc * pm;
    return columns_matrix(row_reduce(acc).kernel, n);
}

inline void decompose_into(const Representation& v, std::vector<RationalMatrix> emb, Rng& rng,
                           const DecomposeOptions& opts, std::vector<Summand>& out);

// Try splitting along the generalized eigenspaces of an endomorphism.
inline bool try_eigensplit(const Representation& v, const std::vector<RationalMatrix>& emb,
                           const std::vector<RationalMatrix>& phi, Rng& rng, const DecomposeOptions& opts,
                           std::vector<Summand>& out) {
    const Quiver& q = v.quiver();
    UniPoly cp = UniPoly::constant(Rational(1));
    for (int x = 0; x < q.vertex_count(); ++x) {
        if (v.dim_at(x) > 0) cp = cp * char_poly(phi[static_cast<std::size_t>(x)]);
    }
    const auto factors = factor_rational(cp);
    if (factors.size() < 2) return false;

    std::vector<std::vector<RationalMatrix>> pieces;
    for (const auto& [p, mult] : factors) {
        std::vector<RationalMatrix> sub;
        bool nonzero = false;
        for (int x = 0; x < q.vertex_count(); ++x) {
            RationalMatrix e = generalized_eigenspace(p, phi[static_cast<std::size_t>(x)],
                                                      std::min(mult, v.dim_at(x)));
            if (e.cols() > 0) nonzero = true;
            sub.push_back(std::move(e));
        }
        if (nonzero) pieces.push_back(std::move(sub));
    }
    if (pieces.size() < 2) return false;
    for (const auto& piece : pieces) {
        Representation part = subrepresentation(v, piece);
        std::vector<RationalMatrix> composed;
        for (int x = 0; x < q.vertex_count(); ++x) {
            composed.push_back(emb[static_cast<std::size_t>(x)] * piece[static_cast<std::size_t>(x)]);
        }
        decompose_into(part, std::move(composed), rng, opts, out);
    }
    return true;
}

// Subrepresentation generated by a random vector at a random vertex; splits V
// whenever it admits a retraction.
inline bool try_retraction_split(const Representation& v, const std::vector<RationalMatrix>& emb, Rng& rng,
                                 const DecomposeOptions& opts, std::vector<Summand>& out) {
    const Quiver& q = v.quiver();
    std::vector<int> candidates;
    for (int x = 0; x < q.vertex_count(); ++x) {
        if (v.dim_at(x) > 0) candidates.push_back(x);
    }
    if (candidates.empty()) return false;
    const int start = candidates[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(candidates.size()) - 1))];

    std::vector<std::vector<std::vector<Rational>>> spans(static_cast<std::size_t>(q.vertex_count()));
    std::vector<Rational> seed_vec(static_cast<std::size_t>(v.dim_at(start)));
    bool nonzero = false;
    for (auto& c : seed_vec) {
        c = Rational(rng.uniform(-opts.vector_bound, opts.vector_bound));
        if (c != 0) nonzero = true;
    }
    if (!nonzero) seed_vec[0] = 1;
    spans[static_cast<std::size_t>(start)].push_back(std::move(seed_vec));

    for (int x : q.topological_order()) {
        for (int a : q.out_arrows(x)) {
            const Arrow& ar = q.arrow(a);
            for (const auto& vec : spans[static_cast<std::size_t>(x)]) {
                std::vector<Rational> img(static_cast<std::size_t>(v.dim_at(ar.head)));
                for (int i = 0; i < v.dim_at(ar.head); ++i) {
                    Rational s;
                    for (int j = 0; j < v.dim_at(x); ++j) s += v.matrix(a)(i, j) * vec[static_cast<std::size_t>(j)];
                    img[static_cast<std::size_t>(i)] = std::move(s);
                }
                spans[static_cast<std::size_t>(ar.head)].push_back(std::move(img));
            }
        }
    }

    std::vector<RationalMatrix> sub_emb;
    bool proper = false, nontrivial = false;
    for (int x = 0; x < q.vertex_count(); ++x) {
        const int d = v.dim_at(x);
        RationalMatrix raw(d, static_cast<int>(spans[static_cast<std::size_t>(x)].size()));
        for (std::size_t c = 0; c < spans[static_cast<std::size_t>(x)].size(); ++c) {
            for (int r = 0; r < d; ++r) raw(r, static_cast<int>(c)) = spans[static_cast<std::size_t>(x)][c][static_cast<std::size_t>(r)];
        }
        RationalMatrix basis = columns_matrix(row_reduce(raw).image, d);
        if (basis.cols() < d) proper = true;
        if (basis.cols() > 0) nontrivial = true;
        sub_emb.push_back(std::move(basis));
    }
    if (!proper || !nontrivial) return false;

    Representation u = subrepresentation(v, sub_emb);

    // retraction rho: V -> U with rho . incl = id, as one linear system
    std::vector<int> var_base(static_cast<std::size_t>(q.vertex_count()) + 1, 0);
    for (int x = 0; x < q.vertex_count(); ++x) {
        var_base[static_cast<std::size_t>(x) + 1] =
            var_base[static_cast<std::size_t>(x)] + u.dim_at(x) * v.dim_at(x);
    }
    const int unknowns = var_base.back();
    int eq_count = 0;
    for (int a = 0; a < q.arrow_count(); ++a) {
        eq_count += u.dim_at(q.arrow(a).head) * v.dim_at(q.arrow(a).tail);
    }
    for (int x = 0; x < q.vertex_count(); ++x) eq_count += u.dim_at(x) * u.dim_at(x);

    RationalMatrix sys(eq_count, unknowns);
    RationalMatrix rhs(eq_count, 1);
    int eq = 0;
    auto var = [&](int x, int r, int c) { return var_base[static_cast<std::size_t>(x)] + r * v.dim_at(x) + c; };
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        // rho(h)(i,:) V(a)(:,j) - U(a)(i,:) rho(t)(:,j) = 0
        for (int i = 0; i < u.dim_at(ar.head); ++i) {
            for (int j = 0; j < v.dim_at(ar.tail); ++j) {
                for (int k = 0; k < v.dim_at(ar.head); ++k) {
                    sys(eq, var(ar.head, i, k)) += v.matrix(a)(k, j);
                }
                for (int k = 0; k < u.dim_at(ar.tail); ++k) {
                    sys(eq, var(ar.tail, k, j)) -= u.matrix(a)(i, k);
                }
                ++eq;
            }
        }
    }
    for (int x = 0; x < q.vertex_count(); ++x) {
        for (int i = 0; i < u.dim_at(x); ++i) {
            for (int j = 0; j < u.dim_at(x); ++j) {
                for (int k = 0; k < v.dim_at(x); ++k) {
                    sys(eq, var(x, i, k)) += sub_emb[static_cast<std::size_t>(x)](k, j);
                }
                rhs(eq, 0) = (i == j) ? Rational(1) : Rational(0);
                ++eq;
            }
        }
    }
    auto sol = solve(sys, rhs);
    if (!sol) return false;

    std::vector<RationalMatrix> rho;
    for (int x = 0; x < q.vertex_count(); ++x) {
        RationalMatrix m(u.dim_at(x), v.dim_at(x));
        for (int i = 0; i < u.dim_at(x); ++i) {
            for (int j = 0; j < v.dim_at(x); ++j) m(i, j) = (*sol)(var(x, i, j), 0);
        }
        rho.push_back(std::move(m));
    }
    std::vector<RationalMatrix> comp_emb;
    for (int x = 0; x < q.vertex_count(); ++x) {
        comp_emb.push_back(columns_matrix(row_reduce(rho[static_cast<std::size_t>(x)]).kernel, v.dim_at(x)));
    }

    auto compose = [&](const std::vector<RationalMatrix>& inner) {
        std::vector<RationalMatrix> r;
        for (int x = 0; x < q.vertex_count(); ++x) {
            r.push_back(emb[static_cast<std::size_t>(x)] * inner[static_cast<std::size_t>(x)]);
        }
        return r;
    };
    Representation complement = subrepresentation(v, comp_emb);
    decompose_into(u, compose(sub_emb), rng, opts, out);
    decompose_into(complement, compose(comp_emb), rng, opts, out);
    return true;
}

inline void decompose_into(const Representation& v, std::vector<RationalMatrix> emb, Rng& rng,
                           const DecomposeOptions& opts, std::vector<Summand>& out) {
    if (v.is_zero_dimensional()) return;
    const auto basis = endomorphism_basis(v);
    const long long e = static_cast<long long>(basis.size());
    if (e <= 1) {
        out.push_back({v, std::move(emb), true, e});
        return;
    }
    const int eigen_rounds = opts.rounds / 2;
    for (int round = 0; round < opts.rounds; ++round) {
        if (round < eigen_rounds) {
            std::vector<RationalMatrix> phi;
            if (round < static_cast<int>(basis.size())) {
                phi = basis[static_cast<std::size_t>(round)];
            } else {
                const Rational c0(rng.uniform(-opts.combo_bound, opts.combo_bound));
                phi = basis[0];
                for (auto& m : phi) m = m.scaled(c0);
                for (std::size_t k = 1; k < basis.size(); ++k) {
                    const Rational c(rng.uniform(-opts.combo_bound, opts.combo_bound));
                    for (std::size_t x = 0; x < phi.size(); ++x) {
                        phi[x] = phi[x] + basis[k][x].scaled(c);
                    }
                }
            }
            if (try_eigensplit(v, emb, phi, rng, opts, out)) return;
        } else {
            if (try_retraction_split(v, emb, rng, opts, out)) return;
        }
    }
    out.push_back({v, std::move(emb), false, e});
}

}  // namespace detail

// Split V into indecomposable summands with explicit inclusions witnessing
// the direct-sum decomposition. A summand is certified indecomposable only
// when its endomorphism space is one-dimensional; otherwise indecomposability
// over Q is a probabilistic claim (schur_certified = false).
inline Decomposition decompose(const Representation& v, std::uint64_t seed = 1,
                               const DecomposeOptions& opts = {}) {
    Rng rng(derive_seed(seed, {0xdec0}));
    std::vector<Summand> out;
    std::vector<RationalMatrix> emb;
    for (int x = 0; x < v.quiver().vertex_count(); ++x) emb.push_back(RationalMatrix::identity(v.dim_at(x)));
    detail::decompose_into(v, std::move(emb), rng, opts, out);
    return {std::move(out), v.dim()};
}

// Check that the summands' inclusions assemble to a base change of V and
// intertwine the arrow maps.
inline bool decomposition_is_valid(const Representation& v, const Decomposition& dec) {
    const Quiver& q = v.quiver();
    for (int x = 0; x < q.vertex_count(); ++x) {
        int total = 0;
        for (const auto& s : dec.summands) total += s.embedding[static_cast<std::size_t>(x)].cols();
        if (total != v.dim_at(x)) return false;
        RationalMatrix all(v.dim_at(x), total);
        int c = 0;
        for (const auto& s : dec.summands) {
            const auto& e = s.embedding[static_cast<std::size_t>(x)];
            for (int i = 0; i < e.rows(); ++i) {
                for (int j = 0; j < e.cols(); ++j) all(i, c + j) = e(i, j);
            }
            c += e.cols();
        }
        if (rank_of(all) != v.dim_at(x)) return false;
    }
    for (const auto& s : dec.summands) {
        for (int a = 0; a < q.arrow_count(); ++a) {
            const Arrow& ar = q.arrow(a);
            if (v.matrix(a) * s.embedding[static_cast<std::size_t>(ar.tail)] !=
                s.embedding[static_cast<std::size_t>(ar.head)] * s.rep.matrix(a)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qinv
