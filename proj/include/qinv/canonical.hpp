#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qinv/decompose.hpp"
#include "qinv/modular.hpp"

namespace qinv {

// --- generic hom and ext -------------------------------------------------------
//
// hom(alpha,beta) is the minimum of dim Hom over random pairs; it is an upper
// bound on the generic value that is exact with high probability. Ranks of the
// interaction matrix are taken modulo word primes (a different prime per
// trial), which can only lower the rank, so the hom estimate stays an upper
// bound; when the modular rank hits the structural maximum the value is exact.

struct GenericHomExtOptions {
    int trials = 3;
    long long bound = 1000000;
};

namespace detail {

struct IntRep {
    std::vector<std::vector<long long>> mats;  // per arrow, row-major
};

inline IntRep random_int_rep(const Quiver& q, const IntVec& dim, Rng& rng, long long bound) {
    IntRep rep;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const std::size_t n = static_cast<std::size_t>(dim[static_cast<std::size_t>(ar.head)]) *
                              static_cast<std::size_t>(dim[static_cast<std::size_t>(ar.tail)]);
        std::vector<long long> m(n);
        for (auto& v : m) v = rng.uniform(-bound, bound);
        rep.mats.push_back(std::move(m));
    }
    return rep;
}

inline int interaction_rank_mod_p(const Quiver& q, const IntVec& a, const IntVec& b, const IntRep& v,
                                  const IntRep& w, std::uint32_t p) {
    const auto col_base = hom_block_offsets(q, a, b);
    const auto row_base = arrow_block_offsets(q, a, b);
    ModMatrix m(row_base.back(), col_base.back(), p);
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const Arrow& ar = q.arrow(ai);
        const int at = static_cast<int>(a[static_cast<std::size_t>(ar.tail)]);
        const int ah = static_cast<int>(a[static_cast<std::size_t>(ar.head)]);
        const int bt = static_cast<int>(b[static_cast<std::size_t>(ar.tail)]);
        const int bh = static_cast<int>(b[static_cast<std::size_t>(ar.head)]);
        const int rb = row_base[static_cast<std::size_t>(ai)];
        const auto& va = v.mats[static_cast<std::size_t>(ai)];
        const auto& wa = w.mats[static_cast<std::size_t>(ai)];
        for (int i = 0; i < bh; ++i) {
            for (int j = 0; j < at; ++j) {
                const int row = rb + i * at + j;
                for (int k = 0; k < ah; ++k) {
                    m.set(row, col_base[static_cast<std::size_t>(ar.head)] + i * ah + k,
                          va[static_cast<std::size_t>(k) * at + j]);
                }
                for (int k = 0; k < bt; ++k) {
                    m.set(row, col_base[static_cast<std::size_t>(ar.tail)] + k * at + j,
                          -wa[static_cast<std::size_t>(i) * bt + k]);
                }
            }
        }
    }
    return std::move(m).rank();
}

}  // namespace detail

// dim End of a generic alpha-dimensional representation (the diagonal hom,
// V = W the same sample). This is the Schur-root test: the minimum is 1 iff
// a generic representation has scalar endomorphisms only.
inline long long generic_end_dim(const Quiver& q, const IntVec& alpha, std::uint64_t seed = 1,
                                 const GenericHomExtOptions& opts = {}) {
    check_sized(q, alpha, "dimension vector");
    long long cols = 0;
    for (int x = 0; x < q.vertex_count(); ++x) {
        cols += alpha[static_cast<std::size_t>(x)] * alpha[static_cast<std::size_t>(x)];
    }
    if (cols == 0) return 0;
    long long best = cols;
    for (int t = 0; t < opts.trials; ++t) {
        Rng rng(derive_seed(seed, {0x9e1, t}));
        detail::IntRep v = detail::random_int_rep(q, alpha, rng, opts.bound);
        const std::uint32_t p = kRankPrimes[static_cast<std::size_t>(t) % 4];
        const int rank = detail::interaction_rank_mod_p(q, alpha, alpha, v, v, p);
        best = std::min(best, cols - rank);
        if (best == 1) break;  // identity is always an endomorphism
    }
    return best;
}

inline HomExt generic_hom_ext(const Quiver& q, const IntVec& alpha, const IntVec& beta,
                              std::uint64_t seed = 1, const GenericHomExtOptions& opts = {}) {
    check_sized(q, alpha, "dimension vector");
    check_sized(q, beta, "dimension vector");
    for (long long d : alpha) {
        if (d < 0) throw PreconditionError("negative entry in dimension vector");
    }
    for (long long d : beta) {
        if (d < 0) throw PreconditionError("negative entry in dimension vector");
    }
    long long cols = 0;
    for (int x = 0; x < q.vertex_count(); ++x) {
        cols += alpha[static_cast<std::size_t>(x)] * beta[static_cast<std::size_t>(x)];
    }
    long long best_hom = cols;
    for (int t = 0; t < opts.trials; ++t) {
        Rng rng(derive_seed(seed, {0x9e0, t}));
        detail::IntRep v = detail::random_int_rep(q, alpha, rng, opts.bound);
        detail::IntRep w = detail::random_int_rep(q, beta, rng, opts.bound);
        const std::uint32_t p = kRankPrimes[static_cast<std::size_t>(t) % 4];
        const int rank = detail::interaction_rank_mod_p(q, alpha, beta, v, w, p);
        best_hom = std::min(best_hom, cols - rank);
        if (best_hom == std::max<long long>(0, euler_form(q, alpha, beta))) break;  // structural floor
    }
    return {best_hom, best_hom - euler_form(q, alpha, beta)};
}

// --- root classes ----------------------------------------------------------------

enum class RootClass { Real, Isotropic, Imaginary, NotRoot };

inline std::string to_string(RootClass c) {
    switch (c) {
        case RootClass::Real:
            return "real";
        case RootClass::Isotropic:
            return "isotropic";
        case RootClass::Imaginary:
            return "imaginary";
        case RootClass::NotRoot:
            return "not a root class";
    }
    return "";
}

// Sign classification of <alpha,alpha>: 1 real, 0 isotropic, < 0 imaginary.
// Values > 1 cannot occur for Schur roots and are reported as such.
inline RootClass classify_root(const Quiver& q, const IntVec& alpha) {
    const long long v = euler_form(q, alpha, alpha);
    if (v == 1) return RootClass::Real;
    if (v == 0) return RootClass::Isotropic;
    if (v < 0) return RootClass::Imaginary;
    return RootClass::NotRoot;
}

// --- canonical decomposition ------------------------------------------------------

struct CanonicalPart {
    IntVec dim;
    int multiplicity = 0;
    RootClass cls = RootClass::NotRoot;
    bool schur_ok = false;  // generic hom(dim,dim) == 1, checked independently
};

struct CanonicalDecomposition {
    std::vector<CanonicalPart> parts;  // sorted lexicographically by dim
    bool stable = false;               // same multiset for every seed
    std::vector<std::string> notes;
};

struct CanonicalOptions {
    long long sample_bound = 1000;  // small enough for fast exact arithmetic,
                                    // large enough that degenerate samples are rare
    DecomposeOptions decompose;
    GenericHomExtOptions schur_check;
};

namespace detail {

// A summand that is indecomposable over Q but has commutative endomorphism
// field K of degree d splits over the algebraic closure into d conjugate
// summands of equal dimension vector dim/d.
inline bool field_refinement(const Representation& u, long long endo_dim, IntVec& part, int& copies,
                             std::string& note) {
    const auto basis = endomorphism_basis(u);
    if (static_cast<long long>(basis.size()) != endo_dim) return false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            for (std::size_t x = 0; x < basis[i].size(); ++x) {
                if (basis[i][x] * basis[j][x] != basis[j][x] * basis[i][x]) {
                    note = "noncommutative endomorphism algebra";
                    return false;
                }
            }
        }
    }
    // generic element: small deterministic combination
    std::vector<RationalMatrix> psi = basis[0];
    for (std::size_t k = 1; k < basis.size(); ++k) {
        for (std::size_t x = 0; x < psi.size(); ++x) {
            psi[x] = psi[x] + basis[k][x].scaled(Rational(static_cast<long long>(2 * k + 1)));
        }
    }
    UniPoly cp = UniPoly::constant(Rational(1));
    for (std::size_t x = 0; x < psi.size(); ++x) {
        if (psi[x].rows() > 0) cp = cp * char_poly(psi[x]);
    }
    UniPoly radical = cp.divmod(poly_gcd(cp, cp.derivative())).first;
    for (std::size_t x = 0; x < psi.size(); ++x) {
        if (psi[x].rows() == 0) continue;
        RationalMatrix z = eval_at_matrix(radical, psi[x]);
        for (int i = 0; i < z.rows(); ++i) {
            for (int j = 0; j < z.cols(); ++j) {
                if (z(i, j) != 0) {
                    note = "endomorphism algebra has nilpotents";
                    return false;
                }
            }
        }
    }
    const auto factors = factor_rational(radical);
    if (factors.size() != 1 || factors[0].first.degree() != static_cast<int>(endo_dim)) {
        note = "endomorphism algebra is not a field of full degree";
        return false;
    }
    const int d = factors[0].first.degree();
    part.assign(u.dim().size(), 0);
    for (std::size_t x = 0; x < u.dim().size(); ++x) {
        if (u.dim()[x] % d != 0) {
            note = "dimension vector not divisible by field degree";
            return false;
        }
        part[x] = u.dim()[x] / d;
    }
    copies = d;
    return true;
}

}  // namespace detail

// Decompose random representations for each seed; the multiset of summand
// dimension vectors must agree across all seeds, otherwise the result is
// flagged unstable. Each part is independently checked to be a Schur root.
inline CanonicalDecomposition canonical_decomposition(const QuiverPtr& quiver, const IntVec& alpha,
                                                      const std::vector<std::uint64_t>& seeds,
                                                      const CanonicalOptions& opts = {}) {
    check_sized(*quiver, alpha, "dimension vector");
    if (seeds.empty()) throw PreconditionError("at least one seed required");
    CanonicalDecomposition result;

    std::vector<std::map<IntVec, int>> multisets;
    for (std::uint64_t seed : seeds) {
        Representation v = random_representation(quiver, alpha, derive_seed(seed, {0xca0}), opts.sample_bound);
        Decomposition dec = decompose(v, derive_seed(seed, {0xca1}), opts.decompose);
        std::map<IntVec, int> ms;
        for (const auto& s : dec.summands) {
            if (s.schur_certified) {
                ++ms[s.rep.dim()];
                continue;
            }
            IntVec part;
            int copies = 0;
            std::string note;
            if (detail::field_refinement(s.rep, s.endo_dim, part, copies, note)) {
                ms[part] += copies;
            } else {
                ++ms[s.rep.dim()];
                result.notes.push_back("summand " + format_int_vector(s.rep.dim()) +
                                       " left unrefined: " + note);
            }
        }
        multisets.push_back(std::move(ms));
    }
    result.stable = true;
    for (std::size_t i = 1; i < multisets.size(); ++i) {
        if (multisets[i] != multisets[0]) {
            result.stable = false;
            result.notes.push_back("seed " + std::to_string(i) + " produced a different summand multiset");
        }
    }
    for (const auto& [dim, count] : multisets[0]) {
        CanonicalPart part;
        part.dim = dim;
        part.multiplicity = count;
        part.cls = classify_root(*quiver, dim);
        part.schur_ok = generic_end_dim(*quiver, dim, derive_seed(seeds[0], {0xca2}), opts.schur_check) == 1;
        result.parts.push_back(std::move(part));
    }
    return result;
}

// --- the multiple rule --------------------------------------------------------------

struct MultipleRuleReport {
    bool pass = false;
    bool stable = true;
    std::vector<CanonicalPart> base_parts;
    std::vector<CanonicalPart> multiple_parts;
    std::string detail;
};

// Checks that the canonical decomposition of m*alpha is obtained from that of
// alpha part by part: real and isotropic parts repeat m times, imaginary
// parts scale by m.
inline MultipleRuleReport verify_multiple_rule(const QuiverPtr& quiver, const IntVec& alpha, long long m,
                                               const std::vector<std::uint64_t>& seeds,
                                               const CanonicalOptions& opts = {}) {
    if (m < 1) throw PreconditionError("multiple must be >= 1");
    MultipleRuleReport report;
    CanonicalDecomposition base = canonical_decomposition(quiver, alpha, seeds, opts);
    IntVec scaled(alpha);
    for (auto& v : scaled) v *= m;
    CanonicalDecomposition mult = canonical_decomposition(quiver, scaled, seeds, opts);
    report.base_parts = base.parts;
    report.multiple_parts = mult.parts;
    report.stable = base.stable && mult.stable;
    if (!report.stable) {
        report.detail = "decomposition unstable across seeds";
        return report;
    }
    std::map<IntVec, int> expected;
    for (const auto& part : base.parts) {
        if (part.cls == RootClass::Imaginary) {
            IntVec big(part.dim);
            for (auto& v : big) v *= m;
            expected[big] += part.multiplicity;
        } else {
            expected[part.dim] += static_cast<int>(m) * part.multiplicity;
        }
    }
    std::map<IntVec, int> actual;
    for (const auto& part : mult.parts) actual[part.dim] += part.multiplicity;
    report.pass = (expected == actual);
    if (!report.pass) {
        report.detail = "expected and computed decompositions of the multiple differ";
    } else {
        for (const auto& part : base.parts) {
            if (!part.schur_ok) {
                report.pass = false;
                report.detail = "part " + format_int_vector(part.dim) + " failed the Schur check";
            }
        }
    }
    return report;
}

}  // namespace qinv
