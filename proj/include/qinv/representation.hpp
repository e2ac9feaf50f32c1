#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qinv/polynomial.hpp"
#include "qinv/quiver.hpp"

namespace qinv {

using QuiverPtr = std::shared_ptr<const Quiver>;

// One exact rational matrix per arrow; the matrix for an arrow a has shape
// dim(head) x dim(tail).
class Representation {
public:
    Representation(QuiverPtr quiver, IntVec dim, std::vector<RationalMatrix> mats)
        : quiver_(std::move(quiver)), dim_(std::move(dim)), mats_(std::move(mats)) {
        check_sized(*quiver_, dim_, "dimension vector");
        for (long long d : dim_) {
            if (d < 0) throw PreconditionError("negative entry in dimension vector");
        }
        if (static_cast<int>(mats_.size()) != quiver_->arrow_count()) {
            throw PreconditionError("expected one matrix per arrow");
        }
        for (int a = 0; a < quiver_->arrow_count(); ++a) {
            const Arrow& ar = quiver_->arrow(a);
            const auto& m = mats_[static_cast<std::size_t>(a)];
            if (m.rows() != dim_at(ar.head) || m.cols() != dim_at(ar.tail)) {
                throw PreconditionError("matrix for arrow '" + ar.name + "' has the wrong shape");
            }
        }
    }

    static Representation zero(QuiverPtr quiver, IntVec dim) {
        std::vector<RationalMatrix> mats;
        for (int a = 0; a < quiver->arrow_count(); ++a) {
            const Arrow& ar = quiver->arrow(a);
            mats.emplace_back(static_cast<int>(dim[static_cast<std::size_t>(ar.head)]),
                              static_cast<int>(dim[static_cast<std::size_t>(ar.tail)]));
        }
        return Representation(std::move(quiver), std::move(dim), std::move(mats));
    }

    const Quiver& quiver() const { return *quiver_; }
    const QuiverPtr& quiver_ptr() const { return quiver_; }
    const IntVec& dim() const { return dim_; }
    int dim_at(int x) const { return static_cast<int>(dim_[static_cast<std::size_t>(x)]); }
    const RationalMatrix& matrix(int a) const { return mats_[static_cast<std::size_t>(a)]; }
    const std::vector<RationalMatrix>& matrices() const { return mats_; }

    long long total_dim() const {
        long long t = 0;
        for (long long d : dim_) t += d;
        return t;
    }
    bool is_zero_dimensional() const { return total_dim() == 0; }

    bool operator==(const Representation& o) const { return dim_ == o.dim_ && mats_ == o.mats_; }

private:
    QuiverPtr quiver_;
    IntVec dim_;
    std::vector<RationalMatrix> mats_;
};

inline void check_same_quiver(const Representation& v, const Representation& w) {
    if (v.quiver_ptr() != w.quiver_ptr() && !v.quiver().same_shape(w.quiver())) {
        throw PreconditionError("representations live over different quivers");
    }
}

// Entries drawn uniformly from the integers in [-bound, bound]; deterministic
// for a fixed seed.
inline Representation random_representation(QuiverPtr quiver, const IntVec& alpha, std::uint64_t seed,
                                            long long bound) {
    check_sized(*quiver, alpha, "dimension vector");
    for (long long d : alpha) {
        if (d < 0) throw PreconditionError("negative entry in dimension vector");
    }
    if (bound < 0) throw PreconditionError("negative entry bound");
    Rng rng(derive_seed(seed, {0x7e9}));
    std::vector<RationalMatrix> mats;
    for (int a = 0; a < quiver->arrow_count(); ++a) {
        const Arrow& ar = quiver->arrow(a);
        RationalMatrix m(static_cast<int>(alpha[static_cast<std::size_t>(ar.head)]),
                         static_cast<int>(alpha[static_cast<std::size_t>(ar.tail)]));
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) m(i, j) = Rational(rng.uniform(-bound, bound));
        }
        mats.push_back(std::move(m));
    }
    return Representation(std::move(quiver), alpha, std::move(mats));
}

inline Representation direct_sum(const Representation& v, const Representation& w) {
    check_same_quiver(v, w);
    const Quiver& q = v.quiver();
    IntVec dim(v.dim());
    for (std::size_t i = 0; i < dim.size(); ++i) dim[i] += w.dim()[i];
    std::vector<RationalMatrix> mats;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        RationalMatrix m(static_cast<int>(dim[static_cast<std::size_t>(ar.head)]),
                         static_cast<int>(dim[static_cast<std::size_t>(ar.tail)]));
        const auto& mv = v.matrix(a);
        const auto& mw = w.matrix(a);
        for (int i = 0; i < mv.rows(); ++i) {
            for (int j = 0; j < mv.cols(); ++j) m(i, j) = mv(i, j);
        }
        for (int i = 0; i < mw.rows(); ++i) {
            for (int j = 0; j < mw.cols(); ++j) m(mv.rows() + i, mv.cols() + j) = mw(i, j);
        }
        mats.push_back(std::move(m));
    }
    return Representation(v.quiver_ptr(), std::move(dim), std::move(mats));
}

// --- the interaction matrix --------------------------------------------------
//
// d maps  (+)_x Hom(V(x), W(x))  to  (+)_a Hom(V(ta), W(ha)),
//        (phi(x))_x |-> (phi(ha) V(a) - W(a) phi(ta))_a.
//
// Basis order is frozen: vertex blocks in declaration order, then arrow blocks
// in declaration order; inside a block Hom(A, B) is indexed row-major as a
// dim(B) x dim(A) matrix. Witnesses and certificates serialize against this
// order.

namespace detail {

inline std::vector<int> hom_block_offsets(const Quiver& q, const IntVec& a, const IntVec& b) {
    std::vector<int> base(static_cast<std::size_t>(q.vertex_count()) + 1, 0);
    for (int x = 0; x < q.vertex_count(); ++x) {
        base[static_cast<std::size_t>(x) + 1] =
            base[static_cast<std::size_t>(x)] +
            static_cast<int>(a[static_cast<std::size_t>(x)] * b[static_cast<std::size_t>(x)]);
    }
    return base;
}

inline std::vector<int> arrow_block_offsets(const Quiver& q, const IntVec& a, const IntVec& b) {
    std::vector<int> base(static_cast<std::size_t>(q.arrow_count()) + 1, 0);
    for (int i = 0; i < q.arrow_count(); ++i) {
        const Arrow& ar = q.arrow(i);
        base[static_cast<std::size_t>(i) + 1] =
            base[static_cast<std::size_t>(i)] +
            static_cast<int>(a[static_cast<std::size_t>(ar.tail)] * b[static_cast<std::size_t>(ar.head)]);
    }
    return base;
}

}  // namespace detail

inline RationalMatrix interaction_matrix(const Representation& v, const Representation& w) {
    check_same_quiver(v, w);
    const Quiver& q = v.quiver();
    const IntVec& a = v.dim();
    const IntVec& b = w.dim();
    const auto col_base = detail::hom_block_offsets(q, a, b);
    const auto row_base = detail::arrow_block_offsets(q, a, b);
    RationalMatrix m(row_base.back(), col_base.back());
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const Arrow& ar = q.arrow(ai);
        const int at = static_cast<int>(a[static_cast<std::size_t>(ar.tail)]);
        const int ah = static_cast<int>(a[static_cast<std::size_t>(ar.head)]);
        const int bt = static_cast<int>(b[static_cast<std::size_t>(ar.tail)]);
        const int bh = static_cast<int>(b[static_cast<std::size_t>(ar.head)]);
        const int rb = row_base[static_cast<std::size_t>(ai)];
        // + phi(head) V(a): coefficient of phi(head)(i,k) in output (i,j) is V(a)(k,j)
        for (int i = 0; i < bh; ++i) {
            for (int j = 0; j < at; ++j) {
                for (int k = 0; k < ah; ++k) {
                    m(rb + i * at + j, col_base[static_cast<std::size_t>(ar.head)] + i * ah + k) +=
                        v.matrix(ai)(k, j);
                }
            }
        }
        // - W(a) phi(tail): coefficient of phi(tail)(k,j) in output (i,j) is -W(a)(i,k)
        for (int i = 0; i < bh; ++i) {
            for (int j = 0; j < at; ++j) {
                for (int k = 0; k < bt; ++k) {
                    m(rb + i * at + j, col_base[static_cast<std::size_t>(ar.tail)] + k * at + j) -=
                        w.matrix(ai)(i, k);
                }
            }
        }
    }
    return m;
}

struct HomExt {
    long long hom = 0;
    long long ext = 0;
    bool operator==(const HomExt& o) const { return hom == o.hom && ext == o.ext; }
};

// hom = dim ker d, ext = dim coker d; hom - ext = <dim V, dim W> exactly.
inline HomExt hom_ext(const Representation& v, const Representation& w) {
    RationalMatrix d = interaction_matrix(v, w);
    const int r = rank_of(d);
    return {d.cols() - r, d.rows() - r};
}

// Schofield semi-invariant value c(V,W) = det d^V_W; requires <dim V,dim W> = 0.
// The empty 0x0 determinant is 1, so disjointly supported pairs are orthogonal.
inline Rational schofield_eval(const Representation& v, const Representation& w) {
    const long long pairing = euler_form(v.quiver(), v.dim(), w.dim());
    if (pairing != 0) {
        throw PreconditionError("Euler product is " + std::to_string(pairing) + ", not 0");
    }
    return determinant(interaction_matrix(v, w));
}

// --- symbolic interaction matrix ---------------------------------------------
//
// d^V_W with one indeterminate per entry of V; its determinant vanishes
// identically iff c(.,W) is zero on every alpha-dimensional representation.

struct SymbolicInteraction {
    PolyMatrix matrix;
    VarContext vars;
    IntVec alpha;
    std::vector<int> var_base;  // per arrow, start of its row-major variable block

    int size() const { return matrix.rows(); }

    // materialize a concrete representation from values of the variables
    Representation instantiate(const QuiverPtr& quiver, const std::vector<Rational>& point) const {
        std::vector<RationalMatrix> mats;
        for (int a = 0; a < quiver->arrow_count(); ++a) {
            const Arrow& ar = quiver->arrow(a);
            const int rows = static_cast<int>(alpha[static_cast<std::size_t>(ar.head)]);
            const int cols = static_cast<int>(alpha[static_cast<std::size_t>(ar.tail)]);
            RationalMatrix m(rows, cols);
            for (int k = 0; k < rows; ++k) {
                for (int j = 0; j < cols; ++j) {
                    m(k, j) = point[static_cast<std::size_t>(var_base[static_cast<std::size_t>(a)] + k * cols + j)];
                }
            }
            mats.push_back(std::move(m));
        }
        return Representation(quiver, alpha, std::move(mats));
    }
};

inline SymbolicInteraction symbolic_interaction_matrix(const IntVec& alpha, const Representation& w) {
    const Quiver& q = w.quiver();
    check_sized(q, alpha, "dimension vector");
    const IntVec& b = w.dim();

    std::vector<int> var_base(static_cast<std::size_t>(q.arrow_count()) + 1, 0);
    std::vector<std::string> names;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const int rows = static_cast<int>(alpha[static_cast<std::size_t>(ar.head)]);
        const int cols = static_cast<int>(alpha[static_cast<std::size_t>(ar.tail)]);
        var_base[static_cast<std::size_t>(a) + 1] = var_base[static_cast<std::size_t>(a)] + rows * cols;
        for (int k = 0; k < rows; ++k) {
            for (int j = 0; j < cols; ++j) {
                names.push_back("v_" + ar.name + "_" + std::to_string(k) + "_" + std::to_string(j));
            }
        }
    }
    VarContext ctx = make_var_context(std::move(names));

    const auto col_base = detail::hom_block_offsets(q, alpha, b);
    const auto row_base = detail::arrow_block_offsets(q, alpha, b);
    PolyMatrix m(row_base.back(), col_base.back(),
                 std::vector<SparsePolynomial>(
                     static_cast<std::size_t>(row_base.back()) * static_cast<std::size_t>(col_base.back()),
                     SparsePolynomial(ctx)));
    for (int ai = 0; ai < q.arrow_count(); ++ai) {
        const Arrow& ar = q.arrow(ai);
        const int at = static_cast<int>(alpha[static_cast<std::size_t>(ar.tail)]);
        const int ah = static_cast<int>(alpha[static_cast<std::size_t>(ar.head)]);
        const int bt = static_cast<int>(b[static_cast<std::size_t>(ar.tail)]);
        const int bh = static_cast<int>(b[static_cast<std::size_t>(ar.head)]);
        const int rb = row_base[static_cast<std::size_t>(ai)];
        for (int i = 0; i < bh; ++i) {
            for (int j = 0; j < at; ++j) {
                const int row = rb + i * at + j;
                for (int k = 0; k < ah; ++k) {
                    const std::size_t var =
                        static_cast<std::size_t>(var_base[static_cast<std::size_t>(ai)] + k * at + j);
                    const int col = col_base[static_cast<std::size_t>(ar.head)] + i * ah + k;
                    m(row, col) = m(row, col) + SparsePolynomial::variable(ctx, var);
                }
                for (int k = 0; k < bt; ++k) {
                    const int col = col_base[static_cast<std::size_t>(ar.tail)] + k * at + j;
                    m(row, col) = m(row, col) - SparsePolynomial::constant(ctx, w.matrix(ai)(i, k));
                }
            }
        }
    }
    return {std::move(m), std::move(ctx), alpha, std::move(var_base)};
}

// --- functional determinant ---------------------------------------------------

inline bool is_generalized_kronecker(const Quiver& q, int* source = nullptr, int* sink = nullptr) {
    if (q.vertex_count() != 2 || q.arrow_count() < 1) return false;
    const int t = q.arrow(0).tail, h = q.arrow(0).head;
    for (const auto& a : q.arrows()) {
        if (a.tail != t || a.head != h) return false;
    }
    if (source) *source = t;
    if (sink) *sink = h;
    return true;
}

// det(sum_i t_i W(a_i)) as an exact polynomial in t_1..t_m.
inline SparsePolynomial functional_determinant(const Representation& w, int symbolic_limit = 64) {
    int src = 0, dst = 0;
    if (!is_generalized_kronecker(w.quiver(), &src, &dst)) {
        throw PreconditionError("functional determinant requires a generalized Kronecker quiver");
    }
    if (w.dim_at(src) != w.dim_at(dst)) {
        throw PreconditionError("functional determinant requires equal dimensions at both vertices");
    }
    const int n = w.dim_at(src);
    const int m = w.quiver().arrow_count();
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back("t" + std::to_string(i));
    VarContext ctx = make_var_context(std::move(names));
    PolyMatrix pm(n, n, std::vector<SparsePolynomial>(static_cast<std::size_t>(n) * n, SparsePolynomial(ctx)));
    for (int a = 0; a < m; ++a) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const Rational& c = w.matrix(a)(i, j);
                if (c != 0) {
                    pm(i, j) = pm(i, j) + SparsePolynomial::variable(ctx, static_cast<std::size_t>(a), c);
                }
            }
        }
    }
    return symbolic_determinant(pm, symbolic_limit);
}

// --- simple summand test -------------------------------------------------------

// S_x splits off V iff the joint kernel of the arrows leaving x is not
// contained in the sum of the images of the arrows entering x.
inline bool has_simple_summand(const Representation& v, int x) {
    if (x < 0 || x >= v.quiver().vertex_count()) throw PreconditionError("unknown vertex");
    const int d = v.dim_at(x);
    if (d == 0) return false;

    int out_rows = 0;
    for (int a : v.quiver().out_arrows(x)) out_rows += v.matrix(a).rows();
    RationalMatrix stacked(out_rows, d);
    int r = 0;
    for (int a : v.quiver().out_arrows(x)) {
        const auto& m = v.matrix(a);
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < d; ++j) stacked(r + i, j) = m(i, j);
        }
        r += m.rows();
    }
    const auto kernel = row_reduce(stacked).kernel;  // whole space when no outgoing arrows
    if (kernel.empty()) return false;

    int in_cols = 0;
    for (int a : v.quiver().in_arrows(x)) in_cols += v.matrix(a).cols();
    RationalMatrix images(d, in_cols);
    int c = 0;
    for (int a : v.quiver().in_arrows(x)) {
        const auto& m = v.matrix(a);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < m.cols(); ++j) images(i, c + j) = m(i, j);
        }
        c += m.cols();
    }
    const int image_rank = rank_of(images);
    for (const auto& k : kernel) {
        RationalMatrix ext(d, in_cols + 1);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < in_cols; ++j) ext(i, j) = images(i, j);
            ext(i, in_cols) = k[static_cast<std::size_t>(i)];
        }
        if (rank_of(ext) > image_rank) return true;  // kernel vector outside the image
    }
    return false;
}

// --- support restriction and embedding ----------------------------------------

struct RestrictedRepresentation {
    Representation rep;
    SupportRestriction support;
};

inline RestrictedRepresentation restrict_to_support(const Representation& w) {
    SupportRestriction sr = support_restrict(w.quiver(), w.dim());
    auto sub = std::make_shared<const Quiver>(sr.quiver);
    IntVec dim;
    for (int orig : sr.vertex_map) dim.push_back(w.dim()[static_cast<std::size_t>(orig)]);
    std::vector<RationalMatrix> mats;
    for (int orig : sr.arrow_map) mats.push_back(w.matrix(orig));
    return {Representation(sub, std::move(dim), std::move(mats)), std::move(sr)};
}

// View a representation of a full subquiver as a representation of the whole
// quiver, zero outside the subquiver.
inline Representation embed_from_support(const Representation& v, const QuiverPtr& whole,
                                         const SupportRestriction& sr) {
    IntVec dim(static_cast<std::size_t>(whole->vertex_count()), 0);
    for (std::size_t i = 0; i < sr.vertex_map.size(); ++i) {
        dim[static_cast<std::size_t>(sr.vertex_map[i])] = v.dim()[i];
    }
    std::vector<RationalMatrix> mats;
    std::vector<int> sub_arrow(static_cast<std::size_t>(whole->arrow_count()), -1);
    for (std::size_t i = 0; i < sr.arrow_map.size(); ++i) {
        sub_arrow[static_cast<std::size_t>(sr.arrow_map[i])] = static_cast<int>(i);
    }
    for (int a = 0; a < whole->arrow_count(); ++a) {
        if (sub_arrow[static_cast<std::size_t>(a)] >= 0) {
            mats.push_back(v.matrix(sub_arrow[static_cast<std::size_t>(a)]));
        } else {
            const Arrow& ar = whole->arrow(a);
            mats.emplace_back(static_cast<int>(dim[static_cast<std::size_t>(ar.head)]),
                              static_cast<int>(dim[static_cast<std::size_t>(ar.tail)]));
        }
    }
    return Representation(whole, std::move(dim), std::move(mats));
}

// --- base change ----------------------------------------------------------------

// Random unimodular matrix (product of unit triangular factors), exact inverse.
inline RationalMatrix random_unimodular(int n, Rng& rng, long long bound = 3) {
    RationalMatrix upper = RationalMatrix::identity(n);
    RationalMatrix lower = RationalMatrix::identity(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            upper(i, j) = Rational(rng.uniform(-bound, bound));
            lower(j, i) = Rational(rng.uniform(-bound, bound));
        }
    }
    return lower * upper;
}

// (g . W)(a) = g(head) W(a) g(tail)^{-1}
inline Representation conjugate(const Representation& w, const std::vector<RationalMatrix>& g) {
    const Quiver& q = w.quiver();
    if (static_cast<int>(g.size()) != q.vertex_count()) {
        throw PreconditionError("need one base-change matrix per vertex");
    }
    std::vector<RationalMatrix> inv;
    for (const auto& m : g) {
        auto i = inverse(m);
        if (!i) throw PreconditionError("base change is singular");
        inv.push_back(std::move(*i));
    }
    std::vector<RationalMatrix> mats;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        mats.push_back(g[static_cast<std::size_t>(ar.head)] * w.matrix(a) *
                       inv[static_cast<std::size_t>(ar.tail)]);
    }
    return Representation(w.quiver_ptr(), w.dim(), std::move(mats));
}

// --- file format -----------------------------------------------------------------
//
//   rep QUIVERFILE dim d1,...,dn
//   m ARROWNAME
//   <dim(head) rows of dim(tail) rationals>
//
// Arrows with an empty matrix may be omitted.

inline Representation parse_representation(const std::string& text, const QuiverPtr& quiver) {
    const auto lines = split_on(text, '\n');
    std::size_t i = 0;
    int line_no = 0;
    auto next_tokens = [&]() -> std::vector<std::string> {
        while (i < lines.size()) {
            std::string line = lines[i];
            const auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            ++i;
            ++line_no;
            auto tokens = split_ws(line);
            if (!tokens.empty()) return tokens;
        }
        return {};
    };
    auto header = next_tokens();
    if (header.size() != 4 || header[0] != "rep" || header[2] != "dim") {
        throw ParseError("expected header 'rep QUIVERFILE dim d1,...,dn'", line_no);
    }
    IntVec dim = parse_int_vector(header[3]);
    check_sized(*quiver, dim, "dimension vector");

    std::vector<RationalMatrix> mats;
    std::vector<bool> given(static_cast<std::size_t>(quiver->arrow_count()), false);
    for (int a = 0; a < quiver->arrow_count(); ++a) {
        const Arrow& ar = quiver->arrow(a);
        mats.emplace_back(static_cast<int>(dim[static_cast<std::size_t>(ar.head)]),
                          static_cast<int>(dim[static_cast<std::size_t>(ar.tail)]));
    }
    for (auto tokens = next_tokens(); !tokens.empty(); tokens = next_tokens()) {
        if (tokens.size() != 2 || tokens[0] != "m") throw ParseError("expected 'm ARROWNAME'", line_no);
        const int a = quiver->arrow_index(tokens[1]);
        if (given[static_cast<std::size_t>(a)]) {
            throw ParseError("matrix for arrow '" + tokens[1] + "' given twice", line_no);
        }
        given[static_cast<std::size_t>(a)] = true;
        auto& m = mats[static_cast<std::size_t>(a)];
        for (int r = 0; r < m.rows(); ++r) {
            auto row = next_tokens();
            if (static_cast<int>(row.size()) != m.cols()) {
                throw ParseError("expected " + std::to_string(m.cols()) + " entries for arrow '" +
                                     tokens[1] + "'",
                                 line_no);
            }
            for (int c = 0; c < m.cols(); ++c) m(r, c) = parse_rational(row[static_cast<std::size_t>(c)]);
        }
    }
    return Representation(quiver, std::move(dim), std::move(mats));
}

inline std::string format_representation(const Representation& v, const std::string& quiver_label = "-") {
    std::string out = "rep " + quiver_label + " dim ";
    out += format_int_vector(v.dim());
    out += "\n";
    for (int a = 0; a < v.quiver().arrow_count(); ++a) {
        const auto& m = v.matrix(a);
        if (m.rows() == 0 || m.cols() == 0) continue;
        out += "m " + v.quiver().arrow(a).name + "\n";
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) {
                if (j) out += " ";
                out += format_rational(m(i, j));
            }
            out += "\n";
        }
    }
    return out;
}

}  // namespace qinv
