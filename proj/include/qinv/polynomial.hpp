#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qinv/matrix.hpp"

namespace qinv {

// Shared ordered variable list for a family of polynomials.
using VarContext = std::shared_ptr<const std::vector<std::string>>;

inline VarContext make_var_context(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

// Multivariate polynomial with rational coefficients, stored sparsely as a
// map from exponent vectors to nonzero coefficients.
class SparsePolynomial {
public:
    using Exponents = std::vector<std::uint32_t>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(VarContext vars) : vars_(std::move(vars)) {}

    static SparsePolynomial constant(VarContext vars, const Rational& v) {
        SparsePolynomial p(std::move(vars));
        if (v != 0) p.terms_[Exponents(p.var_count())] = v;
        return p;
    }
    static SparsePolynomial variable(VarContext vars, std::size_t index, const Rational& coeff = Rational(1)) {
        SparsePolynomial p(std::move(vars));
        if (coeff != 0) {
            Exponents e(p.var_count());
            e[index] = 1;
            p.terms_[std::move(e)] = coeff;
        }
        return p;
    }

    const VarContext& vars() const { return vars_; }
    std::size_t var_count() const { return vars_ ? vars_->size() : 0; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto x : e) s += static_cast<int>(x);
            if (s > d) d = s;
        }
        return d;
    }

    bool operator==(const SparsePolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }

    SparsePolynomial operator+(const SparsePolynomial& o) const {
        check_compatible(o);
        SparsePolynomial r = *this;
        if (!r.vars_) r.vars_ = o.vars_;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    SparsePolynomial operator-(const SparsePolynomial& o) const {
        check_compatible(o);
        SparsePolynomial r = *this;
        if (!r.vars_) r.vars_ = o.vars_;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    SparsePolynomial operator*(const SparsePolynomial& o) const {
        check_compatible(o);
        SparsePolynomial r(vars_ ? vars_ : o.vars_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                Exponents e(e1.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        }
        return r;
    }
    SparsePolynomial scaled(const Rational& v) const {
        SparsePolynomial r(vars_);
        if (v == 0) return r;
        r.terms_ = terms_;
        for (auto& [e, c] : r.terms_) c *= v;
        return r;
    }
    SparsePolynomial negated() const { return scaled(Rational(-1)); }

    Rational eval(const std::vector<Rational>& point) const {
        if (point.size() != var_count()) throw PreconditionError("evaluation point has wrong length");
        Rational total;
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                for (std::uint32_t k = 0; k < e[i]; ++k) term *= point[i];
            }
            total += term;
        }
        return total;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        // highest-degree-first reads better for small polynomials
        std::vector<const std::pair<const Exponents, Rational>*> ordered;
        for (const auto& t : terms_) ordered.push_back(&t);
        std::sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) { return a->first > b->first; });
        std::string out;
        for (auto* t : ordered) {
            const auto& [e, c] = *t;
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += (*vars_)[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += format_rational(mag);
            } else {
                if (mag != 1) out += format_rational(mag) + "*";
                out += mono;
            }
        }
        return out;
    }

private:
    void check_compatible(const SparsePolynomial& o) const {
        if (vars_ && o.vars_ && vars_ != o.vars_ && *vars_ != *o.vars_) {
            throw PreconditionError("polynomials over different variable lists");
        }
    }
    void add_term(const Exponents& e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    VarContext vars_;
    std::map<Exponents, Rational> terms_;
};

using PolyMatrix = Matrix<SparsePolynomial>;

inline constexpr int kDefaultSymbolicLimit = 12;

// Exact determinant of a polynomial matrix by Laplace expansion with
// memoization over row subsets (division-free, prunes vanishing minors).
// An identically-zero result is a proof that the determinant vanishes on
// every point of the base field.
inline SparsePolynomial symbolic_determinant(const PolyMatrix& m, int limit = kDefaultSymbolicLimit) {
    if (m.rows() != m.cols()) throw PreconditionError("symbolic determinant of non-square matrix");
    const int n = m.rows();
    if (n > limit) throw PreconditionError("symbolic limit exceeded");

    VarContext vars;
    for (int i = 0; i < n && !vars; ++i) {
        for (int j = 0; j < n && !vars; ++j) {
            if (m(i, j).vars()) vars = m(i, j).vars();
        }
    }
    if (n == 0) return SparsePolynomial::constant(vars, Rational(1));

    // visit sparser columns first so dead minors die early
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) order[static_cast<std::size_t>(j)] = j;
    std::vector<int> nnz(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (!m(i, j).is_zero()) ++nnz[static_cast<std::size_t>(j)];
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return nnz[static_cast<std::size_t>(a)] < nnz[static_cast<std::size_t>(b)]; });
    // determinant changes sign with the column permutation parity
    bool order_negative = false;
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int start = 0; start < n; ++start) {
            if (seen[static_cast<std::size_t>(start)]) continue;
            int len = 0, cur = start;
            while (!seen[static_cast<std::size_t>(cur)]) {
                seen[static_cast<std::size_t>(cur)] = 1;
                cur = order[static_cast<std::size_t>(cur)];
                ++len;
            }
            if (len % 2 == 0) order_negative = !order_negative;
        }
    }

    std::map<std::uint32_t, SparsePolynomial> level;
    level[0] = SparsePolynomial::constant(vars, Rational(1));
    for (int k = 0; k < n; ++k) {
        const int col = order[static_cast<std::size_t>(k)];
        std::map<std::uint32_t, SparsePolynomial> next;
        for (const auto& [mask, minor] : level) {
            for (int r = 0; r < n; ++r) {
                const std::uint32_t bit = 1u << r;
                if (mask & bit) continue;
                const SparsePolynomial& entry = m(r, col);
                if (entry.is_zero()) continue;
                const int below = __builtin_popcount(mask & (bit - 1));
                // expansion along column k+1 of the submatrix: sign is
                // (-1)^((k+1) + position of r among the chosen rows)
                const bool negative = ((k + 1) + (below + 1)) % 2 != 0;
                SparsePolynomial term = minor * entry;
                if (negative) term = term.negated();
                auto it = next.find(mask | bit);
                if (it == next.end()) {
                    next.emplace(mask | bit, std::move(term));
                } else {
                    it->second = it->second + term;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        }
        level = std::move(next);
        if (level.empty()) return SparsePolynomial(vars);  // every minor vanished
    }
    return order_negative ? level.begin()->second.negated() : level.begin()->second;
}

}  // namespace qinv
