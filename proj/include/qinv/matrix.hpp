#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qinv/unipoly.hpp"

namespace qinv {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
    Matrix(int rows, int cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != static_cast<std::size_t>(rows_) * cols_) {
            throw PreconditionError("matrix entry count does not match shape");
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        }
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw PreconditionError("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix sum shape mismatch");
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix difference shape mismatch");
        Matrix r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    Matrix scaled(const T& v) const {
        Matrix r = *this;
        for (auto& x : r.data_) x *= v;
        return r;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

// Scale each row to integers; div[i] collects the applied factor so that
// original_row_i = integer_row_i / div[i].
inline IntegerMatrix clear_denominators(const RationalMatrix& m, std::vector<Integer>& div) {
    IntegerMatrix out(m.rows(), m.cols());
    div.assign(static_cast<std::size_t>(m.rows()), Integer(1));
    for (int i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (int j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator_of(m(i, j)));
        div[static_cast<std::size_t>(i)] = l;
        for (int j = 0; j < m.cols(); ++j) {
            out(i, j) = numerator_of(m(i, j)) * (l / denominator_of(m(i, j)));
        }
    }
    return out;
}

// Fraction-free (Bareiss) elimination on an integer matrix. Intermediate
// entries are minors of the input, which keeps growth bounded without any
// rational reductions. Returns the rank; when `det` is non-null and the
// matrix is square, also the exact determinant.
inline int bareiss(IntegerMatrix m, Integer* det) {
    const int rows = m.rows(), cols = m.cols();
    Integer prev = 1;
    int sign = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
            sign = -sign;
        }
        const Integer p = m(rank, col);
        for (int i = rank + 1; i < rows; ++i) {
            const Integer head = m(i, col);
            for (int j = col + 1; j < cols; ++j) {
                m(i, j) = (m(i, j) * p - head * m(rank, j)) / prev;
            }
            m(i, col) = 0;
        }
        prev = p;
        ++rank;
    }
    if (det) {
        if (rows != cols) throw PreconditionError("determinant of non-square matrix");
        if (rank < rows) {
            *det = 0;
        } else {
            *det = sign > 0 ? prev : -prev;
        }
    }
    return rank;
}

inline int rank_of(const RationalMatrix& m) {
    if (m.empty()) return 0;
    std::vector<Integer> div;
    IntegerMatrix im = clear_denominators(m, div);
    return bareiss(std::move(im), nullptr);
}

// Exact determinant; the empty 0x0 matrix has determinant 1.
inline Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant of non-square matrix");
    if (m.rows() == 0) return Rational(1);
    std::vector<Integer> div;
    IntegerMatrix im = clear_denominators(m, div);
    Integer d;
    bareiss(std::move(im), &d);
    Integer scale = 1;
    for (const auto& s : div) scale *= s;
    return Rational(d, scale);
}

struct RowReduceResult {
    int rank = 0;
    // Kernel basis, one column vector per free column of the input (the
    // standard basis read off the reduced row echelon form).
    std::vector<std::vector<Rational>> kernel;
    // Columns of the input at the pivot positions; they span the column space.
    std::vector<std::vector<Rational>> image;
    std::vector<int> pivot_columns;
    RationalMatrix rref;
};

inline RowReduceResult row_reduce(const RationalMatrix& input) {
    RowReduceResult res;
    RationalMatrix m = input;
    const int rows = m.rows(), cols = m.cols();
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (m(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
        }
        const Rational p = m(r, col);
        for (int j = col; j < cols; ++j) m(r, j) /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, col) == 0) continue;
            const Rational f = m(i, col);
            for (int j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        res.pivot_columns.push_back(col);
        ++r;
    }
    res.rank = r;
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : res.pivot_columns) is_pivot[static_cast<std::size_t>(c)] = true;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(cols));
        v[static_cast<std::size_t>(c)] = 1;
        for (int k = 0; k < r; ++k) {
            v[static_cast<std::size_t>(res.pivot_columns[static_cast<std::size_t>(k)])] = -m(k, c);
        }
        res.kernel.push_back(std::move(v));
    }
    for (int c : res.pivot_columns) {
        std::vector<Rational> v(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) v[static_cast<std::size_t>(i)] = input(i, c);
        res.image.push_back(std::move(v));
    }
    res.rref = std::move(m);
    return res;
}

// Solve A * X = B exactly; empty result when inconsistent.
inline std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows()) throw PreconditionError("solve: row mismatch");
    const int n = a.rows(), m = a.cols(), k = b.cols();
    RationalMatrix aug(n, m + k);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug(i, j) = a(i, j);
        for (int j = 0; j < k; ++j) aug(i, m + j) = b(i, j);
    }
    RowReduceResult rr = row_reduce(aug);
    RationalMatrix x(m, k);
    for (std::size_t piv = 0; piv < rr.pivot_columns.size(); ++piv) {
        const int col = rr.pivot_columns[piv];
        if (col >= m) return std::nullopt;  // pivot in the right block: inconsistent
        for (int j = 0; j < k; ++j) x(col, j) = rr.rref(static_cast<int>(piv), m + j);
    }
    return x;
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw PreconditionError("inverse of non-square matrix");
    auto x = solve(a, RationalMatrix::identity(a.rows()));
    if (!x) return std::nullopt;
    if (rank_of(a) != a.rows()) return std::nullopt;
    return x;
}

// Characteristic polynomial det(tI - M), computed exactly by evaluating at
// n+1 integer points and interpolating.
inline UniPoly char_poly(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("characteristic polynomial of non-square matrix");
    const int n = m.rows();
    if (n == 0) return UniPoly::constant(Rational(1));
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= n; ++t) {
        RationalMatrix a(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a(i, j) = (i == j ? Rational(t) - m(i, j) : -m(i, j));
        }
        xs.emplace_back(t);
        ys.push_back(determinant(a));
    }
    // Lagrange interpolation
    UniPoly result;
    for (int i = 0; i <= n; ++i) {
        UniPoly term = UniPoly::constant(ys[static_cast<std::size_t>(i)]);
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            const Rational denom = xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(j)];
            term = term * UniPoly({-xs[static_cast<std::size_t>(j)] / denom, Rational(1) / denom});
        }
        result = result + term;
    }
    return result;
}

// Irreducible factorization of the characteristic polynomial over Q.
inline std::vector<std::pair<UniPoly, int>> char_poly_rational_split(const RationalMatrix& m) {
    return factor_rational(char_poly(m));
}

// Evaluate a polynomial at a square matrix (Horner).
inline RationalMatrix eval_at_matrix(const UniPoly& p, const RationalMatrix& m) {
    const int n = m.rows();
    RationalMatrix acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (int d = 0; d < n; ++d) acc(d, d) += p.coeff(i);
    }
    return acc;
}

}  // namespace qinv
