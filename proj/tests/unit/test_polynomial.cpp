#include <catch2/catch_amalgamated.hpp>

#include "qinv/polynomial.hpp"

using namespace qinv;

TEST_CASE("sparse polynomial arithmetic") {
    auto ctx = make_var_context({"x", "y"});
    auto x = SparsePolynomial::variable(ctx, 0);
    auto y = SparsePolynomial::variable(ctx, 1);
    auto sum = x + y;
    auto square = sum * sum;
    CHECK(square.to_string() == "x^2 + 2*x*y + y^2");
    CHECK((square - square).is_zero());
    CHECK(square.eval({Rational(2), Rational(3)}) == 25);
    CHECK(square.total_degree() == 2);
    CHECK((x - x).is_zero());
    CHECK(x.scaled(Rational(0)).is_zero());
}

TEST_CASE("symbolic determinant of the generic 2x2") {
    auto ctx = make_var_context({"x11", "x12", "x21", "x22"});
    PolyMatrix m(2, 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            m(i, j) = SparsePolynomial::variable(ctx, static_cast<std::size_t>(2 * i + j));
        }
    }
    CHECK(symbolic_determinant(m).to_string() == "x11*x22 - x12*x21");
}

TEST_CASE("symbolic 3x3 skew-symmetric determinant vanishes identically") {
    auto ctx = make_var_context({"p", "q", "r"});
    PolyMatrix m(3, 3, std::vector<SparsePolynomial>(9, SparsePolynomial(ctx)));
    auto set = [&](int i, int j, std::size_t var) {
        m(i, j) = SparsePolynomial::variable(ctx, var);
        m(j, i) = m(i, j).negated();
    };
    set(0, 1, 0);
    set(0, 2, 1);
    set(1, 2, 2);
    CHECK(symbolic_determinant(m).is_zero());
}

TEST_CASE("zero row kills the determinant") {
    auto ctx = make_var_context({"u"});
    PolyMatrix m(2, 2, std::vector<SparsePolynomial>(4, SparsePolynomial(ctx)));
    m(0, 0) = SparsePolynomial::variable(ctx, 0);
    m(0, 1) = SparsePolynomial::constant(ctx, Rational(5));
    CHECK(symbolic_determinant(m).is_zero());
}

TEST_CASE("symbolic size limit is enforced") {
    auto ctx = make_var_context({"u"});
    PolyMatrix m(3, 3, std::vector<SparsePolynomial>(9, SparsePolynomial(ctx)));
    CHECK_THROWS_WITH(symbolic_determinant(m, 2), "symbolic limit exceeded");
    CHECK_THROWS_AS(symbolic_determinant(PolyMatrix(2, 3)), PreconditionError);
}

TEST_CASE("symbolic determinant evaluates consistently with the rational determinant") {
    Rng rng(23);
    for (int t = 0; t < 12; ++t) {
        const int n = static_cast<int>(rng.uniform(1, 4));
        std::vector<std::string> names;
        for (int v = 0; v < 3; ++v) names.push_back("z" + std::to_string(v));
        auto ctx = make_var_context(names);
        PolyMatrix m(n, n, std::vector<SparsePolynomial>(static_cast<std::size_t>(n) * n,
                                                         SparsePolynomial(ctx)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                // random affine-linear entry in three variables
                SparsePolynomial e = SparsePolynomial::constant(ctx, Rational(rng.uniform(-3, 3)));
                for (std::size_t v = 0; v < 3; ++v) {
                    if (rng.uniform(0, 2) == 0) {
                        e = e + SparsePolynomial::variable(ctx, v, Rational(rng.uniform(-3, 3)));
                    }
                }
                m(i, j) = std::move(e);
            }
        }
        SparsePolynomial det = symbolic_determinant(m);
        for (int pt = 0; pt < 4; ++pt) {
            std::vector<Rational> point;
            for (int v = 0; v < 3; ++v) point.emplace_back(rng.uniform(-9, 9));
            RationalMatrix eval(n, n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) eval(i, j) = m(i, j).eval(point);
            }
            CHECK(det.eval(point) == determinant(eval));
        }
    }
}
