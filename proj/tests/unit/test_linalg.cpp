#include <catch2/catch_amalgamated.hpp>

#include "qinv/matrix.hpp"
#include "qinv/modular.hpp"

using namespace qinv;

namespace {

RationalMatrix from_ints(int rows, int cols, std::initializer_list<long long> vals) {
    std::vector<Rational> data;
    for (long long v : vals) data.emplace_back(v);
    return RationalMatrix(rows, cols, std::move(data));
}

RationalMatrix random_matrix(Rng& rng, int rows, int cols, long long bound) {
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m(i, j) = Rational(rng.uniform(-bound, bound));
    }
    return m;
}

// test-only oracle: char poly by naive cofactor expansion of det(tI - M)
// over the polynomial ring
UniPoly char_poly_by_cofactors(const RationalMatrix& m) {
    const int n = m.rows();
    std::vector<std::vector<UniPoly>> entries(static_cast<std::size_t>(n),
                                              std::vector<UniPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (i == j) ? UniPoly({-m(i, j), Rational(1)}) : UniPoly::constant(-m(i, j));
        }
    }
    std::function<UniPoly(std::vector<int>, std::vector<int>)> det =
        [&](std::vector<int> rows, std::vector<int> cols) -> UniPoly {
        if (rows.empty()) return UniPoly::constant(Rational(1));
        UniPoly total;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            std::vector<int> sub_rows(rows.begin() + 1, rows.end());
            std::vector<int> sub_cols;
            for (std::size_t i = 0; i < cols.size(); ++i) {
                if (i != k) sub_cols.push_back(cols[i]);
            }
            UniPoly term = entries[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(cols[k])] *
                           det(sub_rows, sub_cols);
            total = (k % 2 == 0) ? total + term : total - term;
        }
        return total;
    };
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) idx.push_back(i);
    return det(idx, idx);
}

}  // namespace

TEST_CASE("row_reduce on worked examples") {
    auto id2 = RationalMatrix::identity(2);
    auto rr = row_reduce(id2);
    CHECK(rr.rank == 2);
    CHECK(rr.kernel.empty());

    auto zero = RationalMatrix(2, 3);
    rr = row_reduce(zero);
    CHECK(rr.rank == 0);
    CHECK(rr.kernel.size() == 3);

    auto dependent = from_ints(2, 3, {1, 2, 3, 2, 4, 6});
    rr = row_reduce(dependent);
    CHECK(rr.rank == 1);
    REQUIRE(rr.kernel.size() == 2);
    for (const auto& k : rr.kernel) {
        Rational acc;
        for (int j = 0; j < 3; ++j) acc += dependent(0, j) * k[static_cast<std::size_t>(j)];
        CHECK(acc == 0);
    }
    CHECK(rr.image.size() == 1);
}

TEST_CASE("rank + kernel dimension = columns on random matrices") {
    Rng rng(42);
    for (int t = 0; t < 40; ++t) {
        const int rows = static_cast<int>(rng.uniform(0, 5));
        const int cols = static_cast<int>(rng.uniform(0, 5));
        auto m = random_matrix(rng, rows, cols, 6);
        auto rr = row_reduce(m);
        CHECK(rr.rank + static_cast<int>(rr.kernel.size()) == cols);
        CHECK(rr.rank == rank_of(m));
        for (const auto& k : rr.kernel) {
            for (int i = 0; i < rows; ++i) {
                Rational acc;
                for (int j = 0; j < cols; ++j) acc += m(i, j) * k[static_cast<std::size_t>(j)];
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("determinant basics") {
    CHECK(determinant(RationalMatrix::identity(3)) == 1);
    CHECK(determinant(from_ints(2, 2, {0, 1, -1, 0})) == 1);
    CHECK(determinant(RationalMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), PreconditionError);

    // any 3x3 skew-symmetric matrix has determinant zero
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
        RationalMatrix s(3, 3);
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                s(i, j) = Rational(rng.uniform(-100, 100));
                s(j, i) = -s(i, j);
            }
        }
        CHECK(determinant(s) == 0);
    }
}

TEST_CASE("determinant nonzero iff full rank on random squares") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        const int n = static_cast<int>(rng.uniform(1, 4));
        auto m = random_matrix(rng, n, n, 4);
        CHECK((determinant(m) != 0) == (rank_of(m) == n));
    }
}

TEST_CASE("solve and inverse") {
    auto a = from_ints(2, 2, {2, 1, 1, 1});
    auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == RationalMatrix::identity(2));
    CHECK_FALSE(inverse(from_ints(2, 2, {1, 2, 2, 4})).has_value());

    // inconsistent system
    auto bad = solve(from_ints(2, 1, {1, 2}), from_ints(2, 1, {1, 3}));
    CHECK_FALSE(bad.has_value());
}

TEST_CASE("char_poly_rational_split on worked examples") {
    auto diag = from_ints(2, 2, {1, 0, 0, 2});
    auto f = char_poly_rational_split(diag);
    REQUIRE(f.size() == 2);
    // factors sorted by (degree, coefficients); both linear factors present once
    CHECK(f[0].first == UniPoly({Rational(-2), Rational(1)}));
    CHECK(f[1].first == UniPoly({Rational(-1), Rational(1)}));
    CHECK((f[0].second == 1 && f[1].second == 1));

    auto nilpotent = from_ints(2, 2, {0, 1, 0, 0});
    f = char_poly_rational_split(nilpotent);
    REQUIRE(f.size() == 1);
    CHECK(f[0].first == UniPoly({Rational(0), Rational(1)}));
    CHECK(f[0].second == 2);

    auto rotation = from_ints(2, 2, {0, -1, 1, 0});
    f = char_poly_rational_split(rotation);
    REQUIRE(f.size() == 1);
    CHECK(f[0].first == UniPoly({Rational(1), Rational(0), Rational(1)}));  // t^2 + 1
    CHECK(f[0].second == 1);
}

TEST_CASE("char poly matches the cofactor oracle and factors multiply back") {
    Rng rng(13);
    for (int t = 0; t < 15; ++t) {
        const int n = static_cast<int>(rng.uniform(1, 5));
        auto m = random_matrix(rng, n, n, 5);
        UniPoly direct = char_poly_by_cofactors(m);
        CHECK(char_poly(m) == direct);
        UniPoly product = UniPoly::constant(Rational(1));
        for (const auto& [p, mult] : char_poly_rational_split(m)) {
            for (int k = 0; k < mult; ++k) product = product * p;
        }
        CHECK(product == direct);
    }
}

TEST_CASE("factorization handles large coefficients and multiplicities") {
    // (x^2 - 2)^2 (x - 12345678901234567)
    UniPoly q2({Rational(-2), Rational(0), Rational(1)});
    UniPoly lin({-Rational(Integer("12345678901234567")), Rational(1)});
    auto factors = factor_rational(q2 * q2 * lin);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].first == lin);
    CHECK(factors[0].second == 1);
    CHECK(factors[1].first == q2);
    CHECK(factors[1].second == 2);

    // irreducibility of a quartic with no rational roots but reducible shape
    UniPoly q3({Rational(-3), Rational(0), Rational(1)});
    factors = factor_rational(q2 * q3);
    REQUIRE(factors.size() == 2);
}

TEST_CASE("modular rank agrees with exact rank on random matrices") {
    Rng rng(17);
    for (int t = 0; t < 30; ++t) {
        const int rows = static_cast<int>(rng.uniform(1, 6));
        const int cols = static_cast<int>(rng.uniform(1, 6));
        auto m = random_matrix(rng, rows, cols, 30);
        ModMatrix mm(rows, cols, kRankPrimes[t % 4]);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                mm.set(i, j, numerator_of(m(i, j)).convert_to<long long>());
            }
        }
        CHECK(std::move(mm).rank() == rank_of(m));
    }
}
