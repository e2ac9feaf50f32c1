#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "qinv/decompose.hpp"
#include "qinv/fixtures.hpp"

using namespace qinv;

namespace {

std::vector<IntVec> summand_dims(const Decomposition& dec) {
    std::vector<IntVec> dims;
    for (const auto& s : dec.summands) dims.push_back(s.rep.dim());
    std::sort(dims.begin(), dims.end());
    return dims;
}

}  // namespace

TEST_CASE("endomorphism basis elements intertwine the arrow maps") {
    auto theta2 = make_theta(2);
    Representation v = random_representation(theta2, {2, 3}, 5, 12);
    for (const auto& phi : endomorphism_basis(v)) {
        for (int a = 0; a < 2; ++a) {
            const Arrow& ar = v.quiver().arrow(a);
            CHECK(phi[static_cast<std::size_t>(ar.head)] * v.matrix(a) ==
                  v.matrix(a) * phi[static_cast<std::size_t>(ar.tail)]);
        }
    }
}

TEST_CASE("decompose: invertible A2 map is indecomposable") {
    auto a2 = make_path(2);
    Representation v(a2, {1, 1}, {RationalMatrix(1, 1, {Rational(3)})});
    Decomposition dec = decompose(v, 1);
    REQUIRE(dec.summands.size() == 1);
    CHECK(dec.summands[0].schur_certified);
    CHECK(dec.summands[0].endo_dim == 1);
    CHECK(decomposition_is_valid(v, dec));
}

TEST_CASE("decompose: the zero A2 map splits into the two simples") {
    auto a2 = make_path(2);
    Representation v(a2, {1, 1}, {RationalMatrix(1, 1, {Rational(0)})});
    Decomposition dec = decompose(v, 1);
    CHECK(summand_dims(dec) == std::vector<IntVec>{{0, 1}, {1, 0}});
    CHECK(decomposition_is_valid(v, dec));
}

TEST_CASE("decompose: theta(2) with identity and diag(1,2) eigensplits") {
    auto theta2 = make_theta(2);
    Representation v(theta2, {2, 2},
                     {RationalMatrix::identity(2),
                      RationalMatrix(2, 2, {Rational(1), Rational(0), Rational(0), Rational(2)})});
    Decomposition dec = decompose(v, 1);
    CHECK(summand_dims(dec) == std::vector<IntVec>{{1, 1}, {1, 1}});
    CHECK(decomposition_is_valid(v, dec));
}

TEST_CASE("decompose recovers explicitly built direct sums") {
    auto d4 = make_d4();
    Rng seeds(123);
    for (int t = 0; t < 6; ++t) {
        IntVec a(4), b(4);
        for (auto& x : a) x = seeds.uniform(0, 2);
        for (auto& x : b) x = seeds.uniform(0, 2);
        Representation u = random_representation(d4, a, derive_seed(123, {t, 0}), 30);
        Representation w = random_representation(d4, b, derive_seed(123, {t, 1}), 30);
        Representation sum = direct_sum(u, w);
        Decomposition dec = decompose(sum, derive_seed(123, {t, 2}));
        CHECK(decomposition_is_valid(sum, dec));
        // dimension vectors of the summands add up to the input
        IntVec total(4, 0);
        for (const auto& s : dec.summands) {
            for (int x = 0; x < 4; ++x) total[static_cast<std::size_t>(x)] += s.rep.dim()[static_cast<std::size_t>(x)];
        }
        CHECK(total == sum.dim());
        CHECK(dec.summands.size() >= 2);
    }
}

TEST_CASE("hom between the Schur summands of a generic multiple is stable across seeds") {
    auto a2 = make_path(2);
    for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
        Representation v = random_representation(a2, {2, 2}, seed, 500);
        Decomposition dec = decompose(v, seed);
        REQUIRE(dec.summands.size() == 2);
        // both summands are copies of the (1,1) indecomposable
        CHECK(hom_ext(dec.summands[0].rep, dec.summands[1].rep).hom == 1);
    }
}

TEST_CASE("zero representation decomposes into nothing") {
    auto a2 = make_path(2);
    Decomposition dec = decompose(Representation::zero(a2, {0, 0}), 1);
    CHECK(dec.summands.empty());
}
