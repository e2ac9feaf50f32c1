#include <catch2/catch_amalgamated.hpp>

#include "qinv/fixtures.hpp"
#include "qinv/representation.hpp"

using namespace qinv;

namespace {

RationalMatrix scalar(long long v) { return RationalMatrix(1, 1, {Rational(v)}); }

}  // namespace

TEST_CASE("representation construction validates shapes") {
    auto a2 = make_path(2);
    CHECK_THROWS_AS(Representation(a2, {1, 1}, {RationalMatrix(2, 1)}), PreconditionError);
    CHECK_THROWS_AS(Representation(a2, {1, -1}, {RationalMatrix(0, 1)}), PreconditionError);
    CHECK_THROWS_AS(Representation(a2, {1, 1}, {}), PreconditionError);
}

TEST_CASE("random representations are deterministic and bounded") {
    auto theta2 = make_theta(2);
    Representation a = random_representation(theta2, {1, 1}, 99, 1000000);
    Representation b = random_representation(theta2, {1, 1}, 99, 1000000);
    CHECK(a == b);
    for (int i = 0; i < 2; ++i) {
        const Rational& v = a.matrix(i)(0, 0);
        CHECK(denominator_of(v) == 1);
        CHECK(boost::multiprecision::abs(numerator_of(v)) <= 1000000);
    }
    Representation empty = random_representation(theta2, {0, 0}, 3, 10);
    CHECK(empty.is_zero_dimensional());
    CHECK_THROWS_AS(random_representation(theta2, {-1, 0}, 3, 10), PreconditionError);
}

TEST_CASE("interaction matrix shapes on simple representations") {
    auto a2 = make_path(2);
    Representation s1(a2, {1, 0}, {RationalMatrix(0, 1)});
    Representation s2(a2, {0, 1}, {RationalMatrix(1, 0)});

    // (S1, S2): source space 0, target space k
    RationalMatrix d = interaction_matrix(s1, s2);
    CHECK(d.cols() == 0);
    CHECK(d.rows() == 1);

    // (S2, S2): source space k, no arrow blocks contribute
    d = interaction_matrix(s2, s2);
    CHECK(d.cols() == 1);
    CHECK(d.rows() == 0);
}

TEST_CASE("hom and ext on worked examples") {
    auto a2 = make_path(2);
    Representation s1(a2, {1, 0}, {RationalMatrix(0, 1)});
    Representation s2(a2, {0, 1}, {RationalMatrix(1, 0)});
    CHECK(hom_ext(s1, s2) == HomExt{0, 1});

    Representation zero = Representation::zero(a2, {0, 0});
    Representation ind(a2, {1, 1}, {scalar(1)});
    CHECK(hom_ext(ind, zero) == HomExt{0, 0});
    CHECK(hom_ext(ind, ind) == HomExt{1, 0});
}

TEST_CASE("Euler identity on random pairs") {
    auto d4 = make_d4();
    Rng rng(3);
    for (int t = 0; t < 25; ++t) {
        IntVec a(4), b(4);
        for (auto& v : a) v = rng.uniform(0, 3);
        for (auto& v : b) v = rng.uniform(0, 3);
        Representation v = random_representation(d4, a, derive_seed(3, {t, 0}), 20);
        Representation w = random_representation(d4, b, derive_seed(3, {t, 1}), 20);
        HomExt he = hom_ext(v, w);
        CHECK(he.hom - he.ext == euler_form(*d4, a, b));
    }
}

TEST_CASE("Schofield values") {
    auto a2 = make_path(2);
    Representation s1(a2, {1, 0}, {RationalMatrix(0, 1)});
    Representation s2(a2, {0, 1}, {RationalMatrix(1, 0)});
    CHECK(schofield_eval(s2, s1) == 1);  // empty determinant

    // theta(2) scalars: det = v_a w_b - v_b w_a up to sign
    auto theta2 = make_theta(2);
    Representation v(theta2, {1, 1}, {scalar(2), scalar(5)});
    Representation w(theta2, {1, 1}, {scalar(3), scalar(7)});
    Rational c = schofield_eval(v, w);
    CHECK((c == Rational(2 * 7 - 5 * 3) || c == -Rational(2 * 7 - 5 * 3)));

    // precondition: Euler product must vanish
    CHECK_THROWS_WITH(schofield_eval(s1, s1), Catch::Matchers::ContainsSubstring("Euler product is 1"));
}

TEST_CASE("every Schofield value against the skew triple vanishes at weight alpha=(1,2)") {
    Representation skew = skew_triple_representation();
    for (int t = 0; t < 6; ++t) {
        Representation v = random_representation(skew.quiver_ptr(), {1, 2}, derive_seed(21, {t}), 1000);
        CHECK(schofield_eval(v, skew) == 0);
    }
}

TEST_CASE("nonzero Schofield value iff orthogonal, on pairing-zero samples") {
    auto theta3 = make_theta(3);
    Rng rng(19);
    int seen = 0;
    for (int t = 0; t < 200 && seen < 25; ++t) {
        IntVec a(2), b(2);
        for (auto& x : a) x = rng.uniform(0, 3);
        for (auto& x : b) x = rng.uniform(0, 3);
        if (euler_form(*theta3, a, b) != 0) continue;
        ++seen;
        Representation v = random_representation(theta3, a, derive_seed(19, {t, 0}), 50);
        Representation w = random_representation(theta3, b, derive_seed(19, {t, 1}), 50);
        const bool nonzero = schofield_eval(v, w) != 0;
        const bool orthogonal = hom_ext(v, w) == HomExt{0, 0};
        CHECK(nonzero == orthogonal);
    }
    CHECK(seen >= 25);
}

TEST_CASE("functional determinants") {
    CHECK(functional_determinant(zwara_representation()).is_zero());
    CHECK(functional_determinant(skew_triple_representation()).is_zero());

    auto theta2 = make_theta(2);
    Representation ones(theta2, {1, 1}, {scalar(1), scalar(1)});
    CHECK(functional_determinant(ones).to_string() == "t1 + t2");

    // A2 is theta(1): a one-variable determinant
    auto a2 = make_path(2);
    Representation theta1(a2, {1, 1}, {scalar(4)});
    CHECK(functional_determinant(theta1).to_string() == "4*t1");

    Representation notkron(make_atilde2(), {1, 1, 1},
                           {scalar(1), scalar(1), scalar(1)});
    CHECK_THROWS_AS(functional_determinant(notkron), PreconditionError);
    Representation unequal(theta2, {1, 2}, {RationalMatrix(2, 1), RationalMatrix(2, 1)});
    CHECK_THROWS_AS(functional_determinant(unequal), PreconditionError);
}

TEST_CASE("simple summand detection") {
    auto a2 = make_path(2);
    Representation s1(a2, {1, 0}, {RationalMatrix(0, 1)});
    CHECK(has_simple_summand(s1, 0));

    Representation ind(a2, {1, 1}, {scalar(1)});
    CHECK_FALSE(has_simple_summand(ind, 0));
    CHECK_FALSE(has_simple_summand(ind, 1));

    // S1 + the (1,1) indecomposable: summand at vertex 1
    Representation mixed(a2, {2, 1}, {RationalMatrix(1, 2, {Rational(0), Rational(1)})});
    CHECK(has_simple_summand(mixed, 0));
    CHECK_FALSE(has_simple_summand(mixed, 1));

    // V + S_x always has the summand
    auto theta2 = make_theta(2);
    Rng rng(8);
    for (int t = 0; t < 10; ++t) {
        IntVec a{rng.uniform(0, 2), rng.uniform(0, 2)};
        Representation v = random_representation(theta2, a, derive_seed(8, {t}), 10);
        for (int x = 0; x < 2; ++x) {
            IntVec e(2, 0);
            e[static_cast<std::size_t>(x)] = 1;
            Representation with_simple = direct_sum(v, Representation::zero(theta2, e));
            CHECK(has_simple_summand(with_simple, x));
        }
    }
    CHECK_THROWS_AS(has_simple_summand(ind, 7), PreconditionError);
}

TEST_CASE("representation file format round trip") {
    auto theta2 = make_theta(2);
    Representation v(theta2, {2, 1},
                     {RationalMatrix(1, 2, {Rational(1, 2), Rational(-3)}),
                      RationalMatrix(1, 2, {Rational(0), Rational(7, 5)})});
    Representation reparsed = parse_representation(format_representation(v), theta2);
    CHECK(reparsed == v);

    // zero blocks may be omitted
    Representation s1(theta2, {1, 0}, {RationalMatrix(0, 1), RationalMatrix(0, 1)});
    CHECK(parse_representation("rep - dim 1,0\n", theta2) == s1);

    CHECK_THROWS_AS(parse_representation("dim 1,1\n", theta2), ParseError);
    CHECK_THROWS_AS(parse_representation("rep - dim 1,1\nm a\n1 2\n", theta2), ParseError);
    CHECK_THROWS_AS(parse_representation("rep - dim 1,1\nm a\n1\nm a\n1\n", theta2), ParseError);
}

TEST_CASE("hom/ext are isomorphism invariants") {
    auto theta2 = make_theta(2);
    Rng rng(77);
    Representation v = random_representation(theta2, {2, 2}, 101, 20);
    Representation w = random_representation(theta2, {2, 3}, 102, 20);
    std::vector<RationalMatrix> g{random_unimodular(2, rng), random_unimodular(3, rng)};
    CHECK(hom_ext(v, conjugate(w, g)) == hom_ext(v, w));
}
