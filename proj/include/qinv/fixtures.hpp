#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qinv/representation.hpp"

namespace qinv {

// --- common quiver builders -----------------------------------------------------

// Generalized Kronecker quiver: two vertices, m parallel arrows 1 -> 2.
inline QuiverPtr make_theta(int m) {
    std::vector<Arrow> arrows;
    for (int i = 0; i < m; ++i) {
        std::string name = (m <= 26) ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i + 1);
        arrows.push_back({name, 0, 1});
    }
    return std::make_shared<const Quiver>(std::vector<std::string>{"1", "2"}, std::move(arrows));
}

// Linear A_n quiver 1 -> 2 -> ... -> n.
inline QuiverPtr make_path(int n) {
    std::vector<std::string> names;
    std::vector<Arrow> arrows;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
    return std::make_shared<const Quiver>(std::move(names), std::move(arrows));
}

// D4: three sources into a central sink.
inline QuiverPtr make_d4() {
    return std::make_shared<const Quiver>(
        std::vector<std::string>{"1", "2", "3", "4"},
        std::vector<Arrow>{{"a1", 0, 3}, {"a2", 1, 3}, {"a3", 2, 3}});
}

// Acyclic orientation of the triangle (underlying graph is the 3-cycle).
inline QuiverPtr make_atilde2() {
    return std::make_shared<const Quiver>(
        std::vector<std::string>{"1", "2", "3"},
        std::vector<Arrow>{{"a", 0, 1}, {"b", 1, 2}, {"c", 0, 2}});
}

// --- the counterexample representations -------------------------------------------

// Three linearly independent skew-symmetric 3x3 matrices on theta(3).
inline Representation skew_triple_representation() {
    QuiverPtr q = make_theta(3);
    auto mat = [](std::initializer_list<long long> vals) {
        std::vector<Rational> data;
        for (long long v : vals) data.emplace_back(v);
        return RationalMatrix(3, 3, std::move(data));
    };
    std::vector<RationalMatrix> mats{
        mat({0, 0, 0, 0, 0, -1, 0, 1, 0}),
        mat({0, 0, 1, 0, 0, 0, -1, 0, 0}),
        mat({0, -1, 0, 1, 0, 0, 0, 0, 0}),
    };
    return Representation(q, {3, 3}, std::move(mats));
}

// The (3,3) Kronecker pair whose functional determinant vanishes identically.
inline Representation zwara_representation() {
    QuiverPtr q = make_theta(2);
    auto mat = [](std::initializer_list<long long> vals) {
        std::vector<Rational> data;
        for (long long v : vals) data.emplace_back(v);
        return RationalMatrix(3, 3, std::move(data));
    };
    std::vector<RationalMatrix> mats{
        mat({0, 0, 0, 1, 0, 0, 0, 1, 0}),
        mat({1, 0, 0, 0, 0, 0, 0, 0, 1}),
    };
    return Representation(q, {3, 3}, std::move(mats));
}

// --- the seven wild quivers ---------------------------------------------------------
//
// Each fixture carries its quiver and a chain of exceptional-sequence data:
// validating the k-th sequence on the k-th quiver yields the (k+1)-st quiver,
// and the last derived quiver is theta(3). The kron3 fixture is theta(3)
// itself (empty chain) and carries the skew-symmetric counterexample.

struct WildFixture {
    std::string name;
    QuiverPtr quiver;
    std::vector<std::vector<IntVec>> chain;
    std::optional<Representation> counterexample;
};

inline std::vector<std::string> fixture_names() { return {"kron3", "b", "c", "d", "e", "f", "g"}; }

inline WildFixture fixture(const std::string& name) {
    if (name == "kron3") {
        return {"kron3", make_theta(3), {}, skew_triple_representation()};
    }
    if (name == "b") {
        auto q = std::make_shared<const Quiver>(
            std::vector<std::string>{"1", "2", "3"},
            std::vector<Arrow>{{"a1", 0, 1}, {"a2", 0, 1}, {"b1", 1, 2}});
        return {"b", q, {{{0, 0, 1}, {2, 3, 0}}}, std::nullopt};
    }
    if (name == "c") {
        // five sources b, d, e, f, g into the center c
        auto q = std::make_shared<const Quiver>(
            std::vector<std::string>{"b", "c", "d", "e", "f", "g"},
            std::vector<Arrow>{{"bc", 0, 1}, {"dc", 2, 1}, {"ec", 3, 1}, {"fc", 4, 1}, {"gc", 5, 1}});
        return {"c", q, {{{1, 3, 1, 1, 1, 0}, {0, 0, 0, 0, 0, 1}}}, std::nullopt};
    }
    if (name == "d") {
        auto q = std::make_shared<const Quiver>(
            std::vector<std::string>{"a", "b", "c", "d", "e", "f"},
            std::vector<Arrow>{{"ab", 0, 1}, {"ac", 0, 2}, {"ad", 0, 3}, {"ea", 4, 0}, {"fe", 5, 4}});
        return {"d",
                q,
                {{{0, 0, 0, 1, 0, 0}, {2, 1, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 1}},
                 {{2, 3, 0}, {0, 0, 1}}},
                std::nullopt};
    }
    if (name == "e") {
        // arms of lengths 3, 2, 2 into the sink a
        auto q = std::make_shared<const Quiver>(
            std::vector<std::string>{"a", "b", "c", "d", "e", "f", "h", "i"},
            std::vector<Arrow>{{"ba", 1, 0},
                               {"cb", 2, 1},
                               {"dc", 3, 2},
                               {"fa", 5, 0},
                               {"ef", 4, 5},
                               {"ia", 7, 0},
                               {"hi", 6, 7}});
        return {"e",
                q,
                {{{3, 2, 1, 0, 1, 2, 0, 2}, {0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 0, 0}},
                 {{3, 2, 0}, {0, 0, 1}}},
                std::nullopt};
    }
    if (name == "f") {
        auto q = std::make_shared<const Quiver>(
            std::vector<std::string>{"a", "b", "c", "d", "h", "e", "f", "i", "j"},
            std::vector<Arrow>{{"ba", 1, 0},
                               {"cb", 2, 1},
                               {"dc", 3, 2},
                               {"hd", 4, 3},
                               {"fa", 6, 0},
                               {"ef", 5, 6},
                               {"ie", 7, 5},
                               {"ja", 8, 0}});
        return {"f", q, {{{9, 7, 5, 3, 0, 5, 7, 3, 5}, {0, 0, 0, 0, 1, 0, 0, 0, 0}}}, std::nullopt};
    }
    if (name == "g") {
        auto q = std::make_shared<const Quiver>(
            std::vector<std::string>{"a", "b", "c", "d", "h", "g", "k", "e", "f", "i"},
            std::vector<Arrow>{{"ba", 1, 0},
                               {"cb", 2, 1},
                               {"dc", 3, 2},
                               {"hd", 4, 3},
                               {"gh", 5, 4},
                               {"kg", 6, 5},
                               {"fa", 8, 0},
                               {"ef", 7, 8},
                               {"ia", 9, 0}});
        return {"g", q, {{{13, 11, 9, 7, 5, 3, 0, 5, 9, 7}, {0, 0, 0, 0, 0, 0, 1, 0, 0, 0}}},
                std::nullopt};
    }
    throw PreconditionError("unknown fixture '" + name + "' (expected kron3|b|c|d|e|f|g)");
}

}  // namespace qinv
