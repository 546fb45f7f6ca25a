/*
   Copyright 2026 The galspec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <galspec/ext_field.hpp>
#include <galspec/ff_factor.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

using namespace galspec;
using galspec::testing::random_poly;

TEST(ExtField, RejectsReducibleModulus) {
    PrimeField F(3);
    Poly<PrimeField> m(F, {2, 0, 1});  // Y^2 - 1 = (Y-1)(Y+1)
    EXPECT_THROW(ExtField(F, m), NotIrreducibleError);
}

TEST(ExtField, DefaultModulusIsFirstIrreducible) {
    ExtField K(3, 2);
    // Y^2 + 1 is the first monic irreducible quadratic over GF(3) in index order
    EXPECT_EQ(K.modulus(), Poly<PrimeField>(PrimeField(3), {1, 0, 1}));
    EXPECT_EQ(K.order(), 9);
}

TEST(ExtField, FieldAxiomsExhaustivelyOnGF8AndGF9) {
    for (auto [p, f] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}}) {
        ExtField K(p, f);
        const auto q = static_cast<int>(K.order());
        std::set<Integer> seen;
        for (int i = 0; i < q; ++i) {
            auto a = K.element_at(i);
            EXPECT_EQ(K.index_of(a), i);
            seen.insert(K.index_of(a));
            if (!K.is_zero(a)) {
                EXPECT_EQ(K.mul(a, K.inv(a)), K.one());
            }
            // a^q = a and the p-th root undoes Frobenius
            EXPECT_EQ(K.pow(a, K.order()), a);
            EXPECT_EQ(K.pow(K.pth_root(a), p), a);
            for (int j = 0; j < q; ++j) {
                auto b = K.element_at(j);
                EXPECT_EQ(K.mul(a, b), K.mul(b, a));
                EXPECT_EQ(K.sub(K.add(a, b), b), a);
            }
        }
        EXPECT_EQ(static_cast<int>(seen.size()), q);
    }
}

TEST(ExtField, MultiplicativeGroupIsCyclic) {
    ExtField K(2, 4);
    int max_order = 0;
    for (int i = 1; i < 16; ++i) {
        auto a = K.element_at(i);
        int ord = 1;
        auto x = a;
        while (x != K.one()) {
            x = K.mul(x, a);
            ++ord;
        }
        max_order = std::max(max_order, ord);
    }
    EXPECT_EQ(max_order, 15);
}

TEST(ExtField, FactorizationRoundTripOddAndEven) {
    std::mt19937_64 rng(21);
    for (auto [p, f] : {std::pair<std::uint64_t, unsigned>{2, 3}, {2, 4}, {3, 2}, {5, 2}}) {
        ExtField K(p, f);
        for (int trial = 0; trial < 60; ++trial) {
            auto g = random_poly(K, 1 + static_cast<int>(rng() % 5), rng);
            g *= random_poly(K, 1 + static_cast<int>(rng() % 3), rng);
            auto fac = factor_ff(g, trial);
            Poly<ExtField> acc = Poly<ExtField>::constant(K, fac.unit);
            for (auto& x : fac.factors) {
                EXPECT_TRUE(is_irreducible_ff(x.poly));
                acc *= pow(x.poly, x.multiplicity);
            }
            EXPECT_EQ(acc, g);
        }
    }
}

TEST(ExtField, GF4SplitsEveryQuadraticOverGF2) {
    // Y^2 + Y + 1 is irreducible over GF(2) and has both roots in GF(4)
    ExtField K(2, 2);
    Poly<ExtField> f(K, {K.one(), K.one(), K.one()});
    auto fac = factor_ff(f);
    EXPECT_EQ(fac.degree_pattern(), (std::vector<unsigned>{1, 1}));
}
