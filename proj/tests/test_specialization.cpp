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
#include <galspec/specialization.hpp>

#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "test_support.hpp"

using namespace galspec;

namespace {

const RationalField Q;

QPoly qpoly(std::initializer_list<std::int64_t> c) { return QPoly::from_ints(Q, c); }

BiPoly<RationalField> raw(std::vector<QPoly> coeffs) {
    return BiPoly<RationalField>(PolyRing<RationalField>(Q), std::move(coeffs));
}

// Y^2 - Y - T
QCover quadratic() { return QCover::from_polynomial(raw({qpoly({0, -1}), qpoly({-1}), qpoly({1})})); }

std::vector<QCover> sample_covers() {
    return {
        make_trinomial_simple(3, Q),
        make_trinomial_simple(4, Q),
        make_trinomial_alt(5, Q),
        make_trinomial_general(5, 2, 1, 2, Q),
        make_morse_cover(qpoly({0, 3, -7, 0, 2})),
        QCover::from_polynomial(raw({qpoly({3, 5, 0, -7}), qpoly({0, 11}), qpoly({}), qpoly({1})})),
        quadratic(),
    };
}

} // namespace

TEST(SpecializePattern, Examples) {
    PrimeField F5(5);
    auto c5 = make_trinomial_simple(3, F5);
    // Y^3 - Y - 1 has the single root 2 in GF(5); the cofactor Y^2 + 2Y + 3
    // has discriminant 2, a non-square, so the pattern is {2,1}
    std::vector<std::uint64_t> roots;
    for (std::uint64_t y = 0; y < 5; ++y)
        if ((y * y * y + 4 * y + 4) % 5 == 0) roots.push_back(y);
    EXPECT_EQ(roots, std::vector<std::uint64_t>{2});
    EXPECT_EQ(specialize_pattern(c5, 1), Partition({2, 1}));
    EXPECT_EQ(specialize_pattern(c5, 0), Partition({1, 1, 1}));
    // GF(13): no root of Y^3 - Y - 1, hence irreducible
    auto c13 = make_trinomial_simple(3, PrimeField(13));
    for (std::uint64_t y = 0; y < 13; ++y) EXPECT_NE((y * y * y + 12 * y + 12) % 13, 0u);
    EXPECT_EQ(specialize_pattern(c13, 1), Partition({3}));
    auto cq = make_trinomial_simple(3, Q);
    EXPECT_EQ(specialize_pattern(cq, Rational(1)), Partition({3}));
}

TEST(SpecializePattern, RamifiedPointRejected) {
    auto c = QCover::from_polynomial(raw({-QPoly::variable(Q), qpoly({}), qpoly({1})}));
    EXPECT_THROW(specialize_pattern(c, Rational(0)), RamifiedPointError);
    EXPECT_EQ(specialize_pattern(c, Rational(4)), Partition({1, 1}));
    EXPECT_EQ(specialize_pattern(c, Rational(2)), Partition({2}));
    PrimeField F7(7);
    auto c7 = make_trinomial_simple(3, F7);
    // 4/27 = 4/6 = 4*6 = 3 mod 7, and 3 is not a square mod 7; GF(11): 4/27 = 4/5 = 4*9 = 3 = 5^2
    PrimeField F11(11);
    auto c11 = make_trinomial_simple(3, F11);
    EXPECT_THROW(specialize_pattern(c11, 5), RamifiedPointError);
    EXPECT_THROW(specialize_pattern(c11, 6), RamifiedPointError);
    for (std::uint64_t t = 0; t < 7; ++t) EXPECT_NO_THROW(specialize_pattern(c7, t));
}

TEST(SpecializePattern, OverExtensionField) {
    ExtField K(3, 2);
    auto c = make_trinomial_simple(2, K);
    int split = 0, inert = 0, ramified = 0;
    for (Integer i = 0; i < K.order(); ++i) {
        auto t = K.element_at(i);
        if (c.is_branch_point(t)) {
            ++ramified;
            EXPECT_THROW(specialize_pattern(c, t), RamifiedPointError);
            continue;
        }
        auto pat = specialize_pattern(c, t);
        (pat == Partition({1, 1}) ? split : inert)++;
    }
    EXPECT_EQ(ramified, 1);
    EXPECT_EQ(split, 4);
    EXPECT_EQ(inert, 4);
}

TEST(EtaleAlgebra, Examples) {
    auto q = quadratic();
    auto e2 = etale_algebra(q, Rational(2));
    ASSERT_EQ(e2.factors.size(), 2u);
    EXPECT_EQ(e2.factors[0].poly, qpoly({-2, 1}));
    EXPECT_EQ(e2.factors[1].poly, qpoly({1, 1}));
    EXPECT_EQ(e2.pattern(), Partition({1, 1}));
    auto e1 = etale_algebra(q, Rational(1));
    ASSERT_EQ(e1.factors.size(), 1u);
    EXPECT_EQ(e1.factors[0].poly, qpoly({-1, -1, 1}));
    auto c = etale_algebra(make_trinomial_simple(3, Q), Rational(1));
    EXPECT_EQ(c.pattern(), Partition({3}));
    EXPECT_EQ(c.degree(), 3u);
    EXPECT_THROW(etale_algebra(q, Rational(-1, 4)), RamifiedPointError);
}

TEST(ResidueDegrees, Examples) {
    auto c = make_trinomial_simple(3, Q);
    EXPECT_EQ(residue_degrees_at(c, 1, 5), Partition({2, 1}));
    EXPECT_EQ(residue_degrees_at(c, 1, 13), Partition({3}));
    EXPECT_EQ(residue_degrees_at(c, 0, 5), Partition({1, 1, 1}));
    EXPECT_EQ(residue_degrees_at(c, 5, 5), Partition({1, 1, 1}));
    EXPECT_THROW(residue_degrees_at(c, 1, 3), BadPrimeError);
    EXPECT_THROW(residue_degrees_at(c, 5, 11), RamifiedPointError);
}

// Every Q-factor of P(t0, Y) reduces to a product of mod-p factors, so the
// mod-p pattern is the union of the per-factor patterns.
TEST(ResidueDegrees, RefinesRationalPattern) {
    std::mt19937_64 rng(7);
    auto covers = sample_covers();
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 7; p < 400; p = next_prime(p)) primes.push_back(p);
    int checked = 0;
    for (int trial = 0; checked < 1000 && trial < 5000; ++trial) {
        const auto& c = covers[rng() % covers.size()];
        Integer p = primes[rng() % primes.size()];
        Integer t0 = static_cast<std::int64_t>(rng() % 201) - 100;
        if (!is_good_prime(c, p).good || c.is_branch_point(Rational(t0))) continue;
        PrimeField F(p);
        if (reduce_mod(c.locus(), F)(F.from_integer(t0)) == 0) continue;
        auto local = residue_degrees_at(c, t0, p);
        auto global = specialize_pattern(c, Rational(t0));
        ASSERT_EQ(local.total(), c.degree());
        ASSERT_EQ(global.total(), c.degree());
        std::vector<unsigned> merged;
        for (const auto& f : etale_algebra(c, Rational(t0)).factors)
            for (auto d : factor_ff(reduce_mod(f.poly, F)).degree_pattern()) merged.push_back(d);
        ASSERT_EQ(Partition(merged), local) << c.to_string() << " t0=" << t0 << " p=" << p;
        ASSERT_GE(local.size(), global.size());
        // unramified reduction is squarefree
        auto fib = reduce_mod(c.fiber(Rational(t0)), F);
        ASSERT_EQ(gcd(fib, derivative(fib)).degree(), 0);
        ++checked;
    }
    EXPECT_EQ(checked, 1000);
}

TEST(ResidueDegrees, DependsOnlyOnResidue) {
    for (const auto& c : sample_covers()) {
        for (std::uint64_t p = 2; p <= 13; p = next_prime(p)) {
            if (!is_good_prime(c, p).good) {
                EXPECT_THROW(residue_degrees_at(c, 0, p), BadPrimeError);
                continue;
            }
            for (std::int64_t r = 0; r < static_cast<std::int64_t>(p); ++r) {
                std::optional<Partition> base;
                bool ramified = false;
                try {
                    base = residue_degrees_at(c, r, p);
                } catch (const RamifiedPointError&) {
                    ramified = true;
                }
                for (std::int64_t k = -4; k <= 4; ++k) {
                    Integer t0 = Integer(r) + Integer(k) * p;
                    if (ramified)
                        EXPECT_THROW(residue_degrees_at(c, t0, p), RamifiedPointError);
                    else
                        EXPECT_EQ(residue_degrees_at(c, t0, p), *base);
                }
            }
        }
    }
}
