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

#include <galspec/cover.hpp>
#include <galspec/expr.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace galspec;

namespace {

using K = Expr::Kind;

// direct tree evaluation, independent of the polynomial conversion
Rational eval_tree(const ExprPtr& e, const Rational& t, const Rational& y) {
    switch (e->kind) {
    case K::Num: return e->value;
    case K::T: return t;
    case K::Y: return y;
    case K::Add: return eval_tree(e->lhs, t, y) + eval_tree(e->rhs, t, y);
    case K::Sub: return eval_tree(e->lhs, t, y) - eval_tree(e->rhs, t, y);
    case K::Mul: return eval_tree(e->lhs, t, y) * eval_tree(e->rhs, t, y);
    case K::Neg: return -eval_tree(e->lhs, t, y);
    case K::Pow: {
        Rational b = eval_tree(e->lhs, t, y), r = 1;
        for (unsigned i = 0; i < e->exponent; ++i) r *= b;
        return r;
    }
    }
    return 0;
}

Rational eval_bipoly(const BiPoly<RationalField>& P, const Rational& t, const Rational& y) {
    Rational acc = 0;
    for (int i = P.degree(); i >= 0; --i) acc = acc * y + P.coeff(static_cast<std::size_t>(i))(t);
    return acc;
}

ExprPtr random_tree(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
    switch (pick(rng)) {
    case 0: {
        std::uniform_int_distribution<int> num(0, 20), den(1, 4);
        return Expr::num(Rational(num(rng), den(rng)));
    }
    case 1: return Expr::var(K::T);
    case 2: return Expr::var(K::Y);
    case 3: return Expr::binary(K::Add, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 4: return Expr::binary(K::Sub, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 5: return Expr::binary(K::Mul, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
    case 6: return Expr::power(random_tree(rng, depth - 1), std::uniform_int_distribution<unsigned>(0, 4)(rng));
    default: return Expr::negate(random_tree(rng, depth - 1));
    }
}

} // namespace

TEST(Expr, ParsesTrinomial) {
    RationalField Q;
    auto P = to_bipoly(parse_poly("Y^3 - Y - T"), Q);
    EXPECT_EQ(P.degree(), 3);
    EXPECT_EQ(eval_bipoly(P, 2, 5), Rational(125 - 5 - 2));
}

TEST(Expr, MatchesGeneralTrinomialFamily) {
    RationalField Q;
    auto P = to_bipoly(parse_poly("Y^3 - T*Y + T^2"), Q);
    auto c = make_trinomial_general(3, 1, 1, 2, Q);
    EXPECT_EQ(P, c.polynomial());
}

TEST(Expr, PrecedenceAndUnaryMinus) {
    auto e = parse_poly("-2*Y^2 + 3/4*T - (T - Y)^2");
    for (int t = -3; t <= 3; ++t)
        for (int y = -3; y <= 3; ++y) {
            Rational expect = -2 * Rational(y * y) + Rational(3, 4) * t - Rational((t - y) * (t - y));
            EXPECT_EQ(eval_tree(e, t, y), expect);
        }
}

TEST(Expr, DoubleCaretReportsColumn) {
    try {
        parse_poly("Y^^2");
        FAIL() << "no error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1);
        EXPECT_EQ(e.column(), 3);
        EXPECT_EQ(e.kind(), "parse");
    }
}

TEST(Expr, RejectsBadInput) {
    EXPECT_THROW(parse_poly("Y^65"), ParseError);
    EXPECT_NO_THROW(parse_poly("Y^64"));
    EXPECT_THROW(parse_poly("1/0*Y"), ParseError);
    EXPECT_THROW(parse_poly(""), ParseError);
    EXPECT_THROW(parse_poly("Y +"), ParseError);
    EXPECT_THROW(parse_poly("(Y"), ParseError);
    EXPECT_THROW(parse_poly("X"), ParseError);
    EXPECT_THROW(parse_poly("Y Y"), ParseError);
}

TEST(Expr, YOnlyRejectsT) {
    RationalField Q;
    EXPECT_THROW(to_poly_y(parse_poly("Y^2 - T"), Q), Error);
    auto m = to_poly_y(parse_poly("Y^3 - 3*Y"), Q);
    EXPECT_EQ(m.degree(), 3);
    EXPECT_TRUE(mentions(parse_poly("Y+T"), K::T));
    EXPECT_FALSE(mentions(parse_poly("Y+1"), K::T));
}

TEST(Expr, LiteralsReduceIntoPrimeField) {
    PrimeField F(7);
    auto P = to_bipoly(parse_poly("Y^2 - 1/2*T"), F);
    // 1/2 = 4 mod 7
    EXPECT_EQ(P.coeff(0).coeff(1), F.neg(4));
    EXPECT_THROW(to_bipoly(parse_poly("Y - 1/7"), F), Error);
}

TEST(ExprProperty, PrettyRoundTripIsStructural) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        auto e = random_tree(rng, 4);
        auto text = pretty(e);
        auto back = parse_poly(text);
        ASSERT_TRUE(same_tree(e, back)) << text << " -> " << pretty(back);
        ASSERT_EQ(pretty(back), text);
    }
}

TEST(ExprProperty, ConversionAgreesWithTreeEvaluation) {
    std::mt19937_64 rng(29);
    RationalField Q;
    for (int i = 0; i < 300; ++i) {
        auto e = random_tree(rng, 4);
        auto P = to_bipoly(e, Q);
        for (int k = 0; k < 3; ++k) {
            Rational t(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 3));
            Rational y(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 3));
            ASSERT_EQ(eval_bipoly(P, t, y), eval_tree(e, t, y)) << pretty(e);
        }
    }
}
