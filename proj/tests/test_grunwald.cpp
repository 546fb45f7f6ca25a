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

#include <galspec/grunwald.hpp>

#include <gtest/gtest.h>

using namespace galspec;

namespace {

const RationalField Q;

QPoly qpoly(std::initializer_list<std::int64_t> c) { return QPoly::from_ints(Q, c); }

QCover quadratic() {
    return QCover::from_polynomial(
        BiPoly<RationalField>(PolyRing<RationalField>(Q), {qpoly({0, -1}), qpoly({-1}), qpoly({1})}));
}

// Pattern of a squarefree cubic mod p from its number of roots.
Partition cubic_pattern_by_roots(std::int64_t t, std::int64_t p) {
    int roots = 0;
    for (std::int64_t y = 0; y < p; ++y) roots += ((y * y % p * y - y - t) % p + 2 * p) % p == 0;
    return roots == 0 ? Partition({3}) : roots == 1 ? Partition({2, 1}) : Partition({1, 1, 1});
}

// Independent re-verification of one certified point.
void recheck(const QCover& cover, const ProgressionResult& res, const CertifiedPoint& pt) {
    const unsigned n = cover.degree();
    EXPECT_EQ(mod(pt.t0 - res.b, res.M), 0);
    auto fib = cover.fiber(Rational(pt.t0));
    for (const auto& choice : res.constraint_choices) {
        EXPECT_EQ(mod(pt.t0, choice.prime), choice.residue);
        auto f = reduce_mod(fib, PrimeField(choice.prime));
        EXPECT_EQ(Partition(factor_ff(f).degree_pattern()), choice.pattern);
    }
    for (const auto& choice : res.trick_primes) EXPECT_EQ(mod(pt.t0, choice.prime), choice.residue);
    EXPECT_TRUE(factor_z(fib).is_single_irreducible());
    EXPECT_TRUE(is_irreducible_ff(reduce_mod(fib, PrimeField(pt.irreducibility_prime))));
    ASSERT_TRUE(pt.sn.conclusive);
    std::set<Partition> seen;
    for (const auto& [pat, p] : pt.sn.witnesses) {
        EXPECT_EQ(Partition(factor_ff(reduce_mod(fib, PrimeField(p))).degree_pattern()), pat);
        seen.insert(pat);
    }
    for (const auto& pat : sn_witness_patterns(n)) EXPECT_TRUE(seen.count(pat)) << pat;
}

} // namespace

TEST(LocalSolutions, Examples) {
    auto c = make_trinomial_simple(3, Q);
    auto split = local_solutions(c, 5, {1, 1, 1});
    EXPECT_NE(std::find(split.begin(), split.end(), 0u), split.end());
    auto inert = local_solutions(c, 5, {3});
    EXPECT_EQ(inert, (std::vector<std::uint64_t>{2, 3}));  // t = 1 gives {2,1}
    EXPECT_FALSE(local_solutions(c, 7, {2, 1}).empty());
    EXPECT_THROW(local_solutions(c, 3, {3}), BadPrimeError);
    EXPECT_THROW(local_solutions(c, 5, {2, 2}), PreconditionError);
}

TEST(LocalSolutions, CubicExistenceAndRootCountOracle) {
    auto c = make_trinomial_simple(3, Q);
    for (std::int64_t p = 5; p <= 97; p = static_cast<std::int64_t>(next_prime(p))) {
        PrimeField F(p);
        auto red = reduce_cover(c, F);
        for (const auto& part : Partition::all(3)) {
            auto sols = local_solutions(c, p, part);
            EXPECT_FALSE(sols.empty()) << p << " " << part;
            std::vector<std::uint64_t> oracle;
            for (std::int64_t t = 0; t < p; ++t)
                if (!red.is_branch_point(t) && cubic_pattern_by_roots(t, p) == part) oracle.push_back(t);
            EXPECT_EQ(sols, oracle) << p << " " << part;
        }
    }
}

TEST(TrickPrimes, CubicAndQuadratic) {
    auto c = make_trinomial_simple(3, Q);
    auto tp = standard_trick_primes(c, {});
    ASSERT_EQ(tp.size(), 2u);  // {2,1} and {2,1^(n-2)} coincide for n = 3
    EXPECT_EQ(tp[0].pattern, Partition({3}));
    EXPECT_EQ(tp[1].pattern, Partition({2, 1}));
    EXPECT_NE(tp[0].prime, tp[1].prime);
    for (const auto& t : tp) {
        EXPECT_TRUE(is_good_prime(c, t.prime).good);
        EXPECT_FALSE(local_solutions(c, t.prime, t.pattern).empty());
    }
    auto q = standard_trick_primes(quadratic(), {});
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(q[0].pattern, Partition({2}));
    EXPECT_EQ(q[1].pattern, Partition({1, 1}));
}

TEST(TrickPrimes, QuarticHasThreeAndExclusionsRespected) {
    auto c = make_trinomial_simple(4, Q);
    auto tp = standard_trick_primes(c, {});
    ASSERT_EQ(tp.size(), 3u);
    EXPECT_EQ(tp[2].pattern, Partition({2, 1, 1}));
    std::set<Integer> small;
    for (std::uint64_t p = 2; p < 100; p = next_prime(p)) small.insert(p);
    for (const auto& t : standard_trick_primes(make_trinomial_simple(3, Q), small)) EXPECT_GE(t.prime, 101);
    EXPECT_THROW(standard_trick_primes(c, small, 100), BudgetExhausted);
}

TEST(CertifySn, Examples) {
    auto c = make_trinomial_simple(3, Q);
    auto cert = certify_sn(c, 1, 50);
    EXPECT_TRUE(cert.conclusive);
    EXPECT_LE(cert.primes_scanned, 50u);
    EXPECT_EQ(cert.witnesses.size(), 2u);

    auto q = quadratic();
    auto c2 = certify_sn(q, 1, 50);
    EXPECT_TRUE(c2.conclusive);
    ASSERT_EQ(c2.witnesses.size(), 1u);
    EXPECT_EQ(c2.witnesses[0].first, Partition({2}));

    auto red = certify_sn(q, 2, 50);
    EXPECT_FALSE(red.conclusive);
    EXPECT_TRUE(red.degenerate);
    EXPECT_EQ(red.primes_scanned, 0u);

    // tiny budget: inconclusive, never a false certificate
    auto tiny = certify_sn(c, 1, 2);
    EXPECT_FALSE(tiny.conclusive);
    EXPECT_THROW(certify_sn(q, Rational(-1, 4), 50), RamifiedPointError);
}

TEST(GrunwaldSearch, SingleInertConstraint) {
    SearchSpec spec{make_trinomial_simple(3, Q), {{5, Partition({3})}}};
    auto res = grunwald_search(spec);
    EXPECT_EQ(res.M, res.beta * 5);
    ASSERT_GE(res.certified.size(), 3u);
    for (const auto& pt : res.certified) {
        recheck(spec.cover, res, pt);
        EXPECT_TRUE(is_irreducible_ff(reduce_mod(spec.cover.fiber(Rational(pt.t0)), PrimeField(5))));
    }
}

TEST(GrunwaldSearch, SplitAtFiveAndMixedAtSeven) {
    SearchSpec spec{make_trinomial_simple(3, Q), {{5, Partition({1, 1, 1})}, {7, Partition({2, 1})}}};
    auto res = grunwald_search(spec);
    EXPECT_EQ(res.M, res.beta * 35);
    EXPECT_GE(res.b, 0);
    EXPECT_LT(res.b, res.M);
    EXPECT_EQ(res.constant_c, 1296);
    EXPECT_GT(res.m0, 1296);
    ASSERT_GE(res.certified.size(), 3u);
    for (const auto& pt : res.certified) recheck(spec.cover, res, pt);
}

TEST(GrunwaldSearch, QuadraticAt67) {
    SearchSpec spec{quadratic(), {{67, Partition({2})}}};
    auto res = grunwald_search(spec);
    ASSERT_GE(res.certified.size(), 3u);
    for (const auto& pt : res.certified) {
        recheck(spec.cover, res, pt);
        // Y^2 - Y - t0 is irreducible mod 67 iff 1 + 4 t0 is a non-residue
        auto d = static_cast<std::uint64_t>(mod(1 + 4 * pt.t0, 67));
        EXPECT_EQ(pow_mod(d, 33, 67), 66u);
    }
}

TEST(GrunwaldSearch, Deterministic) {
    SearchSpec spec{make_trinomial_simple(3, Q), {{5, Partition({1, 1, 1})}, {7, Partition({2, 1})}}, 4};
    auto a = grunwald_search(spec);
    auto b = grunwald_search(spec);
    EXPECT_EQ(a.b, b.b);
    EXPECT_EQ(a.M, b.M);
    ASSERT_EQ(a.certified.size(), b.certified.size());
    for (std::size_t i = 0; i < a.certified.size(); ++i) {
        EXPECT_EQ(a.certified[i].t0, b.certified[i].t0);
        EXPECT_EQ(a.certified[i].sn.witnesses, b.certified[i].sn.witnesses);
    }
    for (std::size_t i = 1; i < a.certified.size(); ++i) EXPECT_LT(a.certified[i - 1].t0, a.certified[i].t0);
}

TEST(GrunwaldSearch, Errors) {
    auto c = make_trinomial_simple(3, Q);
    EXPECT_THROW(grunwald_search({c, {{5, Partition({3})}, {5, Partition({3})}}}), PreconditionError);
    EXPECT_THROW(grunwald_search({c, {{5, Partition({2, 2})}}}), PreconditionError);
    EXPECT_THROW(grunwald_search({c, {{3, Partition({3})}}}), BadPrimeError);
    EXPECT_THROW(grunwald_search({c, {{9, Partition({3})}}}), NotPrimeError);
    // find a locally impossible pattern for a quartic at a small good prime
    auto q4 = make_trinomial_simple(4, Q);
    bool found = false;
    for (std::uint64_t p = 5; p < 30 && !found; p = next_prime(p)) {
        if (!is_good_prime(q4, p).good) continue;
        for (const auto& part : Partition::all(4)) {
            if (!local_solutions(q4, p, part).empty()) continue;
            found = true;
            try {
                grunwald_search({q4, {{p, part}}});
                ADD_FAILURE() << "expected an infeasible constraint";
            } catch (const InfeasibleError& e) {
                std::string msg = e.what();
                EXPECT_NE(msg.find(std::to_string(p)), std::string::npos);
                EXPECT_NE(msg.find(part.to_string()), std::string::npos);
            }
            break;
        }
    }
    EXPECT_TRUE(found);
}
