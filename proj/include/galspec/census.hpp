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

#ifndef GALSPEC_CENSUS_HPP
#define GALSPEC_CENSUS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "cover.hpp"
#include "ff_factor.hpp"
#include "partition.hpp"
#include "specialization.hpp"

namespace galspec {

struct PartitionCount {
    Partition pattern;
    std::uint64_t count = 0;
    Rational density;    ///< share of S_n with this cycle type
    Rational expected;   ///< density * q
    Rational deviation;  ///< |count - expected|
    bool extrapolated = false;  ///< the q/n count is only claimed for {n}
};

struct CensusReport {
    Integer q;
    std::string cover;
    unsigned n = 0;
    std::vector<PartitionCount> rows;  ///< every partition of n, {n} first
    std::uint64_t excluded = 0;        ///< t0 on the branch locus
    bool all_realized = false;
    Integer constant_c;
    bool above_bound = false;  ///< q >= constant_c

    const PartitionCount& row(const Partition& p) const {
        for (const auto& r : rows)
            if (r.pattern == p) return r;
        throw PreconditionError("partition " + p.to_string() + " is not a partition of " + std::to_string(n));
    }
};

/// Factorization pattern of P(t0, Y) for every unramified t0 in GF(q).
template <class D>
CensusReport census(const BivariateCover<D>& cover) {
    static_assert(D::is_finite, "census runs over a finite field");
    const auto& F = cover.field();
    CensusReport rep;
    rep.q = F.order();
    rep.cover = cover.to_string();
    rep.n = cover.degree();
    for (const auto& p : Partition::all(rep.n)) {
        PartitionCount pc;
        pc.pattern = p;
        pc.density = p.density();
        pc.expected = pc.density * Rational(rep.q);
        pc.extrapolated = p != Partition({rep.n});
        rep.rows.push_back(pc);
    }
    for (Integer i = 0; i < rep.q; ++i) {
        auto t = F.element_at(i);
        if (cover.is_branch_point(t)) {
            ++rep.excluded;
            continue;
        }
        auto pat = specialize_pattern(cover, t);
        for (auto& r : rep.rows)
            if (r.pattern == pat) {
                ++r.count;
                break;
            }
    }
    rep.all_realized = true;
    for (auto& r : rep.rows) {
        r.deviation = abs(Rational(r.count) - r.expected);
        rep.all_realized = rep.all_realized && r.count > 0;
    }
    rep.constant_c = constant_c(cover);
    rep.above_bound = rep.q >= rep.constant_c;
    return rep;
}

struct DensityVerdict {
    Partition pattern;
    bool pass = false;
    bool extrapolated = false;
    Rational deviation;
    double bound = 0;  ///< C * sqrt(q), for display; the test itself is exact
};

/// |count - density * q| <= C * sqrt(q), decided exactly as deviation^2 <= C^2 q.
inline std::vector<DensityVerdict> density_check(const CensusReport& rep, const Rational& C) {
    std::vector<DensityVerdict> out;
    for (const auto& r : rep.rows) {
        DensityVerdict v;
        v.pattern = r.pattern;
        v.extrapolated = r.extrapolated;
        v.deviation = r.deviation;
        v.pass = r.deviation * r.deviation <= C * C * Rational(rep.q);
        v.bound = C.convert_to<double>() * std::sqrt(rep.q.convert_to<double>());
        out.push_back(v);
    }
    return out;
}

inline std::vector<DensityVerdict> density_check(const CensusReport& rep) {
    return density_check(rep, Rational(factorial(rep.n)));
}

template <class D>
struct Realization {
    typename D::Element b;
    Integer index;     ///< position of b in the field enumeration
    Poly<D> poly;      ///< the irreducible polynomial found
    Integer bound;     ///< field size above which success is guaranteed
    bool meets_bound;  ///< q >= bound
};

namespace detail {

template <class D>
Realization<D> first_irreducible_shift(const Poly<D>& base, const Integer& bound, const std::string& what) {
    const auto& F = base.domain();
    const Integer q = F.order();
    for (Integer i = 0; i < q; ++i) {
        auto b = F.element_at(i);
        auto f = base + Poly<D>::constant(F, b);
        if (is_irreducible_ff(f)) return {b, i, f, bound, q >= bound};
    }
    throw BudgetExhausted("no b in " + F.name() + " makes " + what + " irreducible" +
                          (q >= bound ? " although q >= " + bound.str() + ": bound violated"
                                      : " (q below the bound " + bound.str() + ")"));
}

} // namespace detail

/// (2n n!)^2
inline Integer trinomial_bound(unsigned n) { return pow(Integer(2 * n) * factorial(n), 2); }
/// (6 n!)^2, for the general trinomial family
inline Integer general_trinomial_bound(unsigned n) { return pow(6 * factorial(n), 2); }

/// Smallest-indexed b with Y^n - Y + b irreducible over the field.
template <class D>
Realization<D> realize_by_trinomial(unsigned n, const D& F) {
    static_assert(D::is_finite, "realization runs over a finite field");
    if (n < 2) throw PreconditionError("trinomial needs n >= 2");
    if (gcd(F.order(), Integer(n) * (n - 1)) != 1)
        throw PreconditionError("gcd(q, n(n-1)) = gcd(" + F.order().str() + ", " + std::to_string(n * (n - 1)) +
                                ") is not 1");
    auto base = Poly<D>::monomial(F, F.one(), n) - Poly<D>::variable(F);
    return detail::first_irreducible_shift(base, trinomial_bound(n), "Y^" + std::to_string(n) + " - Y + b");
}

/// Smallest-indexed b with M(Y) + b irreducible; M must be Morse.
template <class D>
Realization<D> realize_by_morse(const Poly<D>& M) {
    static_assert(D::is_finite, "realization runs over a finite field");
    const auto n = static_cast<unsigned>(std::max(0, M.degree()));
    auto v = is_morse(M);
    if (!v.morse) throw NotMorseError(M.to_string() + " is not Morse");
    auto mono = make_monic(M);
    return detail::first_irreducible_shift(mono, trinomial_bound(n), M.to_string() + " + b");
}

/// Smallest-indexed t0 whose specialization has the target pattern; the
/// bound attached depends on the family.
template <class D>
Realization<D> realize_in_cover(const BivariateCover<D>& cover, const Partition& target) {
    const auto& F = cover.field();
    const unsigned n = cover.degree();
    Integer bound;
    switch (cover.tag()) {
    case FamilyTag::TrinomialGeneral: bound = general_trinomial_bound(n); break;
    case FamilyTag::TrinomialSimple:
    case FamilyTag::Morse: bound = trinomial_bound(n); break;
    default: bound = constant_c(cover);
    }
    for (Integer i = 0; i < F.order(); ++i) {
        auto t = F.element_at(i);
        if (cover.is_branch_point(t)) continue;
        if (specialize_pattern(cover, t) == target) return {t, i, cover.fiber(t), bound, F.order() >= bound};
    }
    throw BudgetExhausted("no t0 in " + F.name() + " has pattern " + target.to_string());
}

} // namespace galspec

#endif // GALSPEC_CENSUS_HPP
