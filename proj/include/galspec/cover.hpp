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

#ifndef GALSPEC_COVER_HPP
#define GALSPEC_COVER_HPP

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "domains.hpp"
#include "error.hpp"
#include "ff_factor.hpp"
#include "integer.hpp"
#include "polynomial.hpp"
#include "zfactor.hpp"

namespace galspec {

enum class FamilyTag { TrinomialGeneral, TrinomialSimple, TrinomialAlt, Morse, Raw };

inline std::string to_string(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::TrinomialGeneral: return "TrinomialGeneral";
    case FamilyTag::TrinomialSimple: return "TrinomialSimple";
    case FamilyTag::TrinomialAlt: return "TrinomialAlt";
    case FamilyTag::Morse: return "Morse";
    case FamilyTag::Raw: return "Raw";
    }
    return "Raw";
}

/// Parameters of the tagged families; unused fields stay zero.
struct FamilyParams {
    unsigned n = 0, m = 0, r = 0, s = 0;
};

/// Squarefree part, made monic. Over finite fields this is the product of
/// the distinct irreducible factors.
template <class D>
Poly<D> squarefree_part(const Poly<D>& f) {
    if (f.degree() < 1) return make_monic(f);
    if constexpr (D::is_finite) {
        Poly<D> out = Poly<D>::constant(f.domain(), f.domain().one());
        for (const auto& fac : factor_ff(f).factors) out *= fac.poly;
        return out;
    } else {
        return squarefree_part_char0(f);
    }
}

template <class D>
struct BranchLocus {
    Poly<D> discriminant;  ///< disc_Y(P) as a polynomial in T
    Poly<D> locus;         ///< D(T): monic squarefree part of the discriminant
    bool infinity_branched;
};

/// Fiber polynomial at T = infinity after the substitution T = 1/S,
/// Y = W / S^e that keeps the cover monic in W; evaluated at S = 0.
template <class D>
Poly<D> fiber_at_infinity(const BiPoly<D>& P) {
    const int n = P.degree();
    const auto& base = P.domain().base();
    int e = 0;
    for (int i = 0; i < n; ++i) {
        int di = P.coeffs()[static_cast<std::size_t>(i)].degree();
        if (di <= 0) continue;
        e = std::max(e, (di + (n - i) - 1) / (n - i));
    }
    std::vector<typename D::Element> v;
    for (int i = 0; i <= n; ++i)
        v.push_back(P.coeffs()[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>((n - i) * e)));
    return Poly<D>(base, std::move(v));
}

/// True when the fiber polynomial at infinity is not separable; this may
/// overcount (a degenerate fiber polynomial does not prove ramification).
template <class D>
bool infinity_branched_test(const BiPoly<D>& P) {
    Poly<D> q0 = fiber_at_infinity(P);
    if (q0.degree() < 1) return true;
    Poly<D> dq = derivative(q0);
    if (dq.is_zero()) return true;
    return gcd(q0, dq).degree() > 0;
}

/// D(T) and infinity-branching for a cover monic in Y.
template <class D>
BranchLocus<D> branch_locus(const BiPoly<D>& P, bool tagged_family = false) {
    if (P.degree() < 1) throw PreconditionError("cover must have positive degree in Y");
    auto disc = discriminant(P);
    if (disc.is_zero())
        throw InseparableError("disc_Y(P) vanishes identically: generic fiber is inseparable");
    auto locus = squarefree_part(disc);
    bool inf = tagged_family ? true : infinity_branched_test(P);
    return {disc, locus, inf};
}

/// A cover of the projective line given by P(T, Y), monic in Y after
/// normalization, together with its branch data.
template <class D>
class BivariateCover {
public:
    using Domain = D;
    using Element = typename D::Element;

    /// Validates and normalizes P, then computes the branch locus.
    static BivariateCover from_polynomial(BiPoly<D> P, FamilyTag tag = FamilyTag::Raw,
                                          FamilyParams params = {}) {
        if (P.degree() < 1) throw PreconditionError("cover must have positive degree in Y");
        if (P.lc().degree() != 0)
            throw PreconditionError("leading Y-coefficient " + P.lc().to_string("T") +
                                    " is not a nonzero constant");
        const auto& base = P.domain().base();
        P = P.scale(P.domain().from_base(base.inv(P.lc().lc())));
        auto bl = branch_locus(P, tag != FamilyTag::Raw);
        return BivariateCover(std::move(P), std::move(bl), tag, params);
    }

    /// Assembles a cover from precomputed branch data (used for reductions).
    static BivariateCover from_parts(BiPoly<D> P, BranchLocus<D> bl, FamilyTag tag, FamilyParams params) {
        return BivariateCover(std::move(P), std::move(bl), tag, params);
    }

    const BiPoly<D>& polynomial() const { return P_; }
    const D& field() const { return P_.domain().base(); }
    unsigned degree() const { return static_cast<unsigned>(P_.degree()); }
    const Poly<D>& locus() const { return bl_.locus; }
    const Poly<D>& discriminant() const { return bl_.discriminant; }
    bool infinity_branched() const { return bl_.infinity_branched; }
    const BranchLocus<D>& branch() const { return bl_; }
    FamilyTag tag() const { return tag_; }
    const FamilyParams& params() const { return params_; }

    /// r: finite branch points (geometric count) plus one if infinity is branched.
    unsigned branch_point_count() const {
        return static_cast<unsigned>(std::max(0, bl_.locus.degree())) + (bl_.infinity_branched ? 1u : 0u);
    }

    /// Finite branch points recorded from the family's closed form (over Q only).
    const std::vector<Rational>& recorded_branch_points() const { return recorded_; }
    void set_recorded_branch_points(std::vector<Rational> pts) { recorded_ = std::move(pts); }

    bool is_branch_point(const Element& t0) const {
        return bl_.locus.degree() >= 1 && field().is_zero(bl_.locus(t0));
    }

    /// P(t0, Y).
    Poly<D> fiber(const Element& t0) const { return eval_t(P_, t0); }

    std::string to_string() const { return P_.to_string(); }

private:
    BivariateCover(BiPoly<D> P, BranchLocus<D> bl, FamilyTag tag, FamilyParams params)
        : P_(std::move(P)), bl_(std::move(bl)), tag_(tag), params_(params) {}

    BiPoly<D> P_;
    BranchLocus<D> bl_;
    FamilyTag tag_;
    FamilyParams params_;
    std::vector<Rational> recorded_;
};

using QCover = BivariateCover<RationalField>;

namespace detail {

template <class D>
BiPoly<D> bipoly_from_terms(const D& dom, unsigned ydeg,
                            const std::vector<std::tuple<unsigned, unsigned, std::int64_t>>& terms) {
    PolyRing<D> ring(dom);
    std::vector<Poly<D>> c(ydeg + 1, Poly<D>(dom));
    for (auto [yexp, texp, coef] : terms) c[yexp] = c[yexp] + Poly<D>::monomial(dom, dom.from_int(coef), texp);
    return BiPoly<D>(ring, std::move(c));
}

template <class D>
bool char_divides(const D& dom, const Integer& value) {
    Integer p = dom.characteristic();
    return p != 0 && value % p == 0;
}

} // namespace detail

/// Y^n - T^r Y^m + T^s with 1 <= m < n, gcd(m, n) = 1, s(n-m) - rn = 1.
template <class D>
BivariateCover<D> make_trinomial_general(unsigned n, unsigned m, unsigned r, unsigned s, const D& dom) {
    std::vector<std::string> violated;
    if (!(1 <= m && m < n)) violated.push_back("1 <= m < n");
    if (std::gcd(m, n) != 1) violated.push_back("gcd(m, n) = 1");
    if (static_cast<long>(s) * (static_cast<long>(n) - m) - static_cast<long>(r) * n != 1)
        violated.push_back("s(n-m) - r*n = 1");
    if (r == 0 || s == 0) violated.push_back("r, s positive");
    if (violated.empty() && detail::char_divides(dom, Integer(m) * n * (n - m)))
        violated.push_back("characteristic does not divide m*n*(n-m)");
    if (!violated.empty()) {
        std::string msg = "trinomial (n,m,r,s)=(" + std::to_string(n) + "," + std::to_string(m) + "," +
                          std::to_string(r) + "," + std::to_string(s) + ") violates:";
        for (auto& v : violated) msg += " [" + v + "]";
        throw PreconditionError(msg);
    }
    auto P = detail::bipoly_from_terms(dom, n, {{n, 0, 1}, {m, r, -1}, {0, s, 1}});
    auto cover = BivariateCover<D>::from_polynomial(P, FamilyTag::TrinomialGeneral, {n, m, r, s});
    if constexpr (std::is_same_v<D, RationalField>) {
        Rational t0 = pow(Rational(m), m) / pow(Rational(n), n) * pow(Rational(n - m), n - m);
        cover.set_recorded_branch_points({Rational(0), t0});
    }
    return cover;
}

/// Y^n - Y - T.
template <class D>
BivariateCover<D> make_trinomial_simple(unsigned n, const D& dom) {
    if (n < 2) throw PreconditionError("trinomial needs n >= 2");
    if (detail::char_divides(dom, Integer(n) * (n - 1)))
        throw PreconditionError("characteristic " + dom.characteristic().str() + " divides n(n-1) = " +
                                std::to_string(n * (n - 1)));
    auto P = detail::bipoly_from_terms(dom, n, {{n, 0, 1}, {1, 0, -1}, {0, 1, -1}});
    return BivariateCover<D>::from_polynomial(P, FamilyTag::TrinomialSimple, {n, 0, 0, 0});
}

/// Y^n - Y^(n-1) - T; finite branch points 0 and Q(1 - 1/n) with Q = Y^n - Y^(n-1).
template <class D>
BivariateCover<D> make_trinomial_alt(unsigned n, const D& dom) {
    if (n < 2) throw PreconditionError("trinomial needs n >= 2");
    if (detail::char_divides(dom, Integer(n) * (n - 1)))
        throw PreconditionError("characteristic " + dom.characteristic().str() + " divides n(n-1) = " +
                                std::to_string(n * (n - 1)));
    auto P = detail::bipoly_from_terms(dom, n, {{n, 0, 1}, {n - 1, 0, -1}, {0, 1, -1}});
    auto cover = BivariateCover<D>::from_polynomial(P, FamilyTag::TrinomialAlt, {n, 0, 0, 0});
    if constexpr (std::is_same_v<D, RationalField>) {
        Rational b = Rational(n - 1, n);
        Rational v = pow(b, n) - pow(b, n - 1);
        // for n = 2 the fiber over 0 is {0, 1}, unramified
        if (n == 2)
            cover.set_recorded_branch_points({v});
        else
            cover.set_recorded_branch_points({Rational(0), v});
    }
    return cover;
}

template <class D>
struct MorseVerdict {
    bool morse;
    Poly<D> critical_value_poly;  ///< R(T) = Res_Y(M(Y) - T, M'(Y))
    Poly<D> repeated_part;        ///< gcd(R, R')
};

/// M is Morse iff R(T) = Res_Y(M - T, M') has degree n-1 and is squarefree:
/// its roots are the critical values counted through the zeros of M'.
template <class D>
MorseVerdict<D> is_morse(const Poly<D>& M) {
    const auto& dom = M.domain();
    const int n = M.degree();
    if (n < 2) throw PreconditionError("Morse test needs degree >= 2");
    if (detail::char_divides(dom, Integer(n)))
        throw PreconditionError("characteristic " + dom.characteristic().str() + " divides deg M = " +
                                std::to_string(n));
    PolyRing<D> ring(dom);
    std::vector<Poly<D>> c;
    for (const auto& a : M.coeffs()) c.push_back(Poly<D>::constant(dom, a));
    c[0] = c[0] - Poly<D>::variable(dom);
    BiPoly<D> shifted(ring, std::move(c));
    BiPoly<D> dm = map_coeffs(derivative(M), ring, [&](const auto& a) { return Poly<D>::constant(dom, a); });
    Poly<D> R = resultant(shifted, dm);
    Poly<D> g = gcd(R, derivative(R));
    bool ok = R.degree() == n - 1 && g.degree() == 0;
    return {ok, R, g};
}

/// M(Y) - T for a Morse polynomial M.
template <class D>
BivariateCover<D> make_morse_cover(const Poly<D>& M) {
    auto verdict = is_morse(M);
    if (!verdict.morse)
        throw NotMorseError(M.to_string() + " is not Morse: R(T) = " + verdict.critical_value_poly.to_string("T") +
                            ", gcd(R, R') = " + verdict.repeated_part.to_string("T"));
    const auto& dom = M.domain();
    PolyRing<D> ring(dom);
    std::vector<Poly<D>> c;
    for (const auto& a : M.coeffs()) c.push_back(Poly<D>::constant(dom, a));
    c[0] = c[0] - Poly<D>::variable(dom);
    return BivariateCover<D>::from_polynomial(BiPoly<D>(ring, std::move(c)), FamilyTag::Morse,
                                              {static_cast<unsigned>(M.degree()), 0, 0, 0});
}

/// 4 r^2 (n!)^2.
template <class D>
Integer constant_c(const BivariateCover<D>& cover) {
    const Integer r = cover.branch_point_count();
    const Integer nf = factorial(cover.degree());
    return 4 * r * r * nf * nf;
}

// ---------------------------------------------------------------- over Q

/// Rational roots of the branch locus and its irreducible factors of higher degree.
struct FiniteBranchData {
    std::vector<Rational> rational_points;
    std::vector<QPoly> higher_factors;
};

inline FiniteBranchData finite_branch_points(const QCover& cover) {
    FiniteBranchData out;
    if (cover.locus().degree() < 1) return out;
    for (const auto& f : factor_z(cover.locus()).factors) {
        if (f.poly.degree() == 1)
            out.rational_points.push_back(-f.poly.coeff(0) / f.poly.coeff(1));
        else
            out.higher_factors.push_back(f.poly);
    }
    std::sort(out.rational_points.begin(), out.rational_points.end());
    return out;
}

inline bool p_integral(const Rational& a, const Integer& p) { return denominator_of(a) % p != 0; }

inline bool p_integral(const QPoly& f, const Integer& p) {
    for (const auto& a : f.coeffs())
        if (!p_integral(a, p)) return false;
    return true;
}

/// Numerator of the content of a rational polynomial.
inline Integer content_numerator(const QPoly& f) {
    Integer g = 0;
    for (const auto& a : f.coeffs()) g = gcd(g, numerator_of(a));
    return g;
}

struct GoodPrimeReport {
    bool good = true;
    std::vector<std::string> reasons;  ///< why p is bad; empty when good
};

/// Good reduction at p: p > n, P and D reduce without denominators, the
/// discriminant keeps its degree, D stays squarefree (branch points do not
/// coalesce), and a non-branched infinity stays non-branched. Vertical
/// ramification is not tested for n >= 3 (it cannot occur for geometric
/// monodromy S_n there); for n = 2 the discriminant content is checked.
inline GoodPrimeReport is_good_prime(const QCover& cover, const Integer& p) {
    if (!is_prime(p)) throw NotPrimeError(p.str() + " is not prime");
    GoodPrimeReport rep;
    auto bad = [&](std::string why) {
        rep.good = false;
        rep.reasons.push_back(std::move(why));
    };
    const unsigned n = cover.degree();
    if (p <= n) bad("p <= n");
    bool integral = true;
    for (const auto& c : cover.polynomial().coeffs())
        integral = integral && p_integral(c, p);
    if (!integral) {
        bad("P does not reduce mod p (denominator or leading coefficient)");
        return rep;
    }
    const QPoly& disc = cover.discriminant();
    if (numerator_of(disc.lc()) % p == 0)
        bad("disc_Y(P) drops degree mod p (a branch point goes to infinity)");
    const QPoly& D = cover.locus();
    if (!p_integral(D, p)) {
        bad("D(T) does not reduce mod p");
    } else if (D.degree() >= 2) {
        PrimeField F(p);
        auto Dp = reduce_mod(D, F);
        if (gcd(Dp, derivative(Dp)).degree() > 0) bad("branch points coalesce mod p");
    }
    if (!cover.infinity_branched()) {
        PrimeField F(p);
        auto q0 = reduce_mod(fiber_at_infinity(cover.polynomial()), F);
        auto dq = derivative(q0);
        if (dq.is_zero() || gcd(q0, dq).degree() > 0) bad("fiber at infinity becomes ramified mod p");
    }
    if (n == 2) {
        if (p == 2) bad("p = 2 for a degree-2 cover");
        if (content_numerator(disc) % p == 0) bad("p divides the discriminant content");
    }
    return rep;
}

/// The integer whose prime divisors are exactly the bad primes.
struct BadPrimeData {
    Integer product;                 ///< unreduced product of the contributing quantities
    std::vector<Integer> primes;     ///< distinct primes found by trial division
    Integer cofactor;                ///< unfactored remainder (1 when fully factored)
    Integer radical() const {
        Integer r = cofactor;
        for (const auto& p : primes) r *= p;
        return r;
    }
};

inline BadPrimeData bad_prime_integer(const QCover& cover) {
    Integer prod = 1;
    auto fold = [&](const Integer& x) {
        Integer a = abs(x);
        if (a > 1) prod *= a;
    };
    for (std::uint64_t q = 2; q <= cover.degree(); ++q)
        if (is_prime_u64(q)) fold(q);
    for (const auto& c : cover.polynomial().coeffs())
        for (const auto& a : c.coeffs()) fold(denominator_of(a));
    for (const auto& a : cover.locus().coeffs()) fold(denominator_of(a));
    if (cover.locus().degree() >= 2) fold(numerator_of(galspec::discriminant(cover.locus())));
    fold(numerator_of(cover.discriminant().lc()));
    if (!cover.infinity_branched()) fold(numerator_of(galspec::discriminant(fiber_at_infinity(cover.polynomial()))));
    if (cover.degree() == 2) fold(content_numerator(cover.discriminant()));
    auto sf = prime_divisors(prod);
    return {prod, sf.primes, sf.cofactor};
}

/// Reduces a cover over Q modulo a prime where P and D are p-integral.
inline BivariateCover<PrimeField> reduce_cover(const QCover& cover, const PrimeField& F) {
    PolyRing<PrimeField> ring(F);
    auto P = map_coeffs(cover.polynomial(), ring, [&](const QPoly& c) { return reduce_mod(c, F); });
    BranchLocus<PrimeField> bl{reduce_mod(cover.discriminant(), F), reduce_mod(cover.locus(), F),
                               cover.infinity_branched()};
    return BivariateCover<PrimeField>::from_parts(std::move(P), std::move(bl), cover.tag(), cover.params());
}

} // namespace galspec

#endif // GALSPEC_COVER_HPP
