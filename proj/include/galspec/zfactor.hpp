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

#ifndef GALSPEC_ZFACTOR_HPP
#define GALSPEC_ZFACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "domains.hpp"
#include "error.hpp"
#include "ff_factor.hpp"
#include "integer.hpp"
#include "polynomial.hpp"

namespace galspec {

using QPoly = Poly<RationalField>;
using ZPoly = Poly<IntegerRing>;

/// Largest degree handled by factor_z; subset recombination is exponential.
inline constexpr int max_factor_z_degree = 24;

inline Integer content(const ZPoly& f) {
    Integer c = 0;
    for (const auto& a : f.coeffs()) c = gcd(c, a);
    return c;
}

/// Primitive part with positive leading coefficient.
inline ZPoly primitive_part(const ZPoly& f) {
    if (f.is_zero()) return f;
    Integer c = content(f);
    if (f.lc() < 0) c = -c;
    std::vector<Integer> v;
    for (const auto& a : f.coeffs()) v.push_back(a / c);
    return ZPoly(f.domain(), std::move(v));
}

/// Scales a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
inline ZPoly to_primitive_z(const QPoly& f) {
    Integer l = 1;
    for (const auto& a : f.coeffs()) {
        Integer d = denominator_of(a);
        l = l / gcd(l, d) * d;
    }
    std::vector<Integer> v;
    for (const auto& a : f.coeffs()) v.push_back(numerator_of(a) * (l / denominator_of(a)));
    return primitive_part(ZPoly(IntegerRing{}, std::move(v)));
}

inline QPoly to_q(const ZPoly& f) {
    return map_coeffs(f, RationalField{}, [](const Integer& a) { return Rational(a); });
}

inline Poly<PrimeField> reduce_mod(const ZPoly& f, const PrimeField& F) {
    return map_coeffs(f, F, [&](const Integer& a) { return F.from_integer(a); });
}

inline Poly<PrimeField> reduce_mod(const QPoly& f, const PrimeField& F) {
    return map_coeffs(f, F, [&](const Rational& a) { return F.from_rational(a); });
}

/// Squarefree decomposition over Q (Yun); parts are monic and pairwise coprime.
inline std::vector<Factor<RationalField>> squarefree_decomposition_q(const QPoly& f_in) {
    std::vector<Factor<RationalField>> out;
    QPoly f = make_monic(f_in);
    if (f.degree() < 1) return out;
    QPoly df = derivative(f);
    QPoly a = gcd(f, df);
    QPoly b = f / a;
    QPoly c = df / a;
    QPoly d = c - derivative(b);
    unsigned i = 1;
    while (b.degree() > 0) {
        QPoly ai = gcd(b, d);
        b = b / ai;
        c = d / ai;
        d = c - derivative(b);
        if (ai.degree() > 0) out.push_back({make_monic(ai), i});
        ++i;
    }
    return out;
}

namespace detail {

inline ZPoly mod_poly(const ZPoly& f, const Integer& m) {
    std::vector<Integer> v;
    for (const auto& a : f.coeffs()) v.push_back(mod(a, m));
    return ZPoly(f.domain(), std::move(v));
}

inline ZPoly mods_poly(const ZPoly& f, const Integer& m) {
    std::vector<Integer> v;
    const Integer half = m / 2;
    for (const auto& a : f.coeffs()) {
        Integer r = mod(a, m);
        if (r > half) r -= m;
        v.push_back(r);
    }
    return ZPoly(f.domain(), std::move(v));
}

inline ZPoly lift_poly(const Poly<PrimeField>& f) {
    return map_coeffs(f, IntegerRing{}, [](std::uint64_t a) { return Integer(a); });
}

/// Lifts F = g*h (mod p), g monic and coprime to h, to F = G*H (mod p^k).
inline std::pair<ZPoly, ZPoly> hensel_lift_pair(const ZPoly& F, const Poly<PrimeField>& g,
                                                const Poly<PrimeField>& h, const PrimeField& Fp,
                                                unsigned k) {
    const Integer p = Fp.modulus();
    auto eg = ext_gcd(g, h);
    if (eg.g.degree() != 0) throw PreconditionError("Hensel lifting needs coprime factors");
    ZPoly G = lift_poly(g);
    ZPoly H = lift_poly(h);
    Integer pj = p;
    for (unsigned j = 1; j < k; ++j) {
        ZPoly diff = F - G * H;
        std::vector<Integer> ev;
        for (const auto& a : diff.coeffs()) ev.push_back(a / pj);
        Poly<PrimeField> e = reduce_mod(ZPoly(IntegerRing{}, std::move(ev)), Fp);
        Poly<PrimeField> sigma0 = eg.s * e;  // multiplies g
        Poly<PrimeField> tau0 = eg.t * e;    // multiplies h
        auto [q, sigma_r] = divmod(sigma0, h);
        // keep the correction to G below deg g so G stays monic
        auto [q2, tau] = divmod(tau0 + q * g, g);
        Poly<PrimeField> sigma = sigma_r + q2 * h;
        // now g*sigma + h*tau = e with deg tau < deg g
        G = G + lift_poly(tau).scale(pj);
        H = H + lift_poly(sigma).scale(pj);
        pj *= p;
        G = mod_poly(G, pj);
        H = mod_poly(H, pj);
    }
    return {G, H};
}

/// Lifts a factorization F = lc(F) * prod g_i (mod p) into monic factors mod p^k.
inline std::vector<ZPoly> hensel_lift(const ZPoly& F, const std::vector<Poly<PrimeField>>& gs,
                                      const PrimeField& Fp, unsigned k) {
    const Integer pk = pow(Integer(Fp.modulus()), k);
    if (gs.size() == 1) {
        Integer inv = inv_mod(F.lc(), pk);
        return {mod_poly(F.scale(inv), pk)};
    }
    std::size_t half = gs.size() / 2;
    std::vector<Poly<PrimeField>> left(gs.begin(), gs.begin() + static_cast<long>(half));
    std::vector<Poly<PrimeField>> right(gs.begin() + static_cast<long>(half), gs.end());
    Poly<PrimeField> g = Poly<PrimeField>::constant(Fp, Fp.one());
    for (const auto& x : left) g *= x;
    Poly<PrimeField> h = Poly<PrimeField>::constant(Fp, Fp.from_integer(F.lc()));
    for (const auto& x : right) h *= x;
    auto [G, H] = hensel_lift_pair(F, g, h, Fp, k);
    // G is monic with G = prod(left) mod p; H carries the leading coefficient
    auto a = hensel_lift(G, left, Fp, k);
    auto b = hensel_lift(H, right, Fp, k);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Exact division over Z, or nullopt-like false when g does not divide f.
inline bool divides_z(const ZPoly& g, const ZPoly& f, ZPoly& quotient) {
    auto [q, r] = divmod(to_q(f), to_q(g));
    if (!r.is_zero()) return false;
    std::vector<Integer> v;
    for (const auto& a : q.coeffs()) {
        if (denominator_of(a) != 1) return false;
        v.push_back(numerator_of(a));
    }
    quotient = ZPoly(IntegerRing{}, std::move(v));
    return true;
}

/// Zassenhaus factorization of a primitive squarefree integer polynomial.
inline std::vector<ZPoly> factor_squarefree_z(ZPoly F) {
    if (F.degree() <= 1) return {F};
    const int n = F.degree();
    // choose among the first few suitable primes the one giving fewest modular factors
    std::uint64_t best_p = 0;
    std::vector<Poly<PrimeField>> best;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 5; p = next_prime(p)) {
        if (F.lc() % p == 0) continue;
        PrimeField Fp(p);
        Poly<PrimeField> fp = reduce_mod(F, Fp);
        if (gcd(fp, derivative(fp)).degree() != 0) continue;
        ++tried;
        auto fac = factor_ff(fp, 0);
        if (best_p == 0 || fac.factors.size() < best.size()) {
            best_p = p;
            best.clear();
            for (auto& f : fac.factors) best.push_back(f.poly);
        }
        if (best.size() == 1) break;
    }
    if (best.size() == 1) return {F};
    PrimeField Fp(best_p);
    // coefficient bound for lc(F)/lc(h) * h over all factors h of F
    Integer norm2 = 0;
    for (const auto& a : F.coeffs()) norm2 += a * a;
    Integer bound = abs(F.lc()) * (Integer(1) << n) * (isqrt(norm2) + 1);
    unsigned k = 1;
    Integer pk = best_p;
    while (pk <= 2 * bound) {
        pk *= best_p;
        ++k;
    }
    std::vector<ZPoly> lifted = hensel_lift(F, best, Fp, k);

    std::vector<ZPoly> result;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            ZPoly cand = ZPoly::constant(IntegerRing{}, F.lc());
            for (auto i : idx) cand = mod_poly(cand * lifted[i], pk);
            cand = primitive_part(mods_poly(cand, pk));
            ZPoly quot(IntegerRing{});
            if (divides_z(cand, F, quot)) {
                result.push_back(cand);
                F = primitive_part(quot);
                std::vector<ZPoly> rest;
                for (std::size_t i = 0, j = 0; i < lifted.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    rest.push_back(lifted[i]);
                }
                lifted = std::move(rest);
                found = true;
                break;
            }
            // next combination
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == lifted.size() - s + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++s;
    }
    if (F.degree() > 0) result.push_back(F);
    return result;
}

} // namespace detail

/// Factorization over Q into monic irreducible factors: f = unit * prod factor^mult.
/// Squarefree parts are factored by the Zassenhaus scheme (modular
/// factorization, Hensel lifting past a Mignotte-type bound, subset
/// recombination). Degrees above max_factor_z_degree are rejected.
inline Factorization<RationalField> factor_z(const QPoly& f) {
    if (f.degree() < 1) throw PreconditionError("factor_z needs degree >= 1");
    if (f.degree() > max_factor_z_degree)
        throw DegreeLimitError("factor_z is limited to degree " + std::to_string(max_factor_z_degree) +
                               ", got " + std::to_string(f.degree()));
    Factorization<RationalField> out{f.lc(), {}};
    for (const auto& part : squarefree_decomposition_q(f)) {
        for (const auto& z : detail::factor_squarefree_z(to_primitive_z(part.poly)))
            out.factors.push_back({make_monic(to_q(z)), part.multiplicity});
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        const auto& ca = a.poly.coeffs();
        const auto& cb = b.poly.coeffs();
        for (std::size_t i = ca.size(); i-- > 0;)
            if (ca[i] != cb[i]) return ca[i] < cb[i];
        return false;
    });
    return out;
}

} // namespace galspec

#endif // GALSPEC_ZFACTOR_HPP
