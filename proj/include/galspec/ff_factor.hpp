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

#ifndef GALSPEC_FF_FACTOR_HPP
#define GALSPEC_FF_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "polynomial.hpp"

namespace galspec {

// Factorization over a finite field F. F must provide order(),
// characteristic(), degree(), pth_root(), random(rng) and index_of()
// on top of the usual field operations.

template <class D>
struct Factor {
    Poly<D> poly;
    unsigned multiplicity;
};

/// Factorization f = unit * prod poly_i^multiplicity_i with monic,
/// pairwise distinct factors listed in canonical order.
template <class D>
struct Factorization {
    typename D::Element unit;
    std::vector<Factor<D>> factors;

    /// Degrees of the factors, each repeated by its multiplicity, descending.
    std::vector<unsigned> degree_pattern() const {
        std::vector<unsigned> out;
        for (const auto& f : factors)
            for (unsigned i = 0; i < f.multiplicity; ++i)
                out.push_back(static_cast<unsigned>(f.poly.degree()));
        std::sort(out.rbegin(), out.rend());
        return out;
    }

    bool is_single_irreducible() const {
        return factors.size() == 1 && factors.front().multiplicity == 1;
    }
};

namespace detail {

/// Canonical order: by degree, then coefficient indices from the top.
template <class D>
bool canonical_less(const Poly<D>& a, const Poly<D>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& dom = a.domain();
    for (int i = a.degree(); i >= 0; --i) {
        auto ia = dom.index_of(a.coeffs()[static_cast<std::size_t>(i)]);
        auto ib = dom.index_of(b.coeffs()[static_cast<std::size_t>(i)]);
        if (ia != ib) return ia < ib;
    }
    return false;
}

template <class D>
void sort_and_merge(std::vector<Factor<D>>& fs) {
    std::sort(fs.begin(), fs.end(),
              [](const Factor<D>& a, const Factor<D>& b) { return canonical_less(a.poly, b.poly); });
    std::vector<Factor<D>> merged;
    for (auto& f : fs) {
        if (!merged.empty() && merged.back().poly == f.poly)
            merged.back().multiplicity += f.multiplicity;
        else
            merged.push_back(std::move(f));
    }
    fs = std::move(merged);
}

/// Undo the Frobenius on a polynomial whose exponents are all multiples of p.
template <class D>
Poly<D> pth_root_poly(const Poly<D>& f, std::uint64_t p) {
    const auto& dom = f.domain();
    std::vector<typename D::Element> v;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(dom.pth_root(f.coeffs()[i]));
    return Poly<D>(dom, std::move(v));
}

template <class D>
Poly<D> one_poly(const D& dom) {
    return Poly<D>::constant(dom, dom.one());
}

template <class D>
Poly<D> random_poly(const D& dom, int below_degree, std::mt19937_64& rng) {
    std::vector<typename D::Element> v;
    for (int i = 0; i < below_degree; ++i) v.push_back(dom.random(rng));
    return Poly<D>(dom, std::move(v));
}

} // namespace detail

/// Squarefree decomposition of a monic polynomial over a finite field.
/// Returned parts are squarefree and monic but not necessarily coprime
/// across entries; callers merge after full factorization.
template <class D>
std::vector<Factor<D>> squarefree_decomposition(const Poly<D>& f_in) {
    const auto& dom = f_in.domain();
    const auto p = static_cast<std::uint64_t>(dom.characteristic());
    std::vector<Factor<D>> out;
    Poly<D> f = make_monic(f_in);
    if (f.degree() < 1) return out;
    const Poly<D> one = detail::one_poly(dom);
    Poly<D> c = gcd(f, derivative(f));
    Poly<D> w = f / c;
    unsigned i = 1;
    while (w != one) {
        Poly<D> y = gcd(w, c);
        Poly<D> fac = w / y;
        if (fac.degree() > 0) out.push_back({make_monic(fac), i});
        w = y;
        c = c / y;
        ++i;
    }
    if (c != one) {
        c = make_monic(c);
        for (auto& part : squarefree_decomposition(detail::pth_root_poly(c, p))) {
            part.multiplicity *= static_cast<unsigned>(p);
            out.push_back(std::move(part));
        }
    }
    return out;
}

/// Distinct-degree factorization of a squarefree monic polynomial:
/// pairs (product of all irreducible factors of degree d, d).
template <class D>
std::vector<std::pair<Poly<D>, unsigned>> distinct_degree_factorization(const Poly<D>& f_in) {
    const auto& dom = f_in.domain();
    const Integer q = dom.order();
    std::vector<std::pair<Poly<D>, unsigned>> out;
    Poly<D> f = make_monic(f_in);
    const Poly<D> x = Poly<D>::variable(dom);
    Poly<D> h = x % f;
    unsigned i = 1;
    while (f.degree() >= 2 * static_cast<int>(i)) {
        h = pow_mod(h, q, f);
        Poly<D> g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
        ++i;
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

/// Splits a monic product of irreducibles of common degree d.
/// Cantor-Zassenhaus for odd q, trace splitting for q a power of two.
template <class D>
void equal_degree_split(const Poly<D>& g, unsigned d, std::mt19937_64& rng, std::vector<Poly<D>>& out) {
    if (g.degree() <= static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    const auto& dom = g.domain();
    const Integer q = dom.order();
    const bool even = dom.characteristic() == 2;
    const Poly<D> one = detail::one_poly(dom);
    for (;;) {
        Poly<D> a = detail::random_poly(dom, g.degree(), rng);
        if (a.degree() < 1) continue;
        Poly<D> b(dom);
        if (!even) {
            Integer e = (pow(q, d) - 1) / 2;
            b = pow_mod(a, e, g) - one;
        } else {
            // Tr(a) = a + a^2 + ... + a^(2^(k d - 1)), q = 2^k
            const unsigned steps = dom.degree() * d;
            Poly<D> term = a % g;
            b = term;
            for (unsigned s = 1; s < steps; ++s) {
                term = mul_mod(term, term, g);
                b = b + term;
            }
        }
        Poly<D> h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(make_monic(g / h), d, rng, out);
            return;
        }
    }
}

/// Full factorization over a finite field; deterministic for a given seed.
template <class D>
Factorization<D> factor_ff(const Poly<D>& f, std::uint64_t seed = 0) {
    if (f.is_zero()) throw ZeroInputError("factor_ff of the zero polynomial");
    const auto& dom = f.domain();
    Factorization<D> result{f.lc(), {}};
    if (f.degree() == 0) return result;
    std::mt19937_64 rng(seed);
    for (const auto& part : squarefree_decomposition(f)) {
        for (const auto& [g, d] : distinct_degree_factorization(part.poly)) {
            std::vector<Poly<D>> pieces;
            equal_degree_split(g, d, rng, pieces);
            for (auto& piece : pieces) result.factors.push_back({make_monic(piece), part.multiplicity});
        }
    }
    (void)dom;
    detail::sort_and_merge(result.factors);
    return result;
}

/// Rabin's irreducibility test.
template <class D>
bool is_irreducible_ff(const Poly<D>& f_in) {
    if (f_in.degree() < 1) throw PreconditionError("irreducibility needs degree >= 1");
    const auto& dom = f_in.domain();
    const Poly<D> f = make_monic(f_in);
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;
    const Integer q = dom.order();
    const Poly<D> x = Poly<D>::variable(dom);
    // x^(q^k) mod f for increasing k, by repeated q-th powers
    std::vector<Poly<D>> frob(n + 1, Poly<D>(dom));
    frob[0] = x % f;
    for (unsigned k = 1; k <= n; ++k) frob[k] = pow_mod(frob[k - 1], q, f);
    if (frob[n] != x % f) return false;
    auto divisors = prime_divisors(Integer(n)).primes;
    for (const auto& r : divisors) {
        unsigned k = n / static_cast<unsigned>(r);
        if (gcd(f, frob[k] - x).degree() > 0) return false;
    }
    return true;
}

} // namespace galspec

#endif // GALSPEC_FF_FACTOR_HPP
