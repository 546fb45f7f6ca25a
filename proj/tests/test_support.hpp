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

// Shared helpers and independent oracles for the test suites. Nothing in
// here calls into the algorithms it is used to check.

#ifndef GALSPEC_TEST_SUPPORT_HPP
#define GALSPEC_TEST_SUPPORT_HPP

#include <galspec/polynomial.hpp>

#include <algorithm>
#include <random>
#include <vector>

namespace galspec::testing {

template <class D>
Poly<D> random_poly(const D& dom, int degree, std::mt19937_64& rng, bool monic = false) {
    std::vector<typename D::Element> v;
    for (int i = 0; i < degree; ++i) v.push_back(dom.random(rng));
    typename D::Element top = dom.random(rng);
    while (dom.is_zero(top)) top = dom.random(rng);
    v.push_back(monic ? dom.one() : top);
    return Poly<D>(dom, std::move(v));
}

inline Poly<RationalField> random_qpoly(int degree, int coeff_bound, std::mt19937_64& rng) {
    RationalField Q;
    std::uniform_int_distribution<int> dist(-coeff_bound, coeff_bound);
    std::vector<Rational> v;
    for (int i = 0; i < degree; ++i) v.emplace_back(dist(rng));
    int top = 0;
    while (top == 0) top = dist(rng);
    v.emplace_back(top);
    return Poly<RationalField>(Q, std::move(v));
}

/// Determinant by Gaussian elimination over a field.
template <class D>
typename D::Element determinant(const D& dom, std::vector<std::vector<typename D::Element>> m) {
    const std::size_t n = m.size();
    auto det = dom.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && dom.is_zero(m[piv][col])) ++piv;
        if (piv == n) return dom.zero();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = dom.neg(det);
        }
        det = dom.mul(det, m[col][col]);
        auto inv = dom.inv(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            auto f = dom.mul(m[r][col], inv);
            if (dom.is_zero(f)) continue;
            for (std::size_t c = col; c < n; ++c) m[r][c] = dom.sub(m[r][c], dom.mul(f, m[col][c]));
        }
    }
    return det;
}

/// Sylvester matrix determinant with the rows of a on top.
template <class D>
typename D::Element sylvester_resultant(const Poly<D>& a, const Poly<D>& b) {
    const auto& dom = a.domain();
    const std::size_t m = static_cast<std::size_t>(a.degree());
    const std::size_t n = static_cast<std::size_t>(b.degree());
    const std::size_t size = m + n;
    if (size == 0) return dom.one();
    std::vector<std::vector<typename D::Element>> mat(size, std::vector<typename D::Element>(size, dom.zero()));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) mat[r][r + i] = a.coeffs()[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) mat[n + r][r + i] = b.coeffs()[n - i];
    return determinant(dom, std::move(mat));
}

/// Brute-force root list over a prime field.
inline std::vector<std::uint64_t> roots_by_scan(const Poly<PrimeField>& f) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < f.domain().modulus(); ++x)
        if (f(x) == 0) out.push_back(x);
    return out;
}

/// Smallest prime factor search by trial division (oracle for primality).
inline bool naive_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace galspec::testing

#endif // GALSPEC_TEST_SUPPORT_HPP
