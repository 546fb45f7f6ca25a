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

#ifndef GALSPEC_SPECIALIZATION_HPP
#define GALSPEC_SPECIALIZATION_HPP

#include <string>
#include <vector>

#include "cover.hpp"
#include "ff_factor.hpp"
#include "partition.hpp"
#include "zfactor.hpp"

namespace galspec {

/// The product of number fields Q[Y]/(Q_l), one per irreducible factor.
struct EtaleAlgebraDescriptor {
    std::string base;
    std::vector<Factor<RationalField>> factors;

    Partition pattern() const {
        std::vector<unsigned> parts;
        for (const auto& f : factors)
            for (unsigned i = 0; i < f.multiplicity; ++i) parts.push_back(static_cast<unsigned>(f.poly.degree()));
        return Partition(parts);
    }
    unsigned degree() const { return pattern().total(); }
};

namespace detail {

template <class D>
Poly<D> unramified_fiber(const BivariateCover<D>& cover, const typename D::Element& t0) {
    const auto& F = cover.field();
    if (cover.is_branch_point(t0))
        throw RamifiedPointError("t0 = " + F.to_string(t0) + " lies on the branch locus " +
                                 cover.locus().to_string("T"));
    return cover.fiber(t0);
}

template <class D>
Partition pattern_of(const Factorization<D>& fac, const std::string& where) {
    for (const auto& f : fac.factors)
        if (f.multiplicity != 1) throw RamifiedPointError("specialization at " + where + " is not squarefree");
    return Partition(fac.degree_pattern());
}

} // namespace detail

/// Degrees of the irreducible factors of P(t0, Y) over the base field.
template <class D>
Partition specialize_pattern(const BivariateCover<D>& cover, const typename D::Element& t0) {
    auto fib = detail::unramified_fiber(cover, t0);
    const std::string where = "t0 = " + cover.field().to_string(t0);
    if constexpr (std::is_same_v<D, RationalField>)
        return detail::pattern_of(factor_z(fib), where);
    else
        return detail::pattern_of(factor_ff(fib), where);
}

inline EtaleAlgebraDescriptor etale_algebra(const QCover& cover, const Rational& t0) {
    auto fac = factor_z(detail::unramified_fiber(cover, t0));
    detail::pattern_of(fac, "t0 = " + to_string(t0));
    return {"Q", fac.factors};
}

/// Residue-degree partition at a good prime p of the etale algebra of
/// specializations at an integer point t0 (read off from P(t0, Y) mod p).
inline Partition residue_degrees_at(const QCover& cover, const Integer& t0, const Integer& p) {
    auto report = is_good_prime(cover, p);
    if (!report.good) {
        std::string why;
        for (const auto& r : report.reasons) why += (why.empty() ? "" : "; ") + r;
        throw BadPrimeError(p.str() + " is a bad prime for the cover: " + why);
    }
    PrimeField F(p);
    auto red = reduce_cover(cover, F);
    auto t = F.from_integer(t0);
    if (red.is_branch_point(t))
        throw RamifiedPointError("t0 = " + t0.str() + " meets the branch locus mod " + p.str());
    return detail::pattern_of(factor_ff(red.fiber(t)), "t0 = " + t0.str() + " mod " + p.str());
}

} // namespace galspec

#endif // GALSPEC_SPECIALIZATION_HPP
