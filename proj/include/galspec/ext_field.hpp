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

#ifndef GALSPEC_EXT_FIELD_HPP
#define GALSPEC_EXT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "domains.hpp"
#include "error.hpp"
#include "ff_factor.hpp"
#include "polynomial.hpp"

namespace galspec {

/// Smallest monic irreducible polynomial of the given degree over GF(p),
/// in the order where lower coefficients vary fastest.
inline Poly<PrimeField> first_irreducible(const PrimeField& base, unsigned degree) {
    if (degree == 0) throw PreconditionError("irreducible polynomial of degree 0");
    const Integer count = pow(base.order(), degree);
    for (Integer idx = 0; idx < count; ++idx) {
        std::vector<std::uint64_t> c(degree + 1, 0);
        Integer rest = idx;
        for (unsigned i = 0; i < degree; ++i) {
            c[i] = static_cast<std::uint64_t>(rest % base.modulus());
            rest /= base.modulus();
        }
        c[degree] = 1;
        Poly<PrimeField> f(base, std::move(c));
        if (is_irreducible_ff(f)) return f;
    }
    throw PreconditionError("no irreducible polynomial found");  // unreachable
}

/// GF(p^f) = GF(p)[a] / (m(a)), elements as coefficient vectors of length f.
class ExtField {
public:
    using Element = std::vector<std::uint64_t>;

    ExtField(const PrimeField& base, const Poly<PrimeField>& modulus)
        : impl_(std::make_shared<Impl>(Impl{base, make_monic(modulus)})) {
        if (!(modulus.domain() == base)) throw DomainMismatch("defining polynomial over a different field");
        if (modulus.degree() < 1) throw PreconditionError("defining polynomial must have degree >= 1");
        if (!is_irreducible_ff(modulus))
            throw NotIrreducibleError("defining polynomial " + modulus.to_string("a") +
                                      " is reducible over " + base.name());
    }

    /// GF(p^f) with the first irreducible polynomial of degree f as modulus.
    ExtField(std::uint64_t p, unsigned f) : ExtField(PrimeField(p), first_irreducible(PrimeField(p), f)) {}

    const PrimeField& base() const { return impl_->base; }
    const Poly<PrimeField>& modulus() const { return impl_->modulus; }
    Integer characteristic() const { return base().characteristic(); }
    unsigned degree() const { return static_cast<unsigned>(modulus().degree()); }
    Integer order() const { return galspec::pow(base().order(), degree()); }
    static constexpr bool is_field = true;
    static constexpr bool is_finite = true;

    Element zero() const { return Element(degree(), 0); }
    Element one() const { return embed(base().one()); }
    Element embed(std::uint64_t c) const {
        Element e = zero();
        e[0] = c;
        return e;
    }
    Element from_int(std::int64_t v) const { return embed(base().from_int(v)); }
    Element from_integer(const Integer& v) const { return embed(base().from_integer(v)); }
    Element from_rational(const Rational& v) const { return embed(base().from_rational(v)); }
    /// The generator a (the class of the variable).
    Element generator() const { return reduce(Poly<PrimeField>::variable(base())); }

    bool is_zero(const Element& a) const {
        for (auto c : a)
            if (c != 0) return false;
        return true;
    }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    Element add(const Element& a, const Element& b) const {
        Element r(degree());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = base().add(a[i], b[i]);
        return r;
    }
    Element sub(const Element& a, const Element& b) const {
        Element r(degree());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = base().sub(a[i], b[i]);
        return r;
    }
    Element neg(const Element& a) const {
        Element r(degree());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = base().neg(a[i]);
        return r;
    }
    Element mul(const Element& a, const Element& b) const { return reduce(as_poly(a) * as_poly(b)); }
    Element inv(const Element& a) const {
        if (is_zero(a)) throw ZeroInputError("inverse of zero in " + name());
        auto eg = ext_gcd(as_poly(a), modulus());
        return reduce(eg.s);
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    Element exact_div(const Element& a, const Element& b) const { return div(a, b); }

    Element pow(Element a, Integer e) const {
        Element r = one();
        while (e > 0) {
            if ((e & 1) != 0) r = mul(r, a);
            e >>= 1;
            if (e > 0) a = mul(a, a);
        }
        return r;
    }

    /// Inverse Frobenius: a^(p^(f-1)).
    Element pth_root(const Element& a) const {
        return pow(a, galspec::pow(base().order(), degree() - 1));
    }

    /// Polynomial-basis enumeration: index digits in base p, lowest first.
    Element element_at(Integer index) const {
        Element e = zero();
        const auto p = base().modulus();
        index = mod(index, order());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = static_cast<std::uint64_t>(index % p);
            index /= p;
        }
        return e;
    }
    Integer index_of(const Element& a) const {
        Integer idx = 0;
        for (std::size_t i = a.size(); i-- > 0;) idx = idx * base().modulus() + a[i];
        return idx;
    }

    Element random(std::mt19937_64& rng) const {
        Element e(degree());
        for (auto& c : e) c = base().random(rng);
        return e;
    }

    std::string to_string(const Element& a) const {
        std::string s = "(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s + ")";
    }
    std::string name() const {
        return "GF(" + base().order().str() + "^" + std::to_string(degree()) + ")";
    }

    bool operator==(const ExtField& o) const {
        return impl_ == o.impl_ || (base() == o.base() && modulus() == o.modulus());
    }

    Poly<PrimeField> as_poly(const Element& a) const { return Poly<PrimeField>(base(), a); }

    Element reduce(const Poly<PrimeField>& p) const {
        Poly<PrimeField> r = p % modulus();
        Element e = zero();
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) e[i] = r.coeffs()[i];
        return e;
    }

private:
    struct Impl {
        PrimeField base;
        Poly<PrimeField> modulus;
    };
    std::shared_ptr<const Impl> impl_;
};

} // namespace galspec

#endif // GALSPEC_EXT_FIELD_HPP
