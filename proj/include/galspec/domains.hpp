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

#ifndef GALSPEC_DOMAINS_HPP
#define GALSPEC_DOMAINS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "error.hpp"
#include "integer.hpp"

namespace galspec {

// A coefficient domain is a small value type that owns the context its
// elements need (a modulus, a defining polynomial) and provides the ring
// operations on a plain Element type. Polynomials carry their domain, and
// two polynomials only combine when their domains compare equal.

/// The rational numbers.
class RationalField {
public:
    using Element = Rational;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(std::int64_t v) const { return Rational(v); }
    Element from_integer(const Integer& v) const { return Rational(v); }
    Element from_rational(const Rational& v) const { return v; }

    bool is_zero(const Element& a) const { return a == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const {
        if (a == 0) throw ZeroInputError("inverse of zero in Q");
        return 1 / a;
    }
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    Element exact_div(const Element& a, const Element& b) const { return div(a, b); }

    Integer characteristic() const { return 0; }
    static constexpr bool is_field = true;
    static constexpr bool is_finite = false;

    std::string to_string(const Element& a) const { return galspec::to_string(a); }
    std::string name() const { return "Q"; }

    bool operator==(const RationalField&) const { return true; }
};

/// The integers, used for lifting and recombination.
class IntegerRing {
public:
    using Element = Integer;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(std::int64_t v) const { return Integer(v); }
    Element from_integer(const Integer& v) const { return v; }

    bool is_zero(const Element& a) const { return a == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element exact_div(const Element& a, const Element& b) const {
        if (b == 0 || a % b != 0)
            throw PreconditionError("inexact integer division " + a.str() + " / " + b.str());
        return a / b;
    }
    Element inv(const Element& a) const {
        if (a != 1 && a != -1) throw PreconditionError(a.str() + " is not a unit in Z");
        return a;
    }

    Integer characteristic() const { return 0; }
    static constexpr bool is_field = false;

    std::string to_string(const Element& a) const { return a.str(); }
    std::string name() const { return "Z"; }

    bool operator==(const IntegerRing&) const { return true; }
};

/// GF(p) for a prime p < 2^61, elements stored as residues in [0, p).
class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(Integer(p))) throw NotPrimeError(std::to_string(p) + " is not prime");
    }
    explicit PrimeField(const Integer& p) : PrimeField(checked(p)) {}

    std::uint64_t modulus() const { return p_; }
    Integer characteristic() const { return p_; }
    Integer order() const { return p_; }
    unsigned degree() const { return 1; }
    static constexpr bool is_field = true;
    static constexpr bool is_finite = true;

    Element zero() const { return 0; }
    Element one() const { return 1 % p_; }
    Element from_int(std::int64_t v) const {
        auto m = static_cast<std::int64_t>(p_);
        std::int64_t r = v % m;
        return static_cast<Element>(r < 0 ? r + m : r);
    }
    Element from_integer(const Integer& v) const { return mod_u64(v, p_); }
    Element from_rational(const Rational& v) const {
        Element d = from_integer(denominator_of(v));
        if (d == 0)
            throw DomainMismatch("denominator of " + galspec::to_string(v) +
                                 " vanishes mod " + std::to_string(p_));
        return mul(from_integer(numerator_of(v)), inv(d));
    }

    bool is_zero(const Element& a) const { return a == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const { return mul_mod(a, b, p_); }
    Element pow(Element a, std::uint64_t e) const { return pow_mod(a, e, p_); }
    Element inv(Element a) const {
        if (a == 0) throw ZeroInputError("inverse of zero in GF(" + std::to_string(p_) + ")");
        return pow_mod(a, p_ - 2, p_);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element exact_div(Element a, Element b) const { return div(a, b); }

    /// Inverse of Frobenius; the identity on a prime field.
    Element pth_root(Element a) const { return a; }

    /// Fixed enumeration of the field: index i <-> residue i.
    Element element_at(const Integer& index) const { return mod_u64(index, p_); }
    Integer index_of(Element a) const { return a; }

    Element random(std::mt19937_64& rng) const {
        return std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng);
    }

    /// Symmetric lift to (-p/2, p/2].
    Integer lift_symmetric(Element a) const {
        return a > p_ / 2 ? Integer(a) - Integer(p_) : Integer(a);
    }

    std::string to_string(const Element& a) const { return std::to_string(a); }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    static std::uint64_t checked(const Integer& p) {
        if (p < 2 || p > prime_cap())
            throw NotPrimeError(p.str() + " is not a prime below 2^61");
        return static_cast<std::uint64_t>(p);
    }

    std::uint64_t p_;
};

} // namespace galspec

#endif // GALSPEC_DOMAINS_HPP
