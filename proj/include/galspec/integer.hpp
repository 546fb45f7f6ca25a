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

#ifndef GALSPEC_INTEGER_HPP
#define GALSPEC_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace galspec {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Integer& a) { return a.str(); }

/// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& q) {
    auto d = denominator_of(q);
    if (d == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + d.str();
}

/// Least nonnegative residue of a modulo m (m > 0).
inline Integer mod(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

inline std::uint64_t mod_u64(const Integer& a, std::uint64_t m) {
    return static_cast<std::uint64_t>(mod(a, Integer(m)));
}

inline Integer gcd(Integer a, Integer b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer pow(const Integer& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline Rational pow(const Rational& base, unsigned exponent) {
    Rational r = 1;
    for (unsigned i = 0; i < exponent; ++i) r *= base;
    return r;
}

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Integer isqrt(const Integer& a) { return boost::multiprecision::sqrt(a); }

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Largest modulus accepted by the prime certifier.
inline const Integer& prime_cap() {
    static const Integer cap = Integer(1) << 61;
    return cap;
}

/// Deterministic trial division. Not meant for anything above desk scale.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

/// Certifies primality by trial division up to sqrt(p); p must not exceed 2^61.
inline bool is_prime(const Integer& p) {
    if (p < 2) return false;
    if (p > prime_cap())
        throw PreconditionError("prime certification is capped at 2^61, got " + p.str());
    return is_prime_u64(static_cast<std::uint64_t>(p));
}

inline std::uint64_t next_prime(std::uint64_t n) {
    if (n < 2) return 2;
    std::uint64_t c = n + 1;
    while (!is_prime_u64(c)) ++c;
    return c;
}

/// Primes dividing a (a != 0) found by trial division up to `limit`;
/// whatever remains is returned as the cofactor (1 when fully factored).
struct SmallFactorization {
    std::vector<Integer> primes;
    Integer cofactor;
};

inline SmallFactorization prime_divisors(Integer a, std::uint64_t limit = 1000000) {
    SmallFactorization out;
    a = abs(a);
    if (a == 0) throw ZeroInputError("prime_divisors of zero");
    for (std::uint64_t d = 2; d <= limit && Integer(d) * d <= a; d += (d == 2 ? 1 : 2)) {
        if (a % d == 0) {
            out.primes.emplace_back(d);
            while (a % d == 0) a /= d;
        }
    }
    if (a > 1 && a <= Integer(limit) * limit) {
        out.primes.push_back(a);
        a = 1;
    }
    out.cofactor = a;
    return out;
}

/// Inverse of a modulo m; throws when gcd(a, m) != 1.
inline Integer inv_mod(const Integer& a, const Integer& m) {
    Integer r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        Integer qt = r0 / r1;
        Integer r2 = r0 - qt * r1;
        r0 = r1;
        r1 = r2;
        Integer s2 = s0 - qt * s1;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw NotCoprimeError(a.str() + " is not invertible modulo " + m.str());
    return mod(s0, m);
}

/// Result of a Chinese remainder assembly: 0 <= residue < modulus.
struct Congruence {
    Integer residue;
    Integer modulus;
};

/// Combines pairwise coprime congruences. Throws NotCoprimeError naming
/// the first offending pair of moduli.
inline Congruence crt(const std::vector<std::pair<Integer, Integer>>& pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].second <= 0)
            throw PreconditionError("crt modulus must be positive, got " + pairs[i].second.str());
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            if (gcd(pairs[i].second, pairs[j].second) != 1)
                throw NotCoprimeError("moduli " + pairs[i].second.str() + " and " +
                                      pairs[j].second.str() + " are not coprime");
        }
    }
    Congruence acc{0, 1};
    for (const auto& [res, m] : pairs) {
        // acc.residue + acc.modulus * k = res (mod m)
        Integer diff = mod(res - acc.residue, m);
        Integer inv = m == 1 ? Integer(0) : inv_mod(acc.modulus, m);
        Integer k = mod(diff * inv, m);
        acc.residue += acc.modulus * k;
        acc.modulus *= m;
        acc.residue = mod(acc.residue, acc.modulus);
    }
    return acc;
}

} // namespace galspec

#endif // GALSPEC_INTEGER_HPP
