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

#ifndef GALSPEC_GRUNWALD_HPP
#define GALSPEC_GRUNWALD_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cover.hpp"
#include "specialization.hpp"

namespace galspec {

namespace detail {

inline void check_good(const QCover& cover, const Integer& p) {
    auto rep = is_good_prime(cover, p);
    if (rep.good) return;
    std::string why;
    for (const auto& r : rep.reasons) why += (why.empty() ? "" : "; ") + r;
    throw BadPrimeError(p.str() + " is a bad prime for the cover: " + why);
}

} // namespace detail

/// Residues t in GF(p), in increasing order, off the branch locus and with
/// P(t, Y) mod p of the given factorization pattern.
inline std::vector<std::uint64_t> local_solutions(const QCover& cover, const Integer& p, const Partition& target) {
    if (target.total() != cover.degree())
        throw PreconditionError("partition " + target.to_string() + " does not sum to n = " +
                                std::to_string(cover.degree()));
    detail::check_good(cover, p);
    PrimeField F(p);
    auto red = reduce_cover(cover, F);
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 0; t < F.modulus(); ++t) {
        if (red.is_branch_point(t)) continue;
        if (Partition(factor_ff(red.fiber(t)).degree_pattern()) == target) out.push_back(t);
    }
    return out;
}

/// {n}, {n-1,1}, {2,1,...,1} with repeats removed (they coincide for n <= 3).
inline std::vector<Partition> trick_patterns(unsigned n) {
    if (n < 2) throw PreconditionError("trick patterns need n >= 2");
    std::vector<Partition> out{Partition({n})};
    auto add = [&](Partition p) {
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    };
    add(Partition(std::vector<unsigned>{n - 1, 1}));
    std::vector<unsigned> t{2};
    for (unsigned i = 2; i < n; ++i) t.push_back(1);
    add(Partition(t));
    return out;
}

/// Cycle types whose joint presence forces Galois group S_n; for n = 2 the
/// identity pattern {1,1} adds nothing.
inline std::vector<Partition> sn_witness_patterns(unsigned n) {
    auto pats = trick_patterns(n);
    if (n == 2) pats.resize(1);
    return pats;
}

struct LocalChoice {
    Integer prime;
    Partition pattern;
    Integer residue;  ///< smallest qualifying residue
};

/// Smallest good primes above n, outside `exclude` and distinct from each
/// other, that realize the trick patterns locally.
inline std::vector<LocalChoice> standard_trick_primes(const QCover& cover, const std::set<Integer>& exclude,
                                                      std::uint64_t search_limit = 100000) {
    const unsigned n = cover.degree();
    std::vector<LocalChoice> out;
    std::set<Integer> used = exclude;
    for (const auto& pat : trick_patterns(n)) {
        bool found = false;
        for (std::uint64_t p = next_prime(n); p <= search_limit; p = next_prime(p)) {
            if (used.count(p) || !is_good_prime(cover, p).good) continue;
            auto sols = local_solutions(cover, p, pat);
            if (sols.empty()) continue;
            out.push_back({p, pat, Integer(sols.front())});
            used.insert(p);
            found = true;
            break;
        }
        if (!found)
            throw BudgetExhausted("no good prime up to " + std::to_string(search_limit) + " realizes " +
                                  pat.to_string());
    }
    return out;
}

/// Frobenius cycle types observed at good primes; a certificate holds once
/// every trick pattern has a witness.
struct SnCertificate {
    bool conclusive = false;
    bool degenerate = false;  ///< P(t0, Y) reducible: Galois group not transitive
    std::string note;
    std::vector<std::pair<Partition, Integer>> witnesses;
    std::size_t primes_scanned = 0;
};

inline SnCertificate certify_sn(const QCover& cover, const Rational& t0, std::size_t prime_budget) {
    if (cover.is_branch_point(t0))
        throw RamifiedPointError("t0 = " + to_string(t0) + " lies on the branch locus");
    const unsigned n = cover.degree();
    SnCertificate cert;
    auto fib = cover.fiber(t0);
    if (n == 1) {
        cert.conclusive = true;
        cert.note = "n = 1";
        return cert;
    }
    if (!factor_z(fib).is_single_irreducible()) {
        cert.degenerate = true;
        cert.note = "P(t0, Y) is reducible over Q";
        return cert;
    }
    auto wanted = sn_witness_patterns(n);
    std::vector<bool> seen(wanted.size(), false);
    std::size_t left = wanted.size();
    std::uint64_t p = 1;
    for (std::size_t k = 0; k < prime_budget && left > 0; ++k) {
        p = next_prime(p);
        ++cert.primes_scanned;
        if (!p_integral(fib, Integer(p)) || !is_good_prime(cover, p).good) continue;
        PrimeField F(p);
        auto f = reduce_mod(fib, F);
        if (gcd(f, derivative(f)).degree() > 0) continue;
        Partition pat(factor_ff(f).degree_pattern());
        for (std::size_t i = 0; i < wanted.size(); ++i)
            if (!seen[i] && wanted[i] == pat) {
                seen[i] = true;
                --left;
                cert.witnesses.push_back({pat, p});
            }
    }
    cert.conclusive = left == 0;
    if (!cert.conclusive)
        cert.note = "budget of " + std::to_string(prime_budget) + " primes exhausted before all patterns were seen";
    return cert;
}

struct SearchSpec {
    QCover cover;
    std::vector<std::pair<Integer, Partition>> constraints;
    std::size_t max_candidates = 3;
    std::size_t prime_budget = 200;
    std::uint64_t seed = 0;
    std::size_t enumeration_budget = 10000;
};

struct CertifiedPoint {
    Integer t0;
    std::vector<std::pair<Integer, Partition>> local_patterns;  ///< spec primes, then trick primes
    Integer irreducibility_prime;
    SnCertificate sn;
};

struct ProgressionResult {
    Integer b;
    Integer M;
    Integer beta;  ///< product of the trick primes
    std::vector<LocalChoice> constraint_choices;
    std::vector<LocalChoice> trick_primes;
    std::vector<CertifiedPoint> certified;
    std::size_t candidates_tried = 0;
    Integer constant_c;
    Integer m0;
    std::vector<std::string> warnings;
};

/// Smallest m0 such that [c, m0] holds at least r + 3 primes.
inline Integer addendum_m0(const QCover& cover) {
    auto p = static_cast<std::uint64_t>(constant_c(cover) - 1);
    for (unsigned k = 0; k < cover.branch_point_count() + 3; ++k) p = next_prime(p);
    return p;
}

inline ProgressionResult grunwald_search(const SearchSpec& spec) {
    const auto& cover = spec.cover;
    const unsigned n = cover.degree();
    if (n < 2) throw PreconditionError("search needs n >= 2");
    ProgressionResult res;
    std::set<Integer> primes;
    for (const auto& [p, part] : spec.constraints) {
        if (!is_prime(p)) throw NotPrimeError(p.str() + " is not prime");
        if (!primes.insert(p).second) throw PreconditionError("prime " + p.str() + " is constrained twice");
        if (part.total() != n)
            throw PreconditionError("partition " + part.to_string() + " at " + p.str() + " does not sum to n = " +
                                    std::to_string(n));
        auto sols = local_solutions(cover, p, part);
        if (sols.empty())
            throw InfeasibleError("no residue mod " + p.str() + " gives pattern " + part.to_string());
        res.constraint_choices.push_back({p, part, Integer(sols.front())});
    }
    res.trick_primes = standard_trick_primes(cover, primes);
    std::vector<std::pair<Integer, Integer>> congruences;
    res.beta = 1;
    for (const auto& c : res.constraint_choices) congruences.push_back({c.residue, c.prime});
    for (const auto& c : res.trick_primes) {
        congruences.push_back({c.residue, c.prime});
        res.beta *= c.prime;
    }
    auto cg = crt(congruences);
    res.b = cg.residue;
    res.M = cg.modulus;
    res.constant_c = constant_c(cover);
    res.m0 = addendum_m0(cover);

    const Integer& p_irr = res.trick_primes.front().prime;
    for (std::size_t k = 0; k < spec.enumeration_budget && res.certified.size() < spec.max_candidates; ++k) {
        Integer t0 = res.b + Integer(k) * res.M;
        ++res.candidates_tried;
        if (cover.is_branch_point(Rational(t0))) continue;
        CertifiedPoint pt;
        pt.t0 = t0;
        for (const auto& c : res.constraint_choices) {
            auto got = residue_degrees_at(cover, t0, c.prime);
            if (got != c.pattern)
                throw PreconditionError("local pattern at " + c.prime.str() + " changed along the progression");
            pt.local_patterns.push_back({c.prime, got});
        }
        for (const auto& c : res.trick_primes) pt.local_patterns.push_back({c.prime, residue_degrees_at(cover, t0, c.prime)});
        if (pt.local_patterns[res.constraint_choices.size()].second != Partition({n})) continue;
        pt.irreducibility_prime = p_irr;
        pt.sn = certify_sn(cover, Rational(t0), spec.prime_budget);
        if (!pt.sn.conclusive) {
            res.warnings.push_back("t0 = " + t0.str() + ": S_n certificate inconclusive (" + pt.sn.note + ")");
            continue;
        }
        res.certified.push_back(std::move(pt));
    }
    if (res.certified.size() < spec.max_candidates)
        throw BudgetExhausted("only " + std::to_string(res.certified.size()) + " of " +
                              std::to_string(spec.max_candidates) + " points certified after " +
                              std::to_string(res.candidates_tried) + " candidates");
    return res;
}

} // namespace galspec

#endif // GALSPEC_GRUNWALD_HPP
