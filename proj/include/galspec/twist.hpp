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

#ifndef GALSPEC_TWIST_HPP
#define GALSPEC_TWIST_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "perm_group.hpp"

namespace galspec {

/// Left cosets of U in index order of their first element; coset 0 is U.
inline std::vector<std::vector<std::uint32_t>> left_cosets(const FiniteGroup& G, const Subgroup& U) {
    if (!G.is_subgroup(U)) throw GroupError("not a subgroup");
    std::vector<int> seen(G.order(), -1);
    std::vector<std::vector<std::uint32_t>> cosets;
    auto add = [&](std::uint32_t g) {
        std::vector<std::uint32_t> c;
        for (auto u : U) {
            auto x = G.mul(g, u);
            seen[x] = static_cast<int>(cosets.size());
            c.push_back(x);
        }
        std::sort(c.begin(), c.end());
        cosets.push_back(std::move(c));
    };
    add(G.identity());
    for (std::uint32_t g = 0; g < G.order(); ++g)
        if (seen[g] < 0) add(g);
    return cosets;
}

/// G acting on G/U by left multiplication; point 0 is the coset U.
inline PermRep coset_action(const GroupPtr& G, const Subgroup& U) {
    auto cosets = left_cosets(*G, U);
    std::vector<std::uint32_t> which(G->order());
    for (std::uint32_t c = 0; c < cosets.size(); ++c)
        for (auto x : cosets[c]) which[x] = c;
    std::vector<Perm> img;
    for (std::uint32_t g = 0; g < G->order(); ++g) {
        std::vector<std::uint32_t> v(cosets.size());
        for (std::uint32_t c = 0; c < cosets.size(); ++c) v[c] = which[G->mul(g, cosets[c][0])];
        img.emplace_back(std::move(v));
    }
    return PermRep(G, cosets.size(), std::move(img));
}

/// One factor E_l of the algebra attached to an action: an orbit together
/// with the stabilizer of its smallest point.
struct EtaleComponent {
    std::vector<std::uint32_t> orbit;
    std::uint32_t marked;
    Subgroup stabilizer;
};

inline std::vector<EtaleComponent> etale_from_action(const PermRep& mu) {
    std::vector<EtaleComponent> out;
    for (auto& orb : mu.orbits()) out.push_back({orb, orb.front(), mu.stabilizer(orb.front())});
    return out;
}

/// Juxtaposition of the coset actions of H on H/U_l, blocks in input order.
inline PermRep galois_rep_of_algebra(const GroupPtr& H, const std::vector<Subgroup>& subgroups, std::size_t n) {
    std::vector<PermRep> blocks;
    std::size_t total = 0;
    for (const auto& U : subgroups) {
        blocks.push_back(coset_action(H, U));
        total += blocks.back().degree();
    }
    if (total != n)
        throw PreconditionError("subgroup indices sum to " + std::to_string(total) + ", expected " +
                                std::to_string(n));
    std::vector<Perm> img;
    for (std::uint32_t h = 0; h < H->order(); ++h) {
        std::vector<std::uint32_t> v;
        std::uint32_t off = 0;
        for (const auto& b : blocks) {
            for (auto x : b(h).images()) v.push_back(x + off);
            off += static_cast<std::uint32_t>(b.degree());
        }
        img.emplace_back(std::move(v));
    }
    return PermRep(H, n, std::move(img));
}

/// Finite model of 1 -> K -> Gamma -> H -> 1 with a degree-n representation
/// phi of Gamma whose restriction to K is onto S_n.
class ExtensionDatum {
public:
    ExtensionDatum(GroupPtr gamma, Subgroup kernel, GroupHom r, PermRep phi)
        : gamma_(std::move(gamma)), kernel_(std::move(kernel)), r_(std::move(r)), phi_(std::move(phi)) {
        std::sort(kernel_.begin(), kernel_.end());
        if (!r_.source()->same_as(*gamma_) || !phi_.source()->same_as(*gamma_))
            throw GroupError("r and phi must be defined on Gamma");
        if (!gamma_->is_normal(kernel_)) throw GroupError("K is not a normal subgroup of Gamma");
        if (!r_.is_surjective()) throw GroupError("r is not surjective");
        if (r_.kernel() != kernel_) throw GroupError("kernel of r differs from K");
        std::set<Perm> imgK;
        for (auto k : kernel_) imgK.insert(phi_(k));
        if (Integer(imgK.size()) != factorial(static_cast<unsigned>(phi_.degree())))
            throw HypothesisError("phi(K) has order " + std::to_string(imgK.size()) + ", not the full S_" +
                                  std::to_string(phi_.degree()));
    }

    const GroupPtr& gamma() const { return gamma_; }
    const GroupPtr& H() const { return r_.target(); }
    const Subgroup& kernel() const { return kernel_; }
    const GroupHom& r() const { return r_; }
    const PermRep& phi() const { return phi_; }
    std::size_t n() const { return phi_.degree(); }
    std::string label;

private:
    GroupPtr gamma_;
    Subgroup kernel_;
    GroupHom r_;
    PermRep phi_;
};

/// A splitting s: H -> Gamma of r.
struct Section {
    std::vector<std::uint32_t> images;
    std::uint32_t operator()(std::uint32_t tau) const { return images[tau]; }
};

/// All sections, grouped by conjugation under K; classes and their members
/// are listed in the order they are first met.
inline std::vector<std::vector<Section>> enumerate_sections(const ExtensionDatum& d) {
    const auto& G = *d.gamma();
    const auto& H = *d.H();
    if (G.order() > 10000) throw PreconditionError("section enumeration needs |Gamma| <= 10^4");
    std::vector<std::vector<std::uint32_t>> allowed;
    for (auto h : H.generators()) {
        std::vector<std::uint32_t> fib;
        for (std::uint32_t x = 0; x < G.order(); ++x)
            if (d.r()(x) == h) fib.push_back(x);
        allowed.push_back(std::move(fib));
    }
    std::vector<std::vector<Section>> classes;
    std::map<std::vector<std::uint32_t>, std::size_t> class_of;
    for (auto& img : enumerate_homs(H, G, allowed)) {
        std::vector<std::uint32_t> canon = img;
        for (auto k : d.kernel()) {
            std::vector<std::uint32_t> c(img.size());
            for (std::size_t t = 0; t < img.size(); ++t) c[t] = G.conj(k, img[t]);
            canon = std::min(canon, c);
        }
        auto [it, fresh] = class_of.emplace(canon, classes.size());
        if (fresh) classes.emplace_back();
        classes[it->second].push_back(Section{std::move(img)});
    }
    return classes;
}

/// theta acts on S_n (indexed lexicographically) by x -> phi(theta) x chi(theta)^-1
/// with chi = mu o r.
inline PermRep twisted_action(const ExtensionDatum& d, const PermRep& mu) {
    if (!mu.source()->same_as(*d.H())) throw GroupError("mu must be defined on H");
    if (mu.degree() != d.n()) throw GroupError("mu and phi have different degrees");
    if (d.n() > 8) throw PreconditionError("twisted action is built on n! points; n <= 8 required");
    auto Sn = FiniteGroup::symmetric(static_cast<unsigned>(d.n()));
    const auto& G = *d.gamma();
    std::vector<Perm> img;
    for (std::uint32_t th = 0; th < G.order(); ++th) {
        const Perm& a = d.phi()(th);
        Perm b = mu(d.r()(th)).inverse();
        std::vector<std::uint32_t> v(Sn->order());
        for (std::uint32_t x = 0; x < Sn->order(); ++x) v[x] = Sn->index_of(a * Sn->element(x) * b);
        img.emplace_back(std::move(v));
    }
    PermRep out(d.gamma(), Sn->order(), std::move(img));
    // on K the twist is trivial: left translation by phi(theta)
    for (auto k : d.kernel())
        for (std::uint32_t x = 0; x < Sn->order(); ++x)
            if (out(k)(x) != Sn->index_of(d.phi()(k) * Sn->element(x)))
                throw GroupError("twisted action does not restrict to left translation on K");
    return out;
}

struct SectionCheck {
    std::size_t class_index = 0;
    Section section;
    std::vector<Perm> fixed_points;  ///< x0 in S_n fixed by every (twisted o s)(tau)
    std::optional<Perm> witness;     ///< omega, the first fixed point
    bool conjugacy_holds = true;     ///< phi(s(tau)) = omega mu(tau) omega^-1 for all tau
    bool stabilizers_match = true;   ///< Stab_{phi o s}(omega(i)) = Stab_mu(i) for all i
    bool pass = true;
};

struct TwistReport {
    std::size_t n = 0;
    std::size_t class_count = 0;
    std::vector<SectionCheck> sections;
    std::size_t failures = 0;
    bool vacuous() const { return sections.empty(); }
    std::size_t with_fixed_point() const {
        std::size_t c = 0;
        for (const auto& s : sections) c += !s.fixed_points.empty();
        return c;
    }
};

/// For every section s: if the twisted action through s has a fixed point
/// x0, check that x0 conjugates mu into phi o s and that the stabilizer
/// data (hence the etale algebra) of phi o s and mu agree under x0.
inline TwistReport verify_twisting_lemma(const ExtensionDatum& d, const PermRep& mu) {
    auto tw = twisted_action(d, mu);
    auto Sn = FiniteGroup::symmetric(static_cast<unsigned>(d.n()));
    const auto& H = *d.H();
    TwistReport rep;
    rep.n = d.n();
    auto classes = enumerate_sections(d);
    rep.class_count = classes.size();
    for (std::size_t ci = 0; ci < classes.size(); ++ci)
        for (const auto& s : classes[ci]) {
            SectionCheck sc;
            sc.class_index = ci;
            sc.section = s;
            for (std::uint32_t x = 0; x < Sn->order(); ++x) {
                bool fixed = true;
                for (auto g : H.generators()) fixed = fixed && tw(s(g))(x) == x;
                if (fixed) sc.fixed_points.push_back(Sn->element(x));
            }
            for (const auto& x0 : sc.fixed_points) {
                Perm x0i = x0.inverse();
                for (std::uint32_t tau = 0; tau < H.order(); ++tau)
                    if (d.phi()(s(tau)) != x0 * mu(tau) * x0i) sc.conjugacy_holds = false;
                for (std::uint32_t i = 0; i < d.n(); ++i) {
                    Subgroup lhs;
                    for (std::uint32_t tau = 0; tau < H.order(); ++tau)
                        if (d.phi()(s(tau))(x0(i)) == x0(i)) lhs.push_back(tau);
                    if (lhs != mu.stabilizer(i)) sc.stabilizers_match = false;
                }
            }
            if (!sc.fixed_points.empty()) sc.witness = sc.fixed_points.front();
            sc.pass = sc.conjugacy_holds && sc.stabilizers_match;
            rep.failures += !sc.pass;
            rep.sections.push_back(std::move(sc));
        }
    return rep;
}

/// C1, C2, C3, C4, C2xC2, C5, C6, S3 up to the given order.
inline std::vector<GroupPtr> small_groups(std::size_t max_order) {
    std::vector<GroupPtr> out;
    auto keep = [&](GroupPtr g) {
        if (g->order() <= max_order) out.push_back(std::move(g));
    };
    keep(FiniteGroup::generate({}, 1, "C1"));
    keep(FiniteGroup::cyclic(2));
    keep(FiniteGroup::cyclic(3));
    keep(FiniteGroup::cyclic(4));
    keep(FiniteGroup::generate({Perm::from_cycles(4, {{1, 2}}), Perm::from_cycles(4, {{3, 4}})}, 4, "C2xC2"));
    keep(FiniteGroup::cyclic(5));
    keep(FiniteGroup::cyclic(6));
    keep(FiniteGroup::symmetric(3));
    return out;
}

/// Every datum Gamma = S_n x|_alpha H with K = S_n, r the projection, over
/// all actions alpha: H -> Aut(S_n) and all phi: Gamma -> S_n with phi(K) = S_n.
inline std::vector<ExtensionDatum> semidirect_family(unsigned n, const GroupPtr& H) {
    auto Sn = FiniteGroup::symmetric(n);
    const auto N = static_cast<std::uint32_t>(Sn->order());
    const auto M = static_cast<std::uint32_t>(H->order());
    std::vector<Perm> auts;
    for (auto& f : enumerate_homs(*Sn, *Sn)) {
        std::set<std::uint32_t> im(f.begin(), f.end());
        if (im.size() == N) auts.emplace_back(std::move(f));
    }
    auto Aut = FiniteGroup::generate(auts, N, "Aut(S" + std::to_string(n) + ")");
    std::vector<ExtensionDatum> out;
    std::size_t alpha_no = 0;
    for (auto& alpha : enumerate_homs(*H, *Aut)) {
        std::vector<std::vector<std::uint32_t>> table(N * M, std::vector<std::uint32_t>(N * M));
        for (std::uint32_t s1 = 0; s1 < N; ++s1)
            for (std::uint32_t h1 = 0; h1 < M; ++h1)
                for (std::uint32_t s2 = 0; s2 < N; ++s2)
                    for (std::uint32_t h2 = 0; h2 < M; ++h2) {
                        auto tw = Aut->element(alpha[h1])(s2);
                        table[s1 * M + h1][s2 * M + h2] = Sn->mul(s1, tw) * M + H->mul(h1, h2);
                    }
        auto G = FiniteGroup::from_table(table, "S" + std::to_string(n) + " x| " + H->name());
        Subgroup K;
        for (std::uint32_t s = 0; s < N; ++s) K.push_back(s * M + H->identity());
        std::vector<std::uint32_t> rimg(N * M);
        for (std::uint32_t x = 0; x < N * M; ++x) rimg[x] = x % M;
        GroupHom r(G, H, rimg);
        for (auto& f : enumerate_homs(*G, *Sn)) {
            std::set<std::uint32_t> onK;
            for (auto k : K) onK.insert(f[k]);
            if (onK.size() != N) continue;
            std::vector<Perm> img;
            for (auto x : f) img.push_back(Sn->element(x));
            ExtensionDatum d(G, K, r, PermRep(G, n, std::move(img)));
            d.label = G->name() + " alpha#" + std::to_string(alpha_no) + " phi#" + std::to_string(out.size());
            out.push_back(std::move(d));
        }
        ++alpha_no;
    }
    return out;
}

/// Every representation of H of degree n obtained from a multiset of
/// subgroups with indices summing to n.
inline std::vector<std::pair<std::vector<Subgroup>, PermRep>> algebra_reps(const GroupPtr& H, std::size_t n) {
    auto subs = H->all_subgroups();
    std::vector<std::pair<std::vector<Subgroup>, PermRep>> out;
    std::vector<Subgroup> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t left) {
        if (left == 0) {
            out.emplace_back(cur, galois_rep_of_algebra(H, cur, n));
            return;
        }
        for (std::size_t i = from; i < subs.size(); ++i) {
            std::size_t idx = H->order() / subs[i].size();
            if (idx > left) continue;
            cur.push_back(subs[i]);
            rec(i, left - idx);
            cur.pop_back();
        }
    };
    rec(0, n);
    return out;
}

} // namespace galspec

#endif // GALSPEC_TWIST_HPP
