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

#ifndef GALSPEC_PERM_GROUP_HPP
#define GALSPEC_PERM_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "error.hpp"
#include "partition.hpp"

namespace galspec {

/// A bijection of {0, ..., k-1}, stored as its image sequence. Printing is
/// 1-based. Composition is right to left: (a * b)(x) = a(b(x)).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint32_t> img) : img_(std::move(img)) {
        std::vector<bool> seen(img_.size(), false);
        for (auto x : img_) {
            if (x >= img_.size() || seen[x]) throw GroupError("image sequence is not a permutation");
            seen[x] = true;
        }
    }
    static Perm identity(std::size_t n) {
        std::vector<std::uint32_t> v(n);
        std::iota(v.begin(), v.end(), 0u);
        return Perm(std::move(v), unchecked{});
    }
    static Perm from_one_based(const std::vector<long long>& images) {
        std::vector<std::uint32_t> v;
        for (auto x : images) {
            if (x < 1 || static_cast<std::size_t>(x) > images.size())
                throw GroupError("permutation image " + std::to_string(x) + " out of range");
            v.push_back(static_cast<std::uint32_t>(x - 1));
        }
        return Perm(std::move(v));
    }
    /// Product of disjoint or overlapping cycles, 1-based.
    static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
        Perm p = identity(n);
        for (const auto& c : cycles) {
            Perm cyc = identity(n);
            for (std::size_t i = 0; i < c.size(); ++i) cyc.img_.at(c[i] - 1) = c[(i + 1) % c.size()] - 1;
            p = p * cyc;
        }
        return Perm(p.img_);
    }

    std::size_t degree() const { return img_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    Perm operator*(const Perm& b) const {
        if (degree() != b.degree()) throw GroupError("composing permutations of different degree");
        std::vector<std::uint32_t> v(degree());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = img_[b.img_[i]];
        return Perm(std::move(v), unchecked{});
    }
    Perm inverse() const {
        std::vector<std::uint32_t> v(degree());
        for (std::size_t i = 0; i < v.size(); ++i) v[img_[i]] = static_cast<std::uint32_t>(i);
        return Perm(std::move(v), unchecked{});
    }
    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    std::vector<std::vector<std::uint32_t>> cycles() const {
        std::vector<std::vector<std::uint32_t>> out;
        std::vector<bool> seen(degree(), false);
        for (std::uint32_t i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            std::vector<std::uint32_t> c;
            for (auto x = i; !seen[x]; x = img_[x]) {
                seen[x] = true;
                c.push_back(x);
            }
            out.push_back(std::move(c));
        }
        return out;
    }
    Partition cycle_type() const {
        std::vector<unsigned> parts;
        for (const auto& c : cycles()) parts.push_back(static_cast<unsigned>(c.size()));
        return Partition(parts);
    }

    /// Cycle notation, 1-based, fixed points omitted; "()" for the identity.
    std::string to_string() const {
        std::string s;
        for (const auto& c : cycles()) {
            if (c.size() < 2) continue;
            s += "(";
            for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i] + 1);
            s += ")";
        }
        return s.empty() ? "()" : s;
    }

    friend auto operator<=>(const Perm&, const Perm&) = default;
    friend bool operator==(const Perm&, const Perm&) = default;

private:
    struct unchecked {};
    Perm(std::vector<std::uint32_t> img, unchecked) : img_(std::move(img)) {}
    std::vector<std::uint32_t> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const { return boost::hash_range(p.images().begin(), p.images().end()); }
};

/// A subgroup, as a sorted list of element indices of its ambient group.
using Subgroup = std::vector<std::uint32_t>;

/// A finite permutation group with a fixed element order. Elements are
/// addressed by index; index lookups go through a hash table.
class FiniteGroup {
public:
    static constexpr std::size_t max_order = 100000;

    /// Closure of the generators, elements in breadth-first order from the identity.
    static std::shared_ptr<const FiniteGroup> generate(const std::vector<Perm>& gens, std::size_t degree,
                                                       std::string name = "") {
        std::vector<Perm> elems{Perm::identity(degree)};
        std::unordered_map<Perm, std::uint32_t, PermHash> idx{{elems[0], 0}};
        for (std::size_t k = 0; k < elems.size(); ++k)
            for (const auto& g : gens) {
                Perm x = g * elems[k];
                if (idx.count(x)) continue;
                if (elems.size() >= max_order) throw GroupError("group order exceeds " + std::to_string(max_order));
                idx.emplace(x, static_cast<std::uint32_t>(elems.size()));
                elems.push_back(std::move(x));
            }
        return std::shared_ptr<const FiniteGroup>(new FiniteGroup(std::move(elems), std::move(name)));
    }

    /// Uses the given element order; checks closure.
    static std::shared_ptr<const FiniteGroup> from_elements(std::vector<Perm> elems, std::string name = "") {
        if (elems.empty()) throw GroupError("empty element list");
        if (elems.size() > max_order) throw GroupError("group order exceeds " + std::to_string(max_order));
        std::shared_ptr<const FiniteGroup> G(new FiniteGroup(std::move(elems), std::move(name)));
        if (G->idx_.size() != G->order()) throw GroupError("element list has repeats");
        if (!G->find(Perm::identity(G->degree()))) throw GroupError("identity missing");
        for (std::uint32_t i = 0; i < G->order(); ++i)
            for (auto g : G->gens_)
                if (!G->find(G->element(g) * G->element(i))) throw GroupError("element list is not closed");
        return G;
    }

    /// Abstract group from a 0-based multiplication table, realized by its
    /// left-regular representation so that element i keeps index i.
    static std::shared_ptr<const FiniteGroup> from_table(const std::vector<std::vector<std::uint32_t>>& t,
                                                         std::string name = "") {
        const std::size_t N = t.size();
        if (N == 0) throw GroupError("empty multiplication table");
        for (const auto& row : t) {
            if (row.size() != N) throw GroupError("multiplication table is not square");
            std::vector<bool> seen(N, false);
            for (auto x : row) {
                if (x >= N || seen[x]) throw GroupError("table row is not a permutation of the elements");
                seen[x] = true;
            }
        }
        std::optional<std::uint32_t> e;
        for (std::uint32_t i = 0; i < N && !e; ++i) {
            bool ok = true;
            for (std::uint32_t x = 0; x < N && ok; ++x) ok = t[i][x] == x && t[x][i] == x;
            if (ok) e = i;
        }
        if (!e) throw GroupError("table has no identity element");
        auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) { return t[t[a][b]][c] == t[a][t[b][c]]; };
        if (N <= 64) {
            for (std::size_t a = 0; a < N; ++a)
                for (std::size_t b = 0; b < N; ++b)
                    for (std::size_t c = 0; c < N; ++c)
                        if (!assoc(a, b, c)) throw GroupError("table is not associative");
        } else {
            std::mt19937_64 rng(0x5eed);
            for (int k = 0; k < 20000; ++k)
                if (!assoc(rng() % N, rng() % N, rng() % N)) throw GroupError("table is not associative");
        }
        std::vector<Perm> elems;
        for (std::size_t g = 0; g < N; ++g) elems.emplace_back(t[g]);
        return from_elements(std::move(elems), std::move(name));
    }

    /// S_n with elements in lexicographic order of image sequences.
    static std::shared_ptr<const FiniteGroup> symmetric(unsigned n) {
        std::vector<std::uint32_t> v(n);
        std::iota(v.begin(), v.end(), 0u);
        std::vector<Perm> elems;
        do elems.emplace_back(v);
        while (std::next_permutation(v.begin(), v.end()));
        return std::shared_ptr<const FiniteGroup>(new FiniteGroup(std::move(elems), "S" + std::to_string(n)));
    }
    static std::shared_ptr<const FiniteGroup> cyclic(unsigned n) {
        std::vector<std::vector<std::uint32_t>> c(1);
        for (std::uint32_t i = 1; i <= n; ++i) c[0].push_back(i);
        return generate({Perm::from_cycles(n, c)}, n, "C" + std::to_string(n));
    }

    std::size_t order() const { return elems_.size(); }
    std::size_t degree() const { return elems_[0].degree(); }
    const std::string& name() const { return name_; }
    const Perm& element(std::uint32_t i) const { return elems_[i]; }
    const std::vector<Perm>& elements() const { return elems_; }
    std::uint32_t identity() const { return id_; }
    const std::vector<std::uint32_t>& generators() const { return gens_; }

    std::optional<std::uint32_t> find(const Perm& p) const {
        auto it = idx_.find(p);
        if (it == idx_.end()) return std::nullopt;
        return it->second;
    }
    std::uint32_t index_of(const Perm& p) const {
        auto i = find(p);
        if (!i) throw GroupError("permutation " + p.to_string() + " is not in the group");
        return *i;
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order() + b];
        return index_of(elems_[a] * elems_[b]);
    }
    std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
    std::uint32_t conj(std::uint32_t g, std::uint32_t x) const { return mul(mul(g, x), inv(g)); }

    Subgroup generated_subgroup(const std::vector<std::uint32_t>& gens) const {
        std::vector<bool> in(order(), false);
        std::vector<std::uint32_t> out{id_};
        in[id_] = true;
        for (std::size_t k = 0; k < out.size(); ++k)
            for (auto g : gens) {
                auto y = mul(g, out[k]);
                if (!in[y]) {
                    in[y] = true;
                    out.push_back(y);
                }
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_subgroup(const std::vector<std::uint32_t>& s) const {
        if (s.empty()) return false;
        std::vector<bool> in(order(), false);
        for (auto x : s) {
            if (x >= order()) return false;
            in[x] = true;
        }
        if (!in[id_]) return false;
        for (auto a : s)
            for (auto b : s)
                if (!in[mul(a, inv(b))]) return false;
        return true;
    }

    bool is_normal(const Subgroup& s) const {
        if (!is_subgroup(s)) return false;
        std::vector<bool> in(order(), false);
        for (auto x : s) in[x] = true;
        for (auto g : gens_)
            for (auto x : s)
                if (!in[conj(g, x)]) return false;
        return true;
    }

    Subgroup whole() const {
        Subgroup all(order());
        std::iota(all.begin(), all.end(), 0u);
        return all;
    }

    /// Every subgroup, ordered by size and then lexicographically. Intended
    /// for small groups: joins of cyclic subgroups are closed off iteratively.
    std::vector<Subgroup> all_subgroups() const {
        if (order() > 2000) throw PreconditionError("subgroup lattice only computed for order <= 2000");
        std::set<Subgroup> found;
        for (std::uint32_t g = 0; g < order(); ++g) found.insert(generated_subgroup({g}));
        std::vector<Subgroup> frontier(found.begin(), found.end());
        const std::vector<Subgroup> cyclic_subs = frontier;
        while (!frontier.empty()) {
            std::vector<Subgroup> next;
            for (const auto& a : frontier)
                for (const auto& c : cyclic_subs) {
                    if (std::includes(a.begin(), a.end(), c.begin(), c.end())) continue;
                    std::vector<std::uint32_t> gens = a;
                    gens.insert(gens.end(), c.begin(), c.end());
                    auto j = generated_subgroup(gens);
                    if (found.insert(j).second) next.push_back(j);
                }
            frontier = std::move(next);
        }
        std::vector<Subgroup> out(found.begin(), found.end());
        std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
        return out;
    }

    bool same_as(const FiniteGroup& o) const { return elems_ == o.elems_; }

private:
    FiniteGroup(std::vector<Perm> elems, std::string name) : elems_(std::move(elems)), name_(std::move(name)) {
        for (std::uint32_t i = 0; i < elems_.size(); ++i) idx_.emplace(elems_[i], i);
        if (idx_.size() != elems_.size()) return;  // caller reports repeats
        auto e = idx_.find(Perm::identity(degree()));
        if (e == idx_.end()) return;
        id_ = e->second;
        if (order() <= 1024) {
            table_.resize(order() * order());
            for (std::uint32_t a = 0; a < order(); ++a)
                for (std::uint32_t b = 0; b < order(); ++b) {
                    auto it = idx_.find(elems_[a] * elems_[b]);
                    if (it == idx_.end()) {
                        table_.clear();
                        break;
                    }
                    table_[static_cast<std::size_t>(a) * order() + b] = it->second;
                }
        }
        inv_.resize(order());
        for (std::uint32_t a = 0; a < order(); ++a) {
            auto it = idx_.find(elems_[a].inverse());
            inv_[a] = it == idx_.end() ? id_ : it->second;
        }
        // greedy generating set in index order
        std::vector<bool> covered(order(), false);
        covered[id_] = true;
        for (std::uint32_t g = 0; g < order(); ++g) {
            if (covered[g]) continue;
            gens_.push_back(g);
            std::vector<Perm> gp;
            for (auto x : gens_) gp.push_back(elems_[x]);
            std::vector<std::uint32_t> reach{id_};
            std::fill(covered.begin(), covered.end(), false);
            covered[id_] = true;
            for (std::size_t k = 0; k < reach.size(); ++k)
                for (const auto& p : gp) {
                    auto it = idx_.find(p * elems_[reach[k]]);
                    if (it == idx_.end()) continue;  // not closed; from_elements reports it
                    if (!covered[it->second]) {
                        covered[it->second] = true;
                        reach.push_back(it->second);
                    }
                }
        }
    }

    std::vector<Perm> elems_;
    std::string name_;
    std::unordered_map<Perm, std::uint32_t, PermHash> idx_;
    std::uint32_t id_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inv_;
    std::vector<std::uint32_t> gens_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

namespace detail {

inline void check_multiplicative(std::size_t n, const std::function<bool(std::uint32_t, std::uint32_t)>& ok,
                                 const char* what) {
    if (n <= 1000) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                if (!ok(a, b)) throw GroupError(std::string(what) + " is not multiplicative");
    } else {
        std::mt19937_64 rng(0xabc);
        for (int k = 0; k < 20000; ++k)
            if (!ok(static_cast<std::uint32_t>(rng() % n), static_cast<std::uint32_t>(rng() % n)))
                throw GroupError(std::string(what) + " is not multiplicative");
    }
}

} // namespace detail

/// A homomorphism between finite groups, given by its table of images.
class GroupHom {
public:
    GroupHom(GroupPtr src, GroupPtr dst, std::vector<std::uint32_t> img)
        : src_(std::move(src)), dst_(std::move(dst)), img_(std::move(img)) {
        if (img_.size() != src_->order()) throw GroupError("image table has the wrong length");
        for (auto x : img_)
            if (x >= dst_->order()) throw GroupError("image index out of range");
        detail::check_multiplicative(
            src_->order(),
            [&](std::uint32_t a, std::uint32_t b) { return img_[src_->mul(a, b)] == dst_->mul(img_[a], img_[b]); },
            "map");
    }

    const GroupPtr& source() const { return src_; }
    const GroupPtr& target() const { return dst_; }
    std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    Subgroup kernel() const {
        Subgroup k;
        for (std::uint32_t x = 0; x < img_.size(); ++x)
            if (img_[x] == dst_->identity()) k.push_back(x);
        return k;
    }
    Subgroup image() const {
        Subgroup s(img_.begin(), img_.end());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }
    bool is_surjective() const { return image().size() == dst_->order(); }

private:
    GroupPtr src_, dst_;
    std::vector<std::uint32_t> img_;
};

/// A permutation representation G -> S_m, images stored as permutations.
class PermRep {
public:
    PermRep(GroupPtr src, std::size_t degree, std::vector<Perm> img)
        : src_(std::move(src)), degree_(degree), img_(std::move(img)) {
        if (img_.size() != src_->order()) throw GroupError("representation has the wrong number of images");
        for (const auto& p : img_)
            if (p.degree() != degree_) throw GroupError("representation image has the wrong degree");
        detail::check_multiplicative(
            src_->order(),
            [&](std::uint32_t a, std::uint32_t b) { return img_[src_->mul(a, b)] == img_[a] * img_[b]; },
            "action");
    }

    const GroupPtr& source() const { return src_; }
    std::size_t degree() const { return degree_; }
    const Perm& operator()(std::uint32_t g) const { return img_[g]; }
    const std::vector<Perm>& images() const { return img_; }

    /// Orbits, each sorted, listed by smallest point.
    std::vector<std::vector<std::uint32_t>> orbits() const {
        std::vector<int> which(degree_, -1);
        std::vector<std::vector<std::uint32_t>> out;
        for (std::uint32_t x = 0; x < degree_; ++x) {
            if (which[x] >= 0) continue;
            std::vector<std::uint32_t> orb{x};
            which[x] = static_cast<int>(out.size());
            for (std::size_t k = 0; k < orb.size(); ++k)
                for (auto g : src_->generators()) {
                    auto y = img_[g](orb[k]);
                    if (which[y] < 0) {
                        which[y] = static_cast<int>(out.size());
                        orb.push_back(y);
                    }
                }
            std::sort(orb.begin(), orb.end());
            out.push_back(std::move(orb));
        }
        return out;
    }

    Subgroup stabilizer(std::uint32_t point) const {
        Subgroup s;
        for (std::uint32_t g = 0; g < img_.size(); ++g)
            if (img_[g](point) == point) s.push_back(g);
        return s;
    }

    bool is_transitive() const { return orbits().size() == 1; }

    /// Number of distinct image permutations.
    std::size_t image_size() const {
        std::set<Perm> s(img_.begin(), img_.end());
        return s.size();
    }

    /// rho o f for a homomorphism f into this representation's source.
    PermRep after(const GroupHom& f) const {
        std::vector<Perm> out;
        for (std::uint32_t x = 0; x < f.source()->order(); ++x) out.push_back(img_[f(x)]);
        return PermRep(f.source(), degree_, std::move(out));
    }

private:
    GroupPtr src_;
    std::size_t degree_;
    std::vector<Perm> img_;
};

/// Every homomorphism G -> target, as image tables. Images of G's generators
/// are drawn from `allowed` (one candidate list per generator) when given;
/// a candidate assignment is kept when it extends consistently along the
/// Cayley graph.
inline std::vector<std::vector<std::uint32_t>> enumerate_homs(
    const FiniteGroup& G, const FiniteGroup& target,
    const std::vector<std::vector<std::uint32_t>>& allowed = {}) {
    const auto& gens = G.generators();
    std::vector<std::vector<std::uint32_t>> cand(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!allowed.empty())
            cand[i] = allowed.at(i);
        else
            cand[i] = target.whole();
    }
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> choice(gens.size());
    constexpr std::uint32_t unset = ~0u;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k < gens.size()) {
            for (auto c : cand[k]) {
                choice[k] = c;
                rec(k + 1);
            }
            return;
        }
        std::vector<std::uint32_t> img(G.order(), unset);
        img[G.identity()] = target.identity();
        std::vector<std::uint32_t> queue{G.identity()};
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (std::size_t i = 0; i < gens.size(); ++i) {
                auto y = G.mul(gens[i], queue[q]);
                auto v = target.mul(choice[i], img[queue[q]]);
                if (img[y] == unset) {
                    img[y] = v;
                    queue.push_back(y);
                } else if (img[y] != v) {
                    return;
                }
            }
        out.push_back(std::move(img));
    };
    rec(0);
    return out;
}

} // namespace galspec

#endif // GALSPEC_PERM_GROUP_HPP
