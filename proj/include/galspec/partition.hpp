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

#ifndef GALSPEC_PARTITION_HPP
#define GALSPEC_PARTITION_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

namespace galspec {

/// A partition of n: residue degrees, cycle type, or the shape of an
/// etale algebra. Parts are kept in descending order.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        for (auto d : parts_)
            if (d == 0) throw PreconditionError("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }
    Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned total() const {
        unsigned s = 0;
        for (auto d : parts_) s += d;
        return s;
    }
    std::size_t size() const { return parts_.size(); }

    /// Number of permutations in S_n with this cycle type: n! / prod(d^m_d * m_d!).
    Integer class_size() const {
        std::map<unsigned, unsigned> mult;
        for (auto d : parts_) ++mult[d];
        Integer denom = 1;
        for (auto [d, m] : mult) denom *= pow(Integer(d), m) * factorial(m);
        return factorial(total()) / denom;
    }

    /// Fraction of S_n with this cycle type.
    Rational density() const { return Rational(class_size(), factorial(total())); }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "}";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

    /// Every partition of n, in reverse lexicographic order ({n} first).
    static std::vector<Partition> all(unsigned n) {
        std::vector<Partition> out;
        std::vector<unsigned> cur;
        std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned max_part) {
            if (rest == 0) {
                out.emplace_back(cur);
                return;
            }
            for (unsigned d = std::min(rest, max_part); d >= 1; --d) {
                cur.push_back(d);
                rec(rest - d, d);
                cur.pop_back();
            }
        };
        rec(n, n);
        return out;
    }

private:
    std::vector<unsigned> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

} // namespace galspec

#endif // GALSPEC_PARTITION_HPP
