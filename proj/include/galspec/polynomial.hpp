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

#ifndef GALSPEC_POLYNOMIAL_HPP
#define GALSPEC_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "domains.hpp"
#include "error.hpp"
#include "integer.hpp"

namespace galspec {

/// Dense univariate polynomial over a coefficient domain D.
/// Coefficients are stored lowest degree first with a nonzero top
/// coefficient; the zero polynomial has no coefficients.
template <class D>
class Poly {
public:
    using Domain = D;
    using Element = typename D::Element;

    explicit Poly(D dom) : dom_(std::move(dom)) {}
    Poly(D dom, std::vector<Element> coeffs) : dom_(std::move(dom)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly constant(const D& dom, Element c) { return Poly(dom, {std::move(c)}); }
    static Poly monomial(const D& dom, Element c, std::size_t k) {
        std::vector<Element> v(k + 1, dom.zero());
        v[k] = std::move(c);
        return Poly(dom, std::move(v));
    }
    static Poly variable(const D& dom) { return monomial(dom, dom.one(), 1); }

    /// Builds from small integer coefficients, lowest degree first.
    static Poly from_ints(const D& dom, std::initializer_list<std::int64_t> ints) {
        std::vector<Element> v;
        v.reserve(ints.size());
        for (auto i : ints) v.push_back(dom.from_int(i));
        return Poly(dom, std::move(v));
    }

    const D& domain() const { return dom_; }
    const std::vector<Element>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : dom_.zero(); }
    const Element& lc() const {
        if (c_.empty()) throw ZeroInputError("leading coefficient of the zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && dom_.equal(c_.back(), dom_.one()); }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!(a.dom_ == b.dom_) || a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.dom_.equal(a.c_[i], b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_same(a, b);
        const auto& dom = a.dom_;
        std::vector<Element> v(std::max(a.c_.size(), b.c_.size()), dom.zero());
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size())
                v[i] = dom.add(a.c_[i], b.c_[i]);
            else
                v[i] = i < a.c_.size() ? a.c_[i] : b.c_[i];
        }
        return Poly(dom, std::move(v));
    }

    friend Poly operator-(const Poly& a) {
        std::vector<Element> v;
        v.reserve(a.c_.size());
        for (const auto& x : a.c_) v.push_back(a.dom_.neg(x));
        return Poly(a.dom_, std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        check_same(a, b);
        const auto& dom = a.dom_;
        if (a.is_zero() || b.is_zero()) return Poly(dom);
        std::vector<Element> v(a.c_.size() + b.c_.size() - 1, dom.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (dom.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] = dom.add(v[i + j], dom.mul(a.c_[i], b.c_[j]));
        }
        return Poly(dom, std::move(v));
    }

    Poly scale(const Element& s) const {
        std::vector<Element> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(dom_.mul(s, x));
        return Poly(dom_, std::move(v));
    }

    /// Multiplies by Y^k.
    Poly shift(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<Element> v(k, dom_.zero());
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(dom_, std::move(v));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Element operator()(const Element& x) const {
        Element acc = dom_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = dom_.add(dom_.mul(acc, x), *it);
        return acc;
    }

    std::string to_string(const std::string& var = "Y") const {
        if (c_.empty()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const auto& x = c_[static_cast<std::size_t>(i)];
            if (dom_.is_zero(x)) continue;
            if (!out.empty()) out += " + ";
            std::string cs = dom_.to_string(x);
            bool unit = dom_.equal(x, dom_.one());
            if (i == 0) {
                out += cs;
            } else {
                if (!unit) out += "(" + cs + ")*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    static void check_same(const Poly& a, const Poly& b) {
        if (!(a.dom_ == b.dom_))
            throw DomainMismatch("polynomials over " + a.dom_.name() + " and " + b.dom_.name());
    }

private:
    void trim() {
        while (!c_.empty() && dom_.is_zero(c_.back())) c_.pop_back();
    }

    D dom_;
    std::vector<Element> c_;
};

template <class D>
Poly<D> derivative(const Poly<D>& f) {
    const auto& dom = f.domain();
    std::vector<typename D::Element> v;
    for (int i = 1; i <= f.degree(); ++i)
        v.push_back(dom.mul(dom.from_int(i), f.coeffs()[static_cast<std::size_t>(i)]));
    return Poly<D>(dom, std::move(v));
}

template <class D>
Poly<D> make_monic(const Poly<D>& f) {
    if (f.is_zero()) return f;
    return f.scale(f.domain().inv(f.lc()));
}

/// Quotient and remainder; the divisor's leading coefficient must be a unit.
template <class D>
std::pair<Poly<D>, Poly<D>> divmod(const Poly<D>& a, const Poly<D>& b) {
    Poly<D>::check_same(a, b);
    if (b.is_zero()) throw ZeroInputError("polynomial division by zero");
    const auto& dom = a.domain();
    using E = typename D::Element;
    if (a.degree() < b.degree()) return {Poly<D>(dom), a};
    std::vector<E> r = a.coeffs();
    std::vector<E> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), dom.zero());
    E inv_lc = dom.inv(b.lc());
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    for (std::size_t i = r.size(); i-- > db;) {
        if (dom.is_zero(r[i])) continue;
        E factor = dom.mul(r[i], inv_lc);
        q[i - db] = factor;
        for (std::size_t j = 0; j <= db; ++j)
            r[i - db + j] = dom.sub(r[i - db + j], dom.mul(factor, bc[j]));
    }
    r.resize(db);
    return {Poly<D>(dom, std::move(q)), Poly<D>(dom, std::move(r))};
}

template <class D>
Poly<D> operator%(const Poly<D>& a, const Poly<D>& b) { return divmod(a, b).second; }

template <class D>
Poly<D> operator/(const Poly<D>& a, const Poly<D>& b) { return divmod(a, b).first; }

/// Monic greatest common divisor over a field; gcd(0, 0) = 0.
template <class D>
Poly<D> gcd(Poly<D> a, Poly<D> b) {
    Poly<D>::check_same(a, b);
    while (!b.is_zero()) {
        Poly<D> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class D>
struct ExtGcd {
    Poly<D> g, s, t;
};

template <class D>
ExtGcd<D> ext_gcd(const Poly<D>& a, const Poly<D>& b) {
    Poly<D>::check_same(a, b);
    const auto& dom = a.domain();
    Poly<D> r0 = a, r1 = b;
    Poly<D> s0 = Poly<D>::constant(dom, dom.one()), s1(dom);
    Poly<D> t0(dom), t1 = Poly<D>::constant(dom, dom.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<D> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<D> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    auto u = dom.inv(r0.lc());
    return {r0.scale(u), s0.scale(u), t0.scale(u)};
}

template <class D>
Poly<D> mul_mod(const Poly<D>& a, const Poly<D>& b, const Poly<D>& m) {
    return (a * b) % m;
}

/// base^e mod m for a nonnegative exponent.
template <class D>
Poly<D> pow_mod(Poly<D> base, Integer e, const Poly<D>& m) {
    const auto& dom = m.domain();
    Poly<D> r = Poly<D>::constant(dom, dom.one()) % m;
    base = base % m;
    while (e > 0) {
        if ((e & 1) != 0) r = mul_mod(r, base, m);
        e >>= 1;
        if (e > 0) base = mul_mod(base, base, m);
    }
    return r;
}

template <class D>
Poly<D> pow(const Poly<D>& base, unsigned e) {
    const auto& dom = base.domain();
    Poly<D> r = Poly<D>::constant(dom, dom.one());
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
template <class D>
Poly<D> prem(const Poly<D>& a, const Poly<D>& b) {
    Poly<D>::check_same(a, b);
    if (b.is_zero()) throw ZeroInputError("pseudo-division by zero");
    const auto& dom = a.domain();
    if (a.degree() < b.degree()) return a;
    int e = a.degree() - b.degree() + 1;
    Poly<D> r = a;
    const auto lcb = b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Poly<D> s = Poly<D>::monomial(dom, r.lc(), static_cast<std::size_t>(r.degree() - b.degree()));
        r = r.scale(lcb) - s * b;
        --e;
    }
    auto f = dom.one();
    for (int i = 0; i < e; ++i) f = dom.mul(f, lcb);
    return r.scale(f);
}

namespace detail {

template <class D>
typename D::Element elem_pow(const D& dom, typename D::Element a, long e) {
    auto r = dom.one();
    for (long i = 0; i < e; ++i) r = dom.mul(r, a);
    return r;
}

template <class D>
Poly<D> exact_div_coeffs(const Poly<D>& p, const typename D::Element& c) {
    const auto& dom = p.domain();
    std::vector<typename D::Element> v;
    v.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) v.push_back(dom.exact_div(x, c));
    return Poly<D>(dom, std::move(v));
}

} // namespace detail

/// Resultant with the Sylvester convention: rows of `a` on top, so that
/// Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a.
/// Works over any integral domain with exact division, using the
/// subresultant remainder sequence.
template <class D>
typename D::Element resultant(Poly<D> a, Poly<D> b) {
    Poly<D>::check_same(a, b);
    if (a.is_zero() || b.is_zero()) throw ZeroInputError("resultant with a zero polynomial");
    const D dom = a.domain();
    auto s = dom.one();
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = dom.neg(s);
    }
    auto g = dom.one();
    auto h = dom.one();
    while (b.degree() > 0) {
        const long delta = a.degree() - b.degree();
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = dom.neg(s);
        Poly<D> r = prem(a, b);
        a = std::move(b);
        if (r.is_zero()) return dom.zero();
        b = detail::exact_div_coeffs(r, dom.mul(g, detail::elem_pow(dom, h, delta)));
        g = a.lc();
        if (delta == 0) {
            // h unchanged
        } else {
            h = dom.exact_div(detail::elem_pow(dom, g, delta), detail::elem_pow(dom, h, delta - 1));
        }
    }
    // b is a nonzero constant
    const long da = a.degree();
    auto t = dom.exact_div(detail::elem_pow(dom, b.lc(), da), detail::elem_pow(dom, h, da - 1));
    return dom.mul(s, t);
}

/// (-1)^(n(n-1)/2) * Res(f, f') / lc(f).
template <class D>
typename D::Element discriminant(const Poly<D>& f) {
    if (f.degree() < 1) throw PreconditionError("discriminant needs degree >= 1");
    const auto& dom = f.domain();
    Poly<D> df = derivative(f);
    if (df.is_zero())
        throw InseparableError("derivative of " + f.to_string() + " vanishes identically");
    auto r = resultant(f, df);
    const long n = f.degree();
    if ((n * (n - 1) / 2) % 2 == 1) r = dom.neg(r);
    return dom.exact_div(r, f.lc());
}

/// Polynomials over D viewed as a coefficient domain, so that bivariate
/// polynomials are Poly<PolyRing<D>>.
template <class D>
class PolyRing {
public:
    using Element = Poly<D>;

    explicit PolyRing(D base) : base_(std::move(base)) {}

    const D& base() const { return base_; }

    Element zero() const { return Element(base_); }
    Element one() const { return Element::constant(base_, base_.one()); }
    Element from_int(std::int64_t v) const { return Element::constant(base_, base_.from_int(v)); }
    Element from_base(typename D::Element v) const { return Element::constant(base_, std::move(v)); }

    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element exact_div(const Element& a, const Element& b) const {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw PreconditionError("inexact polynomial division");
        return q;
    }
    Element inv(const Element& a) const {
        if (a.degree() != 0) throw PreconditionError("non-constant polynomial is not a unit");
        return Element::constant(base_, base_.inv(a.lc()));
    }

    Integer characteristic() const { return base_.characteristic(); }
    static constexpr bool is_field = false;

    std::string to_string(const Element& a) const { return a.to_string("T"); }
    std::string name() const { return base_.name() + "[T]"; }

    bool operator==(const PolyRing& o) const { return base_ == o.base_; }

private:
    D base_;
};

/// Bivariate polynomial: a polynomial in Y whose coefficients are polynomials in T.
template <class D>
using BiPoly = Poly<PolyRing<D>>;

/// P(t0, Y).
template <class D>
Poly<D> eval_t(const BiPoly<D>& p, const typename D::Element& t0) {
    const D& base = p.domain().base();
    std::vector<typename D::Element> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c(t0));
    return Poly<D>(base, std::move(v));
}

/// Applies a coefficient map to every coefficient.
template <class D2, class D1, class F>
Poly<D2> map_coeffs(const Poly<D1>& p, const D2& target, F&& fn) {
    std::vector<typename D2::Element> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(fn(c));
    return Poly<D2>(target, std::move(v));
}

/// Largest T-degree among the Y-coefficients.
template <class D>
int t_degree(const BiPoly<D>& p) {
    int d = -1;
    for (const auto& c : p.coeffs()) d = std::max(d, c.degree());
    return d;
}

template <class D>
Poly<D> squarefree_part_char0(const Poly<D>& f) {
    if (f.degree() < 1) return make_monic(f);
    return make_monic(f / gcd(f, derivative(f)));
}

} // namespace galspec

#endif // GALSPEC_POLYNOMIAL_HPP
