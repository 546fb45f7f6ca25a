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

#ifndef GALSPEC_EXPR_HPP
#define GALSPEC_EXPR_HPP

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "integer.hpp"
#include "polynomial.hpp"

namespace galspec {

/// Syntax tree of a polynomial expression in T and Y.
struct Expr {
    enum class Kind { Num, T, Y, Add, Sub, Mul, Pow, Neg };
    Kind kind;
    Rational value;  // Num
    unsigned exponent = 0;  // Pow
    std::shared_ptr<const Expr> lhs, rhs;

    static std::shared_ptr<const Expr> num(Rational v) { return make(Kind::Num, std::move(v)); }
    static std::shared_ptr<const Expr> var(Kind k) { return make(k, 0); }
    static std::shared_ptr<const Expr> binary(Kind k, std::shared_ptr<const Expr> a, std::shared_ptr<const Expr> b) {
        auto e = std::make_shared<Expr>(Expr{k, 0, 0, std::move(a), std::move(b)});
        return e;
    }
    static std::shared_ptr<const Expr> power(std::shared_ptr<const Expr> a, unsigned n) {
        return std::make_shared<Expr>(Expr{Kind::Pow, 0, n, std::move(a), nullptr});
    }
    static std::shared_ptr<const Expr> negate(std::shared_ptr<const Expr> a) {
        return std::make_shared<Expr>(Expr{Kind::Neg, 0, 0, std::move(a), nullptr});
    }

private:
    static std::shared_ptr<const Expr> make(Kind k, Rational v) {
        return std::make_shared<Expr>(Expr{k, std::move(v), 0, nullptr, nullptr});
    }
};

using ExprPtr = std::shared_ptr<const Expr>;

inline bool same_tree(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    return a->kind == b->kind && a->value == b->value && a->exponent == b->exponent && same_tree(a->lhs, b->lhs) &&
           same_tree(a->rhs, b->rhs);
}

namespace detail {

// expr := ['-'] term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := base ('^' nat)?
// base := 'T' | 'Y' | rational | '(' expr ')'
class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    ExprPtr parse() {
        auto e = expr();
        skip();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    static constexpr unsigned max_exponent = 64;

    [[noreturn]] void fail(const std::string& what) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(what, line, col);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    ExprPtr expr() {
        ExprPtr e = accept('-') ? Expr::negate(term()) : term();
        for (;;) {
            if (accept('+'))
                e = Expr::binary(Expr::Kind::Add, e, term());
            else if (accept('-'))
                e = Expr::binary(Expr::Kind::Sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        auto e = factor();
        while (accept('*')) e = Expr::binary(Expr::Kind::Mul, e, factor());
        return e;
    }

    ExprPtr factor() {
        auto b = base();
        if (!accept('^')) return b;
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a nonnegative integer exponent");
        Integer n = digits();
        if (n > max_exponent) fail("exponent " + n.str() + " exceeds " + std::to_string(max_exponent));
        return Expr::power(b, static_cast<unsigned>(n));
    }

    ExprPtr base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == 'T' || c == 'Y') {
            ++pos_;
            return Expr::var(c == 'T' ? Expr::Kind::T : Expr::Kind::Y);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = digits();
            if (!accept('/')) return Expr::num(Rational(num));
            skip();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected a denominator");
            std::size_t at = pos_;
            Integer den = digits();
            if (den == 0) {
                pos_ = at;
                fail("zero denominator");
            }
            return Expr::num(Rational(num, den));
        }
        if (c == '(') {
            ++pos_;
            auto e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Integer digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Integer(s_.substr(start, pos_ - start));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

inline int level(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Neg: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Pow: return 3;
    default: return 4;
    }
}

} // namespace detail

/// Parses an expression; errors carry the 1-based line and column.
inline ExprPtr parse_poly(const std::string& text) { return detail::ExprParser(text).parse(); }

/// Prints with the minimum parentheses needed to parse back to the same tree.
inline std::string pretty(const ExprPtr& e) {
    auto wrap = [](const ExprPtr& x, int need) {
        std::string s = pretty(x);
        return detail::level(*x) < need ? "(" + s + ")" : s;
    };
    switch (e->kind) {
    case Expr::Kind::Num: return to_string(e->value);
    case Expr::Kind::T: return "T";
    case Expr::Kind::Y: return "Y";
    case Expr::Kind::Add: return pretty(e->lhs) + " + " + wrap(e->rhs, 2);
    case Expr::Kind::Sub: return pretty(e->lhs) + " - " + wrap(e->rhs, 2);
    case Expr::Kind::Neg: return "-" + wrap(e->lhs, 2);
    case Expr::Kind::Mul: return wrap(e->lhs, 2) + "*" + wrap(e->rhs, 3);
    case Expr::Kind::Pow: return wrap(e->lhs, 4) + "^" + std::to_string(e->exponent);
    }
    return "";
}

inline bool mentions(const ExprPtr& e, Expr::Kind v) {
    if (!e) return false;
    return e->kind == v || mentions(e->lhs, v) || mentions(e->rhs, v);
}

/// Evaluates to a polynomial in Y with coefficients in D[T]; rational
/// literals go through D::from_rational.
template <class D>
BiPoly<D> to_bipoly(const ExprPtr& e, const D& dom) {
    PolyRing<D> ring(dom);
    using B = BiPoly<D>;
    switch (e->kind) {
    case Expr::Kind::Num: return B::constant(ring, Poly<D>::constant(dom, dom.from_rational(e->value)));
    case Expr::Kind::T: return B::constant(ring, Poly<D>::variable(dom));
    case Expr::Kind::Y: return B::variable(ring);
    case Expr::Kind::Add: return to_bipoly(e->lhs, dom) + to_bipoly(e->rhs, dom);
    case Expr::Kind::Sub: return to_bipoly(e->lhs, dom) - to_bipoly(e->rhs, dom);
    case Expr::Kind::Neg: return -to_bipoly(e->lhs, dom);
    case Expr::Kind::Mul: return to_bipoly(e->lhs, dom) * to_bipoly(e->rhs, dom);
    case Expr::Kind::Pow: return pow(to_bipoly(e->lhs, dom), e->exponent);
    }
    throw PreconditionError("bad expression node");
}

/// Evaluates an expression in Y alone.
template <class D>
Poly<D> to_poly_y(const ExprPtr& e, const D& dom) {
    if (mentions(e, Expr::Kind::T)) throw PreconditionError("expected a polynomial in Y only, found T");
    auto B = to_bipoly(e, dom);
    std::vector<typename D::Element> c;
    for (const auto& x : B.coeffs()) c.push_back(x.is_zero() ? dom.zero() : x.coeff(0));
    return Poly<D>(dom, std::move(c));
}

} // namespace galspec

#endif // GALSPEC_EXPR_HPP
