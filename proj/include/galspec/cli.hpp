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

#ifndef GALSPEC_CLI_HPP
#define GALSPEC_CLI_HPP

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "census.hpp"
#include "cover.hpp"
#include "expr.hpp"
#include "ext_field.hpp"
#include "grunwald.hpp"
#include "specialization.hpp"
#include "twist.hpp"

namespace galspec::cli {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- JSON

template <class D>
Json to_json(const Poly<D>& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(p.domain().to_string(c));
    return a;
}

template <class D>
Json to_json(const BiPoly<D>& P) {
    Json a = Json::array();
    for (const auto& c : P.coeffs()) a.push_back(to_json(c));
    return a;
}

inline Json to_json(const Partition& p) {
    Json a = Json::array();
    for (auto d : p.parts()) a.push_back(d);
    return a;
}

template <class D>
Json to_json(const Factorization<D>& f) {
    Json a = Json::array();
    for (const auto& x : f.factors) a.push_back({{"poly", to_json(x.poly)}, {"multiplicity", x.multiplicity}});
    return a;
}

inline std::string str(const Integer& a) { return a.str(); }
inline std::string str(const Rational& a) { return to_string(a); }

// ---------------------------------------------------------------- inputs

struct FieldDesc {
    enum class Kind { Q, Prime, Ext } kind = Kind::Q;
    std::uint64_t p = 0;
    unsigned f = 1;
};

inline FieldDesc parse_field(const std::string& s) {
    if (s == "Q" || s == "q") return {};
    std::smatch m;
    static const std::regex pf(R"(\s*(\d+)\s*(?:\^\s*(\d+))?\s*)");
    if (!std::regex_match(s, m, pf)) throw UsageError("field must be Q, a prime p, or p^f; got '" + s + "'");
    Integer base(m[1].str());
    unsigned f = m[2].matched ? static_cast<unsigned>(std::stoul(m[2].str())) : 1;
    if (f == 0) throw UsageError("field exponent must be positive");
    if (base > prime_cap()) throw UsageError("field characteristic above 2^61");
    auto b = static_cast<std::uint64_t>(base);
    if (!m[2].matched && !is_prime_u64(b)) {
        // a prime power written out, e.g. 9
        for (std::uint64_t p = 2; p <= b / p || p == b; p = next_prime(p)) {
            if (b % p) continue;
            unsigned k = 0;
            std::uint64_t r = b;
            while (r % p == 0) {
                r /= p;
                ++k;
            }
            if (r != 1) break;
            return {FieldDesc::Kind::Ext, p, k};
        }
        throw UsageError("field size " + s + " is not a prime power");
    }
    if (!is_prime_u64(b)) throw UsageError("field characteristic " + base.str() + " is not prime");
    if (f == 1) return {FieldDesc::Kind::Prime, b, 1};
    return {FieldDesc::Kind::Ext, b, f};
}

struct Options {
    std::string command;
    std::string field = "Q";
    std::optional<std::string> cover, family, constraints, out, t0, tolerance, datum, modulus;
    std::optional<std::int64_t> prime, n_trinomial;
    std::uint64_t seed = 0;
    std::size_t max_candidates = 3;
    std::size_t prime_budget = 200;
    bool timing = false;
    bool exhaustive = false;
};

template <class D>
D make_field(const FieldDesc& fd, const Options& o);

template <>
inline RationalField make_field<RationalField>(const FieldDesc&, const Options&) { return {}; }
template <>
inline PrimeField make_field<PrimeField>(const FieldDesc& fd, const Options&) { return PrimeField(fd.p); }
template <>
inline ExtField make_field<ExtField>(const FieldDesc& fd, const Options& o) {
    if (!o.modulus) return ExtField(fd.p, fd.f);
    PrimeField F(fd.p);
    auto m = to_poly_y(parse_poly(*o.modulus), F);
    if (m.degree() != static_cast<int>(fd.f))
        throw UsageError("modulus has degree " + std::to_string(m.degree()) + ", expected " + std::to_string(fd.f));
    return ExtField(F, make_monic(m));
}

/// Calls fn with the field named by the descriptor.
template <class Fn>
Json with_field(const FieldDesc& fd, const Options& o, Fn&& fn) {
    switch (fd.kind) {
    case FieldDesc::Kind::Q: return fn(make_field<RationalField>(fd, o));
    case FieldDesc::Kind::Prime: return fn(make_field<PrimeField>(fd, o));
    case FieldDesc::Kind::Ext: return fn(make_field<ExtField>(fd, o));
    }
    throw UsageError("unknown field");
}

inline std::vector<unsigned> parse_uints(const std::string& s, const std::string& what) {
    std::vector<unsigned> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        static const std::regex num(R"(\s*(\d+)\s*)");
        std::smatch m;
        if (!std::regex_match(tok, m, num)) throw UsageError("bad integer '" + tok + "' in " + what);
        v.push_back(static_cast<unsigned>(std::stoul(m[1].str())));
    }
    return v;
}

/// "5:{1,1,1},7:{2,1}"
inline std::vector<std::pair<Integer, Partition>> parse_constraints(const std::string& s) {
    static const std::regex item(R"(\s*(\d+)\s*:\s*\{([^}]*)\}\s*(,|$))");
    std::vector<std::pair<Integer, Partition>> out;
    auto it = s.cbegin();
    std::smatch m;
    while (it != s.cend()) {
        if (!std::regex_search(it, s.cend(), m, item, std::regex_constants::match_continuous))
            throw UsageError("constraints must look like p:{d1,d2,...},...; cannot read '" + std::string(it, s.cend()) +
                             "'");
        auto parts = parse_uints(m[2].str(), "partition");
        for (auto d : parts)
            if (d == 0) throw UsageError("partition parts must be positive");
        out.push_back({Integer(m[1].str()), Partition(parts)});
        it = m[0].second;
    }
    if (out.empty()) throw UsageError("no constraints given");
    return out;
}

inline Rational parse_rational(const std::string& s) {
    static const std::regex q(R"(\s*(-?)\s*(\d+)\s*(?:/\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, q)) throw UsageError("expected a rational number, got '" + s + "'");
    Integer num(m[2].str());
    Integer den = m[3].matched ? Integer(m[3].str()) : Integer(1);
    if (den == 0) throw UsageError("zero denominator in '" + s + "'");
    Rational r(num, den);
    return m[1].length() ? -r : r;
}

template <class D>
typename D::Element parse_element(const D& F, const std::string& s) {
    if (!s.empty() && s[0] == '#') {
        if constexpr (D::is_finite) {
            Integer k(s.substr(1));
            if (k < 0 || k >= F.order()) throw UsageError("element index " + s + " out of range");
            return F.element_at(k);
        } else {
            throw UsageError("#index elements only exist in finite fields");
        }
    }
    return F.from_rational(parse_rational(s));
}

template <class D>
BivariateCover<D> build_cover(const D& F, const Options& o) {
    if (o.cover.has_value() == o.family.has_value()) throw UsageError("give exactly one of --cover and --family");
    if (o.cover) return BivariateCover<D>::from_polynomial(to_bipoly(parse_poly(*o.cover), F));
    const std::string& fam = *o.family;
    auto colon = fam.find(':');
    if (colon == std::string::npos) throw UsageError("family must be tag:params, got '" + fam + "'");
    std::string tag = fam.substr(0, colon), params = fam.substr(colon + 1);
    if (tag == "morse") return make_morse_cover(to_poly_y(parse_poly(params), F));
    auto v = parse_uints(params, "family parameters");
    if (tag == "trinomial-general") {
        if (v.size() != 4) throw UsageError("trinomial-general needs n,m,r,s");
        return make_trinomial_general(v[0], v[1], v[2], v[3], F);
    }
    if (v.size() != 1) throw UsageError(tag + " needs a single parameter n");
    if (tag == "trinomial-simple") return make_trinomial_simple(v[0], F);
    if (tag == "trinomial-alt") return make_trinomial_alt(v[0], F);
    throw UsageError("unknown family tag '" + tag + "'");
}

// ---------------------------------------------------------------- twist datum

namespace detail {

class DatumReader {
public:
    explicit DatumReader(std::istream& in) {
        std::string line;
        int ln = 0;
        while (std::getline(in, line)) {
            ++ln;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::size_t i = 0;
            while (i < line.size()) {
                if (std::isspace(static_cast<unsigned char>(line[i]))) {
                    ++i;
                    continue;
                }
                std::size_t j = i;
                while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
                toks_.push_back({line.substr(i, j - i), ln, static_cast<int>(i) + 1});
                i = j;
            }
        }
    }

    void keyword(const std::string& k) {
        const auto& t = next("'" + k + "'");
        if (t.text != k) throw ParseError("expected '" + k + "', found '" + t.text + "'", t.line, t.col);
    }
    long long integer(long long lo, long long hi) {
        const auto& t = next("an integer");
        static const std::regex num(R"(-?\d{1,12})");
        if (!std::regex_match(t.text, num)) throw ParseError("expected an integer, found '" + t.text + "'", t.line, t.col);
        long long v = std::stoll(t.text);
        if (v < lo || v > hi)
            throw ParseError("value " + t.text + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                             t.line, t.col);
        return v;
    }
    void finish() {
        if (pos_ < toks_.size())
            throw ParseError("unexpected '" + toks_[pos_].text + "'", toks_[pos_].line, toks_[pos_].col);
    }

private:
    struct Tok {
        std::string text;
        int line, col;
    };
    const Tok& next(const std::string& what) {
        if (pos_ >= toks_.size()) {
            int line = toks_.empty() ? 1 : toks_.back().line;
            throw ParseError("expected " + what + " before end of file", line, 1);
        }
        return toks_[pos_++];
    }
    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
};

inline std::vector<std::vector<std::uint32_t>> read_table(DatumReader& r, std::size_t N) {
    std::vector<std::vector<std::uint32_t>> t(N, std::vector<std::uint32_t>(N));
    for (auto& row : t)
        for (auto& x : row) x = static_cast<std::uint32_t>(r.integer(0, static_cast<long long>(N) - 1));
    return t;
}

inline std::vector<Perm> read_perms(DatumReader& r, std::size_t count, std::size_t n) {
    std::vector<Perm> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<long long> img;
        for (std::size_t j = 0; j < n; ++j) img.push_back(r.integer(1, static_cast<long long>(n)));
        out.push_back(Perm::from_one_based(img));
    }
    return out;
}

} // namespace detail

struct DatumFile {
    std::shared_ptr<ExtensionDatum> datum;
    std::shared_ptr<PermRep> mu;
};

/// gamma N <table>  h M <table>  kernel k <indices>  r <N indices>
/// degree n  phi <N perms, 1-based>  mu <M perms, 1-based>
inline DatumFile read_datum(std::istream& in) {
    detail::DatumReader r(in);
    r.keyword("gamma");
    auto N = static_cast<std::size_t>(r.integer(1, 10000));
    auto tg = detail::read_table(r, N);
    r.keyword("h");
    auto M = static_cast<std::size_t>(r.integer(1, 10000));
    auto th = detail::read_table(r, M);
    r.keyword("kernel");
    auto k = static_cast<std::size_t>(r.integer(1, static_cast<long long>(N)));
    Subgroup K;
    for (std::size_t i = 0; i < k; ++i) K.push_back(static_cast<std::uint32_t>(r.integer(0, static_cast<long long>(N) - 1)));
    r.keyword("r");
    std::vector<std::uint32_t> rimg;
    for (std::size_t i = 0; i < N; ++i) rimg.push_back(static_cast<std::uint32_t>(r.integer(0, static_cast<long long>(M) - 1)));
    r.keyword("degree");
    auto n = static_cast<std::size_t>(r.integer(1, 8));
    r.keyword("phi");
    auto phi = detail::read_perms(r, N, n);
    r.keyword("mu");
    auto mu = detail::read_perms(r, M, n);
    r.finish();
    auto G = FiniteGroup::from_table(tg, "Gamma");
    auto H = FiniteGroup::from_table(th, "H");
    GroupHom rr(G, H, rimg);
    DatumFile out;
    out.datum = std::make_shared<ExtensionDatum>(G, K, rr, PermRep(G, n, phi));
    out.mu = std::make_shared<PermRep>(H, n, mu);
    return out;
}

inline Json twist_report_json(const TwistReport& rep) {
    Json secs = Json::array();
    for (const auto& s : rep.sections) {
        Json fps = Json::array();
        for (const auto& x : s.fixed_points) fps.push_back(x.to_string());
        secs.push_back({{"class", s.class_index},
                        {"images", s.section.images},
                        {"fixed_points", fps},
                        {"witness", s.witness ? Json(s.witness->to_string()) : Json()},
                        {"conjugacy_holds", s.conjugacy_holds},
                        {"stabilizers_match", s.stabilizers_match},
                        {"pass", s.pass}});
    }
    return {{"n", rep.n},
            {"section_classes", rep.class_count},
            {"sections", secs},
            {"with_fixed_point", rep.with_fixed_point()},
            {"failures", rep.failures},
            {"vacuous", rep.vacuous()}};
}

// ---------------------------------------------------------------- commands

struct Outcome {
    Json result;
    Json certificates = Json::array();
    Json warnings = Json::array();
};

template <class D>
Outcome cmd_specialize(const D& F, const Options& o) {
    if (!o.t0) throw UsageError("specialize needs --t0");
    auto cover = build_cover(F, o);
    auto t0 = parse_element(F, *o.t0);
    Outcome out;
    auto fib = galspec::detail::unramified_fiber(cover, t0);
    Json r;
    r["cover"] = to_json(cover.polynomial());
    r["t0"] = F.to_string(t0);
    r["fiber"] = to_json(fib);
    r["pattern"] = to_json(specialize_pattern(cover, t0));
    if constexpr (std::is_same_v<D, RationalField>) {
        auto alg = etale_algebra(cover, t0);
        Json fs = Json::array();
        for (const auto& f : alg.factors) fs.push_back({{"poly", to_json(f.poly)}, {"degree", f.poly.degree()}});
        r["etale_algebra"] = fs;
        if (o.prime) {
            if (denominator_of(t0) != 1) throw UsageError("--prime needs an integer --t0");
            r["residue_degrees"] = {{"prime", *o.prime},
                                    {"pattern", to_json(residue_degrees_at(cover, numerator_of(t0), *o.prime))}};
        }
    } else {
        if (o.prime) throw UsageError("--prime only applies over Q");
        r["factors"] = to_json(factor_ff(fib, o.seed));
    }
    out.result = r;
    return out;
}

template <class D>
Outcome cmd_census(const D& F, const Options& o) {
    Outcome out;
    if constexpr (!D::is_finite) {
        throw UsageError("census needs a finite field (--field q)");
    } else {
        auto cover = build_cover(F, o);
        auto rep = census(cover);
        Rational C = o.tolerance ? parse_rational(*o.tolerance) : Rational(factorial(rep.n));
        if (C < 0) throw UsageError("tolerance must be nonnegative");
        Json rows = Json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"pattern", to_json(r.pattern)},
                            {"count", r.count},
                            {"density", str(r.density)},
                            {"expected", str(r.expected)},
                            {"deviation", str(r.deviation)},
                            {"extrapolated", r.extrapolated}});
        out.result = {{"q", str(rep.q)},
                      {"field", F.name()},
                      {"cover", to_json(cover.polynomial())},
                      {"n", rep.n},
                      {"counts", rows},
                      {"excluded", rep.excluded},
                      {"all_realized", rep.all_realized},
                      {"constant_c", str(rep.constant_c)},
                      {"above_bound", rep.above_bound}};
        for (const auto& v : density_check(rep, C)) {
            out.certificates.push_back({{"check", "density"},
                                        {"pattern", to_json(v.pattern)},
                                        {"pass", v.pass},
                                        {"deviation", str(v.deviation)},
                                        {"tolerance", str(C)},
                                        {"bound_squared", str(C * C * Rational(rep.q))},
                                        {"extrapolated", v.extrapolated}});
            if (!v.pass)
                out.warnings.push_back("density check failed for " + v.pattern.to_string() + " with C = " + str(C));
        }
        if (!rep.above_bound)
            out.warnings.push_back("q = " + str(rep.q) + " is below constant_c = " + str(rep.constant_c) +
                                   "; realization of every pattern is not guaranteed");
    }
    return out;
}

inline Json choice_json(const LocalChoice& c) {
    return {{"prime", str(c.prime)}, {"pattern", to_json(c.pattern)}, {"residue", str(c.residue)}};
}

inline Outcome cmd_search(const Options& o) {
    if (!o.constraints) throw UsageError("search needs --constraints");
    RationalField Q;
    SearchSpec spec{build_cover(Q, o), parse_constraints(*o.constraints), o.max_candidates, o.prime_budget, o.seed};
    auto res = grunwald_search(spec);
    Outcome out;
    Json cc = Json::array(), tp = Json::array(), pts = Json::array();
    for (const auto& c : res.constraint_choices) cc.push_back(choice_json(c));
    for (const auto& c : res.trick_primes) tp.push_back(choice_json(c));
    for (const auto& p : res.certified) pts.push_back(str(p.t0));
    out.result = {{"b", str(res.b)},
                  {"M", str(res.M)},
                  {"beta", str(res.beta)},
                  {"constraints", cc},
                  {"trick_primes", tp},
                  {"certified_t0", pts},
                  {"candidates_tried", res.candidates_tried},
                  {"constant_c", str(res.constant_c)},
                  {"m0", str(res.m0)}};
    for (const auto& p : res.certified) {
        Json loc = Json::array(), wit = Json::array();
        for (const auto& [q, pat] : p.local_patterns) loc.push_back({{"prime", str(q)}, {"pattern", to_json(pat)}});
        for (const auto& [pat, q] : p.sn.witnesses) wit.push_back({{"pattern", to_json(pat)}, {"prime", str(q)}});
        out.certificates.push_back({{"t0", str(p.t0)},
                                    {"local_patterns", loc},
                                    {"irreducible_mod", str(p.irreducibility_prime)},
                                    {"sn_witnesses", wit},
                                    {"primes_scanned", p.sn.primes_scanned}});
    }
    for (const auto& w : res.warnings) out.warnings.push_back(w);
    return out;
}

template <class D>
Outcome cmd_family(const D& F, const Options& o) {
    if (!o.family) throw UsageError("family needs --family");
    auto c = build_cover(F, o);
    Outcome out;
    Json r;
    r["tag"] = to_string(c.tag());
    r["field"] = F.name();
    r["n"] = c.degree();
    r["polynomial"] = to_json(c.polynomial());
    r["discriminant"] = to_json(c.discriminant());
    r["branch_locus"] = to_json(c.locus());
    r["infinity_branched"] = c.infinity_branched();
    r["r"] = c.branch_point_count();
    r["constant_c"] = str(constant_c(c));
    if constexpr (std::is_same_v<D, RationalField>) {
        Json rec = Json::array(), rat = Json::array(), hi = Json::array();
        for (const auto& x : c.recorded_branch_points()) rec.push_back(str(x));
        auto fb = finite_branch_points(c);
        for (const auto& x : fb.rational_points) rat.push_back(str(x));
        for (const auto& f : fb.higher_factors) hi.push_back(to_json(f));
        r["recorded_branch_points"] = rec;
        r["rational_branch_points"] = rat;
        r["irrational_branch_factors"] = hi;
        auto bad = bad_prime_integer(c);
        Json primes = Json::array();
        for (const auto& p : bad.primes) primes.push_back(str(p));
        r["bad_primes"] = primes;
        if (bad.cofactor != 1) {
            r["bad_prime_cofactor"] = str(bad.cofactor);
            out.warnings.push_back("bad-prime integer not fully factored; cofactor " + str(bad.cofactor));
        }
        if (!rec.empty()) out.certificates.push_back({{"check", "closed_form_branch_points"}, {"pass", rec == rat}});
    }
    out.result = r;
    return out;
}

template <class D>
Outcome cmd_morse(const D& F, const Options& o) {
    if (!o.cover) throw UsageError("morse-check needs --cover with a polynomial in Y");
    auto M = to_poly_y(parse_poly(*o.cover), F);
    auto v = is_morse(M);
    Outcome out;
    out.result = {{"polynomial", to_json(M)},
                  {"field", F.name()},
                  {"morse", v.morse},
                  {"critical_value_poly", to_json(v.critical_value_poly)},
                  {"repeated_part", to_json(v.repeated_part)}};
    return out;
}

template <class D>
Outcome cmd_realize(const D& F, const Options& o) {
    Outcome out;
    if constexpr (!D::is_finite) {
        throw UsageError("realize-ff needs a finite field (--field q)");
    } else {
        int sources = o.n_trinomial.has_value() + o.cover.has_value() + o.family.has_value();
        if (sources != 1) throw UsageError("give exactly one of --n, --cover (Morse polynomial) and --family");
        std::string method;
        std::optional<Realization<D>> r;
        if (o.n_trinomial) {
            if (*o.n_trinomial < 2 || *o.n_trinomial > 64) throw UsageError("--n must be in [2, 64]");
            method = "trinomial";
            r = realize_by_trinomial(static_cast<unsigned>(*o.n_trinomial), F);
        } else if (o.cover) {
            method = "morse";
            r = realize_by_morse(to_poly_y(parse_poly(*o.cover), F));
        } else {
            method = "family";
            auto c = build_cover(F, o);
            r = realize_in_cover(c, Partition({c.degree()}));
        }
        out.result = {{"method", method},
                      {"field", F.name()},
                      {"b", F.to_string(r->b)},
                      {"index", str(r->index)},
                      {"polynomial", to_json(r->poly)},
                      {"bound", str(r->bound)},
                      {"meets_bound", r->meets_bound}};
        out.certificates.push_back({{"check", "irreducible"}, {"pass", is_irreducible_ff(r->poly)}});
        if (!r->meets_bound)
            out.warnings.push_back("q = " + str(F.order()) + " is below the bound " + str(r->bound));
    }
    return out;
}

inline Outcome cmd_twist(const Options& o) {
    Outcome out;
    if (o.exhaustive) {
        std::size_t data = 0, sections = 0, fixed = 0, failures = 0;
        for (unsigned n : {2u, 3u})
            for (const auto& H : small_groups(4))
                for (const auto& d : semidirect_family(n, H))
                    for (const auto& [subs, mu] : algebra_reps(H, n)) {
                        auto rep = verify_twisting_lemma(d, mu);
                        ++data;
                        sections += rep.sections.size();
                        fixed += rep.with_fixed_point();
                        failures += rep.failures;
                    }
        out.result = {{"family", "S_n x| H, n in {2,3}, |H| <= 4"},
                      {"data_checked", data},
                      {"sections_checked", sections},
                      {"sections_with_fixed_point", fixed},
                      {"failures", failures}};
        out.certificates.push_back({{"check", "twisting_lemma"}, {"pass", failures == 0}});
        return out;
    }
    if (!o.datum) throw UsageError("twist-verify needs --datum <file> or --exhaustive");
    std::ifstream in(*o.datum);
    if (!in) throw UsageError("cannot open datum file '" + *o.datum + "'");
    auto df = read_datum(in);
    auto rep = verify_twisting_lemma(*df.datum, *df.mu);
    out.result = twist_report_json(rep);
    out.result["gamma_order"] = df.datum->gamma()->order();
    out.result["h_order"] = df.datum->H()->order();
    out.certificates.push_back({{"check", "twisting_lemma"}, {"pass", rep.failures == 0}});
    if (rep.vacuous()) out.warnings.push_back("the extension does not split: no sections, vacuous pass");
    return out;
}

// ---------------------------------------------------------------- driver

inline Json echo(const Options& o) {
    Json e;
    e["field"] = o.field;
    auto put = [&](const char* k, const auto& v) {
        if (v) e[k] = *v;
    };
    put("cover", o.cover);
    put("family", o.family);
    put("t0", o.t0);
    put("prime", o.prime);
    put("n", o.n_trinomial);
    put("constraints", o.constraints);
    put("tolerance", o.tolerance);
    put("modulus", o.modulus);
    put("datum", o.datum);
    if (o.exhaustive) e["exhaustive"] = true;
    e["seed"] = o.seed;
    if (o.command == "search") {
        e["max_candidates"] = o.max_candidates;
        e["prime_budget"] = o.prime_budget;
    }
    return e;
}

inline Outcome dispatch(const Options& o) {
    if (o.command == "search") return cmd_search(o);
    if (o.command == "twist-verify") return cmd_twist(o);
    auto fd = parse_field(o.field);
    Outcome out;
    auto go = [&](auto fn) {
        with_field(fd, o, [&](const auto& F) {
            out = fn(F);
            return Json();
        });
    };
    if (o.command == "specialize") go([&](const auto& F) { return cmd_specialize(F, o); });
    else if (o.command == "census") go([&](const auto& F) { return cmd_census(F, o); });
    else if (o.command == "family") go([&](const auto& F) { return cmd_family(F, o); });
    else if (o.command == "morse-check") go([&](const auto& F) { return cmd_morse(F, o); });
    else if (o.command == "realize-ff") go([&](const auto& F) { return cmd_realize(F, o); });
    else throw UsageError("unknown command '" + o.command + "'");
    return out;
}

/// Runs one command; returns 0 on success, 1 on a domain error, 2 on a usage
/// or parse error. The JSON report goes to `out` or to --out.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"galspec: specializations of covers of the projective line"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--field", o.field, "Q, a prime p, or p^f");
    app.add_option("--out", o.out, "write the JSON report here instead of stdout");
    app.add_option("--seed", o.seed, "seed for randomized factorization steps");
    app.add_flag("--timing", o.timing, "include wall-clock timing in the report");
    app.add_option("--modulus", o.modulus, "defining polynomial in Y for GF(p^f)");

    auto cover_opts = [&](CLI::App* s) {
        s->add_option("--cover", o.cover, "polynomial expression in T and Y");
        s->add_option("--family", o.family, "tag:params, e.g. trinomial-general:3,1,1,2");
    };
    auto* spec = app.add_subcommand("specialize", "factorization pattern of P(t0, Y)");
    cover_opts(spec);
    spec->add_option("--t0", o.t0, "point: a rational, or #k for the k-th field element")->required();
    spec->add_option("--prime", o.prime, "also report residue degrees at this prime (over Q)");
    auto* cen = app.add_subcommand("census", "patterns over every t0 in GF(q)");
    cover_opts(cen);
    cen->add_option("--tolerance", o.tolerance, "constant C in |count - density q| <= C sqrt(q)");
    auto* sea = app.add_subcommand("search", "arithmetic progression of t0 with prescribed local patterns");
    cover_opts(sea);
    sea->add_option("--constraints", o.constraints, "p:{d1,...},...")->required();
    sea->add_option("--max-candidates", o.max_candidates, "number of certified t0 to return");
    sea->add_option("--prime-budget", o.prime_budget, "primes scanned per S_n certificate");
    auto* fam = app.add_subcommand("family", "validate a family and report its branch data");
    cover_opts(fam);
    auto* mor = app.add_subcommand("morse-check", "Morse test for a polynomial in Y");
    mor->add_option("--cover", o.cover, "polynomial in Y")->required();
    auto* rea = app.add_subcommand("realize-ff", "irreducible specialization over GF(q)");
    cover_opts(rea);
    rea->add_option("--n", o.n_trinomial, "degree of Y^n - Y + b");
    auto* tw = app.add_subcommand("twist-verify", "check the twisting lemma on an extension datum");
    tw->add_option("--datum", o.datum, "extension datum file");
    tw->add_flag("--exhaustive", o.exhaustive, "run the built-in S_n x| H family instead");

    std::vector<const char*> argv{"galspec"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    o.command = app.get_subcommands().front()->get_name();

    Json doc;
    doc["command"] = o.command;
    doc["input_echo"] = echo(o);
    int code = 0;
    auto t_start = std::chrono::steady_clock::now();
    try {
        auto res = dispatch(o);
        doc["result"] = res.result;
        doc["certificates"] = res.certificates;
        doc["warnings"] = res.warnings;
    } catch (const Error& e) {
        code = (dynamic_cast<const UsageError*>(&e) || dynamic_cast<const ParseError*>(&e)) ? 2 : 1;
        doc["result"] = nullptr;
        doc["error"] = {{"kind", e.kind()}, {"message", e.what()}};
        err << e.kind() << ": " << e.what() << "\n";
    } catch (const std::exception& e) {
        code = 1;
        doc["result"] = nullptr;
        doc["error"] = {{"kind", "internal"}, {"message", e.what()}};
        err << "error: " << e.what() << "\n";
    }
    if (!doc.contains("certificates")) doc["certificates"] = Json::array();
    if (!doc.contains("warnings")) doc["warnings"] = Json::array();
    if (o.timing) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t_start;
        doc["timing"] = {{"seconds", dt.count()}};
    } else {
        doc["timing"] = nullptr;
    }
    std::string text = doc.dump(2) + "\n";
    if (o.out) {
        std::ofstream f(*o.out);
        if (!f) {
            err << "usage error: cannot write '" << *o.out << "'\n";
            return 2;
        }
        f << text;
    } else {
        out << text;
    }
    return code;
}

} // namespace galspec::cli

#endif // GALSPEC_CLI_HPP
