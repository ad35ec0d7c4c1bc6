#include "hitcalc/golden.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hitcalc::golden {

std::string TRange::to_string() const
{
    if (hi < 0)
        return "t>=" + std::to_string(lo);
    if (hi == lo)
        return "t=" + std::to_string(lo);
    return std::to_string(lo) + "<=t<=" + std::to_string(hi);
}

Monomial ParamMonomialFamily::instantiate(int t) const
{
    if (!range.contains(t))
        throw domain_error("family " + label + " " + std::to_string(k) +
                           " is not valid at t=" + std::to_string(t));
    std::vector<uint32_t> e(vars, 0);
    for (int i = 0; i < vars; ++i) {
        long long v = exps[i].eval(t);
        if (v < 0 || v > 0x7fffffffLL)
            throw domain_error("family " + label + " " + std::to_string(k) +
                               " has an out-of-range exponent at t=" + std::to_string(t));
        e[i] = uint32_t(v);
    }
    return Monomial(vars, e);
}

std::vector<ParamMonomialFamily> Catalog::select(const std::string& label, int t) const
{
    std::vector<ParamMonomialFamily> out;
    for (const auto& f : families)
        if (f.label == label && f.range.contains(t))
            out.push_back(f);
    std::sort(out.begin(), out.end(),
              [](const ParamMonomialFamily& a, const ParamMonomialFamily& b) {
                  return a.k < b.k;
              });
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i].k == out[i - 1].k)
            throw parse_error("duplicate index " + std::to_string(out[i].k) +
                              " for label " + label + " at t=" + std::to_string(t));
    return out;
}

std::vector<Monomial> Catalog::instantiate(const std::string& label, int t) const
{
    std::vector<Monomial> out;
    for (const auto& f : select(label, t))
        out.push_back(f.instantiate(t));
    return out;
}

Polynomial Catalog::range_sum(const std::string& label, int t, int k_lo, int k_hi) const
{
    std::vector<Monomial> terms;
    for (const auto& f : select(label, t))
        if (f.k >= k_lo && f.k <= k_hi)
            terms.push_back(f.instantiate(t));
    if (terms.empty())
        throw domain_error("empty range sum");
    int vars = terms.front().vars();
    return Polynomial(vars, std::move(terms));
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    int line;

    void skip_ws()
    {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
            ++pos;
    }
    bool eat(char c)
    {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw parse_error("line " + std::to_string(line) + ", column " +
                          std::to_string(pos + 1) + ": " + what);
    }
};

long long parse_int(Cursor& c)
{
    c.skip_ws();
    size_t start = c.pos;
    while (c.pos < c.s.size() && isdigit((unsigned char)c.s[c.pos]))
        ++c.pos;
    if (c.pos == start)
        c.fail("expected an integer");
    return std::stoll(c.s.substr(start, c.pos - start));
}

// term := INT | 2^t | 2^(t+1)   (the INT 2 followed by '^' is a power token)
void parse_term(Cursor& c, int sign, ExponentExpr& e)
{
    c.skip_ws();
    long long v = parse_int(c);
    if (c.pos < c.s.size() && c.s[c.pos] == '^') {
        if (v != 2)
            c.fail("only base-2 powers are supported");
        ++c.pos;
        if (c.eat('t')) {
            e.coef_t += sign;
            return;
        }
        if (!c.eat('('))
            c.fail("expected t or (t+1) after 2^");
        if (!c.eat('t') || !c.eat('+') || parse_int(c) != 1 || !c.eat(')'))
            c.fail("only the exponents t and t+1 are supported");
        e.coef_t1 += sign;
        return;
    }
    e.const_term += sign * v;
}

ExponentExpr parse_expr(Cursor& c)
{
    ExponentExpr e;
    parse_term(c, +1, e);
    for (;;) {
        c.skip_ws();
        if (c.pos < c.s.size() && c.s[c.pos] == '+') {
            ++c.pos;
            parse_term(c, +1, e);
        } else if (c.pos < c.s.size() && c.s[c.pos] == '-') {
            ++c.pos;
            parse_term(c, -1, e);
        } else {
            return e;
        }
    }
}

TRange parse_range(Cursor& c)
{
    c.skip_ws();
    TRange r;
    if (c.s.compare(c.pos, 3, "t>=") == 0) {
        c.pos += 3;
        r.lo = int(parse_int(c));
        r.hi = -1;
    } else if (c.s.compare(c.pos, 2, "t=") == 0) {
        c.pos += 2;
        r.lo = r.hi = int(parse_int(c));
    } else {
        c.fail("expected a range of the form t=N or t>=N");
    }
    return r;
}

}  // namespace

Catalog load_catalog(std::istream& in)
{
    Catalog cat;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        Cursor c{line, 0, lineno};
        c.skip_ws();
        if (c.pos == line.size())
            continue;
        ParamMonomialFamily fam;
        while (c.pos < line.size() && isalpha((unsigned char)line[c.pos]))
            fam.label += line[c.pos++];
        if (fam.label.empty())
            c.fail("expected a family label");
        if (!c.eat(';'))
            c.fail("expected ';' after the label");
        fam.k = int(parse_int(c));
        if (!c.eat(';'))
            c.fail("expected ';' after the index");
        do {
            fam.exps.push_back(parse_expr(c));
        } while (c.eat(','));
        fam.vars = int(fam.exps.size());
        if (!c.eat(';'))
            c.fail("expected ';' after the exponents");
        fam.range = parse_range(c);
        c.skip_ws();
        if (c.pos != line.size())
            c.fail("trailing characters");
        cat.families.push_back(std::move(fam));
    }
    return cat;
}

Catalog load_catalog_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open golden data file: " + path);
    return load_catalog(in);
}

void check_catalog(const Catalog& cat, int t_max)
{
    auto expect = [](bool ok, const std::string& what) {
        if (!ok)
            throw parse_error(what);
    };
    for (const auto& f : cat.families) {
        int lo = std::max(1, f.range.lo);
        int hi = (f.range.hi < 0) ? t_max : std::min(f.range.hi, t_max);
        for (int t = lo; t <= hi; ++t) {
            Monomial m = f.instantiate(t);
            long long d = 3 * ((1LL << t) - 1) + (1LL << t);
            std::string where = f.label + " " + std::to_string(f.k) + " at t=" +
                                std::to_string(t);
            if (f.label == "q" || f.label == "b") {
                expect(f.vars == 5, where + ": expected 5 variables");
                expect(m.degree() == d, where + ": wrong degree");
                // the one t=1 b-entry is the Kameko lift x1..x5 of weight (5)
                bool lift = (t == 1 && f.label == "b" && m.weight() == WeightVector({5}));
                expect(lift || m.weight() == omega_5t(t), where + ": wrong weight vector");
                if (f.label == "b")
                    expect(m.all_positive(), where + ": b-families live in P_5^+");
                else
                    expect(!m.all_positive(), where + ": q-families live in P_5^0");
            } else if (f.label == "u") {
                expect(f.vars == 4 && m.degree() == 13 && m.weight() == omega_5t(2),
                       where + ": u-families are the degree-13 P_4 list");
                expect(m.all_positive(), where + ": u-families live in P_4^+");
            } else if (f.label == "v") {
                expect(f.vars == 4 && m.degree() == d && m.weight() == omega_5t(t),
                       where + ": wrong degree or weight");
                expect(m.all_positive(), where + ": v-families live in P_4^+");
            } else {
                expect(false, "unknown family label " + f.label);
            }
        }
    }
}

namespace {

SetDiff diff_sets(const std::string& name, std::vector<Monomial> golden,
                  std::vector<Monomial> computed)
{
    // total order across degrees so a wrong-degree entry is reportable
    auto lt = [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return compare_monomials(a, b) < 0;
    };
    std::sort(golden.begin(), golden.end(), lt);
    std::sort(computed.begin(), computed.end(), lt);
    SetDiff d;
    d.name = name;
    d.expected = golden.size();
    d.computed = computed.size();
    std::set_difference(golden.begin(), golden.end(), computed.begin(), computed.end(),
                        std::back_inserter(d.missing), lt);
    std::set_difference(computed.begin(), computed.end(), golden.begin(), golden.end(),
                        std::back_inserter(d.extra), lt);
    return d;
}

}  // namespace

VerifyReport verify_against_computed(const Catalog& cat, int t, const RunConfig& cfg)
{
    VerifyReport rep;
    rep.t = t;
    long long d = 3 * ((1LL << t) - 1) + (1LL << t);
    rep.degree = d;
    WeightVector w = omega_5t(t);

    QuotientBasis q = QuotientBasis::build(5, d, cfg);
    long long lower = (1LL << (t + 1)) - 4;
    QuotientBasis qlow = QuotientBasis::build(5, lower, cfg);

    // lifts x1..x5 y^2 of the lower admissible basis; at t = 1 the single
    // b-entry is itself such a lift and must not be double counted
    std::vector<Monomial> lifts;
    for (const Monomial& y : qlow.admissible())
        lifts.push_back(kameko_section(y));

    std::vector<Monomial> golden_b = cat.instantiate("b", t);
    size_t lift_overlap = 0;
    for (const Monomial& m : golden_b)
        for (const Monomial& l : lifts)
            if (m == l)
                ++lift_overlap;

    std::vector<Monomial> b0_computed, bplus_computed;
    for (const Monomial& m : q.admissible()) {
        if (!m.all_positive())
            b0_computed.push_back(m);
        else if (m.weight() == w || (t == 1 && m.weight() == WeightVector({5})))
            bplus_computed.push_back(m);
    }
    rep.checks.push_back(diff_sets("B5^0(" + std::to_string(d) + ")",
                                   cat.instantiate("q", t), b0_computed));
    rep.checks.push_back(diff_sets("B5^+(omega_(5," + std::to_string(t) + "))",
                                   golden_b, bplus_computed));

    rep.dim_total = q.dim();
    rep.dim_lower = qlow.dim();
    size_t u_t = rep.checks[0].expected, v_t = rep.checks[1].expected;
    rep.count_identity =
        (size_t(rep.dim_total) + lift_overlap == u_t + v_t + size_t(rep.dim_lower));

    rep.section_embeds = true;
    for (const Monomial& l : lifts)
        if (!q.is_admissible(l))
            rep.section_embeds = false;

    rep.pass = rep.checks[0].ok() && rep.checks[1].ok() && rep.count_identity &&
               rep.section_embeds;
    return rep;
}

}  // namespace hitcalc::golden
