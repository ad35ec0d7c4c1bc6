#pragma once

#include "hitcalc/quotient.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hitcalc::golden {

// Exponent expression over the parameter t: integer constants and the powers
// 2^t, 2^(t+1), combined with + and -.
struct ExponentExpr {
    // value = const_term + coef_t * 2^t + coef_t1 * 2^(t+1)
    long long const_term = 0;
    long long coef_t = 0;
    long long coef_t1 = 0;

    long long eval(int t) const
    {
        return const_term + coef_t * (1LL << t) + coef_t1 * (2LL << t);
    }
};

struct TRange {
    int lo = 1;
    int hi = -1;  // -1: unbounded

    bool contains(int t) const { return t >= lo && (hi < 0 || t <= hi); }
    std::string to_string() const;
};

// One appendix family: a parameterized monomial with its validity range.
struct ParamMonomialFamily {
    std::string label;  // q, b, u, v
    int k = 0;          // index within the label's list
    int vars = 0;
    std::vector<ExponentExpr> exps;
    TRange range;

    Monomial instantiate(int t) const;
};

struct Catalog {
    std::vector<ParamMonomialFamily> families;

    // Families of one label valid at t, ordered by index k.
    std::vector<ParamMonomialFamily> select(const std::string& label, int t) const;
    // Instantiated monomials of one label at t, ordered by index k.
    std::vector<Monomial> instantiate(const std::string& label, int t) const;
    // Sum of the label's instances with k in [k_lo, k_hi], as a polynomial.
    Polynomial range_sum(const std::string& label, int t, int k_lo, int k_hi) const;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Data file: one family per line, `label; k; e1,e2,...; t-range`, '#' comments.
Catalog load_catalog(std::istream& in);
Catalog load_catalog_file(const std::string& path);

// Degree/weight self-consistency of every family at each valid t <= t_max:
// q/b instances must have degree 3(2^t-1)+2^t and weight (3,...,3,1);
// u is the degree-13 P_4 list; v follows the q/b degree in P_4.
// Throws parse_error on violation.
void check_catalog(const Catalog& cat, int t_max);

struct SetDiff {
    std::string name;
    size_t expected = 0, computed = 0;
    std::vector<Monomial> missing;  // golden but not computed
    std::vector<Monomial> extra;    // computed but not golden
    bool ok() const { return missing.empty() && extra.empty(); }
};

struct VerifyReport {
    int t = 0;
    long long degree = 0;
    bool pass = false;
    std::vector<SetDiff> checks;
    int dim_total = 0, dim_lower = 0;
    bool count_identity = false;  // dim = u_t + v_t + dim_lower
    bool section_embeds = false;  // phi(B(lower)) lands in the admissible set
};

// Compare the instantiated appendix families against computed admissible
// bases at parameter t. Mismatches are report content, not errors.
VerifyReport verify_against_computed(const Catalog& cat, int t, const RunConfig& cfg);

}  // namespace hitcalc::golden
