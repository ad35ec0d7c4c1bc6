#pragma once

#include "hitcalc/monomial.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hitcalc {

/// Homogeneous polynomial over F_2: a set of monomials of one common degree.
/// Addition is the symmetric difference of the term sets.
class Polynomial {
public:
    explicit Polynomial(int s) : s_(s) {}
    Polynomial(int s, std::vector<Monomial> terms);

    static Polynomial monomial(const Monomial& m);

    int vars() const { return s_; }
    bool zero() const { return terms_.empty(); }
    long long degree() const { return terms_.empty() ? -1 : terms_.front().degree(); }
    const std::vector<Monomial>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m);  // toggles membership
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    // Apply a monomial-wise linear map; the images must share one degree.
    Polynomial map_terms(const std::function<Polynomial(const Monomial&)>& f) const;

    bool operator==(const Polynomial& o) const { return s_ == o.s_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void normalize();

    int s_;
    std::vector<Monomial> terms_;  // strictly increasing in the weight order
};

// C(n, k) mod 2 by Lucas: odd iff the binary digits of k sit inside n.
constexpr bool binom_odd(uint64_t n, uint64_t k)
{
    return k <= n && (k & (n - k)) == 0;
}

// Sq^k(x_var^n): x_var^{n+k} when C(n, k) is odd, else 0.
Polynomial sq_on_power(int k, int var, uint32_t n, int s);

// Steenrod square via the Cartan formula, F_2-linear in f.
Polynomial sq(int k, const Polynomial& f);
Polynomial sq(int k, const Monomial& m);

// Antipode chi(Sq^k) applied to f, via chi(Sq^0) = 1 and
// sum_{i=0..k} Sq^i chi(Sq^{k-i}) = 0.
Polynomial chi_sq(int k, const Polynomial& f);

// Kameko's halving: all exponents odd -> componentwise (n_i - 1)/2, else zero.
Polynomial kameko_psi(const Monomial& m);
Polynomial kameko_psi(const Polynomial& f);

// Kameko's section: y -> x_1 x_2 ... x_s y^2.
Monomial kameko_section(const Monomial& y);

struct HitGenerator {
    int k;       // Sq^k
    Monomial m;  // of degree d - k
};

// Generators of the hit subspace (A^+ P_s)_d: Sq^{2^i}(m) over all 2^i <= d
// and monomials m of degree d - 2^i. The exhaustive mode uses every Sq^k,
// 1 <= k <= d, instead (same span, for cross-validation).
std::vector<HitGenerator> hit_generators(int s, long long d, bool exhaustive,
                                         uint64_t limit);

}  // namespace hitcalc
