#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hitcalc {

inline constexpr int kMaxVars = 6;

// Bit j of the dyadic expansion of d.
constexpr int alpha(int j, uint64_t d)
{
    return int((d >> j) & 1u);
}

// Number of ones in the dyadic expansion.
constexpr int alpha_count(uint64_t d)
{
    return __builtin_popcountll(d);
}

/// Finitely supported sequence (w1, w2, ...) with trailing zeros trimmed,
/// compared by left-lexicographic order.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int entry(int i) const { return i < int(entries_.size()) ? entries_[i] : 0; }
    int length() const { return int(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    // sum_i 2^{i-1} w_i
    long long degree() const;

    bool weakly_decreasing() const;

    bool operator==(const WeightVector& o) const { return entries_ == o.entries_; }
    bool operator!=(const WeightVector& o) const { return !(*this == o); }
    bool operator<(const WeightVector& o) const { return compare(o) < 0; }
    bool operator<=(const WeightVector& o) const { return compare(o) <= 0; }
    bool operator>(const WeightVector& o) const { return compare(o) > 0; }
    bool operator>=(const WeightVector& o) const { return compare(o) >= 0; }

    // negative / 0 / positive, left-lex with zero padding
    int compare(const WeightVector& o) const;

    std::string to_string() const;  // e.g. [3,3,1]

private:
    std::vector<int> entries_;
};

// (3,3,...,3,1) with t threes; the weight of the minimal spike of degree
// 3(2^t-1)+2^t in five variables.
WeightVector omega_5t(int t);

/// Monomial x_1^{a_1} ... x_s^{a_s} in s variables, s <= 6.
class Monomial {
public:
    Monomial() : s_(0), e_{} {}
    Monomial(int s, std::array<uint32_t, kMaxVars> exps) : s_(s), e_(exps) {}
    Monomial(int s, const std::vector<uint32_t>& exps);

    int vars() const { return s_; }
    uint32_t exp(int i) const { return e_[i]; }  // 0-based
    const std::array<uint32_t, kMaxVars>& exps() const { return e_; }

    long long degree() const;
    WeightVector weight() const;
    bool is_one() const { return degree() == 0; }

    // All exponents of the form 2^k - 1.
    bool is_spike() const;
    // Product of all s variables divides the monomial.
    bool all_positive() const;

    Monomial times(const Monomial& o) const;  // same s
    Monomial pow2(int r) const;               // m^(2^r)

    bool operator==(const Monomial& o) const { return s_ == o.s_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string to_string() const;  // e.g. x1^3 x2 x5^7
    std::string json() const;       // e.g. [3,1,0,0,7]

private:
    int s_;
    std::array<uint32_t, kMaxVars> e_;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const;
};

// The weight order: x < y iff w(x) < w(y), or w equal and the exponent
// tuples compare left-lexicographically. Requires equal degree and s.
int compare_monomials(const Monomial& x, const Monomial& y);

struct WeightOrderLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        return compare_monomials(a, b) < 0;
    }
};

// Smallest k such that d is a sum of k numbers of the form 2^u - 1, u > 0.
// mu(0) = 0. Memoized.
int mu(long long d);

struct DegreeDecomposition {
    int r;        // = mu(d)
    int t;
    long long m;  // mu(m) < r
};

// d = r(2^t - 1) + 2^t m with r = mu(d) >= 1 and mu(m) < r.
DegreeDecomposition decompose_degree(long long d, int r);

// The unique spike x_1^{2^{u_1}-1} ... x_r^{2^{u_r}-1} of degree d with
// u_1 > u_2 > ... > u_{r-1} >= u_r > 0 and r = mu(d). Throws if mu(d) > s.
Monomial minimal_spike(long long d, int s);

// The spike with prescribed weakly decreasing weight vector, w_1 <= s.
Monomial spike_for_weight(const WeightVector& w, int s);

// How many monomials of degree d in s variables; saturates at the cap.
uint64_t degree_space_size(int s, long long d, uint64_t cap);

// All monomials of degree d in s variables, strictly increasing in the
// weight order. Throws resource_error when the count exceeds limit.
std::vector<Monomial> enumerate_monomials(int s, long long d, uint64_t limit);

// All monomials with weight vector exactly w, increasing in the weight
// order (within one weight class that is left-lex on exponents).
std::vector<Monomial> enumerate_monomials_of_weight(int s, const WeightVector& w,
                                                    uint64_t limit);

// All weight vectors w of degree d with entries in [0, s].
std::vector<WeightVector> weight_vectors_of_degree(int s, long long d);

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hitcalc
