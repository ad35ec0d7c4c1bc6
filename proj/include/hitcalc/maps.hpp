#pragma once

#include "hitcalc/polynomial.hpp"

#include <optional>
#include <vector>

namespace hitcalc {

/// (i; I) with I = (i_1 < ... < i_r), i < i_1, i_r <= s, 0 <= r < s.
/// Indices are 1-based as in the defining substitutions.
struct IndexPair {
    int i;
    std::vector<int> I;
    int s;  // target variable count

    int length() const { return int(I.size()); }
};

IndexPair make_index_pair(int i, std::vector<int> I, int s);

// Every (i; I) in N_s.
std::vector<IndexPair> all_index_pairs(int s);

// Variable insertion P_{s-1} -> P_s: x_j -> x_j (j < i), x_j -> x_{j+1} (j >= i).
Monomial rho(int i, const Monomial& m, int s);
Polynomial rho(int i, const Polynomial& f, int s);

// The unique u in [1, r] such that m is u-compatible with (i; I), if any.
// For I = {} the convention is u = 1.
std::optional<int> u_compatible(const Monomial& m, const IndexPair& pair);

// phi_{(i;I)}: x_i^{2^r - 1} rho_i(m) / x_{(I,u)} when some u-compatibility
// holds, else zero. Nonzero images preserve the weight vector.
std::optional<Monomial> phi(const IndexPair& pair, const Monomial& m);

// p_{(i;I)}: P_s -> P_{s-1}, x_i -> sum_{k in I} x_{k-1}, the others shifted.
Polynomial p_map(const IndexPair& pair, const Polynomial& f);
Polynomial p_map(const IndexPair& pair, const Monomial& m);

// Phi^0(U) = union of rho_i(U) over 1 <= i <= s.
std::vector<Monomial> phi0_set(const std::vector<Monomial>& U, int s);

// Phi^+(U) = union of phi_{(i;I)}(U), 0 < l(I) < s, minus P_s^0.
std::vector<Monomial> phi_plus_set(const std::vector<Monomial>& U, int s);

}  // namespace hitcalc
