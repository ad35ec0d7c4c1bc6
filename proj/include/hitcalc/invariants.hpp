#pragma once

#include "hitcalc/quotient.hpp"

namespace hitcalc {

// Generators of GL_s: tau_1..tau_{s-1} swap adjacent variables, tau_s is the
// transvection x_1 -> x_1 + x_2. The first s-1 generate Sigma_s.
Polynomial tau(int i, const Polynomial& f);
Polynomial tau(int i, const Monomial& m);

enum class Group { Sigma, GL };

/// Action of tau_gen on (QP_s)_d in admissible coordinates:
/// column k is the reduction of tau(admissible_k).
gf2::GF2Matrix action_matrix(int gen, const QuotientBasis& q);

/// Same action restricted to the weight-w subquotient QP_s(w): rows/columns
/// of the full-degree matrix at the admissible monomials of weight exactly w
/// (the reduction never raises weight, so this block is well defined).
gf2::GF2Matrix action_matrix_on_weight(int gen, const QuotientBasis& q,
                                       const WeightVector& w);

struct FixedPoints {
    int dim = 0;
    std::vector<gf2::BitVec> basis;  // coordinates over the chosen basis
};

// Common kernel of (M_g - id) over the given action matrices.
FixedPoints fixed_points(const std::vector<gf2::GF2Matrix>& actions);

// Invariants of the full degree quotient under Sigma_s or GL_s.
FixedPoints invariants(const QuotientBasis& q, Group g);

// Invariants of the weight subquotient QP_s(w).
FixedPoints invariants_on_weight(const QuotientBasis& q, Group g, const WeightVector& w);

// Class of f in the weight subquotient: full reduction, then the coordinates
// of weight-w admissible monomials.
gf2::BitVec subquotient_coords(const QuotientBasis& q, const WeightVector& w,
                               const Polynomial& f);

}  // namespace hitcalc
