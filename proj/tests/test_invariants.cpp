#include "doctest.h"

#include "hitcalc/invariants.hpp"

#include <random>

using namespace hitcalc;

namespace {

Monomial mono(std::vector<uint32_t> e)
{
    return Monomial(int(e.size()), e);
}

// row_i(AB) = sum of rows of B at the set bits of row_i(A)
gf2::GF2Matrix matmul(const gf2::GF2Matrix& a, const gf2::GF2Matrix& b)
{
    gf2::GF2Matrix out(b.ncols);
    for (const gf2::BitVec& arow : a.rows) {
        gf2::BitVec row(b.ncols);
        for (int k : arow.ones())
            row ^= b.rows[k];
        out.add_row(std::move(row));
    }
    return out;
}

bool is_identity(const gf2::GF2Matrix& m)
{
    for (size_t i = 0; i < m.rows.size(); ++i) {
        gf2::BitVec e(m.ncols);
        e.set(int(i));
        if (m.rows[i] != e)
            return false;
    }
    return int(m.rows.size()) == m.ncols;
}

}  // namespace

TEST_CASE("variable substitutions")
{
    CHECK(tau(1, Polynomial::monomial(mono({1, 0, 0, 0, 0}))) ==
          Polynomial::monomial(mono({0, 1, 0, 0, 0})));
    // Frobenius: tau_5(x1^2) = x1^2 + x2^2
    CHECK(tau(5, Polynomial::monomial(mono({2, 0, 0, 0, 0}))) ==
          Polynomial(5, {mono({2, 0, 0, 0, 0}), mono({0, 2, 0, 0, 0})}));
    CHECK(tau(5, Polynomial::monomial(mono({1, 1, 0, 0, 0}))) ==
          Polynomial(5, {mono({1, 1, 0, 0, 0}), mono({0, 2, 0, 0, 0})}));

    // degree preserved; the GL action commutes with every Steenrod square
    std::mt19937 rng(83);
    for (int it = 0; it < 500; ++it) {
        int s = 2 + int(rng() % 4);
        std::vector<uint32_t> e(s);
        for (auto& x : e)
            x = rng() % 6;
        Polynomial f = Polynomial::monomial(Monomial(s, e));
        int i = 1 + int(rng() % s);
        int k = int(rng() % 7);
        Polynomial tf = tau(i, f);
        if (!tf.zero())
            CHECK(tf.degree() == f.degree());
        CHECK(tau(i, sq(k, f)) == sq(k, tau(i, f)));
    }
}

TEST_CASE("transpositions act as involutions on the quotient")
{
    QuotientBasis q = QuotientBasis::build(4, 9);
    for (int i = 1; i <= 3; ++i) {
        gf2::GF2Matrix m = action_matrix(i, q);
        CHECK(is_identity(matmul(m, m)));
    }
    // the transvection squares to the identity as well (char 2)
    gf2::GF2Matrix t = action_matrix(4, q);
    CHECK(is_identity(matmul(t, t)));
}

TEST_CASE("everything is fixed in one variable")
{
    QuotientBasis q = QuotientBasis::build(1, 1);
    CHECK(q.dim() == 1);
    CHECK(invariants(q, Group::Sigma).dim == 1);
    CHECK(invariants(q, Group::GL).dim == 1);
}

TEST_CASE("GL invariants vanish in the degrees of the main theorem")
{
    QuotientBasis q5 = QuotientBasis::build(5, 5);
    CHECK(invariants(q5, Group::GL).dim == 0);

    QuotientBasis q13 = QuotientBasis::build(5, 13);
    CHECK(invariants(q13, Group::GL).dim == 0);

    // the Kameko-target degree as well
    QuotientBasis q4 = QuotientBasis::build(5, 4);
    CHECK(invariants(q4, Group::GL).dim == 0);
}

TEST_CASE("symmetric invariants of the weight subquotient at t = 2")
{
    QuotientBasis q = QuotientBasis::build(5, 13);
    WeightVector w({3, 3, 1});
    FixedPoints sigma = invariants_on_weight(q, Group::Sigma, w);
    CHECK(sigma.dim == 3);
    FixedPoints gl = invariants_on_weight(q, Group::GL, w);
    CHECK(gl.dim == 0);
}

TEST_CASE("GL invariants embed into Sigma invariants")
{
    for (auto [s, d] : std::vector<std::pair<int, long long>>{
             {3, 7}, {4, 9}, {5, 5}, {5, 13}}) {
        QuotientBasis q = QuotientBasis::build(s, d);
        FixedPoints sig = invariants(q, Group::Sigma);
        FixedPoints gl = invariants(q, Group::GL);
        CHECK(gl.dim <= sig.dim);
        // each GL-fixed vector is Sigma-fixed
        gf2::GF2Matrix sig_space(q.dim());
        for (const auto& v : sig.basis)
            sig_space.add_row(v);
        gf2::IncrementalSpan span(q.dim());
        for (const auto& v : sig_space.rows)
            span.insert(v);
        for (const auto& v : gl.basis)
            CHECK(span.member(v));
    }
}

TEST_CASE("full-degree GL invariants are bounded by the weight-wise sum")
{
    for (auto [s, d] : std::vector<std::pair<int, long long>>{{4, 9}, {5, 13}}) {
        QuotientBasis q = QuotientBasis::build(s, d);
        int full = invariants(q, Group::GL).dim;
        int sum = 0;
        for (const auto& [w, count] : q.by_weight())
            sum += invariants_on_weight(q, Group::GL, w).dim;
        CHECK(full <= sum);
    }
}

TEST_CASE("the quotient action commutes with Kameko's homomorphism")
{
    QuotientBasis src = QuotientBasis::build(5, 13);
    QuotientBasis tgt = QuotientBasis::build(5, 4);

    // Kameko matrix in admissible coordinates
    gf2::GF2Matrix kam(src.dim());
    {
        std::vector<gf2::BitVec> cols;
        for (const Monomial& m : src.admissible())
            cols.push_back(tgt.reduce_coords(kameko_psi(m)));
        for (int j = 0; j < tgt.dim(); ++j) {
            gf2::BitVec row(src.dim());
            for (int i = 0; i < src.dim(); ++i)
                if (cols[i].get(j))
                    row.set(i);
            kam.add_row(std::move(row));
        }
    }
    for (int gen = 1; gen <= 5; ++gen) {
        gf2::GF2Matrix lhs = matmul(kam, action_matrix(gen, src));
        gf2::GF2Matrix rhs = matmul(action_matrix(gen, tgt), kam);
        CHECK(lhs.rows == rhs.rows);
    }
}
