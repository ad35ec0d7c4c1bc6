#include "hitcalc/invariants.hpp"

namespace hitcalc {

Polynomial tau(int i, const Monomial& m)
{
    int s = m.vars();
    if (i < 1 || i > s)
        throw domain_error("tau index out of range");
    if (i < s) {
        std::vector<uint32_t> e(s);
        for (int j = 0; j < s; ++j)
            e[j] = m.exp(j);
        std::swap(e[i - 1], e[i]);
        return Polynomial::monomial(Monomial(s, e));
    }
    // tau_s: x_1 -> x_1 + x_2; (x_1+x_2)^{a_1} = sum_{k subset a_1} x_1^k x_2^{a_1-k}
    if (s < 2)
        throw domain_error("the transvection needs at least two variables");
    uint32_t a1 = m.exp(0);
    std::vector<Monomial> terms;
    for (uint32_t k = a1;; k = (k - 1) & a1) {
        std::vector<uint32_t> e(s);
        for (int j = 0; j < s; ++j)
            e[j] = m.exp(j);
        e[0] = k;
        e[1] = m.exp(1) + (a1 - k);
        terms.push_back(Monomial(s, e));
        if (k == 0)
            break;
    }
    return Polynomial(s, std::move(terms));
}

Polynomial tau(int i, const Polynomial& f)
{
    Polynomial out(f.vars());
    for (const Monomial& m : f.terms())
        out = out + tau(i, m);
    return out;
}

gf2::GF2Matrix action_matrix(int gen, const QuotientBasis& q)
{
    int n = q.dim();
    std::vector<gf2::BitVec> cols;
    cols.reserve(n);
    for (const Monomial& m : q.admissible())
        cols.push_back(q.reduce_coords(tau(gen, m)));
    gf2::GF2Matrix mat(n);
    for (int r = 0; r < n; ++r) {
        gf2::BitVec row(n);
        for (int c = 0; c < n; ++c)
            if (cols[c].get(r))
                row.set(c);
        mat.add_row(std::move(row));
    }
    return mat;
}

gf2::GF2Matrix action_matrix_on_weight(int gen, const QuotientBasis& q,
                                       const WeightVector& w)
{
    std::vector<int> pos = q.admissible_positions_of_weight(w);
    int n = int(pos.size());
    std::vector<int> sub(q.dim(), -1);
    for (int k = 0; k < n; ++k)
        sub[pos[k]] = k;
    gf2::GF2Matrix mat(n);
    std::vector<gf2::BitVec> cols;
    cols.reserve(n);
    for (int k = 0; k < n; ++k)
        cols.push_back(q.reduce_coords(tau(gen, q.admissible()[pos[k]])));
    for (int r = 0; r < n; ++r) {
        gf2::BitVec row(n);
        for (int c = 0; c < n; ++c)
            if (cols[c].get(pos[r]))
                row.set(c);
        mat.add_row(std::move(row));
    }
    return mat;
}

FixedPoints fixed_points(const std::vector<gf2::GF2Matrix>& actions)
{
    if (actions.empty())
        throw domain_error("fixed_points needs at least one action");
    int n = actions.front().ncols;
    gf2::GF2Matrix stacked(n);
    for (const gf2::GF2Matrix& m : actions) {
        if (m.ncols != n || int(m.rows.size()) != n)
            throw domain_error("action matrices must be square of equal size");
        for (int r = 0; r < n; ++r) {
            gf2::BitVec row = m.rows[r];
            row.flip(r);  // M - id
            if (row.any())
                stacked.add_row(std::move(row));
        }
    }
    FixedPoints fp;
    if (stacked.rows.empty()) {
        // identity action: everything is fixed
        for (int c = 0; c < n; ++c) {
            gf2::BitVec v(n);
            v.set(c);
            fp.basis.push_back(std::move(v));
        }
    } else {
        fp.basis = gf2::kernel(stacked);
    }
    fp.dim = int(fp.basis.size());
    return fp;
}

namespace {

std::vector<gf2::GF2Matrix> group_actions(const QuotientBasis& q, Group g,
                                          const WeightVector* w)
{
    int s = q.space().vars();
    std::vector<int> gens;
    for (int i = 1; i < s; ++i)
        gens.push_back(i);
    if (g == Group::GL && s >= 2)
        gens.push_back(s);
    std::vector<gf2::GF2Matrix> actions;
    if (gens.empty()) {
        // s = 1: both groups are trivial; act by the identity
        int n = w ? int(q.admissible_positions_of_weight(*w).size()) : q.dim();
        gf2::GF2Matrix id(n);
        for (int r = 0; r < n; ++r) {
            gf2::BitVec row(n);
            row.set(r);
            id.add_row(std::move(row));
        }
        actions.push_back(std::move(id));
        return actions;
    }
    for (int gen : gens) {
        if (w)
            actions.push_back(action_matrix_on_weight(gen, q, *w));
        else
            actions.push_back(action_matrix(gen, q));
    }
    return actions;
}

}  // namespace

FixedPoints invariants(const QuotientBasis& q, Group g)
{
    return fixed_points(group_actions(q, g, nullptr));
}

FixedPoints invariants_on_weight(const QuotientBasis& q, Group g, const WeightVector& w)
{
    return fixed_points(group_actions(q, g, &w));
}

gf2::BitVec subquotient_coords(const QuotientBasis& q, const WeightVector& w,
                               const Polynomial& f)
{
    gf2::BitVec full = q.reduce_coords(f);
    std::vector<int> pos = q.admissible_positions_of_weight(w);
    gf2::BitVec out(int(pos.size()));
    for (size_t k = 0; k < pos.size(); ++k)
        if (full.get(pos[k]))
            out.set(int(k));
    return out;
}

}  // namespace hitcalc
