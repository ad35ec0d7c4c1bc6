#include "hitcalc/gf2.hpp"

#include <algorithm>

namespace hitcalc::gf2 {

int GF2Matrix::reduce()
{
    std::vector<int> pivot_row(ncols, -1);
    int r = 0;  // rows [0, r) form the echelon
    for (size_t i = 0; i < rows.size(); ++i) {
        BitVec v = std::move(rows[i]);
        // eliminate every pivot bit; an echelon row is zero below its pivot,
        // so the scan position never moves backwards
        for (int p = v.lowest(); p >= 0; p = v.lowest_from(p + 1))
            if (pivot_row[p] >= 0)
                v.xor_from(rows[pivot_row[p]], p >> 6);
        int p = v.lowest();
        if (p < 0)
            continue;
        // clear column p from the existing echelon
        for (int j = 0; j < r; ++j)
            if (rows[j].get(p))
                rows[j] ^= v;
        rows[r] = std::move(v);
        pivot_row[p] = r;
        ++r;
    }
    rows.resize(r);
    std::sort(rows.begin(), rows.end(),
              [](const BitVec& a, const BitVec& b) { return a.lowest() < b.lowest(); });
    return r;
}

int GF2Matrix::rank() const
{
    GF2Matrix copy = *this;
    return copy.reduce();
}

std::vector<BitVec> kernel(const GF2Matrix& m)
{
    GF2Matrix rref = m;
    rref.reduce();
    std::vector<int> pivot_of_col(m.ncols, -1);
    for (size_t j = 0; j < rref.rows.size(); ++j)
        pivot_of_col[rref.rows[j].lowest()] = int(j);
    std::vector<BitVec> basis;
    for (int c = 0; c < m.ncols; ++c) {
        if (pivot_of_col[c] >= 0)
            continue;
        BitVec v(m.ncols);
        v.set(c);
        for (size_t j = 0; j < rref.rows.size(); ++j)
            if (rref.rows[j].get(c))
                v.set(rref.rows[j].lowest());
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BitVec> intersect(const GF2Matrix& a, const GF2Matrix& b)
{
    if (a.ncols != b.ncols)
        throw std::invalid_argument("dimension mismatch in intersect");
    int n = a.ncols;
    // Zassenhaus: rows [v|v] for v in A, [w|0] for w in B; echelon rows with
    // zero left half carry a basis of the intersection in the right half.
    GF2Matrix z(2 * n);
    for (const BitVec& v : a.rows) {
        BitVec row(2 * n);
        for (int i : v.ones()) {
            row.set(i);
            row.set(n + i);
        }
        z.add_row(std::move(row));
    }
    for (const BitVec& w : b.rows) {
        BitVec row(2 * n);
        for (int i : w.ones())
            row.set(i);
        z.add_row(std::move(row));
    }
    z.reduce();
    std::vector<BitVec> basis;
    for (const BitVec& row : z.rows) {
        if (row.lowest() < n)
            continue;
        BitVec v(n);
        for (int i : row.ones())
            v.set(i - n);
        basis.push_back(std::move(v));
    }
    return basis;
}

IncrementalSpan::IncrementalSpan(int ncols, bool track_combinations, int combo_capacity)
    : ncols_(ncols),
      track_(track_combinations),
      capacity_(combo_capacity),
      pivot_row_(ncols, -1)
{
}

int IncrementalSpan::insert(const BitVec& v)
{
    if (v.size() != ncols_)
        throw std::invalid_argument("dimension mismatch in insert");
    if (track_ && n_inserted_ >= capacity_)
        throw std::length_error("combination capacity exceeded");
    int idx = n_inserted_++;
    BitVec x = v;
    BitVec combo;
    if (track_) {
        combo = BitVec(capacity_);
        combo.set(idx);
    }
    // eliminate pivot bits in increasing column order; an echelon row is zero
    // below its pivot, so bits never reappear behind the scan position
    for (int p = x.lowest(); p >= 0; p = x.lowest_from(p + 1)) {
        int j = pivot_row_[p];
        if (j < 0) {
            pivot_row_[p] = int(rows_.size());
            rows_.push_back(std::move(x));
            if (track_)
                combos_.push_back(std::move(combo));
            return p;
        }
        x.xor_from(rows_[j], p >> 6);
        if (track_)
            combo ^= combos_[j];
    }
    return -1;
}

ReduceResult IncrementalSpan::reduce(const BitVec& v) const
{
    if (v.size() != ncols_)
        throw std::invalid_argument("dimension mismatch in reduce");
    ReduceResult r;
    r.residual = v;
    if (track_)
        r.combination = BitVec(capacity_);
    int p = r.residual.lowest();
    while (p >= 0) {
        int j = pivot_row_[p];
        if (j >= 0) {
            r.residual.xor_from(rows_[j], p >> 6);
            if (track_)
                r.combination ^= combos_[j];
        }
        p = r.residual.lowest_from(p + 1);
    }
    return r;
}

bool IncrementalSpan::member(const BitVec& v) const
{
    return !reduce(v).residual.any();
}

std::optional<BitVec> IncrementalSpan::member_combination(const BitVec& v) const
{
    if (!track_)
        throw std::logic_error("span was built without combination tracking");
    ReduceResult r = reduce(v);
    if (r.residual.any())
        return std::nullopt;
    return r.combination;
}

}  // namespace hitcalc::gf2
