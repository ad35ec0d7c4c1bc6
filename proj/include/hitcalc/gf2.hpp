#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hitcalc::gf2 {

/// Fixed-width vector over F_2, packed 64 bits per word.
class BitVec {
public:
    BitVec() : nbits_(0) {}
    explicit BitVec(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void clear(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    bool any() const
    {
        for (uint64_t x : w_)
            if (x)
                return true;
        return false;
    }

    int popcount() const
    {
        int c = 0;
        for (uint64_t x : w_)
            c += __builtin_popcountll(x);
        return c;
    }

    // Lowest set bit index, or -1.
    int lowest() const { return lowest_from(0); }

    // Lowest set bit index >= i, or -1.
    int lowest_from(int i) const
    {
        if (i >= nbits_)
            return -1;
        size_t k = size_t(i) >> 6;
        uint64_t first = w_[k] & (~uint64_t(0) << (i & 63));
        if (first)
            return int(k * 64) + __builtin_ctzll(first);
        for (++k; k < w_.size(); ++k)
            if (w_[k])
                return int(k * 64) + __builtin_ctzll(w_[k]);
        return -1;
    }

    void operator^=(const BitVec& o)
    {
        for (size_t k = 0; k < w_.size(); ++k)
            w_[k] ^= o.w_[k];
    }

    // XOR restricted to words >= word_start; valid when o is zero below.
    void xor_from(const BitVec& o, int word_start)
    {
        for (size_t k = size_t(word_start); k < w_.size(); ++k)
            w_[k] ^= o.w_[k];
    }

    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    std::vector<int> ones() const
    {
        std::vector<int> out;
        for (size_t k = 0; k < w_.size(); ++k) {
            uint64_t x = w_[k];
            while (x) {
                out.push_back(int(k * 64) + __builtin_ctzll(x));
                x &= x - 1;
            }
        }
        return out;
    }

private:
    int nbits_;
    std::vector<uint64_t> w_;
};

/// Row-major matrix over F_2. Row space semantics; the column meaning is
/// owned by the caller.
struct GF2Matrix {
    int ncols = 0;
    std::vector<BitVec> rows;

    GF2Matrix() = default;
    explicit GF2Matrix(int ncols) : ncols(ncols) {}

    void add_row(BitVec v)
    {
        if (v.size() != ncols)
            throw std::invalid_argument("row width mismatch");
        rows.push_back(std::move(v));
    }

    // In-place reduced row echelon form; returns the rank. Pivot of each row
    // is its lowest set bit; pivot columns strictly increase and are cleared
    // from every other row.
    int reduce();

    int rank() const;  // on a copy
};

// Basis of { v : M v = 0 } treating each row as a linear functional.
std::vector<BitVec> kernel(const GF2Matrix& m);

// Basis of the intersection of the two row spaces (Zassenhaus).
std::vector<BitVec> intersect(const GF2Matrix& a, const GF2Matrix& b);

struct ReduceResult {
    BitVec residual;
    BitVec combination;  // over generator insertion indices; empty if untracked
};

/// Streaming row space: keeps only an echelon basis (pivot = lowest set bit),
/// optionally with each echelon row expressed as a combination of the
/// inserted generators.
class IncrementalSpan {
public:
    // combo_capacity bounds the number of inserts when tracking combinations.
    explicit IncrementalSpan(int ncols, bool track_combinations = false,
                             int combo_capacity = 0);

    int ncols() const { return ncols_; }
    int rank() const { return int(rows_.size()); }
    int inserted() const { return n_inserted_; }

    // Returns the pivot column claimed by v, or -1 if v was dependent.
    int insert(const BitVec& v);

    // v + residual lies in the span; the residual has no pivot bits.
    ReduceResult reduce(const BitVec& v) const;

    bool member(const BitVec& v) const;
    // Membership with certificate over inserted generators (requires tracking).
    std::optional<BitVec> member_combination(const BitVec& v) const;

    bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
    const std::vector<BitVec>& echelon_rows() const { return rows_; }

private:
    int ncols_;
    bool track_;
    int capacity_;
    int n_inserted_ = 0;
    std::vector<BitVec> rows_;
    std::vector<BitVec> combos_;
    std::vector<int> pivot_row_;  // column -> row index or -1
};

}  // namespace hitcalc::gf2
