#pragma once

#include "hitcalc/config.hpp"
#include "hitcalc/gf2.hpp"
#include "hitcalc/polynomial.hpp"

#include <map>
#include <memory>
#include <optional>
#include <unordered_map>

namespace hitcalc {

/// All monomials of one degree, indexed in increasing weight order.
class DegreeSpace {
public:
    DegreeSpace(int s, long long d, uint64_t limit);

    int vars() const { return s_; }
    long long degree() const { return d_; }
    int size() const { return int(monos_.size()); }
    const std::vector<Monomial>& monomials() const { return monos_; }
    const Monomial& monomial(int rank) const { return monos_[rank]; }

    int rank_of(const Monomial& m) const;  // throws on a foreign monomial

    struct Block {
        WeightVector weight;
        int lo, hi;  // rank range [lo, hi)
    };
    const std::vector<Block>& blocks() const { return blocks_; }
    int block_of(int rank) const { return block_of_[rank]; }

private:
    int s_;
    long long d_;
    std::vector<Monomial> monos_;
    std::unordered_map<Monomial, int, MonomialHash> index_;
    std::vector<Block> blocks_;
    std::vector<int> block_of_;
};

/// The admissible-monomial basis of (QP_s)_d together with the reduction data
/// expressing any class in admissible coordinates.
///
/// Internally: one echelon of the hit subspace, with columns in decreasing
/// weight order so that the lowest-bit pivot of a row is its largest
/// monomial. A monomial is admissible exactly when its column carries no
/// pivot; reducing a class leaves a vector supported on admissible columns,
/// all not larger than the input terms.
class QuotientBasis {
public:
    static QuotientBasis build(int s, long long d, const RunConfig& cfg = {});

    const DegreeSpace& space() const { return *space_; }
    Strategy strategy() const { return strategy_; }

    int dim() const { return int(admissible_.size()); }
    const std::vector<Monomial>& admissible() const { return admissible_; }
    const std::vector<int>& admissible_ranks() const { return admissible_ranks_; }

    // Greedy admissibility: m is not congruent to a sum of strictly smaller
    // monomials modulo hit elements.
    bool is_admissible(const Monomial& m) const;

    bool is_hit(const Polynomial& f) const;
    // Number of hit generators in a certificate (needs track_certificates).
    std::optional<std::vector<HitGenerator>> hit_certificate(const Polynomial& f) const;

    // Coordinates of [f] over the admissible basis.
    gf2::BitVec reduce_coords(const Polynomial& f) const;
    gf2::BitVec reduce_coords(const Monomial& m) const;

    // dim QP_s(w) = number of admissible monomials of weight exactly w.
    int weight_dim(const WeightVector& w) const;
    std::vector<Monomial> admissible_of_weight(const WeightVector& w) const;
    // Ascending list of (weight, count) over the admissible basis.
    std::vector<std::pair<WeightVector, int>> by_weight() const;
    // Positions (indices into admissible()) of the weight-w block.
    std::vector<int> admissible_positions_of_weight(const WeightVector& w) const;

    int p0_count() const;  // admissible monomials with some zero exponent
    int pplus_count() const;

    size_t generator_count() const { return generators_used_; }
    size_t pruned_count() const { return pruned_; }

private:
    QuotientBasis() = default;

    gf2::BitVec row_of(const Polynomial& f) const;

    std::shared_ptr<DegreeSpace> space_;
    Strategy strategy_ = Strategy::direct;
    std::unique_ptr<gf2::IncrementalSpan> hit_;
    std::vector<int> col_of_rank_;  // -1 when pruned by the Singer prefilter
    std::vector<int> rank_of_col_;
    std::vector<Monomial> admissible_;
    std::vector<int> admissible_ranks_;
    std::vector<int> adm_pos_of_rank_;  // -1 when not admissible
    std::vector<HitGenerator> generator_list_;  // kept only when tracking
    size_t generators_used_ = 0;
    size_t pruned_ = 0;
};

enum class SingerVerdict { hit, unknown };

// Singer's criterion: weight below the minimal spike's weight means hit.
// Never claims non-hit. Requires mu(deg m) <= s.
SingerVerdict singer_prefilter(const Monomial& m);

/// Strict inadmissibility: m equals a sum of strictly
/// smaller monomials plus sum_{1<=j<=2^r-1} Sq^j(h_j), r the top nonzero
/// weight index of m. Caches one span per (degree, r).
class StrictTester {
public:
    StrictTester(int s, long long d, const RunConfig& cfg = {});

    bool strictly_inadmissible(const Monomial& m);

private:
    gf2::IncrementalSpan& span_for(int r);

    int s_;
    long long d_;
    RunConfig cfg_;
    std::shared_ptr<DegreeSpace> space_;
    std::map<int, std::unique_ptr<gf2::IncrementalSpan>> spans_;
};

bool is_strictly_inadmissible(const Monomial& m, const RunConfig& cfg = {});

struct KamekoResult {
    long long source_degree = 0, target_degree = 0;
    int source_dim = 0, target_dim = 0;
    int kernel_dim = 0;
    bool surjective = false;
    std::vector<gf2::BitVec> kernel_basis;  // over source admissible coordinates
};

// Kernel of Kameko's homomorphism (QP_s)_d -> (QP_s)_{(d-s)/2} in admissible
// coordinates. Requires d ≡ s (mod 2) and d >= s.
KamekoResult kameko_kernel(const QuotientBasis& source, const QuotientBasis& target);
KamekoResult kameko_kernel(int s, long long d, const RunConfig& cfg = {});

// Independent oracle for dim QP_s(w): rank computation of
// (hit + span{monomials of weight < w}) inside P_s(w), columns permuted so
// the out-of-P_s(w) part is eliminated first.
int weight_quotient_dim_direct(int s, const WeightVector& w, const RunConfig& cfg = {});

}  // namespace hitcalc
