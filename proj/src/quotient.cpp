#include "hitcalc/quotient.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace hitcalc {

Strategy parse_strategy(const std::string& name)
{
    if (name == "direct")
        return Strategy::direct;
    if (name == "recursive")
        return Strategy::recursive;
    throw domain_error("unknown strategy: " + name);
}

DegreeSpace::DegreeSpace(int s, long long d, uint64_t limit)
    : s_(s), d_(d), monos_(enumerate_monomials(s, d, limit))
{
    index_.reserve(monos_.size() * 2);
    for (size_t i = 0; i < monos_.size(); ++i)
        index_.emplace(monos_[i], int(i));
    block_of_.resize(monos_.size());
    for (size_t i = 0; i < monos_.size(); ++i) {
        WeightVector w = monos_[i].weight();
        if (blocks_.empty() || blocks_.back().weight != w)
            blocks_.push_back({w, int(i), int(i)});
        blocks_.back().hi = int(i) + 1;
        block_of_[i] = int(blocks_.size()) - 1;
    }
}

int DegreeSpace::rank_of(const Monomial& m) const
{
    auto it = index_.find(m);
    if (it == index_.end())
        throw domain_error("monomial not in this degree space");
    return it->second;
}

namespace {

// Cartan expansion of Sq^k(m) without materializing a Polynomial.
template <class Fn>
void for_each_sq_term(int k, const Monomial& m, Fn&& fn)
{
    int s = m.vars();
    std::array<uint32_t, kMaxVars> img{};
    auto rec = [&](auto&& self, int i, int rest) -> void {
        if (i == s) {
            if (rest == 0)
                fn(Monomial(s, img));
            return;
        }
        uint32_t n = m.exp(i);
        int top = std::min<long long>(rest, n);
        for (int ki = 0; ki <= top; ++ki) {
            if (binom_odd(n, uint64_t(ki))) {
                img[i] = n + uint32_t(ki);
                self(self, i + 1, rest - ki);
            }
        }
    };
    if (k >= 0)
        rec(rec, 0, k);
}

}  // namespace

QuotientBasis QuotientBasis::build(int s, long long d, const RunConfig& cfg)
{
    QuotientBasis q;
    q.strategy_ = cfg.strategy;
    q.space_ = std::make_shared<DegreeSpace>(s, d, cfg.max_space);
    const DegreeSpace& sp = *q.space_;
    int n = sp.size();

    // Singer prefilter (recursive strategy): monomials below the minimal
    // spike's weight are hit, their columns can be dropped. Wood: if
    // mu(d) > s the whole degree is hit.
    std::vector<char> keep(n, 1);
    if (cfg.strategy == Strategy::recursive && d > 0) {
        if (mu(d) > s) {
            std::fill(keep.begin(), keep.end(), 0);
        } else {
            WeightVector wmin = minimal_spike(d, s).weight();
            for (const auto& blk : sp.blocks())
                if (blk.weight < wmin)
                    for (int i = blk.lo; i < blk.hi; ++i)
                        keep[i] = 0;
        }
    }

    q.col_of_rank_.assign(n, -1);
    int npart = 0;
    for (int i = 0; i < n; ++i)
        if (keep[i])
            ++npart;
    q.pruned_ = size_t(n - npart);
    q.rank_of_col_.assign(npart, -1);
    // decreasing weight order: the lowest-bit pivot is the largest
    // monomial of a row
    int next = npart - 1;
    for (int i = 0; i < n; ++i) {
        if (!keep[i]) {
            continue;
        }
        q.col_of_rank_[i] = next;
        q.rank_of_col_[next] = i;
        --next;
    }

    std::vector<HitGenerator> gens;
    if (d >= 1)
        gens = hit_generators(s, d, cfg.exhaustive_generators, cfg.max_space);
    q.generators_used_ = gens.size();

    q.hit_ = std::make_unique<gf2::IncrementalSpan>(npart, cfg.track_certificates,
                                                    int(gens.size()));
    if (cfg.track_certificates)
        q.generator_list_ = gens;

    auto make_row = [&](const HitGenerator& g) {
        gf2::BitVec row(npart);
        for_each_sq_term(g.k, g.m, [&](const Monomial& t) {
            int c = q.col_of_rank_[sp.rank_of(t)];
            if (c >= 0)
                row.flip(c);
        });
        return row;
    };

    int nthreads = std::max(1, cfg.threads);
    const size_t chunk = 4096;
    std::vector<gf2::BitVec> rows;
    for (size_t base = 0; base < gens.size(); base += chunk) {
        size_t count = std::min(chunk, gens.size() - base);
        rows.assign(count, gf2::BitVec());
        if (nthreads > 1 && count > 256) {
            std::vector<std::thread> pool;
            std::atomic<size_t> cursor{0};
            for (int t = 0; t < nthreads; ++t)
                pool.emplace_back([&]() {
                    for (size_t i = cursor.fetch_add(16); i < count;
                         i = cursor.fetch_add(16))
                        for (size_t j = i; j < std::min(i + 16, count); ++j)
                            rows[j] = make_row(gens[base + j]);
                });
            for (auto& th : pool)
                th.join();
        } else {
            for (size_t j = 0; j < count; ++j)
                rows[j] = make_row(gens[base + j]);
        }
        for (size_t j = 0; j < count; ++j)
            if (rows[j].any())
                q.hit_->insert(rows[j]);
            else if (cfg.track_certificates)
                q.hit_->insert(rows[j]);  // keep generator indexing aligned
    }

    q.adm_pos_of_rank_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int c = q.col_of_rank_[i];
        if (c < 0 || q.hit_->is_pivot(c))
            continue;
        q.adm_pos_of_rank_[i] = int(q.admissible_.size());
        q.admissible_.push_back(sp.monomial(i));
        q.admissible_ranks_.push_back(i);
    }
    return q;
}

gf2::BitVec QuotientBasis::row_of(const Polynomial& f) const
{
    if (f.vars() != space_->vars())
        throw domain_error("variable count mismatch");
    if (!f.zero() && f.degree() != space_->degree())
        throw domain_error("degree mismatch");
    gf2::BitVec row(int(rank_of_col_.size()));
    for (const Monomial& t : f.terms()) {
        int c = col_of_rank_[space_->rank_of(t)];
        if (c >= 0)
            row.set(c);
    }
    return row;
}

bool QuotientBasis::is_admissible(const Monomial& m) const
{
    int c = col_of_rank_[space_->rank_of(m)];
    return c >= 0 && !hit_->is_pivot(c);
}

bool QuotientBasis::is_hit(const Polynomial& f) const
{
    return !reduce_coords(f).any();
}

std::optional<std::vector<HitGenerator>> QuotientBasis::hit_certificate(
    const Polynomial& f) const
{
    if (generator_list_.empty() && generators_used_ > 0)
        throw domain_error("quotient was built without certificate tracking");
    auto combo = hit_->member_combination(row_of(f));
    if (!combo)
        return std::nullopt;
    std::vector<HitGenerator> used;
    for (int i : combo->ones())
        used.push_back(generator_list_[i]);
    return used;
}

gf2::BitVec QuotientBasis::reduce_coords(const Polynomial& f) const
{
    gf2::BitVec residual = hit_->reduce(row_of(f)).residual;
    gf2::BitVec coords(dim());
    for (int c : residual.ones()) {
        int pos = adm_pos_of_rank_[rank_of_col_[c]];
        // a residual has no pivot bits, so every bit sits on an admissible column
        coords.set(pos);
    }
    return coords;
}

gf2::BitVec QuotientBasis::reduce_coords(const Monomial& m) const
{
    return reduce_coords(Polynomial::monomial(m));
}

int QuotientBasis::weight_dim(const WeightVector& w) const
{
    int count = 0;
    for (const Monomial& m : admissible_)
        if (m.weight() == w)
            ++count;
    return count;
}

std::vector<Monomial> QuotientBasis::admissible_of_weight(const WeightVector& w) const
{
    std::vector<Monomial> out;
    for (const Monomial& m : admissible_)
        if (m.weight() == w)
            out.push_back(m);
    return out;
}

std::vector<int> QuotientBasis::admissible_positions_of_weight(const WeightVector& w) const
{
    std::vector<int> out;
    for (size_t i = 0; i < admissible_.size(); ++i)
        if (admissible_[i].weight() == w)
            out.push_back(int(i));
    return out;
}

std::vector<std::pair<WeightVector, int>> QuotientBasis::by_weight() const
{
    std::vector<std::pair<WeightVector, int>> out;
    for (const Monomial& m : admissible_) {
        WeightVector w = m.weight();
        if (out.empty() || !(out.back().first == w))
            out.push_back({w, 0});
        ++out.back().second;
    }
    return out;
}

int QuotientBasis::p0_count() const
{
    int c = 0;
    for (const Monomial& m : admissible_)
        if (!m.all_positive())
            ++c;
    return c;
}

int QuotientBasis::pplus_count() const
{
    return dim() - p0_count();
}

SingerVerdict singer_prefilter(const Monomial& m)
{
    long long d = m.degree();
    int s = m.vars();
    if (mu(d) > s)
        throw domain_error("mu(deg) exceeds s; Wood's theorem applies instead");
    if (m.weight() < minimal_spike(d, s).weight())
        return SingerVerdict::hit;
    return SingerVerdict::unknown;
}

StrictTester::StrictTester(int s, long long d, const RunConfig& cfg)
    : s_(s), d_(d), cfg_(cfg), space_(std::make_shared<DegreeSpace>(s, d, cfg.max_space))
{
}

gf2::IncrementalSpan& StrictTester::span_for(int r)
{
    auto it = spans_.find(r);
    if (it != spans_.end())
        return *it->second;
    int n = space_->size();
    auto span = std::make_unique<gf2::IncrementalSpan>(n);
    // span of all Sq^j(h), 1 <= j <= 2^r - 1, h a monomial of degree d - j
    for (int j = 1; j <= (1 << r) - 1 && j <= d_; ++j) {
        for (const Monomial& h : enumerate_monomials(s_, d_ - j, cfg_.max_space)) {
            gf2::BitVec row(n);
            for_each_sq_term(j, h, [&](const Monomial& t) {
                row.flip(n - 1 - space_->rank_of(t));
            });
            if (row.any())
                span->insert(row);
        }
    }
    return *spans_.emplace(r, std::move(span)).first->second;
}

bool StrictTester::strictly_inadmissible(const Monomial& m)
{
    if (m.vars() != s_ || m.degree() != d_)
        throw domain_error("monomial does not live in this tester's degree");
    if (m.degree() == 0)
        return false;
    int r = m.weight().length();  // top nonzero weight index
    gf2::IncrementalSpan& span = span_for(r);
    int n = space_->size();
    gf2::BitVec v(n);
    int col = n - 1 - space_->rank_of(m);
    v.set(col);
    gf2::BitVec residual = span.reduce(v).residual;
    // m = (smaller monomials) + Sq-image  iff  the residual drops below m
    return !residual.get(col);
}

bool is_strictly_inadmissible(const Monomial& m, const RunConfig& cfg)
{
    StrictTester tester(m.vars(), m.degree(), cfg);
    return tester.strictly_inadmissible(m);
}

KamekoResult kameko_kernel(const QuotientBasis& source, const QuotientBasis& target)
{
    int s = source.space().vars();
    long long d = source.space().degree();
    if (target.space().degree() * 2 + s != d)
        throw domain_error("target degree must be (d - s) / 2");
    KamekoResult res;
    res.source_degree = d;
    res.target_degree = target.space().degree();
    res.source_dim = source.dim();
    res.target_dim = target.dim();

    // rows of the Kameko matrix over source admissible coordinates
    gf2::GF2Matrix mat(res.source_dim);
    std::vector<gf2::BitVec> cols;
    cols.reserve(res.source_dim);
    for (const Monomial& m : source.admissible())
        cols.push_back(target.reduce_coords(kameko_psi(m)));
    for (int j = 0; j < res.target_dim; ++j) {
        gf2::BitVec row(res.source_dim);
        for (int i = 0; i < res.source_dim; ++i)
            if (cols[i].get(j))
                row.set(i);
        mat.add_row(std::move(row));
    }
    int rank = mat.rank();
    res.surjective = (rank == res.target_dim);
    res.kernel_basis = gf2::kernel(mat);
    res.kernel_dim = int(res.kernel_basis.size());
    return res;
}

KamekoResult kameko_kernel(int s, long long d, const RunConfig& cfg)
{
    if (d < s || (d - s) % 2 != 0)
        throw domain_error("Kameko needs d >= s with d ≡ s (mod 2)");
    QuotientBasis source = QuotientBasis::build(s, d, cfg);
    QuotientBasis target = QuotientBasis::build(s, (d - s) / 2, cfg);
    return kameko_kernel(source, target);
}

int weight_quotient_dim_direct(int s, const WeightVector& w, const RunConfig& cfg)
{
    long long d = w.degree();
    DegreeSpace sp(s, d, cfg.max_space);
    int n = sp.size();
    // columns: monomials with weight > w first, then P_s(w)
    std::vector<int> col(n, -1);
    int n_out = 0;
    for (const auto& blk : sp.blocks())
        if (blk.weight > w)
            n_out += blk.hi - blk.lo;
    int next_out = 0, next_in = n_out;
    int n_in = n - n_out;
    for (const auto& blk : sp.blocks()) {
        bool outside = blk.weight > w;
        for (int i = blk.lo; i < blk.hi; ++i)
            col[i] = outside ? next_out++ : next_in++;
    }
    gf2::IncrementalSpan span(n);
    if (d >= 1) {
        for (const HitGenerator& g :
             hit_generators(s, d, cfg.exhaustive_generators, cfg.max_space)) {
            gf2::BitVec row(n);
            for_each_sq_term(g.k, g.m,
                                    [&](const Monomial& t) { row.flip(col[sp.rank_of(t)]); });
            if (row.any())
                span.insert(row);
        }
    }
    for (const auto& blk : sp.blocks()) {
        if (!(blk.weight < w))
            continue;
        for (int i = blk.lo; i < blk.hi; ++i) {
            gf2::BitVec row(n);
            row.set(col[i]);
            span.insert(row);
        }
    }
    int pivots_inside = 0;
    for (int c = n_out; c < n; ++c)
        if (span.is_pivot(c))
            ++pivots_inside;
    return n_in - pivots_inside;
}

}  // namespace hitcalc
