#include "hitcalc/monomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace hitcalc {

WeightVector::WeightVector(std::vector<int> entries) : entries_(std::move(entries))
{
    while (!entries_.empty() && entries_.back() == 0)
        entries_.pop_back();
    for (int v : entries_)
        if (v < 0)
            throw domain_error("weight vector entries must be non-negative");
}

long long WeightVector::degree() const
{
    long long d = 0;
    for (size_t i = 0; i < entries_.size(); ++i)
        d += (1LL << i) * entries_[i];
    return d;
}

bool WeightVector::weakly_decreasing() const
{
    for (size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i] > entries_[i - 1])
            return false;
    return true;
}

int WeightVector::compare(const WeightVector& o) const
{
    size_t n = std::max(entries_.size(), o.entries_.size());
    for (size_t i = 0; i < n; ++i) {
        int a = entry(int(i)), b = o.entry(int(i));
        if (a != b)
            return a < b ? -1 : 1;
    }
    return 0;
}

std::string WeightVector::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < entries_.size(); ++i)
        os << (i ? "," : "") << entries_[i];
    os << ']';
    return os.str();
}

WeightVector omega_5t(int t)
{
    std::vector<int> w(t + 1, 3);
    w[t] = 1;
    return WeightVector(std::move(w));
}

Monomial::Monomial(int s, const std::vector<uint32_t>& exps) : s_(s), e_{}
{
    if (s < 1 || s > kMaxVars)
        throw domain_error("variable count out of range");
    if (int(exps.size()) != s)
        throw domain_error("exponent tuple length does not match s");
    std::copy(exps.begin(), exps.end(), e_.begin());
}

long long Monomial::degree() const
{
    long long d = 0;
    for (int i = 0; i < s_; ++i)
        d += e_[i];
    return d;
}

WeightVector Monomial::weight() const
{
    std::vector<int> w;
    for (int i = 0; i < s_; ++i) {
        uint32_t a = e_[i];
        for (int j = 0; a; a >>= 1, ++j) {
            if (a & 1u) {
                if (int(w.size()) <= j)
                    w.resize(j + 1, 0);
                ++w[j];
            }
        }
    }
    return WeightVector(std::move(w));
}

bool Monomial::is_spike() const
{
    for (int i = 0; i < s_; ++i) {
        uint32_t a = e_[i];
        if (a & (a + 1))
            return false;
    }
    return true;
}

bool Monomial::all_positive() const
{
    for (int i = 0; i < s_; ++i)
        if (e_[i] == 0)
            return false;
    return true;
}

Monomial Monomial::times(const Monomial& o) const
{
    if (s_ != o.s_)
        throw domain_error("variable count mismatch in product");
    std::array<uint32_t, kMaxVars> e = e_;
    for (int i = 0; i < s_; ++i)
        e[i] += o.e_[i];
    return {s_, e};
}

Monomial Monomial::pow2(int r) const
{
    std::array<uint32_t, kMaxVars> e = e_;
    for (int i = 0; i < s_; ++i)
        e[i] <<= r;
    return {s_, e};
}

std::string Monomial::to_string() const
{
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < s_; ++i) {
        if (e_[i] == 0)
            continue;
        if (any)
            os << ' ';
        os << 'x' << (i + 1);
        if (e_[i] > 1)
            os << '^' << e_[i];
        any = true;
    }
    return any ? os.str() : "1";
}

std::string Monomial::json() const
{
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < s_; ++i)
        os << (i ? "," : "") << e_[i];
    os << ']';
    return os.str();
}

size_t MonomialHash::operator()(const Monomial& m) const
{
    size_t h = size_t(m.vars());
    for (int i = 0; i < m.vars(); ++i)
        h = h * 1000003u + m.exp(i);
    return h;
}

int compare_monomials(const Monomial& x, const Monomial& y)
{
    if (x.vars() != y.vars() || x.degree() != y.degree())
        throw domain_error("compare_monomials requires equal degree and s");
    int c = x.weight().compare(y.weight());
    if (c != 0)
        return c;
    for (int i = 0; i < x.vars(); ++i)
        if (x.exp(i) != y.exp(i))
            return x.exp(i) < y.exp(i) ? -1 : 1;
    return 0;
}

namespace {

std::mutex mu_mutex;
std::vector<int> mu_table = {0};  // mu_table[d] = mu(d)

}  // namespace

int mu(long long d)
{
    if (d < 0)
        throw domain_error("mu of a negative degree");
    std::lock_guard<std::mutex> lock(mu_mutex);
    size_t old = mu_table.size();
    if (size_t(d) < old)
        return mu_table[d];
    mu_table.resize(size_t(d) + 1, 0);
    for (long long n = (long long)old; n <= d; ++n) {
        int best = 1 << 30;
        for (int u = 1; (1LL << u) - 1 <= n; ++u)
            best = std::min(best, 1 + mu_table[n - ((1LL << u) - 1)]);
        mu_table[n] = best;
    }
    return mu_table[d];
}

namespace {

// The unique u_1 > u_2 > ... > u_{r-1} >= u_r > 0 with d = sum (2^{u_i} - 1).
bool spike_sequence_rec(long long d, int r, int hi, bool last_may_equal,
                        std::vector<int>& out)
{
    if (r == 0)
        return d == 0;
    for (int u = hi; u >= 1; --u) {
        long long term = (1LL << u) - 1;
        if (term > d)
            continue;
        // remaining r-1 terms are strictly below u except possibly the last
        out.push_back(u);
        int next_hi = (r == 2) ? u : u - 1;
        if (spike_sequence_rec(d - term, r - 1, next_hi, last_may_equal, out))
            return true;
        out.pop_back();
    }
    return false;
}

std::vector<int> spike_sequence(long long d, int r)
{
    std::vector<int> u;
    int hi = 1;
    while ((1LL << (hi + 1)) - 1 <= d)
        ++hi;
    if (!spike_sequence_rec(d, r, hi, true, u))
        throw domain_error("no spike decomposition of requested length");
    return u;
}

}  // namespace

DegreeDecomposition decompose_degree(long long d, int r)
{
    if (mu(d) != r || r < 1)
        throw domain_error("decompose_degree requires mu(d) = r >= 1");
    std::vector<int> u = spike_sequence(d, r);
    int t = u.back();
    long long m = 0;
    for (int j = 0; j + 1 < r; ++j)
        m += (1LL << (u[j] - t)) - 1;
    DegreeDecomposition dec{r, t, m};
    if (dec.m > 0 && mu(dec.m) >= r)
        throw domain_error("degree decomposition violated mu(m) < r");
    return dec;
}

Monomial minimal_spike(long long d, int s)
{
    if (d == 0)
        return Monomial(s, std::vector<uint32_t>(s, 0));
    int r = mu(d);
    if (r > s)
        throw domain_error("no spike: mu(d) exceeds the variable count");
    std::vector<int> u = spike_sequence(d, r);
    std::vector<uint32_t> e(s, 0);
    for (int i = 0; i < r; ++i)
        e[i] = uint32_t((1LL << u[i]) - 1);
    return Monomial(s, e);
}

Monomial spike_for_weight(const WeightVector& w, int s)
{
    if (!w.weakly_decreasing())
        throw domain_error("spike_for_weight needs a weakly decreasing weight");
    if (w.entry(0) > s)
        throw domain_error("spike_for_weight needs w_1 <= s");
    std::vector<uint32_t> e(s, 0);
    for (int i = 1; i <= s; ++i) {
        int c = 0;
        while (w.entry(c) >= i)
            ++c;
        e[i - 1] = uint32_t((1LL << c) - 1);
    }
    return Monomial(s, e);
}

uint64_t degree_space_size(int s, long long d, uint64_t cap)
{
    // C(d+s-1, s-1), saturating at cap
    unsigned __int128 num = 1;
    for (int i = 1; i <= s - 1; ++i) {
        num = num * (unsigned __int128)(d + i);
        num /= i;  // exact: product of i consecutive integers divisible by i!
        if (num > cap)
            return cap + 1;
    }
    return uint64_t(num);
}

std::vector<Monomial> enumerate_monomials(int s, long long d, uint64_t limit)
{
    if (s < 1 || s > kMaxVars)
        throw domain_error("variable count out of range");
    if (d < 0)
        throw domain_error("negative degree");
    uint64_t n = degree_space_size(s, d, limit);
    if (n > limit) {
        uint64_t need = degree_space_size(s, d, uint64_t(1) << 62);
        throw resource_error("degree space of " + std::to_string(s) + " vars, degree " +
                             std::to_string(d) + " holds " + std::to_string(need) +
                             " monomials; the configured limit is " +
                             std::to_string(limit) + " (raise --max-space)");
    }
    std::vector<Monomial> out;
    out.reserve(n);
    std::vector<uint32_t> e(s, 0);
    // compositions of d into s parts
    auto rec = [&](auto&& self, int i, long long rest) -> void {
        if (i == s - 1) {
            e[i] = uint32_t(rest);
            out.emplace_back(s, e);
            return;
        }
        for (long long a = 0; a <= rest; ++a) {
            e[i] = uint32_t(a);
            self(self, i + 1, rest - a);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), WeightOrderLess{});
    return out;
}

std::vector<Monomial> enumerate_monomials_of_weight(int s, const WeightVector& w,
                                                    uint64_t limit)
{
    for (int j = 0; j < w.length(); ++j)
        if (w.entry(j) > s)
            throw domain_error("weight entry exceeds the variable count");
    std::vector<std::vector<uint32_t>> columns;  // per level: admissible bit masks
    uint64_t count = 1;
    for (int j = 0; j < w.length(); ++j) {
        std::vector<uint32_t> masks;
        for (uint32_t mask = 0; mask < (1u << s); ++mask)
            if (__builtin_popcount(mask) == w.entry(j))
                masks.push_back(mask);
        count *= masks.size();
        if (count > limit)
            throw resource_error("weight class exceeds the configured limit");
        columns.push_back(std::move(masks));
    }
    std::vector<Monomial> out;
    out.reserve(count);
    std::vector<uint32_t> e(s, 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == int(columns.size())) {
            out.emplace_back(s, e);
            return;
        }
        for (uint32_t mask : columns[j]) {
            for (int i = 0; i < s; ++i)
                if ((mask >> i) & 1u)
                    e[i] |= (1u << j);
            self(self, j + 1);
            for (int i = 0; i < s; ++i)
                if ((mask >> i) & 1u)
                    e[i] &= ~(1u << j);
        }
    };
    rec(rec, 0);
    // same weight for all terms, so only the exponent left-lex matters
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        for (int i = 0; i < a.vars(); ++i)
            if (a.exp(i) != b.exp(i))
                return a.exp(i) < b.exp(i);
        return false;
    });
    return out;
}

std::vector<WeightVector> weight_vectors_of_degree(int s, long long d)
{
    std::vector<WeightVector> out;
    std::vector<int> w;
    auto rec = [&](auto&& self, long long rest) -> void {
        if (rest == 0) {
            out.emplace_back(w);
            return;
        }
        // next entry must match the parity of the remaining degree
        long long unit = 1LL << w.size();
        for (int v = (rest & unit) ? 1 : 0; v <= s; v += 2) {
            if (unit * v > rest)
                break;
            w.push_back(v);
            self(self, rest - unit * v);
            w.pop_back();
        }
    };
    rec(rec, d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hitcalc
