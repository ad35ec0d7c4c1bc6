#include "hitcalc/maps.hpp"

#include <algorithm>

namespace hitcalc {

IndexPair make_index_pair(int i, std::vector<int> I, int s)
{
    if (s < 1 || s > kMaxVars || i < 1 || i > s)
        throw domain_error("index pair out of range");
    int prev = i;
    for (int v : I) {
        if (v <= prev || v > s)
            throw domain_error("I must satisfy i < i_1 < ... < i_r <= s");
        prev = v;
    }
    if (int(I.size()) >= s)
        throw domain_error("l(I) must be below s");
    return IndexPair{i, std::move(I), s};
}

std::vector<IndexPair> all_index_pairs(int s)
{
    std::vector<IndexPair> out;
    for (int i = 1; i <= s; ++i) {
        // subsets of {i+1, ..., s} of size 0..s-1, increasing
        int m = s - i;
        for (uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> I;
            for (int b = 0; b < m; ++b)
                if ((mask >> b) & 1u)
                    I.push_back(i + 1 + b);
            if (int(I.size()) < s)
                out.push_back(make_index_pair(i, std::move(I), s));
        }
    }
    return out;
}

Monomial rho(int i, const Monomial& m, int s)
{
    if (m.vars() != s - 1)
        throw domain_error("rho expects a monomial in s-1 variables");
    if (i < 1 || i > s)
        throw domain_error("rho index out of range");
    std::vector<uint32_t> e(s, 0);
    for (int j = 1; j <= s - 1; ++j)
        e[(j < i ? j : j + 1) - 1] = m.exp(j - 1);
    return Monomial(s, e);
}

Polynomial rho(int i, const Polynomial& f, int s)
{
    return Polynomial(
        s, [&] {
            std::vector<Monomial> terms;
            for (const Monomial& m : f.terms())
                terms.push_back(rho(i, m, s));
            return terms;
        }());
}

std::optional<int> u_compatible(const Monomial& m, const IndexPair& pair)
{
    int r = pair.length();
    if (m.vars() != pair.s - 1)
        throw domain_error("u_compatible expects a monomial in s-1 variables");
    if (r == 0)
        return 1;
    auto a = [&](int idx) { return m.exp(pair.I[idx - 1] - 1 - 1); };  // a_{i_idx - 1}
    uint32_t full = (uint32_t(1) << r) - 1;
    for (int u = 1; u <= r; ++u) {
        bool ok = true;
        for (int t = 1; t < u && ok; ++t)
            ok = a(t) == full;                                   // (i)
        if (ok)
            ok = a(u) > full;                                    // (ii)
        for (int t = 1; t <= u && ok; ++t)
            ok = alpha(r - t, a(u)) == 1;                        // (iii)
        for (int t = u + 1; t <= r && ok; ++t)
            ok = alpha(r - t, a(t)) == 1;                        // (iv)
        if (ok)
            return u;
    }
    return std::nullopt;
}

std::optional<Monomial> phi(const IndexPair& pair, const Monomial& m)
{
    int r = pair.length();
    if (r == 0)
        return rho(pair.i, m, pair.s);
    std::optional<int> u = u_compatible(m, pair);
    if (!u)
        return std::nullopt;
    // x_{(I,u)} = x_{i_u}^{2^{r-1}+...+2^{r-u}} prod_{u<t<=r} x_{i_t}^{2^{r-t}}
    std::vector<uint32_t> divisor(pair.s, 0);
    uint32_t head = 0;
    for (int j = 1; j <= *u; ++j)
        head += uint32_t(1) << (r - j);
    divisor[pair.I[*u - 1] - 1] = head;
    for (int t = *u + 1; t <= r; ++t)
        divisor[pair.I[t - 1] - 1] += uint32_t(1) << (r - t);

    Monomial lifted = rho(pair.i, m, pair.s);
    std::vector<uint32_t> e(pair.s, 0);
    for (int j = 0; j < pair.s; ++j)
        e[j] = lifted.exp(j);
    e[pair.i - 1] += (uint32_t(1) << r) - 1;
    for (int j = 0; j < pair.s; ++j) {
        if (e[j] < divisor[j])
            throw domain_error("phi division is not exact; compatibility broken");
        e[j] -= divisor[j];
    }
    return Monomial(pair.s, e);
}

Polynomial p_map(const IndexPair& pair, const Monomial& m)
{
    int s = pair.s;
    if (m.vars() != s)
        throw domain_error("p_map expects a monomial in s variables");
    // image of x_i is a sum; expand (sum_{k in I} x_{k-1})^{a_i} over F_2
    Polynomial out(s - 1);
    std::vector<uint32_t> base(s - 1, 0);
    for (int j = 1; j <= s; ++j) {
        if (j == pair.i)
            continue;
        base[(j < pair.i ? j : j - 1) - 1] += m.exp(j - 1);
    }
    uint32_t ai = m.exp(pair.i - 1);
    int r = pair.length();
    if (ai == 0 || r == 1) {
        std::vector<uint32_t> e = base;
        if (ai > 0) {
            if (r == 0)
                return Polynomial(s - 1);  // p_(i;{})(x_i) = 0
            e[pair.I[0] - 1 - 1] += ai;
        }
        return Polynomial::monomial(Monomial(s - 1, e));
    }
    if (r == 0)
        return Polynomial(s - 1);
    // multinomial expansion mod 2: split the binary digits of a_i among the
    // r targets; odd coefficients correspond to digitwise partitions
    std::vector<Monomial> terms;
    std::vector<uint32_t> parts(r, 0);
    auto rec = [&](auto&& self, uint32_t remaining_bits) -> void {
        if (remaining_bits == 0) {
            std::vector<uint32_t> e = base;
            for (int t = 0; t < r; ++t)
                e[pair.I[t] - 1 - 1] += parts[t];
            terms.push_back(Monomial(s - 1, e));
            return;
        }
        uint32_t bit = remaining_bits & (~remaining_bits + 1);
        for (int t = 0; t < r; ++t) {
            parts[t] += bit;
            self(self, remaining_bits & ~bit);
            parts[t] -= bit;
        }
    };
    rec(rec, ai);
    return Polynomial(s - 1, std::move(terms));
}

Polynomial p_map(const IndexPair& pair, const Polynomial& f)
{
    Polynomial out(pair.s - 1);
    for (const Monomial& m : f.terms())
        out = out + p_map(pair, m);
    return out;
}

namespace {

void sort_unique(std::vector<Monomial>& v)
{
    std::sort(v.begin(), v.end(), WeightOrderLess{});
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Monomial> phi0_set(const std::vector<Monomial>& U, int s)
{
    std::vector<Monomial> out;
    for (int i = 1; i <= s; ++i)
        for (const Monomial& m : U)
            out.push_back(rho(i, m, s));
    sort_unique(out);
    return out;
}

std::vector<Monomial> phi_plus_set(const std::vector<Monomial>& U, int s)
{
    std::vector<Monomial> out;
    for (const IndexPair& pair : all_index_pairs(s)) {
        if (pair.length() == 0)
            continue;
        for (const Monomial& m : U)
            if (auto img = phi(pair, m); img && img->all_positive())
                out.push_back(*img);
    }
    sort_unique(out);
    return out;
}

}  // namespace hitcalc
