#include "hitcalc/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hitcalc {

Polynomial::Polynomial(int s, std::vector<Monomial> terms) : s_(s), terms_(std::move(terms))
{
    for (const Monomial& m : terms_)
        if (m.vars() != s_)
            throw domain_error("term has the wrong variable count");
    normalize();
    for (size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i].degree() != terms_[0].degree())
            throw domain_error("polynomial is not homogeneous");
}

Polynomial Polynomial::monomial(const Monomial& m)
{
    Polynomial f(m.vars());
    f.terms_.push_back(m);
    return f;
}

void Polynomial::normalize()
{
    std::sort(terms_.begin(), terms_.end(), WeightOrderLess{});
    // pairs cancel over F_2
    std::vector<Monomial> out;
    for (size_t i = 0; i < terms_.size();) {
        size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i])
            ++j;
        if ((j - i) % 2)
            out.push_back(terms_[i]);
        i = j;
    }
    terms_ = std::move(out);
}

void Polynomial::add_term(const Monomial& m)
{
    if (m.vars() != s_)
        throw domain_error("term has the wrong variable count");
    if (!terms_.empty() && m.degree() != terms_[0].degree())
        throw domain_error("degree mismatch in addition");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, WeightOrderLess{});
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, m);
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    if (s_ != o.s_)
        throw domain_error("variable count mismatch in addition");
    if (!zero() && !o.zero() && degree() != o.degree())
        throw domain_error("degree mismatch in addition");
    Polynomial out(s_);
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(),
                                  o.terms_.end(), std::back_inserter(out.terms_),
                                  WeightOrderLess{});
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    if (s_ != o.s_)
        throw domain_error("variable count mismatch in product");
    Polynomial out(s_);
    for (const Monomial& a : terms_)
        for (const Monomial& b : o.terms_)
            out.terms_.push_back(a.times(b));
    out.normalize();
    return out;
}

Polynomial Polynomial::map_terms(const std::function<Polynomial(const Monomial&)>& f) const
{
    Polynomial out(s_);
    bool first = true;
    for (const Monomial& m : terms_) {
        Polynomial img = f(m);
        if (img.zero())
            continue;
        if (first) {
            out = img;
            first = false;
        } else {
            out = out + img;
        }
    }
    return out;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i)
        os << (i ? " + " : "") << terms_[i].to_string();
    return os.str();
}

Polynomial sq_on_power(int k, int var, uint32_t n, int s)
{
    Polynomial out(s);
    if (k < 0 || !binom_odd(n, uint64_t(k)))
        return out;
    std::vector<uint32_t> e(s, 0);
    e[var] = n + uint32_t(k);
    out.add_term(Monomial(s, e));
    return out;
}

Polynomial sq(int k, const Monomial& m)
{
    int s = m.vars();
    Polynomial out(s);
    if (k < 0)
        return out;
    if (k == 0)
        return Polynomial::monomial(m);
    if (k > m.degree())
        return out;
    // Cartan over the variables: distribute k among the exponents, keeping
    // only distributions with all binomials odd
    std::array<uint32_t, kMaxVars> img{};
    auto rec = [&](auto&& self, int i, int rest) -> void {
        if (i == s) {
            if (rest == 0)
                out.add_term(Monomial(s, img));
            return;
        }
        uint32_t n = m.exp(i);
        for (int ki = 0; ki <= rest; ++ki) {
            if (ki > int(n) && n != 0)
                break;  // C(n, ki) = 0 beyond n
            if (n == 0 && ki > 0)
                break;
            if (binom_odd(n, uint64_t(ki))) {
                img[i] = n + uint32_t(ki);
                self(self, i + 1, rest - ki);
            }
        }
    };
    rec(rec, 0, k);
    return out;
}

Polynomial sq(int k, const Polynomial& f)
{
    if (k == 0)
        return f;
    Polynomial out(f.vars());
    for (const Monomial& m : f.terms())
        out = out + sq(k, m);
    return out;
}

Polynomial chi_sq(int k, const Polynomial& f)
{
    if (k < 0)
        throw domain_error("chi_sq needs k >= 0");
    // c_j = chi(Sq^j)(f); c_k = sum_{i=1..k} Sq^i(c_{k-i})
    std::vector<Polynomial> c;
    c.reserve(k + 1);
    c.push_back(f);
    for (int j = 1; j <= k; ++j) {
        Polynomial acc(f.vars());
        for (int i = 1; i <= j; ++i)
            acc = acc + sq(i, c[j - i]);
        c.push_back(std::move(acc));
    }
    return c[k];
}

Polynomial kameko_psi(const Monomial& m)
{
    int s = m.vars();
    std::vector<uint32_t> e(s, 0);
    for (int i = 0; i < s; ++i) {
        if ((m.exp(i) & 1u) == 0)
            return Polynomial(s);
        e[i] = (m.exp(i) - 1) / 2;
    }
    return Polynomial::monomial(Monomial(s, e));
}

Polynomial kameko_psi(const Polynomial& f)
{
    return f.map_terms([](const Monomial& m) { return kameko_psi(m); });
}

Monomial kameko_section(const Monomial& y)
{
    int s = y.vars();
    std::vector<uint32_t> e(s, 0);
    for (int i = 0; i < s; ++i)
        e[i] = 2 * y.exp(i) + 1;
    return Monomial(s, e);
}

std::vector<HitGenerator> hit_generators(int s, long long d, bool exhaustive,
                                         uint64_t limit)
{
    if (d < 1)
        throw domain_error("hit generators need degree >= 1");
    std::vector<HitGenerator> out;
    auto add_for = [&](int k) {
        for (const Monomial& m : enumerate_monomials(s, d - k, limit))
            out.push_back({k, m});
    };
    if (exhaustive) {
        for (int k = 1; k <= d; ++k)
            add_for(k);
    } else {
        for (int k = 1; k <= d; k *= 2)
            add_for(k);
    }
    return out;
}

}  // namespace hitcalc
