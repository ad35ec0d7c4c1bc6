#include "doctest.h"

#include "hitcalc/maps.hpp"
#include "hitcalc/quotient.hpp"

#include <random>
#include <set>

using namespace hitcalc;

namespace {

Monomial mono(std::vector<uint32_t> e)
{
    return Monomial(int(e.size()), e);
}

Monomial random_monomial(std::mt19937& rng, int s, int max_exp)
{
    std::vector<uint32_t> e(s);
    for (auto& x : e)
        x = rng() % (max_exp + 1);
    return Monomial(s, e);
}

}  // namespace

TEST_CASE("index pairs")
{
    CHECK(all_index_pairs(5).size() == 31);  // sum over i of 2^{5-i}
    CHECK_THROWS_AS(make_index_pair(2, {2}, 5), domain_error);
    CHECK_THROWS_AS(make_index_pair(1, {2, 2}, 5), domain_error);
    CHECK_THROWS_AS(make_index_pair(1, {2, 3, 4, 5}, 4), domain_error);
}

TEST_CASE("variable insertion")
{
    CHECK(rho(1, mono({1, 1}), 3) == mono({0, 1, 1}));
    CHECK(rho(3, mono({2, 1}), 3) == mono({2, 1, 0}));
    CHECK(rho(2, mono({3, 5}), 3) == mono({3, 0, 5}));

    // p_(i;I)(rho_i(u)) = u for any I
    std::mt19937 rng(61);
    for (int it = 0; it < 500; ++it) {
        int s = 2 + int(rng() % 4);
        Monomial u = random_monomial(rng, s - 1, 8);
        for (const IndexPair& pair : all_index_pairs(s)) {
            Polynomial back = p_map(pair, Polynomial::monomial(rho(pair.i, u, s)));
            CHECK(back == Polynomial::monomial(u));
        }
        if (it > 20)
            break;  // the inner loop already covers hundreds of cases
    }
    int cases = 0;
    while (cases < 500) {
        int s = 2 + int(rng() % 4);
        int i = 1 + int(rng() % s);
        Monomial u = random_monomial(rng, s - 1, 9);
        IndexPair pair = make_index_pair(i, {}, s);
        CHECK(p_map(pair, Polynomial::monomial(rho(i, u, s))) == Polynomial::monomial(u));
        ++cases;
    }
}

TEST_CASE("u-compatibility")
{
    // I = {}: always 1-compatible
    std::mt19937 rng(67);
    for (int it = 0; it < 100; ++it) {
        int s = 2 + int(rng() % 4);
        Monomial m = random_monomial(rng, s - 1, 9);
        CHECK(u_compatible(m, make_index_pair(1 + int(rng() % s), {}, s)) == 1);
    }

    // at most one u satisfies the four clauses: exhaustive check in P_3, s = 4
    for (const IndexPair& pair : all_index_pairs(4)) {
        int r = pair.length();
        if (r == 0)
            continue;
        for (long long d = 0; d <= 8; ++d)
            for (const Monomial& m : enumerate_monomials(3, d, 1 << 20)) {
                int matches = 0;
                for (int u = 1; u <= r; ++u) {
                    uint32_t full = (uint32_t(1) << r) - 1;
                    auto a = [&](int idx) { return m.exp(pair.I[idx - 1] - 2); };
                    bool ok = true;
                    for (int t = 1; t < u && ok; ++t)
                        ok = a(t) == full;
                    if (ok)
                        ok = a(u) > full;
                    for (int t = 1; t <= u && ok; ++t)
                        ok = alpha(r - t, a(u)) == 1;
                    for (int t = u + 1; t <= r && ok; ++t)
                        ok = alpha(r - t, a(t)) == 1;
                    if (ok)
                        ++matches;
                }
                CHECK(matches <= 1);
                auto found = u_compatible(m, pair);
                CHECK((found.has_value() ? 1 : 0) == matches);
            }
    }

    // a concrete incompatible case: small exponents fail clause (ii)
    IndexPair pair = make_index_pair(1, {2, 3}, 4);
    CHECK(!u_compatible(mono({5, 1, 1}), pair).has_value());
}

TEST_CASE("phi")
{
    // phi_(i;{}) = rho_i everywhere
    std::mt19937 rng(71);
    for (int it = 0; it < 200; ++it) {
        int s = 2 + int(rng() % 4);
        int i = 1 + int(rng() % s);
        Monomial m = random_monomial(rng, s - 1, 9);
        auto img = phi(make_index_pair(i, {}, s), m);
        REQUIRE(img.has_value());
        CHECK(*img == rho(i, m, s));
    }

    // weight preservation on 1000 random nonzero cases
    int nonzero = 0;
    auto pairs = all_index_pairs(5);
    while (nonzero < 1000) {
        Monomial m = random_monomial(rng, 4, 15);
        const IndexPair& pair = pairs[rng() % pairs.size()];
        auto img = phi(pair, m);
        if (!img)
            continue;
        CHECK(img->weight() == m.weight());
        CHECK(img->degree() == m.degree() + 0);  // same degree as well
        ++nonzero;
    }
}

TEST_CASE("p_map")
{
    // p_(i;{})(x_i) = 0
    for (int s = 2; s <= 5; ++s)
        for (int i = 1; i <= s; ++i) {
            std::vector<uint32_t> e(s, 0);
            e[i - 1] = 1;
            CHECK(p_map(make_index_pair(i, {}, s), Polynomial::monomial(mono(e))).zero());
        }

    // direct substitution: x1 x2 -> x1 * x1 = x1^2 under p_(1;{2})
    CHECK(p_map(make_index_pair(1, {2}, 2), Polynomial::monomial(mono({1, 1}))) ==
          Polynomial::monomial(mono({2})));

    // (x1 + x2)-type expansion: p_(1;{2,3})(x1^2) = (x1 + x2)^2 = x1^2 + x2^2
    CHECK(p_map(make_index_pair(1, {2, 3}, 3), Polynomial::monomial(mono({2, 0, 0}))) ==
          Polynomial(2, {mono({2, 0}), mono({0, 2})}));

    // image of a monomial lies in P_{s-1}(w(x)): every term stays <= w(x)
    std::mt19937 rng(73);
    auto pairs = all_index_pairs(5);
    for (int it = 0; it < 500; ++it) {
        Monomial m = random_monomial(rng, 5, 15);
        const IndexPair& pair = pairs[rng() % pairs.size()];
        Polynomial img = p_map(pair, Polynomial::monomial(m));
        for (const Monomial& t : img.terms())
            CHECK(t.weight() <= m.weight());
    }

    // A-linearity: p commutes with every Sq^k
    int cases = 0;
    while (cases < 500) {
        int s = 2 + int(rng() % 3);
        Monomial m = random_monomial(rng, s, 6);
        auto ps = all_index_pairs(s);
        const IndexPair& pair = ps[rng() % ps.size()];
        int k = int(rng() % 9);
        Polynomial lhs = p_map(pair, sq(k, Polynomial::monomial(m)));
        Polynomial rhs = sq(k, p_map(pair, Polynomial::monomial(m)));
        CHECK(lhs == rhs);
        ++cases;
    }
}

TEST_CASE("Phi constructions")
{
    // Phi^0({x1}) in two variables
    auto up = phi0_set({mono({1})}, 2);
    REQUIRE(up.size() == 2);
    CHECK(up[0] == mono({0, 1}));
    CHECK(up[1] == mono({1, 0}));

    // rho maps are injective on monomials
    std::mt19937 rng(79);
    for (int it = 0; it < 200; ++it) {
        int s = 2 + int(rng() % 4);
        Monomial a = random_monomial(rng, s - 1, 6), b = random_monomial(rng, s - 1, 6);
        int i = 1 + int(rng() % s);
        if (!(a == b))
            CHECK(!(rho(i, a, s) == rho(i, b, s)));
    }
}

TEST_CASE("B_5^0 is generated from B_4 by variable insertion")
{
    for (long long d : {5LL, 13LL}) {
        QuotientBasis q4 = QuotientBasis::build(4, d);
        QuotientBasis q5 = QuotientBasis::build(5, d);
        auto inserted = phi0_set(q4.admissible(), 5);
        std::vector<Monomial> b50;
        for (const Monomial& m : q5.admissible())
            if (!m.all_positive())
                b50.push_back(m);
        CHECK(inserted == b50);
        if (d == 13)
            CHECK(inserted.size() == 145);
        if (d == 5)
            CHECK(inserted.size() == 45);
    }
}

TEST_CASE("the 60-element positive part at t = 2")
{
    // Phi^+ of B_4(omega_(5,2)) plus the four listed extras
    QuotientBasis q4 = QuotientBasis::build(4, 13);
    std::vector<Monomial> b4w;
    for (const Monomial& m : q4.admissible())
        if (m.weight() == WeightVector({3, 3, 1}))
            b4w.push_back(m);
    auto plus = phi_plus_set(b4w, 5);
    std::vector<Monomial> extras = {mono({1, 2, 4, 3, 3}), mono({3, 4, 3, 1, 2}),
                                    mono({3, 4, 1, 3, 2}), mono({3, 4, 1, 2, 3})};
    for (const Monomial& e : extras)
        plus.push_back(e);
    std::sort(plus.begin(), plus.end(), WeightOrderLess{});
    plus.erase(std::unique(plus.begin(), plus.end()), plus.end());

    QuotientBasis q5 = QuotientBasis::build(5, 13);
    std::vector<Monomial> computed;
    for (const Monomial& m : q5.admissible())
        if (m.all_positive() && m.weight() == WeightVector({3, 3, 1}))
            computed.push_back(m);
    CHECK(plus.size() == 60);
    CHECK(plus == computed);
}
