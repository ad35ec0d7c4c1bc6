#include "doctest.h"

#include "hitcalc/gf2.hpp"

#include <random>

using namespace hitcalc::gf2;

namespace {

// Naive reference: rows as vectors of 0/1 bytes.
using NaiveRow = std::vector<uint8_t>;
using NaiveMat = std::vector<NaiveRow>;

int naive_rank(NaiveMat m)
{
    if (m.empty())
        return 0;
    size_t cols = m[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols; ++c) {
        size_t pivot = size_t(-1);
        for (size_t r = rank; r < m.size(); ++r)
            if (m[r][c]) {
                pivot = r;
                break;
            }
        if (pivot == size_t(-1))
            continue;
        std::swap(m[rank], m[pivot]);
        for (size_t r = 0; r < m.size(); ++r)
            if (int(r) != rank && m[r][c])
                for (size_t k = 0; k < cols; ++k)
                    m[r][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

bool naive_member(const NaiveMat& space, const NaiveRow& v)
{
    NaiveMat m = space;
    int r0 = naive_rank(m);
    m = space;
    m.push_back(v);
    return naive_rank(m) == r0;
}

BitVec pack(const NaiveRow& r)
{
    BitVec v(int(r.size()));
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i])
            v.set(int(i));
    return v;
}

NaiveRow random_row(std::mt19937& rng, int n, int density_percent = 50)
{
    NaiveRow r(n);
    for (int i = 0; i < n; ++i)
        r[i] = (int(rng() % 100) < density_percent) ? 1 : 0;
    return r;
}

}  // namespace

TEST_CASE("reduce: basics")
{
    GF2Matrix m(3);
    for (int i = 0; i < 3; ++i) {
        BitVec v(3);
        v.set(i);
        m.add_row(v);
    }
    CHECK(m.rank() == 3);

    GF2Matrix dup(4);
    BitVec v(4);
    v.set(1);
    v.set(3);
    dup.add_row(v);
    dup.add_row(v);
    CHECK(dup.rank() == 1);
}

TEST_CASE("reduce/rank against the naive oracle")
{
    std::mt19937 rng(42);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + int(rng() % 60);
        int rows = 1 + int(rng() % 80);
        NaiveMat nm;
        GF2Matrix m(n);
        for (int r = 0; r < rows; ++r) {
            NaiveRow row = random_row(rng, n, 1 + int(rng() % 99));
            nm.push_back(row);
            m.add_row(pack(row));
        }
        CHECK(m.rank() == naive_rank(nm));
    }
    // a few large ones
    for (int it = 0; it < 5; ++it) {
        int n = 150 + int(rng() % 51);
        NaiveMat nm;
        GF2Matrix m(n);
        for (int r = 0; r < n + 20; ++r) {
            NaiveRow row = random_row(rng, n);
            nm.push_back(row);
            m.add_row(pack(row));
        }
        CHECK(m.rank() == naive_rank(nm));
    }
}

TEST_CASE("incremental span membership against the naive oracle")
{
    std::mt19937 rng(43);
    for (int it = 0; it < 300; ++it) {
        int n = 1 + int(rng() % 40);
        int gens = 1 + int(rng() % 30);
        NaiveMat nm;
        IncrementalSpan span(n, true, gens + 5);
        for (int g = 0; g < gens; ++g) {
            NaiveRow row = random_row(rng, n);
            nm.push_back(row);
            span.insert(pack(row));
        }
        CHECK(span.rank() == naive_rank(nm));

        NaiveRow probe = random_row(rng, n);
        CHECK(span.member(pack(probe)) == naive_member(nm, probe));

        // the certificate reproduces the vector exactly
        auto combo = span.member_combination(pack(probe));
        if (combo) {
            BitVec rebuilt(n);
            for (int i : combo->ones())
                rebuilt ^= pack(nm[i]);
            CHECK(rebuilt == pack(probe));
        }
    }
}

TEST_CASE("incremental span: trivial memberships")
{
    IncrementalSpan span(8, true, 4);
    BitVec zero(8);
    CHECK(span.member(zero));
    CHECK(span.member_combination(zero).has_value());
    CHECK(!span.member_combination(zero)->any());

    BitVec g(8);
    g.set(2);
    g.set(5);
    span.insert(g);
    CHECK(span.member(g));
    auto combo = span.member_combination(g);
    REQUIRE(combo.has_value());
    CHECK(combo->popcount() == 1);
}

TEST_CASE("rank never decreases and grows by at most one per insertion")
{
    std::mt19937 rng(44);
    IncrementalSpan span(30);
    int prev = 0;
    for (int i = 0; i < 100; ++i) {
        span.insert(pack(random_row(rng, 30, 20)));
        CHECK(span.rank() >= prev);
        CHECK(span.rank() <= prev + 1);
        prev = span.rank();
    }
}

TEST_CASE("kernel")
{
    // zero map: kernel is everything
    GF2Matrix zero(5);
    BitVec z(5);
    zero.add_row(z);
    CHECK(kernel(zero).size() == 5);

    std::mt19937 rng(45);
    for (int it = 0; it < 200; ++it) {
        int n = 1 + int(rng() % 30);
        int rows = 1 + int(rng() % 30);
        GF2Matrix m(n);
        NaiveMat nm;
        for (int r = 0; r < rows; ++r) {
            NaiveRow row = random_row(rng, n);
            nm.push_back(row);
            m.add_row(pack(row));
        }
        auto basis = kernel(m);
        CHECK(int(basis.size()) == n - naive_rank(nm));
        // every basis vector is annihilated by every row
        for (const BitVec& v : basis)
            for (const NaiveRow& row : nm) {
                int dot = 0;
                for (int i = 0; i < n; ++i)
                    dot ^= int(row[i]) & int(v.get(i));
                CHECK(dot == 0);
            }
        // basis is independent
        GF2Matrix b(n);
        for (const BitVec& v : basis)
            b.add_row(v);
        CHECK(b.rank() == int(basis.size()));
    }
}

TEST_CASE("intersection and the dimension formula")
{
    std::mt19937 rng(46);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + int(rng() % 30);
        GF2Matrix a(n), b(n), both(n);
        int ra = 1 + int(rng() % 10), rb = 1 + int(rng() % 10);
        for (int r = 0; r < ra; ++r) {
            auto row = pack(random_row(rng, n));
            a.add_row(row);
            both.add_row(row);
        }
        for (int r = 0; r < rb; ++r) {
            auto row = pack(random_row(rng, n));
            b.add_row(row);
            both.add_row(row);
        }
        auto inter = intersect(a, b);
        int dim_a = a.rank(), dim_b = b.rank(), dim_sum = both.rank();
        CHECK(int(inter.size()) == dim_a + dim_b - dim_sum);
        // intersection vectors lie in both row spaces
        IncrementalSpan sa(n), sb(n);
        for (const BitVec& v : a.rows)
            sa.insert(v);
        for (const BitVec& v : b.rows)
            sb.insert(v);
        for (const BitVec& v : inter) {
            CHECK(sa.member(v));
            CHECK(sb.member(v));
        }
    }

    // intersect(V, V) = V
    GF2Matrix v(6);
    BitVec r1(6), r2(6);
    r1.set(0);
    r1.set(3);
    r2.set(2);
    v.add_row(r1);
    v.add_row(r2);
    auto self = intersect(v, v);
    CHECK(int(self.size()) == v.rank());
}

TEST_CASE("bit-packed vs naive equivalence, 500 random instances up to 200x200")
{
    std::mt19937 rng(47);
    for (int it = 0; it < 500; ++it) {
        int n = 1 + int(rng() % 200);
        int rows = 1 + int(rng() % 200);
        NaiveMat nm;
        GF2Matrix m(n);
        for (int r = 0; r < rows; ++r) {
            NaiveRow row = random_row(rng, n, 1 + int(rng() % 99));
            nm.push_back(row);
            m.add_row(pack(row));
        }
        int rk = naive_rank(nm);
        CHECK(m.rank() == rk);
        CHECK(int(kernel(m).size()) == n - rk);
    }
}
