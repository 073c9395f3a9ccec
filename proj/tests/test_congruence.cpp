#include <gtest/gtest.h>

#include <random>

#include "fqpoints/congruence.hpp"
#include "fqpoints/formal_group.hpp"
#include "oracles.hpp"

using namespace fqpoints;

namespace {

std::vector<Integer> counts(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

DiagonalForm fermat_quartic() { return DiagonalForm{4, std::vector<CoeffSpec>(4, std::int64_t{1})}; }

}  // namespace

TEST(HeightCongruence, Examples) {
    EXPECT_TRUE(check_height_congruence(counts({4}), 3, 1, HeightSpec::infinite()).pass());
    EXPECT_TRUE(check_height_congruence(counts({0}), 5, 1, HeightSpec::one()).pass());
    EXPECT_TRUE(check_height_congruence(counts({8}), 7, 1, HeightSpec::finite(2)).pass());
    const auto r = check_height_congruence(counts({8}), 7, 1, HeightSpec::finite(2));
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_EQ(r.rows[0].modulus, 7);
    EXPECT_EQ(r.rows[0].residue, 1);
}

TEST(HeightCongruence, Moduli) {
    // h = 3, e = 2, k = 1..3: ceil(2k * 2/3) = 2, 3, 4
    const auto r = check_height_congruence(counts({1, 1, 1}), 5, 2, HeightSpec::finite(3));
    EXPECT_EQ(r.rows[0].modulus, 25);
    EXPECT_EQ(r.rows[1].modulus, 125);
    EXPECT_EQ(r.rows[2].modulus, 625);
    const auto inf = check_height_congruence(counts({1, 1}), 3, 2, HeightSpec::infinite());
    EXPECT_EQ(inf.rows[0].modulus, 9);
    EXPECT_EQ(inf.rows[1].modulus, 81);
}

TEST(HeightCongruence, FiniteOneIsRoutedAndZeroRejected) {
    const auto a = check_height_congruence(counts({6}), 5, 1, HeightSpec::finite(1));
    const auto b = check_height_congruence(counts({6}), 5, 1, HeightSpec::one());
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a.pass());
    EXPECT_THROW(check_height_congruence(counts({6}), 5, 1, HeightSpec::finite(0)), invalid_input);
    EXPECT_THROW(check_height_congruence({}, 5, 1, HeightSpec::one()), invalid_input);
}

TEST(HeightCongruence, FermatQuarticInfiniteHeight) {
    for (std::uint64_t p : {3u, 7u, 11u}) {
        ASSERT_FALSE(diagonal_height(4, p).is_finite());
        std::vector<Integer> ns;
        for (unsigned k = 1; k <= 2; ++k) ns.push_back(count_diagonal(fermat_quartic(), p, 1, k));
        EXPECT_TRUE(check_height_congruence(ns, p, 1, HeightSpec::infinite()).pass()) << "p=" << p;
    }
    // height one at p = 5 and 13
    for (std::uint64_t p : {5u, 13u}) {
        std::vector<Integer> ns;
        for (unsigned k = 1; k <= 2; ++k) ns.push_back(count_diagonal(fermat_quartic(), p, 1, k));
        EXPECT_TRUE(check_height_congruence(ns, p, 1, HeightSpec::one()).pass()) << "p=" << p;
    }
}

TEST(HeightCongruence, HeightTwoImpliesGaussBound) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[rng() % 4];
        const unsigned e = 1 + static_cast<unsigned>(rng() % 3);
        std::vector<Integer> ns;
        for (int k = 0; k < 3; ++k) ns.emplace_back(static_cast<long>(rng() % 2000));
        if (check_height_congruence(ns, p, e, HeightSpec::finite(2)).pass()) {
            EXPECT_TRUE(gauss_bound_check(ns, p, e).pass());
        }
        // moduli agree row by row
        const auto h2 = check_height_congruence(ns, p, e, HeightSpec::finite(2));
        const auto g = gauss_bound_check(ns, p, e);
        for (std::size_t k = 0; k < ns.size(); ++k) EXPECT_EQ(h2.rows[k].modulus, g.rows[k].modulus);
    }
}

TEST(GaussBound, Examples) {
    EXPECT_TRUE(gauss_bound_check(counts({8}), 7, 1).pass());
    EXPECT_TRUE(gauss_bound_check(counts({1}), 11, 3).pass());
    EXPECT_FALSE(gauss_bound_check(counts({2}), 3, 2).pass());
    EXPECT_EQ(gauss_bound_check(counts({2}), 3, 2).rows[0].modulus, 3);
}

TEST(AxKatz, Examples) {
    // x0^2 + x1^2 + x2^2 + x3^2 in P^3 over F_3
    const PolySystem quadric = DiagonalForm{2, std::vector<CoeffSpec>(4, std::int64_t{1})}.to_system();
    const auto r = ax_katz_check(quadric, 3, 1, 2);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.rows[0].count, oracle::fermat_like_count(oracle::SmallField(3, 1), 2, {1, 1, 1, 1}));
    EXPECT_EQ(r.rows[1].count, oracle::fermat_like_count(oracle::SmallField(3, 2), 2, {1, 1, 1, 1}));
    // a hyperplane in P^2 is a P^1
    const PolySystem line{2, {HomogeneousPoly{1, {Term{{1, 0, 0}, std::int64_t{1}}, Term{{0, 1, 0}, std::int64_t{2}}}}}};
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const auto lr = ax_katz_check(line, p, 1, 2);
        EXPECT_TRUE(lr.pass());
        EXPECT_EQ(lr.rows[0].count, p + 1);
    }
    PolySystem two{3, {quadric.polys[0], quadric.polys[0]}};
    EXPECT_THROW(ax_katz_check(two, 3, 1, 1), hypothesis_error);
}

TEST(AxKatz, RandomAdmissibleSystems) {
    std::mt19937_64 rng(50);
    const std::vector<std::pair<std::uint64_t, unsigned>> fields{{2, 1}, {3, 1}, {2, 2}, {5, 1}};
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        PolySystem sys{n, {}};
        unsigned budget = n;
        while (budget > 0 && (sys.polys.empty() || rng() % 2 == 0)) {
            const unsigned d = 1 + static_cast<unsigned>(rng() % budget);
            budget -= d;
            HomogeneousPoly f{d, {}};
            const int terms = 1 + static_cast<int>(rng() % 4);
            for (int t = 0; t < terms; ++t) {
                std::vector<unsigned> exps(n + 1, 0);
                for (unsigned i = 0; i < d; ++i) ++exps[rng() % (n + 1)];
                f.terms.push_back({exps, std::int64_t{static_cast<std::int64_t>(rng() % 7) - 3}});
            }
            sys.polys.push_back(f);
        }
        const auto [p, e] = fields[rng() % fields.size()];
        const auto r = ax_katz_check(sys, p, e, 1);
        EXPECT_TRUE(r.pass()) << "trial " << trial << " count " << r.rows[0].count.get_str();
    }
}

TEST(ClassifyCurve, Examples) {
    EXPECT_TRUE(classify_curve(5, 1, 6).height2);
    EXPECT_EQ(classify_curve(5, 1, 6).branch, 1);
    EXPECT_FALSE(classify_curve(5, 1, 8).height2);
    const auto c = classify_curve(3, 1, 7);
    EXPECT_TRUE(c.height2);
    EXPECT_EQ(c.branch, 2);
    EXPECT_EQ(c.trace, -3);
    EXPECT_TRUE(classify_curve(3, 1, 1).height2);
    EXPECT_TRUE(classify_curve(2, 3, 9 - 4).height2);
    const auto even = classify_curve(5, 2, 1 + 25 + 5);
    EXPECT_TRUE(even.height2);
    EXPECT_EQ(even.branch, 3);
    EXPECT_EQ(*even.alpha, 1);
    EXPECT_FALSE(classify_curve(5, 2, 1 + 25 + 3).height2);
    EXPECT_THROW(classify_curve(5, 1, 20), invalid_input);
    EXPECT_THROW(classify_curve(4, 1, 5), invalid_input);
}

TEST(ClassifyCurve, SupersingularPrimeCounts) {
    for (std::uint64_t p : primes_up_to(50)) {
        if (p < 5) continue;
        EXPECT_TRUE(classify_curve(p, 1, Integer(static_cast<unsigned long>(p + 1))).height2) << p;
    }
}

TEST(HondaTate, Examples) {
    const auto s5 = honda_tate_traces(5, 1);
    EXPECT_EQ(s5.values(), (std::vector<long>{-4, -3, -2, -1, 0, 1, 2, 3, 4}));
    EXPECT_EQ(s5.find(0)->cases, (std::vector<int>{5}));
    EXPECT_EQ(s5.find(3)->cases, (std::vector<int>{1}));

    const auto s4 = honda_tate_traces(2, 2);
    EXPECT_EQ(s4.values(), (std::vector<long>{-4, -3, -2, -1, 0, 1, 2, 3, 4}));
    EXPECT_EQ(s4.find(4)->cases, (std::vector<int>{2}));
    EXPECT_EQ(s4.find(-2)->cases, (std::vector<int>{3}));
    EXPECT_EQ(s4.find(0)->cases, (std::vector<int>{5}));
    EXPECT_EQ(s4.find(1)->cases, (std::vector<int>{1}));

    const auto s9 = honda_tate_traces(3, 2);
    EXPECT_EQ(s9.values().size(), 13u);
    EXPECT_EQ(s9.find(6)->cases, (std::vector<int>{2}));
    EXPECT_EQ(s9.find(-3)->cases, (std::vector<int>{3}));

    // p = 1 mod 3 and 1 mod 4: sqrt(q) and 0 are excluded
    const auto s169 = honda_tate_traces(13, 2);
    EXPECT_EQ(s169.find(13), nullptr);
    EXPECT_EQ(s169.find(0), nullptr);
    EXPECT_NE(s169.find(26), nullptr);
    // q = 8: p = 2, e odd, t = +-4 by case (4)
    EXPECT_EQ(honda_tate_traces(2, 3).find(4)->cases, (std::vector<int>{4}));
}

TEST(HondaTate, MatchesIndependentEnumerationAndIsSymmetric) {
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, int>>{
             {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 2}, {11, 2}, {13, 2}, {17, 1}}) {
        const auto s = honda_tate_traces(p, static_cast<unsigned>(e));
        const auto expected = oracle::honda_tate(static_cast<long>(p), e);
        const auto got = s.values();
        EXPECT_EQ(std::set<long>(got.begin(), got.end()), expected) << "p=" << p << " e=" << e;
        for (long t : got) EXPECT_NE(s.find(-t), nullptr);
        const long bound = isqrt(4 * s.q).get_si();
        for (long t = -bound; t <= bound; ++t)
            if (t % static_cast<long>(p) != 0) {
                EXPECT_NE(s.find(t), nullptr);
            }
    }
}
