#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fqpoints/field.hpp"

using namespace fqpoints;

TEST(Field, PrimeFieldBasics) {
    const Field f = field_make(7, 1, kDefaultFieldBound);
    EXPECT_EQ(f->size(), 7u);
    EXPECT_EQ(f->characteristic(), 7u);
    EXPECT_EQ(f->degree(), 1u);
    EXPECT_EQ(f->mul(3, 5), 1u);
    EXPECT_EQ(f->inv(3), 5u);
    EXPECT_EQ(f->add(6, 3), 2u);
    EXPECT_EQ(f->neg(2), 5u);
    // smallest element of order 6 in F_7
    EXPECT_EQ(f->generator(), 3u);
}

TEST(Field, ModulusIsLowestIrreducible) {
    // F_9: x^2 + 1 is the first monic irreducible quadratic over F_3
    const Field f9 = field_make(3, 2, kDefaultFieldBound);
    EXPECT_EQ(f9->modulus(), (std::vector<std::uint64_t>{1, 0, 1}));
    // F_4: x^2 + x + 1
    const Field f4 = field_make(2, 2, kDefaultFieldBound);
    EXPECT_EQ(f4->modulus(), (std::vector<std::uint64_t>{1, 1, 1}));
    // F_8: x^3 + x + 1
    const Field f8 = field_make(2, 3, kDefaultFieldBound);
    EXPECT_EQ(f8->modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
}

TEST(Field, RejectsBadParameters) {
    EXPECT_THROW(field_make(6, 1, kDefaultFieldBound), invalid_input);
    EXPECT_THROW(field_make(5, 0, kDefaultFieldBound), invalid_input);
    EXPECT_THROW(field_make(2, 21, kDefaultFieldBound), field_bound_error);
    try {
        field_make(3, 13, kDefaultFieldBound);
        FAIL() << "expected a bound error";
    } catch (const field_bound_error& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("1594323"), std::string::npos) << msg;
        EXPECT_NE(msg.find("1048576"), std::string::npos) << msg;
    }
    EXPECT_THROW(field_make(7, 1, kDefaultFieldBound)->inv(0), std::domain_error);
}

TEST(Field, FrobeniusFixesEverythingAfterEIterations) {
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{
             {2, 1}, {2, 5}, {2, 11}, {3, 4}, {3, 6}, {5, 3}, {7, 3}, {11, 3}, {13, 2}, {31, 2}, {43, 2}, {2039, 1}}) {
        const Field f = field_make(p, e, kDefaultFieldBound);
        ASSERT_LE(f->size(), 2048u);
        for (FieldDescriptor::Index x = 0; x < f->size(); ++x)
            ASSERT_EQ(f->pow(x, f->size()), x) << "p=" << p << " e=" << e << " x=" << x;
    }
}

TEST(Field, FrobeniusIsRingHomomorphism) {
    std::mt19937_64 rng(11);
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 8}, {3, 5}, {5, 4}, {7, 2}, {101, 2}}) {
        const Field f = field_make(p, e, kDefaultFieldBound);
        std::uniform_int_distribution<std::uint64_t> pick(0, f->size() - 1);
        for (int i = 0; i < 200; ++i) {
            const auto a = static_cast<FieldDescriptor::Index>(pick(rng));
            const auto b = static_cast<FieldDescriptor::Index>(pick(rng));
            EXPECT_EQ(f->frobenius(f->add(a, b)), f->add(f->frobenius(a), f->frobenius(b)));
            EXPECT_EQ(f->frobenius(f->mul(a, b)), f->mul(f->frobenius(a), f->frobenius(b)));
            EXPECT_EQ(f->frobenius(a), f->pow(a, p));
        }
    }
}

TEST(Field, FieldAxiomsOnRandomElements) {
    std::mt19937_64 rng(5);
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 10}, {3, 7}, {17, 3}, {65521, 1}, {3, 13}}) {
        const Field f = field_make(p, e, std::uint64_t{1} << 22);
        std::uniform_int_distribution<std::uint64_t> pick(0, f->size() - 1);
        for (int i = 0; i < 300; ++i) {
            const auto a = static_cast<FieldDescriptor::Index>(pick(rng));
            const auto b = static_cast<FieldDescriptor::Index>(pick(rng));
            const auto c = static_cast<FieldDescriptor::Index>(pick(rng));
            EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            EXPECT_EQ(f->add(a, f->neg(a)), 0u);
            EXPECT_EQ(f->sub(f->add(a, b), b), a);
            if (a != 0) {
                EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
            }
        }
    }
}

TEST(Field, GeneratorHasFullOrder) {
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {7, 2}, {2, 1}}) {
        const Field f = field_make(p, e, kDefaultFieldBound);
        const auto g = f->generator();
        std::set<FieldDescriptor::Index> seen;
        FieldDescriptor::Index x = 1;
        for (std::uint64_t i = 0; i + 1 < f->size(); ++i) {
            seen.insert(x);
            x = f->mul(x, g);
        }
        EXPECT_EQ(seen.size(), f->size() - 1);
        EXPECT_EQ(x, 1u);
    }
}

TEST(Field, ZechTableConsistency) {
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {3, 4}, {5, 3}, {7, 2}, {13, 1}}) {
        const Field f = field_make(p, e, kDefaultFieldBound);
        ASSERT_TRUE(f->has_log_tables());
        const std::int64_t order = static_cast<std::int64_t>(f->size() - 1);
        for (std::int64_t n = 0; n < order; ++n) {
            const auto gn = f->gen_pow(n);
            EXPECT_EQ(f->log(gn), static_cast<std::uint64_t>(n));
            const auto sum = f->add(1, gn);
            const std::int64_t z = f->zech(n);
            if (sum == 0)
                EXPECT_EQ(z, -1);
            else
                EXPECT_EQ(f->gen_pow(z), sum);
        }
    }
}

TEST(Field, LargeFieldWithoutTables) {
    const Field f = field_make(2, 20, kDefaultFieldBound);
    EXPECT_FALSE(f->has_log_tables());
    const auto g = f->generator();
    EXPECT_EQ(f->pow(g, f->size() - 1), 1u);
    EXPECT_EQ(f->mul(g, f->inv(g)), 1u);
}

TEST(Field, ElementWrapper) {
    const Field f = field_make(5, 2, kDefaultFieldBound);
    const auto elems = enumerate(f);
    ASSERT_EQ(elems.size(), 25u);
    const FieldElement a = elems[7], b = elems[13];
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a.pow(24), FieldElement::from_int(f, 1));
    EXPECT_EQ(a.pow(-1), a.inverse());
    EXPECT_EQ(-(-a), a);
    const Field g = field_make(5, 3, kDefaultFieldBound);
    EXPECT_THROW(a + FieldElement::from_int(g, 1), invalid_input);
}

TEST(Field, CoefficientSpecs) {
    const Field f = field_make(3, 2, kDefaultFieldBound);
    EXPECT_EQ(resolve(CoeffSpec{std::int64_t{-1}}, *f), f->from_int(2));
    EXPECT_EQ(resolve(CoeffSpec{GenPow{0}}, *f), 1u);
    EXPECT_EQ(resolve(CoeffSpec{GenPow{1}}, *f), f->generator());
    EXPECT_EQ(resolve(CoeffSpec{GenPow{-1}}, *f), f->inv(f->generator()));
    EXPECT_EQ(to_string(CoeffSpec{GenPow{3}}), "g^3");
}
