#include "oracles.hpp"
#include "support.hpp"

#include "bezout/element_structure.hpp"
#include "bezout/factor.hpp"
#include "bezout/finite_ring.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace test;

namespace {

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::parse_error;
}

long gcd3(long a, long b, long c) { return oracle::gcd(oracle::gcd(a, b), c); }

std::vector<long> factor_values(const ComaximalFactorization& f)
{
    std::vector<long> out;
    for (const auto& x : f.factors)
        out.push_back(as_long(x));
    return out;
}

} // namespace

TEST_CASE("factor over Z")
{
    const Factorization f = factor(z(-360));
    CHECK(f.unit == z(-1));
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0].prime == z(2));
    CHECK(f.factors[0].exponent == 3);
    CHECK(f.factors[1].prime == z(3));
    CHECK(f.factors[1].exponent == 2);
    CHECK(f.factors[2].prime == z(5));
    CHECK(radical(f, ZZ()) == z(30));

    const Element big_prime = Element(ZZ(), mpz_class("1000000007"));
    CHECK(factor(big_prime).factors.size() == 1);
    const Element semi = Element(ZZ(), mpz_class(1000003) * mpz_class(1000033));
    CHECK(code_of([&] { factor(semi); }) == ErrorCode::factorization_budget_exceeded);
    const Element known = Element(ZZ(), mpz_class(999983) * mpz_class(1000003));
    CHECK(factor(known).factors.size() == 2);
    CHECK(code_of([] { factor(z(0)); }) == ErrorCode::zero_input);
}

TEST_CASE("property: factorizations over Z reconstruct their input")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(2, 1'000'000'000);
    for (int i = 0; i < 300; ++i) {
        const long n = dist(rng);
        const Factorization f = factor(z(n));
        Element product = f.unit;
        for (const auto& pp : f.factors) {
            CHECK(oracle::is_prime(as_long(pp.prime)));
            for (unsigned k = 0; k < pp.exponent; ++k)
                product = product * pp.prime;
        }
        CHECK(product == z(n));
    }
}

TEST_CASE("factor over F_p[x] and Q[x]")
{
    const Ring f2 = Fp(2);
    const Factorization g = factor(px(f2, {0, 0, 1, 1}));
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].prime == px(f2, {0, 1}));
    CHECK(g.factors[0].exponent == 2);
    CHECK(g.factors[1].prime == px(f2, {1, 1}));

    const Ring qx = QQx();
    const Factorization sophie = factor(px(qx, {4, 0, 0, 0, 1}));
    REQUIRE(sophie.factors.size() == 2);
    CHECK(sophie.factors[0].prime.polynomial().degree() == 2);
    CHECK(sophie.factors[1].prime.polynomial().degree() == 2);
    CHECK(sophie.factors[0].prime * sophie.factors[1].prime == px(qx, {4, 0, 0, 0, 1}));

    const Factorization quartic = factor(px(qx, {-1, 0, 0, 0, 1}));
    CHECK(quartic.factors.size() == 3);

    const Factorization scaled = factor(px(qx, {2, 2}));
    CHECK(scaled.unit == from_integer(qx, 2));
    REQUIRE(scaled.factors.size() == 1);
    CHECK(scaled.factors[0].prime == px(qx, {1, 1}));
}

TEST_CASE("is_regular")
{
    CHECK(is_regular(z(6)));
    CHECK_FALSE(is_regular(z(0)));
    const Ring q = Zmod(12);
    CHECK(is_regular(residue(q, 5)));
    CHECK_FALSE(is_regular(residue(q, 8)));
    const Ring qx = make_quotient(QQx(), px(QQx(), {-1, 0, 1}));
    CHECK(is_regular(reduce(qx, px(QQx(), {2, 1}))));
    CHECK_FALSE(is_regular(reduce(qx, px(QQx(), {1, 1}))));
}

TEST_CASE("classifier worked values")
{
    CHECK(is_atom(z(7)));
    CHECK_FALSE(is_atom(z(6)));
    CHECK(is_atom(px(Fp(2), {1, 1, 1})));
    CHECK(is_inpseudo_irreducible(z(6)));
    CHECK_FALSE(is_inpseudo_irreducible(z(4)));
    CHECK_FALSE(is_inpseudo_irreducible(px(Fp(3), {0, 0, 1})));
    CHECK(is_pseudo_irreducible(z(4)));
    CHECK_FALSE(is_pseudo_irreducible(z(6)));
    CHECK(is_pseudo_irreducible(z(8)));
    CHECK(is_pseudo_irreducible(z(-8)));

    const Element cube = px(Fp(3), {1, 0, 0, 1}); // (x + 1)^3 over F_3
    CHECK_FALSE(is_inpseudo_irreducible(cube));
    CHECK(is_pseudo_irreducible(cube));
    CHECK_FALSE(is_atom(cube));
    CHECK(is_inpseudo_irreducible(px(QQx(), {-1, 0, 0, 0, 1})));
    CHECK_FALSE(is_pseudo_irreducible(px(QQx(), {-1, 0, 0, 0, 1})));

    for (long bad : {0L, 1L, -1L})
        CHECK(code_of([&] { is_atom(z(bad)); }) == ErrorCode::unit_or_zero_input);
    CHECK(code_of([] { is_pseudo_irreducible(px(Fp(5), {3})); }) == ErrorCode::unit_or_zero_input);
    CHECK(code_of([] { is_atom(residue(Zmod(12), 5)); }) == ErrorCode::unsupported_ring);
}

TEST_CASE("property: classifiers agree with the quotient ring for a in 2..300")
{
    for (long a = 2; a <= 300; ++a) {
        const FiniteRing fr(Zmod(a));
        INFO("a=", a);
        CHECK(is_inpseudo_irreducible(z(a)) == fr.is_von_neumann_regular().holds);
        CHECK(is_pseudo_irreducible(z(a)) == fr.is_indecomposable().holds);
        CHECK(is_atom(z(a)) == fr.is_field().holds);
        CHECK(is_inpseudo_irreducible(z(a)) == fr.is_reduced().holds);
    }
}

TEST_CASE("property: F_p[x] classifiers agree with the quotient ring")
{
    std::mt19937_64 rng(5);
    for (long p : {2L, 3L}) {
        const Ring fp = Fp(p);
        for (int i = 0; i < 60; ++i) {
            auto f = oracle::random_poly(rng, p, 5);
            if (f.size() < 2)
                continue;
            const Element a = px(fp, f);
            const FiniteRing fr(make_quotient(fp, a));
            INFO(to_string(a));
            CHECK(is_inpseudo_irreducible(a) == fr.is_von_neumann_regular().holds);
            CHECK(is_pseudo_irreducible(a) == fr.is_indecomposable().holds);
            CHECK(is_atom(a) == fr.is_field().holds);
        }
    }
}

TEST_CASE("comaximal_refinement")
{
    const ComaximalFactorization f = comaximal_refinement(z(360));
    CHECK(f.unit == z(1));
    std::vector<long> values = factor_values(f);
    std::sort(values.begin(), values.end());
    CHECK(values == std::vector<long>{5, 8, 9});
    CHECK(factor_values(comaximal_refinement(z(7))) == std::vector<long>{7});
    const Ring f2 = Fp(2);
    const ComaximalFactorization g = comaximal_refinement(px(f2, {0, 0, 1, 1}));
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0] * g.factors[1] == px(f2, {0, 0, 1, 1}));
}

TEST_CASE("property: comaximal refinement invariants")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
    for (int i = 0; i < 400; ++i) {
        const long n = dist(rng);
        if (n >= -1 && n <= 1)
            continue;
        const ComaximalFactorization f = comaximal_refinement(z(n));
        Element product = f.unit;
        for (std::size_t x = 0; x < f.factors.size(); ++x) {
            product = product * f.factors[x];
            CHECK(is_pseudo_irreducible(f.factors[x]));
            for (std::size_t y = x + 1; y < f.factors.size(); ++y)
                CHECK(is_unit(gcdex(f.factors[x], f.factors[y]).d));
        }
        CHECK(product == z(n));
    }
}

TEST_CASE("adequate_split worked values")
{
    const SplitWitness w = adequate_split(z(360), z(14));
    CHECK(w.r == z(45));
    CHECK(w.s == z(8));
    CHECK(verify_split(w).empty());
    const SplitWitness coprime = adequate_split(z(5), z(3));
    CHECK(coprime.r == z(5));
    CHECK(coprime.s == z(1));
    const SplitWitness all = adequate_split(z(8), z(2));
    CHECK(all.r == z(1));
    CHECK(all.s == z(8));
    CHECK(code_of([] { adequate_split(z(0), z(3)); }) == ErrorCode::zero_input);
    CHECK(coprime_core(z(8), z(14)) == z(1));
    CHECK(coprime_core(z(24), z(2)) == z(3));
}

TEST_CASE("property: adequate splits satisfy their definition")
{
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
    for (int i = 0; i < 2000; ++i) {
        const long a = dist(rng), b = dist(rng);
        if (a == 0)
            continue;
        const SplitWitness w = adequate_split(z(a), z(b));
        INFO("a=", a, " b=", b);
        CHECK(verify_split(w).empty());
        CHECK(w.r * w.s == z(a));
        CHECK(oracle::gcd(as_long(w.r), b) == 1);
        CHECK(oracle::gcd(as_long(w.r), as_long(w.s)) == 1);
    }
    const Ring f3 = Fp(3);
    for (int i = 0; i < 300; ++i) {
        const auto fa = oracle::random_poly(rng, 3, 6), fb = oracle::random_poly(rng, 3, 6);
        if (fa.empty())
            continue;
        CHECK(verify_split(adequate_split(px(f3, fa), px(f3, fb))).empty());
    }
}

TEST_CASE("avoidable and Gelfand worked values")
{
    const SplitWitness av = avoidable_decompose(z(30), z(4), z(9));
    CHECK(av.r == z(15));
    CHECK(av.s == z(2));
    CHECK(verify_split(av).empty());
    const SplitWitness unit = avoidable_decompose(z(1), z(0), z(0));
    CHECK(unit.r == z(1));
    CHECK(unit.s == z(1));
    CHECK(code_of([] { avoidable_decompose(z(6), z(2), z(2)); }) == ErrorCode::precondition_failed);

    const SplitWitness g = gelfand_decompose(z(30), z(4), z(9));
    CHECK(g.r == z(15));
    CHECK(g.s == z(2));
    const SplitWitness c_unit = gelfand_decompose(z(12), z(35), z(1));
    CHECK(c_unit.r == z(12));
    CHECK(c_unit.s == z(1));
    const SplitWitness b_unit = gelfand_decompose(z(12), z(1), z(35));
    CHECK(verify_split(b_unit).empty());
    CHECK(b_unit.r * b_unit.s == z(12));
    CHECK(code_of([] { gelfand_decompose(z(6), z(2), z(4)); }) == ErrorCode::precondition_failed);
}

TEST_CASE("property: avoidable and Gelfand splits on random coprime triples")
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
    int checked = 0;
    while (checked < 2000) {
        const long a = dist(rng), b = dist(rng), c = dist(rng);
        if (a == 0 || gcd3(a, b, c) != 1)
            continue;
        ++checked;
        INFO("a=", a, " b=", b, " c=", c);
        const SplitWitness av = avoidable_decompose(z(a), z(b), z(c));
        CHECK(verify_split(av).empty());
        CHECK(oracle::gcd(as_long(av.r), b) == 1);
        CHECK(oracle::gcd(as_long(av.s), c) == 1);
        CHECK(oracle::gcd(as_long(av.r), as_long(av.s)) == 1);
        CHECK(verify_split(gelfand_decompose(z(a), z(b), z(c))).empty());
    }
}

TEST_CASE("property: Gelfand witnesses are multiplicative")
{
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<long> dist(1, 1000);
    int checked = 0;
    while (checked < 500) {
        const long a1 = dist(rng), a2 = dist(rng), b = dist(rng), c = dist(rng);
        if (gcd3(a1, b, c) != 1 || gcd3(a2, b, c) != 1)
            continue;
        ++checked;
        INFO("a1=", a1, " a2=", a2, " b=", b, " c=", c);
        CHECK(verify_split(gelfand_decompose(z(a1), z(b), z(c))).empty());
        CHECK(verify_split(gelfand_decompose(z(a2), z(b), z(c))).empty());
        CHECK(verify_split(gelfand_decompose(z(a1 * a2), z(b), z(c))).empty());
    }
}

TEST_CASE("semipotent witnesses")
{
    const SemipotentResult w = semipotent_witness(z(12), z(8));
    REQUIRE(std::holds_alternative<SplitWitness>(w));
    const SplitWitness& split = std::get<SplitWitness>(w);
    CHECK(split.r == z(3));
    CHECK(split.s == z(4));
    CHECK(verify_split(split).empty());
    CHECK(std::holds_alternative<InRadical>(semipotent_witness(z(12), z(6))));
    CHECK(std::holds_alternative<InRadical>(semipotent_witness(z(4), z(2))));
}

TEST_CASE("property: semipotent witnesses verify whenever one exists")
{
    for (long a = 2; a <= 120; ++a) {
        const FiniteRing fr(Zmod(a));
        for (long b = 0; b < a; ++b) {
            const SemipotentResult w = semipotent_witness(z(a), z(b));
            const bool in_radical = fr.in_jacobson_radical(static_cast<FiniteRing::Index>(b));
            INFO("a=", a, " b=", b);
            CHECK(std::holds_alternative<InRadical>(w) == in_radical);
            if (const auto* split = std::get_if<SplitWitness>(&w)) {
                CHECK(split->r * split->s == z(a));
                CHECK(oracle::gcd(as_long(split->r), b) == 1);
                CHECK(oracle::gcd(as_long(split->r), as_long(split->s)) == 1);
            }
        }
    }
}

TEST_CASE("verify_split rejects tampered witnesses")
{
    SplitWitness w = adequate_split(z(360), z(14));
    w.r = z(15);
    w.s = z(24);
    CHECK_FALSE(verify_split(w).empty());
    SplitWitness g = avoidable_decompose(z(30), z(4), z(9));
    g.r = z(10);
    g.s = z(3);
    CHECK_FALSE(verify_split(g).empty());
}

TEST_CASE("witness json")
{
    const nlohmann::json j = split_to_json(adequate_split(z(360), z(14)));
    CHECK(j["kind"] == "adequate");
    CHECK(j["r"] == 45);
    CHECK(j["s"] == 8);
    const nlohmann::json f = factorization_to_json(comaximal_refinement(z(360)));
    CHECK(f["factors"].size() == 3);
}
