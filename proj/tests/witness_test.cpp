#include <doctest.h>

#include "bohl/parser.hpp"
#include "bohl/witness.hpp"
#include "support/random_bohl.hpp"

using namespace bohl;
using bohl::testing::Rng;

TEST_CASE("bsr witness structure for N = 1") {
    WitnessSpec spec = WitnessSpec::with_default_names(1);
    BohlTuple f = bsr_witness(spec);
    REQUIRE(f.size() == 2);

    CHECK(f.entries[0] == lower_expression("exp(i*w1*t) + exp(i*w2*t) - 1"));
    BohlFunction f2 = lower_expression("exp(i*w3*t) + exp(i*w4*t) - 1");
    CHECK(f.entries[1] == lower_expression("1/4") - f.entries[0] * f2);

    // expanding 1/4 - f_1 f_2 by hand: 9 product terms whose constant merges
    // into the 1/4, leaving 8 exponentials plus one constant.
    CHECK(f.entries[1].term_count() == 9);
    CHECK(f.entries[1].eval_at_zero() == GaussianRational(Rational(-3, 4)));
    CHECK(!f.entries[1].is_unit());

    for (const BohlFunction& entry : f.entries) {
        CHECK(entry.is_ap_form());
        CHECK(entry.is_bounded());
        CHECK(entry.psi() == entry);
    }
}

TEST_CASE("bsr witness term counts and zero values scale with N") {
    for (int n : {1, 2, 3, 7}) {
        WitnessSpec spec = WitnessSpec::with_default_names(n, 1);
        BohlTuple f = bsr_witness(spec);
        REQUIRE(f.size() == static_cast<std::size_t>(n) + 1);
        const BohlFunction& g = f.entries.back();
        CHECK(g.term_count() == static_cast<std::size_t>(8 * n + 1));
        CHECK(g.eval_at_zero() ==
              GaussianRational(Rational(1, 4) - Rational(n)));
    }
}

TEST_CASE("bsr witness inverse shape") {
    WitnessSpec spec = WitnessSpec::with_default_names(1);
    BohlTuple inv = bsr_witness_inverse(spec);
    REQUIRE(inv.size() == 2);
    CHECK(inv.entries[0] ==
          lower_expression("4*exp(i*w3*t) + 4*exp(i*w4*t) - 4"));
    CHECK(inv.entries[1] == BohlFunction::constant(GaussianRational(Rational(4))));

    for (int n : {2, 5}) {
        BohlTuple i2 = bsr_witness_inverse(WitnessSpec::with_default_names(n, 3));
        CHECK(i2.entries.back() == BohlFunction::constant(GaussianRational(Rational(4))));
    }
}

TEST_CASE("bsr witness is unimodular with its explicit inverse") {
    for (int n : {1, 2, 3, 4, 5}) {
        for (int s : {1, 2}) {
            WitnessSpec spec = WitnessSpec::with_default_names(n, s);
            CHECK(bezout_verify(bsr_witness(spec), bsr_witness_inverse(spec)));
        }
    }
}

TEST_CASE("s-th powers stay AP form") {
    WitnessSpec spec = WitnessSpec::with_default_names(2, 3);
    for (const BohlFunction& entry : bsr_witness(spec).entries) {
        CHECK(entry.is_ap_form());
    }
}

TEST_CASE("tsr witness") {
    BohlTuple f1 = tsr_witness(1, {"w1", "w2"});
    REQUIRE(f1.size() == 1);
    CHECK(f1.entries[0] == lower_expression("exp(i*w1*t) + exp(i*w2*t) - 1"));

    BohlTuple f2 = tsr_witness(2, {"a1", "a2", "a3", "a4"});
    for (const BohlFunction& entry : f2.entries) {
        CHECK(entry.term_count() == 3);
        CHECK(entry.is_ap_form());
        CHECK(entry.is_bounded());
        CHECK(entry.psi() == entry);
    }

    CHECK_THROWS_AS(tsr_witness(2, {"w1", "w2"}), ArityError);
    CHECK_THROWS_AS(tsr_witness(1, {"w1", "w1"}), DomainError);
}

TEST_CASE("fresh-name specs never share generators") {
    WitnessSpec a = WitnessSpec::with_fresh_names(2);
    WitnessSpec b = WitnessSpec::with_fresh_names(3);
    std::set<std::string> seen(a.generator_names.begin(), a.generator_names.end());
    for (const std::string& name : b.generator_names) CHECK(seen.insert(name).second);
    CHECK(bezout_verify(bsr_witness(a), bsr_witness_inverse(a)));

    // composing two independently drawn witnesses keeps all frequencies distinct
    BohlTuple fa = bsr_witness(a);
    BohlTuple fb = bsr_witness(b);
    auto gens_a = fa.entries.back().generators();
    for (const std::string& name : fb.entries.back().generators())
        CHECK(gens_a.count(name) == 0);
}

TEST_CASE("witness spec validation") {
    CHECK_THROWS_AS(WitnessSpec::with_default_names(0), DomainError);
    CHECK_THROWS_AS(WitnessSpec::with_default_names(1, 0), DomainError);
    WitnessSpec bad = WitnessSpec::with_default_names(1);
    bad.generator_names[1] = bad.generator_names[0];
    CHECK_THROWS_AS(bsr_witness(bad), DomainError);
}

TEST_CASE("bezout verification") {
    BohlTuple ones{{BohlFunction::one()}};
    CHECK(bezout_verify(ones, ones));

    BohlTuple t_tuple{{BohlFunction::term(GaussianRational(Rational(1)), 1, Exponent())}};
    CHECK(!bezout_verify(t_tuple, ones));

    BohlTuple pair{{BohlFunction::one(), BohlFunction::one()}};
    CHECK_THROWS_AS(bezout_verify(ones, pair), ArityError);
}

TEST_CASE("psi transfer of a reduction identity") {
    // g and h AP-form, f_1 = 1 - h*g, x_1 = 1 gives (f_1 + h g) x_1 = 1.
    BohlFunction g = lower_expression("exp(i*w1*t)");
    BohlFunction h = lower_expression("2*exp(i*w2*t)");
    BohlFunction f1 = BohlFunction::one() - h * g;
    BohlTuple f_with_g{{f1, g}};

    PsiReduction ok = push_reduction_through_psi(f_with_g, {{h}}, {{BohlFunction::one()}});
    CHECK(ok.check);
    CHECK(ok.h.entries[0] == h);
    CHECK(ok.x.entries[0] == BohlFunction::one());

    // non-AP H: t e^t h' projects back to h', and the raw identity fails
    BohlFunction t_et = BohlFunction::term(GaussianRational(Rational(1)), 1,
                                           Exponent(Rational(1)));
    PsiReduction stripped = push_reduction_through_psi(f_with_g, {{t_et * h}},
                                                       {{BohlFunction::one()}});
    CHECK(stripped.h.entries[0] == h);
    CHECK(!stripped.check);

    // failing hypothesis reports false but still returns the projections
    PsiReduction failed = push_reduction_through_psi(f_with_g, {{BohlFunction::zero()}},
                                                     {{BohlFunction::one()}});
    CHECK(!failed.check);
    REQUIRE(failed.h.size() == 1);

    CHECK_THROWS_AS(push_reduction_through_psi(f_with_g, {{h, h}}, {{BohlFunction::one()}}),
                    ArityError);
    BohlTuple not_ap{{t_et, g}};
    CHECK_THROWS_AS(push_reduction_through_psi(not_ap, {{h}}, {{BohlFunction::one()}}),
                    DomainError);
}

TEST_CASE("homomorphism transfer identity on random tuples") {
    Rng rng(31);
    for (int iter = 0; iter < 150; ++iter) {
        int n = rng.uniform(1, 3);
        std::vector<BohlFunction> f, h, x;
        for (int j = 0; j < n; ++j) {
            f.push_back(testing::random_ap_function(rng));
            h.push_back(testing::random_function(rng));
            x.push_back(testing::random_function(rng));
        }
        BohlFunction g = testing::random_ap_function(rng);

        BohlFunction raw, projected;
        for (int j = 0; j < n; ++j) {
            raw += (f[j] + h[j] * g) * x[j];
            projected += (f[j] + h[j].psi() * g) * x[j].psi();
        }
        CHECK(raw.psi() == projected);
    }
}
