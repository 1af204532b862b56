#include <doctest.h>

#include <cmath>

#include "bohl/numerics.hpp"
#include "bohl/parser.hpp"
#include "support/random_bohl.hpp"

using namespace bohl;
using bohl::testing::Rng;

namespace {

const double kPi = 3.14159265358979323846;

bool close(std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

BindingEnv env_for(const BohlFunction& f) { return BindingEnv::defaults_for(f.generators()); }

}  // namespace

TEST_CASE("default bindings are square roots of primes") {
    BindingEnv env = BindingEnv::defaults_for({"a", "b", "c"});
    CHECK(env.get("a") == doctest::Approx(std::sqrt(2.0)));
    CHECK(env.get("b") == doctest::Approx(std::sqrt(3.0)));
    CHECK(env.get("c") == doctest::Approx(std::sqrt(5.0)));

    CHECK_THROWS_AS(env.get("missing"), UnboundGeneratorError);
    try {
        env.get("zeta");
    } catch (const UnboundGeneratorError& e) {
        CHECK(e.generator() == "zeta");
        CHECK(std::string(e.what()).find("zeta") != std::string::npos);
    }

    BindingEnv bad;
    CHECK_THROWS_AS(bad.bind("w1", 0.0), BindingError);
    CHECK_THROWS_AS(bad.bind("w1", -1.5), BindingError);
}

TEST_CASE("evaluation examples") {
    BindingEnv empty;
    BohlFunction one_plus_t = lower_expression("1 + t");
    CHECK(evaluate(one_plus_t, 2.0, empty) == std::complex<double>(3.0, 0.0));

    BohlFunction eit = lower_expression("exp(i*t)");
    CHECK(close(evaluate(eit, kPi, empty), {-1.0, 0.0}, 1e-12));

    BohlFunction with_gen = lower_expression("exp(i*w1*t)");
    CHECK_THROWS_AS(evaluate(with_gen, 1.0, empty), UnboundGeneratorError);
}

TEST_CASE("evaluation is consistent with exact arithmetic") {
    Rng rng(41);
    for (int iter = 0; iter < 200; ++iter) {
        testing::FunctionOptions opt;
        opt.max_power = 2;
        BohlFunction f = testing::random_function(rng, opt);
        BohlFunction g = testing::random_function(rng, opt);
        BindingEnv env = BindingEnv::defaults_for([&] {
            auto names = f.generators();
            auto more = g.generators();
            names.insert(more.begin(), more.end());
            return names;
        }());
        double t = rng.real(-10.0, 10.0);
        auto fv = evaluate(f, t, env);
        auto gv = evaluate(g, t, env);
        CHECK(close(evaluate(f + g, t, env), fv + gv, 1e-9));
        CHECK(close(evaluate(f - g, t, env), fv - gv, 1e-9));
        CHECK(close(evaluate(f * g, t, env), fv * gv, 1e-9));
    }
}

TEST_CASE("psi evaluation agrees on AP-form functions") {
    Rng rng(42);
    for (int iter = 0; iter < 100; ++iter) {
        BohlFunction f = testing::random_ap_function(rng);
        BindingEnv env = env_for(f);
        double t = rng.real(-10.0, 10.0);
        CHECK(evaluate(f.psi(), t, env) == evaluate(f, t, env));
    }
}

TEST_CASE("derivative matches central finite differences") {
    Rng rng(43);
    testing::FunctionOptions opt;
    opt.max_power = 2;
    opt.exponent.allow_generators = false;
    const double h = 1e-5;
    for (int iter = 0; iter < 100; ++iter) {
        BohlFunction f = testing::random_function(rng, opt);
        BindingEnv env;
        double t = rng.real(-2.0, 2.0);
        auto numeric = (evaluate(f, t + h, env) - evaluate(f, t - h, env)) / (2.0 * h);
        auto exact = evaluate(f.differentiate(), t, env);
        CHECK(close(numeric, exact, 1e-5));
    }
}

TEST_CASE("sampling grid") {
    BindingEnv empty;
    SampleSeries flat = sample(BohlFunction::one(), 0.0, 1.0, 4, empty);
    REQUIRE(flat.size() == 5);
    for (const SamplePoint& p : flat) CHECK(p.value == std::complex<double>(1.0, 0.0));

    SampleSeries line = sample(lower_expression("t"), 0.0, 2.0, 2, empty);
    REQUIRE(line.size() == 3);
    CHECK(line[0].value.real() == 0.0);
    CHECK(line[1].value.real() == 1.0);
    CHECK(line[2].value.real() == 2.0);
    CHECK(line.front().t == 0.0);
    CHECK(line.back().t == 2.0);

    CHECK_THROWS_AS(sample(BohlFunction::one(), 1.0, 0.0, 4, empty), DomainError);

    CHECK(to_csv(line).substr(0, 5) == "t,re,");
}

TEST_CASE("sup norm estimates") {
    BindingEnv empty;
    CHECK(sup_norm_estimate(BohlFunction::one(), -3.0, 7.0, 100, empty) == 1.0);

    BohlFunction t_eit = lower_expression("t*exp(i*t)");
    CHECK(sup_norm_estimate(t_eit, 0.0, 5.0, 1000, empty) == doctest::Approx(5.0));

    BohlFunction trig = lower_expression("exp(i*w1*t) + exp(i*w2*t) - 1");
    CHECK(sup_norm_estimate(trig, 0.0, 100.0, 20000, env_for(trig)) <= 3.0 + 1e-9);
}

TEST_CASE("translation number search finds the period of exp(it)") {
    BindingEnv empty;
    BohlFunction eit = lower_expression("exp(i*t)");
    std::vector<double> taus = translation_number_search(eit, 0.1, 6.0, 7.0, 1000, 5.0, empty);
    REQUIRE(!taus.empty());
    bool near_period = false;
    for (double tau : taus) {
        CHECK(std::abs(2.0 * std::abs(std::sin(tau / 2.0))) < 0.1);  // definition check
        if (std::abs(tau - 2.0 * kPi) < 0.06) near_period = true;
    }
    CHECK(near_period);
}

TEST_CASE("zero translation always qualifies") {
    Rng rng(44);
    for (int iter = 0; iter < 20; ++iter) {
        BohlFunction f = testing::random_ap_function(rng);
        BindingEnv env = env_for(f);
        std::vector<double> taus = translation_number_search(f, 0.25, 0.0, 1.0, 10, 3.0, env);
        REQUIRE(!taus.empty());
        CHECK(taus.front() == 0.0);
    }
}

TEST_CASE("translation numbers of the two-frequency witness are relatively dense") {
    BohlFunction trig = lower_expression("exp(i*w1*t) + exp(i*w2*t) - 1");
    BindingEnv env = env_for(trig);
    std::vector<double> taus =
        translation_number_search(trig, 0.5, 0.0, 200.0, 2000, 5.0, env);
    REQUIRE(!taus.empty());
    // brute-force confirmation on a denser probe grid
    for (double tau : taus) {
        double worst = 0.0;
        for (int k = 0; k <= 5000; ++k) {
            double t = -5.0 + k * (10.0 / 5000.0);
            worst = std::max(worst, std::abs(evaluate(trig, t, env) -
                                             evaluate(trig, t + tau, env)));
        }
        CHECK(worst < 0.5 + 1e-6);
    }
}

TEST_CASE("translation search rejects bad input") {
    BindingEnv empty;
    CHECK_THROWS_AS(translation_number_search(lower_expression("t"), 0.5, 0.0, 1.0, 10, 1.0,
                                              empty),
                    DomainError);
    CHECK_THROWS_AS(translation_number_search(lower_expression("exp(i*t)"), 0.0, 0.0, 1.0, 10,
                                              1.0, empty),
                    DomainError);
}

TEST_CASE("lower bound sequences") {
    BindingEnv empty;
    LowerBoundSequence constant = lower_bound_sequence(BohlFunction::one(), 5, empty);
    CHECK(constant.eps == doctest::Approx(0.5));
    REQUIRE(constant.points.size() == 5);

    LowerBoundSequence circle = lower_bound_sequence(lower_expression("exp(i*t)"), 8, empty);
    CHECK(circle.eps == doctest::Approx(0.5));

    BohlFunction trig = lower_expression("exp(i*w1*t) + exp(i*w2*t) - 1");
    BindingEnv env = env_for(trig);
    LowerBoundSequence seq = lower_bound_sequence(trig, 10, env);
    REQUIRE(seq.points.size() == 10);
    CHECK(seq.eps > 0.0);
    for (std::size_t k = 0; k < seq.points.size(); ++k) {
        CHECK(std::abs(evaluate(trig, seq.points[k], env)) >= seq.eps);
        if (k > 0) CHECK(seq.points[k] > seq.points[k - 1]);
        CHECK(seq.points[k] >= k * seq.window_length);
        CHECK(seq.points[k] < (k + 1) * seq.window_length);
    }

    CHECK_THROWS_AS(lower_bound_sequence(BohlFunction::zero(), 3, empty), DomainError);
    CHECK_THROWS_AS(lower_bound_sequence(lower_expression("t"), 3, empty), DomainError);
}

TEST_CASE("lower bound search reports resolution failures") {
    // 1 - exp(i*w1*t) vanishes at 0, so a tiny first window cannot contain a
    // point with |f| >= eps and the schedule must give up.
    BohlFunction f = lower_expression("1 - exp(i*w1*t)");
    BindingEnv env = env_for(f);
    SearchGrid coarse;
    coarse.window_lengths = {1e-4};
    CHECK_THROWS_AS(lower_bound_sequence(f, 3, env, coarse), SearchResolutionError);

    // the default schedule succeeds on the same function
    CHECK_NOTHROW(lower_bound_sequence(f, 3, env));
}

TEST_CASE("unboundedness probe examples") {
    BindingEnv empty;
    auto probes = unboundedness_probe(lower_expression("t*exp(i*t)"), {10.0, 100.0, 1000.0},
                                      empty);
    REQUIRE(probes.size() == 3);
    CHECK(probes[0].sup_estimate == doctest::Approx(10.0));
    CHECK(probes[1].sup_estimate == doctest::Approx(100.0));
    CHECK(probes[2].sup_estimate == doctest::Approx(1000.0));

    auto growth = unboundedness_probe(lower_expression("exp(t)"), {5.0, 10.0}, empty);
    CHECK(growth[0].sup_estimate == doctest::Approx(std::exp(5.0)));
    CHECK(growth[1].sup_estimate == doctest::Approx(std::exp(10.0)));

    BohlFunction trig = lower_expression("exp(i*w1*t) + exp(i*w2*t) - 1");
    for (const auto& p : unboundedness_probe(trig, {10.0, 100.0, 1000.0}, env_for(trig)))
        CHECK(p.sup_estimate <= 3.0 + 1e-9);

    CHECK_THROWS_AS(unboundedness_probe(BohlFunction::one(), {10.0, 10.0}, empty), DomainError);
}

TEST_CASE("probe corpus climbs for unbounded members and stays put for AP ones") {
    BindingEnv empty;
    std::vector<double> horizons{10.0, 100.0, 1000.0};
    for (const char* text : {"t", "t*exp(i*t)", "exp(1/10*t)", "t^2*exp(i*w1*t)"}) {
        BohlFunction f = lower_expression(text);
        CHECK(!f.is_bounded());
        auto probes = unboundedness_probe(f, horizons, env_for(f));
        for (std::size_t k = 1; k < probes.size(); ++k)
            CHECK(probes[k].sup_estimate > probes[k - 1].sup_estimate);
    }
    for (const char* text : {"1", "exp(i*t)+exp(-i*t)", "exp(i*w1*t) + exp(i*w2*t) - 1"}) {
        BohlFunction f = lower_expression(text);
        CHECK(f.is_bounded());
        double bound = 1e-9;
        for (const Term& term : f.terms()) bound += term.coeff.abs_double();
        for (const auto& p : unboundedness_probe(f, horizons, env_for(f)))
            CHECK(p.sup_estimate <= bound);
    }
}
