#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liedense/density.hpp"

using namespace liedense;

namespace {
DimSeq seq_of(std::initializer_list<long> values) {
    DimSeq s(static_cast<int>(values.size()));
    int n = 1;
    for (long v : values)
        s.set(n++, BigInt(v));
    return s;
}
} // namespace

TEST_CASE("density_report basics") {
    DimSeq amb = witt_dims(2, 6);
    DensityReport same = density_report(amb, amb);
    for (const auto& q : same.ratios)
        CHECK(q == 1);
    for (const auto& q : same.running_min)
        CHECK(q == 1);

    DensityReport zero = density_report(DimSeq(6), amb);
    for (const auto& q : zero.ratios)
        CHECK(q == 0);

    CHECK_THROWS_AS(density_report(DimSeq(5), amb), ValidationError);
    CHECK_THROWS_AS(density_report(seq_of({3}), seq_of({2})), ValidationError);
}

TEST_CASE("density_report running min is a suffix minimum") {
    DensityReport r = density_report(seq_of({1, 0, 1, 3}), seq_of({2, 1, 2, 3}));
    REQUIRE(r.ratios.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        BigRat m = r.ratios[i];
        for (std::size_t j = i; j < 4; ++j)
            m = std::min(m, r.ratios[j]);
        CHECK(r.running_min[i] == m);
        CHECK(r.running_min[i] <= r.ratios[i]);
        CHECK(r.ratios[i] >= 0);
        CHECK(r.ratios[i] <= 1);
    }
}

TEST_CASE("density_report is monotone in sub and antitone in ambient") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> low(0, 4);
    std::uniform_int_distribution<long> extra(0, 3);
    for (int it = 0; it < 50; ++it) {
        const int n = 6;
        DimSeq sub(n), sub2(n), amb(n), amb2(n);
        for (int k = 1; k <= n; ++k) {
            long s = low(rng);
            long mid = s + extra(rng);
            long a = mid + extra(rng);
            long a2 = a + extra(rng);
            sub.set(k, s);
            sub2.set(k, mid); // sub <= sub2 <= amb
            amb.set(k, a);
            amb2.set(k, a2); // amb <= amb2
        }
        auto r1 = density_report(sub, amb);
        auto r2 = density_report(sub2, amb);
        auto r3 = density_report(sub, amb2);
        for (int k = 0; k < n; ++k) {
            if (r1.flags.count("zero_ambient_prefix") == 0) {
                CHECK(r1.ratios[k] <= r2.ratios[k]);
                CHECK(r3.ratios[k] <= r1.ratios[k]);
            }
        }
    }
}

TEST_CASE("greedy at alpha one half matches the hand-derived trace") {
    GreedyResult res = greedy_construct(BigRat(1, 2), 2, 2, 6, GreedyMode::Lie);
    const auto& steps = res.trace.steps;
    REQUIRE(steps.size() == 6);

    CHECK(steps[0].k == 1);
    REQUIRE(steps[0].added.size() == 1);
    CHECK(steps[0].added[0] == "x1");
    CHECK(steps[0].beta_after == BigRat(1, 2));

    CHECK(steps[1].k == 2);
    CHECK(steps[1].added.empty());
    CHECK(steps[1].beta_before == BigRat(1, 3));
    CHECK(steps[1].checkpoint);

    CHECK(steps[2].k == 3);
    REQUIRE(steps[2].added.size() == 1);
    CHECK(steps[2].added[0] == "[[x2,x1],x1]");
    CHECK(steps[2].beta_after == BigRat(2, 5));

    CHECK(steps[3].k == 4);
    CHECK(steps[3].added.empty());
    CHECK(steps[3].beta_before == BigRat(3, 8));
    CHECK(steps[3].checkpoint);

    for (const auto& s : steps) {
        CHECK(s.inv_i);
        if (s.checkpoint)
            CHECK(s.beta_after <= BigRat(1, 2));
    }
    CHECK(res.trace.freeness_verified);

    // closure dims of {x1, [[x2,x1],x1]} through degree 4: 1,0,1,1
    CHECK(res.report.sub_dims.at(1) == 1);
    CHECK(res.report.sub_dims.at(2) == 0);
    CHECK(res.report.sub_dims.at(3) == 1);
    CHECK(res.report.sub_dims.at(4) == 1);
}

TEST_CASE("greedy extremes") {
    GreedyResult zero = greedy_construct(BigRat(0), 2, 2, 5, GreedyMode::Lie);
    CHECK(zero.trace.final_gens.empty());
    for (const auto& q : zero.report.ratios)
        CHECK(q == 0);

    GreedyResult full = greedy_construct(BigRat(1), 2, 2, 5, GreedyMode::Lie);
    CHECK(full.trace.final_gens.size() == 2);
    for (const auto& q : full.report.ratios)
        CHECK(q == 1);

    CHECK_THROWS_AS(greedy_construct(BigRat(2), 2, 2, 5, GreedyMode::Lie), ValidationError);
    CHECK_THROWS_AS(greedy_construct(BigRat(1, 2), 1, 2, 5, GreedyMode::Lie), ValidationError);
}

TEST_CASE("greedy invariants hold in both modes") {
    for (GreedyMode mode : {GreedyMode::Lie, GreedyMode::Restricted}) {
        for (const BigRat& alpha : {BigRat(1, 3), BigRat(1, 2), BigRat(3, 4)}) {
            GreedyResult res = greedy_construct(alpha, 2, 2, 9, mode);
            const DimSeq sub_cum = cumulative(res.report.sub_dims);
            const DimSeq amb_cum = cumulative(res.report.amb_dims);
            for (int n = 1; n <= 9; ++n) {
                // invariant (i): alpha - 1/l(n) <= ratio(n), exact
                CHECK(alpha - make_rat(1, amb_cum.at(n)) <=
                      make_rat(sub_cum.at(n), amb_cum.at(n)));
            }
            for (const auto& s : res.trace.steps) {
                CHECK(s.inv_i);
                if (s.checkpoint)
                    CHECK(s.beta_after <= alpha); // invariant (ii)
            }
            CHECK(res.trace.freeness_verified);
        }
    }
}

TEST_CASE("greedy restricted mode agrees with the oracle lift") {
    GreedyResult res = greedy_construct(BigRat(1, 2), 2, 2, 8, GreedyMode::Restricted);
    std::vector<LieExpr> gens;
    for (const auto& g : res.trace.final_gens)
        gens.push_back(parse_expr(g, 2, 2));
    REQUIRE(!gens.empty());
    DimSeq lifted = closure(gens, 2, 2, 8, ClosureMode::Restricted).dims();
    CHECK(lifted == res.report.sub_dims);
}

TEST_CASE("ideal density of x2 inside rank 2") {
    DensityReport r = ideal_density_report({parse_expr("x2", 2, 2)}, 2, 2, 6, false);
    CHECK(r.ratios.back() == BigRat(22, 23));
    for (std::size_t i = 1; i + 1 < r.ratios.size(); ++i)
        CHECK(r.ratios[i + 1] >= r.ratios[i]); // nondecreasing from degree 2
    CHECK(r.flags.at("expected_trend") == "1");
}

TEST_CASE("ideal density of the full generator set is one") {
    DensityReport r = ideal_density_report(
        {parse_expr("x1", 2, 2), parse_expr("x2", 2, 2)}, 2, 2, 5, false);
    for (const auto& q : r.ratios)
        CHECK(q == 1);
}

TEST_CASE("restricted ideal of the basic commutator grows toward one") {
    DensityReport r = ideal_density_report({parse_expr("[x2,x1]", 2, 2)}, 2, 2, 8, true);
    CHECK(r.ratios[7] > r.ratios[3]);
}

TEST_CASE("ideal density requires a nonzero generator") {
    CHECK_THROWS_AS(ideal_density_report({parse_expr("0*x1", 2, 2)}, 2, 2, 4, false),
                    ValidationError);
}

TEST_CASE("fg density reports") {
    DensityReport r = fg_density_report(GenProfile::parse("2:1,3:2"), witt_dims(2, 6));
    CHECK(r.ratios.back() == BigRat(6, 23));

    DensityReport line = fg_density_report(GenProfile::parse("1:1"), witt_dims(2, 6));
    CHECK(line.sub_dims.at(1) == 1);
    for (int n = 2; n <= 6; ++n)
        CHECK(line.sub_dims.at(n) == 0);

    DensityReport whole = fg_density_report(GenProfile::parse("1:2"), witt_dims(2, 6));
    for (const auto& q : whole.ratios)
        CHECK(q == 1);
}

TEST_CASE("codim growth bound") {
    CHECK(codim_growth_bound(1, 2, 8) == 3);
    CHECK(codim_growth_bound(0, 2, 100) == 0);
    CHECK(codim_growth_bound(2, 3, 10) == 4);
    CHECK(codim_growth_bound(5, 2, 1) == 0);
    CHECK_THROWS_AS(codim_growth_bound(-1, 2, 4), ValidationError);
}

TEST_CASE("report json carries exact and float forms") {
    DensityReport r = density_report(seq_of({1, 1}), seq_of({2, 1}));
    auto j = report_json(r);
    CHECK(j["ratios"][0] == "1/2");
    CHECK(j["ratios"][1] == "2/3");
    CHECK(j["ratios_f64"][1].get<double>() == doctest::Approx(2.0 / 3.0));
    CHECK(j["running_min"][0] == "1/2");
}
