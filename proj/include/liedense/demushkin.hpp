#pragma once

// One-relator (Demushkin-type) pipelines: the presentation catalog,
// enveloping-series dimensions from the 1/(1-dt+t^2) recurrence, the
// exact b -> w -> c dimension sequence of the graded quotient, and
// brute-force verification against the restricted-ideal oracle.

#include "liedense/density.hpp"
#include "liedense/hallbasis.hpp"
#include "liedense/witt.hpp"

namespace liedense {

enum class DemushkinCase { GenericEven, OddP2, EvenP2a, EvenP2b };

std::string case_name(DemushkinCase c);
DemushkinCase parse_case(const std::string& name);

// f ranges over the positive integers plus an "infinite" sentinel
// (p^infinity reads as 0 in relator exponents).
struct FExp {
    bool infinite = false;
    long long value = 0;

    static FExp inf() { return FExp{true, 0}; }
    static FExp of(long long v) { return FExp{false, v}; }
    static FExp parse(const std::string& text);
    std::string str() const;
};

struct DemushkinPresentation {
    int d = 0;
    int p = 0;
    FExp f;
    DemushkinCase case_tag = DemushkinCase::GenericEven;
    std::string group_relator; // data only; graded computations use graded_relator
    LieExpr graded_relator;    // homogeneous of degree 2
};

// Validates the parity/prime/f constraints of the chosen case and
// fills in both relators.  Violations name the offending clause.
DemushkinPresentation make_presentation(int d, int p, FExp f, DemushkinCase case_tag);

// a_n with a_0 = 1, a_1 = d, a_n = d a_{n-1} - a_{n-2}; returns degrees
// 1..N (reports prepend a_0 = 1).  Cross-checked against the series
// inverse of 1 - dt + t^2.
DimSeq enveloping_dims(int d, int max_degree);

// c_n of the graded quotient: the power sums s_0 = 2, s_1 = d,
// s_n = d s_{n-1} - s_{n-2} replace (d-e)^n + e^n exactly, then
// w_n = (1/n) sum_{m|n} mu(n/m) s_m and c_n telescopes over p-power
// divisors.  Integrality of every w_n is asserted.
DimSeq demushkin_lie_dims(int d, int p, int max_degree);

struct EpsilonPair {
    double epsilon = 0.0;
    double d_minus_eps = 0.0;
    int certified_digits = 0;
};

// The root of t^2 - dt + 1 in (0,1), bisected with exact-rational sign
// tests until |(d-e)e - 1| < 10^-digits.
EpsilonPair epsilon(int d, int digits);

struct QuotientDims {
    DimSeq lie_quotient;   // restricted_dim(d,p,n) - dim J_n from the oracle
    DimSeq pipeline;       // demushkin_lie_dims for comparison
    DimSeq assoc_quotient; // d^n - rank of the two-sided associative ideal
    DimSeq enveloping;     // a_n for comparison
    bool lie_matches_pipeline = false;
    bool assoc_matches_enveloping = false;
};

QuotientDims quotient_dims_bruteforce(const DemushkinPresentation& pres, int max_degree,
                                      ClosureLimits limits = {});

// Density of the free restricted graded subalgebra with the given
// generator profile inside the quotient: its growth root lambda must
// stay below d - epsilon, otherwise the profile cannot embed freely.
DensityReport fg_subalgebra_density_profile(const GenProfile& profile, int d, int p,
                                            int max_degree);

nlohmann::ordered_json catalog_json(const DemushkinPresentation& pres);

} // namespace liedense
