#pragma once

// Density of graded subalgebras: exact-rational partial ratios, the
// weight-by-weight greedy construction of subalgebras with prescribed
// density, and reports for ideals and finitely generated subalgebras.
// All ratios are prefix estimates over the computed horizon; no limit
// is ever claimed.

#include <optional>

#include <json.hpp>

#include "liedense/hallbasis.hpp"
#include "liedense/witt.hpp"

namespace liedense {

struct DensityReport {
    std::optional<BigRat> alpha;
    int horizon = 0;
    DimSeq sub_dims;
    DimSeq amb_dims;
    std::vector<BigRat> ratios;      // index 0 <-> degree 1, l_sub(n)/l_amb(n)
    std::vector<BigRat> running_min; // suffix minimum of ratios
    std::map<std::string, std::string> flags;
};

// Exact partial ratios for a dominated pair of dimension sequences.
DensityReport density_report(const DimSeq& sub, const DimSeq& amb);

struct GreedyStep {
    int k = 0;
    std::vector<std::string> added; // printed basic commutators
    BigRat beta_before;
    BigRat beta_after;
    bool inv_i = false;    // alpha - 1/l(k) <= ratio after this stage
    bool checkpoint = false; // stage entered the beta_k <= alpha branch
};

struct GreedyTrace {
    BigRat alpha;
    std::vector<GreedyStep> steps;
    std::vector<std::string> final_gens;
    std::vector<int> final_gen_weights;
    bool freeness_verified = false; // closure dims match the profile's free dims
};

enum class GreedyMode { Lie, Restricted };

struct GreedyResult {
    GreedyTrace trace;
    DensityReport report;
};

// Weight-by-weight greedy construction of a Lie subalgebra generated
// by basic commutators whose cumulative dimension ratios track alpha:
// at weight 1 the largest a with a/d <= alpha generators are taken; at
// weight k commutators are added, in Hall order, until the ratio
// enters [alpha - 1/l(k), alpha].  In restricted mode the ambient
// dimensions are the restricted ones and the subalgebra is measured
// as dim S_n = sum_j dim M_{n/p^j}.
GreedyResult greedy_construct(const BigRat& alpha, int d, int p, int trunc, GreedyMode mode,
                              ClosureLimits limits = {});

// Ratios of the (restricted) ideal closure of the generators against
// the ambient free dimensions.
DensityReport ideal_density_report(const std::vector<LieExpr>& gens, int d, int p, int trunc,
                                   bool restricted, ClosureLimits limits = {});

// Analytic dims of the free graded Lie algebra on the profile against
// a supplied ambient sequence; flags carry the dominant-root
// comparison.
DensityReport fg_density_report(const GenProfile& profile, const DimSeq& ambient);

// t * floor(log_p n): how many dimensions a codimension-t Lie
// subalgebra can miss below degree n after restricted closure.
long long codim_growth_bound(long long t, int p, long long n);

nlohmann::ordered_json report_json(const DensityReport& report);
nlohmann::ordered_json trace_json(const GreedyTrace& trace);

} // namespace liedense
