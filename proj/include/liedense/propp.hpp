#pragma once

// Pro-p group side: Frattini-series growth via the Schreier index
// formula, Zassenhaus log-indices from graded Lie dimensions,
// Hausdorff-dimension partial ratios for direct products, and normal
// Hausdorff spectrum enumeration.

#include <optional>

#include "liedense/demushkin.hpp"
#include "liedense/density.hpp"

namespace liedense {

enum class FiltrationKind { Frattini, Zassenhaus };

struct GrowthLevel {
    int level = 0;
    bool rank_exact = true;
    bool log_index_exact = true;
    BigInt rank;          // d_i (frattini) or the level's layer dimension (zassenhaus)
    BigInt log_index;     // cumulative log_p index
    double rank_log_p = 0.0;      // log_p estimate once saturated
    double log_index_log_p = 0.0; // log_p estimate once saturated
};

struct FiltrationGrowth {
    int p = 2;
    FiltrationKind kind = FiltrationKind::Frattini;
    std::vector<GrowthLevel> levels;
};

// Frattini growth of a free pro-p group of rank d: level i carries
// d_i and L_i = log_p|G : Phi_i| with d_{i+1} = (d_i - 1) p^{d_i} + 1
// and L_{i+1} = L_i + d_i.  Values stay exact big integers while
// p^{d_i} fits the bit budget; beyond that the level is marked
// saturated and carries a base-p logarithmic estimate.
FiltrationGrowth frattini_growth_free(int d, int p, int levels,
                                      long long bit_budget = 1LL << 20);

// d - 1, plus a helper verifying (d_i - 1)/p^{L_i} = d - 1 on a chain.
BigRat rank_gradient_free(int d);
bool rank_gradient_chain_ok(const FiltrationGrowth& growth, int d);
bool schreier_consistent(const FiltrationGrowth& growth);

// log_p|G : Z_{n+1}| = sum_{m<=n} dim R_m as exact integers.
FiltrationGrowth zassenhaus_log_indices(const DimSeq& lie_dims, int levels, int p);

struct ProductFactor {
    enum class Kind { Free, Demushkin } kind = Kind::Free;
    int d = 0;
    // Demushkin data; only consulted for that kind.
    DemushkinCase case_tag = DemushkinCase::GenericEven;
    FExp f;
};

struct ProductSpec {
    int p = 2;
    std::vector<ProductFactor> factors;
};

ProductSpec parse_product_spec(const std::string& factors, int p);

struct SubgroupSelection {
    struct Choice {
        enum class Kind { Full, Trivial, Custom } kind = Choice::Kind::Full;
        // Custom per-level log-index increments, cumulated internally;
        // the cumulative sums must stay below the factor's own growth.
        DimSeq custom_increments;
    };
    std::vector<Choice> choices;
};

// Per-level ratios sum_selected L_i / sum_all L_i as exact rationals.
// Frattini mode supports free factors only; saturated levels are
// excluded from the ratios and flagged.
DensityReport product_hdim_estimate(const ProductSpec& spec, const SubgroupSelection& sel,
                                    FiltrationKind kind, int levels,
                                    long long bit_budget = 1LL << 20);

// All 2^r subset sums of the per-factor dimensions, deduplicated and
// sorted.  When alphas is omitted the spec must be all-free; the
// maximal-rank factors then contribute 1/t each and the rest 0.
std::vector<BigRat> normal_spectrum(const ProductSpec& spec,
                                    const std::optional<std::vector<BigRat>>& alphas);

} // namespace liedense
