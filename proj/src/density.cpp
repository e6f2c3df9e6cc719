#include "liedense/density.hpp"

namespace liedense {

DensityReport density_report(const DimSeq& sub, const DimSeq& amb) {
    if (sub.max_degree() != amb.max_degree())
        throw ValidationError("density_report requires equal horizons (" +
                              std::to_string(sub.max_degree()) + " vs " +
                              std::to_string(amb.max_degree()) + ")");
    DensityReport r;
    r.horizon = amb.max_degree();
    r.sub_dims = sub;
    r.amb_dims = amb;
    BigInt lsub(0), lamb(0);
    for (int n = 1; n <= r.horizon; ++n) {
        if (sub.at(n) > amb.at(n))
            throw ValidationError("subalgebra dimension exceeds ambient at degree " +
                                  std::to_string(n));
        lsub += sub.at(n);
        lamb += amb.at(n);
        if (lamb == 0) {
            r.ratios.emplace_back(0);
            r.flags["zero_ambient_prefix"] = "true";
        } else {
            r.ratios.push_back(make_rat(lsub, lamb));
        }
    }
    r.running_min.resize(r.ratios.size());
    BigRat m;
    for (std::size_t i = r.ratios.size(); i-- > 0;) {
        if (i + 1 == r.ratios.size() || r.ratios[i] < m)
            m = r.ratios[i];
        r.running_min[i] = m;
    }
    return r;
}

namespace {

// Cumulative subalgebra dimension through degree n.  In restricted
// mode the Lie closure M lifts to S with dim S_n = sum_j dim M_{n/p^j}.
BigInt greedy_sub_cumulative(const ClosureEngine& engine, GreedyMode mode, int p, int n) {
    BigInt acc(0);
    for (int m = 1; m <= n; ++m) {
        acc += engine.dim_at(m);
        if (mode == GreedyMode::Restricted) {
            int q = m;
            while (q % p == 0) {
                q /= p;
                acc += engine.dim_at(q);
            }
        }
    }
    return acc;
}

DimSeq greedy_sub_dims(const ClosureEngine& engine, GreedyMode mode, int p, int trunc) {
    DimSeq s(trunc);
    for (int n = 1; n <= trunc; ++n) {
        BigInt v(engine.dim_at(n));
        if (mode == GreedyMode::Restricted) {
            int q = n;
            while (q % p == 0) {
                q /= p;
                v += engine.dim_at(q);
            }
        }
        s.set(n, v);
    }
    return s;
}

} // namespace

GreedyResult greedy_construct(const BigRat& alpha, int d, int p, int trunc, GreedyMode mode,
                              ClosureLimits limits) {
    if (alpha < 0 || alpha > 1)
        throw ValidationError("alpha must lie in [0,1]");
    if (d < 2)
        throw ValidationError("greedy construction requires a non-abelian ambient algebra (d >= 2)");
    require_prime(p);

    const DimSeq ambient =
        mode == GreedyMode::Lie ? witt_dims(d, trunc) : restricted_dims(d, p, trunc);
    const DimSeq lcum = cumulative(ambient);

    HallBasis hall = HallBasis::enumerate(d, trunc);
    ClosureEngine engine(d, p, trunc, ClosureMode::Lie, limits);

    GreedyTrace trace;
    trace.alpha = alpha;

    // Stage 1: the largest a with a/d <= alpha.
    const BigInt a_big = (alpha.get_num() * d) / alpha.get_den();
    const int a = static_cast<int>(a_big.get_si());
    GreedyStep first;
    first.k = 1;
    first.beta_before = BigRat(0);
    for (int i = 1; i <= a; ++i) {
        engine.add_generator(AlgebraElement::generator(d, p, trunc, i));
        trace.final_gens.push_back("x" + std::to_string(i));
        trace.final_gen_weights.push_back(1);
        first.added.push_back("x" + std::to_string(i));
    }
    first.beta_after = make_rat(greedy_sub_cumulative(engine, mode, p, 1), lcum.at(1));
    first.checkpoint = first.beta_after <= alpha;
    first.inv_i = first.beta_after >= alpha - make_rat(1, lcum.at(1));
    trace.steps.push_back(first);

    int stall = 0;
    bool exhausted = false;
    for (int k = 2; k <= trunc; ++k) {
        GreedyStep step;
        step.k = k;
        const BigRat lk_inv = make_rat(1, lcum.at(k));
        BigRat ratio = make_rat(greedy_sub_cumulative(engine, mode, p, k), lcum.at(k));
        step.beta_before = ratio;
        if (ratio <= alpha) {
            stall = 0;
            step.checkpoint = true;
            const BigRat target_lo = alpha - lk_inv;
            if (ratio < target_lo) {
                for (int idx : hall.at_weight(k)) {
                    AlgebraElement cand = hall.to_algebra(idx, p, trunc);
                    if (engine.in_span(cand))
                        continue;
                    engine.add_generator(cand);
                    const std::string name = hall.print(idx);
                    trace.final_gens.push_back(name);
                    trace.final_gen_weights.push_back(k);
                    step.added.push_back(name);
                    ratio = make_rat(greedy_sub_cumulative(engine, mode, p, k), lcum.at(k));
                    if (ratio >= target_lo)
                        break;
                }
                if (ratio < target_lo)
                    exhausted = true; // cannot happen for alpha <= 1; flagged, not hidden
            }
        } else {
            step.checkpoint = false;
            if (++stall >= trunc)
                throw ResourceError("greedy construction stalled for " + std::to_string(stall) +
                                    " consecutive weights at k=" + std::to_string(k) +
                                    " (beta stays above alpha)");
        }
        step.beta_after = ratio;
        step.inv_i = ratio >= alpha - lk_inv;
        trace.steps.push_back(step);
    }

    GreedyResult result;
    result.report = density_report(greedy_sub_dims(engine, mode, p, trunc), ambient);
    result.report.alpha = alpha;

    // Freeness audit: the generating set should generate freely, so the
    // closure dims must match the generalized Witt dims of its weight
    // profile.  A mismatch is flagged, never silent.
    std::map<int, long long> profile_counts;
    for (int w : trace.final_gen_weights)
        ++profile_counts[w];
    if (profile_counts.empty()) {
        trace.freeness_verified = true;
        for (int n = 1; n <= trunc; ++n)
            if (engine.dim_at(n) != 0)
                trace.freeness_verified = false;
    } else {
        const DimSeq expected = free_graded_lie_dims(GenProfile(profile_counts), trunc);
        trace.freeness_verified = engine.dims() == expected;
    }
    if (!trace.freeness_verified)
        result.report.flags["non_free_generating_set"] = "true";
    if (exhausted)
        result.report.flags["greedy_exhausted"] = "true";

    result.trace = std::move(trace);
    return result;
}

DensityReport ideal_density_report(const std::vector<LieExpr>& gens, int d, int p, int trunc,
                                   bool restricted, ClosureLimits limits) {
    bool any_nonzero = false;
    for (const auto& g : gens)
        if (!to_associative(g, d, p, trunc).is_zero())
            any_nonzero = true;
    if (!any_nonzero)
        throw ValidationError("ideal density requires at least one nonzero generator");
    const ClosureMode mode = restricted ? ClosureMode::RestrictedIdeal : ClosureMode::LieIdeal;
    SubalgebraBasis basis = closure(gens, d, p, trunc, mode, limits);
    const DimSeq ambient = restricted ? restricted_dims(d, p, trunc) : witt_dims(d, trunc);
    DensityReport r = density_report(basis.dims(), ambient);
    r.flags["expected_trend"] = "1";
    return r;
}

DensityReport fg_density_report(const GenProfile& profile, const DimSeq& ambient) {
    const int trunc = ambient.max_degree();
    const DimSeq sub = free_graded_lie_dims(profile, trunc);
    DensityReport r = density_report(sub, ambient);
    GrowthRoot root = dominant_root(profile, 1e-9);
    r.flags["lambda"] = std::to_string(root.lambda);
    if (trunc >= 2 && ambient.at(trunc - 1) > 0) {
        const double growth = rat_f64(make_rat(ambient.at(trunc), ambient.at(trunc - 1)));
        r.flags["ambient_growth_estimate"] = std::to_string(growth);
        r.flags["subexponential_to_ambient"] = root.lambda < growth ? "true" : "false";
    }
    return r;
}

long long codim_growth_bound(long long t, int p, long long n) {
    if (t < 0)
        throw ValidationError("codimension must be >= 0");
    if (n < 1)
        throw ValidationError("degree must be >= 1");
    if (p < 2)
        throw ValidationError("p must be >= 2");
    long long log_floor = 0;
    long long power = 1;
    while (power <= n / p) {
        power *= p;
        ++log_floor;
    }
    return t * log_floor;
}

namespace {
nlohmann::ordered_json rat_json(const BigRat& q) {
    return rat_str(q);
}
} // namespace

nlohmann::ordered_json report_json(const DensityReport& report) {
    nlohmann::ordered_json j;
    if (report.alpha) {
        j["alpha"] = rat_str(*report.alpha);
        j["alpha_f64"] = rat_f64(*report.alpha);
    }
    j["horizon"] = report.horizon;
    auto dims_json = [](const DimSeq& s) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (int n = 1; n <= s.max_degree(); ++n)
            arr.push_back(s.at(n).get_str());
        return arr;
    };
    j["sub_dims"] = dims_json(report.sub_dims);
    j["amb_dims"] = dims_json(report.amb_dims);
    nlohmann::ordered_json ratios = nlohmann::ordered_json::array();
    nlohmann::ordered_json ratios_f64 = nlohmann::ordered_json::array();
    for (const auto& q : report.ratios) {
        ratios.push_back(rat_json(q));
        ratios_f64.push_back(rat_f64(q));
    }
    j["ratios"] = ratios;
    j["ratios_f64"] = ratios_f64;
    nlohmann::ordered_json rmin = nlohmann::ordered_json::array();
    for (const auto& q : report.running_min)
        rmin.push_back(rat_json(q));
    j["running_min"] = rmin;
    j["flags"] = report.flags;
    return j;
}

nlohmann::ordered_json trace_json(const GreedyTrace& trace) {
    nlohmann::ordered_json j;
    j["alpha"] = rat_str(trace.alpha);
    j["alpha_f64"] = rat_f64(trace.alpha);
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : trace.steps) {
        nlohmann::ordered_json js;
        js["k"] = s.k;
        js["added"] = s.added;
        js["beta_before"] = rat_str(s.beta_before);
        js["beta_before_f64"] = rat_f64(s.beta_before);
        js["beta_after"] = rat_str(s.beta_after);
        js["beta_after_f64"] = rat_f64(s.beta_after);
        js["inv_i"] = s.inv_i;
        js["checkpoint"] = s.checkpoint;
        steps.push_back(js);
    }
    j["steps"] = steps;
    j["final_gens"] = trace.final_gens;
    j["freeness_verified"] = trace.freeness_verified;
    return j;
}

} // namespace liedense
