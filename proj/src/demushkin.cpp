#include "liedense/demushkin.hpp"

namespace liedense {

std::string case_name(DemushkinCase c) {
    switch (c) {
    case DemushkinCase::GenericEven:
        return "genericEven";
    case DemushkinCase::OddP2:
        return "oddP2";
    case DemushkinCase::EvenP2a:
        return "evenP2a";
    case DemushkinCase::EvenP2b:
        return "evenP2b";
    }
    return {};
}

DemushkinCase parse_case(const std::string& name) {
    if (name == "genericEven" || name == "generic-even")
        return DemushkinCase::GenericEven;
    if (name == "oddP2" || name == "odd-p2")
        return DemushkinCase::OddP2;
    if (name == "evenP2a" || name == "even-p2a")
        return DemushkinCase::EvenP2a;
    if (name == "evenP2b" || name == "even-p2b")
        return DemushkinCase::EvenP2b;
    throw ValidationError("unknown case tag: " + name);
}

FExp FExp::parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "oo")
        return FExp::inf();
    try {
        return FExp::of(std::stoll(text));
    } catch (const std::exception&) {
        throw ValidationError("f must be a positive integer or 'inf': " + text);
    }
}

std::string FExp::str() const {
    return infinite ? "inf" : std::to_string(value);
}

namespace {

constexpr long long kMaxF = 4096; // relator exponents are materialized as decimals

std::string pow_str(int p, long long f) {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f));
    return v.get_str();
}

std::string commutator_chain(int from, int to) {
    std::string out;
    for (int i = from; i + 1 <= to; i += 2) {
        if (!out.empty())
            out += " ";
        out += "[x" + std::to_string(i) + ",x" + std::to_string(i + 1) + "]";
    }
    return out;
}

LieExpr bracket_sum(int p, int from, int to) {
    LieExpr acc = LieExpr::zero(p);
    for (int i = from; i + 1 <= to; i += 2)
        acc = acc + LieExpr::make_bracket(LieExpr::generator(p, i), LieExpr::generator(p, i + 1));
    return acc;
}

} // namespace

DemushkinPresentation make_presentation(int d, int p, FExp f, DemushkinCase case_tag) {
    if (d < 3)
        throw ValidationError("d >= 3 required");
    require_prime(p);
    if (!f.infinite && f.value < 1)
        throw ValidationError("finite f must be >= 1");
    if (!f.infinite && f.value > kMaxF)
        throw ValidationError("f larger than " + std::to_string(kMaxF) +
                              " cannot be materialized in the relator word");

    DemushkinPresentation pres;
    pres.d = d;
    pres.p = p;
    pres.f = f;
    pres.case_tag = case_tag;

    switch (case_tag) {
    case DemushkinCase::GenericEven: {
        if (d % 2 != 0)
            throw ValidationError("genericEven requires even d");
        if (p == 2 && !f.infinite && f.value == 1)
            throw ValidationError("p^f = 2 forbidden in the generic even case");
        std::string word = commutator_chain(1, d);
        if (f.infinite)
            pres.group_relator = word; // x1^{p^inf} = x1^0 drops out
        else
            pres.group_relator = "x1^" + pow_str(p, f.value) + " " + word;
        pres.graded_relator = bracket_sum(p, 1, d);
        break;
    }
    case DemushkinCase::OddP2: {
        if (d % 2 != 1)
            throw ValidationError("oddP2 requires odd d");
        if (p != 2)
            throw ValidationError("oddP2 requires p = 2");
        if (!f.infinite && f.value < 2)
            throw ValidationError("oddP2 requires f >= 2 (or infinite)");
        std::string word = commutator_chain(2, d);
        if (f.infinite)
            pres.group_relator = "x1^2 " + word;
        else
            pres.group_relator = "x1^2 x2^" + pow_str(2, f.value) + " " + word;
        pres.graded_relator =
            LieExpr::make_p_power(LieExpr::generator(p, 1)) + bracket_sum(p, 2, d);
        break;
    }
    case DemushkinCase::EvenP2a: {
        if (d % 2 != 0)
            throw ValidationError("evenP2a requires even d");
        if (p != 2)
            throw ValidationError("evenP2a requires p = 2");
        if (!f.infinite && f.value < 2)
            throw ValidationError("evenP2a requires f >= 2 (or infinite)");
        std::string word = commutator_chain(1, d);
        if (f.infinite)
            pres.group_relator = "x1^2 " + word;
        else {
            BigInt e;
            mpz_ui_pow_ui(e.get_mpz_t(), 2, static_cast<unsigned long>(f.value));
            e += 2;
            pres.group_relator = "x1^" + e.get_str() + " " + word;
        }
        pres.graded_relator =
            LieExpr::make_p_power(LieExpr::generator(p, 1)) + bracket_sum(p, 1, d);
        break;
    }
    case DemushkinCase::EvenP2b: {
        if (d % 2 != 0)
            throw ValidationError("evenP2b requires even d");
        if (p != 2)
            throw ValidationError("evenP2b requires p = 2");
        if (f.infinite)
            throw ValidationError("evenP2b requires finite f >= 2");
        if (f.value < 2)
            throw ValidationError("evenP2b requires f >= 2");
        pres.group_relator = "x1^2 [x1,x2] x3^" + pow_str(2, f.value) + " " +
                             commutator_chain(3, d);
        pres.graded_relator =
            LieExpr::make_p_power(LieExpr::generator(p, 1)) + bracket_sum(p, 1, d);
        break;
    }
    }
    return pres;
}

DimSeq enveloping_dims(int d, int max_degree) {
    if (d < 3)
        throw ValidationError("enveloping_dims requires d >= 3");
    DimSeq a(max_degree);
    BigInt prev2(1); // a_0
    BigInt prev1(d); // a_1
    if (max_degree >= 1)
        a.set(1, prev1);
    for (int n = 2; n <= max_degree; ++n) {
        BigInt cur = d * prev1 - prev2;
        a.set(n, cur);
        prev2 = prev1;
        prev1 = cur;
    }
    // Recurrence and series inverse are two routes to the same numbers.
    TruncSeries denom = TruncSeries::one(max_degree);
    if (max_degree >= 1)
        denom.set(1, BigRat(-d));
    if (max_degree >= 2)
        denom.set(2, BigRat(1));
    TruncSeries inv = series_inverse(denom);
    for (int n = 1; n <= max_degree; ++n) {
        if (inv[n] != BigRat(a.at(n)))
            throw std::logic_error("enveloping_dims: recurrence disagrees with series inverse at n=" +
                                   std::to_string(n));
    }
    return a;
}

DimSeq demushkin_lie_dims(int d, int p, int max_degree) {
    if (d < 3)
        throw ValidationError("demushkin_lie_dims requires d >= 3");
    require_prime(p);
    // s_n = (d-e)^n + e^n as exact integers.
    std::vector<BigInt> s(static_cast<std::size_t>(max_degree) + 1);
    s[0] = 2;
    if (max_degree >= 1)
        s[1] = d;
    for (int n = 2; n <= max_degree; ++n)
        s[static_cast<std::size_t>(n)] =
            d * s[static_cast<std::size_t>(n - 1)] - s[static_cast<std::size_t>(n - 2)];

    DimSeq w(max_degree);
    for (int n = 1; n <= max_degree; ++n) {
        BigInt acc(0);
        for (int m = 1; m <= n; ++m) {
            if (n % m != 0)
                continue;
            const int mu = moebius(static_cast<std::uint64_t>(n / m));
            if (mu != 0)
                acc += mu * s[static_cast<std::size_t>(m)];
        }
        if (acc % n != 0)
            throw std::logic_error("demushkin_lie_dims: w_" + std::to_string(n) +
                                   " is not an integer (d=" + std::to_string(d) + ")");
        acc /= n;
        if (acc < 0)
            throw std::logic_error("demushkin_lie_dims: w_" + std::to_string(n) + " is negative");
        w.set(n, acc);
    }
    return restricted_from_ordinary(w, p);
}

EpsilonPair epsilon(int d, int digits) {
    if (d < 3)
        throw ValidationError("epsilon requires d >= 3");
    if (digits < 1 || digits > 60)
        throw ValidationError("digits must lie in 1..60");
    // g(t) = t^2 - dt + 1; g(0) = 1 > 0 > g(1) = 2 - d.
    BigRat lo(0), hi(1);
    BigInt pow10(1);
    for (int i = 0; i < digits; ++i)
        pow10 *= 10;
    const BigRat tol = make_rat(1, pow10);
    BigRat mid;
    while (true) {
        mid = (lo + hi) / 2;
        const BigRat g = mid * mid - BigRat(d) * mid + 1;
        const BigRat residual = g < 0 ? BigRat(-g) : g; // |(d-e)e - 1| = |g(e)|
        if (residual < tol)
            break;
        if (g > 0)
            lo = mid;
        else
            hi = mid;
    }
    EpsilonPair out;
    out.epsilon = rat_f64(mid);
    out.d_minus_eps = static_cast<double>(d) - out.epsilon;
    out.certified_digits = digits;
    return out;
}

QuotientDims quotient_dims_bruteforce(const DemushkinPresentation& pres, int max_degree,
                                      ClosureLimits limits) {
    const int d = pres.d;
    const int p = pres.p;
    AlgebraElement r = to_associative(pres.graded_relator, d, p, max_degree);
    if (r.is_zero())
        throw ValidationError("relator must be nonzero homogeneous");
    if (!r.is_homogeneous() || r.min_degree() != 2)
        throw ValidationError("relator must be nonzero homogeneous of degree 2");

    QuotientDims out;
    out.pipeline = demushkin_lie_dims(d, p, max_degree);
    out.enveloping = enveloping_dims(d, max_degree);

    // Lie route: dims of R/J with J the restricted ideal closure of r.
    SubalgebraBasis ideal =
        closure({pres.graded_relator}, d, p, max_degree, ClosureMode::RestrictedIdeal, limits);
    out.lie_quotient = DimSeq(max_degree);
    const DimSeq ideal_dims = ideal.dims();
    for (int n = 1; n <= max_degree; ++n)
        out.lie_quotient.set(n, restricted_dim(d, p, n) - ideal_dims.at(n));

    // Associative route: two-sided ideal of the relator image, built
    // degree by degree as x_i * I + I * x_i.
    out.assoc_quotient = DimSeq(max_degree);
    AlgebraElement probe(d, p, max_degree);
    std::vector<AlgebraElement> gens_x;
    for (int i = 1; i <= d; ++i)
        gens_x.push_back(AlgebraElement::generator(d, p, max_degree, i));
    std::vector<AlgebraElement> current; // echelonized basis of I_n
    for (int n = 1; n <= max_degree; ++n) {
        if (probe.block_size(n) > limits.max_columns)
            throw ResourceError("degree " + std::to_string(n) + " needs " +
                                std::to_string(probe.block_size(n)) +
                                " columns, over the limit (use --force)");
        std::vector<AlgebraElement> candidates;
        if (n == 2)
            candidates.push_back(r);
        for (const auto& e : current) {
            for (const auto& x : gens_x) {
                candidates.push_back(mul(e, x));
                candidates.push_back(mul(x, e));
            }
        }
        RowEchelon ech(p, probe.block_size(n));
        std::vector<AlgebraElement> next;
        for (auto& c : candidates) {
            const FpVec* blk = c.block(n);
            if (!blk || blk->is_zero())
                continue;
            auto red = ech.reduce(*blk);
            if (!red)
                continue;
            AlgebraElement stored(d, p, max_degree);
            stored.mutable_block(n) = *red;
            ech.add_row(std::move(*red));
            next.push_back(std::move(stored));
        }
        current = std::move(next);
        BigInt full;
        mpz_ui_pow_ui(full.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(n));
        out.assoc_quotient.set(n, full - static_cast<long>(current.size()));
    }

    out.lie_matches_pipeline = true;
    out.assoc_matches_enveloping = true;
    for (int n = 1; n <= max_degree; ++n) {
        if (out.lie_quotient.at(n) != out.pipeline.at(n))
            out.lie_matches_pipeline = false;
        if (out.assoc_quotient.at(n) != out.enveloping.at(n))
            out.assoc_matches_enveloping = false;
    }
    return out;
}

DensityReport fg_subalgebra_density_profile(const GenProfile& profile, int d, int p,
                                            int max_degree) {
    const DimSeq ambient = demushkin_lie_dims(d, p, max_degree);
    if (profile.empty()) {
        DensityReport r = density_report(DimSeq(max_degree), ambient);
        r.flags["empty_profile"] = "true";
        return r;
    }
    const GrowthRoot root = dominant_root(profile, 1e-9);
    const EpsilonPair eps = epsilon(d, 12);
    // lambda = d - epsilon is impossible (t^2 - dt + 1 is irreducible
    // over Z), so a numeric comparison with a small margin is safe.
    if (root.lambda >= eps.d_minus_eps - 1e-6)
        throw ValidationError("profile growth root " + std::to_string(root.lambda) +
                              " is not below d - epsilon = " + std::to_string(eps.d_minus_eps) +
                              "; the profile cannot embed freely");
    const DimSeq sub = restricted_from_ordinary(free_graded_lie_dims(profile, max_degree), p);
    DensityReport r = density_report(sub, ambient);
    r.flags["lambda"] = std::to_string(root.lambda);
    r.flags["d_minus_epsilon"] = std::to_string(eps.d_minus_eps);
    bool decreasing = true;
    for (std::size_t i = 1; i + 1 < r.ratios.size(); ++i)
        if (r.ratios[i + 1] > r.ratios[i])
            decreasing = false;
    r.flags["trend_decreasing_from_degree_2"] = decreasing ? "true" : "false";
    return r;
}

nlohmann::ordered_json catalog_json(const DemushkinPresentation& pres) {
    nlohmann::ordered_json j;
    j["d"] = pres.d;
    j["p"] = pres.p;
    if (pres.f.infinite)
        j["f"] = "inf";
    else
        j["f"] = pres.f.value;
    j["case"] = case_name(pres.case_tag);
    j["group_relator"] = pres.group_relator;
    j["graded_relator"] = pres.graded_relator.str();
    return j;
}

} // namespace liedense
