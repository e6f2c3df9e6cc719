#include "liedense/propp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace liedense {

FiltrationGrowth frattini_growth_free(int d, int p, int levels, long long bit_budget) {
    if (d < 2)
        throw ValidationError("frattini_growth_free requires d >= 2");
    require_prime(p);
    if (levels < 1)
        throw ValidationError("levels must be >= 1");
    if (bit_budget < 8)
        throw ValidationError("bit budget too small");

    FiltrationGrowth g;
    g.p = p;
    g.kind = FiltrationKind::Frattini;

    const double log2p = std::log2(static_cast<double>(p));
    BigInt rank(d);
    BigInt log_index(0);
    bool rank_exact = true;
    double rank_log = std::log(static_cast<double>(d)) / std::log(static_cast<double>(p));
    bool log_exact = true;
    double log_log = 0.0; // log_p of L_i once inexact; L starts at 0

    for (int i = 0; i < levels; ++i) {
        GrowthLevel lv;
        lv.level = i;
        lv.rank_exact = rank_exact;
        lv.log_index_exact = log_exact;
        if (rank_exact) {
            lv.rank = rank;
            lv.rank_log_p = mpz_sizeinbase(rank.get_mpz_t(), 2) / log2p;
        } else {
            lv.rank_log_p = rank_log;
        }
        if (log_exact) {
            lv.log_index = log_index;
        } else {
            lv.log_index_log_p = log_log;
        }
        g.levels.push_back(lv);
        if (i + 1 == levels)
            break;

        // Advance: d_{i+1} = (d_i - 1) p^{d_i} + 1, L_{i+1} = L_i + d_i.
        if (log_exact) {
            if (rank_exact)
                log_index += rank;
            else
                log_exact = false;
        }
        if (!log_exact)
            log_log = rank_exact ? mpz_sizeinbase(rank.get_mpz_t(), 2) / log2p : rank_log;

        if (rank_exact) {
            const double needed_bits = rank.get_d() * log2p;
            if (rank >= 0 && needed_bits <= static_cast<double>(bit_budget) &&
                mpz_fits_ulong_p(rank.get_mpz_t())) {
                BigInt power;
                mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p),
                              rank.get_ui());
                rank = (rank - 1) * power + 1;
            } else {
                // log_p(d_{i+1}) ~= d_i + log_p(d_i - 1)
                rank_log = rank.get_d() +
                           std::log(rank.get_d() - 1.0) / std::log(static_cast<double>(p));
                rank_exact = false;
            }
        } else {
            // d_i is only known on the log_p scale; the next rank is
            // p^(that), far beyond any useful double.
            rank_log = std::numeric_limits<double>::infinity();
        }
    }
    return g;
}

BigRat rank_gradient_free(int d) {
    if (d < 1)
        throw ValidationError("rank_gradient_free requires d >= 1");
    return BigRat(d - 1);
}

bool rank_gradient_chain_ok(const FiltrationGrowth& growth, int d) {
    BigInt power;
    for (const auto& lv : growth.levels) {
        if (!lv.rank_exact || !lv.log_index_exact)
            break;
        if (!mpz_fits_ulong_p(lv.log_index.get_mpz_t()))
            break;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(growth.p),
                      lv.log_index.get_ui());
        if (lv.rank - 1 != BigInt(d - 1) * power)
            return false;
    }
    return true;
}

bool schreier_consistent(const FiltrationGrowth& growth) {
    BigInt power;
    for (std::size_t i = 0; i + 1 < growth.levels.size(); ++i) {
        const auto& a = growth.levels[i];
        const auto& b = growth.levels[i + 1];
        if (!a.rank_exact || !b.rank_exact)
            break;
        if (!mpz_fits_ulong_p(a.rank.get_mpz_t()))
            break;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(growth.p), a.rank.get_ui());
        if (b.rank - 1 != (a.rank - 1) * power)
            return false;
    }
    return true;
}

FiltrationGrowth zassenhaus_log_indices(const DimSeq& lie_dims, int levels, int p) {
    if (levels < 1)
        throw ValidationError("levels must be >= 1");
    if (lie_dims.max_degree() < levels)
        throw ValidationError("lie dimension horizon " + std::to_string(lie_dims.max_degree()) +
                              " is shorter than the requested " + std::to_string(levels) +
                              " levels");
    FiltrationGrowth g;
    g.p = p;
    g.kind = FiltrationKind::Zassenhaus;
    BigInt acc(0);
    for (int n = 1; n <= levels; ++n) {
        acc += lie_dims.at(n);
        GrowthLevel lv;
        lv.level = n;
        lv.rank = lie_dims.at(n);
        lv.log_index = acc;
        g.levels.push_back(lv);
    }
    return g;
}

ProductSpec parse_product_spec(const std::string& factors, int p) {
    ProductSpec spec;
    spec.p = p;
    std::stringstream ss(factors);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::vector<std::string> parts;
        std::stringstream fs(item);
        std::string piece;
        while (std::getline(fs, piece, ':'))
            parts.push_back(piece);
        ProductFactor f;
        if (parts.empty())
            throw ValidationError("empty factor in product spec");
        if (parts[0] == "free") {
            if (parts.size() != 2)
                throw ValidationError("free factor must look like free:<d>");
            f.kind = ProductFactor::Kind::Free;
            f.d = std::stoi(parts[1]);
        } else if (parts[0] == "dem" || parts[0] == "demushkin") {
            if (parts.size() != 4)
                throw ValidationError("Demushkin factor must look like dem:<d>:<case>:<f>");
            f.kind = ProductFactor::Kind::Demushkin;
            f.d = std::stoi(parts[1]);
            f.case_tag = parse_case(parts[2]);
            f.f = FExp::parse(parts[3]);
            make_presentation(f.d, p, f.f, f.case_tag); // validate
        } else {
            throw ValidationError("unknown factor kind: " + parts[0]);
        }
        spec.factors.push_back(f);
    }
    if (spec.factors.empty())
        throw ValidationError("product spec must name at least one factor");
    return spec;
}

DensityReport product_hdim_estimate(const ProductSpec& spec, const SubgroupSelection& sel,
                                    FiltrationKind kind, int levels, long long bit_budget) {
    if (spec.factors.empty())
        throw ValidationError("product spec must name at least one factor");
    if (sel.choices.size() != spec.factors.size())
        throw ValidationError("selection size must match the factor count");
    if (levels < 1)
        throw ValidationError("levels must be >= 1");

    // Per-factor per-level log-index increments (frattini: d_i feeding
    // L_{i+1}; zassenhaus: layer dims).  Exact prefix only.
    std::vector<std::vector<BigInt>> increments(spec.factors.size());
    int exact_levels = levels;
    for (std::size_t j = 0; j < spec.factors.size(); ++j) {
        const auto& f = spec.factors[j];
        if (kind == FiltrationKind::Frattini) {
            if (f.kind != ProductFactor::Kind::Free)
                throw ValidationError(
                    "exact Frattini growth is only available for free factors; "
                    "use the Zassenhaus mode for Demushkin factors");
            FiltrationGrowth g = frattini_growth_free(f.d, spec.p, levels + 1, bit_budget);
            for (int i = 1; i <= levels; ++i) {
                const auto& lv = g.levels[static_cast<std::size_t>(i)];
                if (!lv.log_index_exact) {
                    exact_levels = std::min(exact_levels, i - 1);
                    break;
                }
                const auto& prev = g.levels[static_cast<std::size_t>(i - 1)];
                increments[j].push_back(lv.log_index - prev.log_index);
            }
        } else {
            DimSeq dims = f.kind == ProductFactor::Kind::Free
                              ? restricted_dims(f.d, spec.p, levels)
                              : demushkin_lie_dims(f.d, spec.p, levels);
            for (int i = 1; i <= levels; ++i)
                increments[j].push_back(dims.at(i));
        }
    }

    DensityReport r;
    if (exact_levels < levels)
        r.flags["saturated_from_level"] = std::to_string(exact_levels + 1);
    r.horizon = exact_levels;
    r.sub_dims = DimSeq(exact_levels);
    r.amb_dims = DimSeq(exact_levels);
    for (int i = 1; i <= exact_levels; ++i) {
        BigInt selected(0), total(0);
        for (std::size_t j = 0; j < spec.factors.size(); ++j) {
            const BigInt& inc = increments[j][static_cast<std::size_t>(i - 1)];
            total += inc;
            const auto& choice = sel.choices[j];
            switch (choice.kind) {
            case SubgroupSelection::Choice::Kind::Full:
                selected += inc;
                break;
            case SubgroupSelection::Choice::Kind::Trivial:
                break;
            case SubgroupSelection::Choice::Kind::Custom: {
                if (choice.custom_increments.max_degree() < i)
                    throw ValidationError("custom log-index sequence for factor " +
                                          std::to_string(j + 1) + " is shorter than " +
                                          std::to_string(exact_levels) + " levels");
                const BigInt& c = choice.custom_increments.at(i);
                if (c > inc)
                    throw ValidationError("custom log-index sequence for factor " +
                                          std::to_string(j + 1) +
                                          " exceeds the factor growth at level " +
                                          std::to_string(i));
                selected += c;
                break;
            }
            }
        }
        r.sub_dims.set(i, selected);
        r.amb_dims.set(i, total);
    }
    DensityReport ratios = density_report(r.sub_dims, r.amb_dims);
    ratios.flags.insert(r.flags.begin(), r.flags.end());
    return ratios;
}

std::vector<BigRat> normal_spectrum(const ProductSpec& spec,
                                    const std::optional<std::vector<BigRat>>& alphas) {
    const std::size_t r = spec.factors.size();
    if (r == 0)
        throw ValidationError("product spec must name at least one factor");
    if (r > 20)
        throw ValidationError("more than 20 factors is not supported");

    std::vector<BigRat> a;
    if (alphas) {
        if (alphas->size() != r)
            throw ValidationError("alphas length must equal the factor count");
        a = *alphas;
    } else {
        for (const auto& f : spec.factors)
            if (f.kind != ProductFactor::Kind::Free)
                throw ValidationError("omitting alphas requires an all-free product; "
                                      "supply per-factor alphas for Demushkin factors");
        int dmax = 0;
        for (const auto& f : spec.factors)
            dmax = std::max(dmax, f.d);
        long long t = 0;
        for (const auto& f : spec.factors)
            if (f.d == dmax)
                ++t;
        for (const auto& f : spec.factors)
            a.push_back(f.d == dmax ? make_rat(1, static_cast<long>(t)) : BigRat(0));
    }

    std::vector<BigRat> sums;
    sums.reserve(std::size_t(1) << r);
    for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
        BigRat acc(0);
        for (std::size_t j = 0; j < r; ++j)
            if (mask & (std::size_t(1) << j))
                acc += a[j];
        sums.push_back(acc);
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

} // namespace liedense
