// liedense: graded Lie dimension and density pipelines with
// reproducible CSV/JSON output.  Every subcommand is deterministic:
// identical inputs produce byte-identical output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "liedense/demushkin.hpp"
#include "liedense/density.hpp"
#include "liedense/hallbasis.hpp"
#include "liedense/numkit.hpp"
#include "liedense/propp.hpp"
#include "liedense/witt.hpp"

using namespace liedense;

namespace {

struct Output {
    std::string format = "csv"; // csv | json
    std::string path;           // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw ValidationError("cannot open output file: " + path);
        out << text;
    }
};

std::string fmt_f64(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string dims_csv(const DimSeq& dims, const std::string& value_header, int from = 1) {
    std::string out = "n," + value_header + "\n";
    for (int n = from; n <= dims.max_degree(); ++n)
        out += std::to_string(n) + "," + dims.at(n).get_str() + "\n";
    return out;
}

nlohmann::ordered_json dims_json_obj(const DimSeq& dims) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int n = 1; n <= dims.max_degree(); ++n)
        arr.push_back(dims.at(n).get_str());
    return arr;
}

std::string report_csv(const DensityReport& r) {
    std::string out = "n,sub_dim,amb_dim,ratio,ratio_f64,running_min,running_min_f64\n";
    for (int n = 1; n <= r.horizon; ++n) {
        const auto& q = r.ratios[static_cast<std::size_t>(n - 1)];
        const auto& m = r.running_min[static_cast<std::size_t>(n - 1)];
        out += std::to_string(n) + "," + r.sub_dims.at(n).get_str() + "," +
               r.amb_dims.at(n).get_str() + "," + rat_str(q) + "," + fmt_f64(rat_f64(q)) + "," +
               rat_str(m) + "," + fmt_f64(rat_f64(m)) + "\n";
    }
    return out;
}

std::string ratio_levels_csv(const DensityReport& r) {
    // level,num,den,ratio_f64 over the exact levels
    std::string out = "level,num,den,ratio_f64\n";
    for (int n = 1; n <= r.horizon; ++n) {
        const auto& q = r.ratios[static_cast<std::size_t>(n - 1)];
        out += std::to_string(n) + "," + q.get_num().get_str() + "," + q.get_den().get_str() +
               "," + fmt_f64(rat_f64(q)) + "\n";
    }
    return out;
}

std::string greedy_csv(const GreedyResult& res) {
    std::string out =
        "k,added,beta_before,beta_before_f64,beta_after,beta_after_f64,inv_i,checkpoint\n";
    for (const auto& s : res.trace.steps) {
        std::string added;
        for (std::size_t i = 0; i < s.added.size(); ++i) {
            if (i)
                added += "|";
            added += s.added[i];
        }
        out += std::to_string(s.k) + ",\"" + added + "\"," + rat_str(s.beta_before) + "," +
               fmt_f64(rat_f64(s.beta_before)) + "," + rat_str(s.beta_after) + "," +
               fmt_f64(rat_f64(s.beta_after)) + "," + (s.inv_i ? "1" : "0") + "," +
               (s.checkpoint ? "1" : "0") + "\n";
    }
    out += "\n";
    out += report_csv(res.report);
    return out;
}

std::string growth_csv(const FiltrationGrowth& g) {
    std::string out = "level,d_i,log_index,saturated\n";
    for (const auto& lv : g.levels) {
        const bool saturated = !lv.rank_exact || !lv.log_index_exact;
        std::string rank = lv.rank_exact ? lv.rank.get_str() : "p^" + fmt_f64(lv.rank_log_p);
        std::string li =
            lv.log_index_exact ? lv.log_index.get_str() : "p^" + fmt_f64(lv.log_index_log_p);
        out += std::to_string(lv.level) + "," + rank + "," + li + "," + (saturated ? "1" : "0") +
               "\n";
    }
    return out;
}

nlohmann::ordered_json growth_json(const FiltrationGrowth& g) {
    nlohmann::ordered_json j;
    j["p"] = g.p;
    j["kind"] = g.kind == FiltrationKind::Frattini ? "frattini" : "zassenhaus";
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    for (const auto& lv : g.levels) {
        nlohmann::ordered_json e;
        e["level"] = lv.level;
        e["saturated"] = !lv.rank_exact || !lv.log_index_exact;
        if (lv.rank_exact)
            e["d_i"] = lv.rank.get_str();
        else
            e["d_i_log_p"] = lv.rank_log_p;
        if (lv.log_index_exact)
            e["log_index"] = lv.log_index.get_str();
        else
            e["log_index_log_p"] = lv.log_index_log_p;
        levels.push_back(e);
    }
    j["levels"] = levels;
    return j;
}

std::vector<LieExpr> collect_gens(const std::string& inline_gens, const std::string& gens_file,
                                  int d, int p) {
    std::vector<std::string> texts;
    if (!inline_gens.empty()) {
        std::stringstream ss(inline_gens);
        std::string item;
        while (std::getline(ss, item, ';'))
            if (item.find_first_not_of(" \t") != std::string::npos)
                texts.push_back(item);
    }
    if (!gens_file.empty()) {
        std::ifstream in(gens_file);
        if (!in)
            throw ValidationError("cannot open generator file: " + gens_file);
        nlohmann::json j;
        in >> j;
        if (!j.is_array())
            throw ValidationError("generator file must hold a JSON array of expression strings");
        for (const auto& e : j)
            texts.push_back(e.get<std::string>());
    }
    if (texts.empty())
        throw ValidationError("no generators given (use --gens or --gens-file)");
    std::vector<LieExpr> out;
    out.reserve(texts.size());
    for (const auto& t : texts)
        out.push_back(parse_expr(t, d, p));
    return out;
}

SubgroupSelection parse_selection(const std::string& text, std::size_t factors, int levels) {
    SubgroupSelection sel;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        SubgroupSelection::Choice c;
        if (item == "full") {
            c.kind = SubgroupSelection::Choice::Kind::Full;
        } else if (item == "trivial") {
            c.kind = SubgroupSelection::Choice::Kind::Trivial;
        } else if (item.rfind("custom:", 0) == 0) {
            c.kind = SubgroupSelection::Choice::Kind::Custom;
            std::vector<BigInt> vals;
            std::stringstream vs(item.substr(7));
            std::string v;
            while (std::getline(vs, v, '+'))
                vals.emplace_back(v);
            c.custom_increments = DimSeq(std::max<int>(levels, static_cast<int>(vals.size())));
            for (std::size_t i = 0; i < vals.size(); ++i)
                c.custom_increments.set(static_cast<int>(i + 1), vals[i]);
        } else {
            throw ValidationError("selection entries are full, trivial, or custom:<i1+i2+...>");
        }
        sel.choices.push_back(std::move(c));
    }
    if (sel.choices.size() != factors)
        throw ValidationError("selection must name one choice per factor");
    return sel;
}

std::optional<std::vector<BigRat>> parse_alphas(const std::string& text) {
    if (text.empty())
        return std::nullopt;
    std::vector<BigRat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_rat(item));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded Lie algebra dimensions, densities, and pro-p filtration growth"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Output output;
    bool force = false;
    app.add_option("--format", output.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", output.path, "write output to this file instead of stdout");
    app.add_flag("--force", force, "lift the default column guard (2^20) to 2^26");

    std::string result;

    // ---- witt ----
    int w_d = 2, w_maxn = 10;
    auto* cmd_witt = app.add_subcommand("witt", "Witt dimensions of a free Lie algebra");
    cmd_witt->add_option("--d", w_d, "rank")->required();
    cmd_witt->add_option("--max-n", w_maxn, "max degree")->required();
    cmd_witt->callback([&] {
        DimSeq dims = witt_dims(w_d, w_maxn);
        if (output.format == "csv")
            result = dims_csv(dims, "dim");
        else {
            nlohmann::ordered_json j;
            j["d"] = w_d;
            j["dims"] = dims_json_obj(dims);
            result = j.dump() + "\n";
        }
    });

    // ---- restricted ----
    int r_d = 2, r_p = 2, r_maxn = 10;
    auto* cmd_res = app.add_subcommand("restricted", "dimensions of a free restricted Lie algebra");
    cmd_res->add_option("--d", r_d, "rank")->required();
    cmd_res->add_option("--p", r_p, "prime")->capture_default_str();
    cmd_res->add_option("--max-n", r_maxn, "max degree")->required();
    cmd_res->callback([&] {
        DimSeq dims = restricted_dims(r_d, r_p, r_maxn);
        if (output.format == "csv")
            result = dims_csv(dims, "dim");
        else {
            nlohmann::ordered_json j;
            j["d"] = r_d;
            j["p"] = r_p;
            j["dims"] = dims_json_obj(dims);
            result = j.dump() + "\n";
        }
    });

    // ---- genwitt ----
    std::string g_profile;
    int g_maxn = 10;
    auto* cmd_gen = app.add_subcommand("genwitt", "dimensions of a free graded Lie algebra");
    cmd_gen->add_option("--gens", g_profile, "generator profile, e.g. 2:1,3:2")->required();
    cmd_gen->add_option("--max-n", g_maxn, "max degree")->required();
    cmd_gen->callback([&] {
        DimSeq dims = free_graded_lie_dims(GenProfile::parse(g_profile), g_maxn);
        if (output.format == "csv")
            result = dims_csv(dims, "w");
        else {
            nlohmann::ordered_json j;
            j["profile"] = g_profile;
            j["w"] = dims_json_obj(dims);
            result = j.dump() + "\n";
        }
    });

    // ---- demushkin ----
    auto* cmd_dem = app.add_subcommand("demushkin", "one-relator quotient pipelines");
    cmd_dem->require_subcommand(1);
    int dm_d = 4, dm_p = 2, dm_maxn = 5;
    std::string dm_f = "1", dm_case = "genericEven";

    auto* dem_dims = cmd_dem->add_subcommand("dims", "graded quotient dimensions c_n");
    dem_dims->add_option("--d", dm_d)->required();
    dem_dims->add_option("--p", dm_p)->capture_default_str();
    dem_dims->add_option("--max-n", dm_maxn)->required();
    dem_dims->callback([&] {
        DimSeq dims = demushkin_lie_dims(dm_d, dm_p, dm_maxn);
        if (output.format == "csv")
            result = dims_csv(dims, "dim");
        else {
            nlohmann::ordered_json j;
            j["d"] = dm_d;
            j["p"] = dm_p;
            j["dims"] = dims_json_obj(dims);
            result = j.dump() + "\n";
        }
    });

    auto* dem_env = cmd_dem->add_subcommand("enveloping", "enveloping algebra dimensions a_n");
    dem_env->add_option("--d", dm_d)->required();
    dem_env->add_option("--max-n", dm_maxn)->required();
    dem_env->callback([&] {
        DimSeq dims = enveloping_dims(dm_d, dm_maxn);
        if (output.format == "csv") {
            result = "n,dim\n0,1\n";
            for (int n = 1; n <= dims.max_degree(); ++n)
                result += std::to_string(n) + "," + dims.at(n).get_str() + "\n";
        } else {
            nlohmann::ordered_json j;
            j["d"] = dm_d;
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            arr.push_back("1");
            for (int n = 1; n <= dims.max_degree(); ++n)
                arr.push_back(dims.at(n).get_str());
            j["dims"] = arr;
            result = j.dump() + "\n";
        }
    });

    auto* dem_cat = cmd_dem->add_subcommand("catalog", "presentation catalog entry (JSON)");
    dem_cat->add_option("--d", dm_d)->required();
    dem_cat->add_option("--p", dm_p)->capture_default_str();
    dem_cat->add_option("--f", dm_f, "positive integer or inf")->capture_default_str();
    dem_cat->add_option("--case", dm_case, "genericEven|oddP2|evenP2a|evenP2b")
        ->capture_default_str();
    dem_cat->callback([&] {
        auto pres = make_presentation(dm_d, dm_p, FExp::parse(dm_f), parse_case(dm_case));
        result = catalog_json(pres).dump() + "\n";
    });

    auto* dem_verify =
        cmd_dem->add_subcommand("verify", "brute-force quotient dims vs the exact pipeline");
    dem_verify->add_option("--d", dm_d)->required();
    dem_verify->add_option("--p", dm_p)->capture_default_str();
    dem_verify->add_option("--f", dm_f)->capture_default_str();
    dem_verify->add_option("--case", dm_case)->capture_default_str();
    dem_verify->add_option("--max-n", dm_maxn)->required();
    dem_verify->callback([&] {
        auto pres = make_presentation(dm_d, dm_p, FExp::parse(dm_f), parse_case(dm_case));
        ClosureLimits limits;
        if (force)
            limits.max_columns = std::size_t(1) << 26;
        QuotientDims q = quotient_dims_bruteforce(pres, dm_maxn, limits);
        if (output.format == "csv") {
            result = "n,lie_quotient,pipeline,assoc_quotient,enveloping\n";
            for (int n = 1; n <= dm_maxn; ++n)
                result += std::to_string(n) + "," + q.lie_quotient.at(n).get_str() + "," +
                          q.pipeline.at(n).get_str() + "," + q.assoc_quotient.at(n).get_str() +
                          "," + q.enveloping.at(n).get_str() + "\n";
        } else {
            nlohmann::ordered_json j;
            j["lie_quotient"] = dims_json_obj(q.lie_quotient);
            j["pipeline"] = dims_json_obj(q.pipeline);
            j["assoc_quotient"] = dims_json_obj(q.assoc_quotient);
            j["enveloping"] = dims_json_obj(q.enveloping);
            j["lie_matches_pipeline"] = q.lie_matches_pipeline;
            j["assoc_matches_enveloping"] = q.assoc_matches_enveloping;
            result = j.dump() + "\n";
        }
    });

    // ---- oracle ----
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force associative-algebra oracle");
    cmd_oracle->require_subcommand(1);
    int o_d = 2, o_p = 2, o_maxn = 8;
    std::string o_mode = "lie", o_gens, o_gens_file;

    auto* o_dims = cmd_oracle->add_subcommand("lie-dims", "closure dims of the full generator set");
    o_dims->add_option("--d", o_d)->required();
    o_dims->add_option("--p", o_p)->capture_default_str();
    o_dims->add_option("--max-n", o_maxn)->required();
    o_dims->add_option("--mode", o_mode, "lie|restricted")->capture_default_str();
    o_dims->callback([&] {
        ClosureLimits limits;
        if (force)
            limits.max_columns = std::size_t(1) << 26;
        std::vector<LieExpr> gens;
        for (int i = 1; i <= o_d; ++i)
            gens.push_back(LieExpr::generator(o_p, i));
        SubalgebraBasis basis = closure(gens, o_d, o_p, o_maxn, parse_mode(o_mode), limits);
        result = output.format == "csv"
                     ? dims_csv(basis.dims(), "dim")
                     : nlohmann::ordered_json{{"dims", dims_json_obj(basis.dims())}}.dump() + "\n";
    });

    auto* o_clo = cmd_oracle->add_subcommand("closure", "closure dims of given generators");
    o_clo->add_option("--d", o_d)->required();
    o_clo->add_option("--p", o_p)->capture_default_str();
    o_clo->add_option("--max-n", o_maxn)->required();
    o_clo->add_option("--mode", o_mode, "lie|restricted|lie-ideal|restricted-ideal")
        ->capture_default_str();
    o_clo->add_option("--gens", o_gens, "semicolon-separated expressions");
    o_clo->add_option("--gens-file", o_gens_file, "JSON array of expression strings");
    o_clo->callback([&] {
        ClosureLimits limits;
        if (force)
            limits.max_columns = std::size_t(1) << 26;
        auto gens = collect_gens(o_gens, o_gens_file, o_d, o_p);
        SubalgebraBasis basis = closure(gens, o_d, o_p, o_maxn, parse_mode(o_mode), limits);
        if (output.format == "csv")
            result = dims_csv(basis.dims(), "dim");
        else {
            nlohmann::ordered_json j;
            j["dims"] = dims_json_obj(basis.dims());
            j["stable"] = basis.stable;
            result = j.dump() + "\n";
        }
    });

    auto* o_grd = cmd_oracle->add_subcommand(
        "gradedify", "leading-term dims of a possibly inhomogeneous generating set");
    o_grd->add_option("--d", o_d)->required();
    o_grd->add_option("--p", o_p)->capture_default_str();
    o_grd->add_option("--max-n", o_maxn)->required();
    o_grd->add_option("--mode", o_mode)->capture_default_str();
    o_grd->add_option("--gens", o_gens);
    o_grd->add_option("--gens-file", o_gens_file);
    o_grd->callback([&] {
        ClosureLimits limits;
        if (force)
            limits.max_columns = std::size_t(1) << 26;
        auto gens = collect_gens(o_gens, o_gens_file, o_d, o_p);
        GradedifyReport rep = gradedify(gens, o_d, o_p, o_maxn, parse_mode(o_mode), limits);
        if (output.format == "csv") {
            result = "n,dim,certified\n";
            for (int n = 1; n <= rep.leading_dims.max_degree(); ++n)
                result += std::to_string(n) + "," + rep.leading_dims.at(n).get_str() + "," +
                          (n <= rep.trust_horizon ? "1" : "0") + "\n";
        } else {
            nlohmann::ordered_json j;
            j["dims"] = dims_json_obj(rep.leading_dims);
            j["trust_horizon"] = rep.trust_horizon;
            result = j.dump() + "\n";
        }
    });

    // ---- density ----
    auto* cmd_density = app.add_subcommand("density", "density reports and the greedy construction");
    cmd_density->require_subcommand(1);
    std::string dn_alpha = "1/2", dn_mode = "lie", dn_gens, dn_gens_file, dn_profile;
    std::string dn_sub, dn_amb;
    int dn_d = 2, dn_p = 2, dn_maxn = 10;
    bool dn_restricted = false;

    auto* dn_greedy =
        cmd_density->add_subcommand("greedy", "greedy subalgebra with prescribed density");
    dn_greedy->add_option("--alpha", dn_alpha, "target in [0,1], rational a/b or decimal")
        ->required();
    dn_greedy->add_option("--d", dn_d)->required();
    dn_greedy->add_option("--p", dn_p)->capture_default_str();
    dn_greedy->add_option("--max-n", dn_maxn)->required();
    dn_greedy->add_option("--mode", dn_mode, "lie|restricted")->capture_default_str();
    dn_greedy->callback([&] {
        ClosureLimits limits;
        if (force)
            limits.max_columns = std::size_t(1) << 26;
        GreedyMode mode;
        if (dn_mode == "lie")
            mode = GreedyMode::Lie;
        else if (dn_mode == "restricted")
            mode = GreedyMode::Restricted;
        else
            throw ValidationError("greedy mode must be lie or restricted");
        GreedyResult res = greedy_construct(parse_rat(dn_alpha), dn_d, dn_p, dn_maxn, mode, limits);
        if (output.format == "csv")
            result = greedy_csv(res);
        else {
            nlohmann::ordered_json j;
            j["trace"] = trace_json(res.trace);
            j["report"] = report_json(res.report);
            result = j.dump() + "\n";
        }
    });

    auto* dn_ideal = cmd_density->add_subcommand("ideal", "density of an ideal closure");
    dn_ideal->add_option("--d", dn_d)->required();
    dn_ideal->add_option("--p", dn_p)->capture_default_str();
    dn_ideal->add_option("--max-n", dn_maxn)->required();
    dn_ideal->add_option("--gens", dn_gens);
    dn_ideal->add_option("--gens-file", dn_gens_file);
    dn_ideal->add_flag("--restricted", dn_restricted, "restricted ideal closure");
    dn_ideal->callback([&] {
        ClosureLimits limits;
        if (force)
            limits.max_columns = std::size_t(1) << 26;
        auto gens = collect_gens(dn_gens, dn_gens_file, dn_d, dn_p);
        DensityReport rep =
            ideal_density_report(gens, dn_d, dn_p, dn_maxn, dn_restricted, limits);
        result = output.format == "csv" ? report_csv(rep) : report_json(rep).dump() + "\n";
    });

    auto* dn_fg = cmd_density->add_subcommand(
        "fg", "density of a finitely generated free graded subalgebra vs Witt ambient");
    dn_fg->add_option("--profile", dn_profile, "generator profile, e.g. 2:1,3:2")->required();
    dn_fg->add_option("--d", dn_d, "ambient free rank")->required();
    dn_fg->add_option("--max-n", dn_maxn)->required();
    dn_fg->callback([&] {
        DensityReport rep =
            fg_density_report(GenProfile::parse(dn_profile), witt_dims(dn_d, dn_maxn));
        result = output.format == "csv" ? report_csv(rep) : report_json(rep).dump() + "\n";
    });

    auto* dn_rep = cmd_density->add_subcommand("report", "ratios for explicit dim sequences");
    dn_rep->add_option("--sub", dn_sub, "comma-separated subalgebra dims")->required();
    dn_rep->add_option("--amb", dn_amb, "comma-separated ambient dims")->required();
    dn_rep->callback([&] {
        auto parse_seq = [](const std::string& text) {
            std::vector<BigInt> vals;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ','))
                vals.emplace_back(item);
            DimSeq s(static_cast<int>(vals.size()));
            for (std::size_t i = 0; i < vals.size(); ++i)
                s.set(static_cast<int>(i + 1), vals[i]);
            return s;
        };
        DensityReport rep = density_report(parse_seq(dn_sub), parse_seq(dn_amb));
        result = output.format == "csv" ? report_csv(rep) : report_json(rep).dump() + "\n";
    });

    // ---- frattini ----
    int fr_d = 2, fr_p = 2, fr_levels = 4;
    long long fr_budget = 1LL << 20;
    auto* cmd_fr = app.add_subcommand("frattini", "Frattini-series growth of a free pro-p group");
    cmd_fr->add_option("--d", fr_d)->required();
    cmd_fr->add_option("--p", fr_p)->capture_default_str();
    cmd_fr->add_option("--levels", fr_levels)->required();
    cmd_fr->add_option("--bit-budget", fr_budget, "saturation threshold in bits")
        ->capture_default_str();
    cmd_fr->callback([&] {
        FiltrationGrowth g = frattini_growth_free(fr_d, fr_p, fr_levels, fr_budget);
        result = output.format == "csv" ? growth_csv(g) : growth_json(g).dump() + "\n";
    });

    // ---- zassenhaus ----
    int z_d = 2, z_p = 2, z_levels = 10;
    bool z_dem = false;
    auto* cmd_z = app.add_subcommand("zassenhaus", "Zassenhaus-series log-indices");
    cmd_z->add_option("--d", z_d)->required();
    cmd_z->add_option("--p", z_p)->capture_default_str();
    cmd_z->add_option("--levels", z_levels)->required();
    cmd_z->add_flag("--demushkin", z_dem, "use the one-relator quotient dimensions");
    cmd_z->callback([&] {
        DimSeq dims =
            z_dem ? demushkin_lie_dims(z_d, z_p, z_levels) : restricted_dims(z_d, z_p, z_levels);
        FiltrationGrowth g = zassenhaus_log_indices(dims, z_levels, z_p);
        result = output.format == "csv" ? growth_csv(g) : growth_json(g).dump() + "\n";
    });

    // ---- hdim product ----
    auto* cmd_hdim = app.add_subcommand("hdim", "Hausdorff dimension estimates");
    cmd_hdim->require_subcommand(1);
    std::string hp_factors, hp_select, hp_kind = "frattini";
    int hp_p = 2, hp_levels = 3;
    long long hp_budget = 1LL << 20;
    auto* hp = cmd_hdim->add_subcommand("product", "per-level ratios in a direct product");
    hp->add_option("--factors", hp_factors, "e.g. free:3,free:3,free:2 or dem:4:genericEven:2")
        ->required();
    hp->add_option("--p", hp_p)->capture_default_str();
    hp->add_option("--kind", hp_kind, "frattini|zassenhaus")->capture_default_str();
    hp->add_option("--levels", hp_levels)->required();
    hp->add_option("--select", hp_select, "per-factor: full, trivial, or custom:<i1+i2+...>")
        ->required();
    hp->add_option("--bit-budget", hp_budget)->capture_default_str();
    hp->callback([&] {
        ProductSpec spec = parse_product_spec(hp_factors, hp_p);
        SubgroupSelection sel = parse_selection(hp_select, spec.factors.size(), hp_levels);
        FiltrationKind kind;
        if (hp_kind == "frattini")
            kind = FiltrationKind::Frattini;
        else if (hp_kind == "zassenhaus")
            kind = FiltrationKind::Zassenhaus;
        else
            throw ValidationError("kind must be frattini or zassenhaus");
        DensityReport rep = product_hdim_estimate(spec, sel, kind, hp_levels, hp_budget);
        result = output.format == "csv" ? ratio_levels_csv(rep) : report_json(rep).dump() + "\n";
    });

    // ---- spectrum normal ----
    auto* cmd_spec = app.add_subcommand("spectrum", "Hausdorff spectra");
    cmd_spec->require_subcommand(1);
    std::string sp_factors, sp_alphas;
    int sp_p = 2;
    auto* sp = cmd_spec->add_subcommand("normal", "normal Hausdorff spectrum of a direct product");
    sp->add_option("--factors", sp_factors)->required();
    sp->add_option("--p", sp_p)->capture_default_str();
    sp->add_option("--alphas", sp_alphas, "per-factor dimensions, e.g. 1/2,1/2,0");
    sp->callback([&] {
        ProductSpec spec = parse_product_spec(sp_factors, sp_p);
        auto values = normal_spectrum(spec, parse_alphas(sp_alphas));
        if (output.format == "csv") {
            result = "value,value_f64\n";
            for (const auto& v : values)
                result += rat_str(v) + "," + fmt_f64(rat_f64(v)) + "\n";
        } else {
            nlohmann::ordered_json j;
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            nlohmann::ordered_json arr64 = nlohmann::ordered_json::array();
            for (const auto& v : values) {
                arr.push_back(rat_str(v));
                arr64.push_back(rat_f64(v));
            }
            j["spectrum"] = arr;
            j["spectrum_f64"] = arr64;
            result = j.dump() + "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help and friends
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 4;
    }

    try {
        output.emit(result);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
