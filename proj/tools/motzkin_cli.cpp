#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "motzkin/density.hpp"
#include "motzkin/errors.hpp"
#include "motzkin/families.hpp"
#include "motzkin/kappa.hpp"
#include "motzkin/report.hpp"
#include "motzkin/verify.hpp"

namespace {

using namespace motzkin;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1; // bound violation, oracle mismatch, tiling failure
constexpr int kExitUsage = 2;     // parse errors, bad ranges, degenerate inputs

std::vector<i64> parse_int_list(const std::string& spec) {
    std::vector<i64> out;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        size_t pos = 0;
        i64 v = 0;
        try {
            v = std::stoll(token, &pos);
        } catch (const std::exception&) {
            fail(errc::invalid_input, "not an integer: '" + token + "'");
        }
        if (pos != token.size())
            fail(errc::invalid_input, "trailing characters in '" + token + "'");
        out.push_back(v);
    }
    if (out.empty()) fail(errc::invalid_input, "empty set spec");
    return out;
}

std::pair<i64, i64> parse_range(const std::string& spec) {
    auto dots = spec.find("..");
    if (dots == std::string::npos)
        fail(errc::invalid_input, "range must be A..B, got '" + spec + "'");
    auto lo = parse_int_list(spec.substr(0, dots));
    auto hi = parse_int_list(spec.substr(dots + 2));
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0])
        fail(errc::invalid_input, "range must be A..B with A <= B, got '" + spec + "'");
    return {lo[0], hi[0]};
}

std::vector<std::string> normalization_notes(const DifferenceSet& M) {
    std::vector<std::string> notes;
    if (M.duplicates_removed() > 0)
        notes.push_back("removed " + std::to_string(M.duplicates_removed()) + " duplicate(s)");
    if (M.factor() > 1) notes.push_back("divided by " + std::to_string(M.factor()));
    return notes;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) fail(errc::invalid_input, "cannot open output file '" + out_path + "'");
    f << text;
    if (!f) fail(errc::invalid_input, "write failed: '" + out_path + "'");
}

ojson set_json(const DifferenceSet& M) {
    ojson j;
    j["elements"] = M.elements();
    j["factor"] = M.factor();
    j["duplicates_removed"] = M.duplicates_removed();
    return j;
}

std::string notes_text(const std::vector<std::string>& notes) {
    std::string s;
    for (const auto& n : notes) s += "note: " + n + "\n";
    return s;
}

struct CommonFlags {
    std::string format = "table";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& cf, bool with_csv = false) {
    cmd->add_option("--format", cf.format, "output format")
        ->check(CLI::IsMember(with_csv ? std::vector<std::string>{"table", "json", "csv"}
                                       : std::vector<std::string>{"table", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", cf.out_path, "write output to file instead of stdout");
}

std::string command_echo(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += ' ';
        s += argv[i];
    }
    return s;
}

int run_kappa(const std::string& echo, const std::string& set_spec, bool oracle,
              bool witness_set, const CommonFlags& cf) {
    DifferenceSet M = DifferenceSet::normalize(parse_int_list(set_spec));
    auto notes = normalization_notes(M);
    KappaResult k = kappa_exact(M);

    std::optional<KappaResult> sweep;
    bool oracle_ok = true;
    if (oracle) {
        sweep = kappa_sweep_oracle(M, 2 * M.max_element());
        oracle_ok = sweep->value == k.value;
    }
    std::optional<PeriodicSet> ws;
    if (witness_set) ws = witness_mset(M, k.witness_c, k.witness_m);

    if (cf.format == "json") {
        ojson result;
        result["set"] = set_json(M);
        result["kappa"] = kappa_json(k);
        if (sweep) {
            result["oracle"] = kappa_json(*sweep);
            result["oracle_ok"] = oracle_ok;
        }
        if (ws) result["witness_set"] = periodic_set_json(*ws);
        emit(cf.out_path, envelope_json({echo, notes, result}));
    } else {
        std::ostringstream os;
        os << notes_text(notes);
        os << "set: " << M.str() << "\n";
        os << "kappa: " << k.value.str() << " (" << k.value.decimal() << ")\n";
        os << "witness: c=" << k.witness_c << " m=" << k.witness_m << " d=" << k.achieved_d
           << "\n";
        if (sweep)
            os << "oracle: " << sweep->value.str() << " (c=" << sweep->witness_c
               << " m=" << sweep->witness_m << ") " << (oracle_ok ? "match" : "MISMATCH")
               << "\n";
        if (ws)
            os << "witness-set: period " << ws->period << " pattern " << ws->pattern_string()
               << " density " << ws->density.str() << "\n";
        emit(cf.out_path, os.str());
    }
    return oracle_ok ? kExitOk : kExitViolation;
}

int run_mu(const std::string& echo, const std::string& set_spec, const DensityOptions& opts,
           const CommonFlags& cf) {
    DifferenceSet M = DifferenceSet::normalize(parse_int_list(set_spec));
    auto notes = normalization_notes(M);
    DensityBounds b = density_bounds(M, opts);
    ColoringNumbers col = coloring_numbers(b);

    if (cf.format == "json") {
        ojson result;
        result["set"] = set_json(M);
        result["bounds"] = density_bounds_json(b);
        result["coloring"] = coloring_json(col);
        emit(cf.out_path, envelope_json({echo, notes, result}));
    } else {
        std::ostringstream os;
        os << notes_text(notes);
        os << "set: " << M.str() << "\n";
        os << "lower: " << b.lower.str() << " (" << b.lower.decimal() << ") [" << b.lower_method
           << "]\n";
        os << "upper: " << b.upper.str() << " (" << b.upper.decimal() << ") [" << b.upper_method;
        if (b.upper_method.rfind("prefix-count", 0) == 0) os << " k=" << b.upper_k;
        os << "]\n";
        if (b.exact) {
            os << "exact: " << b.exact->str() << " (" << b.exact->decimal() << ") ["
               << b.exact_method << "]\n";
            if (b.witness)
                os << "witness: period " << b.witness->period << " pattern "
                   << b.witness->pattern_string() << "\n";
        } else {
            os << "exact: unavailable [" << b.exact_method << "]\n";
        }
        if (col.chi_f)
            os << "chi_f: " << col.chi_f->str() << "\n";
        else
            os << "chi_f: unavailable\n";
        os << "chi_c_upper: " << col.chi_c_upper.str() << "\n";
        emit(cf.out_path, os.str());
    }
    return kExitOk;
}

int run_classify(const std::string& echo, const std::string& family, i64 a, i64 n,
                 const CommonFlags& cf) {
    FamilyCase fc = family == "f1" ? classify_f1(a, n) : classify_f2(a, n);
    std::vector<std::string> notes;
    DifferenceSet M = build_set(fc);
    for (auto& note : normalization_notes(M)) notes.push_back(note);
    if (!fc.covered()) notes.push_back("no closed-form bound applies to this n");

    if (cf.format == "json") {
        ojson result;
        result["case"] = family_case_json(fc);
        result["set"] = set_json(M);
        emit(cf.out_path, envelope_json({echo, notes, result}));
    } else {
        std::ostringstream os;
        os << notes_text(notes);
        os << "set: " << M.str() << "\n";
        os << "case: " << label_name(fc.label);
        {
            std::string idx;
            auto put = [&](const char* name, const std::optional<i64>& v) {
                if (v) idx += std::string(" ") + name + "=" + std::to_string(*v);
            };
            put("i", fc.i);
            put("j", fc.j);
            put("l", fc.l);
            put("q", fc.q);
            put("r", fc.r);
            put("t", fc.t);
            os << idx << "\n";
        }
        if (fc.covered()) {
            os << "bound: " << fc.bound.str() << " (" << fc.bound.decimal() << ")\n";
            os << "exact: " << (fc.exact ? "yes" : "no") << "\n";
        }
        emit(cf.out_path, os.str());
    }
    return kExitOk;
}

int run_verify(const std::string& echo, const std::string& family, const std::string& a_range,
               const std::string& n_range, const VerifyOptions& opts, const CommonFlags& cf) {
    auto [a_lo, a_hi] = parse_range(a_range);
    auto [n_lo, n_hi] = parse_range(n_range);
    if (a_lo < 1 || n_lo < 1) fail(errc::invalid_input, "ranges must start at 1 or above");
    auto records = family == "f1" ? sweep_f1(a_lo, a_hi, n_lo, n_hi, opts)
                                  : sweep_f2(a_lo, a_hi, n_lo, n_hi, opts);
    if (cf.format == "json")
        emit(cf.out_path, envelope_json({echo, {}, records_json(records)}));
    else if (cf.format == "csv")
        emit(cf.out_path, verification_csv(records));
    else
        emit(cf.out_path, verification_table(records));
    return count_violations(records) == 0 ? kExitOk : kExitViolation;
}

int run_partition(const std::string& echo, const std::string& obs_id, i64 a, i64 horizon,
                  const CommonFlags& cf) {
    Observation obs;
    if (obs_id == "2.1")
        obs = Observation::Obs21;
    else if (obs_id == "3.1")
        obs = Observation::Obs31;
    else if (obs_id == "3.3")
        obs = Observation::Obs33;
    else
        fail(errc::invalid_input, "--obs must be 2.1, 3.1 or 3.3");
    PartitionReport rep = partition_check(obs, a, horizon);

    if (cf.format == "json") {
        emit(cf.out_path, envelope_json({echo, {}, partition_report_json(rep)}));
    } else {
        std::ostringstream os;
        os << "obs: " << obs_id << " a: " << rep.a << " start: " << rep.start
           << " period: " << rep.period << " horizon: " << rep.horizon << "\n";
        os << "tiles: " << (rep.tiles ? "yes" : "no") << " covered-to: " << rep.covered_to
           << "\n";
        if (!rep.tiles) os << "failure: " << rep.failure << "\n";
        os << "excluded-claim: " << rep.excluded_claim;
        if (rep.excluded_below_start)
            os << " (= start-1; integers 0.." << rep.excluded_claim - 1
               << " precede every block as well)";
        else
            os << " (does not sit immediately below the first block)";
        os << "\n";
        emit(cf.out_path, os.str());
    }
    return rep.tiles ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kappa / mu computations for finite difference sets"};
    app.require_subcommand(1);
    const std::string echo = command_echo(argc, argv);

    std::string set_spec;
    bool oracle = false, witness_set = false;
    CommonFlags kappa_cf;
    auto* kappa_cmd = app.add_subcommand("kappa", "exact kappa via the pair-sum scan");
    kappa_cmd->add_option("--set", set_spec, "comma-separated positive integers")->required();
    kappa_cmd->add_flag("--oracle", oracle, "cross-check against the modulus sweep");
    kappa_cmd->add_flag("--witness-set", witness_set, "print the periodic witness set");
    add_common(kappa_cmd, kappa_cf);

    std::string mu_set_spec;
    DensityOptions mu_opts;
    bool mu_no_exact = false;
    std::optional<double> mu_budget;
    CommonFlags mu_cf;
    auto* mu_cmd = app.add_subcommand("mu", "density bounds and exact mu when affordable");
    mu_cmd->add_option("--set", mu_set_spec, "comma-separated positive integers")->required();
    mu_cmd->add_option("--kmax", mu_opts.k_max, "prefix-bound horizon (0 = automatic)")
        ->capture_default_str();
    mu_cmd->add_option("--state-cap", mu_opts.state_cap, "window-state cap for exact mu")
        ->capture_default_str();
    mu_cmd->add_flag("--no-exact", mu_no_exact, "skip the exact computation, bounds only");
    mu_cmd->add_option("--time-budget", mu_budget, "seconds before exact mu is abandoned");
    add_common(mu_cmd, mu_cf);

    std::string cls_family;
    i64 cls_a = 0, cls_n = 0;
    CommonFlags cls_cf;
    auto* cls_cmd = app.add_subcommand("classify", "closed-form case for {a,a+1,2a+1[,3a+1],n}");
    cls_cmd->add_option("--family", cls_family, "f1 or f2")
        ->required()
        ->check(CLI::IsMember({"f1", "f2"}));
    cls_cmd->add_option("--a", cls_a, "family parameter a >= 1")->required();
    cls_cmd->add_option("--n", cls_n, "additional element n")->required();
    add_common(cls_cmd, cls_cf);

    std::string ver_family, ver_a_range, ver_n_range;
    VerifyOptions ver_opts;
    bool ver_no_exactness = false;
    CommonFlags ver_cf;
    auto* ver_cmd = app.add_subcommand("verify", "sweep (a, n) grid and check every bound");
    ver_cmd->add_option("--family", ver_family, "f1 or f2")
        ->required()
        ->check(CLI::IsMember({"f1", "f2"}));
    ver_cmd->add_option("--a-range", ver_a_range, "inclusive range A..B")->required();
    ver_cmd->add_option("--n-range", ver_n_range, "inclusive range A..B")->required();
    ver_cmd->add_flag("--no-exactness-checks", ver_no_exactness,
                      "skip mu / prefix-bound confirmation on exact cases");
    ver_cmd->add_option("--mu-max-element", ver_opts.mu_max_element,
                        "largest max(M) for which exact mu is attempted")
        ->capture_default_str();
    ver_cmd->add_option("--time-budget", ver_opts.time_budget_s, "seconds per record")
        ->capture_default_str();
    add_common(ver_cmd, ver_cf, /*with_csv=*/true);

    std::string obs_id;
    i64 part_a = 0, part_horizon = 0;
    CommonFlags part_cf;
    auto* part_cmd = app.add_subcommand("partition-check", "verify the block tiling");
    part_cmd->add_option("--obs", obs_id, "2.1, 3.1 or 3.3")->required();
    part_cmd->add_option("--a", part_a, "family parameter a >= 1")->required();
    part_cmd->add_option("--horizon", part_horizon, "check the tiling up to this integer")
        ->required();
    add_common(part_cmd, part_cf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (kappa_cmd->parsed()) return run_kappa(echo, set_spec, oracle, witness_set, kappa_cf);
        if (mu_cmd->parsed()) {
            mu_opts.want_exact = !mu_no_exact;
            mu_opts.time_budget_s = mu_budget;
            return run_mu(echo, mu_set_spec, mu_opts, mu_cf);
        }
        if (cls_cmd->parsed()) return run_classify(echo, cls_family, cls_a, cls_n, cls_cf);
        if (ver_cmd->parsed()) {
            ver_opts.exactness_checks = !ver_no_exactness;
            return run_verify(echo, ver_family, ver_a_range, ver_n_range, ver_opts, ver_cf);
        }
        if (part_cmd->parsed()) return run_partition(echo, obs_id, part_a, part_horizon, part_cf);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
