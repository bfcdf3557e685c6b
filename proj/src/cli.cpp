#include "lrc/cli.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "lrc/bounds.hpp"
#include "lrc/builder.hpp"
#include "lrc/codec.hpp"
#include "lrc/io.hpp"

namespace lrc::cli {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, sep);) {
        part = trim(part);
        if (!part.empty()) out.push_back(part);
    }
    return out;
}

std::vector<std::uint32_t> parse_codes(const std::string& s) {
    std::vector<std::uint32_t> out;
    for (const auto& tok : split(s, ',')) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) fail(ErrorCode::InvalidConfig, "bad integer list '" + s + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

struct BuildArgs {
    std::uint64_t field = 0;
    std::string modulus;
    std::string backend = "rational";
    std::string construction = "simple-poles";
    int r = 0;
    int m = 0;
    int t = 0;
    int e = 0;
    std::string alphas;
    std::string places;
    std::string blocks;
    std::string block_mode = "single";
    std::uint64_t seed = 0;
    std::string out = "lrc_code";
};

struct AnalyzeArgs {
    std::string code;
    bool exact_distance = false;
    bool verify_locality = false;
    int independence_t = -1;
    std::uint64_t distance_budget = kDefaultDistanceBudget;
    std::uint64_t subset_budget = kDefaultSubsetBudget;
    int repair_trials = 0;
    std::uint64_t seed = 0;
    std::string out;
};

struct RepairArgs {
    std::string code;
    std::string word;
};

struct BoundsArgs {
    int figure = 0;
    std::string bound;
    std::uint64_t q = 0;
    int r = 0;
    std::string delta_grid;
    std::string out;
};

LrcCode build_from(const BuildArgs& a) {
    std::optional<std::vector<std::uint32_t>> modulus;
    if (!a.modulus.empty()) modulus = parse_codes(a.modulus);
    const Field F = Field::of_order(a.field, modulus);
    const BackendKind kind = io::parse_backend(a.backend);
    const CurveBackend backend = kind == BackendKind::Rational ? CurveBackend::rational(F) : CurveBackend::hermitian(F);
    std::vector<FieldElement> alphas;
    for (auto c : parse_codes(a.alphas)) {
        if (c >= F.q()) fail(ErrorCode::InvalidConfig, "alpha " + std::to_string(c) + " is outside the field");
        alphas.push_back(F.element(c));
    }
    if (io::parse_construction(a.construction) == Construction::SimplePoles) {
        if (a.e > 1) fail(ErrorCode::InvalidConfig, "the simple-pole construction takes no --e");
        std::optional<std::vector<Place>> places;
        if (!a.places.empty()) {
            places.emplace();
            for (const auto& lit : split(a.places, ';')) places->push_back(backend.parse_place(lit));
        }
        return build_code_rational_places(backend, a.r, a.m, a.t, alphas, places);
    }
    HigherDegreeOptions opts;
    opts.alphas = alphas;
    if (a.block_mode == "mixed") opts.mode = BlockMode::Mixed;
    else if (a.block_mode != "single") fail(ErrorCode::InvalidConfig, "block mode must be single or mixed");
    if (!a.blocks.empty()) {
        opts.blocks.emplace();
        for (const auto& blk : split(a.blocks, ';')) {
            std::vector<Place> block;
            for (const auto& lit : split(blk, '+')) block.push_back(backend.parse_place(lit));
            opts.blocks->push_back(std::move(block));
        }
    }
    const int e = a.e == 0 ? 2 : a.e;
    return build_code_prime_field(backend, a.r, a.m, a.t, e, opts);
}

std::string summary(const LrcCode& code, std::size_t k_exact) {
    const auto& P = code.params;
    std::ostringstream s;
    s << "construction: " << construction_name(P.construction) << " on the " << io::backend_name(P.backend)
      << " backend over F_" << P.q << "\n";
    s << "r=" << P.r << " m=" << P.m << " t=" << P.t << " e=" << P.e << " genus=" << P.genus;
    if (P.b) s << " b=" << P.b;
    s << "\n";
    s << "n=" << code.n() << " H=" << code.H.rows() << "x" << code.H.cols() << "\n";
    s << "k >= " << code.k_lower_bound() << " (n - m - g - t*e), k_exact=" << k_exact << "\n";
    s << "d >= " << P.t + 1 << " (t + 1)\n";
    s << "t-independence: ";
    if (!code.t_independent) s << "not checked (t > 4 or n > 40)\n";
    else s << (*code.t_independent ? "verified" : "VIOLATED") << "\n";
    for (std::size_t i = 0; i < code.group_places.size(); ++i) {
        s << "group " << i << ":";
        for (const auto& p : code.group_places[i]) s << " " << p;
        s << "\n";
    }
    return s.str();
}

int cmd_build(const BuildArgs& a, std::ostream& out) {
    const LrcCode code = build_from(a);
    const auto k_exact = dimension_and_generator(code).k;
    io::write_file(a.out + ".json", io::code_to_json(code).dump(2) + "\n");
    io::write_file(a.out + "_H.csv", io::matrix_csv(code.H));
    const std::string text = summary(code, k_exact);
    io::write_file(a.out + "_summary.txt", text);
    out << text;
    const bool ok = static_cast<long>(k_exact) >= code.k_lower_bound() && code.t_independent.value_or(true);
    return ok ? kOk : kVerificationFailure;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
    const LrcCode code = io::code_from_json(io::Json::parse(io::read_file(a.code), nullptr, false));
    AnalyzeOptions opts;
    const bool none = !a.exact_distance && !a.verify_locality && a.independence_t < 0;
    opts.exact_distance = none || a.exact_distance;
    opts.verify_locality = none || a.verify_locality;
    opts.check_independence = none || a.independence_t >= 0;
    if (a.independence_t >= 0) opts.independence_t = a.independence_t;
    opts.distance_budget = a.distance_budget;
    opts.subset_budget = a.subset_budget;
    const CodeReport rep = analyze(code, opts);
    io::Json j = io::report_to_json(rep);
    bool budget_hit = false;
    if (opts.exact_distance && !rep.d_exact && rep.distance_strategy != "empty-code") budget_hit = true;
    if (rep.t && !rep.t_independence_certified) budget_hit = true;

    bool failed = false;
    if (rep.locality_certified == false) failed = true;
    if (rep.t_independence_certified == false) failed = true;
    if (rep.k_lower_bound && static_cast<long>(rep.k_exact) < *rep.k_lower_bound) failed = true;
    if (rep.d_exact && rep.d_lower && *rep.d_exact < *rep.d_lower) failed = true;

    if (a.repair_trials > 0) {
        const auto gen = dimension_and_generator(code);
        std::mt19937_64 rng(a.seed);
        int restored = 0;
        for (int i = 0; i < a.repair_trials && code.n() > 0; ++i) {
            const auto c = random_codeword(code.field, gen.G, rng);
            const auto pos = std::uniform_int_distribution<std::size_t>(0, code.n() - 1)(rng);
            ErasedWord w(c.begin(), c.end());
            w[pos].reset();
            if (repair_erasure(code, w).value == c[pos]) ++restored;
        }
        j["repair_check"] = {{"seed", a.seed}, {"trials", a.repair_trials}, {"restored", restored}};
        if (restored != a.repair_trials) failed = true;
    }
    const std::string text = j.dump(2) + "\n";
    if (!a.out.empty()) io::write_file(a.out, text);
    out << text;
    if (failed) {
        err << "error: VerificationFailed: the report contains a failed certification\n";
        return kVerificationFailure;
    }
    if (budget_hit) {
        err << "error: BudgetExceeded: some fields are unknown\n";
        return kBudgetExceeded;
    }
    return kOk;
}

int cmd_repair(const RepairArgs& a, std::ostream& out) {
    const LrcCode code = io::code_from_json(io::Json::parse(io::read_file(a.code), nullptr, false));
    const ErasedWord w = io::parse_codeword_csv(code.field, io::read_file(a.word));
    const Repair rep = repair_erasure(code, w);
    out << io::codeword_csv(rep.word) << "\n";
    return kOk;
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<bounds::BoundCurve> curves;
    if (a.figure != 0) {
        auto fig = bounds::figure_curves(a.figure);
        for (const auto& note : fig.omitted) err << "note: omitted " << note << "\n";
        curves = std::move(fig.curves);
    } else {
        if (a.bound.empty() || a.q == 0 || a.r == 0 || a.delta_grid.empty()) {
            fail(ErrorCode::InvalidConfig, "bounds needs --figure, or --bound with --q, --r and --delta-grid");
        }
        const auto grid = bounds::parse_delta_grid(a.delta_grid);
        try {
            curves.push_back(bounds::sample_bound(a.bound, a.q, a.r, grid));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Inapplicable) throw;
            err << "note: omitted " << a.bound << ": " << e.what() << "\n";
        }
    }
    const std::string csv = bounds::curves_csv(curves);
    if (!a.out.empty()) io::write_file(a.out, csv);
    else out << csv;
    return kOk;
}

// Inserts config-file entries as flags unless the flag is already present.
std::vector<std::string> merge_config(std::vector<std::string> args, const std::set<std::string>& bool_flags) {
    auto it = std::find(args.begin(), args.end(), "--config");
    if (it == args.end()) return args;
    if (std::next(it) == args.end()) fail(ErrorCode::InvalidConfig, "--config needs a file");
    const std::string path = *std::next(it);
    args.erase(it, std::next(it, 2));
    for (const auto& [key, value] : parse_config(io::read_file(path))) {
        const std::string flag = "--" + key;
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& s) {
            return s == flag || s.rfind(flag + "=", 0) == 0;
        });
        if (given) continue;
        if (bool_flags.count(key)) {
            if (value == "true" || value == "1") args.push_back(flag);
            else if (value != "false" && value != "0") fail(ErrorCode::InvalidConfig, "flag " + key + " takes true or false");
            continue;
        }
        args.push_back(flag);
        args.push_back(value);
    }
    return args;
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidConfig:
        case ErrorCode::IoError:
        case ErrorCode::MultipleErasures:
        case ErrorCode::NoErasure:
        case ErrorCode::NotInAnyGroup:
        case ErrorCode::Inapplicable:
        case ErrorCode::DomainError:
        case ErrorCode::NotOddPower:
            return kInvalidConfig;
        case ErrorCode::NotACodeword:
        case ErrorCode::DistanceUnknown:
            return kVerificationFailure;
        case ErrorCode::BudgetExceeded:
            return kBudgetExceeded;
        default:
            return kConstructionError;
    }
}

std::vector<std::pair<std::string, std::string>> parse_config(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    int lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos || eq == 0) {
            fail(ErrorCode::InvalidConfig, "config line " + std::to_string(lineno) + " is not key=value");
        }
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Builds and checks locally repairable codes from local expansions", "lrcw"};
    app.require_subcommand(1);

    BuildArgs b;
    auto* build = app.add_subcommand("build", "construct a code and write its artifacts");
    build->add_option("--field", b.field, "field order q")->required();
    build->add_option("--modulus", b.modulus, "defining polynomial coefficients c0,c1,...,1");
    build->add_option("--backend", b.backend, "rational or hermitian");
    build->add_option("--construction", b.construction, "simple-poles (sec3) or high-degree (sec4)");
    build->add_option("--r", b.r, "locality")->required();
    build->add_option("--m", b.m, "number of repair groups")->required();
    build->add_option("--t", b.t, "designed distance minus one")->required();
    build->add_option("--e", b.e, "block degree for high-degree places");
    build->add_option("--alphas", b.alphas, "multipliers of the replicated column, comma separated");
    build->add_option("--places", b.places, "place literals separated by ';'");
    build->add_option("--blocks", b.blocks, "divisor blocks separated by ';', places within a block by '+'");
    build->add_option("--block-mode", b.block_mode, "single or mixed");
    build->add_option("--seed", b.seed, "seed for randomized checks");
    build->add_option("--out", b.out, "output path prefix");

    AnalyzeArgs an;
    auto* analyze_cmd = app.add_subcommand("analyze", "report dimension, distance, locality, independence");
    analyze_cmd->add_option("code", an.code, "code JSON")->required();
    analyze_cmd->add_flag("--exact-distance", an.exact_distance);
    analyze_cmd->add_flag("--verify-locality", an.verify_locality);
    analyze_cmd->add_option("--verify-independence", an.independence_t, "check every t-subset of H's columns");
    analyze_cmd->add_option("--distance-budget", an.distance_budget);
    analyze_cmd->add_option("--subset-budget", an.subset_budget);
    analyze_cmd->add_option("--repair-trials", an.repair_trials, "random single-erasure round trips");
    analyze_cmd->add_option("--seed", an.seed);
    analyze_cmd->add_option("--out", an.out, "also write the report here");

    RepairArgs rp;
    auto* repair = app.add_subcommand("repair", "restore one erased symbol");
    repair->add_option("code", rp.code, "code JSON")->required();
    repair->add_option("word", rp.word, "codeword CSV with one '?'")->required();

    BoundsArgs bd;
    auto* bounds_cmd = app.add_subcommand("bounds", "emit rate bound curves as CSV");
    bounds_cmd->add_option("--figure", bd.figure, "figure 1..5");
    bounds_cmd->add_option("--bound", bd.bound, "bound id");
    bounds_cmd->add_option("--q", bd.q);
    bounds_cmd->add_option("--r", bd.r);
    bounds_cmd->add_option("--delta-grid", bd.delta_grid, "start:stop:step");
    bounds_cmd->add_option("--out", bd.out, "CSV path (default stdout)");

    try {
        const auto args = merge_config(raw_args, {"exact-distance", "verify-locality"});
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::CallForHelp& e) {
            out << app.help();
            return kOk;
        } catch (const CLI::ParseError& e) {
            err << "error: InvalidConfig: " << e.what() << "\n";
            return kInvalidConfig;
        }
        if (build->parsed()) return cmd_build(b, out);
        if (analyze_cmd->parsed()) return cmd_analyze(an, out, err);
        if (repair->parsed()) return cmd_repair(rp, out);
        return cmd_bounds(bd, out, err);
    } catch (const Error& e) {
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace lrc::cli
