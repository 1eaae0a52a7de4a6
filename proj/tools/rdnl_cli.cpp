// SPDX-License-Identifier: Apache-2.0
//
// rdnl: command-line analyzer for r-dimensional non-linearity.
//
//   rdnl analyze   --mode boolean|vectorial <input> --r 1..4 [--format json|csv|md]
//   rdnl spectrum  <boolean input>
//   rdnl sbox      --k 4 --modulus 0x13
//   rdnl optimal   --n 4 --m 1 --r 2 [--filter balanced | --candidates FILE | --sample N]
//   rdnl reproduce --table 1|2
//
// Exit codes: 0 success, 1 reproduction mismatch, 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <rdnl/rdnl.hpp>
#include <rdnl/report_io.hpp>

namespace {

using namespace rdnl;
using nlohmann::json;

constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

/// An input error attributed to a specific command-line flag.
struct FlagError {
    std::string flag;
    std::string message;
};

[[noreturn]] void flag_error(const std::string &flag, const std::string &message) { throw FlagError{flag, message}; }

template <class Fn>
auto blame(const std::string &flag, Fn &&fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error &e) {
        flag_error(flag, e.what());
    }
}

std::string read_file(const std::string &path, const std::string &flag) {
    std::ifstream in(path);
    if (!in)
        flag_error(flag, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

/// "3" or "1..4".
std::pair<unsigned, unsigned> parse_rank_range(const std::string &text) {
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const unsigned r = static_cast<unsigned>(std::stoul(text, &used));
            if (used != text.size())
                throw std::invalid_argument(text);
            return {r, r};
        }
        const std::string lo_s = text.substr(0, dots), hi_s = text.substr(dots + 2);
        const unsigned lo = static_cast<unsigned>(std::stoul(lo_s, &used));
        if (used != lo_s.size())
            throw std::invalid_argument(text);
        const unsigned hi = static_cast<unsigned>(std::stoul(hi_s, &used));
        if (used != hi_s.size() || hi < lo)
            throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error &) {
        flag_error("--r", "expected a rank or a range like 1..4, got '" + text + "'");
    }
}

std::uint32_t parse_hex_u32(const std::string &text, const std::string &flag) {
    try {
        std::size_t used = 0;
        const auto v = std::stoul(text, &used, 0);
        if (used != text.size() || v > 0xFFFFFFFFul)
            throw std::invalid_argument(text);
        return static_cast<std::uint32_t>(v);
    } catch (const std::logic_error &) {
        flag_error(flag, "expected an integer such as 0x13, got '" + text + "'");
    }
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out)
        flag_error("--out", "cannot write '" + out_path + "'");
    out << text;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---------------------------------------------------------------------------

struct InputOptions {
    std::string anf;
    std::string tt;
    std::string tt_file;
    std::string sbox;
    unsigned n = 0;
    unsigned m = 1;
    unsigned k = 4;
    std::string modulus = "0x13";

    void attach(CLI::App &cmd, bool vectorial_inputs) {
        cmd.add_option("--anf", anf, "Algebraic normal form, e.g. \"x1*x2 + x3\"");
        cmd.add_option("--tt", tt, "Truth table as a hex string");
        cmd.add_option("--tt-file", tt_file, "File holding the hex truth table");
        cmd.add_option("--n", n, "Number of input variables");
        if (vectorial_inputs) {
            cmd.add_option("--sbox", sbox, "Builtin S-box (inverse)");
            cmd.add_option("--m", m, "Number of output bits");
            cmd.add_option("--k", k, "Field degree for --sbox inverse");
            cmd.add_option("--modulus", modulus, "Field polynomial for --sbox inverse, degree bit set (0x13)");
        }
    }

    void require_single_source() const {
        const int sources = !anf.empty() + !tt.empty() + !tt_file.empty() + !sbox.empty();
        if (sources != 1)
            flag_error("--anf/--tt/--tt-file/--sbox", "exactly one input source is required");
    }

    std::string source_flag() const {
        return !anf.empty() ? "--anf" : !tt.empty() ? "--tt" : !tt_file.empty() ? "--tt-file" : "--sbox";
    }

    std::string hex_text() const { return !tt.empty() ? tt : read_file(tt_file, "--tt-file"); }
    std::string hex_flag() const { return !tt.empty() ? "--tt" : "--tt-file"; }

    BooleanFunction boolean() const {
        require_single_source();
        if (!sbox.empty())
            flag_error("--sbox", "builtin S-boxes need --mode vectorial");
        if (n == 0)
            flag_error("--n", "the number of input variables is required");
        if (!anf.empty())
            return blame("--anf", [&] { return anf_to_function(parse_anf(anf, n)); });
        return blame(hex_flag(), [&] { return parse_boolean_hex(hex_text(), n); });
    }

    VectorialFunction vectorial() const {
        require_single_source();
        if (!sbox.empty()) {
            if (sbox != "inverse")
                flag_error("--sbox", "unknown builtin '" + sbox + "' (available: inverse)");
            const auto mod = parse_hex_u32(modulus, "--modulus");
            return blame("--modulus", [&] { return gf_inverse_sbox(k, mod); });
        }
        if (n == 0)
            flag_error("--n", "the number of input variables is required");
        if (!anf.empty()) {
            if (m != 1)
                flag_error("--anf", "an ANF describes a single-output function; use --m 1");
            return VectorialFunction::from_boolean(blame("--anf", [&] { return anf_to_function(parse_anf(anf, n)); }));
        }
        if (m == 1)
            return VectorialFunction::from_boolean(blame(hex_flag(), [&] { return parse_boolean_hex(hex_text(), n); }));
        return blame(hex_flag(), [&] { return parse_vectorial_hex(hex_text(), n, m); });
    }
};

// ---------------------------------------------------------------------------

struct AnalyzeOptions {
    InputOptions input;
    std::string mode = "boolean";
    std::string ranks = "1";
    std::string format = "json";
    std::string out;
    unsigned jobs = default_jobs();
    bool r1_fast = false;
};

int run_analyze(const AnalyzeOptions &o) {
    const bool vectorial = o.mode == "vectorial";
    if (!vectorial && o.mode != "boolean" && o.mode != "conventional")
        flag_error("--mode", "expected boolean or vectorial, got '" + o.mode + "'");
    if (o.format != "json" && o.format != "csv" && o.format != "md")
        flag_error("--format", "expected json, csv or md, got '" + o.format + "'");
    const auto [lo, hi] = parse_rank_range(o.ranks);

    std::optional<BooleanFunction> f;
    std::optional<VectorialFunction> F;
    if (vectorial)
        F = o.input.vectorial();
    else
        f = o.input.boolean();

    std::vector<NonlinearityReport> reports;
    for (unsigned r = lo; r <= hi; ++r) {
        try {
            if (o.r1_fast && r == 1)
                reports.push_back(vectorial ? analyze_r1_fast(*F) : analyze_r1_fast(*f));
            else
                reports.push_back(vectorial ? analyze(*F, r, o.jobs) : analyze(*f, r, o.jobs));
        } catch (const Error &e) {
            flag_error(e.kind() == ErrorKind::RankOutOfRange ? "--r" : o.input.source_flag(), e.what());
        }
    }

    std::string text;
    if (o.format == "json") {
        json arr = json::array();
        for (const auto &rep : reports)
            arr.push_back(io::to_json(rep));
        text = (reports.size() == 1 ? arr.front() : arr).dump(2) + "\n";
    } else if (o.format == "csv") {
        text = io::csv_header();
        for (const auto &rep : reports)
            text += io::csv_row(rep);
    } else {
        text = io::markdown_header();
        for (const auto &rep : reports)
            text += io::markdown_row(rep);
    }
    emit(text, o.out);
    return 0;
}

int run_spectrum(const InputOptions &in, const std::string &out) {
    const auto f = in.boolean();
    emit(io::to_json(walsh_spectrum(f)).dump(2) + "\n", out);
    return 0;
}

int run_sbox(unsigned k, const std::string &modulus, const std::string &out) {
    const auto mod = parse_hex_u32(modulus, "--modulus");
    const auto S = blame("--modulus", [&] { return gf_inverse_sbox(k, mod); });
    emit(to_hex(S) + "\n", out);
    return 0;
}

// ---------------------------------------------------------------------------

struct OptimalOptions {
    unsigned n = 0, m = 1, r = 1;
    std::string filter;
    std::string candidates;
    std::uint64_t sample = 0;
    std::uint64_t seed = 1;
    std::string census;
    std::string summary;
    unsigned jobs = default_jobs();
};

std::vector<VectorialFunction> read_candidates(const std::string &path, unsigned n, unsigned m) {
    std::istringstream lines(read_file(path, "--candidates"));
    std::vector<VectorialFunction> out;
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#')
            continue;
        out.push_back(blame("--candidates", [&] {
            return m == 1 ? VectorialFunction::from_boolean(parse_boolean_hex(line, n))
                          : parse_vectorial_hex(line, n, m);
        }));
    }
    if (out.empty())
        flag_error("--candidates", "no candidate truth tables in '" + path + "'");
    return out;
}

std::vector<VectorialFunction> random_candidates(unsigned n, unsigned m, std::uint64_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> value(0, (1u << m) - 1);
    std::vector<VectorialFunction> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::vector<std::uint32_t> t(std::size_t{1} << n);
        for (auto &y : t)
            y = value(rng);
        out.emplace_back(n, m, std::move(t));
    }
    return out;
}

int run_optimal(const OptimalOptions &o) {
    if (o.n == 0)
        flag_error("--n", "the number of input variables is required");
    SearchScope scope;
    if (!o.candidates.empty() && o.sample)
        flag_error("--candidates/--sample", "choose one candidate source");
    if (!o.candidates.empty())
        scope.candidates = read_candidates(o.candidates, o.n, o.m);
    else if (o.sample)
        scope.candidates = blame("--sample", [&] { return random_candidates(o.n, o.m, o.sample, o.seed); });
    if (!o.filter.empty()) {
        if (o.filter != "balanced")
            flag_error("--filter", "unknown filter '" + o.filter + "' (available: balanced)");
        scope.predicate = [](const VectorialFunction &F) {
            std::vector<std::uint64_t> hist(std::size_t{1} << F.outputs(), 0);
            for (auto y : F.table())
                ++hist[y];
            return std::all_of(hist.begin(), hist.end(), [&](auto c) { return c == hist.front(); });
        };
    }

    const bool pn_applicable = o.n % 2 == 0 && o.n >= 2 * o.m;
    std::optional<PnComparison> pn;
    SearchResult res;
    try {
        if (pn_applicable) {
            pn = verify_optimal_equals_pn(o.n, o.m, o.r, scope, o.jobs);
            res = pn->search;
        } else {
            res = optimal_search(o.n, o.m, o.r, scope, o.jobs);
        }
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::SpaceTooLarge)
            flag_error("--n/--m", std::string(e.what()) +
                                      " (use --candidates FILE, --sample N, or a smaller n/m)");
        flag_error(e.kind() == ErrorKind::RankOutOfRange ? "--r" : "--n/--m", e.what());
    }

    if (!o.census.empty()) {
        std::ofstream out(o.census);
        if (!out)
            flag_error("--census", "cannot write '" + o.census + "'");
        out << io::census_jsonl(res);
    }
    const json summary = io::summary_json(res, pn);
    if (!o.summary.empty()) {
        std::ofstream out(o.summary);
        if (!out)
            flag_error("--summary", "cannot write '" + o.summary + "'");
        out << summary.dump(2) << "\n";
    }

    const auto &best = res.optimal();
    std::cout << "scanned " << res.scanned << " functions, " << res.census.size() << " classes\n";
    std::cout << "optimal class: N_f=" << best.N_f() << " H_f=" << io::fixed5(best.H_f())
              << " members=" << best.member_count << "\n";
    if (pn) {
        const char *set_name = o.m == 1 ? "bent" : "perfect nonlinear";
        std::cout << set_name << " functions in scope: " << pn->perfect_nonlinear_count << "\n";
        std::cout << "optimal set = " << set_name << " set: " << (pn->holds() ? "yes" : "no") << "\n";
    } else {
        std::cout << "perfect-nonlinear comparison not applicable (needs even n >= 2m)\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------

int run_reproduce(int table, unsigned jobs) {
    if (table != 1 && table != 2)
        flag_error("--table", "expected 1 or 2, got " + std::to_string(table));
    const auto &rows = table == 1 ? reference::table1() : reference::table2();
    const auto f = reference::five_variable_function();
    const auto S = reference::inversion_sbox();
    bool all_pass = true;
    for (const auto &row : rows) {
        const auto rep = table == 1 ? analyze(f, row.r, jobs) : analyze(S, row.r, jobs);
        bool row_pass = true;
        for (const auto &cell : reference::check_row(row, rep)) {
            std::cout << "r=" << row.r << " " << cell.column << ": expected " << cell.expected << ", got "
                      << cell.actual << " " << (cell.pass ? "PASS" : "FAIL") << "\n";
            row_pass &= cell.pass;
        }
        std::cout << "row r=" << row.r << " " << (row_pass ? "PASS" : "FAIL") << "\n";
        all_pass &= row_pass;
    }
    std::cout << "table " << table << ": " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? 0 : kExitMismatch;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"r-dimensional non-linearity analyzer for Boolean functions and S-boxes"};
    app.require_subcommand(1);

    AnalyzeOptions ao;
    auto *analyze_cmd = app.add_subcommand("analyze", "Class census and (N_f, H_f) for each requested r");
    ao.input.attach(*analyze_cmd, true);
    analyze_cmd->add_option("--mode", ao.mode, "boolean or vectorial");
    analyze_cmd->add_option("--r", ao.ranks, "Rank or inclusive range, e.g. 2 or 1..4");
    analyze_cmd->add_option("--format", ao.format, "json, csv or md");
    analyze_cmd->add_option("--out", ao.out, "Output path (default stdout)");
    analyze_cmd->add_option("--jobs", ao.jobs, "Worker threads");
    analyze_cmd->add_flag("--r1-fast", ao.r1_fast, "Use the Walsh-Hadamard path for r = 1");

    InputOptions so;
    std::string spectrum_out;
    auto *spectrum_cmd = app.add_subcommand("spectrum", "Walsh-Hadamard spectrum as exact fractions");
    so.attach(*spectrum_cmd, false);
    spectrum_cmd->add_option("--out", spectrum_out, "Output path (default stdout)");

    unsigned sbox_k = 4;
    std::string sbox_modulus = "0x13", sbox_out;
    auto *sbox_cmd = app.add_subcommand("sbox", "Emit the field-inversion S-box truth table");
    sbox_cmd->add_option("--k", sbox_k, "Field degree");
    sbox_cmd->add_option("--modulus", sbox_modulus, "Field polynomial with the degree bit set");
    sbox_cmd->add_option("--out", sbox_out, "Output path (default stdout)");

    OptimalOptions oo;
    auto *optimal_cmd = app.add_subcommand("optimal", "Search a function space for the optimal class");
    optimal_cmd->add_option("--n", oo.n, "Number of input variables");
    optimal_cmd->add_option("--m", oo.m, "Number of output bits");
    optimal_cmd->add_option("--r", oo.r, "Rank");
    optimal_cmd->add_option("--filter", oo.filter, "Predicate restricting the space (balanced)");
    optimal_cmd->add_option("--candidates", oo.candidates, "File with one hex truth table per line");
    optimal_cmd->add_option("--sample", oo.sample, "Scan this many uniformly random functions");
    optimal_cmd->add_option("--seed", oo.seed, "Seed for --sample");
    optimal_cmd->add_option("--census", oo.census, "Write the class census as JSON lines");
    optimal_cmd->add_option("--summary", oo.summary, "Write the summary JSON");
    optimal_cmd->add_option("--jobs", oo.jobs, "Worker threads");

    int table = 0;
    unsigned reproduce_jobs = default_jobs();
    auto *reproduce_cmd = app.add_subcommand("reproduce", "Check the reference tables cell by cell");
    reproduce_cmd->add_option("--table", table, "1 (five-variable function) or 2 (inversion S-box)")->required();
    reproduce_cmd->add_option("--jobs", reproduce_jobs, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*analyze_cmd)
            return run_analyze(ao);
        if (*spectrum_cmd)
            return run_spectrum(so, spectrum_out);
        if (*sbox_cmd)
            return run_sbox(sbox_k, sbox_modulus, sbox_out);
        if (*optimal_cmd)
            return run_optimal(oo);
        if (*reproduce_cmd)
            return run_reproduce(table, reproduce_jobs);
    } catch (const FlagError &e) {
        std::cerr << "error: " << e.flag << ": " << e.message << "\n";
        return kExitInput;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
