// SPDX-License-Identifier: Apache-2.0
//
// groupframe: group frames with few distinct inner products
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// groupframe command-line tool: build, analyze, table1, bounds, verify.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "groupframe/groupframe.hpp"

namespace gf = groupframe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<gf::u64> parse_list(const std::string& text, const char* what) {
    std::vector<gf::u64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        gf::u64 v = 0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
            throw UsageError(std::string(what) + ": cannot parse '" + item + "' as a nonnegative integer");
        }
        out.push_back(v);
    }
    if (out.empty()) throw UsageError(std::string(what) + ": empty list");
    return out;
}

std::vector<std::vector<gf::u64>> parse_lists(const std::string& text, const char* what) {
    std::vector<std::vector<gf::u64>> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) out.push_back(parse_list(part, what));
    return out;
}

std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fixed(double v, int digits = 6) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string opt_fixed(const std::optional<double>& v) { return v ? fixed(*v) : "-"; }
std::string opt_kv(const std::optional<double>& v) { return v ? shortest(*v) : "na"; }
const char* yes_no(bool b) { return b ? "true" : "false"; }

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size() / 2;
    return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

// ---------------------------------------------------------------------------
// Frame construction from flags

struct FrameArgs {
    std::string family = "prime-cyclic";
    gf::u64 n = 0;
    gf::u64 m = 0;
    std::string exponents;
    std::string orders;
    gf::u64 twist = 0;
    gf::u64 D = 0;
    std::uint64_t seed = 1;
};

void add_frame_options(CLI::App* cmd, FrameArgs& a) {
    cmd->add_option("--family", a.family, "prime-cyclic | cyclic | abelian | dihedral | gaussian | random-fourier");
    cmd->add_option("--n", a.n, "Modulus (prime for prime-cyclic and dihedral) or column count");
    cmd->add_option("--m", a.m, "Subgroup order / frame dimension");
    cmd->add_option("--exponents", a.exponents, "Comma-separated exponents; abelian: one list per factor separated by ';'");
    cmd->add_option("--orders", a.orders, "Abelian factor orders, comma-separated");
    cmd->add_option("--twist", a.twist, "Dihedral twist parameter");
    cmd->add_option("--D", a.D, "Dihedral order of the twist (checked if given)");
    cmd->add_option("--seed", a.seed, "Seed for random baselines");
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw UsageError(msg);
}

void require_prime(gf::u64 n) {
    require(n >= 3 && gf::is_prime(n), "n=" + std::to_string(n) + " is not an odd prime");
}

void require_divides(gf::u64 n, gf::u64 m) {
    require(m >= 1 && (n - 1) % m == 0, "m=" + std::to_string(m) + " does not divide n-1=" + std::to_string(n - 1));
}

std::vector<gf::u64> subgroup_exponents(gf::u64 n, gf::u64 m) {
    const gf::Subgroup K = gf::subgroup_of_order(gf::find_generator(n), m);
    return {K.elements().begin(), K.elements().end()};
}

gf::FrameMatrix build_from_args(const FrameArgs& a) {
    if (a.family == "prime-cyclic") {
        require_prime(a.n);
        require_divides(a.n, a.m);
        return gf::build_prime_group_frame(a.n, a.m);
    }
    if (a.family == "cyclic") {
        require(a.n >= 2, "--n must be at least 2");
        require(!a.exponents.empty(), "cyclic family needs --exponents");
        return gf::build_cyclic_frame(gf::CyclicFrameSpec(a.n, parse_list(a.exponents, "--exponents")));
    }
    if (a.family == "abelian") {
        require(!a.orders.empty() && !a.exponents.empty(), "abelian family needs --orders and --exponents");
        return gf::build_abelian_frame(gf::AbelianFrameSpec(parse_list(a.orders, "--orders"), parse_lists(a.exponents, "--exponents")));
    }
    if (a.family == "dihedral") {
        require_prime(a.n);
        require(a.twist % a.n != 0, "twist " + std::to_string(a.twist) + " is not coprime to n=" + std::to_string(a.n));
        std::vector<gf::u64> exps;
        if (!a.exponents.empty()) {
            exps = parse_list(a.exponents, "--exponents");
        } else {
            require_divides(a.n, a.m);
            exps = subgroup_exponents(a.n, a.m);
        }
        std::optional<gf::u64> D;
        if (a.D) D = a.D;
        return gf::build_dihedral_frame(gf::DihedralFrameSpec(a.n, a.twist, exps, D));
    }
    if (a.family == "gaussian") {
        return gf::gaussian_frame({gf::BaselineKind::Gaussian, a.n, a.m, a.seed});
    }
    if (a.family == "random-fourier") {
        return gf::random_fourier_frame({gf::BaselineKind::RandomFourier, a.n, a.m, a.seed});
    }
    throw UsageError("unknown family '" + a.family + "'");
}

std::string provenance_line(const gf::FrameMatrix& f) {
    std::string out = "rows=" + std::to_string(f.rows()) + " cols=" + std::to_string(f.cols());
    for (const auto& [k, v] : f.provenance().entries()) {
        if (k == "exponents" && v.size() > 60) {
            out += " " + k + "=" + v.substr(0, 57) + "...";
        } else {
            out += " " + k + "=" + v;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_build(const FrameArgs& a, const std::string& out_path) {
    const gf::FrameMatrix f = build_from_args(a);
    if (out_path.empty() || out_path == "-") {
        gf::write_frame(std::cout, f);
        std::cerr << "built " << provenance_line(f) << "\n";
        return kExitOk;
    }
    std::ofstream os(out_path);
    if (!os) throw UsageError("cannot open '" + out_path + "' for writing");
    gf::write_frame(os, f);
    os.close();
    if (!os) throw UsageError("write to '" + out_path + "' failed");
    std::cout << "built " << provenance_line(f) << " out=" << out_path << "\n";
    return kExitOk;
}

void print_report(const gf::ReportRow& row) {
    std::printf("%-14s %6s %6s %10s %10s %10s %10s %8s %6s %11s\n", "family", "n", "m", "coherence", "welch", "sqrt_r", "thm_bound",
                "distinct", "tight", "equiangular");
    std::printf("%-14s %6llu %6llu %10s %10s %10s %10s %8zu %6s %11s\n", row.family.empty() ? "-" : row.family.c_str(),
                static_cast<unsigned long long>(row.n), static_cast<unsigned long long>(row.m), fixed(row.coherence).c_str(),
                opt_fixed(row.welch).c_str(), opt_fixed(row.sqrt_r_bound).c_str(), opt_fixed(row.thm_bound).c_str(), row.distinct_values,
                yes_no(row.tight), yes_no(row.equiangular));
    if (row.welch_achieved()) std::printf("welch bound achieved (|coherence - welch| <= 5e-4)\n");
    std::printf("record=analyze family=%s n=%llu m=%llu coherence=%s welch=%s sqrt_r_bound=%s thm_bound=%s distinct_values=%zu tight=%s "
                "equiangular=%s welch_achieved=%s\n",
                row.family.empty() ? "unknown" : row.family.c_str(), static_cast<unsigned long long>(row.n),
                static_cast<unsigned long long>(row.m), shortest(row.coherence).c_str(), opt_kv(row.welch).c_str(),
                opt_kv(row.sqrt_r_bound).c_str(), opt_kv(row.thm_bound).c_str(), row.distinct_values, yes_no(row.tight),
                yes_no(row.equiangular), yes_no(row.welch_achieved()));
}

int cmd_analyze(const FrameArgs& a, const std::string& in_path) {
    if (!in_path.empty()) {
        std::ifstream is(in_path);
        if (!is) throw UsageError("cannot open '" + in_path + "'");
        const gf::FrameMatrix f = gf::read_frame(is);
        print_report(gf::summarize_frame(f));
        return kExitOk;
    }
    if (a.family == "prime-cyclic") {
        require_prime(a.n);
        require_divides(a.n, a.m);
        print_report(gf::summarize_prime_group(a.n, a.m));
        return kExitOk;
    }
    print_report(gf::summarize_frame(build_from_args(a)));
    return kExitOk;
}

bool row_selected(const gf::Table1Row& row, const std::vector<std::string>& filter) {
    if (filter.empty()) return true;
    for (const auto& f : filter) {
        const auto colon = f.find(':');
        if (colon == std::string::npos) {
            if (parse_list(f, "--rows").front() == row.n) return true;
        } else {
            if (parse_list(f.substr(0, colon), "--rows").front() == row.n && parse_list(f.substr(colon + 1), "--rows").front() == row.m) return true;
        }
    }
    return false;
}

int cmd_table1(std::uint64_t seed, std::size_t seeds, const std::string& rows) {
    require(seeds >= 1, "--seeds must be at least 1");
    std::vector<std::string> filter;
    if (!rows.empty()) {
        std::stringstream ss(rows);
        std::string tok;
        while (std::getline(ss, tok, ',')) filter.push_back(tok);
    }
    bool all_match = true;
    std::size_t printed = 0;
    std::printf("%-12s %10s %10s %10s %10s %10s %10s %6s\n", "(n, m)", "gaussian", "rand_fourier", "group", "welch", "ref_group", "ref_welch", "match");
    std::vector<std::string> records;
    for (const auto& row : gf::kTable1) {
        if (!row_selected(row, filter)) continue;
        ++printed;
        const double group = gf::spectrum_coherence(gf::group_spectrum(gf::prime_group_spec(row.n, row.m)));
        const double welch = gf::welch_bound(row.n, row.m);
        std::vector<double> gauss, fourier;
        for (std::size_t s = 0; s < seeds; ++s) {
            const std::uint64_t sd = seed + s;
            const double g = gf::coherence(gf::gaussian_frame({gf::BaselineKind::Gaussian, row.n, row.m, sd}));
            const auto exps = gf::random_exponents(row.n, row.m, sd);
            const double f = gf::spectrum_coherence(gf::group_spectrum(gf::CyclicFrameSpec(row.n, exps)));
            gauss.push_back(g);
            fourier.push_back(f);
            records.push_back("record=baseline n=" + std::to_string(row.n) + " m=" + std::to_string(row.m) + " seed=" + std::to_string(sd) +
                              " gaussian=" + shortest(g) + " random_fourier=" + shortest(f));
        }
        const bool match = std::abs(group - row.group) <= gf::kTable1Tolerance && std::abs(welch - row.welch) <= gf::kTable1Tolerance;
        all_match = all_match && match;
        const std::string label = "(" + std::to_string(row.n) + ", " + std::to_string(row.m) + ")";
        std::printf("%-12s %10s %10s %10s %10s %10.4f %10.4f %6s\n", label.c_str(), fixed(median(gauss), 4).c_str(),
                    fixed(median(fourier), 4).c_str(), fixed(group, 4).c_str(), fixed(welch, 4).c_str(), row.group, row.welch,
                    match ? "yes" : "NO");
        records.push_back("record=table1 n=" + std::to_string(row.n) + " m=" + std::to_string(row.m) + " seeds=" + std::to_string(seeds) +
                          " gaussian_median=" + shortest(median(gauss)) + " random_fourier_median=" + shortest(median(fourier)) +
                          " group=" + shortest(group) + " welch=" + shortest(welch) + " match=" + yes_no(match));
    }
    require(printed > 0, "--rows selected no rows");
    if (seeds > 1) std::printf("baseline columns are medians over %zu seeds starting at %llu\n", seeds, static_cast<unsigned long long>(seed));
    for (const auto& r : records) std::printf("%s\n", r.c_str());
    return all_match ? kExitOk : kExitVerify;
}

int cmd_bounds(gf::u64 r, gf::u64 m_min, gf::u64 m_max, gf::u64 m_step) {
    require(r >= 1, "--r must be at least 1");
    require(m_min >= 1 && m_min <= m_max, "need 1 <= --m-min <= --m-max");
    require(m_step >= 1, "--m-step must be at least 1");
    std::printf("%6s %8s %10s %10s %10s %10s %10s %10s %10s\n", "m", "n", "welch", "sqrt_r", "general", "m_odd", "r2_exact", "r3_upper",
                "r3_asym_lo");
    std::vector<std::string> records;
    for (gf::u64 m = m_min; m <= m_max; m += m_step) {
        const gf::u64 n = r * m + 1;
        const double welch = gf::welch_bound(n, m);
        const double sq = gf::sqrt_r_bound(n, m, r);
        const double general = gf::thm7_general_upper(m, r);
        std::optional<double> modd, r2, r3u, r3l;
        if (m % 2 == 1 && r % 2 == 0) modd = gf::thm8_modd_upper(m, r);
        if (r == 2) r2 = gf::thm5_exact_coherence(n, m).value;
        if (r == 3) {
            const auto b = gf::thm6_r3_bounds(m);
            r3u = b.upper;
            r3l = b.asymptotic_lower;
        }
        std::printf("%6llu %8llu %10s %10s %10s %10s %10s %10s %10s\n", static_cast<unsigned long long>(m), static_cast<unsigned long long>(n),
                    fixed(welch).c_str(), fixed(sq).c_str(), fixed(general).c_str(), opt_fixed(modd).c_str(), opt_fixed(r2).c_str(),
                    opt_fixed(r3u).c_str(), opt_fixed(r3l).c_str());
        records.push_back("record=bounds r=" + std::to_string(r) + " m=" + std::to_string(m) + " n=" + std::to_string(n) + " welch=" + shortest(welch) +
                          " sqrt_r_bound=" + shortest(sq) + " general_upper=" + shortest(general) + " modd_upper=" + opt_kv(modd) +
                          " r2_exact=" + opt_kv(r2) + " r3_upper=" + opt_kv(r3u) + " r3_asymptotic_lower=" + opt_kv(r3l));
    }
    for (const auto& rec : records) std::printf("%s\n", rec.c_str());
    return kExitOk;
}

int cmd_verify(const std::string& suite, gf::u64 min_n, gf::u64 max_n, std::uint64_t seed) {
    std::vector<gf::Suite> suites;
    if (suite == "all") {
        suites = {gf::Suite::NumTheory, gf::Suite::Spectra, gf::Suite::Bounds, gf::Suite::Dihedral, gf::Suite::Pairing};
    } else {
        const auto s = gf::parse_suite(suite);
        require(s.has_value(), "unknown suite '" + suite + "' (numtheory, spectra, bounds, dihedral, pairing, all)");
        suites.push_back(*s);
    }
    require(max_n >= 3 && min_n <= max_n, "need --max-n >= 3 and --min-n <= --max-n");
    gf::VerifyOptions opt;
    opt.min_n = std::max<gf::u64>(min_n, 3);
    opt.max_n = max_n;
    opt.seed = seed;
    bool ok = true;
    for (gf::Suite s : suites) {
        const auto report = gf::run_suite(s, opt);
        const auto failures = report.failures();
        std::printf("suite=%s min_n=%llu max_n=%llu checks=%zu failed=%zu result=%s\n", gf::suite_name(s),
                    static_cast<unsigned long long>(opt.min_n), static_cast<unsigned long long>(max_n), report.size(), failures.size(),
                    failures.empty() ? "pass" : "FAIL");
        std::size_t shown = 0;
        for (const auto& f : failures) {
            if (++shown > 50) {
                std::printf("  ... %zu more failures\n", failures.size() - 50);
                break;
            }
            std::printf("  FAIL %s%s%s\n", f.name.c_str(), f.witness.empty() ? "" : " : ", f.witness.c_str());
        }
        ok = ok && failures.empty();
    }
    return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Group frames with few distinct inner products"};
    app.require_subcommand(1);

    FrameArgs build_args;
    std::string out_path;
    auto* build = app.add_subcommand("build", "Construct a frame and write it in FRM1 format");
    add_frame_options(build, build_args);
    build->add_option("--out", out_path, "Output file ('-' or omitted: stdout)");

    FrameArgs analyze_args;
    std::string in_path;
    auto* analyze = app.add_subcommand("analyze", "Coherence, bounds and structure of a frame file or spec");
    add_frame_options(analyze, analyze_args);
    analyze->add_option("--in", in_path, "FRM1 file to analyze instead of building from flags");

    std::uint64_t t_seed = 1;
    std::size_t t_seeds = 1;
    std::string t_rows;
    auto* table1 = app.add_subcommand("table1", "Group frames against random baselines for thirteen (n, m) pairs");
    table1->add_option("--seed", t_seed, "First baseline seed");
    table1->add_option("--seeds", t_seeds, "Number of consecutive seeds (baseline columns become medians)");
    table1->add_option("--rows", t_rows, "Comma-separated filter: 'n' or 'n:m'");

    gf::u64 b_r = 3, b_min = 1, b_max = 200, b_step = 1;
    auto* bounds = app.add_subcommand("bounds", "Closed-form coherence bounds along n = r m + 1");
    bounds->add_option("--r", b_r, "Number of cosets r")->required();
    bounds->add_option("--m-min", b_min, "Smallest m");
    bounds->add_option("--m-max", b_max, "Largest m");
    bounds->add_option("--m-step", b_step, "Step in m");

    std::string v_suite = "all";
    gf::u64 v_min = 3, v_max = 100;
    std::uint64_t v_seed = 1;
    auto* verify = app.add_subcommand("verify", "Run invariant suites over all primes and divisors in range");
    verify->add_option("--suite", v_suite, "numtheory | spectra | bounds | dihedral | pairing | all");
    verify->add_option("--min-n", v_min, "Smallest prime considered");
    verify->add_option("--max-n", v_max, "Largest prime considered");
    verify->add_option("--seed", v_seed, "Seed for random exponent sets (pairing)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build) return cmd_build(build_args, out_path);
        if (*analyze) return cmd_analyze(analyze_args, in_path);
        if (*table1) return cmd_table1(t_seed, t_seeds, t_rows);
        if (*bounds) return cmd_bounds(b_r, b_min, b_max, b_step);
        if (*verify) return cmd_verify(v_suite, v_min, v_max, v_seed);
    } catch (const gf::FrameParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
