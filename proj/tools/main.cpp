// Command-line frontend for the odd-multiplicity sumset toolkit.
//
// Exit codes: 0 success/pass, 1 bound-or-conjecture violation (or oracle
// disagreement), 2 input error, 3 arithmetic overflow, 4 budget exceeded.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oddsum/gf2poly.hpp"
#include "oddsum/pilz.hpp"
#include "oddsum/setops.hpp"
#include "oddsum/theorem.hpp"

using namespace oddsum;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitBudget = 4;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string render(const IntSet& s) {
    return s.empty() ? "(empty)" : s.to_string();
}

// The a list is a multiset: repeats are meaningful, order is kept.
std::vector<uint64_t> parse_uint_list(const std::string& text) {
    std::vector<uint64_t> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, v);
        if (ec != std::errc() || ptr != text.data() + comma)
            throw std::invalid_argument("invalid integer list: '" + text + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::vector<IntSet> parse_sets(const std::vector<std::string>& literals) {
    std::vector<IntSet> out;
    out.reserve(literals.size());
    for (const std::string& lit : literals) out.push_back(IntSet::parse(lit));
    return out;
}

int run_fold(const std::vector<std::string>& literals, bool oracle,
             const char* name) {
    const std::vector<IntSet> sets = parse_sets(literals);
    IntSet result = sets.front();
    IntSet check = sets.front();
    const bool is_oplus = std::string(name) == "oplus";
    for (size_t i = 1; i < sets.size(); ++i) {
        if (is_oplus)
            result = setops::oplus(result, sets[i]);
        else
            result = setops::nabla(result, sets[i]);
        if (oracle) {
            check = is_oplus ? setops::oplus_counting(check, sets[i])
                             : setops::nabla_counting(check, sets[i]);
        }
    }
    if (oracle && result != check) {
        std::cerr << "ORACLE MISMATCH: polynomial path disagrees with counting\n";
        return kExitViolation;
    }
    std::cout << render(result) << " (size " << result.size() << ")\n";
    return kExitPass;
}

int run_delta(const std::vector<std::string>& literals, bool oracle) {
    const std::vector<IntSet> sets = parse_sets(literals);
    const IntSet result = setops::symdiff(sets);
    if (oracle && result != setops::symdiff_counting(sets)) {
        std::cerr << "ORACLE MISMATCH: polynomial path disagrees with counting\n";
        return kExitViolation;
    }
    std::cout << render(result) << " (size " << result.size() << ")\n";
    return kExitPass;
}

uint64_t counting_instance_size(const theorem::Instance& inst) {
    IntSet acc(inst.v);
    for (uint64_t ai : inst.a) {
        std::vector<uint64_t> prog;
        for (uint64_t j = 0; j < inst.n; ++j)
            prog.push_back(detail::checked_mul(j, ai));
        acc = setops::oplus_counting(acc, IntSet(std::move(prog)));
    }
    return acc.size();
}

int run_verify(uint64_t n, const std::string& a_lit, const std::string& v_lit,
               bool oracle, bool unchecked_v) {
    const std::vector<uint64_t> a = parse_uint_list(a_lit);
    std::vector<uint64_t> v{0};
    if (!v_lit.empty()) v = IntSet::parse(v_lit).elements();

    if (unchecked_v) {
        // Exploratory: no size-parity requirement on V and no claim made.
        Gf2Poly p = Gf2Poly::from_set(v);
        for (uint64_t ai : a) p = mul(p, Gf2Poly::geometric(ai, n));
        std::cout << "size=" << p.support_size() << " n=" << n << " UNCHECKED\n";
        return kExitPass;
    }

    const theorem::Instance inst(n, a, v);
    const theorem::Report report = theorem::verify_thm2(inst);
    if (oracle && counting_instance_size(inst) != report.support_size) {
        std::cerr << "ORACLE MISMATCH: polynomial path disagrees with counting\n";
        return kExitViolation;
    }
    std::cout << "size=" << report.support_size << " n=" << report.n << " "
              << (report.pass ? "PASS" : "FAIL") << "\n";
    return report.pass ? kExitPass : kExitViolation;
}

int run_certify(uint64_t n, const std::string& a_lit, const std::string& v_lit,
                const std::string& out_path) {
    const std::vector<uint64_t> a = parse_uint_list(a_lit);
    std::vector<uint64_t> v{0};
    if (!v_lit.empty()) v = IntSet::parse(v_lit).elements();
    const theorem::Instance inst(n, a, v);

    const theorem::Certificate cert = theorem::make_certificate(inst);
    const std::string json = theorem::certificate_to_json(cert);
    if (out_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << json;
    }

    const theorem::VerifyResult audit = theorem::verify_certificate(inst, cert);
    if (!audit) {
        std::cerr << "audit FAILED: " << audit.reason << "\n";
        return kExitViolation;
    }
    std::cout << "audit OK total=" << cert.total << " n=" << n
              << " classes=" << cert.t << " per_class_min=" << (uint64_t(1) << cert.alpha)
              << (cert.truncated ? " truncated" : "") << "\n";
    return kExitPass;
}

int run_residue_counts(uint64_t n, const std::string& a_lit) {
    const std::vector<uint64_t> a = parse_uint_list(a_lit);
    const theorem::Instance raw(n, a);
    const auto [inst, g] = theorem::normalize(raw);
    const auto [alpha, t] = theorem::split_n(n);
    const std::vector<theorem::u128> counts = theorem::residue_counts(inst);
    std::cout << "g=" << g << " t=" << t << " k=" << inst.k() << "\n";
    for (uint64_t b = 0; b < counts.size(); ++b)
        std::cout << "F[" << b << "]=" << theorem::u128_to_string(counts[b]) << "\n";
    bool constant = true;
    for (const theorem::u128& c : counts) constant = constant && c == counts[0];
    std::cout << "constant=" << (constant ? "true" : "false") << "\n";
    return kExitPass;
}

int run_pilz_scan(uint64_t n, uint64_t umax, uint64_t max_size,
                  const std::string& out_path, uint64_t budget, unsigned threads,
                  const std::string& resume_after) {
    pilz::ScanOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    if (!resume_after.empty()) opts.start_after = IntSet::parse(resume_after);

    std::ofstream file;
    std::ostream* csv = &std::cout;
    std::ostream* summary_out = &std::cerr;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
        csv = &file;
        summary_out = &std::cout;
    }

    *csv << pilz::scan_csv_header();
    const pilz::ScanSummary summary =
        pilz::scan(n, umax, max_size, opts,
                   [&](const pilz::ScanRecord& rec) { *csv << pilz::scan_csv_row(rec); });
    *summary_out << pilz::scan_summary_text(summary);
    if (n >= 2) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.4f", pilz::lower_bound_display(n));
        *summary_out << "published_lower_bound=" << buf
                     << " (n/(ln n)^0.2223, natural log)\n";
    }

    if (!summary.violations.empty()) return kExitViolation;
    if (!summary.complete) return kExitBudget;
    return kExitPass;
}

int run_cube_check(uint64_t r, const std::string& set_lit, uint64_t random_count,
                   uint64_t coord_max, uint64_t seed) {
    if (coord_max == 0)
        throw std::invalid_argument("cube-check: --coord-max must be positive");
    uint64_t failures = 0;
    if (!set_lit.empty()) {
        const GridSet a = GridSet::parse(set_lit);
        const pilz::CubeReport rep = pilz::cube_check(r, a);
        std::cout << "size=" << rep.size << " min=" << (uint64_t(1) << r) << " "
                  << (rep.pass ? "PASS" : "FAIL") << "\n";
        if (!rep.pass) ++failures;
    } else {
        std::mt19937_64 rng(seed);
        for (uint64_t i = 0; i < random_count; ++i) {
            std::vector<GridSet::Point> pts;
            const size_t count = 1 + rng() % 16;
            for (size_t j = 0; j < count; ++j) {
                GridSet::Point p(r);
                for (uint64_t d = 0; d < r; ++d) p[d] = int64_t(rng() % coord_max);
                pts.push_back(std::move(p));
            }
            const GridSet a(r, std::move(pts));
            const pilz::CubeReport rep = pilz::cube_check(r, a);
            if (!rep.pass) {
                ++failures;
                std::cout << "FAIL set=" << a.to_string() << " size=" << rep.size
                          << "\n";
            }
        }
        std::cout << "checked=" << random_count << " failures=" << failures << "\n";
    }
    return failures == 0 ? kExitPass : kExitViolation;
}

int run_bench(uint64_t degree, uint64_t reps, uint64_t seed) {
    if (degree == 0 || reps == 0)
        throw std::invalid_argument("bench: degree and reps must be positive");
    if (degree > (uint64_t(1) << 25))
        throw BudgetExceeded("bench: degree exceeds the memory budget (2^25)");

    std::mt19937_64 rng(seed);
    auto random_dense = [&](uint64_t deg) {
        std::vector<uint64_t> e{0, deg};
        for (uint64_t x = 1; x < deg; ++x)
            if (rng() & 1) e.push_back(x);
        return Gf2Poly::from_set(std::move(e));
    };
    const Gf2Poly a = random_dense(degree);
    const Gf2Poly b = random_dense(degree);

    // Correctness spot-check on truncated operands against pair counting.
    {
        std::vector<uint64_t> sa = a.support(), sb = b.support();
        sa.resize(std::min<size_t>(sa.size(), 256));
        sb.resize(std::min<size_t>(sb.size(), 256));
        const IntSet ia(sa), ib(sb);
        if (setops::oplus(ia, ib) != setops::oplus_counting(ia, ib)) {
            std::cerr << "ORACLE MISMATCH in dense kernel self-check\n";
            return kExitViolation;
        }
    }

    double best = 0.0, total = 0.0;
    uint64_t sink = 0;
    for (uint64_t i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Gf2Poly prod = mul(a, b);
        const auto stop = std::chrono::steady_clock::now();
        const double secs = std::chrono::duration<double>(stop - start).count();
        total += secs;
        if (i == 0 || secs < best) best = secs;
        sink ^= prod.support_size();
    }
    const double avg = total / double(reps);
    const double bits = double(2 * degree + 1);
    std::cout << "degree=" << degree << " reps=" << reps << " self_check=ok"
              << " result_support=" << sink << "\n";
    std::cout << "best_seconds=" << best << " avg_seconds=" << avg
              << " bits_per_second=" << (avg > 0 ? bits / avg : 0.0) << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd-multiplicity sumsets, GF(2) products and dilation scans"};
    app.require_subcommand(1);

    std::vector<std::string> set_args;
    bool oracle = false;

    CLI::App* cmd_oplus = app.add_subcommand(
        "oplus", "odd-representation sumset of the given sets (left fold)");
    cmd_oplus->add_option("sets", set_args, "comma-separated integer sets")->required();
    cmd_oplus->add_flag("--oracle", oracle, "cross-check with the counting oracle");

    CLI::App* cmd_delta = app.add_subcommand(
        "delta", "elements covered an odd number of times by the given sets");
    cmd_delta->add_option("sets", set_args, "comma-separated integer sets")->required();
    cmd_delta->add_flag("--oracle", oracle, "cross-check with the counting oracle");

    CLI::App* cmd_nabla = app.add_subcommand(
        "nabla", "odd-representation productset of the given sets (left fold)");
    cmd_nabla->add_option("sets", set_args, "comma-separated integer sets")->required();
    cmd_nabla->add_flag("--oracle", oracle, "cross-check with the counting oracle");

    uint64_t n = 1;
    std::string a_lit, v_lit, out_path;
    bool unchecked_v = false;

    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "check the odd-sumset lower bound |V (+) (+)_i {a_i..n a_i}| >= n");
    cmd_verify->add_option("-n", n, "progression length")->required();
    cmd_verify->add_option("-a", a_lit, "comma-separated a_1,...,a_k")->required();
    cmd_verify->add_option("-V", v_lit, "odd-size translate set (default {0})");
    cmd_verify->add_flag("--oracle", oracle, "cross-check with the counting oracle");
    cmd_verify->add_flag("--unchecked-v", unchecked_v,
                         "compute the size for any V without asserting the bound");

    CLI::App* cmd_certify = app.add_subcommand(
        "certify", "emit and audit a residue-class certificate for the bound");
    cmd_certify->add_option("-n", n, "progression length")->required();
    cmd_certify->add_option("-a", a_lit, "comma-separated a_1,...,a_k")->required();
    cmd_certify->add_option("-V", v_lit, "odd-size translate set (default {0})");
    cmd_certify->add_option("--out", out_path, "write the certificate JSON here");

    CLI::App* cmd_residue = app.add_subcommand(
        "residue-counts", "per-residue term counts of the expanded t-part");
    cmd_residue->add_option("-n", n, "progression length")->required();
    cmd_residue->add_option("-a", a_lit, "comma-separated a_1,...,a_k")->required();

    uint64_t umax = 1, max_size = 1, budget = uint64_t(1) << 24;
    unsigned threads = 0;
    std::string resume_after;
    CLI::App* cmd_scan = app.add_subcommand(
        "pilz-scan", "exhaustive |A delta 2A ... delta nA| >= n scan over subsets");
    cmd_scan->add_option("-n", n, "number of dilations")->required();
    cmd_scan->add_option("-u", umax, "universe maximum (sets A within [1,u])")->required();
    cmd_scan->add_option("-s", max_size, "maximum |A|")->required();
    cmd_scan->add_option("--out", out_path, "write CSV here (summary then on stdout)");
    cmd_scan->add_option("--budget", budget, "max subsets to process");
    cmd_scan->add_option("--threads", threads, "worker threads (0 = auto)");
    cmd_scan->add_option("--resume-after", resume_after, "resume after this set");

    uint64_t cube_r = 1, random_count = 0, coord_max = 8, seed = 0;
    std::string grid_lit;
    CLI::App* cmd_cube = app.add_subcommand(
        "cube-check", "|{0,1}^r (+) A| >= 2^r check over grid sets");
    cmd_cube->add_option("-r", cube_r, "cube dimension (<= 3)")->required();
    cmd_cube->add_option("--set", grid_lit, "grid set literal, e.g. (0,0),(1,2)");
    cmd_cube->add_option("--random", random_count, "check this many random sets");
    cmd_cube->add_option("--coord-max", coord_max, "random coordinates in [0,max)");
    cmd_cube->add_option("--seed", seed, "RNG seed");

    uint64_t degree = 0, reps = 1;
    CLI::App* cmd_bench = app.add_subcommand(
        "bench", "dense GF(2) multiplication throughput");
    cmd_bench->add_option("-d", degree, "operand degree")->required();
    cmd_bench->add_option("-r", reps, "repetitions");
    cmd_bench->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (cmd_oplus->parsed()) return run_fold(set_args, oracle, "oplus");
        if (cmd_delta->parsed()) return run_delta(set_args, oracle);
        if (cmd_nabla->parsed()) return run_fold(set_args, oracle, "nabla");
        if (cmd_verify->parsed()) return run_verify(n, a_lit, v_lit, oracle, unchecked_v);
        if (cmd_certify->parsed()) return run_certify(n, a_lit, v_lit, out_path);
        if (cmd_residue->parsed()) return run_residue_counts(n, a_lit);
        if (cmd_scan->parsed())
            return run_pilz_scan(n, umax, max_size, out_path, budget, threads,
                                 resume_after);
        if (cmd_cube->parsed()) {
            if (grid_lit.empty() && random_count == 0)
                throw std::invalid_argument("cube-check: give --set or --random");
            return run_cube_check(cube_r, grid_lit, random_count, coord_max, seed);
        }
        if (cmd_bench->parsed()) return run_bench(degree, reps, seed);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
