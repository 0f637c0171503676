#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <powsum/powsum.hpp>

#include "record.hpp"

namespace {

using powsum::Claim;
using powsum::CongruenceReport;
using powsum::Modulus;
using powsum::Natural;
using powsum::cli::OutputRecord;

// Exit codes: 0 all claims hold, 1 mathematical violation (an implementation
// bug, since every verified claim is a theorem), 2 usage or input error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

uint64_t parse_u64(std::string_view text, const char* what) {
    uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end)
        throw UsageError(std::string(what) + " must be a nonnegative integer, got \"" +
                         std::string(text) + "\"");
    return value;
}

// Inclusive range "lo..hi".
std::pair<uint64_t, uint64_t> parse_range(const std::string& text, const char* what) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw UsageError(std::string(what) + " must be a range lo..hi, got \"" + text + "\"");
    const uint64_t lo = parse_u64(std::string_view(text).substr(0, dots), what);
    const uint64_t hi = parse_u64(std::string_view(text).substr(dots + 2), what);
    if (lo > hi)
        throw UsageError(std::string(what) + " range is empty: " + text);
    return {lo, hi};
}

std::vector<uint64_t> parse_prime_list(const std::string& csv) {
    std::vector<uint64_t> primes;
    if (csv.empty()) return primes;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::size_t end = (comma == std::string::npos) ? csv.size() : comma;
        primes.push_back(parse_u64(std::string_view(csv).substr(pos, end - pos), "--primes entry"));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return primes;
}

unsigned worker_threads_from_env() {
    const char* raw = std::getenv("POWERSUM_THREADS");
    if (raw == nullptr) return 1;  // unset means single-threaded
    const uint64_t value = parse_u64(raw, "POWERSUM_THREADS");
    if (value == 0 || value > 4096) throw UsageError("POWERSUM_THREADS must be in [1, 4096]");
    return static_cast<unsigned>(value);
}

std::vector<Modulus> prime_moduli_up_to(uint64_t bound) {
    std::vector<Modulus> primes;
    for (uint64_t q = 2; q <= bound; ++q) {
        if (powsum::is_prime(q)) {
            Modulus m(q);
            m.is_prime();  // warm the cache before sharing across workers
            primes.push_back(m);
        }
    }
    return primes;
}

// Measures one call; sub-100us calls are re-measured over a loop.
template <typename F>
std::pair<std::string, uint64_t> timed_run(const F& fn) {
    using clock = std::chrono::steady_clock;
    const auto once_start = clock::now();
    std::string value = fn();
    const auto once = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - once_start);
    uint64_t ns = once.count() > 0 ? static_cast<uint64_t>(once.count()) : 1;
    if (ns < 100'000) {
        const uint64_t reps = std::clamp<uint64_t>(2'000'000 / ns, 8, 65536);
        std::size_t sink = 0;
        const auto loop_start = clock::now();
        for (uint64_t r = 0; r < reps; ++r) sink += fn().size();
        const auto total = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - loop_start);
        volatile std::size_t guard = sink;
        (void)guard;
        ns = std::max<uint64_t>(static_cast<uint64_t>(total.count()) / reps, 1);
    }
    return {std::move(value), ns};
}

OutputRecord report_record(const char* command, const CongruenceReport& rep,
                           std::vector<std::pair<std::string, uint64_t>> named_inputs) {
    OutputRecord rec;
    rec.command = command;
    rec.in("claim", std::string(powsum::claim_name(rep.claim)));
    for (auto& [key, value] : named_inputs) rec.in(key, value);
    rec.result = rep.lhs.to_decimal();
    if (rep.claim == Claim::HermiteBachmann && rep.modulus.has_value())
        rec.out("residue", rep.lhs % rep.modulus->value());
    if (rep.expected.has_value())
        rec.out("expected", rep.expected->value());
    else if (rep.rhs.has_value())
        rec.out("expected", rep.rhs->to_decimal());
    rec.holds = rep.holds;
    return rec;
}

int emit_verify(const OutputRecord& rec, bool plain) {
    std::cout << (plain ? rec.result : rec.line()) << '\n';
    return rec.holds.value_or(false) ? 0 : 1;
}

int run_powersum(uint64_t n, uint64_t a, const std::string& method, bool has_modulus,
                 uint64_t modulus, bool plain) {
    OutputRecord rec;
    rec.command = "powersum";
    rec.in("n", n).in("a", a).in("method", method);
    if (method == "naive") {
        rec.result = powsum::power_sum_naive(n, a).to_decimal();
    } else if (method == "pascal") {
        rec.result = powsum::power_sum_pascal(n, a).to_decimal();
    } else {  // mod
        if (!has_modulus) throw UsageError("--method mod requires --modulus");
        rec.in("modulus", modulus);
        rec.result = std::to_string(powsum::power_sum_mod(n, a, Modulus(modulus)).value());
    }
    std::cout << (plain ? rec.result : rec.line()) << '\n';
    return 0;
}

int run_sweep(const char* claim, uint64_t count, unsigned threads,
              std::vector<std::pair<std::string, std::string>> summary_inputs,
              const std::function<OutputRecord(uint64_t)>& point) {
    if (count > 100'000'000) throw UsageError("sweep grid too large");
    std::vector<std::string> lines(count);
    std::vector<char> ok(count, 1);
    powsum::parallel_for_blocks(count, threads, [&](unsigned, uint64_t lo, uint64_t hi) {
        for (uint64_t i = lo; i < hi; ++i) {
            const OutputRecord rec = point(i);
            ok[i] = rec.holds.value_or(true) ? 1 : 0;
            lines[i] = rec.line();
        }
    });
    uint64_t failures = 0;
    for (uint64_t i = 0; i < count; ++i) {
        if (!ok[i]) ++failures;
        std::cout << lines[i] << '\n';
    }
    OutputRecord summary;
    summary.command = "sweep";
    summary.in("claim", claim);
    for (auto& [key, value] : summary_inputs) summary.in(std::move(key), std::move(value));
    summary.result = std::to_string(count);
    summary.out("failures", failures);
    summary.holds = (failures == 0);
    std::cout << summary.line() << '\n';
    return failures == 0 ? 0 : 1;
}

int run_sweep_theorem1(const std::string& n_range, uint64_t p_max, unsigned threads) {
    const auto [n_lo, n_hi] = parse_range(n_range, "--n");
    if (n_lo == 0) throw UsageError("theorem1 requires n >= 1");
    const auto primes = prime_moduli_up_to(p_max);
    const uint64_t n_count = n_hi - n_lo + 1;
    const uint64_t count = n_count * primes.size();
    return run_sweep("theorem1", count, threads, {{"n", n_range}, {"p-max", std::to_string(p_max)}},
                     [&, n_lo = n_lo](uint64_t i) {
                         const uint64_t n = n_lo + i / primes.size();
                         const Modulus& p = primes[i % primes.size()];
                         return report_record("sweep", powsum::verify_theorem1(n, p),
                                              {{"n", n}, {"p", p.value()}});
                     });
}

int run_sweep_pascal(const std::string& n_range, const std::string& a_range, unsigned threads) {
    const auto [n_lo, n_hi] = parse_range(n_range, "--n");
    const auto [a_lo, a_hi] = parse_range(a_range, "--a");
    if (a_lo == 0) throw UsageError("pascal requires a >= 1");
    const uint64_t a_count = a_hi - a_lo + 1;
    const uint64_t count = (n_hi - n_lo + 1) * a_count;
    return run_sweep("pascal", count, threads, {{"n", n_range}, {"a", a_range}},
                     [&, n_lo = n_lo, a_lo = a_lo, a_count](uint64_t i) {
                         const uint64_t n = n_lo + i / a_count;
                         const uint64_t a = a_lo + i % a_count;
                         return report_record("sweep", powsum::verify_pascal_identity(n, a),
                                              {{"n", n}, {"a", a}});
                     });
}

int run_sweep_hb(const std::string& m_range, uint64_t p_max, unsigned threads) {
    const auto [m_lo, m_hi] = parse_range(m_range, "--m");
    if (m_lo == 0) throw UsageError("hb requires m >= 1");
    const auto primes = prime_moduli_up_to(p_max);
    const uint64_t count = (m_hi - m_lo + 1) * primes.size();
    return run_sweep("hb", count, threads, {{"m", m_range}, {"p-max", std::to_string(p_max)}},
                     [&, m_lo = m_lo](uint64_t i) {
                         const uint64_t m = m_lo + i / primes.size();
                         const Modulus& p = primes[i % primes.size()];
                         return report_record("sweep", powsum::verify_hermite_bachmann(m, p),
                                              {{"m", m}, {"p", p.value()}});
                     });
}

int run_sweep_fermat(uint64_t p_max, unsigned threads) {
    const auto primes = prime_moduli_up_to(p_max);
    std::vector<std::pair<uint64_t, std::size_t>> grid;  // (a, prime index)
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
        for (uint64_t a = 1; a < primes[pi].value(); ++a) grid.emplace_back(a, pi);
    return run_sweep("fermat", grid.size(), threads, {{"p-max", std::to_string(p_max)}},
                     [&](uint64_t i) {
                         const auto [a, pi] = grid[i];
                         return report_record("sweep", powsum::fermat_check(a, primes[pi]),
                                              {{"a", a}, {"p", primes[pi].value()}});
                     });
}

int run_em_search(uint64_t n_max, uint64_t m_max, bool primes_given, const std::string& primes_csv,
                  unsigned threads) {
    powsum::EmSearchConfig cfg;
    cfg.n_max = n_max;
    cfg.m_max = m_max;
    if (primes_given) cfg.filter_primes = parse_prime_list(primes_csv);

    const auto solutions = powsum::em_search(cfg, threads);
    for (const auto& sol : solutions) {
        OutputRecord rec;
        rec.command = "em-search";
        rec.in("n", sol.n).in("m", sol.m);
        rec.result = powsum::pow(Natural(sol.m), sol.n).to_decimal();  // S_n(m-1) == m^n
        rec.holds = true;
        std::cout << rec.line() << '\n';
    }

    OutputRecord summary;
    summary.command = "em-search";
    summary.in("n-max", n_max).in("m-max", m_max);
    if (!cfg.filter_primes.empty()) {
        std::string csv;
        for (uint64_t q : cfg.filter_primes) {
            if (!csv.empty()) csv += ',';
            csv += std::to_string(q);
        }
        summary.in("primes", csv);
    }
    summary.result = std::to_string(solutions.size());
    std::cout << summary.line() << '\n';
    return 0;
}

int run_bench(uint64_t n, uint64_t a, bool has_modulus, uint64_t modulus) {
    struct Strategy {
        std::string name;
        bool modular;
        std::function<std::string()> run;
    };
    std::vector<Strategy> strategies;
    strategies.push_back({"naive", false, [=] { return powsum::power_sum_naive(n, a).to_decimal(); }});
    strategies.push_back({"pascal", false, [=] { return powsum::power_sum_pascal(n, a).to_decimal(); }});
    if (has_modulus) {
        const Modulus m(modulus);
        strategies.push_back(
            {"mod-sum", true, [=] { return std::to_string(powsum::power_sum_mod(n, a, m).value()); }});
        if (m.is_prime() && a == m.value() && n >= 1)
            strategies.push_back(
                {"theorem1", true, [=] { return std::to_string(powsum::theorem1_residue(n, m).value()); }});
    }

    std::vector<std::string> results(strategies.size());
    std::vector<uint64_t> elapsed(strategies.size());
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        auto [value, ns] = timed_run(strategies[i].run);
        results[i] = std::move(value);
        elapsed[i] = ns;
    }

    // Correctness precedes timing: no record is emitted on disagreement.
    std::size_t first_exact = strategies.size(), first_modular = strategies.size();
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        auto& anchor = strategies[i].modular ? first_modular : first_exact;
        if (anchor == strategies.size()) {
            anchor = i;
        } else if (results[i] != results[anchor]) {
            std::cerr << "error: strategy " << strategies[i].name << " result " << results[i]
                      << " disagrees with " << strategies[anchor].name << " result "
                      << results[anchor] << '\n';
            return 1;
        }
    }
    if (has_modulus && first_exact < strategies.size() && first_modular < strategies.size()) {
        const uint64_t reduced = Natural::from_decimal(results[first_exact]) % modulus;
        if (std::to_string(reduced) != results[first_modular]) {
            std::cerr << "error: exact strategies reduce to " << reduced
                      << " mod " << modulus << " but modular strategies computed "
                      << results[first_modular] << '\n';
            return 1;
        }
    }

    for (std::size_t i = 0; i < strategies.size(); ++i) {
        OutputRecord rec;
        rec.command = "bench";
        rec.in("n", n).in("a", a);
        if (has_modulus) rec.in("modulus", modulus);
        rec.in("strategy", strategies[i].name);
        rec.result = results[i];
        rec.elapsed_ns = elapsed[i];
        std::cout << rec.line() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and modular power-sum arithmetic: evaluation via Pascal's identity,\n"
                 "congruence verification, and a desk-scale Erdos-Moser equation search."};
    app.require_subcommand(1);
#ifdef POWSUM_VERSION
    app.set_version_flag("--version", std::string("powsum ") + POWSUM_VERSION);
#endif

    // powersum
    auto* cmd_powersum = app.add_subcommand("powersum", "Evaluate S_n(a) = 1^n + 2^n + ... + a^n");
    uint64_t ps_n = 0, ps_a = 0, ps_modulus = 0;
    std::string ps_method;
    bool ps_plain = false;
    cmd_powersum->add_option("--n", ps_n, "exponent")->required();
    cmd_powersum->add_option("--a", ps_a, "upper summation bound")->required();
    cmd_powersum->add_option("--method", ps_method, "evaluation strategy")
        ->required()
        ->check(CLI::IsMember({"naive", "pascal", "mod"}));
    auto* ps_mod_opt = cmd_powersum->add_option("--modulus", ps_modulus, "modulus for --method mod");
    cmd_powersum->add_flag("--plain", ps_plain, "print only the result value");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Check one claim instance (exit 0 holds, 1 violated, 2 usage)");
    cmd_verify->require_subcommand(1);

    auto* v_pascal = cmd_verify->add_subcommand("pascal", "sum C(n+1,k) S_k(a) == (a+1)^(n+1) - 1");
    uint64_t vp_n = 0, vp_a = 0;
    bool vp_plain = false;
    v_pascal->add_option("--n", vp_n, "exponent")->required();
    v_pascal->add_option("--a", vp_a, "upper summation bound (>= 1)")->required();
    v_pascal->add_flag("--plain", vp_plain, "print only the left-hand value");

    auto* v_theorem1 = cmd_verify->add_subcommand("theorem1", "S_n(p) == -1 or 0 mod p by whether p-1 | n");
    uint64_t vt_n = 0, vt_p = 0;
    bool vt_plain = false;
    v_theorem1->add_option("--n", vt_n, "exponent (>= 1)")->required();
    v_theorem1->add_option("--p", vt_p, "prime modulus")->required();
    v_theorem1->add_flag("--plain", vt_plain, "print only the brute-force residue");

    auto* v_fermat = cmd_verify->add_subcommand("fermat", "a^(p-1) == 1 mod p for p prime, p not dividing a");
    uint64_t vf_a = 0, vf_p = 0;
    bool vf_plain = false;
    v_fermat->add_option("--a", vf_a, "base")->required();
    v_fermat->add_option("--p", vf_p, "prime modulus")->required();
    v_fermat->add_flag("--plain", vf_plain, "print only the computed residue");

    auto* v_hb = cmd_verify->add_subcommand("hb", "sum of C(m,k) over 0 < k < m with p-1 | k is divisible by p");
    uint64_t vh_m = 0, vh_p = 0;
    bool vh_plain = false;
    v_hb->add_option("--m", vh_m, "row index (>= 1)")->required();
    v_hb->add_option("--p", vh_p, "prime modulus")->required();
    v_hb->add_flag("--plain", vh_plain, "print only the exact sum");

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "Verify a claim across a grid, one record per point");
    cmd_sweep->require_subcommand(1);

    auto* s_theorem1 = cmd_sweep->add_subcommand("theorem1", "grid over n and primes p");
    std::string st_n_range;
    uint64_t st_p_max = 0;
    s_theorem1->add_option("--n", st_n_range, "inclusive range lo..hi")->required();
    s_theorem1->add_option("--p-max", st_p_max, "check every prime p <= p-max")->required();

    auto* s_pascal = cmd_sweep->add_subcommand("pascal", "grid over n and a");
    std::string sp_n_range, sp_a_range;
    s_pascal->add_option("--n", sp_n_range, "inclusive range lo..hi")->required();
    s_pascal->add_option("--a", sp_a_range, "inclusive range lo..hi")->required();

    auto* s_hb = cmd_sweep->add_subcommand("hb", "grid over m and primes p");
    std::string sh_m_range;
    uint64_t sh_p_max = 0;
    s_hb->add_option("--m", sh_m_range, "inclusive range lo..hi")->required();
    s_hb->add_option("--p-max", sh_p_max, "check every prime p <= p-max")->required();

    auto* s_fermat = cmd_sweep->add_subcommand("fermat", "all 1 <= a < p for every prime p <= p-max");
    uint64_t sf_p_max = 0;
    s_fermat->add_option("--p-max", sf_p_max, "check every prime p <= p-max")->required();

    // em-search
    auto* cmd_em = app.add_subcommand("em-search", "Search S_n(m-1) == m^n over 1 <= n <= n-max, 2 <= m <= m-max");
    uint64_t em_n_max = 0, em_m_max = 0;
    std::string em_primes;
    cmd_em->add_option("--n-max", em_n_max, "largest exponent")->required()->check(CLI::PositiveNumber);
    cmd_em->add_option("--m-max", em_m_max, "largest m")->required()->check(CLI::PositiveNumber);
    auto* em_primes_opt =
        cmd_em->add_option("--primes", em_primes, "comma-separated filter primes; empty disables filtering");

    // bench
    auto* cmd_bench = app.add_subcommand("bench", "Time the evaluation strategies on one query");
    uint64_t be_n = 0, be_a = 0, be_modulus = 0;
    cmd_bench->add_option("--n", be_n, "exponent")->required();
    cmd_bench->add_option("--a", be_a, "upper summation bound")->required();
    auto* be_mod_opt = cmd_bench->add_option("--modulus", be_modulus, "also time the modular strategies");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const unsigned threads = worker_threads_from_env();

        if (cmd_powersum->parsed())
            return run_powersum(ps_n, ps_a, ps_method, ps_mod_opt->count() > 0, ps_modulus, ps_plain);

        if (v_pascal->parsed())
            return emit_verify(report_record("verify", powsum::verify_pascal_identity(vp_n, vp_a),
                                             {{"n", vp_n}, {"a", vp_a}}),
                               vp_plain);
        if (v_theorem1->parsed())
            return emit_verify(report_record("verify", powsum::verify_theorem1(vt_n, Modulus(vt_p)),
                                             {{"n", vt_n}, {"p", vt_p}}),
                               vt_plain);
        if (v_fermat->parsed())
            return emit_verify(report_record("verify", powsum::fermat_check(vf_a, Modulus(vf_p)),
                                             {{"a", vf_a}, {"p", vf_p}}),
                               vf_plain);
        if (v_hb->parsed())
            return emit_verify(report_record("verify", powsum::verify_hermite_bachmann(vh_m, Modulus(vh_p)),
                                             {{"m", vh_m}, {"p", vh_p}}),
                               vh_plain);

        if (s_theorem1->parsed()) return run_sweep_theorem1(st_n_range, st_p_max, threads);
        if (s_pascal->parsed()) return run_sweep_pascal(sp_n_range, sp_a_range, threads);
        if (s_hb->parsed()) return run_sweep_hb(sh_m_range, sh_p_max, threads);
        if (s_fermat->parsed()) return run_sweep_fermat(sf_p_max, threads);

        if (cmd_em->parsed())
            return run_em_search(em_n_max, em_m_max, em_primes_opt->count() > 0, em_primes, threads);

        if (cmd_bench->parsed())
            return run_bench(be_n, be_a, be_mod_opt->count() > 0, be_modulus);

        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const powsum::NotPrimeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const powsum::DivisibleBaseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
