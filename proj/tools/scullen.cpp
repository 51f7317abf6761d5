#include "scullen/abc.hpp"
#include "scullen/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace scullen;

// Exit codes: 0 ok / no non-family hits, 1 non-family hit found,
// 2 usage, 3 budget/limit, 4 I/O or checkpoint.
enum ExitCode { kOk = 0, kHitFound = 1, kUsage = 2, kBudget = 3, kIo = 4 };

Natural parse_natural(const std::string& text)
{
    Natural v;
    if (mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0 || v < 0)
        throw CLI::ValidationError("expected a non-negative integer, got '" + text + "'");
    return v;
}

const char* ordering_name(std::strong_ordering o)
{
    return o == std::strong_ordering::less      ? "less"
           : o == std::strong_ordering::greater ? "greater"
                                                : "equal";
}

int run(int argc, char** argv)
{
    CLI::App app{"s-Cullen repunit search toolkit"};
    app.require_subcommand(1);

    // cullen <s> <n>
    unsigned long arg_s = 2, arg_n = 1;
    auto* cmd_cullen = app.add_subcommand("cullen", "print C_{s,n} = n*s^n + 1");
    cmd_cullen->add_option("s", arg_s, "base s >= 2")->required();
    cmd_cullen->add_option("n", arg_n, "exponent n >= 1")->required();

    // detect <N>
    std::string arg_value;
    auto* cmd_detect =
        app.add_subcommand("detect", "print all repunit forms of N as 'b q'");
    cmd_detect->add_option("N", arg_value, "integer to test")->required();

    // families a|b --limit K
    std::string arg_family;
    std::size_t arg_limit = 10;
    auto* cmd_families =
        app.add_subcommand("families", "list members of the known infinite families");
    cmd_families->add_option("which", arg_family, "a or b")
        ->required()
        ->check(CLI::IsMember({"a", "b"}));
    cmd_families->add_option("--limit", arg_limit, "number of members")
        ->check(CLI::PositiveNumber);

    // bounds eq1|eq3|general [--q Q] [--enumerate | --check S N]
    std::string arg_ineq;
    unsigned long arg_q = 4;
    bool arg_enumerate = false;
    std::vector<unsigned long> arg_check;
    auto* cmd_bounds =
        app.add_subcommand("bounds", "decide or enumerate the exclusion inequalities");
    cmd_bounds->add_option("which", arg_ineq, "eq1, eq3 or general")
        ->required()
        ->check(CLI::IsMember({"eq1", "eq3", "general"}));
    cmd_bounds->add_option("--q", arg_q, "repunit length for 'general' (>= 4)");
    auto* opt_enum =
        cmd_bounds->add_flag("--enumerate", arg_enumerate, "print the full exception set");
    cmd_bounds->add_option("--check", arg_check, "decide a single (s, n) cell")
        ->expected(2)
        ->excludes(opt_enum);

    // abc check <a> <b> <c> | abc scan-case1 --b-max B
    auto* cmd_abc = app.add_subcommand("abc", "abc triple checks at eps = 1/6");
    cmd_abc->require_subcommand(1);
    std::string arg_a, arg_b, arg_c;
    auto* cmd_abc_check = cmd_abc->add_subcommand("check", "check one triple a + b = c");
    cmd_abc_check->add_option("a", arg_a)->required();
    cmd_abc_check->add_option("b", arg_b)->required();
    cmd_abc_check->add_option("c", arg_c)->required();
    unsigned long arg_bmax = 10000;
    auto* cmd_abc_scan =
        cmd_abc->add_subcommand("scan-case1", "exceptional b with (b+1)^6 >= rad(b(b+1))^7");
    cmd_abc_scan->add_option("--b-max", arg_bmax, "scan bound")->required();

    // search
    SearchConfig cfg;
    std::string arg_out;
    auto* cmd_search = app.add_subcommand("search", "exhaustive s-Cullen repunit scan");
    cmd_search->add_option("--s-min", cfg.s_min, "lowest s (default 2)");
    cmd_search->add_option("--s-max", cfg.s_max, "highest s")->required();
    cmd_search->add_option("--n-min", cfg.n_min, "lowest n (default 1)");
    cmd_search->add_option("--n-max", cfg.n_max, "highest n")->required();
    cmd_search->add_option("--workers", cfg.workers, "parallel workers")
        ->check(CLI::PositiveNumber);
    cmd_search->add_option("--checkpoint", cfg.checkpoint_path,
                           "checkpoint file; resumed when it exists");
    cmd_search->add_flag("--resume", cfg.require_checkpoint,
                         "require the checkpoint file to exist");
    cmd_search->add_flag("--exclude-families", cfg.exclude_families,
                         "drop hits inside the two known families");
    cmd_search->add_flag("--conditional", cfg.report_conditional_exclusions,
                         "add the conditional-exclusion overlay record");
    cmd_search->add_option("--stop-after-s", cfg.stop_after_s,
                           "stop after this column (testing aid)");
    cmd_search->add_option("--out", arg_out, "write the JSONL report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << app.help();
        return kUsage;
    }

    if (cmd_cullen->parsed()) {
        std::cout << cullen_value({arg_s, arg_n}).get_str() << '\n';
        return kOk;
    }

    if (cmd_detect->parsed()) {
        for (const auto& f : detect_repunits(parse_natural(arg_value)))
            std::cout << f.base.get_str() << ' ' << f.length << '\n';
        return kOk;
    }

    if (cmd_families->parsed()) {
        if (arg_family == "a") {
            for (unsigned long s : family_a_members(arg_limit))
                std::cout << s << '\n';
        } else {
            for (const auto& m : family_b_members(arg_limit))
                std::cout << m.k << ' ' << m.s.get_str() << ' ' << m.b.get_str() << '\n';
        }
        return kOk;
    }

    if (cmd_bounds->parsed()) {
        if (!arg_check.empty()) {
            const unsigned long s = arg_check[0], n = arg_check[1];
            const bool holds = arg_ineq == "eq1"   ? eq1_holds(s, n)
                               : arg_ineq == "eq3" ? eq3_holds(s, n)
                                                   : general_q_holds(s, n, arg_q);
            std::cout << (holds ? "true" : "false") << '\n';
            return kOk;
        }
        if (!arg_enumerate)
            throw CLI::ValidationError("bounds: pass --enumerate or --check S N");
        if (arg_ineq == "general")
            throw CLI::ValidationError("bounds: only eq1 and eq3 have finite enumerations");
        const auto cells =
            arg_ineq == "eq1" ? enumerate_eq1_exceptions() : enumerate_eq3_exceptions();
        for (const auto& [s, n] : cells)
            std::cout << s << ' ' << n << '\n';
        return kOk;
    }

    if (cmd_abc_check->parsed()) {
        const AbcReport r = abc_check(
            {parse_natural(arg_a), parse_natural(arg_b), parse_natural(arg_c)});
        std::cout << "rad " << r.rad_abc.get_str() << '\n'
                  << "exceptional " << (r.exceptional ? "true" : "false") << '\n'
                  << "quality~ " << r.quality_approx << '\n';
        return kOk;
    }

    if (cmd_abc_scan->parsed()) {
        for (const auto& r : scan_case1_exceptions(arg_bmax))
            std::cout << r.triple.a.get_str() << ' ' << r.triple.c.get_str() << ' '
                      << r.rad_abc.get_str() << ' ' << r.quality_approx << '\n';
        return kOk;
    }

    if (cmd_search->parsed()) {
        const SearchReport report = run_search(cfg);
        if (arg_out.empty()) {
            write_report_jsonl(std::cout, cfg, report);
        } else {
            std::ofstream os(arg_out, std::ios::trunc);
            if (!os)
                throw IoError("cannot open report file: " + arg_out);
            write_report_jsonl(os, cfg, report);
            if (!os.flush())
                throw IoError("cannot write report file: " + arg_out);
        }
        std::cerr << "scanned " << report.stats.cells << " cells in "
                  << report.stats.seconds << " s\n";
        return report.stats.hits_none > 0 ? kHitFound : kOk;
    }

    return kUsage;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const CheckpointError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    }
}
