#include "tdist/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tdist/automorphism.hpp"
#include "tdist/certificate.hpp"
#include "tdist/constructions.hpp"
#include "tdist/exact_search.hpp"
#include "tdist/labeling.hpp"
#include "tdist/report.hpp"
#include "tdist/tournament.hpp"

namespace tdist {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Full content to a temporary file first, then an atomic rename.
void write_file_atomic(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

void deliver(const std::optional<std::string>& out_path, const std::string& content,
             std::ostream& out) {
    if (out_path)
        write_file_atomic(*out_path, content);
    else
        out << content;
}

struct BudgetFlags {
    std::optional<int> size;
    std::optional<std::uint64_t> candidates;

    SearchBudget to_budget() const {
        SearchBudget b;
        b.max_subset_size = size;
        b.max_candidates = candidates;
        return b;
    }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags) {
    cmd->add_option("--budget-size", flags.size, "cap on the subset size to try");
    cmd->add_option("--budget-candidates", flags.candidates, "cap on examined candidates");
}

std::string witness_line(const Permutation& p, bool cycles) {
    return "witness: " + render_permutation(p, cycles);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimum-cost 2-distinguishing labelings of tournaments"};
    app.set_help_all_flag("--help-all");
    app.require_subcommand(1);

    // gen-hk
    auto* gen_hk = app.add_subcommand("gen-hk", "generate H_k in .trn format");
    int hk_k = 0;
    std::optional<std::string> gen_hk_out;
    gen_hk->add_option("--k", hk_k, "recursion depth (order 3^k)")->required();
    gen_hk->add_option("--out", gen_hk_out, "output path (default stdout)");

    // gen-random
    auto* gen_random = app.add_subcommand("gen-random", "generate a seeded random tournament");
    int rnd_n = 0;
    std::uint64_t rnd_seed = 0;
    std::optional<std::string> gen_random_out;
    gen_random->add_option("--n", rnd_n, "vertex count")->required();
    gen_random->add_option("--seed", rnd_seed, "PRNG seed")->required();
    gen_random->add_option("--out", gen_random_out, "output path (default stdout)");

    // rho / det / rho-prime
    auto* rho_cmd = app.add_subcommand("rho", "minimum distinguishing vertex class");
    std::string rho_input;
    std::optional<std::string> rho_out;
    BudgetFlags rho_budget;
    rho_cmd->add_option("input", rho_input, ".trn file")->required();
    rho_cmd->add_option("--out", rho_out, "certificate path (default stdout)");
    add_budget_flags(rho_cmd, rho_budget);

    auto* det_cmd = app.add_subcommand("det", "minimum determining set");
    std::string det_input;
    std::optional<std::string> det_out;
    BudgetFlags det_budget;
    det_cmd->add_option("input", det_input, ".trn file")->required();
    det_cmd->add_option("--out", det_out, "certificate path (default stdout)");
    add_budget_flags(det_cmd, det_budget);

    auto* rho_prime_cmd = app.add_subcommand("rho-prime", "minimum distinguishing arc class");
    std::string rho_prime_input;
    std::optional<std::string> rho_prime_out;
    BudgetFlags rho_prime_budget;
    bool module_filter = false;
    rho_prime_cmd->add_option("input", rho_prime_input, ".trn file")->required();
    rho_prime_cmd->add_option("--out", rho_prime_out, "certificate path (default stdout)");
    add_budget_flags(rho_prime_cmd, rho_prime_budget);
    rho_prime_cmd->add_flag("--optimize-module-filter", module_filter,
                            "prune arc sets leaving a basic module uncovered (H_k inputs only)");

    // verify-vertex / verify-arc
    auto* verify_vertex = app.add_subcommand("verify-vertex", "check a vertex labeling");
    std::string vv_trn, vv_lab;
    bool vv_cycles = false;
    verify_vertex->add_option("tournament", vv_trn, ".trn file")->required();
    verify_vertex->add_option("labeling", vv_lab, ".vlab file")->required();
    verify_vertex->add_flag("--cycles", vv_cycles, "print the witness in cycle notation");

    auto* verify_arc = app.add_subcommand("verify-arc", "check an arc labeling");
    std::string va_trn, va_lab;
    bool va_cycles = false;
    verify_arc->add_option("tournament", va_trn, ".trn file")->required();
    verify_arc->add_option("labeling", va_lab, ".alab file")->required();
    verify_arc->add_flag("--cycles", va_cycles, "print the witness in cycle notation");

    // construct-thm4 / construct-hk-arcs
    auto* thm4 = app.add_subcommand("construct-thm4",
                                    "determining-set based distinguishing arc labeling");
    std::string thm4_input;
    std::optional<std::string> thm4_out;
    BudgetFlags thm4_budget;
    thm4->add_option("input", thm4_input, ".trn file")->required();
    thm4->add_option("--out", thm4_out, ".alab output path (default stdout)");
    add_budget_flags(thm4, thm4_budget);

    auto* hk_arcs = app.add_subcommand("construct-hk-arcs", "recursive H_k arc labeling");
    int hk_arcs_k = 0;
    std::optional<std::string> hk_arcs_out;
    hk_arcs->add_option("--k", hk_arcs_k, "recursion depth")->required();
    hk_arcs->add_option("--out", hk_arcs_out, ".alab output path (default stdout)");

    // report
    auto* report = app.add_subcommand("report", "bound table over H_k and random tournaments");
    ReportOptions report_options;
    BudgetFlags report_budget;
    std::optional<std::string> report_out;
    report->add_option("--max-k", report_options.max_k, "largest H_k row");
    report->add_option("--random", report_options.random_rows, "number of random rows");
    report->add_option("--seed", report_options.seed, "base seed of the random rows");
    report->add_flag("--csv", report_options.csv, "emit CSV instead of aligned text");
    report->add_flag("--optimize-module-filter", report_options.module_filter,
                     "Prop.-4 pruning on the H_k rows");
    report->add_option("--out", report_out, "output path (default stdout)");
    add_budget_flags(report, report_budget);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen_hk->parsed()) {
            deliver(gen_hk_out, render_trn(Tournament::hk(hk_k)), out);
            return kExitOk;
        }
        if (gen_random->parsed()) {
            deliver(gen_random_out, render_trn(Tournament::random(rnd_n, rnd_seed)), out);
            return kExitOk;
        }
        if (rho_cmd->parsed()) {
            Tournament t = parse_trn(read_file(rho_input));
            VertexSetResult r = rho_exact(t, rho_budget.to_budget());
            bool verified = r.value && is_distinguishing_class(t, r.witness);
            deliver(rho_out, render_certificate(make_certificate("rho", t, r, verified)), out);
            return verified ? kExitOk : kExitNegative;
        }
        if (det_cmd->parsed()) {
            Tournament t = parse_trn(read_file(det_input));
            VertexSetResult r = det_exact(t, det_budget.to_budget());
            bool verified = r.value && is_determining_set(t, r.witness);
            deliver(det_out, render_certificate(make_certificate("det", t, r, verified)), out);
            return verified ? kExitOk : kExitNegative;
        }
        if (rho_prime_cmd->parsed()) {
            Tournament t = parse_trn(read_file(rho_prime_input));
            RhoPrimeOptions options;
            options.budget = rho_prime_budget.to_budget();
            options.module_filter = module_filter;
            ArcSetResult r = rho_prime_exact(t, options);
            bool verified =
                r.value &&
                is_distinguishing_arc(t, ArcLabeling::from_black_arcs(r.witness)).distinguishing;
            deliver(rho_prime_out, render_certificate(make_certificate("rho-prime", t, r, verified)),
                    out);
            return verified ? kExitOk : kExitNegative;
        }
        if (verify_vertex->parsed()) {
            Tournament t = parse_trn(read_file(vv_trn));
            VertexLabeling l = parse_vlab(read_file(vv_lab), t.order());
            DistinguishingVerdict verdict = is_distinguishing_vertex(t, l);
            out << "distinguishing: " << (verdict.distinguishing ? "yes" : "no") << "\n";
            if (!verdict.distinguishing) out << witness_line(*verdict.witness, vv_cycles);
            return verdict.distinguishing ? kExitOk : kExitNegative;
        }
        if (verify_arc->parsed()) {
            Tournament t = parse_trn(read_file(va_trn));
            ArcLabeling l = parse_alab(read_file(va_lab));
            l.validate_against(t);
            DistinguishingVerdict verdict = is_distinguishing_arc(t, l);
            out << "distinguishing: " << (verdict.distinguishing ? "yes" : "no") << "\n";
            if (!verdict.distinguishing) out << witness_line(*verdict.witness, va_cycles);
            return verdict.distinguishing ? kExitOk : kExitNegative;
        }
        if (thm4->parsed()) {
            Tournament t = parse_trn(read_file(thm4_input));
            try {
                Thm4Result result = construct_thm4_labeling(t, thm4_budget.to_budget());
                out << render_thm4_trace(result.trace);
                out << "black-arcs: " << result.labeling.black_count() << "\n";
                out << "bound: " << (7 * t.order() / 36 + 3) << "\n";
                out << "verified: yes\n";
                if (thm4_out)
                    write_file_atomic(*thm4_out, render_alab(result.labeling));
                else
                    out << "labeling:\n" << render_alab(result.labeling);
                return kExitOk;
            } catch (const Thm4VerificationError& e) {
                out << render_thm4_trace(e.trace);
                out << "verified: no\n";
                out << witness_line(e.witness, true);
                return kExitNegative;
            }
        }
        if (hk_arcs->parsed()) {
            deliver(hk_arcs_out, render_alab(construct_hk_arc_labeling(hk_arcs_k)), out);
            return kExitOk;
        }
        if (report->parsed()) {
            report_options.budget = report_budget.to_budget();
            deliver(report_out, build_report(report_options), out);
            return kExitOk;
        }
        err << "error: no command\n";
        return kExitUsage;
    } catch (const BudgetExhausted& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace tdist
