// SPDX-License-Identifier: Apache-2.0
// Command-line front end: curve info, code construction, encoding, list
// decoding, iteration bounds and Monte-Carlo simulation.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ag/error.hpp"
#include "ag/harness.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitBudget = 3;
constexpr int kExitSimulationFailed = 4;

struct CodeArgs {
    std::string curve;
    int delta = 0;
    std::vector<int> gamma;
};

void add_code_options(CLI::App* sub, CodeArgs& a) {
    sub->add_option("--curve", a.curve, "curve file")->required()->check(CLI::ExistingFile);
    auto* d = sub->add_option("--delta", a.delta, "designed distance: Gamma = {s in hhat : nu(s) >= delta}");
    auto* g = sub->add_option("--gamma", a.gamma, "explicit Gamma (list of s)")->delimiter(',');
    d->excludes(g);
    g->excludes(d);
}

ag::Code make_code(const ag::CodeContext& ctx, const CodeArgs& a) {
    if (!a.gamma.empty()) return ag::build_code(ctx, a.gamma);
    if (a.delta <= 0) throw CLI::ValidationError("--delta", "give --delta (> 0) or --gamma");
    return ag::build_code(ctx, a.delta);
}

std::string curve_id(const std::string& path) { return std::filesystem::path(path).stem().string(); }

template <class T>
void print_list(std::ostream& out, const char* label, const std::vector<T>& v) {
    out << label;
    for (const auto& x : v) out << ' ' << x;
    out << '\n';
}

std::unique_ptr<std::istream> open_input(const std::string& path) {
    if (path == "-") return std::make_unique<std::istream>(std::cin.rdbuf());
    auto in = std::make_unique<std::ifstream>(path);
    if (!*in) throw ag::Error(ag::ErrorKind::Parse, "cannot open '" + path + "'");
    return in;
}

ag::Criterion parse_criterion(int c) { return static_cast<ag::Criterion>(c); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-point AG codes: construction, encoding and list decoding by voting in Groebner bases"};
    app.require_subcommand(1);

    std::string info_curve;
    auto* info = app.add_subcommand("info", "print semigroup data of a curve");
    info->add_option("--curve", info_curve, "curve file")->required()->check(CLI::ExistingFile);

    CodeArgs build_args;
    auto* build = app.add_subcommand("build-code", "print Gamma, dimension and d_AG");
    add_code_options(build, build_args);

    CodeArgs enc_args;
    std::string msg_path = "-";
    auto* enc = app.add_subcommand("encode", "encode a message file (lines 's value')");
    add_code_options(enc, enc_args);
    enc->add_option("--message", msg_path, "message file, '-' for stdin");

    CodeArgs dec_args;
    std::string word_path = "-";
    int dec_tau = 0, dec_crit = 3;
    std::uint64_t dec_cap = 0;
    bool dec_skip_gaps = false;
    auto* dec = app.add_subcommand("decode", "list-decode a received word");
    add_code_options(dec, dec_args);
    dec->add_option("--word", word_path, "received word file, '-' for stdin");
    dec->add_option("--tau", dec_tau, "decoding radius")->required()->check(CLI::NonNegativeNumber);
    dec->add_option("--criterion", dec_crit, "termination criterion")->check(CLI::Range(1, 3));
    dec->add_option("--cap", dec_cap, "iteration cap (default: closed-form bound)");
    dec->add_flag("--skip-gaps", dec_skip_gaps, "jump from s to prec(s) without eliminating at gaps");

    CodeArgs bnd_args;
    int bnd_tau = 0;
    auto* bnd = app.add_subcommand("bounds", "print the iteration upper bounds");
    add_code_options(bnd, bnd_args);
    bnd->add_option("--tau", bnd_tau, "decoding radius")->required()->check(CLI::NonNegativeNumber);

    CodeArgs sim_args;
    int sim_tau = 0, sim_trials = 50, sim_threads = 1;
    std::vector<int> sim_crit{1, 2, 3};
    std::uint64_t sim_seed = 1;
    std::string sim_mode = "R", sim_format = "table";
    bool sim_check = false, sim_skip_gaps = false;
    auto* sim = app.add_subcommand("simulate", "run seeded decoding trials");
    add_code_options(sim, sim_args);
    sim->add_option("--tau", sim_tau, "number of errors = decoding radius")->required()->check(CLI::NonNegativeNumber);
    sim->add_option("--criterion", sim_crit, "termination criteria to run")->delimiter(',')->check(CLI::Range(1, 3));
    sim->add_option("--trials", sim_trials, "trials per criterion")->check(CLI::PositiveNumber);
    sim->add_option("--seed", sim_seed, "random seed");
    sim->add_option("--mode", sim_mode, "error mode: R (random) or N (toward a nearby codeword)")
        ->check(CLI::IsMember({"R", "N"}));
    sim->add_option("--format", sim_format, "output format")->check(CLI::IsMember({"table", "lines"}));
    sim->add_option("--threads", sim_threads, "worker threads")->check(CLI::PositiveNumber);
    sim->add_flag("--check-invariants", sim_check, "verify decoder invariants after every rebasing");
    sim->add_flag("--skip-gaps", sim_skip_gaps, "jump from s to prec(s) without eliminating at gaps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*info) {
            const auto ctx = ag::CodeContext::load(info_curve);
            const auto& sg = ctx->semigroup();
            const auto& F = ctx->field();
            std::cout << "field " << F.size() << " (p=" << F.characteristic() << ", m=" << F.degree() << ")\n";
            print_list(std::cout, "weights", ctx->curve().data().weights);
            print_list(std::cout, "generators", sg.generators());
            std::cout << "genus " << ctx->genus() << '\n';
            print_list(std::cout, "gaps", sg.gaps);
            print_list(std::cout, "apery", sg.apery);
            std::cout << "n " << ctx->n() << '\n';
            print_list(std::cout, "hhat", sg.hhat);
            print_list(std::cout, "eta_pole_orders", sg.eta_degs);
            std::cout << "nu";
            for (int s : sg.hhat) std::cout << ' ' << s << ':' << ctx->nu(s);
            std::cout << '\n';
            return 0;
        }

        if (*build) {
            const auto ctx = ag::CodeContext::load(build_args.curve);
            const ag::Code code = make_code(*ctx, build_args);
            print_list(std::cout, "gamma", code.gamma);
            std::cout << "dim " << code.dim() << "\ndag " << code.dag << '\n';
            return 0;
        }

        if (*enc) {
            const auto ctx = ag::CodeContext::load(enc_args.curve);
            const ag::Code code = make_code(*ctx, enc_args);
            const auto in = open_input(msg_path);
            ag::write_word(std::cout, ag::encode(code, ag::read_message(*in, code)));
            return 0;
        }

        if (*dec) {
            const auto ctx = ag::CodeContext::load(dec_args.curve);
            const ag::Code code = make_code(*ctx, dec_args);
            const auto in = open_input(word_path);
            const ag::Word r = ag::read_word(*in, ctx->field(), ctx->n());
            ag::DecodeOptions opt;
            opt.tau = dec_tau;
            opt.criterion = parse_criterion(dec_crit);
            opt.iteration_cap = dec_cap;
            opt.gap_elimination = !dec_skip_gaps;
            const ag::DecodeResult res = ag::Decoder(code).decode(r, opt);
            std::cout << "found " << res.list.size() << "\niterations " << res.iterations << "\nops "
                      << res.cost.bound << "\nexecuted " << res.cost.ops() << '\n';
            for (const auto& e : res.list) {
                std::cout << "distance " << e.distance << "\ncodeword ";
                ag::write_word(std::cout, e.codeword);
                std::cout << "message";
                for (const auto& [s, c] : e.message) std::cout << ' ' << s << ':' << int(c.value);
                std::cout << '\n';
            }
            return 0;
        }

        if (*bnd) {
            const auto ctx = ag::CodeContext::load(bnd_args.curve);
            const ag::Code code = make_code(*ctx, bnd_args);
            const std::uint64_t third = ag::iteration_bound(code, bnd_tau, ag::Criterion::Third);
            const std::uint64_t first = ag::iteration_bound(code, bnd_tau, ag::Criterion::First);
            std::cout << "gamma_size " << code.dim() << "\ndag " << code.dag << "\ntau " << bnd_tau
                      << "\nbound_criteria_1_2 " << first << "\nbound_criterion_3 " << third << '\n';
            return 0;
        }

        if (*sim) {
            const auto ctx = ag::CodeContext::load(sim_args.curve);
            const ag::Code code = make_code(*ctx, sim_args);
            if (sim_tau > ctx->n()) throw CLI::ValidationError("--tau", "must not exceed n");
            if (sim_format == "table") ag::write_stats_table_header(std::cout);
            bool all_ok = true;
            for (int c : sim_crit) {
                ag::TrialConfig cfg;
                cfg.curve_id = curve_id(sim_args.curve);
                cfg.tau = sim_tau;
                cfg.criterion = parse_criterion(c);
                cfg.trials = sim_trials;
                cfg.mode = sim_mode == "N" ? ag::ErrorMode::TowardNearest : ag::ErrorMode::Random;
                cfg.seed = sim_seed;
                cfg.threads = sim_threads;
                cfg.check_invariants = sim_check;
                cfg.gap_elimination = !sim_skip_gaps;
                const ag::TrialStats st = ag::run_trials(code, cfg);
                if (sim_format == "table")
                    ag::write_stats_table_row(std::cout, st);
                else
                    ag::write_stats_line(std::cout, st);
                all_ok = all_ok && st.successes == st.trials && st.max_iter <= st.bound;
            }
            if (!all_ok) {
                std::cerr << "simulate: transmitted codeword missing from a list or iteration bound exceeded\n";
                return kExitSimulationFailed;
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const ag::Error& e) {
        std::cerr << e.what() << '\n';
        return e.kind() == ag::ErrorKind::BudgetExceeded ? kExitBudget : kExitData;
    }
    return 0;
}
