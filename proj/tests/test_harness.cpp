// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ag/error.hpp"
#include "ag/harness.hpp"
#include "test_support.hpp"

using namespace ag;

namespace {

int weight(const Word& w) { return hamming_distance(w, Word(w.size())); }

bool same(const TrialStats& a, const TrialStats& b) {
    if (a.records.size() != b.records.size()) return false;
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        const auto &x = a.records[i], &y = b.records[i];
        if (x.iterations != y.iterations || x.cost.bound != y.cost.bound || x.cost.ops() != y.cost.ops() ||
            x.found != y.found || x.success != y.success)
            return false;
    }
    return a.avg_iter == b.avg_iter && a.avg_ops == b.avg_ops && a.max_found == b.max_found;
}

}  // namespace

TEST_CASE("random errors have the requested weight") {
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, 4);
    std::mt19937_64 rng(1);
    for (int tau = 0; tau <= ctx->n(); ++tau) CHECK(weight(gen_error(code, ErrorMode::Random, tau, {}, rng)) == tau);
    const Word all = gen_error(code, ErrorMode::Random, ctx->n(), {}, rng);
    for (auto v : all) CHECK_FALSE(v.is_zero());
}

TEST_CASE("errors toward a nearby codeword") {
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, 4);
    const auto& F = ctx->field();
    const auto pool = low_weight_codewords(code, 2000, 3);
    REQUIRE_FALSE(pool.empty());
    CHECK(weight(pool.front()) == 4);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const Word e = gen_error(code, ErrorMode::TowardNearest, 2, pool, rng);
        CHECK(weight(e) == 2);
        // e is a scalar multiple of some pool word restricted to part of its support.
        bool matched = false;
        for (const Word& c : pool) {
            for (int sc = 1; sc < F.size() && !matched; ++sc) {
                bool ok = true;
                for (std::size_t p = 0; p < e.size() && ok; ++p)
                    ok = e[p].is_zero() || e[p] == F.mul(F.from_int(sc), c[p]);
                matched = ok;
            }
            if (matched) break;
        }
        CHECK(matched);
    }
    try {
        gen_error(code, ErrorMode::TowardNearest, 5, pool, rng);
        FAIL("expected NearestUnavailable");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NearestUnavailable);
    }
}

TEST_CASE("trials are reproducible and independent of threading") {
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, 4);
    TrialConfig cfg;
    cfg.curve_id = "klein";
    cfg.tau = 2;
    cfg.trials = 12;
    cfg.seed = 99;
    const TrialStats a = run_trials(code, cfg);
    const TrialStats b = run_trials(code, cfg);
    cfg.threads = 4;
    const TrialStats c = run_trials(code, cfg);
    CHECK(same(a, b));
    CHECK(same(a, c));
    cfg.seed = 100;
    CHECK_FALSE(same(a, run_trials(code, cfg)));
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));

    CHECK(a.successes == a.trials);
    CHECK(double(a.max_iter) >= a.avg_iter);
    CHECK(double(a.max_ops) >= a.avg_ops);
    CHECK(double(a.max_found) >= a.avg_found);
    CHECK(a.max_iter <= a.bound);
}

TEST_CASE("radius zero") {
    const auto ctx = agtest::context("hermitian16");
    const Code code = build_code(*ctx, 20);
    TrialConfig cfg;
    cfg.tau = 0;
    cfg.trials = 5;
    for (Criterion crit : {Criterion::First, Criterion::Second, Criterion::Third}) {
        cfg.criterion = crit;
        const TrialStats st = run_trials(code, cfg);
        CHECK(st.successes == 5);
        CHECK(st.max_found == 1);
        CHECK(st.max_iter <= st.bound);
    }
}

TEST_CASE("unique decoding regime on Klein") {
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, 10);
    TrialConfig cfg;
    cfg.tau = 4;
    cfg.criterion = Criterion::Second;
    cfg.trials = 50;
    const TrialStats st = run_trials(code, cfg);
    CHECK(st.avg_found == 1.0);
    CHECK(st.success_rate() == 1.0);
    CHECK(st.bound == 17);
}

TEST_CASE("iteration average on the Garcia-Stichtenoth code at tau 11") {
    const auto ctx = agtest::context("gs9");
    const Code code = build_code(*ctx, 20);
    TrialConfig cfg;
    cfg.tau = 11;
    cfg.trials = 50;
    const TrialStats st = run_trials(code, cfg);
    CHECK(st.avg_iter >= 200.0);
    CHECK(st.avg_iter <= 320.0);
    CHECK(st.successes == 50);
}

TEST_CASE("output formats") {
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, 4);
    TrialConfig cfg;
    cfg.curve_id = "klein";
    cfg.tau = 1;
    cfg.trials = 3;
    cfg.criterion = Criterion::First;
    const TrialStats st = run_trials(code, cfg);
    std::ostringstream line;
    write_stats_line(line, st);
    std::istringstream in(line.str());
    std::string curve, mode;
    int size, dag, tau, crit;
    std::uint64_t bound;
    in >> curve >> size >> dag >> tau >> mode >> crit >> bound;
    CHECK(curve == "klein");
    CHECK(size == 18);
    CHECK(dag == 4);
    CHECK(tau == 1);
    CHECK(mode == "R");
    CHECK(crit == 1);
    CHECK(bound == 11);
    std::string rest;
    int fields = 0;
    while (in >> rest) ++fields;
    CHECK(fields == 7);

    std::ostringstream table;
    write_stats_table_header(table);
    write_stats_table_row(table, st);
    CHECK(table.str().find("klein") != std::string::npos);
}
