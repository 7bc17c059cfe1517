// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ag/decoder.hpp"
#include "ag/error.hpp"
#include "test_support.hpp"

using namespace ag;

namespace {

Word add_error(const gf::Field& F, Word w, int weight, std::mt19937_64& rng) {
    std::vector<std::size_t> pos(w.size());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
    std::shuffle(pos.begin(), pos.end(), rng);
    for (int k = 0; k < weight; ++k) w[pos[std::size_t(k)]] = F.add(w[pos[std::size_t(k)]], agtest::random_elem(F, rng, true));
    return w;
}

std::set<Word> codeword_set(const DecodeResult& res) {
    std::set<Word> out;
    for (const auto& e : res.list) out.insert(e.codeword);
    return out;
}

// Follows the branch of the transmitted message by hand and checks the
// full invariant set, leading terms included, after every rebasing.
void walk_true_path(const Decoder& dec, const Message& msg, const Word& r, int tau) {
    const Code& code = dec.code();
    CostCounter ctr;
    DecoderState st = dec.init(r, &ctr);
    REQUIRE(dec.invariant_violation(st).empty());
    while (st.s >= 0) {
        const VoteRecord votes = dec.pair(st, &ctr);
        const gf::Elem w = code.contains(st.s) ? msg.at(st.s) : gf::kZero;
        const auto cands = dec.candidates(st, votes, tau);
        REQUIRE(std::find(cands.begin(), cands.end(), w) != cands.end());
        st = dec.eliminate_gaps(dec.rebase(st, votes, w, &ctr), st.s, &ctr);
        const std::string why = dec.invariant_violation(st);
        INFO("s = " << st.s);
        REQUIRE(why.empty());
    }
    CHECK(st.w_chosen == msg);
}

}  // namespace

TEST_CASE("order parametrized by s") {
    const auto ctx = agtest::context("klein");
    const Curve& C = ctx->curve();
    CHECK(cmp_order_s(C, {0, 0, 0, 1}, {0, 0, 0, 0}, 3) == std::strong_ordering::greater);
    CHECK(cmp_order_s(C, {1, 0, 0, 0}, {0, 0, 0, 1}, 0) == std::strong_ordering::greater);
    CHECK(cmp_order_s(C, {1, 0, 0, 0}, {0, 0, 0, 1}, 3) == std::strong_ordering::less);
    CHECK(cmp_order_s(C, {0, 0, 0, 1}, {1, 0, 0, 0}, 4) == std::strong_ordering::greater);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(0, 5);
    for (int trial = 0; trial < 2000; ++trial) {
        const Exponents u{d(rng), d(rng), d(rng)}, v{d(rng), d(rng), d(rng)};
        Exponents uz = u, vz = v;
        uz.push_back(0);
        vz.push_back(0);
        CHECK(cmp_order_s(C, uz, vz, d(rng)) == C.cmp_weighted_revlex(u, v));
    }
}

TEST_CASE("error-free words decode to themselves") {
    for (const char* name : {"klein", "hermitian16", "gs9"}) {
        const auto ctx = agtest::context(name);
        const Code code = build_code(*ctx, 10);
        const Decoder dec(code);
        std::mt19937_64 rng(4);
        const Message msg = agtest::random_message(code, rng);
        const Word c = encode(code, msg);

        CostCounter ctr;
        const DecoderState st = dec.init(c, &ctr);
        const VoteRecord votes = dec.pair(st, &ctr);
        if (st.s == code.max_gamma()) CHECK(dec.candidates(st, votes, 0) == std::vector<gf::Elem>{msg.at(st.s)});

        for (Criterion crit : {Criterion::First, Criterion::Second, Criterion::Third}) {
            DecodeOptions opt;
            opt.tau = 0;
            opt.criterion = crit;
            const DecodeResult res = dec.decode(c, opt);
            REQUIRE(res.list.size() == 1);
            CHECK(res.list[0].codeword == c);
            CHECK(res.list[0].distance == 0);
            CHECK(res.list[0].message == msg);
        }

        // The zero word starts from the top of hhat.
        const DecoderState z = dec.init(Word(std::size_t(ctx->n())), &ctr);
        CHECK(z.s == ctx->hhat().back());
    }
}

TEST_CASE("radius zero on a non-codeword gives an empty list") {
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, 4);
    const Decoder dec(code);
    std::mt19937_64 rng(8);
    const Word r = add_error(ctx->field(), encode(code, agtest::random_message(code, rng)), 1, rng);
    DecodeOptions opt;
    for (Criterion crit : {Criterion::First, Criterion::Second, Criterion::Third}) {
        opt.criterion = crit;
        CHECK(dec.decode(r, opt).list.empty());
    }
}

TEST_CASE("invariants along the transmitted branch") {
    struct Cfg {
        const char* curve;
        int delta, tau;
    };
    for (const Cfg& cfg : {Cfg{"klein", 4, 3}, Cfg{"klein", 10, 6}, Cfg{"hermitian16", 20, 11}, Cfg{"gs9", 20, 9}}) {
        const auto ctx = agtest::context(cfg.curve);
        const Code code = build_code(*ctx, cfg.delta);
        const Decoder dec(code);
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 5; ++trial) {
            const Message msg = agtest::random_message(code, rng);
            const Word r = add_error(ctx->field(), encode(code, msg), cfg.tau, rng);
            walk_true_path(dec, msg, r, cfg.tau);
        }
    }
}

TEST_CASE("list equals brute force on a small code") {
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, std::vector<int>{0, 3, 5, 6});
    const Decoder dec(code);
    const auto& F = ctx->field();

    std::vector<std::pair<Message, Word>> all;
    for (int v = 0; v < 8 * 8 * 8 * 8; ++v) {
        Message m;
        int x = v;
        for (int s : code.gamma) {
            m[s] = F.from_int(x % 8);
            x /= 8;
        }
        all.emplace_back(m, encode(code, m));
    }

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const int tau = 6 + trial % 5;
        const Word r = add_error(F, all[rng() % all.size()].second, tau, rng);
        std::set<Word> oracle;
        for (const auto& [m, c] : all)
            if (hamming_distance(c, r) <= tau) oracle.insert(c);
        for (Criterion crit : {Criterion::First, Criterion::Second, Criterion::Third}) {
            DecodeOptions opt;
            opt.tau = tau;
            opt.criterion = crit;
            opt.check_invariants = true;
            const DecodeResult res = dec.decode(r, opt);
            INFO("tau " << tau << " criterion " << int(crit));
            CHECK(codeword_set(res) == oracle);
            CHECK(res.iterations <= iteration_bound(code, tau, crit));
            for (const auto& e : res.list) {
                CHECK(encode(code, e.message) == e.codeword);
                CHECK(hamming_distance(e.codeword, r) == e.distance);
            }
        }
    }
}

TEST_CASE("jumping over gaps can lose a codeword near the radius limit") {
    // Same small code; with tau close to (n - g) / 2 the descent reaches the
    // gaps with f_i still carrying terms at gap orders.
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, std::vector<int>{0, 3, 5, 6});
    const Decoder dec(code);
    std::mt19937_64 rng(13);
    int lost_skipping = 0, lost_eliminating = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Message msg = agtest::random_message(code, rng);
        const Word c = encode(code, msg);
        const Word r = add_error(ctx->field(), c, 10, rng);
        DecodeOptions opt;
        opt.tau = 10;
        opt.gap_elimination = false;
        lost_skipping += codeword_set(dec.decode(r, opt)).count(c) == 0;
        opt.gap_elimination = true;
        opt.check_invariants = true;
        lost_eliminating += codeword_set(dec.decode(r, opt)).count(c) == 0;
    }
    CHECK(lost_skipping > 0);
    CHECK(lost_eliminating == 0);
}

TEST_CASE("criteria agree beyond half the designed distance") {
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, 10);
    const Decoder dec(code);
    std::mt19937_64 rng(30);
    for (int trial = 0; trial < 10; ++trial) {
        const Message msg = agtest::random_message(code, rng);
        const Word c = encode(code, msg);
        const Word r = add_error(ctx->field(), c, 6, rng);
        std::set<Word> first;
        for (Criterion crit : {Criterion::First, Criterion::Second, Criterion::Third}) {
            DecodeOptions opt;
            opt.tau = 6;
            opt.criterion = crit;
            const auto found = codeword_set(dec.decode(r, opt));
            CHECK(found.count(c) == 1);
            if (crit == Criterion::First)
                first = found;
            else
                CHECK(found == first);
        }
    }
}

TEST_CASE("iteration bounds") {
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, 4);
    CHECK(iteration_bound(code, 1, Criterion::First) == 11);
    CHECK(iteration_bound(code, 1, Criterion::Second) == 11);
    CHECK(iteration_bound(code, 1, Criterion::Third) == 26);
    CHECK(iteration_bound(code, 3, Criterion::First) == 28680);
    CHECK(iteration_bound(code, 3, Criterion::Third) == 73736);
    CHECK(iteration_bound(code, 2, Criterion::First) == 328);
    CHECK(iteration_bound(code, 2, Criterion::Third) == 1160);
}

TEST_CASE("iteration cap") {
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, 4);
    const Decoder dec(code);
    std::mt19937_64 rng(6);
    const Word r = add_error(ctx->field(), encode(code, agtest::random_message(code, rng)), 3, rng);
    DecodeOptions opt;
    opt.tau = 3;
    opt.iteration_cap = 5;
    try {
        dec.decode(r, opt);
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}
