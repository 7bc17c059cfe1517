// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>
#include <numeric>
#include <sstream>

#include "ag/error.hpp"
#include "ag/harness.hpp"
#include "test_support.hpp"

using namespace ag;

TEST_CASE("evaluation and interpolation matrices are inverse") {
    for (const char* name : {"klein", "hermitian16", "gs9"}) {
        const auto ctx = agtest::context(name);
        const auto& F = ctx->field();
        const std::size_t n = std::size_t(ctx->n());
        const auto& V = ctx->evaluation_matrix();
        const auto& M = ctx->interpolation_matrix();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                gf::Elem acc = gf::kZero;
                for (std::size_t k = 0; k < n; ++k) acc = F.add(acc, F.mul(M[i * n + k], V[k * n + j]));
                REQUIRE(acc == (i == j ? gf::kOne : gf::kZero));
            }
        // Column k of V is psi_k, the k-th element of hhat, evaluated pointwise.
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t p = 0; p < n; ++p)
                CHECK(V[p * n + k] == ctx->phi_value(ctx->hhat()[k], p));
    }
}

TEST_CASE("hhat and the vanishing basis") {
    for (const char* name : {"klein", "hermitian16", "gs9"}) {
        const auto ctx = agtest::context(name);
        const auto& sg = ctx->semigroup();
        CHECK(int(ctx->hhat().size()) == ctx->n());
        for (int s : ctx->hhat()) CHECK(sg.is_nongap(s));
        int sum = 0;
        for (int i = 0; i < ctx->a1(); ++i) {
            const RingElem& e = ctx->eta(i);
            CHECK(ctx->ring().pole_order(e) == sg.eta_degs[std::size_t(i)]);
            CHECK(sg.eta_degs[std::size_t(i)] % ctx->a1() == i);
            CHECK(ctx->ring().lc(e) == gf::kOne);
            for (auto v : ctx->ev(e)) CHECK(v.is_zero());
            sum += sg.eta_degs[std::size_t(i)] - sg.apery[std::size_t(i)];
        }
        // The eta_i y-module has colength n.
        CHECK(sum == ctx->a1() * ctx->n());
        // A nongap lies in hhat exactly when phi_s is not congruent to a lower
        // combination modulo the vanishing ideal, i.e. it is below eta in its class.
        for (int s = 0; s <= ctx->hhat().back(); ++s) {
            if (!sg.is_nongap(s)) continue;
            const int cls = s % ctx->a1();
            CHECK(ctx->in_hhat(s) == (s < sg.eta_degs[std::size_t(cls)]));
        }
    }
}

TEST_CASE("Klein vanishing basis degrees") {
    const auto ctx = agtest::context("klein");
    CHECK(ctx->semigroup().eta_degs == std::vector<int>{24, 31, 26});
    CHECK(ctx->hhat().back() == 28);
    CHECK(ctx->n() == 23);
}

TEST_CASE("evaluation is a ring homomorphism and interpolation inverts it") {
    for (const char* name : {"klein", "hermitian16", "gs9"}) {
        const auto ctx = agtest::context(name);
        const auto& F = ctx->field();
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            const RingElem f = agtest::random_ring_elem(ctx->curve(), rng, 5);
            const RingElem g = agtest::random_ring_elem(ctx->curve(), rng, 5);
            const Word ef = ctx->ev(f), eg = ctx->ev(g), efg = ctx->ev(ctx->ring().mul(f, g));
            for (std::size_t p = 0; p < ef.size(); ++p) CHECK(efg[p] == F.mul(ef[p], eg[p]));

            Word r(std::size_t(ctx->n()));
            for (auto& v : r) v = agtest::random_elem(F, rng);
            CostCounter ctr;
            const RingElem h = ctx->interpolate(r, &ctr);
            CHECK(ctx->ev(h) == r);
            CHECK(ctr.bound == std::uint64_t(ctx->n()) * std::uint64_t(ctx->n()));
            if (!h.is_zero()) CHECK(ctx->in_hhat(ctx->ring().pole_order(h)));
        }
    }
}

TEST_CASE("code parameters") {
    struct Row {
        const char* curve;
        int delta, size, dag;
    };
    for (const Row& row : {Row{"klein", 4, 18, 4}, Row{"klein", 10, 11, 10}, Row{"hermitian16", 6, 55, 6},
                           Row{"hermitian16", 20, 39, 20}, Row{"gs9", 6, 58, 6}, Row{"gs9", 10, 52, 10},
                           Row{"gs9", 20, 37, 20}}) {
        const auto ctx = agtest::context(row.curve);
        const Code code = build_code(*ctx, row.delta);
        CHECK(code.dim() == row.size);
        CHECK(code.dag == row.dag);
        CHECK(code.dag_upto(-1) == INT_MAX);
        CHECK(code.dag_upto(code.max_gamma()) == code.dag);
        for (int s : code.gamma) CHECK(ctx->nu(s) >= row.delta);
    }
}

TEST_CASE("designed distance bounds the weight of sampled codewords") {
    for (const char* name : {"klein", "hermitian16"}) {
        const auto ctx = agtest::context(name);
        for (int delta : {4, 10}) {
            const Code code = build_code(*ctx, delta);
            const auto low = low_weight_codewords(code, 2000, 5);
            REQUIRE_FALSE(low.empty());
            for (const Word& w : low) {
                const int wt = hamming_distance(w, Word(w.size()));
                CHECK(wt >= code.dag);
                // Low-weight words really are codewords: they interpolate into the span of Gamma.
                const RingElem h = ctx->interpolate(w);
                for (int s : ctx->hhat())
                    if (!code.contains(s)) {
                        const auto [m, j] = ctx->semigroup().phi_index(s);
                        const auto& comp = h.comps[std::size_t(j)];
                        CHECK((std::size_t(m) >= comp.size() || comp[std::size_t(m)].is_zero()));
                    }
            }
        }
    }
}

TEST_CASE("encoding is linear and readable") {
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, 4);
    const auto& F = ctx->field();
    std::mt19937_64 rng(2);
    const Message a = agtest::random_message(code, rng), b = agtest::random_message(code, rng);
    Message ab;
    for (int s : code.gamma) ab[s] = F.add(a.at(s), b.at(s));
    const Word ca = encode(code, a), cb = encode(code, b), cab = encode(code, ab);
    for (std::size_t p = 0; p < ca.size(); ++p) CHECK(cab[p] == F.add(ca[p], cb[p]));
    CHECK(ctx->ev(message_function(code, a)) == ca);

    std::stringstream ws;
    write_word(ws, ca);
    CHECK(read_word(ws, F, ctx->n()) == ca);

    std::stringstream ms;
    write_message(ms, a);
    Message back = read_message(ms, code);
    CHECK(encode(code, back) == ca);

    std::istringstream partial("# one coefficient\n5 3\n");
    const Message p = read_message(partial, code);
    CHECK(encode(code, p) == ctx->ev(ctx->ring().monomial(F.from_int(3), 5)));

    std::istringstream off("4 1\n");
    CHECK_THROWS_AS(read_message(off, code), Error);
    std::istringstream short_word("1 2 3");
    CHECK_THROWS_AS(read_word(short_word, F, ctx->n()), Error);
    std::istringstream big("9");
    CHECK_THROWS_AS(read_word(big, F, 1), Error);
}

TEST_CASE("explicit Gamma") {
    const auto ctx = agtest::context("klein");
    const Code code = build_code(*ctx, std::vector<int>{5, 0, 3});
    CHECK(code.gamma == std::vector<int>{0, 3, 5});
    CHECK(code.dag == std::min({ctx->nu(0), ctx->nu(3), ctx->nu(5)}));
    auto kind_of = [&](std::vector<int> g) {
        try {
            build_code(*ctx, std::move(g));
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Parse;
    };
    CHECK(kind_of({4}) == ErrorKind::InvalidGamma);
    CHECK(kind_of({200}) == ErrorKind::InvalidGamma);
    CHECK(kind_of({}) == ErrorKind::EmptyGamma);
    CHECK_THROWS_AS(build_code(*ctx, 1000), Error);
}
