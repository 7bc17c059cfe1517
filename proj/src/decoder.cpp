// SPDX-License-Identifier: Apache-2.0
#include "ag/decoder.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "ag/error.hpp"

namespace ag {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > kSaturated / b ? kSaturated : a * b;
}

int degree(const Poly& p) { return int(p.size()) - 1; }

}  // namespace

int gamma(const PairElem& f) { return gamma(f.a) + gamma(f.b); }

std::strong_ordering cmp_order_s(const Curve& curve, const Exponents& u, const Exponents& v, int s) {
    const std::size_t t = std::size_t(curve.t());
    const Exponents ux(u.begin(), u.begin() + long(t)), vx(v.begin(), v.begin() + long(t));
    const long ku = long(u[t]) * s + curve.weight(ux);
    const long kv = long(v[t]) * s + curve.weight(vx);
    if (ku != kv) return ku <=> kv;
    for (std::size_t i = 0; i <= t; ++i)
        if (u[i] != v[i]) return v[i] <=> u[i];
    return std::strong_ordering::equal;
}

Decoder::Decoder(const Code& code) : code_(&code), ctx_(code.ctx) {}

DecoderState Decoder::init(const Word& r, CostCounter* ctr) const {
    const CoordRing& ring = ctx_->ring();
    const auto& sg = ctx_->semigroup();
    const int a1 = ctx_->a1();
    const RingElem h = ctx_->interpolate(r, ctr);
    const int N = h.is_zero() ? sg.max_hhat() : ring.pole_order(h);

    DecoderState st;
    // Starting no lower than max Gamma keeps every message coefficient in
    // play even if the top of the codeword cancels against the error.
    st.s = std::max(N, code_->max_gamma());
    for (int i = 0; i < a1; ++i) {
        const RingElem& yi = sg.y[std::size_t(i)];
        st.f.push_back({yi, ring.neg(ring.mul(yi, h, ctr))});
        st.g.push_back({RingElem(a1), ctx_->eta(i)});
        st.nu.push_back(ring.lc(ctx_->eta(i)));
    }
    st.r_shift = r;
    return st;
}

VoteRecord Decoder::pair(const DecoderState& st, CostCounter* ctr) const {
    const gf::Field& F = ctx_->field();
    const CoordRing& ring = ctx_->ring();
    const auto& sg = ctx_->semigroup();
    const int a1 = ctx_->a1();
    const int s = st.s;
    VoteRecord v;
    for (int i = 0; i < a1; ++i) {
        const Poly& aii = st.f[std::size_t(i)].a.comps[std::size_t(i)];
        const int delta = sg.pole(degree(aii), i);
        const int ip = (i + s) % a1;
        const int k = (delta + s - sg.apery[std::size_t(ip)]) / a1;
        const Poly& dd = st.g[std::size_t(ip)].b.comps[std::size_t(ip)];
        const int c = degree(dd) - k;
        const gf::Elem lca = aii.back();
        const gf::Elem lcy = ring.y_product_lc(i, s % a1);
        const gf::Elem mu = F.mul(lca, lcy);
        const Poly& bip = st.f[std::size_t(i)].b.comps[std::size_t(ip)];
        const gf::Elem coeff = (k >= 0 && std::size_t(k) < bip.size()) ? bip[std::size_t(k)] : gf::kZero;
        const gf::Elem w = F.neg(F.div(coeff, mu));
        if (ctr) {
            if (!lca.is_one() && !lcy.is_one()) ++ctr->muls;
            if (!coeff.is_zero() && !mu.is_one()) ++ctr->divs;
        }
        v.iprime.push_back(ip);
        v.k.push_back(k);
        v.c.push_back(c);
        v.cbar.push_back(std::max(c, 0));
        v.mu.push_back(mu);
        v.w.push_back(w);
    }
    if (ctr) ctr->bound += 2 * std::uint64_t(a1);
    return v;
}

std::vector<gf::Elem> Decoder::candidates(const DecoderState& st, const VoteRecord& votes, int tau) const {
    if (!code_->contains(st.s)) return {gf::kZero};
    int total = 0;
    for (int c : votes.cbar) total += c;
    const int need = total - 2 * tau + ctx_->nu(st.s);
    std::vector<gf::Elem> out;
    for (int x = 0; x < ctx_->field().size(); ++x) {
        const gf::Elem w{std::uint8_t(x)};
        int agree = 0;
        for (std::size_t i = 0; i < votes.w.size(); ++i)
            if (votes.w[i] == w) agree += votes.cbar[i];
        if (2 * agree >= need) out.push_back(w);
    }
    return out;
}

DecoderState Decoder::rebase(const DecoderState& st, const VoteRecord& votes, gf::Elem w, CostCounter* ctr) const {
    const gf::Field& F = ctx_->field();
    const CoordRing& ring = ctx_->ring();
    const int a1 = ctx_->a1();
    const int s = st.s;

    // Substitute z <- z + w phi_s everywhere first; the case analysis below
    // only reads substituted elements.
    std::vector<PairElem> fp = st.f, gp = st.g;
    if (!w.is_zero()) {
        const RingElem phi = ring.monomial(w, s);
        for (int i = 0; i < a1; ++i) {
            auto& f = fp[std::size_t(i)];
            ring.axpy(f.b, gf::kOne, 0, ring.mul(phi, f.a, ctr));
            auto& g = gp[std::size_t(i)];
            if (!g.a.is_zero()) ring.axpy(g.b, gf::kOne, 0, ring.mul(phi, g.a, ctr));
        }
    }

    DecoderState ns;
    ns.s = ctx_->curve().prec(s);
    ns.f.resize(std::size_t(a1));
    ns.g.resize(std::size_t(a1));
    ns.nu = st.nu;
    for (int i = 0; i < a1; ++i) {
        const auto ui = std::size_t(i);
        const auto ip = std::size_t(votes.iprime[ui]);
        if (w == votes.w[ui]) {
            ns.f[ui] = fp[ui];
            ns.g[ip] = gp[ip];
            continue;
        }
        const gf::Elem diff = F.sub(w, votes.w[ui]);
        const gf::Elem num = F.mul(votes.mu[ui], diff);
        const gf::Elem coef = F.div(num, st.nu[ip]);
        CostCounter scaled;
        PairElem nf{RingElem(a1), RingElem(a1)};
        const int c = votes.c[ui];
        const gf::Elem mcoef = F.neg(coef);
        if (c > 0) {
            ring.axpy(nf.a, gf::kOne, c, fp[ui].a);
            ring.axpy(nf.b, gf::kOne, c, fp[ui].b);
            ring.axpy(nf.a, mcoef, 0, gp[ip].a, &scaled);
            ring.axpy(nf.b, mcoef, 0, gp[ip].b, &scaled);
            ns.g[ip] = fp[ui];
            ns.nu[ip] = num;
        } else {
            nf = fp[ui];
            ring.axpy(nf.a, mcoef, -c, gp[ip].a, &scaled);
            ring.axpy(nf.b, mcoef, -c, gp[ip].b, &scaled);
            ns.g[ip] = gp[ip];
        }
        ns.f[ui] = std::move(nf);
        if (ctr) {
            ctr->muls += scaled.muls;
            if (!votes.mu[ui].is_one() && !diff.is_one()) ++ctr->muls;
            if (!st.nu[ip].is_one()) ++ctr->divs;
            ctr->bound += 2 + std::uint64_t(gamma(gp[ip]));
        }
    }

    ns.w_chosen = st.w_chosen;
    if (code_->contains(s)) ns.w_chosen[s] = w;
    ns.r_shift = st.r_shift;
    if (!w.is_zero()) {
        for (std::size_t p = 0; p < ns.r_shift.size(); ++p)
            ns.r_shift[p] = F.sub(ns.r_shift[p], F.mul(w, ctx_->phi_value(s, p)));
    }
    return ns;
}

DecoderState Decoder::eliminate_gaps(DecoderState st, int s_top, CostCounter* ctr) const {
    const gf::Field& F = ctx_->field();
    const int target = st.s;
    for (int gap = s_top - 1; gap > target; --gap) {
        st.s = gap;
        VoteRecord votes = pair(st, ctr);
        // No phi_gap exists, so the vote is kept unnormalized: mu_i w_{s,i}
        // is minus the coefficient to cancel, and the elimination factor
        // mu_i (0 - w_{s,i}) / nu_i' comes out the same with mu_i = 1.
        for (std::size_t i = 0; i < votes.w.size(); ++i) {
            votes.w[i] = F.mul(votes.w[i], votes.mu[i]);
            votes.mu[i] = gf::kOne;
        }
        st = rebase(st, votes, gf::kZero, ctr);
    }
    st.s = target;
    return st;
}

std::optional<int> Decoder::floor_s(int tau) const {
    const int limit = ctx_->n() - 2 * tau - ctx_->genus();
    std::optional<int> best;
    for (int s : code_->gamma)
        if (s < limit) best = s;
    return best;
}

const PairElem& Decoder::fmin(const DecoderState& st) const {
    const CoordRing& ring = ctx_->ring();
    std::size_t best = 0;
    for (std::size_t i = 1; i < st.f.size(); ++i)
        if (ring.pole_order(st.f[i].a) < ring.pole_order(st.f[best].a)) best = i;
    return st.f[best];
}

DecodeEntry Decoder::entry_from_w(const DecoderState& st) const {
    DecodeEntry e;
    for (int s : code_->gamma) e.message[s] = gf::kZero;
    for (const auto& [s, w] : st.w_chosen) e.message[s] = w;
    return e;
}

std::optional<DecodeEntry> Decoder::quotient_candidate(const DecoderState& st, const PairElem& fm,
                                                       CostCounter* ctr) const {
    const CoordRing& ring = ctx_->ring();
    const auto& sg = ctx_->semigroup();
    const auto q = ring.quot(fm.b, fm.a, ctr);
    if (!q) return std::nullopt;
    DecodeEntry e = entry_from_w(st);
    for (std::size_t j = 0; j < q->comps.size(); ++j) {
        const Poly& c = q->comps[j];
        for (std::size_t m = 0; m < c.size(); ++m) {
            if (c[m].is_zero()) continue;
            const int p = sg.pole(int(m), int(j));
            if (p > st.s || !code_->contains(p)) return std::nullopt;
            e.message[p] = ctx_->field().neg(c[m]);
        }
    }
    return e;
}

Decoder::Outcome Decoder::check_termination(const DecoderState& st, const Word& r, const DecodeOptions& opt,
                                            CostCounter* ctr, std::vector<DecodeEntry>& found) const {
    const int tau = opt.tau;
    const int g = ctx_->genus();
    const bool unique = 2 * tau < code_->dag;
    const CoordRing& ring = ctx_->ring();

    // Accepts `e` if its codeword is within tau of r; charges the evaluation.
    auto accept_by_distance = [&](DecodeEntry e) {
        e.codeword = ctx_->ev(message_function(*code_, e.message), ctr);
        e.distance = hamming_distance(e.codeword, r);
        if (e.distance <= tau) found.push_back(std::move(e));
    };

    if (st.s == -1) {
        if (unique) {
            found.push_back(entry_from_w(st));
            return Outcome::Stop;
        }
        const PairElem& fm = fmin(st);
        const int pa = ring.pole_order(fm.a);
        if (fm.b.is_zero() && pa <= tau) {
            found.push_back(entry_from_w(st));
            return Outcome::Stop;
        }
        if (pa > tau + g) return Outcome::Stop;
        accept_by_distance(entry_from_w(st));
        return Outcome::Stop;
    }

    const std::optional<int> floor = floor_s(tau);
    switch (opt.criterion) {
    case Criterion::First: {
        const PairElem& fm = fmin(st);
        const int pa = ring.pole_order(fm.a);
        if (code_->contains(st.s) && code_->dag_upto(st.s) > 2 * tau && pa <= tau + g) {
            if (auto e = quotient_candidate(st, fm, ctr)) {
                // Only the pole-order shortcut is sound here: above the floor
                // a divisible quotient supported on Gamma can still be a
                // wrong codeword even when 2 tau < d_AG, so it is checked by
                // evaluation.
                if (pa <= tau) {
                    found.push_back(std::move(*e));
                    return Outcome::Stop;
                }
                const std::size_t before = found.size();
                accept_by_distance(std::move(*e));
                if (found.size() > before) return Outcome::Stop;
            }
        }
        return (floor && st.s == *floor) ? Outcome::Stop : Outcome::Continue;
    }
    case Criterion::Second: {
        if (!floor || st.s != *floor) return Outcome::Continue;
        const PairElem& fm = fmin(st);
        const int pa = ring.pole_order(fm.a);
        if (pa > tau + g) return Outcome::Stop;
        auto e = quotient_candidate(st, fm, ctr);
        if (!e) return Outcome::Stop;
        if (unique || pa <= tau)
            found.push_back(std::move(*e));
        else
            accept_by_distance(std::move(*e));
        return Outcome::Stop;
    }
    case Criterion::Third:
        return Outcome::Continue;
    }
    return Outcome::Continue;
}

DecodeResult Decoder::decode(const Word& r, const DecodeOptions& opt) const {
    DecodeResult res;
    const std::uint64_t cap = opt.iteration_cap ? opt.iteration_cap : iteration_bound(*code_, opt.tau, opt.criterion);
    std::vector<DecodeEntry> found;
    std::vector<DecoderState> stack;
    stack.push_back(init(r, &res.cost));

    auto step = [&](const DecoderState& st, const VoteRecord& votes, gf::Elem w) {
        if (res.iterations >= cap)
            throw Error(ErrorKind::BudgetExceeded, "iteration cap " + std::to_string(cap) + " reached");
        ++res.iterations;
        DecoderState ns = rebase(st, votes, w, &res.cost);
        if (opt.gap_elimination) ns = eliminate_gaps(std::move(ns), st.s, &res.cost);
        if (opt.check_invariants) {
            const std::string why = invariant_violation(ns, opt.gap_elimination);
            if (!why.empty()) throw std::logic_error("decoder invariant violated at s=" + std::to_string(ns.s) + ": " + why);
        }
        return ns;
    };

    while (!stack.empty()) {
        DecoderState st = std::move(stack.back());
        stack.pop_back();
        for (;;) {
            if (check_termination(st, r, opt, &res.cost, found) == Outcome::Stop) break;
            const VoteRecord votes = pair(st, &res.cost);
            const std::vector<gf::Elem> ws = candidates(st, votes, opt.tau);
            if (ws.empty()) break;
            // Later candidates wait on the stack so branches run in ascending order of w.
            for (std::size_t k = ws.size(); k-- > 1;) stack.push_back(step(st, votes, ws[k]));
            st = step(st, votes, ws[0]);
        }
    }

    std::map<Word, DecodeEntry> unique_words;
    for (auto& e : found) {
        if (e.codeword.empty()) {
            e.codeword = encode(*code_, e.message);
            e.distance = hamming_distance(e.codeword, r);
        }
        if (e.distance <= opt.tau) unique_words.emplace(e.codeword, std::move(e));
    }
    for (auto& [w, e] : unique_words) res.list.push_back(std::move(e));
    std::stable_sort(res.list.begin(), res.list.end(),
                     [](const DecodeEntry& a, const DecodeEntry& b) { return a.distance < b.distance; });
    return res;
}

std::string Decoder::invariant_violation(const DecoderState& st, bool leading_terms) const {
    const gf::Field& F = ctx_->field();
    const CoordRing& ring = ctx_->ring();
    const auto& sg = ctx_->semigroup();
    const int a1 = ctx_->a1();
    std::ostringstream why;
    int degree_sum = 0;
    for (int i = 0; i < a1; ++i) {
        const auto ui = std::size_t(i);
        const PairElem& f = st.f[ui];
        const PairElem& g = st.g[ui];
        const Poly& aii = f.a.comps[ui];
        const Poly& dii = g.b.comps[ui];
        if (aii.empty() || dii.empty()) {
            why << "empty diagonal entry for i=" << i;
            return why.str();
        }
        const int da = sg.pole(degree(aii), i);
        if (ring.pole_order(f.a) != da) why << "f" << i << ": z-part not led by y_" << i << "; ";
        if (leading_terms && ring.pole_order(f.b) != kMinusInfinity && ring.pole_order(f.b) > da + st.s)
            why << "f" << i << ": constant part dominates; ";
        const int dd = sg.pole(degree(dii), i);
        if (ring.pole_order(g.b) != dd) why << "g" << i << ": not led by y_" << i << "; ";
        if (dii.back() != st.nu[ui]) why << "g" << i << ": nu mismatch; ";
        if (leading_terms && !g.a.is_zero() && ring.pole_order(g.a) + st.s >= dd) why << "g" << i << ": z-part dominates; ";
        degree_sum += degree(aii) + degree(dii);
        for (std::size_t p = 0; p < st.r_shift.size(); ++p) {
            for (const PairElem* e : {&f, &g}) {
                const gf::Elem v = F.add(ctx_->eval_at(e->b, p), F.mul(st.r_shift[p], ctx_->eval_at(e->a, p)));
                if (!v.is_zero()) {
                    why << (e == &f ? "f" : "g") << i << ": not in the module at point " << p << "; ";
                    break;
                }
            }
        }
    }
    if (degree_sum != ctx_->n()) why << "degree sum " << degree_sum << " != n; ";
    return why.str();
}

std::uint64_t iteration_bound(const Code& code, int tau, Criterion criterion) {
    const CodeContext& ctx = *code.ctx;
    const auto& sg = ctx.semigroup();
    const int N = sg.max_hhat();
    const int gmax = code.max_gamma();
    std::uint64_t top = 0;
    for (int s = gmax; s < N; ++s) top += sg.is_nongap(s);
    int exponent = 0;
    for (int s : code.gamma) exponent += ctx.nu(s) <= 2 * tau;
    std::uint64_t branches = 1;
    for (int k = 0; k < exponent; ++k) branches = sat_mul(branches, std::uint64_t(ctx.field().size()));

    std::uint64_t below = 0;
    Decoder dec(code);
    const std::optional<int> floor = dec.floor_s(tau);
    if (criterion == Criterion::Third || !floor) {
        below = 1;  // s = -1
        for (int s = 0; s < gmax; ++s) below += sg.is_nongap(s);
    } else {
        for (int s = *floor; s < gmax; ++s) below += sg.is_nongap(s);
    }
    return sat_add(top, sat_mul(branches, below));
}

}  // namespace ag
