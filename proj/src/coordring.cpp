// SPDX-License-Identifier: Apache-2.0
#include "ag/coordring.hpp"

#include <algorithm>

namespace ag {

namespace {

int count_terms(const Poly& p) {
    return int(std::count_if(p.begin(), p.end(), [](gf::Elem c) { return !c.is_zero(); }));
}

// dst[k + shift] += c * src[k]; returns the number of non-trivial products.
std::uint64_t add_scaled(const gf::Field& F, Poly& dst, const Poly& src, gf::Elem c, std::size_t shift) {
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift);
    std::uint64_t muls = 0;
    for (std::size_t k = 0; k < src.size(); ++k) {
        const gf::Elem e = src[k];
        if (e.is_zero()) continue;
        gf::Elem prod = e;
        if (!c.is_one()) {
            prod = F.mul(c, e);
            if (!e.is_one()) ++muls;
        }
        dst[k + shift] = F.add(dst[k + shift], prod);
    }
    return muls;
}

}  // namespace

int gamma(const RingElem& f) {
    int n = 0;
    for (const auto& c : f.comps) n += count_terms(c);
    return n;
}

int gamma_ne1(const RingElem& f) {
    int n = 0;
    for (const auto& c : f.comps)
        n += int(std::count_if(c.begin(), c.end(), [](gf::Elem e) { return !e.is_zero() && !e.is_one(); }));
    return n;
}

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void trim(RingElem& f) {
    for (auto& c : f.comps) trim(c);
}

CoordRing::CoordRing(const Curve& curve) : curve_(&curve), a1_(curve.a1()) {
    const auto& sg = curve.semigroup();
    table_.resize(std::size_t(a1_ * a1_));
    table_lc_.resize(table_.size());
    table_gamma_ne1_.resize(table_.size());
    for (int i = 0; i < a1_; ++i) {
        for (int j = i; j < a1_; ++j) {
            Term term{gf::kOne, sg.apery_monomials[std::size_t(i)]};
            const auto& lj = sg.apery_monomials[std::size_t(j)];
            for (std::size_t v = 0; v < lj.size(); ++v) term.exps[v] += lj[v];
            RingElem nf = curve.normal_form({term});
            const gf::Elem c = lc(nf);
            const int ne1 = gamma_ne1(nf);
            for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
                table_[idx(a, b)] = nf;
                table_lc_[idx(a, b)] = c;
                table_gamma_ne1_[idx(a, b)] = ne1;
            }
        }
    }
}

gf::Elem CoordRing::lc(const RingElem& f) const {
    const auto& sg = curve_->semigroup();
    int best = kMinusInfinity;
    gf::Elem c = gf::kZero;
    for (std::size_t j = 0; j < f.comps.size(); ++j) {
        if (f.comps[j].empty()) continue;
        const int p = sg.pole(int(f.comps[j].size()) - 1, int(j));
        if (p > best) {
            best = p;
            c = f.comps[j].back();
        }
    }
    return c;
}

std::vector<Poly> CoordRing::collect(const RingElem& g, const RingElem& h, std::uint64_t* muls) const {
    const gf::Field& F = field();
    std::vector<Poly> out(table_.size());
    for (int i = 0; i < a1_; ++i) {
        const Poly& gi = g.comps[std::size_t(i)];
        if (gi.empty()) continue;
        for (int j = 0; j < a1_; ++j) {
            const Poly& hj = h.comps[std::size_t(j)];
            if (hj.empty()) continue;
            Poly& acc = out[idx(std::min(i, j), std::max(i, j))];
            for (std::size_t a = 0; a < gi.size(); ++a) {
                if (gi[a].is_zero()) continue;
                *muls += add_scaled(F, acc, hj, gi[a], a);
            }
        }
    }
    for (auto& p : out) trim(p);
    return out;
}

RingElem CoordRing::mul(const RingElem& g, const RingElem& h, CostCounter* ctr) const {
    const gf::Field& F = field();
    std::uint64_t muls = 0;
    const std::vector<Poly> coll = collect(g, h, &muls);
    std::uint64_t bound = std::uint64_t(gamma(g)) * std::uint64_t(gamma(h));
    RingElem out(a1_);
    for (int i = 0; i < a1_; ++i) {
        for (int j = i; j < a1_; ++j) {
            const Poly& fij = coll[idx(i, j)];
            if (fij.empty()) continue;
            bound += std::uint64_t(count_terms(fij)) * std::uint64_t(table_gamma_ne1_[idx(i, j)]);
            const RingElem& tij = table_[idx(i, j)];
            for (std::size_t a = 0; a < fij.size(); ++a) {
                if (fij[a].is_zero()) continue;
                for (int k = 0; k < a1_; ++k) {
                    const Poly& tk = tij.comps[std::size_t(k)];
                    if (!tk.empty()) muls += add_scaled(F, out.comps[std::size_t(k)], tk, fij[a], a);
                }
            }
        }
    }
    trim(out);
    if (ctr) {
        ctr->muls += muls;
        ctr->bound += bound;
    }
    return out;
}

std::uint64_t CoordRing::multi_bound(const RingElem& g, const RingElem& h) const {
    std::uint64_t muls = 0;
    const std::vector<Poly> coll = collect(g, h, &muls);
    std::uint64_t bound = std::uint64_t(gamma(g)) * std::uint64_t(gamma(h));
    for (int i = 0; i < a1_; ++i)
        for (int j = i; j < a1_; ++j)
            bound += std::uint64_t(count_terms(coll[idx(i, j)])) * std::uint64_t(table_gamma_ne1_[idx(i, j)]);
    return bound;
}

std::optional<RingElem> CoordRing::quot(const RingElem& g, const RingElem& h, CostCounter* ctr) const {
    const gf::Field& F = field();
    const auto& sg = curve_->semigroup();
    const int ph = pole_order(h);
    const gf::Elem lch = lc(h);
    const int jh = ph % a1_;
    RingElem sigma(a1_);
    RingElem rem = g;
    CostCounter local;
    while (!rem.is_zero()) {
        const int d = pole_order(rem) - ph;
        if (!sg.is_nongap(d)) {
            if (ctr) *ctr += local;
            return std::nullopt;
        }
        const auto [m, j] = sg.phi_index(d);
        const gf::Elem lcy = y_product_lc(j, jh);
        const gf::Elem denom = F.mul(lch, lcy);
        if (!lch.is_one() && !lcy.is_one()) ++local.muls;
        const gf::Elem t = F.div(lc(rem), denom);
        if (!denom.is_one()) ++local.divs;
        local.bound += 2;
        const RingElem term = monomial(t, d);
        const RingElem prod = mul(term, h, &local);
        axpy(sigma, t, m, sg.y[std::size_t(j)]);
        axpy(rem, F.neg(gf::kOne), 0, prod);
    }
    if (ctr) *ctr += local;
    return sigma;
}

void CoordRing::axpy(RingElem& dst, gf::Elem c, int shift, const RingElem& src, CostCounter* ctr) const {
    if (c.is_zero()) return;
    const gf::Field& F = field();
    std::uint64_t muls = 0;
    for (int k = 0; k < a1_; ++k) {
        const Poly& sk = src.comps[std::size_t(k)];
        if (!sk.empty()) muls += add_scaled(F, dst.comps[std::size_t(k)], sk, c, std::size_t(shift));
    }
    trim(dst);
    if (ctr) {
        ctr->muls += muls;
        if (!c.is_one()) ctr->bound += std::uint64_t(gamma(src));
    }
}

RingElem CoordRing::add(const RingElem& a, const RingElem& b) const {
    RingElem out = a;
    axpy(out, gf::kOne, 0, b);
    return out;
}

RingElem CoordRing::sub(const RingElem& a, const RingElem& b) const {
    RingElem out = a;
    axpy(out, field().neg(gf::kOne), 0, b);
    return out;
}

RingElem CoordRing::neg(const RingElem& a) const {
    RingElem out(a1_);
    axpy(out, field().neg(gf::kOne), 0, a);
    return out;
}

RingElem CoordRing::scale(gf::Elem c, const RingElem& a, CostCounter* ctr) const {
    RingElem out(a1_);
    axpy(out, c, 0, a, ctr);
    return out;
}

RingElem CoordRing::monomial(gf::Elem c, int s) const {
    RingElem out(a1_);
    if (c.is_zero()) return out;
    const auto [m, j] = curve_->semigroup().phi_index(s);
    out.comps[std::size_t(j)].assign(std::size_t(m) + 1, gf::kZero);
    out.comps[std::size_t(j)].back() = c;
    return out;
}

}  // namespace ag
