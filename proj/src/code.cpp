// SPDX-License-Identifier: Apache-2.0
#include "ag/code.hpp"

#include <algorithm>
#include <climits>
#include <istream>
#include <ostream>
#include <sstream>

#include "ag/error.hpp"

namespace ag {

CodeContext::CodeContext(CurveData data) : curve_(std::move(data)), ring_(curve_) {
    const gf::Field& F = field();
    const auto& sg = curve_.semigroup();
    for (std::size_t p = 0; p < std::size_t(n()); ++p) {
        const auto& pt = curve_.data().points[p];
        x1_vals_.push_back(pt[0]);
        std::vector<gf::Elem> ys;
        for (const auto& lj : sg.apery_monomials) {
            gf::Elem v = gf::kOne;
            for (std::size_t k = 0; k < lj.size(); ++k) v = F.mul(v, F.pow(pt[k], lj[k]));
            ys.push_back(v);
        }
        y_vals_.push_back(std::move(ys));
    }
    build_eval_system();
}

std::unique_ptr<CodeContext> CodeContext::load(const std::string& path) {
    return std::make_unique<CodeContext>(load_curve(path));
}

void CodeContext::build_eval_system() {
    const gf::Field& F = field();
    const auto& sg = curve_.semigroup();
    const int nn = n();
    const int a1 = curve_.a1();
    const int bmax = *std::max_element(sg.apery.begin(), sg.apery.end());
    const int bound = nn + 2 * genus() + bmax;

    // Incremental elimination over nongaps in increasing order. Each kept row
    // carries its expression in the phi_s so that a dependent s yields a
    // function vanishing on all points with leading monomial phi_s.
    struct Row {
        int pivot;
        std::vector<gf::Elem> vals;
        std::vector<gf::Elem> comb;  // indexed by s
    };
    std::vector<Row> basis;
    std::vector<int> hhat;
    std::vector<RingElem> eta(static_cast<std::size_t>(a1));
    std::vector<bool> have_eta(static_cast<std::size_t>(a1), false);
    int missing = a1;
    const gf::Elem minus_one = F.neg(gf::kOne);

    for (int s = 0; s <= bound && missing > 0; ++s) {
        if (!sg.is_nongap(s)) continue;
        std::vector<gf::Elem> v(static_cast<std::size_t>(nn));
        for (int p = 0; p < nn; ++p) v[std::size_t(p)] = phi_value(s, std::size_t(p));
        std::vector<gf::Elem> comb(static_cast<std::size_t>(bound) + 1);
        comb[std::size_t(s)] = gf::kOne;
        for (const Row& b : basis) {
            const gf::Elem c = v[std::size_t(b.pivot)];
            if (c.is_zero()) continue;
            const gf::Elem mc = F.mul(minus_one, c);
            for (int p = 0; p < nn; ++p)
                v[std::size_t(p)] = F.add(v[std::size_t(p)], F.mul(mc, b.vals[std::size_t(p)]));
            for (std::size_t k = 0; k < comb.size(); ++k) comb[k] = F.add(comb[k], F.mul(mc, b.comb[k]));
        }
        const auto nz = std::find_if(v.begin(), v.end(), [](gf::Elem e) { return !e.is_zero(); });
        if (nz != v.end()) {
            if (int(hhat.size()) == nn)
                throw Error(ErrorKind::RankDeficient, "more than n independent evaluation rows");
            const gf::Elem inv = F.inv(*nz);
            for (auto& e : v) e = F.mul(e, inv);
            for (auto& e : comb) e = F.mul(e, inv);
            basis.push_back({int(nz - v.begin()), std::move(v), std::move(comb)});
            hhat.push_back(s);
            continue;
        }
        const int j = s % a1;
        if (have_eta[std::size_t(j)]) continue;
        RingElem e(a1);
        for (int u = 0; u <= s; ++u) {
            if (comb[std::size_t(u)].is_zero()) continue;
            const auto [m, jj] = sg.phi_index(u);
            auto& c = e.comps[std::size_t(jj)];
            if (c.size() <= std::size_t(m)) c.resize(std::size_t(m) + 1);
            c[std::size_t(m)] = comb[std::size_t(u)];
        }
        eta[std::size_t(j)] = std::move(e);
        have_eta[std::size_t(j)] = true;
        --missing;
    }
    if (int(hhat.size()) < nn)
        throw Error(ErrorKind::RankDeficient, "only " + std::to_string(hhat.size()) + " independent evaluation rows for " +
                                                  std::to_string(nn) + " points");
    if (missing > 0)
        throw Error(ErrorKind::SearchBoundExceeded, "no vanishing function found in some residue class below pole order " +
                                                        std::to_string(bound));

    std::vector<int> eta_degs;
    for (const auto& e : eta) eta_degs.push_back(curve_.pole_order(e));
    eta_ = std::move(eta);
    curve_.set_point_data(hhat, eta_degs);

    // V[p][k] = psi_k(P_p); the interpolation matrix is its inverse, so that
    // coefficients = V^{-1} r.
    const auto un = std::size_t(nn);
    vmat_.assign(un * un, gf::kZero);
    for (std::size_t p = 0; p < un; ++p)
        for (std::size_t k = 0; k < un; ++k) vmat_[p * un + k] = phi_value(hhat[k], p);
    std::vector<gf::Elem> a = vmat_;
    minv_.assign(un * un, gf::kZero);
    for (std::size_t i = 0; i < un; ++i) minv_[i * un + i] = gf::kOne;
    for (std::size_t col = 0; col < un; ++col) {
        std::size_t piv = col;
        while (piv < un && a[piv * un + col].is_zero()) ++piv;
        if (piv == un) throw Error(ErrorKind::RankDeficient, "evaluation matrix is singular");
        if (piv != col) {
            for (std::size_t k = 0; k < un; ++k) {
                std::swap(a[piv * un + k], a[col * un + k]);
                std::swap(minv_[piv * un + k], minv_[col * un + k]);
            }
        }
        const gf::Elem inv = F.inv(a[col * un + col]);
        for (std::size_t k = 0; k < un; ++k) {
            a[col * un + k] = F.mul(a[col * un + k], inv);
            minv_[col * un + k] = F.mul(minv_[col * un + k], inv);
        }
        for (std::size_t r = 0; r < un; ++r) {
            if (r == col || a[r * un + col].is_zero()) continue;
            const gf::Elem f = F.neg(a[r * un + col]);
            for (std::size_t k = 0; k < un; ++k) {
                a[r * un + k] = F.add(a[r * un + k], F.mul(f, a[col * un + k]));
                minv_[r * un + k] = F.add(minv_[r * un + k], F.mul(f, minv_[col * un + k]));
            }
        }
    }

    const int top = *std::max_element(eta_degs.begin(), eta_degs.end());
    for (int s = 0; s <= top; ++s) nu_table_.push_back(ag::nu(sg, s));
}

bool CodeContext::in_hhat(int s) const { return std::binary_search(hhat().begin(), hhat().end(), s); }

int CodeContext::nu(int s) const {
    if (s >= 0 && s < int(nu_table_.size())) return nu_table_[std::size_t(s)];
    return ag::nu(semigroup(), s);
}

gf::Elem CodeContext::phi_value(int s, std::size_t point) const {
    const auto [m, j] = semigroup().phi_index(s);
    return field().mul(field().pow(x1_vals_[point], m), y_vals_[point][std::size_t(j)]);
}

gf::Elem CodeContext::eval_at(const RingElem& f, std::size_t point) const {
    const gf::Field& F = field();
    gf::Elem acc = gf::kZero;
    for (std::size_t j = 0; j < f.comps.size(); ++j) {
        const Poly& c = f.comps[j];
        if (c.empty()) continue;
        // Horner in x_1, then the y_j factor.
        gf::Elem h = gf::kZero;
        for (std::size_t m = c.size(); m-- > 0;) h = F.add(F.mul(h, x1_vals_[point]), c[m]);
        acc = F.add(acc, F.mul(h, y_vals_[point][j]));
    }
    return acc;
}

Word CodeContext::ev(const RingElem& f, CostCounter* ctr) const {
    Word out(static_cast<std::size_t>(n()));
    for (std::size_t p = 0; p < out.size(); ++p) out[p] = eval_at(f, p);
    if (ctr) {
        // One product per term and point with precomputed monomial values;
        // products with coefficient 1 are free.
        ctr->muls += std::uint64_t(n()) * std::uint64_t(gamma_ne1(f));
        ctr->bound += std::uint64_t(n()) * std::uint64_t(gamma(f));
    }
    return out;
}

RingElem CodeContext::interpolate(const Word& r, CostCounter* ctr) const {
    const gf::Field& F = field();
    const auto un = std::size_t(n());
    RingElem h(a1());
    std::uint64_t muls = 0;
    for (std::size_t k = 0; k < un; ++k) {
        gf::Elem c = gf::kZero;
        for (std::size_t p = 0; p < un; ++p) {
            const gf::Elem m = minv_[k * un + p];
            if (m.is_zero() || r[p].is_zero()) continue;
            if (!m.is_one() && !r[p].is_one()) ++muls;
            c = F.add(c, F.mul(m, r[p]));
        }
        if (c.is_zero()) continue;
        const auto [m, j] = semigroup().phi_index(hhat()[k]);
        auto& comp = h.comps[std::size_t(j)];
        if (comp.size() <= std::size_t(m)) comp.resize(std::size_t(m) + 1);
        comp[std::size_t(m)] = c;
    }
    if (ctr) {
        ctr->muls += muls;
        ctr->bound += std::uint64_t(un) * std::uint64_t(un);
    }
    return h;
}

bool Code::contains(int s) const { return std::binary_search(gamma.begin(), gamma.end(), s); }

int Code::dag_upto(int s) const {
    int best = INT_MAX;
    for (int g : gamma) {
        if (g > s) break;
        best = std::min(best, ctx->nu(g));
    }
    return best;
}

namespace {

Code finish_code(const CodeContext& ctx, std::vector<int> gamma) {
    if (gamma.empty()) throw Error(ErrorKind::EmptyGamma, "Gamma is empty");
    Code code{&ctx, std::move(gamma), 0};
    code.dag = code.dag_upto(code.max_gamma());
    return code;
}

}  // namespace

Code build_code(const CodeContext& ctx, int delta) {
    std::vector<int> gamma;
    for (int s : ctx.hhat())
        if (ctx.nu(s) >= delta) gamma.push_back(s);
    if (gamma.empty()) throw Error(ErrorKind::EmptyGamma, "no s in hhat has nu(s) >= " + std::to_string(delta));
    return finish_code(ctx, std::move(gamma));
}

Code build_code(const CodeContext& ctx, std::vector<int> gamma) {
    std::sort(gamma.begin(), gamma.end());
    gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
    for (int s : gamma)
        if (!ctx.in_hhat(s)) throw Error(ErrorKind::InvalidGamma, std::to_string(s) + " is not in hhat");
    return finish_code(ctx, std::move(gamma));
}

RingElem message_function(const Code& code, const Message& msg) {
    const CodeContext& ctx = *code.ctx;
    RingElem f(ctx.a1());
    for (const auto& [s, c] : msg) ctx.ring().axpy(f, gf::kOne, 0, ctx.ring().monomial(c, s));
    return f;
}

Word encode(const Code& code, const Message& msg) { return code.ctx->ev(message_function(code, msg)); }

int hamming_distance(const Word& a, const Word& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

Word read_word(std::istream& in, const gf::Field& field, int n) {
    Word w;
    std::string tok;
    while (in >> tok) {
        long v = 0;
        try {
            std::size_t used = 0;
            v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "bad field element '" + tok + "'");
        }
        w.push_back(field.from_int(v));
    }
    if (int(w.size()) != n)
        throw Error(ErrorKind::Parse, "word has " + std::to_string(w.size()) + " entries, expected " + std::to_string(n));
    return w;
}

void write_word(std::ostream& out, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << int(w[i].value);
    out << '\n';
}

Message read_message(std::istream& in, const Code& code) {
    const gf::Field& F = code.ctx->field();
    Message msg;
    for (int s : code.gamma) msg[s] = gf::kZero;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        long s = 0, v = 0;
        if (!(ss >> s)) continue;
        std::string extra;
        if (!(ss >> v) || (ss >> extra))
            throw Error(ErrorKind::Parse, "message line " + std::to_string(line_no) + ": expected 's value'");
        if (!code.contains(int(s)))
            throw Error(ErrorKind::InvalidGamma, "message line " + std::to_string(line_no) + ": " + std::to_string(s) +
                                                     " is not in Gamma");
        msg[int(s)] = F.from_int(v);
    }
    return msg;
}

void write_message(std::ostream& out, const Message& msg) {
    for (const auto& [s, c] : msg) out << s << ' ' << int(c.value) << '\n';
}

}  // namespace ag
