// SPDX-License-Identifier: Apache-2.0
#include "ag/curve.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "ag/error.hpp"

namespace ag {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
    }
}

std::vector<long> parse_ints(std::istringstream& ss, int line_no) {
    std::vector<long> out;
    std::string tok;
    while (ss >> tok) out.push_back(parse_long(tok, line_no));
    return out;
}

struct RawTerm {
    long coeff;
    std::vector<long> exps;
};

std::vector<RawTerm> parse_poly_line(const std::string& line, int line_no) {
    std::vector<RawTerm> terms;
    std::string compact;
    for (char ch : line)
        if (ch != ' ' && ch != '\t') compact.push_back(ch);
    std::istringstream ss(compact);
    std::string term;
    while (std::getline(ss, term, '+')) {
        const auto colon = term.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": term '" + term + "' lacks ':'");
        RawTerm raw{parse_long(term.substr(0, colon), line_no), {}};
        std::istringstream es(term.substr(colon + 1));
        std::string e;
        while (std::getline(es, e, ',')) raw.exps.push_back(parse_long(e, line_no));
        terms.push_back(std::move(raw));
    }
    if (terms.empty()) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": empty polynomial");
    return terms;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

CurveData parse_curve(std::istream& in) {
    std::vector<int> field_spec;
    std::vector<int> weights;
    long genus = -1;
    std::vector<std::pair<int, std::vector<RawTerm>>> gb_raw;
    std::vector<std::pair<int, std::vector<long>>> pts_raw;

    enum class Section { Top, Gb, Points } section = Section::Top;
    std::string raw_line;
    int line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        const auto hash = raw_line.find('#');
        const std::string line = trim(hash == std::string::npos ? raw_line : raw_line.substr(0, hash));
        if (line.empty()) continue;
        if (section != Section::Top) {
            if (line == "end") {
                section = Section::Top;
            } else if (section == Section::Gb) {
                gb_raw.emplace_back(line_no, parse_poly_line(line, line_no));
            } else {
                std::istringstream ss(line);
                pts_raw.emplace_back(line_no, parse_ints(ss, line_no));
            }
            continue;
        }
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "field") {
            for (long v : parse_ints(ss, line_no)) field_spec.push_back(int(v));
        } else if (key == "weights") {
            for (long v : parse_ints(ss, line_no)) weights.push_back(int(v));
        } else if (key == "genus") {
            const auto v = parse_ints(ss, line_no);
            if (v.size() != 1) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": genus takes one value");
            genus = v[0];
        } else if (key == "gb") {
            section = Section::Gb;
        } else if (key == "points") {
            section = Section::Points;
        } else {
            throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unknown keyword '" + key + "'");
        }
    }
    if (section != Section::Top) throw Error(ErrorKind::Parse, "missing 'end'");
    if (field_spec.size() < 3) throw Error(ErrorKind::Parse, "missing or short 'field' line");
    if (weights.empty()) throw Error(ErrorKind::Parse, "missing 'weights' line");
    if (genus < 0) throw Error(ErrorKind::Parse, "missing 'genus' line");

    gf::Field field(field_spec[0], field_spec[1], std::vector<int>(field_spec.begin() + 2, field_spec.end()));
    const std::size_t t = weights.size();

    std::vector<MPoly> gb;
    for (const auto& [ln, terms] : gb_raw) {
        MPoly poly;
        for (const auto& rt : terms) {
            if (rt.exps.size() != t)
                throw Error(ErrorKind::Parse, "line " + std::to_string(ln) + ": term has wrong number of exponents");
            Exponents e;
            for (long x : rt.exps) {
                if (x < 0) throw Error(ErrorKind::Parse, "line " + std::to_string(ln) + ": negative exponent");
                e.push_back(int(x));
            }
            poly.push_back({field.from_int(rt.coeff), std::move(e)});
        }
        gb.push_back(std::move(poly));
    }
    std::vector<std::vector<gf::Elem>> points;
    for (const auto& [ln, vals] : pts_raw) {
        if (vals.size() != t)
            throw Error(ErrorKind::Parse, "line " + std::to_string(ln) + ": point has wrong number of coordinates");
        std::vector<gf::Elem> pt;
        for (long v : vals) pt.push_back(field.from_int(v));
        points.push_back(std::move(pt));
    }
    return CurveData{std::move(field), std::move(weights), int(genus), std::move(gb), std::move(points)};
}

CurveData load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open curve file '" + path + "'");
    return parse_curve(in);
}

bool SemigroupData::is_nongap(int s) const { return s >= 0 && s >= apery[std::size_t(s % a1)]; }

int SemigroupData::prec(int s) const {
    for (int x = s - 1; x >= 0; --x)
        if (is_nongap(x)) return x;
    return -1;
}

std::pair<int, int> SemigroupData::phi_index(int s) const {
    const int j = s % a1;
    return {(s - apery[std::size_t(j)]) / a1, j};
}

std::vector<int> SemigroupData::generators() const {
    std::vector<int> candidates{a1};
    for (int b : apery)
        if (b > 0) candidates.push_back(b);
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> gens;
    for (int s : candidates) {
        bool decomposable = false;
        for (int u = 1; u < s && !decomposable; ++u)
            decomposable = is_nongap(u) && is_nongap(s - u);
        if (!decomposable) gens.push_back(s);
    }
    return gens;
}

int nu(const SemigroupData& sg, int s) {
    int sum = 0;
    for (int i = 0; i < sg.a1; ++i) {
        const int ip = (i + s) % sg.a1;
        sum += std::max(sg.eta_degs[std::size_t(ip)] - sg.apery[std::size_t(i)] - s, 0);
    }
    return sum / sg.a1;
}

int lambda(const SemigroupData& sg, int s) {
    int count = 0;
    for (int j = 0; j + s <= sg.max_hhat(); ++j)
        if (sg.is_nongap(j) && std::binary_search(sg.hhat.begin(), sg.hhat.end(), j + s)) ++count;
    return count;
}

Curve::Curve(CurveData data) : data_(std::move(data)) {
    const int t = this->t();
    if (t < 1) throw Error(ErrorKind::InvalidCurve, "no generators");
    int g = 0;
    for (int w : data_.weights) {
        if (w <= 0) throw Error(ErrorKind::InvalidCurve, "weights must be positive");
        g = std::gcd(g, w);
    }
    if (g != 1) throw Error(ErrorKind::InvalidCurve, "weights are not coprime");

    const gf::Field& F = field();
    // Combine like terms, drop zeros, make monic, record leading monomials.
    for (auto& poly : data_.gb) {
        std::map<Exponents, gf::Elem> acc;
        for (const auto& term : poly) {
            auto& c = acc[term.exps];
            c = F.add(c, term.coeff);
        }
        MPoly clean;
        for (auto& [e, c] : acc)
            if (!c.is_zero()) clean.push_back({c, e});
        if (clean.empty()) throw Error(ErrorKind::InvalidCurve, "zero polynomial in Groebner basis");
        std::sort(clean.begin(), clean.end(),
                  [&](const Term& a, const Term& b) { return cmp_weighted_revlex(a.exps, b.exps) > 0; });
        const gf::Elem lc_inv = F.inv(clean.front().coeff);
        for (auto& term : clean) term.coeff = F.mul(term.coeff, lc_inv);
        leading_.push_back(clean.front().exps);
        poly = std::move(clean);
    }
    for (std::size_t i = 0; i < data_.gb.size(); ++i) {
        for (std::size_t j = 0; j < data_.gb.size(); ++j) {
            for (std::size_t k = 0; k < data_.gb[j].size(); ++k) {
                if (i == j && k == 0) continue;
                if (divides(leading_[i], data_.gb[j][k].exps))
                    throw Error(ErrorKind::InvalidCurve, "Groebner basis is not reduced (element " + std::to_string(i + 1) +
                                                             " divides a term of element " + std::to_string(j + 1) + ")");
            }
        }
    }
    derive_semigroup();
    validate_points();
}

void Curve::derive_semigroup() {
    const int t = this->t();
    const int a1 = data_.weights[0];
    for (const auto& lm : leading_)
        if (lm[0] != 0) throw Error(ErrorKind::InvalidCurve, "a leading monomial involves X_1");

    // The footprint restricted to first exponent 0 is a finite order ideal
    // with exactly a1 elements, one per residue class of the weight.
    auto in_footprint = [&](const Exponents& e) {
        return std::none_of(leading_.begin(), leading_.end(), [&](const Exponents& lm) { return divides(lm, e); });
    };
    std::set<Exponents> seen;
    std::vector<Exponents> frontier{Exponents(std::size_t(t), 0)};
    seen.insert(frontier.front());
    std::vector<Exponents> tails;
    while (!frontier.empty()) {
        Exponents e = frontier.back();
        frontier.pop_back();
        tails.push_back(e);
        if (int(tails.size()) > a1)
            throw Error(ErrorKind::InvalidCurve, "footprint is not a free module of rank a_1 over F_q[x_1]");
        for (int k = 1; k < t; ++k) {
            Exponents next = e;
            ++next[std::size_t(k)];
            if (!seen.count(next) && in_footprint(next)) {
                seen.insert(next);
                frontier.push_back(next);
            }
        }
    }
    if (int(tails.size()) != a1)
        throw Error(ErrorKind::InvalidCurve, "footprint has " + std::to_string(tails.size()) + " y-monomials, expected a_1");

    sg_.a1 = a1;
    sg_.apery.assign(std::size_t(a1), -1);
    sg_.apery_monomials.assign(std::size_t(a1), {});
    for (const auto& e : tails) {
        const int w = weight(e);
        const int j = w % a1;
        if (sg_.apery[std::size_t(j)] != -1)
            throw Error(ErrorKind::InvalidCurve, "two footprint monomials share a residue class");
        sg_.apery[std::size_t(j)] = w;
        sg_.apery_monomials[std::size_t(j)] = e;
        Exponents tail(e.begin() + 1, e.end());
        footprint_tail_index_[tail] = j;
    }
    sg_.y.clear();
    for (int j = 0; j < a1; ++j) {
        RingElem yj(a1);
        yj.comps[std::size_t(j)] = {gf::kOne};
        sg_.y.push_back(std::move(yj));
    }
    const int top = *std::max_element(sg_.apery.begin(), sg_.apery.end());
    for (int s = 0; s < top; ++s)
        if (!sg_.is_nongap(s)) sg_.gaps.push_back(s);
    if (int(sg_.gaps.size()) != data_.genus)
        throw Error(ErrorKind::GenusMismatch, "footprint gives " + std::to_string(sg_.gaps.size()) +
                                                  " gaps but the file declares genus " + std::to_string(data_.genus));
}

void Curve::validate_points() const {
    std::set<std::vector<gf::Elem>> distinct;
    for (std::size_t p = 0; p < data_.points.size(); ++p) {
        if (!distinct.insert(data_.points[p]).second)
            throw Error(ErrorKind::InvalidCurve, "point " + std::to_string(p + 1) + " is repeated");
        for (std::size_t k = 0; k < data_.gb.size(); ++k)
            if (!eval_mpoly(data_.gb[k], p).is_zero())
                throw Error(ErrorKind::InvalidCurve, "basis element " + std::to_string(k + 1) + " does not vanish at point " +
                                                         std::to_string(p + 1));
    }
}

int Curve::weight(const Exponents& e) const {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += data_.weights[i] * e[i];
    return w;
}

std::strong_ordering Curve::cmp_weighted_revlex(const Exponents& u, const Exponents& v) const {
    const int wu = weight(u), wv = weight(v);
    if (wu != wv) return wu <=> wv;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) return v[i] <=> u[i];
    return std::strong_ordering::equal;
}

RingElem Curve::normal_form(const MPoly& poly) const {
    const gf::Field& F = field();
    auto desc = [this](const Exponents& a, const Exponents& b) { return cmp_weighted_revlex(a, b) > 0; };
    std::map<Exponents, gf::Elem, decltype(desc)> work(desc);
    auto accumulate = [&](const Exponents& e, gf::Elem c) {
        auto [it, inserted] = work.emplace(e, c);
        if (!inserted) {
            it->second = F.add(it->second, c);
            if (it->second.is_zero()) work.erase(it);
        } else if (c.is_zero()) {
            work.erase(it);
        }
    };
    for (const auto& term : poly) accumulate(term.exps, term.coeff);

    RingElem out(a1());
    while (!work.empty()) {
        const auto top = work.begin();
        const Exponents e = top->first;
        const gf::Elem c = top->second;
        work.erase(top);
        std::size_t k = 0;
        while (k < leading_.size() && !divides(leading_[k], e)) ++k;
        if (k == leading_.size()) {
            const Exponents tail(e.begin() + 1, e.end());
            const int j = footprint_tail_index_.at(tail);
            auto& comp = out.comps[std::size_t(j)];
            const auto m = std::size_t(e[0]);
            if (comp.size() <= m) comp.resize(m + 1);
            comp[m] = c;
            continue;
        }
        // e = shift * LM_k; subtract c * X^shift * g_k (monic), skipping its leading term.
        const auto& g = data_.gb[k];
        for (std::size_t i = 1; i < g.size(); ++i) {
            Exponents shifted = g[i].exps;
            for (std::size_t v = 0; v < shifted.size(); ++v) shifted[v] += e[v] - leading_[k][v];
            accumulate(shifted, F.neg(F.mul(c, g[i].coeff)));
        }
    }
    return out;
}

MPoly Curve::to_mpoly(const RingElem& f) const {
    MPoly out;
    for (std::size_t j = 0; j < f.comps.size(); ++j) {
        for (std::size_t m = 0; m < f.comps[j].size(); ++m) {
            if (f.comps[j][m].is_zero()) continue;
            Exponents e = sg_.apery_monomials[j];
            e[0] += int(m);
            out.push_back({f.comps[j][m], std::move(e)});
        }
    }
    return out;
}

RingElem Curve::phi(int s) const {
    if (!sg_.is_nongap(s)) throw Error(ErrorKind::NotANongap, std::to_string(s) + " is a gap");
    const auto [m, j] = sg_.phi_index(s);
    RingElem out(a1());
    out.comps[std::size_t(j)].assign(std::size_t(m) + 1, gf::kZero);
    out.comps[std::size_t(j)].back() = gf::kOne;
    return out;
}

int Curve::pole_order(const RingElem& f) const {
    int best = kMinusInfinity;
    for (std::size_t j = 0; j < f.comps.size(); ++j)
        if (!f.comps[j].empty()) best = std::max(best, sg_.pole(int(f.comps[j].size()) - 1, int(j)));
    return best;
}

gf::Elem Curve::eval_mpoly(const MPoly& poly, std::size_t point) const {
    const gf::Field& F = field();
    const auto& pt = data_.points[point];
    gf::Elem acc = gf::kZero;
    for (const auto& term : poly) {
        gf::Elem v = term.coeff;
        for (std::size_t i = 0; i < term.exps.size(); ++i) v = F.mul(v, F.pow(pt[i], term.exps[i]));
        acc = F.add(acc, v);
    }
    return acc;
}

}  // namespace ag
