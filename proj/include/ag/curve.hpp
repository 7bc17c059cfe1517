// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ag/gf.hpp"

namespace ag {

/// Exponent vector (m_1, ..., m_t) of X_1^m_1 ... X_t^m_t.
using Exponents = std::vector<int>;

struct Term {
    gf::Elem coeff;
    Exponents exps;
};

/// Polynomial in X_1..X_t as a plain list of terms (not necessarily combined).
using MPoly = std::vector<Term>;

/// Univariate polynomial in x_1, low degree first, no trailing zeros.
using Poly = std::vector<gf::Elem>;

/// Pole order of the zero function.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Element of L(infinity Q) in normal form: sum over j of comps[j](x_1) * y_j.
/// The monomial x_1^m y_j of the footprint basis is stored as comps[j][m].
struct RingElem {
    std::vector<Poly> comps;

    RingElem() = default;
    explicit RingElem(int a1) : comps(std::size_t(a1)) {}

    bool is_zero() const {
        for (const auto& c : comps)
            if (!c.empty()) return false;
        return true;
    }
    friend bool operator==(const RingElem&, const RingElem&) = default;
};

/// Standard-form curve as read from a curve file.
struct CurveData {
    gf::Field field;
    std::vector<int> weights;
    int genus = 0;
    std::vector<MPoly> gb;
    std::vector<std::vector<gf::Elem>> points;
};

/// Parses the line-oriented curve format. Throws Error(Parse/InvalidField).
CurveData parse_curve(std::istream& in);
CurveData load_curve(const std::string& path);

/// Weierstrass semigroup data derived from the footprint of the ideal.
///
/// `hhat` and `eta_degs` depend on the rational points and are filled in by
/// the code construction; they are empty on a freshly built Curve.
struct SemigroupData {
    int a1 = 0;
    std::vector<int> apery;                   // b_j, the least nongap congruent to j mod a1
    std::vector<Exponents> apery_monomials;   // L_j, first exponent 0
    std::vector<RingElem> y;                  // y_j in normal form (the unit vector of component j)
    std::vector<int> gaps;
    std::vector<int> hhat;
    std::vector<int> eta_degs;                // pole order of eta_j

    bool is_nongap(int s) const;
    /// Largest nongap below s; prec(0) = -1.
    int prec(int s) const;
    /// (m, j) with x_1^m y_j of pole order s. Requires is_nongap(s).
    std::pair<int, int> phi_index(int s) const;
    int pole(int m, int j) const { return a1 * m + apery[std::size_t(j)]; }
    /// Minimal generating set of the semigroup.
    std::vector<int> generators() const;
    int max_hhat() const { return hhat.back(); }
};

/// nu(s) from the pole orders of eta: (1/a1) sum_i max(-v(eta_i') + v(y_i) - s, 0), i' = i + s mod a1.
int nu(const SemigroupData& sg, int s);
/// lambda(s) = #{ j in H(Q) : j + s in hhat }.
int lambda(const SemigroupData& sg, int s);

/// A loaded and validated curve with its semigroup data.
class Curve {
public:
    /// Validates the data and derives the semigroup. Throws Error(InvalidCurve)
    /// for malformed data and Error(GenusMismatch) when the footprint has a
    /// different number of gaps than the declared genus.
    explicit Curve(CurveData data);

    const CurveData& data() const { return data_; }
    const gf::Field& field() const { return data_.field; }
    int t() const { return int(data_.weights.size()); }
    int a1() const { return sg_.a1; }
    int genus() const { return data_.genus; }
    int n() const { return int(data_.points.size()); }
    const SemigroupData& semigroup() const { return sg_; }

    int weight(const Exponents& e) const;

    /// Weighted reverse lexicographic order: heavier wins, ties go to the
    /// monomial with the smaller exponent at the first differing position.
    std::strong_ordering cmp_weighted_revlex(const Exponents& u, const Exponents& v) const;

    /// Full division by the Groebner basis, re-indexed on the footprint basis.
    RingElem normal_form(const MPoly& poly) const;
    /// Inverse of normal_form's re-indexing: x_1^m y_j -> X_1^m X^{L_j}.
    MPoly to_mpoly(const RingElem& f) const;

    /// Throws Error(NotANongap).
    RingElem phi(int s) const;
    int prec(int s) const { return sg_.prec(s); }
    int pole_order(const RingElem& f) const;

    gf::Elem eval_mpoly(const MPoly& poly, std::size_t point) const;

    /// Stores the point-dependent semigroup data computed by the code setup.
    void set_point_data(std::vector<int> hhat, std::vector<int> eta_degs) {
        sg_.hhat = std::move(hhat);
        sg_.eta_degs = std::move(eta_degs);
    }

private:
    void derive_semigroup();
    void validate_points() const;

    CurveData data_;
    SemigroupData sg_;
    std::vector<Exponents> leading_;                 // leading monomial of each basis element
    std::map<Exponents, int> footprint_tail_index_;  // (m_2..m_t) of L_j -> j
};

}  // namespace ag
