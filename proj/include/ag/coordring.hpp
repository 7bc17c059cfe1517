// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ag/curve.hpp"

namespace ag {

/// Field operation tally. `muls` and `divs` count operations actually
/// executed (products with a literal 1 are skipped). `bound` accumulates the
/// closed-form per-step upper bounds of the cost model, which is what the
/// published tables sum.
struct CostCounter {
    std::uint64_t muls = 0;
    std::uint64_t divs = 0;
    std::uint64_t bound = 0;

    std::uint64_t ops() const { return muls + divs; }
    CostCounter& operator+=(const CostCounter& o) {
        muls += o.muls;
        divs += o.divs;
        bound += o.bound;
        return *this;
    }
};

/// Number of nonzero terms over the footprint basis.
int gamma(const RingElem& f);
/// Number of nonzero terms whose coefficient is not 1.
int gamma_ne1(const RingElem& f);

/// Drops trailing zero coefficients.
void trim(Poly& p);
void trim(RingElem& f);

/// Arithmetic in L(infinity Q) = F_q[x_1] y_0 + ... + F_q[x_1] y_{a1-1}.
///
/// Products go through the table of y_i y_j normal forms: the symbolic
/// product in X_1, Y_1, ... is collected per unordered pair {i, j} and each
/// collected polynomial is then multiplied into the table entry.
class CoordRing {
public:
    /// Keeps a reference to `curve`, which must outlive the ring.
    explicit CoordRing(const Curve& curve);

    const Curve& curve() const { return *curve_; }
    const gf::Field& field() const { return curve_->field(); }
    int a1() const { return a1_; }

    const RingElem& y_product(int i, int j) const { return table_[idx(i, j)]; }
    gf::Elem y_product_lc(int i, int j) const { return table_lc_[idx(i, j)]; }

    int pole_order(const RingElem& f) const { return curve_->pole_order(f); }
    /// Coefficient of the term of highest pole order; zero for f = 0.
    gf::Elem lc(const RingElem& f) const;

    /// Normal form of g*h. Adds executed multiplications to ctr->muls and
    /// multi(g, h) to ctr->bound.
    RingElem mul(const RingElem& g, const RingElem& h, CostCounter* ctr = nullptr) const;
    /// The upper bound multi(g, h) on the multiplications of mul(g, h).
    std::uint64_t multi_bound(const RingElem& g, const RingElem& h) const;

    /// Exact quotient g/h by long division, or nullopt when h does not
    /// divide g. Each round adds 2 + multi(t phi, h) to ctr->bound.
    std::optional<RingElem> quot(const RingElem& g, const RingElem& h, CostCounter* ctr = nullptr) const;

    /// dst += c * x_1^shift * src. Multiplications by c are counted in
    /// ctr->muls when c != 1 (bound: gamma(src)).
    void axpy(RingElem& dst, gf::Elem c, int shift, const RingElem& src, CostCounter* ctr = nullptr) const;
    RingElem add(const RingElem& a, const RingElem& b) const;
    RingElem sub(const RingElem& a, const RingElem& b) const;
    RingElem neg(const RingElem& a) const;
    RingElem scale(gf::Elem c, const RingElem& a, CostCounter* ctr = nullptr) const;
    /// c * phi_s as a ring element.
    RingElem monomial(gf::Elem c, int s) const;

private:
    std::size_t idx(int i, int j) const { return std::size_t(i) * std::size_t(a1_) + std::size_t(j); }
    std::vector<Poly> collect(const RingElem& g, const RingElem& h, std::uint64_t* muls) const;

    const Curve* curve_;
    int a1_;
    std::vector<RingElem> table_;
    std::vector<gf::Elem> table_lc_;
    std::vector<int> table_gamma_ne1_;
};

}  // namespace ag
