// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ag/coordring.hpp"
#include "ag/curve.hpp"

namespace ag {

using Word = std::vector<gf::Elem>;
/// Message of a code C_Gamma: coefficient of phi_s for each s in Gamma.
using Message = std::map<int, gf::Elem>;

/// Everything that depends on the curve and its points but not on a code:
/// the ring, hhat with the interpolation matrix, and the eta basis of the
/// functions vanishing on all points. Not copyable (the ring points into
/// the owned curve).
class CodeContext {
public:
    /// Throws Error(RankDeficient) if fewer than n independent evaluation
    /// rows exist below the search bound and Error(SearchBoundExceeded) if a
    /// residue class has no vanishing element below it.
    explicit CodeContext(CurveData data);
    static std::unique_ptr<CodeContext> load(const std::string& path);

    CodeContext(const CodeContext&) = delete;
    CodeContext& operator=(const CodeContext&) = delete;

    const Curve& curve() const { return curve_; }
    const CoordRing& ring() const { return ring_; }
    const gf::Field& field() const { return curve_.field(); }
    const SemigroupData& semigroup() const { return curve_.semigroup(); }
    int n() const { return curve_.n(); }
    int a1() const { return curve_.a1(); }
    int genus() const { return curve_.genus(); }

    const std::vector<int>& hhat() const { return semigroup().hhat; }
    bool in_hhat(int s) const;
    const RingElem& eta(int i) const { return eta_[std::size_t(i)]; }
    /// Row-major n x n matrix taking a word to the coefficients of its
    /// interpolating function on psi_1..psi_n.
    const std::vector<gf::Elem>& interpolation_matrix() const { return minv_; }
    /// Evaluation matrix V[p][k] = psi_k(P_p), row-major.
    const std::vector<gf::Elem>& evaluation_matrix() const { return vmat_; }

    /// nu(s) from the cached table (computed directly beyond it).
    int nu(int s) const;

    gf::Elem phi_value(int s, std::size_t point) const;
    gf::Elem eval_at(const RingElem& f, std::size_t point) const;
    /// Evaluation at all points. Bound charged: n * gamma(f).
    Word ev(const RingElem& f, CostCounter* ctr = nullptr) const;
    /// h_r with ev(h_r) = r, supported on psi_1..psi_n. Bound charged: n^2.
    RingElem interpolate(const Word& r, CostCounter* ctr = nullptr) const;

private:
    void build_eval_system();

    Curve curve_;
    CoordRing ring_;
    std::vector<gf::Elem> vmat_;
    std::vector<gf::Elem> minv_;
    std::vector<RingElem> eta_;
    std::vector<gf::Elem> x1_vals_;               // x_1(P_p)
    std::vector<std::vector<gf::Elem>> y_vals_;   // y_j(P_p)
    std::vector<int> nu_table_;
};

/// A code C_Gamma on a context.
struct Code {
    const CodeContext* ctx = nullptr;
    std::vector<int> gamma;  // increasing
    int dag = 0;

    int dim() const { return int(gamma.size()); }
    bool contains(int s) const;
    int max_gamma() const { return gamma.back(); }
    /// d_AG of the subcode spanned by Gamma^(<= s); INT_MAX when empty.
    int dag_upto(int s) const;
};

/// Feng-Rao improved code {s in hhat : nu(s) >= delta}. Throws Error(EmptyGamma).
Code build_code(const CodeContext& ctx, int delta);
/// Explicit Gamma. Throws Error(InvalidGamma) for s outside hhat, Error(EmptyGamma).
Code build_code(const CodeContext& ctx, std::vector<int> gamma);

RingElem message_function(const Code& code, const Message& msg);
Word encode(const Code& code, const Message& msg);

int hamming_distance(const Word& a, const Word& b);

/// Whitespace separated decimal field elements; throws Error(Parse).
Word read_word(std::istream& in, const gf::Field& field, int n);
void write_word(std::ostream& out, const Word& w);
/// Lines of `s value`; every s must lie in Gamma, missing s default to 0.
Message read_message(std::istream& in, const Code& code);
void write_message(std::ostream& out, const Message& msg);

}  // namespace ag
