// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "ag/code.hpp"

namespace ag {

/// alpha_1 z + alpha_0 in L(infinity Q) z + L(infinity Q).
struct PairElem {
    RingElem a;  // coefficient of z
    RingElem b;

    friend bool operator==(const PairElem&, const PairElem&) = default;
};

int gamma(const PairElem& f);

/// Order <_s on monomials x_1^m_1 ... x_t^m_t z^k given as t + 1 exponents
/// (z last): first by k*s + weight, ties to the smaller exponent at the
/// first differing position.
std::strong_ordering cmp_order_s(const Curve& curve, const Exponents& u, const Exponents& v, int s);

/// Decoder state at a nongap s (or s = -1 once the descent is complete).
struct DecoderState {
    int s = 0;
    std::vector<PairElem> f;
    std::vector<PairElem> g;
    std::vector<gf::Elem> nu;       // leading coefficient of d_{i,i}
    Message w_chosen;               // w_s for processed s in Gamma
    Word r_shift;                   // r^(s)
};

struct VoteRecord {
    std::vector<int> iprime;
    std::vector<int> k;
    std::vector<int> c;
    std::vector<int> cbar;
    std::vector<gf::Elem> mu;
    std::vector<gf::Elem> w;  // w_{s,i}
};

enum class Criterion { First = 1, Second = 2, Third = 3 };

struct DecodeOptions {
    int tau = 0;
    Criterion criterion = Criterion::Third;
    /// Maximum number of rebasings over all branches; 0 selects the
    /// closed-form iteration bound for the code, tau and criterion.
    std::uint64_t iteration_cap = 0;
    /// Verify the invariants after every rebasing (see invariant_violation;
    /// leading terms are included only together with gap_elimination).
    bool check_invariants = false;
    /// Also run the elimination part of rebasing, with w = 0, at every gap
    /// passed on the way to prec(s). Jumping straight to prec(s) can leave a
    /// term of f_i at a gap order above its z-part; once the descent gets
    /// below 2g with tau close to (n - g) / 2 that may drop the branch of a
    /// codeword within tau. Gap steps do not count as iterations.
    bool gap_elimination = true;
};

struct DecodeEntry {
    Message message;
    Word codeword;
    int distance = 0;
};

struct DecodeResult {
    std::vector<DecodeEntry> list;
    std::uint64_t iterations = 0;
    CostCounter cost;
};

/// List decoder for one code. Holds no mutable state; decode() may run
/// concurrently from several threads.
class Decoder {
public:
    explicit Decoder(const Code& code);

    const Code& code() const { return *code_; }

    DecoderState init(const Word& r, CostCounter* ctr) const;
    VoteRecord pair(const DecoderState& st, CostCounter* ctr) const;
    /// Values w satisfying the vote threshold at st.s, ascending; {0} off Gamma.
    std::vector<gf::Elem> candidates(const DecoderState& st, const VoteRecord& votes, int tau) const;
    DecoderState rebase(const DecoderState& st, const VoteRecord& votes, gf::Elem w, CostCounter* ctr) const;

    /// Throws Error(BudgetExceeded) when the iteration cap is reached.
    DecodeResult decode(const Word& r, const DecodeOptions& opt) const;

    /// Largest s in Gamma with s < n - 2 tau - g, if any.
    std::optional<int> floor_s(int tau) const;

    /// Empty string when st satisfies the invariants, otherwise a
    /// description of the violations. Always checked: every f_i, g_i lies in
    /// the module of r^(s), the z-part of f_i is led by a_{i,i} y_i, D_i by
    /// d_{i,i} y_i with leading coefficient nu_i, and the diagonal degrees
    /// sum to n. With `leading_terms`, also the <_s dominance of those
    /// leading terms over the other part. That holds along every branch that
    /// follows a codeword within distance tau of r; branches that follow no
    /// such codeword can break it once a gap is skipped; with gap
    /// elimination it holds on every branch.
    std::string invariant_violation(const DecoderState& st, bool leading_terms = true) const;
    /// Gap steps from gap s_top - 1 down to prec(s_top) + 1 applied to a
    /// state already at prec(s_top).
    DecoderState eliminate_gaps(DecoderState st, int s_top, CostCounter* ctr) const;

private:
    enum class Outcome { Continue, Stop };
    Outcome check_termination(const DecoderState& st, const Word& r, const DecodeOptions& opt, CostCounter* ctr,
                              std::vector<DecodeEntry>& found) const;
    std::optional<DecodeEntry> quotient_candidate(const DecoderState& st, const PairElem& fmin, CostCounter* ctr) const;
    const PairElem& fmin(const DecoderState& st) const;
    DecodeEntry entry_from_w(const DecoderState& st) const;

    const Code* code_;
    const CodeContext* ctx_;
};

/// Closed-form upper bound on the number of rebasings with max hhat in
/// place of the starting pole order. Saturates at UINT64_MAX.
std::uint64_t iteration_bound(const Code& code, int tau, Criterion criterion);

}  // namespace ag
