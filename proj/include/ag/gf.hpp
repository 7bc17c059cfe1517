// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace ag::gf {

/// Element of GF(p^m). The value read base-p gives the coordinates in the
/// polynomial basis 1, a, a^2, ... of the defining irreducible polynomial.
struct Elem {
    std::uint8_t value = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint8_t v) : value(v) {}

    constexpr bool is_zero() const { return value == 0; }
    constexpr bool is_one() const { return value == 1; }
    constexpr friend auto operator<=>(Elem, Elem) = default;
};

inline constexpr Elem kZero{0};
inline constexpr Elem kOne{1};

/// Small finite field GF(p^m) with p^m <= 256.
///
/// Arithmetic is table driven: addition through a full q x q table (so odd
/// characteristic costs the same as XOR) and multiplication through
/// log/antilog tables over a generator found at construction. The tables
/// are filled from plain polynomial arithmetic modulo the irreducible,
/// which stays available as `mul_reference` for testing.
class Field {
public:
    /// `irreducible` holds m + 1 coefficients, low degree first, leading 1.
    /// Throws Error(InvalidField) unless p is prime, p^m <= 256 and the
    /// polynomial is monic irreducible of degree m.
    Field(int p, int m, std::vector<int> irreducible);

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    int size() const { return q_; }
    const std::vector<int>& irreducible() const { return irreducible_; }

    /// Throws Error(Parse) when `v` is outside [0, q).
    Elem from_int(long v) const;

    Elem add(Elem a, Elem b) const { return Elem{add_[index(a, b)]}; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const { return Elem{neg_[a.value]}; }

    Elem mul(Elem a, Elem b) const {
        if (a.is_zero() || b.is_zero()) return kZero;
        return Elem{exp_[log_[a.value] + log_[b.value]]};
    }

    /// Throws Error(ZeroInversion) for a = 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long e) const;

    /// Product computed directly as polynomials modulo the irreducible.
    Elem mul_reference(Elem a, Elem b) const;

private:
    std::size_t index(Elem a, Elem b) const { return std::size_t(a.value) * std::size_t(q_) + b.value; }

    int p_;
    int m_;
    int q_;
    std::vector<int> irreducible_;
    std::vector<std::uint8_t> add_;
    std::array<std::uint8_t, 256> neg_{};
    std::array<int, 256> log_{};
    std::array<std::uint8_t, 512> exp_{};
};

}  // namespace ag::gf
