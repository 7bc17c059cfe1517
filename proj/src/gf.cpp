// SPDX-License-Identifier: Apache-2.0
#include "ag/gf.hpp"

#include <string>

#include "ag/error.hpp"

namespace ag::gf {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Coefficient vectors over GF(p), low degree first.
using PrimePoly = std::vector<int>;

// Remainder of a modulo the monic polynomial b.
PrimePoly prime_poly_mod(PrimePoly a, const PrimePoly& b, int p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const int c = a.back() % p;
        const std::size_t shift = a.size() - 1 - db;
        if (c != 0)
            for (std::size_t i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        a.pop_back();
    }
    return a;
}

bool all_zero(const PrimePoly& a) {
    for (int c : a)
        if (c != 0) return false;
    return true;
}

// Exhaustive search for a monic factor of degree 1..m/2.
bool is_irreducible(const PrimePoly& f, int p) {
    const int m = int(f.size()) - 1;
    for (int d = 1; d <= m / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            PrimePoly g(d + 1, 0);
            long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = int(c % p);
                c /= p;
            }
            g[d] = 1;
            if (all_zero(prime_poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int p, int m, std::vector<int> irreducible) : p_(p), m_(m), q_(1), irreducible_(std::move(irreducible)) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw Error(ErrorKind::InvalidField, "extension degree must be at least 1");
    for (int i = 0; i < m; ++i) {
        q_ *= p;
        if (q_ > 256) throw Error(ErrorKind::InvalidField, "field size exceeds 256");
    }
    if (int(irreducible_.size()) != m + 1)
        throw Error(ErrorKind::InvalidField, "irreducible polynomial needs exactly m + 1 coefficients");
    for (int c : irreducible_)
        if (c < 0 || c >= p) throw Error(ErrorKind::InvalidField, "coefficient outside [0, p)");
    if (irreducible_.back() != 1) throw Error(ErrorKind::InvalidField, "irreducible polynomial must be monic");
    if (!is_irreducible(irreducible_, p)) throw Error(ErrorKind::InvalidField, "polynomial is reducible");

    add_.resize(std::size_t(q_) * q_);
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            int x = a, y = b, place = 1, sum = 0;
            for (int i = 0; i < m_; ++i) {
                sum += ((x % p + y % p) % p) * place;
                x /= p;
                y /= p;
                place *= p;
            }
            add_[std::size_t(a) * q_ + b] = std::uint8_t(sum);
        }
    }
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b)
            if (add_[std::size_t(a) * q_ + b] == 0) neg_[a] = std::uint8_t(b);

    // Any element of multiplicative order q - 1 serves as the log base.
    for (int g = 2; g <= q_; ++g) {
        const Elem gen{std::uint8_t(g == q_ ? 1 : g)};
        Elem x = kOne;
        int order = 0;
        do {
            x = mul_reference(x, gen);
            ++order;
        } while (!x.is_one() && order < q_);
        if (order != q_ - 1) continue;
        x = kOne;
        for (int e = 0; e < q_ - 1; ++e) {
            exp_[e] = x.value;
            exp_[e + q_ - 1] = x.value;
            log_[x.value] = e;
            x = mul_reference(x, gen);
        }
        return;
    }
    throw Error(ErrorKind::InvalidField, "no multiplicative generator found");
}

Elem Field::from_int(long v) const {
    if (v < 0 || v >= q_)
        throw Error(ErrorKind::Parse, "field element " + std::to_string(v) + " outside [0, " + std::to_string(q_) + ")");
    return Elem{std::uint8_t(v)};
}

Elem Field::inv(Elem a) const {
    if (a.is_zero()) throw Error(ErrorKind::ZeroInversion, "inverse of zero");
    return Elem{exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
}

Elem Field::pow(Elem a, long e) const {
    if (e == 0) return kOne;
    if (a.is_zero()) return kZero;
    const long order = q_ - 1;
    long r = (long(log_[a.value]) * (e % order)) % order;
    if (r < 0) r += order;
    return Elem{exp_[r]};
}

Elem Field::mul_reference(Elem a, Elem b) const {
    std::vector<int> da(m_), db(m_);
    int x = a.value, y = b.value;
    for (int i = 0; i < m_; ++i) {
        da[i] = x % p_;
        db[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    std::vector<int> prod(2 * m_ - 1, 0);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    prod = prime_poly_mod(std::move(prod), irreducible_, p_);
    int v = 0;
    for (int i = int(prod.size()) - 1; i >= 0; --i) v = v * p_ + prod[i];
    return Elem{std::uint8_t(v)};
}

}  // namespace ag::gf
