/*
 * Copyright 2026 The symrec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SYMREC_GF_HPP
#define SYMREC_GF_HPP

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symrec/error.hpp"

namespace symrec {

/// An element of GF(p^e), encoded as the integer whose little-endian base-p
/// digits are the polynomial coefficients. For prime fields this is just the
/// residue. The encoding keeps elements trivially copyable; all arithmetic
/// goes through the owning Gf descriptor.
using GfElem = std::uint16_t;

class Gf;
using FieldRef = std::shared_ptr<const Gf>;

/// Descriptor of a finite field GF(p^e). Immutable after construction;
/// every operation is pure, so descriptors can be shared freely across
/// threads. Extension fields store their monic degree-e modulus; elements
/// are reduced polynomial coefficient vectors (no discrete-log tables).
/// Fields with at most 256 elements precompute add/mul/inv tables, which is
/// what the dense linear algebra kernels run on.
class Gf {
public:
    /// Validates p (trial division), e, and the modulus. For e > 1 without
    /// an explicit modulus, a built-in table covers p in {2,3,5,7}, e <= 4.
    /// Throws InputError with code NotPrime, ReducibleModulus or
    /// NoBuiltinModulus.
    static FieldRef make(long p, int e,
                         std::optional<std::vector<long>> modulus = {});

    /// Parses a field literal: `GF(p)` or `GF(p^e; c0,c1,...,ce)` (ce = 1).
    static FieldRef parse(const std::string& text);

    long characteristic() const { return p_; }
    int degree() const { return e_; }
    long order() const { return q_; }
    /// Modulus coefficients c0..ce (empty for prime fields).
    const std::vector<long>& modulus() const { return modulus_; }

    GfElem zero() const { return 0; }
    GfElem one() const { return 1; }

    GfElem add(GfElem a, GfElem b) const {
        if (!add_tab_.empty()) return add_tab_[a * q_ + b];
        return add_slow(a, b);
    }
    GfElem sub(GfElem a, GfElem b) const { return add(a, neg(b)); }
    GfElem neg(GfElem a) const {
        if (!neg_tab_.empty()) return neg_tab_[a];
        return neg_slow(a);
    }
    GfElem mul(GfElem a, GfElem b) const {
        if (!mul_tab_.empty()) return mul_tab_[a * q_ + b];
        return mul_slow(a, b);
    }
    GfElem inv(GfElem a) const {
        if (a == 0) throw Error("DivisionByZero", "inverse of zero in " + to_string());
        if (!inv_tab_.empty()) return inv_tab_[a];
        return pow(a, q_ - 2);
    }
    GfElem pow(GfElem a, long n) const {
        GfElem r = 1, base = a;
        while (n > 0) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        return r;
    }

    bool has_tables() const { return !mul_tab_.empty(); }
    /// Row of the multiplication table for a fixed left factor (table-backed
    /// fields only); the elimination kernels index straight into it.
    const GfElem* mul_row(GfElem a) const { return mul_tab_.data() + a * q_; }
    const GfElem* add_table() const { return add_tab_.data(); }

    /// Reduces an arbitrary integer into the prime subfield.
    GfElem from_int(long v) const {
        long r = v % p_;
        if (r < 0) r += p_;
        return static_cast<GfElem>(r);
    }

    /// Element from little-endian coefficients (length <= e, entries reduced
    /// mod p here).
    GfElem from_coeffs(const std::vector<long>& c) const {
        if (static_cast<int>(c.size()) > e_)
            throw InputError("BadElement", "coefficient vector longer than extension degree");
        long v = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
            long r = c[i] % p_;
            if (r < 0) r += p_;
            v = v * p_ + r;
        }
        return static_cast<GfElem>(v);
    }

    std::vector<long> coeffs(GfElem a) const {
        std::vector<long> c(e_);
        long v = a;
        for (int i = 0; i < e_; ++i) {
            c[i] = v % p_;
            v /= p_;
        }
        return c;
    }

    /// Checks that an integer is a valid encoded element of this field.
    GfElem checked_elem(long v) const {
        if (v < 0 || v >= q_)
            throw InputError("BadElement",
                             "value " + std::to_string(v) + " outside " + to_string());
        return static_cast<GfElem>(v);
    }

    std::string to_string() const {
        std::ostringstream os;
        if (e_ == 1) {
            os << "GF(" << p_ << ")";
        } else {
            os << "GF(" << p_ << "^" << e_ << "; ";
            for (std::size_t i = 0; i < modulus_.size(); ++i) {
                if (i) os << ",";
                os << modulus_[i];
            }
            os << ")";
        }
        return os.str();
    }

    bool same_as(const Gf& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

private:
    Gf(long p, int e, std::vector<long> modulus);

    GfElem add_slow(GfElem a, GfElem b) const;
    GfElem neg_slow(GfElem a) const;
    GfElem mul_slow(GfElem a, GfElem b) const;

    static bool is_prime(long p);
    static std::optional<std::vector<long>> builtin_modulus(long p, int e);
    static void check_modulus(long p, int e, const std::vector<long>& m);

    long p_;
    int e_;
    long q_;
    std::vector<long> modulus_;  // c0..ce, monic; empty when e == 1
    std::vector<GfElem> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

namespace detail {

// Polynomial helpers over the prime field GF(p), used only for modulus
// validation. Coefficients little-endian, not necessarily normalized.

inline void gfp_trim(std::vector<long>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<long> gfp_mulmod(const std::vector<long>& a,
                                    const std::vector<long>& b,
                                    const std::vector<long>& m, long p) {
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce by monic m
    int dm = static_cast<int>(m.size()) - 1;
    for (int k = static_cast<int>(r.size()) - 1; k >= dm; --k) {
        long c = r[k] % p;
        if (c == 0) continue;
        for (int i = 0; i <= dm; ++i) {
            long t = (r[k - dm + i] - c * m[i]) % p;
            r[k - dm + i] = t < 0 ? t + p : t;
        }
    }
    r.resize(dm > 0 ? dm : 1, 0);
    return r;
}

inline std::vector<long> gfp_powmod_x(long exp_p, long times,
                                      const std::vector<long>& m, long p) {
    // x^(p^times) mod m via repeated p-th powering; deg m >= 2 assumed
    std::vector<long> r = {0, 1};
    for (long t = 0; t < times; ++t) {
        // r = r^p mod m by square-and-multiply on exponent p
        std::vector<long> acc = {1};
        std::vector<long> base = r;
        long n = exp_p;
        while (n > 0) {
            if (n & 1) acc = gfp_mulmod(acc, base, m, p);
            base = gfp_mulmod(base, base, m, p);
            n >>= 1;
        }
        r = acc;
    }
    return r;
}

inline std::vector<long> gfp_gcd(std::vector<long> a, std::vector<long> b, long p) {
    gfp_trim(a);
    gfp_trim(b);
    while (!b.empty()) {
        // a mod b with b made monic
        long lead = b.back();
        long il = 1;
        // inverse of lead mod p (p prime, lead != 0)
        for (long t = 1; t < p; ++t)
            if ((lead * t) % p == 1) { il = t; break; }
        for (auto& c : b) c = (c * il) % p;
        int db = static_cast<int>(b.size()) - 1;
        while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
            long c = a.back() % p;
            int shift = static_cast<int>(a.size()) - 1 - db;
            if (c != 0) {
                for (int i = 0; i <= db; ++i) {
                    long t = (a[shift + i] - c * b[i]) % p;
                    a[shift + i] = t < 0 ? t + p : t;
                }
            }
            a.pop_back();
            gfp_trim(a);
        }
        std::swap(a, b);
        gfp_trim(b);
    }
    return a;
}

}  // namespace detail

inline bool Gf::is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::optional<std::vector<long>> Gf::builtin_modulus(long p, int e) {
    // Lexicographically smallest monic irreducible of degree e over GF(p).
    struct Entry {
        long p;
        int e;
        std::vector<long> m;
    };
    static const Entry table[] = {
        {2, 2, {1, 1, 1}},       {2, 3, {1, 0, 1, 1}},    {2, 4, {1, 0, 0, 1, 1}},
        {3, 2, {1, 0, 1}},       {3, 3, {1, 0, 2, 1}},    {3, 4, {1, 0, 1, 1, 1}},
        {5, 2, {1, 1, 1}},       {5, 3, {1, 0, 1, 1}},    {5, 4, {1, 0, 1, 1, 1}},
        {7, 2, {1, 0, 1}},       {7, 3, {1, 0, 1, 1}},    {7, 4, {1, 0, 0, 1, 1}},
    };
    for (const auto& t : table)
        if (t.p == p && t.e == e) return t.m;
    return std::nullopt;
}

inline void Gf::check_modulus(long p, int e, const std::vector<long>& m) {
    if (static_cast<int>(m.size()) != e + 1 || m.back() != 1)
        throw InputError("ReducibleModulus",
                         "modulus must be monic of degree " + std::to_string(e));
    for (long c : m)
        if (c < 0 || c >= p)
            throw InputError("ReducibleModulus", "modulus coefficients must lie in [0,p)");
    if (e <= 3) {
        // degree 2 or 3 is reducible iff it has a root in GF(p)
        for (long x = 0; x < p; ++x) {
            long v = 0;
            for (int i = e; i >= 0; --i) v = (v * x + m[i]) % p;
            if (v == 0)
                throw InputError("ReducibleModulus",
                                 "modulus has root " + std::to_string(x) + " in GF(" +
                                     std::to_string(p) + ")");
        }
        return;
    }
    // Full criterion: f | x^(p^e) - x, and f shares no factor with
    // x^(p^d) - x for proper divisors d of e.
    std::vector<long> xq = detail::gfp_powmod_x(p, e, m, p);
    // xq must equal x mod m
    std::vector<long> x = {0, 1};
    std::vector<long> diff = xq;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        long t = (diff[i] - x[i]) % p;
        diff[i] = t < 0 ? t + p : t;
    }
    detail::gfp_trim(diff);
    if (!diff.empty())
        throw InputError("ReducibleModulus", "modulus does not divide X^(p^e) - X");
    for (int d = 1; d < e; ++d) {
        if (e % d != 0) continue;
        std::vector<long> xd = detail::gfp_powmod_x(p, d, m, p);
        std::vector<long> g = xd;
        g.resize(std::max<std::size_t>(g.size(), 2), 0);
        g[1] = (g[1] - 1 + p) % p;  // x^(p^d) - x mod m
        std::vector<long> gc = detail::gfp_gcd(g, m, p);
        if (static_cast<int>(gc.size()) - 1 >= 1)
            throw InputError("ReducibleModulus",
                             "modulus shares a factor with X^(p^" + std::to_string(d) +
                                 ") - X");
    }
}

inline Gf::Gf(long p, int e, std::vector<long> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    q_ = 1;
    for (int i = 0; i < e_; ++i) q_ *= p_;
    if (q_ <= 256) {
        add_tab_.resize(q_ * q_);
        mul_tab_.resize(q_ * q_);
        neg_tab_.resize(q_);
        inv_tab_.resize(q_);
        for (long a = 0; a < q_; ++a) {
            neg_tab_[a] = neg_slow(static_cast<GfElem>(a));
            for (long b = 0; b < q_; ++b) {
                add_tab_[a * q_ + b] = add_slow(static_cast<GfElem>(a), static_cast<GfElem>(b));
                mul_tab_[a * q_ + b] = mul_slow(static_cast<GfElem>(a), static_cast<GfElem>(b));
            }
        }
        inv_tab_[0] = 0;
        for (long a = 1; a < q_; ++a) {
            for (long b = 1; b < q_; ++b)
                if (mul_tab_[a * q_ + b] == 1) {
                    inv_tab_[a] = static_cast<GfElem>(b);
                    break;
                }
        }
    }
}

inline GfElem Gf::add_slow(GfElem a, GfElem b) const {
    if (e_ == 1) return static_cast<GfElem>((a + b) % p_);
    long va = a, vb = b, r = 0, mul = 1;
    for (int i = 0; i < e_; ++i) {
        long d = (va % p_ + vb % p_) % p_;
        r += d * mul;
        mul *= p_;
        va /= p_;
        vb /= p_;
    }
    return static_cast<GfElem>(r);
}

inline GfElem Gf::neg_slow(GfElem a) const {
    if (e_ == 1) return static_cast<GfElem>((p_ - a) % p_);
    long va = a, r = 0, mul = 1;
    for (int i = 0; i < e_; ++i) {
        long d = (p_ - va % p_) % p_;
        r += d * mul;
        mul *= p_;
        va /= p_;
    }
    return static_cast<GfElem>(r);
}

inline GfElem Gf::mul_slow(GfElem a, GfElem b) const {
    if (e_ == 1) return static_cast<GfElem>((static_cast<long>(a) * b) % p_);
    // schoolbook product of coefficient vectors, reduced by the modulus
    long prod[32] = {0};  // 2e-1 <= 31 since q = p^e <= 2^16
    long va = a;
    for (int i = 0; i < e_; ++i, va /= p_) {
        long ca = va % p_;
        if (ca == 0) continue;
        long vb = b;
        for (int j = 0; j < e_; ++j, vb /= p_) {
            long cb = vb % p_;
            prod[i + j] = (prod[i + j] + ca * cb) % p_;
        }
    }
    for (int k = 2 * e_ - 2; k >= e_; --k) {
        long c = prod[k];
        if (c == 0) continue;
        for (int i = 0; i < e_; ++i) {
            long t = (prod[k - e_ + i] - c * modulus_[i]) % p_;
            prod[k - e_ + i] = t < 0 ? t + p_ : t;
        }
        prod[k] = 0;
    }
    long r = 0;
    for (int i = e_ - 1; i >= 0; --i) r = r * p_ + prod[i];
    return static_cast<GfElem>(r);
}

inline FieldRef Gf::make(long p, int e, std::optional<std::vector<long>> modulus) {
    if (!is_prime(p))
        throw InputError("NotPrime", std::to_string(p) + " is not prime");
    if (e < 1) throw InputError("BadField", "extension degree must be >= 1");
    long q = 1;
    for (int i = 0; i < e; ++i) {
        q *= p;
        if (q > 65536)
            throw InputError("BadField", "field order exceeds the 2^16 element cap");
    }
    std::vector<long> m;
    if (e > 1) {
        if (modulus) {
            m = *modulus;
            for (auto& c : m) {
                c %= p;
                if (c < 0) c += p;
            }
        } else {
            auto built = builtin_modulus(p, e);
            if (!built)
                throw InputError("NoBuiltinModulus",
                                 "no built-in modulus for GF(" + std::to_string(p) + "^" +
                                     std::to_string(e) + "); supply one");
            m = *built;
        }
        check_modulus(p, e, m);
    } else if (modulus && !modulus->empty()) {
        throw InputError("BadField", "prime field takes no modulus");
    }
    return FieldRef(new Gf(p, e, std::move(m)));
}

inline FieldRef Gf::parse(const std::string& text) {
    auto fail = [&]() -> FieldRef {
        throw InputError("BadField", "cannot parse field literal '" + text + "'");
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')') return fail();
    std::string body = s.substr(3, s.size() - 4);
    auto semi = body.find(';');
    std::string head = semi == std::string::npos ? body : body.substr(0, semi);
    long p = 0;
    int e = 1;
    auto caret = head.find('^');
    try {
        if (caret == std::string::npos) {
            p = std::stol(head);
        } else {
            p = std::stol(head.substr(0, caret));
            e = std::stoi(head.substr(caret + 1));
        }
    } catch (const std::exception&) {
        return fail();
    }
    std::optional<std::vector<long>> modulus;
    if (semi != std::string::npos) {
        std::vector<long> m;
        std::string rest = body.substr(semi + 1);
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                m.push_back(std::stol(tok));
            } catch (const std::exception&) {
                return fail();
            }
        }
        if (m.empty()) return fail();
        modulus = std::move(m);
    }
    return make(p, e, modulus);
}

}  // namespace symrec

#endif  // SYMREC_GF_HPP
