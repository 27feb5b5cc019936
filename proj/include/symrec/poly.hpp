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

#ifndef SYMREC_POLY_HPP
#define SYMREC_POLY_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "symrec/matrix.hpp"

namespace symrec {

/// Dense univariate polynomial over a finite field, little-endian
/// coefficients, always normalized (no trailing zeros; zero polynomial has
/// an empty coefficient vector).
class PolyGF {
public:
    explicit PolyGF(FieldRef f) : f_(std::move(f)) {}
    PolyGF(FieldRef f, std::vector<GfElem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        trim();
    }

    static PolyGF x(FieldRef f) { return PolyGF(std::move(f), {0, 1}); }
    static PolyGF constant(FieldRef f, GfElem c) { return PolyGF(std::move(f), {c}); }

    const FieldRef& field() const { return f_; }
    const std::vector<GfElem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    GfElem coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
    }
    GfElem lead() const { return c_.empty() ? 0 : c_.back(); }

    bool operator==(const PolyGF& o) const { return c_ == o.c_; }
    bool operator!=(const PolyGF& o) const { return !(*this == o); }

    PolyGF operator+(const PolyGF& o) const {
        std::vector<GfElem> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = f_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
        return PolyGF(f_, std::move(r));
    }

    PolyGF operator-(const PolyGF& o) const {
        std::vector<GfElem> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = f_->sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
        return PolyGF(f_, std::move(r));
    }

    PolyGF operator*(const PolyGF& o) const {
        if (is_zero() || o.is_zero()) return PolyGF(f_);
        std::vector<GfElem> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
        }
        return PolyGF(f_, std::move(r));
    }

    PolyGF scaled(GfElem k) const {
        std::vector<GfElem> r = c_;
        for (auto& v : r) v = f_->mul(v, k);
        return PolyGF(f_, std::move(r));
    }

    PolyGF monic() const {
        if (is_zero()) return *this;
        return scaled(f_->inv(lead()));
    }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<PolyGF, PolyGF> divmod(const PolyGF& d) const {
        if (d.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
        PolyGF rem = *this;
        std::vector<GfElem> quo;
        int dd = d.degree();
        GfElem il = f_->inv(d.lead());
        if (rem.degree() >= dd) quo.assign(rem.degree() - dd + 1, 0);
        while (rem.degree() >= dd) {
            int shift = rem.degree() - dd;
            GfElem c = f_->mul(rem.lead(), il);
            quo[shift] = c;
            for (int i = 0; i <= dd; ++i)
                rem.c_[shift + i] = f_->sub(rem.c_[shift + i], f_->mul(c, d.c_[i]));
            rem.trim();
        }
        return {PolyGF(f_, std::move(quo)), std::move(rem)};
    }

    PolyGF operator%(const PolyGF& d) const { return divmod(d).second; }
    PolyGF operator/(const PolyGF& d) const { return divmod(d).first; }

    static PolyGF gcd(PolyGF a, PolyGF b) {
        while (!b.is_zero()) {
            PolyGF r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    PolyGF pow_mod(long n, const PolyGF& m) const {
        PolyGF r = constant(f_, 1), base = *this % m;
        while (n > 0) {
            if (n & 1) r = (r * base) % m;
            base = (base * base) % m;
            n >>= 1;
        }
        return r;
    }

    GfElem eval(GfElem x) const {
        GfElem v = 0;
        for (int i = degree(); i >= 0; --i) v = f_->add(f_->mul(v, x), c_[i]);
        return v;
    }

    /// Horner evaluation at a square matrix.
    MatrixGF eval(const MatrixGF& m) const {
        int n = m.rows();
        MatrixGF r(f_, n, n);
        if (is_zero()) return r;
        for (int i = 0; i < n; ++i) r.set(i, i, c_.back());
        for (int k = degree() - 1; k >= 0; --k) {
            r = r * m;
            for (int i = 0; i < n; ++i) r.set(i, i, f_->add(r.at(i, i), c_[k]));
        }
        return r;
    }

    /// Irreducible factors with multiplicities, sorted by (degree,
    /// coefficient vector); deterministic Berlekamp splitting, suitable for
    /// the small fields this toolkit targets.
    std::vector<std::pair<PolyGF, int>> factor() const;

    bool is_irreducible() const {
        if (degree() <= 0) return false;
        if (degree() == 1) return true;
        auto f = factor();
        return f.size() == 1 && f[0].second == 1;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldRef f_;
    std::vector<GfElem> c_;
};

namespace detail {

/// Berlekamp split of a monic squarefree polynomial into irreducible
/// factors (deterministic: the Frobenius kernel basis and the field elements
/// are tried in a fixed order).
inline void berlekamp_squarefree(const PolyGF& f, std::vector<PolyGF>& out) {
    const FieldRef& F = f.field();
    int n = f.degree();
    if (n == 1) {
        out.push_back(f);
        return;
    }
    long q = F->order();
    // Frobenius matrix: column j holds x^(q*j) mod f
    PolyGF xq = PolyGF::x(F).pow_mod(q, f);
    MatrixGF Q(F, n, n);
    PolyGF cur = PolyGF::constant(F, 1);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) Q.set(i, j, cur.coeff(i));
        cur = (cur * xq) % f;
    }
    MatrixGF QmI = Q - MatrixGF::identity(F, n);
    MatrixGF ker = QmI.nullspace();  // rows are Berlekamp subalgebra elements
    int r = ker.rows();              // number of irreducible factors
    std::vector<PolyGF> factors = {f};
    if (r == 1) {
        out.push_back(f);
        return;
    }
    for (int bi = 0; bi < ker.rows() && static_cast<int>(factors.size()) < r; ++bi) {
        std::vector<GfElem> vc(ker.row(bi), ker.row(bi) + n);
        PolyGF v(F, vc);
        if (v.degree() <= 0) continue;  // constants split nothing
        std::vector<PolyGF> next;
        for (const PolyGF& g : factors) {
            std::vector<PolyGF> parts;
            PolyGF rest = g;
            for (long c = 0; c < q && rest.degree() > 0; ++c) {
                PolyGF shifted = v - PolyGF::constant(F, static_cast<GfElem>(c));
                PolyGF d = PolyGF::gcd(shifted % rest, rest);
                if (d.degree() > 0 && d.degree() < rest.degree()) {
                    parts.push_back(d);
                    rest = (rest / d).monic();
                }
            }
            if (rest.degree() > 0) parts.push_back(rest);
            for (auto& p : parts) next.push_back(std::move(p));
        }
        factors = std::move(next);
    }
    for (auto& g : factors) out.push_back(g.monic());
}

}  // namespace detail

inline std::vector<std::pair<PolyGF, int>> PolyGF::factor() const {
    std::vector<std::pair<PolyGF, int>> result;
    if (degree() <= 0) return result;
    const FieldRef& F = f_;
    long p = F->characteristic();
    PolyGF work = monic();

    // squarefree decomposition by repeated gcd with the derivative
    std::vector<std::pair<PolyGF, int>> squarefree_parts;  // (product of distinct irr, multiplicity base)
    std::vector<std::pair<PolyGF, int>> stack = {{work, 1}};
    while (!stack.empty()) {
        auto [g, mult] = stack.back();
        stack.pop_back();
        if (g.degree() <= 0) continue;
        // derivative
        std::vector<GfElem> dc(std::max(0, g.degree()), 0);
        for (int i = 1; i <= g.degree(); ++i)
            dc[i - 1] = F->mul(g.coeff(i), F->from_int(i));
        PolyGF der(F, std::move(dc));
        if (der.is_zero()) {
            // g = h(x^p); take p-th roots coefficientwise (c^(p^(e-1)))
            long e = F->degree();
            std::vector<GfElem> hc(g.degree() / p + 1, 0);
            for (int i = 0; i <= g.degree(); i += static_cast<int>(p)) {
                GfElem acc = g.coeff(i);
                for (long t = 1; t < e; ++t) acc = F->pow(acc, p);
                hc[i / p] = acc;
            }
            stack.push_back({PolyGF(F, std::move(hc)), mult * static_cast<int>(p)});
            continue;
        }
        PolyGF d = PolyGF::gcd(g, der);
        PolyGF sq = (g / d).monic();  // squarefree part
        if (sq.degree() > 0) squarefree_parts.push_back({sq, mult});
        if (d.degree() > 0) stack.push_back({d.monic(), mult});
    }

    // factor each squarefree part; accumulate multiplicities
    std::vector<std::pair<PolyGF, int>> acc;
    for (auto& [sq, mult] : squarefree_parts) {
        std::vector<PolyGF> irr;
        detail::berlekamp_squarefree(sq, irr);
        for (auto& g : irr) {
            bool merged = false;
            for (auto& [h, m] : acc)
                if (h == g) {
                    m += mult;
                    merged = true;
                    break;
                }
            if (!merged) acc.push_back({g, mult});
        }
    }
    std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return acc;
}

/// Characteristic polynomial via Hessenberg reduction, O(n^3), exact and
/// deterministic over any field.
inline PolyGF charpoly(const MatrixGF& a) {
    const FieldRef& F = a.field();
    int n = a.rows();
    if (n != a.cols()) throw Error("ShapeMismatch", "charpoly of non-square matrix");
    if (n == 0) return PolyGF::constant(F, 1);
    MatrixGF h = a;
    const Gf& f = *F;
    // reduce to upper Hessenberg by similarity transforms
    for (int c = 0; c < n - 2; ++c) {
        int piv = -1;
        for (int r = c + 1; r < n; ++r)
            if (h.at(r, c)) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != c + 1) {
            for (int j = 0; j < n; ++j) std::swap(h.row(piv)[j], h.row(c + 1)[j]);
            for (int i = 0; i < n; ++i) {
                GfElem t = h.at(i, piv);
                h.set(i, piv, h.at(i, c + 1));
                h.set(i, c + 1, t);
            }
        }
        GfElem ip = f.inv(h.at(c + 1, c));
        for (int r = c + 2; r < n; ++r) {
            GfElem m = f.mul(h.at(r, c), ip);
            if (!m) continue;
            // row r -= m * row (c+1); column (c+1) += m * column r
            kernels::axpy(f, f.neg(m), h.row(c + 1), h.row(r), n);
            for (int i = 0; i < n; ++i)
                h.set(i, c + 1, f.add(h.at(i, c + 1), f.mul(m, h.at(i, r))));
        }
    }
    // charpoly recurrence on the Hessenberg form
    std::vector<PolyGF> p;
    p.reserve(n + 1);
    p.push_back(PolyGF::constant(F, 1));
    PolyGF x = PolyGF::x(F);
    for (int m = 1; m <= n; ++m) {
        PolyGF pm = (x - PolyGF::constant(F, h.at(m - 1, m - 1))) * p[m - 1];
        GfElem beta = 1;
        for (int i = m - 1; i >= 1; --i) {
            beta = f.mul(beta, h.at(i, i - 1));
            GfElem coefficient = f.mul(beta, h.at(i - 1, m - 1));
            if (coefficient) pm = pm - p[i - 1].scaled(coefficient);
        }
        p.push_back(std::move(pm));
    }
    return p[n];
}

/// Minimal polynomial of a square matrix: lcm of the annihilators of the
/// standard basis vectors under the Krylov recurrence. Deterministic.
inline PolyGF minpoly(const MatrixGF& a) {
    const FieldRef& F = a.field();
    int n = a.rows();
    if (n != a.cols()) throw Error("ShapeMismatch", "minpoly of non-square matrix");
    PolyGF m = PolyGF::constant(F, 1);
    for (int s = 0; s < n && m.degree() < n; ++s) {
        // Krylov sequence from e_s with combination tracking:
        // rows [v | unit_j] where v = e_s A^j
        EchelonBasis basis(F, n + n + 1);
        std::vector<GfElem> v(n, 0);
        v[s] = 1;
        PolyGF ann(F);
        for (int j = 0; j <= n; ++j) {
            std::vector<GfElem> augmented(n + n + 1, 0);
            for (int i = 0; i < n; ++i) augmented[i] = v[i];
            augmented[n + j] = 1;
            std::vector<GfElem> red = augmented;
            int lead = basis.reduce(red);
            if (lead < 0 || lead >= n) {
                // v-part vanished; the tail holds the dependency, monic in x^j
                std::vector<GfElem> cs(red.begin() + n, red.end());
                ann = PolyGF(F, std::move(cs));
                break;
            }
            basis.insert(std::move(augmented));
            v = a.apply_row(v.data());
        }
        if (!ann.is_zero()) {
            PolyGF g = PolyGF::gcd(m, ann);
            m = (m * ann.monic()) / g;
            m = m.monic();
        }
    }
    return m;
}

}  // namespace symrec

#endif  // SYMREC_POLY_HPP
