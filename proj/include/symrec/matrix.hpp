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

#ifndef SYMREC_MATRIX_HPP
#define SYMREC_MATRIX_HPP

#include <cstring>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symrec/error.hpp"
#include "symrec/gf.hpp"
#include "symrec/rng.hpp"

namespace symrec {

namespace kernels {

/// y += c * x over the field (c != 0). Prime fields run on plain modular
/// arithmetic so the compiler can vectorize; table fields use two lookups.
inline void axpy(const Gf& f, GfElem c, const GfElem* x, GfElem* y, int n) {
    if (c == 0) return;
    if (f.degree() == 1) {
        const std::uint32_t p = static_cast<std::uint32_t>(f.characteristic());
        const std::uint32_t cc = c;
        for (int i = 0; i < n; ++i)
            y[i] = static_cast<GfElem>((y[i] + cc * x[i]) % p);
    } else {
        const GfElem* mrow = f.mul_row(c);
        const GfElem* add = f.add_table();
        const long q = f.order();
        for (int i = 0; i < n; ++i) y[i] = add[y[i] * q + mrow[x[i]]];
    }
}

inline void scale_row(const Gf& f, GfElem c, GfElem* y, int n) {
    if (c == 1) return;
    if (f.degree() == 1) {
        const std::uint32_t p = static_cast<std::uint32_t>(f.characteristic());
        const std::uint32_t cc = c;
        for (int i = 0; i < n; ++i)
            y[i] = static_cast<GfElem>((cc * y[i]) % p);
    } else {
        const GfElem* mrow = f.mul_row(c);
        for (int i = 0; i < n; ++i) y[i] = mrow[y[i]];
    }
}

}  // namespace kernels

/// Dense matrix over a finite field. Row-major; immutable by convention once
/// built (operations return fresh matrices). Row vectors act from the left:
/// module elements are rows v, algebra actions multiply on the right.
class MatrixGF {
public:
    MatrixGF() : rows_(0), cols_(0) {}
    MatrixGF(FieldRef f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, 0) {}

    static MatrixGF identity(FieldRef f, int n) {
        MatrixGF m(std::move(f), n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    static MatrixGF from_rows(FieldRef f, const std::vector<std::vector<GfElem>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        MatrixGF m(std::move(f), r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        return m;
    }

    const FieldRef& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    GfElem at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, GfElem v) { a_[static_cast<std::size_t>(i) * cols_ + j] = v; }
    const GfElem* row(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }
    GfElem* row(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }

    bool is_zero() const {
        for (GfElem v : a_)
            if (v) return false;
        return true;
    }

    bool operator==(const MatrixGF& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const MatrixGF& o) const { return !(*this == o); }

    MatrixGF operator+(const MatrixGF& o) const {
        require_shape(o, rows_, cols_);
        MatrixGF r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
        return r;
    }

    MatrixGF operator-(const MatrixGF& o) const {
        require_shape(o, rows_, cols_);
        MatrixGF r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], o.a_[i]);
        return r;
    }

    MatrixGF scaled(GfElem c) const {
        MatrixGF r = *this;
        for (auto& v : r.a_) v = f_->mul(v, c);
        return r;
    }

    void add_scaled_inplace(const MatrixGF& o, GfElem c) {
        require_shape(o, rows_, cols_);
        if (c == 0) return;
        for (int i = 0; i < rows_; ++i)
            kernels::axpy(*f_, c, o.row(i), row(i), cols_);
    }

    MatrixGF operator*(const MatrixGF& o) const {
        if (cols_ != o.rows_)
            throw Error("ShapeMismatch", "matrix product shape mismatch");
        MatrixGF r(f_, rows_, o.cols_);
        const Gf& f = *f_;
        if (f.degree() == 1) {
            // accumulate in 64-bit, reduce once per output entry
            const std::uint64_t p = static_cast<std::uint64_t>(f.characteristic());
            std::vector<std::uint64_t> acc(o.cols_);
            for (int i = 0; i < rows_; ++i) {
                std::memset(acc.data(), 0, acc.size() * sizeof(std::uint64_t));
                const GfElem* ai = row(i);
                for (int k = 0; k < cols_; ++k) {
                    std::uint64_t v = ai[k];
                    if (!v) continue;
                    const GfElem* bk = o.row(k);
                    for (int j = 0; j < o.cols_; ++j) acc[j] += v * bk[j];
                }
                GfElem* ri = r.row(i);
                for (int j = 0; j < o.cols_; ++j)
                    ri[j] = static_cast<GfElem>(acc[j] % p);
            }
        } else {
            for (int i = 0; i < rows_; ++i) {
                const GfElem* ai = row(i);
                GfElem* ri = r.row(i);
                for (int k = 0; k < cols_; ++k)
                    if (ai[k]) kernels::axpy(f, ai[k], o.row(k), ri, o.cols_);
            }
        }
        return r;
    }

    /// Row vector times matrix.
    std::vector<GfElem> apply_row(const GfElem* v) const {
        std::vector<GfElem> out(cols_, 0);
        for (int k = 0; k < rows_; ++k)
            if (v[k]) kernels::axpy(*f_, v[k], row(k), out.data(), cols_);
        return out;
    }

    MatrixGF transpose() const {
        MatrixGF r(f_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
        return r;
    }

    /// Kronecker product; satisfies (u (x) v) (A (x) B) = (uA) (x) (vB) for
    /// row vectors with index (i,j) -> i*cols_B + j.
    MatrixGF kron(const MatrixGF& o) const {
        if (!f_->same_as(*o.f_))
            throw InputError("FieldMismatch", "kronecker over different fields");
        MatrixGF r(f_, rows_ * o.rows_, cols_ * o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                GfElem c = at(i, j);
                if (!c) continue;
                for (int k = 0; k < o.rows_; ++k) {
                    const GfElem* src = o.row(k);
                    GfElem* dst = r.row(i * o.rows_ + k) + static_cast<std::size_t>(j) * o.cols_;
                    for (int l = 0; l < o.cols_; ++l) dst[l] = f_->mul(c, src[l]);
                }
            }
        return r;
    }

    struct RrefResult {
        MatrixGF mat;
        std::vector<int> pivots;
        int rank = 0;
    };

    /// Reduced row echelon form. Deterministic: pivot is the first row with a
    /// nonzero entry in the current column; rows are fully reduced above and
    /// below, pivots normalized to 1.
    RrefResult rref() const {
        MatrixGF m = *this;
        std::vector<int> pivots;
        int r = 0;
        const Gf& f = *f_;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int piv = -1;
            for (int i = r; i < rows_; ++i)
                if (m.at(i, c)) { piv = i; break; }
            if (piv < 0) continue;
            if (piv != r)
                for (int j = 0; j < cols_; ++j) std::swap(m.row(piv)[j], m.row(r)[j]);
            GfElem inv = f.inv(m.at(r, c));
            kernels::scale_row(f, inv, m.row(r), cols_);
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                GfElem v = m.at(i, c);
                if (v) kernels::axpy(f, f.neg(v), m.row(r), m.row(i), cols_);
            }
            pivots.push_back(c);
            ++r;
        }
        return {std::move(m), std::move(pivots), r};
    }

    int rank() const { return rref().rank; }

    /// Basis of the right nullspace {v : M v^T = 0}, returned as rows in
    /// RREF-canonical form, so equal kernels have byte-equal bases.
    MatrixGF nullspace() const {
        RrefResult e = rref();
        std::vector<bool> is_piv(cols_, false);
        for (int c : e.pivots) is_piv[c] = true;
        int nfree = cols_ - e.rank;
        MatrixGF basis(f_, nfree, cols_);
        int bi = 0;
        for (int c = 0; c < cols_; ++c) {
            if (is_piv[c]) continue;
            basis.set(bi, c, 1);
            for (int r = 0; r < e.rank; ++r)
                basis.set(bi, e.pivots[r], f_->neg(e.mat.at(r, c)));
            ++bi;
        }
        // canonicalize (the construction above is echelon up to row order)
        return basis.rref().mat;
    }

    /// One exact solution of M x = b (x, b column vectors given as flat
    /// arrays), or nullopt when inconsistent.
    std::optional<std::vector<GfElem>> solve(const std::vector<GfElem>& b) const {
        if (static_cast<int>(b.size()) != rows_)
            throw Error("ShapeMismatch", "solve: rhs length != rows");
        MatrixGF aug(f_, rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            std::memcpy(aug.row(i), row(i), sizeof(GfElem) * cols_);
            aug.set(i, cols_, b[i]);
        }
        RrefResult e = aug.rref();
        std::vector<GfElem> x(cols_, 0);
        for (int r = 0; r < e.rank; ++r) {
            if (e.pivots[r] == cols_) return std::nullopt;  // pivot in rhs column
            x[e.pivots[r]] = e.mat.at(r, cols_);
        }
        return x;
    }

    /// Matrix literal `[a,b;c,d]` with integer entries encoded per the field.
    static MatrixGF parse(FieldRef f, const std::string& text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.size() < 2 || s.front() != '[' || s.back() != ']')
            throw InputError("BadMatrix", "matrix literal must be bracketed: " + text);
        std::string body = s.substr(1, s.size() - 2);
        std::vector<std::vector<GfElem>> rows;
        std::istringstream rs(body);
        std::string rtok;
        while (std::getline(rs, rtok, ';')) {
            std::vector<GfElem> entries;
            if (!rtok.empty()) {
                std::istringstream es(rtok);
                std::string etok;
                while (std::getline(es, etok, ',')) {
                    try {
                        entries.push_back(f->checked_elem(std::stol(etok)));
                    } catch (const InputError&) {
                        throw;
                    } catch (const std::exception&) {
                        throw InputError("BadMatrix", "bad entry '" + etok + "'");
                    }
                }
            }
            rows.push_back(std::move(entries));
        }
        if (body.empty()) rows.clear();
        for (const auto& r : rows)
            if (r.size() != rows[0].size())
                throw InputError("BadMatrix", "ragged rows in matrix literal");
        return from_rows(std::move(f), rows);
    }

    std::string to_literal() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows_; ++i) {
            if (i) os << ";";
            for (int j = 0; j < cols_; ++j) {
                if (j) os << ",";
                os << at(i, j);
            }
        }
        os << "]";
        return os.str();
    }

    static MatrixGF random(FieldRef f, int rows, int cols, Rng& rng) {
        MatrixGF m(f, rows, cols);
        for (auto& v : m.a_) v = static_cast<GfElem>(rng.below(static_cast<std::uint32_t>(f->order())));
        return m;
    }

private:
    void require_shape(const MatrixGF& o, int r, int c) const {
        if (o.rows_ != r || o.cols_ != c)
            throw Error("ShapeMismatch", "matrix shape mismatch");
    }

    FieldRef f_;
    int rows_, cols_;
    std::vector<GfElem> a_;
};

/// Incrementally maintained row space in reduced echelon form. The workhorse
/// behind spinning, subspace comparison and coordinate extraction. Rows are
/// kept fully reduced (RREF), so the basis is canonical for the subspace.
class EchelonBasis {
public:
    EchelonBasis(FieldRef f, int width) : f_(std::move(f)), width_(width) {}

    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }
    const std::vector<GfElem>& row_at(int i) const { return rows_[i]; }

    /// Reduces v against the basis in place; returns the column of the first
    /// nonzero residual entry, or -1 if v reduced to zero.
    int reduce(std::vector<GfElem>& v) const {
        const Gf& f = *f_;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            GfElem c = v[pivots_[r]];
            if (c) kernels::axpy(f, f.neg(c), rows_[r].data(), v.data(), width_);
        }
        for (int j = 0; j < width_; ++j)
            if (v[j]) return j;
        return -1;
    }

    /// Inserts v if independent; keeps RREF. Returns true if the dimension
    /// grew.
    bool insert(std::vector<GfElem> v) {
        int lead = reduce(v);
        if (lead < 0) return false;
        const Gf& f = *f_;
        kernels::scale_row(f, f.inv(v[lead]), v.data(), width_);
        // eliminate the new pivot column from existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            GfElem c = rows_[r][lead];
            if (c) kernels::axpy(f, f.neg(c), v.data(), rows_[r].data(), width_);
        }
        // insert keeping pivot columns increasing
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        pivots_.insert(pivots_.begin() + pos, lead);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    bool contains(std::vector<GfElem> v) const { return reduce(v) < 0; }

    /// Coordinates of a member vector with respect to the basis rows; since
    /// the basis is RREF these are just the entries at the pivot columns.
    /// Caller guarantees membership.
    std::vector<GfElem> coords(const std::vector<GfElem>& v) const {
        std::vector<GfElem> c(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
        return c;
    }

    MatrixGF to_matrix() const {
        MatrixGF m(f_, dim(), width_);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < width_; ++j) m.set(i, j, rows_[i][j]);
        return m;
    }

    static EchelonBasis from_matrix(const MatrixGF& m) {
        EchelonBasis b(m.field(), m.cols());
        for (int i = 0; i < m.rows(); ++i) {
            std::vector<GfElem> v(m.row(i), m.row(i) + m.cols());
            b.insert(std::move(v));
        }
        return b;
    }

    bool same_space(const EchelonBasis& o) const {
        return width_ == o.width_ && pivots_ == o.pivots_ && rows_ == o.rows_;
    }

private:
    FieldRef f_;
    int width_;
    std::vector<int> pivots_;
    std::vector<std::vector<GfElem>> rows_;
};

}  // namespace symrec

#endif  // SYMREC_MATRIX_HPP
