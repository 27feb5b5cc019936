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

#ifndef SYMREC_ALGEBRA_HPP
#define SYMREC_ALGEBRA_HPP

#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "symrec/group.hpp"
#include "symrec/matrix.hpp"
#include "symrec/rng.hpp"

namespace symrec {

class Algebra;
using AlgebraRef = std::shared_ptr<const Algebra>;

struct SimpleSet;       // defined in structure.hpp
struct ProjectiveSet;   // defined in structure.hpp
struct RadicalBasis;    // defined in structure.hpp

struct SparseTerm {
    int idx;
    GfElem c;
};

/// Nondegenerate symmetric associative linear functional, witnessing that
/// the algebra is symmetric. `lambda` holds the functional's values on the
/// basis.
struct SymmetrizingForm {
    std::vector<GfElem> lambda;
};

/// Outcome of the symmetrizing-form search. When `form` is empty,
/// `certified` says whether non-existence was proven by exhausting the
/// trace-condition solution space (as opposed to running out of budget).
struct SymmetricFormResult {
    std::optional<SymmetrizingForm> form;
    bool certified = false;
    long candidates_tried = 0;
};

/// Finite-dimensional associative unital algebra over a finite field, given
/// by structure constants on a distinguished basis. Group algebras keep
/// their multiplication as the group's Cayley table (each basis product is a
/// single basis element); general algebras keep sparse coefficient lists.
///
/// Algebras are immutable; derived data (simple modules, radical, projective
/// covers, symmetrizing form) is computed on demand and cached behind a
/// mutex, so the first computation serializes and later reads are free.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    /// Group algebra kG with basis indexed by G's canonical element order.
    static AlgebraRef group_algebra(GroupRef group, FieldRef field, std::string label = "") {
        auto a = std::shared_ptr<Algebra>(new Algebra());
        a->field_ = std::move(field);
        a->group_ = std::move(group);
        a->dim_ = static_cast<int>(a->group_->order());
        a->label_ = label.empty() ? ("k[" + std::to_string(a->dim_) + "]") : std::move(label);
        a->unit_.assign(a->dim_, 0);
        a->unit_[0] = 1;
        long n = a->dim_;
        a->cayley_.resize(n * n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                a->cayley_[i * n + j] =
                    a->group_->mul_index(static_cast<int>(i), static_cast<int>(j));
        // algebra generators = group generators (plus identity when the
        // group is trivial); words come from the BFS enumeration
        if (a->group_->generators().empty() || a->dim_ == 1) {
            a->gen_idx_ = {0};
        } else {
            for (const Perm& g : a->group_->generators())
                a->gen_idx_.push_back(a->group_->index_of(g));
        }
        a->words_.resize(a->dim_);
        for (int i = 0; i < a->dim_; ++i) {
            auto w = a->group_->word(i);
            a->words_[i] = {w[0], w[1]};
        }
        return a;
    }

    /// General algebra from structure constants. mult[i][j] lists the
    /// coefficient vector of b_i * b_j. Checks the unit axiom always, and
    /// associativity exhaustively for dim <= 64 (seeded random triples
    /// above).
    static AlgebraRef from_structure_constants(FieldRef field, int dim,
                                               std::vector<GfElem> unit,
                                               const std::vector<std::vector<std::vector<GfElem>>>& mult,
                                               std::string label = "", bool validate = true) {
        auto a = std::shared_ptr<Algebra>(new Algebra());
        a->field_ = std::move(field);
        a->dim_ = dim;
        a->label_ = label.empty() ? "algebra" : std::move(label);
        a->unit_ = std::move(unit);
        if (static_cast<int>(a->unit_.size()) != dim)
            throw InputError("BadAlgebra", "unit vector length != dim");
        if (static_cast<int>(mult.size()) != dim)
            throw InputError("BadAlgebra", "structure constants must be dim x dim");
        a->mult_.resize(static_cast<std::size_t>(dim) * dim);
        for (int i = 0; i < dim; ++i) {
            if (static_cast<int>(mult[i].size()) != dim)
                throw InputError("BadAlgebra", "structure constants must be dim x dim");
            for (int j = 0; j < dim; ++j) {
                if (static_cast<int>(mult[i][j].size()) != dim)
                    throw InputError("BadAlgebra", "structure constant vectors must have length dim");
                auto& terms = a->mult_[static_cast<std::size_t>(i) * dim + j];
                for (int k = 0; k < dim; ++k)
                    if (mult[i][j][k]) terms.push_back({k, mult[i][j][k]});
            }
        }
        for (int i = 0; i < dim; ++i) a->gen_idx_.push_back(i);
        if (validate) a->validate_axioms();
        return a;
    }

    /// Opposite algebra (products reversed). Shares the field and basis;
    /// words are re-evaluated right-to-left by module machinery.
    AlgebraRef opposite() const {
        std::scoped_lock lk(cache_.m);
        if (cache_.opposite) return cache_.opposite;
        auto a = std::shared_ptr<Algebra>(new Algebra());
        a->field_ = field_;
        a->group_ = group_;
        a->dim_ = dim_;
        a->label_ = label_ + "^op";
        a->unit_ = unit_;
        a->gen_idx_ = gen_idx_;
        a->words_ = words_;
        a->op_of_ = shared_from_this();
        a->op_reversed_ = !op_reversed_;
        long n = dim_;
        if (!cayley_.empty()) {
            a->cayley_.resize(n * n);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) a->cayley_[i * n + j] = cayley_[j * n + i];
        } else {
            a->mult_.resize(n * n);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) a->mult_[i * n + j] = mult_[j * n + i];
        }
        cache_.opposite = a;
        return a;
    }

    const FieldRef& field() const { return field_; }
    int dim() const { return dim_; }
    const std::string& label() const { return label_; }
    const std::vector<GfElem>& unit() const { return unit_; }
    const GroupRef& group() const { return group_; }
    bool is_group_algebra() const { return group_ != nullptr; }
    bool words_reversed() const { return op_reversed_; }
    AlgebraRef opposite_of() const { return op_of_; }

    /// Basis indices of an algebra generating set (group generators for
    /// group algebras, the whole basis otherwise).
    const std::vector<int>& generator_indices() const { return gen_idx_; }

    /// Word structure of basis element i: {parent, generator slot}, meaning
    /// b_i = b_parent * gens[slot] (reversed when words_reversed()). The
    /// unit has {-1,-1}; structure-constant algebras have no words (empty).
    const std::vector<std::array<int, 2>>& words() const { return words_; }

    /// dst += c * (b_i * b_j)
    void accumulate_product(std::vector<GfElem>& dst, int i, int j, GfElem c) const {
        if (!c) return;
        if (!cayley_.empty()) {
            int k = cayley_[static_cast<std::size_t>(i) * dim_ + j];
            dst[k] = field_->add(dst[k], c);
        } else {
            for (const SparseTerm& t : mult_[static_cast<std::size_t>(i) * dim_ + j])
                dst[t.idx] = field_->add(dst[t.idx], field_->mul(c, t.c));
        }
    }

    /// Product of two elements given as dense coefficient vectors.
    std::vector<GfElem> multiply(const std::vector<GfElem>& x,
                                 const std::vector<GfElem>& y) const {
        std::vector<GfElem> r(dim_, 0);
        for (int i = 0; i < dim_; ++i) {
            if (!x[i]) continue;
            for (int j = 0; j < dim_; ++j) {
                GfElem c = field_->mul(x[i], y[j]);
                accumulate_product(r, i, j, c);
            }
        }
        return r;
    }

    /// Matrix of right multiplication by basis element j on the algebra
    /// itself (rows are images of basis vectors): the regular representation.
    MatrixGF right_mult_matrix(int j) const {
        MatrixGF m(field_, dim_, dim_);
        for (int i = 0; i < dim_; ++i) {
            std::vector<GfElem> r(dim_, 0);
            accumulate_product(r, i, j, 1);
            for (int k = 0; k < dim_; ++k) m.set(i, k, r[k]);
        }
        return m;
    }

    /// Matrix of left multiplication by basis element i (rows are images).
    MatrixGF left_mult_matrix(int i) const {
        MatrixGF m(field_, dim_, dim_);
        for (int j = 0; j < dim_; ++j) {
            std::vector<GfElem> r(dim_, 0);
            accumulate_product(r, i, j, 1);
            for (int k = 0; k < dim_; ++k) m.set(j, k, r[k]);
        }
        return m;
    }

    std::uint32_t default_seed() const { return default_seed_; }
    void set_default_seed(std::uint32_t s) const { default_seed_ = s; }

    /// Searches deterministically for a symmetrizing form: solve the trace
    /// condition lambda(xy) = lambda(yx) on basis pairs, then walk the
    /// solution space (single basis vectors, prefix sums, then seeded
    /// pseudorandom combinations) until some candidate has an invertible
    /// Gram matrix [lambda(b_i b_j)]. A negative answer is certified by
    /// exhaustion when the solution space is small enough to sweep.
    const SymmetricFormResult& symmetrizing_form() const;

    /// Validates a given functional as a symmetrizing form.
    bool is_symmetrizing(const std::vector<GfElem>& lambda) const {
        MatrixGF gram = gram_of(lambda);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                if (gram.at(i, j) != gram.at(j, i)) return false;
        return gram.rank() == dim_;
    }

    MatrixGF gram_of(const std::vector<GfElem>& lambda) const {
        MatrixGF gram(field_, dim_, dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                std::vector<GfElem> prod(dim_, 0);
                accumulate_product(prod, i, j, 1);
                GfElem v = 0;
                for (int k = 0; k < dim_; ++k)
                    if (prod[k]) v = field_->add(v, field_->mul(prod[k], lambda[k]));
                gram.set(i, j, v);
            }
        return gram;
    }

    struct DerivedCache {
        mutable std::mutex m;
        std::shared_ptr<const SimpleSet> simples;
        std::shared_ptr<const RadicalBasis> radical;
        std::shared_ptr<const ProjectiveSet> pims;
        std::shared_ptr<const SymmetricFormResult> symform;
        AlgebraRef opposite;
        std::vector<std::vector<long>> cartan;  // empty until computed
    };
    DerivedCache& cache() const { return cache_; }

private:
    Algebra() = default;

    void validate_axioms() const {
        // unit axiom on every basis element
        for (int i = 0; i < dim_; ++i) {
            std::vector<GfElem> e(dim_, 0);
            e[i] = 1;
            auto lu = multiply(unit_, e);
            auto ru = multiply(e, unit_);
            if (lu != e || ru != e)
                throw InputError("BadAlgebra", "unit axiom fails on basis element " +
                                                   std::to_string(i));
        }
        auto check_triple = [&](int i, int j, int k) {
            std::vector<GfElem> bi(dim_, 0), bj(dim_, 0), bk(dim_, 0);
            bi[i] = bj[j] = bk[k] = 1;
            auto lhs = multiply(multiply(bi, bj), bk);
            auto rhs = multiply(bi, multiply(bj, bk));
            if (lhs != rhs)
                throw InputError("BadAlgebra",
                                 "associativity fails at triple (" + std::to_string(i) + "," +
                                     std::to_string(j) + "," + std::to_string(k) + ")");
        };
        if (dim_ <= 64) {
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < dim_; ++j)
                    for (int k = 0; k < dim_; ++k) check_triple(i, j, k);
        } else {
            Rng rng(0xa55a);
            for (int t = 0; t < 512; ++t)
                check_triple(static_cast<int>(rng.below(dim_)), static_cast<int>(rng.below(dim_)),
                             static_cast<int>(rng.below(dim_)));
        }
    }

    FieldRef field_;
    GroupRef group_;  // set iff group algebra
    int dim_ = 0;
    std::string label_;
    std::vector<GfElem> unit_;
    std::vector<int32_t> cayley_;                // group algebra path
    std::vector<std::vector<SparseTerm>> mult_;  // structure constant path
    std::vector<int> gen_idx_;
    std::vector<std::array<int, 2>> words_;
    bool op_reversed_ = false;
    AlgebraRef op_of_;
    mutable std::uint32_t default_seed_ = 1;
    mutable DerivedCache cache_;
};

inline const SymmetricFormResult& Algebra::symmetrizing_form() const {
    {
        std::scoped_lock lk(cache_.m);
        if (cache_.symform) return *cache_.symform;
    }
    auto result = std::make_shared<SymmetricFormResult>();
    const Gf& f = *field_;
    int d = dim_;

    // Solution space of the trace condition.
    MatrixGF sol(field_, 0, 0);
    if (is_group_algebra()) {
        // For kG the trace condition says lambda is a class function; use
        // conjugacy-class indicators directly (same space, cheaper than the
        // d^2-row commutator system).
        const PermGroup& g = *group_;
        std::vector<int> class_id(d, -1);
        int nclasses = 0;
        for (int i = 0; i < d; ++i) {
            if (class_id[i] >= 0) continue;
            int c = nclasses++;
            for (int x = 0; x < d; ++x) {
                Perm conj = perm_mul(perm_mul(perm_inverse(g.element(x)), g.element(i)),
                                     g.element(x));
                class_id[g.index_of(conj)] = c;
            }
        }
        sol = MatrixGF(field_, nclasses, d);
        for (int i = 0; i < d; ++i) sol.set(class_id[i], i, 1);
    } else {
        // rows: lambda(b_i b_j - b_j b_i) = 0 for i < j
        std::vector<std::vector<GfElem>> rows;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                std::vector<GfElem> r(d, 0);
                accumulate_product(r, i, j, 1);
                accumulate_product(r, j, i, f.neg(1));
                bool nz = false;
                for (GfElem v : r) nz |= (v != 0);
                if (nz) rows.push_back(std::move(r));
            }
        MatrixGF sys = MatrixGF::from_rows(field_, rows);
        if (rows.empty()) sys = MatrixGF(field_, 0, d);
        sol = sys.nullspace();
    }

    int t = sol.rows();
    auto try_candidate = [&](const std::vector<GfElem>& lambda) -> bool {
        ++result->candidates_tried;
        if (is_symmetrizing(lambda)) {
            result->form = SymmetrizingForm{lambda};
            return true;
        }
        return false;
    };
    auto combo = [&](const std::vector<GfElem>& cs) {
        std::vector<GfElem> lam(d, 0);
        for (int r = 0; r < t; ++r)
            if (cs[r]) kernels::axpy(f, cs[r], sol.row(r), lam.data(), d);
        return lam;
    };

    bool found = false;
    // single basis vectors
    for (int r = 0; r < t && !found; ++r) {
        std::vector<GfElem> cs(t, 0);
        cs[r] = 1;
        found = try_candidate(combo(cs));
    }
    // prefix sums
    for (int r = 1; r < t && !found; ++r) {
        std::vector<GfElem> cs(t, 0);
        for (int i = 0; i <= r; ++i) cs[i] = 1;
        found = try_candidate(combo(cs));
    }
    // seeded pseudorandom combinations
    if (!found) {
        Rng rng(default_seed_);
        long q = f.order();
        for (int trial = 0; trial < 512 && !found; ++trial) {
            std::vector<GfElem> cs(t, 0);
            bool nz = false;
            for (int r = 0; r < t; ++r) {
                cs[r] = static_cast<GfElem>(rng.below(static_cast<std::uint32_t>(q)));
                nz |= (cs[r] != 0);
            }
            if (!nz) continue;
            found = try_candidate(combo(cs));
        }
    }
    // certify a negative by exhaustion when the space is small (<= 12
    // dimensions over GF(2) or GF(3))
    if (!found) {
        long q = f.order();
        if (q <= 3 && t <= 12) {
            bool any = false;
            std::vector<GfElem> cs(t, 0);
            // odometer over all q^t combinations
            long total = 1;
            for (int i = 0; i < t; ++i) total *= q;
            for (long n = 1; n < total && !any; ++n) {
                long v = n;
                for (int i = 0; i < t; ++i) {
                    cs[i] = static_cast<GfElem>(v % q);
                    v /= q;
                }
                any = try_candidate(combo(cs));
            }
            if (any)
                found = true;
            else
                result->certified = true;
        }
    }

    std::scoped_lock lk(cache_.m);
    if (!cache_.symform) cache_.symform = result;
    return *cache_.symform;
}

}  // namespace symrec

#endif  // SYMREC_ALGEBRA_HPP
