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

#ifndef SYMREC_MODULE_HPP
#define SYMREC_MODULE_HPP

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "symrec/algebra.hpp"

namespace symrec {

class Module;
using ModuleRef = std::shared_ptr<const Module>;

/// Finitely generated right module over an Algebra, given by the action
/// matrices of an algebra generating set. Coordinates are row vectors and
/// actions multiply on the right, so action(xy) = action(x) * action(y).
/// Actions of arbitrary basis elements are derived from the algebra's BFS
/// word structure and memoized.
class Module {
public:
    /// gen_actions must be parallel to alg->generator_indices().
    static ModuleRef make(AlgebraRef alg, int dim, std::vector<MatrixGF> gen_actions,
                          std::string label = "", bool validate = false) {
        auto m = std::make_shared<Module>(Private{});
        m->alg_ = std::move(alg);
        m->dim_ = dim;
        m->gen_act_ = std::move(gen_actions);
        m->label_ = std::move(label);
        if (m->gen_act_.size() != m->alg_->generator_indices().size())
            throw InputError("BadModule", "one action matrix per algebra generator required");
        for (const auto& a : m->gen_act_)
            if (a.rows() != dim || a.cols() != dim)
                throw InputError("BadModule", "action matrix shape mismatch");
        m->act_cache_.assign(m->alg_->dim(), MatrixGF());
        m->act_known_.assign(m->alg_->dim(), false);
        if (validate) m->validate_structure();
        return m;
    }

    /// The algebra acting on itself by right multiplication.
    static ModuleRef regular(AlgebraRef alg) {
        std::vector<MatrixGF> acts;
        for (int gi : alg->generator_indices()) acts.push_back(alg->right_mult_matrix(gi));
        auto m = make(alg, alg->dim(), std::move(acts), alg->label() + " regular");
        const_cast<Module*>(m.get())->regular_ = true;
        return m;
    }

    struct Private {};
    explicit Module(Private) {}

    const AlgebraRef& algebra() const { return alg_; }
    const FieldRef& field() const { return alg_->field(); }
    int dim() const { return dim_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) const { label_ = std::move(l); }
    const std::vector<MatrixGF>& generator_actions() const { return gen_act_; }
    bool is_regular() const { return regular_; }

    /// Action matrix of basis element i, derived from the BFS word and
    /// memoized. For structure-constant algebras every basis element is a
    /// generator, so this is a direct lookup.
    const MatrixGF& action(int i) const {
        std::scoped_lock lk(cache_m_);
        return action_locked(i);
    }

    /// Action of an arbitrary algebra element (dense coefficient vector).
    /// For the regular module this is the right-multiplication matrix,
    /// assembled straight from the structure constants.
    MatrixGF action_of(const std::vector<GfElem>& x) const {
        if (regular_) {
            MatrixGF r(field(), dim_, dim_);
            for (int i = 0; i < dim_; ++i) {
                std::vector<GfElem> img(dim_, 0);
                for (int j = 0; j < dim_; ++j)
                    if (x[j]) alg_->accumulate_product(img, i, j, x[j]);
                for (int k = 0; k < dim_; ++k) r.set(i, k, img[k]);
            }
            return r;
        }
        MatrixGF r(field(), dim_, dim_);
        std::scoped_lock lk(cache_m_);
        for (int i = 0; i < alg_->dim(); ++i)
            if (x[i]) r.add_scaled_inplace(action_locked(i), x[i]);
        return r;
    }

    /// Checks action(unit) = I and compatibility with the structure
    /// constants on all basis pairs. Quadratic in dim * algebra dim; meant
    /// for tests and small inputs.
    void validate_structure() const {
        const auto& unit = alg_->unit();
        MatrixGF u = action_of(unit);
        if (u != MatrixGF::identity(field(), dim_))
            throw InputError("BadModule", "unit does not act as identity");
        int d = alg_->dim();
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                std::vector<GfElem> prod(d, 0);
                alg_->accumulate_product(prod, i, j, 1);
                MatrixGF lhs = action(i) * action(j);
                if (lhs != action_of(prod))
                    throw InputError("BadModule",
                                     "action incompatible with structure constants at (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }

private:
    const MatrixGF& action_locked(int i) const {
        if (act_known_[i]) return act_cache_[i];
        if (regular_) {
            act_cache_[i] = alg_->right_mult_matrix(i);
            act_known_[i] = true;
            return act_cache_[i];
        }
        const auto& gens = alg_->generator_indices();
        for (std::size_t s = 0; s < gens.size(); ++s)
            if (gens[s] == i) {
                act_cache_[i] = gen_act_[s];
                act_known_[i] = true;
                return act_cache_[i];
            }
        const auto& words = alg_->words();
        if (words.empty() || words[i][0] < 0) {
            // unit (or unreachable): unit acts as identity
            if (unit_index(i)) {
                act_cache_[i] = MatrixGF::identity(field(), dim_);
                act_known_[i] = true;
                return act_cache_[i];
            }
            throw Error("InternalError", "no word for basis element " + std::to_string(i));
        }
        const MatrixGF& parent = action_locked(words[i][0]);
        const MatrixGF& gen = action_locked(alg_->generator_indices()[words[i][1]]);
        // b_i = parent * gen in the source group; for opposite algebras the
        // algebra product is reversed, so the action composes the other way
        act_cache_[i] = alg_->words_reversed() ? gen * parent : parent * gen;
        act_known_[i] = true;
        return act_cache_[i];
    }

    bool unit_index(int i) const {
        const auto& u = alg_->unit();
        for (int k = 0; k < alg_->dim(); ++k) {
            GfElem want = (k == i) ? 1 : 0;
            if (u[k] != want) return false;
        }
        return true;
    }

    AlgebraRef alg_;
    int dim_ = 0;
    std::vector<MatrixGF> gen_act_;
    bool regular_ = false;
    mutable std::string label_;
    mutable std::mutex cache_m_;
    mutable std::vector<MatrixGF> act_cache_;
    mutable std::vector<bool> act_known_;
};

/// Space of module homomorphisms U -> V. Basis matrices F are dim(U) x
/// dim(V) and act on row coordinate vectors (phi(u) = u F); they satisfy
/// rho_U(a) F = F rho_V(a) for every algebra generator (hence all of A).
/// The basis is RREF-canonical in the flattened coordinates.
struct HomSpace {
    ModuleRef source, target;
    std::vector<MatrixGF> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

/// Solves the intertwining system. Deterministic RREF-canonical basis.
inline HomSpace hom_space(ModuleRef u, ModuleRef v) {
    if (u->algebra() != v->algebra())
        throw InputError("AlgebraMismatch", "hom_space over different algebras");
    const FieldRef& F = u->field();
    int nu = u->dim(), nv = v->dim();
    HomSpace hs{u, v, {}};
    if (nu == 0 || nv == 0) return hs;
    // unknowns: vec(F) row-major, size nu*nv
    // constraint per generator a: rho_U(a) F - F rho_V(a) = 0
    // vec(A X) = (A kron I) vec(X); vec(X B) = (I kron B^T) vec(X)
    int n = nu * nv;
    MatrixGF iu = MatrixGF::identity(F, nu), iv = MatrixGF::identity(F, nv);
    const auto& ua = u->generator_actions();
    const auto& va = v->generator_actions();
    MatrixGF sys(F, static_cast<int>(ua.size()) * n, n);
    for (std::size_t g = 0; g < ua.size(); ++g) {
        MatrixGF c = ua[g].kron(iv) - iu.kron(va[g].transpose());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sys.set(static_cast<int>(g) * n + i, j, c.at(i, j));
    }
    MatrixGF ker = sys.nullspace();
    for (int r = 0; r < ker.rows(); ++r) {
        MatrixGF f(F, nu, nv);
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j < nv; ++j) f.set(i, j, ker.at(r, i * nv + j));
        hs.basis.push_back(std::move(f));
    }
    return hs;
}

inline long hom_dim(ModuleRef u, ModuleRef v) { return hom_space(u, v).dim(); }

/// Smallest submodule containing the seed rows: closes the row space under
/// all generator actions. Result is RREF-canonical.
inline EchelonBasis spin(const Module& m, const std::vector<std::vector<GfElem>>& seeds) {
    EchelonBasis basis(m.field(), m.dim());
    std::vector<std::vector<GfElem>> frontier;
    for (const auto& s : seeds)
        if (basis.insert(s)) frontier.push_back(s);
    const auto& acts = m.generator_actions();
    while (!frontier.empty()) {
        std::vector<std::vector<GfElem>> next;
        for (const auto& v : frontier)
            for (const auto& a : acts) {
                std::vector<GfElem> w = a.apply_row(v.data());
                if (basis.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return basis;
}

/// Same closure but under the transposed actions (the dual module); used by
/// the irreducibility test.
inline EchelonBasis spin_dual(const Module& m, const std::vector<std::vector<GfElem>>& seeds,
                              const std::vector<MatrixGF>& transposed) {
    EchelonBasis basis(m.field(), m.dim());
    std::vector<std::vector<GfElem>> frontier;
    for (const auto& s : seeds)
        if (basis.insert(s)) frontier.push_back(s);
    while (!frontier.empty()) {
        std::vector<std::vector<GfElem>> next;
        for (const auto& v : frontier)
            for (const auto& a : transposed) {
                std::vector<GfElem> w = a.apply_row(v.data());
                if (basis.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return basis;
}

/// Submodule on an invariant row space: restricts every generator action to
/// the given (RREF) basis. Coordinates of a member row are its entries at
/// the pivot columns.
inline ModuleRef submodule(ModuleRef m, const EchelonBasis& basis, std::string label = "") {
    int sub_dim = basis.dim();
    std::vector<MatrixGF> acts;
    for (const auto& a : m->generator_actions()) {
        MatrixGF s(m->field(), sub_dim, sub_dim);
        for (int i = 0; i < sub_dim; ++i) {
            std::vector<GfElem> img = a.apply_row(basis.row_at(i).data());
            std::vector<GfElem> red = img;
            if (basis.reduce(red) >= 0)
                throw Error("InternalError", "submodule basis not invariant");
            std::vector<GfElem> c = basis.coords(img);
            for (int j = 0; j < sub_dim; ++j) s.set(i, j, c[j]);
        }
        acts.push_back(std::move(s));
    }
    return Module::make(m->algebra(), sub_dim, std::move(acts), std::move(label));
}

/// Quotient by an invariant row space. The quotient basis is indexed by the
/// non-pivot columns of the subspace (canonical complement); the projection
/// of a vector is obtained by reducing against the subspace and reading the
/// non-pivot coordinates.
struct QuotientModule {
    ModuleRef module;
    std::vector<int> complement_cols;  // which original columns label the basis
};

inline QuotientModule quotient_module(ModuleRef m, const EchelonBasis& sub,
                                      std::string label = "") {
    std::vector<bool> is_piv(m->dim(), false);
    for (int c : sub.pivots()) is_piv[c] = true;
    std::vector<int> comp;
    for (int c = 0; c < m->dim(); ++c)
        if (!is_piv[c]) comp.push_back(c);
    int qdim = static_cast<int>(comp.size());
    std::vector<MatrixGF> acts;
    for (const auto& a : m->generator_actions()) {
        MatrixGF qa(m->field(), qdim, qdim);
        for (int i = 0; i < qdim; ++i) {
            std::vector<GfElem> lift(m->dim(), 0);
            lift[comp[i]] = 1;
            std::vector<GfElem> img = a.apply_row(lift.data());
            sub.reduce(img);
            for (int j = 0; j < qdim; ++j) qa.set(i, j, img[comp[j]]);
        }
        acts.push_back(std::move(qa));
    }
    return {Module::make(m->algebra(), qdim, std::move(acts), std::move(label)), comp};
}

/// Projects a vector of the ambient module to quotient coordinates.
inline std::vector<GfElem> quotient_project(const EchelonBasis& sub,
                                            const std::vector<int>& comp,
                                            std::vector<GfElem> v) {
    sub.reduce(v);
    std::vector<GfElem> out(comp.size());
    for (std::size_t j = 0; j < comp.size(); ++j) out[j] = v[comp[j]];
    return out;
}

/// Direct sum with block-diagonal actions.
inline ModuleRef direct_sum(ModuleRef a, ModuleRef b) {
    if (a->algebra() != b->algebra())
        throw InputError("AlgebraMismatch", "direct sum over different algebras");
    int n = a->dim() + b->dim();
    std::vector<MatrixGF> acts;
    for (std::size_t g = 0; g < a->generator_actions().size(); ++g) {
        MatrixGF m(a->field(), n, n);
        const MatrixGF& ga = a->generator_actions()[g];
        const MatrixGF& gb = b->generator_actions()[g];
        for (int i = 0; i < a->dim(); ++i)
            for (int j = 0; j < a->dim(); ++j) m.set(i, j, ga.at(i, j));
        for (int i = 0; i < b->dim(); ++i)
            for (int j = 0; j < b->dim(); ++j) m.set(a->dim() + i, a->dim() + j, gb.at(i, j));
        acts.push_back(std::move(m));
    }
    return Module::make(a->algebra(), n, std::move(acts),
                        a->label() + " + " + b->label());
}

/// Zero module.
inline ModuleRef zero_module(AlgebraRef alg) {
    std::vector<MatrixGF> acts(alg->generator_indices().size(),
                               MatrixGF(alg->field(), 0, 0));
    return Module::make(std::move(alg), 0, std::move(acts), "0");
}

}  // namespace symrec

#endif  // SYMREC_MODULE_HPP
