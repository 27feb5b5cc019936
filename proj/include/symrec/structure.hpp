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

#ifndef SYMREC_STRUCTURE_HPP
#define SYMREC_STRUCTURE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "symrec/meataxe.hpp"

namespace symrec {

/// Irr_k(A): the simple right A-modules up to isomorphism, in deterministic
/// order (ascending dimension, then first found by the regular-module chop),
/// together with their multiplicities as composition factors of the regular
/// module.
struct SimpleSet {
    std::vector<ModuleRef> simples;
    std::vector<int> regular_multiplicity;
};

/// Basis of the Jacobson radical as a subspace of the algebra, in RREF.
struct RadicalBasis {
    EchelonBasis basis;
    int dim() const { return basis.dim(); }
};

/// The projective indecomposables P(S), indexed parallel to SimpleSet.
/// `idempotents[i]` is a lifted primitive idempotent with e A = P(S_i);
/// `full_decomposition` lists pairwise orthogonal primitive idempotents
/// summing to 1 (dim S_i of them per block), each tagged with its block.
struct ProjectiveSet {
    std::vector<ModuleRef> pims;
    std::vector<std::vector<GfElem>> idempotents;
    struct DecompEntry {
        std::vector<GfElem> e;
        int simple_index;
    };
    std::vector<DecompEntry> full_decomposition;
    /// Row space of P(S_i) = e_i A inside the algebra (RREF canonical).
    std::vector<EchelonBasis> pim_spaces;
};

inline const SimpleSet& simples(const AlgebraRef& a) {
    {
        std::scoped_lock lk(a->cache().m);
        if (a->cache().simples) return *a->cache().simples;
    }
    auto result = std::make_shared<SimpleSet>();
    // If this is the opposite of an algebra whose simples are known, reuse
    // them: S* with transposed actions is simple over A^op.
    AlgebraRef source = a->opposite_of();
    bool transferred = false;
    if (source) {
        std::scoped_lock lk(source->cache().m);
        if (source->cache().simples) {
            for (std::size_t i = 0; i < source->cache().simples->simples.size(); ++i) {
                ModuleRef s = source->cache().simples->simples[i];
                std::vector<MatrixGF> acts;
                for (const auto& m : s->generator_actions()) acts.push_back(m.transpose());
                result->simples.push_back(
                    Module::make(a, s->dim(), std::move(acts), s->label() + "*"));
                result->regular_multiplicity.push_back(
                    source->cache().simples->regular_multiplicity[i]);
            }
            transferred = true;
        }
    }
    if (!transferred) {
        ModuleRef reg = Module::regular(a);
        auto factors = chop(reg, a->default_seed());
        std::stable_sort(factors.begin(), factors.end(),
                         [](const CompositionFactor& x, const CompositionFactor& y) {
                             return x.simple->dim() < y.simple->dim();
                         });
        int idx = 0;
        for (auto& cf : factors) {
            cf.simple->set_label("S" + std::to_string(idx++));
            result->simples.push_back(cf.simple);
            result->regular_multiplicity.push_back(cf.multiplicity);
        }
    }
    std::scoped_lock lk(a->cache().m);
    if (!a->cache().simples) a->cache().simples = result;
    return *a->cache().simples;
}

/// rad A = intersection of the annihilators of the simple modules,
/// computed as the kernel of a -> (rho_S(a))_S stacked over Irr_k(A).
inline const RadicalBasis& radical(const AlgebraRef& a) {
    {
        std::scoped_lock lk(a->cache().m);
        if (a->cache().radical) return *a->cache().radical;
    }
    // The radical is left-right symmetric: transfer from the opposite
    // algebra when already known there.
    if (AlgebraRef source = a->opposite_of()) {
        std::shared_ptr<const RadicalBasis> known;
        {
            std::scoped_lock lk(source->cache().m);
            known = source->cache().radical;
        }
        if (known) {
            std::scoped_lock lk(a->cache().m);
            if (!a->cache().radical) a->cache().radical = known;
            return *a->cache().radical;
        }
    }
    const SimpleSet& irr = simples(a);
    int d = a->dim();
    long rows_total = 0;
    for (const auto& s : irr.simples) rows_total += static_cast<long>(s->dim()) * s->dim();
    MatrixGF sys(a->field(), static_cast<int>(rows_total), d);
    long r0 = 0;
    for (const auto& s : irr.simples) {
        int n = s->dim();
        for (int bi = 0; bi < d; ++bi) {
            const MatrixGF& act = s->action(bi);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    sys.set(static_cast<int>(r0) + i * n + j, bi, act.at(i, j));
        }
        r0 += static_cast<long>(n) * n;
    }
    MatrixGF ker = sys.nullspace();
    auto result = std::make_shared<RadicalBasis>(RadicalBasis{EchelonBasis(a->field(), d)});
    for (int i = 0; i < ker.rows(); ++i)
        result->basis.insert(std::vector<GfElem>(ker.row(i), ker.row(i) + d));
    std::scoped_lock lk(a->cache().m);
    if (!a->cache().radical) a->cache().radical = result;
    return *a->cache().radical;
}

namespace detail {

/// Idempotent lift along the nilpotent radical: e <- 3e^2 - 2e^3 squares the
/// precision (e^2 = e mod I gives the update idempotent mod I^2) in every
/// characteristic. Throws LiftDiverged if it fails to stabilize.
inline std::vector<GfElem> lift_idempotent(const Algebra& alg, std::vector<GfElem> e,
                                           int max_iter = 64) {
    const Gf& f = *alg.field();
    for (int it = 0; it < max_iter; ++it) {
        auto e2 = alg.multiply(e, e);
        if (e2 == e) return e;
        auto e3 = alg.multiply(e2, e);
        std::vector<GfElem> next(alg.dim());
        GfElem three = f.from_int(3), two = f.from_int(2);
        for (int i = 0; i < alg.dim(); ++i)
            next[i] = f.sub(f.mul(three, e2[i]), f.mul(two, e3[i]));
        e = std::move(next);
    }
    throw SoundnessError("LiftDiverged", "idempotent lifting did not stabilize");
}

}  // namespace detail

/// Primitive idempotent decomposition and the projective indecomposables.
/// The semisimple quotient A/rad A is identified with a product of matrix
/// algebras through the simple modules; each diagonal matrix unit pulls back
/// to A/rad A by solving the linear system, lifts along the radical, and is
/// orthogonalized inside the corner of the previously lifted idempotents.
inline const ProjectiveSet& pims(const AlgebraRef& a) {
    {
        std::scoped_lock lk(a->cache().m);
        if (a->cache().pims) return *a->cache().pims;
    }
    const SimpleSet& irr = simples(a);
    const RadicalBasis& rad = radical(a);
    const FieldRef& F = a->field();
    const Gf& f = *F;
    int d = a->dim();

    // Basis of a complement of rad in A: the non-pivot coordinates.
    std::vector<bool> is_piv(d, false);
    for (int c : rad.basis.pivots()) is_piv[c] = true;
    std::vector<int> comp;
    for (int c = 0; c < d; ++c)
        if (!is_piv[c]) comp.push_back(c);
    int dbar = static_cast<int>(comp.size());

    // The map Phi: A/rad -> prod End(S), on the complement basis.
    long cols_total = 0;
    for (const auto& s : irr.simples) cols_total += static_cast<long>(s->dim()) * s->dim();
    if (cols_total != dbar)
        throw FieldNotSplittingError(
            1, "semisimple quotient dimension " + std::to_string(dbar) +
                   " does not match sum of (dim S)^2 = " + std::to_string(cols_total));
    MatrixGF phi(F, dbar, dbar);
    for (int bi = 0; bi < dbar; ++bi) {
        long c0 = 0;
        for (const auto& s : irr.simples) {
            int n = s->dim();
            const MatrixGF& act = s->action(comp[bi]);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    phi.set(bi, static_cast<int>(c0) + i * n + j, act.at(i, j));
            c0 += static_cast<long>(n) * n;
        }
    }
    // Invert Phi by solving against each matrix-unit target.
    auto result = std::make_shared<ProjectiveSet>();
    MatrixGF phi_t = phi.transpose();
    std::vector<GfElem> accumulated(d, 0);  // sum of lifted idempotents so far
    std::vector<GfElem> unit = a->unit();

    auto corner = [&](const std::vector<GfElem>& x) {
        // (1 - E) x (1 - E) with E = accumulated
        std::vector<GfElem> one_minus(d);
        for (int i = 0; i < d; ++i) one_minus[i] = f.sub(unit[i], accumulated[i]);
        return a->multiply(a->multiply(one_minus, x), one_minus);
    };

    long c0 = 0;
    for (std::size_t si = 0; si < irr.simples.size(); ++si) {
        int n = irr.simples[si]->dim();
        for (int j = 0; j < n; ++j) {
            // target: E_jj in block si, zero elsewhere
            std::vector<GfElem> target(dbar, 0);
            target[static_cast<int>(c0) + j * n + j] = 1;
            auto sol = phi_t.solve(target);
            if (!sol)
                throw SoundnessError("LiftDiverged",
                                     "semisimple quotient has no matrix-unit preimage");
            // embed complement coordinates into A
            std::vector<GfElem> ebar(d, 0);
            for (int bi = 0; bi < dbar; ++bi) ebar[comp[bi]] = (*sol)[bi];
            // orthogonalize against previous lifts, then lift exactly
            std::vector<GfElem> e = detail::lift_idempotent(*a, corner(ebar));
            // verify orthogonality and accumulate
            for (const auto& prev : result->full_decomposition) {
                auto pe = a->multiply(prev.e, e);
                auto ep = a->multiply(e, prev.e);
                bool zero = true;
                for (GfElem v : pe) zero &= (v == 0);
                for (GfElem v : ep) zero &= (v == 0);
                if (!zero)
                    throw SoundnessError("LiftDiverged", "lifted idempotents not orthogonal");
            }
            for (int i = 0; i < d; ++i) accumulated[i] = f.add(accumulated[i], e[i]);
            result->full_decomposition.push_back({e, static_cast<int>(si)});
            if (j == 0) result->idempotents.push_back(e);
        }
        c0 += static_cast<long>(n) * n;
    }
    if (accumulated != unit)
        throw SoundnessError("LiftDiverged", "lifted idempotents do not sum to 1");

    // P(S) = e A as a right module.
    ModuleRef reg = Module::regular(a);
    for (std::size_t si = 0; si < irr.simples.size(); ++si) {
        const auto& e = result->idempotents[si];
        EchelonBasis space(F, d);
        for (int bi = 0; bi < d; ++bi) {
            std::vector<GfElem> row(d, 0);
            for (int i = 0; i < d; ++i)
                if (e[i]) a->accumulate_product(row, i, bi, e[i]);
            space.insert(std::move(row));
        }
        ModuleRef p = submodule(reg, space, "P(" + irr.simples[si]->label() + ")");
        result->pims.push_back(p);
        result->pim_spaces.push_back(std::move(space));
    }

    std::scoped_lock lk(a->cache().m);
    if (!a->cache().pims) a->cache().pims = result;
    return *a->cache().pims;
}

/// Cartan matrix: C[i][j] = multiplicity of simple j as a composition
/// factor of P(S_i).
inline const std::vector<std::vector<long>>& cartan_matrix(const AlgebraRef& a) {
    {
        std::scoped_lock lk(a->cache().m);
        if (!a->cache().cartan.empty()) return a->cache().cartan;
    }
    const SimpleSet& irr = simples(a);
    const ProjectiveSet& ps = pims(a);
    std::vector<std::vector<long>> c(irr.simples.size(),
                                     std::vector<long>(irr.simples.size(), 0));
    for (std::size_t i = 0; i < ps.pims.size(); ++i) {
        auto factors = chop(ps.pims[i], a->default_seed());
        for (const auto& cf : factors) {
            bool found = false;
            for (std::size_t j = 0; j < irr.simples.size(); ++j)
                if (simple_isomorphic(cf.simple, irr.simples[j])) {
                    c[i][j] += cf.multiplicity;
                    found = true;
                    break;
                }
            if (!found)
                throw SoundnessError("Cartan", "PIM factor not among the simples");
        }
    }
    std::scoped_lock lk(a->cache().m);
    if (a->cache().cartan.empty()) a->cache().cartan = c;
    return a->cache().cartan;
}

}  // namespace symrec

#endif  // SYMREC_STRUCTURE_HPP
