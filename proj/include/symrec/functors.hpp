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

#ifndef SYMREC_FUNCTORS_HPP
#define SYMREC_FUNCTORS_HPP

#include <string>
#include <utility>
#include <vector>

#include "symrec/structure.hpp"

namespace symrec {

/// Row space U * rad A. For the regular module this is the radical itself;
/// otherwise the span of basis-row images under the radical's action.
inline EchelonBasis u_rad(ModuleRef u) {
    const RadicalBasis& rad = radical(u->algebra());
    if (u->is_regular()) return rad.basis;
    EchelonBasis out(u->field(), u->dim());
    for (int r = 0; r < rad.dim(); ++r) {
        MatrixGF act = u->action_of(rad.basis.row_at(r));
        for (int i = 0; i < u->dim(); ++i) {
            std::vector<GfElem> row(act.row(i), act.row(i) + u->dim());
            out.insert(std::move(row));
        }
    }
    return out;
}

/// top(U) = U / U rad A, chopped and identified against Irr_k(A).
/// Returns (simple index, multiplicity) pairs in simples order.
inline std::vector<std::pair<int, int>> top(ModuleRef u) {
    if (u->dim() == 0) return {};
    const SimpleSet& irr = simples(u->algebra());
    EchelonBasis w = u_rad(u);
    QuotientModule q = quotient_module(u, w, "top(" + u->label() + ")");
    std::vector<std::pair<int, int>> out;
    if (q.module->dim() == 0) return out;
    auto factors = chop(q.module, u->algebra()->default_seed());
    for (const auto& cf : factors) {
        bool found = false;
        for (std::size_t j = 0; j < irr.simples.size(); ++j)
            if (simple_isomorphic(cf.simple, irr.simples[j])) {
                out.push_back({static_cast<int>(j), cf.multiplicity});
                found = true;
                break;
            }
        if (!found) throw SoundnessError("Top", "top factor not among the simples");
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Projective cover P -> U: P is the direct sum of P(S)^(multiplicity of S
/// in top U); pi restricts on each summand to a lift of the top
/// identification. pi is dim(P) x dim(U) acting on row vectors.
struct Cover {
    ModuleRef p;
    MatrixGF pi;
    std::vector<int> summand_simple;  // simple index per summand, in order
};

inline Cover projective_cover(ModuleRef u) {
    const AlgebraRef& a = u->algebra();
    const SimpleSet& irr = simples(a);
    const ProjectiveSet& ps = pims(a);
    if (u->dim() == 0)
        return {zero_module(a), MatrixGF(u->field(), 0, 0), {}};

    EchelonBasis w = u_rad(u);
    std::vector<bool> is_piv(u->dim(), false);
    for (int c : w.pivots()) is_piv[c] = true;
    std::vector<int> comp;
    for (int c = 0; c < u->dim(); ++c)
        if (!is_piv[c]) comp.push_back(c);

    // For each simple: pick vectors in U rho(e_S) whose top-images are
    // independent; each one generates a P(S)-summand's worth of U.
    std::vector<std::vector<std::vector<GfElem>>> chosen(irr.simples.size());
    for (std::size_t si = 0; si < irr.simples.size(); ++si) {
        MatrixGF pe = u->action_of(ps.idempotents[si]);
        EchelonBasis image(u->field(), u->dim());
        for (int i = 0; i < u->dim(); ++i)
            image.insert(std::vector<GfElem>(pe.row(i), pe.row(i) + u->dim()));
        EchelonBasis top_span(u->field(), static_cast<int>(comp.size()));
        for (int r = 0; r < image.dim(); ++r) {
            std::vector<GfElem> x = image.row_at(r);
            std::vector<GfElem> t = quotient_project(w, comp, x);
            if (top_span.insert(t)) chosen[si].push_back(std::move(x));
        }
    }

    ModuleRef p = zero_module(a);
    std::vector<int> summand_simple;
    std::vector<MatrixGF> pi_blocks;
    for (std::size_t si = 0; si < irr.simples.size(); ++si) {
        for (const auto& x : chosen[si]) {
            p = p->dim() == 0 ? ps.pims[si] : direct_sum(p, ps.pims[si]);
            summand_simple.push_back(static_cast<int>(si));
            // block of pi: row r of P(S) is an algebra element w_r (a row of
            // the RREF basis of e_S A); its image is x * rho_U(w_r)
            const EchelonBasis& space = ps.pim_spaces[si];
            MatrixGF block(u->field(), space.dim(), u->dim());
            for (int r = 0; r < space.dim(); ++r) {
                MatrixGF act = u->action_of(space.row_at(r));
                std::vector<GfElem> img = act.apply_row(x.data());  // x * rho(w_r)
                for (int j = 0; j < u->dim(); ++j) block.set(r, j, img[j]);
            }
            pi_blocks.push_back(std::move(block));
        }
    }
    // stack blocks
    MatrixGF pi(u->field(), p->dim(), u->dim());
    int r0 = 0;
    for (const auto& b : pi_blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) pi.set(r0 + i, j, b.at(i, j));
        r0 += b.rows();
    }
    if (pi.rank() != u->dim())
        throw SoundnessError("LiftFailed", "projective cover map is not surjective");
    return {p, std::move(pi), std::move(summand_simple)};
}

/// Hom^pr(U,V): homomorphisms factoring through a projective module,
/// computed as { g . pi : g in Hom(U, P(V)) } (any factorization through a
/// projective lifts along the cover). RREF-canonical basis.
inline std::vector<MatrixGF> hom_pr(ModuleRef u, ModuleRef v, const Cover& cover_v) {
    std::vector<MatrixGF> out;
    if (u->dim() == 0 || v->dim() == 0) return out;
    HomSpace to_cover = hom_space(u, cover_v.p);
    EchelonBasis span(u->field(), u->dim() * v->dim());
    for (const auto& g : to_cover.basis) {
        MatrixGF composed = g * cover_v.pi;
        std::vector<GfElem> flat(static_cast<std::size_t>(u->dim()) * v->dim());
        for (int i = 0; i < u->dim(); ++i)
            for (int j = 0; j < v->dim(); ++j)
                flat[static_cast<std::size_t>(i) * v->dim() + j] = composed.at(i, j);
        span.insert(std::move(flat));
    }
    for (int r = 0; r < span.dim(); ++r) {
        MatrixGF f(u->field(), u->dim(), v->dim());
        for (int i = 0; i < u->dim(); ++i)
            for (int j = 0; j < v->dim(); ++j)
                f.set(i, j, span.row_at(r)[static_cast<std::size_t>(i) * v->dim() + j]);
        out.push_back(std::move(f));
    }
    return out;
}

inline std::vector<MatrixGF> hom_pr(ModuleRef u, ModuleRef v) {
    Cover c = projective_cover(v);
    return hom_pr(u, v, c);
}

/// dim of the stable morphism space Hom(U,V)/Hom^pr(U,V).
inline long stable_hom_dim(ModuleRef u, ModuleRef v, const Cover& cover_v) {
    return hom_space(u, v).dim() - static_cast<long>(hom_pr(u, v, cover_v).size());
}

inline long stable_hom_dim(ModuleRef u, ModuleRef v) {
    Cover c = projective_cover(v);
    return stable_hom_dim(u, v, c);
}

/// Multiplicities [P(S) | U] of each projective indecomposable as a direct
/// summand, plus the dimension of the projective-free part. Valid over
/// symmetric algebras: soc P(S) = S makes dim Hom^pr(S,U) count the
/// P(S)-summands, and a projective simple S (self-injective case) satisfies
/// [S | U] = dim Hom(S,U). With strict=false the raw formula values are
/// reported even if inconsistent (used for off-hypothesis exploration);
/// strict mode turns inconsistencies into NegativeMultiplicity.
struct DecompositionReport {
    std::vector<long> mult;       // per simple, in simples order
    std::vector<long> hom_dims;   // dim Hom(S, U)
    std::vector<long> stable_dims;  // stable hom dim (0 for projective simples)
    long omega0_dim = 0;
    bool consistent = true;
};

inline DecompositionReport decompose_projectives(ModuleRef u, bool strict = true) {
    const AlgebraRef& a = u->algebra();
    const SimpleSet& irr = simples(a);
    const ProjectiveSet& ps = pims(a);
    DecompositionReport rep;
    Cover cover_u = projective_cover(u);
    long used = 0;
    for (std::size_t si = 0; si < irr.simples.size(); ++si) {
        ModuleRef s = irr.simples[si];
        long h = hom_space(s, u).dim();
        bool s_projective = ps.pims[si]->dim() == s->dim();
        long stab = 0, m = 0;
        if (s_projective) {
            m = h;
        } else {
            long pr = static_cast<long>(hom_pr(s, u, cover_u).size());
            stab = h - pr;
            m = pr;  // = h - stable
        }
        rep.mult.push_back(m);
        rep.hom_dims.push_back(h);
        rep.stable_dims.push_back(stab);
        used += m * ps.pims[si]->dim();
        if (m < 0) rep.consistent = false;
    }
    rep.omega0_dim = u->dim() - used;
    if (rep.omega0_dim < 0) rep.consistent = false;
    if (strict && !rep.consistent)
        throw SoundnessError("NegativeMultiplicity",
                             "projective summand count inconsistent for " + u->label());
    return rep;
}

}  // namespace symrec

#endif  // SYMREC_FUNCTORS_HPP
