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

#ifndef SYMREC_MEATAXE_HPP
#define SYMREC_MEATAXE_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "symrec/module.hpp"
#include "symrec/poly.hpp"

namespace symrec {

/// Seeded generator of pseudorandom elements of the acting algebra's image
/// in End(V): products and sums of generator actions. The pool is capped so
/// long runs do not accumulate matrices.
class WordSource {
public:
    WordSource(const Module& m, std::uint32_t seed) : rng_(seed) {
        for (const auto& a : m.generator_actions()) pool_.push_back(a);
        identity_ = MatrixGF::identity(m.field(), m.dim());
        pool_.push_back(identity_);
        q_ = m.field()->order();
    }

    MatrixGF next() {
        std::uint32_t n = static_cast<std::uint32_t>(pool_.size());
        MatrixGF w = pool_[rng_.below(n)] * pool_[rng_.below(n)];
        if (rng_.below(2)) {
            GfElem c = static_cast<GfElem>(1 + rng_.below(static_cast<std::uint32_t>(q_ - 1)));
            w.add_scaled_inplace(pool_[rng_.below(n)], c);
        }
        if (rng_.below(2)) {
            GfElem c = static_cast<GfElem>(rng_.below(static_cast<std::uint32_t>(q_)));
            if (c) w.add_scaled_inplace(identity_, c);
        }
        if (pool_.size() < 24)
            pool_.push_back(w);
        else
            pool_[4 + rng_.below(static_cast<std::uint32_t>(pool_.size() - 4))] = w;
        return w;
    }

    std::uint32_t fork_seed() { return rng_.next(); }

private:
    Rng rng_;
    long q_;
    std::vector<MatrixGF> pool_;
    MatrixGF identity_;
};

/// Splitting-field diagnosis for an irreducible module: dimension of its
/// endomorphism ring and, when that exceeds 1, the minimal extension degree
/// that splits it, found by factoring the minimal polynomial of a generating
/// endomorphism (End is a field, so a generator has irreducible minimal
/// polynomial of degree dim End).
struct EndInfo {
    int end_dim = 1;
    int suggested_degree = 1;
};

inline EndInfo end_splitting_info(ModuleRef s, std::uint32_t seed) {
    HomSpace end = hom_space(s, s);
    int r = end.dim();
    EndInfo info{r, 1};
    if (r <= 1) return info;
    int best = 1;
    auto probe = [&](const MatrixGF& m) {
        PolyGF mp = minpoly(m);
        auto fs = mp.factor();
        for (const auto& [g, mult] : fs) best = std::max(best, g.degree());
        return best >= r;
    };
    bool done = false;
    for (const auto& b : end.basis)
        if ((done = probe(b))) break;
    if (!done) {
        Rng rng(seed);
        const Gf& f = *s->field();
        for (int t = 0; t < 64 && !done; ++t) {
            MatrixGF m(s->field(), s->dim(), s->dim());
            for (const auto& b : end.basis) {
                GfElem c = static_cast<GfElem>(rng.below(static_cast<std::uint32_t>(f.order())));
                if (c) m.add_scaled_inplace(b, c);
            }
            done = probe(m);
        }
    }
    info.suggested_degree = std::max(best, r);
    return info;
}

namespace detail {

struct ChopLeaf {
    ModuleRef simple;
};

/// One splitting attempt. Returns true with a proper nonzero invariant
/// subspace in `out`, or false with `certified_irreducible` set when
/// Norton's criterion certified irreducibility.
inline bool find_submodule(const Module& m, WordSource& words, EchelonBasis& out,
                           bool& certified_irreducible, int word_budget) {
    certified_irreducible = false;
    int n = m.dim();
    const FieldRef& F = m.field();
    std::vector<MatrixGF> transposed;
    for (const auto& a : m.generator_actions()) transposed.push_back(a.transpose());

    for (int w = 0; w < word_budget; ++w) {
        MatrixGF theta = words.next();
        PolyGF cp = charpoly(theta);
        auto factors = cp.factor();  // sorted by (degree, coeffs)
        for (const auto& [f, mult] : factors) {
            MatrixGF ftheta = f.eval(theta);
            MatrixGF kerm = ftheta.nullspace();
            int nullity = kerm.rows();
            if (nullity == 0) continue;  // cannot happen for true factors
            int tried = std::min(nullity, 4);
            bool all_filled = true;
            for (int i = 0; i < tried; ++i) {
                std::vector<GfElem> v(kerm.row(i), kerm.row(i) + n);
                EchelonBasis span = spin(m, {v});
                if (span.dim() < n) {
                    out = std::move(span);
                    return true;
                }
            }
            if (nullity != f.degree() || !all_filled) continue;
            // Norton: primal spin filled; test the dual side
            MatrixGF kdual = ftheta.transpose().nullspace();
            std::vector<GfElem> u(kdual.row(0), kdual.row(0) + n);
            EchelonBasis dual_span = spin_dual(m, {u}, transposed);
            if (dual_span.dim() == n) {
                certified_irreducible = true;
                return false;
            }
            // the annihilator of a proper dual submodule is a proper
            // nonzero submodule
            MatrixGF perp = dual_span.to_matrix().nullspace();
            EchelonBasis sub(F, n);
            for (int i = 0; i < perp.rows(); ++i)
                sub.insert(std::vector<GfElem>(perp.row(i), perp.row(i) + n));
            if (sub.dim() == 0 || sub.dim() == n)
                throw SoundnessError("MeatAxe", "inconsistent dual-spin annihilator");
            out = std::move(sub);
            return true;
        }
    }
    throw SoundnessError("MeatAxe",
                         "word budget exhausted without a decision at dim " +
                             std::to_string(n));
}

inline void chop_rec(ModuleRef m, std::uint32_t seed, std::vector<ChopLeaf>& leaves,
                     int depth) {
    if (m->dim() == 0) return;
    if (m->dim() == 1) {
        leaves.push_back({m});
        return;
    }
    WordSource words(*m, seed);
    EchelonBasis sub(m->field(), m->dim());
    bool irre = false;
    if (!find_submodule(*m, words, sub, irre, 128)) {
        if (!irre)
            throw SoundnessError("MeatAxe", "split failed without certificate");
        leaves.push_back({m});
        return;
    }
    ModuleRef w = submodule(m, sub);
    QuotientModule q = quotient_module(m, sub);
    chop_rec(w, words.fork_seed(), leaves, depth + 1);
    chop_rec(q.module, words.fork_seed(), leaves, depth + 1);
}

}  // namespace detail

/// True iff two irreducible modules are isomorphic (a nonzero homomorphism
/// between simples is an isomorphism).
inline bool simple_isomorphic(ModuleRef a, ModuleRef b) {
    if (a->algebra() != b->algebra() || a->dim() != b->dim()) return false;
    return hom_space(a, b).dim() > 0;
}

struct CompositionFactor {
    ModuleRef simple;
    int multiplicity;
};

/// MeatAxe chop: composition factors with multiplicities, Parker-style with
/// Norton's criterion (dual spin when the primal spin fills). Deterministic
/// for a fixed seed. Throws FieldNotSplitting when a factor's endomorphism
/// ring is bigger than the ground field; the message carries the minimal
/// splitting extension degree.
inline std::vector<CompositionFactor> chop(ModuleRef m, std::uint32_t seed = 0) {
    if (seed == 0) seed = m->algebra()->default_seed();
    std::vector<detail::ChopLeaf> leaves;
    detail::chop_rec(m, seed, leaves, 0);
    std::vector<CompositionFactor> out;
    long total = 0;
    for (auto& leaf : leaves) {
        total += leaf.simple->dim();
        bool merged = false;
        for (auto& cf : out)
            if (simple_isomorphic(cf.simple, leaf.simple)) {
                ++cf.multiplicity;
                merged = true;
                break;
            }
        if (!merged) out.push_back({leaf.simple, 1});
    }
    if (total != m->dim())
        throw SoundnessError("MeatAxe", "composition factor dimensions do not sum up");
    for (const auto& cf : out) {
        EndInfo info = end_splitting_info(cf.simple, seed);
        if (info.end_dim > 1)
            throw FieldNotSplittingError(
                info.suggested_degree,
                "simple factor of dim " + std::to_string(cf.simple->dim()) +
                    " has endomorphism ring of dim " + std::to_string(info.end_dim) +
                    " over " + m->field()->to_string());
    }
    return out;
}

}  // namespace symrec

#endif  // SYMREC_MEATAXE_HPP
