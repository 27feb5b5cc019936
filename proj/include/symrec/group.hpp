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

#ifndef SYMREC_GROUP_HPP
#define SYMREC_GROUP_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symrec/error.hpp"

namespace symrec {

/// Permutation on {0..n-1}, stored as the image vector. Products compose
/// left to right: (a*b)[x] = b[a[x]], i.e. a acts first.
using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
    Perm p(degree);
    for (int i = 0; i < degree; ++i) p[i] = i;
    return p;
}

inline Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

inline Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

inline bool perm_is_valid(const Perm& a, int degree) {
    if (static_cast<int>(a.size()) != degree) return false;
    std::vector<bool> seen(degree, false);
    for (int v : a) {
        if (v < 0 || v >= degree || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

/// Parses cycle notation, e.g. `(0 1)(2 3)`; `()` is the identity. Cycles
/// are applied left to right (only relevant for non-disjoint input).
inline Perm perm_parse(const std::string& text, int degree) {
    Perm result = perm_identity(degree);
    std::size_t i = 0;
    bool any = false;
    auto skip = [&]() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        if (text[i] != '(')
            throw InputError("BadPermutation", "expected '(' in '" + text + "'");
        ++i;
        std::vector<int> cycle;
        skip();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw InputError("BadPermutation", "expected point index in '" + text + "'");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
            }
            if (v >= degree)
                throw InputError("BadPermutation",
                                 "point " + std::to_string(v) + " exceeds degree " +
                                     std::to_string(degree));
            cycle.push_back(v);
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip();
            }
        }
        if (i >= text.size())
            throw InputError("BadPermutation", "unterminated cycle in '" + text + "'");
        ++i;  // ')'
        if (cycle.size() >= 2) {
            Perm c = perm_identity(degree);
            for (std::size_t k = 0; k < cycle.size(); ++k)
                c[cycle[k]] = cycle[(k + 1) % cycle.size()];
            result = perm_mul(result, c);
        }
        any = true;
        skip();
    }
    if (!any) throw InputError("BadPermutation", "empty permutation literal");
    return result;
}

inline std::string perm_format(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(j);
            seen[j] = true;
            j = p[j];
            first = false;
        } while (j != i);
        out += ")";
    }
    return out.empty() ? "()" : out;
}

/// Finite permutation group with a frozen canonical element enumeration:
/// identity first, then BFS by generator word length, ties within a BFS
/// level broken lexicographically by image tuple. Module action matrices
/// index group-algebra basis vectors by this order, so the order must never
/// change.
class PermGroup {
public:
    /// BFS closure of the generators. Throws OrderExceedsCap carrying the
    /// partial count when the cap is hit.
    static std::shared_ptr<const PermGroup> enumerate(int degree, std::vector<Perm> generators,
                                                      long cap = 5000) {
        for (const Perm& g : generators)
            if (!perm_is_valid(g, degree))
                throw InputError("BadPermutation", "generator is not a permutation of degree " +
                                                       std::to_string(degree));
        auto grp = std::shared_ptr<PermGroup>(new PermGroup());
        grp->degree_ = degree;
        grp->gens_ = std::move(generators);
        grp->elements_.push_back(perm_identity(degree));
        grp->words_.push_back({-1, -1});
        std::map<Perm, int> index = {{grp->elements_[0], 0}};
        std::vector<int> frontier = {0};
        while (!frontier.empty()) {
            // collect the next BFS level, sort lexicographically, then commit
            std::map<Perm, std::array<int, 2>> level;
            for (int ei : frontier) {
                for (std::size_t gi = 0; gi < grp->gens_.size(); ++gi) {
                    Perm x = perm_mul(grp->elements_[ei], grp->gens_[gi]);
                    if (index.count(x) || level.count(x)) continue;
                    level[x] = {ei, static_cast<int>(gi)};
                }
            }
            frontier.clear();
            for (auto& [p, word] : level) {
                if (static_cast<long>(grp->elements_.size()) >= cap)
                    throw InputError("OrderExceedsCap",
                                     "group order exceeds cap " + std::to_string(cap) +
                                         " (reached " + std::to_string(grp->elements_.size()) +
                                         " elements)");
                int idx = static_cast<int>(grp->elements_.size());
                grp->elements_.push_back(p);
                grp->words_.push_back(word);
                index[p] = idx;
                frontier.push_back(idx);
            }
        }
        grp->index_ = std::move(index);
        return grp;
    }

    int degree() const { return degree_; }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Perm>& elements() const { return elements_; }
    const Perm& element(int i) const { return elements_[i]; }

    /// BFS word structure: element i equals element(parent) * generator(slot);
    /// the identity has {-1,-1}.
    const std::array<int, 2>& word(int i) const { return words_[i]; }

    bool contains(const Perm& p) const { return index_.count(p) != 0; }

    int index_of(const Perm& p) const {
        auto it = index_.find(p);
        if (it == index_.end())
            throw InputError("NotASubgroupElement", "permutation is not a group element");
        return it->second;
    }

    int mul_index(int a, int b) const {
        return index_of(perm_mul(elements_[a], elements_[b]));
    }

    int inverse_index(int a) const { return index_of(perm_inverse(elements_[a])); }

    /// Subgroup generated by elements of this group, enumerated with the
    /// same canonical rule. Throws NotASubgroupElement if a generator is
    /// foreign.
    std::shared_ptr<const PermGroup> subgroup(std::vector<Perm> generators) const {
        for (const Perm& g : generators)
            if (!contains(g))
                throw InputError("NotASubgroupElement",
                                 "subgroup generator " + perm_format(g) +
                                     " is not an element of the group");
        return enumerate(degree_, std::move(generators), order() + 1);
    }

    bool has_subgroup(const PermGroup& h) const {
        if (h.degree() != degree_) return false;
        for (const Perm& p : h.elements())
            if (!contains(p)) return false;
        return true;
    }

private:
    PermGroup() = default;

    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;
    std::vector<std::array<int, 2>> words_;
    std::map<Perm, int> index_;
};

using GroupRef = std::shared_ptr<const PermGroup>;

/// Right-coset transversal for H <= G: one representative per coset Hg, in
/// G's canonical enumeration order (the representative is the first element
/// of its coset); reps[0] is the identity.
struct Transversal {
    std::vector<int> reps;      // indices into G's enumeration
    std::vector<int> coset_of;  // for every G element: which transversal slot
    std::vector<int> h_part;    // g = h * reps[coset_of[g]] with h in H (H's index)
};

inline Transversal right_transversal(const PermGroup& g, const PermGroup& h) {
    if (!g.has_subgroup(h))
        throw InputError("NotSubgroup", "transversal requested for a non-subgroup");
    long n = g.order();
    Transversal t;
    t.coset_of.assign(n, -1);
    t.h_part.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (t.coset_of[i] >= 0) continue;
        int slot = static_cast<int>(t.reps.size());
        t.reps.push_back(i);
        // mark the whole coset H * g_i
        for (long hj = 0; hj < h.order(); ++hj) {
            Perm x = perm_mul(h.element(static_cast<int>(hj)), g.element(i));
            int xi = g.index_of(x);
            t.coset_of[xi] = slot;
            t.h_part[xi] = static_cast<int>(hj);
        }
    }
    return t;
}

}  // namespace symrec

#endif  // SYMREC_GROUP_HPP
