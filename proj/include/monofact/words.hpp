#pragma once
// Positive factorizations into Dehn twists, tracked through their action on
// H_1(Sigma; Z/2): the base word of the building-block fibration, knot
// monodromies assembled from twist regions, the doubled surgery words,
// Hurwitz moves, Stallings twists, Hopf-plumbing re-embeddings and a
// conjugacy-invariant orbit signature of the twist group.
//
// Letters are stored in application order: letter 1 acts first, so the
// product map composes the last letter outermost.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monofact/curves.hpp"
#include "monofact/f2.hpp"
#include "monofact/humphries.hpp"

namespace monofact {

struct TwistLetter {
    std::string label;
    HomologyClass cls;
    int exponent = 1;

    bool operator==(const TwistLetter&) const = default;
};

struct TwistWord {
    int genus = 0;
    std::vector<TwistLetter> letters;

    int size() const { return static_cast<int>(letters.size()); }

    void push(std::string label, const HomologyClass& cls, int exponent = 1) {
        if (cls.dim() != 2 * genus)
            throw std::invalid_argument("TwistWord: letter dimension mismatch");
        letters.push_back({std::move(label), cls, exponent});
    }

    bool operator==(const TwistWord&) const = default;
};

// same twists in the same order, ignoring display labels
inline bool same_classes(const TwistWord& a, const TwistWord& b) {
    if (a.genus != b.genus || a.letters.size() != b.letters.size()) return false;
    for (std::size_t i = 0; i < a.letters.size(); ++i)
        if (a.letters[i].cls != b.letters[i].cls ||
            a.letters[i].exponent != b.letters[i].exponent)
            return false;
    return true;
}

// parameters of the twist regions: one (p, q) pair per block
using TwistParams = std::vector<std::pair<long long, long long>>;

inline int parity_of_param(long long p) { return static_cast<int>(((p % 2) + 2) % 2); }

// total homology action; letter exponents only matter mod 2
inline SymplecticMap product_map(const TwistWord& w) {
    SymplecticMap m = SymplecticMap::identity(w.genus);
    for (const auto& l : w.letters)
        if (l.exponent & 1) m = compose(transvection_map(l.cls), m);
    return m;
}

inline TwistWord concat(const TwistWord& a, const TwistWord& b) {
    if (a.genus != b.genus)
        throw std::invalid_argument("concat: genus mismatch");
    TwistWord w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

inline TwistWord word_power(const TwistWord& w, int k) {
    if (k < 0) throw std::invalid_argument("word_power: negative power");
    TwistWord r;
    r.genus = w.genus;
    for (int i = 0; i < k; ++i)
        r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
    return r;
}

// 2g+6 letter factorization of the building-block fibration on the
// genus-(2g+1) fiber: the chain classes B_0..B_{2g+1}, then b_{g+1} twice
// and the reference curve b' twice
inline TwistWord base_word(const CurveCatalog& cat) {
    const int g = cat.knot_genus;
    TwistWord w;
    w.genus = cat.ambient_genus;
    for (int j = 0; j <= 2 * g + 1; ++j) w.push(label_B(j), cat.cls(label_B(j)));
    const std::string bmid = label_b(g + 1);
    w.push(bmid, cat.cls(bmid));
    w.push(bmid, cat.cls(bmid));
    w.push("bprime", cat.cls("bprime"));
    w.push("bprime", cat.cls("bprime"));
    return w;
}

namespace detail {
inline void check_params(const CurveCatalog& cat, const TwistParams& params) {
    if (static_cast<int>(params.size()) != cat.summands)
        throw std::invalid_argument("expected one (p,q) pair per twist region");
}
}  // namespace detail

// homology action of the fibered-knot monodromy with twist parameters
// (p_j, q_j) in region j
inline SymplecticMap knot_monodromy(const CurveCatalog& cat, const TwistParams& params) {
    detail::check_params(cat, params);
    SymplecticMap m = SymplecticMap::identity(cat.ambient_genus);
    for (int j = 1; j <= cat.summands; ++j) {
        const auto [p, q] = params[j - 1];
        m = compose(transvection_map(cat.cls(label_b(2 * j - 1))), m);
        m = compose(transvection_map(cat.cls(label_a(2 * j - 1))), m);
        m = compose(transvection_map(cat.cls(label_b(2 * j))), m);
        m = compose(transvection_map(cat.cls(label_a(2 * j))), m);
        if (parity_of_param(p)) m = compose(transvection_map(cat.cls(label_c(j))), m);
        if (parity_of_param(q)) m = compose(transvection_map(cat.cls(label_d(j))), m);
    }
    return m;
}

// the same monodromy as an explicit word: four handle twists per region
// (two positive, two negative), then |p| twists along c and |q| along d
inline TwistWord knot_monodromy_word(const CurveCatalog& cat, const TwistParams& params) {
    detail::check_params(cat, params);
    TwistWord w;
    w.genus = cat.ambient_genus;
    for (int j = 1; j <= cat.summands; ++j) {
        const auto [p, q] = params[j - 1];
        if (std::llabs(p) > 1000000 || std::llabs(q) > 1000000)
            throw std::invalid_argument("knot_monodromy_word: twist count too large");
        w.push(label_b(2 * j - 1), cat.cls(label_b(2 * j - 1)), 1);
        w.push(label_a(2 * j - 1), cat.cls(label_a(2 * j - 1)), 1);
        w.push(label_b(2 * j), cat.cls(label_b(2 * j)), -1);
        w.push(label_a(2 * j), cat.cls(label_a(2 * j)), -1);
        for (long long t = 0; t < std::llabs(p); ++t)
            w.push(label_c(j), cat.cls(label_c(j)), p > 0 ? 1 : -1);
        for (long long t = 0; t < std::llabs(q); ++t)
            w.push(label_d(j), cat.cls(label_d(j)), q > 0 ? 1 : -1);
    }
    return w;
}

// verifies on homology that the (p, q) monodromy is the t_{d_1}-conjugate of
// the (p+q, 0) monodromy; single twist region only
inline bool conjugacy_check(const CurveCatalog& cat, long long n, long long p, long long q) {
    if (cat.summands != 1)
        throw std::invalid_argument("conjugacy_check: single twist region only");
    if (p + q != n)
        throw std::invalid_argument("conjugacy_check: need p + q = n");
    const SymplecticMap lhs = knot_monodromy(cat, {{p, q}});
    const SymplecticMap cj = transvection_map(cat.cls(label_d(1)));
    SymplecticMap rhs = knot_monodromy(cat, {{n, 0}});
    if (parity_of_param(q)) rhs = compose(cj, compose(rhs, cj));
    return lhs == rhs;
}

// monodromy factorization of the surgered fibration: the doubled base word
// followed by its image under the knot monodromy, 16n+24 letters in all
inline TwistWord surgery_word(const CurveCatalog& cat, const TwistParams& params) {
    const TwistWord eta2 = word_power(base_word(cat), 2);
    const SymplecticMap phi = knot_monodromy(cat, params);
    TwistWord w = eta2;
    for (const auto& l : eta2.letters)
        w.push("Phi(" + l.label + ")", phi.apply(l.cls), l.exponent);
    return w;
}

// elementary move at position i (1-based): (u, v) -> (v, T_v u).  Transformed
// letters whose class changes are relabeled by their class expression.
inline TwistWord hurwitz_move(const TwistWord& w, int i) {
    if (i < 1 || i >= w.size())
        throw std::out_of_range("hurwitz_move: position out of range");
    TwistWord r = w;
    const TwistLetter u = w.letters[i - 1];
    const TwistLetter v = w.letters[i];
    r.letters[i - 1] = v;
    const HomologyClass moved = transvect(v.cls, u.cls);
    r.letters[i] = {moved == u.cls ? u.label : class_to_labels(moved), moved, u.exponent};
    return r;
}

// inverse move at position i: (u, v) -> (T_u v, u)
inline TwistWord inverse_hurwitz_move(const TwistWord& w, int i) {
    if (i < 1 || i >= w.size())
        throw std::out_of_range("inverse_hurwitz_move: position out of range");
    TwistWord r = w;
    const TwistLetter u = w.letters[i - 1];
    const TwistLetter v = w.letters[i];
    const HomologyClass moved = transvect(u.cls, v.cls);
    r.letters[i - 1] = {moved == v.cls ? v.label : class_to_labels(moved), moved, v.exponent};
    r.letters[i] = u;
    return r;
}

// simultaneous conjugation of every letter
inline TwistWord conjugate_word(const TwistWord& w, const SymplecticMap& f) {
    if (f.genus() != w.genus)
        throw std::invalid_argument("conjugate_word: genus mismatch");
    TwistWord r;
    r.genus = w.genus;
    for (const auto& l : w.letters) {
        const HomologyClass c = f.apply(l.cls);
        r.letters.push_back({c == l.cls ? l.label : class_to_labels(c), c, l.exponent});
    }
    return r;
}

// surgery along a 0-framed unknotted curve on the fiber: composes one more
// twist (applied after the word; leftmost factor in display order)
inline TwistWord stallings_twist(const TwistWord& w, const HomologyClass& c, int sign,
                                 const std::string& label = "") {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("stallings_twist: sign must be +1 or -1");
    if (c.dim() != 2 * w.genus)
        throw std::invalid_argument("stallings_twist: dimension mismatch");
    TwistWord r = w;
    r.letters.push_back({label.empty() ? class_to_labels(c) : label, c, sign});
    return r;
}

// linear re-embedding of homology induced by a subsurface inclusion
struct Embedding {
    int old_genus = 0;
    int new_genus = 0;
    std::vector<HomologyClass> images;  // image of each old coordinate class

    Embedding(int old_genus, int new_genus, std::vector<HomologyClass> imgs)
        : old_genus(old_genus), new_genus(new_genus), images(std::move(imgs)) {
        if (static_cast<int>(images.size()) != 2 * old_genus)
            throw std::invalid_argument("Embedding: image count");
        for (const auto& h : images)
            if (h.dim() != 2 * new_genus)
                throw std::invalid_argument("Embedding: image dimension");
        if (rank_of(images) != 2 * old_genus)
            throw std::invalid_argument("Embedding: images not independent");
        for (int i = 0; i < 2 * old_genus; ++i)
            for (int j = i + 1; j < 2 * old_genus; ++j) {
                const int want = (j == i + 1 && i % 2 == 0) ? 1 : 0;
                if (pairing(images[i], images[j]) != want)
                    throw std::invalid_argument("Embedding: pairing not preserved");
            }
    }

    HomologyClass apply(const HomologyClass& x) const {
        if (x.dim() != 2 * old_genus)
            throw std::invalid_argument("Embedding::apply: dimension mismatch");
        HomologyClass y(2 * new_genus);
        for (int i = 0; i < 2 * old_genus; ++i)
            if (x.bit(i)) y ^= images[i];
        return y;
    }
};

// handle-by-handle inclusion of a smaller surface
inline Embedding inclusion_embedding(int old_genus, int new_genus) {
    if (old_genus < 1 || new_genus < old_genus)
        throw std::invalid_argument("inclusion_embedding: bad genera");
    std::vector<HomologyClass> imgs;
    imgs.reserve(2 * old_genus);
    for (int i = 0; i < 2 * old_genus; ++i)
        imgs.push_back(HomologyClass::unit(2 * new_genus, i));
    return Embedding(old_genus, new_genus, imgs);
}

// plumbing a Hopf band: re-embed the word on the bigger surface and compose
// one more twist along the band's core
inline TwistWord hopf_plumb(const TwistWord& w, const Embedding& emb,
                            const HomologyClass& core, int sign) {
    if (w.genus != emb.old_genus)
        throw std::invalid_argument("hopf_plumb: word/embedding genus mismatch");
    if (core.dim() != 2 * emb.new_genus)
        throw std::invalid_argument("hopf_plumb: core dimension mismatch");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("hopf_plumb: sign must be +1 or -1");
    TwistWord r;
    r.genus = emb.new_genus;
    for (const auto& l : w.letters)
        r.letters.push_back({l.label, emb.apply(l.cls), l.exponent});
    r.letters.push_back({class_to_labels(core), core, sign});
    return r;
}

// Conjugacy-invariant signature of the group generated by the letter
// twists: multiset of orbit sizes of its action on H_1(Sigma; Z/2), plus a
// chi-closure flag per queried graph (1 when every letter has chi = 1).
// Exhaustive for 2N <= 20; otherwise orbits of the catalog classes (or the
// letters) are explored with a node cap and the result is flagged partial.
struct GroupSignature {
    std::vector<std::uint64_t> orbit_sizes;  // ascending
    bool partial = false;
    std::vector<int> chi_closed;

    bool operator==(const GroupSignature&) const = default;
};

inline GroupSignature group_signature(const TwistWord& w,
                                      const std::vector<const HumphriesGraph*>& graphs = {},
                                      std::vector<HomologyClass> seeds = {}) {
    GroupSignature sig;
    const int dim = 2 * w.genus;

    std::vector<HomologyClass> gens;
    for (const auto& l : w.letters) {
        if (l.cls.zero()) continue;
        if (std::find(gens.begin(), gens.end(), l.cls) == gens.end())
            gens.push_back(l.cls);
    }

    for (const auto* g : graphs) {
        if (g->genus() != w.genus)
            throw std::invalid_argument("group_signature: graph genus mismatch");
        int closed = 1;
        for (const auto& c : gens)
            if (g->chi(c) != 1) { closed = 0; break; }
        sig.chi_closed.push_back(closed);
    }

    if (dim <= 20) {
        // transvections as mask pairs: x -> x ^ (parity(x & sc) ? cb : 0)
        std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
        for (const auto& c : gens) {
            std::uint64_t cb = 0, sc = 0;
            for (int i = 0; i < dim; ++i) {
                if (c.bit(i)) cb |= std::uint64_t{1} << i;
                const int partner = (i % 2 == 0) ? i + 1 : i - 1;
                if (c.bit(partner)) sc |= std::uint64_t{1} << i;
            }
            masks.emplace_back(cb, sc);
        }
        const std::uint64_t total = std::uint64_t{1} << dim;
        std::vector<std::uint8_t> seen(total, 0);
        std::vector<std::uint64_t> stack;
        for (std::uint64_t s0 = 0; s0 < total; ++s0) {
            if (seen[s0]) continue;
            std::uint64_t count = 0;
            stack.assign(1, s0);
            seen[s0] = 1;
            while (!stack.empty()) {
                const std::uint64_t x = stack.back();
                stack.pop_back();
                ++count;
                for (const auto& [cb, sc] : masks) {
                    const std::uint64_t y =
                        (std::popcount(x & sc) & 1) ? (x ^ cb) : x;
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
                }
            }
            sig.orbit_sizes.push_back(count);
        }
        std::sort(sig.orbit_sizes.begin(), sig.orbit_sizes.end());
        return sig;
    }

    sig.partial = true;
    if (seeds.empty())
        for (const auto& c : gens) seeds.push_back(c);
    constexpr std::size_t node_cap = std::size_t{1} << 18;
    std::set<std::array<std::uint64_t, 2>> visited;
    const auto key = [](const HomologyClass& h) {
        return std::array<std::uint64_t, 2>{h.word(0), h.word(1)};
    };
    for (const auto& seed : seeds) {
        if (seed.dim() != dim)
            throw std::invalid_argument("group_signature: seed dimension mismatch");
        if (visited.count(key(seed))) continue;
        std::vector<HomologyClass> stack{seed};
        visited.insert(key(seed));
        std::uint64_t count = 0;
        bool capped = false;
        while (!stack.empty()) {
            const HomologyClass x = stack.back();
            stack.pop_back();
            ++count;
            for (const auto& c : gens) {
                const HomologyClass y = transvect(c, x);
                if (visited.size() >= node_cap) { capped = true; break; }
                if (visited.insert(key(y)).second) stack.push_back(y);
            }
            if (capped) break;
        }
        sig.orbit_sizes.push_back(count);
        if (capped) break;
    }
    std::sort(sig.orbit_sizes.begin(), sig.orbit_sizes.end());
    return sig;
}

}  // namespace monofact
