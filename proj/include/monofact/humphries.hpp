#pragma once
// Humphries graph of a homology basis and its mod-2 vertex invariant chi:
// vertices are the basis classes, edges join classes with intersection
// number 1, and chi of a class counts support size plus internal edges of
// the support, mod 2.  chi is a quadratic refinement of the pairing and is
// the obstruction used to separate twist groups: a Dehn twist along c lies
// in a chi-preserving group only if chi(c) = 1.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "monofact/f2.hpp"

namespace monofact {

class HumphriesGraph {
public:
    HumphriesGraph(std::vector<std::string> labels, std::vector<HomologyClass> basis)
        : labels_(std::move(labels)), basis_(std::move(basis)) {
        if (basis_.empty() || labels_.size() != basis_.size())
            throw std::invalid_argument("HumphriesGraph: label/class count mismatch");
        const int dim = basis_[0].dim();
        if (dim % 2 != 0)
            throw std::invalid_argument("HumphriesGraph: odd dimension");
        genus_ = dim / 2;
        if (!is_basis(genus_, basis_))
            throw std::invalid_argument("HumphriesGraph: classes are not a basis");
        adjacency_.assign(dim, F2Vec(dim));
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                if (pairing(basis_[i], basis_[j])) {
                    adjacency_[i].set(j, true);
                    adjacency_[j].set(i, true);
                }
        to_coords_ = *F2Matrix::from_columns(dim, basis_).inverse();
    }

    int genus() const { return genus_; }
    int dim() const { return 2 * genus_; }
    int order() const { return 2 * genus_; }  // number of vertices

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<HomologyClass>& basis() const { return basis_; }
    const F2Vec& adjacency_row(int i) const { return adjacency_.at(i); }
    bool edge(int i, int j) const { return adjacency_.at(i).bit(j); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < dim(); ++i)
            for (int j = i + 1; j < dim(); ++j)
                if (edge(i, j)) e.emplace_back(i, j);
        return e;
    }

    // support of v in this basis, as a bit vector over vertex indices
    F2Vec coordinates(const HomologyClass& v) const {
        if (v.dim() != dim())
            throw std::invalid_argument("HumphriesGraph: dimension mismatch");
        return to_coords_.apply(v);
    }

    // |support| + edges inside the support, mod 2
    int chi(const HomologyClass& v) const {
        const F2Vec s = coordinates(v);
        int edge_pairs = 0;
        for (int i = 0; i < dim(); ++i)
            if (s.bit(i)) edge_pairs += count_bits(adjacency_[i], s);
        return (s.popcount() + edge_pairs / 2) & 1;
    }

private:
    static int count_bits(const F2Vec& row, const F2Vec& s) {
        return std::popcount(row.word(0) & s.word(0)) +
               std::popcount(row.word(1) & s.word(1));
    }

    int genus_ = 0;
    std::vector<std::string> labels_;
    std::vector<HomologyClass> basis_;
    std::vector<F2Vec> adjacency_;
    F2Matrix to_coords_;
};

inline HumphriesGraph build_graph(std::vector<std::string> labels,
                                  std::vector<HomologyClass> basis) {
    return HumphriesGraph(std::move(labels), std::move(basis));
}

enum class TwistMembership { member_possible, excluded };

// a twist along a class with chi = 0 cannot lie in a chi-preserving twist group
inline TwistMembership twist_in_group_obstruction(const HumphriesGraph& g,
                                                  const HomologyClass& w) {
    if (w.zero())
        throw std::invalid_argument("twist_in_group_obstruction: zero class");
    return g.chi(w) == 0 ? TwistMembership::excluded
                         : TwistMembership::member_possible;
}

constexpr std::uint64_t default_seed = 0x5eed0f2d15717ULL;
constexpr std::uint64_t default_samples = 100000;

namespace detail {
inline HomologyClass random_class(int dim, std::mt19937_64& rng) {
    HomologyClass h(dim);
    for (int k = 0; k * 64 < dim; ++k) {
        const std::uint64_t w = rng();
        for (int i = 0; i < 64 && 64 * k + i < dim; ++i)
            if ((w >> i) & 1u) h.set(64 * k + i, true);
    }
    return h;
}

inline HomologyClass class_from_counter(int dim, std::uint64_t counter) {
    HomologyClass h(dim);
    for (int i = 0; i < dim; ++i)
        if ((counter >> i) & 1u) h.set(i, true);
    return h;
}
}  // namespace detail

// First class v with chi(f(v)) != chi(v), if any.  Exhaustive over the whole
// group when 2N <= 20; otherwise checks basis vectors, pairwise basis sums
// and `samples` seeded random classes.
inline std::optional<HomologyClass> chi_violation(
    const HumphriesGraph& g, const SymplecticMap& f,
    std::uint64_t samples = default_samples, std::uint64_t seed = default_seed) {
    if (f.genus() != g.genus())
        throw std::invalid_argument("chi_violation: genus mismatch");
    const int dim = g.dim();
    const auto differs = [&](const HomologyClass& v) {
        return g.chi(f.apply(v)) != g.chi(v);
    };
    if (dim <= 20) {
        const std::uint64_t total = std::uint64_t{1} << dim;
        for (std::uint64_t x = 1; x < total; ++x) {
            const HomologyClass v = detail::class_from_counter(dim, x);
            if (differs(v)) return v;
        }
        return std::nullopt;
    }
    for (int i = 0; i < dim; ++i) {
        const HomologyClass v = HomologyClass::unit(dim, i);
        if (differs(v)) return v;
    }
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            const HomologyClass v =
                HomologyClass::unit(dim, i) + HomologyClass::unit(dim, j);
            if (differs(v)) return v;
        }
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const HomologyClass v = detail::random_class(dim, rng);
        if (!v.zero() && differs(v)) return v;
    }
    return std::nullopt;
}

inline bool preserves_chi(const HumphriesGraph& g, const SymplecticMap& f,
                          std::uint64_t samples = default_samples,
                          std::uint64_t seed = default_seed) {
    return !chi_violation(g, f, samples, seed).has_value();
}

struct QuadCheck {
    bool ok = true;
    std::uint64_t checked = 0;
    std::string detail;  // first violation, when any
};

// chi of every class, indexed by the coordinate bits; only for 2N <= 20
inline std::vector<std::uint8_t> chi_table(const HumphriesGraph& g) {
    const int dim = g.dim();
    if (dim > 20) throw std::invalid_argument("chi_table: dimension too large");
    std::vector<std::uint8_t> table(std::size_t{1} << dim);
    for (std::uint64_t x = 0; x < table.size(); ++x)
        table[x] = static_cast<std::uint8_t>(g.chi(detail::class_from_counter(dim, x)));
    return table;
}

// chi(u+v) = chi(u) + chi(v) + <u,v>.  Complete for 2N <= 20: every u is
// checked against every basis vector, which forces the identity for all
// pairs by induction on the support of v.  Sampled beyond that.
inline QuadCheck check_quadratic_refinement(const HumphriesGraph& g,
                                            std::uint64_t samples = default_samples,
                                            std::uint64_t seed = default_seed) {
    QuadCheck res;
    const int dim = g.dim();
    if (g.chi(zero_class(g.genus())) != 0) {
        res.ok = false;
        res.detail = "chi(0) != 0";
    }
    for (const auto& b : g.basis())
        if (g.chi(b) != 1) {
            res.ok = false;
            if (res.detail.empty())
                res.detail = "vertex class " + class_to_string(b) + " has chi != 1";
        }
    if (dim <= 20) {
        const auto table = chi_table(g);
        // pairing with basis vector j, as a popcount mask on coordinate bits
        std::vector<std::uint64_t> pair_mask(dim, 0);
        for (int j = 0; j < dim; ++j) {
            const HomologyClass& bj = g.basis()[j];
            for (int i = 0; i < dim; ++i) {
                const int partner = (i % 2 == 0) ? i + 1 : i - 1;
                if (bj.bit(partner)) pair_mask[j] |= std::uint64_t{1} << i;
            }
        }
        std::vector<std::uint64_t> basis_bits(dim, 0);
        for (int j = 0; j < dim; ++j)
            for (int i = 0; i < dim; ++i)
                if (g.basis()[j].bit(i)) basis_bits[j] |= std::uint64_t{1} << i;
        const std::uint64_t total = std::uint64_t{1} << dim;
        for (std::uint64_t x = 0; x < total && res.ok; ++x)
            for (int j = 0; j < dim; ++j) {
                ++res.checked;
                const int lhs = table[x ^ basis_bits[j]];
                const int rhs =
                    (table[x] + 1 + std::popcount(x & pair_mask[j])) & 1;
                if (lhs != rhs) {
                    res.ok = false;
                    res.detail = "chi(u+v) mismatch at u=" +
                                 class_to_string(detail::class_from_counter(dim, x)) +
                                 " v=" + class_to_string(g.basis()[j]);
                    break;
                }
            }
        return res;
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples && res.ok; ++s) {
        const HomologyClass u = detail::random_class(dim, rng);
        const HomologyClass v = detail::random_class(dim, rng);
        ++res.checked;
        if (g.chi(u + v) != ((g.chi(u) + g.chi(v) + pairing(u, v)) & 1)) {
            res.ok = false;
            res.detail = "chi(u+v) mismatch at u=" + class_to_string(u) +
                         " v=" + class_to_string(v);
        }
    }
    return res;
}

// chi(T_c v) = chi(v) + <c,v> (chi(c) + 1): a twist along a chi = 1 class
// never moves chi, and flips it exactly on classes meeting a chi = 0 class.
// All pairs for 2N <= 12, sampled beyond that.
inline QuadCheck check_transvection_transport(const HumphriesGraph& g,
                                              std::uint64_t samples = default_samples,
                                              std::uint64_t seed = default_seed) {
    QuadCheck res;
    const int dim = g.dim();
    const auto check_pair = [&](const HomologyClass& c, const HomologyClass& v,
                                int chi_c, int chi_v, int chi_tv) {
        ++res.checked;
        const int rhs = (chi_v + pairing(c, v) * ((chi_c + 1) & 1)) & 1;
        if (chi_tv != rhs) {
            res.ok = false;
            if (res.detail.empty())
                res.detail = "transport mismatch at c=" + class_to_string(c) +
                             " v=" + class_to_string(v);
        }
    };
    if (dim <= 12) {
        const auto table = chi_table(g);
        const std::uint64_t total = std::uint64_t{1} << dim;
        for (std::uint64_t x = 0; x < total && res.ok; ++x) {
            const HomologyClass c = detail::class_from_counter(dim, x);
            for (std::uint64_t y = 0; y < total && res.ok; ++y) {
                const HomologyClass v = detail::class_from_counter(dim, y);
                const HomologyClass tv = transvect(c, v);
                check_pair(c, v, table[x], table[y],
                           table[tv.word(0) & (total - 1)]);
            }
        }
        return res;
    }
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples && res.ok; ++s) {
        const HomologyClass c = detail::random_class(dim, rng);
        const HomologyClass v = detail::random_class(dim, rng);
        check_pair(c, v, g.chi(c), g.chi(v), g.chi(transvect(c, v)));
    }
    return res;
}

}  // namespace monofact
