#pragma once
// Separating the surgered fibrations by twist parity.  For each parity
// vector there is an adapted homology basis whose Humphries-graph invariant
// chi equals 1 on every letter of the matching surgery word; a word with a
// different parity always contains a letter with chi = 0.  Since conjugation
//-invariant twist groups generated by chi = 1 classes cannot contain a twist
// along a chi = 0 class that meets the basis, such a letter plus one basis
// class meeting it certify that the two words generate different groups.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monofact/curves.hpp"
#include "monofact/f2.hpp"
#include "monofact/humphries.hpp"
#include "monofact/words.hpp"

namespace monofact {

// twist parities (eps_1, ..., eps_2n), eps_{2j-1} = p_j mod 2, eps_{2j} = q_j mod 2
struct ParityVector {
    int n = 0;
    std::uint32_t bits = 0;

    static ParityVector from_params(const TwistParams& params) {
        ParityVector pv;
        pv.n = static_cast<int>(params.size());
        for (int j = 1; j <= pv.n; ++j) {
            if (parity_of_param(params[j - 1].first))
                pv.bits |= std::uint32_t{1} << (2 * (j - 1));
            if (parity_of_param(params[j - 1].second))
                pv.bits |= std::uint32_t{1} << (2 * (j - 1) + 1);
        }
        return pv;
    }

    // eps_k for k = 1..2n
    int eps(int k) const {
        if (k < 1 || k > 2 * n) throw std::out_of_range("ParityVector::eps");
        return (bits >> (k - 1)) & 1;
    }
    int block_p(int j) const { return eps(2 * j - 1); }
    int block_q(int j) const { return eps(2 * j); }

    std::vector<int> to_vector() const {
        std::vector<int> v(2 * n);
        for (int k = 1; k <= 2 * n; ++k) v[k - 1] = eps(k);
        return v;
    }

    bool operator==(const ParityVector&) const = default;
};

// Basis adapted to a parity vector: the chain classes B_1..B_{4n}, the
// middle handle curves b_{2n+1}, a_{2n+1}, then one quadruple per twist
// region chosen by that region's parity.
inline std::vector<std::pair<std::string, HomologyClass>> parity_basis(
    const CurveCatalog& cat, const ParityVector& pv) {
    if (pv.n != cat.summands)
        throw std::invalid_argument("parity_basis: region count mismatch");
    const int g = cat.knot_genus;
    std::vector<std::pair<std::string, HomologyClass>> out;
    for (int j = 1; j <= 2 * g; ++j)
        out.emplace_back(label_B(j), cat.cls(label_B(j)));
    out.emplace_back(label_b(g + 1), cat.cls(label_b(g + 1)));
    out.emplace_back(label_a(g + 1), cat.cls(label_a(g + 1)));
    for (int i = 1; i <= pv.n; ++i) {
        const int ep = pv.block_p(i), eq = pv.block_q(i);
        const auto push = [&](const std::string& l) { out.emplace_back(l, cat.cls(l)); };
        if (ep == 0 && eq == 0) {
            push(label_a(2 * i - 1)); push(label_a(2 * i));
            push(label_b(2 * i - 1)); push(label_b(2 * i));
        } else if (ep == 1 && eq == 0) {
            push(label_e(2 * i - 1)); push(label_e(2 * i));
            push(label_f(2 * i - 1)); push(label_f(2 * i));
        } else if (ep == 0 && eq == 1) {
            push(label_e(2 * i - 1)); push(label_e(2 * i));
            push(label_b(2 * i - 1)); push(label_b(2 * i));
        } else {
            push(label_a(2 * i - 1)); push(label_a(2 * i));
            push(label_f(2 * i - 1)); push(label_f(2 * i));
        }
    }
    return out;
}

inline HumphriesGraph parity_basis_graph(const CurveCatalog& cat, const ParityVector& pv) {
    std::vector<std::string> labels;
    std::vector<HomologyClass> classes;
    for (auto& [l, h] : parity_basis(cat, pv)) {
        labels.push_back(l);
        classes.push_back(h);
    }
    return HumphriesGraph(std::move(labels), std::move(classes));
}

struct ChiEntry {
    int position = 0;  // 1-based letter index
    std::string label;
    HomologyClass cls;
    int chi = 0;

    bool operator==(const ChiEntry&) const = default;
};

struct ChiTable {
    std::vector<ChiEntry> entries;
    bool all_one = true;
};

// chi of every letter of the word under the graph
inline ChiTable subordinate_table(const TwistWord& w, const HumphriesGraph& g) {
    ChiTable t;
    for (int i = 0; i < w.size(); ++i) {
        const auto& l = w.letters[i];
        const int chi = g.chi(l.cls);
        t.entries.push_back({i + 1, l.label, l.cls, chi});
        if (chi != 1) t.all_one = false;
    }
    return t;
}

struct Witness {
    int position = 0;  // 1-based index of the chi = 0 letter
    std::string letter_label;
    HomologyClass letter_class;
    std::string vertex_label;  // basis class meeting the letter
    HomologyClass vertex_class;

    bool operator==(const Witness&) const = default;
};

// first letter with chi = 0, together with the first basis class meeting it
inline std::optional<Witness> find_witness(const TwistWord& w, const HumphriesGraph& g) {
    for (int i = 0; i < w.size(); ++i) {
        const auto& l = w.letters[i];
        if (l.cls.zero() || g.chi(l.cls) != 0) continue;
        for (int v = 0; v < g.dim(); ++v)
            if (pairing(l.cls, g.basis()[v]) == 1)
                return Witness{i + 1, l.label, l.cls, g.labels()[v], g.basis()[v]};
        // a nonzero class meets some basis class; reaching here would mean
        // the pairing degenerated
        throw std::logic_error("find_witness: letter meets no basis class");
    }
    return std::nullopt;
}

enum class Verdict { distinct_groups, inconclusive };

inline std::string verdict_name(Verdict v) {
    return v == Verdict::distinct_groups ? "distinct_groups" : "inconclusive";
}

// Self-contained comparison record: everything an offline checker needs to
// revalidate the separation argument from scratch.
struct Certificate {
    int format_version = 1;
    std::string tool;
    std::uint64_t seed = default_seed;
    int summands = 0;
    TwistParams left_params, right_params;
    ParityVector left_parity, right_parity;
    std::vector<std::string> basis_labels;       // left-parity basis
    std::vector<HomologyClass> basis_classes;
    std::vector<std::pair<int, int>> edges;      // Humphries graph of that basis
    ChiTable left_table;                         // chi of every left-word letter
    std::optional<Witness> witness;              // chi = 0 letter of the right word
    Verdict verdict = Verdict::inconclusive;
    std::string catalog_hash;
    std::string note;
};

inline Certificate distinguish(const CurveCatalog& cat, const TwistParams& left,
                               const TwistParams& right,
                               std::uint64_t seed = default_seed) {
    if (static_cast<int>(left.size()) != cat.summands ||
        static_cast<int>(right.size()) != cat.summands)
        throw std::invalid_argument("distinguish: one (p,q) pair per twist region");
    Certificate cert;
    cert.seed = seed;
    cert.summands = cat.summands;
    cert.left_params = left;
    cert.right_params = right;
    cert.left_parity = ParityVector::from_params(left);
    cert.right_parity = ParityVector::from_params(right);
    cert.catalog_hash = catalog_fingerprint(cat);

    const HumphriesGraph graph = parity_basis_graph(cat, cert.left_parity);
    cert.basis_labels = graph.labels();
    cert.basis_classes = graph.basis();
    cert.edges = graph.edges();

    cert.left_table = subordinate_table(surgery_word(cat, left), graph);
    if (!cert.left_table.all_one) {
        cert.verdict = Verdict::inconclusive;
        cert.note = "left word is not subordinate to its own parity basis";
        return cert;
    }

    if (cert.left_parity == cert.right_parity) {
        cert.verdict = Verdict::inconclusive;
        cert.note = "twist parities agree; the invariant cannot separate these words";
        return cert;
    }

    cert.witness = find_witness(surgery_word(cat, right), graph);
    if (cert.witness) {
        cert.verdict = Verdict::distinct_groups;
    } else {
        cert.verdict = Verdict::inconclusive;
        cert.note = "no chi = 0 letter found in the right word";
    }
    return cert;
}

// ---- family reports ----------------------------------------------------

struct FamilyMember {
    TwistParams params;
    ParityVector parity;
};

struct FamilyPairResult {
    int left = 0, right = 0;  // member indices
    Certificate cert;
};

struct FamilyReport {
    int summands = 0;
    std::vector<long long> m;
    std::vector<FamilyMember> members;
    std::vector<FamilyPairResult> pairs;
    int classes = 0;  // equivalence classes under "not separated"
    bool all_distinct = false;
};

// For twist counts (m_1, ..., m_n), compare the 2^n representative words
// obtained by writing each region as (m_i, 0) or (m_i - 1, 1).
inline FamilyReport family_report(const std::vector<long long>& m,
                                  std::uint64_t seed = default_seed) {
    const int n = static_cast<int>(m.size());
    if (n < 1 || n > 10)
        throw std::invalid_argument("family_report: need 1 to 10 twist regions");
    FamilyReport rep;
    rep.summands = n;
    rep.m = m;
    const CurveCatalog cat = build_catalog(n);

    for (std::uint32_t t = 0; t < (std::uint32_t{1} << n); ++t) {
        TwistParams params;
        for (int i = 0; i < n; ++i)
            if ((t >> i) & 1)
                params.emplace_back(m[i] - 1, 1);
            else
                params.emplace_back(m[i], 0);
        rep.members.push_back({params, ParityVector::from_params(params)});
    }

    const int count = static_cast<int>(rep.members.size());
    std::vector<int> parent(count);
    for (int i = 0; i < count; ++i) parent[i] = i;
    const auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j) {
            FamilyPairResult pr;
            pr.left = i;
            pr.right = j;
            pr.cert = distinguish(cat, rep.members[i].params, rep.members[j].params, seed);
            if (pr.cert.verdict != Verdict::distinct_groups)
                parent[find(i)] = find(j);
            rep.pairs.push_back(std::move(pr));
        }

    std::vector<int> roots;
    for (int i = 0; i < count; ++i) {
        const int r = find(i);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    rep.classes = static_cast<int>(roots.size());
    rep.all_distinct = rep.classes == count;
    return rep;
}

// ---- chi-constraint systems -------------------------------------------

// The linear conditions a parity-adapted basis imposes on chi of the handle
// curves a_1..a_g, b_1..b_g (unknown k: coordinate k of the fiber-summand
// surface).  One global even-overlap condition plus four per twist region.
inline AffineSystem chi_constraint_system(int n, const ParityVector& pv) {
    if (pv.n != n) throw std::invalid_argument("chi_constraint_system: size mismatch");
    const int g = 2 * n;
    const int dim = 2 * g;
    AffineSystem sys(dim);

    const auto coord_a = [&](int i) { return 2 * (i - 1); };
    const auto coord_b = [&](int i) { return 2 * (i - 1) + 1; };

    // chain class B_0 overlaps every handle curve pair evenly
    {
        F2Vec all(dim);
        for (int i = 0; i < dim; ++i) all.set(i, true);
        sys.add(all, 0);
    }

    for (int j = 1; j <= n; ++j) {
        const int ep = pv.block_p(j), eq = pv.block_q(j);
        F2Vec tail(dim);  // handle curves of the later regions
        for (int i = 2 * j + 1; i <= g; ++i) {
            tail.set(coord_a(i), true);
            tail.set(coord_b(i), true);
        }
        F2Vec eb1 = tail;  // image of B_{4(j-1)+1}
        eb1.set(coord_b(2 * j - 1), true);
        eb1.set(coord_b(2 * j), true);
        eb1.set(coord_a(2 * j), true);
        sys.add(eb1, 1 + ep + eq);

        F2Vec eb2 = tail;  // image of B_{4(j-1)+2}
        eb2.set(coord_b(2 * j), true);
        eb2.set(coord_a(2 * j - 1), true);
        eb2.set(coord_a(2 * j), true);
        sys.add(eb2, 1 + ep);

        F2Vec eb3 = tail;  // image of B_{4(j-1)+3}
        eb3.set(coord_b(2 * j), true);
        sys.add(eb3, 1 + ep);

        F2Vec eb4 = tail;  // image of B_{4(j-1)+4}
        eb4.set(coord_a(2 * j), true);
        sys.add(eb4, 1 + ep + eq);
    }
    return sys;
}

// chi values forced on the handle curves: chi(a) = 1+ep+eq, chi(b) = 1+ep
// in each region
inline F2Vec expected_chi_pattern(const ParityVector& pv) {
    const int g = 2 * pv.n;
    F2Vec pat(2 * g);
    for (int j = 1; j <= pv.n; ++j) {
        const int ep = pv.block_p(j), eq = pv.block_q(j);
        const int chi_a = (1 + ep + eq) & 1;
        const int chi_b = (1 + ep) & 1;
        for (int i : {2 * j - 1, 2 * j}) {
            pat.set(2 * (i - 1), chi_a != 0);
            pat.set(2 * (i - 1) + 1, chi_b != 0);
        }
    }
    return pat;
}

}  // namespace monofact
