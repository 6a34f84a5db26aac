#pragma once
// Exact linear algebra over GF(2) for first homology of a closed oriented
// surface, in the symplectic basis (a_1, b_1, ..., a_N, b_N): intersection
// pairing, Dehn-twist transvections, bit-packed matrices, rank tests and a
// small affine solver.  Coordinate 2(i-1) is a_i, coordinate 2(i-1)+1 is b_i.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monofact {

// Bit vector over GF(2).  Fixed capacity of 128 bits, i.e. surfaces up to
// genus 64; dimension is part of the value and all mixed-dimension arithmetic
// throws.
class F2Vec {
public:
    static constexpr int max_bits = 128;

    F2Vec() = default;
    explicit F2Vec(int dim) : dim_(dim) {
        if (dim < 0 || dim > max_bits)
            throw std::invalid_argument("F2Vec: dimension out of range");
    }

    static F2Vec unit(int dim, int index) {
        F2Vec v(dim);
        v.set(index, true);
        return v;
    }

    int dim() const { return dim_; }
    int genus() const { return dim_ / 2; }

    bool bit(int i) const {
        check_index(i);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i, bool value) {
        check_index(i);
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (value)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }

    bool zero() const { return w_[0] == 0 && w_[1] == 0; }
    int popcount() const {
        return std::popcount(w_[0]) + std::popcount(w_[1]);
    }
    std::uint64_t word(int k) const { return w_[k]; }

    // lowest set coordinate, or -1 when zero
    int lowest_bit() const {
        if (w_[0] != 0) return std::countr_zero(w_[0]);
        if (w_[1] != 0) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    F2Vec& operator^=(const F2Vec& o) {
        check_same_dim(o);
        w_[0] ^= o.w_[0];
        w_[1] ^= o.w_[1];
        return *this;
    }
    friend F2Vec operator^(F2Vec a, const F2Vec& b) { return a ^= b; }
    // homology classes add by symmetric difference of coordinates
    friend F2Vec operator+(F2Vec a, const F2Vec& b) { return a ^= b; }

    bool operator==(const F2Vec&) const = default;

    // total order: shorter dimension first, then lexicographic on
    // coordinates with coordinate 0 most significant and 0 < 1
    friend bool operator<(const F2Vec& a, const F2Vec& b) {
        if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
        for (int k = 0; k < 2; ++k) {
            const std::uint64_t d = a.w_[k] ^ b.w_[k];
            if (d != 0) {
                const int i = std::countr_zero(d);
                return !((a.w_[k] >> i) & 1u);
            }
        }
        return false;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= dim_)
            throw std::out_of_range("F2Vec: coordinate index out of range");
    }
    void check_same_dim(const F2Vec& o) const {
        if (dim_ != o.dim_)
            throw std::invalid_argument("F2Vec: dimension mismatch");
    }

    int dim_ = 0;
    std::array<std::uint64_t, 2> w_{0, 0};
};

using HomologyClass = F2Vec;

inline HomologyClass zero_class(int genus) { return HomologyClass(2 * genus); }

// 1-based handle index, as in the curve names a_1, ..., a_N
inline HomologyClass unit_a(int genus, int i) {
    if (i < 1 || i > genus) throw std::out_of_range("unit_a: handle index");
    return HomologyClass::unit(2 * genus, 2 * (i - 1));
}
inline HomologyClass unit_b(int genus, int i) {
    if (i < 1 || i > genus) throw std::out_of_range("unit_b: handle index");
    return HomologyClass::unit(2 * genus, 2 * (i - 1) + 1);
}

inline int parity_of(const F2Vec& v) { return v.popcount() & 1; }

inline int dot(const F2Vec& u, const F2Vec& v) {
    if (u.dim() != v.dim())
        throw std::invalid_argument("dot: dimension mismatch");
    const int c = std::popcount(u.word(0) & v.word(0)) +
                  std::popcount(u.word(1) & v.word(1));
    return c & 1;
}

namespace detail {
constexpr std::uint64_t a_mask = 0x5555555555555555ULL;  // even coordinates
constexpr std::uint64_t b_mask = 0xAAAAAAAAAAAAAAAAULL;  // odd coordinates
}  // namespace detail

// mod-2 algebraic intersection number on a genus-N surface
inline int pairing(const HomologyClass& u, const HomologyClass& v) {
    if (u.dim() != v.dim())
        throw std::invalid_argument("pairing: dimension mismatch");
    if (u.dim() % 2 != 0)
        throw std::invalid_argument("pairing: odd dimension");
    int c = 0;
    for (int k = 0; k < 2; ++k) {
        const std::uint64_t w = v.word(k);
        const std::uint64_t s =
            ((w & detail::a_mask) << 1) | ((w & detail::b_mask) >> 1);
        c += std::popcount(u.word(k) & s);
    }
    return c & 1;
}

// action of the Dehn twist along c on x: x + <x,c> c (either twist direction)
inline HomologyClass transvect(const HomologyClass& c, const HomologyClass& x) {
    return pairing(x, c) ? x + c : x;
}

// Square bit matrix acting on column vectors; row r stored as the mask whose
// dot with x gives coordinate r of the image.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int dim, std::vector<F2Vec> rows) : dim_(dim), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != dim_)
            throw std::invalid_argument("F2Matrix: row count");
        for (const auto& r : rows_)
            if (r.dim() != dim_)
                throw std::invalid_argument("F2Matrix: row dimension");
    }

    static F2Matrix identity(int dim) {
        std::vector<F2Vec> rows;
        rows.reserve(dim);
        for (int i = 0; i < dim; ++i) rows.push_back(F2Vec::unit(dim, i));
        return F2Matrix(dim, std::move(rows));
    }

    static F2Matrix from_columns(int dim, const std::vector<F2Vec>& cols) {
        if (static_cast<int>(cols.size()) != dim)
            throw std::invalid_argument("F2Matrix: column count");
        std::vector<F2Vec> rows(dim, F2Vec(dim));
        for (int c = 0; c < dim; ++c) {
            if (cols[c].dim() != dim)
                throw std::invalid_argument("F2Matrix: column dimension");
            for (int r = 0; r < dim; ++r)
                if (cols[c].bit(r)) rows[r].set(c, true);
        }
        return F2Matrix(dim, std::move(rows));
    }

    int dim() const { return dim_; }
    const F2Vec& row(int r) const { return rows_.at(r); }
    bool entry(int r, int c) const { return rows_.at(r).bit(c); }

    F2Vec column(int c) const {
        F2Vec col(dim_);
        for (int r = 0; r < dim_; ++r)
            if (rows_[r].bit(c)) col.set(r, true);
        return col;
    }

    F2Vec apply(const F2Vec& x) const {
        if (x.dim() != dim_)
            throw std::invalid_argument("F2Matrix::apply: dimension mismatch");
        F2Vec y(dim_);
        for (int r = 0; r < dim_; ++r)
            if (dot(rows_[r], x)) y.set(r, true);
        return y;
    }

    // matrix product: (*this) after rhs
    F2Matrix multiply(const F2Matrix& rhs) const {
        if (dim_ != rhs.dim_)
            throw std::invalid_argument("F2Matrix::multiply: dimension mismatch");
        std::vector<F2Vec> rows(dim_, F2Vec(dim_));
        for (int r = 0; r < dim_; ++r) {
            F2Vec acc(dim_);
            const F2Vec& fr = rows_[r];
            for (int k = 0; k < dim_; ++k)
                if (fr.bit(k)) acc ^= rhs.rows_[k];
            rows[r] = acc;
        }
        return F2Matrix(dim_, std::move(rows));
    }

    int rank() const {
        std::vector<F2Vec> basis;
        for (const auto& r : rows_) {
            F2Vec v = r;
            for (const auto& p : basis)
                if (v.bit(p.lowest_bit())) v ^= p;
            if (!v.zero()) basis.push_back(v);
        }
        return static_cast<int>(basis.size());
    }

    std::optional<F2Matrix> inverse() const {
        std::vector<F2Vec> m = rows_;
        std::vector<F2Vec> inv;
        inv.reserve(dim_);
        for (int i = 0; i < dim_; ++i) inv.push_back(F2Vec::unit(dim_, i));
        for (int col = 0; col < dim_; ++col) {
            int piv = -1;
            for (int r = col; r < dim_; ++r)
                if (m[r].bit(col)) { piv = r; break; }
            if (piv < 0) return std::nullopt;
            std::swap(m[col], m[piv]);
            std::swap(inv[col], inv[piv]);
            for (int r = 0; r < dim_; ++r)
                if (r != col && m[r].bit(col)) {
                    m[r] ^= m[col];
                    inv[r] ^= inv[col];
                }
        }
        return F2Matrix(dim_, std::move(inv));
    }

    bool operator==(const F2Matrix&) const = default;

private:
    int dim_ = 0;
    std::vector<F2Vec> rows_;
};

// rank of a spanning set of classes
inline int rank_of(const std::vector<HomologyClass>& v) {
    std::vector<F2Vec> basis;
    for (const auto& x : v) {
        F2Vec r = x;
        for (const auto& p : basis)
            if (r.bit(p.lowest_bit())) r ^= p;
        if (!r.zero()) basis.push_back(r);
    }
    return static_cast<int>(basis.size());
}

inline bool is_basis(int genus, const std::vector<HomologyClass>& v) {
    if (static_cast<int>(v.size()) != 2 * genus) return false;
    for (const auto& x : v)
        if (x.dim() != 2 * genus) return false;
    return rank_of(v) == 2 * genus;
}

inline bool is_symplectic(int genus, const F2Matrix& m) {
    const int dim = 2 * genus;
    if (m.dim() != dim) return false;
    std::vector<F2Vec> cols;
    cols.reserve(dim);
    for (int c = 0; c < dim; ++c) cols.push_back(m.column(c));
    if (rank_of(cols) != dim) return false;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            const int want = (j == i + 1 && i % 2 == 0) ? 1 : 0;
            if (pairing(cols[i], cols[j]) != want) return false;
        }
    return true;
}

// Invertible pairing-preserving map on H_1 of a genus-N surface; the
// constructor rejects anything that is not symplectic.
class SymplecticMap {
public:
    SymplecticMap(int genus, F2Matrix m) : genus_(genus), m_(std::move(m)) {
        if (!is_symplectic(genus_, m_))
            throw std::invalid_argument("SymplecticMap: matrix is not symplectic");
    }

    static SymplecticMap identity(int genus) {
        return SymplecticMap(genus, F2Matrix::identity(2 * genus));
    }

    int genus() const { return genus_; }
    int dim() const { return 2 * genus_; }
    const F2Matrix& matrix() const { return m_; }

    HomologyClass apply(const HomologyClass& x) const { return m_.apply(x); }

    SymplecticMap inverse() const {
        auto inv = m_.inverse();
        // invertibility is part of the class invariant
        return SymplecticMap(genus_, std::move(*inv));
    }

    bool is_identity() const { return m_ == F2Matrix::identity(dim()); }

    bool operator==(const SymplecticMap&) const = default;

private:
    int genus_;
    F2Matrix m_;
};

// f after g
inline SymplecticMap compose(const SymplecticMap& f, const SymplecticMap& g) {
    if (f.genus() != g.genus())
        throw std::invalid_argument("compose: genus mismatch");
    return SymplecticMap(f.genus(), f.matrix().multiply(g.matrix()));
}

// matrix of the transvection x -> x + <x,c> c
inline SymplecticMap transvection_map(const HomologyClass& c) {
    if (c.dim() % 2 != 0)
        throw std::invalid_argument("transvection_map: odd dimension");
    const int dim = c.dim();
    F2Vec sc(dim);
    for (int i = 0; i < dim; ++i) {
        const int partner = (i % 2 == 0) ? i + 1 : i - 1;
        if (c.bit(partner)) sc.set(i, true);
    }
    std::vector<F2Vec> rows;
    rows.reserve(dim);
    for (int r = 0; r < dim; ++r) {
        F2Vec row = F2Vec::unit(dim, r);
        if (c.bit(r)) row ^= sc;
        rows.push_back(row);
    }
    return SymplecticMap(dim / 2, F2Matrix(dim, std::move(rows)));
}

// ---- affine systems over GF(2) ----------------------------------------

// running row-echelon accumulator for equations <coeffs, x> = rhs
class F2Echelon {
public:
    enum class AddResult { added, redundant, contradiction };

    explicit F2Echelon(int dim) : dim_(dim) {}

    AddResult add(F2Vec coeffs, int rhs) {
        if (coeffs.dim() != dim_)
            throw std::invalid_argument("F2Echelon: dimension mismatch");
        rhs &= 1;
        for (const auto& [c, r] : rows_)
            if (coeffs.bit(c.lowest_bit())) {
                coeffs ^= c;
                rhs ^= r;
            }
        if (coeffs.zero()) {
            return rhs == 0 ? AddResult::redundant : AddResult::contradiction;
        }
        rows_.emplace_back(coeffs, rhs);
        return AddResult::added;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }

private:
    int dim_;
    std::vector<std::pair<F2Vec, int>> rows_;
};

struct AffineSystem {
    int dim = 0;
    std::vector<std::pair<F2Vec, int>> equations;

    explicit AffineSystem(int dim = 0) : dim(dim) {}

    void add(const F2Vec& coeffs, int rhs) {
        if (coeffs.dim() != dim)
            throw std::invalid_argument("AffineSystem::add: dimension mismatch");
        equations.emplace_back(coeffs, rhs & 1);
    }
};

struct AffineSolution {
    bool consistent = false;
    int free_dim = 0;                   // 0 means the solution is unique
    std::optional<F2Vec> least;         // lexicographically least solution

    bool unique() const { return consistent && free_dim == 0; }
};

inline AffineSolution solve_affine(const AffineSystem& sys) {
    F2Echelon ech(sys.dim);
    for (const auto& [c, r] : sys.equations)
        if (ech.add(c, r) == F2Echelon::AddResult::contradiction)
            return AffineSolution{false, 0, std::nullopt};

    AffineSolution sol;
    sol.consistent = true;
    sol.free_dim = sys.dim - ech.rank();

    // fix coordinates greedily from coordinate 0 upward: prefer 0, fall back
    // to 1 when 0 is inconsistent; the result is the lex-least solution
    F2Echelon probe = ech;
    F2Vec least(sys.dim);
    for (int i = 0; i < sys.dim; ++i) {
        const F2Vec ei = F2Vec::unit(sys.dim, i);
        if (probe.add(ei, 0) == F2Echelon::AddResult::contradiction) {
            least.set(i, true);
            if (probe.add(ei, 1) == F2Echelon::AddResult::contradiction)
                throw std::logic_error("solve_affine: probe contradiction");
        }
    }
    sol.least = least;
    return sol;
}

// ---- text forms --------------------------------------------------------

// "g5:0101000000": genus prefix then one character per coordinate
inline std::string class_to_string(const HomologyClass& h) {
    if (h.dim() % 2 != 0)
        throw std::invalid_argument("class_to_string: odd dimension");
    std::string s = "g" + std::to_string(h.genus()) + ":";
    for (int i = 0; i < h.dim(); ++i) s.push_back(h.bit(i) ? '1' : '0');
    return s;
}

// "a1+b2" style sum of unit curves, "0" for the zero class
inline std::string class_to_labels(const HomologyClass& h) {
    if (h.zero()) return "0";
    std::string s;
    for (int i = 0; i < h.dim(); ++i) {
        if (!h.bit(i)) continue;
        if (!s.empty()) s.push_back('+');
        s += (i % 2 == 0 ? "a" : "b") + std::to_string(i / 2 + 1);
    }
    return s;
}

// accepts "g5:0101000000", "a1+b2@5" and "0@5"
inline HomologyClass parse_class(const std::string& text) {
    const auto bad = [&](const std::string& why) {
        return std::invalid_argument("parse_class: " + why + " in '" + text + "'");
    };
    if (text.size() >= 2 && text[0] == 'g') {
        const auto colon = text.find(':');
        if (colon == std::string::npos) throw bad("missing ':'");
        int genus = 0;
        try {
            genus = std::stoi(text.substr(1, colon - 1));
        } catch (const std::exception&) {
            throw bad("bad genus prefix");
        }
        if (genus < 1 || genus > HomologyClass::max_bits / 2)
            throw bad("genus out of range");
        const std::string bits = text.substr(colon + 1);
        if (static_cast<int>(bits.size()) != 2 * genus)
            throw bad("coordinate count");
        HomologyClass h(2 * genus);
        for (int i = 0; i < 2 * genus; ++i) {
            if (bits[i] == '1')
                h.set(i, true);
            else if (bits[i] != '0')
                throw bad("coordinate must be 0 or 1");
        }
        return h;
    }
    const auto at = text.rfind('@');
    if (at == std::string::npos) throw bad("missing '@genus'");
    int genus = 0;
    try {
        genus = std::stoi(text.substr(at + 1));
    } catch (const std::exception&) {
        throw bad("bad genus suffix");
    }
    if (genus < 1 || genus > HomologyClass::max_bits / 2)
        throw bad("genus out of range");
    HomologyClass h(2 * genus);
    const std::string body = text.substr(0, at);
    if (body == "0") return h;
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto next = body.find('+', pos);
        if (next == std::string::npos) next = body.size();
        const std::string tok = body.substr(pos, next - pos);
        if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'b'))
            throw bad("bad curve token '" + tok + "'");
        int idx = 0;
        try {
            idx = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw bad("bad curve index '" + tok + "'");
        }
        if (idx < 1 || idx > genus) throw bad("curve index out of range");
        const int coord = 2 * (idx - 1) + (tok[0] == 'b' ? 1 : 0);
        if (h.bit(coord)) throw bad("repeated curve '" + tok + "'");
        h.set(coord, true);
        pos = next + 1;
    }
    return h;
}

}  // namespace monofact
