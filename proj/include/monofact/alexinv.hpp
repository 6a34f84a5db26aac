#pragma once
// Abelian invariants of the twisted knots: exact integer Seifert matrices,
// block sums for connected sums, the Laurent determinant det(V - t V^T),
// the symmetrized Alexander polynomial, the presentation of the second
// Alexander module, and the fibration data (genera, critical point count)
// of the surgered manifolds.

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace monofact {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in t with exact integer coefficients
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(BigInt v) { return term(0, std::move(v)); }
    static LaurentPoly term(int exp, BigInt coeff) {
        LaurentPoly p;
        p.add_term(exp, coeff);
        return p;
    }

    bool zero() const { return c_.empty(); }
    const std::map<int, BigInt>& coeffs() const { return c_; }

    BigInt coeff(int exp) const {
        const auto it = c_.find(exp);
        return it == c_.end() ? BigInt(0) : it->second;
    }

    void add_term(int exp, const BigInt& v) {
        if (v == 0) return;
        auto [it, fresh] = c_.emplace(exp, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    int min_exp() const {
        if (zero()) throw std::domain_error("LaurentPoly: zero polynomial");
        return c_.begin()->first;
    }
    int max_exp() const {
        if (zero()) throw std::domain_error("LaurentPoly: zero polynomial");
        return c_.rbegin()->first;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
        return r;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_.emplace(e + k, v);
        return r;
    }

    // t -> 1/t
    LaurentPoly reciprocal() const {
        LaurentPoly r;
        for (const auto& [e, v] : c_) r.c_.emplace(-e, v);
        return r;
    }

    BigInt at_one() const {
        BigInt s = 0;
        for (const auto& [e, v] : c_) s += v;
        return s;
    }

    LaurentPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative power");
        LaurentPoly r = constant(1);
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    bool operator==(const LaurentPoly&) const = default;

    // "t^-2 - 2*t^-1 + 3 - 2*t + t^2", exponents ascending
    std::string to_text() const {
        if (zero()) return "0";
        std::string s;
        for (const auto& [e, v] : c_) {
            const bool neg = v < 0;
            BigInt mag = neg ? BigInt(-v) : v;
            if (s.empty())
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            const std::string m = mag.str();
            if (e == 0) {
                s += m;
            } else {
                if (m != "1") s += m + "*";
                s += "t";
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    std::map<int, BigInt> c_;  // exponent -> nonzero coefficient
};

// dense square matrix of exact integers
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, BigInt(0)) {
        if (n < 1 || n > 24)
            throw std::invalid_argument("IntMatrix: size out of range");
    }

    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
        IntMatrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.n_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.n_)
                throw std::invalid_argument("IntMatrix: ragged rows");
            for (int j = 0; j < m.n_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int size() const { return n_; }
    BigInt& at(int i, int j) { return a_.at(static_cast<std::size_t>(i) * n_ + j); }
    const BigInt& at(int i, int j) const {
        return a_.at(static_cast<std::size_t>(i) * n_ + j);
    }

    IntMatrix transpose() const {
        IntMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const IntMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<BigInt> a_;
};

// Seifert matrix of the twist-family knot: the square-knot matrix with the
// middle 2x2 block carrying the n extra full twists
inline IntMatrix stallings_knot_seifert(long long n) {
    return IntMatrix::from_rows({{1, -1, 0, 0},
                                 {0, n + 1, -n, 0},
                                 {0, -n, n - 1, 0},
                                 {0, 0, 1, -1}});
}

// block-diagonal sum; Seifert matrix of the connected sum of the summands
inline IntMatrix connected_sum(const std::vector<IntMatrix>& parts) {
    int total = 0;
    for (const auto& p : parts) total += p.size();
    if (total == 0) throw std::invalid_argument("connected_sum: no summands");
    IntMatrix m(total);
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.size(); ++i)
            for (int j = 0; j < p.size(); ++j) m.at(off + i, off + j) = p.at(i, j);
        off += p.size();
    }
    return m;
}

namespace detail {

// exact determinant of a matrix of Laurent polynomials by minor expansion
// over column subsets (no division)
inline LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n > 24) throw std::invalid_argument("laurent_det: size out of range");
    std::map<std::uint32_t, LaurentPoly> prev;
    prev[0] = LaurentPoly::constant(1);
    for (int r = 0; r < n; ++r) {
        std::map<std::uint32_t, LaurentPoly> next;
        for (const auto& [subset, minor] : prev) {
            if (minor.zero()) continue;
            for (int j = 0; j < n; ++j) {
                if ((subset >> j) & 1u) continue;
                const LaurentPoly& entry = m[r][j];
                if (entry.zero()) continue;
                // sign from the column's position among those already used
                const int above = std::popcount(subset >> (j + 1));
                LaurentPoly contrib = minor * entry;
                if (above & 1) contrib = -contrib;
                next[subset | (std::uint32_t{1} << j)] += contrib;
            }
        }
        prev = std::move(next);
    }
    const auto it = prev.find(n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
    return it == prev.end() ? LaurentPoly() : it->second;
}

}  // namespace detail

// det(V - t V^T), no normalization
inline LaurentPoly alexander_raw(const IntMatrix& v) {
    const int n = v.size();
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentPoly e = LaurentPoly::term(0, v.at(i, j));
            e += LaurentPoly::term(1, -v.at(j, i));
            m[i][j] = e;
        }
    return detail::laurent_det(m);
}

// Symmetrized Alexander polynomial: centered so that p = p(1/t), with the
// sign fixed by p(1) > 0 (leading coefficient > 0 if p(1) = 0).  For a knot
// Seifert matrix this gives the normalization p(1) = 1.
inline LaurentPoly alexander(const IntMatrix& v) {
    LaurentPoly p = alexander_raw(v);
    if (p.zero())
        throw std::domain_error("alexander: determinant vanishes (not a knot Seifert matrix?)");
    const int lo = p.min_exp(), hi = p.max_exp();
    if ((lo + hi) % 2 != 0)
        throw std::domain_error("alexander: degree span is odd, cannot center");
    p = p.shifted(-(lo + hi) / 2);
    if (p != p.reciprocal())
        throw std::domain_error("alexander: centered polynomial is not reciprocal");
    const BigInt s = p.at_one();
    if (s < 0 || (s == 0 && p.coeff(p.max_exp()) < 0)) p = -p;
    return p;
}

// presentation matrix of the second Alexander module of the n-twist knot
inline std::array<std::array<LaurentPoly, 2>, 2> second_module_presentation(long long n) {
    LaurentPoly delta = LaurentPoly::term(2, 1) + LaurentPoly::term(1, -1) +
                        LaurentPoly::constant(1);
    std::array<std::array<LaurentPoly, 2>, 2> m;
    m[0][0] = delta;
    m[0][1] = LaurentPoly::term(1, n);
    m[1][0] = LaurentPoly();
    m[1][1] = delta;
    return m;
}

// numerical data of the surgered fibration with n twist regions
struct FibrationData {
    int knot_genus = 0;        // genus of the fiber-summand knot: 2n
    int fiber_genus = 0;       // genus of the fibration fiber: 4n+1
    long long critical_points = 0;  // 16n+24 vanishing cycles

    bool operator==(const FibrationData&) const = default;
};

inline FibrationData fibration_data(int n) {
    if (n < 1) throw std::invalid_argument("fibration_data: need n >= 1");
    return FibrationData{2 * n, 4 * n + 1, 16LL * n + 24};
}

}  // namespace monofact
