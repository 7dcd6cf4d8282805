#pragma once

/**
 * @file linalg.hpp
 * @brief Exact linear algebra over prime fields and additive subgroups of
 *        finite rings.
 *
 * FpMatrix / FpSpan implement reduced row echelon forms over F_p; they
 * back the linear property-checker backend. Subgroup is the common
 * carrier for J(R), its powers and socles: an echelonized F_p-subspace
 * when the ring is an F_p-algebra, an explicit member list otherwise.
 */

#include <cassert>
#include <cstdint>
#include <vector>

#include "ring.hpp"

namespace ringforge {

inline uint32_t inv_mod(uint32_t a, uint32_t p) {
    // p is a small prime, so Fermat is fine.
    uint64_t r = 1, b = a % p;
    for (uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<uint32_t>(r);
}

/// Dense matrix over F_p, row major.
struct FpMatrix {
    uint32_t p = 2;
    size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    FpMatrix() = default;
    FpMatrix(uint32_t p_, size_t r, size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}

    uint32_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    uint32_t at(size_t r, size_t c) const { return a[r * cols + c]; }

    static FpMatrix identity(uint32_t p, size_t n) {
        FpMatrix m(p, n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// Horizontal concatenation [A | B].
    static FpMatrix augment(const FpMatrix& A, const FpMatrix& B) {
        assert(A.rows == B.rows && A.p == B.p);
        FpMatrix m(A.p, A.rows, A.cols + B.cols);
        for (size_t r = 0; r < A.rows; ++r) {
            for (size_t c = 0; c < A.cols; ++c) m.at(r, c) = A.at(r, c);
            for (size_t c = 0; c < B.cols; ++c) m.at(r, A.cols + c) = B.at(r, c);
        }
        return m;
    }

    /// Vertical concatenation.
    static FpMatrix stack(const FpMatrix& A, const FpMatrix& B) {
        assert(A.cols == B.cols && A.p == B.p);
        FpMatrix m(A.p, A.rows + B.rows, A.cols);
        std::copy(A.a.begin(), A.a.end(), m.a.begin());
        std::copy(B.a.begin(), B.a.end(), m.a.begin() + A.a.size());
        return m;
    }

    bool operator==(const FpMatrix&) const = default;
};

/// In-place reduced row echelon form; returns the rank. Deterministic:
/// pivots are chosen left to right, first nonzero row wins.
inline size_t echelonize(FpMatrix& M) {
    size_t rank = 0;
    for (size_t col = 0; col < M.cols && rank < M.rows; ++col) {
        size_t piv = rank;
        while (piv < M.rows && M.at(piv, col) == 0) ++piv;
        if (piv == M.rows) continue;
        if (piv != rank)
            for (size_t c = 0; c < M.cols; ++c)
                std::swap(M.at(piv, c), M.at(rank, c));
        uint32_t inv = inv_mod(M.at(rank, col), M.p);
        for (size_t c = col; c < M.cols; ++c)
            M.at(rank, c) = static_cast<uint32_t>(
                static_cast<uint64_t>(M.at(rank, c)) * inv % M.p);
        for (size_t r = 0; r < M.rows; ++r) {
            if (r == rank) continue;
            uint32_t f = M.at(r, col);
            if (f == 0) continue;
            for (size_t c = col; c < M.cols; ++c) {
                uint64_t v = M.at(r, c) + static_cast<uint64_t>(M.p - f) * M.at(rank, c);
                M.at(r, c) = static_cast<uint32_t>(v % M.p);
            }
        }
        ++rank;
    }
    return rank;
}

inline size_t rank_of(FpMatrix M) { return echelonize(M); }

/// Row space of a set of F_p vectors kept in reduced echelon form.
/// Insertion order does not matter: the final form is canonical, so two
/// spans are equal iff their row lists are equal.
struct FpSpan {
    uint32_t p = 2;
    size_t ambient = 0;
    std::vector<std::vector<uint32_t>> rows;  // reduced echelon, pivot cols increasing

    FpSpan() = default;
    FpSpan(uint32_t p_, size_t ambient_) : p(p_), ambient(ambient_) {}

    size_t dim() const { return rows.size(); }

    uint64_t size() const {
        uint64_t s = 1;
        for (size_t i = 0; i < rows.size(); ++i) s *= p;
        return s;
    }

    /// Reduces v against the current rows; leaves the residue in v.
    void reduce(std::vector<uint32_t>& v) const {
        for (const auto& row : rows) {
            size_t piv = pivot_of(row);
            uint32_t f = v[piv];
            if (f == 0) continue;
            for (size_t c = piv; c < ambient; ++c)
                v[c] = static_cast<uint32_t>(
                    (v[c] + static_cast<uint64_t>(p - f) * row[c]) % p);
        }
    }

    bool contains(std::vector<uint32_t> v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
    }

    /// Inserts v; returns true if the span grew.
    bool insert(std::vector<uint32_t> v) {
        reduce(v);
        size_t piv = ambient;
        for (size_t c = 0; c < ambient; ++c)
            if (v[c]) { piv = c; break; }
        if (piv == ambient) return false;
        uint32_t inv = inv_mod(v[piv], p);
        for (size_t c = piv; c < ambient; ++c)
            v[c] = static_cast<uint32_t>(static_cast<uint64_t>(v[c]) * inv % p);
        // Back-substitute into existing rows, then place v to keep the
        // pivot columns strictly increasing.
        for (auto& row : rows) {
            uint32_t f = row[piv];
            if (f == 0) continue;
            for (size_t c = piv; c < ambient; ++c)
                row[c] = static_cast<uint32_t>(
                    (row[c] + static_cast<uint64_t>(p - f) * v[c]) % p);
        }
        auto it = rows.begin();
        while (it != rows.end() && pivot_of(*it) < piv) ++it;
        rows.insert(it, std::move(v));
        return true;
    }

    bool leq(const FpSpan& other) const {
        if (ambient != other.ambient) throw Error("subspace dimension mismatch");
        for (const auto& row : rows)
            if (!other.contains(row)) return false;
        return true;
    }

    bool operator==(const FpSpan&) const = default;

    /// All members, in lexicographic order of the coefficient pattern on
    /// the basis rows. Intended for small spans.
    std::vector<std::vector<uint32_t>> members() const {
        std::vector<std::vector<uint32_t>> out;
        uint64_t total = size();
        out.reserve(total);
        for (uint64_t idx = 0; idx < total; ++idx) {
            std::vector<uint32_t> v(ambient, 0);
            uint64_t rest = idx;
            for (size_t r = rows.size(); r-- > 0;) {
                uint32_t digit = static_cast<uint32_t>(rest % p);
                rest /= p;
                if (digit)
                    for (size_t c = 0; c < ambient; ++c)
                        v[c] = static_cast<uint32_t>(
                            (v[c] + static_cast<uint64_t>(digit) * rows[r][c]) % p);
            }
            out.push_back(std::move(v));
        }
        return out;
    }

  private:
    static size_t pivot_of(const std::vector<uint32_t>& row) {
        for (size_t c = 0; c < row.size(); ++c)
            if (row[c]) return c;
        return row.size();
    }
};

/// Null space of M as a canonical (echelonized) span.
inline FpSpan kernel_span(FpMatrix M) {
    const size_t n = M.cols;
    echelonize(M);
    std::vector<size_t> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (size_t r = 0; r < M.rows; ++r) {
        size_t c = 0;
        while (c < n && M.at(r, c) == 0) ++c;
        if (c == n) break;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    FpSpan ker(M.p, n);
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(n, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = (M.p - M.at(r, free)) % M.p;
        ker.insert(std::move(v));
    }
    return ker;
}

// ---------------------------------------------------------------------------
// Additive subgroups of a finite ring.

/// Additive subgroup of a ring: an F_p-subspace (echelonized basis) when
/// the ring is an F_p-algebra, otherwise an explicit sorted member list.
struct Subgroup {
    enum class Repr { fp_span, members };
    Repr repr = Repr::members;
    FpSpan span;                    // fp_span case
    std::vector<uint64_t> members;  // element indices, sorted (members case)

    static Subgroup from_span(FpSpan s) {
        Subgroup g;
        g.repr = Repr::fp_span;
        g.span = std::move(s);
        return g;
    }

    static Subgroup zero_of(const FiniteRing& R) {
        if (R.is_fp_algebra())
            return from_span(FpSpan(R.additive.fp_prime(), R.dim()));
        Subgroup g;
        g.members = {0};
        return g;
    }

    uint64_t size() const {
        return repr == Repr::fp_span ? span.size() : members.size();
    }

    bool is_zero() const { return size() == 1; }

    bool contains(const FiniteRing& R, const RingElement& x) const {
        if (repr == Repr::fp_span) return span.contains(x.coeffs);
        return std::binary_search(members.begin(), members.end(), R.index_of(x));
    }

    bool leq(const FiniteRing& R, const Subgroup& other) const {
        if (repr == Repr::fp_span && other.repr == Repr::fp_span)
            return span.leq(other.span);
        for (uint64_t idx : member_indices(R))
            if (!other.contains(R, R.element_at(idx))) return false;
        return true;
    }

    bool equal(const FiniteRing& R, const Subgroup& other) const {
        if (size() != other.size()) return false;
        return leq(R, other) && other.leq(R, *this);
    }

    /// Element indices of all members, sorted ascending.
    std::vector<uint64_t> member_indices(const FiniteRing& R) const {
        if (repr == Repr::members) return members;
        std::vector<uint64_t> out;
        out.reserve(span.size());
        for (auto& v : span.members()) out.push_back(R.index_of(RingElement(v)));
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// Additive closure of a generating set, as a Subgroup of R. Uses the
/// echelon path for F_p-algebras and explicit closure otherwise.
inline Subgroup subgroup_closure(const FiniteRing& R,
                                 const std::vector<RingElement>& gens) {
    if (R.is_fp_algebra()) {
        FpSpan s(R.additive.fp_prime(), R.dim());
        for (const auto& g : gens) s.insert(g.coeffs);
        return Subgroup::from_span(std::move(s));
    }
    std::vector<uint64_t> work = {0};
    std::vector<bool> seen(R.order(), false);
    seen[0] = true;
    for (const auto& g : gens) {
        uint64_t idx = R.index_of(g);
        if (!seen[idx]) { seen[idx] = true; work.push_back(idx); }
    }
    // Close under addition of generators; inverses follow in a finite group.
    for (size_t head = 0; head < work.size(); ++head) {
        RingElement x = R.element_at(work[head]);
        for (const auto& g : gens) {
            uint64_t idx = R.index_of(R.add(x, g));
            if (!seen[idx]) { seen[idx] = true; work.push_back(idx); }
        }
    }
    std::sort(work.begin(), work.end());
    Subgroup out;
    out.members = std::move(work);
    return out;
}

// ---------------------------------------------------------------------------
// Multiplication operators as F_p matrices.

/// Matrix of left (x -> a x) or right (x -> x a) multiplication in the
/// additive generator basis; column j holds the coefficients of a*g_j
/// (resp. g_j*a). Only defined for F_p-algebras.
enum class Side { left, right };

inline FpMatrix operator_matrix(const FiniteRing& R, const RingElement& a, Side side) {
    if (!R.is_fp_algebra())
        throw BackendUnavailable("operator matrices need an F_p-algebra");
    const uint32_t p = R.additive.fp_prime();
    const size_t n = R.dim();
    FpMatrix M(p, n, n);
    for (size_t j = 0; j < n; ++j) {
        RingElement gj = R.basis_element(j);
        RingElement col = side == Side::left ? R.multiply(a, gj) : R.multiply(gj, a);
        for (size_t i = 0; i < n; ++i) M.at(i, j) = col.coeffs[i];
    }
    return M;
}

/// Null space as a Subgroup; ker L_a is the right annihilator of a and
/// ker R_a the left annihilator.
inline Subgroup kernel_basis(const FpMatrix& M) {
    return Subgroup::from_span(kernel_span(M));
}

inline bool subspace_leq(const Subgroup& U, const Subgroup& V) {
    if (U.repr != Subgroup::Repr::fp_span || V.repr != Subgroup::Repr::fp_span)
        throw BackendUnavailable("subspace_leq needs F_p spans");
    return U.span.leq(V.span);
}

}  // namespace ringforge
