#pragma once

/**
 * @file ring.hpp
 * @brief Universal finite-ring carrier: additive model, elements, structure
 *        constants, validation and the basic constructions (opposite ring,
 *        direct product).
 *
 * A finite ring is stored as an additive group Z/m1 + ... + Z/mt together
 * with structure constants c[i][j] giving the product of the i-th and j-th
 * additive generators, plus a distinguished identity element. Everything
 * else (multiplication of arbitrary elements, validation, element
 * enumeration) is derived from that data. Arithmetic is exact; there is no
 * floating point anywhere in the library.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringforge {

/// Library-level error, thrown on unusable inputs.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested backend cannot serve the given ring (e.g. Fp linear algebra
/// on a ring whose additive group is not elementary abelian).
struct BackendUnavailable : Error {
    using Error::Error;
};

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Additive group of the ring: a direct sum of cyclic groups Z/m_i.
struct AdditiveModel {
    std::vector<uint32_t> moduli;

    size_t dim() const { return moduli.size(); }

    uint64_t order() const {
        uint64_t n = 1;
        for (uint32_t m : moduli) n *= m;
        return n;
    }

    /// True iff all moduli equal one prime p, i.e. the ring is an algebra
    /// over the field F_p and the fast linear backend applies.
    bool is_fp_algebra() const {
        if (moduli.empty()) return false;
        uint32_t p = moduli.front();
        if (!is_prime(p)) return false;
        return std::all_of(moduli.begin(), moduli.end(),
                           [p](uint32_t m) { return m == p; });
    }

    uint32_t fp_prime() const {
        if (!is_fp_algebra()) throw BackendUnavailable("not an F_p-algebra");
        return moduli.front();
    }

    bool operator==(const AdditiveModel&) const = default;
};

/// Element of a finite ring: one residue per additive generator,
/// always kept reduced modulo the corresponding modulus.
struct RingElement {
    std::vector<uint32_t> coeffs;

    RingElement() = default;
    explicit RingElement(std::vector<uint32_t> c) : coeffs(std::move(c)) {}

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(),
                           [](uint32_t a) { return a == 0; });
    }

    bool operator==(const RingElement&) const = default;
    auto operator<=>(const RingElement&) const = default;
};

/// One violated ring law found by validate().
struct Violation {
    enum class Kind {
        shape,          ///< moduli / constants / one sizes disagree
        range,          ///< an entry is not reduced modulo its modulus
        bilinearity,    ///< m_i * c[i][j] != 0 or m_j * c[i][j] != 0
        identity,       ///< 1 * g_i != g_i or g_i * 1 != g_i
        associativity,  ///< (g_i g_j) g_k != g_i (g_j g_k)
        trivial,        ///< 1 == 0
    };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/**
 * Finite ring with identity, given by structure constants over its
 * additive group. Immutable after construction by convention: all
 * operations on rings in this library are pure functions, so validated
 * rings are safe to share across threads.
 */
struct FiniteRing {
    AdditiveModel additive;
    /// constants[i][j] = product g_i * g_j as a coefficient tuple.
    std::vector<std::vector<RingElement>> constants;
    RingElement one;
    /// Optional display names for the additive generators ("x_g", normal
    /// words, ...). Empty means g1..gt.
    std::vector<std::string> labels;

    size_t dim() const { return additive.dim(); }
    uint64_t order() const { return additive.order(); }
    bool is_fp_algebra() const { return additive.is_fp_algebra(); }

    RingElement zero() const {
        return RingElement(std::vector<uint32_t>(dim(), 0));
    }

    RingElement basis_element(size_t i) const {
        RingElement e = zero();
        e.coeffs[i] = 1 % additive.moduli[i];
        return e;
    }

    std::string label(size_t i) const {
        if (i < labels.size() && !labels[i].empty()) return labels[i];
        return "g" + std::to_string(i + 1);
    }

    RingElement reduce(const std::vector<int64_t>& raw) const {
        RingElement e = zero();
        for (size_t i = 0; i < dim(); ++i) {
            int64_t m = additive.moduli[i];
            int64_t v = raw[i] % m;
            if (v < 0) v += m;
            e.coeffs[i] = static_cast<uint32_t>(v);
        }
        return e;
    }

    RingElement add(const RingElement& x, const RingElement& y) const {
        RingElement e = zero();
        for (size_t i = 0; i < dim(); ++i)
            e.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % additive.moduli[i];
        return e;
    }

    RingElement neg(const RingElement& x) const {
        RingElement e = zero();
        for (size_t i = 0; i < dim(); ++i)
            e.coeffs[i] = (additive.moduli[i] - x.coeffs[i]) % additive.moduli[i];
        return e;
    }

    RingElement sub(const RingElement& x, const RingElement& y) const {
        return add(x, neg(y));
    }

    RingElement scalar_mul(int64_t k, const RingElement& x) const {
        RingElement e = zero();
        for (size_t i = 0; i < dim(); ++i) {
            int64_t m = additive.moduli[i];
            int64_t kk = k % m;
            if (kk < 0) kk += m;
            e.coeffs[i] = static_cast<uint32_t>(
                (static_cast<uint64_t>(kk) * x.coeffs[i]) % m);
        }
        return e;
    }

    /// Bilinear extension of the structure constants.
    RingElement multiply(const RingElement& x, const RingElement& y) const {
        const size_t t = dim();
        RingElement acc = zero();
        for (size_t i = 0; i < t; ++i) {
            if (x.coeffs[i] == 0) continue;
            for (size_t j = 0; j < t; ++j) {
                if (y.coeffs[j] == 0) continue;
                const uint64_t s = static_cast<uint64_t>(x.coeffs[i]) * y.coeffs[j];
                const RingElement& c = constants[i][j];
                for (size_t k = 0; k < t; ++k) {
                    const uint64_t m = additive.moduli[k];
                    acc.coeffs[k] = static_cast<uint32_t>(
                        (acc.coeffs[k] + (s % m) * c.coeffs[k]) % m);
                }
            }
        }
        return acc;
    }

    RingElement pow(const RingElement& x, uint64_t e) const {
        RingElement r = one;
        RingElement b = x;
        while (e > 0) {
            if (e & 1) r = multiply(r, b);
            b = multiply(b, b);
            e >>= 1;
        }
        return r;
    }

    /// Additive order of 1, i.e. the characteristic of the ring.
    uint64_t characteristic() const {
        uint64_t c = 1;
        for (size_t i = 0; i < dim(); ++i) {
            uint64_t m = additive.moduli[i];
            uint64_t o = m / std::gcd<uint64_t>(m, one.coeffs[i]);
            c = std::lcm(c, o);
        }
        return c;
    }

    // Elements are enumerated in lexicographic order on coefficient
    // tuples; the first coefficient is the most significant digit. All
    // "first witness" guarantees in this library refer to this order.
    // Rank 0 is always the zero element.

    uint64_t index_of(const RingElement& x) const {
        uint64_t idx = 0;
        for (size_t i = 0; i < dim(); ++i)
            idx = idx * additive.moduli[i] + x.coeffs[i];
        return idx;
    }

    RingElement element_at(uint64_t idx) const {
        RingElement e = zero();
        for (size_t i = dim(); i-- > 0;) {
            e.coeffs[i] = static_cast<uint32_t>(idx % additive.moduli[i]);
            idx /= additive.moduli[i];
        }
        return e;
    }
};

namespace detail {
inline std::string element_brief(const FiniteRing& R, const RingElement& x) {
    std::string s = "(";
    for (size_t i = 0; i < x.coeffs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x.coeffs[i]);
    }
    s += ")";
    (void)R;
    return s;
}
}  // namespace detail

/// Checks every ring law the rest of the library assumes. A ring is
/// usable only if the report is empty. Shape and range problems abort the
/// scan early since the arithmetic below them would be meaningless.
inline ValidationReport validate(const FiniteRing& R) {
    ValidationReport rep;
    const size_t t = R.dim();

    if (t == 0) {
        rep.violations.push_back({Violation::Kind::shape, "no additive generators"});
        return rep;
    }
    for (size_t i = 0; i < t; ++i) {
        if (R.additive.moduli[i] < 2) {
            rep.violations.push_back(
                {Violation::Kind::shape,
                 "modulus m" + std::to_string(i + 1) + " must be >= 2"});
            return rep;
        }
    }
    if (R.order() > (1u << 16)) {
        rep.violations.push_back(
            {Violation::Kind::shape, "ring order exceeds 2^16"});
        return rep;
    }
    if (R.constants.size() != t || R.one.coeffs.size() != t) {
        rep.violations.push_back(
            {Violation::Kind::shape, "constants/one shape disagrees with moduli"});
        return rep;
    }
    for (size_t i = 0; i < t; ++i) {
        if (R.constants[i].size() != t) {
            rep.violations.push_back(
                {Violation::Kind::shape,
                 "constants row " + std::to_string(i + 1) + " has wrong length"});
            return rep;
        }
        for (size_t j = 0; j < t; ++j)
            if (R.constants[i][j].coeffs.size() != t) {
                rep.violations.push_back(
                    {Violation::Kind::shape,
                     "constant c[" + std::to_string(i + 1) + "][" +
                         std::to_string(j + 1) + "] has wrong length"});
                return rep;
            }
    }

    auto in_range = [&](const RingElement& x) {
        for (size_t k = 0; k < t; ++k)
            if (x.coeffs[k] >= R.additive.moduli[k]) return false;
        return true;
    };
    if (!in_range(R.one))
        rep.violations.push_back({Violation::Kind::range, "identity not reduced"});
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j)
            if (!in_range(R.constants[i][j]))
                rep.violations.push_back(
                    {Violation::Kind::range,
                     "c[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                         "] not reduced"});
    if (!rep.ok()) return rep;

    // m_i * c[i][j] = 0 and m_j * c[i][j] = 0 componentwise; without this
    // the bilinear extension would be ill-defined.
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j) {
            const RingElement& c = R.constants[i][j];
            for (size_t k = 0; k < t; ++k) {
                uint64_t m = R.additive.moduli[k];
                if ((static_cast<uint64_t>(R.additive.moduli[i]) * c.coeffs[k]) % m ||
                    (static_cast<uint64_t>(R.additive.moduli[j]) * c.coeffs[k]) % m) {
                    rep.violations.push_back(
                        {Violation::Kind::bilinearity,
                         "m*c[" + std::to_string(i + 1) + "][" +
                             std::to_string(j + 1) + "] != 0 in component " +
                             std::to_string(k + 1)});
                    break;
                }
            }
        }

    if (R.one.is_zero())
        rep.violations.push_back({Violation::Kind::trivial, "1 = 0 (trivial ring)"});

    for (size_t i = 0; i < t; ++i) {
        RingElement gi = R.basis_element(i);
        if (R.multiply(R.one, gi) != gi || R.multiply(gi, R.one) != gi)
            rep.violations.push_back(
                {Violation::Kind::identity,
                 "1*g" + std::to_string(i + 1) + " or g" + std::to_string(i + 1) +
                     "*1 differs from g" + std::to_string(i + 1)});
    }

    // Associativity on generator triples extends bilinearly to the whole
    // ring once the compatibility constraints above hold.
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j)
            for (size_t k = 0; k < t; ++k) {
                RingElement gi = R.basis_element(i), gj = R.basis_element(j),
                            gk = R.basis_element(k);
                RingElement lhs = R.multiply(R.multiply(gi, gj), gk);
                RingElement rhs = R.multiply(gi, R.multiply(gj, gk));
                if (lhs != rhs)
                    rep.violations.push_back(
                        {Violation::Kind::associativity,
                         "(g" + std::to_string(i + 1) + " g" + std::to_string(j + 1) +
                             ") g" + std::to_string(k + 1) + " != g" +
                             std::to_string(i + 1) + " (g" + std::to_string(j + 1) +
                             " g" + std::to_string(k + 1) + ")"});
            }

    return rep;
}

/// Throwing convenience wrapper around validate().
inline void require_valid(const FiniteRing& R, const std::string& what) {
    ValidationReport rep = validate(R);
    if (!rep.ok())
        throw Error(what + ": invalid ring (" + rep.violations.front().message + ")");
}

/// Ring with the transposed multiplication x *' y = y x. Labels and the
/// identity carry over unchanged.
inline FiniteRing opposite(const FiniteRing& R) {
    FiniteRing O = R;
    const size_t t = R.dim();
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j) O.constants[i][j] = R.constants[j][i];
    return O;
}

/// Componentwise product A x B. Additive models concatenate and the
/// identity is (1_A, 1_B).
inline FiniteRing direct_product(const FiniteRing& A, const FiniteRing& B) {
    FiniteRing P;
    const size_t ta = A.dim(), tb = B.dim();
    P.additive.moduli = A.additive.moduli;
    P.additive.moduli.insert(P.additive.moduli.end(), B.additive.moduli.begin(),
                             B.additive.moduli.end());
    const size_t t = ta + tb;

    auto embed_a = [&](const RingElement& x) {
        RingElement e(std::vector<uint32_t>(t, 0));
        std::copy(x.coeffs.begin(), x.coeffs.end(), e.coeffs.begin());
        return e;
    };
    auto embed_b = [&](const RingElement& x) {
        RingElement e(std::vector<uint32_t>(t, 0));
        std::copy(x.coeffs.begin(), x.coeffs.end(), e.coeffs.begin() + ta);
        return e;
    };

    P.constants.assign(t, std::vector<RingElement>(t, RingElement(std::vector<uint32_t>(t, 0))));
    for (size_t i = 0; i < ta; ++i)
        for (size_t j = 0; j < ta; ++j) P.constants[i][j] = embed_a(A.constants[i][j]);
    for (size_t i = 0; i < tb; ++i)
        for (size_t j = 0; j < tb; ++j)
            P.constants[ta + i][ta + j] = embed_b(B.constants[i][j]);
    // Cross terms vanish: the factors annihilate each other.

    P.one = embed_a(A.one);
    RingElement oneb = embed_b(B.one);
    for (size_t k = 0; k < t; ++k)
        P.one.coeffs[k] = (P.one.coeffs[k] + oneb.coeffs[k]) % P.additive.moduli[k];

    P.labels.reserve(t);
    for (size_t i = 0; i < ta; ++i) P.labels.push_back("a." + A.label(i));
    for (size_t i = 0; i < tb; ++i) P.labels.push_back("b." + B.label(i));
    return P;
}

}  // namespace ringforge
