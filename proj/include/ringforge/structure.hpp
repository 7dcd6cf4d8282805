#pragma once

/**
 * @file structure.hpp
 * @brief Structural invariants of a finite ring: units, Jacobson radical
 *        and its powers, socles, localness, residue field and the
 *        dimension sequence D = (d_1..d_K) with d_i = dim_F(J^i/J^{i+1}).
 *
 * J is computed by the quasi-regularity criterion (x in J iff 1 - rx is a
 * unit for every r), which works for every additive model, not only
 * F_p-algebras. Dimension counts come from subgroup sizes so the same
 * code path serves Z/p^k-based rings.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "linalg.hpp"
#include "ops.hpp"
#include "ring.hpp"

namespace ringforge {

struct StructureProfile {
    uint64_t order = 0;
    uint64_t characteristic = 0;
    uint64_t units_count = 0;
    Subgroup radical;
    /// J^1 down to the first zero power (the zero entry included).
    std::vector<Subgroup> radical_chain;
    /// Least k with J^k = 0.
    uint32_t nilpotency_index = 0;
    Subgroup socle_left, socle_right;
    bool is_local = false;
    /// |R/J| = p^f; meaningful only when local.
    uint64_t residue_field_order = 0;
    /// Present only when local.
    std::vector<uint32_t> d_sequence;
    bool is_indecomposable = false;
    uint64_t idempotent_count = 0;
};

/// All elements with a two-sided inverse, as ring elements in
/// enumeration order.
inline std::vector<RingElement> units(const RingOps& ops) {
    std::vector<RingElement> out;
    const auto& u = ops.units();
    for (uint64_t x = 0; x < ops.order(); ++x)
        if (u[x]) out.push_back(ops.element(x));
    return out;
}

inline std::vector<RingElement> units(const FiniteRing& R) {
    RingOps ops(R);
    return units(ops);
}

/// J(R) = {x : 1 - rx is a unit for all r}, as an additive subgroup.
inline Subgroup jacobson_radical(const RingOps& ops) {
    const FiniteRing& R = ops.ring();
    const auto& u = ops.units();
    const uint64_t one = ops.one_index();
    std::vector<RingElement> members;
    for (uint64_t x = 0; x < ops.order(); ++x) {
        bool in_j = true;
        for (uint64_t r = 0; r < ops.order(); ++r) {
            if (!u[ops.sub(one, ops.mul(r, x))]) {
                in_j = false;
                break;
            }
        }
        if (in_j) members.push_back(R.element_at(x));
    }
    return subgroup_closure(R, members);
}

inline Subgroup jacobson_radical(const FiniteRing& R) {
    RingOps ops(R);
    return jacobson_radical(ops);
}

namespace detail {

/// Additive generating set of a subgroup: span rows for F_p, member list
/// otherwise.
inline std::vector<RingElement> subgroup_generators(const FiniteRing& R,
                                                    const Subgroup& S) {
    std::vector<RingElement> gens;
    if (S.repr == Subgroup::Repr::fp_span) {
        for (const auto& row : S.span.rows) gens.emplace_back(row);
    } else {
        for (uint64_t idx : S.members) gens.push_back(R.element_at(idx));
    }
    return gens;
}

}  // namespace detail

/// J, J^2, ... down to the zero subgroup (inclusive). J^{i+1} is the
/// additive span of products of J^i generators with J generators.
inline std::vector<Subgroup> radical_chain(const RingOps& ops, const Subgroup& J) {
    const FiniteRing& R = ops.ring();
    std::vector<Subgroup> chain;
    chain.push_back(J);
    std::vector<RingElement> jgens = detail::subgroup_generators(R, J);
    while (!chain.back().is_zero()) {
        if (chain.size() > R.order())
            throw Error("radical chain does not reach 0; ring data is corrupt");
        std::vector<RingElement> prev = detail::subgroup_generators(R, chain.back());
        std::vector<RingElement> products;
        for (const auto& a : prev)
            for (const auto& b : jgens) products.push_back(R.multiply(a, b));
        Subgroup next = subgroup_closure(R, products);
        if (next.size() >= chain.back().size() && !chain.back().is_zero())
            if (next.size() == chain.back().size())
                throw Error("radical power stabilized above 0; ring data is corrupt");
        chain.push_back(std::move(next));
    }
    return chain;
}

inline std::vector<Subgroup> radical_chain(const FiniteRing& R) {
    RingOps ops(R);
    return radical_chain(ops, jacobson_radical(ops));
}

/// Left socle {x : Jx = 0} or right socle {x : xJ = 0}; for finite rings
/// these are the socles in the usual minimal-ideal sense.
inline Subgroup socle(const RingOps& ops, const Subgroup& J, Side side) {
    const FiniteRing& R = ops.ring();
    std::vector<RingElement> jgens = detail::subgroup_generators(R, J);
    if (R.is_fp_algebra()) {
        // Kernel of the stacked multiplication operators of the J basis.
        const uint32_t p = R.additive.fp_prime();
        FpMatrix stacked(p, 0, R.dim());
        for (const auto& b : jgens) {
            FpMatrix M = operator_matrix(R, b, side == Side::left ? Side::left : Side::right);
            stacked = stacked.rows == 0 ? M : FpMatrix::stack(stacked, M);
        }
        if (stacked.rows == 0) {
            // J = 0: socle is the whole ring.
            FpSpan full(p, R.dim());
            for (size_t i = 0; i < R.dim(); ++i) full.insert(R.basis_element(i).coeffs);
            return Subgroup::from_span(std::move(full));
        }
        return Subgroup::from_span(kernel_span(std::move(stacked)));
    }
    std::vector<RingElement> members;
    for (uint64_t x = 0; x < ops.order(); ++x) {
        RingElement ex = R.element_at(x);
        bool ann = true;
        for (const auto& b : jgens) {
            RingElement prod = side == Side::left ? R.multiply(b, ex) : R.multiply(ex, b);
            if (!prod.is_zero()) {
                ann = false;
                break;
            }
        }
        if (ann) members.push_back(std::move(ex));
    }
    return subgroup_closure(R, members);
}

inline Subgroup socle(const FiniteRing& R, Side side) {
    RingOps ops(R);
    return socle(ops, jacobson_radical(ops), side);
}

/// All idempotents, optionally only central ones, in enumeration order.
inline std::vector<RingElement> idempotents(const RingOps& ops, bool central_only) {
    const FiniteRing& R = ops.ring();
    std::vector<RingElement> out;
    for (uint64_t x = 0; x < ops.order(); ++x) {
        if (ops.mul(x, x) != x) continue;
        if (central_only) {
            bool central = true;
            for (size_t i = 0; i < R.dim(); ++i) {
                uint64_t g = R.index_of(R.basis_element(i));
                if (ops.mul(x, g) != ops.mul(g, x)) {
                    central = false;
                    break;
                }
            }
            if (!central) continue;
        }
        out.push_back(R.element_at(x));
    }
    return out;
}

inline std::vector<RingElement> idempotents(const FiniteRing& R, bool central_only) {
    RingOps ops(R);
    return idempotents(ops, central_only);
}

struct LocalProfile {
    bool is_local = false;
    uint64_t residue_field_order = 0;
    std::vector<uint32_t> d_sequence;
};

namespace detail {

inline uint32_t integer_log(uint64_t base, uint64_t value) {
    uint32_t e = 0;
    uint64_t v = 1;
    while (v < value) {
        v *= base;
        ++e;
    }
    if (v != value) throw Error("dimension accounting failed; ring data is corrupt");
    return e;
}

inline uint64_t prime_root(uint64_t q) {
    for (uint64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return p;
    return q;
}

}  // namespace detail

/// Localness, residue field order and the D-sequence, derived from the
/// unit count and the radical chain sizes.
inline LocalProfile local_profile(const RingOps& ops, const Subgroup& J,
                                  const std::vector<Subgroup>& chain) {
    LocalProfile lp;
    lp.is_local = ops.units_count() + J.size() == ops.order();
    if (!lp.is_local) return lp;
    lp.residue_field_order = ops.order() / J.size();
    const uint64_t p = detail::prime_root(lp.residue_field_order);
    const uint32_t f = detail::integer_log(p, lp.residue_field_order);
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        uint64_t ratio = chain[i].size() / chain[i + 1].size();
        if (chain[i].size() % chain[i + 1].size() != 0)
            throw Error("radical layer sizes are inconsistent");
        uint32_t e = detail::integer_log(p, ratio);
        if (e % f != 0)
            throw Error("radical layer is not an F-vector space; ring data is corrupt");
        lp.d_sequence.push_back(e / f);
    }
    return lp;
}

inline LocalProfile local_profile(const FiniteRing& R) {
    RingOps ops(R);
    Subgroup J = jacobson_radical(ops);
    return local_profile(ops, J, radical_chain(ops, J));
}

/// Computes every structural invariant in one pass over shared
/// intermediates.
inline StructureProfile compute_structure(const RingOps& ops) {
    const FiniteRing& R = ops.ring();
    StructureProfile s;
    s.order = ops.order();
    s.characteristic = R.characteristic();
    s.units_count = ops.units_count();
    s.radical = jacobson_radical(ops);
    s.radical_chain = radical_chain(ops, s.radical);
    s.nilpotency_index = static_cast<uint32_t>(s.radical_chain.size());
    s.socle_left = socle(ops, s.radical, Side::left);
    s.socle_right = socle(ops, s.radical, Side::right);
    LocalProfile lp = local_profile(ops, s.radical, s.radical_chain);
    s.is_local = lp.is_local;
    s.residue_field_order = lp.residue_field_order;
    s.d_sequence = lp.d_sequence;
    std::vector<RingElement> central = idempotents(ops, true);
    s.is_indecomposable = central.size() == 2;  // exactly {0, 1}
    s.idempotent_count = idempotents(ops, false).size();
    return s;
}

inline StructureProfile compute_structure(const FiniteRing& R) {
    RingOps ops(R);
    return compute_structure(ops);
}

}  // namespace ringforge
