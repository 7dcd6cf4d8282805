#pragma once

/**
 * @file properties.hpp
 * @brief The nine ring properties of the implication diagram
 *        (commutative, reduced, symmetric, reversible, semicommutative,
 *        reflexive, 2-primal, left/right duo), decided with witnesses by
 *        two interchangeable backends.
 *
 * The exhaustive backend scans the raw definitions over element tuples in
 * the fixed enumeration order. The linear backend (F_p-algebras only)
 * reformulates the same conditions through annihilator kernels and
 * operator images:
 *
 *   reversible        <=> ker L_a = ker R_a for all a
 *   symmetric         <=> ker L_{ab} <= ker L_{ba} for all a, b
 *   semicommutative   <=> ker L_a <= ker L_{a g} for all a, generators g
 *   right duo         <=> im R_a <= im L_a for all a (and dually)
 *
 * Verdicts agree between backends; witnesses may differ but every witness
 * replays to a definition violation through multiply alone
 * (replay_witness).
 *
 * Witness layout per kind, always present exactly when holds == false:
 *   commutative      {a, b}     a b != b a
 *   reduced          {x}        x != 0, x x = 0
 *   symmetric        {a, b, c}  a b c = 0, b a c != 0
 *   reversible       {a, b}     a b = 0, b a != 0
 *   semicommutative  {a, r, b}  a b = 0, a r b != 0
 *   reflexive        {a, b, r}  a R b = 0, b r a != 0
 *   two_primal       {x, r}     x nilpotent, 1 - r x not a unit
 *   left_duo         {a, r}     a r not in R a
 *   right_duo        {a, r}     r a not in a R
 */

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "ops.hpp"
#include "ring.hpp"
#include "structure.hpp"

namespace ringforge {

enum class PropertyKind {
    commutative,
    reduced,
    symmetric,
    reversible,
    semicommutative,
    reflexive,
    two_primal,
    left_duo,
    right_duo,
};

inline constexpr std::array<PropertyKind, 9> kAllProperties = {
    PropertyKind::commutative,    PropertyKind::reduced,
    PropertyKind::symmetric,      PropertyKind::reversible,
    PropertyKind::semicommutative, PropertyKind::reflexive,
    PropertyKind::two_primal,     PropertyKind::left_duo,
    PropertyKind::right_duo,
};

inline const char* property_name(PropertyKind k) {
    switch (k) {
        case PropertyKind::commutative: return "commutative";
        case PropertyKind::reduced: return "reduced";
        case PropertyKind::symmetric: return "symmetric";
        case PropertyKind::reversible: return "reversible";
        case PropertyKind::semicommutative: return "semicommutative";
        case PropertyKind::reflexive: return "reflexive";
        case PropertyKind::two_primal: return "two_primal";
        case PropertyKind::left_duo: return "left_duo";
        case PropertyKind::right_duo: return "right_duo";
    }
    return "?";
}

inline std::optional<PropertyKind> property_from_name(const std::string& s) {
    for (PropertyKind k : kAllProperties)
        if (s == property_name(k)) return k;
    return std::nullopt;
}

enum class Backend { exhaustive, linear, automatic };

inline const char* backend_name(Backend b) {
    switch (b) {
        case Backend::exhaustive: return "exhaustive";
        case Backend::linear: return "linear";
        case Backend::automatic: return "auto";
    }
    return "?";
}

struct PropertyResult {
    PropertyKind kind;
    bool holds = true;
    std::vector<RingElement> witness;  // present iff holds == false
    Backend backend_used = Backend::exhaustive;
    double elapsed_ms = 0.0;
};

namespace detail {

// ------------------------------ exhaustive --------------------------------

inline std::vector<uint64_t> generator_indices(const RingOps& ops) {
    std::vector<uint64_t> g;
    for (size_t i = 0; i < ops.dim(); ++i)
        g.push_back(ops.index(ops.ring().basis_element(i)));
    return g;
}

inline PropertyResult ex_commutative(const RingOps& ops) {
    PropertyResult res{PropertyKind::commutative};
    const uint64_t n = ops.order();
    for (uint64_t a = 0; a < n; ++a)
        for (uint64_t b = a + 1; b < n; ++b)
            if (ops.mul(a, b) != ops.mul(b, a)) {
                res.holds = false;
                res.witness = {ops.element(a), ops.element(b)};
                return res;
            }
    return res;
}

inline PropertyResult ex_reduced(const RingOps& ops) {
    // x^2 = 0 with x != 0 is equivalent to the existence of a nonzero
    // nilpotent: the last nonzero power of any nilpotent squares to 0.
    PropertyResult res{PropertyKind::reduced};
    for (uint64_t x = 1; x < ops.order(); ++x)
        if (ops.mul(x, x) == 0) {
            res.holds = false;
            res.witness = {ops.element(x)};
            return res;
        }
    return res;
}

inline PropertyResult ex_symmetric(const RingOps& ops) {
    PropertyResult res{PropertyKind::symmetric};
    const uint64_t n = ops.order();
    for (uint64_t a = 0; a < n; ++a)
        for (uint64_t b = 0; b < n; ++b) {
            const uint64_t ab = ops.mul(a, b);
            const uint64_t ba = ops.mul(b, a);
            if (ab == ba) continue;
            for (uint64_t c = 0; c < n; ++c)
                if (ops.mul(ab, c) == 0 && ops.mul(ba, c) != 0) {
                    res.holds = false;
                    res.witness = {ops.element(a), ops.element(b), ops.element(c)};
                    return res;
                }
        }
    return res;
}

inline PropertyResult ex_reversible(const RingOps& ops) {
    PropertyResult res{PropertyKind::reversible};
    const uint64_t n = ops.order();
    for (uint64_t a = 0; a < n; ++a)
        for (uint64_t b = 0; b < n; ++b)
            if (ops.mul(a, b) == 0 && ops.mul(b, a) != 0) {
                res.holds = false;
                res.witness = {ops.element(a), ops.element(b)};
                return res;
            }
    return res;
}

inline PropertyResult ex_semicommutative(const RingOps& ops) {
    PropertyResult res{PropertyKind::semicommutative};
    const uint64_t n = ops.order();
    const auto gens = generator_indices(ops);
    for (uint64_t a = 0; a < n; ++a)
        for (uint64_t b = 0; b < n; ++b) {
            if (ops.mul(a, b) != 0) continue;
            for (uint64_t g : gens)
                if (ops.mul(ops.mul(a, g), b) != 0) {
                    res.holds = false;
                    res.witness = {ops.element(a), ops.element(g), ops.element(b)};
                    return res;
                }
        }
    return res;
}

inline PropertyResult ex_reflexive(const RingOps& ops) {
    PropertyResult res{PropertyKind::reflexive};
    const uint64_t n = ops.order();
    const auto gens = generator_indices(ops);
    for (uint64_t a = 0; a < n; ++a)
        for (uint64_t b = 0; b < n; ++b) {
            bool arb_zero = true;
            for (uint64_t g : gens)
                if (ops.mul(ops.mul(a, g), b) != 0) {
                    arb_zero = false;
                    break;
                }
            if (!arb_zero) continue;
            for (uint64_t g : gens)
                if (ops.mul(ops.mul(b, g), a) != 0) {
                    res.holds = false;
                    res.witness = {ops.element(a), ops.element(b), ops.element(g)};
                    return res;
                }
        }
    return res;
}

inline PropertyResult ex_two_primal(const RingOps& ops) {
    // Finite rings: prime radical = J(R), so 2-primal <=> nilpotents = J.
    // J never contains a non-nilpotent in a finite ring, so only the
    // "nilpotent outside J" direction can produce a witness.
    PropertyResult res{PropertyKind::two_primal};
    const uint64_t n = ops.order();
    const auto& u = ops.units();
    const uint64_t one = ops.one_index();
    for (uint64_t x = 0; x < n; ++x) {
        const bool nil = ops.is_nilpotent(x);
        uint64_t bad_r = n;
        for (uint64_t r = 0; r < n; ++r)
            if (!u[ops.sub(one, ops.mul(r, x))]) {
                bad_r = r;
                break;
            }
        const bool in_j = bad_r == n;
        if (nil && !in_j) {
            res.holds = false;
            res.witness = {ops.element(x), ops.element(bad_r)};
            return res;
        }
        if (!nil && in_j)
            throw Error("non-nilpotent element in J; ring data is corrupt");
    }
    return res;
}

inline PropertyResult ex_duo(const RingOps& ops, Side side) {
    PropertyResult res{side == Side::left ? PropertyKind::left_duo
                                          : PropertyKind::right_duo};
    const uint64_t n = ops.order();
    std::vector<bool> ideal(n);
    for (uint64_t a = 0; a < n; ++a) {
        std::fill(ideal.begin(), ideal.end(), false);
        // left duo: a r must lie in R a; right duo: r a must lie in a R.
        for (uint64_t x = 0; x < n; ++x)
            ideal[side == Side::left ? ops.mul(x, a) : ops.mul(a, x)] = true;
        for (uint64_t r = 0; r < n; ++r) {
            const uint64_t prod = side == Side::left ? ops.mul(a, r) : ops.mul(r, a);
            if (!ideal[prod]) {
                res.holds = false;
                res.witness = {ops.element(a), ops.element(r)};
                return res;
            }
        }
    }
    return res;
}

// -------------------------------- linear ----------------------------------

/// Operator matrix built through the fast index multiply.
inline FpMatrix op_matrix(const RingOps& ops, uint64_t a, Side side,
                          const std::vector<uint64_t>& gens) {
    const FiniteRing& R = ops.ring();
    const uint32_t p = R.additive.fp_prime();
    const size_t t = R.dim();
    FpMatrix M(p, t, t);
    for (size_t j = 0; j < t; ++j) {
        uint64_t prod = side == Side::left ? ops.mul(a, gens[j]) : ops.mul(gens[j], a);
        RingElement col = ops.element(prod);
        for (size_t i = 0; i < t; ++i) M.at(i, j) = col.coeffs[i];
    }
    return M;
}

inline FpSpan column_space(const FpMatrix& M) {
    FpSpan s(M.p, M.rows);
    for (size_t c = 0; c < M.cols; ++c) {
        std::vector<uint32_t> col(M.rows);
        for (size_t r = 0; r < M.rows; ++r) col[r] = M.at(r, c);
        s.insert(std::move(col));
    }
    return s;
}

/// Cache of ker L_x for every element, built once per ring and read-only
/// afterwards.
class KernelCache {
  public:
    KernelCache(const RingOps& ops, const std::vector<uint64_t>& gens)
        : ops_(ops), gens_(gens), cache_(ops.order()) {}

    const FpSpan& left_kernel(uint64_t x) {
        auto& slot = cache_[x];
        if (!slot) slot = kernel_span(op_matrix(ops_, x, Side::left, gens_));
        return *slot;
    }

  private:
    const RingOps& ops_;
    const std::vector<uint64_t>& gens_;
    std::vector<std::optional<FpSpan>> cache_;
};

inline PropertyResult lin_commutative(const RingOps& ops) {
    PropertyResult res{PropertyKind::commutative};
    const FiniteRing& R = ops.ring();
    for (size_t i = 0; i < R.dim(); ++i)
        for (size_t j = i + 1; j < R.dim(); ++j)
            if (R.constants[i][j] != R.constants[j][i]) {
                res.holds = false;
                res.witness = {R.basis_element(i), R.basis_element(j)};
                return res;
            }
    return res;
}

inline PropertyResult lin_reversible(const RingOps& ops,
                                     const std::vector<uint64_t>& gens) {
    PropertyResult res{PropertyKind::reversible};
    for (uint64_t a = 0; a < ops.order(); ++a) {
        FpSpan kl = kernel_span(op_matrix(ops, a, Side::left, gens));
        FpSpan kr = kernel_span(op_matrix(ops, a, Side::right, gens));
        if (kl == kr) continue;
        res.holds = false;
        for (const auto& row : kl.rows)
            if (!kr.contains(row)) {
                // a b = 0 but b a != 0
                res.witness = {ops.element(a), RingElement(row)};
                return res;
            }
        for (const auto& row : kr.rows)
            if (!kl.contains(row)) {
                // b a = 0 but a b != 0: report in (x, y), x y = 0 order.
                res.witness = {RingElement(row), ops.element(a)};
                return res;
            }
    }
    return res;
}

inline PropertyResult lin_symmetric(const RingOps& ops, KernelCache& kernels) {
    PropertyResult res{PropertyKind::symmetric};
    const uint64_t n = ops.order();
    for (uint64_t a = 0; a < n; ++a)
        for (uint64_t b = 0; b < n; ++b) {
            const uint64_t ab = ops.mul(a, b);
            const uint64_t ba = ops.mul(b, a);
            if (ab == ba) continue;
            const FpSpan& ka = kernels.left_kernel(ab);
            const FpSpan& kb = kernels.left_kernel(ba);
            if (ka.dim() == 0) continue;
            for (const auto& row : ka.rows)
                if (!kb.contains(row)) {
                    res.holds = false;
                    res.witness = {ops.element(a), ops.element(b), RingElement(row)};
                    return res;
                }
        }
    return res;
}

inline PropertyResult lin_semicommutative(const RingOps& ops,
                                          const std::vector<uint64_t>& gens,
                                          KernelCache& kernels) {
    PropertyResult res{PropertyKind::semicommutative};
    for (uint64_t a = 0; a < ops.order(); ++a) {
        const FpSpan ka = kernels.left_kernel(a);
        if (ka.dim() == 0) continue;
        for (uint64_t g : gens) {
            const FpSpan& kag = kernels.left_kernel(ops.mul(a, g));
            for (const auto& row : ka.rows)
                if (!kag.contains(row)) {
                    res.holds = false;
                    res.witness = {ops.element(a), ops.element(g), RingElement(row)};
                    return res;
                }
        }
    }
    return res;
}

/// K_a = {b : a R b = 0} as the kernel of the stacked L_{a g_i}.
inline FpSpan two_sided_annihilator(const RingOps& ops, uint64_t a,
                                    const std::vector<uint64_t>& gens) {
    const uint32_t p = ops.ring().additive.fp_prime();
    const size_t t = ops.dim();
    FpMatrix stacked(p, t * gens.size(), t);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        FpMatrix M = op_matrix(ops, ops.mul(a, gens[gi]), Side::left, gens);
        for (size_t r = 0; r < t; ++r)
            for (size_t c = 0; c < t; ++c) stacked.at(gi * t + r, c) = M.at(r, c);
    }
    return kernel_span(std::move(stacked));
}

inline PropertyResult lin_reflexive(const RingOps& ops,
                                    const std::vector<uint64_t>& gens) {
    PropertyResult res{PropertyKind::reflexive};
    const uint64_t n = ops.order();
    std::vector<FpSpan> K(n);
    for (uint64_t a = 0; a < n; ++a) K[a] = two_sided_annihilator(ops, a, gens);
    for (uint64_t a = 0; a < n; ++a) {
        std::vector<uint64_t> members;
        for (auto& v : K[a].members())
            members.push_back(ops.index(RingElement(v)));
        std::sort(members.begin(), members.end());
        for (uint64_t b : members) {
            if (K[b].contains(ops.element(a).coeffs)) continue;
            for (uint64_t g : gens)
                if (ops.mul(ops.mul(b, g), a) != 0) {
                    res.holds = false;
                    res.witness = {ops.element(a), ops.element(b), ops.element(g)};
                    return res;
                }
        }
    }
    return res;
}

inline PropertyResult lin_two_primal(const RingOps& ops) {
    return ex_two_primal(ops);  // same scan; units already use the rank path
}

inline PropertyResult lin_duo(const RingOps& ops, Side side,
                              const std::vector<uint64_t>& gens) {
    PropertyResult res{side == Side::left ? PropertyKind::left_duo
                                          : PropertyKind::right_duo};
    for (uint64_t a = 0; a < ops.order(); ++a) {
        FpMatrix L = op_matrix(ops, a, Side::left, gens);
        FpMatrix R = op_matrix(ops, a, Side::right, gens);
        // right duo: im R_a (columns g a) inside im L_a (= a R); dually
        // for left duo.
        const FpMatrix& target = side == Side::right ? L : R;
        const FpMatrix& probe = side == Side::right ? R : L;
        FpSpan image = column_space(target);
        for (size_t j = 0; j < probe.cols; ++j) {
            std::vector<uint32_t> col(probe.rows);
            for (size_t r = 0; r < probe.rows; ++r) col[r] = probe.at(r, j);
            if (!image.contains(col)) {
                res.holds = false;
                res.witness = {ops.element(a), ops.element(gens[j])};
                return res;
            }
        }
    }
    return res;
}

}  // namespace detail

/// Resolves "auto": the linear backend when available and worthwhile.
inline Backend resolve_backend(const RingOps& ops, Backend requested) {
    if (requested != Backend::automatic) return requested;
    return ops.is_fp_algebra() && ops.order() > 64 ? Backend::linear
                                                   : Backend::exhaustive;
}

/// Decides one property. The linear backend requires an F_p-algebra.
inline PropertyResult check(const RingOps& ops, PropertyKind kind,
                            Backend backend = Backend::automatic) {
    const auto start = std::chrono::steady_clock::now();
    Backend use = resolve_backend(ops, backend);
    if (use == Backend::linear && !ops.is_fp_algebra())
        throw BackendUnavailable("linear backend needs an F_p-algebra");
    PropertyResult res;
    if (use == Backend::exhaustive) {
        switch (kind) {
            case PropertyKind::commutative: res = detail::ex_commutative(ops); break;
            case PropertyKind::reduced: res = detail::ex_reduced(ops); break;
            case PropertyKind::symmetric: res = detail::ex_symmetric(ops); break;
            case PropertyKind::reversible: res = detail::ex_reversible(ops); break;
            case PropertyKind::semicommutative:
                res = detail::ex_semicommutative(ops);
                break;
            case PropertyKind::reflexive: res = detail::ex_reflexive(ops); break;
            case PropertyKind::two_primal: res = detail::ex_two_primal(ops); break;
            case PropertyKind::left_duo: res = detail::ex_duo(ops, Side::left); break;
            case PropertyKind::right_duo: res = detail::ex_duo(ops, Side::right); break;
        }
    } else {
        const auto gens = detail::generator_indices(ops);
        detail::KernelCache kernels(ops, gens);
        switch (kind) {
            case PropertyKind::commutative: res = detail::lin_commutative(ops); break;
            case PropertyKind::reduced: res = detail::ex_reduced(ops); break;
            case PropertyKind::symmetric:
                res = detail::lin_symmetric(ops, kernels);
                break;
            case PropertyKind::reversible: res = detail::lin_reversible(ops, gens); break;
            case PropertyKind::semicommutative:
                res = detail::lin_semicommutative(ops, gens, kernels);
                break;
            case PropertyKind::reflexive: res = detail::lin_reflexive(ops, gens); break;
            case PropertyKind::two_primal: res = detail::lin_two_primal(ops); break;
            case PropertyKind::left_duo: res = detail::lin_duo(ops, Side::left, gens); break;
            case PropertyKind::right_duo:
                res = detail::lin_duo(ops, Side::right, gens);
                break;
        }
    }
    res.kind = kind;
    res.backend_used = use;
    res.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return res;
}

inline PropertyResult check(const FiniteRing& R, PropertyKind kind,
                            Backend backend = Backend::automatic) {
    RingOps ops(R);
    return check(ops, kind, backend);
}

struct RingPropertyProfile {
    std::map<PropertyKind, PropertyResult> properties;
    bool is_local = false;
    bool is_indecomposable = false;
};

/// All nine properties plus the derived local/indecomposable flags.
inline RingPropertyProfile profile(const RingOps& ops,
                                   Backend backend = Backend::automatic) {
    RingPropertyProfile out;
    for (PropertyKind k : kAllProperties)
        out.properties.emplace(k, check(ops, k, backend));
    Subgroup J = jacobson_radical(ops);
    out.is_local = ops.units_count() + J.size() == ops.order();
    out.is_indecomposable = idempotents(ops, true).size() == 2;
    return out;
}

inline RingPropertyProfile profile(const FiniteRing& R,
                                   Backend backend = Backend::automatic) {
    RingOps ops(R);
    return profile(ops, backend);
}

/// Lemma-style shortcut: an idempotent e with e R (1-e) != 0 certifies
/// nonreversibility; returns (e, a) with e a = a != 0 and a e = 0.
inline std::optional<std::pair<RingElement, RingElement>> idempotent_shortcut(
    const RingOps& ops) {
    const uint64_t n = ops.order();
    const uint64_t one = ops.one_index();
    for (uint64_t e = 0; e < n; ++e) {
        if (ops.mul(e, e) != e) continue;
        const uint64_t comp = ops.sub(one, e);
        if (e == 0 || comp == 0) continue;
        for (uint64_t x = 0; x < n; ++x) {
            const uint64_t a = ops.mul(ops.mul(e, x), comp);
            if (a != 0)
                return std::make_pair(ops.element(e), ops.element(a));
        }
    }
    return std::nullopt;
}

inline std::optional<std::pair<RingElement, RingElement>> idempotent_shortcut(
    const FiniteRing& R) {
    RingOps ops(R);
    return idempotent_shortcut(ops);
}

/// Re-verifies a witness against the raw definition using ring
/// multiplication (and scans where the definition quantifies over R).
inline bool replay_witness(const FiniteRing& R, PropertyKind kind,
                           const std::vector<RingElement>& w) {
    auto mul = [&](const RingElement& x, const RingElement& y) {
        return R.multiply(x, y);
    };
    const uint64_t n = R.order();
    switch (kind) {
        case PropertyKind::commutative:
            return w.size() == 2 && mul(w[0], w[1]) != mul(w[1], w[0]);
        case PropertyKind::reduced:
            return w.size() == 1 && !w[0].is_zero() && mul(w[0], w[0]).is_zero();
        case PropertyKind::symmetric:
            return w.size() == 3 && mul(mul(w[0], w[1]), w[2]).is_zero() &&
                   !mul(mul(w[1], w[0]), w[2]).is_zero();
        case PropertyKind::reversible:
            return w.size() == 2 && mul(w[0], w[1]).is_zero() &&
                   !mul(w[1], w[0]).is_zero();
        case PropertyKind::semicommutative:
            return w.size() == 3 && mul(w[0], w[2]).is_zero() &&
                   !mul(mul(w[0], w[1]), w[2]).is_zero();
        case PropertyKind::reflexive: {
            if (w.size() != 3) return false;
            for (size_t i = 0; i < R.dim(); ++i)
                if (!mul(mul(w[0], R.basis_element(i)), w[1]).is_zero()) return false;
            return !mul(mul(w[1], w[2]), w[0]).is_zero();
        }
        case PropertyKind::two_primal: {
            if (w.size() != 2) return false;
            RingElement y = w[0];
            bool nil = y.is_zero();
            for (uint64_t k = 0; k < n && !nil; ++k) {
                y = mul(y, w[0]);
                nil = y.is_zero();
            }
            if (!nil) return false;
            RingElement v = R.sub(R.one, mul(w[1], w[0]));
            for (uint64_t s = 0; s < n; ++s) {
                RingElement es = R.element_at(s);
                if (mul(v, es) == R.one && mul(es, v) == R.one) return false;
            }
            return true;
        }
        case PropertyKind::left_duo: {
            if (w.size() != 2) return false;
            RingElement target = mul(w[0], w[1]);
            for (uint64_t s = 0; s < n; ++s)
                if (mul(R.element_at(s), w[0]) == target) return false;
            return true;
        }
        case PropertyKind::right_duo: {
            if (w.size() != 2) return false;
            RingElement target = mul(w[1], w[0]);
            for (uint64_t s = 0; s < n; ++s)
                if (mul(w[0], R.element_at(s)) == target) return false;
            return true;
        }
    }
    return false;
}

}  // namespace ringforge
