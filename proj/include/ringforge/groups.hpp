#pragma once

/**
 * @file groups.hpp
 * @brief Small finite groups as validated Cayley tables, and group
 *        algebras F_p[G] over them.
 *
 * Built-ins cover the groups the fixtures need: Q8, S3, D4 and the cyclic
 * groups. Tables are checked for the full group laws on construction.
 */

#include <string>
#include <vector>

#include "ring.hpp"

namespace ringforge {

struct CayleyGroup {
    size_t order = 0;
    std::vector<std::vector<size_t>> table;  // table[i][j] = index of g_i g_j
    size_t identity = 0;
    std::vector<std::string> names;
    std::string group_name;

    bool commutative() const {
        for (size_t i = 0; i < order; ++i)
            for (size_t j = 0; j < order; ++j)
                if (table[i][j] != table[j][i]) return false;
        return true;
    }
};

/// Full check of the group axioms: Latin square, identity, inverses,
/// associativity. Throws on any defect; built-in tables pass by
/// construction but external tables go through the same gate.
inline void validate_group(const CayleyGroup& G) {
    const size_t n = G.order;
    if (n == 0 || G.table.size() != n) throw Error("group table shape");
    for (const auto& row : G.table)
        if (row.size() != n) throw Error("group table shape");
    for (size_t i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (size_t j = 0; j < n; ++j) {
            if (G.table[i][j] >= n || G.table[j][i] >= n)
                throw Error("group table entry out of range");
            if (seen_row[G.table[i][j]] || seen_col[G.table[j][i]])
                throw Error("group table is not a Latin square");
            seen_row[G.table[i][j]] = true;
            seen_col[G.table[j][i]] = true;
        }
    }
    for (size_t i = 0; i < n; ++i)
        if (G.table[G.identity][i] != i || G.table[i][G.identity] != i)
            throw Error("group identity fails");
    for (size_t i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (size_t j = 0; j < n; ++j)
            if (G.table[i][j] == G.identity && G.table[j][i] == G.identity)
                has_inverse = true;
        if (!has_inverse) throw Error("group element without inverse");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (G.table[G.table[i][j]][k] != G.table[i][G.table[j][k]])
                    throw Error("group table not associative");
}

namespace detail {

inline CayleyGroup make_cyclic(size_t n) {
    CayleyGroup G;
    G.order = n;
    G.group_name = "C" + std::to_string(n);
    G.identity = 0;
    G.table.assign(n, std::vector<size_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) G.table[i][j] = (i + j) % n;
    G.names.push_back("1");
    for (size_t i = 1; i < n; ++i)
        G.names.push_back(i == 1 ? "g" : "g" + std::to_string(i));
    return G;
}

inline CayleyGroup make_q8() {
    // Elements: 1, -1, i, -i, j, -j, k, -k encoded as (axis, sign).
    CayleyGroup G;
    G.order = 8;
    G.group_name = "Q8";
    G.identity = 0;
    G.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto enc = [](size_t axis, int sign) { return axis * 2 + (sign < 0 ? 1 : 0); };
    // axis products: ax_mul[a][b] = (axis, sign) with 0=1,1=i,2=j,3=k
    static const int ax[4][4][2] = {
        {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
        {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
        {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
        {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
    };
    G.table.assign(8, std::vector<size_t>(8));
    for (size_t a = 0; a < 8; ++a)
        for (size_t b = 0; b < 8; ++b) {
            size_t axa = a / 2, axb = b / 2;
            int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
            sign *= ax[axa][axb][1];
            G.table[a][b] = enc(ax[axa][axb][0], sign);
        }
    return G;
}

inline CayleyGroup make_s3() {
    // Permutations of {1,2,3}; composition (pq)(x) = p(q(x)).
    CayleyGroup G;
    G.order = 6;
    G.group_name = "S3";
    G.identity = 0;
    static const int perms[6][3] = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1},
    };
    G.names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    auto find = [&](const int* q) {
        for (size_t i = 0; i < 6; ++i)
            if (perms[i][0] == q[0] && perms[i][1] == q[1] && perms[i][2] == q[2])
                return i;
        throw Error("permutation lookup");
    };
    G.table.assign(6, std::vector<size_t>(6));
    for (size_t a = 0; a < 6; ++a)
        for (size_t b = 0; b < 6; ++b) {
            int comp[3];
            for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
            G.table[a][b] = find(comp);
        }
    return G;
}

inline CayleyGroup make_d4() {
    // r^a s^b with r^4 = s^2 = 1 and s r = r^3 s.
    CayleyGroup G;
    G.order = 8;
    G.group_name = "D4";
    G.identity = 0;
    G.names = {"1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
    auto enc = [](size_t a, size_t b) { return b * 4 + a; };
    G.table.assign(8, std::vector<size_t>(8));
    for (size_t x = 0; x < 8; ++x)
        for (size_t y = 0; y < 8; ++y) {
            size_t a1 = x % 4, b1 = x / 4, a2 = y % 4, b2 = y / 4;
            // (r^a1 s^b1)(r^a2 s^b2) = r^(a1 + a2 or a1 - a2) s^(b1+b2)
            size_t a = b1 ? (a1 + 4 - a2) % 4 : (a1 + a2) % 4;
            G.table[x][y] = enc(a, (b1 + b2) % 2);
        }
    return G;
}

}  // namespace detail

/// Built-in group by name: "Q8", "S3", "D4" or "Cn" for n >= 1.
inline CayleyGroup builtin_group(const std::string& name) {
    CayleyGroup G;
    if (name == "Q8") G = detail::make_q8();
    else if (name == "S3") G = detail::make_s3();
    else if (name == "D4") G = detail::make_d4();
    else if (name.size() > 1 && name[0] == 'C') {
        size_t n = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(name[i])))
                throw Error("unknown group name: " + name);
            n = n * 10 + (name[i] - '0');
        }
        if (n == 0) throw Error("unknown group name: " + name);
        G = detail::make_cyclic(n);
    } else {
        throw Error("unknown group name: " + name);
    }
    validate_group(G);
    return G;
}

/// Group algebra F_p[G]: one additive generator x_g per group element,
/// products given by the Cayley table.
inline FiniteRing group_algebra(uint32_t p, const CayleyGroup& G) {
    if (!is_prime(p)) throw Error("group algebra needs a prime p");
    FiniteRing R;
    const size_t n = G.order;
    R.additive.moduli.assign(n, p);
    R.constants.assign(n, std::vector<RingElement>(n, RingElement(std::vector<uint32_t>(n, 0))));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            R.constants[i][j].coeffs[G.table[i][j]] = 1;
    R.one = RingElement(std::vector<uint32_t>(n, 0));
    R.one.coeffs[G.identity] = 1;
    R.labels.reserve(n);
    for (size_t i = 0; i < n; ++i) R.labels.push_back("x" + G.names[i]);
    return R;
}

/// Sum of coefficients; the augmentation F_p[G] -> F_p is a ring
/// homomorphism.
inline uint32_t augmentation(const FiniteRing& R, const RingElement& x) {
    uint32_t p = R.additive.fp_prime();
    uint64_t s = 0;
    for (uint32_t c : x.coeffs) s += c;
    return static_cast<uint32_t>(s % p);
}

}  // namespace ringforge
