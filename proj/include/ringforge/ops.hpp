#pragma once

/**
 * @file ops.hpp
 * @brief Shared per-ring computation context.
 *
 * RingOps wraps a validated ring with index-based arithmetic and the two
 * speed paths the checkers rely on: a full multiplication table for small
 * orders and an XOR-fold multiply for F_2-algebras (elements become bit
 * masks, products fold precomputed generator rows). The context is built
 * once and is read-only afterwards, so concurrent checkers can share it.
 */

#include <bit>
#include <cstdint>
#include <vector>

#include "linalg.hpp"
#include "ring.hpp"

namespace ringforge {

class RingOps {
  public:
    /// Orders up to this bound get a dense multiplication table.
    static constexpr uint64_t kTableCap = 4096;

    explicit RingOps(const FiniteRing& ring) : R_(ring), n_(ring.order()) {
        const size_t t = R_.dim();
        one_index_ = R_.index_of(R_.one);
        f2_ = R_.is_fp_algebra() && R_.additive.moduli.front() == 2 && t <= 16;
        if (f2_) {
            // Element index == bit mask with coefficient i at bit t-1-i
            // (consistent with the lexicographic element order).
            f2_left_.assign(t, std::vector<uint16_t>(n_, 0));
            std::vector<std::vector<uint16_t>> cmask(t, std::vector<uint16_t>(t));
            for (size_t i = 0; i < t; ++i)
                for (size_t j = 0; j < t; ++j)
                    cmask[i][j] = static_cast<uint16_t>(R_.index_of(R_.constants[i][j]));
            for (size_t i = 0; i < t; ++i) {
                auto& row = f2_left_[i];
                for (uint64_t y = 1; y < n_; ++y) {
                    uint64_t low = y & (~y + 1);
                    size_t j = t - 1 - static_cast<size_t>(std::countr_zero(low));
                    row[y] = static_cast<uint16_t>(row[y ^ low] ^ cmask[i][j]);
                }
            }
        }
        if (n_ <= kTableCap) {
            table_.resize(n_ * n_);
            for (uint64_t a = 0; a < n_; ++a) {
                if (f2_) {
                    for (uint64_t b = 0; b < n_; ++b)
                        table_[a * n_ + b] = static_cast<uint16_t>(f2_mul(a, b));
                } else {
                    RingElement ea = R_.element_at(a);
                    for (uint64_t b = 0; b < n_; ++b)
                        table_[a * n_ + b] = static_cast<uint16_t>(
                            R_.index_of(R_.multiply(ea, R_.element_at(b))));
                }
            }
        }
    }

    const FiniteRing& ring() const { return R_; }
    uint64_t order() const { return n_; }
    size_t dim() const { return R_.dim(); }
    uint64_t one_index() const { return one_index_; }
    bool is_fp_algebra() const { return R_.is_fp_algebra(); }

    uint64_t mul(uint64_t a, uint64_t b) const {
        if (!table_.empty()) return table_[a * n_ + b];
        if (f2_) return f2_mul(a, b);
        return R_.index_of(R_.multiply(R_.element_at(a), R_.element_at(b)));
    }

    uint64_t add(uint64_t a, uint64_t b) const {
        if (f2_) return a ^ b;
        return R_.index_of(R_.add(R_.element_at(a), R_.element_at(b)));
    }

    uint64_t sub(uint64_t a, uint64_t b) const {
        if (f2_) return a ^ b;
        return R_.index_of(R_.sub(R_.element_at(a), R_.element_at(b)));
    }

    RingElement element(uint64_t idx) const { return R_.element_at(idx); }
    uint64_t index(const RingElement& x) const { return R_.index_of(x); }

    /// x nilpotent? For F_p-algebras the index is at most dim(R); in
    /// general it is bounded by the order.
    bool is_nilpotent(uint64_t x) const {
        if (x == 0) return true;
        uint64_t steps = is_fp_algebra() ? dim() : n_;
        uint64_t y = x;
        for (uint64_t k = 1; k < steps; ++k) {
            y = mul(y, x);
            if (y == 0) return true;
        }
        return y == 0;
    }

    /// Unit membership bitmap, built on first use (single-threaded use of
    /// a fresh context; shared contexts should call ensure_units first).
    const std::vector<bool>& units() const {
        if (units_.empty()) const_cast<RingOps*>(this)->build_units();
        return units_;
    }

    uint64_t units_count() const {
        const auto& u = units();
        uint64_t c = 0;
        for (bool b : u) c += b;
        return c;
    }

    void ensure_units() { (void)units(); }

  private:
    uint64_t f2_mul(uint64_t a, uint64_t b) const {
        const size_t t = R_.dim();
        uint64_t acc = 0;
        uint64_t x = a;
        while (x) {
            uint64_t low = x & (~x + 1);
            x ^= low;
            size_t i = t - 1 - static_cast<size_t>(std::countr_zero(low));
            acc ^= f2_left_[i][b];
        }
        return acc;
    }

    void build_units() {
        units_.assign(n_, false);
        if (is_fp_algebra()) {
            // Invertibility of left multiplication; in a finite ring
            // one-sided invertible elements are units.
            const size_t t = dim();
            for (uint64_t x = 0; x < n_; ++x) {
                FpMatrix L = operator_matrix(R_, R_.element_at(x), Side::left);
                units_[x] = rank_of(std::move(L)) == t;
            }
        } else {
            for (uint64_t x = 0; x < n_; ++x) {
                for (uint64_t y = 0; y < n_; ++y)
                    if (mul(x, y) == one_index_ && mul(y, x) == one_index_) {
                        units_[x] = true;
                        break;
                    }
            }
        }
    }

    const FiniteRing& R_;
    uint64_t n_;
    uint64_t one_index_ = 0;
    bool f2_ = false;
    std::vector<uint16_t> table_;
    std::vector<std::vector<uint16_t>> f2_left_;  // f2_left_[i][mask] = g_i * mask
    std::vector<bool> units_;
};

}  // namespace ringforge
