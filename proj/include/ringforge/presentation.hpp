#pragma once

/**
 * @file presentation.hpp
 * @brief Quotients of free noncommutative F_p-algebras by two-sided
 *        ideals, computed by degree-truncated rewriting completion.
 *
 * Words are strings of generator indices ordered degree-lexicographically
 * (generator order as written, ties inside a degree broken by the index
 * sequence). Each relation is oriented into a rewrite rule lead -> tail
 * with the deglex-largest word as lead. Completion resolves overlap
 * ambiguities in increasing overlap order until either
 *
 *  - some length N <= N_max has every word of that length reducible and
 *    all overlaps of word length <= 2N-1 are resolved (then the diamond
 *    lemma applies: irreducible words form a basis of the quotient), or
 *  - the overlap queue runs dry above the cap, in which case the quotient
 *    may be infinite-dimensional or the cap too low and construction
 *    fails loudly rather than returning a wrong ring.
 *
 * Active rule leads always form an antichain under the subword order:
 * a new rule deactivates any rule whose lead contains it, and the
 * displaced polynomial is reduced and re-added.
 */

#include <cstdint>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "ring.hpp"

namespace ringforge {

/// Quotient not proven finite-dimensional within the degree cap.
struct SaturationError : Error {
    using Error::Error;
};

/// The relations collapse 1 to 0.
struct DegenerateRingError : Error {
    using Error::Error;
};

/// Word in the free algebra: bytes are generator indices.
using Word = std::string;

struct DeglexGreater {
    bool operator()(const Word& x, const Word& y) const {
        if (x.size() != y.size()) return x.size() > y.size();
        return x > y;
    }
};

struct DeglexLess {
    bool operator()(const Word& x, const Word& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    }
};

/// Noncommutative polynomial: word -> coefficient in 1..p-1, kept in
/// descending deglex order so begin() is the leading term.
using NcPoly = std::map<Word, uint32_t, DeglexGreater>;

inline void poly_add_term(NcPoly& f, const Word& w, uint64_t c, uint32_t p) {
    c %= p;
    if (c == 0) return;
    auto [it, fresh] = f.try_emplace(w, 0);
    it->second = static_cast<uint32_t>((it->second + c) % p);
    if (it->second == 0) f.erase(it);
}

inline NcPoly make_poly(uint32_t p, const std::vector<std::pair<Word, int64_t>>& terms) {
    NcPoly f;
    for (const auto& [w, c] : terms) {
        int64_t r = c % static_cast<int64_t>(p);
        if (r < 0) r += p;
        poly_add_term(f, w, static_cast<uint64_t>(r), p);
    }
    return f;
}

struct Presentation {
    uint32_t p = 2;
    std::vector<std::string> gens;
    std::vector<NcPoly> relations;
    uint32_t n_max = 12;  ///< saturation degree cap
};

/// Display form of a word: juxtaposed generator names when all are a
/// single character, '*'-joined otherwise; the empty word prints as "1".
inline std::string word_label(const Word& w, const std::vector<std::string>& gens) {
    if (w.empty()) return "1";
    bool short_names = std::all_of(gens.begin(), gens.end(),
                                   [](const std::string& g) { return g.size() == 1; });
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i && !short_names) out += "*";
        out += gens[static_cast<unsigned char>(w[i])];
    }
    return out;
}

struct PresentedRing {
    FiniteRing ring;
    std::vector<Word> normal_words;  ///< deglex order; index 0 is the empty word
    std::vector<RingElement> generator_images;
    uint32_t saturation_degree = 0;  ///< least N with no irreducible word of length N
};

namespace detail {

struct CompletionBudget {
    size_t max_rules = 4096;
    size_t max_overlaps = 500000;
};

class RewriteSystem {
  public:
    RewriteSystem(uint32_t p, size_t ngens, uint32_t n_max,
                  CompletionBudget budget = CompletionBudget())
        : p_(p), ngens_(ngens), n_max_(n_max), budget_(budget) {}

    /// Full normal form with respect to the active rules. Each step
    /// replaces the largest reducible word by strictly smaller words, so
    /// the loop terminates.
    NcPoly reduce(NcPoly f) const {
        auto it = f.begin();
        while (it != f.end()) {
            auto [rule, pos] = find_reduction(it->first);
            if (rule == npos) {
                ++it;
                continue;
            }
            const Word w = it->first;
            const uint64_t c = it->second;
            f.erase(it);
            const Rule& r = rules_[rule];
            for (const auto& [tw, tc] : r.tail) {
                Word nw = w.substr(0, pos);
                nw += tw;
                nw += w.substr(pos + r.lead.size());
                poly_add_term(f, nw, c * tc, p_);
            }
            it = f.upper_bound(w);  // new words are all deglex-smaller than w
        }
        return f;
    }

    void add_relation(NcPoly f) { add_rule_from(std::move(f)); }

    /**
     * Runs completion until the saturation criterion holds or the degree
     * cap is exhausted. Returns the saturation length N.
     */
    uint32_t complete() {
        bool dirty = true;
        std::vector<std::vector<Word>> levels;
        while (true) {
            if (dirty) {
                levels = irreducible_levels();
                dirty = false;
            }
            const bool saturated = levels.size() <= n_max_;
            const uint32_t threshold =
                saturated ? 2 * static_cast<uint32_t>(levels.size()) - 1 : 2 * n_max_ - 1;
            while (!queue_.empty() &&
                   (!rules_[queue_.top().ra].active || !rules_[queue_.top().rb].active))
                queue_.pop();
            if (queue_.empty() || queue_.top().word.size() > threshold) {
                if (saturated) {
                    normal_words_.clear();
                    for (auto& lvl : levels)
                        normal_words_.insert(normal_words_.end(), lvl.begin(), lvl.end());
                    return static_cast<uint32_t>(levels.size());
                }
                throw SaturationError(
                    "presentation not saturated by degree " + std::to_string(n_max_) +
                    "; the quotient may be infinite-dimensional or the cap too low");
            }
            Overlap ov = queue_.top();
            queue_.pop();
            if (++overlaps_done_ > budget_.max_overlaps)
                throw SaturationError("completion budget exceeded");
            const size_t before = rules_.size();
            add_rule_from(s_polynomial(ov));
            if (rules_.size() != before) dirty = true;
        }
    }

    const std::vector<Word>& normal_words() const { return normal_words_; }

  private:
    struct Rule {
        Word lead;
        NcPoly tail;  // lead rewrites to tail
        bool active = true;
    };

    struct Overlap {
        Word word;
        size_t ra, rb;
        size_t pos;  // rb's lead matches at this offset inside word
    };

    struct OverlapOrder {
        // min-heap on (word deglex, ra, rb, pos) for determinism
        bool operator()(const Overlap& x, const Overlap& y) const {
            DeglexLess less;
            if (x.word != y.word) return !less(x.word, y.word);
            if (x.ra != y.ra) return x.ra > y.ra;
            if (x.rb != y.rb) return x.rb > y.rb;
            return x.pos > y.pos;
        }
    };

    static constexpr size_t npos = static_cast<size_t>(-1);

    /// Leftmost reducible position; among rules matching there, the
    /// lowest rule index. Returns {rule, pos} or {npos, 0}.
    std::pair<size_t, size_t> find_reduction(const Word& w) const {
        size_t best_rule = npos, best_pos = w.size();
        for (size_t r = 0; r < rules_.size(); ++r) {
            if (!rules_[r].active) continue;
            if (rules_[r].lead.size() > w.size()) continue;
            size_t pos = w.find(rules_[r].lead);
            if (pos == Word::npos || pos > best_pos) continue;
            if (pos < best_pos || r < best_rule) {
                best_pos = pos;
                best_rule = r;
            }
        }
        if (best_rule == npos) return {npos, 0};
        return {best_rule, best_pos};
    }

    NcPoly poly_of_rule(const Rule& r) const {
        NcPoly f;
        f[r.lead] = 1;
        for (const auto& [w, c] : r.tail) poly_add_term(f, w, p_ - c, p_);
        return f;
    }

    NcPoly s_polynomial(const Overlap& ov) const {
        const Rule& A = rules_[ov.ra];
        const Rule& B = rules_[ov.rb];
        // word = A.lead + suffix = prefix + B.lead
        Word suffix = ov.word.substr(A.lead.size());
        Word prefix = ov.word.substr(0, ov.pos);
        NcPoly s;
        for (const auto& [w, c] : A.tail) poly_add_term(s, w + suffix, c, p_);
        for (const auto& [w, c] : B.tail) poly_add_term(s, prefix + w, p_ - c, p_);
        return s;
    }

    void add_rule_from(NcPoly f0) {
        std::vector<NcPoly> pending;
        pending.push_back(std::move(f0));
        while (!pending.empty()) {
            NcPoly g = reduce(std::move(pending.back()));
            pending.pop_back();
            if (g.empty()) continue;
            if (g.begin()->first.empty())
                throw DegenerateRingError("relations collapse 1 to 0");
            const uint32_t inv = inv_mod(g.begin()->second, p_);
            Rule rule;
            rule.lead = g.begin()->first;
            for (auto it = std::next(g.begin()); it != g.end(); ++it) {
                uint64_t c = static_cast<uint64_t>(it->second) * inv % p_;
                poly_add_term(rule.tail, it->first, p_ - c, p_);
            }
            rules_.push_back(std::move(rule));
            const size_t idx = rules_.size() - 1;
            if (rules_.size() > budget_.max_rules)
                throw SaturationError("rule budget exceeded");
            // Keep active leads an antichain: displace rules whose lead
            // contains the new one and reprocess them.
            for (size_t r = 0; r < idx; ++r) {
                if (!rules_[r].active) continue;
                if (rules_[r].lead.find(rules_[idx].lead) != Word::npos) {
                    rules_[r].active = false;
                    pending.push_back(poly_of_rule(rules_[r]));
                }
            }
            for (size_t r = 0; r < rules_.size(); ++r) {
                if (!rules_[r].active) continue;
                enqueue_overlaps(r, idx);
                if (r != idx) enqueue_overlaps(idx, r);
            }
        }
    }

    /// Proper overlaps: a suffix of A.lead equals a prefix of B.lead.
    void enqueue_overlaps(size_t ia, size_t ib) {
        const Word& a = rules_[ia].lead;
        const Word& b = rules_[ib].lead;
        const size_t maxk = std::min(a.size(), b.size()) - 1;
        for (size_t k = 1; k <= maxk; ++k) {
            if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
            Overlap ov;
            ov.word = a + b.substr(k);
            ov.ra = ia;
            ov.rb = ib;
            ov.pos = a.size() - k;
            queue_.push(std::move(ov));
        }
    }

    /// Irreducible words level by level. Stops after the first empty
    /// level (saturation) or after level n_max_ (levels.size() = n_max_+1
    /// then signals failure to the caller). A word extending an
    /// irreducible word is irreducible iff no active lead is a suffix of
    /// the extension.
    std::vector<std::vector<Word>> irreducible_levels() const {
        std::vector<std::vector<Word>> levels;
        levels.push_back({Word()});
        while (levels.size() <= n_max_) {
            std::vector<Word> next;
            for (const Word& w : levels.back()) {
                for (size_t g = 0; g < ngens_; ++g) {
                    Word wg = w + static_cast<char>(g);
                    bool reducible = false;
                    for (const Rule& r : rules_) {
                        if (!r.active || r.lead.size() > wg.size()) continue;
                        if (wg.compare(wg.size() - r.lead.size(), r.lead.size(),
                                       r.lead) == 0) {
                            reducible = true;
                            break;
                        }
                    }
                    if (!reducible) next.push_back(std::move(wg));
                }
            }
            if (next.empty()) return levels;
            levels.push_back(std::move(next));
        }
        return levels;  // size n_max_+1: not saturated within the cap
    }

    uint32_t p_;
    size_t ngens_;
    uint32_t n_max_;
    CompletionBudget budget_;
    std::vector<Rule> rules_;
    std::priority_queue<Overlap, std::vector<Overlap>, OverlapOrder> queue_;
    std::vector<Word> normal_words_;
    size_t overlaps_done_ = 0;
};

}  // namespace detail

/// Evaluates a noncommutative polynomial at the given generator images.
inline RingElement evaluate_poly(const FiniteRing& R, const NcPoly& f,
                                 const std::vector<RingElement>& images) {
    RingElement acc = R.zero();
    for (const auto& [w, c] : f) {
        RingElement prod = R.one;
        for (char ch : w) prod = R.multiply(prod, images[static_cast<unsigned char>(ch)]);
        acc = R.add(acc, R.scalar_mul(c, prod));
    }
    return acc;
}

/**
 * Builds the quotient of the free F_p-algebra on P.gens by the two-sided
 * ideal generated by P.relations. The basis of the result is the set of
 * irreducible ("normal") words of the completed rewriting system, in
 * deglex order, and ring multiplication reduces products of normal words.
 *
 * Throws SaturationError when the quotient is not proven
 * finite-dimensional within P.n_max and DegenerateRingError when the
 * relations force 1 = 0.
 */
inline PresentedRing free_quotient(const Presentation& P) {
    if (!is_prime(P.p)) throw Error("presentation needs a prime p");
    if (P.gens.empty()) throw Error("presentation needs at least one generator");
    if (P.n_max < 1) throw Error("degree cap must be positive");
    for (size_t i = 0; i < P.relations.size(); ++i)
        if (P.relations[i].empty())
            throw Error("relation " + std::to_string(i + 1) + " is 0 mod " +
                        std::to_string(P.p) + " and was rejected");

    detail::RewriteSystem rs(P.p, P.gens.size(), P.n_max);
    for (const auto& rel : P.relations) rs.add_relation(rel);
    const uint32_t saturation = rs.complete();

    const std::vector<Word>& words = rs.normal_words();
    const size_t t = words.size();
    uint64_t order = 1;
    for (size_t i = 0; i < t; ++i) {
        order *= P.p;
        if (order > (1u << 16))
            throw Error("quotient order exceeds 2^16");
    }

    std::map<Word, size_t, DeglexLess> index;
    for (size_t i = 0; i < t; ++i) index[words[i]] = i;

    auto to_element = [&](const NcPoly& f) {
        RingElement e(std::vector<uint32_t>(t, 0));
        for (const auto& [w, c] : f) e.coeffs[index.at(w)] = c;
        return e;
    };

    PresentedRing out;
    out.saturation_degree = saturation;
    out.normal_words = words;
    FiniteRing& R = out.ring;
    R.additive.moduli.assign(t, P.p);
    R.constants.assign(t, std::vector<RingElement>(t));
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j) {
            NcPoly prod;
            prod[words[i] + words[j]] = 1;
            R.constants[i][j] = to_element(rs.reduce(std::move(prod)));
        }
    R.one = RingElement(std::vector<uint32_t>(t, 0));
    R.one.coeffs[index.at(Word())] = 1;
    R.labels.reserve(t);
    for (const Word& w : words) R.labels.push_back(word_label(w, P.gens));

    for (size_t g = 0; g < P.gens.size(); ++g) {
        NcPoly gen;
        gen[Word(1, static_cast<char>(g))] = 1;
        out.generator_images.push_back(to_element(rs.reduce(std::move(gen))));
    }

    require_valid(R, "free_quotient");
    return out;
}

}  // namespace ringforge
