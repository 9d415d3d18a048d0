#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cambrian/coxeter.hpp"
#include "cambrian/errors.hpp"
#include "cambrian/numeric.hpp"
#include "cambrian/quiver.hpp"

namespace cambrian {

// Reduced word read off the repeated Coxeter word c c c ... Position k
// (1-based) carries letter ((k-1) mod n) + 1; block m collects the letters
// taken from copy m of c.
struct SortingWord {
    Word letters;
    std::vector<long> positions;
    std::vector<Word> blocks;
    std::vector<std::set<int>> supports;
};

// Greedy descent consumption along c^infinity; the positions taken are
// lexicographically minimal among all reduced subwords evaluating to w.
inline SortingWord leftmost_word(const CoxeterEngine& eng, const GroupElement& w) {
    const int n = eng.rank();
    SortingWord out;
    GroupElement r = w;
    long k = 0;
    long idle = 0;
    while (r != eng.identity()) {
        ++k;
        int t = static_cast<int>((k - 1) % n) + 1;
        if (eng.left_descent(r, t)) {
            out.letters.push_back(t);
            out.positions.push_back(k);
            r = eng.multiply(eng.generator(t), r);
            idle = 0;
        } else if (++idle > n) {
            throw ShapeError("matrix is not a group element: descent scan stalled");
        }
    }
    long copies = out.positions.empty() ? 0 : (out.positions.back() - 1) / n + 1;
    out.blocks.assign(static_cast<std::size_t>(copies), {});
    out.supports.assign(static_cast<std::size_t>(copies), {});
    for (std::size_t i = 0; i < out.letters.size(); ++i) {
        auto m = static_cast<std::size_t>((out.positions[i] - 1) / n);
        out.blocks[m].push_back(out.letters[i]);
        out.supports[m].insert(out.letters[i]);
    }
    return out;
}

// Sortable means the per-copy supports weakly decrease. Returns the block
// decomposition when they do.
inline std::optional<SortingWord> is_c_sortable(const CoxeterEngine& eng,
                                                const GroupElement& w) {
    SortingWord sw = leftmost_word(eng, w);
    for (std::size_t m = 1; m < sw.supports.size(); ++m)
        if (!std::includes(sw.supports[m - 1].begin(), sw.supports[m - 1].end(),
                           sw.supports[m].begin(), sw.supports[m].end()))
            return std::nullopt;
    return sw;
}

namespace detail {

inline GroupElement pi_c_impl(const CoxeterEngine& eng, std::vector<int> state,
                              GroupElement w) {
    if (w == eng.identity()) return eng.identity();
    // A non-identity element of the parabolic generated by the remaining
    // state letters always has a descent among them.
    if (state.empty())
        throw ShapeError("projection state exhausted on a non-identity element");
    const int s = state.front();
    if (eng.left_descent(w, s)) {
        std::vector<int> rotated(state.begin() + 1, state.end());
        rotated.push_back(s);
        GroupElement sub =
            pi_c_impl(eng, std::move(rotated), eng.multiply(eng.generator(s), w));
        return eng.multiply(eng.generator(s), sub);
    }
    auto [par, rem] = eng.parabolic_factor(w, s);
    (void)rem;
    std::vector<int> dropped(state.begin() + 1, state.end());
    return pi_c_impl(eng, std::move(dropped), par);
}

} // namespace detail

// Projection onto the sortable elements: the maximum sortable element weakly
// below w. Descent recursion with a rotating Coxeter-word state.
inline GroupElement pi_c(const CoxeterEngine& eng, const GroupElement& w) {
    return detail::pi_c_impl(eng, coxeter_word(eng.quiver()), w);
}

// Definition-scan oracle: enumerate the length-bounded ball, keep sortable
// elements weakly below w, and demand a unique maximum. A precomputed ball
// (covering length(w)) may be supplied to amortize enumeration.
inline GroupElement pi_c_oracle(const CoxeterEngine& eng, const GroupElement& w,
                                const Ball* ball = nullptr,
                                std::optional<std::size_t> budget = {}) {
    const int lw = eng.length(w);
    Ball local;
    if (!ball) {
        local = eng.enumerate_ball(lw, budget);
        ball = &local;
    }
    const InversionSet nw = eng.inversion_set(w);
    std::vector<std::pair<GroupElement, int>> candidates;
    for (std::size_t i = 0; i < ball->elements.size(); ++i) {
        if (ball->lengths[i] > lw) continue;
        const GroupElement& x = ball->elements[i];
        InversionSet nx = eng.inversion_set(x);
        if (!std::includes(nw.begin(), nw.end(), nx.begin(), nx.end())) continue;
        if (!is_c_sortable(eng, x)) continue;
        candidates.emplace_back(x, ball->lengths[i]);
    }
    int best = -1;
    for (const auto& [x, len] : candidates) best = std::max(best, len);
    std::vector<GroupElement> top;
    for (const auto& [x, len] : candidates)
        if (len == best) top.push_back(x);
    if (top.size() != 1)
        throw AmbiguityError("sortable elements below w have no unique maximum");
    for (const auto& [x, len] : candidates)
        if (!eng.weak_leq(x, top.front()))
            throw AmbiguityError("maximal sortable element below w is not the maximum");
    return top.front();
}

// Reflection-ordered roots of a reduced word: the k-th root is the prefix
// before letter k applied to that letter's simple root. As a set this is the
// inversion set of the evaluated element.
inline std::vector<IntVec> layer_roots(const CoxeterEngine& eng, const Word& word) {
    GroupElement w = eng.from_word(word);
    if (eng.length(w) != static_cast<int>(word.size()))
        throw NotReducedError("word of length " + std::to_string(word.size()) +
                              " evaluates to an element of length " +
                              std::to_string(eng.length(w)));
    std::vector<IntVec> roots;
    GroupElement prefix = eng.identity();
    for (int letter : word) {
        roots.push_back(prefix.mat.apply(eng.simple_root(letter)));
        prefix = eng.multiply(prefix, eng.generator(letter));
    }
    return roots;
}

enum class RootClass { Preprojective, Regular, Preinjective, UnknownAtHorizon };

inline const char* to_string(RootClass c) {
    switch (c) {
        case RootClass::Preprojective: return "Preprojective";
        case RootClass::Regular: return "Regular";
        case RootClass::Preinjective: return "Preinjective";
        case RootClass::UnknownAtHorizon: return "UnknownAtHorizon";
    }
    return "UnknownAtHorizon";
}

struct RootReport {
    RootClass cls = RootClass::UnknownAtHorizon;
    // Iterations consumed: exit step for Preprojective/Preinjective, cycle
    // detection step for Regular, the horizon itself otherwise.
    long steps = 0;
};

inline long default_classification_horizon(const IntVec& beta) {
    Int sum = 64;
    for (const Int& x : beta) sum += x;
    if (sum > 1000000) return 1000000;
    return sum.convert_to<long>();
}

// Orbit classification of a positive real root under the Coxeter
// transformation. Backward exit certifies Preprojective, a backward cycle
// certifies Regular, forward exit certifies Preinjective. In Dynkin type the
// backward orbit always exits and the other probes are skipped (there every
// verdict would be reachable and Preprojective is the meaningful one).
inline RootReport is_preprojective_root(const CoxeterEngine& eng, const IntVec& beta,
                                std::optional<long> horizon = {}) {
    if (!is_positive(beta) || !eng.is_real_root(beta))
        throw NotPositiveRootError("not a positive real root: " + root_to_string(beta));
    const long cap = horizon ? *horizon : default_classification_horizon(beta);
    const IntMat& fwd_mat = eng.coxeter_element().mat;
    const IntMat& bwd_mat = eng.coxeter_element().inv;
    const bool dynkin = eng.is_dynkin();
    IntVec fwd = beta;
    IntVec bwd = beta;
    std::set<IntVec> seen{beta};
    for (long k = 1; k <= cap; ++k) {
        bwd = bwd_mat.apply(bwd);
        if (!is_positive(bwd)) return {RootClass::Preprojective, k};
        if (!dynkin) {
            if (!seen.insert(bwd).second) return {RootClass::Regular, k};
            fwd = fwd_mat.apply(fwd);
            if (!is_positive(fwd)) return {RootClass::Preinjective, k};
        }
    }
    return {RootClass::UnknownAtHorizon, cap};
}

enum class Boundedness { Bounded, Unbounded, UnknownAtHorizon };

inline const char* to_string(Boundedness b) {
    switch (b) {
        case Boundedness::Bounded: return "Bounded";
        case Boundedness::Unbounded: return "Unbounded";
        case Boundedness::UnknownAtHorizon: return "UnknownAtHorizon";
    }
    return "UnknownAtHorizon";
}

struct RootCertificate {
    IntVec root;
    RootReport report;
};

struct BoundednessReport {
    Boundedness verdict = Boundedness::UnknownAtHorizon;
    std::vector<RootCertificate> certificates;
    std::optional<IntVec> witness;
    long horizon = 0;
};

// A sortable element sits below some power of the Coxeter element exactly
// when every root of its sorting word has a backward-finite orbit.
inline BoundednessReport is_bounded(const CoxeterEngine& eng, const GroupElement& x,
                                    std::optional<long> horizon = {}) {
    auto sw = is_c_sortable(eng, x);
    if (!sw) throw NotSortableError("element is not sortable");
    BoundednessReport out;
    bool unknown = false;
    for (const IntVec& beta : layer_roots(eng, sw->letters)) {
        RootReport rep = is_preprojective_root(eng, beta, horizon);
        out.horizon = std::max(out.horizon, rep.steps);
        out.certificates.push_back({beta, rep});
        if (rep.cls == RootClass::Regular || rep.cls == RootClass::Preinjective) {
            if (!out.witness) out.witness = beta;
        } else if (rep.cls == RootClass::UnknownAtHorizon) {
            unknown = true;
        }
    }
    if (out.witness) out.verdict = Boundedness::Unbounded;
    else if (unknown) out.verdict = Boundedness::UnknownAtHorizon;
    else out.verdict = Boundedness::Bounded;
    return out;
}

struct AntisortableResult {
    enum class Status { Found, DoesNotExist, Horizon };
    Status status = Status::Horizon;
    std::optional<GroupElement> element;
    long steps = 0;
};

inline const char* to_string(AntisortableResult::Status s) {
    switch (s) {
        case AntisortableResult::Status::Found: return "Found";
        case AntisortableResult::Status::DoesNotExist: return "DoesNotExist";
        case AntisortableResult::Status::Horizon: return "Horizon";
    }
    return "Horizon";
}

// Maximum of the projection fiber over x: climb eligible ascents greedily.
// Any local maximum of the fiber is its maximum, so greedy climbing is exact;
// unbounded x have no maximum at all.
inline AntisortableResult antisortable(const CoxeterEngine& eng, const GroupElement& x,
                                       long max_steps = 100000) {
    auto sw = is_c_sortable(eng, x);
    if (!sw) throw NotSortableError("element is not sortable");
    BoundednessReport b = is_bounded(eng, x);
    if (b.verdict == Boundedness::Unbounded)
        return {AntisortableResult::Status::DoesNotExist, std::nullopt, 0};
    GroupElement w = x;
    for (long steps = 0; steps <= max_steps; ++steps) {
        int pick = 0;
        for (int i = 1; i <= eng.rank(); ++i) {
            if (eng.right_descent(w, i)) continue;
            if (pi_c(eng, eng.multiply(w, eng.generator(i))) == x) { pick = i; break; }
        }
        if (pick == 0) return {AntisortableResult::Status::Found, w, steps};
        w = eng.multiply(w, eng.generator(pick));
    }
    return {AntisortableResult::Status::Horizon, std::nullopt, max_steps};
}

struct FiberResult {
    std::vector<GroupElement> elements;
    int len_bound = 0;
    // True when the length bound provably covers the whole fiber.
    bool complete = false;
};

// Ball-filtered projection fiber. Without an explicit bound the fiber must
// have a maximum; its length then bounds the search exactly.
inline FiberResult fiber(const CoxeterEngine& eng, const GroupElement& x,
                         std::optional<int> len_bound = {},
                         std::optional<std::size_t> budget = {}) {
    auto sw = is_c_sortable(eng, x);
    if (!sw) throw NotSortableError("element is not sortable");
    FiberResult out;
    std::optional<int> max_len;
    AntisortableResult anti = antisortable(eng, x);
    if (anti.status == AntisortableResult::Status::Found)
        max_len = eng.length(*anti.element);
    if (len_bound) {
        if (*len_bound < 0) throw RangeError("len_bound must be non-negative");
        out.len_bound = *len_bound;
    } else if (max_len) {
        out.len_bound = *max_len;
    } else {
        throw ResourceError("fiber has no maximum; an explicit len_bound is required");
    }
    out.complete = max_len.has_value() && out.len_bound >= *max_len;
    Ball ball = eng.enumerate_ball(out.len_bound, budget);
    for (const GroupElement& w : ball.elements)
        if (pi_c(eng, w) == x) out.elements.push_back(w);
    return out;
}

} // namespace cambrian
