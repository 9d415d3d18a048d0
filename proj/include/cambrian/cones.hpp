#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "cambrian/coxeter.hpp"
#include "cambrian/errors.hpp"
#include "cambrian/numeric.hpp"
#include "cambrian/sortable.hpp"

namespace cambrian {

// Signed roots cutting out the cone of a sortable element, in recursion
// order. For the identity these are the simple roots of the active state.
using ConeBasis = std::vector<IntVec>;

// Memoized cone-basis computation. The memo is the only shared mutable state
// in the library; a mutex keeps concurrent lookups safe.
class CambrianFan {
public:
    explicit CambrianFan(const CoxeterEngine& eng) : eng_(eng) {}

    const CoxeterEngine& engine() const { return eng_; }

    // Basis of the cone attached to a sortable element.
    ConeBasis cambrian_basis(const GroupElement& x) {
        if (!is_c_sortable(eng_, x)) throw NotSortableError("element is not sortable");
        return cambrian_basis_for_state(coxeter_word(eng_.quiver()), x);
    }

    // Same recursion from an explicit rotating state; exposed so parabolic
    // restrictions can be compared against the full fan.
    ConeBasis cambrian_basis_for_state(const Word& state, const GroupElement& x) {
        const Key key{state, x.mat};
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        ConeBasis result = compute(state, x);
        std::lock_guard<std::mutex> lock(mutex_);
        memo_.emplace(key, result);
        return result;
    }

private:
    using Key = std::pair<Word, IntMat>;

    ConeBasis compute(const Word& state, const GroupElement& x) {
        if (state.empty()) {
            if (x != eng_.identity())
                throw ShapeError("cone recursion reached empty state on non-identity");
            return {};
        }
        const int s = state.front();
        if (eng_.left_descent(x, s)) {
            Word rotated(state.begin() + 1, state.end());
            rotated.push_back(s);
            ConeBasis sub =
                cambrian_basis_for_state(rotated, eng_.multiply(eng_.generator(s), x));
            for (IntVec& beta : sub) beta = eng_.reflect(s, beta);
            return sub;
        }
        Word dropped(state.begin() + 1, state.end());
        ConeBasis sub = cambrian_basis_for_state(dropped, x);
        sub.push_back(eng_.simple_root(s));
        return sub;
    }

    const CoxeterEngine& eng_;
    std::map<Key, ConeBasis> memo_;
    std::mutex mutex_;
};

// Whether the chamber of w lies in the cone cut out by the basis: each
// positive basis root must be outside N(w), each negative one inside (up to
// sign). Equivalently the basis functionals are non-negative on the chamber.
inline bool chamber_in_cone(const CoxeterEngine& eng, const GroupElement& w,
                            const ConeBasis& basis) {
    const InversionSet inv = eng.inversion_set(w);
    for (const IntVec& beta : basis) {
        if (is_positive(beta)) {
            if (inv.count(beta)) return false;
        } else if (is_negative(beta)) {
            if (!inv.count(negate(beta))) return false;
        } else {
            throw NotRootError("cone basis contains a sign-mixed vector: " +
                               root_to_string(beta));
        }
    }
    return true;
}

// Fiber of the projection computed geometrically: ball-filter by cone
// membership instead of by projecting each element.
inline FiberResult fiber_via_cone(CambrianFan& fan, const GroupElement& x,
                                  std::optional<int> len_bound = {},
                                  std::optional<std::size_t> budget = {}) {
    const CoxeterEngine& eng = fan.engine();
    if (!is_c_sortable(eng, x)) throw NotSortableError("element is not sortable");
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
    const ConeBasis basis = fan.cambrian_basis(x);
    Ball ball = eng.enumerate_ball(out.len_bound, budget);
    for (const GroupElement& w : ball.elements)
        if (chamber_in_cone(eng, w, basis)) out.elements.push_back(w);
    return out;
}

// Extreme rays of the cone: columns of the inverse of the basis matrix,
// scaled to primitive integer vectors. SingularError when the basis is
// degenerate.
inline std::vector<IntVec> cone_rays(const ConeBasis& basis) {
    if (basis.empty()) throw SingularError("empty cone basis has no rays");
    const int n = static_cast<int>(basis.front().size());
    if (static_cast<int>(basis.size()) != n)
        throw ShapeError("cone basis must contain exactly rank-many roots");
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(basis[static_cast<std::size_t>(i)].size()) != n)
            throw ShapeError("cone basis roots have mixed dimensions");
        for (int j = 0; j < n; ++j)
            m.at(i, j) = Rat(basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    RatMat inv = inverse(m);
    std::vector<IntVec> rays;
    rays.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> col(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = inv.at(i, j);
        rays.push_back(primitive_integer_direction(col));
    }
    return rays;
}

} // namespace cambrian
