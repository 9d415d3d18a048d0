#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cambrian/coxeter.hpp"
#include "cambrian/errors.hpp"
#include "cambrian/numeric.hpp"
#include "cambrian/quiver.hpp"
#include "cambrian/sortable.hpp"

namespace cambrian {

// Apply the Coxeter transformation (power may be negative). Positive powers
// move dimension vectors one step against the projective direction.
inline IntVec coxeter_transform(const CoxeterEngine& eng, const IntVec& beta,
                                long power = 1) {
    const IntMat& m = power >= 0 ? eng.coxeter_element().mat : eng.coxeter_element().inv;
    IntVec v = beta;
    for (long k = 0; k < (power >= 0 ? power : -power); ++k) v = m.apply(v);
    return v;
}

// Slot (copy, letter) in the standard enumeration of the preprojective
// component; position in the repeated Coxeter word is copy * n + letter.
struct PreprojectiveIndex {
    long copy = 0;
    int letter = 0;

    long position(int n) const { return copy * n + letter; }
    bool operator==(const PreprojectiveIndex& o) const {
        return copy == o.copy && letter == o.letter;
    }
    bool operator<(const PreprojectiveIndex& o) const {
        return copy != o.copy ? copy < o.copy : letter < o.letter;
    }
};

inline std::string module_name(const PreprojectiveIndex& idx) {
    if (idx.copy == 0) return "P_" + std::to_string(idx.letter);
    return "tau^-" + std::to_string(idx.copy) + " P_" + std::to_string(idx.letter);
}

namespace detail {

// Orbits of the projective dimension vectors under the Coxeter
// transformation, letter by letter, truncated at max_copies entries each.
// In Dynkin type orbits stop when they leave the positive cone.
inline std::vector<std::vector<IntVec>> preprojective_orbits(const CoxeterEngine& eng,
                                                             long max_copies) {
    const int n = eng.rank();
    std::vector<std::vector<IntVec>> orbits(static_cast<std::size_t>(n));
    GroupElement prefix = eng.identity();
    for (int i = 1; i <= n; ++i) {
        IntVec p = prefix.mat.apply(eng.simple_root(i));
        auto& orbit = orbits[static_cast<std::size_t>(i) - 1];
        IntVec cur = p;
        for (long m = 0; m < max_copies && is_positive(cur); ++m) {
            orbit.push_back(cur);
            cur = coxeter_transform(eng, cur, 1);
        }
        prefix = eng.multiply(prefix, eng.generator(i));
    }
    return orbits;
}

} // namespace detail

// First `count` preprojective dimension vectors in slot order: copies
// ascending, letters ascending within a copy, skipping dead orbit slots.
// RangeError when a Dynkin component runs out before count entries.
inline std::vector<std::pair<PreprojectiveIndex, IntVec>> preprojective_dims(
    const CoxeterEngine& eng, long count) {
    if (count < 0) throw RangeError("count must be non-negative");
    const int n = eng.rank();
    const long max_copies = count + 1;
    auto orbits = detail::preprojective_orbits(eng, max_copies);
    std::vector<std::pair<PreprojectiveIndex, IntVec>> out;
    for (long m = 0; m < max_copies && static_cast<long>(out.size()) < count; ++m) {
        bool any = false;
        for (int i = 1; i <= n && static_cast<long>(out.size()) < count; ++i) {
            const auto& orbit = orbits[static_cast<std::size_t>(i) - 1];
            if (m < static_cast<long>(orbit.size())) {
                out.push_back({{m, i}, orbit[static_cast<std::size_t>(m)]});
                any = true;
            }
        }
        if (!any) break;
    }
    if (static_cast<long>(out.size()) < count)
        throw RangeError("component has only " + std::to_string(out.size()) +
                         " preprojective modules");
    return out;
}

// Total size of the preprojective component when finite (Dynkin).
inline std::optional<long> preprojective_total(const CoxeterEngine& eng) {
    if (!eng.is_dynkin()) return std::nullopt;
    long bound = 4;
    for (;;) {
        auto orbits = detail::preprojective_orbits(eng, bound);
        bool saturated = true;
        long total = 0;
        for (const auto& orbit : orbits) {
            total += static_cast<long>(orbit.size());
            if (static_cast<long>(orbit.size()) == bound) saturated = false;
        }
        if (saturated) return total;
        bound *= 2;
    }
}

// Slots named by the leftmost-word positions of w. For the maximum of a
// projection fiber these are exactly the modules removed from the torsion
// class of the underlying sortable element.
inline std::vector<PreprojectiveIndex> removed_modules(const CoxeterEngine& eng,
                                                       const GroupElement& w) {
    const int n = eng.rank();
    std::vector<PreprojectiveIndex> out;
    for (long k : leftmost_word(eng, w).positions)
        out.push_back({(k - 1) / n, static_cast<int>((k - 1) % n) + 1});
    return out;
}

// Finite-dimensional representation of the opposite quiver: maps[k] realizes
// arrow k = (j, i) of the base quiver as a linear map V_i -> V_j.
struct Representation {
    std::vector<int> dims;
    std::vector<RatMat> maps;
};

inline void check_shape(const Quiver& q, const Representation& x) {
    if (static_cast<int>(x.dims.size()) != q.n || x.maps.size() != q.arrows.size())
        throw ShapeError("representation does not match the quiver");
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        const auto& [j, i] = q.arrows[k];
        if (x.maps[k].rows != x.dims[static_cast<std::size_t>(j) - 1] ||
            x.maps[k].cols != x.dims[static_cast<std::size_t>(i) - 1])
            throw ShapeError("representation map " + std::to_string(k) + " has wrong shape");
    }
}

// dim Hom as the corank of the intertwining system, solved exactly.
inline int hom_dim(const Quiver& q, const Representation& x, const Representation& y) {
    check_shape(q, x);
    check_shape(q, y);
    std::vector<int> offset(static_cast<std::size_t>(q.n) + 1, 0);
    for (int v = 1; v <= q.n; ++v)
        offset[static_cast<std::size_t>(v)] =
            offset[static_cast<std::size_t>(v) - 1] +
            x.dims[static_cast<std::size_t>(v) - 1] * y.dims[static_cast<std::size_t>(v) - 1];
    const int vars = offset[static_cast<std::size_t>(q.n)];
    // Variable phi_v[r][c] sits at offset[v-1] + r * xdim_v + c.
    auto var = [&](int v, int r, int c) {
        return offset[static_cast<std::size_t>(v) - 1] +
               r * x.dims[static_cast<std::size_t>(v) - 1] + c;
    };
    int eqs = 0;
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        const auto& [j, i] = q.arrows[k];
        eqs += y.dims[static_cast<std::size_t>(j) - 1] * x.dims[static_cast<std::size_t>(i) - 1];
    }
    RatMat a(eqs, vars);
    int row = 0;
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        const auto& [j, i] = q.arrows[k];
        const int xdi = x.dims[static_cast<std::size_t>(i) - 1];
        const int ydj = y.dims[static_cast<std::size_t>(j) - 1];
        // phi_j X_k - Y_k phi_i = 0, entry by entry.
        for (int r = 0; r < ydj; ++r)
            for (int c = 0; c < xdi; ++c) {
                for (int m = 0; m < x.dims[static_cast<std::size_t>(j) - 1]; ++m)
                    a.at(row, var(j, r, m)) += x.maps[k].at(m, c);
                for (int m = 0; m < y.dims[static_cast<std::size_t>(i) - 1]; ++m)
                    a.at(row, var(i, m, c)) -= y.maps[k].at(r, m);
                ++row;
            }
    }
    return vars - rank(std::move(a));
}

// Euler form of the path algebra: hom minus ext on dimension vectors.
inline Int euler_form(const Quiver& q, const IntVec& d, const IntVec& e) {
    if (static_cast<int>(d.size()) != q.n || static_cast<int>(e.size()) != q.n)
        throw ShapeError("dimension vector does not match the quiver");
    Int r = 0;
    for (int v = 0; v < q.n; ++v) r += d[static_cast<std::size_t>(v)] * e[static_cast<std::size_t>(v)];
    for (const auto& [j, i] : q.arrows)
        r -= d[static_cast<std::size_t>(i) - 1] * e[static_cast<std::size_t>(j) - 1];
    return r;
}

// Build the unique indecomposable with the given positive real root as
// dimension vector: walk the root to a simple with sink reflections, then
// pull the simple back with the inverse reflection functors.
inline Representation build_indecomposable(const CoxeterEngine& eng, const IntVec& beta) {
    if (!eng.is_dynkin())
        throw NotDynkinError("indecomposables are only constructed in Dynkin type");
    if (!is_positive(beta) || !eng.is_real_root(beta))
        throw NotRootError("not a positive real root: " + root_to_string(beta));
    const Quiver& q = eng.quiver();
    const int n = q.n;

    // Forward walk on dimension vectors, cycling sinks 1, 2, ..., n.
    std::vector<int> seq;
    std::vector<IntVec> trajectory{beta};
    IntVec d = beta;
    int target = 0;
    const long guard = static_cast<long>(n) * 512;
    for (long step = 0;; ++step) {
        if (step > guard) throw ShapeError("reflection walk failed to reach a simple root");
        const int t = static_cast<int>(step % n) + 1;
        if (d == eng.simple_root(t)) { target = t; break; }
        d = eng.reflect(t, d);
        seq.push_back(t);
        trajectory.push_back(d);
    }

    // Arrow direction per step: false means the original orientation
    // (arrow k realized as V_i -> V_j), true the reverse.
    std::vector<bool> flipped(q.arrows.size(), false);
    for (int t : seq)
        for (std::size_t k = 0; k < q.arrows.size(); ++k)
            if (q.arrows[k].first == t || q.arrows[k].second == t)
                flipped[k] = !flipped[k];

    auto arrow_from = [&](std::size_t k) {
        return flipped[k] ? q.arrows[k].first : q.arrows[k].second;
    };
    auto arrow_to = [&](std::size_t k) {
        return flipped[k] ? q.arrows[k].second : q.arrows[k].first;
    };

    Representation rep;
    rep.dims.assign(static_cast<std::size_t>(n), 0);
    rep.dims[static_cast<std::size_t>(target) - 1] = 1;
    rep.maps.resize(q.arrows.size());
    for (std::size_t k = 0; k < q.arrows.size(); ++k)
        rep.maps[k] = RatMat(rep.dims[static_cast<std::size_t>(arrow_to(k)) - 1],
                             rep.dims[static_cast<std::size_t>(arrow_from(k)) - 1]);

    // Backward walk: each recorded sink is now a source; take cokernels.
    for (std::size_t j = seq.size(); j-- > 0;) {
        const int t = seq[j];
        std::vector<std::size_t> incident;
        for (std::size_t k = 0; k < q.arrows.size(); ++k)
            if (arrow_from(k) == t) incident.push_back(k);
        for (std::size_t k = 0; k < q.arrows.size(); ++k)
            if (arrow_to(k) == t)
                throw ShapeError("reflection walk orientation invariant broken");
        std::vector<RatMat> blocks;
        for (std::size_t k : incident) blocks.push_back(rep.maps[k]);
        RatMat g = vstack(blocks, rep.dims[static_cast<std::size_t>(t) - 1]);
        RatMat p = cokernel_projection(g);
        rep.dims[static_cast<std::size_t>(t) - 1] = p.rows;
        int off = 0;
        for (std::size_t k : incident) {
            const int ucols = rep.maps[k].rows;
            RatMat restricted(p.rows, ucols);
            for (int r = 0; r < p.rows; ++r)
                for (int c = 0; c < ucols; ++c) restricted.at(r, c) = p.at(r, off + c);
            rep.maps[k] = restricted;
            flipped[k] = !flipped[k];
            off += ucols;
        }
        // The dimension vector must retrace the forward trajectory.
        const IntVec& expect = trajectory[j];
        for (int v = 0; v < n; ++v)
            if (expect[static_cast<std::size_t>(v)] != rep.dims[static_cast<std::size_t>(v)])
                throw ShapeError("reflection functor lost the dimension vector");
    }
    for (std::size_t k = 0; k < q.arrows.size(); ++k)
        if (flipped[k]) throw ShapeError("reflection walk did not restore orientation");
    return rep;
}

using IndecSet = std::set<IntVec>;

// Dynkin module category: all indecomposables, exact hom/ext tables, and the
// perpendicular calculus on subsets of indecomposables.
class ModuleCategory {
public:
    explicit ModuleCategory(const CoxeterEngine& eng) : eng_(eng), quiver_(eng.quiver()) {
        if (!eng.is_dynkin())
            throw NotDynkinError("module category tables require Dynkin type");
        std::set<IntVec> pos;
        std::vector<IntVec> frontier;
        for (int i = 1; i <= quiver_.n; ++i) {
            pos.insert(eng.simple_root(i));
            frontier.push_back(eng.simple_root(i));
        }
        while (!frontier.empty()) {
            std::vector<IntVec> next;
            for (const IntVec& beta : frontier)
                for (int i = 1; i <= quiver_.n; ++i) {
                    IntVec gamma = eng.reflect(i, beta);
                    if (is_positive(gamma) && pos.insert(gamma).second)
                        next.push_back(gamma);
                }
            frontier = std::move(next);
        }
        roots_.assign(pos.begin(), pos.end());
        for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = i;
        for (const IntVec& beta : roots_) reps_.push_back(build_indecomposable(eng, beta));
        const std::size_t m = roots_.size();
        hom_.assign(m * m, 0);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                hom_[a * m + b] = cambrian::hom_dim(quiver_, reps_[a], reps_[b]);
    }

    const CoxeterEngine& engine() const { return eng_; }
    const std::vector<IntVec>& indecomposables() const { return roots_; }

    const Representation& rep(const IntVec& beta) const {
        return reps_[index_of(beta)];
    }

    int hom_dim(const IntVec& x, const IntVec& y) const {
        return hom_[index_of(x) * roots_.size() + index_of(y)];
    }

    Int euler(const IntVec& d, const IntVec& e) const { return euler_form(quiver_, d, e); }

    int ext_dim(const IntVec& x, const IntVec& y) const {
        Int e = Int(hom_dim(x, y)) - euler_form(quiver_, x, y);
        if (e < 0) throw ShapeError("negative ext dimension; tables are inconsistent");
        return e.convert_to<int>();
    }

    // Dimension vector of the translate tau X, when X is not projective.
    std::optional<IntVec> tau(const IntVec& beta) const {
        index_of(beta);
        IntVec t = eng_.coxeter_element().inv.apply(beta);
        if (!is_positive(t)) return std::nullopt;
        return t;
    }

    IndecSet perp_right(const IndecSet& s) const {
        IndecSet out;
        for (const IntVec& x : s) index_of(x);
        for (const IntVec& z : roots_) {
            bool ok = true;
            for (const IntVec& x : s)
                if (hom_dim(x, z) != 0) { ok = false; break; }
            if (ok) out.insert(z);
        }
        return out;
    }

    IndecSet perp_left(const IndecSet& s) const {
        IndecSet out;
        for (const IntVec& x : s) index_of(x);
        for (const IntVec& z : roots_) {
            bool ok = true;
            for (const IntVec& x : s)
                if (hom_dim(z, x) != 0) { ok = false; break; }
            if (ok) out.insert(z);
        }
        return out;
    }

    bool is_torsion_class(const IndecSet& s) const { return s == perp_left(perp_right(s)); }
    bool is_torsion_free_class(const IndecSet& s) const {
        return s == perp_right(perp_left(s));
    }

    // All double-perp-stable subsets, by exhaustive bitmask scan.
    std::vector<IndecSet> all_torsion_free_classes() const {
        const std::size_t m = roots_.size();
        if (m > 20) throw ResourceError("too many indecomposables for exhaustive scan");
        std::vector<std::uint32_t> into(m, 0), from(m, 0);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (hom_[a * m + b] != 0) {
                    into[b] |= static_cast<std::uint32_t>(1) << a;
                    from[a] |= static_cast<std::uint32_t>(1) << b;
                }
        std::vector<IndecSet> out;
        for (std::uint32_t s = 0; s < (static_cast<std::uint32_t>(1) << m); ++s) {
            std::uint32_t left = 0;
            for (std::size_t z = 0; z < m; ++z)
                if ((from[z] & s) == 0) left |= static_cast<std::uint32_t>(1) << z;
            std::uint32_t stable = 0;
            for (std::size_t z = 0; z < m; ++z)
                if ((into[z] & left) == 0) stable |= static_cast<std::uint32_t>(1) << z;
            if (stable == s) {
                IndecSet cls;
                for (std::size_t z = 0; z < m; ++z)
                    if (s & (static_cast<std::uint32_t>(1) << z)) cls.insert(roots_[z]);
                out.push_back(std::move(cls));
            }
        }
        return out;
    }

private:
    std::size_t index_of(const IntVec& beta) const {
        auto it = index_.find(beta);
        if (it == index_.end())
            throw NotRootError("not an indecomposable dimension vector: " +
                               root_to_string(beta));
        return it->second;
    }

    const CoxeterEngine& eng_;
    const Quiver& quiver_;
    std::vector<IntVec> roots_;
    std::map<IntVec, std::size_t> index_;
    std::vector<Representation> reps_;
    std::vector<int> hom_;
};

struct TorsionPairReport {
    GroupElement sortable;
    GroupElement antisortable;
    IndecSet torsion;
    IndecSet torsion_free;
    bool torsion_eq_perp_left = false;
    bool torsion_free_eq_perp_right = false;
    bool torsion_is_torsion_class = false;
    bool torsion_free_is_torsion_free_class = false;
    bool hom_vanishes = false;

    bool all_pass() const {
        return torsion_eq_perp_left && torsion_free_eq_perp_right &&
               torsion_is_torsion_class && torsion_free_is_torsion_free_class &&
               hom_vanishes;
    }
};

// The torsion pair attached to a sortable element: torsion-free part spanned
// by its sorting-word roots, torsion part the complement of the modules
// removed by the fiber maximum. The five checks certify the pair.
inline TorsionPairReport torsion_pair_for_sortable(const ModuleCategory& mc,
                                                   const GroupElement& x) {
    const CoxeterEngine& eng = mc.engine();
    auto sw = is_c_sortable(eng, x);
    if (!sw) throw NotSortableError("element is not sortable");
    TorsionPairReport out;
    out.sortable = x;
    AntisortableResult anti = antisortable(eng, x);
    if (anti.status != AntisortableResult::Status::Found)
        throw ShapeError("projection fiber lost its maximum in Dynkin type");
    out.antisortable = *anti.element;
    for (const IntVec& beta : layer_roots(eng, sw->letters)) out.torsion_free.insert(beta);

    const long total = preprojective_total(eng).value();
    auto table = preprojective_dims(eng, total);
    std::map<PreprojectiveIndex, IntVec> slot;
    for (const auto& [idx, root] : table) slot[idx] = root;
    IndecSet removed;
    for (const PreprojectiveIndex& idx : removed_modules(eng, out.antisortable)) {
        auto it = slot.find(idx);
        if (it == slot.end())
            throw ShapeError("removed module slot " + module_name(idx) + " does not exist");
        removed.insert(it->second);
    }
    for (const IntVec& beta : mc.indecomposables())
        if (!removed.count(beta)) out.torsion.insert(beta);

    out.torsion_eq_perp_left = out.torsion == mc.perp_left(out.torsion_free);
    out.torsion_free_eq_perp_right = out.torsion_free == mc.perp_right(out.torsion);
    out.torsion_is_torsion_class = mc.is_torsion_class(out.torsion);
    out.torsion_free_is_torsion_free_class = mc.is_torsion_free_class(out.torsion_free);
    out.hom_vanishes = true;
    for (const IntVec& t : out.torsion)
        for (const IntVec& f : out.torsion_free)
            if (mc.hom_dim(t, f) != 0) out.hom_vanishes = false;
    return out;
}

struct SupportTiltingReport {
    // (last position of the letter in the sorting word, summand root),
    // ordered by position.
    std::vector<std::pair<int, IntVec>> summands;
    bool count_matches = false;
    bool ext_checked = false;
    bool ext_vanishes = false;
};

// Summands of the support tilting module of a sortable element: for each
// letter of the first block, the sorting-word root at that letter's last
// occurrence. Ext-vanishing is certified against the module category in
// Dynkin type; otherwise only the count and word invariants are checked.
inline SupportTiltingReport support_tilting_check(const CoxeterEngine& eng,
                                                  const GroupElement& x,
                                                  const ModuleCategory* mc = nullptr) {
    auto sw = is_c_sortable(eng, x);
    if (!sw) throw NotSortableError("element is not sortable");
    SupportTiltingReport out;
    const std::vector<IntVec> roots = layer_roots(eng, sw->letters);
    const std::set<int>& support =
        sw->supports.empty() ? std::set<int>{} : sw->supports.front();
    std::map<int, int> last;
    for (std::size_t k = 0; k < sw->letters.size(); ++k)
        last[sw->letters[k]] = static_cast<int>(k) + 1;
    for (const auto& [letter, t] : last)
        if (!support.count(letter))
            throw ShapeError("sorting word letter outside its first block support");
    std::vector<std::pair<int, IntVec>> summands;
    for (int letter : support)
        summands.emplace_back(last.at(letter), roots[static_cast<std::size_t>(last.at(letter)) - 1]);
    std::sort(summands.begin(), summands.end());
    out.summands = std::move(summands);
    std::set<IntVec> distinct;
    for (const auto& [t, beta] : out.summands) distinct.insert(beta);
    out.count_matches = distinct.size() == support.size();
    if (mc && eng.is_dynkin()) {
        out.ext_checked = true;
        out.ext_vanishes = true;
        for (const auto& [ta, a] : out.summands)
            for (const auto& [tb, b] : out.summands)
                if (mc->ext_dim(a, b) != 0) out.ext_vanishes = false;
    }
    return out;
}

struct ArQuiverData {
    std::vector<std::pair<PreprojectiveIndex, IntVec>> entries;
    std::set<PreprojectiveIndex> removed;
    std::vector<std::pair<PreprojectiveIndex, PreprojectiveIndex>> edges;
};

inline std::string ar_node_id(const PreprojectiveIndex& idx) {
    return "m" + std::to_string(idx.copy) + "_" + std::to_string(idx.letter);
}

// Preprojective component as data: vertical edges inside a copy follow the
// quiver arrows, diagonal edges close each mesh into the next copy. Slots
// named by the leftmost word of remove_for are marked removed.
inline ArQuiverData ar_quiver_data(const CoxeterEngine& eng,
                                   const std::optional<GroupElement>& remove_for = {},
                                   std::optional<long> copies = {}) {
    const int n = eng.rank();
    ArQuiverData out;
    if (eng.is_dynkin()) {
        out.entries = preprojective_dims(eng, preprojective_total(eng).value());
    } else {
        const long cap = copies.value_or(4);
        if (cap <= 0) throw RangeError("copy cap must be positive");
        out.entries = preprojective_dims(eng, cap * n);
    }
    if (remove_for)
        for (const PreprojectiveIndex& idx : removed_modules(eng, *remove_for))
            out.removed.insert(idx);
    std::set<PreprojectiveIndex> slot;
    for (const auto& [idx, root] : out.entries) slot.insert(idx);
    long max_copy = 0;
    for (const auto& [idx, root] : out.entries) max_copy = std::max(max_copy, idx.copy);
    for (long m = 0; m <= max_copy; ++m)
        for (const auto& [j, i] : eng.quiver().arrows) {
            PreprojectiveIndex a{m, j}, b{m, i}, c{m + 1, j};
            if (slot.count(a) && slot.count(b)) out.edges.push_back({a, b});
            if (slot.count(b) && slot.count(c)) out.edges.push_back({b, c});
        }
    return out;
}

// DOT rendering of the preprojective component; removed slots filled grey.
inline std::string ar_quiver_dot(const CoxeterEngine& eng,
                                 const std::optional<GroupElement>& remove_for = {},
                                 std::optional<long> copies = {}) {
    ArQuiverData data = ar_quiver_data(eng, remove_for, copies);
    std::ostringstream os;
    os << "digraph preprojective {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (const auto& [idx, root] : data.entries) {
        os << "  " << ar_node_id(idx) << " [label=\"" << module_name(idx) << "\\n"
           << root_to_string(root) << "\"";
        if (data.removed.count(idx)) os << ", style=filled, fillcolor=\"#cccccc\"";
        os << "];\n";
    }
    for (const auto& [a, b] : data.edges)
        os << "  " << ar_node_id(a) << " -> " << ar_node_id(b) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace cambrian
