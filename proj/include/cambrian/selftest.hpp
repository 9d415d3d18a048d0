#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cambrian/cones.hpp"
#include "cambrian/rep.hpp"

namespace cambrian {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
    long long millis = 0;
};

namespace detail {

struct Check {
    bool pass = true;
    std::ostringstream notes;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        pass = false;
        append(what);
    }

    void note(const std::string& what) { append(what); }

    std::string str() const { return notes.str(); }

private:
    void append(const std::string& what) {
        if (notes.tellp() > 0) notes << "; ";
        notes << what;
    }
};

inline long long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// Whole group of a Dynkin engine; breadth-first search stops at the top.
inline Ball whole_group(const CoxeterEngine& eng) { return eng.enumerate_ball(64); }

inline std::vector<GroupElement> sortables_of(const CoxeterEngine& eng, const Ball& ball) {
    std::vector<GroupElement> out;
    for (const GroupElement& w : ball.elements)
        if (is_c_sortable(eng, w)) out.push_back(w);
    return out;
}

inline std::string show_word(const CoxeterEngine& eng, const GroupElement& w) {
    return "[" + word_to_string(eng.reduced_word(w)) + "]";
}

inline std::set<IntVec> to_set(const std::vector<IntVec>& v) {
    return std::set<IntVec>(v.begin(), v.end());
}

inline std::set<IntMat> element_mats(const std::vector<GroupElement>& v) {
    std::set<IntMat> out;
    for (const GroupElement& w : v) out.insert(w.mat);
    return out;
}

// Lexicographically first reduced embedding of w into copies of the Coxeter
// word, by depth-first search over raw position tuples. Deliberately
// independent of the greedy scanner it validates.
inline bool leftmost_brute(const CoxeterEngine& eng, const GroupElement& w,
                           const std::vector<int>& letters, std::size_t from,
                           GroupElement acc, int remaining, std::vector<long>& picked) {
    if (remaining == 0) return acc == w;
    for (std::size_t k = from; k + static_cast<std::size_t>(remaining) <= letters.size();
         ++k) {
        GroupElement next = eng.multiply(acc, eng.generator(letters[k]));
        if (eng.length(next) != eng.length(acc) + 1) continue;
        picked.push_back(static_cast<long>(k) + 1);
        if (leftmost_brute(eng, w, letters, k + 1, next, remaining - 1, picked))
            return true;
        picked.pop_back();
    }
    return false;
}

inline std::vector<long> leftmost_positions_brute(const CoxeterEngine& eng,
                                                  const GroupElement& w, long copies) {
    std::vector<int> letters;
    for (long m = 0; m < copies; ++m)
        for (int i = 1; i <= eng.rank(); ++i) letters.push_back(i);
    std::vector<long> picked;
    if (!leftmost_brute(eng, w, letters, 0, eng.identity(), eng.length(w), picked))
        throw ShapeError("no reduced embedding found within the copy budget");
    return picked;
}

inline void criterion_pi_oracle(Check& ck) {
    const auto t0 = std::chrono::steady_clock::now();
    long checked = 0;
    for (const char* preset : {"a2", "a3", "d4"}) {
        CoxeterEngine eng(parse_quiver(preset));
        Ball ball = whole_group(eng);
        for (const GroupElement& w : ball.elements) {
            if (pi_c(eng, w) != pi_c_oracle(eng, w, &ball)) {
                ck.expect(false, std::string(preset) + ": projection differs from oracle at " +
                                     show_word(eng, w));
                return;
            }
            ++checked;
        }
    }
    ck.expect(checked == 222, "expected 222 elements, saw " + std::to_string(checked));
    ck.expect(ms_since(t0) < 5000, "runtime exceeds the 5000 ms budget");
    ck.note(std::to_string(checked) + " elements agree within the time budget");
}

inline void criterion_a2_cone_fiber(Check& ck) {
    CoxeterEngine eng(parse_quiver("a2"));
    CambrianFan fan(eng);
    const GroupElement x = eng.from_word({2});

    std::set<IntVec> basis = to_set(fan.cambrian_basis(x));
    std::set<IntVec> expected_basis = {negate(eng.simple_root(2)), eng.simple_root(1)};
    ck.expect(basis == expected_basis, "cone basis of the second generator is wrong");

    FiberResult direct = fiber(eng, x);
    std::set<IntMat> got = element_mats(direct.elements);
    std::set<IntMat> expected = {eng.from_word({2}).mat, eng.from_word({2, 1}).mat};
    ck.expect(got == expected, "projection fiber of the second generator is wrong");
    ck.expect(direct.complete, "fiber search did not certify completeness");

    FiberResult geometric = fiber_via_cone(fan, x);
    ck.expect(element_mats(geometric.elements) == got,
              "cone-membership fiber disagrees with the projection fiber");
    ck.note("basis and two-element fiber verified both ways");
}

inline void criterion_triangle_leftmost_removed(Check& ck) {
    CoxeterEngine eng(parse_quiver("triangle"));
    const GroupElement w = eng.from_word({1, 3, 2, 3, 1});

    SortingWord sw = leftmost_word(eng, w);
    ck.expect(word_to_string(sw.letters) == "1 2 3 2 1",
              "leftmost word is " + word_to_string(sw.letters));

    std::set<PreprojectiveIndex> removed;
    for (const PreprojectiveIndex& idx : removed_modules(eng, w)) removed.insert(idx);
    std::set<PreprojectiveIndex> expected = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 1}};
    ck.expect(removed == expected, "removed module slots are wrong");
    ck.note("leftmost word and five removed modules match");
}

inline void criterion_boundedness_pair(Check& ck) {
    CoxeterEngine wide(parse_quiver("w123"));
    const GroupElement x_wide = wide.from_word({1, 2, 3, 2});
    BoundednessReport b = is_bounded(wide, x_wide);
    ck.expect(b.verdict == Boundedness::Bounded,
              std::string("double-arrow quiver: expected Bounded, got ") + to_string(b.verdict));
    Word c3;
    for (int k = 0; k < 3; ++k)
        for (int i = 1; i <= 3; ++i) c3.push_back(i);
    ck.expect(wide.weak_leq(x_wide, wide.from_word(c3)),
              "bounded element is not below the cube of the Coxeter element");

    CoxeterEngine tri(parse_quiver("triangle"));
    BoundednessReport u = is_bounded(tri, tri.from_word({1, 2, 3, 2}));
    ck.expect(u.verdict == Boundedness::Unbounded,
              std::string("triangle quiver: expected Unbounded, got ") + to_string(u.verdict));
    ck.expect(u.witness.has_value(), "unbounded verdict carries no witness root");
    ck.note("bounded and unbounded sides verified with certificates");
}

inline void criterion_antisortable_exact(Check& ck) {
    CoxeterEngine wide(parse_quiver("w123"));
    AntisortableResult found = antisortable(wide, wide.from_word({1, 2, 3, 2}));
    ck.expect(found.status == AntisortableResult::Status::Found,
              std::string("double-arrow quiver: expected Found, got ") + to_string(found.status));
    if (found.element)
        ck.expect(*found.element == wide.from_word({1, 2, 3, 2, 1}),
                  "fiber maximum is " + show_word(wide, *found.element));

    CoxeterEngine tri(parse_quiver("triangle"));
    const GroupElement x = tri.from_word({1, 2, 3, 2});
    AntisortableResult none = antisortable(tri, x);
    ck.expect(none.status == AntisortableResult::Status::DoesNotExist,
              std::string("triangle quiver: expected DoesNotExist, got ") + to_string(none.status));

    const Word climb = {1, 2, 3, 2, 1, 3, 2, 1, 3, 2};
    for (std::size_t len = 5; len <= climb.size(); ++len) {
        Word prefix(climb.begin(), climb.begin() + static_cast<long>(len));
        GroupElement w = tri.from_word(prefix);
        if (tri.length(w) != static_cast<int>(len)) {
            ck.expect(false, "climbing prefix of length " + std::to_string(len) +
                                 " is not reduced");
            continue;
        }
        ck.expect(pi_c(tri, w) == x, "climbing prefix of length " + std::to_string(len) +
                                         " projects elsewhere");
    }
    ck.note("exact maximum plus an unbounded fiber climbing through lengths 5..10");
}

inline void criterion_a3_torsion_pair(Check& ck) {
    CoxeterEngine eng(parse_quiver("a3"));
    ModuleCategory mc(eng);
    TorsionPairReport rep = torsion_pair_for_sortable(mc, eng.from_word({1, 3}));

    IndecSet expected_free = {{Int(1), Int(0), Int(0)}, {Int(0), Int(0), Int(1)}};
    IndecSet expected_torsion = {{Int(1), Int(1), Int(0)}, {Int(0), Int(1), Int(0)}};
    ck.expect(rep.torsion_free == expected_free, "torsion-free part is wrong");
    ck.expect(rep.torsion == expected_torsion, "torsion part is wrong");
    ck.expect(rep.antisortable == eng.from_word({1, 3, 2, 1}),
              "fiber maximum is " + show_word(eng, rep.antisortable));
    ck.expect(rep.all_pass(), "torsion pair checks failed");
    ck.note("two-plus-two torsion pair with fiber maximum of length four");
}

inline void criterion_torsion_scale(Check& ck) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::pair<const char*, std::size_t> cases[] = {
        {"a2", 5}, {"a3", 14}, {"d4", 50}};
    for (const auto& [preset, expected] : cases) {
        CoxeterEngine eng(parse_quiver(preset));
        ModuleCategory mc(eng);
        Ball ball = whole_group(eng);
        std::vector<GroupElement> sortables = sortables_of(eng, ball);
        for (const GroupElement& x : sortables) {
            if (!torsion_pair_for_sortable(mc, x).all_pass()) {
                ck.expect(false, std::string(preset) + ": torsion pair fails at " +
                                     show_word(eng, x));
                return;
            }
        }
        std::size_t classes = mc.all_torsion_free_classes().size();
        ck.expect(sortables.size() == expected,
                  std::string(preset) + ": " + std::to_string(sortables.size()) +
                      " sortable elements, expected " + std::to_string(expected));
        ck.expect(classes == expected,
                  std::string(preset) + ": " + std::to_string(classes) +
                      " stable classes, expected " + std::to_string(expected));
    }
    ck.expect(ms_since(t0) < 30000, "runtime exceeds the 30000 ms budget");
    ck.note("69 torsion pairs pass and 5/14/50 counts agree within the time budget");
}

inline void criterion_fiber_cone_scale(Check& ck) {
    for (const char* preset : {"a3", "d4"}) {
        CoxeterEngine eng(parse_quiver(preset));
        CambrianFan fan(eng);
        Ball ball = whole_group(eng);
        long fibers = 0;
        std::size_t covered = 0;
        for (const GroupElement& x : sortables_of(eng, ball)) {
            FiberResult direct = fiber(eng, x);
            FiberResult geometric = fiber_via_cone(fan, x);
            if (element_mats(direct.elements) != element_mats(geometric.elements)) {
                ck.expect(false, std::string(preset) + ": fibers disagree at " +
                                     show_word(eng, x));
                return;
            }
            ++fibers;
            covered += direct.elements.size();
        }
        // Fibers of a projection partition the group.
        ck.expect(covered == ball.elements.size(),
                  std::string(preset) + ": fibers cover " + std::to_string(covered) +
                      " of " + std::to_string(ball.elements.size()) + " elements");
        ck.note(std::string(preset) + ": " + std::to_string(fibers) +
                " fibers agree and partition the group");
    }
}

inline void criterion_certificate_scale(Check& ck) {
    CoxeterEngine eng(parse_quiver("a3"));
    Ball ball = whole_group(eng);
    long maxima = 0;
    for (const GroupElement& w : ball.elements) {
        GroupElement x = pi_c(eng, w);
        bool ascents_rise = true;
        for (int i = 1; i <= eng.rank(); ++i) {
            if (eng.right_descent(w, i)) continue;
            GroupElement proj = pi_c(eng, eng.multiply(w, eng.generator(i)));
            if (!eng.weak_less(x, proj)) { ascents_rise = false; break; }
        }
        AntisortableResult anti = antisortable(eng, x);
        if (anti.status != AntisortableResult::Status::Found) {
            ck.expect(false, "fiber maximum missing at " + show_word(eng, x));
            return;
        }
        const bool is_max = (*anti.element == w);
        if (ascents_rise != is_max) {
            ck.expect(false, "certificate disagrees with fiber maximum at " +
                                 show_word(eng, w));
            return;
        }
        if (is_max) ++maxima;
    }
    ck.expect(maxima == 14, "expected 14 fiber maxima, saw " + std::to_string(maxima));
    ck.note("all 24 elements certified; 14 fiber maxima");
}

inline void criterion_properties(Check& ck) {
    std::mt19937 rng(20240913u);

    // Words, inversion sets, and layer roots across every preset.
    for (const auto& entry : quiver_presets()) {
        const std::string& name = entry.first;
        CoxeterEngine eng(parse_quiver(name));
        std::uniform_int_distribution<int> letter(1, eng.rank());
        for (int trial = 0; trial < 25; ++trial) {
            Word raw(static_cast<std::size_t>(rng() % 20), 0);
            for (int& l : raw) l = letter(rng);
            GroupElement w = eng.from_word(raw);
            Word rw = eng.reduced_word(w);
            InversionSet inv = eng.inversion_set(w);
            ck.expect(static_cast<std::size_t>(eng.length(w)) == inv.size(),
                      name + ": length differs from inversion count");
            std::set<IntVec> layers = to_set(layer_roots(eng, rw));
            ck.expect(layers == std::set<IntVec>(inv.begin(), inv.end()),
                      name + ": layer roots differ from the inversion set");
            for (int i = 1; i <= eng.rank(); ++i) {
                IntVec beta(static_cast<std::size_t>(eng.rank()));
                for (Int& x : beta) x = Int(static_cast<int>(rng() % 7)) - 3;
                ck.expect(eng.reflect(i, eng.reflect(i, beta)) == beta,
                          name + ": reflection is not an involution");
            }
            if (!ck.pass) return;
        }
    }

    // Dimension identities over every indecomposable pair in both categories.
    for (const char* preset : {"a3", "d4"}) {
        CoxeterEngine eng(parse_quiver(preset));
        ModuleCategory mc(eng);
        for (const IntVec& x : mc.indecomposables()) {
            ck.expect(mc.hom_dim(x, x) == 1,
                      std::string(preset) + ": endomorphisms of " + root_to_string(x) +
                          " are not one-dimensional");
            for (const IntVec& y : mc.indecomposables()) {
                Int euler = mc.euler(x, y);
                int ext = mc.ext_dim(x, y);
                ck.expect(Int(mc.hom_dim(x, y)) - Int(ext) == euler,
                          std::string(preset) + ": dimension form identity fails");
                std::optional<IntVec> tx = mc.tau(x);
                int dual = tx ? mc.hom_dim(y, *tx) : 0;
                ck.expect(ext == dual,
                          std::string(preset) + ": translate duality fails at (" +
                              root_to_string(x) + ", " + root_to_string(y) + ")");
            }
            if (!ck.pass) return;
        }
    }

    // Greedy scanner positions are lexicographically minimal, by raw search.
    for (const char* preset : {"a2", "a3"}) {
        CoxeterEngine eng(parse_quiver(preset));
        Ball ball = whole_group(eng);
        long top = 0;
        for (int len : ball.lengths) top = std::max(top, static_cast<long>(len));
        for (const GroupElement& w : ball.elements) {
            std::vector<long> greedy = leftmost_word(eng, w).positions;
            std::vector<long> brute = leftmost_positions_brute(eng, w, top);
            if (greedy != brute) {
                ck.expect(false, std::string(preset) +
                                     ": greedy scanner is not minimal at " + show_word(eng, w));
                return;
            }
        }
    }

    ck.note("word, form, and minimality suites all pass");
}

} // namespace detail

struct Criterion {
    std::string name;
    std::function<void(detail::Check&)> run;
};

inline const std::vector<Criterion>& all_criteria() {
    static const std::vector<Criterion> table = {
        {"pi-oracle", detail::criterion_pi_oracle},
        {"a2-cone-fiber", detail::criterion_a2_cone_fiber},
        {"triangle-leftmost-removed", detail::criterion_triangle_leftmost_removed},
        {"boundedness-pair", detail::criterion_boundedness_pair},
        {"antisortable-exact", detail::criterion_antisortable_exact},
        {"a3-torsion-pair", detail::criterion_a3_torsion_pair},
        {"torsion-scale", detail::criterion_torsion_scale},
        {"fiber-cone-scale", detail::criterion_fiber_cone_scale},
        {"certificate-scale", detail::criterion_certificate_scale},
        {"properties", detail::criterion_properties},
    };
    return table;
}

inline CriterionResult run_criterion(const Criterion& c) {
    CriterionResult out;
    out.name = c.name;
    const auto t0 = std::chrono::steady_clock::now();
    detail::Check ck;
    try {
        c.run(ck);
        out.pass = ck.pass;
        out.detail = ck.str();
    } catch (const Error& e) {
        out.pass = false;
        out.detail = std::string(e.type()) + ": " + e.what();
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = e.what();
    }
    out.millis = detail::ms_since(t0);
    return out;
}

// Run all criteria, or the single one named by `only`.
inline std::vector<CriterionResult> run_criteria(const std::string& only = "") {
    std::vector<CriterionResult> out;
    bool matched = false;
    for (const Criterion& c : all_criteria()) {
        if (!only.empty() && c.name != only) continue;
        matched = true;
        out.push_back(run_criterion(c));
    }
    if (!only.empty() && !matched)
        throw RangeError("unknown criterion: " + only);
    return out;
}

} // namespace cambrian
