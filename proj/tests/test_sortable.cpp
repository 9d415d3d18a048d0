#include <random>

#include "helpers.hpp"

using namespace cambrian;
using cambrian::testing::iv;
using cambrian::testing::make_engine;
using cambrian::testing::mats;
using cambrian::testing::whole_group;

namespace {

std::vector<GroupElement> sortable_elements(const CoxeterEngine& eng) {
    std::vector<GroupElement> out;
    for (const GroupElement& w : whole_group(eng).elements)
        if (is_c_sortable(eng, w)) out.push_back(w);
    return out;
}

} // namespace

TEST_CASE("leftmost word") {
    CoxeterEngine tri = make_engine("triangle");
    SortingWord sw = leftmost_word(tri, tri.from_word({1, 3, 2, 3, 1}));
    CHECK(sw.letters == Word{1, 2, 3, 2, 1});
    CHECK(sw.positions == std::vector<long>{1, 2, 3, 5, 7});
    CHECK(sw.blocks == std::vector<Word>{{1, 2, 3}, {2}, {1}});
    CHECK(sw.supports ==
          std::vector<std::set<int>>{{1, 2, 3}, {2}, {1}});
    CHECK(tri.from_word(sw.letters) == tri.from_word({1, 3, 2, 3, 1}));

    // The Coxeter element itself occupies the first n positions.
    for (const char* preset : {"a2", "a3", "d4", "triangle"}) {
        CoxeterEngine eng = make_engine(preset);
        SortingWord cw = leftmost_word(eng, eng.coxeter_element());
        CHECK(cw.letters == coxeter_word(eng.quiver()));
        for (std::size_t i = 0; i < cw.positions.size(); ++i)
            CHECK(cw.positions[i] == static_cast<long>(i) + 1);
    }

    CoxeterEngine a2 = make_engine("a2");
    SortingWord s2 = leftmost_word(a2, a2.generator(2));
    CHECK(s2.letters == Word{2});
    CHECK(s2.positions == std::vector<long>{2});

    SortingWord empty = leftmost_word(a2, a2.identity());
    CHECK(empty.letters.empty());
    CHECK(empty.blocks.empty());

    // Positions strictly increase and re-evaluate to the element, everywhere.
    CoxeterEngine a3 = make_engine("a3");
    for (const GroupElement& w : whole_group(a3).elements) {
        SortingWord lw = leftmost_word(a3, w);
        CHECK(a3.from_word(lw.letters) == w);
        CHECK(static_cast<int>(lw.letters.size()) == a3.length(w));
        for (std::size_t i = 1; i < lw.positions.size(); ++i)
            CHECK(lw.positions[i] > lw.positions[i - 1]);
    }
}

TEST_CASE("sortability") {
    CoxeterEngine a2 = make_engine("a2");
    CHECK(is_c_sortable(a2, a2.identity()).has_value());
    CHECK(is_c_sortable(a2, a2.identity())->blocks.empty());
    CHECK_FALSE(is_c_sortable(a2, a2.from_word({2, 1})).has_value());

    CoxeterEngine w123 = make_engine("w123");
    auto sw = is_c_sortable(w123, w123.from_word({1, 2, 3, 2}));
    REQUIRE(sw.has_value());
    CHECK(sw->blocks == std::vector<Word>{{1, 2, 3}, {2}});

    CoxeterEngine tri = make_engine("triangle");
    CHECK_FALSE(is_c_sortable(tri, tri.from_word({1, 3, 2, 3, 1})).has_value());
}

TEST_CASE("projection onto sortables") {
    CoxeterEngine a2 = make_engine("a2");
    CHECK(pi_c(a2, a2.from_word({2, 1})) == a2.generator(2));
    CHECK(pi_c(a2, a2.identity()) == a2.identity());

    CoxeterEngine tri = make_engine("triangle");
    CHECK(pi_c(tri, tri.from_word({1, 2, 3, 2, 1})) == tri.from_word({1, 2, 3, 2}));

    // Projection fixes sortables, lands below its argument, and is idempotent.
    for (const char* preset : {"a2", "a3"}) {
        CoxeterEngine eng = make_engine(preset);
        for (const GroupElement& w : whole_group(eng).elements) {
            GroupElement p = pi_c(eng, w);
            CHECK(is_c_sortable(eng, p).has_value());
            CHECK(eng.weak_leq(p, w));
            CHECK(pi_c(eng, p) == p);
            if (is_c_sortable(eng, w)) CHECK(p == w);
        }
    }

    std::mt19937 rng(515253u);
    std::uniform_int_distribution<int> letter(1, 3);
    for (int trial = 0; trial < 15; ++trial) {
        Word w;
        for (int k = 0; k < 8; ++k) w.push_back(letter(rng));
        GroupElement g = tri.from_word(w);
        GroupElement p = pi_c(tri, g);
        CHECK(is_c_sortable(tri, p).has_value());
        CHECK(tri.weak_leq(p, g));
        CHECK(pi_c(tri, p) == p);
    }
}

TEST_CASE("projection oracle") {
    CoxeterEngine a2 = make_engine("a2");
    CHECK(pi_c_oracle(a2, a2.identity()) == a2.identity());
    Ball ball2 = whole_group(a2);
    for (const GroupElement& w : ball2.elements)
        CHECK(pi_c_oracle(a2, w, &ball2) == pi_c(a2, w));

    CoxeterEngine a3 = make_engine("a3");
    Ball ball3 = whole_group(a3);
    for (const GroupElement& w : ball3.elements)
        CHECK(pi_c_oracle(a3, w, &ball3) == pi_c(a3, w));
}

TEST_CASE("layer roots") {
    CoxeterEngine tri = make_engine("triangle");
    std::vector<IntVec> roots = layer_roots(tri, {1, 2, 3, 1, 2, 1});
    REQUIRE(roots.size() == 6);
    CHECK(roots[0] == iv({1, 0, 0}));
    CHECK(roots[1] == iv({1, 1, 0}));
    CHECK(roots[2] == iv({2, 1, 1}));
    CHECK(roots[3] == iv({2, 2, 1}));
    CHECK(roots[4] == iv({3, 2, 2}));
    CHECK(roots[5] == iv({1, 0, 1}));

    CoxeterEngine a2 = make_engine("a2");
    CHECK(layer_roots(a2, {2}) == std::vector<IntVec>{iv({0, 1})});
    CHECK(layer_roots(a2, {1, 2}) ==
          std::vector<IntVec>{iv({1, 0}), iv({1, 1})});
    CHECK_THROWS_AS(layer_roots(a2, {1, 1}), NotReducedError);

    // As a set, the layer roots are the inversion set.
    CoxeterEngine a3 = make_engine("a3");
    for (const GroupElement& w : whole_group(a3).elements) {
        Word rw = a3.reduced_word(w);
        std::vector<IntVec> lr = layer_roots(a3, rw);
        CHECK(InversionSet(lr.begin(), lr.end()) == a3.inversion_set(w));
        CHECK(lr.size() == a3.inversion_set(w).size());
    }
}

TEST_CASE("root orbit classification") {
    for (const char* preset : {"a2", "a3", "triangle", "w123", "kronecker"}) {
        CoxeterEngine eng = make_engine(preset);
        RootReport rep = is_preprojective_root(eng, eng.simple_root(1));
        CHECK(rep.cls == RootClass::Preprojective);
        CHECK(rep.steps == 1);
    }

    CoxeterEngine tri = make_engine("triangle");
    CHECK(is_preprojective_root(tri, iv({1, 0, 1})).cls == RootClass::Regular);

    CoxeterEngine kron = make_engine("kronecker");
    CHECK(is_preprojective_root(kron, iv({0, 1})).cls == RootClass::Preinjective);

    CHECK_THROWS_AS(is_preprojective_root(tri, iv({1, 1, 1})), NotPositiveRootError);
    CHECK_THROWS_AS(is_preprojective_root(tri, iv({-1, 0, 0})), NotPositiveRootError);
    CoxeterEngine a3 = make_engine("a3");
    CHECK_THROWS_AS(is_preprojective_root(a3, iv({1, 0, 1})), NotPositiveRootError);

    // An explicit zero horizon forces the honest inconclusive verdict.
    CoxeterEngine a2 = make_engine("a2");
    RootReport capped = is_preprojective_root(a2, a2.simple_root(1), 0);
    CHECK(capped.cls == RootClass::UnknownAtHorizon);
    CHECK(capped.steps == 0);
}

TEST_CASE("boundedness") {
    CoxeterEngine w123 = make_engine("w123");
    BoundednessReport rep = is_bounded(w123, w123.from_word({1, 2, 3, 2}));
    CHECK(rep.verdict == Boundedness::Bounded);
    CHECK(rep.certificates.size() == 4);
    for (const RootCertificate& cert : rep.certificates)
        CHECK(cert.report.cls == RootClass::Preprojective);
    CHECK_FALSE(rep.witness.has_value());

    CoxeterEngine tri = make_engine("triangle");
    BoundednessReport bad = is_bounded(tri, tri.from_word({1, 2, 3, 2}));
    CHECK(bad.verdict == Boundedness::Unbounded);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == iv({1, 0, 1}));

    CHECK(is_bounded(tri, tri.identity()).verdict == Boundedness::Bounded);

    CoxeterEngine a3 = make_engine("a3");
    for (const GroupElement& x : sortable_elements(a3))
        CHECK(is_bounded(a3, x).verdict == Boundedness::Bounded);

    CoxeterEngine a2 = make_engine("a2");
    CHECK_THROWS_AS(is_bounded(a2, a2.from_word({2, 1})), NotSortableError);
}

TEST_CASE("antisortable climb") {
    CoxeterEngine w123 = make_engine("w123");
    AntisortableResult r = antisortable(w123, w123.from_word({1, 2, 3, 2}));
    REQUIRE(r.status == AntisortableResult::Status::Found);
    CHECK(*r.element == w123.from_word({1, 2, 3, 2, 1}));

    CoxeterEngine a2 = make_engine("a2");
    AntisortableResult r2 = antisortable(a2, a2.generator(2));
    REQUIRE(r2.status == AntisortableResult::Status::Found);
    CHECK(*r2.element == a2.from_word({2, 1}));

    GroupElement w0 = a2.from_word({1, 2, 1});
    AntisortableResult r3 = antisortable(a2, w0);
    REQUIRE(r3.status == AntisortableResult::Status::Found);
    CHECK(*r3.element == w0);
    CHECK(r3.steps == 0);

    CoxeterEngine tri = make_engine("triangle");
    CHECK(antisortable(tri, tri.from_word({1, 2, 3, 2})).status ==
          AntisortableResult::Status::DoesNotExist);

    CHECK(antisortable(a2, a2.generator(2), 0).status ==
          AntisortableResult::Status::Horizon);
    CHECK_THROWS_AS(antisortable(a2, a2.from_word({2, 1})), NotSortableError);

    // Cor-style certificate: every ascent of the fiber maximum projects
    // strictly above x.
    CoxeterEngine a3 = make_engine("a3");
    for (const GroupElement& x : sortable_elements(a3)) {
        AntisortableResult res = antisortable(a3, x);
        REQUIRE(res.status == AntisortableResult::Status::Found);
        const GroupElement& w = *res.element;
        for (int i = 1; i <= 3; ++i) {
            if (a3.right_descent(w, i)) continue;
            GroupElement up = pi_c(a3, a3.multiply(w, a3.generator(i)));
            CHECK(up != x);
            CHECK(a3.weak_less(x, up));
        }
    }

    // Monotone on covering pairs of sortables.
    std::vector<GroupElement> sorted3 = sortable_elements(a3);
    for (const GroupElement& x : sorted3)
        for (const GroupElement& y : sorted3) {
            if (!(a3.weak_less(x, y) && a3.length(y) == a3.length(x) + 1)) continue;
            GroupElement xh = *antisortable(a3, x).element;
            GroupElement yh = *antisortable(a3, y).element;
            CHECK(a3.weak_less(xh, yh));
        }
}

TEST_CASE("projection fibers") {
    CoxeterEngine a2 = make_engine("a2");
    FiberResult f2 = fiber(a2, a2.generator(2));
    CHECK(mats(f2.elements) ==
          mats({a2.generator(2), a2.from_word({2, 1})}));
    CHECK(f2.len_bound == 2);
    CHECK(f2.complete);

    FiberResult f1 = fiber(a2, a2.generator(1));
    CHECK(mats(f1.elements) == mats({a2.generator(1)}));
    CHECK(f1.complete);

    FiberResult fid = fiber(a2, a2.identity());
    CHECK(mats(fid.elements) == mats({a2.identity()}));

    CoxeterEngine tri = make_engine("triangle");
    GroupElement x = tri.from_word({1, 2, 3, 2});
    CHECK_THROWS_AS(fiber(tri, x), ResourceError);
    FiberResult ft = fiber(tri, x, 10);
    CHECK_FALSE(ft.complete);
    CHECK(ft.len_bound == 10);
    const Word long_word = {1, 2, 3, 2, 1, 3, 2, 1, 3, 2};
    std::set<IntMat> members = mats(ft.elements);
    for (std::size_t len = 6; len <= long_word.size(); ++len) {
        Word prefix(long_word.begin(), long_word.begin() + static_cast<long>(len));
        GroupElement g = tri.from_word(prefix);
        CHECK(tri.length(g) == static_cast<int>(len));
        CHECK(pi_c(tri, g) == x);
        CHECK(members.count(g.mat) == 1);
    }

    CHECK_THROWS_AS(fiber(a2, a2.generator(2), -1), RangeError);
    CHECK_THROWS_AS(fiber(a2, a2.from_word({2, 1})), NotSortableError);
    CHECK_THROWS_AS(fiber(tri, x, 10, 50), ResourceError);

    // Fibers partition the group: every element lands in exactly the fiber
    // of its projection.
    CoxeterEngine a3 = make_engine("a3");
    std::vector<GroupElement> sorted3 = sortable_elements(a3);
    std::size_t covered = 0;
    for (const GroupElement& s : sorted3) {
        FiberResult fr = fiber(a3, s);
        CHECK(fr.complete);
        for (const GroupElement& w : fr.elements) CHECK(pi_c(a3, w) == s);
        covered += fr.elements.size();
    }
    CHECK(covered == 24);
}
