#include <cstdlib>
#include <random>

#include "helpers.hpp"

using namespace cambrian;
using cambrian::testing::iv;
using cambrian::testing::make_engine;
using cambrian::testing::whole_group;

TEST_CASE("generators are involutions") {
    for (const auto& entry : quiver_presets()) {
        CoxeterEngine eng = make_engine(entry.first);
        for (int i = 1; i <= eng.rank(); ++i) {
            GroupElement s = eng.generator(i);
            CHECK(eng.multiply(s, s) == eng.identity());
            CHECK(eng.inverse(s) == s);
        }
    }
}

TEST_CASE("relations hold in the matrix model") {
    CoxeterEngine a2 = make_engine("a2");
    CHECK(a2.from_word({1, 2, 1}) == a2.from_word({2, 1, 2}));
    CHECK(a2.from_word({1, 2}) != a2.from_word({2, 1}));

    CoxeterEngine a3 = make_engine("a3");
    CHECK(a3.from_word({1, 3}) == a3.from_word({3, 1}));
}

TEST_CASE("reflection action on roots") {
    CoxeterEngine a2 = make_engine("a2");
    CHECK(a2.reflect(1, a2.simple_root(2)) == iv({1, 1}));
    CHECK(a2.reflect(1, a2.simple_root(1)) == iv({-1, 0}));
    CHECK(a2.reflect(2, a2.simple_root(2)) == iv({0, -1}));

    CoxeterEngine w123 = make_engine("w123");
    CHECK(w123.reflect(2, w123.simple_root(3)) == iv({0, 2, 1}));

    CHECK_THROWS_AS(a2.reflect(0, a2.simple_root(1)), IndexError);
    CHECK_THROWS_AS(a2.reflect(3, a2.simple_root(1)), IndexError);
    CHECK_THROWS_AS(a2.reflect(1, iv({1, 0, 0})), ShapeError);
}

TEST_CASE("pairing and real roots") {
    CoxeterEngine a2 = make_engine("a2");
    CHECK(a2.pairing(a2.simple_root(1), a2.simple_root(2)) == -1);
    CHECK(a2.pairing(a2.simple_root(1), a2.simple_root(1)) == 2);
    CHECK(a2.is_real_root(iv({1, 1})));

    CoxeterEngine tri = make_engine("triangle");
    IntVec delta = iv({1, 1, 1});
    CHECK(tri.pairing(delta, delta) == 0);
    CHECK_FALSE(tri.is_real_root(delta));
}

TEST_CASE("descents") {
    CoxeterEngine a2 = make_engine("a2");
    GroupElement w = a2.from_word({1, 2});
    CHECK(a2.left_descent(w, 1));
    CHECK_FALSE(a2.left_descent(w, 2));
    CHECK(a2.right_descent(a2.from_word({2, 1}), 1));
    CHECK(a2.left_descents(w) == std::vector<int>{1});
    CHECK(a2.right_descents(w) == std::vector<int>{2});
    CHECK(a2.left_descents(a2.identity()).empty());
}

TEST_CASE("length and canonical reduced words") {
    CoxeterEngine a2 = make_engine("a2");
    CHECK(a2.length(a2.identity()) == 0);
    CHECK(a2.reduced_word(a2.identity()) == Word{});
    CHECK(a2.length(a2.from_word({1, 2, 1})) == 3);
    CHECK(a2.reduced_word(a2.from_word({2, 2, 1, 2, 1})) == Word{1, 2, 1});

    CoxeterEngine a3 = make_engine("a3");
    CHECK(a3.length(a3.from_word({1, 2, 3, 1, 2, 1})) == 6);

    Ball ball = whole_group(a3);
    for (std::size_t k = 0; k < ball.elements.size(); ++k) {
        Word rw = a3.reduced_word(ball.elements[k]);
        CHECK(static_cast<int>(rw.size()) == ball.lengths[k]);
        CHECK(a3.from_word(rw) == ball.elements[k]);
    }
}

TEST_CASE("inversion sets") {
    CoxeterEngine a2 = make_engine("a2");
    InversionSet n2 = a2.inversion_set(a2.from_word({2}));
    CHECK(n2 == InversionSet{iv({0, 1})});
    InversionSet n21 = a2.inversion_set(a2.from_word({2, 1}));
    CHECK(n21 == InversionSet{iv({0, 1}), iv({1, 1})});
    CHECK(a2.inversion_set(a2.identity()).empty());

    CoxeterEngine a3 = make_engine("a3");
    Ball ball = whole_group(a3);
    for (std::size_t k = 0; k < ball.elements.size(); ++k)
        CHECK(a3.inversion_set(ball.elements[k]).size() ==
              static_cast<std::size_t>(ball.lengths[k]));
}

TEST_CASE("weak order") {
    CoxeterEngine a2 = make_engine("a2");
    GroupElement s1 = a2.generator(1);
    GroupElement s2 = a2.generator(2);
    GroupElement s2s1 = a2.from_word({2, 1});
    CHECK(a2.weak_leq(s2, s2s1));
    CHECK_FALSE(a2.weak_leq(s1, s2s1));
    CHECK(a2.weak_leq(s2s1, s2s1));
    CHECK_FALSE(a2.weak_less(s2s1, s2s1));
    CHECK(a2.weak_less(a2.identity(), s1));

    // u <= w in right weak order iff the gap is filled multiplicatively:
    // l(w) = l(u) + l(u^{-1} w).
    for (const char* preset : {"a2", "a3"}) {
        CoxeterEngine eng = make_engine(preset);
        Ball ball = whole_group(eng);
        for (const GroupElement& u : ball.elements)
            for (const GroupElement& w : ball.elements) {
                bool additive = eng.length(w) ==
                                eng.length(u) + eng.length(eng.multiply(eng.inverse(u), w));
                CHECK(eng.weak_leq(u, w) == additive);
            }
    }
}

TEST_CASE("parabolic factorization") {
    CoxeterEngine a2 = make_engine("a2");
    auto [p1, r1] = a2.parabolic_factor(a2.from_word({2, 1}), 1);
    CHECK(p1 == a2.generator(2));
    CHECK(r1 == a2.generator(1));

    auto [p2, r2] = a2.parabolic_factor(a2.generator(2), 1);
    CHECK(p2 == a2.generator(2));
    CHECK(r2 == a2.identity());

    auto [p3, r3] = a2.parabolic_factor(a2.from_word({1, 2}), 1);
    CHECK(p3 == a2.identity());
    CHECK(r3 == a2.from_word({1, 2}));

    CHECK_THROWS_AS(a2.parabolic_factor(a2.identity(), 0), IndexError);

    CoxeterEngine a3 = make_engine("a3");
    Ball ball = whole_group(a3);
    for (int s = 1; s <= 3; ++s)
        for (const GroupElement& w : ball.elements) {
            auto [p, r] = a3.parabolic_factor(w, s);
            Word pw = a3.reduced_word(p);
            CHECK(std::find(pw.begin(), pw.end(), s) == pw.end());
            CHECK(a3.multiply(p, r) == w);
            CHECK(a3.length(p) + a3.length(r) == a3.length(w));
            for (int i = 1; i <= 3; ++i)
                if (i != s) CHECK_FALSE(a3.left_descent(r, i));
        }
}

TEST_CASE("ball enumeration") {
    CoxeterEngine a2 = make_engine("a2");
    CHECK(a2.enumerate_ball(3).elements.size() == 6);
    CHECK(whole_group(a2).elements.size() == 6);

    Ball trivial = a2.enumerate_ball(0);
    CHECK(trivial.elements.size() == 1);
    CHECK(trivial.elements[0] == a2.identity());
    CHECK(trivial.lengths == std::vector<int>{0});

    CoxeterEngine a3 = make_engine("a3");
    CHECK(whole_group(a3).elements.size() == 24);
    CHECK(make_engine("d4").enumerate_ball(64).elements.size() == 192);

    // Lengths ascend and each level is internally sorted, so two runs agree.
    Ball b1 = a3.enumerate_ball(4);
    Ball b2 = a3.enumerate_ball(4);
    CHECK(testing::mats(b1.elements) == testing::mats(b2.elements));
    CHECK(b1.lengths == b2.lengths);
    CHECK(std::is_sorted(b1.lengths.begin(), b1.lengths.end()));

    CHECK_THROWS_AS(a2.enumerate_ball(-1), RangeError);
    CHECK_THROWS_AS(a3.enumerate_ball(6, 10), ResourceError);

    // Infinite groups keep growing; the budget is the only stop.
    CoxeterEngine tri = make_engine("triangle");
    CHECK_THROWS_AS(tri.enumerate_ball(1000, 500), ResourceError);
    CHECK(tri.enumerate_ball(3).elements.size() > 10);
}

TEST_CASE("ball budget from the environment") {
    unsetenv("CAMBRIAN_BALL_BUDGET");
    CHECK(default_ball_budget() == 1000000);

    setenv("CAMBRIAN_BALL_BUDGET", "7", 1);
    CHECK(default_ball_budget() == 7);

    setenv("CAMBRIAN_BALL_BUDGET", "junk", 1);
    CHECK_THROWS_AS(default_ball_budget(), ParseError);
    setenv("CAMBRIAN_BALL_BUDGET", "0", 1);
    CHECK_THROWS_AS(default_ball_budget(), ParseError);
    setenv("CAMBRIAN_BALL_BUDGET", "12x", 1);
    CHECK_THROWS_AS(default_ball_budget(), ParseError);

    unsetenv("CAMBRIAN_BALL_BUDGET");
}

TEST_CASE("group action preserves the form") {
    std::mt19937 rng(414243u);
    for (const auto& entry : quiver_presets()) {
        CoxeterEngine eng = make_engine(entry.first);
        std::uniform_int_distribution<int> letter(1, eng.rank());
        std::uniform_int_distribution<int> len(0, 20);
        for (int trial = 0; trial < 10; ++trial) {
            Word w;
            int l = len(rng);
            for (int k = 0; k < l; ++k) w.push_back(letter(rng));
            GroupElement g = eng.from_word(w);
            for (int i = 1; i <= eng.rank(); ++i)
                for (int j = 1; j <= eng.rank(); ++j)
                    CHECK(eng.pairing(g.mat.apply(eng.simple_root(i)),
                                      g.mat.apply(eng.simple_root(j))) ==
                          eng.pairing(eng.simple_root(i), eng.simple_root(j)));
            CHECK(eng.multiply(g, eng.inverse(g)) == eng.identity());
        }
    }
}
