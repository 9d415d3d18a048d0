#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cambrian/errors.hpp"
#include "cambrian/numeric.hpp"
#include "cambrian/quiver.hpp"

namespace cambrian {

// Group element in the root-lattice representation. The matrix acts on
// column vectors in the simple-root basis; the inverse rides along so that
// descent tests on either side are column sign checks.
struct GroupElement {
    IntMat mat;
    IntMat inv;

    bool operator==(const GroupElement& o) const { return mat == o.mat; }
    bool operator!=(const GroupElement& o) const { return mat != o.mat; }
    bool operator<(const GroupElement& o) const { return mat < o.mat; }
};

using InversionSet = std::set<IntVec>;

struct Ball {
    std::vector<GroupElement> elements;
    std::vector<int> lengths;
};

inline std::size_t default_ball_budget() {
    if (const char* env = std::getenv("CAMBRIAN_BALL_BUDGET")) {
        std::string s(env);
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(s, &used);
            if (used != s.size() || v == 0)
                throw ParseError("CAMBRIAN_BALL_BUDGET must be a positive integer");
            return static_cast<std::size_t>(v);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("CAMBRIAN_BALL_BUDGET must be a positive integer");
        }
    }
    return 1000000;
}

class CoxeterEngine {
public:
    explicit CoxeterEngine(Quiver q)
        : quiver_(std::move(q)), cartan_(cartan_form(quiver_)), klass_(classify(quiver_)) {
        const int n = quiver_.n;
        identity_ = {IntMat::identity(n), IntMat::identity(n)};
        generators_.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            IntMat m = IntMat::identity(n);
            for (int j = 0; j < n; ++j) m.at(i, j) -= cartan_.at(i, j);
            // Reflections are involutions, so the matrix is its own inverse.
            generators_.push_back({m, m});
        }
        Word c = coxeter_word(quiver_);
        coxeter_ = from_word(c);
    }

    int rank() const { return quiver_.n; }
    const Quiver& quiver() const { return quiver_; }
    const IntMat& cartan() const { return cartan_; }
    const QuiverClass& quiver_class() const { return klass_; }
    bool is_dynkin() const { return klass_.kind == QuiverKind::Dynkin; }

    const GroupElement& identity() const { return identity_; }
    const GroupElement& generator(int i) const {
        check_index(i);
        return generators_[static_cast<std::size_t>(i) - 1];
    }
    const GroupElement& coxeter_element() const { return coxeter_; }

    IntVec simple_root(int i) const {
        check_index(i);
        IntVec v(static_cast<std::size_t>(quiver_.n), Int(0));
        v[static_cast<std::size_t>(i) - 1] = 1;
        return v;
    }

    // Symmetric bilinear form attached to the quiver.
    Int pairing(const IntVec& x, const IntVec& y) const {
        check_vector(x);
        check_vector(y);
        Int r = 0;
        for (int i = 0; i < quiver_.n; ++i)
            for (int j = 0; j < quiver_.n; ++j)
                if (cartan_.at(i, j) != 0) r += x[static_cast<std::size_t>(i)] *
                                                cartan_.at(i, j) * y[static_cast<std::size_t>(j)];
        return r;
    }

    bool is_real_root(const IntVec& v) const { return pairing(v, v) == 2; }

    IntVec reflect(int i, const IntVec& beta) const {
        check_index(i);
        check_vector(beta);
        return generators_[static_cast<std::size_t>(i) - 1].mat.apply(beta);
    }

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const {
        return {a.mat * b.mat, b.inv * a.inv};
    }

    GroupElement inverse(const GroupElement& a) const { return {a.inv, a.mat}; }

    // Evaluate a word left to right; the rightmost letter acts first on roots.
    GroupElement from_word(const Word& w) const {
        GroupElement r = identity_;
        for (int letter : w) {
            check_index(letter);
            r = multiply(r, generators_[static_cast<std::size_t>(letter) - 1]);
        }
        return r;
    }

    // i is a left descent iff w^{-1}(alpha_i) is a negative root.
    bool left_descent(const GroupElement& w, int i) const {
        check_index(i);
        return is_negative(w.inv.column(i - 1));
    }

    // i is a right descent iff w(alpha_i) is a negative root.
    bool right_descent(const GroupElement& w, int i) const {
        check_index(i);
        return is_negative(w.mat.column(i - 1));
    }

    std::vector<int> left_descents(const GroupElement& w) const {
        std::vector<int> r;
        for (int i = 1; i <= quiver_.n; ++i)
            if (left_descent(w, i)) r.push_back(i);
        return r;
    }

    std::vector<int> right_descents(const GroupElement& w) const {
        std::vector<int> r;
        for (int i = 1; i <= quiver_.n; ++i)
            if (right_descent(w, i)) r.push_back(i);
        return r;
    }

    // Greedy peel of the smallest left descent; canonical reduced word.
    Word reduced_word(const GroupElement& w) const {
        Word out;
        GroupElement r = w;
        while (r != identity_) {
            int d = 0;
            for (int i = 1; i <= quiver_.n; ++i)
                if (left_descent(r, i)) { d = i; break; }
            if (d == 0)
                throw ShapeError("matrix is not a group element: no left descent");
            out.push_back(d);
            r = multiply(generators_[static_cast<std::size_t>(d) - 1], r);
        }
        return out;
    }

    int length(const GroupElement& w) const {
        return static_cast<int>(reduced_word(w).size());
    }

    // N(w): positive roots sent negative by w^{-1}; |N(w)| = length(w).
    InversionSet inversion_set(const GroupElement& w) const {
        Word rw = reduced_word(w);
        InversionSet out;
        GroupElement prefix = identity_;
        for (int letter : rw) {
            out.insert(prefix.mat.apply(simple_root(letter)));
            prefix = multiply(prefix, generators_[static_cast<std::size_t>(letter) - 1]);
        }
        return out;
    }

    // Right weak order: u <= w iff N(u) is contained in N(w).
    bool weak_leq(const GroupElement& u, const GroupElement& w) const {
        InversionSet nu = inversion_set(u);
        InversionSet nw = inversion_set(w);
        return std::includes(nw.begin(), nw.end(), nu.begin(), nu.end());
    }

    bool weak_less(const GroupElement& u, const GroupElement& w) const {
        return u != w && weak_leq(u, w);
    }

    // Factor w = p * r with p in the parabolic subgroup missing generator s
    // and r of minimal length in its coset: no left descent of r other than s.
    std::pair<GroupElement, GroupElement> parabolic_factor(const GroupElement& w,
                                                           int s) const {
        check_index(s);
        GroupElement p = identity_;
        GroupElement r = w;
        for (;;) {
            int d = 0;
            for (int i = 1; i <= quiver_.n; ++i)
                if (i != s && left_descent(r, i)) { d = i; break; }
            if (d == 0) break;
            p = multiply(p, generators_[static_cast<std::size_t>(d) - 1]);
            r = multiply(generators_[static_cast<std::size_t>(d) - 1], r);
        }
        return {p, r};
    }

    // Breadth-first ball of the right Cayley graph up to the given length.
    // Deterministic: levels ascend and each level is sorted by matrix.
    Ball enumerate_ball(int max_len, std::optional<std::size_t> budget = {}) const {
        if (max_len < 0) throw RangeError("ball radius must be non-negative");
        const std::size_t cap = budget ? *budget : default_ball_budget();
        Ball ball;
        std::set<IntMat> seen;
        std::vector<GroupElement> level{identity_};
        seen.insert(identity_.mat);
        for (int len = 0; len <= max_len && !level.empty(); ++len) {
            for (const GroupElement& w : level) {
                ball.elements.push_back(w);
                ball.lengths.push_back(len);
            }
            if (ball.elements.size() > cap)
                throw ResourceError("ball budget exceeded at " +
                                    std::to_string(ball.elements.size()) + " elements");
            if (len == max_len) break;
            std::map<IntMat, GroupElement> next;
            for (const GroupElement& w : level)
                for (int i = 1; i <= quiver_.n; ++i) {
                    if (right_descent(w, i)) continue;
                    GroupElement u = multiply(w, generators_[static_cast<std::size_t>(i) - 1]);
                    if (seen.insert(u.mat).second) next.emplace(u.mat, u);
                    if (seen.size() > cap)
                        throw ResourceError("ball budget exceeded at " +
                                            std::to_string(seen.size()) + " elements");
                }
            level.clear();
            for (auto& [m, w] : next) level.push_back(w);
        }
        return ball;
    }

private:
    void check_index(int i) const {
        if (i < 1 || i > quiver_.n)
            throw IndexError("generator index " + std::to_string(i) + " out of range 1.." +
                             std::to_string(quiver_.n));
    }

    void check_vector(const IntVec& v) const {
        if (static_cast<int>(v.size()) != quiver_.n)
            throw ShapeError("vector has wrong dimension");
    }

    Quiver quiver_;
    IntMat cartan_;
    QuiverClass klass_;
    GroupElement identity_;
    std::vector<GroupElement> generators_;
    GroupElement coxeter_;
};

} // namespace cambrian
