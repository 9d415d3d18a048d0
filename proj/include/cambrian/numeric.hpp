#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "cambrian/errors.hpp"

namespace cambrian {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coordinate vector in the simple-root basis.
using IntVec = std::vector<Int>;

inline IntVec operator+(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec operator-(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec negate(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool is_zero(const IntVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

// All entries >= 0 and at least one > 0.
inline bool is_positive(const IntVec& a) {
    bool some = false;
    for (const Int& x : a) {
        if (x < 0) return false;
        if (x > 0) some = true;
    }
    return some;
}

inline bool is_negative(const IntVec& a) { return is_positive(negate(a)); }

// Square integer matrix, row-major. Acts on column vectors.
struct IntMat {
    int n = 0;
    std::vector<Int> a;

    IntMat() = default;
    explicit IntMat(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}

    static IntMat identity(int size) {
        IntMat m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    IntMat operator*(const IntMat& o) const {
        IntMat r(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const Int& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    IntVec apply(const IntVec& v) const {
        IntVec r(static_cast<std::size_t>(n), Int(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j) != 0) r[i] += at(i, j) * v[j];
        return r;
    }

    IntVec column(int j) const {
        IntVec r(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) r[i] = at(i, j);
        return r;
    }

    bool operator==(const IntMat& o) const { return n == o.n && a == o.a; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }
    bool operator<(const IntMat& o) const {
        if (n != o.n) return n < o.n;
        return a < o.a;
    }
};

// Rectangular rational matrix for representation maps and linear solves.
struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

    static RatMat identity(int size) {
        RatMat m(size, size);
        for (int i = 0; i < size; ++i) m.at(i, i) = 1;
        return m;
    }

    Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    RatMat operator*(const RatMat& o) const {
        if (cols != o.rows) throw ShapeError("matrix product shape mismatch");
        RatMat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Rat& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    RatMat transpose() const {
        RatMat r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool operator==(const RatMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

// Stack blocks vertically; all blocks must agree on column count.
inline RatMat vstack(const std::vector<RatMat>& blocks, int cols) {
    int rows = 0;
    for (const RatMat& b : blocks) {
        if (b.cols != cols) throw ShapeError("vstack column mismatch");
        rows += b.rows;
    }
    RatMat r(rows, cols);
    int off = 0;
    for (const RatMat& b : blocks) {
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(off + i, j) = b.at(i, j);
        off += b.rows;
    }
    return r;
}

inline RatMat column_block(const RatMat& m, int first, int count) {
    RatMat r(m.rows, count);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < count; ++j) r.at(i, j) = m.at(i, first + j);
    return r;
}

// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        const Rat inv = Rat(1) / m.at(row, col);
        for (int j = 0; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const Rat f = m.at(i, col);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

// Basis of the right null space, one column per kernel generator.
inline RatMat kernel_basis(RatMat m) {
    const int cols = m.cols;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < cols; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
    RatMat k(cols, static_cast<int>(free_cols.size()));
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        k.at(free_cols[f], static_cast<int>(f)) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            k.at(pivots[r], static_cast<int>(f)) = -m.at(static_cast<int>(r), free_cols[f]);
    }
    return k;
}

// Surjection P with kernel exactly the column space of g: coordinates on coker(g).
inline RatMat cokernel_projection(const RatMat& g) {
    RatMat rowspace = g.transpose();
    std::vector<int> pivots = rref(rowspace);
    std::vector<bool> is_pivot(static_cast<std::size_t>(g.rows), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < g.rows; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
    RatMat p(static_cast<int>(free_cols.size()), g.rows);
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
        p.at(static_cast<int>(f), free_cols[f]) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            p.at(static_cast<int>(f), pivots[r]) = -rowspace.at(static_cast<int>(r), free_cols[f]);
    }
    return p;
}

// Exact inverse via Gauss-Jordan; SingularError when rank deficient.
inline RatMat inverse(RatMat m) {
    if (m.rows != m.cols) throw ShapeError("inverse of non-square matrix");
    const int n = m.rows;
    RatMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw SingularError("matrix is singular");
    for (int r = 0; r < n; ++r)
        if (pivots[static_cast<std::size_t>(r)] != r)
            throw SingularError("matrix is singular");
    RatMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Scale a nonzero rational vector to the integer vector with coprime entries
// pointing the same way.
inline IntVec primitive_integer_direction(const std::vector<Rat>& v) {
    Int l = 1;
    for (const Rat& x : v) {
        const Int d = boost::multiprecision::denominator(x);
        l = boost::multiprecision::lcm(l, d);
    }
    IntVec w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = boost::multiprecision::numerator(v[i]) *
               (l / boost::multiprecision::denominator(v[i]));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g == 0) throw SingularError("zero vector has no direction");
    for (Int& x : w) x /= g;
    return w;
}

inline std::string root_to_string(const IntVec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

} // namespace cambrian
