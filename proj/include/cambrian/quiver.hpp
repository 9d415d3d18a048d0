#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cambrian/errors.hpp"
#include "cambrian/numeric.hpp"

namespace cambrian {

// A word in the generators; letters are 1-based vertex indices.
using Word = std::vector<int>;

inline std::string word_to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << w[i];
    }
    return os.str();
}

inline Word parse_word(const std::string& text) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw ParseError("bad word letter: '" + tok + "'");
            w.push_back(v);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad word letter: '" + tok + "'");
        }
    }
    return w;
}

// Finite connected acyclic quiver without loops. Vertices are 1..n and the
// stored numbering is admissible: every arrow points from a smaller vertex
// to a larger one. renumbering[v-1] is where input vertex v ended up.
struct Quiver {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;
    std::string preset;
    std::vector<int> renumbering;

    bool operator==(const Quiver& o) const { return n == o.n && arrows == o.arrows; }
};

namespace detail {

inline void check_arrow_range(int n, const std::vector<std::pair<int, int>>& arrows) {
    for (const auto& [s, t] : arrows) {
        if (s < 1 || s > n || t < 1 || t > n)
            throw ParseError("arrow endpoint out of range: " + std::to_string(s) + " " +
                             std::to_string(t));
        if (s == t) throw CycleError("loop at vertex " + std::to_string(s));
    }
}

inline void check_connected(int n, const std::vector<std::pair<int, int>>& arrows) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& [s, t] : arrows) {
        adj[static_cast<std::size_t>(s)].push_back(t);
        adj[static_cast<std::size_t>(t)].push_back(s);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::queue<int> q;
    q.push(1);
    seen[1] = true;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                ++reached;
                q.push(u);
            }
    }
    if (reached != n) throw DisconnectedError("underlying graph is not connected");
}

// Kahn topological sort, smallest available source first. CycleError when a
// directed cycle blocks it.
inline std::vector<int> admissible_order(int n, const std::vector<std::pair<int, int>>& arrows) {
    std::vector<std::set<int>> out(static_cast<std::size_t>(n) + 1);
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [s, t] : arrows)
        if (out[static_cast<std::size_t>(s)].insert(t).second) ++indeg[static_cast<std::size_t>(t)];
    std::set<int> ready;
    for (int v = 1; v <= n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.insert(v);
    std::vector<int> order;
    while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int u : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(u)] == 0) ready.insert(u);
    }
    if (static_cast<int>(order.size()) != n)
        throw CycleError("quiver contains a directed cycle");
    return order;
}

} // namespace detail

inline Quiver make_quiver(int n, std::vector<std::pair<int, int>> arrows,
                          std::string preset = {}) {
    if (n <= 0) throw EmptyError("quiver has no vertices");
    detail::check_arrow_range(n, arrows);
    detail::check_connected(n, arrows);
    std::vector<int> order = detail::admissible_order(n, arrows);
    Quiver q;
    q.n = n;
    q.preset = std::move(preset);
    q.renumbering.assign(static_cast<std::size_t>(n), 0);
    for (int pos = 0; pos < n; ++pos)
        q.renumbering[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)]) - 1] = pos + 1;
    for (auto [s, t] : arrows)
        q.arrows.emplace_back(q.renumbering[static_cast<std::size_t>(s) - 1],
                              q.renumbering[static_cast<std::size_t>(t) - 1]);
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

inline const std::map<std::string, std::pair<int, std::vector<std::pair<int, int>>>>&
quiver_presets() {
    static const std::map<std::string, std::pair<int, std::vector<std::pair<int, int>>>> presets = {
        {"a2", {2, {{1, 2}}}},
        {"a3", {3, {{1, 2}, {2, 3}}}},
        {"d4", {4, {{1, 2}, {1, 3}, {1, 4}}}},
        {"kronecker", {2, {{1, 2}, {1, 2}}}},
        {"triangle", {3, {{1, 2}, {1, 3}, {2, 3}}}},
        {"w123", {3, {{1, 2}, {2, 3}, {2, 3}}}},
    };
    return presets;
}

inline Quiver parse_quiver(const std::string& text) {
    std::string trimmed = text;
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    trimmed.erase(trimmed.begin(), std::find_if(trimmed.begin(), trimmed.end(), not_space));
    trimmed.erase(std::find_if(trimmed.rbegin(), trimmed.rend(), not_space).base(),
                  trimmed.end());
    if (trimmed.empty()) throw EmptyError("empty quiver description");

    std::string lowered = trimmed;
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (auto it = quiver_presets().find(lowered); it != quiver_presets().end())
        return make_quiver(it->second.first, it->second.second, it->first);

    if (trimmed.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(trimmed);
        } catch (const std::exception& e) {
            throw ParseError(std::string("bad quiver JSON: ") + e.what());
        }
        if (!j.contains("vertices") || !j["vertices"].is_number_integer())
            throw ParseError("quiver JSON needs integer 'vertices'");
        int n = j["vertices"].get<int>();
        std::vector<std::pair<int, int>> arrows;
        if (j.contains("arrows")) {
            if (!j["arrows"].is_array()) throw ParseError("'arrows' must be an array");
            for (const auto& a : j["arrows"]) {
                if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
                    !a[1].is_number_integer())
                    throw ParseError("each arrow must be a pair of vertex indices");
                arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
            }
        }
        return make_quiver(n, std::move(arrows));
    }

    std::vector<std::pair<int, int>> arrows;
    int n = 0;
    std::string segment;
    std::istringstream is(trimmed);
    while (std::getline(is, segment, '/')) {
        std::istringstream seg(segment);
        int s = 0, t = 0;
        if (!(seg >> s >> t)) throw ParseError("bad arrow segment: '" + segment + "'");
        std::string extra;
        if (seg >> extra) throw ParseError("bad arrow segment: '" + segment + "'");
        if (s < 1 || t < 1) throw ParseError("vertex indices must be positive");
        arrows.emplace_back(s, t);
        n = std::max({n, s, t});
    }
    if (arrows.empty()) throw EmptyError("empty quiver description");
    return make_quiver(n, std::move(arrows));
}

inline std::string serialize_quiver(const Quiver& q) {
    std::ostringstream os;
    for (std::size_t i = 0; i < q.arrows.size(); ++i) {
        if (i) os << " / ";
        os << q.arrows[i].first << ' ' << q.arrows[i].second;
    }
    if (q.arrows.empty()) os << "{\"vertices\": " << q.n << ", \"arrows\": []}";
    return os.str();
}

// Symmetrized Cartan matrix: 2 on the diagonal, minus the number of edges
// between distinct vertices off it.
inline IntMat cartan_form(const Quiver& q) {
    IntMat b(q.n);
    for (int i = 0; i < q.n; ++i) b.at(i, i) = 2;
    for (const auto& [s, t] : q.arrows) {
        b.at(s - 1, t - 1) -= 1;
        b.at(t - 1, s - 1) -= 1;
    }
    return b;
}

enum class QuiverKind { Dynkin, Affine, Wild };

struct QuiverClass {
    QuiverKind kind = QuiverKind::Wild;
    // Primitive positive radical generator; only set in the affine case.
    IntVec delta;
};

inline const char* to_string(QuiverKind k) {
    switch (k) {
        case QuiverKind::Dynkin: return "Dynkin";
        case QuiverKind::Affine: return "Affine";
        case QuiverKind::Wild: return "Wild";
    }
    return "Wild";
}

inline QuiverClass classify(const Quiver& q) {
    const IntMat b = cartan_form(q);
    bool all_positive = true;
    for (int k = 1; k <= q.n && all_positive; ++k) {
        RatMat minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor.at(i, j) = Rat(b.at(i, j));
        // Determinant via triangularization; small k keeps this cheap.
        Rat det = 1;
        RatMat m = minor;
        for (int col = 0, row = 0; col < k && row < k; ++col) {
            int p = -1;
            for (int i = row; i < k; ++i)
                if (m.at(i, col) != 0) { p = i; break; }
            if (p < 0) { det = 0; break; }
            if (p != row) {
                for (int j = 0; j < k; ++j) std::swap(m.at(p, j), m.at(row, j));
                det = -det;
            }
            det *= m.at(row, col);
            for (int i = row + 1; i < k; ++i) {
                if (m.at(i, col) == 0) continue;
                const Rat f = m.at(i, col) / m.at(row, col);
                for (int j = col; j < k; ++j) m.at(i, j) -= f * m.at(row, j);
            }
            ++row;
        }
        if (det <= 0) all_positive = false;
    }
    if (all_positive) return {QuiverKind::Dynkin, {}};

    RatMat bm(q.n, q.n);
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) bm.at(i, j) = Rat(b.at(i, j));
    RatMat kernel = kernel_basis(bm);
    if (kernel.cols == 1) {
        std::vector<Rat> gen(static_cast<std::size_t>(q.n));
        for (int i = 0; i < q.n; ++i) gen[static_cast<std::size_t>(i)] = kernel.at(i, 0);
        IntVec delta = primitive_integer_direction(gen);
        if (is_negative(delta)) delta = negate(delta);
        if (is_positive(delta)) {
            bool strictly = std::all_of(delta.begin(), delta.end(),
                                        [](const Int& x) { return x > 0; });
            if (strictly) return {QuiverKind::Affine, delta};
        }
    }
    return {QuiverKind::Wild, {}};
}

// The standard Coxeter word 1 2 ... n; admissible numbering makes this the
// distinguished Coxeter element of the quiver.
inline Word coxeter_word(const Quiver& q) {
    Word w(static_cast<std::size_t>(q.n));
    for (int i = 0; i < q.n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    return w;
}

} // namespace cambrian
