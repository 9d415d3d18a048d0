#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "cambrian/cones.hpp"
#include "cambrian/rep.hpp"

namespace cambrian::testing {

inline IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

inline CoxeterEngine make_engine(const std::string& text) {
    return CoxeterEngine(parse_quiver(text));
}

inline std::set<IntVec> root_set(const std::vector<IntVec>& v) {
    return std::set<IntVec>(v.begin(), v.end());
}

inline std::set<IntMat> mats(const std::vector<GroupElement>& v) {
    std::set<IntMat> out;
    for (const GroupElement& w : v) out.insert(w.mat);
    return out;
}

// Whole group of a Dynkin engine.
inline Ball whole_group(const CoxeterEngine& eng) { return eng.enumerate_ball(64); }

} // namespace cambrian::testing
