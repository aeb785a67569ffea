#pragma once
#include <optional>
#include <string>
#include <vector>

#include "rca/scalars/serialize.hpp"

namespace rca {

// Interval with optional (infinite) endpoints.
struct Interval {
    std::optional<Rational> lo, hi;
    bool lo_closed = true, hi_closed = true;
    bool contains(const Rational& c) const;
};

// a c1 + b c2 <= rhs (or < rhs when strict)
struct HalfPlane {
    Rational a, b, rhs;
    bool strict = false;
    bool contains(const Rational& c1, const Rational& c2) const;
};

// intersection of half-planes
struct Region {
    std::vector<HalfPlane> sides;
    bool contains(const Rational& c1, const Rational& c2) const;
};

struct LocusDescription {
    int arity = 1;
    std::vector<Interval> intervals;  // arity 1
    std::vector<Rational> points;     // arity 1, isolated
    std::vector<Region> regions;      // arity 2, union

    bool contains(const std::vector<Rational>& p) const;
    // image under c -> (s_1 c_1, s_2 c_2), signs +-1 per coordinate
    LocusDescription scaled(const std::vector<int>& signs) const;
    std::string str() const;
    json to_json() const;
};

}  // namespace rca
