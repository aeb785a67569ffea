#include "rca/unitarity/locus.hpp"

#include <sstream>
#include <stdexcept>

namespace rca {

bool Interval::contains(const Rational& c) const {
    if (lo && (lo_closed ? c < *lo : c <= *lo)) return false;
    if (hi && (hi_closed ? c > *hi : c >= *hi)) return false;
    return true;
}

bool HalfPlane::contains(const Rational& c1, const Rational& c2) const {
    Rational v = a * c1 + b * c2;
    return strict ? v < rhs : v <= rhs;
}

bool Region::contains(const Rational& c1, const Rational& c2) const {
    for (const auto& h : sides)
        if (!h.contains(c1, c2)) return false;
    return true;
}

bool LocusDescription::contains(const std::vector<Rational>& p) const {
    if (static_cast<int>(p.size()) != arity) throw std::invalid_argument("point arity does not match the locus");
    if (arity == 1) {
        for (const auto& i : intervals)
            if (i.contains(p[0])) return true;
        for (const auto& q : points)
            if (q == p[0]) return true;
        return false;
    }
    for (const auto& r : regions)
        if (r.contains(p[0], p[1])) return true;
    return false;
}

LocusDescription LocusDescription::scaled(const std::vector<int>& signs) const {
    LocusDescription out = *this;
    if (arity == 1) {
        if (signs.at(0) < 0) {
            for (auto& i : out.intervals) {
                Interval j;
                if (i.hi) j.lo = -*i.hi;
                if (i.lo) j.hi = -*i.lo;
                j.lo_closed = i.hi_closed;
                j.hi_closed = i.lo_closed;
                i = j;
            }
            for (auto& q : out.points) q = -q;
        }
        return out;
    }
    for (auto& r : out.regions)
        for (auto& h : r.sides) {
            h.a *= signs.at(0);
            h.b *= signs.at(1);
        }
    return out;
}

namespace {
std::string endpoint(const std::optional<Rational>& e, bool lo) {
    if (!e) return lo ? "-inf" : "+inf";
    return to_string(*e);
}
std::string half_plane_str(const HalfPlane& h) {
    std::ostringstream os;
    os << to_string(h.a) << "*c1 + " << to_string(h.b) << "*c2 " << (h.strict ? "<" : "<=") << " " << to_string(h.rhs);
    return os.str();
}
}  // namespace

std::string LocusDescription::str() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " u ";
        first = false;
    };
    if (arity == 1) {
        for (const auto& i : intervals) {
            sep();
            os << (i.lo && i.lo_closed ? "[" : "(") << endpoint(i.lo, true) << ", " << endpoint(i.hi, false)
               << (i.hi && i.hi_closed ? "]" : ")");
        }
        if (!points.empty()) {
            sep();
            os << "{";
            for (size_t k = 0; k < points.size(); ++k) os << (k ? ", " : "") << to_string(points[k]);
            os << "}";
        }
    } else {
        for (const auto& r : regions) {
            sep();
            os << "{";
            for (size_t k = 0; k < r.sides.size(); ++k) os << (k ? ", " : "") << half_plane_str(r.sides[k]);
            os << "}";
        }
    }
    if (first) os << "{}";
    return os.str();
}

json LocusDescription::to_json() const {
    json j;
    j["arity"] = arity;
    j["text"] = str();
    if (arity == 1) {
        json iv = json::array();
        for (const auto& i : intervals)
            iv.push_back({{"lo", i.lo ? json(to_string(*i.lo)) : json(nullptr)},
                          {"lo_closed", i.lo_closed},
                          {"hi", i.hi ? json(to_string(*i.hi)) : json(nullptr)},
                          {"hi_closed", i.hi_closed}});
        j["intervals"] = iv;
        json pts = json::array();
        for (const auto& q : points) pts.push_back(to_string(q));
        j["points"] = pts;
    } else {
        json rg = json::array();
        for (const auto& r : regions) {
            json sides = json::array();
            for (const auto& h : r.sides)
                sides.push_back({{"a", to_string(h.a)}, {"b", to_string(h.b)}, {"rhs", to_string(h.rhs)}, {"strict", h.strict}});
            rg.push_back(sides);
        }
        j["regions"] = rg;
    }
    return j;
}

}  // namespace rca
