#pragma once

// Long-knot diagram combinatorics: validated upward crossing lists and the
// planar-diagram code importer. Edges of a long diagram with n crossings are
// labeled 1..2n+1 along the orientation; every label 1..2n terminates at
// exactly one crossing, the final edge at none. Only label combinatorics are
// validated; planarity/realizability is the caller's responsibility.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "alexg/errors.hpp"

namespace alexg {

struct Crossing {
    int sign = 1;     // +1 or -1
    int over_in = 0;  // edge entering on the over strand
    int under_in = 0; // edge entering on the under strand

    friend bool operator==(const Crossing& a, const Crossing& b) {
        return a.sign == b.sign && a.over_in == b.over_in && a.under_in == b.under_in;
    }
};

class UpwardDiagram {
public:
    static UpwardDiagram validate(std::vector<Crossing> crossings) {
        const int n = static_cast<int>(crossings.size());
        std::vector<int> seen(2 * n + 1, 0);
        for (const Crossing& c : crossings) {
            if (c.sign != 1 && c.sign != -1)
                throw LabelingError("crossing sign must be +1 or -1");
            if (c.over_in == c.under_in)
                throw LabelingError("crossing enters itself twice on edge " +
                                    std::to_string(c.over_in));
            for (int e : {c.over_in, c.under_in}) {
                if (e < 1 || e > 2 * n)
                    throw LabelingError("incoming edge " + std::to_string(e) +
                                        " outside 1.." + std::to_string(2 * n));
                if (seen[e]++)
                    throw LabelingError("edge " + std::to_string(e) +
                                        " terminates at two crossings");
            }
        }
        // counting: 2n slots, labels within range, no duplicates => full cover
        return UpwardDiagram(std::move(crossings));
    }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return 2 * crossing_count() + 1; }

    friend bool operator==(const UpwardDiagram& a, const UpwardDiagram& b) {
        return a.crossings_ == b.crossings_;
    }

private:
    explicit UpwardDiagram(std::vector<Crossing> crossings)
        : crossings_(std::move(crossings)) {}

    std::vector<Crossing> crossings_;
};

inline UpwardDiagram mirror(const UpwardDiagram& d) {
    std::vector<Crossing> cs = d.crossings();
    for (Crossing& c : cs) c.sign = -c.sign;
    return UpwardDiagram::validate(std::move(cs));
}

// append a curl at the open end; the invariant must not change
inline UpwardDiagram with_kink(const UpwardDiagram& d, int sign, bool over_first) {
    std::vector<Crossing> cs = d.crossings();
    const int e = d.edge_count(); // the dangling edge becomes the first kink edge
    if (over_first)
        cs.push_back({sign, e, e + 1});
    else
        cs.push_back({sign, e + 1, e});
    return UpwardDiagram::validate(std::move(cs));
}

// --- planar-diagram codes -------------------------------------------------------

struct PDCode {
    // per crossing: the four incident edges, listed from the incoming
    // understrand; edges 1..2n run cyclically along the closed knot
    std::vector<std::array<int, 4>> tuples;

    friend bool operator==(const PDCode& a, const PDCode& b) { return a.tuples == b.tuples; }
};

// Cuts the closed knot so edge 1 starts the long diagram. Under strand runs
// slot1 -> slot3; the over strand's direction (slot2 -> slot4 or the
// reverse) fixes the sign.
inline UpwardDiagram from_pd(const PDCode& pd) {
    const int n = static_cast<int>(pd.tuples.size());
    if (n == 0) return UpwardDiagram::validate({});
    const int m = 2 * n;
    std::vector<int> uses(m + 1, 0);
    for (const auto& t : pd.tuples)
        for (int e : t) {
            if (e < 1 || e > m)
                throw ParseError("pd: edge label " + std::to_string(e) + " outside 1.." +
                                 std::to_string(m));
            ++uses[e];
        }
    for (int e = 1; e <= m; ++e)
        if (uses[e] != 2)
            throw ParseError("pd: edge " + std::to_string(e) + " used " +
                             std::to_string(uses[e]) + " times, expected 2");

    auto succ = [m](int e) { return e % m + 1; };
    std::vector<Crossing> cs;
    cs.reserve(pd.tuples.size());
    for (const auto& [a, b, c, d] : pd.tuples) {
        if (succ(a) != c)
            throw ParseError("pd: understrand " + std::to_string(a) + " -> " +
                             std::to_string(c) + " breaks the cyclic labeling");
        Crossing cr;
        cr.under_in = a;
        if (succ(b) == d) {
            cr.sign = 1;
            cr.over_in = b;
        } else if (succ(d) == b) {
            cr.sign = -1;
            cr.over_in = d;
        } else {
            throw ParseError("pd: over strand " + std::to_string(b) + "/" +
                             std::to_string(d) + " breaks the cyclic labeling");
        }
        cs.push_back(cr);
    }
    try {
        return UpwardDiagram::validate(std::move(cs));
    } catch (const LabelingError& e) {
        throw ParseError(std::string("pd: inconsistent labeling: ") + e.what());
    }
}

} // namespace alexg
