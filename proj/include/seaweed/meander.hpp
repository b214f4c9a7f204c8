#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "seaweed/composition.hpp"
#include "seaweed/errors.hpp"

namespace seaweed {

// A pair of equal-sum compositions, written lambda/mu as in 5|3/2|1|2|1|2.
// The length-0 meander exists as a value (series constant term) but is
// rejected by operations that are undefined on it.
class Meander {
public:
    Meander() = default;

    Meander(Composition top, Composition bottom)
        : top_(std::move(top)), bottom_(std::move(bottom)) {
        if (top_.total() != bottom_.total())
            throw DomainError("top and bottom must have equal sums (" +
                              std::to_string(top_.total()) + " vs " +
                              std::to_string(bottom_.total()) + ")");
    }

    // "5|3/2|1|2|1|2"; whitespace tolerated; "/" is the empty meander
    static Meander parse(std::string_view text) {
        std::size_t slash = text.find('/');
        if (slash == std::string_view::npos)
            throw ParseError("meander text must contain '/'");
        if (text.find('/', slash + 1) != std::string_view::npos)
            throw ParseError("meander text must contain exactly one '/'");
        return Meander(Composition::parse(text.substr(0, slash)),
                       Composition::parse(text.substr(slash + 1)));
    }

    const Composition& top() const { return top_; }
    const Composition& bottom() const { return bottom_; }
    int length() const { return top_.total(); }
    bool empty() const { return length() == 0; }

    std::string str() const { return top_.str() + "/" + bottom_.str(); }

    bool operator==(const Meander& other) const = default;
    auto operator<=>(const Meander& other) const = default;

private:
    Composition top_;
    Composition bottom_;
};

inline Meander direct_sum(const Meander& a, const Meander& b) {
    return Meander(concat(a.top(), b.top()), concat(a.bottom(), b.bottom()));
}

inline Meander inflate(const Meander& m, int c) {
    return Meander(m.top().inflated(c), m.bottom().inflated(c));
}

// PS(top) intersect PS(bottom), ascending; ends with n for nonempty meanders
inline std::vector<int> shared_partial_sums(const Meander& m) {
    const auto& a = m.top().partial_sums();
    const auto& b = m.bottom().partial_sums();
    std::vector<int> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { out.push_back(a[i]); ++i; ++j; }
    }
    return out;
}

// true iff PS(top) and PS(bottom) meet only at n
inline bool is_indecomposable(const Meander& m) {
    if (m.empty()) throw DomainError("indecomposability is undefined for the empty meander");
    return shared_partial_sums(m).size() == 1;
}

// Splits at every shared partial sum; the direct sum of the result is m.
inline std::vector<Meander> decompose(const Meander& m) {
    std::vector<Meander> out;
    if (m.empty()) return out;
    const auto cuts = shared_partial_sums(m);
    std::size_t ti = 0, bi = 0;
    for (int cut : cuts) {
        std::vector<int> tp, bp;
        while (ti < m.top().size() && m.top().partial_sums()[ti] <= cut)
            tp.push_back(m.top()[ti++]);
        while (bi < m.bottom().size() && m.bottom().partial_sums()[bi] <= cut)
            bp.push_back(m.bottom()[bi++]);
        out.emplace_back(Composition(std::move(tp)), Composition(std::move(bp)));
    }
    return out;
}

}  // namespace seaweed
