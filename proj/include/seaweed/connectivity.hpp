#pragma once

#include <string>
#include <vector>

#include "seaweed/graph.hpp"

namespace seaweed {

// Labels of the last `width` nodes by connected component, labels assigned
// by first occurrence reading from the rightmost node. Stored and printed
// left to right, so the rightmost node's label (always 1) comes last.
struct ConnectivityWord {
    std::vector<int> letters;

    std::string str() const {
        bool digits = true;
        for (int v : letters)
            if (v > 9) { digits = false; break; }
        std::string out;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (!digits && i) out += '.';
            out += std::to_string(letters[i]);
        }
        return out;
    }

    bool operator==(const ConnectivityWord&) const = default;
};

inline ConnectivityWord connectivity_word(const Meander& m, int width) {
    const int n = m.length();
    if (width < 1 || width > n)
        throw DomainError("connectivity word width must be in [1, n]");
    const ComponentMap cm = components(MeanderGraph(m));
    ConnectivityWord word;
    word.letters.assign(static_cast<std::size_t>(width), 0);
    std::vector<int> letter_of(cm.cycle.size(), 0);
    int next = 0;
    for (int i = 1; i <= width; ++i) {
        const int node = n - i + 1;
        const int comp = cm.label[static_cast<std::size_t>(node)];
        if (letter_of[static_cast<std::size_t>(comp)] == 0)
            letter_of[static_cast<std::size_t>(comp)] = ++next;
        word.letters[static_cast<std::size_t>(width - i)] = letter_of[static_cast<std::size_t>(comp)];
    }
    return word;
}

// The word of j over 1^j: 1..k k..1 for j = 2k, 1..k (k+1) k..1 for j = 2k+1.
inline ConnectivityWord standard_word(int j) {
    if (j < 1) throw DomainError("standard word needs j >= 1");
    return connectivity_word(Meander(Composition({j}), Composition::repeated(1, j)), j);
}

}  // namespace seaweed
