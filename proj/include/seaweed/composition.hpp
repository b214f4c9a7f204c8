#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "seaweed/errors.hpp"

namespace seaweed {

// An ordered list of positive parts, written 3|1|4. Immutable after
// construction; partial sums are precomputed since nearly every operation
// on meanders consumes them.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        sums_.reserve(parts_.size());
        int acc = 0;
        for (int p : parts_) {
            if (p < 1) throw DomainError("composition parts must be positive");
            acc += p;
            sums_.push_back(acc);
        }
    }

    // k repeated count times; count = 0 gives the empty composition
    static Composition repeated(int part, int count) {
        if (count < 0) throw DomainError("repeat count must be nonnegative");
        return Composition(std::vector<int>(static_cast<std::size_t>(count), part));
    }

    // "3|1|4" with optional whitespace; "" parses to the empty composition
    static Composition parse(std::string_view text) {
        std::vector<int> parts;
        std::size_t pos = 0;
        bool any_token = false;
        while (pos <= text.size()) {
            std::size_t bar = text.find('|', pos);
            std::string_view tok = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
            while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
            while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
            if (!tok.empty()) {
                any_token = true;
                int value = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
                if (ec != std::errc{} || ptr != tok.data() + tok.size())
                    throw ParseError("bad composition part '" + std::string(tok) + "'");
                parts.push_back(value);
            } else if (any_token || bar != std::string_view::npos) {
                throw ParseError("empty composition part");
            }
            if (bar == std::string_view::npos) break;
            pos = bar + 1;
        }
        return Composition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    int total() const { return sums_.empty() ? 0 : sums_.back(); }

    // strictly increasing; the last element equals total()
    const std::vector<int>& partial_sums() const { return sums_; }

    // bit s set iff s is a partial sum; requires total() <= 63
    std::uint64_t partial_sum_mask() const {
        std::uint64_t m = 0;
        for (int s : sums_) m |= std::uint64_t{1} << s;
        return m;
    }

    bool starts_with(const Composition& prefix) const {
        if (prefix.size() > size()) return false;
        for (std::size_t i = 0; i < prefix.size(); ++i)
            if (parts_[i] != prefix.parts_[i]) return false;
        return true;
    }

    // every part multiplied by c >= 1
    Composition inflated(int c) const {
        if (c < 1) throw DomainError("inflation factor must be >= 1");
        std::vector<int> out(parts_);
        for (int& p : out) p *= c;
        return Composition(std::move(out));
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += '|';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend Composition concat(const Composition& a, const Composition& b) {
        std::vector<int> parts = a.parts_;
        parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
        return Composition(std::move(parts));
    }

    bool operator==(const Composition& other) const { return parts_ == other.parts_; }
    auto operator<=>(const Composition& other) const { return parts_ <=> other.parts_; }

private:
    std::vector<int> parts_;
    std::vector<int> sums_;
};

}  // namespace seaweed
