#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "seaweed/bigint.hpp"
#include "seaweed/graph.hpp"
#include "seaweed/meander.hpp"

namespace seaweed {

// Finite set of permitted part sizes. allow_full additionally permits the
// single-part composition (n) whatever n is; this is the {1,2,n} family.
struct PartSet {
    std::vector<int> parts;  // sorted ascending, unique, all >= 1
    bool allow_full = false;

    PartSet() = default;

    PartSet(std::initializer_list<int> init, bool full = false)
        : PartSet(std::vector<int>(init), full) {}

    explicit PartSet(std::vector<int> p, bool full = false)
        : parts(std::move(p)), allow_full(full) {
        std::sort(parts.begin(), parts.end());
        parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
        if (parts.empty() && !allow_full) throw DomainError("part set must be nonempty");
        if (!parts.empty() && parts.front() < 1) throw DomainError("part sizes must be positive");
    }

    // "1,4" (optional whitespace)
    static PartSet parse(std::string_view text, bool full = false) {
        std::vector<int> out;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(
                pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            if (!tok.empty()) {
                int value = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
                if (ec != std::errc{} || ptr != tok.data() + tok.size())
                    throw ParseError("bad part '" + std::string(tok) + "'");
                out.push_back(value);
            }
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return PartSet(std::move(out), full);
    }

    bool contains(int p) const {
        return std::binary_search(parts.begin(), parts.end(), p);
    }
    int max_part() const { return parts.empty() ? 0 : parts.back(); }

    PartSet scaled(int c) const {
        std::vector<int> out(parts);
        for (int& p : out) p *= c;
        return PartSet(std::move(out), allow_full);
    }

    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts[i]);
        }
        if (allow_full) out += parts.empty() ? "n" : ",n";
        return out + "}";
    }

    bool operator==(const PartSet&) const = default;
    auto operator<=>(const PartSet&) const = default;
};

// All compositions of n with parts in ps, lexicographic. With allow_full the
// composition (n) is included even when n is not a permitted part.
inline std::vector<Composition> compositions_of(int n, const PartSet& ps) {
    if (n < 0) throw DomainError("composition target must be nonnegative");
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> acc;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.emplace_back(Composition(acc));
            return;
        }
        for (int p : ps.parts) {
            if (p > rem) break;
            acc.push_back(p);
            self(self, rem - p);
            acc.pop_back();
        }
    };
    rec(rec, n);
    if (ps.allow_full && !ps.contains(n)) out.emplace_back(Composition({n}));
    return out;
}

// Exact counts indexed by (length n, index k); absent cell = 0. A row may be
// present and empty, meaning "computed, all zero" — recurrence seeding needs
// that distinction.
struct CountTable {
    std::map<int, std::map<int, BigInt>> rows;
    PartSet part_set{std::vector<int>{}, true};  // placeholder when has_meta is false
    bool indecomposable = false;
    bool has_meta = false;

    BigInt at(int n, int k) const {
        auto r = rows.find(n);
        if (r == rows.end()) return 0;
        auto c = r->second.find(k);
        return c == r->second.end() ? BigInt(0) : c->second;
    }
    std::map<int, BigInt>& row(int n) { return rows[n]; }
    bool has_row(int n) const { return rows.count(n) != 0; }
    void set(int n, int k, BigInt v) {
        if (v != 0) rows[n][k] = std::move(v);
        else rows[n];
    }
    BigInt row_total(int n) const {
        BigInt s = 0;
        auto r = rows.find(n);
        if (r != rows.end())
            for (const auto& [k, v] : r->second) s += v;
        return s;
    }
    int max_n() const { return rows.empty() ? -1 : rows.rbegin()->first; }

    bool same_counts(const CountTable& other) const {
        auto a = rows.begin();
        auto b = other.rows.begin();
        while (a != rows.end() && b != other.rows.end()) {
            if (a->first != b->first || a->second != b->second) return false;
            ++a; ++b;
        }
        return a == rows.end() && b == other.rows.end();
    }
    bool operator==(const CountTable&) const = default;
};

struct EnumerateOptions {
    std::uint64_t pair_budget = 200'000'000;  // ordered composition pairs
    int workers = 1;
};

namespace detail {

// Flattened per-composition arc partner arrays (0-based, self = no arc)
// plus partial-sum bitmasks. Shared read-only by all enumeration workers.
struct PreparedComps {
    int n = 0;
    std::size_t count = 0;
    std::vector<std::int8_t> partner;     // count * n entries
    std::vector<std::uint64_t> ps_mask;   // count entries
    std::vector<std::int8_t> first_part;  // count entries

    const std::int8_t* arcs(std::size_t i) const {
        return partner.data() + i * static_cast<std::size_t>(n);
    }
};

inline PreparedComps prepare(int n, const std::vector<Composition>& comps) {
    if (n > 63) throw DomainError("pair enumeration supports n <= 63");
    PreparedComps pc;
    pc.n = n;
    pc.count = comps.size();
    pc.partner.resize(pc.count * static_cast<std::size_t>(n));
    pc.ps_mask.resize(pc.count);
    pc.first_part.resize(pc.count);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::int8_t* arc = pc.partner.data() + i * static_cast<std::size_t>(n);
        for (int v = 0; v < n; ++v) arc[v] = static_cast<std::int8_t>(v);
        int pos = 0;
        for (int part : comps[i].parts()) {
            for (int t = 0; t < part / 2; ++t) {
                arc[pos + t] = static_cast<std::int8_t>(pos + part - 1 - t);
                arc[pos + part - 1 - t] = static_cast<std::int8_t>(pos + t);
            }
            pos += part;
        }
        pc.ps_mask[i] = comps[i].partial_sum_mask();
        pc.first_part[i] = static_cast<std::int8_t>(comps[i].empty() ? 0 : comps[i][0]);
    }
    return pc;
}

// Path/cycle census of the union of two partner arrays; O(n) per call.
inline void census(const std::int8_t* up, const std::int8_t* dn, int n,
                   int& cycles, int& paths) {
    std::uint64_t visited = 0;
    cycles = 0;
    paths = 0;
    for (int s = 0; s < n; ++s) {
        if (visited >> s & 1) continue;
        visited |= std::uint64_t{1} << s;
        int cur = s;
        bool via_up = true;
        bool closed = false;
        while (true) {
            int nxt = via_up ? up[cur] : dn[cur];
            if (nxt == cur) break;
            visited |= std::uint64_t{1} << nxt;
            cur = nxt;
            via_up = !via_up;
            if (cur == s) { closed = true; break; }
        }
        if (closed) { ++cycles; continue; }
        cur = s;
        via_up = false;
        while (true) {
            int nxt = via_up ? up[cur] : dn[cur];
            if (nxt == cur) break;
            visited |= std::uint64_t{1} << nxt;
            cur = nxt;
            via_up = !via_up;
        }
        ++paths;
    }
}

inline void check_budget(std::size_t comp_count, const EnumerateOptions& opt) {
    const std::uint64_t pairs =
        static_cast<std::uint64_t>(comp_count) * static_cast<std::uint64_t>(comp_count);
    if (comp_count > 0 && pairs / comp_count != comp_count)
        throw BudgetError("pair count overflows the budget counter");
    if (pairs > opt.pair_budget)
        throw BudgetError("estimated " + std::to_string(pairs) +
                          " composition pairs exceeds budget " +
                          std::to_string(opt.pair_budget));
}

}  // namespace detail

struct IndexHistograms {
    std::map<int, BigInt> all;             // index -> count over all pairs
    std::map<int, BigInt> indecomposable;  // same, restricted to PS-disjoint pairs
};

// One scan over ordered composition pairs, counted via unordered pairs since
// index and indecomposability are invariant under swapping top and bottom.
// Counts are identical for every worker count.
inline IndexHistograms count_pairs_by_index(int n, const PartSet& ps,
                                            const EnumerateOptions& opt = {}) {
    if (n < 1) throw DomainError("enumeration needs n >= 1");
    if (opt.workers < 1) throw DomainError("worker count must be >= 1");
    const auto comps = compositions_of(n, ps);
    detail::check_budget(comps.size(), opt);
    const auto pc = detail::prepare(n, comps);
    const std::uint64_t final_bit = std::uint64_t{1} << n;
    const std::size_t m = pc.count;

    const int workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(opt.workers), std::max<std::size_t>(m, 1)));
    std::vector<std::vector<std::uint64_t>> acc_all(
        static_cast<std::size_t>(workers), std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    std::vector<std::vector<std::uint64_t>> acc_ind = acc_all;

    auto work = [&](int w) {
        auto& all = acc_all[static_cast<std::size_t>(w)];
        auto& ind = acc_ind[static_cast<std::size_t>(w)];
        for (std::size_t t = static_cast<std::size_t>(w); t < m; t += static_cast<std::size_t>(workers)) {
            const std::int8_t* up = pc.arcs(t);
            const std::uint64_t tmask = pc.ps_mask[t];
            for (std::size_t b = t; b < m; ++b) {
                int c, p;
                detail::census(up, pc.arcs(b), n, c, p);
                const std::uint64_t w2 = (b == t) ? 1 : 2;
                const std::size_t idx = static_cast<std::size_t>(2 * c + p);
                all[idx] += w2;
                if ((tmask & pc.ps_mask[b]) == final_bit) ind[idx] += w2;
            }
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }

    IndexHistograms out;
    for (int k = 0; k <= n; ++k) {
        std::uint64_t sa = 0, si = 0;
        for (int w = 0; w < workers; ++w) {
            sa += acc_all[static_cast<std::size_t>(w)][static_cast<std::size_t>(k)];
            si += acc_ind[static_cast<std::size_t>(w)][static_cast<std::size_t>(k)];
        }
        if (sa) out.all[k] = sa;
        if (si) out.indecomposable[k] = si;
    }
    return out;
}

inline std::map<int, BigInt> count_by_index(int n, const PartSet& ps, bool indecomposable_only,
                                            const EnumerateOptions& opt = {}) {
    auto h = count_pairs_by_index(n, ps, opt);
    return indecomposable_only ? std::move(h.indecomposable) : std::move(h.all);
}

// a-table and i-table over [n_min, n_max] from a single scan per length.
inline std::pair<CountTable, CountTable> brute_tables_both(const PartSet& ps, int n_min, int n_max,
                                                           const EnumerateOptions& opt = {}) {
    CountTable a, i;
    a.part_set = i.part_set = ps;
    a.has_meta = i.has_meta = true;
    i.indecomposable = true;
    for (int n = n_min; n <= n_max; ++n) {
        auto h = count_pairs_by_index(n, ps, opt);
        a.row(n) = std::move(h.all);
        i.row(n) = std::move(h.indecomposable);
    }
    return {std::move(a), std::move(i)};
}

inline CountTable brute_table(const PartSet& ps, int n_min, int n_max, bool indecomposable_only,
                              const EnumerateOptions& opt = {}) {
    auto both = brute_tables_both(ps, n_min, n_max, opt);
    return indecomposable_only ? std::move(both.second) : std::move(both.first);
}

inline PartSet unrestricted_parts(int n) {
    std::vector<int> all(static_cast<std::size_t>(std::max(n, 1)));
    std::iota(all.begin(), all.end(), 1);
    return PartSet(std::move(all));
}

// |M_n| by exhaustive count; equals 4^(n-1)
inline BigInt count_all_meanders(int n, const EnumerateOptions& opt = {}) {
    BigInt total = 0;
    for (const auto& [k, v] : count_by_index(n, unrestricted_parts(n), false, opt)) total += v;
    return total;
}

// |I_n| by exhaustive count; equals 3^(n-1) for n >= 2
inline BigInt count_indecomposable(int n, const EnumerateOptions& opt = {}) {
    BigInt total = 0;
    for (const auto& [k, v] : count_by_index(n, unrestricted_parts(n), true, opt)) total += v;
    return total;
}

// Counts meanders whose (top, bottom) start with (tp, bp) or with (bp, tp);
// a meander matching both orientations is counted once. The two orientations
// are disjoint whenever tp and bp differ in their first part, which covers
// every use in the prefix recursions.
inline std::map<int, BigInt> count_with_prefix_by_index(int n, const PartSet& ps,
                                                        const Composition& tp,
                                                        const Composition& bp,
                                                        bool indecomposable_only,
                                                        const EnumerateOptions& opt = {}) {
    if (n < 1) throw DomainError("enumeration needs n >= 1");
    const auto comps = compositions_of(n, ps);
    detail::check_budget(comps.size(), opt);
    std::map<int, BigInt> out;
    for (const auto& top : comps) {
        const bool t_tp = top.starts_with(tp);
        const bool t_bp = top.starts_with(bp);
        if (!t_tp && !t_bp) continue;
        for (const auto& bottom : comps) {
            const bool match = (t_tp && bottom.starts_with(bp)) || (t_bp && bottom.starts_with(tp));
            if (!match) continue;
            Meander m(top, bottom);
            if (indecomposable_only && !is_indecomposable(m)) continue;
            out[index_of(m)] += 1;
        }
    }
    return out;
}

inline BigInt count_with_prefix(int n, int k, const PartSet& ps, const Composition& tp,
                                const Composition& bp, bool indecomposable_only,
                                const EnumerateOptions& opt = {}) {
    auto table = count_with_prefix_by_index(n, ps, tp, bp, indecomposable_only, opt);
    auto it = table.find(k);
    return it == table.end() ? BigInt(0) : it->second;
}

struct AcyclicReport {
    bool acyclic = true;
    std::optional<Meander> witness;  // first cyclic indecomposable in scan order
};

// Scans indecomposable meanders over ps with max(J) < n <= n_max,
// n ascending and composition pairs lexicographic.
inline AcyclicReport acyclic_set_check(const PartSet& ps, int n_max,
                                       const EnumerateOptions& opt = {}) {
    AcyclicReport report;
    for (int n = ps.max_part() + 1; n <= n_max; ++n) {
        const auto comps = compositions_of(n, ps);
        detail::check_budget(comps.size(), opt);
        const auto pc = detail::prepare(n, comps);
        const std::uint64_t final_bit = std::uint64_t{1} << n;
        for (std::size_t t = 0; t < pc.count; ++t) {
            for (std::size_t b = 0; b < pc.count; ++b) {
                if ((pc.ps_mask[t] & pc.ps_mask[b]) != final_bit) continue;
                int c, p;
                detail::census(pc.arcs(t), pc.arcs(b), n, c, p);
                if (c > 0) {
                    report.acyclic = false;
                    report.witness = Meander(comps[t], comps[b]);
                    return report;
                }
            }
        }
    }
    return report;
}

// The cyclic indecomposable witness for non-acyclic {1,j}: accepts even
// j >= 6 and odd j >= 9.
inline Meander cycle_witness(int j) {
    const bool even_ok = (j % 2 == 0 && j >= 6);
    const bool odd_ok = (j % 2 == 1 && j >= 9);
    if (!even_ok && !odd_ok)
        throw DomainError("no cyclic witness: {1," + std::to_string(j) + "} requires even j >= 6 or odd j >= 9");
    const int k = j / 2;
    const int inner = (j % 2 == 0) ? k - 3 : k - 4;
    Composition top = concat(concat(Composition({j}), Composition::repeated(1, inner)),
                             concat(Composition({j}), Composition::repeated(1, k - 1)));
    Composition bottom = concat(concat(Composition::repeated(1, k - 1), Composition({j})),
                                concat(Composition::repeated(1, inner), Composition({j})));
    return Meander(std::move(top), std::move(bottom));
}

// sum over k of (-1)^k a_{n,k}
inline BigInt alternating_sum(int n, const PartSet& ps, const EnumerateOptions& opt = {}) {
    BigInt s = 0;
    for (const auto& [k, v] : count_by_index(n, ps, false, opt))
        s += (k % 2 == 0) ? v : -v;
    return s;
}

// The family on which the index-parity involution has no partner: both
// compositions equal to the alternating prefix 1,2,1,2,...
inline bool phi_exceptional(const Meander& m) {
    if (m.top() != m.bottom()) return false;
    const auto& parts = m.top().parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] != (i % 2 == 0 ? 1 : 2)) return false;
    return true;
}

namespace detail {

inline std::pair<std::vector<int>, std::vector<int>> phi_suffix(std::vector<int> lam,
                                                                std::vector<int> mu) {
    auto swap_head = [](std::vector<int>& v) -> bool {
        if (v.size() >= 2 && v[0] == 1 && v[1] == 1) {
            v.erase(v.begin());
            v[0] = 2;
            return true;
        }
        if (!v.empty() && v[0] == 2) {
            v[0] = 1;
            v.insert(v.begin(), 1);
            return true;
        }
        return false;
    };
    if (swap_head(lam)) return {std::move(lam), std::move(mu)};
    if (swap_head(mu)) return {std::move(lam), std::move(mu)};
    // both start 1,2: recurse past the common prefix
    if (lam.size() < 2 || mu.size() < 2 || lam[0] != 1 || lam[1] != 2 || mu[0] != 1 || mu[1] != 2)
        throw DomainError("involution undefined on the exceptional meander");
    auto rest = phi_suffix(std::vector<int>(lam.begin() + 2, lam.end()),
                           std::vector<int>(mu.begin() + 2, mu.end()));
    std::vector<int> lo{1, 2}, mo{1, 2};
    lo.insert(lo.end(), rest.first.begin(), rest.first.end());
    mo.insert(mo.end(), rest.second.begin(), rest.second.end());
    return {std::move(lo), std::move(mo)};
}

}  // namespace detail

// Index-parity involution on meanders with parts in {1,2}; rejects the
// exceptional alternating family, which has no partner.
inline Meander involution_phi(const Meander& m) {
    if (m.empty()) throw DomainError("involution undefined on the empty meander");
    for (const auto* c : {&m.top(), &m.bottom()})
        for (int p : c->parts())
            if (p != 1 && p != 2) throw DomainError("involution needs parts in {1,2}");
    if (phi_exceptional(m)) throw DomainError("exceptional meander: no involution partner");
    auto [lam, mu] = detail::phi_suffix(m.top().parts(), m.bottom().parts());
    return Meander(Composition(std::move(lam)), Composition(std::move(mu)));
}

}  // namespace seaweed
