#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "seaweed/bigint.hpp"
#include "seaweed/enumerate.hpp"
#include "seaweed/errors.hpp"

namespace seaweed {

// Sparse integer polynomial in x and y, keyed by (deg_x, deg_y).
// No zero coefficients are stored.
class BivariatePoly {
public:
    using Key = std::pair<int, int>;

    BivariatePoly() = default;

    BivariatePoly(std::initializer_list<std::tuple<int, int, long long>> terms) {
        for (const auto& [a, b, c] : terms) add_term(a, b, BigInt(c));
    }

    static BivariatePoly monomial(int a, int b, BigInt c) {
        BivariatePoly p;
        p.add_term(a, b, std::move(c));
        return p;
    }

    static BivariatePoly one() { return monomial(0, 0, 1); }

    void add_term(int a, int b, const BigInt& c) {
        if (a < 0 || b < 0) throw DomainError("monomial degrees must be nonnegative");
        if (c == 0) return;
        auto it = terms_.find({a, b});
        if (it == terms_.end()) {
            terms_.emplace(Key{a, b}, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<Key, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BigInt coeff(int a, int b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    int degree_x() const {
        int d = 0;
        for (const auto& [key, c] : terms_) d = std::max(d, key.first);
        return d;
    }

    int degree_y() const {
        int d = 0;
        for (const auto& [key, c] : terms_) d = std::max(d, key.second);
        return d;
    }

    // x^a y^b -> x^(ca) y^(cb)
    BivariatePoly substituted_powers(int c) const {
        if (c < 1) throw DomainError("power substitution factor must be >= 1");
        BivariatePoly out;
        for (const auto& [key, v] : terms_)
            out.terms_.emplace(Key{key.first * c, key.second * c}, v);
        return out;
    }

    friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly out = a;
        for (const auto& [key, v] : b.terms_) out.add_term(key.first, key.second, v);
        return out;
    }

    friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly out = a;
        for (const auto& [key, v] : b.terms_) out.add_term(key.first, key.second, -v);
        return out;
    }

    friend BivariatePoly operator-(const BivariatePoly& a) {
        BivariatePoly out;
        for (const auto& [key, v] : a.terms_) out.terms_.emplace(key, -v);
        return out;
    }

    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly out;
        for (const auto& [ka, va] : a.terms_)
            for (const auto& [kb, vb] : b.terms_)
                out.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
        return out;
    }

    friend BivariatePoly operator*(const BigInt& s, const BivariatePoly& p) {
        BivariatePoly out;
        if (s == 0) return out;
        for (const auto& [key, v] : p.terms_) out.terms_.emplace(key, s * v);
        return out;
    }

    bool operator==(const BivariatePoly&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [key, v] : terms_) {
            if (!out.empty()) out += v > 0 ? " + " : " - ";
            else if (v < 0) out += "-";
            BigInt mag = v < 0 ? BigInt(-v) : v;
            bool wrote = false;
            if (mag != 1 || (key.first == 0 && key.second == 0)) {
                out += mag.str();
                wrote = true;
            }
            for (auto [deg, name] : {std::pair{key.first, 'x'}, std::pair{key.second, 'y'}}) {
                if (deg == 0) continue;
                if (wrote) out += ' ';
                out += name;
                if (deg > 1) out += '^' + std::to_string(deg);
                wrote = true;
            }
        }
        return out;
    }

private:
    std::map<Key, BigInt> terms_;
};

// Numerator/denominator pair expandable as a power series: the denominator
// needs a unit constant term.
struct RationalGF {
    BivariatePoly num;
    BivariatePoly den;

    RationalGF substituted_powers(int c) const {
        return {num.substituted_powers(c), den.substituted_powers(c)};
    }
};

inline RationalGF substitute_powers(const RationalGF& gf, int c) {
    return gf.substituted_powers(c);
}

// num + add / den, as a single fraction
inline RationalGF gf_with_poly(const BivariatePoly& add, const RationalGF& gf) {
    return {add * gf.den + gf.num, gf.den};
}

inline RationalGF gf_sum(const RationalGF& a, const RationalGF& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}

// Coefficients of num/den up to x-degree N (y-degree capped at N as well).
// Exact integer division: requires den constant term +-1.
inline CountTable expand(const RationalGF& gf, int N) {
    const BigInt c0 = gf.den.coeff(0, 0);
    if (c0 != 1 && c0 != -1)
        throw DomainError("denominator constant term must be +1 or -1, got " + c0.str());
    const int sign = (c0 == 1) ? 1 : -1;

    std::vector<std::vector<BigInt>> grid(static_cast<std::size_t>(N) + 1,
                                          std::vector<BigInt>(static_cast<std::size_t>(N) + 1));
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= N; ++k) {
            BigInt acc = gf.num.coeff(n, k);
            for (const auto& [key, v] : gf.den.terms()) {
                const auto [p, q] = key;
                if (p == 0 && q == 0) continue;
                if (p <= n && q <= k) acc -= v * grid[static_cast<std::size_t>(n - p)][static_cast<std::size_t>(k - q)];
            }
            if (sign < 0) acc = -acc;
            grid[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(acc);
        }
    }

    CountTable out;
    for (int n = 0; n <= N; ++n) {
        auto& row = out.row(n);
        for (int k = 0; k <= N; ++k) {
            auto& v = grid[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            if (v != 0) row.emplace(k, std::move(v));
        }
    }
    return out;
}

// Row sums of an expansion: the univariate view used by the {1,6} family.
inline std::vector<BigInt> expand_univariate(const RationalGF& gf, int N) {
    const CountTable t = expand(gf, N);
    std::vector<BigInt> out(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) out[static_cast<std::size_t>(n)] = t.row_total(n);
    return out;
}

namespace detail {

// series with table(0,0) == 1 inverted to order N
inline CountTable series_inverse(const CountTable& a, int N) {
    if (a.at(0, 0) != 1) throw DomainError("series inverse needs constant term 1");
    std::vector<std::vector<BigInt>> grid(static_cast<std::size_t>(N) + 1,
                                          std::vector<BigInt>(static_cast<std::size_t>(N) + 1));
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= N; ++k) {
            BigInt acc = (n == 0 && k == 0) ? 1 : 0;
            // b(n,k) = [n=k=0] - sum_{(p,q) != (0,0)} a(p,q) b(n-p,k-q)
            for (int p = 0; p <= n; ++p) {
                auto row = a.rows.find(p);
                if (row == a.rows.end()) continue;
                for (const auto& [q, v] : row->second) {
                    if (q > k || (p == 0 && q == 0)) continue;
                    acc -= v * grid[static_cast<std::size_t>(n - p)][static_cast<std::size_t>(k - q)];
                }
            }
            grid[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(acc);
        }
    }
    CountTable out;
    for (int n = 0; n <= N; ++n) {
        auto& row = out.row(n);
        for (int k = 0; k <= N; ++k)
            if (grid[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] != 0)
                row.emplace(k, std::move(grid[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]));
    }
    return out;
}

}  // namespace detail

// A = 1/(1 - I) at series level; I must have zero constant term.
inline CountTable a_from_i(const CountTable& i_series, int N) {
    if (i_series.at(0, 0) != 0)
        throw DomainError("indecomposable series must have zero constant term");
    CountTable one_minus;
    one_minus.row(0)[0] = 1;
    for (const auto& [n, row] : i_series.rows) {
        if (n > N) break;
        for (const auto& [k, v] : row)
            if (k <= N && !(n == 0 && k == 0)) one_minus.row(n)[k] = -v;
    }
    return detail::series_inverse(one_minus, N);
}

// I = 1 - 1/A at series level; A must have constant term 1.
inline CountTable i_from_a(const CountTable& a_series, int N) {
    if (a_series.at(0, 0) != 1)
        throw DomainError("full series must have constant term 1");
    CountTable trimmed;
    for (const auto& [n, row] : a_series.rows) {
        if (n > N) break;
        auto& r = trimmed.row(n);
        for (const auto& [k, v] : row)
            if (k <= N) r.emplace(k, v);
    }
    CountTable inv = detail::series_inverse(trimmed, N);
    CountTable out;
    for (int n = 0; n <= N; ++n) {
        auto& row = out.row(n);
        auto it = inv.rows.find(n);
        if (it == inv.rows.end()) continue;
        for (const auto& [k, v] : it->second) {
            BigInt w = (n == 0 && k == 0) ? BigInt(1) - v : -v;
            if (w != 0) row.emplace(k, std::move(w));
        }
    }
    return out;
}

// Linear recurrence with (dn, dk) shifts, valid for n >= threshold;
// rows below the threshold come from the seed table.
struct Recurrence {
    struct Term {
        int dn = 1;
        int dk = 0;
        long long coeff = 0;
    };
    std::vector<Term> terms;
    int threshold = 0;
};

// value(n,k) = sum of coeff * value(n - dn, k - dk), with value(., k<0) = 0
// and value(n<0, .) = 0. Seeds must provide every row below the threshold.
inline CountTable run_recurrence(const Recurrence& rec, const CountTable& seeds, int N) {
    for (int n = 0; n < rec.threshold; ++n)
        if (!seeds.has_row(n) && n <= N)
            throw DomainError("missing seed row n=" + std::to_string(n));
    CountTable out;
    for (int n = 0; n <= std::min(N, rec.threshold - 1); ++n) {
        auto it = seeds.rows.find(n);
        out.row(n) = (it == seeds.rows.end()) ? std::map<int, BigInt>{} : it->second;
    }
    for (int n = rec.threshold; n <= N; ++n) {
        auto& row = out.row(n);
        for (int k = 0; k <= n; ++k) {
            BigInt acc = 0;
            for (const auto& t : rec.terms) {
                const int pn = n - t.dn;
                const int pk = k - t.dk;
                if (pn < 0 || pk < 0) continue;
                auto it = out.rows.find(pn);
                if (it == out.rows.end()) continue;
                auto jt = it->second.find(pk);
                if (jt != it->second.end()) acc += t.coeff * jt->second;
            }
            if (acc != 0) row.emplace(k, std::move(acc));
        }
    }
    return out;
}

}  // namespace seaweed
