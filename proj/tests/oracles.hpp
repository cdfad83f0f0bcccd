#pragma once

// Reference implementations used only by the tests. They are deliberately
// naive: dense int vectors, brute-force enumeration, no shared code paths
// with the library beyond reading structure constants.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "lscat/algebra.hpp"

namespace oracle {

/// Seed for property tests: LSCAT_SEED if set, else a fixed default.
inline std::uint64_t seed() {
    if (const char* s = std::getenv("LSCAT_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240229;
}

using Dense = std::vector<int>;
using DenseMatrix = std::vector<Dense>;

inline std::size_t rank(DenseMatrix m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && (m[p][c] & 1) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && (m[i][c] & 1))
                for (std::size_t k = 0; k < cols; ++k) m[i][k] ^= m[r][k];
        ++r;
    }
    return r;
}

inline DenseMatrix dense(const lscat::BitMatrix& m) {
    DenseMatrix d(m.rows(), Dense(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c);
    return d;
}

/// All exponent tuples below the truncations, odometer order (first
/// generator most significant).
inline std::vector<std::vector<unsigned>> all_monomials(const std::vector<unsigned>& p) {
    std::vector<std::vector<unsigned>> out;
    for (auto v : p)
        if (v == 0) return out;
    std::vector<unsigned> e(p.size(), 0);
    while (true) {
        out.push_back(e);
        std::size_t i = p.size();
        while (i > 0) {
            --i;
            if (++e[i] < p[i]) break;
            e[i] = 0;
            if (i == 0) return out;
        }
        if (p.empty()) return out;
    }
}

inline unsigned degree_of(const std::vector<unsigned>& e, const lscat::TruncatedPresentation& p) {
    unsigned d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * p.generators()[i].degree;
    return d;
}

inline std::vector<std::size_t> poincare(const lscat::TruncatedPresentation& p) {
    std::vector<std::size_t> out(p.top_degree() + 1, 0);
    for (const auto& e : all_monomials(p.truncations())) {
        const unsigned d = degree_of(e, p);
        if (d >= out.size()) out.resize(d + 1, 0);
        ++out[d];
    }
    return out;
}

inline std::vector<std::vector<unsigned>> basis_in_degree(const lscat::TruncatedPresentation& p, unsigned d) {
    std::vector<std::vector<unsigned>> out;
    for (const auto& e : all_monomials(p.truncations()))
        if (degree_of(e, p) == d) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

inline Dense multiply(const lscat::MultiplicationTable& t, const Dense& a, const Dense& b) {
    Dense out(t.size(), 0);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (!b[j]) continue;
            const auto prod = t.product(i, j);
            for (std::size_t k = 0; k < t.size(); ++k) out[k] ^= prod.get(k);
        }
    }
    return out;
}

/// Largest m such that some product of m positive-degree basis elements is
/// nonzero, found by breadth-first search over the distinct products.
inline unsigned cup_length(const lscat::MultiplicationTable& t) {
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t.degree(i) > 0) positive.push_back(i);
    std::set<Dense> level;
    for (auto i : positive) {
        Dense v(t.size(), 0);
        v[i] = 1;
        level.insert(v);
    }
    unsigned m = 0;
    while (!level.empty()) {
        ++m;
        std::set<Dense> next;
        for (const auto& v : level)
            for (auto i : positive) {
                Dense e(t.size(), 0);
                e[i] = 1;
                auto w = multiply(t, v, e);
                if (std::any_of(w.begin(), w.end(), [](int x) { return x != 0; })) next.insert(std::move(w));
            }
        level = std::move(next);
    }
    return m;
}

/// Rank of the degree-d pairing H^d x H^(n-d) -> H^n onto a unique top class.
inline std::size_t pairing_rank(const lscat::MultiplicationTable& t, unsigned d, std::size_t top) {
    const unsigned n = t.top_degree();
    DenseMatrix m;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t.degree(i) != d) continue;
        Dense row;
        for (std::size_t j = 0; j < t.size(); ++j)
            if (t.degree(j) == n - d) row.push_back(t.product(i, j).get(top));
        m.push_back(row);
    }
    return rank(m);
}

}  // namespace oracle
