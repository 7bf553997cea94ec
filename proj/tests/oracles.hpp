#pragma once

// Independent computations the tests compare the library against. Nothing
// here calls into the library's arithmetic: polynomials are plain int64
// coefficient vectors and determinants are expanded over column subsets.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <map>
#include <random>
#include <vector>

#include "contactcalc/model.hpp"

namespace oracle {

using Poly = std::vector<std::int64_t>;  // coefficient of t^k at index k
using Matrix = std::vector<std::vector<std::int64_t>>;

inline Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return trim(out);
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return trim(out);
}

inline Poly scale(const Poly& a, std::int64_t s) {
    Poly out = a;
    for (auto& c : out) c *= s;
    return trim(out);
}

// Exact division by a monic-up-to-sign divisor; the remainder must vanish.
inline Poly divide(Poly num, const Poly& den) {
    num = trim(num);
    const Poly d = trim(den);
    if (num.size() < d.size()) return {};
    Poly q(num.size() - d.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const std::int64_t lead = num[k + d.size() - 1];
        if (lead % d.back() != 0) throw std::logic_error("inexact polynomial division");
        q[k] = lead / d.back();
        for (std::size_t i = 0; i < d.size(); ++i) num[k + i] -= q[k] * d[i];
    }
    if (!trim(num).empty()) throw std::logic_error("nonzero remainder");
    return trim(q);
}

// Determinant of a matrix of polynomials by dynamic programming over the set
// of columns already used; row r picks column c with sign (-1)^(#used > c).
inline Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    std::vector<Poly> dp(std::size_t{1} << n);
    dp[0] = {1};
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask].empty()) continue;
        const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (row == n) continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (mask & (std::size_t{1} << c)) continue;
            const int above = __builtin_popcountll(mask >> (c + 1));
            const Poly term = scale(mul(dp[mask], m[row][c]), above % 2 ? -1 : 1);
            dp[mask | (std::size_t{1} << c)] = add(dp[mask | (std::size_t{1} << c)], term);
        }
    }
    return dp.back();
}

// Symmetrized, Delta(1) = 1 normalized Alexander polynomial from a Seifert matrix.
inline std::map<std::int64_t, std::int64_t> alexander_from_seifert(const Matrix& v) {
    const std::size_t n = v.size();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = trim({v[i][j], -v[j][i]});
    Poly p = poly_det(m);
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
    std::int64_t at_one = 0;
    for (auto c : p) at_one += c;
    const std::int64_t sign = at_one < 0 ? -1 : 1;
    const auto half = static_cast<std::int64_t>(p.size() - 1) / 2;
    std::map<std::int64_t, std::int64_t> out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] != 0) out[static_cast<std::int64_t>(k) - half] = sign * p[k];
    }
    return out;
}

inline int sign_variations(const Poly& p) {
    int changes = 0;
    std::int64_t last = 0;
    for (auto c : p) {
        if (c == 0) continue;
        if (last != 0 && ((c < 0) != (last < 0))) ++changes;
        last = c;
    }
    return changes;
}

// Signature of V + V^T. The characteristic polynomial of a symmetric matrix
// has only real roots, so Descartes' rule counts them exactly.
inline std::int64_t signature_from_seifert(const Matrix& v) {
    const std::size_t n = v.size();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = trim({v[i][j] + v[j][i], i == j ? -1 : 0});
    const Poly chi = poly_det(m);
    Poly mirrored = chi;
    for (std::size_t k = 1; k < mirrored.size(); k += 2) mirrored[k] = -mirrored[k];
    return sign_variations(chi) - sign_variations(mirrored);
}

// Seifert matrix of the positive (2, 2n+1) torus knot on its standard genus-n surface.
inline Matrix seifert_t2(int n) {
    Matrix v(static_cast<std::size_t>(2 * n), std::vector<std::int64_t>(static_cast<std::size_t>(2 * n), 0));
    for (int i = 0; i < 2 * n; ++i) {
        v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
        if (i + 1 < 2 * n) v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1;
    }
    return v;
}

// Torus-knot signature by counting lattice points (i, j), 0 < i < p, 0 < j < q:
// -1 when 1/2 < i/p + j/q < 3/2, +1 otherwise.
inline std::int64_t torus_signature(int p, int q) {
    std::int64_t s = 0;
    for (int i = 1; i < p; ++i) {
        for (int j = 1; j < q; ++j) {
            const int twice = 2 * (i * q + j * p);  // 2 pq (i/p + j/q)
            s += (twice > p * q && twice < 3 * p * q) ? -1 : 1;
        }
    }
    return s;
}

// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized.
inline std::map<std::int64_t, std::int64_t> torus_alexander(int p, int q) {
    auto binomial = [](int k) {
        Poly out(static_cast<std::size_t>(k) + 1, 0);
        out[0] = -1;
        out[static_cast<std::size_t>(k)] = 1;
        return out;
    };
    const Poly num = mul(binomial(p * q), binomial(1));
    const Poly den = mul(binomial(p), binomial(q));
    const Poly d = divide(num, den);
    std::map<std::int64_t, std::int64_t> out;
    const auto half = static_cast<std::int64_t>(d.size() - 1) / 2;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (d[k] != 0) out[static_cast<std::int64_t>(k) - half] = d[k];
    }
    return out;
}

// Random link data with tb_i + rot_i odd for every component, which makes the
// link-level parity hold.
inline contactcalc::LegendrianLinkData random_link(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::int64_t> tb_d(-6, 6), rot_d(-5, 5), lk_d(-3, 3);
    std::vector<std::int64_t> tb(n), rot(n);
    std::vector<std::vector<std::int64_t>> lk(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        tb[i] = tb_d(rng);
        do {
            rot[i] = rot_d(rng);
        } while ((tb[i] + rot[i]) % 2 == 0);
        for (std::size_t j = 0; j < i; ++j) lk[i][j] = lk[j][i] = lk_d(rng);
    }
    return contactcalc::LegendrianLinkData("random", tb, rot, lk);
}

}  // namespace oracle
