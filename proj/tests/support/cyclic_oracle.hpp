#pragma once

// Brute-force homology count for lens space fillings, kept free of any
// library code so it can serve as an oracle for the enumerator.
//
// Divisor: L = h, then a chain C1..Ck with C1.C1 = 1 - c1, Ci.Ci = -ci,
// where n/(n-q) = [c1..ck].  Every class a*h + sum x_j e_j of CP2 # N is
// tried; an embedding is kept when the pairings match the chain, each class
// satisfies adjunction for a sphere, and no e_j is orthogonal to the whole
// divisor (that would be a -1 sphere inside the filling).  e_j with
// e_j.X >= 0 for every divisor curve X is a leftover exceptional curve; the
// attachment vector records how the leftovers meet the chain.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;  // a*h + sum x_j e_j stored as [a, x_1..x_N]

inline std::vector<int> ceil_expansion(int n, int q) {
    std::vector<int> out;
    while (q > 0) {
        int b = (n + q - 1) / q;
        out.push_back(b);
        int r = b * q - n;
        n = q;
        q = r;
    }
    return out;
}

inline int dot(const Vec& x, const Vec& y) {
    int s = x[0] * y[0];
    for (std::size_t j = 1; j < x.size(); ++j) s -= x[j] * y[j];
    return s;
}

inline int c1(const Vec& x) {
    int s = 3 * x[0];
    for (std::size_t j = 1; j < x.size(); ++j) s += x[j];
    return s;
}

// Attachment vectors (length k) over all embeddings with at most max_n
// exceptional classes.
inline std::set<std::vector<int>> cyclic_attachments(int n, int q, int max_n) {
    std::vector<int> c = ceil_expansion(n, n - q);
    const int k = static_cast<int>(c.size());
    std::vector<int> w(k);
    for (int i = 0; i < k; ++i) w[i] = -c[i];
    w[0] += 1;
    std::set<std::vector<int>> out;
    for (int N = 0; N <= max_n; ++N) {
        Vec L(N + 1, 0);
        L[0] = 1;
        std::vector<Vec> chain;
        std::function<void(int)> place = [&](int i) {
            if (i == k) {
                std::vector<int> att(k, 0);
                for (int j = 1; j <= N; ++j) {
                    bool touches = false, leftover = true;
                    for (const auto& x : chain) {
                        if (x[j] != 0) touches = true;
                        if (x[j] > 0) leftover = false;  // e_j.x = -x[j]
                    }
                    if (!touches) return;
                    if (!leftover) continue;
                    for (int t = 0; t < k; ++t) att[t] += -chain[t][j];
                }
                out.insert(att);
                return;
            }
            const int a = i == 0 ? 1 : 0;
            int bound = 0;
            while (bound * bound <= a * a - w[i]) ++bound;
            Vec x(N + 1, 0);
            x[0] = a;
            std::function<void(int)> coeff = [&](int j) {
                if (j > N) {
                    if (dot(x, x) != w[i] || c1(x) != w[i] + 2) return;
                    if (dot(x, L) != (i == 0 ? 1 : 0)) return;
                    for (int t = 0; t < i; ++t)
                        if (dot(x, chain[t]) != (t == i - 1 ? 1 : 0)) return;
                    chain.push_back(x);
                    place(i + 1);
                    chain.pop_back();
                    return;
                }
                for (int m = -bound; m <= bound; ++m) {
                    x[j] = m;
                    coeff(j + 1);
                }
                x[j] = 0;
            };
            coeff(1);
        };
        place(0);
    }
    return out;
}

}  // namespace oracle
