#include "ssc/matchings.hpp"

#include <algorithm>

namespace ssc {

std::vector<IdVector> MatchingClass::vectors() const {
    std::vector<IdVector> out;
    for (auto [a, b] : edges) {
        std::vector<Symbol> bits(m, 0);
        bits[a - 1] = 1;
        bits[b - 1] = 1;
        out.emplace_back(std::move(bits));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int wrap(int x, int mod) { return (x % mod + mod - 1) % mod + 1; }  // into 1..mod

std::pair<int, int> edge(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

}  // namespace

Factorization factorize(int m) {
    if (m < 3) throw TooSmall("factorize: m >= 3");
    Factorization f;
    f.m = m;
    if (m % 2 == 0) {
        const int ring = m - 1;
        for (int i = 1; i <= ring; ++i) {
            MatchingClass cls;
            cls.m = m;
            cls.index = i;
            cls.edges.push_back(edge(i, m));  // spoke to the center
            for (int j = 1; j <= (m - 2) / 2; ++j)
                cls.edges.push_back(edge(wrap(i - j, ring), wrap(i + j, ring)));
            std::sort(cls.edges.begin(), cls.edges.end());
            f.classes.push_back(std::move(cls));
        }
    } else {
        for (int i = 1; i <= m; ++i) {
            MatchingClass cls;
            cls.m = m;
            cls.index = i;
            for (int j = 1; j <= (m - 1) / 2; ++j)
                cls.edges.push_back(edge(wrap(i - j, m), wrap(i + j, m)));
            std::sort(cls.edges.begin(), cls.edges.end());
            f.classes.push_back(std::move(cls));
        }
    }
    return f;
}

BigInt class_fdrm_size(int i, int nprime, int q) {
    const int n = nprime;
    const int cls_count = (n % 2 == 0) ? n - 1 : n;
    if (i < 1 || i > cls_count) throw BadIndex("class_fdrm_size: class index out of range");
    // zero-coefficient terms are skipped before evaluating q^e (e may be negative there)
    auto term = [&](long coeff, long e) -> BigInt {
        if (coeff == 0) return 0;
        if (e < 0) throw BadArgs("class_fdrm_size: negative exponent with nonzero coefficient");
        return BigInt(coeff) * q_pow(q, e);
    };
    if (n % 2 == 0) {
        if (i <= n / 2)
            return term(n / 2 - i, n - 2 * i) + term(i - 1, 2 * (n - i) - 1) + term(1, n - i - 1);
        return term(i - n / 2, 3 * n - 2 * (i + 1)) + term(n - i - 1, 2 * (n - i) - 1) + term(1, n - i - 1);
    }
    if (i <= (n + 1) / 2)
        return term((n + 1) / 2 - i, n - 2 * i - 1) + term(i - 1, 2 * (n - i) - 1);
    return term(i - (n + 1) / 2, 3 * n - 2 * i - 1) + term(n - i, 2 * (n - i) - 1);
}

std::vector<IdVector> o_set(int len) {
    if (len < 2) throw TooShort("o_set: len >= 2");
    std::vector<IdVector> out;
    for (int i = 0; i + 2 <= len; i += 2) {
        std::vector<Symbol> bits(len, 0);
        bits[i] = 1;
        bits[i + 1] = 1;
        out.emplace_back(std::move(bits));
    }
    return out;
}

std::vector<IdVector> obar_set(int k) {
    if (k < 2) throw TooShort("obar_set: k >= 2");
    std::vector<IdVector> out;
    for (int i = 1; i <= k / 2; ++i) {
        std::vector<Symbol> bits(k, 1);
        // zeros at positions j with ceil((k-j+1)/2) = i, 1-based
        bits[k - 2 * i + 1 - 1] = 0;
        bits[k - 2 * i + 2 - 1] = 0;
        out.emplace_back(std::move(bits));
    }
    return out;
}

}  // namespace ssc
