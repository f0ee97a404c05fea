#include "ssc/bigint.hpp"

namespace ssc {

BigInt q_pow(int q, long e) {
    if (e < 0) throw BadArgs("q_pow: negative exponent");
    BigInt r = 1, base = q;
    long n = e;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

BigInt div_exact(const BigInt& a, const BigInt& b) {
    if (b == 0 || a % b != 0) throw BadArgs("div_exact: not divisible");
    return a / b;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    if (b <= 0 || a < 0) throw BadArgs("ceil_div: bad operands");
    return (a + b - 1) / b;
}

BigInt gaussian_binomial(int n, int k, int q) {
    if (n < 0 || k < 0 || k > n) throw BadArgs("gaussian_binomial: need 0 <= k <= n");
    if (q < 2) throw BadArgs("gaussian_binomial: q < 2");
    // acc after step i equals [n-k+i, i]_q, so every division is exact.
    BigInt acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= q_pow(q, n - k + i) - 1;
        acc = div_exact(acc, q_pow(q, i) - 1);
    }
    return acc;
}

}  // namespace ssc
