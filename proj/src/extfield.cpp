#include "ssc/extfield.hpp"

#include <algorithm>

namespace ssc {

namespace {

using Poly = std::vector<Symbol>;  // low degree first, may carry trailing zeros

int deg_of(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i]) return i;
    return -1;
}

Poly poly_mul(const FieldSpec& f, const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return r;
}

Poly poly_mod(const FieldSpec& f, Poly a, const Poly& m) {
    const int dm = deg_of(m);
    for (int i = deg_of(a); i >= dm; i = deg_of(a)) {
        const Symbol c = f.div(a[i], m[dm]);
        for (int j = 0; j <= dm; ++j)
            a[i - dm + j] = f.sub(a[i - dm + j], f.mul(c, m[j]));
    }
    a.resize(std::max(dm, 1));
    return a;
}

Poly poly_powmod(const FieldSpec& f, Poly base, long e, const Poly& m) {
    Poly r{1};
    r.resize(m.size(), 0);
    base = poly_mod(f, base, m);
    while (e > 0) {
        if (e & 1) r = poly_mod(f, poly_mul(f, r, base), m);
        base = poly_mod(f, poly_mul(f, base, base), m);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(const FieldSpec& f, Poly a, Poly b) {
    while (deg_of(b) >= 0) {
        Poly m(deg_of(b) + 1);
        std::copy(b.begin(), b.begin() + m.size(), m.begin());
        a = poly_mod(f, a, m);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const FieldSpec& f, const Poly& m) {
    const int d = deg_of(m);
    if (d < 1) return false;
    // x^(q^d) == x mod m, and gcd(x^(q^(d/p)) - x, m) == 1 for primes p | d
    long qd = 1;
    for (int i = 0; i < d; ++i) qd *= f.q;
    Poly x{0, 1};
    Poly xp = poly_powmod(f, x, qd, m);
    Poly diff(std::max(static_cast<size_t>(2), xp.size()), 0);
    for (size_t i = 0; i < xp.size(); ++i) diff[i] = xp[i];
    diff[1] = f.sub(diff[1], 1);
    if (deg_of(diff) >= 0) return false;
    for (int p = 2; p <= d; ++p) {
        if (d % p != 0) continue;
        bool prime = true;
        for (int t = 2; t * t <= p; ++t)
            if (p % t == 0) prime = false;
        if (!prime) continue;
        long qe = 1;
        for (int i = 0; i < d / p; ++i) qe *= f.q;
        Poly xe = poly_powmod(f, x, qe, m);
        Poly g(std::max(static_cast<size_t>(2), xe.size()), 0);
        for (size_t i = 0; i < xe.size(); ++i) g[i] = xe[i];
        g[1] = f.sub(g[1], 1);
        Poly mm = m;
        if (deg_of(poly_gcd(f, mm, g)) != 0) return false;
    }
    return true;
}

Poly find_irreducible(const FieldSpec& f, int deg) {
    // enumerate monic polynomials in lexicographic order of low coefficients
    Poly m(deg + 1, 0);
    m[deg] = 1;
    std::vector<int> digits(deg, 0);
    while (true) {
        for (int i = 0; i < deg; ++i) m[i] = static_cast<Symbol>(digits[i]);
        if (is_irreducible(f, m)) return m;
        int i = 0;
        while (i < deg && ++digits[i] == f.q) digits[i++] = 0;
        if (i == deg) throw ConstructionFailed("no irreducible polynomial found");
    }
}

}  // namespace

ExtField::ExtField(const FieldSpec& base, int deg) : base_(&base), deg_(deg) {
    if (deg < 1 || deg > 40) throw BadArgs("ExtField: degree out of range");
    double bits = 0;
    for (int v = base.q; v > 1; v /= 2) bits += 1;
    if (bits * deg >= 62) throw BadArgs("ExtField: q^deg too large for irreducibility test");
    mod_ = deg == 1 ? Poly{0, 1} : find_irreducible(base, deg);
}

ExtField::Elem ExtField::one() const {
    Elem e(deg_, 0);
    e[0] = 1;
    return e;
}

ExtField::Elem ExtField::gen() const {
    Elem e(deg_, 0);
    if (deg_ == 1)
        e[0] = 1;  // prime-degree-1 tower: generator is 1
    else
        e[1] = 1;
    return e;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = base_->add(a[i], b[i]);
    return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    Poly p = poly_mul(*base_, a, b);
    p = poly_mod(*base_, p, mod_);
    Elem r(deg_, 0);
    for (int i = 0; i < deg_ && i < static_cast<int>(p.size()); ++i) r[i] = p[i];
    return r;
}

ExtField::Elem ExtField::scale(Symbol c, const Elem& a) const {
    Elem r(deg_);
    for (int i = 0; i < deg_; ++i) r[i] = base_->mul(c, a[i]);
    return r;
}

ExtField::Elem ExtField::pow_q(const Elem& a, int times) const {
    Elem r = a;
    for (int t = 0; t < times; ++t) {
        Elem acc = r;
        // r^q by square-and-multiply on the exponent q
        Elem res = one();
        int e = base_->q;
        Elem b = acc;
        while (e > 0) {
            if (e & 1) res = mul(res, b);
            b = mul(b, b);
            e >>= 1;
        }
        r = res;
    }
    return r;
}

}  // namespace ssc
