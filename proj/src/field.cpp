#include "ssc/field.hpp"

#include <map>
#include <mutex>

namespace ssc {

namespace {

// digits base p <-> small polynomial over GF(p), low degree first
std::vector<int> to_digits(int v, int p) {
    std::vector<int> d;
    while (v > 0) {
        d.push_back(v % p);
        v /= p;
    }
    return d;
}

int mul_mod_poly(int a, int b, int p, const std::vector<int>& poly) {
    // schoolbook product of digit polynomials, reduced mod the monic poly
    std::vector<int> da = to_digits(a, p), db = to_digits(b, p);
    std::vector<int> prod(da.size() + db.size(), 0);
    for (size_t i = 0; i < da.size(); ++i)
        for (size_t j = 0; j < db.size(); ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    const int deg = static_cast<int>(poly.size()) - 1;
    for (int i = static_cast<int>(prod.size()) - 1; i >= deg; --i) {
        int c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < deg; ++j)
            prod[i - deg + j] = ((prod[i - deg + j] - c * poly[j]) % p + p * p) % p;
    }
    int v = 0;
    for (int i = deg - 1; i >= 0; --i) v = v * p + (i < static_cast<int>(prod.size()) ? prod[i] : 0);
    return v;
}

int fixed_poly(int q) {
    switch (q) {
        case 4: return 7;    // x^2+x+1 over GF(2)
        case 8: return 11;   // x^3+x+1
        case 9: return 10;   // x^2+1 over GF(3), digits (1,0,1)
        case 16: return 19;  // x^4+x+1
        default: return 0;
    }
}

FieldSpec build_field(int q) {
    FieldSpec f;
    f.q = q;
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0, v = q;
    while (v > 1) {
        if (v % p != 0) throw NotPrimePower();
        v /= p;
        ++e;
    }
    f.p = p;
    f.e = e;
    f.poly = fixed_poly(q);

    std::vector<int> poly = to_digits(f.poly, p);
    if (e > 1) poly.resize(e + 1, 0);

    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (e == 1) {
                f.add_[a * 16 + b] = static_cast<Symbol>((a + b) % p);
                f.mul_[a * 16 + b] = static_cast<Symbol>((a * b) % p);
            } else {
                // addition is digit-wise mod p
                int s = 0, x = a, y = b, mult = 1;
                for (int i = 0; i < e; ++i) {
                    s += ((x % p + y % p) % p) * mult;
                    mult *= p;
                    x /= p;
                    y /= p;
                }
                f.add_[a * 16 + b] = static_cast<Symbol>(s);
                f.mul_[a * 16 + b] = static_cast<Symbol>(mul_mod_poly(a, b, p, poly));
            }
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (f.add_[a * 16 + b] == 0) f.neg_[a] = static_cast<Symbol>(b);
            if (a != 0 && f.mul_[a * 16 + b] == 1) f.inv_[a] = static_cast<Symbol>(b);
        }
    }
    return f;
}

}  // namespace

bool is_prime_power(int q) {
    if (q < 2) return false;
    int p = 2;
    while (q % p != 0) ++p;
    while (q > 1) {
        if (q % p != 0) return false;
        q /= p;
    }
    return true;
}

Symbol FieldSpec::inv(Symbol a) const {
    if (a == 0) throw BadArgs("inverse of zero");
    return inv_[a];
}

const FieldSpec& field_new(int q) {
    if (q > 16) throw Unsupported("field_new: q > 16");
    if (q < 2 || !is_prime_power(q)) throw NotPrimePower("field_new: q not a prime power");
    static std::map<int, FieldSpec> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, build_field(q)).first;
    return it->second;
}

char symbol_to_hex(Symbol s) {
    return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

Symbol hex_to_symbol(char c) {
    if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<Symbol>(c - 'a' + 10);
    throw ParseError(std::string("bad symbol character '") + c + "'");
}

}  // namespace ssc
