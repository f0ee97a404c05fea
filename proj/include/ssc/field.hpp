#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ssc/errors.hpp"

namespace ssc {

using Symbol = std::uint8_t;

// GF(q) for prime powers 2 <= q <= 16, with a fixed irreducible polynomial per q
// so that symbol encodings are stable across runs. Symbols are integers in [0, q):
// an element sum c_i * alpha^i is encoded as sum c_i * p^i (digits base p).
struct FieldSpec {
    int q = 0;
    int p = 0;     // characteristic
    int e = 0;     // extension degree, q = p^e
    int poly = 0;  // irreducible polynomial, digits base p, low degree first; 0 for prime fields

    Symbol add(Symbol a, Symbol b) const { return add_[a * 16 + b]; }
    Symbol sub(Symbol a, Symbol b) const { return add_[a * 16 + neg_[b]]; }
    Symbol neg(Symbol a) const { return neg_[a]; }
    Symbol mul(Symbol a, Symbol b) const { return mul_[a * 16 + b]; }
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

    std::array<Symbol, 256> add_{};
    std::array<Symbol, 256> mul_{};
    std::array<Symbol, 16> neg_{};
    std::array<Symbol, 16> inv_{};  // inv_[0] unused
};

// Canonical immutable field instances (cached; safe to share across threads).
const FieldSpec& field_new(int q);

bool is_prime_power(int q);

char symbol_to_hex(Symbol s);
Symbol hex_to_symbol(char c);  // throws ParseError on a non-hex character

}  // namespace ssc
