#pragma once

#include <vector>

#include "ssc/field.hpp"

namespace ssc {

// GF(q^deg) as a vector space over a base GF(q), used internally by the
// Gabidulin construction. Elements are coefficient vectors of length deg,
// low degree first. The modulus is the lexicographically smallest monic
// irreducible of the given degree, found by brute force (deg stays small).
class ExtField {
  public:
    ExtField(const FieldSpec& base, int deg);

    using Elem = std::vector<Symbol>;

    int degree() const { return deg_; }
    const FieldSpec& base() const { return *base_; }

    Elem zero() const { return Elem(deg_, 0); }
    Elem one() const;
    Elem gen() const;  // the class of x

    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(Symbol c, const Elem& a) const;
    Elem pow_q(const Elem& a, int times = 1) const;  // Frobenius a -> a^q, iterated

    const std::vector<Symbol>& modulus() const { return mod_; }

  private:
    const FieldSpec* base_;
    int deg_;
    std::vector<Symbol> mod_;  // monic, length deg_+1
};

}  // namespace ssc
