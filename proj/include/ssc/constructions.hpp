#pragma once

#include "ssc/cdc.hpp"
#include "ssc/matchings.hpp"

namespace ssc {

class Registry;

// ---- k = 3, d = 2 ----
// FieldTooSmall when q^2+q+1 < ell (use construction_A_mod instead).
CdcCode pending_dots(int n, int q);
BigInt size_pending_dots(int n, int q);

// ---- d = k-1 recursive construction (k = 3 delegates to pending_dots) ----
CdcCode construction_A(int n, int k, int q);
BigInt size_A(int n, int k, int q);

// Small-field variant (q^2+q+1 < ell). The builder materializes only the
// single-segment case; the size formula covers the full range.
CdcCode construction_A_mod(int n, int k, int q);
BigInt size_A_mod(int n, int k, int q);

// size_A or size_A_mod depending on the field condition
BigInt size_A_auto(int n, int k, int q);

// ---- d = 2 constructions ----
CdcCode construction_B(int n, int k, int q, const Registry& reg);
BigInt size_B(int n, int k, int q, const BigInt& base);

CdcCode construction_C4(int n, int q, const Registry& reg);
BigInt size_C4(int n, int q, const BigInt& base);

CdcCode construction_C5(int n, int q, const Registry& reg);
BigInt size_C5(int n, int q, const BigInt& base);

// ---- new codes from old ----
CdcCode construction_D(const CdcCode& base, int delta);
BigInt size_D(const BigInt& base_size, int k, int d, int q, int delta);

// ---- multicomponent ----
CdcCode multicomponent(int n, int k, int d, int q);
BigInt size_MC(int n, int k, int d, int q);

}  // namespace ssc
