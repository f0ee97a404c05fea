#pragma once

#include <string>

#include "ssc/registry.hpp"

namespace ssc {

// Regenerated comparison tables. Construction columns are computed from the
// size formulas; multilevel and other literature columns are echoed registry
// constants and marked as external. which is 1, 2 or 3.
std::string table_report(int which, const Registry& reg);

// q^e + remainder split used by the tables when the leading term is present.
std::string split_form(const BigInt& value, int q, long lead_exp);

}  // namespace ssc
