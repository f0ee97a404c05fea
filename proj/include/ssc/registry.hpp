#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "ssc/cdc.hpp"

namespace ssc {

// Best-known lower bounds A*_q(n,d,k), combining seeded external constants
// with the size formulas of the constructions in this library. best() is the
// maximum over everything applicable; entries record their provenance.
class Registry {
  public:
    struct Entry {
        BigInt size;
        std::string provenance;  // "external" or "builder:<name>"
    };

    using Key = std::tuple<int, int, int, int>;  // q, n, d, k

    void add_external(int q, int n, int d, int k, const BigInt& size, const std::string& prov);

    // Largest known size; throws RegistryMiss when no builder or constant applies.
    Entry best(int q, int n, int d, int k) const;
    std::optional<Entry> try_best(int q, int n, int d, int k) const;

    // Actual code matching best(); only a small set of builder-backed entries
    // (and the spread-dual base) can be materialized.
    CdcCode materialize(int q, int n, int d, int k) const;

    // Seeded external constant lookup (exact key or its dual), if any.
    std::optional<Entry> external(int q, int n, int d, int k) const;

    const std::map<Key, Entry>& externals() const { return external_; }

    // Named scalar constants used by the projective pipeline.
    void add_named(const std::string& name, const BigInt& value);
    std::optional<BigInt> named(const std::string& name) const;

  private:
    std::map<Key, Entry> external_;
    std::map<std::string, BigInt> named_;
    mutable std::map<Key, Entry> memo_;
};

// Registry pre-loaded with the external constants the reports depend on.
Registry registry_default(int q);

// Supplemental entries, one per line: q n d k size provenance...
void load_supplemental(Registry& reg, std::istream& in);

}  // namespace ssc
