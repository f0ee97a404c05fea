#include "ssc/registry.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "ssc/constructions.hpp"

namespace ssc {

void Registry::add_external(int q, int n, int d, int k, const BigInt& size,
                            const std::string& prov) {
    external_[{q, n, d, k}] = Entry{size, prov};
    memo_.clear();
}

void Registry::add_named(const std::string& name, const BigInt& value) { named_[name] = value; }

std::optional<BigInt> Registry::named(const std::string& name) const {
    auto it = named_.find(name);
    if (it == named_.end()) return std::nullopt;
    return it->second;
}

std::optional<Registry::Entry> Registry::external(int q, int n, int d, int k) const {
    auto it = external_.find({q, n, d, k});
    if (it != external_.end()) return it->second;
    it = external_.find({q, n, d, n - k});
    if (it != external_.end()) return it->second;
    return std::nullopt;
}

namespace {

int ell_for(int n, int k_top) {  // class count of the suffix factorization
    const int suffix = n - (k_top * k_top + k_top - 6) / 2;
    return suffix % 2 == 0 ? suffix - 1 : suffix;
}

// candidate sizes for one orientation of (n, d, k)
void collect(const Registry& reg, int q, int n, int d, int k,
             std::vector<Registry::Entry>& out) {
    if (k < 0 || k > n) return;
    if (k == 0 || k == n || d > std::min(k, n - k)) {
        out.push_back({BigInt(1), "builder:trivial"});
        return;
    }
    if (d == 1) {
        out.push_back({gaussian_binomial(n, k, q), "builder:grassmannian"});
        return;
    }
    out.push_back({q_pow(q, static_cast<long>(std::max(k, n - k)) *
                                (std::min(k, n - k) - d + 1)),
                   "builder:lifted-mrd"});
    if (n >= k + d) out.push_back({size_MC(n, k, d, q), "builder:multicomponent"});
    if (k == 3 && d == 2 && n >= 8) {
        if (q * q + q + 1 >= ell_for(n, 3))
            out.push_back({size_pending_dots(n, q), "builder:pending-dots"});
        else
            out.push_back({size_A_mod(n, 3, q), "builder:pending-dots-mod"});
    }
    if (k >= 4 && d == k - 1 && n >= (k * k + 3 * k - 2) / 2) {
        if (q * q + q + 1 >= ell_for(n, k))
            out.push_back({size_A(n, k, q), "builder:A"});
        else
            out.push_back({size_A_mod(n, k, q), "builder:A-mod"});
    }
    if (k >= 4 && d == 2 && n >= 2 * k + 2) {
        auto base = reg.try_best(q, n - k, 2, k);
        if (base) out.push_back({size_B(n, k, q, base->size), "builder:B"});
    }
    if (k == 4 && d == 2 && n >= 10) {
        auto base = reg.try_best(q, n - 4, 2, 4);
        if (base) out.push_back({size_C4(n, q, base->size), "builder:C4"});
    }
    if (k == 5 && d == 2 && n >= 12) {
        auto base = reg.try_best(q, n - 5, 2, 5);
        if (base) out.push_back({size_C5(n, q, base->size), "builder:C5"});
    }
}

}  // namespace

std::optional<Registry::Entry> Registry::try_best(int q, int n, int d, int k) const {
    if (n < 1 || k < 0 || k > n || d < 1) return std::nullopt;
    const Key key{q, n, d, k};
    auto memo = memo_.find(key);
    if (memo != memo_.end()) return memo->second;

    std::vector<Entry> cand;
    if (auto e = external(q, n, d, k)) cand.push_back(*e);
    collect(*this, q, n, d, k, cand);
    if (k != n - k) collect(*this, q, n, d, n - k, cand);
    if (cand.empty()) return std::nullopt;
    Entry best = cand.front();
    for (const auto& e : cand)
        if (e.size > best.size) best = e;
    memo_[key] = best;
    return best;
}

Registry::Entry Registry::best(int q, int n, int d, int k) const {
    auto e = try_best(q, n, d, k);
    if (!e) throw RegistryMiss("no registry entry for the requested parameters");
    return *e;
}

CdcCode Registry::materialize(int q, int n, int d, int k) const {
    const Entry want = best(q, n, d, k);
    // builder-backed materializations, checked against the registered size
    auto finish = [&](CdcCode code) {
        if (code.size() != want.size)
            throw RegistryMiss("materialized size does not match the best known value");
        return code;
    };
    if (k == 0 || k == n || d > std::min(k, n - k)) {
        // the single-subspace code
        CdcCode code;
        const FieldSpec& f = field_new(q);
        code.q = q;
        code.n = n;
        code.k = k;
        code.d = d;
        code.field = &f;
        code.meta = "construction=single";
        std::vector<Symbol> bits(n, 0);
        for (int i = 0; i < k; ++i) bits[i] = 1;
        Cell cell;
        cell.v = IdVector(bits);
        cell.code.diagram = diagram_from_vector(cell.v);
        cell.code.field = &f;
        cell.code.offset.assign(cell.code.diagram.dots(), 0);
        cell.code.declared_d = d;
        code.cells.push_back(std::move(cell));
        return finish(std::move(code));
    }
    if (k == 3 && d == 2 && n >= 8 && q * q + q + 1 >= ell_for(n, 3)) {
        CdcCode pd = pending_dots(n, q);
        if (pd.size() == want.size) return pd;
    }
    if (n >= k + d && d <= k && size_MC(n, k, d, q) == want.size)
        return finish(multicomponent(n, k, d, q));
    // dual of a materializable code (covers the embedded spread-complement bases)
    if (k > n - k) {
        CdcCode dual = materialize(q, n, d, n - k);
        return finish(dual_code(dual));
    }
    throw RegistryMiss("best known value is not materializable");
}

Registry registry_default(int q) {
    Registry reg;
    if (q == 2) {
        // exact best-known constants the tables and recursions rest on
        reg.add_external(2, 6, 2, 4, 21, "external");
        reg.add_external(2, 7, 2, 4, 304, "external");
        reg.add_external(2, 8, 2, 4, BigInt(4096) + 701, "external");
        reg.add_external(2, 9, 2, 4, 36945, "external");
        reg.add_external(2, 7, 2, 5, 41, "external");
        reg.add_external(2, 8, 2, 5, 1164, "external");
        reg.add_external(2, 10, 2, 5, q_pow(2, 20) + 118751, "external");
        reg.add_external(2, 11, 2, 5, 18699043, "external");
        reg.add_external(2, 8, 3, 4, 260, "external");
        reg.add_external(2, 10, 4, 5, 1028, "external");
        reg.add_external(2, 12, 2, 6, 1196288829, "external");
        reg.add_external(2, 11, 2, 2, 681, "external");
        // punctured-seed estimates for the length-11 mixed-dimension example
        reg.add_named("punctured_seed_I_11", 36808900);
        reg.add_named("punctured_seed_S_11", 36808838);
    } else if (q == 3) {
        reg.add_external(3, 10, 4, 5, 59058, "external");
    }
    return reg;
}

void load_supplemental(Registry& reg, std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        int q, n, d, k;
        std::string size_str, prov;
        if (!(ss >> q >> n >> d >> k >> size_str)) throw ParseError("bad registry line: " + line);
        std::getline(ss, prov);
        const size_t at = prov.find_first_not_of(" \t");
        prov = at == std::string::npos ? std::string("external") : prov.substr(at);
        reg.add_external(q, n, d, k, BigInt(size_str), prov);
    }
}

}  // namespace ssc
