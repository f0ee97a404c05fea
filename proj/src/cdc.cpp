#include "ssc/cdc.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ssc {

BigInt CdcCode::size() const {
    BigInt total = 0;
    for (const auto& c : cells) total += q_pow(q, c.code.rho());
    return total;
}

void CdcCode::for_each_codeword(const std::function<void(const SubspaceRep&)>& fn) const {
    for (const auto& c : cells) {
        c.code.for_each_codeword(
            [&](const std::vector<Symbol>& values) { fn(lift(c.v, values, *field)); });
    }
}

std::vector<SubspaceRep> CdcCode::expand(std::uint64_t limit) const {
    BigInt total = size();
    if (total > BigInt(limit)) throw TooLarge("CdcCode::expand over limit");
    std::vector<SubspaceRep> out;
    out.reserve(static_cast<size_t>(total));
    for_each_codeword([&](const SubspaceRep& s) { out.push_back(s); });
    return out;
}

void CdcCode::validate() const {
    std::map<std::vector<Symbol>, std::vector<const Cell*>> by_vec;
    for (const auto& c : cells) {
        if (c.v.n() != n) throw AmbientMismatch("cell vector length");
        if (c.v.weight() != k) throw BadParams("cell vector weight != k");
        if (!(c.code.diagram == diagram_from_vector(c.v)))
            throw DiagramMismatch("cell code diagram mismatch");
        if (static_cast<int>(c.code.offset.size()) != c.code.diagram.dots())
            throw DiagramMismatch("cell offset length");
        by_vec[c.v.bits].push_back(&c);
    }
    for (const auto& [bits, group] : by_vec) {
        if (group.size() == 1) continue;
        // cells sharing an identifying vector must be pairwise disjoint;
        // embedded base codes only ever produce singleton cells
        for (const auto* c : group)
            if (c->code.rho() != 0)
                throw BadParams("cells sharing a vector must be singletons");
        std::set<std::vector<Symbol>> offs;
        for (const auto* c : group)
            if (!offs.insert(c->code.offset).second)
                throw BadParams("duplicate cell offsets for one vector");
    }
}

CdcCode lifted_mrd(int n, int k, int d, int q) {
    if (k < 1 || k >= n || d < 1 || d > std::min(k, n - k))
        throw BadParams("lifted_mrd: bad parameters");
    const FieldSpec& f = field_new(q);
    CdcCode code;
    code.q = q;
    code.n = n;
    code.k = k;
    code.d = d;
    code.field = &f;
    std::vector<Symbol> bits(n, 0);
    for (int i = 0; i < k; ++i) bits[i] = 1;
    Cell cell;
    cell.v = IdVector(bits);
    cell.code = fdmrd_auto(diagram_from_vector(cell.v), d, f);
    code.cells.push_back(std::move(cell));
    code.meta = "construction=lifted-mrd n=" + std::to_string(n) + " k=" + std::to_string(k) +
                " d=" + std::to_string(d) + " q=" + std::to_string(q);
    return code;
}

CdcCode multilevel(const std::vector<IdVector>& vectors, int d, int q) {
    if (vectors.empty()) throw BadParams("multilevel: no identifying vectors");
    const FieldSpec& f = field_new(q);
    const int n = vectors[0].n();
    const int k = vectors[0].weight();
    for (const auto& v : vectors) {
        if (v.n() != n) throw LengthMismatch("multilevel: mixed lengths");
        if (v.weight() != k) throw BadParams("multilevel: mixed weights");
    }
    for (size_t i = 0; i < vectors.size(); ++i)
        for (size_t j = i + 1; j < vectors.size(); ++j)
            if (asym_distance(vectors[i], vectors[j]) < d)
                throw DistanceViolation("multilevel: identifying vectors too close");
    CdcCode code;
    code.q = q;
    code.n = n;
    code.k = k;
    code.d = d;
    code.field = &f;
    for (const auto& v : vectors) {
        Cell cell;
        cell.v = v;
        cell.code = fdmrd_auto(diagram_from_vector(v), d, f);
        code.cells.push_back(std::move(cell));
    }
    code.meta = "construction=multilevel d=" + std::to_string(d) + " q=" + std::to_string(q);
    return code;
}

CdcCode dual_code(const CdcCode& c, std::uint64_t limit) {
    CdcCode out;
    out.q = c.q;
    out.n = c.n;
    out.k = c.n - c.k;
    out.d = c.d;
    out.field = c.field;
    out.meta = "dual of {" + c.meta + "}";
    for (const auto& s : c.expand(limit)) {
        // orthogonal complement w.r.t. the standard bilinear form
        auto ker = kernel_basis(s.mat);
        MatGF basis(static_cast<int>(ker.size()), c.n, *c.field);
        for (size_t i = 0; i < ker.size(); ++i)
            for (int j = 0; j < c.n; ++j) basis.at(static_cast<int>(i), j) = ker[i][j];
        SubspaceRep comp = SubspaceRep::from_span(basis);
        Cell cell;
        cell.v = identifying_vector(comp);
        Tableaux t = tableaux_of(comp);
        cell.code.diagram = t.diagram;
        cell.code.field = c.field;
        cell.code.offset = t.values;
        cell.code.declared_d = c.d;
        out.cells.push_back(std::move(cell));
    }
    return out;
}

CdcCode prepend_zero_columns(const CdcCode& c, int z) {
    if (z < 0) throw BadArgs("prepend_zero_columns");
    CdcCode out = c;
    out.n = c.n + z;
    out.meta = c.meta + " +" + std::to_string(z) + "-zero-prefix";
    for (auto& cell : out.cells) {
        std::vector<Symbol> bits(z, 0);
        bits.insert(bits.end(), cell.v.bits.begin(), cell.v.bits.end());
        cell.v = IdVector(std::move(bits));
        // diagrams depend only on zeros to the right of each one: unchanged
    }
    return out;
}

}  // namespace ssc
