#include "ssc/codefile.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace ssc {

namespace {

std::string hex_row(const std::vector<Symbol>& row) {
    std::string s;
    s.reserve(row.size());
    for (Symbol v : row) s.push_back(symbol_to_hex(v));
    return s;
}

void write_header(std::ostream& os, int q, int poly, int n, char metric, int d,
                  const BigInt& count, const std::string& meta) {
    os << "SSC 1\n";
    os << "q=" << q << " poly=" << poly << "\n";
    os << "n=" << n << " metric=" << metric << " d=" << d << " count=" << count << "\n";
    if (!meta.empty()) os << "# meta: " << meta << "\n";
}

struct ParsedHeader {
    int q, poly, n, d;
    char metric;
    BigInt count;
    std::string meta;
};

int parse_int_field(const std::string& line, const std::string& key) {
    const auto pos = line.find(key + "=");
    if (pos == std::string::npos) throw ParseError("missing field " + key);
    return std::stoi(line.substr(pos + key.size() + 1));
}

ParsedHeader parse_header(std::istream& is) {
    ParsedHeader h;
    std::string line;
    if (!std::getline(is, line) || line != "SSC 1") throw ParseError("bad magic line");
    if (!std::getline(is, line)) throw ParseError("missing field line");
    h.q = parse_int_field(line, "q");
    h.poly = parse_int_field(line, "poly");
    if (!std::getline(is, line)) throw ParseError("missing parameter line");
    h.n = parse_int_field(line, "n");
    h.d = parse_int_field(line, "d");
    const auto mpos = line.find("metric=");
    if (mpos == std::string::npos) throw ParseError("missing metric");
    h.metric = line[mpos + 7];
    const auto cpos = line.find("count=");
    if (cpos == std::string::npos) throw ParseError("missing count");
    h.count = BigInt(line.substr(cpos + 6));
    return h;
}

}  // namespace

void write_sscc(const CdcCode& code, std::ostream& os) {
    write_header(os, code.q, code.field->poly, code.n, 'I', code.d, code.size(), code.meta);
    std::vector<const Cell*> order;
    for (const auto& c : code.cells) order.push_back(&c);
    std::sort(order.begin(), order.end(), [](const Cell* a, const Cell* b) {
        if (a->v.bits != b->v.bits) return a->v.bits < b->v.bits;
        return a->code.offset < b->code.offset;
    });
    for (const Cell* c : order) {
        os << "V " << c->v.str() << "\n";
        os << "O " << hex_row(c->code.offset) << "\n";
        os << "B " << c->code.rho() << "\n";
        for (const auto& b : c->code.basis) os << hex_row(b) << "\n";
    }
}

void write_ssc_words(const std::vector<SubspaceRep>& words, int q, int n, char metric, int d,
                     const std::string& meta, std::ostream& os) {
    struct Entry {
        std::string vstr, tab;
        const SubspaceRep* s;
    };
    std::vector<Entry> entries;
    entries.reserve(words.size());
    for (const auto& s : words) {
        Tableaux t = tableaux_of(s);
        entries.push_back({identifying_vector(s).str(), hex_row(t.values), &s});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.vstr != b.vstr) return a.vstr < b.vstr;
        return a.tab < b.tab;
    });
    write_header(os, q, field_new(q).poly, n, metric, d,
                 BigInt(static_cast<long>(words.size())), meta);
    for (const auto& e : entries) {
        os << "K " << e.s->k << "\n";
        for (int r = 0; r < e.s->k; ++r) {
            std::string row(n, '0');
            for (int c = 0; c < n; ++c) row[c] = symbol_to_hex(e.s->mat.at(r, c));
            os << row << "\n";
        }
    }
}

void write_ssc(const CdcCode& code, std::ostream& os, std::uint64_t limit) {
    write_ssc_words(code.expand(limit), code.q, code.n, 'I', code.d, code.meta, os);
}

CodeFile read_codefile(std::istream& is) {
    ParsedHeader h = parse_header(is);
    CodeFile f;
    f.q = h.q;
    f.poly = h.poly;
    f.n = h.n;
    f.d = h.d;
    f.metric = h.metric;
    f.count = h.count;
    const FieldSpec& fld = field_new(h.q);
    if (fld.poly != h.poly) throw ParseError("polynomial does not match the fixed field table");

    std::string line;
    bool first_body = true;
    BigInt seen = 0;
    std::set<int> dims;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string tag = "# meta: ";
            if (first_body && line.rfind(tag, 0) == 0) f.meta = line.substr(tag.size());
            continue;
        }
        if (line[0] == 'V') {
            f.cell_form = true;
            Cell cell;
            cell.v = IdVector::from_string(line.substr(2));
            if (cell.v.n() != f.n) throw ParseError("cell vector length mismatch");
            cell.code.diagram = diagram_from_vector(cell.v);
            cell.code.field = &fld;
            cell.code.declared_d = f.d;
            if (!std::getline(is, line) || line.rfind("O", 0) != 0)
                throw ParseError("expected offset line");
            const std::string osym = line.size() > 2 ? line.substr(2) : "";
            for (char c : osym) cell.code.offset.push_back(hex_to_symbol(c));
            if (static_cast<int>(cell.code.offset.size()) != cell.code.diagram.dots())
                throw ParseError("offset length mismatch");
            if (!std::getline(is, line) || line.rfind("B ", 0) != 0)
                throw ParseError("expected basis count line");
            const int rho = std::stoi(line.substr(2));
            for (int t = 0; t < rho; ++t) {
                if (!std::getline(is, line)) throw ParseError("missing basis line");
                std::vector<Symbol> b;
                for (char c : line) b.push_back(hex_to_symbol(c));
                if (static_cast<int>(b.size()) != cell.code.diagram.dots())
                    throw ParseError("basis length mismatch");
                cell.code.basis.push_back(std::move(b));
            }
            seen += q_pow(f.q, rho);
            f.code.cells.push_back(std::move(cell));
        } else if (line[0] == 'K') {
            const int k = std::stoi(line.substr(2));
            MatGF m(k, f.n, fld);
            for (int r = 0; r < k; ++r) {
                if (!std::getline(is, line) || static_cast<int>(line.size()) != f.n)
                    throw ParseError("bad codeword row");
                for (int c = 0; c < f.n; ++c) {
                    const Symbol s = hex_to_symbol(line[c]);
                    if (s >= fld.q) throw ParseError("symbol out of field range");
                    m.at(r, c) = s;
                }
            }
            SubspaceRep s = SubspaceRep::from_span(m);
            if (s.k != k) throw ParseError("codeword rows are not independent");
            dims.insert(k);
            f.words.push_back(std::move(s));
            seen += 1;
        } else {
            throw ParseError("unexpected line: " + line);
        }
        first_body = false;
    }
    if (seen != f.count) throw ParseError("count does not match the body");
    if (f.cell_form) {
        f.code.q = f.q;
        f.code.n = f.n;
        f.code.d = f.d;
        f.code.field = &fld;
        f.code.meta = f.meta;
        f.code.k = f.code.cells.empty() ? 0 : f.code.cells.front().v.weight();
        f.k = f.code.k;
        f.code.validate();
        f.constant_dim = true;
    } else {
        f.constant_dim = dims.size() <= 1;
        f.k = dims.empty() ? 0 : *dims.begin();
        if (f.constant_dim && f.metric == 'I') {
            // singleton cells allow the structured machinery to run
            f.code.q = f.q;
            f.code.n = f.n;
            f.code.k = f.k;
            f.code.d = f.d;
            f.code.field = &fld;
            f.code.meta = f.meta;
            for (const auto& s : f.words) {
                Cell cell;
                cell.v = identifying_vector(s);
                Tableaux t = tableaux_of(s);
                cell.code.diagram = t.diagram;
                cell.code.field = &fld;
                cell.code.offset = t.values;
                cell.code.declared_d = f.d;
                f.code.cells.push_back(std::move(cell));
            }
        }
    }
    return f;
}

}  // namespace ssc
