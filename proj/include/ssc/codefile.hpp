#pragma once

#include <iosfwd>
#include <string>

#include "ssc/cdc.hpp"
#include "ssc/projective.hpp"

namespace ssc {

// Text formats:
//   .ssc   expanded codewords:  SSC 1 / q= poly= / n= metric= d= count= / # meta
//          then per codeword "K <k>" and k lines of n hex symbols,
//          sorted by (identifying vector, tableaux values)
//   .sscc  cell form: same header, then per cell "V <bits>", "O <symbols>",
//          "B <rho>" and rho basis tableaux lines, sorted by (V, O)
struct CodeFile {
    int q = 2;
    int poly = 0;
    int n = 0;
    int d = 1;
    char metric = 'I';
    BigInt count;
    std::string meta;
    bool cell_form = false;
    CdcCode code;                      // filled for cell-form and constant-dim files
    std::vector<SubspaceRep> words;    // filled for expanded files
    bool constant_dim = true;
    int k = 0;  // constant dimension when constant_dim
};

void write_sscc(const CdcCode& code, std::ostream& os);
void write_ssc(const CdcCode& code, std::ostream& os, std::uint64_t limit = 1u << 22);
void write_ssc_words(const std::vector<SubspaceRep>& words, int q, int n, char metric, int d,
                     const std::string& meta, std::ostream& os);

CodeFile read_codefile(std::istream& is);

}  // namespace ssc
