#include <sstream>

#include "doctest.h"
#include "ssc/codefile.hpp"
#include "ssc/constructions.hpp"
#include "ssc/registry.hpp"
#include "ssc/verify.hpp"

using namespace ssc;

TEST_CASE("cell-form round trip is byte exact") {
    CdcCode pd = pending_dots(8, 2);
    std::ostringstream a;
    write_sscc(pd, a);
    std::istringstream in(a.str());
    CodeFile f = read_codefile(in);
    CHECK(f.cell_form);
    CHECK(f.code.size() == pd.size());
    CHECK(f.code.k == 3);
    std::ostringstream b;
    write_sscc(f.code, b);
    CHECK(a.str() == b.str());
}

TEST_CASE("expanded round trip is byte exact and canonical") {
    CdcCode mc = multicomponent(9, 3, 2, 2);
    std::ostringstream a;
    write_ssc(mc, a);
    std::istringstream in(a.str());
    CodeFile f = read_codefile(in);
    CHECK_FALSE(f.cell_form);
    CHECK(f.constant_dim);
    CHECK(f.words.size() == 4361);
    std::ostringstream b;
    write_ssc_words(f.words, f.q, f.n, f.metric, f.d, f.meta, b);
    CHECK(a.str() == b.str());
}

TEST_CASE("parsed expanded files can be verified in every mode") {
    CdcCode c = lifted_mrd(6, 3, 2, 2);
    std::ostringstream a;
    write_ssc(c, a);
    std::istringstream in(a.str());
    CodeFile f = read_codefile(in);
    VerifyReport rep = verify_distance(f.code, {});
    CHECK(rep.pass);
    CHECK(rep.min_found == 2);
}

TEST_CASE("corrupted files are rejected or fail verification") {
    CdcCode c = lifted_mrd(6, 3, 2, 2);
    std::ostringstream a;
    write_ssc(c, a);
    std::string text = a.str();

    // a duplicated codeword row makes the rows dependent
    const auto pos = text.find("K 3\n");
    std::string broken = text;
    const auto row_start = pos + 4;
    const auto row_end = text.find('\n', row_start);
    const std::string row = text.substr(row_start, row_end - row_start);
    broken.replace(text.find('\n', row_end + 1) + 1, row.size(), row);
    std::istringstream bad(broken);
    CHECK_THROWS_AS(read_codefile(bad), ParseError);

    // a wrong count line
    std::string miscount = text;
    const auto cpos = miscount.find("count=");
    miscount.replace(cpos, 8, "count=9");
    std::istringstream bad2(miscount);
    CHECK_THROWS_AS(read_codefile(bad2), ParseError);

    // an edited codeword that breaks the distance: duplicate an existing word
    // by swapping one row of another codeword to equal it
    CdcCode pd = pending_dots(8, 2);
    auto words = pd.expand();
    words[1] = words[0];
    std::ostringstream dup;
    write_ssc_words(words, 2, 8, 'I', 2, "", dup);
    std::istringstream in3(dup.str());
    CodeFile f3 = read_codefile(in3);
    VerifyReport rep = verify_distance(f3.code, {});
    CHECK_FALSE(rep.pass);
    CHECK(rep.min_found == 0);
    CHECK(rep.witness.has_value());
}

TEST_CASE("mixed-dimension files round trip through the expanded format") {
    CdcCode pd = pending_dots(8, 2);
    auto [Q, v] = choose_Qv(pd);
    MixedCode mixed = punctured_code(pd, Q, v);
    std::ostringstream a;
    write_ssc_words(mixed.codewords, mixed.q, mixed.n, 'S', 3, mixed.meta, a);
    std::istringstream in(a.str());
    CodeFile f = read_codefile(in);
    CHECK_FALSE(f.constant_dim);
    CHECK(f.words.size() == mixed.codewords.size());
    auto mins = pairwise_mins(f.words);
    CHECK(mins.min_dS >= 3);
}
