// Command-line front end: build, verify, size, bounds, tables, expand and
// registry inspection for the subspace-code library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "ssc/bounds.hpp"
#include "ssc/codefile.hpp"
#include "ssc/constructions.hpp"
#include "ssc/projective.hpp"
#include "ssc/registry.hpp"
#include "ssc/tables.hpp"
#include "ssc/verify.hpp"

using namespace ssc;

namespace {

Registry make_registry(int q) {
    Registry reg = registry_default(q);
    if (const char* path = std::getenv("SSCODE_REGISTRY")) {
        std::ifstream in(path);
        if (!in) throw ParseError(std::string("cannot open SSCODE_REGISTRY file ") + path);
        load_supplemental(reg, in);
    }
    return reg;
}

std::string size_lines(const BigInt& value, int q, long lead_exp) {
    std::ostringstream os;
    os << value << "\n";
    const std::string split = split_form(value, q, lead_exp);
    if (split.find('^') != std::string::npos) os << split << "\n";
    return os.str();
}

struct BuildArgs {
    std::string construction;
    int q = 2, n = 0, k = 0, d = 2, delta = 0;
    std::string base_file;
    std::string out;
    bool expand = false;
};

CdcCode run_build(const BuildArgs& a, const Registry& reg) {
    if (a.construction == "pending-dots") return pending_dots(a.n, a.q);
    if (a.construction == "A") return construction_A(a.n, a.k, a.q);
    if (a.construction == "A-mod") return construction_A_mod(a.n, a.k, a.q);
    if (a.construction == "B") return construction_B(a.n, a.k, a.q, reg);
    if (a.construction == "C4") return construction_C4(a.n, a.q, reg);
    if (a.construction == "C5") return construction_C5(a.n, a.q, reg);
    if (a.construction == "multicomponent") return multicomponent(a.n, a.k, a.d, a.q);
    if (a.construction == "lifted-mrd") return lifted_mrd(a.n, a.k, a.d, a.q);
    if (a.construction == "D") {
        if (a.base_file.empty()) throw BadParams("construction D needs --base <file.sscc>");
        std::ifstream in(a.base_file);
        if (!in) throw ParseError("cannot open base file " + a.base_file);
        CodeFile f = read_codefile(in);
        if (!f.constant_dim) throw BadParams("construction D needs a constant-dimension base");
        return construction_D(f.code, a.delta);
    }
    throw BadParams("unknown construction " + a.construction);
}

BigInt run_size(const std::string& cons, int n, int k, int d, int q, const Registry& reg) {
    if (cons == "pending-dots") return size_pending_dots(n, q);
    if (cons == "A") return size_A_auto(n, k, q);
    if (cons == "A-mod") return size_A_mod(n, k, q);
    if (cons == "B") return size_B(n, k, q, reg.best(q, n - k, 2, k).size);
    if (cons == "C4") return size_C4(n, q, reg.best(q, n - 4, 2, 4).size);
    if (cons == "C5") return size_C5(n, q, reg.best(q, n - 5, 2, 5).size);
    if (cons == "multicomponent") return size_MC(n, k, d, q);
    if (cons == "lifted-mrd")
        return q_pow(q, static_cast<long>(std::max(k, n - k)) * (std::min(k, n - k) - d + 1));
    throw BadParams("unknown construction " + cons);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subspace code construction and verification"};
    app.require_subcommand(1);

    BuildArgs b;
    auto* build = app.add_subcommand("build", "build a code and write it to disk");
    build->add_option("--construction", b.construction)->required();
    build->add_option("--q", b.q);
    build->add_option("--n", b.n);
    build->add_option("--k", b.k);
    build->add_option("--d", b.d);
    build->add_option("--delta", b.delta);
    build->add_option("--base", b.base_file);
    build->add_option("-o,--out", b.out)->required();
    build->add_flag("--expand", b.expand, "write expanded codewords (.ssc)");

    std::string vfile, vmode = "exhaustive";
    std::uint64_t vpairs = 10000000, vseed = 0, vbudget = 100000;
    int vjobs = 0;
    auto* verify = app.add_subcommand("verify", "verify the minimum distance of a code file");
    verify->add_option("file", vfile)->required();
    verify->add_option("--mode", vmode)->check(CLI::IsMember({"exhaustive", "structured", "sampled"}));
    verify->add_option("--pairs", vpairs);
    verify->add_option("--seed", vseed);
    verify->add_option("--budget", vbudget);
    verify->add_option("--jobs", vjobs, "worker count (default: hardware)");

    std::string scons;
    int sn = 0, sk = 0, sd = 2, sq = 2;
    auto* size = app.add_subcommand("size", "evaluate a construction's cardinality formula");
    size->add_option("--construction", scons)->required();
    size->add_option("--q", sq);
    size->add_option("--n", sn)->required();
    size->add_option("--k", sk);
    size->add_option("--d", sd);

    int bn = 0, bk = 0, bd = 2, bq = 2;
    auto* bounds = app.add_subcommand("bounds", "upper bounds for the given parameters");
    bounds->add_option("--q", bq);
    bounds->add_option("--n", bn)->required();
    bounds->add_option("--k", bk)->required();
    bounds->add_option("--d", bd)->required();

    int which = 1, tq = 2;
    auto* tables = app.add_subcommand("tables", "regenerate the comparison tables");
    tables->add_option("--which", which)->required();
    tables->add_option("--q", tq);

    std::string efile, eout;
    auto* expandc = app.add_subcommand("expand", "expand a cell-form file to codewords");
    expandc->add_option("file", efile)->required();
    expandc->add_option("-o,--out", eout)->required();

    int rq = 2, rn = 0, rd = 0, rk = 0;
    bool rlist = false;
    auto* registry = app.add_subcommand("registry", "list or query best-known sizes");
    registry->add_option("--q", rq);
    registry->add_flag("--list", rlist);
    registry->add_option("--n", rn);
    registry->add_option("--d", rd);
    registry->add_option("--k", rk);

    bool cmp = false;
    auto* compare = app.add_subcommand("compare", "run the cardinality comparison sweep");
    compare->add_option("--q", tq);
    compare->add_flag("--machine", cmp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (build->parsed()) {
            Registry reg = make_registry(b.q);
            CdcCode code = run_build(b, reg);
            std::ofstream out(b.out);
            if (!out) throw ParseError("cannot open output file " + b.out);
            const bool want_expanded =
                b.expand ||
                (b.out.size() > 4 && b.out.substr(b.out.size() - 4) == ".ssc");
            if (want_expanded)
                write_ssc(code, out);
            else
                write_sscc(code, out);
            std::cout << "wrote " << b.out << " count=" << code.size() << " ("
                      << split_form(code.size(), code.q,
                                    static_cast<long>(code.n - code.k) * (code.k - code.d + 1))
                      << ")\n";
            return 0;
        }
        if (verify->parsed()) {
            std::ifstream in(vfile);
            if (!in) throw ParseError("cannot open " + vfile);
            CodeFile f = read_codefile(in);
            VerifyOptions opts;
            opts.jobs = vjobs > 0 ? vjobs
                                  : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
            opts.seed = vseed;
            opts.sample_pairs = vpairs;
            opts.max_codewords = vbudget;
            opts.mode = vmode == "structured"  ? VerifyMode::structured
                        : vmode == "sampled"   ? VerifyMode::sampled
                                               : VerifyMode::exhaustive;
            if (!f.constant_dim || f.metric != 'I') {
                // mixed-dimension file: exhaustive only, both metrics reported
                auto mins = pairwise_mins(f.words, opts.jobs);
                const int declared_i = f.metric == 'S' ? (f.d + 1) / 2 : f.d;
                const bool pass = f.metric == 'S' ? mins.min_dS >= f.d : mins.min_dI >= f.d;
                std::cout << "mixed code: min d_I=" << mins.min_dI << " min d_S=" << mins.min_dS
                          << " pairs=" << mins.pairs << " declared(" << f.metric << ")=" << f.d
                          << "\n";
                (void)declared_i;
                return pass ? 0 : 1;
            }
            VerifyReport rep = verify_distance(f.code, opts);
            std::cout << format_report(rep);
            return rep.pass ? 0 : 1;
        }
        if (size->parsed()) {
            Registry reg = make_registry(sq);
            const BigInt v = run_size(scons, sn, sk, sd, sq, reg);
            int kk = scons == "pending-dots" ? 3 : scons == "C4" ? 4 : scons == "C5" ? 5 : sk;
            int dd = scons == "A" || scons == "A-mod" ? kk - 1
                     : scons == "multicomponent" || scons == "lifted-mrd" ? sd
                                                                          : 2;
            std::cout << size_lines(v, sq, static_cast<long>(sn - kk) * (kk - dd + 1));
            return 0;
        }
        if (bounds->parsed()) {
            Registry reg = make_registry(bq);
            std::cout << "johnson " << johnson_bound(bn, bd, bk, bq) << "\n";
            if (bk >= 3 && bd == bk - 1) {
                auto s = steiner_bound(bn, bk, bq, reg);
                std::cout << "steiner " << s.value << " (" << s.estimate << ")\n";
            }
            return 0;
        }
        if (tables->parsed()) {
            Registry reg = make_registry(tq == 3 ? 3 : 2);
            std::cout << table_report(which, reg);
            return 0;
        }
        if (expandc->parsed()) {
            std::ifstream in(efile);
            if (!in) throw ParseError("cannot open " + efile);
            CodeFile f = read_codefile(in);
            if (!f.cell_form) throw BadParams("expand: input is already expanded");
            std::ofstream out(eout);
            if (!out) throw ParseError("cannot open output file " + eout);
            write_ssc(f.code, out);
            std::cout << "wrote " << eout << " count=" << f.code.size() << "\n";
            return 0;
        }
        if (registry->parsed()) {
            Registry reg = make_registry(rq);
            if (rlist) {
                for (const auto& [key, e] : reg.externals()) {
                    auto [q, n, d, k] = key;
                    std::cout << q << " " << n << " " << d << " " << k << " " << e.size << " "
                              << e.provenance << "\n";
                }
                return 0;
            }
            if (rn && rd && rk) {
                auto e = reg.best(rq, rn, rd, rk);
                std::cout << e.size << " " << e.provenance << "\n";
                return 0;
            }
            throw BadParams("registry: use --list or --n --d --k");
        }
        if (compare->parsed()) {
            ComparisonReport rep = comparison_suite(tq);
            std::cout << rep.text();
            std::cout << (rep.all_pass ? "all inequalities hold\n" : "violations found\n");
            return rep.all_pass ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
