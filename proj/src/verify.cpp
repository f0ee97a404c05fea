#include "ssc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <thread>

namespace ssc {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d4949fb21e495ull;
    return z ^ (z >> 31);
}

std::uint64_t bounded(std::uint64_t& state, std::uint64_t n) {
    // rejection below the largest multiple of n; deterministic across platforms
    const std::uint64_t limit = n * ((~0ull) / n);
    for (;;) {
        const std::uint64_t x = splitmix64(state);
        if (x < limit) return x % n;
    }
}

struct PackedWords {
    bool packed = false;
    int k = 0, n = 0;
    std::vector<PackedGF2> p;
    std::vector<MatGF> m;
    size_t size() const { return packed ? p.size() : m.size(); }
};

PackedWords pack_words(const std::vector<SubspaceRep>& words, int q, int n) {
    PackedWords pw;
    pw.packed = (q == 2 && n <= 64);
    pw.n = n;
    for (const auto& w : words) {
        if (pw.packed)
            pw.p.push_back(pack_gf2(w.mat));
        else
            pw.m.push_back(w.mat);
    }
    return pw;
}

// injection distance between equal-dimension packed words
int pair_dI(const PackedWords& pw, size_t i, size_t j, int k) {
    const int r = pw.packed ? packed_stack_rank(pw.p[i], pw.p[j])
                            : stack_rank(pw.m[i], pw.m[j]);
    return r - k;
}

// deterministic parallel scan over the triangular pair space
template <typename Fn>
void parallel_rows(size_t count, int jobs, Fn per_row_worker) {
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        per_row_worker(0, 1);
        return;
    }
    std::vector<std::thread> ts;
    for (int w = 0; w < jobs; ++w) ts.emplace_back(per_row_worker, w, jobs);
    for (auto& t : ts) t.join();
}

struct PartialMin {
    int min = INT32_MAX;
    size_t wi = 0, wj = 0;
    void feed(int d, size_t i, size_t j) {
        if (d < min || (d == min && std::make_pair(i, j) < std::make_pair(wi, wj))) {
            min = d;
            wi = i;
            wj = j;
        }
    }
    void merge(const PartialMin& o) {
        if (o.min < min || (o.min == min && std::make_pair(o.wi, o.wj) < std::make_pair(wi, wj)))
            *this = o;
    }
};

VerifyReport verify_exhaustive(const CdcCode& code, const VerifyOptions& opts) {
    VerifyReport rep;
    rep.mode = VerifyMode::exhaustive;
    rep.declared_d = code.d;
    rep.jobs = std::max(1, opts.jobs);
    const BigInt total = code.size();
    if (total > BigInt(opts.max_codewords))
        throw TooLarge("verify exhaustive: code larger than the codeword budget");
    std::vector<SubspaceRep> words = code.expand(opts.max_codewords);
    PackedWords pw = pack_words(words, code.q, code.n);
    const size_t m = words.size();

    std::vector<PartialMin> parts(rep.jobs);
    parallel_rows(m, rep.jobs, [&](int w, int stride) {
        PartialMin local;
        for (size_t i = w; i < m; i += stride)
            for (size_t j = i + 1; j < m; ++j) local.feed(pair_dI(pw, i, j, code.k), i, j);
        parts[w] = local;
    });
    PartialMin best;
    for (const auto& p : parts) best.merge(p);

    rep.pairs_checked = BigInt(m) * BigInt(m - 1) / 2;
    rep.min_found = m < 2 ? std::min(code.k, code.n - code.k) + 1 : best.min;
    rep.exact = true;
    rep.pass = rep.min_found >= code.d;
    if (!rep.pass)
        rep.witness = Witness{"codewords #" + std::to_string(best.wi) + " and #" +
                                  std::to_string(best.wj),
                              best.min};
    return rep;
}

MatGF block_matrix(const Cell& cell, const FieldSpec& f) {
    const auto& b = *cell.block;
    MatGF m(b.m1, b.l1, f);
    size_t idx = 0;
    for (int j = 0; j < b.m1; ++j) {
        const int len = b.row_lens[j];
        for (int t = 0; t < len; ++t, ++idx)
            m.at(j, b.l1 - len + t) = cell.code.offset[b.dot_idx[idx]];
    }
    return m;
}

// Auto-detected shared quasi-pending block: per row, the leading dots on
// which every basis vector vanishes; the widest left-column block whose
// ambient columns match between the two cells. Returns the certified bound
// d_H/2 + rank(B_a - B_b) when the block-alignment hypotheses hold.
std::optional<int> detect_qpb_bound(const Cell& a, const Cell& b, const FieldSpec& f) {
    const auto pa = a.v.one_positions(), pb = b.v.one_positions();
    int shared = 0;
    while (shared < static_cast<int>(std::min(pa.size(), pb.size())) &&
           pa[shared] == pb[shared])
        ++shared;
    if (shared == 0) return std::nullopt;

    auto leading_free = [&](const Cell& c) {
        std::vector<int> z;
        for (int j = 0; j < c.code.diagram.m(); ++j) {
            const int start = c.code.diagram.row_start(j);
            int t = 0;
            for (; t < c.code.diagram.row_lengths[j]; ++t) {
                bool all_zero = true;
                for (const auto& bv : c.code.basis)
                    if (bv[start + t]) {
                        all_zero = false;
                        break;
                    }
                if (!all_zero) break;
            }
            z.push_back(t);
        }
        return z;
    };
    const auto za = leading_free(a), zb = leading_free(b);

    auto widths = [](const FerrersDiagram& d, int l1) {
        std::vector<int> w;
        for (int j = 0; j < d.m(); ++j) w.push_back(std::max(0, d.row_lengths[j] - (d.ell() - l1)));
        return w;
    };
    auto max_l1 = [&](const Cell& c, const std::vector<int>& z) {
        int best = 0;
        for (int l1 = 1; l1 < c.code.diagram.ell(); ++l1) {
            const auto w = widths(c.code.diagram, l1);
            bool ok = true;
            for (int j = 0; j < c.code.diagram.m(); ++j) ok &= (w[j] <= z[j]);
            if (ok) best = l1;
        }
        return best;
    };

    for (int l1 = std::min(max_l1(a, za), max_l1(b, zb)); l1 >= 1; --l1) {
        const auto wa = widths(a.code.diagram, l1), wb = widths(b.code.diagram, l1);
        int m1 = 0;
        while (m1 < static_cast<int>(wa.size()) && wa[m1] > 0) ++m1;
        if (m1 == 0 || m1 > shared) continue;
        bool ok = true;
        for (size_t j = m1; j < wa.size(); ++j) ok &= (wa[j] == 0);
        if (static_cast<int>(wb.size()) < m1) continue;
        for (int j = 0; j < m1 && ok; ++j) ok &= (wa[j] == wb[j]);
        for (size_t j = m1; j < wb.size() && ok; ++j) ok &= (wb[j] == 0);
        if (!ok) continue;
        // quasi-pending shape on both sides (missing rows count as empty)
        for (const Cell* c : {&a, &b}) {
            const auto& dia = c->code.diagram;
            const int below = m1 < dia.m() ? dia.row_lengths[m1] : 0;
            const int at = m1 - 1 < dia.m() ? dia.row_lengths[m1 - 1] : 0;
            ok &= below < at && below <= dia.ell() - l1;
        }
        if (!ok) continue;
        // ambient columns of the block dots must coincide
        for (int j = 0; j < m1 && ok; ++j) {
            const auto ca = free_columns_of_row(a.v, j);
            const auto cb = free_columns_of_row(b.v, j);
            for (int t = 0; t < wa[j] && ok; ++t)
                ok &= t < static_cast<int>(ca.size()) && t < static_cast<int>(cb.size()) &&
                      ca[t] == cb[t];
        }
        if (!ok) continue;
        MatGF ma(m1, l1, f), mb(m1, l1, f);
        for (int j = 0; j < m1; ++j) {
            for (int t = 0; t < wa[j]; ++t) {
                ma.at(j, l1 - wa[j] + t) = a.code.offset[a.code.diagram.row_start(j) + t];
                mb.at(j, l1 - wa[j] + t) = b.code.offset[b.code.diagram.row_start(j) + t];
            }
        }
        return hamming_distance(a.v, b.v) / 2 + rank_of(sub(ma, mb));
    }
    return std::nullopt;
}

bool quasi_pending_applicable(const CdcCode& code, const Cell& a, const Cell& b) {
    if (!a.block || !b.block) return false;
    if (!a.block->same_position(*b.block)) return false;
    // shared leading pivots
    const auto pa = a.v.one_positions(), pb = b.v.one_positions();
    const int h = a.block->shared_pivots;
    if (static_cast<int>(pa.size()) < h || static_cast<int>(pb.size()) < h) return false;
    for (int i = 0; i < h; ++i)
        if (pa[i] != pb[i]) return false;
    // block rows must be the first rows, and rows below must stay clear of the
    // block columns of the actual diagrams
    for (const Cell* c : {&a, &b}) {
        const auto& dia = c->code.diagram;
        const auto& blk = *c->block;
        if (blk.m1 >= dia.m()) continue;
        if (dia.row_lengths[blk.m1] > dia.ell() - blk.l1) return false;
        if (dia.row_lengths[blk.m1] >= dia.row_lengths[blk.m1 - 1]) return false;
    }
    (void)code;
    return true;
}

// exact minimum injection distance between two distinct cells
int cross_cell_min(const CdcCode& code, const Cell& a, const Cell& b, std::uint64_t budget,
                   std::uint64_t& pairs_out) {
    const std::uint64_t pairs = a.code.size() * b.code.size();
    if (pairs > budget) throw CertificateGap("fallback cell pair exceeds the budget");
    pairs_out += pairs;
    int best = INT32_MAX;
    if (a.v == b.v) {
        // same identifying vector: injection distance is the rank of the
        // difference of the diagram fillings
        a.code.for_each_codeword([&](const std::vector<Symbol>& va) {
            b.code.for_each_codeword([&](const std::vector<Symbol>& vb) {
                std::vector<Symbol> diff(va.size());
                for (size_t t = 0; t < va.size(); ++t)
                    diff[t] = code.field->sub(va[t], vb[t]);
                best = std::min(best, values_rank(a.code.diagram, diff, *code.field));
            });
        });
        return best;
    }
    std::vector<SubspaceRep> lifted_b;
    b.code.for_each_codeword(
        [&](const std::vector<Symbol>& vb) { lifted_b.push_back(lift(b.v, vb, *code.field)); });
    a.code.for_each_codeword([&](const std::vector<Symbol>& va) {
        SubspaceRep xa = lift(a.v, va, *code.field);
        for (const auto& xb : lifted_b) best = std::min(best, d_I(xa, xb));
    });
    return best;
}

VerifyReport verify_structured(const CdcCode& code, const VerifyOptions& opts) {
    VerifyReport rep;
    rep.mode = VerifyMode::structured;
    rep.declared_d = code.d;
    rep.jobs = 1;
    int certified = std::min(code.k, code.n - code.k) + 1;
    auto feed = [&](int bound, const std::string& where) {
        if (bound < certified) certified = bound;
        if (bound < code.d && !rep.witness) rep.witness = Witness{where, bound};
    };

    const size_t nc = code.cells.size();
    for (size_t i = 0; i < nc; ++i) {
        const Cell& ci = code.cells[i];
        if (ci.code.rho() > 0) {
            const int d_cell = min_rank_distance(ci.code, opts.span_budget);
            ++rep.rules.same_cell;
            rep.pairs_checked += q_pow(code.q, ci.code.rho()) - 1;
            feed(d_cell, "within cell #" + std::to_string(i));
        }
    }
    for (size_t i = 0; i < nc; ++i) {
        for (size_t j = i + 1; j < nc; ++j) {
            const Cell& ci = code.cells[i];
            const Cell& cj = code.cells[j];
            const std::string where =
                "cells #" + std::to_string(i) + " x #" + std::to_string(j);
            if (!(ci.v == cj.v)) {
                const int da = asym_distance(ci.v, cj.v);
                if (da >= code.d) {
                    ++rep.rules.asym;
                    feed(da, where);
                    continue;
                }
                std::optional<int> qpb;
                if (quasi_pending_applicable(code, ci, cj)) {
                    const MatGF diff =
                        sub(block_matrix(ci, *code.field), block_matrix(cj, *code.field));
                    qpb = hamming_distance(ci.v, cj.v) / 2 + rank_of(diff);
                }
                if (!qpb || *qpb < code.d) {
                    if (auto detected = detect_qpb_bound(ci, cj, *code.field))
                        if (!qpb || *detected > *qpb) qpb = detected;
                }
                if (qpb && *qpb >= code.d) {
                    ++rep.rules.qpb;
                    feed(*qpb, where);
                    continue;
                }
            }
            ++rep.rules.fallback_cells;
            std::uint64_t pairs = 0;
            const int exact = cross_cell_min(code, ci, cj, opts.fallback_budget, pairs);
            rep.rules.fallback_pairs += pairs;
            rep.pairs_checked += pairs;
            if (exact < code.d) ++rep.rules.fallback_failing;
            feed(exact, where + " (fallback)");
        }
    }
    rep.min_found = certified;
    rep.exact = false;
    rep.pass = certified >= code.d;
    return rep;
}

VerifyReport verify_sampled(const CdcCode& code, const VerifyOptions& opts) {
    VerifyReport rep;
    rep.mode = VerifyMode::sampled;
    rep.declared_d = code.d;
    rep.seed = opts.seed;
    rep.jobs = std::max(1, opts.jobs);
    const BigInt total_big = code.size();
    if (total_big > BigInt(1ull << 62)) throw TooLarge("verify sampled: code too large to index");
    const std::uint64_t total = static_cast<std::uint64_t>(total_big);
    if (total < 2) throw BadParams("verify sampled: need at least two codewords");

    std::vector<std::uint64_t> cum{0};
    for (const auto& c : code.cells) cum.push_back(cum.back() + c.code.size());
    auto word_at = [&](std::uint64_t idx) {
        const size_t cell =
            std::upper_bound(cum.begin(), cum.end(), idx) - cum.begin() - 1;
        return lift(code.cells[cell].v, code.cells[cell].code.codeword(idx - cum[cell]),
                    *code.field);
    };

    // each sample draws from its own hashed stream, so the result does not
    // depend on the worker count or the chunking
    auto sample_pair = [&](std::uint64_t t, std::uint64_t& i, std::uint64_t& j) {
        std::uint64_t state = opts.seed ^ (0x9e3779b97f4a7c15ull * (t + 1));
        i = bounded(state, total);
        j = bounded(state, total);
        while (j == i) j = bounded(state, total);
    };
    std::vector<PartialMin> parts(rep.jobs);
    parallel_rows(static_cast<size_t>(opts.sample_pairs), rep.jobs, [&](int w, int stride) {
        PartialMin local;
        for (std::uint64_t t = w; t < opts.sample_pairs; t += stride) {
            std::uint64_t i, j;
            sample_pair(t, i, j);
            SubspaceRep a = word_at(i), b = word_at(j);
            local.feed(d_I(a, b), static_cast<size_t>(std::min(i, j)),
                       static_cast<size_t>(std::max(i, j)));
        }
        parts[w] = local;
    });
    PartialMin best;
    for (int w = 0; w < rep.jobs; ++w) best.merge(parts[w]);
    rep.pairs_checked = opts.sample_pairs;
    rep.min_found = best.min;
    rep.exact = false;
    rep.pass = best.min >= code.d;
    if (!rep.pass)
        rep.witness = Witness{"sampled codewords #" + std::to_string(best.wi) + " and #" +
                                  std::to_string(best.wj),
                              best.min};
    return rep;
}

}  // namespace

VerifyReport verify_distance(const CdcCode& code, const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    switch (opts.mode) {
        case VerifyMode::exhaustive: rep = verify_exhaustive(code, opts); break;
        case VerifyMode::structured: rep = verify_structured(code, opts); break;
        case VerifyMode::sampled: rep = verify_sampled(code, opts); break;
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string format_report(const VerifyReport& r) {
    std::ostringstream os;
    const char* mode = r.mode == VerifyMode::exhaustive ? "exhaustive"
                       : r.mode == VerifyMode::structured ? "structured"
                                                          : "sampled";
    os << "mode=" << mode << " declared_d=" << r.declared_d << " min=" << r.min_found
       << (r.exact ? " (exact)" : " (certified bound)") << " pairs=" << r.pairs_checked
       << " pass=" << (r.pass ? "yes" : "no") << "\n";
    if (r.mode == VerifyMode::structured) {
        os << "rules: same_cell=" << r.rules.same_cell << " asym=" << r.rules.asym
           << " quasi_pending=" << r.rules.qpb << " fallback_cells=" << r.rules.fallback_cells
           << " fallback_pairs=" << r.rules.fallback_pairs
           << " fallback_failing=" << r.rules.fallback_failing << "\n";
    }
    if (r.mode == VerifyMode::sampled) os << "seed=" << r.seed << "\n";
    if (r.witness) os << "witness: " << r.witness->where << " distance=" << r.witness->dist << "\n";
    os << "wall_seconds=" << r.wall_seconds << " jobs=" << r.jobs << "\n";
    return os.str();
}

PairwiseMins pairwise_mins(const std::vector<SubspaceRep>& words, int jobs) {
    PairwiseMins out;
    const size_t m = words.size();
    if (m < 2) throw BadParams("pairwise_mins: need at least two subspaces");
    out.pairs = BigInt(m) * BigInt(m - 1) / 2;
    int min_di = INT32_MAX, min_ds = INT32_MAX;
    bool identity_ok = true;
    jobs = std::max(1, jobs);
    std::vector<int> mins_i(jobs, INT32_MAX), mins_s(jobs, INT32_MAX);
    std::vector<char> id_ok(jobs, 1);
    parallel_rows(m, jobs, [&](int w, int stride) {
        for (size_t i = w; i < m; i += stride) {
            for (size_t j = i + 1; j < m; ++j) {
                const int di = d_I(words[i], words[j]);
                const int ds = d_S(words[i], words[j]);
                mins_i[w] = std::min(mins_i[w], di);
                mins_s[w] = std::min(mins_s[w], ds);
                if (words[i].k != words[j].k && ds % 2 == 1 && di != (ds + 1) / 2)
                    id_ok[w] = 0;
            }
        }
    });
    for (int w = 0; w < jobs; ++w) {
        min_di = std::min(min_di, mins_i[w]);
        min_ds = std::min(min_ds, mins_s[w]);
        identity_ok &= (id_ok[w] != 0);
    }
    out.min_dI = min_di;
    out.min_dS = min_ds;
    out.mixed_identity_ok = identity_ok;
    return out;
}

}  // namespace ssc
