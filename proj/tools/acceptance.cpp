// Acceptance harness: one pass/fail line per criterion, exit status is the
// number of failed criteria. argv[1] is the CLI binary used by criterion 9.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "flexcolor/configurations.hpp"
#include "flexcolor/discharging.hpp"
#include "flexcolor/flexibility.hpp"
#include "flexcolor/generate.hpp"
#include "flexcolor/io.hpp"
#include "flexcolor/list_coloring.hpp"
#include "flexcolor/reducibility.hpp"

using namespace flexcolor;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

ListAssignment four_lists(const PlanarGraph& g) {
    return ListAssignment::uniform(g, {1, 2, 3, 4});
}

// ---------- criterion 1: exact constants ----------

Outcome criterion1() {
    auto t0 = Clock::now();
    Outcome out;
    Epsilon e = theoretical_epsilon(4, 31);
    if (e.exponent != 93) out.fail("exponent " + std::to_string(e.exponent));
    if (e.str() != "1/98079714615416886934934209737619787751599303819750539264")
        out.fail("wrong 4^93 digits: " + e.str());
    if (theoretical_epsilon(4, 1).str() != "1/64") out.fail("(4,1) != 1/64");
    long long ms = ms_since(t0);
    if (ms >= 1000) out.fail("took " + std::to_string(ms) + " ms");
    if (out.pass) out.detail = "1/4^93 and 1/64 exact, " + std::to_string(ms) + " ms";
    return out;
}

// ---------- criterion 2: small-subgraph oracle agreement ----------

Outcome criterion2() {
    auto t0 = Clock::now();
    Outcome out;
    int done = 0, mismatches = 0;
    for (std::uint64_t attempt = 0; done < 100 && attempt < 400; ++attempt) {
        int n = 9 + int(attempt % 12);
        PlanarGraph g = gen_triangle_free(n, 1000 + attempt, int(attempt % 3));
        int control = -1;
        for (int v : g.vertices())
            if (g.degree(v) == 4) {
                control = v;
                break;
            }
        if (control < 0) continue;
        auto cfg = find_small(g);
        if (!cfg) continue; // needs a degree-<=2 vertex or adjacent degree-3 pair
        ++done;
        if (!is_reducible(g, cfg->vertex_set, 1, 4).reducible) ++mismatches;
        auto verdict = is_reducible(g, {control}, 1, 4);
        if (verdict.reducible) ++mismatches;
        else if (!verdict.failing_witness || verdict.failing_witness->condition != "FORB")
            ++mismatches;
    }
    if (done < 100) out.fail("only " + std::to_string(done) + " usable graphs");
    if (mismatches) out.fail(std::to_string(mismatches) + " oracle mismatches");
    long long ms = ms_since(t0);
    if (ms >= 60000) out.fail("took " + std::to_string(ms) + " ms");
    if (out.pass)
        out.detail = "100 graphs, 0 mismatches, FORB witness on every degree-4 control, " +
                     std::to_string(ms) + " ms";
    return out;
}

// ---------- criteria 3+4: finder vs oracle, and totality ----------

std::vector<PlanarGraph> random_corpus() {
    std::vector<PlanarGraph> corpus;
    for (std::uint64_t i = 0; i < 208; ++i) {
        int n = 8 + 2 * int(i % 27); // 8..60
        corpus.push_back(gen_triangle_free(n, 2000 + i, int(i % 4)));
    }
    corpus.push_back(fx::wrap_in_square(fx::mainredu_f_gadget()));
    corpus.push_back(fx::wrap_in_square(fx::fiveredu_gadget(true)));
    corpus.push_back(fx::wrap_in_square(fx::fiveredu_gadget(false)));
    corpus.push_back(fx::wrap_in_square(fx::very_light_gadget()));
    corpus.push_back(fx::wrap_in_square(fx::spec4_gadget(false)));
    corpus.push_back(fx::wrap_in_square(fx::spec4_gadget(true)));
    corpus.push_back(fx::cube());
    corpus.push_back(fx::cube5());
    corpus.push_back(fx::pentaprism());
    corpus.push_back(fx::boxgrid(2, 2, 3));
    return corpus;
}

std::pair<Outcome, Outcome> criteria3and4(const std::vector<PlanarGraph>& corpus) {
    auto t0 = Clock::now();
    Outcome c3, c4;
    int checked = 0, skipped_large = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const PlanarGraph& g = corpus[i];
        Configuration cfg;
        try {
            cfg = find_reducible(g);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::theorem_violation)
                c4.fail("TheoremViolation on corpus graph " + std::to_string(i));
            else
                c3.fail(std::string("finder error on graph ") + std::to_string(i) + ": " +
                        e.what());
            continue;
        }
        if (int(cfg.vertex_set.size()) > 12) {
            ++skipped_large;
            continue;
        }
        ++checked;
        if (!is_reducible(g, cfg.vertex_set, 1, 4, 12).reducible)
            c3.fail("unconfirmed configuration on graph " + std::to_string(i));
    }
    long long ms = ms_since(t0);
    if (ms >= 1800000) c3.fail("took " + std::to_string(ms) + " ms");
    if (c3.pass)
        c3.detail = std::to_string(corpus.size()) + " fixtures, " + std::to_string(checked) +
                    " configurations confirmed, " + std::to_string(skipped_large) +
                    " above the size cap, " + std::to_string(ms) + " ms";
    if (c4.pass)
        c4.detail = "finder total on all " + std::to_string(corpus.size()) + " fixtures";
    return {c3, c4};
}

// ---------- criterion 5: discharging ledger ----------

PlanarGraph with_any_quad_outer(const PlanarGraph& base) {
    for (const Face& f : base.faces())
        if (f.length() == 4 && f.is_cycle()) return base.with_outer_face(f.id);
    return base;
}

Outcome criterion5() {
    auto t0 = Clock::now();
    Outcome out;
    std::vector<std::pair<std::string, PlanarGraph>> disks;
    disks.emplace_back("pentaprism", fx::pentaprism());
    disks.emplace_back("cube", with_any_quad_outer(fx::cube()));
    disks.emplace_back("cube5", fx::cube5());
    disks.emplace_back("triple_ring", fx::triple_ring());
    for (auto [a, b, c] : {std::array{2, 2, 3}, {2, 3, 3}, {3, 3, 3}})
        disks.emplace_back("boxgrid" + std::to_string(a) + std::to_string(b) + std::to_string(c),
                           with_any_quad_outer(fx::boxgrid(a, b, c)));
    disks.emplace_back("wrap_mainredu", fx::wrap_in_square(fx::mainredu_f_gadget()));
    disks.emplace_back("wrap_fiveredu", fx::wrap_in_square(fx::fiveredu_gadget(true)));
    disks.emplace_back("wrap_verylight", fx::wrap_in_square(fx::very_light_gadget()));
    disks.emplace_back("wrap_spec4", fx::wrap_in_square(fx::spec4_gadget(true)));

    int audits_with_diagnostics = 0;
    for (const auto& [name, g] : disks) {
        int clen = g.outer().length();
        Rational expect(2 * clen - 12, 3);
        ChargeMap ch0 = initial_charges(g);
        ChargeMap ch1 = apply_r0_r1_r2(g, ch0);
        DischargeReport rep = verify(g);
        if (!(ch0.total() == expect) || !(ch1.total() == expect) || !(rep.total == expect)) {
            out.fail(name + ": totals drift from -4+(2/3)|C|");
            continue;
        }
        bool diagnostics = false;
        for (const FaceCase& fc : rep.face_cases) {
            if (fc.cls.n_r >= 1 && fc.ch2.negative())
                out.fail(name + ": rule R3 left a rich 4-face negative");
            if (fc.ch2.negative() && fc.cls.n_r != 0)
                out.fail(name + ": negative 4-face despite rich vertices");
            if (fc.bucket == FaceBucket::out_of_bucket || fc.ch2.negative()) diagnostics = true;
        }
        // The bucket audit only promises clean output when no reducible
        // configuration precedes it; the finder is total, so verify that on
        // every instance with leftover diagnostics it does locate one.
        bool located = true;
        try {
            located = !find_reducible(g).vertex_set.empty();
        } catch (const Error&) {
            located = false;
        }
        if (!located) {
            if (diagnostics) out.fail(name + ": out-of-bucket faces but no configuration");
        } else if (diagnostics) {
            ++audits_with_diagnostics;
        }
    }

    // Strict transfer rule on the one fixture whose quads all carry rich
    // vertices: every 4-face must end exactly balanced.
    PlanarGraph pp = fx::pentaprism();
    try {
        ChargeMap ch2 = apply_r3(pp, apply_r0_r1_r2(pp, initial_charges(pp)),
                                 classify_faces(pp));
        for (const Face& f : pp.faces()) {
            if (f.length() != 4 || !f.is_cycle() || pp.outer_face() == f.id) continue;
            if (ch2.face_charge.at(f.id).negative())
                out.fail("pentaprism: negative 4-face after strict R3");
        }
    } catch (const Error& e) {
        out.fail(std::string("strict R3 failed on pentaprism: ") + e.what());
    }

    long long ms = ms_since(t0);
    if (ms >= 300000) out.fail("took " + std::to_string(ms) + " ms");
    if (out.pass)
        out.detail = std::to_string(disks.size()) + " disks conserve charge, " +
                     std::to_string(audits_with_diagnostics) +
                     " flag configurations the finder confirms, " + std::to_string(ms) + " ms";
    return out;
}

// ---------- criterion 6: sampler soundness ----------

Outcome criterion6() {
    auto t0 = Clock::now();
    Outcome out;
    std::vector<PlanarGraph> pool;
    pool.push_back(fx::path_graph(1));
    pool.push_back(fx::cycle_graph(4));
    pool.push_back(fx::cube());
    pool.push_back(fx::two_squares());
    pool.push_back(fx::grid3());
    pool.push_back(fx::pentaprism());
    pool.push_back(fx::cube5());
    pool.push_back(fx::triple_ring());
    pool.push_back(fx::wrap_in_square(fx::fiveredu_gadget(true)));
    pool.push_back(fx::wrap_in_square(fx::spec4_gadget(false)));
    for (std::uint64_t i = 0; i < 12; ++i)
        pool.push_back(gen_triangle_free(12 + 3 * int(i % 7), 3000 + i, int(i % 4)));

    std::vector<PlanarGraph> fixtures;
    for (auto& g : pool)
        if (g.vertex_count() <= 30 && int(fixtures.size()) < 20) fixtures.push_back(std::move(g));
    if (fixtures.size() != 20) {
        out.fail("fixture pool produced " + std::to_string(fixtures.size()));
        return out;
    }

    bool saw_single = false;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const PlanarGraph& g = fixtures[i];
        ListAssignment L = four_lists(g);
        SampleStats st = estimate_probabilities(g, L, 10000, 4000 + i);
        if (st.trials != 10000) out.fail("trial count off");
        for (int v : g.vertices()) {
            long long row = 0;
            for (int c : L.at(v)) {
                auto it = st.counts.find({v, c});
                long long hits = it == st.counts.end() ? 0 : it->second;
                if (hits < 1)
                    out.fail("fixture " + std::to_string(i) + ": pair (" + std::to_string(v) +
                             "," + std::to_string(c) + ") never sampled");
                row += hits;
            }
            if (row != 10000) out.fail("fixture " + std::to_string(i) + ": row sum off");
        }
        for (std::uint64_t t = 0; t < 100; ++t) {
            Coloring phi = sample_coloring(g, L, 5000 + t);
            if (!phi.valid_for(g, L)) out.fail("improper sample on fixture " + std::to_string(i));
        }
        if (g.vertex_count() == 1) {
            saw_single = true;
            if (st.min_empirical_prob < Rational(22, 100) ||
                Rational(28, 100) < st.min_empirical_prob)
                out.fail("single-vertex min " + st.min_empirical_prob.str() +
                         " outside [22/100, 28/100]");
        }
    }
    if (!saw_single) out.fail("no single-vertex fixture in the pool");
    long long ms = ms_since(t0);
    if (ms >= 600000) out.fail("took " + std::to_string(ms) + " ms");
    if (out.pass)
        out.detail = "20 fixtures, 10^4 samples each, all proper, every pair hit, " +
                     std::to_string(ms) + " ms";
    return out;
}

// ---------- criterion 7: counting bound ----------

unsigned long long brute_count(const PlanarGraph& g, const ListAssignment& L) {
    const std::vector<int>& vs = g.vertices();
    int maxid = 0;
    for (int v : vs) maxid = std::max(maxid, v);
    std::vector<int> col(maxid + 1, -1);
    std::function<unsigned long long(std::size_t)> rec = [&](std::size_t i) -> unsigned long long {
        if (i == vs.size()) return 1;
        int v = vs[i];
        unsigned long long total = 0;
        for (int c : L.at(v)) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (col[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            col[v] = c;
            total += rec(i + 1);
            col[v] = -1;
        }
        return total;
    };
    return rec(0);
}

Outcome criterion7() {
    auto t0 = Clock::now();
    Outcome out;
    std::vector<PlanarGraph> fixtures;
    fixtures.push_back(fx::path_graph(1));
    fixtures.push_back(fx::path_graph(4));
    fixtures.push_back(fx::cycle_graph(4));
    fixtures.push_back(fx::two_squares());
    fixtures.push_back(fx::cube());
    fixtures.push_back(fx::grid3());
    fixtures.push_back(gen_quadrangulation(10, 21));
    fixtures.push_back(gen_quadrangulation(12, 22));
    fixtures.push_back(gen_quadrangulation(14, 23));
    fixtures.push_back(gen_quadrangulation(16, 24));
    fixtures.push_back(gen_triangle_free(12, 25, 2));
    fixtures.push_back(gen_triangle_free(14, 26, 3));

    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const PlanarGraph& g = fixtures[i];
        if (g.vertex_count() > 16) {
            out.fail("fixture " + std::to_string(i) + " too large");
            continue;
        }
        ListAssignment L = four_lists(g);
        CountingBound cb = check_counting_bound(g, L, 31);
        if (!cb.holds) out.fail("bound fails on fixture " + std::to_string(i));
        if (cb.count != brute_count(g, L))
            out.fail("count mismatch on fixture " + std::to_string(i));
    }
    // Count agreement with restricted lists as well.
    PlanarGraph c4 = fx::cycle_graph(4);
    ListAssignment L2 = ListAssignment::uniform(c4, {1, 2});
    if (check_counting_bound(c4, L2, 31).count != brute_count(c4, L2))
        out.fail("2-list count mismatch on the 4-cycle");
    PlanarGraph cb8 = fx::cube();
    ListAssignment mixed;
    for (int v : cb8.vertices()) {
        std::vector<int> cs;
        for (int j = 0; j <= v % 3 + 1; ++j) cs.push_back((v + j) % 5 + 1);
        mixed.set(v, cs);
    }
    if (check_counting_bound(cb8, mixed, 31).count != brute_count(cb8, mixed))
        out.fail("mixed-list count mismatch on the cube");

    long long ms = ms_since(t0);
    if (ms >= 300000) out.fail("took " + std::to_string(ms) + " ms");
    if (out.pass)
        out.detail = std::to_string(fixtures.size()) +
                     " fixtures hold the 2^(n/31) bound and match brute force, " +
                     std::to_string(ms) + " ms";
    return out;
}

// ---------- criterion 8: kernel equivalence ----------

Outcome criterion8() {
    auto t0 = Clock::now();
    Outcome out;
    std::vector<PlanarGraph> fixtures;
    fixtures.push_back(fx::path_graph(1));
    fixtures.push_back(fx::path_graph(3));
    fixtures.push_back(fx::cycle_graph(4));
    fixtures.push_back(fx::star_graph(4));
    fixtures.push_back(fx::two_squares());
    fixtures.push_back(fx::cube());
    fixtures.push_back(fx::grid3());
    fixtures.push_back(gen_quadrangulation(10, 31));
    fixtures.push_back(gen_quadrangulation(12, 32));
    fixtures.push_back(gen_triangle_free(11, 33, 2));
    fixtures.push_back(gen_triangle_free(12, 34, 1));

    int pairs = 0;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const PlanarGraph& g = fixtures[i];
        if (g.vertex_count() > 12) {
            out.fail("fixture " + std::to_string(i) + " too large");
            continue;
        }
        std::vector<ListAssignment> lists;
        lists.push_back(four_lists(g));
        lists.push_back(ListAssignment::uniform(g, {1, 2, 3}));
        lists.push_back(ListAssignment::uniform(g, {1, 2}));
        ListAssignment mixed;
        for (int v : g.vertices()) {
            std::vector<int> cs;
            for (int j = 0; j <= v % 3 + 1; ++j) cs.push_back((v + j) % 4 + 1);
            mixed.set(v, cs);
        }
        lists.push_back(mixed);

        for (const ListAssignment& L : lists) {
            ++pairs;
            KernelResult kr = reduce_kernel(g, L);
            bool orig = solve(g, L).has_value();
            bool kern = kr.kernel.vertex_count() == 0 || solve(kr.kernel, L).has_value();
            if (orig != kern)
                out.fail("kernel changes colorability on fixture " + std::to_string(i));
            for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
                KernelResult ks = reduce_kernel_shuffled(g, L, seed);
                if (ks.kernel.vertices() != kr.kernel.vertices())
                    out.fail("shuffled kernel differs on fixture " + std::to_string(i));
            }
        }
    }
    long long ms = ms_since(t0);
    if (ms >= 300000) out.fail("took " + std::to_string(ms) + " ms");
    if (out.pass)
        out.detail = std::to_string(pairs) + " graph/list pairs, kernels order-independent, " +
                     std::to_string(ms) + " ms";
    return out;
}

// ---------- criterion 9: CLI reproducibility ----------

bool run_cmd(const std::string& cmd, std::string& out, int& code) {
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return false;
    char buf[4096];
    std::size_t k;
    out.clear();
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
    int st = pclose(p);
    if (!WIFEXITED(st)) return false;
    code = WEXITSTATUS(st);
    return true;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
    return bool(f);
}

Outcome criterion9(const char* cli) {
    Outcome out;
    if (!cli) {
        out.fail("CLI path not supplied");
        return out;
    }
    std::string q = std::string("\"") + cli + "\"";

    PlanarGraph g = gen_triangle_free(18, 99, 2);
    if (!write_file("acc_graph.txt", format_graph(g)) ||
        !write_file("acc_lists.txt", format_lists(four_lists(g))) ||
        !write_file("acc_req.txt", "r 0 1\nr 5 2\n") ||
        !write_file("acc_wreq.txt", "w 0 1 3/2\nw 5 2 1\nw 7 3 0.5\n") ||
        !write_file("acc_cube.txt", format_graph(fx::cube())) ||
        !write_file("acc_pent.txt", format_graph(fx::pentaprism()))) {
        out.fail("cannot write fixture files");
        return out;
    }

    std::vector<std::string> cmds = {
        q + " flex acc_graph.txt acc_lists.txt acc_req.txt --trials 400 --seed 123",
        q + " flex acc_graph.txt acc_lists.txt acc_wreq.txt --trials 400 --seed 123",
        q + " estimate acc_graph.txt acc_lists.txt --trials 300 --seed 9",
        q + " gen 20 --seed 5 --subdivisions 2",
        q + " discharge acc_pent.txt",
        q + " find-config acc_cube.txt",
    };
    for (const std::string& c : cmds) {
        std::string a, b;
        int ca = -1, cb = -1;
        if (!run_cmd(c, a, ca) || !run_cmd(c, b, cb)) {
            out.fail("cannot run: " + c);
            continue;
        }
        if (a != b || ca != cb) out.fail("output differs across runs: " + c);
        if (a.empty() || ca != 0) out.fail("unexpected result from: " + c);
    }

    std::string gen1, gen2;
    int code = -1;
    if (run_cmd(q + " gen 20 --seed 5 --subdivisions 2", gen1, code) && code == 0) {
        gen2 = format_graph(parse_graph(gen1));
        if (gen1 != gen2) out.fail("gen output does not round-trip");
    } else {
        out.fail("gen command failed");
    }

    std::string cfg;
    if (run_cmd(q + " find-config acc_cube.txt", cfg, code) && code == 0) {
        if (cfg.rfind("config small-33 vertices:", 0) != 0)
            out.fail("cube finder line: " + cfg.substr(0, cfg.find('\n')));
    } else {
        out.fail("find-config command failed");
    }

    if (out.pass) out.detail = "6 commands byte-identical across reruns, gen round-trips";
    return out;
}

void report(int idx, const std::string& name, const Outcome& o, int& failures) {
    if (!o.pass) ++failures;
    std::cout << "criterion " << idx << " (" << name << "): " << (o.pass ? "pass" : "FAIL")
              << " - " << o.detail << std::endl;
}

} // namespace

int main(int argc, char** argv) {
    int failures = 0;
    report(1, "exact constants", criterion1(), failures);
    report(2, "small-subgraph oracle agreement", criterion2(), failures);
    auto corpus = random_corpus();
    auto [c3, c4] = criteria3and4(corpus);
    report(3, "finder cross-validation", c3, failures);
    report(4, "finder totality", c4, failures);
    report(5, "discharging ledger", criterion5(), failures);
    report(6, "sampler soundness", criterion6(), failures);
    report(7, "counting bound", criterion7(), failures);
    report(8, "kernel equivalence", criterion8(), failures);
    report(9, "CLI reproducibility", criterion9(argc > 1 ? argv[1] : nullptr), failures);
    if (failures)
        std::cout << failures << " criteria failed\n";
    else
        std::cout << "all criteria passed\n";
    return failures;
}
