// Acceptance run: one pass/fail line per criterion, exact arithmetic throughout.

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "sy/gauss.hpp"
#include "sy/morphisms.hpp"
#include "sy/presentation.hpp"
#include "sy/properties.hpp"

using namespace sy;

namespace {

struct Config {
    const char* seq;
    const char* mu;
};

const std::vector<Config> kMatrix = {
    {"01", "2"},       {"01", "1,1"},     {"10", "2"},       {"10", "1,1"},         {"001", "3"},
    {"001", "2,1"},    {"001", "1,2"},    {"001", "1,1,1"},  {"010", "3"},          {"010", "2,1"},
    {"010", "1,2"},    {"010", "1,1,1"},  {"100", "3"},      {"100", "2,1"},        {"100", "1,2"},
    {"100", "1,1,1"},  {"0101", "1,2,1"}, {"0101", "2,2"},   {"0101", "1,1,1,1"},   {"0110", "1,2,1"},
    {"0110", "2,2"},   {"0110", "1,1,1,1"}, {"0011", "1,2,1"}, {"0011", "2,2"},     {"0011", "1,1,1,1"},
};

std::vector<std::string> sequences() {
    std::vector<std::string> out;
    for (const Config& c : kMatrix)
        if (out.empty() || out.back() != c.seq) out.push_back(c.seq);
    return out;
}

struct Tally {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::vector<std::string> notes;   // first failure per sub-check

    void add(const ClaimReport& r, const std::string& where) {
        checked += r.checked;
        failures += r.failures;
        if (!r.ok()) notes.push_back(where + " " + r.claim + ": " + r.counterexample);
    }
    void add(bool ok, const std::string& where) {
        ++checked;
        if (!ok) {
            ++failures;
            notes.push_back(where);
        }
    }
};

bool g_verbose = false;

void progress(const std::string& s) {
    if (g_verbose) std::cerr << "  " << s << std::endl;
}

std::string name(const Config& c) { return std::string(c.seq) + " (" + c.mu + ")"; }

void relations(Tally& t, const Config& c, const std::vector<std::string>& ids, int max_degree) {
    YangianContext ctx(ZeroOneSequence::parse(c.seq));
    Composition mu = Composition::parse(ctx.sequence(), c.mu);
    std::vector<RelationInstance> all;
    for (const auto& id : ids) for_each_instance(id, mu, max_degree, [&](RelationInstance i) { all.push_back(std::move(i)); });
    int cap = 1;
    for (const auto& i : all) cap = std::max(cap, i.required_cap());
    GaussFactors g = decompose(ctx, mu, cap);
    std::size_t before = t.failures;
    for (const auto& i : all) {
        Element res = evaluate_under_gamma(i, g, ctx);
        t.add(res.is_zero(), name(c) + " " + i.key() + " residual " + res.str());
    }
    progress(name(c) + ": " + std::to_string(all.size()) + " instances, " + std::to_string(t.failures - before) +
             " nonzero");
}

Tally criterion1() {
    Tally t;
    std::vector<std::string> ids;
    for (int k = 1; k <= 14; ++k) ids.push_back("R7." + std::to_string(k));
    for (const Config& c : kMatrix) relations(t, c, ids, 3);
    return t;
}

Tally criterion2() {
    Tally t;
    for (const Config& c : {Config{"0101", "1,1,1,1"}, Config{"0110", "1,1,1,1"}}) relations(t, c, {"R7.15", "R7.16", "R6.4E", "R6.4F"}, 3);
    return t;
}

Tally criterion3() {
    Tally t;
    for (const Config& c : kMatrix) {
        YangianContext ctx(ZeroOneSequence::parse(c.seq));
        t.add(check_gauss_reconstruction(ctx, Composition::parse(ctx.sequence(), c.mu), 4), name(c));
        progress(name(c) + " done");
    }
    return t;
}

Tally criterion4() {
    Tally t;
    for (const Config& c : kMatrix) {
        if (std::string(c.seq).size() < 3) continue;
        YangianContext ctx(ZeroOneSequence::parse(c.seq));
        t.add(check_quasidet_agreement(ctx, Composition::parse(ctx.sequence(), c.mu), 4), name(c));
        progress(name(c) + " done");
    }
    return t;
}

Tally criterion5(int samples, std::uint64_t seed) {
    Tally t;
    for (const auto& s : sequences()) {
        YangianContext ctx(ZeroOneSequence::parse(s));
        auto t0 = std::chrono::steady_clock::now();
        t.add(check_confluence(ctx, samples, seed, 3, 3), s);
        progress(s + ": " + std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()) +
                 " s");
    }
    return t;
}

Tally criterion6() {
    Tally t;
    for (const char* s : {"01", "010"}) {
        YangianContext ctx(ZeroOneSequence::parse(s));
        t.add(check_gr_brackets(ctx, 4), s);
    }
    return t;
}

Tally criterion7() {
    Tally t;
    for (const auto& s : sequences()) {
        YangianContext ctx(ZeroOneSequence::parse(s));
        t.add(check_ev_homomorphism(ctx, 3), s);
        t.add(check_delta_homomorphism(ctx, 2), s);
        t.add(check_zeta_composition(ctx, 3), s);
        for (std::size_t k = 1; k < s.size(); ++k) {
            ZeroOneSequence head = ZeroOneSequence::parse(s.substr(0, k)), tail = ZeroOneSequence::parse(s.substr(k));
            t.add(check_commuting_subalgebras(head, tail, 3), s);
            t.add(check_psi_quasidet(head, tail, 3), s);
        }
        progress(s + " generic maps done");
    }
    for (const Config& c : kMatrix) {
        YangianContext ctx(ZeroOneSequence::parse(c.seq));
        Composition mu = Composition::parse(ctx.sequence(), c.mu);
        t.add(check_zeta_flip(ctx, mu, 3), name(c));
        t.add(check_psi_transport(ctx, mu, 3), name(c));
        progress(name(c) + " done");
    }
    return t;
}

Tally criterion8() {
    Tally t;
    for (const Config& c : kMatrix) {
        YangianContext ctx(ZeroOneSequence::parse(c.seq));
        Composition mu = Composition::parse(ctx.sequence(), c.mu);
        for (const auto& id : series_identity_ids()) {
            const bool fits = id == "R3.11" || (id.rfind("R5.", 0) == 0 && mu.blocks() == 2) ||
                              (id.rfind("R6.", 0) == 0 && mu.blocks() == 3);
            if (!fits) continue;
            for (const auto& rep : evaluate_series_identity(id, ctx, mu, 3))
                t.add(rep.zero, name(c) + " " + rep.key() + " on " + rep.window.str() + ": " + rep.residual);
        }
        progress(name(c) + " done");
    }
    return t;
}

Tally criterion9() {
    Tally t;
    YangianContext ctx(ZeroOneSequence::parse("01"));
    PbwReport r = pbw_audit(ctx, Composition::parse(ctx.sequence(), "1,1"), 2);
    t.add(r.ok, "01 (1,1): " + r.detail);
    progress(std::to_string(r.monomials) + " monomials, " + std::to_string(r.distinct_leading) + " distinct, " +
             std::to_string(r.loop_count) + " in U(gl[x])");
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Runs the acceptance criteria and prints one line per criterion"};
    std::vector<int> only;
    int samples = 500;
    std::uint64_t seed = 2024;
    app.add_option("--only", only, "criteria to run (default all)")->delimiter(',')->check(CLI::Range(1, 9));
    app.add_option("--samples", samples, "confluence samples per sequence")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "confluence seed");
    app.add_flag("-v,--verbose", g_verbose, "progress on stderr");
    CLI11_PARSE(app, argc, argv);

    struct Criterion {
        int number;
        std::string title;
        std::function<Tally()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "relations R7.1-R7.14, degrees <= 3, full matrix", criterion1},
        {2, "super Serre R7.15/R7.16 and R6.4E/F on 0101 and 0110 (1,1,1,1)", criterion2},
        {3, "Gauss reconstruction and inverse blocks, cap 4", criterion3},
        {4, "quasideterminants and bracket recursion, all pivots, cap 4", criterion4},
        {5, "normal ordering confluence, " + std::to_string(samples) + " samples per sequence",
         [&] { return criterion5(samples, seed); }},
        {6, "gr brackets r+s <= 4 on 01 and 010", criterion6},
        {7, "morphisms ev, delta, zeta, psi and commuting subalgebras", criterion7},
        {8, "generating series identities, cap 3", criterion8},
        {9, "PBW audit on 01 (1,1), loop degree <= 2", criterion9},
    };

    const std::set<int> chosen(only.begin(), only.end());
    bool all_ok = true;
    for (const Criterion& c : criteria) {
        if (!chosen.empty() && !chosen.count(c.number)) continue;
        if (g_verbose) std::cerr << "criterion " << c.number << std::endl;
        auto t0 = std::chrono::steady_clock::now();
        Tally t;
        std::string error;
        try {
            t = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = error.empty() && t.failures == 0 && t.checked > 0;
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << t.checked
                  << " checked, " << t.failures << " failed, " << static_cast<int>(secs + 0.5) << " s)";
        if (!error.empty()) std::cout << " error: " << error;
        if (!t.notes.empty()) std::cout << " first failure: " << t.notes.front();
        std::cout << std::endl;
    }
    return all_ok ? 0 : 1;
}
