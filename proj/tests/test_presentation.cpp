#include <doctest.h>

#include "oracle.hpp"
#include "sy/presentation.hpp"

using namespace sy;

namespace {

int index_of(const RelationInstance& inst, const std::string& name) {
    for (const auto& [k, v] : inst.indices)
        if (k == name) return v;
    return -1;
}

Composition comp(const char* seq, const char* mu) { return Composition::parse(ZeroOneSequence::parse(seq), mu); }

// every instance of every catalog relation vanishes on the matrix image
void check_catalog_in_image(const std::string& seq, const std::string& mu_text, std::vector<int> shifts, int max_degree,
                            const std::vector<std::string>& ids) {
    Composition mu = comp(seq.c_str(), mu_text.c_str());
    int cap = 1;
    for (const auto& id : ids)
        for_each_instance(id, mu, max_degree, [&](RelationInstance inst) { cap = std::max(cap, inst.required_cap()); });
    oracle::EvalRep rep(mu.sequence(), std::move(shifts));
    oracle::GaussOracle img(rep, mu, cap);
    std::size_t total = 0;
    for (const auto& id : ids) {
        std::size_t seen = 0, bad = 0;
        std::string first;
        for_each_instance(id, mu, max_degree, [&](RelationInstance inst) {
            ++seen;
            oracle::Mat diff = img.eval(inst.lhs).first - img.eval(inst.rhs).first;
            if (!diff.is_zero() && !bad++) first = inst.key();
        });
        INFO(seq, " mu=", mu_text, " ", id, " instances=", seen, " first failure ", first);
        CHECK(bad == 0);
        total += seen;
    }
    MESSAGE(seq, " mu=", mu_text, ": ", total, " instances");
    CHECK(total > 0);
}

}  // namespace

TEST_CASE("catalog ids and group selection") {
    CHECK(relation_ids().size() == 18);
    CHECK(relation_ids().front() == "R7.1");
    auto r7 = resolve_relation_ids("R7");
    CHECK(r7.size() == 16);
    CHECK(resolve_relation_ids("SERRE-E,SERRE-F") == std::vector<std::string>{"R7.15", "R7.16"});
    CHECK(resolve_relation_ids("R6.3").size() == 8);
    CHECK(resolve_relation_ids("R5").size() == 9);
    CHECK(resolve_relation_ids("all") == relation_ids());
    CHECK_THROWS_AS(resolve_relation_ids("R9.9"), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_instances("R9.9", comp("01", "1,1"), 2), std::invalid_argument);
}

TEST_CASE("instance counts and side conditions") {
    CHECK(enumerate_instances("R7.1", comp("001", "2,1"), 3).size() == 5);
    CHECK(enumerate_instances("R7.15", comp("010", "1,1,1"), 3).empty());
    CHECK(enumerate_instances("R7.16", comp("010", "1,1,1"), 3).empty());
    CHECK_FALSE(enumerate_instances("R7.15", comp("0101", "1,1,1,1"), 3).empty());
    // R7.15 needs the middle blocks of opposite parity
    CHECK(enumerate_instances("R7.15", comp("0110", "1,1,1,1"), 3).empty());

    auto r711 = enumerate_instances("R7.11", comp("0101", "1,2,1"), 1);
    bool adjacent_kept = false;
    for (const auto& inst : r711) {
        int a = index_of(inst, "a"), b = index_of(inst, "b");
        if (b == a + 1) {
            CHECK(index_of(inst, "h") != index_of(inst, "j"));
            adjacent_kept = true;
        }
    }
    CHECK(adjacent_kept);
}

TEST_CASE("instance keys are stable") {
    auto v = enumerate_instances("R7.4", comp("01", "1,1"), 1);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().key().rfind("R7.4(a=1,", 0) == 0);
    CHECK(v.front().key().find(";r=") != std::string::npos);
}

TEST_CASE("evaluation refuses factors that are too short") {
    YangianContext ctx(ZeroOneSequence::parse("01"));
    Composition mu = comp("01", "1,1");
    GaussFactors g = decompose(ctx, mu, 1);
    bool refused = false;
    for (const auto& inst : enumerate_instances("R7.6", mu, 2))
        if (inst.required_cap() > 1) {
            CHECK_THROWS_AS(evaluate_under_gamma(inst, g, ctx), std::invalid_argument);
            refused = true;
            break;
        }
    CHECK(refused);
}

TEST_CASE("relations vanish under Gamma") {
    YangianContext ctx(ZeroOneSequence::parse("01"));
    Composition mu = comp("01", "1,1");
    GaussFactors g = decompose(ctx, mu, 3);
    for (const auto& id : relation_ids())
        for (const auto& inst : enumerate_instances(id, mu, 2)) CHECK_MESSAGE(evaluate_under_gamma(inst, g, ctx).is_zero(), inst.key());

    // [E^(1), F^(1)] in Y(01) by hand
    auto r76 = enumerate_instances("R7.6", mu, 1);
    REQUIRE_FALSE(r76.empty());
    CHECK(evaluate_under_gamma(r76.front(), g, ctx).is_zero());
}

TEST_CASE("catalog holds on independent matrix images") {
    check_catalog_in_image("01", "1,1", {0, 2, 5}, 3, relation_ids());
    check_catalog_in_image("10", "1,1", {0, 3}, 3, relation_ids());
    check_catalog_in_image("010", "1,1,1", {1, 4}, 2, relation_ids());
    check_catalog_in_image("001", "2,1", {0, 3}, 2, relation_ids());
    check_catalog_in_image("0101", "1,2,1", {0, 3}, 2, relation_ids());
    check_catalog_in_image("0101", "1,1,1,1", {0, 3}, 2, resolve_relation_ids("R7.15,R7.16,R6.4E,R6.4F"));
    check_catalog_in_image("0110", "1,1,1,1", {0, 3}, 2, resolve_relation_ids("R6.4E,R6.4F"));
}

TEST_CASE("a flipped sign is caught by both evaluations") {
    YangianContext ctx(ZeroOneSequence::parse("01"));
    Composition mu = comp("01", "1,1");
    GaussFactors g = decompose(ctx, mu, 3);
    oracle::EvalRep rep(ctx.sequence(), {0, 2, 5});
    oracle::GaussOracle img(rep, mu, 3);
    std::size_t caught = 0, tried = 0;
    for (auto inst : enumerate_instances("R7.5", mu, 2)) {
        if (inst.rhs.is_zero_literal()) continue;
        inst.rhs = -inst.rhs;
        ++tried;
        bool lib = !evaluate_under_gamma(inst, g, ctx).is_zero();
        bool mat = !(img.eval(inst.lhs).first - img.eval(inst.rhs).first).is_zero();
        if (lib && mat) ++caught;
    }
    REQUIRE(tried > 0);
    CHECK(caught == tried);
}

TEST_CASE("series identities on small configurations") {
    YangianContext y01(ZeroOneSequence::parse("01"));
    for (const char* id : {"R3.11", "R5.8"})
        for (const auto& rep : evaluate_series_identity(id, y01, comp("01", "1,1"), 3)) {
            CHECK_MESSAGE(rep.zero, rep.key(), " ", rep.residual);
            CHECK(rep.checked > 0);
        }
    YangianContext y010(ZeroOneSequence::parse("010"));
    auto r = evaluate_series_identity("R6.1a", y010, comp("010", "1,1,1"), 3);
    REQUIRE_FALSE(r.empty());
    for (const auto& rep : r) CHECK_MESSAGE(rep.zero, rep.key());
    CHECK_THROWS_AS(evaluate_series_identity("R6.1a", y01, comp("01", "1,1"), 3), std::invalid_argument);
}

TEST_CASE("certified windows") {
    Window w{{"u", "v"}, {3, 3}, 4};
    CHECK(w.contains({1, 3}));
    CHECK_FALSE(w.contains({2, 3}));
    CHECK_FALSE(w.contains({4, 0}));
}

TEST_CASE("PBW leading terms") {
    YangianContext ctx(ZeroOneSequence::parse("01"));
    Composition mu = comp("01", "1,1");
    GaussFactors g = decompose(ctx, mu, 3);
    LieContext loop(ctx.sequence(), true);
    Word e11{Symbol::ee(1, 2, 1, 1, 1, 1)};
    CHECK(gr_leading(e11, g, ctx, loop) == loop.x(1, 2, 0));

    auto gens = parabolic_generators(mu, 1);
    for (const auto& w : ordered_supermonomials(gens, 2))
        for (std::size_t k = 1; k < w.size(); ++k)
            if (w[k].parity()) CHECK_FALSE(w[k] == w[k - 1]);

    PbwReport rep = pbw_audit(ctx, mu, 2);
    CHECK(rep.ok);
    CHECK(rep.monomials == rep.distinct_leading);
    CHECK(rep.monomials == rep.loop_count);
    CHECK(rep.mismatched_generators == 0);

    LeviReport lv = levi_audit(ctx, mu, 2);
    CHECK(lv.checked > 0);
    CHECK(lv.failures == 0);
}
