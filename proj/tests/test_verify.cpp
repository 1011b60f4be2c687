#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "crystalkit/verify.hpp"
#include "oracles.hpp"

using namespace crystalkit;

namespace {

struct EnvGuard {
    explicit EnvGuard(const char* value) {
        if (value)
            setenv("CRYSTALKIT_BUDGET", value, 1);
        else
            unsetenv("CRYSTALKIT_BUDGET");
    }
    ~EnvGuard() { unsetenv("CRYSTALKIT_BUDGET"); }
};

}  // namespace

TEST_CASE("enumeration of small graded pieces") {
    auto tiny = enumerate_multisegments(2, 1);
    REQUIRE(tiny.size() == 3);
    CHECK(tiny[0] == Multisegment(Rank(2)));
    CHECK(tiny[1] == Multisegment(Rank(2), {{{1, 1}, 1}}));
    CHECK(tiny[2] == Multisegment(Rank(2), {{{2, 2}, 1}}));

    CHECK(enumerate_multisegments(2, 2).size() == 7);
    CHECK(count_multisegments(2, 2) == 7);

    for (auto [rank, max_size] : {std::pair{2, 8}, {3, 6}, {4, 4}}) {
        auto direct = enumerate_multisegments(rank, max_size);
        CHECK(direct == multisegments_by_f_closure(rank, max_size));
        CHECK(static_cast<long long>(direct.size()) == count_multisegments(rank, max_size));
    }

    CHECK(count_multisegments(5, 200) == 1000000000000000LL);
}

TEST_CASE("weight slices match the brute partition count") {
    long long slice = 0;
    for (const auto& m : enumerate_multisegments(2, 3))
        if (m.weight() == Weight(Rank(2), {-2, -1})) ++slice;
    CHECK(slice == 2);
    CHECK(oracles::kostant_count(2, {2, 1}) == 2);

    for (auto target : std::vector<std::vector<int>>{{3, 2}, {2, 2}, {4, 1}}) {
        long long direct = 0;
        Weight w(Rank(2), {-target[0], -target[1]});
        for (const auto& m : enumerate_multisegments(2, target[0] + target[1]))
            if (m.weight() == w) ++direct;
        CHECK(direct == oracles::kostant_count(2, target));
    }
}

TEST_CASE("suite registry") {
    const auto names = suite_names();
    REQUIRE(names.size() == 11);
    for (const char* required :
         {"ks_conditions", "bracket_count", "star_commute", "ur_tracking", "local_structure",
          "mk_recursion", "first_half", "sigma_shift", "embedding", "phi_native",
          "oracle_agreement"})
        CHECK(std::find(names.begin(), names.end(), required) != names.end());
    CHECK_THROWS_AS(run_suite("no_such_suite", SuiteParams{}), UsageError);
}

TEST_CASE("suites pass on small domains") {
    SuiteParams p;
    p.rank = 2;
    p.max_size = 4;
    for (const auto& name : suite_names()) {
        if (name == "embedding") continue;
        SuiteReport rep = run_suite(name, p);
        CHECK(rep.passed());
        CHECK(rep.elements_checked > 0);
        CHECK(rep.counterexamples.empty());
    }

    SuiteParams pe;
    pe.rank = 2;
    pe.shape = Partition({2, 1});
    SuiteReport rep = run_suite("embedding", pe);
    CHECK(rep.passed());
    CHECK(rep.elements_checked == 8);
    CHECK_THROWS_AS(run_suite("embedding", p), UsageError);  // no shape given
}

TEST_CASE("rank five chain run carries the worked example") {
    SuiteParams p;
    p.rank = 5;
    p.max_size = 2;
    SuiteReport rep = run_suite("sigma_shift", p);
    CHECK(rep.passed());
    // enumerated region plus the shipped sample
    CHECK(rep.elements_checked ==
          static_cast<long long>(enumerate_multisegments(5, 2).size()) + 1);
}

TEST_CASE("rank five chain run at the full size budget") {
    SuiteParams p;
    p.rank = 5;
    p.max_size = 14;
    SuiteReport rep = run_suite("sigma_shift", p);
    CHECK(rep.passed());
    CHECK(count_multisegments(5, 14) == 303799);
    CHECK(rep.elements_checked == 303800);  // region plus the shipped sample
}

TEST_CASE("isomorphism certification") {
    const auto region_ms = enumerate_multisegments(2, 8);
    const Multisegment empty_ms((Rank(2)));

    SuiteReport identity_rep = unique_isomorphism_check(
        "identity", region_ms, empty_ms, empty_ms, [](const Multisegment& m) { return m; }, 2);
    CHECK(identity_rep.passed());

    std::vector<LusztigDatum> region_pbw;
    for (const auto& m : region_ms) region_pbw.push_back(from_multisegment(m));
    SuiteReport dict_rep = unique_isomorphism_check(
        "dictionary", region_pbw, LusztigDatum(Rank(2)), empty_ms,
        [](const LusztigDatum& a) { return to_multisegment(a); }, 2);
    CHECK(dict_rep.passed());

    SuiteReport flipped_rep = unique_isomorphism_check(
        "flipped dictionary", region_pbw, LusztigDatum(Rank(2)), empty_ms,
        [](const LusztigDatum& a) { return to_multisegment(a).flip(); }, 2);
    CHECK(!flipped_rep.passed());
    REQUIRE(!flipped_rep.counterexamples.empty());
    // first disagreement is already at the size-1 layer: flip sends the
    // image of f_1(zero) to {[2,2]} instead of {[1,1]}
    CHECK(flipped_rep.counterexamples.front().op_index == 1);

    // a region that cannot climb to the claimed highest weight is refused
    std::vector<Multisegment> stray{empty_ms};
    Multisegment fake_top(Rank(2), {{{1, 1}, 1}});
    CHECK_THROWS_AS(unique_isomorphism_check(
                        "stray", stray, fake_top, fake_top,
                        [](const Multisegment& m) { return m; }, 2),
                    ValidationError);
}

TEST_CASE("budget guards") {
    CHECK_NOTHROW(check_enumeration_budget(4, 8, true));
    CHECK_THROWS_AS(check_enumeration_budget(4, 9, true), BudgetError);
    CHECK_THROWS_AS(check_enumeration_budget(5, 8, true), BudgetError);
    CHECK_NOTHROW(check_enumeration_budget(5, 14, false));
    CHECK_THROWS_AS(check_enumeration_budget(5, 15, false), BudgetError);
    CHECK_THROWS_AS(check_enumeration_budget(6, 9, false), BudgetError);

    try {
        check_enumeration_budget(4, 9, true);
        CHECK(false);
    } catch (const BudgetError& err) {
        CHECK(std::string(err.what()).find("about") != std::string::npos);
    }

    CHECK_NOTHROW(check_shape_budget(Partition({4, 4, 4}), 4));
    CHECK_THROWS_AS(check_shape_budget(Partition({5, 4, 4}), 4), BudgetError);
    CHECK_THROWS_AS(check_shape_budget(Partition({1}), 5), BudgetError);

    {
        EnvGuard env("10");
        CHECK_NOTHROW(check_enumeration_budget(5, 10, true));
        CHECK_THROWS_AS(check_enumeration_budget(2, 11, true), BudgetError);
        CHECK_NOTHROW(check_shape_budget(Partition({5, 4}), 6));
    }
    {
        EnvGuard env("banana");
        CHECK_THROWS_AS(check_enumeration_budget(2, 2, true), UsageError);
    }
    CHECK_NOTHROW(check_enumeration_budget(2, 2, true));
}

TEST_CASE("graphs are deterministic and sized as expected") {
    GraphParams tiny;
    tiny.model = Model::ms;
    tiny.rank = 1;
    tiny.max_size = 3;
    CrystalGraph path = build_graph(tiny);
    CHECK(path.nodes.size() == 4);
    CHECK(path.edges.size() == 3);

    GraphParams seven;
    seven.model = Model::ms;
    seven.rank = 2;
    seven.max_size = 2;
    CHECK(build_graph(seven).nodes.size() == 7);
    CHECK(build_graph(seven).to_dot() == build_graph(seven).to_dot());
    CHECK(build_graph(seven).to_json().dump() == build_graph(seven).to_json().dump());

    GraphParams starred = seven;
    starred.include_star = true;
    CrystalGraph sg = build_graph(starred);
    CHECK(sg.to_dot().find("style=dashed") != std::string::npos);
    CHECK(sg.edges.size() > build_graph(seven).edges.size());

    GraphParams tab;
    tab.model = Model::tab;
    tab.rank = 2;
    tab.shape = Partition({1});
    CrystalGraph tg = build_graph(tab);
    CHECK(tg.nodes.size() == 3);
    CHECK(tg.edges.size() == 2);

    GraphParams tab_star = tab;
    tab_star.include_star = true;
    CHECK_THROWS_AS(build_graph(tab_star), UsageError);

    GraphParams pbw = seven;
    pbw.model = Model::pbw;
    CrystalGraph pg = build_graph(pbw);
    CHECK(pg.nodes.size() == 7);
    CHECK(pg.nodes[0].label == "(0,0,0)");
}

TEST_CASE("battery reports are reproducible") {
    // two consecutive runs must be byte-identical; full passing is the
    // acceptance binary's business
    SuiteParams p;
    p.rank = 2;
    p.max_size = 3;
    CHECK(run_suite("ks_conditions", p).to_json().dump() ==
          run_suite("ks_conditions", p).to_json().dump());
}
