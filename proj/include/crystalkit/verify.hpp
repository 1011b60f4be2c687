#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystalkit/json_io.hpp"

// Exhaustive machine checks: enumerate a finite graded piece of a
// realization and test every claimed identity on every element, reporting
// replayable counterexamples instead of stopping at the first failure.

namespace crystalkit {

inline constexpr std::size_t kCounterexampleCap = 20;

// Multisets of segments with at most max_size boxes.  Direct generation;
// saturates nothing, sorted by (size, text form).
std::vector<Multisegment> enumerate_multisegments(int rank, int max_size);

// The same region computed the other way: closure of the empty multisegment
// under all f_i, level by level.  Serves as the enumeration oracle.
std::vector<Multisegment> multisegments_by_f_closure(int rank, int max_size);

// Closure of the highest-weight tableau under all f_i; the enumeration
// oracle on the tableau side.
std::vector<Tableau> tableaux_by_f_closure(const Partition& shape, Rank rank);

// Closed-form count of the region enumerate_multisegments produces,
// saturating at 10^15.
long long count_multisegments(int rank, int max_size);

// Enumeration guard.  Defaults: rank <= 4 with size <= 8; the chain suites
// (and the bare enumeration entry points) additionally allow rank 5 with
// size <= 14.  CRYSTALKIT_BUDGET=<cap> replaces the whole rule with a bare
// size cap.  Violations raise BudgetError with an element-count estimate.
void check_enumeration_budget(int rank, int max_size, bool strict);
// Shape analogue: rank <= 4 with at most 12 boxes, or boxes <= CRYSTALKIT_BUDGET.
void check_shape_budget(const Partition& shape, int rank);

struct SuiteParams {
    int rank = 2;
    int max_size = 0;
    std::optional<Partition> shape;      // embedding suite only
    // The chain suites include the shipped rank-5 sample automatically at
    // rank 5; this flag forces it into the other suites too.
    bool include_chain_fixture = false;
};

struct Counterexample {
    nlohmann::ordered_json element;
    int op_index = 0;  // 0 for element-level checks
    std::string check;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string suite;
    SuiteParams params;
    long long elements_checked = 0;
    long long checks_passed = 0;
    long long checks_failed = 0;
    std::vector<Counterexample> counterexamples;  // first kCounterexampleCap failures
    bool passed() const { return checks_failed == 0; }
    nlohmann::ordered_json to_json() const;
};

// Registered suites, in registry order:
//   ks_conditions    bicrystal axioms plus the characterization conditions
//   bracket_count    eps + eps* + pairing equals the uncanceled ')' counts
//   star_commute     f_j commutes with f_i^* for i != j
//   ur_tracking      how f_i^* moves close-bracket counts in every S_j
//   local_structure  jump decreases stepwise under f_i; eps* stays put
//   mk_recursion     stage multiplicities mirror the original multisegment
//   first_half       stage n agrees with the shift below the top row
//   sigma_shift      the full reflection chain equals shift_down
//   embedding        tableaux embed strictly for e, weakly for f
//   phi_native       dictionary contracts on Lusztig data
//   oracle_agreement direct enumeration equals the f-closure and the count
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

// Every suite at its default acceptance parameters, in a fixed order.
std::vector<SuiteReport> run_battery();

// The rank-5 multisegment shipped as the reflection-chain sample.
Multisegment rank5_fixture();

namespace detail {
template <class T>
std::optional<T> as_optional(std::optional<T> v) {
    return v;
}
template <class T>
std::optional<T> as_optional(T v) {
    return std::optional<T>(std::move(v));
}
}  // namespace detail

// Certifies a candidate map as the unique crystal isomorphism from the
// enumerated region onto its image: it must send highest weight to highest
// weight and intertwine every f_i.  Since both sides are highest weight and
// the region is connected (checked first; a disconnected region is refused),
// those two facts determine the map uniquely, so a pass is a certificate.
template <class A, class B, class Map>
SuiteReport unique_isomorphism_check(const std::string& name, const std::vector<A>& region,
                                     const A& hw_a, const B& hw_b, Map&& candidate, int rank) {
    SuiteReport rep;
    rep.suite = name;
    rep.params.rank = rank;
    rep.elements_checked = static_cast<long long>(region.size());
    for (const auto& a : region) {
        A cur = a;
        while (!(cur == hw_a)) {
            bool moved = false;
            for (int i = 1; i <= rank && !moved; ++i)
                if (auto up = cur.e(i)) {
                    cur = std::move(*up);
                    moved = true;
                }
            if (!moved) throw ValidationError("region is not connected to its highest weight");
        }
    }
    auto record = [&rep](bool ok, const A& elem, int i, const char* what, std::string expected,
                         std::string actual) {
        if (ok) {
            ++rep.checks_passed;
            return;
        }
        ++rep.checks_failed;
        if (rep.counterexamples.size() < kCounterexampleCap)
            rep.counterexamples.push_back(
                {to_json(elem), i, what, std::move(expected), std::move(actual)});
    };
    record(candidate(hw_a) == hw_b, hw_a, 0, "candidate sends highest weight to highest weight",
           {}, {});
    for (const auto& a : region) {
        for (int i = 1; i <= rank; ++i) {
            auto fa = detail::as_optional(a.f(i));
            auto fc = detail::as_optional(candidate(a).f(i));
            if (fa.has_value() != fc.has_value()) {
                record(false, a, i, "candidate preserves definedness of f", {}, {});
                continue;
            }
            if (fa) record(candidate(*fa) == *fc, a, i, "candidate intertwines f", {}, {});
        }
    }
    return rep;
}

enum class Model { ms, tab, pbw };

struct GraphParams {
    Model model = Model::ms;
    int rank = 2;
    int max_size = 0;
    std::optional<Partition> shape;  // tableau graphs
    bool include_star = false;       // ms and pbw only
};

struct GraphNode {
    std::string label;
    int size = 0;
    // Simple-root coordinates for ms/pbw nodes; per-index pairing values for
    // tableau nodes.
    std::vector<int> weight;
    std::vector<int> eps, phi;
    std::vector<int> eps_star, phi_star;  // filled only when include_star
};

struct GraphEdge {
    int from = 0;
    int to = 0;
    int op = 1;
    bool star = false;
};

// Nodes sorted by (size, label); edges grouped by source, plain f-edges
// before starred ones, operator index ascending.  Edges whose target leaves
// the enumerated region are omitted.
struct CrystalGraph {
    GraphParams params;
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::string to_dot() const;
    nlohmann::ordered_json to_json() const;
};

CrystalGraph build_graph(const GraphParams& params);

}  // namespace crystalkit
