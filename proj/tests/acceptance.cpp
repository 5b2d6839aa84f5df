// Acceptance suite: runs the full verification battery twice (for the
// determinism criterion) and reports one pass/fail line per criterion.

#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "latkit/verify.hpp"

using namespace latkit;

namespace {

struct Criterion {
    std::string label;
    std::vector<std::string> properties; // all reports with these names must hold
};

} // namespace

int main() {
    RunOptions opt;
    opt.seed = 7;
    opt.threads = 0; // pick a default pool size

    verify::detail::Timer total;
    auto first = verify::run_suite("all", opt);
    auto second = verify::run_suite("all", opt);
    const bool deterministic =
        verify::render(first, opt).dump(2) == verify::render(second, opt).dump(2);

    std::map<std::string, std::pair<int, int>> tally; // property -> (holds, total)
    for (const auto& r : first.reports) {
        auto& [holds, all_count] = tally[r.property];
        if (r.verdict == Verdict::holds) ++holds;
        ++all_count;
    }

    const std::vector<Criterion> criteria{
        {"crosscut complex, Moebius and order complex agree on every interval",
         {"crosscut-euler-consistency"}},
        {"meet-semidistributive lattices are crosscut-simplicial; figure fixtures behave",
         {"meet-sd-implies-crosscut-simplicial", "crosscut-simplicial",
          "crosscut-simplicial-fails-with-witness"}},
        {"join-semidistributive crosscut complexes are simplices or pure of codimension two",
         {"join-sd-crosscut-shape", "top-interval-pure-path"}},
        {"semidistributive lattices have Moebius values in {-1,0,1}",
         {"sd-mobius-range"}},
        {"chamber posets: crosscut-simplicial lattice = semidistributive lattice = bineighborly",
         {"chamber-equivalence", "prism-base-witness"}},
        {"chamber poset structure: involution, grading, incidence, opposites, restriction, braid",
         {"chamber-involution", "chamber-grading", "chamber-incidence-separation",
          "chamber-opposite", "chamber-restriction-monotone", "braid-weak-order-isomorphism"}},
        {"quotient crosscut complexes come from base intervals; congruence lattices distributive",
         {"quotient-crosscut-realized", "quotient-crosscut-simplicial-closed",
          "interval-congruence-restriction", "quotient-atoms-bijection",
          "congruence-lattice-distributive", "congruence-normal-mobius-range",
          "congruence-counts"}},
        {"doubled intervals match the four-case classification and the join formula",
         {"doubling-crosscut-classification", "doubling-join-formula",
          "doubling-projection-quotient"}},
        {"doubling preserves Moebius range, homotopy evidence, filters, chains",
         {"doubling-mobius-range", "doubling-euler-betti", "doubling-filter-crosscut-simplicial",
          "doubling-hypothesis-crosscut-simplicial", "principal-filter-doubling-distributive",
          "doubling-chain-congruence-normal"}},
        {"labelling machinery: pinned fixtures, exhaustion proof, search soundness",
         {"sb-b2-labelling", "sb-m3-exhaustion", "sb-search-implies-crosscut-simplicial"}},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        bool pass = true;
        int holds = 0, all_count = 0;
        for (const auto& prop : criteria[i].properties) {
            auto it = tally.find(prop);
            if (it == tally.end()) {
                pass = false;
                continue;
            }
            holds += it->second.first;
            all_count += it->second.second;
            if (it->second.first != it->second.second) pass = false;
        }
        if (!pass) ++failures;
        std::printf("%s  criterion %2zu  (%d/%d checks)  %s\n", pass ? "PASS" : "FAIL", i + 1,
                    holds, all_count, criteria[i].label.c_str());
    }
    if (!deterministic) ++failures;
    std::printf("%s  criterion 11  repeated runs render byte-identical reports\n",
                deterministic ? "PASS" : "FAIL");

    if (failures > 0) {
        std::printf("\nnon-holding reports:\n");
        for (const auto& r : first.reports)
            if (r.verdict != Verdict::holds)
                std::printf("  %s / %s: %s %s\n", r.subject.c_str(), r.property.c_str(),
                            to_string(r.verdict), r.witness.dump().c_str());
    }
    std::printf("total: %zu criteria, %d failing, %.1fs\n", criteria.size() + 1, failures,
                total.seconds());
    return failures == 0 ? 0 : 1;
}
