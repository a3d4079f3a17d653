// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <string>
#include <vector>

#include "braid/braid.hpp"

using namespace braid;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const checks::Result& r) {
    std::printf("criterion %2d %s: %s%s%s\n", number, r.pass ? "PASS" : "FAIL", title.c_str(),
                r.pass ? "" : " -- ", r.pass ? "" : r.detail.c_str());
    if (!r.pass) ++failures;
}

checks::Result merged(std::string name, std::vector<checks::Result> parts) {
    checks::Result out{std::move(name), true, {}};
    for (const auto& p : parts)
        if (!p.pass && out.pass) {
            out.pass = false;
            out.detail = p.name + ": " + p.detail;
        }
    return out;
}

}  // namespace

int main() {
    const std::uint64_t seed = checks::default_seed;

    criterion(1, "presentation soundness: all relation families certify on 4 and 6 strands",
              merged("presentations",
                     {checks::check_presentation_relations(2), checks::check_presentation_relations(3)}));

    criterion(2, "half-twist conjugation sends s_i to s_{m-i} for m=2..6",
              checks::check_half_twist_conjugation());

    criterion(3, "full twist equals the squared half twist and is central for m=2..6",
              checks::check_full_twist_central());

    criterion(4, "cross-block pure-braid words equal the standard ones for n=2,3",
              checks::check_agen_cross());

    criterion(5, "half twist on 2n strands induces the block-reversing pairing, n=1..4",
              checks::check_half_twist_block_swap());

    criterion(6, "four-strand Omega identities", checks::check_eq51_identities());

    criterion(7, "witness suite over every family, theta and n in {2,3,4}, m<=2",
              checks::check_witness_suite(2, 4, 2));

    {
        auto table = merged("epsilon", {checks::check_epsilon_generator_table(2),
                                        checks::check_epsilon_generator_table(3),
                                        checks::check_epsilon_homomorphism(seed, 300),
                                        checks::check_epsilon_full_twist(),
                                        checks::check_epsilon_well_defined(2),
                                        checks::check_epsilon_well_defined(3)});
        criterion(8, "crossing-invariant suite: generator table, additivity, conjugation, full twist",
                  table);
    }

    {
        auto cab = merged("cabling", {checks::check_cable_relations(2, 2),
                                      checks::check_cable_relations(2, 3),
                                      checks::check_cable_relations(3, 2),
                                      checks::check_cable_relations(3, 3),
                                      checks::check_cable_diagram(seed, 100)});
        criterion(9, "cabling preserves relations (k=2,3) and the block-swap sign", cab);
    }

    {
        auto cls = merged("classifier", {checks::check_classifier_sphere_rows(),
                                         checks::check_classifier_plane_rows(),
                                         checks::check_classifier_closed_rows(),
                                         checks::check_classifier_consistency(),
                                         checks::check_cross_validation(4, 2)});
        criterion(10, "classification tables and cross-validation of all plane instances", cls);
    }

    criterion(11, "word-problem engine health on 500 seeded words with 20 rewrites each",
              checks::check_engine_random(seed, 500, 20));

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
