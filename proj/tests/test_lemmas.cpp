#include <doctest.h>

#include "bdom/diametrical.hpp"
#include "bdom/generators.hpp"
#include "bdom/trees.hpp"
#include "lemma_cases.hpp"

using namespace bdom;

TEST_CASE("concatenating diametrical trees stays diametrical") {
    auto pairs = lemma_cases::concatenation_pairs();
    REQUIRE(pairs.size() == 20);
    for (const auto& c : pairs) {
        INFO(c.label);
        CHECK(metrics(c.joined.tree).diameter() == static_cast<int>(c.joined.path.size()) - 1);
        CHECK(classify_tree(c.joined.tree).diametrical);
        CHECK(is_diametrical_exact(c.joined.tree));
    }
}

TEST_CASE("one legal limb at the joint keeps the tree diametrical") {
    int checked = 0;
    for (const auto& c : lemma_cases::joint_limb_cases()) {
        if (!c.legal) continue;
        ++checked;
        INFO(c.label);
        CHECK(is_diametrical_exact(c.tree));
    }
    CHECK(checked >= 10);
}
