#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "wdq/errors.hpp"
#include "wdq/normalform.hpp"
#include "wdq/surface.hpp"
#include "wdq/wdtree.hpp"

using namespace wdq;

namespace {

// Independent recursive definition of the k-approximation, written directly
// over the pattern algebra: k = 0 gives the non-optional part, intermediate
// k recurses into every optional part with k - 1, and k >= depth is the
// identity. Used as an oracle against the tree-pruning implementation.
PatternPtr recursiveApprox(const PatternPtr& p, int k) {
    if (k <= 0) return bgp(p);
    if (k >= optDepth(p)) return p;
    auto result = bgp(p);
    for (const auto& part : optionalParts(p))
        result = Pattern::opt(result, recursiveApprox(part, k - 1));
    return result;
}

}  // namespace

TEST_CASE("buildTree on the worked example") {
    auto t = buildTree(fixtures::workedExampleP());
    REQUIRE_FALSE(t->leaf);
    CHECK(t->id.ordinal == 1);
    CHECK(t->label() == "OPT1");

    REQUIRE_FALSE(t->left->leaf);
    CHECK(t->left->id.ordinal == 2);
    CHECK(t->left->left->leaf);
    CHECK(structuralEquals(t->left->left->af, fixtures::headP0()));
    CHECK(structuralEquals(t->left->right->af, fixtures::leaf(2)));

    REQUIRE_FALSE(t->right->leaf);
    CHECK(t->right->id.ordinal == 3);
    CHECK(t->right->left->id.ordinal == 4);
    CHECK(t->right->right->id.ordinal == 5);
    CHECK(structuralEquals(t->right->left->left->af, fixtures::leaf(4)));
    CHECK(structuralEquals(t->right->right->right->af, fixtures::leaf(7)));
}

TEST_CASE("buildTree preconditions and inverses") {
    auto nonOnf = Pattern::andOf(Pattern::opt(fixtures::leaf(1), fixtures::leaf(2)),
                                 fixtures::leaf(3));
    CHECK_THROWS_AS(buildTree(nonOnf), NotInOptNormalForm);
    auto notWd = parsePattern("{{?x p ?y OPTIONAL {?y q ?z}} OPTIONAL {?x r ?z}}");
    CHECK_THROWS_AS(buildTree(notWd), NotWellDesigned);

    for (const auto& p : {fixtures::sectionOneQ(), fixtures::deepNestedP(),
                          fixtures::workedExampleP(), fixtures::headP0()}) {
        CHECK(structuralEquals(toPattern(buildTree(p)), p));
    }
}

TEST_CASE("leftmost traversal, leaf and depth") {
    auto t = buildTree(fixtures::workedExampleP());
    auto lt = leftmostTraversal(t);
    REQUIRE(lt.size() == 3);
    CHECK(lt[0]->label() == "OPT1");
    CHECK(lt[1]->label() == "OPT2");
    CHECK(structuralEquals(lt[2]->af, fixtures::headP0()));

    CHECK(structuralEquals(leftmostLeaf(t)->af, fixtures::headP0()));
    CHECK(treeDepth(t) == 3);
    CHECK(treeDepth(buildTree(fixtures::headP0())) == 0);
    CHECK(treeDepth(buildTree(fixtures::sectionOneQ())) == 2);
}

TEST_CASE("left-deep level traversal of the worked example") {
    auto report = leftDeepLevelTraversal(buildTree(fixtures::workedExampleP()));
    auto p0 = printPatternBody(fixtures::headP0());
    auto leafLabel = [](int i) { return printPatternBody(fixtures::leaf(i)); };

    REQUIRE(report.levels.size() == 4);

    CHECK(report.levels[0].traversal == std::vector<std::string>{"OPT1", "OPT2", p0});
    CHECK(report.levels[0].candidates == std::vector<std::string>{"OPT3", leafLabel(2)});
    CHECK(report.levels[0].leftmost == std::vector<std::string>{leafLabel(4), "×"});

    CHECK(report.levels[1].traversal ==
          std::vector<std::string>{"OPT3", "OPT4", leafLabel(4), leafLabel(2)});
    CHECK(report.levels[1].candidates == std::vector<std::string>{"OPT5", leafLabel(5)});
    CHECK(report.levels[1].leftmost == std::vector<std::string>{leafLabel(6), "×"});

    CHECK(report.levels[2].traversal ==
          std::vector<std::string>{"OPT5", leafLabel(6), leafLabel(5)});
    CHECK(report.levels[2].candidates == std::vector<std::string>{leafLabel(7)});
    CHECK(report.levels[2].leftmost == std::vector<std::string>{"×"});

    CHECK(report.levels[3].traversal == std::vector<std::string>{leafLabel(7)});
    CHECK(report.levels[3].candidates.empty());
    CHECK(report.levels[3].leftmost.empty());
}

TEST_CASE("approximation trees of the worked example") {
    auto t = buildTree(fixtures::workedExampleP());

    auto k0 = kApproximationTree(t, 0);
    REQUIRE(k0->leaf);
    CHECK(structuralEquals(k0->af, fixtures::headP0()));

    // the subtree rooted at OPT3 collapses to its leftmost leaf t4
    auto k1 = kApproximationTree(t, 1);
    CHECK(structuralEquals(
        toPattern(k1),
        Pattern::opt(Pattern::opt(fixtures::headP0(), fixtures::leaf(2)),
                     fixtures::leaf(4))));

    // OPT5 collapses to t6
    auto k2 = kApproximationTree(t, 2);
    CHECK(structuralEquals(
        toPattern(k2),
        Pattern::opt(
            Pattern::opt(fixtures::headP0(), fixtures::leaf(2)),
            Pattern::opt(Pattern::opt(fixtures::leaf(4), fixtures::leaf(5)),
                         fixtures::leaf(6)))));

    CHECK(structuralEquals(toPattern(kApproximationTree(t, 3)),
                           fixtures::workedExampleP()));
    CHECK(structuralEquals(toPattern(kApproximationTree(t, 99)),
                           fixtures::workedExampleP()));
}

TEST_CASE("approximations of the introductory query") {
    auto q = fixtures::sectionOneQ();
    CHECK(structuralEquals(kApproximate(q, 0), fixtures::sectionOneQ1()));
    CHECK(structuralEquals(kApproximate(q, 1), fixtures::sectionOneQ2()));
    CHECK(structuralEquals(kApproximate(q, 2), q));
}

TEST_CASE("approximations of the deep nested pattern") {
    auto p = fixtures::deepNestedP();
    CHECK(structuralEquals(kApproximate(p, 0), fixtures::leaf(1)));
    CHECK(structuralEquals(
        kApproximate(p, 1),
        Pattern::opt(Pattern::opt(fixtures::leaf(1), fixtures::leaf(2)),
                     fixtures::leaf(4))));
    CHECK(structuralEquals(kApproximate(p, 2), p));
}

TEST_CASE("kApproximate matches the recursive definition") {
    std::mt19937 rng(777);
    for (int i = 0; i < 120; ++i) {
        auto p = gen::randomWellDesignedOnf(rng, 7);
        int d = optDepth(p);
        for (int k = 0; k <= d + 1; ++k) {
            CHECK(structuralEquals(kApproximate(p, k), recursiveApprox(p, k)));
        }
    }
}

TEST_CASE("approximation algebra") {
    std::mt19937 rng(888);
    for (int i = 0; i < 60; ++i) {
        auto p = gen::randomWellDesignedOnf(rng, 7);
        int d = optDepth(p);
        for (int k = 0; k <= d + 1; ++k) {
            auto pk = kApproximate(p, k);
            CHECK(optDepth(pk) == std::min(k, d));
            CHECK(isOptNormalForm(pk));
            // approximating twice takes the smaller level
            for (int j = 0; j <= k; ++j) {
                CHECK(structuralEquals(kApproximate(pk, j), kApproximate(p, j)));
            }
            if (k > 0) CHECK(optCount(kApproximate(p, k - 1)) <= optCount(pk));
        }
    }
}

TEST_CASE("reductions of the introductory query") {
    auto rs = reductions(fixtures::sectionOneQ());
    REQUIRE(rs.size() == 2);
    auto matches = [&](const PatternPtr& expected) {
        return std::any_of(rs.begin(), rs.end(), [&](const PatternPtr& r) {
            return structuralEquals(r, expected);
        });
    };
    CHECK(matches(fixtures::sectionOneQ1()));
    CHECK(matches(fixtures::sectionOneQ2()));
}

TEST_CASE("reductions of a single OPT") {
    auto rs = reductions(Pattern::opt(fixtures::leaf(1), fixtures::leaf(2)));
    REQUIRE(rs.size() == 1);
    CHECK(structuralEquals(rs[0], fixtures::leaf(1)));
    CHECK(reductions(fixtures::headP0()).empty());
}

TEST_CASE("approximations appear in the reduction closure") {
    std::mt19937 rng(999);
    for (int i = 0; i < 25; ++i) {
        auto p = gen::randomWellDesignedOnf(rng, 6);
        if (optCount(p) > 6) continue;
        // closure of p under single-OPT drops
        std::vector<PatternPtr> closure{p};
        for (size_t j = 0; j < closure.size(); ++j) {
            for (const auto& r : reductions(closure[j])) {
                bool seen = std::any_of(closure.begin(), closure.end(),
                                        [&](const PatternPtr& q) {
                                            return structuralEquals(q, r);
                                        });
                if (!seen) closure.push_back(r);
            }
        }
        for (int k = 0; k <= optDepth(p); ++k) {
            auto pk = kApproximate(p, k);
            CHECK(std::any_of(closure.begin(), closure.end(), [&](const PatternPtr& q) {
                return structuralEquals(q, pk);
            }));
        }
    }
}

TEST_CASE("renderings are stable") {
    auto t = buildTree(fixtures::sectionOneQ());
    auto tree = renderTree(t);
    CHECK(tree.find("OPT1") != std::string::npos);
    CHECK(tree.find("OPT2") != std::string::npos);
    CHECK(tree.find("?x rdf:type professor") != std::string::npos);

    auto table = renderLdltReport(leftDeepLevelTraversal(t));
    CHECK(table.find("Level") != std::string::npos);
    CHECK(table.find("×") != std::string::npos);
    CHECK(renderTree(t) == tree);
    CHECK(renderLdltReport(leftDeepLevelTraversal(t)) == table);
}
