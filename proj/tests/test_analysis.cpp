#include <doctest.h>

#include "linkgroups/analysis.hpp"
#include "linkgroups/format.hpp"
#include "test_util.hpp"

using namespace linkgroups;

namespace {

GroupPresentation from_strings(const std::vector<std::string>& gens,
                               const std::vector<std::string>& rels) {
    GroupPresentation G;
    for (const std::string& g : gens)
        add_generator(G, g);
    for (const std::string& r : rels)
        add_relation(G, parse_word(G, r));
    return G;
}

} // namespace

TEST_CASE("abelianization via Smith normal form") {
    CHECK(abelianize(from_strings({"a", "b"}, {"a^2*b^-3"})) == AbelianInvariants{1, {}});
    CHECK(abelianize(from_strings({"g", "d"}, {"g^4", "g*d*g^-1*d^-1"})) ==
          AbelianInvariants{1, {4}});
    CHECK(abelianize(from_strings({"x", "y"}, {"x*y*x^-1*y^-1"})) ==
          AbelianInvariants{2, {}});
    // Empty relation set: free abelian of full rank.
    CHECK(abelianize(from_strings({"x", "y", "z"}, {})) == AbelianInvariants{3, {}});
    CHECK(abelianize(from_strings({}, {})) == AbelianInvariants{0, {}});
    // Torsion chain has to divide: Z_2 x Z_6, not Z_4 x Z_3 or similar.
    CHECK(abelianize(from_strings({"x", "y"}, {"x^2*y^2", "y^6"})) ==
          AbelianInvariants{0, {2, 6}});
}

TEST_CASE("hom counting matches the known small-group values") {
    const GroupPresentation z = from_strings({"a"}, {});
    CHECK(hom_count(z, 3) == 6);

    const GroupPresentation z2 = from_strings({"a", "f"}, {"a*f*a^-1*f^-1"});
    CHECK(hom_count(z2, 3) == 18);

    const GroupPresentation trefoil = from_strings({"a", "b"}, {"a^2*b^-3"});
    CHECK(hom_count(trefoil, 2) == 2);
    CHECK(hom_count(trefoil, 3) == 12);

    CHECK_THROWS_AS(hom_count(z, 6), DegreeTooLarge);
    CHECK_THROWS_AS(hom_count(z, 0), DegreeTooLarge);
    CHECK(hom_count(z, 6, 7) == 720);
}

TEST_CASE("pruned search equals full enumeration on small presentations") {
    const std::vector<GroupPresentation> corpus = {
        from_strings({}, {}),
        from_strings({"a"}, {}),
        from_strings({"a"}, {"a^5"}),
        from_strings({"a", "b"}, {"a^2*b^-3"}),
        from_strings({"a", "f"}, {"a*f*a^-1*f^-1"}),
        from_strings({"a", "b", "f"}, {"a*b^-1", "a*f*b^-1*f^-1"}),
        from_strings({"g", "d"}, {"g^3", "g*d*g^-1*d^-1"}),
    };
    for (const GroupPresentation& G : corpus)
        for (int k = 1; k <= 3; ++k)
            CHECK(hom_count(G, k) == testutil::naive_hom_count(G, k));
}

TEST_CASE("fingerprints of the basic groups") {
    CHECK(fingerprint(from_strings({}, {}), 3).counts == std::vector<long long>{1, 1, 1});
    CHECK(fingerprint(from_strings({"a"}, {}), 3).counts ==
          std::vector<long long>{1, 2, 6});
    CHECK(fingerprint(from_strings({"a", "b"}, {"a^2*b^-3"}), 3).counts ==
          std::vector<long long>{1, 2, 12});
}

TEST_CASE("fingerprint counts S_1 homs as 1 for arbitrary presentations") {
    const GroupPresentation G = from_strings({"a", "b", "c"}, {"a^3*b^-2", "c^7"});
    CHECK(fingerprint(G, 2).counts[0] == 1);
}

TEST_CASE("tietze simplification eliminates singly-occurring generators") {
    const GroupPresentation hopf =
        from_strings({"a", "b", "f"}, {"a*b^-1", "a*f*b^-1*f^-1"});
    const GroupPresentation slim = tietze_simplify(hopf);
    CHECK(slim.generators.size() == 2);
    REQUIRE(slim.relations.size() == 1);
    CHECK(slim.relations[0].size() == 4);

    const GroupPresentation trivial = tietze_simplify(from_strings({"a"}, {"a"}));
    CHECK(trivial.generators.empty());
    CHECK(trivial.relations.empty());
}

TEST_CASE("tietze moves preserve the invariants") {
    const std::vector<GroupPresentation> corpus = {
        from_strings({"a", "b", "f"}, {"a*b^-1", "a*f*b^-1*f^-1"}),
        from_strings({"a", "b"}, {"a^2*b^-3"}),
        from_strings({"g", "d", "e"}, {"g^4", "g*d*g^-1*d^-1", "e*g^-2"}),
        from_strings({"x", "y"}, {"x*y*x^-1*y^-1", "x*y*x^-1*y^-1*x"}),
    };
    for (const GroupPresentation& G : corpus) {
        const GroupPresentation S = tietze_simplify(G);
        CHECK(abelianize(S) == abelianize(G));
        CHECK(fingerprint(S, 4) == fingerprint(G, 4));
    }
}

TEST_CASE("tietze respects the step budget") {
    const GroupPresentation G =
        from_strings({"a", "b", "c"}, {"a*b^-1", "b*c^-1", "c^3"});
    const GroupPresentation untouched = tietze_simplify(G, 0);
    CHECK(untouched.generators.size() == 3);
    const GroupPresentation done = tietze_simplify(G);
    CHECK(done.generators.size() == 1);
}

TEST_CASE("free groups abelianize to full free rank") {
    for (int rank = 0; rank <= 4; ++rank) {
        GroupPresentation G;
        for (int i = 0; i < rank; ++i)
            add_generator(G, "g" + std::to_string(i));
        CHECK(abelianize(G) == AbelianInvariants{rank, {}});
    }
}
