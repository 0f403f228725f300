#include <doctest.h>

#include "linkgroups/format.hpp"

using namespace linkgroups;

namespace {

GroupPresentation trefoil_presentation() {
    GroupPresentation G;
    add_generator(G, "a");
    add_generator(G, "b");
    add_relation(G, parse_word(G, "a^2*b^-3"));
    return G;
}

} // namespace

TEST_CASE("words print in reading order with collapsed powers") {
    GroupPresentation G = trefoil_presentation();
    CHECK(word_to_string(G, G.relations[0]) == "a^2*b^-3");
    CHECK(word_to_string(G, {}) == "1");
    CHECK(word_to_string(G, LetterSeq{{0, -1}}) == "a^-1");
}

TEST_CASE("word parsing round-trips and is whitespace insensitive") {
    GroupPresentation G = trefoil_presentation();
    CHECK(parse_word(G, " a^2 * b^-3 ") == G.relations[0]);
    CHECK(parse_word(G, "1").empty());
    CHECK(parse_word(G, "a*a") == LetterSeq{{0, 1}, {0, 1}});
    CHECK(parse_word(G, "a*a^-1").empty());
    CHECK(parse_word(G, "b^0").empty());

    CHECK_THROWS_AS(parse_word(G, "a^2**b"), ParseError);
    CHECK_THROWS_AS(parse_word(G, "zz^2"), ParseError);
    CHECK_THROWS_AS(parse_word(G, "a^x"), ParseError);
    try {
        parse_word(G, "a^2*?");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }

    // Every relation string of a document must re-parse to the same word.
    for (const LetterSeq& rel : G.relations)
        CHECK(parse_word(G, word_to_string(G, rel)) == rel);
}

TEST_CASE("spec parsing handles levels and flags") {
    const LinkSpec trefoil = parse_spec("1:2,3");
    CHECK(trefoil.levels.size() == 1);
    CHECK(trefoil.levels[0].n == 1);
    CHECK(trefoil.levels[0].p == 2);
    CHECK(trefoil.levels[0].q == 3);
    CHECK_FALSE(trefoil.interior_unknot);
    CHECK_FALSE(trefoil.exterior_unknot);

    const LinkSpec figure = parse_spec("1:1,6+extA+extB");
    CHECK(figure.interior_unknot);
    CHECK(figure.exterior_unknot);

    const LinkSpec nested = parse_spec("1:2,3/2:1,1+extB");
    CHECK(nested.levels.size() == 2);
    CHECK(nested.levels[1].n == 2);
    CHECK(nested.exterior_unknot);
    CHECK_FALSE(nested.interior_unknot);

    const LinkSpec negative = parse_spec("1:-2,3");
    CHECK(negative.levels[0].p == -2);

    CHECK_THROWS_AS(parse_spec("2:2,4"), InvalidParams);
    CHECK_THROWS_AS(parse_spec("1:2,3/2:1,1+extA"), InvalidParams);
    CHECK_THROWS_AS(parse_spec("1:2"), ParseError);
    CHECK_THROWS_AS(parse_spec("1:2,3+extC"), ParseError);
    CHECK_THROWS_AS(parse_spec(""), ParseError);
    CHECK_THROWS_AS(parse_spec("1:2,3+extA+extA"), ParseError);

    CHECK(spec_to_string(figure) == "1:1,6+extA+extB");
    CHECK(spec_to_string(parse_spec("1:2,3/2:1,1+extB")) == "1:2,3/2:1,1+extB");
}

TEST_CASE("document serialization is deterministic") {
    auto build_doc = []() {
        OutputDocument doc;
        doc.spec = "1:2,3";
        doc.method = "closed";
        doc.group = trefoil_presentation();
        doc.abelian = abelianize(doc.group);
        doc.fp = fingerprint(doc.group, 3);
        return doc;
    };
    const std::string once = to_json(build_doc());
    const std::string twice = to_json(build_doc());
    CHECK(once == twice);
    CHECK(once.find("\"a^2*b^-3\"") != std::string::npos);
    CHECK(once.find("\"rank\": 1") != std::string::npos);
    CHECK(once.find("\"fingerprint\"") != std::string::npos);

    const std::string text = to_text(build_doc());
    CHECK(text.find("generators: a, b") != std::string::npos);
    CHECK(text.find("a^2*b^-3") != std::string::npos);

    const std::string algebra = to_algebra(build_doc());
    CHECK(algebra.find("F := FreeGroup(\"a\", \"b\");") != std::string::npos);
    CHECK(algebra.find("G := F / [ a^2*b^-3 ];") != std::string::npos);
}
