#include <doctest.h>

#include <random>

#include "linkgroups/presentation.hpp"
#include "test_util.hpp"

using namespace linkgroups;

namespace {

// Two cycle-edge families over three base points plus one overlap loop.
struct CycleFixture {
    GroupoidPresentation G;
    int a1, a2, a3; // a_k: object k-1 -> k mod 3
    int b1, b2;

    CycleFixture() {
        G.object_count = 3;
        a1 = add_generator(G, "a1", 0, 1);
        a2 = add_generator(G, "a2", 1, 2);
        a3 = add_generator(G, "a3", 2, 0);
        b1 = add_generator(G, "b1", 0, 1);
        b2 = add_generator(G, "b2", 1, 2);
    }

    Word gen(int index, int sign = 1) const { return generator_word(G, index, sign); }
};

} // namespace

TEST_CASE("compose follows function order: first the inner word") {
    CycleFixture fx;
    const Word a1 = fx.gen(fx.a1);

    CHECK(compose(Word::identity(1), a1) == a1);
    CHECK(compose(a1, Word::identity(0)) == a1);

    const Word two_steps = compose(fx.gen(fx.a2), a1);
    CHECK(two_steps.source() == 0);
    CHECK(two_steps.target() == 2);
    CHECK(two_steps.letters() == LetterSeq{{fx.a1, 1}, {fx.a2, 1}});

    // b2 ends at object 2 while a1 starts at object 0.
    CHECK_THROWS_AS(compose(fx.gen(fx.a1), fx.gen(fx.b2)), CompositionMismatch);
}

TEST_CASE("inversion reverses and flips") {
    CycleFixture fx;
    CHECK(invert(Word::identity(0)) == Word::identity(0));

    const Word w = compose(fx.gen(fx.a2), fx.gen(fx.a1));
    CHECK(invert(w).letters() == LetterSeq{{fx.a2, -1}, {fx.a1, -1}});

    const Word cycle = compose(fx.gen(fx.a3), w);
    const Word cubed = power(cycle, 3);
    CHECK(compose(invert(cubed), cubed) == Word::identity(0));
    CHECK(compose(cubed, invert(cubed)) == Word::identity(0));
    CHECK(power(cycle, -3) == invert(cubed));
}

TEST_CASE("free reduction cancels adjacent inverse pairs") {
    CycleFixture fx;
    const Word g = fx.gen(fx.a1);
    CHECK(compose(invert(g), g) == Word::identity(0));

    const Word reduced = compose(fx.gen(fx.a2), fx.gen(fx.a1));
    CHECK(free_reduce(reduced) == reduced);

    // a3 a2 a2^-1 a2 a1 must come out as a3 a2 a1.
    LetterSeq noisy{{fx.a1, 1}, {fx.a2, 1}, {fx.a2, -1}, {fx.a2, 1}, {fx.a3, 1}};
    const Word w = Word::from_letters(fx.G.generators, noisy);
    CHECK(w.letters() == LetterSeq{{fx.a1, 1}, {fx.a2, 1}, {fx.a3, 1}});
    CHECK(w.letters() == testutil::scan_reduce(noisy));
}

TEST_CASE("reduction matches the rescan oracle on random words") {
    CycleFixture fx;
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Word w = testutil::random_walk_word(fx.G, 0, 12, rng);
        CHECK(w.letters() == testutil::scan_reduce(w.letters()));
        CHECK(free_reduce(w) == w);
    }
}

TEST_CASE("composition is associative after reduction") {
    CycleFixture fx;
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Word w1 = testutil::random_walk_word(fx.G, 0, 6, rng);
        Word w2 = testutil::random_walk_word(fx.G, w1.target(), 6, rng);
        Word w3 = testutil::random_walk_word(fx.G, w2.target(), 6, rng);
        // Application order: w1 then w2 then w3.
        CHECK(compose(compose(w3, w2), w1) == compose(w3, compose(w2, w1)));
    }
}

TEST_CASE("morphism application substitutes letter by letter") {
    // Overlap with one loop c0 mapping into the one-object cycle a1.
    GroupoidPresentation overlap;
    overlap.object_count = 1;
    int c0 = add_generator(overlap, "c0", 0, 0);

    GroupoidPresentation target;
    target.object_count = 1;
    int a1 = add_generator(target, "a1", 0, 0);

    GroupoidMorphism into;
    into.images.push_back(power(generator_word(target, a1), 2)); // c0 -> a1^2

    const Word c0_squared = power(generator_word(overlap, c0), 2);
    const Word image = apply_morphism(into, c0_squared);
    CHECK(image == power(generator_word(target, a1), 4));

    const GroupoidMorphism ident = identity_morphism(target.generators);
    CHECK(apply_morphism(ident, image) == image);

    GroupoidMorphism empty;
    CHECK_THROWS_AS(apply_morphism(empty, c0_squared), UnmappedGenerator);
}

TEST_CASE("morphism application commutes with compose and invert") {
    CycleFixture fx;
    // Map the b-edges onto the a-edges, fix the a-edges.
    GroupoidMorphism m = identity_morphism(fx.G.generators);
    m.images[static_cast<std::size_t>(fx.b1)] = fx.gen(fx.a1);
    m.images[static_cast<std::size_t>(fx.b2)] = fx.gen(fx.a2);
    validate_morphism(fx.G.generators, m, fx.G.generators.size());

    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        Word w1 = testutil::random_walk_word(fx.G, 1, 6, rng);
        Word w2 = testutil::random_walk_word(fx.G, 0, 6, rng);
        if (w2.target() != w1.source())
            continue;
        CHECK(apply_morphism(m, compose(w1, w2)) ==
              compose(apply_morphism(m, w1), apply_morphism(m, w2)));
        CHECK(apply_morphism(m, invert(w1)) == invert(apply_morphism(m, w1)));
    }
}

TEST_CASE("words validate letters against the generator table") {
    CycleFixture fx;
    CHECK_THROWS_AS(Word::from_letters(fx.G.generators, LetterSeq{{99, 1}}),
                    DanglingEndpoint);
    // a1 then a3 does not compose (a3 starts at object 2).
    CHECK_THROWS_AS(Word::from_letters(fx.G.generators, LetterSeq{{fx.a1, 1}, {fx.a3, 1}}),
                    CompositionMismatch);
}
