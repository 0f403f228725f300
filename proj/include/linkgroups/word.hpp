#pragma once

// Words of a free groupoid over a table of generator edges: composition,
// inversion, free reduction, and application of groupoid morphisms.
//
// Letters are stored in application order (letters[0] acts first), so the
// conventional right-to-left product g_L ... g_2 g_1 is the sequence
// [g_1, g_2, ..., g_L].  Every Word is freely reduced on construction, so
// letter-sequence equality is equality in the free groupoid.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkgroups/errors.hpp"

namespace linkgroups {

using ObjectId = int;

struct Generator {
    std::string label;
    ObjectId source = 0;
    ObjectId target = 0;
};

struct Letter {
    std::int32_t gen = 0;
    std::int32_t sign = 1; // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

using LetterSeq = std::vector<Letter>;

// Stack-based cancellation of adjacent inverse pairs; yields the unique
// reduced representative.
LetterSeq reduce_letters(LetterSeq letters);
LetterSeq invert_letters(const LetterSeq& letters);

class Word {
public:
    Word() = default;

    static Word identity(ObjectId at);

    // Validates that adjacent letters compose before reducing.  The
    // overload without `at_if_empty` rejects empty sequences.
    static Word from_letters(std::span<const Generator> gens, LetterSeq letters);
    static Word from_letters(std::span<const Generator> gens, LetterSeq letters,
                             ObjectId at_if_empty);

    static Word generator(std::span<const Generator> gens, int index, int sign = 1);

    const LetterSeq& letters() const { return letters_; }
    ObjectId source() const { return source_; }
    ObjectId target() const { return target_; }
    bool is_identity() const { return letters_.empty(); }
    bool is_loop() const { return source_ == target_; }

    friend bool operator==(const Word&, const Word&) = default;

private:
    Word(LetterSeq letters, ObjectId source, ObjectId target);

    // Trusted constructor for words whose endpoints are already known;
    // reduces but skips table validation.
    static Word raw(LetterSeq letters, ObjectId source, ObjectId target);

    friend Word compose(const Word&, const Word&);
    friend Word invert(const Word&);
    friend Word free_reduce(const Word&);

    LetterSeq letters_;
    ObjectId source_ = 0;
    ObjectId target_ = 0;
};

// Function-style composition: the result is w1 after w2 (first w2, then w1).
// Throws CompositionMismatch unless target(w2) = source(w1).
Word compose(const Word& w1, const Word& w2);

Word invert(const Word& w);

// w^p; negative p inverts first.  |p| != 1 requires a loop.
Word power(const Word& w, int p);

Word free_reduce(const Word& w);

// Object-fixing morphism between free groupoids, stored as the image word
// of each domain generator.
struct GroupoidMorphism {
    std::vector<Word> images;
};

GroupoidMorphism identity_morphism(std::span<const Generator> gens);

// Letter-by-letter substitution followed by free reduction.
Word apply_morphism(const GroupoidMorphism& m, const Word& w);

// Checks totality and that each image shares its generator's endpoints.
void validate_morphism(std::span<const Generator> domain_gens, const GroupoidMorphism& m,
                       std::size_t codomain_gen_count);

} // namespace linkgroups
