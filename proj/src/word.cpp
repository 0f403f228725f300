#include "linkgroups/word.hpp"

#include <algorithm>

namespace linkgroups {

LetterSeq reduce_letters(LetterSeq letters) {
    LetterSeq out;
    out.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

LetterSeq invert_letters(const LetterSeq& letters) {
    LetterSeq out;
    out.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.push_back(Letter{it->gen, -it->sign});
    return out;
}

Word::Word(LetterSeq letters, ObjectId source, ObjectId target)
    : letters_(std::move(letters)), source_(source), target_(target) {}

Word Word::identity(ObjectId at) { return Word({}, at, at); }

namespace {

ObjectId letter_source(const Generator& g, int sign) { return sign > 0 ? g.source : g.target; }
ObjectId letter_target(const Generator& g, int sign) { return sign > 0 ? g.target : g.source; }

} // namespace

Word Word::from_letters(std::span<const Generator> gens, LetterSeq letters,
                        ObjectId at_if_empty) {
    ObjectId src = at_if_empty;
    ObjectId tgt = at_if_empty;
    ObjectId cursor = at_if_empty;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const Letter& l = letters[i];
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= gens.size())
            throw DanglingEndpoint("letter " + std::to_string(i) +
                                   " references generator index " + std::to_string(l.gen) +
                                   " outside the table");
        if (l.sign != 1 && l.sign != -1)
            throw CompositionMismatch("letter sign must be +1 or -1");
        const Generator& g = gens[static_cast<std::size_t>(l.gen)];
        if (i == 0) {
            src = letter_source(g, l.sign);
        } else if (letter_source(g, l.sign) != cursor) {
            throw CompositionMismatch("letter " + std::to_string(i) + " (" + g.label +
                                      ") starts at object " +
                                      std::to_string(letter_source(g, l.sign)) +
                                      " but the word is at object " + std::to_string(cursor));
        }
        cursor = letter_target(g, l.sign);
        tgt = cursor;
    }
    if (letters.empty())
        return identity(at_if_empty);
    return Word(reduce_letters(std::move(letters)), src, tgt);
}

Word Word::from_letters(std::span<const Generator> gens, LetterSeq letters) {
    if (letters.empty())
        throw CompositionMismatch("empty letter sequence needs an explicit base object");
    return from_letters(gens, std::move(letters), 0);
}

Word Word::generator(std::span<const Generator> gens, int index, int sign) {
    return from_letters(gens, LetterSeq{Letter{index, sign}}, 0);
}

Word Word::raw(LetterSeq letters, ObjectId source, ObjectId target) {
    LetterSeq reduced = reduce_letters(std::move(letters));
    if (reduced.empty())
        return Word({}, source, source);
    return Word(std::move(reduced), source, target);
}

Word compose(const Word& w1, const Word& w2) {
    if (w2.target() != w1.source())
        throw CompositionMismatch("cannot compose: inner word ends at object " +
                                  std::to_string(w2.target()) +
                                  ", outer word starts at object " +
                                  std::to_string(w1.source()));
    LetterSeq letters = w2.letters();
    letters.insert(letters.end(), w1.letters().begin(), w1.letters().end());
    return Word::raw(std::move(letters), w2.source(), w1.target());
}

Word invert(const Word& w) {
    return Word::raw(invert_letters(w.letters()), w.target(), w.source());
}

Word power(const Word& w, int p) {
    if (p == 0)
        return Word::identity(w.source());
    if (p == 1)
        return w;
    if (p == -1)
        return invert(w);
    if (!w.is_loop())
        throw CompositionMismatch("powers beyond +/-1 require a loop");
    Word base = p > 0 ? w : invert(w);
    Word acc = Word::identity(w.source());
    for (int i = 0; i < std::abs(p); ++i)
        acc = compose(base, acc);
    return acc;
}

Word free_reduce(const Word& w) {
    return Word::raw(w.letters(), w.source(), w.target());
}

GroupoidMorphism identity_morphism(std::span<const Generator> gens) {
    GroupoidMorphism m;
    m.images.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        m.images.push_back(Word::generator(gens, static_cast<int>(i)));
    return m;
}

Word apply_morphism(const GroupoidMorphism& m, const Word& w) {
    Word acc = Word::identity(w.source());
    for (const Letter& l : w.letters()) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= m.images.size())
            throw UnmappedGenerator("no image for generator index " + std::to_string(l.gen));
        const Word& img = m.images[static_cast<std::size_t>(l.gen)];
        acc = compose(l.sign > 0 ? img : invert(img), acc);
    }
    return acc;
}

void validate_morphism(std::span<const Generator> domain_gens, const GroupoidMorphism& m,
                       std::size_t codomain_gen_count) {
    if (m.images.size() != domain_gens.size())
        throw UnmappedGenerator("morphism maps " + std::to_string(m.images.size()) +
                                " generators, domain has " +
                                std::to_string(domain_gens.size()));
    for (std::size_t i = 0; i < domain_gens.size(); ++i) {
        const Generator& g = domain_gens[i];
        const Word& img = m.images[i];
        if (img.source() != g.source || img.target() != g.target)
            throw Error("morphism is not object-fixing on generator " + g.label);
        for (const Letter& l : img.letters())
            if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= codomain_gen_count)
                throw DanglingEndpoint("image of " + g.label +
                                       " references a generator outside the codomain");
    }
}

} // namespace linkgroups
