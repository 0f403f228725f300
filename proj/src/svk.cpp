#include "linkgroups/svk.hpp"

#include <algorithm>
#include <map>

namespace linkgroups {

GroupPresentation make_f_generators(int object_count, ObjectId base,
                                    const std::string& label_prefix) {
    if (base < 0 || base >= object_count)
        throw DanglingEndpoint("base object outside the object set");
    GroupPresentation F;
    for (int y = 0; y < object_count; ++y)
        if (y != base)
            add_generator(F, label_prefix + "f" + std::to_string(y));
    return F;
}

namespace {

// One disambiguation pass: labels that appear in more than one of the
// three generator pools get the pool tag prepended.
void disambiguate(std::vector<std::string>& a, std::vector<std::string>& b,
                  std::vector<std::string>& f) {
    std::map<std::string, int> uses;
    for (const auto& l : a)
        ++uses[l];
    for (const auto& l : b)
        ++uses[l];
    for (const auto& l : f)
        ++uses[l];
    auto tag = [&](std::vector<std::string>& pool, const char* prefix) {
        for (std::string& l : pool)
            if (uses.at(l) > 1)
                l = prefix + l;
    };
    tag(a, "A_");
    tag(b, "B_");
    // Bridge labels stay as they are unless still colliding after tagging.
}

} // namespace

GroupPresentation pushout(const PushoutInput& input) {
    validate(input.part_a);
    validate(input.part_b);
    validate(input.overlap);

    const int n = input.part_a.object_count;
    if (input.part_b.object_count != n || input.overlap.object_count != n)
        throw ObjectSetMismatch("the three presentations must share one object set");
    if (input.base < 0 || input.base >= n)
        throw ObjectSetMismatch("base object outside the shared object set");

    for (const Generator& g : input.overlap.generators)
        if (g.source != g.target)
            throw UnsupportedShape("overlap groupoid must be totally disconnected; " +
                                   g.label + " connects distinct objects");
    if (!input.overlap.relations.empty())
        throw UnsupportedShape("overlap groupoid must be free; restricting the pushout "
                               "relations to generating loops needs a free overlap");

    validate_morphism(input.overlap.generators, input.include_a,
                      input.part_a.generators.size());
    validate_morphism(input.overlap.generators, input.include_b,
                      input.part_b.generators.size());

    RetractResult ra = retract(input.part_a, input.retract_a);
    RetractResult rb = retract(input.part_b, input.retract_b);
    GroupPresentation bridge = make_f_generators(n, input.base, input.f_label_prefix);

    std::vector<std::string> labels_a = ra.group.generators;
    std::vector<std::string> labels_b = rb.group.generators;
    std::vector<std::string> labels_f = bridge.generators;
    disambiguate(labels_a, labels_b, labels_f);

    GroupPresentation out;
    std::vector<int> map_a, map_b;
    std::vector<int> f_of_object(static_cast<std::size_t>(n), -1);
    for (const std::string& l : labels_a)
        map_a.push_back(add_generator(out, l));
    for (const std::string& l : labels_b)
        map_b.push_back(add_generator(out, l));
    {
        std::size_t next = 0;
        for (int y = 0; y < n; ++y)
            if (y != input.base)
                f_of_object[static_cast<std::size_t>(y)] =
                    add_generator(out, labels_f[next++]);
    }

    auto remap = [](const LetterSeq& w, const std::vector<int>& map) {
        LetterSeq out_letters;
        out_letters.reserve(w.size());
        for (const Letter& l : w)
            out_letters.push_back(Letter{map[static_cast<std::size_t>(l.gen)], l.sign});
        return out_letters;
    };

    for (const LetterSeq& rel : ra.group.relations)
        add_relation(out, remap(rel, map_a));
    for (const LetterSeq& rel : rb.group.relations)
        add_relation(out, remap(rel, map_b));

    // One relation per (object, overlap generator): see the header.
    for (int y = 0; y < n; ++y) {
        for (std::size_t c = 0; c < input.overlap.generators.size(); ++c) {
            if (input.overlap.generators[c].source != y)
                continue;
            Word loop = generator_word(input.overlap, static_cast<int>(c));
            Word in_a = apply_morphism(input.include_a, loop);
            Word in_b = apply_morphism(input.include_b, loop);
            const Word& conn_a = input.retract_a.connectors[static_cast<std::size_t>(y)];
            const Word& conn_b = input.retract_b.connectors[static_cast<std::size_t>(y)];
            LetterSeq ri = remap(
                rewrite_loop(ra, compose(invert(conn_a), compose(in_a, conn_a))), map_a);
            LetterSeq sj = remap(
                rewrite_loop(rb, compose(invert(conn_b), compose(in_b, conn_b))), map_b);

            // Application order of (ri c) f_y (sj c)^-1 f_y^-1.
            LetterSeq rel;
            const int f = f_of_object[static_cast<std::size_t>(y)];
            if (f >= 0)
                rel.push_back(Letter{f, -1});
            LetterSeq sj_inv = invert_letters(sj);
            rel.insert(rel.end(), sj_inv.begin(), sj_inv.end());
            if (f >= 0)
                rel.push_back(Letter{f, 1});
            rel.insert(rel.end(), ri.begin(), ri.end());
            add_relation(out, std::move(rel));
        }
    }
    return out;
}

} // namespace linkgroups
