#pragma once

// Groupoid presentations (generator graph + relation loops), connectivity,
// and deformation retraction onto the object group at a chosen base point.

#include <string>
#include <string_view>
#include <vector>

#include "linkgroups/word.hpp"

namespace linkgroups {

struct GroupoidPresentation {
    int object_count = 0;
    std::vector<Generator> generators;
    std::vector<Word> relations;
};

int add_generator(GroupoidPresentation& G, std::string label, ObjectId source, ObjectId target);

// Relations must be loops; identity and duplicate relations are dropped.
// Returns false when the relation was dropped.
bool add_relation(GroupoidPresentation& G, const Word& w);

Word generator_word(const GroupoidPresentation& G, int index, int sign = 1);
int find_generator(const GroupoidPresentation& G, std::string_view label);

// Confirms endpoints lie in the object set, labels are unique, and every
// relation is a reduced non-identity loop.
void validate(const GroupoidPresentation& G);

// True iff the undirected generator graph connects all objects.
bool is_connected(const GroupoidPresentation& G);

// Object-group generators for the two graph shapes the link builders
// produce: a single cycle through all objects, or disjoint loops.
// Throws UnsupportedShape otherwise; the general case is retract().
std::vector<Word> object_group_generators(const GroupoidPresentation& G, ObjectId x);

// Single-object presentation; relations are letter sequences over the
// generator table, stored in application order like Word.
struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<LetterSeq> relations;
};

int add_generator(GroupPresentation& G, std::string label);
bool add_relation(GroupPresentation& G, LetterSeq w);
int find_generator(const GroupPresentation& G, std::string_view label);

// Equality up to the positional renaming generator_i -> generator_i;
// relation lists are compared as multisets of reduced words.
bool canonically_equal(const GroupPresentation& a, const GroupPresentation& b);

// Deformation retraction data: one connector word from the base object to
// every object, the base connector being the identity.
struct Retraction {
    ObjectId base = 0;
    std::vector<Word> connectors;
};

void validate_retraction(const GroupoidPresentation& G, const Retraction& R);

// Result of retracting: the object-group presentation plus the image of
// each groupoid generator as a word over the group's generators, which is
// what callers need to push arbitrary loops at the base into the group.
struct RetractResult {
    GroupPresentation group;
    std::vector<LetterSeq> generator_images;
};

RetractResult retract(const GroupoidPresentation& G, const Retraction& R);

// Rewrites a loop at the retraction base over the retained generators.
LetterSeq rewrite_loop(const RetractResult& r, const Word& loop);

} // namespace linkgroups
