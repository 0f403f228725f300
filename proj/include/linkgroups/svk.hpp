#pragma once

// Seifert-van Kampen pushout for fundamental groupoids: given presentations
// of the two cover pieces and their totally disconnected overlap, all over a
// shared base-point set, produce a presentation of the fundamental group of
// the union at a chosen base point.

#include <string>

#include "linkgroups/presentation.hpp"

namespace linkgroups {

struct PushoutInput {
    GroupoidPresentation part_a; // connected
    GroupoidPresentation part_b; // connected
    GroupoidPresentation overlap; // totally disconnected, free
    GroupoidMorphism include_a;  // overlap -> part_a
    GroupoidMorphism include_b;  // overlap -> part_b
    Retraction retract_a;
    Retraction retract_b;
    ObjectId base = 0;
    // Prefix for the bridge generators so nested invocations stay
    // collision-free.
    std::string f_label_prefix;
};

// The free group on one bridge generator f_y per non-base object; the
// base object's bridge element is the identity and is never emitted.
GroupPresentation make_f_generators(int object_count, ObjectId base,
                                    const std::string& label_prefix = "");

// Generators: retract(part_a) + retract(part_b) + bridge generators.
// Relations: both retracted relation sets, plus one relation
//   (r i(c)) f_y (s j(c))^-1 f_y^-1
// per overlap generator c based at y, where r and s rewrite loops through
// the respective retractions and f_base is replaced by the identity.
GroupPresentation pushout(const PushoutInput& input);

} // namespace linkgroups
