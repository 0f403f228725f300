#include "linkgroups/links.hpp"

#include <algorithm>
#include <numeric>

namespace linkgroups {

void validate_params(const TorusLinkParams& params) {
    if (params.n < 1)
        throw InvalidParams("component count must be at least 1, got " +
                            std::to_string(params.n));
    if (params.p == 0 && params.q == 0)
        throw InvalidParams("(p,q) = (0,0) does not describe a link component");
    if (std::gcd(std::abs(params.p), std::abs(params.q)) != 1)
        throw InvalidParams("gcd(p,q) must be 1, got gcd(" + std::to_string(params.p) +
                            "," + std::to_string(params.q) + ") = " +
                            std::to_string(std::gcd(std::abs(params.p),
                                                    std::abs(params.q))));
}

void validate_spec(const LinkSpec& spec) {
    if (spec.levels.empty())
        throw InvalidParams("a link spec needs at least one level");
    for (const TorusLinkParams& level : spec.levels)
        validate_params(level);
    if (spec.interior_unknot && spec.levels.size() != 1)
        throw InvalidParams("an interior unknot is only defined for a single level");
}

namespace {

// Build a letter sequence from factors written in the usual right-to-left
// reading order: {{g, e}, ...} means g^e times the rest.
LetterSeq from_reading_order(const std::vector<std::pair<int, int>>& factors) {
    LetterSeq reading;
    for (const auto& [gen, exp] : factors) {
        const int sign = exp > 0 ? 1 : -1;
        for (int i = 0; i < std::abs(exp); ++i)
            reading.push_back(Letter{gen, sign});
    }
    std::reverse(reading.begin(), reading.end());
    return reduce_letters(std::move(reading));
}

// Cycle edges for one cover piece: edge k runs from object k to k+1 mod n.
std::vector<int> add_cycle(GroupoidPresentation& G, const std::string& prefix, int n) {
    std::vector<int> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        edges.push_back(add_generator(G, prefix + std::to_string(k + 1), k, (k + 1) % n));
    return edges;
}

// The loop at object k traversing the whole cycle once, ascending.
Word cycle_loop(const GroupoidPresentation& G, const std::vector<int>& edges, int k) {
    const int n = static_cast<int>(edges.size());
    LetterSeq letters;
    letters.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t)
        letters.push_back(Letter{edges[static_cast<std::size_t>((k + t) % n)], 1});
    return Word::from_letters(G.generators, std::move(letters), k);
}

// Path connector from object 0 to object k along the first k cycle edges.
Word cycle_path(const GroupoidPresentation& G, const std::vector<int>& edges, int k) {
    LetterSeq letters;
    letters.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t)
        letters.push_back(Letter{edges[static_cast<std::size_t>(t)], 1});
    return Word::from_letters(G.generators, std::move(letters), 0);
}

Retraction cycle_retraction(const GroupoidPresentation& G, const std::vector<int>& edges) {
    Retraction r;
    r.base = 0;
    for (int k = 0; k < G.object_count; ++k)
        r.connectors.push_back(cycle_path(G, edges, k));
    return r;
}

PushoutInput link_groupoids_impl(const TorusLinkParams& params, const std::string& prefix,
                                 bool with_unknots) {
    const int n = params.n;
    PushoutInput in;
    in.base = 0;
    in.f_label_prefix = prefix;

    in.part_a.object_count = n;
    std::vector<int> a_edges = add_cycle(in.part_a, prefix + "a", n);
    in.part_b.object_count = n;
    std::vector<int> b_edges = add_cycle(in.part_b, prefix + "b", n);

    if (with_unknots) {
        int da = add_generator(in.part_a, prefix + "dA", 0, 0);
        Word cycle_a = cycle_loop(in.part_a, a_edges, 0);
        Word loop_a = generator_word(in.part_a, da);
        add_relation(in.part_a, compose(compose(compose(cycle_a, loop_a), invert(cycle_a)),
                                        invert(loop_a)));
        int db = add_generator(in.part_b, prefix + "dB", 0, 0);
        Word cycle_b = cycle_loop(in.part_b, b_edges, 0);
        Word loop_b = generator_word(in.part_b, db);
        add_relation(in.part_b, compose(compose(compose(cycle_b, loop_b), invert(cycle_b)),
                                        invert(loop_b)));
    }

    in.overlap.object_count = n;
    for (int k = 0; k < n; ++k)
        add_generator(in.overlap, prefix + "c" + std::to_string(k), k, k);

    for (int k = 0; k < n; ++k) {
        in.include_a.images.push_back(power(cycle_loop(in.part_a, a_edges, k), params.p));
        in.include_b.images.push_back(power(cycle_loop(in.part_b, b_edges, k), params.q));
    }

    in.retract_a = cycle_retraction(in.part_a, a_edges);
    in.retract_b = cycle_retraction(in.part_b, b_edges);
    return in;
}

} // namespace

PushoutInput build_link_groupoids(const TorusLinkParams& params) {
    validate_params(params);
    return link_groupoids_impl(params, "", false);
}

PushoutInput build_unknot_groupoids(const TorusLinkParams& params) {
    validate_params(params);
    return link_groupoids_impl(params, "", true);
}

GroupPresentation torus_link_group(const TorusLinkParams& params) {
    validate_params(params);
    GroupPresentation G;
    const int a = add_generator(G, "a");
    const int b = add_generator(G, "b");
    std::vector<int> f;
    for (int k = 1; k < params.n; ++k)
        f.push_back(add_generator(G, "f" + std::to_string(k)));

    add_relation(G, from_reading_order({{a, params.p}, {b, -params.q}}));
    for (int k = 1; k < params.n; ++k)
        add_relation(G, from_reading_order({{a, params.p},
                                            {f[static_cast<std::size_t>(k - 1)], 1},
                                            {b, -params.q},
                                            {f[static_cast<std::size_t>(k - 1)], -1}}));
    return G;
}

GroupPresentation link_with_unknots_group(const TorusLinkParams& params) {
    validate_params(params);
    GroupPresentation G;
    const int a = add_generator(G, "a");
    const int da = add_generator(G, "dA");
    const int b = add_generator(G, "b");
    const int db = add_generator(G, "dB");
    std::vector<int> f;
    for (int k = 1; k < params.n; ++k)
        f.push_back(add_generator(G, "f" + std::to_string(k)));

    add_relation(G, from_reading_order({{a, 1}, {da, 1}, {a, -1}, {da, -1}}));
    add_relation(G, from_reading_order({{b, 1}, {db, 1}, {b, -1}, {db, -1}}));
    add_relation(G, from_reading_order({{a, params.p}, {b, -params.q}}));
    for (int k = 1; k < params.n; ++k)
        add_relation(G, from_reading_order({{a, params.p},
                                            {f[static_cast<std::size_t>(k - 1)], 1},
                                            {b, -params.q},
                                            {f[static_cast<std::size_t>(k - 1)], -1}}));
    return G;
}

GroupPresentation fill_unknot(const GroupPresentation& G, std::string_view label) {
    const int victim = find_generator(G, label);
    if (victim < 0)
        throw UnknownGenerator("no generator named " + std::string(label));
    GroupPresentation out;
    for (std::size_t i = 0; i < G.generators.size(); ++i)
        if (static_cast<int>(i) != victim)
            add_generator(out, G.generators[i]);
    for (const LetterSeq& rel : G.relations) {
        LetterSeq mapped;
        for (const Letter& l : rel) {
            if (l.gen == victim)
                continue;
            mapped.push_back(Letter{l.gen > victim ? l.gen - 1 : l.gen, l.sign});
        }
        add_relation(out, std::move(mapped));
    }
    return out;
}

GroupPresentation nested_link_group(const LinkSpec& spec) {
    validate_spec(spec);
    if (spec.interior_unknot)
        throw InvalidParams("nested links carry no interior unknot");
    if (!spec.exterior_unknot)
        throw InvalidParams("nested closed form is stated with the exterior unknot; "
                            "fill the top generator to remove it");

    const std::size_t m = spec.levels.size();
    GroupPresentation G;
    std::vector<int> a(m + 1, -1), b(m, -1);
    std::vector<std::vector<int>> f(m);
    for (std::size_t lvl = 0; lvl < m; ++lvl) {
        a[lvl] = add_generator(G, "a" + std::to_string(lvl + 1));
        b[lvl] = add_generator(G, "b" + std::to_string(lvl + 1));
        for (int k = 1; k < spec.levels[lvl].n; ++k)
            f[lvl].push_back(add_generator(G, "f" + std::to_string(lvl + 1) + "_" +
                                                  std::to_string(k)));
    }
    a[m] = add_generator(G, "a" + std::to_string(m + 1));

    for (std::size_t lvl = 0; lvl < m; ++lvl) {
        const TorusLinkParams& P = spec.levels[lvl];
        add_relation(G, from_reading_order({{a[lvl], P.p}, {b[lvl], -P.q}}));
        for (int k = 1; k < P.n; ++k)
            add_relation(G, from_reading_order({{a[lvl], P.p},
                                                {f[lvl][static_cast<std::size_t>(k - 1)], 1},
                                                {b[lvl], -P.q},
                                                {f[lvl][static_cast<std::size_t>(k - 1)], -1}}));
        add_relation(G, from_reading_order({{b[lvl], 1},
                                            {a[lvl + 1], 1},
                                            {b[lvl], -1},
                                            {a[lvl + 1], -1}}));
    }
    return G;
}

std::string nested_engine_top_label(std::size_t level_count) {
    return "l" + std::to_string(level_count) + "_dB";
}

GroupPresentation nested_link_group_engine(const LinkSpec& spec) {
    validate_spec(spec);
    if (spec.interior_unknot)
        throw InvalidParams("nested links carry no interior unknot");
    if (!spec.exterior_unknot)
        throw InvalidParams("nested engine route is stated with the exterior unknot; "
                            "fill the top generator to remove it");

    // Level 1: the link with both companion unknots, interior one filled.
    PushoutInput base = link_groupoids_impl(spec.levels[0], "l1_", true);
    GroupPresentation current = fill_unknot(pushout(base), "l1_dA");

    for (std::size_t lvl = 1; lvl < spec.levels.size(); ++lvl) {
        const TorusLinkParams& P = spec.levels[lvl];
        const std::string prefix = "l" + std::to_string(lvl + 1) + "_";
        const std::string prev_top = nested_engine_top_label(lvl);
        const int n = P.n;

        PushoutInput in;
        in.base = 0;
        in.f_label_prefix = prefix;

        // Interior piece: the cycle on the new base points with the whole
        // previous group attached as loops at object 0, glued by
        // (cycle product) = previous top generator.
        in.part_a.object_count = n;
        std::vector<int> a_edges = add_cycle(in.part_a, prefix + "a", n);
        for (const std::string& label : current.generators)
            add_generator(in.part_a, label, 0, 0);
        for (const LetterSeq& rel : current.relations) {
            LetterSeq shifted;
            shifted.reserve(rel.size());
            for (const Letter& l : rel)
                shifted.push_back(Letter{l.gen + n, l.sign});
            add_relation(in.part_a,
                         Word::from_letters(in.part_a.generators, std::move(shifted), 0));
        }
        const int prev_top_gen = find_generator(in.part_a, prev_top);
        Word cycle_a = cycle_loop(in.part_a, a_edges, 0);
        add_relation(in.part_a,
                     compose(cycle_a, invert(generator_word(in.part_a, prev_top_gen))));

        // Exterior piece and overlap are the standard unknot-bearing ones.
        in.part_b.object_count = n;
        std::vector<int> b_edges = add_cycle(in.part_b, prefix + "b", n);
        int db = add_generator(in.part_b, prefix + "dB", 0, 0);
        Word cycle_b = cycle_loop(in.part_b, b_edges, 0);
        Word loop_b = generator_word(in.part_b, db);
        add_relation(in.part_b, compose(compose(compose(cycle_b, loop_b), invert(cycle_b)),
                                        invert(loop_b)));

        in.overlap.object_count = n;
        for (int k = 0; k < n; ++k)
            add_generator(in.overlap, prefix + "c" + std::to_string(k), k, k);
        for (int k = 0; k < n; ++k) {
            in.include_a.images.push_back(power(cycle_loop(in.part_a, a_edges, k), P.p));
            in.include_b.images.push_back(power(cycle_loop(in.part_b, b_edges, k), P.q));
        }
        in.retract_a = cycle_retraction(in.part_a, a_edges);
        in.retract_b = cycle_retraction(in.part_b, b_edges);

        current = pushout(in);
    }
    return current;
}

GroupPresentation closed_form_group(const LinkSpec& spec) {
    validate_spec(spec);
    if (spec.levels.size() == 1) {
        if (spec.interior_unknot && spec.exterior_unknot)
            return link_with_unknots_group(spec.levels[0]);
        if (spec.interior_unknot)
            return fill_unknot(link_with_unknots_group(spec.levels[0]), "dB");
        if (!spec.exterior_unknot)
            return torus_link_group(spec.levels[0]);
    }
    LinkSpec with_ext = spec;
    with_ext.exterior_unknot = true;
    GroupPresentation G = nested_link_group(with_ext);
    if (!spec.exterior_unknot)
        G = fill_unknot(G, "a" + std::to_string(spec.levels.size() + 1));
    return G;
}

GroupPresentation engine_group(const LinkSpec& spec) {
    validate_spec(spec);
    if (spec.levels.size() == 1) {
        if (spec.interior_unknot && spec.exterior_unknot)
            return pushout(build_unknot_groupoids(spec.levels[0]));
        if (spec.interior_unknot)
            return fill_unknot(pushout(build_unknot_groupoids(spec.levels[0])), "dB");
        if (!spec.exterior_unknot)
            return pushout(build_link_groupoids(spec.levels[0]));
    }
    LinkSpec with_ext = spec;
    with_ext.exterior_unknot = true;
    GroupPresentation G = nested_link_group_engine(with_ext);
    if (!spec.exterior_unknot)
        G = fill_unknot(G, nested_engine_top_label(spec.levels.size()));
    return G;
}

} // namespace linkgroups
