#include "linkgroups/presentation.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace linkgroups {

int add_generator(GroupoidPresentation& G, std::string label, ObjectId source, ObjectId target) {
    G.generators.push_back(Generator{std::move(label), source, target});
    return static_cast<int>(G.generators.size()) - 1;
}

bool add_relation(GroupoidPresentation& G, const Word& w) {
    if (!w.is_loop())
        throw RelationNotLoop("relation from object " + std::to_string(w.source()) +
                              " to object " + std::to_string(w.target()) + " is not a loop");
    Word reduced = free_reduce(w);
    if (reduced.is_identity())
        return false;
    if (std::find(G.relations.begin(), G.relations.end(), reduced) != G.relations.end())
        return false;
    G.relations.push_back(std::move(reduced));
    return true;
}

Word generator_word(const GroupoidPresentation& G, int index, int sign) {
    return Word::generator(G.generators, index, sign);
}

int find_generator(const GroupoidPresentation& G, std::string_view label) {
    for (std::size_t i = 0; i < G.generators.size(); ++i)
        if (G.generators[i].label == label)
            return static_cast<int>(i);
    return -1;
}

void validate(const GroupoidPresentation& G) {
    if (G.object_count < 1)
        throw DanglingEndpoint("presentation needs at least one object");
    std::set<std::string> seen;
    for (const Generator& g : G.generators) {
        if (g.source < 0 || g.source >= G.object_count || g.target < 0 ||
            g.target >= G.object_count)
            throw DanglingEndpoint("generator " + g.label + " has an endpoint outside the " +
                                   std::to_string(G.object_count) + "-object set");
        if (!seen.insert(g.label).second)
            throw DuplicateLabel("generator label " + g.label + " appears twice");
    }
    for (const Word& w : G.relations) {
        if (!w.is_loop())
            throw RelationNotLoop("relation is not a loop (ends at distinct objects " +
                                  std::to_string(w.source()) + ", " +
                                  std::to_string(w.target()) + ")");
        for (const Letter& l : w.letters())
            if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= G.generators.size())
                throw DanglingEndpoint("relation references a generator outside the table");
    }
}

bool is_connected(const GroupoidPresentation& G) {
    if (G.object_count <= 1)
        return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(G.object_count));
    for (const Generator& g : G.generators) {
        adj[static_cast<std::size_t>(g.source)].push_back(g.target);
        adj[static_cast<std::size_t>(g.target)].push_back(g.source);
    }
    std::vector<bool> seen(static_cast<std::size_t>(G.object_count), false);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = true;
    int reached = 1;
    while (!frontier.empty()) {
        int x = frontier.front();
        frontier.pop();
        for (int y : adj[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                ++reached;
                frontier.push(y);
            }
    }
    return reached == G.object_count;
}

std::vector<Word> object_group_generators(const GroupoidPresentation& G, ObjectId x) {
    validate(G);
    if (x < 0 || x >= G.object_count)
        throw DanglingEndpoint("object " + std::to_string(x) + " outside the object set");
    if (!G.relations.empty())
        throw UnsupportedShape("only free presentations are supported here");

    const bool all_loops = std::all_of(G.generators.begin(), G.generators.end(),
                                       [](const Generator& g) { return g.source == g.target; });
    if (all_loops) {
        std::vector<Word> out;
        for (std::size_t i = 0; i < G.generators.size(); ++i)
            if (G.generators[i].source == x)
                out.push_back(generator_word(G, static_cast<int>(i)));
        return out;
    }

    // Otherwise require a single cycle visiting every object: each object
    // must meet exactly two edge endpoints.
    if (static_cast<int>(G.generators.size()) != G.object_count)
        throw UnsupportedShape("graph is neither disjoint loops nor a single cycle");
    std::vector<std::vector<std::pair<int, int>>> incident(
        static_cast<std::size_t>(G.object_count)); // (generator, sign leaving the object)
    for (std::size_t i = 0; i < G.generators.size(); ++i) {
        const Generator& g = G.generators[i];
        if (g.source == g.target)
            throw UnsupportedShape("graph mixes loops with connecting edges");
        incident[static_cast<std::size_t>(g.source)].push_back({static_cast<int>(i), +1});
        incident[static_cast<std::size_t>(g.target)].push_back({static_cast<int>(i), -1});
    }
    for (const auto& inc : incident)
        if (inc.size() != 2)
            throw UnsupportedShape("graph is not a single cycle through all objects");
    if (!is_connected(G))
        throw UnsupportedShape("graph is not a single cycle through all objects");

    // Walk the cycle once starting at x.
    LetterSeq letters;
    ObjectId cursor = x;
    int last_gen = -1;
    for (int step = 0; step < G.object_count; ++step) {
        const auto& inc = incident[static_cast<std::size_t>(cursor)];
        const auto& pick = inc[0].first == last_gen ? inc[1] : inc[0];
        int gen = pick.first;
        int sign = pick.second;
        letters.push_back(Letter{gen, sign});
        const Generator& g = G.generators[static_cast<std::size_t>(gen)];
        cursor = sign > 0 ? g.target : g.source;
        last_gen = gen;
    }
    if (cursor != x)
        throw UnsupportedShape("graph is not a single cycle through all objects");
    return {Word::from_letters(G.generators, std::move(letters), x)};
}

int add_generator(GroupPresentation& G, std::string label) {
    G.generators.push_back(std::move(label));
    return static_cast<int>(G.generators.size()) - 1;
}

bool add_relation(GroupPresentation& G, LetterSeq w) {
    LetterSeq reduced = reduce_letters(std::move(w));
    if (reduced.empty())
        return false;
    if (std::find(G.relations.begin(), G.relations.end(), reduced) != G.relations.end())
        return false;
    G.relations.push_back(std::move(reduced));
    return true;
}

int find_generator(const GroupPresentation& G, std::string_view label) {
    for (std::size_t i = 0; i < G.generators.size(); ++i)
        if (G.generators[i] == label)
            return static_cast<int>(i);
    return -1;
}

bool canonically_equal(const GroupPresentation& a, const GroupPresentation& b) {
    if (a.generators.size() != b.generators.size())
        return false;
    auto key = [](const GroupPresentation& G) {
        std::vector<LetterSeq> rels = G.relations;
        for (LetterSeq& r : rels)
            r = reduce_letters(std::move(r));
        std::sort(rels.begin(), rels.end(), [](const LetterSeq& x, const LetterSeq& y) {
            if (x.size() != y.size())
                return x.size() < y.size();
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i].gen != y[i].gen)
                    return x[i].gen < y[i].gen;
                if (x[i].sign != y[i].sign)
                    return x[i].sign < y[i].sign;
            }
            return false;
        });
        return rels;
    };
    return key(a) == key(b);
}

void validate_retraction(const GroupoidPresentation& G, const Retraction& R) {
    if (R.base < 0 || R.base >= G.object_count)
        throw ConnectorInvalid("base object outside the object set");
    if (R.connectors.size() != static_cast<std::size_t>(G.object_count))
        throw ConnectorInvalid("need one connector per object, got " +
                               std::to_string(R.connectors.size()));
    for (int y = 0; y < G.object_count; ++y) {
        const Word& c = R.connectors[static_cast<std::size_t>(y)];
        if (c.source() != R.base || c.target() != y)
            throw ConnectorInvalid("connector for object " + std::to_string(y) +
                                   " runs " + std::to_string(c.source()) + " -> " +
                                   std::to_string(c.target()));
        for (const Letter& l : c.letters())
            if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= G.generators.size())
                throw ConnectorInvalid("connector references a generator outside the table");
    }
    if (!R.connectors[static_cast<std::size_t>(R.base)].is_identity())
        throw ConnectorInvalid("connector at the base must be the identity");
}

namespace {

LetterSeq substitute(const LetterSeq& w, int sym, const LetterSeq& repl) {
    LetterSeq out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (l.gen != sym) {
            out.push_back(l);
        } else if (l.sign > 0) {
            out.insert(out.end(), repl.begin(), repl.end());
        } else {
            LetterSeq inv = invert_letters(repl);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return reduce_letters(std::move(out));
}

} // namespace

RetractResult retract(const GroupoidPresentation& G, const Retraction& R) {
    validate(G);
    if (!is_connected(G))
        throw NotConnected("cannot retract a disconnected groupoid presentation");
    validate_retraction(G, R);

    const int n_syms = static_cast<int>(G.generators.size());
    std::vector<LetterSeq> image(static_cast<std::size_t>(n_syms));
    std::vector<bool> eliminated(static_cast<std::size_t>(n_syms), false);
    for (int i = 0; i < n_syms; ++i)
        image[static_cast<std::size_t>(i)] = LetterSeq{Letter{i, 1}};

    // Each connector word, read letter-for-letter over the generator
    // symbols, is a relator of the object group: the retraction sends the
    // connector to the identity loop at the base.  These relators are what
    // eliminate the spanning-tree generators.
    std::vector<LetterSeq> connector_relators;
    for (int y = 0; y < G.object_count; ++y) {
        if (y == R.base)
            continue;
        LetterSeq w = reduce_letters(R.connectors[static_cast<std::size_t>(y)].letters());
        if (!w.empty() &&
            std::find(connector_relators.begin(), connector_relators.end(), w) ==
                connector_relators.end())
            connector_relators.push_back(std::move(w));
    }

    // Relations conjugated to the base along their object's connector.
    std::vector<LetterSeq> relation_relators;
    for (const Word& rho : G.relations) {
        const Word& conn = R.connectors[static_cast<std::size_t>(rho.source())];
        Word at_base = compose(invert(conn), compose(rho, conn));
        relation_relators.push_back(at_base.letters());
    }

    auto eliminate = [&](int sym, const LetterSeq& repl) {
        eliminated[static_cast<std::size_t>(sym)] = true;
        image[static_cast<std::size_t>(sym)] = repl;
        for (LetterSeq& im : image)
            im = substitute(im, sym, repl);
        for (LetterSeq& w : connector_relators)
            w = substitute(w, sym, repl);
        for (LetterSeq& w : relation_relators)
            w = substitute(w, sym, repl);
    };

    // Consume connector relators, shortest first: a single-letter relator
    // forces that generator to the identity; otherwise solve for a symbol
    // that occurs exactly once.  Tree-path connectors resolve fully this
    // way; anything left over stays in the output as a genuine relator.
    bool progress = true;
    while (progress) {
        progress = false;
        std::stable_sort(connector_relators.begin(), connector_relators.end(),
                         [](const LetterSeq& a, const LetterSeq& b) {
                             return a.size() < b.size();
                         });
        for (std::size_t r = 0; r < connector_relators.size(); ++r) {
            const LetterSeq w = connector_relators[r];
            if (w.empty()) {
                connector_relators.erase(connector_relators.begin() +
                                         static_cast<std::ptrdiff_t>(r));
                progress = true;
                break;
            }
            int pick = -1;
            for (std::size_t i = 0; i < w.size(); ++i) {
                int sym = w[i].gen;
                if (eliminated[static_cast<std::size_t>(sym)])
                    continue;
                int occurrences = 0;
                for (const Letter& l : w)
                    occurrences += l.gen == sym;
                if (occurrences == 1) {
                    pick = static_cast<int>(i);
                    break;
                }
            }
            if (pick < 0)
                continue;
            // Rotate the relator so the picked letter is removable:
            // ... w = u g^e v = 1  =>  g^e = (v u)^(-1).
            LetterSeq rot(w.begin() + pick + 1, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + pick);
            LetterSeq repl = w[static_cast<std::size_t>(pick)].sign > 0
                                 ? reduce_letters(invert_letters(rot))
                                 : reduce_letters(std::move(rot));
            int sym = w[static_cast<std::size_t>(pick)].gen;
            connector_relators.erase(connector_relators.begin() +
                                     static_cast<std::ptrdiff_t>(r));
            eliminate(sym, repl);
            progress = true;
            break;
        }
    }

    RetractResult out;
    std::vector<int> out_index(static_cast<std::size_t>(n_syms), -1);
    for (int i = 0; i < n_syms; ++i)
        if (!eliminated[static_cast<std::size_t>(i)])
            out_index[static_cast<std::size_t>(i)] =
                add_generator(out.group, G.generators[static_cast<std::size_t>(i)].label);

    auto remap = [&](const LetterSeq& w) {
        LetterSeq mapped;
        mapped.reserve(w.size());
        for (const Letter& l : w)
            mapped.push_back(Letter{out_index[static_cast<std::size_t>(l.gen)], l.sign});
        return mapped;
    };

    for (const LetterSeq& w : connector_relators)
        add_relation(out.group, remap(w));
    for (const LetterSeq& w : relation_relators)
        add_relation(out.group, remap(w));

    out.generator_images.reserve(static_cast<std::size_t>(n_syms));
    for (int i = 0; i < n_syms; ++i)
        out.generator_images.push_back(remap(image[static_cast<std::size_t>(i)]));
    return out;
}

LetterSeq rewrite_loop(const RetractResult& r, const Word& loop) {
    LetterSeq out;
    for (const Letter& l : loop.letters()) {
        if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= r.generator_images.size())
            throw DanglingEndpoint("loop references a generator outside the retracted table");
        const LetterSeq& im = r.generator_images[static_cast<std::size_t>(l.gen)];
        if (l.sign > 0) {
            out.insert(out.end(), im.begin(), im.end());
        } else {
            LetterSeq inv = invert_letters(im);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    return reduce_letters(std::move(out));
}

} // namespace linkgroups
