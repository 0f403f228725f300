#include "linkgroups/analysis.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace linkgroups {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<BigInt>>;

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Diagonalizes M in place and returns the nonzero diagonal entries with the
// divisibility chain enforced.
std::vector<BigInt> smith_invariants(Matrix M) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
    std::vector<BigInt> diagonal;

    int t = 0;
    while (t < rows && t < cols) {
        // Pick the entry of least magnitude as pivot.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (M[i][j] != 0 &&
                    (pi < 0 || big_abs(M[i][j]) < big_abs(M[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0)
            break;
        std::swap(M[t], M[pi]);
        for (int i = 0; i < rows; ++i)
            std::swap(M[i][t], M[i][pj]);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = t + 1; i < rows; ++i) {
                while (M[i][t] != 0) {
                    BigInt q = M[i][t] / M[t][t];
                    for (int j = t; j < cols; ++j)
                        M[i][j] -= q * M[t][j];
                    if (M[i][t] != 0) {
                        std::swap(M[t], M[i]); // strictly smaller pivot
                        settled = false;
                    }
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                while (M[t][j] != 0) {
                    BigInt q = M[t][j] / M[t][t];
                    for (int i = t; i < rows; ++i)
                        M[i][j] -= q * M[i][t];
                    if (M[t][j] != 0) {
                        for (int i = 0; i < rows; ++i)
                            std::swap(M[i][t], M[i][j]);
                        settled = false;
                    }
                }
            }
        }

        // The pivot must divide the rest of the submatrix before moving on.
        bool divides = true;
        for (int i = t + 1; i < rows && divides; ++i)
            for (int j = t + 1; j < cols && divides; ++j)
                if (M[i][j] % M[t][t] != 0) {
                    for (int jj = t; jj < cols; ++jj)
                        M[t][jj] += M[i][jj];
                    divides = false;
                }
        if (!divides)
            continue;

        diagonal.push_back(big_abs(M[t][t]));
        ++t;
    }

    // Enforce d1 | d2 | ... by pairwise gcd/lcm exchanges.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diagonal.size(); ++i)
            for (std::size_t j = i + 1; j < diagonal.size(); ++j)
                if (diagonal[j] % diagonal[i] != 0) {
                    BigInt g = boost::multiprecision::gcd(diagonal[i], diagonal[j]);
                    BigInt l = diagonal[i] / g * diagonal[j];
                    diagonal[i] = g;
                    diagonal[j] = l;
                    changed = true;
                }
    }
    std::sort(diagonal.begin(), diagonal.end());
    return diagonal;
}

} // namespace

AbelianInvariants abelianize(const GroupPresentation& G) {
    const std::size_t cols = G.generators.size();
    Matrix M;
    M.reserve(G.relations.size());
    for (const LetterSeq& rel : G.relations) {
        std::vector<BigInt> row(cols, 0);
        for (const Letter& l : rel)
            row[static_cast<std::size_t>(l.gen)] += l.sign;
        M.push_back(std::move(row));
    }

    AbelianInvariants out;
    std::vector<BigInt> diag = smith_invariants(std::move(M));
    out.free_rank = static_cast<int>(cols) - static_cast<int>(diag.size());
    for (const BigInt& d : diag)
        if (d > 1)
            out.torsion.push_back(d.convert_to<long long>());
    return out;
}

namespace {

using Perm = std::vector<int>;

std::vector<Perm> symmetric_group(int k) {
    Perm p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

Perm invert_perm(const Perm& p) {
    Perm inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return inv;
}

struct HomSearch {
    const GroupPresentation& G;
    std::vector<Perm> perms;
    std::vector<Perm> inverses;
    std::vector<int> order;            // generator index assigned at each depth
    std::vector<std::vector<int>> due; // relations checkable once depth is assigned
    std::vector<int> assigned;         // generator -> perm index, -1 if not yet
    int k = 0;
    long long count = 0;

    bool relation_holds(const LetterSeq& rel) const {
        Perm m(static_cast<std::size_t>(k));
        std::iota(m.begin(), m.end(), 0);
        for (const Letter& l : rel) {
            const Perm& p = l.sign > 0
                                ? perms[static_cast<std::size_t>(
                                      assigned[static_cast<std::size_t>(l.gen)])]
                                : inverses[static_cast<std::size_t>(
                                      assigned[static_cast<std::size_t>(l.gen)])];
            for (int& v : m)
                v = p[static_cast<std::size_t>(v)];
        }
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != static_cast<int>(i))
                return false;
        return true;
    }

    void search(std::size_t depth) {
        if (depth == order.size()) {
            ++count;
            return;
        }
        const int gen = order[depth];
        for (std::size_t p = 0; p < perms.size(); ++p) {
            assigned[static_cast<std::size_t>(gen)] = static_cast<int>(p);
            bool ok = true;
            for (int rel_index : due[depth])
                if (!relation_holds(G.relations[static_cast<std::size_t>(rel_index)])) {
                    ok = false;
                    break;
                }
            if (ok)
                search(depth + 1);
        }
        assigned[static_cast<std::size_t>(gen)] = -1;
    }
};

} // namespace

long long hom_count(const GroupPresentation& G, int k, int degree_cap) {
    if (k < 1)
        throw DegreeTooLarge("degree must be at least 1");
    if (k > degree_cap)
        throw DegreeTooLarge("degree " + std::to_string(k) + " exceeds the cap of " +
                             std::to_string(degree_cap));

    const std::size_t n_gens = G.generators.size();
    HomSearch s{G, {}, {}, {}, {}, {}, k, 0};
    s.perms = symmetric_group(k);
    s.inverses.reserve(s.perms.size());
    for (const Perm& p : s.perms)
        s.inverses.push_back(invert_perm(p));

    // Assign the busiest generators first so relations complete early.
    std::vector<long long> occurrences(n_gens, 0);
    for (const LetterSeq& rel : G.relations)
        for (const Letter& l : rel)
            ++occurrences[static_cast<std::size_t>(l.gen)];
    s.order.resize(n_gens);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) {
                         return occurrences[static_cast<std::size_t>(a)] >
                                occurrences[static_cast<std::size_t>(b)];
                     });

    std::vector<int> depth_of(n_gens, 0);
    for (std::size_t d = 0; d < n_gens; ++d)
        depth_of[static_cast<std::size_t>(s.order[d])] = static_cast<int>(d);
    s.due.resize(n_gens);
    for (std::size_t r = 0; r < G.relations.size(); ++r) {
        int last = -1;
        for (const Letter& l : G.relations[r])
            last = std::max(last, depth_of[static_cast<std::size_t>(l.gen)]);
        if (last >= 0)
            s.due[static_cast<std::size_t>(last)].push_back(static_cast<int>(r));
        // A relation with no letters is the identity and holds trivially.
    }

    s.assigned.assign(n_gens, -1);
    s.search(0);
    return s.count;
}

HomFingerprint fingerprint(const GroupPresentation& G, int kmax, int degree_cap) {
    if (kmax < 1)
        throw DegreeTooLarge("fingerprint needs kmax >= 1");
    HomFingerprint fp;
    fp.counts.reserve(static_cast<std::size_t>(kmax));
    for (int k = 1; k <= kmax; ++k)
        fp.counts.push_back(hom_count(G, k, degree_cap));
    return fp;
}

namespace {

LetterSeq cyclic_reduce(LetterSeq w) {
    w = reduce_letters(std::move(w));
    while (w.size() >= 2 && w.front().gen == w.back().gen &&
           w.front().sign == -w.back().sign) {
        w.pop_back();
        w.erase(w.begin());
    }
    return w;
}

bool letters_less(const LetterSeq& a, const LetterSeq& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].gen != b[i].gen)
            return a[i].gen < b[i].gen;
        if (a[i].sign != b[i].sign)
            return a[i].sign < b[i].sign;
    }
    return false;
}

// Least rotation of the word or its inverse; relators that agree up to
// cyclic rotation and inversion present the same quotient.
LetterSeq cyclic_key(const LetterSeq& w) {
    LetterSeq best = w;
    for (const LetterSeq& base : {w, invert_letters(w)}) {
        LetterSeq rot = base;
        for (std::size_t i = 0; i < base.size(); ++i) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (letters_less(rot, best))
                best = rot;
        }
    }
    return best;
}

LetterSeq substitute_group(const LetterSeq& w, int sym, const LetterSeq& repl) {
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

GroupPresentation tietze_simplify(const GroupPresentation& G, int budget) {
    GroupPresentation P = G;
    int steps = 0;

    auto normalize = [&]() {
        std::vector<LetterSeq> kept;
        std::vector<LetterSeq> keys;
        for (LetterSeq& rel : P.relations) {
            LetterSeq r = cyclic_reduce(std::move(rel));
            if (r.empty()) {
                ++steps;
                continue;
            }
            LetterSeq key = cyclic_key(r);
            if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
                ++steps;
                continue;
            }
            keys.push_back(std::move(key));
            kept.push_back(std::move(r));
        }
        P.relations = std::move(kept);
    };

    normalize();
    while (steps < budget) {
        // Find the shortest relation in which some generator occurs once.
        int best_rel = -1, best_pos = -1;
        for (std::size_t r = 0; r < P.relations.size(); ++r) {
            const LetterSeq& w = P.relations[r];
            if (best_rel >= 0 &&
                w.size() >= P.relations[static_cast<std::size_t>(best_rel)].size())
                continue;
            for (std::size_t i = 0; i < w.size(); ++i) {
                int occurrences = 0;
                for (const Letter& l : w)
                    occurrences += l.gen == w[i].gen;
                if (occurrences == 1) {
                    best_rel = static_cast<int>(r);
                    best_pos = static_cast<int>(i);
                    break;
                }
            }
        }
        if (best_rel < 0)
            break;

        const LetterSeq w = P.relations[static_cast<std::size_t>(best_rel)];
        const int sym = w[static_cast<std::size_t>(best_pos)].gen;
        LetterSeq rot(w.begin() + best_pos + 1, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + best_pos);
        LetterSeq repl = w[static_cast<std::size_t>(best_pos)].sign > 0
                             ? reduce_letters(invert_letters(rot))
                             : reduce_letters(std::move(rot));

        P.relations.erase(P.relations.begin() + best_rel);
        for (LetterSeq& rel : P.relations)
            rel = substitute_group(rel, sym, repl);

        // Drop the generator and close the index gap.
        P.generators.erase(P.generators.begin() + sym);
        for (LetterSeq& rel : P.relations)
            for (Letter& l : rel)
                if (l.gen > sym)
                    --l.gen;
        ++steps;
        normalize();
    }
    return P;
}

} // namespace linkgroups
