#include "linkgroups/format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace linkgroups {

std::string word_to_string(const GroupPresentation& G, const LetterSeq& w) {
    if (w.empty())
        return "1";
    std::string out;
    // Letters are stored in application order; print right-to-left.
    std::size_t i = w.size();
    while (i > 0) {
        std::size_t j = i;
        while (j > 0 && w[j - 1].gen == w[i - 1].gen && w[j - 1].sign == w[i - 1].sign)
            --j;
        const int exp = w[i - 1].sign * static_cast<int>(i - j);
        if (!out.empty())
            out += "*";
        out += G.generators[static_cast<std::size_t>(w[i - 1].gen)];
        if (exp != 1)
            out += "^" + std::to_string(exp);
        i = j;
    }
    return out;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace

LetterSeq parse_word(const GroupPresentation& G, std::string_view text) {
    std::string compact;
    std::vector<std::size_t> offset; // position in the original text
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            compact += text[i];
            offset.push_back(i);
        }
    auto where = [&](std::size_t i) { return i < offset.size() ? offset[i] : text.size(); };

    if (compact.empty() || compact == "1")
        return {};

    LetterSeq reading;
    std::size_t i = 0;
    while (true) {
        if (i >= compact.size() || !ident_start(compact[i]))
            throw ParseError("expected a generator name", where(i));
        std::size_t start = i;
        while (i < compact.size() && ident_char(compact[i]))
            ++i;
        const std::string name = compact.substr(start, i - start);
        const int gen = find_generator(G, name);
        if (gen < 0)
            throw ParseError("unknown generator " + name, where(start));

        int exp = 1;
        if (i < compact.size() && compact[i] == '^') {
            ++i;
            std::size_t num_start = i;
            if (i < compact.size() && compact[i] == '-')
                ++i;
            while (i < compact.size() && std::isdigit(static_cast<unsigned char>(compact[i])))
                ++i;
            if (i == num_start || (i == num_start + 1 && compact[num_start] == '-'))
                throw ParseError("expected an integer exponent", where(num_start));
            exp = std::stoi(compact.substr(num_start, i - num_start));
        }
        const int sign = exp > 0 ? 1 : -1;
        for (int t = 0; t < std::abs(exp); ++t)
            reading.push_back(Letter{gen, sign});

        if (i == compact.size())
            break;
        if (compact[i] != '*')
            throw ParseError("expected '*' between factors", where(i));
        ++i;
    }
    std::reverse(reading.begin(), reading.end());
    return reduce_letters(std::move(reading));
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    long long integer() {
        std::size_t start = pos;
        if (!done() && (peek() == '-' || peek() == '+'))
            ++pos;
        std::size_t digits = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos;
        if (pos == digits)
            throw ParseError("expected an integer", start);
        return std::stoll(std::string(text.substr(start, pos - start)));
    }

    void expect(char c) {
        if (done() || peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
};

} // namespace

LinkSpec parse_spec(std::string_view raw) {
    std::string squeezed;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            squeezed += c;

    LinkSpec spec;
    std::string body = squeezed;
    // Flags are suffixes in either order.
    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (const auto& [suffix, flag] :
             {std::pair<std::string, bool LinkSpec::*>{"+extA", &LinkSpec::interior_unknot},
              std::pair<std::string, bool LinkSpec::*>{"+extB", &LinkSpec::exterior_unknot}}) {
            if (body.size() >= suffix.size() &&
                body.compare(body.size() - suffix.size(), suffix.size(), suffix) == 0) {
                if (spec.*flag)
                    throw ParseError("duplicate flag " + suffix, body.size() - suffix.size());
                spec.*flag = true;
                body.erase(body.size() - suffix.size());
                stripped = true;
            }
        }
    }
    if (body.find('+') != std::string::npos)
        throw ParseError("unrecognized flag", body.find('+'));

    Cursor cur{body, 0};
    while (true) {
        TorusLinkParams level;
        long long n = cur.integer();
        cur.expect(':');
        long long p = cur.integer();
        cur.expect(',');
        long long q = cur.integer();
        level.n = static_cast<int>(n);
        level.p = static_cast<int>(p);
        level.q = static_cast<int>(q);
        spec.levels.push_back(level);
        if (cur.done())
            break;
        cur.expect('/');
    }
    validate_spec(spec);
    return spec;
}

std::string spec_to_string(const LinkSpec& spec) {
    std::string out;
    for (std::size_t i = 0; i < spec.levels.size(); ++i) {
        if (i > 0)
            out += "/";
        out += std::to_string(spec.levels[i].n) + ":" + std::to_string(spec.levels[i].p) +
               "," + std::to_string(spec.levels[i].q);
    }
    if (spec.interior_unknot)
        out += "+extA";
    if (spec.exterior_unknot)
        out += "+extB";
    return out;
}

std::string to_text(const OutputDocument& doc) {
    std::ostringstream out;
    out << "spec: " << doc.spec << "\n";
    out << "method: " << doc.method << "\n";
    out << "generators:";
    for (std::size_t i = 0; i < doc.group.generators.size(); ++i)
        out << (i ? ", " : " ") << doc.group.generators[i];
    if (doc.group.generators.empty())
        out << " (none)";
    out << "\n";
    out << "relations:";
    if (doc.group.relations.empty())
        out << " (none)";
    out << "\n";
    for (const LetterSeq& rel : doc.group.relations)
        out << "  " << word_to_string(doc.group, rel) << "\n";
    out << "abelian: rank " << doc.abelian.free_rank << ", torsion [";
    for (std::size_t i = 0; i < doc.abelian.torsion.size(); ++i)
        out << (i ? ", " : "") << doc.abelian.torsion[i];
    out << "]\n";
    if (doc.fp) {
        out << "fingerprint:";
        for (std::size_t i = 0; i < doc.fp->counts.size(); ++i)
            out << " " << (i + 1) << ":" << doc.fp->counts[i];
        out << "\n";
    }
    if (doc.comparison) {
        out << "comparison: " << (doc.comparison->match() ? "match" : "MISMATCH")
            << " (abelian " << (doc.comparison->abelian_match ? "yes" : "no");
        if (doc.comparison->fingerprint_match)
            out << ", fingerprint " << (*doc.comparison->fingerprint_match ? "yes" : "no");
        out << ")\n";
    }
    return out.str();
}

std::string to_json(const OutputDocument& doc) {
    nlohmann::json j;
    j["spec"] = doc.spec;
    j["method"] = doc.method;
    j["generators"] = doc.group.generators;
    std::vector<std::string> rels;
    rels.reserve(doc.group.relations.size());
    for (const LetterSeq& rel : doc.group.relations)
        rels.push_back(word_to_string(doc.group, rel));
    j["relations"] = rels;
    j["abelian"] = {{"rank", doc.abelian.free_rank}, {"torsion", doc.abelian.torsion}};
    if (doc.fp) {
        nlohmann::json fp = nlohmann::json::object();
        for (std::size_t i = 0; i < doc.fp->counts.size(); ++i)
            fp[std::to_string(i + 1)] = doc.fp->counts[i];
        j["fingerprint"] = fp;
    }
    if (doc.comparison) {
        nlohmann::json cmp;
        cmp["abelian_match"] = doc.comparison->abelian_match;
        if (doc.comparison->fingerprint_match)
            cmp["fingerprint_match"] = *doc.comparison->fingerprint_match;
        cmp["match"] = doc.comparison->match();
        j["comparison"] = cmp;
    }
    return j.dump(2) + "\n";
}

std::string to_algebra(const OutputDocument& doc) {
    std::ostringstream out;
    out << "F := FreeGroup(";
    for (std::size_t i = 0; i < doc.group.generators.size(); ++i)
        out << (i ? ", " : "") << '"' << doc.group.generators[i] << '"';
    out << ");\n";
    out << "G := F / [ ";
    for (std::size_t i = 0; i < doc.group.relations.size(); ++i)
        out << (i ? ", " : "") << word_to_string(doc.group, doc.group.relations[i]);
    out << " ];\n";
    return out.str();
}

} // namespace linkgroups
