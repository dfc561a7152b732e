#include "necpres/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

namespace necpres {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& s) {
    const size_t hash = s.find('#');
    return hash == std::string::npos ? s : s.substr(0, hash);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == '>' || c == ':' || c == '*' || c == '#' || c == ',' || std::isspace(
                static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::int64_t parse_count(const std::string& tok, int line_no) {
    try {
        size_t used = 0;
        const std::int64_t v = std::stoll(tok, &used);
        if (used != tok.size() || v < 1) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line_no, "malformed count '" + tok + "'");
    }
}

}  // namespace

PartyInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    PartyInstance inst;
    std::map<std::string, int> index;
    bool saw_header = false, in_votes = false, saw_star = false;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(strip_comment(raw));
        if (line.empty()) continue;

        if (!saw_header) {
            const auto toks = split_ws(line);
            if (toks.size() != 2 || toks[0] != "necpres" || toks[1] != "1")
                throw ParseError(line_no, "expected header 'necpres 1'");
            saw_header = true;
            continue;
        }
        if (line.rfind("candidates:", 0) == 0) {
            if (!index.empty()) throw ParseError(line_no, "duplicate candidates line");
            for (const auto& label : split_ws(line.substr(11))) {
                if (!valid_label(label)) throw ParseError(line_no, "bad label '" + label + "'");
                if (index.count(label))
                    throw ParseError(line_no, "duplicate candidate label '" + label + "'");
                index[label] = static_cast<int>(inst.election.labels.size());
                inst.election.labels.push_back(label);
            }
            if (inst.election.labels.empty()) throw ParseError(line_no, "no candidates");
            continue;
        }
        if (line.rfind("party:", 0) == 0) {
            if (in_votes) throw ParseError(line_no, "party line after votes block");
            if (index.empty()) throw ParseError(line_no, "party line before candidates");
            std::vector<int> block;
            for (auto tok : split_ws(line.substr(6))) {
                bool star = false;
                if (tok.size() > 1 && tok[0] == '*') {
                    star = true;
                    tok = tok.substr(1);
                }
                const auto it = index.find(tok);
                if (it == index.end())
                    throw ParseError(line_no, "unknown candidate label '" + tok + "'");
                if (star) {
                    if (saw_star) throw ParseError(line_no, "duplicate '*' marker");
                    saw_star = true;
                    inst.distinguished = it->second;
                }
                block.push_back(it->second);
            }
            if (block.empty()) throw ParseError(line_no, "empty party");
            inst.parties.push_back(std::move(block));
            continue;
        }
        if (line == "votes:") {
            if (in_votes) throw ParseError(line_no, "duplicate votes line");
            in_votes = true;
            continue;
        }
        if (in_votes) {
            const size_t colon = line.find(':');
            if (colon == std::string::npos) throw ParseError(line_no, "vote line needs 'count:'");
            const std::int64_t count = parse_count(strip(line.substr(0, colon)), line_no);
            std::vector<int> order;
            std::string rest = line.substr(colon + 1);
            size_t pos = 0;
            while (pos <= rest.size()) {
                size_t next = rest.find('>', pos);
                if (next == std::string::npos) next = rest.size();
                const std::string tok = strip(rest.substr(pos, next - pos));
                if (tok.empty()) throw ParseError(line_no, "empty entry in vote");
                const auto it = index.find(tok);
                if (it == index.end())
                    throw ParseError(line_no, "unknown candidate label '" + tok + "'");
                order.push_back(it->second);
                pos = next + 1;
                if (next == rest.size()) break;
            }
            inst.election.types.push_back({std::move(order), count});
            continue;
        }
        throw ParseError(line_no, "unexpected line '" + line + "'");
    }

    if (!saw_header) throw ParseError(line_no, "empty input");
    if (inst.election.labels.empty()) throw ParseError(line_no, "no candidates line");
    if (!saw_star) throw ParseError(line_no, "no distinguished candidate ('*' marker)");
    if (inst.election.types.empty()) throw ParseError(line_no, "no voters");

    inst.election.types = compress_voter_types(std::move(inst.election.types),
                                               inst.election.candidate_count());
    validate(inst);
    return inst;
}

std::string serialize_instance(const PartyInstance& instance,
                               const std::vector<std::string>& comments) {
    validate(instance);
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "necpres 1\n";
    out << "candidates:";
    for (const auto& label : instance.election.labels) out << ' ' << label;
    out << "\n";
    for (const auto& block : instance.parties) {
        out << "party:";
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        for (int c : sorted)
            out << ' ' << (c == instance.distinguished ? "*" : "")
                << instance.election.labels[c];
        out << "\n";
    }
    out << "votes:\n";
    // normalized vote order: lexicographic on the index sequence
    std::vector<const VoterType*> types;
    for (const auto& t : instance.election.types) types.push_back(&t);
    std::sort(types.begin(), types.end(),
              [](const VoterType* a, const VoterType* b) { return a->order < b->order; });
    for (const auto* t : types) {
        out << t->count << ':';
        for (size_t i = 0; i < t->order.size(); ++i)
            out << (i ? " > " : " ") << instance.election.labels[t->order[i]];
        out << "\n";
    }
    return out.str();
}

PartyInstance parse_preflib(const std::string& soc_text, const std::string& parties_text) {
    std::istringstream in(soc_text);
    std::string raw;
    int line_no = 0;
    std::map<int, std::string> names;
    int declared = -1;
    std::vector<VoterType> types;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string meta = strip(line.substr(1));
            if (meta.rfind("NUMBER ALTERNATIVES:", 0) == 0)
                declared = std::stoi(strip(meta.substr(20)));
            else if (meta.rfind("ALTERNATIVE NAME ", 0) == 0) {
                const size_t colon = meta.find(':');
                if (colon != std::string::npos) {
                    const int id = std::stoi(meta.substr(17, colon - 17));
                    names[id] = strip(meta.substr(colon + 1));
                }
            }
            continue;
        }
        const size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(line_no, "preflib: expected 'count: a,b,c'");
        const std::int64_t count = parse_count(strip(line.substr(0, colon)), line_no);
        std::vector<int> order;
        std::string rest = line.substr(colon + 1);
        std::replace(rest.begin(), rest.end(), ',', ' ');
        for (const auto& tok : split_ws(rest)) {
            const int id = std::stoi(tok);
            order.push_back(id - 1);  // preflib alternatives are 1-based
        }
        types.push_back({std::move(order), count});
    }
    if (types.empty()) throw ParseError(line_no, "preflib: no vote lines");
    int m = declared;
    if (m < 0) m = static_cast<int>(types[0].order.size());

    PartyInstance inst;
    for (int c = 0; c < m; ++c) {
        const auto it = names.find(c + 1);
        std::string label = it != names.end() ? it->second : "a" + std::to_string(c + 1);
        std::replace(label.begin(), label.end(), ' ', '_');
        inst.election.labels.push_back(label);
    }
    inst.election.types = compress_voter_types(std::move(types), m);

    // sidecar party file: party lines over the imported labels
    std::map<std::string, int> index;
    for (int c = 0; c < m; ++c) index[inst.election.labels[c]] = c;
    std::istringstream pin(parties_text);
    line_no = 0;
    bool saw_star = false;
    while (std::getline(pin, raw)) {
        ++line_no;
        const std::string line = strip(strip_comment(raw));
        if (line.empty()) continue;
        if (line.rfind("party:", 0) != 0)
            throw ParseError(line_no, "party file: expected 'party:' lines");
        std::vector<int> block;
        for (auto tok : split_ws(line.substr(6))) {
            bool star = false;
            if (tok.size() > 1 && tok[0] == '*') {
                star = true;
                tok = tok.substr(1);
            }
            const auto it = index.find(tok);
            if (it == index.end()) throw ParseError(line_no, "unknown label '" + tok + "'");
            if (star) {
                if (saw_star) throw ParseError(line_no, "duplicate '*' marker");
                saw_star = true;
                inst.distinguished = it->second;
            }
            block.push_back(it->second);
        }
        inst.parties.push_back(std::move(block));
    }
    if (!saw_star) throw ParseError(line_no, "party file: no distinguished candidate");
    validate(inst);
    return inst;
}

PartyInstance generate_random(int candidates, int parties, std::int64_t voters, int voter_types,
                              std::uint64_t seed) {
    if (candidates < 1 || parties < 1 || voters < 1 || voter_types < 1)
        throw std::invalid_argument("generate_random: all parameters must be positive");
    if (parties > candidates)
        throw std::invalid_argument("generate_random: more parties than candidates");
    if (voter_types > voters)
        throw std::invalid_argument("generate_random: more voter types than voters");

    std::mt19937_64 rng(seed);
    PartyInstance inst;
    for (int c = 0; c < candidates; ++c) inst.election.labels.push_back("c" + std::to_string(c + 1));

    // counts: one voter per type, remainder distributed uniformly
    std::vector<std::int64_t> counts(voter_types, 1);
    std::uniform_int_distribution<int> pick_type(0, voter_types - 1);
    for (std::int64_t v = voter_types; v < voters; ++v) ++counts[pick_type(rng)];

    std::vector<int> base(candidates);
    for (int c = 0; c < candidates; ++c) base[c] = c;
    for (int t = 0; t < voter_types; ++t) {
        std::vector<int> order = base;
        std::shuffle(order.begin(), order.end(), rng);
        inst.election.types.push_back({std::move(order), counts[t]});
    }
    inst.election.types = compress_voter_types(std::move(inst.election.types), candidates);

    // balanced partition: shuffle and deal round-robin
    std::vector<int> deal = base;
    std::shuffle(deal.begin(), deal.end(), rng);
    inst.parties.assign(parties, {});
    for (int c = 0; c < candidates; ++c) inst.parties[c % parties].push_back(deal[c]);
    for (auto& block : inst.parties) std::sort(block.begin(), block.end());

    std::uniform_int_distribution<int> pick_candidate(0, candidates - 1);
    inst.distinguished = pick_candidate(rng);
    validate(inst);
    return inst;
}

Formula22E3 parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    Formula22E3 f;
    bool saw_problem = false;
    std::vector<int> current;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(raw);
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            const auto toks = split_ws(line);
            if (toks.size() != 4 || toks[1] != "cnf")
                throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
            f.variables = std::stoi(toks[2]);
            saw_problem = true;
            continue;
        }
        if (!saw_problem) throw ParseError(line_no, "clause before 'p cnf' line");
        for (const auto& tok : split_ws(line)) {
            const int lit = std::stoi(tok);
            if (lit == 0) {
                if (current.size() != 3)
                    throw ParseError(line_no, "clause must have exactly 3 literals");
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!current.empty()) throw ParseError(line_no, "unterminated clause (missing 0)");
    validate_formula(f);
    return f;
}

HittingSetInstance parse_hitting_set(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    HittingSetInstance h;
    bool saw_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(strip_comment(raw));
        if (line.empty()) continue;
        const auto toks = split_ws(line);
        if (!saw_header) {
            if (toks.size() != 2) throw ParseError(line_no, "expected header '<elements> <k>'");
            h.elements = std::stoi(toks[0]);
            h.budget = std::stoi(toks[1]);
            saw_header = true;
            continue;
        }
        std::vector<int> set;
        for (const auto& tok : toks) set.push_back(std::stoi(tok) - 1);
        h.sets.push_back(std::move(set));
    }
    validate_hitting_set(h);
    return h;
}

MulticoloredGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    MulticoloredGraph g;
    bool saw_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(strip_comment(raw));
        if (line.empty()) continue;
        const auto toks = split_ws(line);
        if (!saw_header) {
            if (toks.size() != 2) throw ParseError(line_no, "expected header '<k> <r>'");
            g.classes = std::stoi(toks[0]);
            g.class_size = std::stoi(toks[1]);
            saw_header = true;
            continue;
        }
        if (toks.size() != 4) throw ParseError(line_no, "expected edge 'i a j b'");
        int i = std::stoi(toks[0]) - 1, a = std::stoi(toks[1]) - 1;
        int j = std::stoi(toks[2]) - 1, b = std::stoi(toks[3]) - 1;
        if (i > j) {
            std::swap(i, j);
            std::swap(a, b);
        }
        g.edges.push_back({i, a, j, b});
    }
    validate_graph(g);
    return g;
}

std::string verdict_report(const PartyInstance& instance, const Verdict& verdict, double wall_ms) {
    nlohmann::ordered_json doc;
    doc["format"] = "necpres-verdict/1";
    doc["rule"] = verdict.rule;
    doc["solver"] = verdict.solver;
    doc["answer"] = verdict.yes ? "YES" : "NO";
    if (verdict.certificate) {
        nlohmann::ordered_json cert;
        std::vector<std::string> nominees;
        for (int c : verdict.certificate->nominees)
            nominees.push_back(instance.election.labels[c]);
        cert["nominees"] = nominees;
        cert["witness"] = instance.election.labels[verdict.certificate->witness];
        doc["certificate"] = cert;
    }
    if (!verdict.tiebreak.empty()) doc["tiebreak"] = verdict.tiebreak;
    nlohmann::ordered_json stats;
    stats["candidates"] = instance.election.candidate_count();
    stats["voters"] = instance.election.voter_count();
    stats["voter_types"] = instance.election.type_count();
    stats["parties"] = instance.party_count();
    stats["max_party_size"] = instance.max_party_size();
    stats["guesses"] = verdict.guesses;
    stats["wall_ms"] = wall_ms;
    doc["stats"] = stats;
    doc["notes"] = verdict.notes;
    return doc.dump(2) + "\n";
}

Certificate parse_certificate(const PartyInstance& instance, const std::string& report_json,
                              std::string* rule_out) {
    const auto doc = nlohmann::json::parse(report_json);
    if (rule_out) *rule_out = doc.at("rule").get<std::string>();
    if (doc.at("answer").get<std::string>() != "NO")
        throw std::invalid_argument("report answer is YES: nothing to check");
    std::map<std::string, int> index;
    for (int c = 0; c < instance.election.candidate_count(); ++c)
        index[instance.election.labels[c]] = c;
    Certificate cert;
    for (const auto& label : doc.at("certificate").at("nominees")) {
        const auto it = index.find(label.get<std::string>());
        if (it == index.end())
            throw std::invalid_argument("certificate nominee '" + label.get<std::string>() +
                                        "' is not a candidate");
        cert.nominees.push_back(it->second);
    }
    std::sort(cert.nominees.begin(), cert.nominees.end());
    const std::string witness = doc.at("certificate").at("witness").get<std::string>();
    const auto it = index.find(witness);
    if (it == index.end())
        throw std::invalid_argument("certificate witness '" + witness + "' is not a candidate");
    cert.witness = it->second;
    return cert;
}

}  // namespace necpres
