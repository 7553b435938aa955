#include "onesided/formats.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace onesided {

namespace {

using nlohmann::json;

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int parse_int_token(const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("expected an integer for ") + what + ", got '" +
                                    tok + "'");
    }
}

// "key=value" with an integer value.
int parse_kv(const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0)
        throw std::invalid_argument("expected '" + key + "=<int>', got '" + tok + "'");
    return parse_int_token(tok.substr(key.size() + 1), key.c_str());
}

}  // namespace

std::string emit_tau_file(const TauInvolution& tau) {
    std::ostringstream os;
    os << "k=" << tau.k << "\n";
    for (auto [a, b] : tau.pairs) os << a << " " << b << "\n";
    return os.str();
}

TauInvolution parse_tau_file(std::istream& in) {
    std::string line;
    int k = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (k < 0) {
            if (toks.size() != 1) throw std::invalid_argument("tau file: first line must be k=<int>");
            k = parse_kv(toks[0], "k");
            continue;
        }
        if (toks.size() != 2) throw std::invalid_argument("tau file: expected 'a b' pair lines");
        pairs.emplace_back(parse_int_token(toks[0], "pair"), parse_int_token(toks[1], "pair"));
    }
    if (k < 0) throw std::invalid_argument("tau file: missing k=<int> header");
    return validate_tau(std::move(pairs), k);
}

TauInvolution parse_tau_file(const std::string& text) {
    std::istringstream is(text);
    return parse_tau_file(is);
}

std::string emit_word_file(const MorseWord& word) {
    std::ostringstream os;
    os << "genus=" << word.surface_genus << " strands=" << word.start_strands << "\n";
    for (const Event& e : word.events) os << event_to_string(e) << "\n";
    return os.str();
}

MorseWord parse_word_file(std::istream& in) {
    std::string line;
    bool have_header = false;
    int genus = 0, strands = 0;
    std::vector<Event> events;
    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 2)
                throw std::invalid_argument("word file: first line must be 'genus=<g> strands=<n>'");
            genus = parse_kv(toks[0], "genus");
            strands = parse_kv(toks[1], "strands");
            have_header = true;
            continue;
        }
        const std::string& op = toks[0];
        if (op == "cup" && toks.size() == 2) {
            events.push_back(Event::cup(parse_int_token(toks[1], "cup position")));
        } else if (op == "cap" && toks.size() == 2) {
            events.push_back(Event::cap(parse_int_token(toks[1], "cap position")));
        } else if (op == "sigma" && toks.size() == 3 && (toks[2] == "+" || toks[2] == "-")) {
            events.push_back(
                Event::sigma(parse_int_token(toks[1], "sigma position"), toks[2] == "+" ? 1 : -1));
        } else if (op == "handle" && toks.size() == 4 && (toks[1] == "a" || toks[1] == "b")) {
            events.push_back(Event::handle(toks[1][0], parse_int_token(toks[2], "handle generator"),
                                           parse_int_token(toks[3], "handle position")));
        } else {
            throw std::invalid_argument("word file: unrecognized event line '" + line + "'");
        }
    }
    if (!have_header) throw std::invalid_argument("word file: missing header line");
    return validate_word(std::move(events), genus, strands);
}

MorseWord parse_word_file(const std::string& text) {
    std::istringstream is(text);
    return parse_word_file(is);
}

namespace {

json event_to_json(const Event& e) {
    switch (e.kind) {
        case EventKind::Cup:
            return json::array({"cup", e.position});
        case EventKind::Cap:
            return json::array({"cap", e.position});
        case EventKind::Sigma:
            return json::array({"sigma", e.position, e.sign > 0 ? "+" : "-"});
        case EventKind::Handle:
            return json::array(
                {"handle", std::string(1, e.handle_kind), e.handle_index, e.position});
    }
    return {};
}

Event event_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_string())
        throw std::invalid_argument("presentation json: malformed event");
    std::string op = j[0].get<std::string>();
    if (op == "cup" && j.size() == 2) return Event::cup(j[1].get<int>());
    if (op == "cap" && j.size() == 2) return Event::cap(j[1].get<int>());
    if (op == "sigma" && j.size() == 3)
        return Event::sigma(j[1].get<int>(), j[2].get<std::string>() == "+" ? 1 : -1);
    if (op == "handle" && j.size() == 4) {
        std::string kind = j[1].get<std::string>();
        if (kind.size() != 1) throw std::invalid_argument("presentation json: bad handle kind");
        return Event::handle(kind[0], j[2].get<int>(), j[3].get<int>());
    }
    throw std::invalid_argument("presentation json: unrecognized event '" + op + "'");
}

}  // namespace

std::string presentation_to_json(const PlatPresentation& p) {
    json j;
    j["genus"] = p.surface_genus;
    j["n"] = p.n;
    j["band_heuristic"] = p.band_heuristic;
    j["bottom"] = json::array();
    for (const auto& c : p.bottom) j["bottom"].push_back(json::array({c.a, c.b, c.decoration}));
    j["braid"] = json::array();
    for (const Event& e : p.braid) j["braid"].push_back(event_to_json(e));
    j["top"] = json::array();
    for (const auto& c : p.top) j["top"].push_back(json::array({c.a, c.b, c.band}));
    return j.dump();
}

PlatPresentation presentation_from_json(const std::string& text) {
    json j = json::parse(text);
    PlatPresentation p;
    p.surface_genus = j.at("genus").get<int>();
    p.n = j.at("n").get<int>();
    p.band_heuristic = j.at("band_heuristic").get<bool>();
    for (const json& c : j.at("bottom"))
        p.bottom.push_back(BottomCap{c.at(0).get<int>(), c.at(1).get<int>(),
                                     c.at(2).get<std::string>()});
    for (const json& e : j.at("braid")) p.braid.push_back(event_from_json(e));
    for (const json& c : j.at("top"))
        p.top.push_back(TopCap{c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()});
    return p;
}

}  // namespace onesided
