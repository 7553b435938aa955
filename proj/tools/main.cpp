// Command-line surface: genus | tau | homology | split | plat | reproduce.
// Exit codes: 0 success, 1 domain errors (and failed reproductions), 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <sstream>

#include "onesided/abelian.hpp"
#include "onesided/curve_system.hpp"
#include "onesided/formats.hpp"
#include "onesided/genus.hpp"
#include "onesided/plat.hpp"
#include "onesided/splittings.hpp"

using json = nlohmann::json;
using namespace onesided;

namespace {

Int parse_big(const std::string& s, const char* what) {
    try {
        if (s.empty()) throw std::runtime_error("empty");
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("expected an integer for ") + what + ", got '" +
                                    s + "'");
    }
}

json big_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();  // too wide for a JSON number
}

json big_list_json(const std::vector<Int>& xs) {
    json out = json::array();
    for (const Int& x : xs) out.push_back(big_to_json(x));
    return out;
}

json tau_pairs_json(const TauInvolution& tau) {
    json out = json::array();
    for (auto [a, b] : tau.pairs) out.push_back(json::array({a, b}));
    return out;
}

std::string tau_inline(const TauInvolution& tau) {
    std::ostringstream os;
    for (auto [a, b] : tau.pairs) os << "(" << a << " " << b << ")";
    return os.str();
}

int env_enum_max_k() {
    if (const char* v = std::getenv("ONESIDED_ENUM_MAX_K")) {
        try {
            return std::stoi(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("ONESIDED_ENUM_MAX_K must be an integer");
        }
    }
    return kDefaultEnumMaxK;
}

long env_rewrite_budget() {
    if (const char* v = std::getenv("ONESIDED_REWRITE_BUDGET")) {
        try {
            return std::stol(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("ONESIDED_REWRITE_BUDGET must be an integer");
        }
    }
    return -1;  // library default
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// ---- genus ----

void run_genus(const std::string& ps, const std::string& qs, const std::string& method,
               bool as_json) {
    Int p = parse_big(ps, "--p"), q = parse_big(qs, "--q");
    ContinuedFraction cf = continued_fraction(p, q);
    if (p % 2 != 0)
        throw std::domain_error("non-splittable lens space: p must be even");
    BSequence bs = b_sequence(cf);
    Int n_formula = minimal_genus_formula(p, q);

    bool searched = false;
    int c_max = 0;
    Int n_search = 0;
    if (method == "search" || method == "both") {
        int max_k = env_enum_max_k();
        if (p / 2 > max_k)
            throw enumeration_capacity_error("search needs k = p/2 <= " + std::to_string(max_k));
        MaxCyclesResult r = max_cycles(static_cast<int>(p / 2), static_cast<int>(q), max_k);
        c_max = r.c_max;
        n_search = p / 2 + 1 - c_max;
        searched = true;
    }
    Int n = method == "search" ? n_search : n_formula;
    bool agreement = searched ? n_formula == n_search : true;

    if (as_json) {
        json j;
        j["p"] = big_to_json(p);
        j["q"] = big_to_json(q);
        j["cf"] = big_list_json(cf.terms);
        j["b"] = big_list_json(bs.values);
        j["N"] = big_to_json(n);
        j["method"] = method;
        j["agreement"] = agreement;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "L(" << p << "," << q << ")\n";
    std::cout << "  continued fraction:";
    for (const Int& t : cf.terms) std::cout << " " << t;
    std::cout << "\n  b-sequence:";
    for (const Int& b : bs.values) std::cout << " " << b;
    std::cout << "\n  N = " << n << " (" << method << ")\n";
    if (searched)
        std::cout << "  search: c_max = " << c_max << ", N = " << n_search << ", agreement: "
                  << (agreement ? "yes" : "NO") << "\n";
}

// ---- tau ----

void run_tau_enumerate(int k, bool as_json) {
    int max_k = env_enum_max_k();
    std::vector<TauInvolution> all = enumerate_taus(k, max_k);
    if (as_json) {
        json j;
        j["k"] = k;
        j["count"] = all.size();
        j["taus"] = json::array();
        for (const auto& t : all) j["taus"].push_back(tau_pairs_json(t));
        std::cout << j.dump() << "\n";
        return;
    }
    for (const auto& t : all) std::cout << tau_inline(t) << "\n";
    std::cout << "count: " << all.size() << "\n";
}

void run_tau_search(int k, int q, bool as_json) {
    MaxCyclesResult r = max_cycles(k, q, env_enum_max_k());
    int genus = k + 1 - r.c_max;
    if (as_json) {
        json j;
        j["k"] = k;
        j["q"] = q;
        j["c_max"] = r.c_max;
        j["genus"] = genus;
        j["witness"] = tau_pairs_json(r.witness);
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "c_max = " << r.c_max << "\ngenus = " << genus << "\nwitness: "
              << tau_inline(r.witness) << "\n";
}

void run_tau_cycles(const std::string& path, int q, bool as_json) {
    TauInvolution tau = parse_tau_file(slurp(path));
    CycleDecomposition dec = cycle_decomposition(tau, q);
    TauSurface s = surface_invariants(tau, q);
    if (as_json) {
        json j;
        j["k"] = tau.k;
        j["q"] = dec.q;
        j["pairs"] = tau_pairs_json(tau);
        j["cycles"] = json::array();
        for (const auto& cyc : dec.cycles) {
            json names = json::array();
            for (int id : cyc) names.push_back(node_name(id, tau.k));
            j["cycles"].push_back(names);
        }
        j["c"] = dec.count();
        j["genus"] = s.genus;
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "k = " << tau.k << ", q = " << dec.q << ", c = " << dec.count()
              << ", genus = " << s.genus << ", euler = " << s.euler << "\n";
    for (std::size_t i = 0; i < dec.cycles.size(); ++i) {
        std::cout << "cycle " << i + 1 << " (length " << dec.cycles[i].size() << "):";
        for (int id : dec.cycles[i]) std::cout << " " << node_name(id, tau.k);
        std::cout << "\n";
    }
}

// ---- homology ----

void print_group(const AbelianGroup& g, bool as_json) {
    if (as_json) {
        json j;
        j["rank"] = g.rank;
        j["torsion"] = big_list_json(g.torsion);
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "H1 = " << g.to_string() << "\n";
    if (!g.torsion.empty()) {
        std::cout << "primary form:";
        for (const Int& d : primary_decomposition(g.torsion)) std::cout << " Z/" << d;
        std::cout << "\n";
    }
}

void run_klein_gluing(const std::string& matrix, bool as_json) {
    std::vector<Int> entries;
    std::stringstream ss(matrix);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(parse_big(item, "--matrix"));
    if (entries.size() != 4)
        throw std::invalid_argument("--matrix wants p_l,q_l,p_m,q_m (4 integers)");
    GluingMatrix g{entries[0], entries[1], entries[2], entries[3]};
    print_group(h1_from_klein_gluing(g), as_json);
}

void run_presentation(const std::string& path, bool as_json) {
    std::istringstream in(slurp(path));
    std::string tok;
    if (!(in >> tok) || tok != "generators")
        throw std::invalid_argument("presentation file: expected 'generators <n>'");
    int gens = 0;
    if (!(in >> gens) || gens < 0)
        throw std::invalid_argument("presentation file: bad generator count");
    std::vector<Int> entries;
    std::string num;
    while (in >> num) entries.push_back(parse_big(num, "relation entry"));
    if (gens == 0 && !entries.empty())
        throw std::invalid_argument("presentation file: relations with zero generators");
    if (gens > 0 && entries.size() % gens != 0)
        throw std::invalid_argument("presentation file: relation rows must have one entry per generator");
    int rows = gens > 0 ? static_cast<int>(entries.size()) / gens : 0;
    IntMatrix rel(rows, gens);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < gens; ++j) rel(i, j) = entries[static_cast<std::size_t>(i) * gens + j];
    print_group(group_from_presentation(gens, rel), as_json);
}

// ---- split ----

void print_descriptor(const SplittingDescriptor& d, bool as_json) {
    if (as_json) {
        json j;
        j["manifold"] = d.manifold.to_string();
        switch (d.manifold.kind) {
            case ManifoldKind::Lens:
                j["kind"] = "lens";
                j["p"] = big_to_json(d.manifold.p);
                j["q"] = big_to_json(d.manifold.q);
                break;
            case ManifoldKind::TrivialBundle:
                j["kind"] = "bundle";
                j["g"] = d.manifold.g;
                break;
            default:
                j["kind"] = "custom";
        }
        j["u_genus"] = big_to_json(d.u_genus);
        j["handlebody_genus"] = big_to_json(d.handlebody_genus);
        j["braid_surface_genus"] = big_to_json(d.braid_surface_genus);
        if (d.witness_tau) {
            j["witness"] = tau_pairs_json(*d.witness_tau);
            j["witness_file"] = emit_tau_file(*d.witness_tau);
        }
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << d.manifold.to_string() << "\n  u_genus = " << d.u_genus
              << "\n  handlebody_genus = " << d.handlebody_genus
              << "\n  braid_surface_genus = " << d.braid_surface_genus << "\n";
    if (d.witness_tau) {
        std::cout << "  witness tau:\n";
        std::istringstream lines(emit_tau_file(*d.witness_tau));
        std::string line;
        while (std::getline(lines, line)) std::cout << "    " << line << "\n";
    }
}

// ---- plat ----

json pairing_json(const std::vector<std::pair<int, int>>& pairing) {
    json out = json::array();
    for (auto [a, b] : pairing) out.push_back(json::array({a, b}));
    return out;
}

void run_plat_normalize(const std::string& path, bool as_json) {
    MorseWord word = parse_word_file(slurp(path));
    PlatPresentation p = normalize(word, env_rewrite_budget());
    if (as_json) {
        std::cout << presentation_to_json(p) << "\n";
        return;
    }
    std::cout << "genus " << p.surface_genus << ", n = " << p.n << "\n";
    std::cout << "bottom:";
    for (const auto& c : p.bottom) {
        std::cout << " (" << c.a << "," << c.b << ")";
        if (!c.decoration.empty()) std::cout << "[" << c.decoration << "]";
    }
    std::cout << "\nbraid:";
    if (p.braid.empty()) std::cout << " (empty)";
    for (const Event& e : p.braid) std::cout << " | " << event_to_string(e);
    std::cout << "\ntop:";
    for (const auto& c : p.top) std::cout << " (" << c.a << "," << c.b << ")[band " << c.band << "]";
    std::cout << "\ncomponents: " << plat_components(p) << "\n";
    if (p.band_heuristic) std::cout << "note: band indices assigned heuristically\n";
}

void run_plat_components(const std::string& path, bool as_json) {
    MorseWord word = parse_word_file(slurp(path));
    TraceResult t = trace(word);
    if (as_json) {
        json j;
        j["components"] = t.component_count;
        j["closed"] = word.closed();
        if (!word.closed()) j["pairing"] = pairing_json(t.pairing);
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "components: " << t.component_count << "\n";
    if (!word.closed()) {
        std::cout << "boundary pairing:";
        for (auto [a, b] : t.pairing) std::cout << " (" << a << "," << b << ")";
        std::cout << "\n";
    }
}

void run_plat_validate(const std::string& path, bool as_json) {
    MorseWord word = parse_word_file(slurp(path));  // throws with location on failure
    if (as_json) {
        json j;
        j["valid"] = true;
        j["genus"] = word.surface_genus;
        j["start_strands"] = word.start_strands;
        j["end_strands"] = word.end_strands;
        j["events"] = word.events.size();
        j["closed"] = word.closed();
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << "valid word: " << word.events.size() << " events, genus "
              << word.surface_genus << ", strands " << word.start_strands << " -> "
              << word.end_strands << (word.closed() ? " (closed)" : " (open)") << "\n";
}

// ---- reproduce ----

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

Check make_check(const std::string& name, const std::string& expected,
                 const std::string& computed) {
    return Check{name, expected, computed, expected == computed};
}

std::vector<Check> reproduce_klein_gluing() {
    AbelianGroup h1 = h1_from_klein_gluing(GluingMatrix{0, 1, 1, 0});
    return {make_check("H1 of the [[0,1],[1,0]] gluing", "Z + Z/2 + Z/2", h1.to_string())};
}

std::vector<Check> reproduce_lens_2k_1() {
    std::vector<Check> out;
    for (int k = 1; k <= 8; ++k) {
        TauInvolution tau = adjacent_pair_tau(k);
        validate_tau(tau.pairs, k);
        out.push_back(make_check("c(adjacent tau) at k=" + std::to_string(k), "1",
                                 std::to_string(cycle_decomposition(tau, 1).count())));
        out.push_back(make_check("genus at k=" + std::to_string(k), std::to_string(k),
                                 std::to_string(genus_of_tau(tau, 1))));
        out.push_back(make_check("c_max(k,1) at k=" + std::to_string(k), "1",
                                 std::to_string(max_cycles(k, 1).c_max)));
        out.push_back(make_check("N(2k,1) at k=" + std::to_string(k), std::to_string(k),
                                 minimal_genus_formula(2 * k, 1).str()));
        BSequence bs = b_sequence(continued_fraction(2 * k, 1));
        out.push_back(make_check("b-sequence of [2k] at k=" + std::to_string(k),
                                 std::to_string(2 * k),
                                 bs.values.size() == 1 ? bs.values[0].str() : "?"));
    }
    return out;
}

std::vector<Check> reproduce_lens_4a4() {
    std::vector<Check> out;
    for (int a = 1; a <= 5; ++a) {
        int p = 4 * a + 4, q = 2 * a + 1;
        TauInvolution tau = long_chord_tau(a);
        validate_tau(tau.pairs, tau.k);
        CycleDecomposition dec = cycle_decomposition(tau, q);
        out.push_back(make_check("c at a=" + std::to_string(a), std::to_string(2 * a + 1),
                                 std::to_string(dec.count())));
        std::vector<int> lens = dec.lengths();
        std::sort(lens.begin(), lens.end());
        std::vector<int> want(2 * a, 4);
        want.push_back(8);
        auto render = [](const std::vector<int>& v) {
            std::string s;
            for (int x : v) s += std::to_string(x) + " ";
            return s;
        };
        out.push_back(make_check("cycle lengths at a=" + std::to_string(a), render(want),
                                 render(lens)));
        out.push_back(make_check("genus at a=" + std::to_string(a), "2",
                                 std::to_string(genus_of_tau(tau, q))));
        ContinuedFraction cf = continued_fraction(p, q);
        std::string cf_want = "2 " + std::to_string(a) + " 2";
        std::string cf_got;
        for (std::size_t i = 0; i < cf.terms.size(); ++i)
            cf_got += (i ? " " : "") + cf.terms[i].str();
        out.push_back(make_check("continued fraction at a=" + std::to_string(a), cf_want, cf_got));
        BSequence bs = b_sequence(cf);
        std::string b_got;
        for (std::size_t i = 0; i < bs.values.size(); ++i)
            b_got += (i ? " " : "") + bs.values[i].str();
        out.push_back(make_check("b-sequence at a=" + std::to_string(a), "2 0 2", b_got));
        out.push_back(make_check("N at a=" + std::to_string(a), "2",
                                 minimal_genus_formula(p, q).str()));
    }
    out.push_back(make_check("c_max(4,3)", "3", std::to_string(max_cycles(4, 3).c_max)));
    out.push_back(make_check("c_max(6,5)", "5", std::to_string(max_cycles(6, 5).c_max)));
    return out;
}

std::vector<Check> reproduce_bundle() {
    std::vector<Check> out;
    for (int g : {0, 1, 5, 10}) {
        SplittingDescriptor d = trivial_bundle_splitting(g);
        out.push_back(make_check("bundle u_genus at g=" + std::to_string(g),
                                 std::to_string(2 * g + 4), d.u_genus.str()));
        out.push_back(make_check("bundle handlebody_genus at g=" + std::to_string(g),
                                 std::to_string(2 * g + 3), d.handlebody_genus.str()));
    }
    out.push_back(make_check("L(8,3) handlebody genus", "1",
                             lens_splitting(8, 3).handlebody_genus.str()));
    SplittingDescriptor l81 = lens_splitting(8, 1);
    out.push_back(make_check("L(8,1) handlebody genus", "3", l81.handlebody_genus.str()));
    out.push_back(make_check("L(8,1) witness is the adjacent pairing", "yes",
                             l81.witness_tau && *l81.witness_tau == adjacent_pair_tau(4)
                                 ? "yes"
                                 : "no"));
    out.push_back(make_check("L(6,1) handlebody genus", "2",
                             lens_splitting(6, 1).handlebody_genus.str()));
    out.push_back(make_check("L(3,1) splittable", "false",
                             is_splittable_lens(3, 1) ? "true" : "false"));
    out.push_back(make_check("L(2,1) splittable", "true",
                             is_splittable_lens(2, 1) ? "true" : "false"));
    out.push_back(make_check("L(12,5) splittable", "true",
                             is_splittable_lens(12, 5) ? "true" : "false"));
    return out;
}

std::vector<Check> reproduce_genus_table() {
    std::vector<Check> out;
    int agree = 0, total = 0;
    for (int p = 2; p <= 24; p += 2)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++total;
            if (minimal_genus_formula(p, q) == p / 2 + 1 - max_cycles(p / 2, q).c_max) ++agree;
        }
    out.push_back(make_check("formula vs search agreement, even p <= 24",
                             std::to_string(total) + "/" + std::to_string(total),
                             std::to_string(agree) + "/" + std::to_string(total)));
    auto cf_str = [](const Int& p, const Int& q) {
        std::string s;
        ContinuedFraction cf = continued_fraction(p, q);
        for (std::size_t i = 0; i < cf.terms.size(); ++i) s += (i ? " " : "") + cf.terms[i].str();
        return s;
    };
    out.push_back(make_check("continued fraction of 8/3", "2 1 2", cf_str(8, 3)));
    out.push_back(make_check("continued fraction of 12/1", "12", cf_str(12, 1)));
    out.push_back(make_check("N(2,1)", "1", minimal_genus_formula(2, 1).str()));
    auto genera_str = [](const Int& p, const Int& q, const Int& bound) {
        std::string s;
        for (const Int& g : embeddable_genera(p, q, bound)) s += g.str() + " ";
        return s;
    };
    out.push_back(make_check("embeddable genera of L(4,1) up to 6", "2 4 6 ",
                             genera_str(4, 1, 6)));
    out.push_back(make_check("embeddable genera of L(8,3) up to 7", "2 4 6 ",
                             genera_str(8, 3, 7)));
    out.push_back(make_check("embeddable genera of L(2,1) up to 1", "1 ", genera_str(2, 1, 1)));
    return out;
}

int run_reproduce(const std::string& which, bool as_json) {
    std::vector<Check> checks;
    if (which == "klein-gluing")
        checks = reproduce_klein_gluing();
    else if (which == "lens-2k-1")
        checks = reproduce_lens_2k_1();
    else if (which == "lens-4a4")
        checks = reproduce_lens_4a4();
    else if (which == "bundle")
        checks = reproduce_bundle();
    else if (which == "genus-table")
        checks = reproduce_genus_table();
    else
        throw std::invalid_argument(
            "unknown case '" + which +
            "' (expected klein-gluing|lens-2k-1|lens-4a4|bundle|genus-table)");

    int failed = 0;
    if (as_json) {
        json j;
        j["case"] = which;
        j["checks"] = json::array();
        for (const Check& c : checks) {
            j["checks"].push_back(
                {{"name", c.name}, {"expected", c.expected}, {"computed", c.computed},
                 {"pass", c.pass}});
            if (!c.pass) ++failed;
        }
        j["pass"] = failed == 0;
        std::cout << j.dump() << "\n";
    } else {
        for (const Check& c : checks) {
            if (!c.pass) ++failed;
            std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": expected "
                      << c.expected << ", computed " << c.computed << "\n";
        }
        std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " checks FAILED")
                  << "\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "one-sided splitting toolkit: non-orientable surface genus in lens spaces,\n"
        "chord-diagram search, Smith-form homology, splitting descriptors, and\n"
        "plat normalization of Morse words"};
    app.require_subcommand(1);
    int rc = 0;

    // genus
    std::string g_p, g_q, g_method = "formula";
    bool g_json = false;
    auto* genus_cmd = app.add_subcommand("genus", "minimal non-orientable genus N(p,q) in L(p,q)");
    genus_cmd->add_option("--p", g_p, "even lens space parameter p")->required();
    genus_cmd->add_option("--q", g_q, "q coprime to p, 0 < q < p")->required();
    genus_cmd->add_option("--method", g_method, "formula, search, or both")
        ->check(CLI::IsMember({"formula", "search", "both"}));
    genus_cmd->add_flag("--json", g_json, "emit JSON");
    genus_cmd->callback([&] { run_genus(g_p, g_q, g_method, g_json); });

    // tau
    auto* tau_cmd = app.add_subcommand("tau", "non-crossing chord diagrams");
    tau_cmd->require_subcommand(1);
    int te_k = 1;
    bool te_json = false;
    auto* tau_enum = tau_cmd->add_subcommand("enumerate", "list all diagrams for a given k");
    tau_enum->add_option("--k", te_k, "number of chords")->required();
    tau_enum->add_flag("--json", te_json, "emit JSON");
    tau_enum->callback([&] { run_tau_enumerate(te_k, te_json); });

    int ts_k = 1, ts_q = 1;
    bool ts_json = false;
    auto* tau_search = tau_cmd->add_subcommand("search", "maximize the cycle count c(tau)");
    tau_search->add_option("--k", ts_k, "number of chords")->required();
    tau_search->add_option("--q", ts_q, "helix parameter, coprime to 2k")->required();
    tau_search->add_flag("--json", ts_json, "emit JSON");
    tau_search->callback([&] { run_tau_search(ts_k, ts_q, ts_json); });

    std::string tc_file;
    int tc_q = 1;
    bool tc_json = false;
    auto* tau_cycles = tau_cmd->add_subcommand("cycles", "cycle decomposition of a tau file");
    tau_cycles->add_option("--file", tc_file, "tau file (k=<k>, then 'a b' lines)")->required();
    tau_cycles->add_option("--q", tc_q, "helix parameter, coprime to 2k")->required();
    tau_cycles->add_flag("--json", tc_json, "emit JSON");
    tau_cycles->callback([&] { run_tau_cycles(tc_file, tc_q, tc_json); });

    // homology
    auto* hom_cmd = app.add_subcommand("homology", "first homology via Smith normal form");
    hom_cmd->require_subcommand(1);
    std::string hk_matrix;
    bool hk_json = false;
    auto* hom_klein = hom_cmd->add_subcommand(
        "klein-gluing", "H1 of a solid torus glued to the Klein-bottle mapping cylinder");
    hom_klein->add_option("--matrix", hk_matrix, "p_l,q_l,p_m,q_m with determinant -1")
        ->required();
    hom_klein->add_flag("--json", hk_json, "emit JSON");
    hom_klein->callback([&] { run_klein_gluing(hk_matrix, hk_json); });

    std::string hp_file;
    bool hp_json = false;
    auto* hom_pres = hom_cmd->add_subcommand("presentation", "abelian group from a relation file");
    hom_pres->add_option("--file", hp_file, "file: 'generators <n>' then relation rows")
        ->required();
    hom_pres->add_flag("--json", hp_json, "emit JSON");
    hom_pres->callback([&] { run_presentation(hp_file, hp_json); });

    // split
    auto* split_cmd = app.add_subcommand("split", "one-sided splitting descriptors");
    split_cmd->require_subcommand(1);
    std::string sl_p, sl_q;
    bool sl_json = false;
    auto* split_lens = split_cmd->add_subcommand("lens", "descriptor for L(p,q)");
    split_lens->add_option("--p", sl_p, "even lens space parameter p")->required();
    split_lens->add_option("--q", sl_q, "q coprime to p")->required();
    split_lens->add_flag("--json", sl_json, "emit JSON");
    split_lens->callback([&] {
        print_descriptor(lens_splitting(parse_big(sl_p, "--p"), parse_big(sl_q, "--q"),
                                        env_enum_max_k()),
                         sl_json);
    });

    int sb_g = 0;
    bool sb_json = false;
    auto* split_bundle = split_cmd->add_subcommand("bundle", "descriptor for Sigma_g x S^1");
    split_bundle->add_option("--g", sb_g, "genus of the base surface")->required();
    split_bundle->add_flag("--json", sb_json, "emit JSON");
    split_bundle->callback([&] { print_descriptor(trivial_bundle_splitting(sb_g), sb_json); });

    // plat
    auto* plat_cmd = app.add_subcommand("plat", "Morse words and plat normalization");
    plat_cmd->require_subcommand(1);
    std::string pn_file;
    bool pn_json = false;
    auto* plat_norm = plat_cmd->add_subcommand("normalize", "rewrite a closed word into plat form");
    plat_norm->add_option("--input", pn_file, "Morse word file")->required();
    plat_norm->add_flag("--json", pn_json, "emit JSON");
    plat_norm->callback([&] { run_plat_normalize(pn_file, pn_json); });

    std::string pc_file;
    bool pc_json = false;
    auto* plat_comp = plat_cmd->add_subcommand("components", "trace link components of a word");
    plat_comp->add_option("--input", pc_file, "Morse word file")->required();
    plat_comp->add_flag("--json", pc_json, "emit JSON");
    plat_comp->callback([&] { run_plat_components(pc_file, pc_json); });

    std::string pv_file;
    bool pv_json = false;
    auto* plat_val = plat_cmd->add_subcommand("validate", "type-check a Morse word file");
    plat_val->add_option("--input", pv_file, "Morse word file")->required();
    plat_val->add_flag("--json", pv_json, "emit JSON");
    plat_val->callback([&] { run_plat_validate(pv_file, pv_json); });

    // reproduce
    std::string r_case;
    bool r_json = false;
    auto* rep_cmd = app.add_subcommand("reproduce", "re-run the worked examples and report");
    rep_cmd->add_option("case", r_case, "klein-gluing|lens-2k-1|lens-4a4|bundle|genus-table")
        ->required();
    rep_cmd->add_flag("--json", r_json, "emit JSON");
    rep_cmd->callback([&] { rc = run_reproduce(r_case, r_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
