// Command-line surface: analyze one graph, construct example families,
// stream censuses, verify named structural claims, convert encodings.
// Exit codes: 0 success (and claim passed), 1 claim failed, 2 usage or
// parse error, 3 main-count cross-check failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "specgraph/specgraph.hpp"

namespace {

using namespace specgraph;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Tolerances resolve_tolerances(double tol_group, double tol_main) {
    Tolerances tol;
    if (const char* env = std::getenv("SPECGRAPH_TOLERANCE")) {
        try {
            tol.group_scale = std::stod(env);
        } catch (const std::exception&) {
            throw UsageError("SPECGRAPH_TOLERANCE is not a number");
        }
    }
    if (tol_group > 0) tol.group_scale = tol_group;
    if (tol_main > 0) tol.main_abs = tol_main;
    return tol;
}

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_source(const std::string& word, const std::string& path) {
    if (!word.empty()) return word;
    if (!path.empty()) {
        std::ifstream f(path);
        if (!f) throw UsageError("cannot open " + path);
        return slurp(f);
    }
    return slurp(std::cin);
}

std::string first_word(const std::string& text) {
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        return line.substr(b, e - b + 1);
    }
    throw UsageError("empty input");
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream ss(text);
    std::vector<long long> tok;
    long long v;
    while (ss >> v) tok.push_back(v);
    std::string rest;
    if (ss.clear(), ss >> rest) throw UsageError("non-numeric token '" + rest + "' in edge list");
    if (tok.size() < 2) throw UsageError("edge list must start with: n m");
    long long n = tok[0], m = tok[1];
    if (static_cast<long long>(tok.size()) != 2 + 2 * m)
        throw UsageError("edge list declares " + std::to_string(m) + " edges, found " +
                         std::to_string((tok.size() - 2) / 2.0) + " pairs of endpoints");
    std::vector<std::pair<int, int>> es;
    for (long long i = 0; i < m; ++i)
        es.emplace_back(static_cast<int>(tok[2 + 2 * i]), static_cast<int>(tok[3 + 2 * i]));
    return Graph::from_edges(static_cast<int>(n), es);
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("bad json input: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw UsageError("json input needs fields n and edges");
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw UsageError("edges must be [u,v] pairs");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(j["n"].get<int>(), es);
}

Graph parse_input_graph(const std::string& text, const std::string& format) {
    if (format == "el") return graph_from_edge_list(text);
    if (format == "json") return graph_from_json(text);
    return parse_graph6(first_word(text));
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const std::string& word, const std::string& path, const std::string& format,
                bool as_json, double tol_group, double tol_main) {
    Tolerances tol = resolve_tolerances(tol_group, tol_main);
    Graph g = parse_input_graph(read_source(word, path), format);
    GraphAnalysis a = analyze(g, tol);
    std::string g6 = encode_graph6(g);
    if (as_json)
        std::cout << analysis_json(g6, a) << "\n";
    else
        std::cout << human_report(g6, a);
    return 0;
}

// -------------------------------------------------------------- construct

Graph construct_operand(const std::string& tok) {
    if (tok == "petersen") return petersen();
    if (tok == "-") return parse_graph6(first_word(slurp(std::cin)));
    return parse_graph6(tok);
}

int to_int(const std::string& tok) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw UsageError("expected an integer, got '" + tok + "'");
    }
}

std::vector<int> to_ints(const std::vector<std::string>& toks, std::size_t from) {
    std::vector<int> out;
    for (std::size_t i = from; i < toks.size(); ++i) out.push_back(to_int(toks[i]));
    return out;
}

Graph build_from_args(const std::string& family, const std::vector<std::string>& args,
                      int* rook_m) {
    auto want = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi)
            throw UsageError("wrong argument count for family '" + family + "'");
    };
    if (family == "cliques") {
        want(1, SIZE_MAX);
        return cliques_union(to_ints(args, 0));
    }
    if (family == "multipartite") {
        want(1, SIZE_MAX);
        return complete_multipartite(to_ints(args, 0));
    }
    if (family == "cycle") {
        want(1, 1);
        return cycle(to_int(args[0]));
    }
    if (family == "star") {
        want(1, 1);
        return star(to_int(args[0]));
    }
    if (family == "rook") {
        want(1, 1);
        *rook_m = to_int(args[0]);
        return rook(*rook_m);
    }
    if (family == "complete") {
        want(1, 1);
        return complete(to_int(args[0]));
    }
    if (family == "empty") {
        want(1, 1);
        return edgeless(to_int(args[0]));
    }
    if (family == "petersen") {
        want(0, 0);
        return petersen();
    }
    if (family == "cone") {
        want(1, 1);
        return cone_over(construct_operand(args[0]));
    }
    if (family == "multicone") {
        want(2, 2);
        return multicone_over(to_int(args[0]), construct_operand(args[1]));
    }
    if (family == "join" || family == "union") {
        want(2, SIZE_MAX);
        Graph acc = construct_operand(args[0]);
        for (std::size_t i = 1; i < args.size(); ++i) {
            Graph next = construct_operand(args[i]);
            acc = family == "join" ? join(acc, next) : disjoint_union(acc, next);
        }
        return acc;
    }
    if (family == "srg-delete") {
        want(1, 1);
        Graph g = construct_operand(args[0]);
        if (!check_srg(g)) throw UsageError("srg-delete operand is not strongly regular");
        return delete_vertex(g, 0);
    }
    throw UsageError("unknown family '" + family + "'");
}

int cmd_construct(const std::string& family, const std::vector<std::string>& args,
                  int switch_row, const std::string& switch_list, int del_vertex) {
    int rook_m = 0;
    Graph g = build_from_args(family, args, &rook_m);
    if (switch_row >= 0) {
        if (rook_m == 0) throw UsageError("--switch-row applies only to the rook family");
        g = seidel_switch(g, rook_row(rook_m, switch_row));
    }
    if (!switch_list.empty()) {
        std::vector<int> vs;
        std::istringstream ss(switch_list);
        std::string tok;
        while (std::getline(ss, tok, ',')) vs.push_back(to_int(tok));
        g = seidel_switch(g, vs);
    }
    if (del_vertex >= 0) g = delete_vertex(g, del_vertex);
    std::cout << encode_graph6(g) << "\n";
    return 0;
}

// ----------------------------------------------------------------- census

struct CensusOptions {
    std::string input;
    std::string format = "json";
    std::string summary_path;
    int jobs = 1;
    double tol_group = -1, tol_main = -1;
    int counterexamples = 0;
    bool refined_pairs = false;
    // filter
    int connected = -1; // -1 unset, 0 false, 1 true
    int strong = -1;
    std::optional<int> r, s, d, t, t_min;
};

void write_summary(std::ostream& os, const CensusStats& st) {
    os << "lines " << st.lines << "\n"
       << "parsed " << st.parsed << "\n"
       << "passed " << st.passed << "\n"
       << "errors " << st.errors.size() << "\n";
    for (const auto& e : st.errors) os << "error line " << e.line << ": " << e.message << "\n";
}

int cmd_census(const CensusOptions& opt) {
    Tolerances tol = resolve_tolerances(opt.tol_group, opt.tol_main);

    FilterSpec filter;
    if (opt.connected >= 0) filter.connected = opt.connected != 0;
    if (opt.strong >= 0) filter.strong = opt.strong != 0;
    filter.r = opt.r;
    filter.s = opt.s;
    filter.d = opt.d;
    filter.t_exact = opt.t;
    filter.t_min = opt.t_min;

    std::ifstream file;
    std::istream* in = &std::cin;
    if (!opt.input.empty()) {
        file.open(opt.input);
        if (!file) throw UsageError("cannot open " + opt.input);
        in = &file;
    }

    const bool csv = opt.format == "csv";
    CensusStats stats;
    if (opt.counterexamples > 0) {
        auto ce = find_counterexamples(*in, opt.counterexamples, tol, opt.jobs, &stats);
        if (csv) std::cout << census_csv_header() << "\n";
        for (const auto& r : ce)
            std::cout << (csv ? census_record_csv(r) : census_record_json(r)) << "\n";
    } else if (opt.refined_pairs) {
        std::vector<CensusRecord> records;
        stats = run_census(*in, filter, [&](const CensusRecord& r) { records.push_back(r); },
                           tol, opt.jobs);
        for (const auto& p : find_refined_cospectral_pairs(records, tol))
            std::cout << cospectral_pair_json(p) << "\n";
    } else {
        if (csv) std::cout << census_csv_header() << "\n";
        stats = run_census(*in, filter,
                           [&](const CensusRecord& r) {
                               std::cout << (csv ? census_record_csv(r) : census_record_json(r))
                                         << "\n";
                           },
                           tol, opt.jobs);
    }

    if (!opt.summary_path.empty()) {
        std::ofstream sf(opt.summary_path);
        if (!sf) throw UsageError("cannot open " + opt.summary_path);
        write_summary(sf, stats);
    } else {
        write_summary(std::cerr, stats);
    }
    return stats.errors.empty() ? 0 : 2;
}

// ----------------------------------------------------------------- verify

struct ClaimOutcome {
    enum class Kind { Skipped, Ok, Flagged, Violated } kind = Kind::Skipped;
    std::string note;
};

using ClaimFn = std::function<ClaimOutcome(const Graph&, const Tolerances&)>;

struct Claim {
    const char* id;
    const char* statement;
    ClaimFn run;
};

ClaimOutcome ok() { return {ClaimOutcome::Kind::Ok, ""}; }
ClaimOutcome skipped() { return {ClaimOutcome::Kind::Skipped, ""}; }
ClaimOutcome violated(std::string note) { return {ClaimOutcome::Kind::Violated, std::move(note)}; }

ClaimOutcome claim_bireg_equitable(const Graph& g, const Tolerances&) {
    if (!is_biregular(g)) return skipped();
    bool two_mains = main_count_exact(g) == 2;
    bool equitable = valency_quotient(g).equitable;
    if (two_mains != equitable)
        return violated(std::string("two mains=") + (two_mains ? "yes" : "no") +
                        " equitable=" + (equitable ? "yes" : "no"));
    return ok();
}

ClaimOutcome claim_disconnected_22(const Graph& g, const Tolerances& tol) {
    if (is_connected(g)) return skipped();
    RefinedSpectrum rs = refined_spectrum(g, tol);
    if (rs.r != 2 || rs.s != 2) return skipped();
    auto fam = classify_disconnected(g, tol);
    if (fam.family == DisconnectedClassification::Family::None)
        return violated("no family matched");
    return ok();
}

ClaimOutcome claim_rowlinson(const Graph& g, const Tolerances&) {
    if (!is_connected(g)) return skipped();
    if (minimal_polynomial_degree(g) != 3) return skipped();
    RowlinsonReport rep = check_rowlinson(g);
    if (!rep.consistent)
        return violated("mains=" + std::to_string(rep.main_count) +
                        " strongly-biregular=" + (rep.strongly_biregular ? "yes" : "no"));
    return ok();
}

ClaimOutcome claim_strong_4ev(const Graph& g, const Tolerances& tol) {
    if (g.n() < 2 || !is_connected(g) || is_regular(g)) return skipped();
    StrongClassification sc = check_strong(g);
    if (!sc.strong()) return skipped();

    EigenReport er = eigendecompose(g, tol);
    int d = static_cast<int>(er.groups.size());
    if (d > 4) return violated("d=" + std::to_string(d));
    if (main_count_exact(g) != 2)
        return violated("exact main count " + std::to_string(main_count_exact(g)));

    EigenReport sei = seidel_spectrum(g, tol);
    if (sei.groups.size() != 2) return violated("Seidel spectrum not two-valued");
    double th0 = (-1.0 - sei.groups[1].value) / 2.0; // larger adjacency-scale root
    double th1 = (-1.0 - sei.groups[0].value) / 2.0;
    auto [mu0, mu1] = strong_main_eigenvalues(th0, th1, sei.groups[1].mult, sei.groups[0].mult,
                                              g.n(), static_cast<int>(g.edge_count()));
    RefinedSpectrum rs = refined_spectrum(g, er, tol);
    if (rs.r != 2) return violated("refined r=" + std::to_string(rs.r));
    if (std::abs(rs.mains[0] - mu0) > 1e-9 || std::abs(rs.mains[1] - mu1) > 1e-9)
        return violated("main eigenvalues not reproduced from the Seidel side");

    if (d == 3) {
        // one main coincides with a plain value; expected degeneracy, not a failure
        return {ClaimOutcome::Kind::Flagged, "d=3: a main eigenvalue collides with a plain value"};
    }
    for (const auto& grp : er.groups) {
        bool is_main = std::abs(grp.value - mu0) <= 1e-6 || std::abs(grp.value - mu1) <= 1e-6;
        if (is_main && grp.mult != 1)
            return violated("main eigenvalue not simple at d=" + std::to_string(d));
    }
    return ok();
}

ClaimOutcome claim_bounds(const Graph& g, const Tolerances& tol) {
    if (!is_connected(g)) return skipped();
    EigenReport er = eigendecompose(g, tol);
    RefinedSpectrum rs = refined_spectrum(g, er, tol);
    int d = static_cast<int>(er.groups.size());
    int l = 0;
    for (const auto& grp : er.groups)
        if (grp.mult >= 2) ++l;
    if (rs.r > d) return violated("r > d");
    if (rs.s < l) return violated("s < l");
    if (rs.r + rs.s < d || rs.r + rs.s > l + d) return violated("r+s outside [d, l+d]");
    return ok();
}

ClaimOutcome claim_complement_index(const Graph& g, const Tolerances& tol) {
    RefinedSpectrum rs = refined_spectrum(g, tol);
    RefinedSpectrum co = refined_spectrum(complement(g), tol);
    if (co.r != rs.r || co.s != rs.s) return violated("index changed under complement");
    std::vector<PlainEntry> want = predicted_complement_plains(rs);
    for (int i = 0; i < rs.s; ++i) {
        if (co.plains[i].pmult != want[i].pmult) return violated("plain multiplicity mismatch");
        if (std::abs(co.plains[i].value - want[i].value) > 1e-8)
            return violated("plain value not mapped to -p-1");
    }
    return ok();
}

ClaimOutcome claim_cone_main(const Graph& g, const Tolerances&) {
    int r = main_count_exact(g);
    int rc = main_count_exact(cone_over(g));
    if (rc > r + 1)
        return violated("cone has " + std::to_string(rc) + " mains, base has " +
                        std::to_string(r));
    return ok();
}

const std::vector<Claim>& claim_table() {
    static const std::vector<Claim> table{
        {"bireg-equitable",
         "a graph with exactly two distinct valencies has exactly two main eigenvalues if and "
         "only if its valency partition is equitable",
         claim_bireg_equitable},
        {"disconnected-22",
         "every disconnected graph with main-plain index (2,2) is a union of cliques with two "
         "sizes (one unique), isolated vertices plus a regular complete multipartite graph, an "
         "isolated vertex plus a strongly regular graph, or two strongly regular graphs with "
         "different valencies sharing both restricted eigenvalues",
         claim_disconnected_22},
        {"rowlinson",
         "a connected graph with exactly three distinct eigenvalues has exactly two main "
         "eigenvalues if and only if it is strongly biregular",
         claim_rowlinson},
        {"strong-4ev",
         "a connected non-regular strong graph has at most four distinct eigenvalues, exactly "
         "two main eigenvalues both simple, and the two mains are recovered from the Seidel "
         "spectrum with the order and edge count",
         claim_strong_4ev},
        {"bounds",
         "a connected graph with d distinct eigenvalues, l of them with multiplicity at least "
         "two, has main-plain index (r,s) with r <= d, s >= l, and d <= r+s <= l+d",
         claim_bounds},
        {"complement-index",
         "complementing a graph preserves the main-plain index and sends each plain eigenvalue "
         "p to -p-1 with unchanged plain multiplicity",
         claim_complement_index},
        {"cone-main",
         "joining one new vertex to every vertex of a graph with r main eigenvalues gives at "
         "most r+1 main eigenvalues",
         claim_cone_main},
    };
    return table;
}

int cmd_verify(const std::string& claim_id, int max_n, const std::string& input,
               double tol_group, double tol_main) {
    const Claim* claim = nullptr;
    for (const auto& c : claim_table())
        if (claim_id == c.id) claim = &c;
    if (!claim) throw UsageError("unknown claim '" + claim_id + "'");
    Tolerances tol = resolve_tolerances(tol_group, tol_main);

    std::size_t checked = 0;
    std::vector<std::string> counterexamples, flagged;
    std::vector<std::string> flag_notes, violation_notes;
    auto feed = [&](const Graph& g) {
        ClaimOutcome o = claim->run(g, tol);
        switch (o.kind) {
            case ClaimOutcome::Kind::Skipped: return;
            case ClaimOutcome::Kind::Ok: ++checked; return;
            case ClaimOutcome::Kind::Flagged:
                ++checked;
                flagged.push_back(encode_graph6(g));
                flag_notes.push_back(o.note);
                return;
            case ClaimOutcome::Kind::Violated:
                ++checked;
                counterexamples.push_back(encode_graph6(g));
                violation_notes.push_back(o.note);
                return;
        }
    };

    if (!input.empty()) {
        std::ifstream f(input);
        if (!f) throw UsageError("cannot open " + input);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(f, line)) {
            ++line_no;
            std::size_t b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            std::size_t e = line.find_last_not_of(" \t\r");
            try {
                feed(parse_graph6(line.substr(b, e - b + 1)));
            } catch (const Graph6Error& ge) {
                throw UsageError("line " + std::to_string(line_no) + ": " + ge.what());
            }
        }
    } else {
        if (max_n < 1 || max_n > 11) throw UsageError("--max-n must be in 1..11");
        for_each_graph(max_n, feed);
    }

    bool pass = counterexamples.empty();
    std::string out = std::string("{\"claim\":\"") + claim->id + "\",\"statement\":\"" +
                      json_escape(claim->statement) + "\",\"checked\":" +
                      std::to_string(checked) + ",\"result\":\"" + (pass ? "pass" : "fail") +
                      "\",\"counterexamples\":[";
    for (std::size_t i = 0; i < counterexamples.size(); ++i) {
        if (i) out += ',';
        out += "{\"graph6\":\"" + json_escape(counterexamples[i]) + "\",\"note\":\"" +
               json_escape(violation_notes[i]) + "\"}";
    }
    out += "],\"flagged\":[";
    for (std::size_t i = 0; i < flagged.size(); ++i) {
        if (i) out += ',';
        out += "{\"graph6\":\"" + json_escape(flagged[i]) + "\",\"note\":\"" +
               json_escape(flag_notes[i]) + "\"}";
    }
    out += "]}";
    std::cout << out << "\n";
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------- convert

std::string detect_format(const std::string& text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') continue;
        if (ch == '{') return "json";
        if (ch >= '0' && ch <= '9') return "el";
        return "g6";
    }
    throw UsageError("empty input");
}

int cmd_convert(const std::string& word, const std::string& path, const std::string& to) {
    std::string text = read_source(word, path);
    Graph g = parse_input_graph(text, detect_format(text));
    if (to == "graph6") {
        std::cout << encode_graph6(g) << "\n";
    } else if (to == "edge-list") {
        auto es = g.edges();
        std::cout << g.n() << " " << es.size() << "\n";
        for (auto [u, v] : es) std::cout << u << " " << v << "\n";
    } else { // json-adjacency
        std::string out = "{\"n\":" + std::to_string(g.n()) + ",\"edges\":[";
        bool first = true;
        for (auto [u, v] : g.edges()) {
            if (!first) out += ',';
            first = false;
            out += "[" + std::to_string(u) + "," + std::to_string(v) + "]";
        }
        std::cout << out << "]}\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"refined spectra of simple graphs: analysis, construction, census, claims"};
    app.require_subcommand(1);

    // analyze
    auto* an = app.add_subcommand("analyze", "classify one graph and print its refined spectrum");
    std::string an_word, an_input, an_format = "g6";
    bool an_json = false;
    double an_tg = -1, an_tm = -1;
    an->add_option("word", an_word, "graph6 word (default: read stdin)");
    an->add_option("--input", an_input, "read the graph from this file");
    an->add_option("--format", an_format, "input format")
        ->check(CLI::IsMember({"g6", "el", "json"}));
    an->add_flag("--json", an_json, "emit a JSON object instead of the human report");
    an->add_option("--tol-group", an_tg, "eigenvalue grouping scale");
    an->add_option("--tol-main", an_tm, "main-eigenvalue projection cutoff");

    // construct
    auto* co = app.add_subcommand("construct", "build a named family, print its graph6 word");
    std::string co_family;
    std::vector<std::string> co_args;
    int co_switch_row = -1, co_delete = -1;
    std::string co_switch;
    co->add_option("family", co_family,
                   "cliques|multipartite|cycle|star|rook|complete|empty|petersen|cone|"
                   "multicone|join|union|srg-delete")
        ->required();
    co->add_option("args", co_args, "sizes and/or operand graphs (graph6, 'petersen', or '-')");
    co->add_option("--switch-row", co_switch_row, "Seidel-switch on this row of a rook graph");
    co->add_option("--switch", co_switch, "Seidel-switch on a comma-separated vertex set");
    co->add_option("--delete-vertex", co_delete, "delete this vertex after construction");

    // census
    auto* ce = app.add_subcommand("census", "stream graph6 lines into filtered records");
    CensusOptions ce_opt;
    int ce_r = -1, ce_s = -1, ce_d = -1, ce_t = -1, ce_tmin = -1;
    ce->add_option("--input", ce_opt.input, "graph6 lines (default: stdin)");
    ce->add_option("--format", ce_opt.format, "record format")
        ->check(CLI::IsMember({"json", "csv"}));
    ce->add_option("--jobs", ce_opt.jobs, "worker threads (output is order-stable)");
    ce->add_option("--summary", ce_opt.summary_path, "write the summary here instead of stderr");
    ce->add_option("--tol-group", ce_opt.tol_group, "eigenvalue grouping scale");
    ce->add_option("--tol-main", ce_opt.tol_main, "main-eigenvalue projection cutoff");
    ce->add_option("--connected", ce_opt.connected, "keep only (1) or only non- (0) connected");
    ce->add_option("--strong", ce_opt.strong, "keep only strong (1) or only non-strong (0)");
    ce->add_option("--r", ce_r, "exact main count");
    ce->add_option("--s", ce_s, "exact plain count");
    ce->add_option("--d", ce_d, "exact distinct-eigenvalue count");
    ce->add_option("--t", ce_t, "exact distinct-valency count");
    ce->add_option("--t-min", ce_tmin, "minimum distinct-valency count");
    ce->add_option("--counterexamples", ce_opt.counterexamples,
                   "report connected (2,2) non-strong graphs with at least this many valencies");
    ce->add_flag("--refined-pairs", ce_opt.refined_pairs,
                 "report pairs of distinct records sharing a refined spectrum");

    // verify
    auto* ve = app.add_subcommand("verify", "check a named structural claim over a graph stream");
    std::string ve_claim, ve_input;
    int ve_max_n = 7;
    double ve_tg = -1, ve_tm = -1;
    ve->add_option("claim", ve_claim,
                   "bireg-equitable|disconnected-22|rowlinson|strong-4ev|bounds|"
                   "complement-index|cone-main")
        ->required();
    ve->add_option("--max-n", ve_max_n, "exhaustive order bound when no --input is given");
    ve->add_option("--input", ve_input, "graph6 lines to check instead of enumerating");
    ve->add_option("--tol-group", ve_tg, "eigenvalue grouping scale");
    ve->add_option("--tol-main", ve_tm, "main-eigenvalue projection cutoff");

    // convert
    auto* cv = app.add_subcommand("convert", "convert between graph encodings");
    std::string cv_word, cv_input, cv_to = "graph6";
    cv->add_option("input_text", cv_word, "graph6 word or inline edge list");
    cv->add_option("--input", cv_input, "read the graph from this file");
    cv->add_option("--to", cv_to, "output encoding")
        ->check(CLI::IsMember({"graph6", "edge-list", "json-adjacency"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (an->parsed()) return cmd_analyze(an_word, an_input, an_format, an_json, an_tg, an_tm);
        if (co->parsed())
            return cmd_construct(co_family, co_args, co_switch_row, co_switch, co_delete);
        if (ce->parsed()) {
            if (ce_r >= 0) ce_opt.r = ce_r;
            if (ce_s >= 0) ce_opt.s = ce_s;
            if (ce_d >= 0) ce_opt.d = ce_d;
            if (ce_t >= 0) ce_opt.t = ce_t;
            if (ce_tmin >= 0) ce_opt.t_min = ce_tmin;
            return cmd_census(ce_opt);
        }
        if (ve->parsed()) return cmd_verify(ve_claim, ve_max_n, ve_input, ve_tg, ve_tm);
        if (cv->parsed()) return cmd_convert(cv_word, cv_input, cv_to);
    } catch (const CrossCheckError& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Graph6Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 2;
}
