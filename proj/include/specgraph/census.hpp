#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "specgraph/analysis.hpp"
#include "specgraph/graph6.hpp"
#include "specgraph/report.hpp"

namespace specgraph {

/// Stream census over graph6 lines. Graphs are analyzed independently
/// (possibly in parallel) but records are always emitted in input order, so
/// output is byte-identical regardless of worker count. Malformed lines are
/// collected with their line numbers and processing continues; a failed
/// main-count cross-check aborts the whole run instead.

struct FilterSpec {
    std::optional<bool> connected;
    std::optional<int> r;
    std::optional<int> s;
    std::optional<int> d;
    std::optional<int> t_exact;
    std::optional<int> t_min;
    std::optional<bool> strong;

    bool passes(const GraphAnalysis& a) const {
        if (connected && a.connected != *connected) return false;
        if (r && a.rs.r != *r) return false;
        if (s && a.rs.s != *s) return false;
        if (d && a.d() != *d) return false;
        if (t_exact && a.t() != *t_exact) return false;
        if (t_min && a.t() < *t_min) return false;
        if (strong) {
            bool is_strong = a.strong && a.strong->strong();
            if (is_strong != *strong) return false;
        }
        return true;
    }
};

struct CensusRecord {
    std::string g6;
    int n = 0;
    long long e = 0;
    int t = 0;
    int d = 0;
    int r = 0;
    int s = 0;
    std::string strong_verdict;
    std::string spectrum_key;
    std::string refined_key;

    bool operator==(const CensusRecord& o) const = default;
};

inline CensusRecord make_record(const GraphAnalysis& a) {
    CensusRecord rec;
    rec.g6 = encode_graph6(a.g);
    rec.n = a.n;
    rec.e = a.e;
    rec.t = a.t();
    rec.d = a.d();
    rec.r = a.rs.r;
    rec.s = a.rs.s;
    rec.strong_verdict = strong_verdict_string(a);
    rec.spectrum_key = spectrum_key(a.er);
    rec.refined_key = refined_key(a.rs);
    return rec;
}

inline std::string census_record_json(const CensusRecord& r) {
    return "{\"graph6\":\"" + json_escape(r.g6) + "\",\"n\":" + std::to_string(r.n) +
           ",\"e\":" + std::to_string(r.e) + ",\"t\":" + std::to_string(r.t) +
           ",\"d\":" + std::to_string(r.d) + ",\"index\":[" + std::to_string(r.r) + "," +
           std::to_string(r.s) + "],\"strong\":\"" + r.strong_verdict +
           "\",\"spectrum_key\":\"" + r.spectrum_key + "\",\"refined_key\":\"" + r.refined_key +
           "\"}";
}

inline std::string census_csv_header() {
    return "graph6,n,e,t,d,r,s,strong,spectrum_key,refined_key";
}

inline std::string census_record_csv(const CensusRecord& r) {
    return r.g6 + "," + std::to_string(r.n) + "," + std::to_string(r.e) + "," +
           std::to_string(r.t) + "," + std::to_string(r.d) + "," + std::to_string(r.r) + "," +
           std::to_string(r.s) + "," + r.strong_verdict + ",\"" + r.spectrum_key + "\",\"" +
           r.refined_key + "\"";
}

struct CensusLineError {
    std::size_t line = 0;
    std::string message;
};

struct CensusStats {
    std::size_t lines = 0;  // non-blank input lines
    std::size_t parsed = 0; // graphs successfully analyzed
    std::size_t passed = 0; // records emitted
    std::vector<CensusLineError> errors;
};

namespace censusdetail {

struct Outcome {
    enum class Kind { Passed, Filtered, Error } kind = Kind::Error;
    CensusRecord rec;
    std::string message;
};

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline Outcome process_line(const std::string& word, const FilterSpec& filter,
                            const Tolerances& tol) {
    Outcome out;
    Graph g;
    try {
        g = parse_graph6(word);
    } catch (const Graph6Error& e) {
        out.kind = Outcome::Kind::Error;
        out.message = e.what();
        return out;
    }
    try {
        GraphAnalysis a = analyze(g, tol);
        out.kind = filter.passes(a) ? Outcome::Kind::Passed : Outcome::Kind::Filtered;
        if (out.kind == Outcome::Kind::Passed) out.rec = make_record(a);
    } catch (const CrossCheckError&) {
        throw; // integrity failure, never swallowed
    } catch (const std::invalid_argument& e) {
        out.kind = Outcome::Kind::Error;
        out.message = e.what();
    }
    return out;
}

} // namespace censusdetail

template <typename Emit>
CensusStats run_census(std::istream& in, const FilterSpec& filter, Emit&& emit,
                       const Tolerances& tol = {}, int jobs = 0) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    CensusStats stats;
    std::vector<std::pair<std::size_t, std::string>> chunk;
    const std::size_t chunk_cap = static_cast<std::size_t>(jobs) * 64;
    std::size_t line_no = 0;
    std::string raw;

    auto flush = [&]() {
        if (chunk.empty()) return;
        std::vector<censusdetail::Outcome> outcomes(chunk.size());
        if (jobs == 1 || chunk.size() == 1) {
            for (std::size_t i = 0; i < chunk.size(); ++i)
                outcomes[i] = censusdetail::process_line(chunk[i].second, filter, tol);
        } else {
            std::size_t slices = std::min<std::size_t>(jobs, chunk.size());
            std::vector<std::future<void>> futs;
            futs.reserve(slices);
            for (std::size_t w = 0; w < slices; ++w) {
                futs.push_back(std::async(std::launch::async, [&, w]() {
                    for (std::size_t i = w; i < chunk.size(); i += slices)
                        outcomes[i] = censusdetail::process_line(chunk[i].second, filter, tol);
                }));
            }
            for (auto& f : futs) f.get();
        }
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            const auto& o = outcomes[i];
            switch (o.kind) {
                case censusdetail::Outcome::Kind::Passed:
                    ++stats.parsed;
                    ++stats.passed;
                    emit(o.rec);
                    break;
                case censusdetail::Outcome::Kind::Filtered:
                    ++stats.parsed;
                    break;
                case censusdetail::Outcome::Kind::Error:
                    stats.errors.push_back({chunk[i].first, o.message});
                    break;
            }
        }
        chunk.clear();
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string word = censusdetail::trim(raw);
        if (word.empty()) continue;
        ++stats.lines;
        chunk.emplace_back(line_no, std::move(word));
        if (chunk.size() >= chunk_cap) flush();
    }
    flush();
    return stats;
}

/// Hunt for connected index-(2,2) graphs with at least C distinct valencies
/// that are not strong. An empty result is evidence in favor of the bound C.
inline std::vector<CensusRecord> find_counterexamples(std::istream& in, int C,
                                                      const Tolerances& tol = {}, int jobs = 0,
                                                      CensusStats* stats_out = nullptr) {
    if (C < 1) throw std::invalid_argument("counterexample threshold must be >= 1");
    FilterSpec f;
    f.connected = true;
    f.r = 2;
    f.s = 2;
    f.t_min = C;
    f.strong = false;
    std::vector<CensusRecord> out;
    CensusStats stats =
        run_census(in, f, [&](const CensusRecord& r) { out.push_back(r); }, tol, jobs);
    if (stats_out) *stats_out = stats;
    return out;
}

struct CospectralPair {
    CensusRecord a;
    CensusRecord b;
    bool complements_cospectral = false;
};

namespace censusdetail {

struct PairCache {
    Graph g;
    RefinedSpectrum rs;
    double rho = 0.0;
    std::vector<double> co_spectrum; // complement eigenvalues, descending, with multiplicity
    double co_rho = 0.0;
};

inline PairCache load_pair_cache(const std::string& g6, const Tolerances& tol) {
    PairCache c;
    c.g = parse_graph6(g6);
    EigenReport er = eigendecompose(c.g, tol);
    c.rs = refined_spectrum(c.g, er, tol);
    c.rho = er.spectral_radius;
    EigenReport co = eigendecompose(complement(c.g), tol);
    c.co_rho = co.spectral_radius;
    for (const auto& grp : co.groups)
        for (int i = 0; i < grp.mult; ++i) c.co_spectrum.push_back(grp.value);
    return c;
}

inline bool refined_close(const RefinedSpectrum& x, const RefinedSpectrum& y, double tau) {
    if (x.r != y.r || x.s != y.s) return false;
    for (int i = 0; i < x.r; ++i)
        if (std::abs(x.mains[i] - y.mains[i]) > tau) return false;
    for (int i = 0; i < x.s; ++i) {
        if (x.plains[i].pmult != y.plains[i].pmult) return false;
        if (std::abs(x.plains[i].value - y.plains[i].value) > tau) return false;
    }
    return true;
}

} // namespace censusdetail

/// All unordered pairs of distinct records sharing a refined key, re-verified
/// against the grouping tolerance, each annotated with whether the two
/// complements have matching spectra.
inline std::vector<CospectralPair> find_refined_cospectral_pairs(
    const std::vector<CensusRecord>& records, const Tolerances& tol = {}) {
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < records.size(); ++i)
        buckets[records[i].refined_key].push_back(i);

    std::vector<CospectralPair> out;
    std::unordered_map<std::size_t, censusdetail::PairCache> cache;
    auto cached = [&](std::size_t i) -> const censusdetail::PairCache& {
        auto it = cache.find(i);
        if (it == cache.end())
            it = cache.emplace(i, censusdetail::load_pair_cache(records[i].g6, tol)).first;
        return it->second;
    };

    for (const auto& [key, idx] : buckets) {
        if (idx.size() < 2) continue;
        for (std::size_t x = 0; x < idx.size(); ++x)
            for (std::size_t y = x + 1; y < idx.size(); ++y) {
                const CensusRecord& ra = records[idx[x]];
                const CensusRecord& rb = records[idx[y]];
                if (ra.g6 == rb.g6) continue; // identical labeled graph
                const auto& ca = cached(idx[x]);
                const auto& cb = cached(idx[y]);
                double tau = tol.group_scale * std::max(1.0, std::max(ca.rho, cb.rho));
                if (!censusdetail::refined_close(ca.rs, cb.rs, tau)) continue;
                CospectralPair p;
                p.a = ra;
                p.b = rb;
                double co_tau =
                    tol.group_scale * std::max(1.0, std::max(ca.co_rho, cb.co_rho));
                bool co_match = ca.co_spectrum.size() == cb.co_spectrum.size();
                for (std::size_t i = 0; co_match && i < ca.co_spectrum.size(); ++i)
                    co_match = std::abs(ca.co_spectrum[i] - cb.co_spectrum[i]) <= co_tau;
                p.complements_cospectral = co_match;
                out.push_back(p);
            }
    }
    return out;
}

inline std::string cospectral_pair_json(const CospectralPair& p) {
    return "{\"a\":" + census_record_json(p.a) + ",\"b\":" + census_record_json(p.b) +
           ",\"complements_cospectral\":" + (p.complements_cospectral ? "true" : "false") + "}";
}

} // namespace specgraph
