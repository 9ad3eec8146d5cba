#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "specgraph/analysis.hpp"

namespace specgraph {

/// Formatting layer. JSON writers emit a fixed key set (absent data = null)
/// so output is schema-stable; doubles are serialized at 12 significant
/// digits. Hash keys quantize at 9 decimals, with -0 normalized.

inline std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline std::string fmt9(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    std::string s = buf;
    if (s == "-0.000000000") s.erase(0, 1);
    return s;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string rational_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

/// All n eigenvalues (with multiplicity) descending, rounded to 9 decimals.
inline std::string spectrum_key(const EigenReport& er) {
    std::string out;
    for (const auto& g : er.groups)
        for (int i = 0; i < g.mult; ++i) {
            if (!out.empty()) out += ',';
            out += fmt9(g.value);
        }
    return out;
}

/// Index, mains, and plains with plain multiplicities, all at 9 decimals.
inline std::string refined_key(const RefinedSpectrum& rs) {
    std::string out = std::to_string(rs.r) + "," + std::to_string(rs.s) + ";";
    for (std::size_t i = 0; i < rs.mains.size(); ++i) {
        if (i) out += ',';
        out += fmt9(rs.mains[i]);
    }
    out += ';';
    for (std::size_t i = 0; i < rs.plains.size(); ++i) {
        if (i) out += ',';
        out += fmt9(rs.plains[i].value) + "x" + std::to_string(rs.plains[i].pmult);
    }
    return out;
}

/// Cosmetic recovery of p + q*sqrt(r) (optionally over 2) from a double.
/// Integers win first; smallest r wins otherwise. Display only.
inline std::optional<std::string> algebraic_form(double x) {
    const double tol = 1e-9;
    double r0 = std::round(x);
    if (std::abs(x - r0) < tol && std::abs(r0) < 1e15) {
        return std::to_string(static_cast<long long>(r0));
    }
    for (int den = 1; den <= 2; ++den)
        for (int r = 2; r <= 400; ++r) {
            int isq = static_cast<int>(std::round(std::sqrt(static_cast<double>(r))));
            if (isq * isq == r) continue;
            double sq = std::sqrt(static_cast<double>(r));
            for (int q = -9; q <= 9; ++q) {
                if (q == 0) continue;
                double p = std::round(x * den - q * sq);
                if (std::abs(p) > 1000) continue;
                if (std::abs((p + q * sq) / den - x) >= tol) continue;
                std::string core;
                long long pi = static_cast<long long>(p);
                std::string qs = std::abs(q) == 1 ? "" : std::to_string(std::abs(q)) + "*";
                if (pi == 0)
                    core = (q < 0 ? "-" : "") + qs + "sqrt(" + std::to_string(r) + ")";
                else
                    core = std::to_string(pi) + (q < 0 ? "-" : "+") + qs + "sqrt(" +
                           std::to_string(r) + ")";
                if (den == 1) return core;
                return "(" + core + ")/2";
            }
        }
    return std::nullopt;
}

inline std::string pretty_value(double x) {
    if (auto a = algebraic_form(x)) return *a;
    return fmt12(x);
}

namespace detail {

template <typename Ints>
std::string json_int_array(const Ints& v) {
    std::string out = "[";
    bool first = true;
    for (auto x : v) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(x);
    }
    return out + "]";
}

template <typename Doubles>
std::string json_double_array(const Doubles& v) {
    std::string out = "[";
    bool first = true;
    for (double x : v) {
        if (!first) out += ',';
        first = false;
        out += fmt12(x);
    }
    return out + "]";
}

} // namespace detail

inline std::string quotient_json(const QuotientMatrix& q) {
    std::string out = "{\"classes\":[";
    for (std::size_t i = 0; i < q.classes.size(); ++i) {
        if (i) out += ',';
        out += detail::json_int_array(q.classes[i]);
    }
    out += "],\"b\":[";
    for (std::size_t i = 0; i < q.b.size(); ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < q.b[i].size(); ++j) {
            if (j) out += ',';
            out += '"' + rational_string(q.b[i][j]) + '"';
        }
        out += ']';
    }
    out += "],\"equitable\":";
    out += q.equitable ? "true" : "false";
    return out + "}";
}

inline std::string srg_json(const SrgParams& p) {
    return "{\"n\":" + std::to_string(p.n) + ",\"k\":" + std::to_string(p.k) +
           ",\"a\":" + std::to_string(p.a) + ",\"c\":" + std::to_string(p.c) + "}";
}

inline std::string spectrum_json(const EigenReport& er, const RefinedSpectrum& rs) {
    std::string out = "{\"n\":" + std::to_string(er.n) + ",\"tol_used\":" + fmt12(er.tol_used) +
                      ",\"groups\":[";
    for (std::size_t i = 0; i < er.groups.size(); ++i) {
        if (i) out += ',';
        out += "{\"value\":" + fmt12(er.groups[i].value) +
               ",\"mult\":" + std::to_string(er.groups[i].mult) +
               ",\"jproj\":" + fmt12(er.groups[i].jproj) + "}";
    }
    out += "],\"mains\":" + detail::json_double_array(rs.mains) + ",\"plains\":[";
    for (std::size_t i = 0; i < rs.plains.size(); ++i) {
        if (i) out += ',';
        out += "{\"value\":" + fmt12(rs.plains[i].value) +
               ",\"pmult\":" + std::to_string(rs.plains[i].pmult) + "}";
    }
    out += "],\"index\":[" + std::to_string(rs.r) + "," + std::to_string(rs.s) + "]}";
    return out;
}

inline std::string classification_json(const GraphAnalysis& a) {
    std::string out = "{\"srg\":";
    if (a.strong && a.strong->srg)
        out += srg_json(*a.strong->srg);
    else
        out += "null";
    out += ",\"strong\":{\"verdict\":\"";
    out += strong_verdict_string(a);
    out += "\",\"witness\":";
    if (a.strong && a.strong->span_coeffs) {
        const auto& [al, be, ga] = *a.strong->span_coeffs;
        out += "{\"alpha\":\"" + rational_string(al) + "\",\"beta\":\"" + rational_string(be) +
               "\",\"gamma\":\"" + rational_string(ga) + "\"}";
    } else {
        out += "null";
    }
    out += "},\"equitable\":";
    out += a.equitable() ? "true" : "false";
    out += ",\"quotient\":" + quotient_json(a.valency_quot);
    out += ",\"family\":";
    if (a.family)
        out += std::string("\"") + to_string(a.family->family) + "\"";
    else
        out += "null";
    return out + "}";
}

inline std::string family_json(const DisconnectedClassification& f) {
    std::string out = std::string("{\"tag\":\"") + to_string(f.family) + "\"";
    out += ",\"clique_sizes\":" + detail::json_int_array(f.clique_sizes);
    out += ",\"isolated_count\":" + std::to_string(f.isolated_count);
    out += ",\"part_sizes\":" + detail::json_int_array(f.part_sizes);
    out += ",\"srg_a\":";
    out += f.srg_a ? srg_json(*f.srg_a) : "null";
    out += ",\"srg_b\":";
    out += f.srg_b ? srg_json(*f.srg_b) : "null";
    out += ",\"shared_plains\":" + detail::json_double_array(f.shared_plains);
    return out + "}";
}

inline std::string analysis_json(const std::string& g6word, const GraphAnalysis& a) {
    std::string out = "{\"graph6\":\"" + json_escape(g6word) + "\"";
    out += ",\"n\":" + std::to_string(a.n);
    out += ",\"e\":" + std::to_string(a.e);
    out += ",\"connected\":";
    out += a.connected ? "true" : "false";
    out += ",\"t\":" + std::to_string(a.t());
    out += ",\"d\":" + std::to_string(a.d());
    out += ",\"valencies\":" + detail::json_int_array(a.vp.valencies);
    out += ",\"spectrum\":" + spectrum_json(a.er, a.rs);
    out += ",\"classification\":" + classification_json(a);
    out += ",\"strongly_biregular\":";
    if (a.sb) {
        out += "{\"valencies\":" + detail::json_int_array(a.sb->valencies) +
               ",\"quotient\":" + quotient_json(a.sb->quotient) + "}";
    } else {
        out += "null";
    }
    out += ",\"rowlinson\":";
    if (a.rowlinson) {
        out += "{\"main_count\":" + std::to_string(a.rowlinson->main_count) +
               ",\"strongly_biregular\":";
        out += a.rowlinson->strongly_biregular ? "true" : "false";
        out += ",\"consistent\":";
        out += a.rowlinson->consistent ? "true" : "false";
        out += "}";
    } else {
        out += "null";
    }
    out += ",\"family_certificate\":";
    out += a.family ? family_json(*a.family) : "null";
    return out + "}";
}

namespace detail {

inline std::string human_group_list(const EigenReport& er) {
    std::string out;
    for (std::size_t i = 0; i < er.groups.size(); ++i) {
        if (i) out += "  ";
        out += pretty_value(er.groups[i].value);
        if (er.groups[i].mult > 1) out += "^" + std::to_string(er.groups[i].mult);
    }
    return out;
}

inline std::string human_matrix(const std::vector<std::vector<Rational>>& b) {
    std::string out = "[";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < b[i].size(); ++j) {
            if (j) out += ' ';
            out += rational_string(b[i][j]);
        }
        out += "]";
    }
    return out + "]";
}

} // namespace detail

inline std::string human_report(const std::string& g6word, const GraphAnalysis& a) {
    std::ostringstream os;
    os << "graph6              " << g6word << "\n";
    os << "order / size        n=" << a.n << " e=" << a.e << " ("
       << (a.connected ? "connected" : "disconnected") << ")\n";
    os << "valencies           ";
    for (std::size_t i = 0; i < a.vp.valencies.size(); ++i) {
        if (i) os << ", ";
        os << a.vp.valencies[i] << " x" << a.vp.classes[i].size();
    }
    os << "  (" << a.t() << "-valenced)\n";
    os << "spectrum            " << detail::human_group_list(a.er) << "\n";
    os << "main eigenvalues    ";
    for (std::size_t i = 0; i < a.rs.mains.size(); ++i) {
        if (i) os << ", ";
        os << pretty_value(a.rs.mains[i]);
    }
    os << "\nplain eigenvalues   ";
    if (a.rs.plains.empty()) os << "(none)";
    for (std::size_t i = 0; i < a.rs.plains.size(); ++i) {
        if (i) os << ", ";
        os << pretty_value(a.rs.plains[i].value) << " (p=" << a.rs.plains[i].pmult << ")";
    }
    os << "\nindex               (" << a.rs.r << "," << a.rs.s << ")\n";
    os << "valency partition   " << (a.equitable() ? "equitable" : "not equitable")
       << "; quotient " << detail::human_matrix(a.valency_quot.b) << "\n";
    os << "strongly regular    ";
    if (a.strong && a.strong->srg) {
        const auto& p = *a.strong->srg;
        os << "(" << p.n << "," << p.k << "," << p.a << "," << p.c << ")";
    } else {
        os << "no";
    }
    os << "\nstrong              " << strong_verdict_string(a);
    if (a.strong && a.strong->span_coeffs) {
        const auto& [al, be, ga] = *a.strong->span_coeffs;
        os << "  (S^2 = " << rational_string(al) << "*S + " << rational_string(be) << "*I + "
           << rational_string(ga) << "*J)";
    }
    os << "\nstrongly biregular  ";
    if (a.sb) {
        os << "yes, valencies {";
        for (std::size_t i = 0; i < a.sb->valencies.size(); ++i) {
            if (i) os << ",";
            os << a.sb->valencies[i];
        }
        os << "}";
    } else {
        os << "no";
    }
    os << "\n";
    if (a.rowlinson) {
        os << "three-eigenvalue    mains=" << a.rowlinson->main_count << ", strongly biregular="
           << (a.rowlinson->strongly_biregular ? "yes" : "no")
           << ", equivalence " << (a.rowlinson->consistent ? "holds" : "VIOLATED") << "\n";
    }
    if (a.family) {
        os << "disconnected (2,2)  family " << to_string(a.family->family) << "\n";
    }
    return os.str();
}

} // namespace specgraph
