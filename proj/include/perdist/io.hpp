// io.hpp
// File formats. Coefficient fields and cones are JSON; traces and count
// tables are CSV. Writers are hand-rolled with %.17g floats so that
// write -> read -> write is byte-identical; readers go through
// nlohmann::json and report the offending file and byte offset on parse
// errors.
//
//   field:  {"dim": d, "radius": N, "coeffs": [re,im,re,im,...]}
//           row-major over the box {-N..N}^d, first coordinate slowest.
//   cone:   {"dim": d, "halfspaces": [{"normal": [...], "strict": b}, ...],
//            "apex": [...]}
//   trace CSV: header "radius,sum,slope"; the slope column is the local
//           log-log increment between consecutive rows (0 on the first).

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "perdist/compat.hpp"
#include "perdist/cones.hpp"
#include "perdist/field.hpp"
#include "perdist/shiftinv.hpp"
#include "perdist/trace.hpp"
#include "perdist/wavefront.hpp"

namespace perdist::io {

inline std::string fmt17(double v) {
    char buf[44];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // Force float syntax: JSON parsers route bare integers (including
    // "-0") through an integer fast-path that drops the zero's sign.
    std::string s = buf;
    if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
    return s;
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << text;
    if (!out) throw std::runtime_error(path + ": write failed");
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline nlohmann::json parse_json(const std::string& path) {
    try {
        return nlohmann::json::parse(read_text(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Coefficient fields

inline std::string field_to_string(const CoefficientField& f) {
    std::string s = "{\"dim\": " + std::to_string(f.dim()) +
                    ", \"radius\": " + std::to_string(f.radius()) + ", \"coeffs\": [";
    bool first = true;
    for (const auto& v : f.data()) {
        if (!first) s += ",";
        s += fmt17(v.real()) + "," + fmt17(v.imag());
        first = false;
    }
    s += "]}\n";
    return s;
}

inline void write_field(const std::string& path, const CoefficientField& f) {
    write_text(path, field_to_string(f));
}

inline CoefficientField read_field(const std::string& path) {
    const auto j = parse_json(path);
    try {
        const int dim = j.at("dim").get<int>();
        const int radius = j.at("radius").get<int>();
        CoefficientField f(dim, radius);
        const auto& arr = j.at("coeffs");
        if (!arr.is_array() || arr.size() != 2 * f.size())
            throw std::runtime_error("coeffs length must be 2*(2N+1)^d");
        for (std::size_t i = 0; i < f.size(); ++i)
            f.data()[i] = Complex(arr[2 * i].get<double>(), arr[2 * i + 1].get<double>());
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Cones

inline std::string cone_to_string(const LatticeCone& c) {
    std::string s = "{\"dim\": " + std::to_string(c.dim()) + ", \"halfspaces\": [";
    for (std::size_t i = 0; i < c.halfspaces().size(); ++i) {
        const auto& h = c.halfspaces()[i];
        if (i) s += ", ";
        s += "{\"normal\": [";
        for (int a = 0; a < c.dim(); ++a)
            s += (a ? "," : "") + std::to_string(h.normal[a]);
        s += "], \"strict\": ";
        s += h.strict ? "true" : "false";
        s += "}";
    }
    s += "], \"apex\": [";
    for (int a = 0; a < c.dim(); ++a) s += (a ? "," : "") + std::to_string(c.apex()[a]);
    s += "]}\n";
    return s;
}

inline void write_cone(const std::string& path, const LatticeCone& c) {
    write_text(path, cone_to_string(c));
}

inline LatticeCone read_cone(const std::string& path) {
    const auto j = parse_json(path);
    try {
        const int dim = j.at("dim").get<int>();
        std::vector<HalfSpace> hs;
        for (const auto& hj : j.at("halfspaces")) {
            HalfSpace h;
            const auto& n = hj.at("normal");
            if (!n.is_array() || static_cast<int>(n.size()) != dim)
                throw std::runtime_error("normal must have dim entries");
            for (int a = 0; a < dim; ++a) {
                if (!n[static_cast<std::size_t>(a)].is_number_integer())
                    throw std::runtime_error("cone normals must be integers");
                h.normal[a] = n[static_cast<std::size_t>(a)].get<std::int64_t>();
            }
            h.strict = hj.at("strict").get<bool>();
            hs.push_back(h);
        }
        Int3 apex{0, 0, 0};
        if (j.contains("apex")) {
            const auto& a = j.at("apex");
            for (int i = 0; i < dim && i < static_cast<int>(a.size()); ++i)
                apex[i] = a[static_cast<std::size_t>(i)].get<std::int64_t>();
        }
        return LatticeCone(dim, std::move(hs), apex);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Traces and count tables

inline std::string trace_to_csv(const PartialSumTrace& t) {
    std::string s = "radius,sum,slope\n";
    for (std::size_t i = 0; i < t.radii.size(); ++i) {
        double local = 0.0;
        if (i > 0 && t.sums[i - 1] > 0.0 && t.sums[i] > 0.0)
            local = std::log(t.sums[i] / t.sums[i - 1]) /
                    std::log(static_cast<double>(t.radii[i]) / t.radii[i - 1]);
        s += std::to_string(t.radii[i]) + "," + fmt17(t.sums[i]) + "," + fmt17(local) + "\n";
    }
    return s;
}

inline void write_trace_csv(const std::string& path, const PartialSumTrace& t) {
    write_text(path, trace_to_csv(t));
}

inline std::string counts_to_csv(int dim, const std::vector<std::pair<MultiIndex, long long>>& rows) {
    std::string s;
    for (int i = 0; i < dim; ++i) s += "n" + std::to_string(i + 1) + ",";
    s += "abs_n,count\n";
    for (const auto& [n, c] : rows) {
        for (int i = 0; i < dim; ++i) s += std::to_string(n.c[i]) + ",";
        s += fmt17(n.norm()) + "," + std::to_string(c) + "\n";
    }
    return s;
}

// ---------------------------------------------------------------------------
// Reports

inline std::string compat_report_to_json(const CompatibilityReport& rep) {
    std::string s = "{\n  \"verdict\": ";
    s += rep.verdict ? "true" : "false";
    s += ",\n  \"alpha1\": " + fmt17(rep.alpha1) + ", \"beta1\": " + fmt17(rep.beta1);
    s += ",\n  \"alpha2\": " + fmt17(rep.alpha2) + ", \"beta2\": " + fmt17(rep.beta2);
    s += ",\n  \"gamma\": " + fmt17(rep.gamma);
    s += ",\n  \"tau\": " + (rep.verdict ? fmt17(rep.tau) : std::string("null"));
    auto profiles = [&](const std::vector<DecayProfile>& ps) {
        std::string q = "[";
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (i) q += ", ";
            q += "{\"alpha\": " + fmt17(ps[i].alpha) + ", \"beta\": " + fmt17(ps[i].beta) +
                 ", \"alpha_conclusive\": " + (ps[i].alpha_conclusive ? "true" : "false") +
                 ", \"beta_conclusive\": " + (ps[i].beta_conclusive ? "true" : "false") + "}";
        }
        return q + "]";
    };
    s += ",\n  \"profiles1\": " + profiles(rep.profiles1);
    s += ",\n  \"profiles2\": " + profiles(rep.profiles2);
    s += ",\n  \"pairs\": [";
    for (std::size_t i = 0; i < rep.pairs.size(); ++i) {
        const auto& pc = rep.pairs[i];
        if (i) s += ", ";
        s += "{\"i\": " + std::to_string(pc.i) + ", \"j\": " + std::to_string(pc.j) +
             ", \"disjoint\": " + (pc.disjoint.disjoint ? "true" : "false") +
             ", \"certified\": " + (pc.disjoint.certified ? "true" : "false") +
             ", \"gamma_hat\": " + fmt17(pc.fit.gamma_hat) + ", \"c_hat\": " + fmt17(pc.fit.c_hat) +
             "}";
    }
    s += "],\n  \"diagnostics\": [";
    for (std::size_t i = 0; i < rep.diagnostics.size(); ++i) {
        if (i) s += ", ";
        s += nlohmann::json(rep.diagnostics[i]).dump();
    }
    s += "]\n}\n";
    return s;
}

inline std::string wavefront_report_to_json(const WavefrontReport& rep) {
    std::string s = "{\n  \"dim\": " + std::to_string(rep.dim) + ",\n  \"x0\": [";
    for (int i = 0; i < rep.dim; ++i) s += (i ? "," : "") + fmt17(rep.x0[i]);
    s += "],\n  \"aperture_deg\": " + fmt17(rep.theta_deg) + ",\n  \"s_grid\": [";
    for (std::size_t i = 0; i < rep.s_grid.size(); ++i) s += (i ? "," : "") + fmt17(rep.s_grid[i]);
    s += "],\n  \"directions\": [";
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& row = rep.rows[i];
        if (i) s += ",";
        s += "\n    {\"dir\": [";
        for (int a = 0; a < rep.dim; ++a) s += (a ? "," : "") + fmt17(row.dir[a]);
        s += "], \"angle_deg\": " + fmt17(row.angle_deg) + ", \"verdicts\": [";
        for (std::size_t v = 0; v < row.verdicts.size(); ++v) {
            if (v) s += ",";
            s += std::string("\"") + to_string(row.verdicts[v]) + "\"";
        }
        s += "]";
        if (!std::isnan(row.s_star)) {
            s += ", \"s_star\": ";
            s += std::isinf(row.s_star) ? "\"inf\"" : fmt17(row.s_star);
        }
        s += "}";
    }
    s += "\n  ],\n  \"nonregular_arcs\": [";
    for (std::size_t i = 0; i < rep.nonregular_arcs.size(); ++i) {
        if (i) s += ", ";
        s += "{\"center_deg\": " + fmt17(rep.nonregular_arcs[i].center_deg) +
             ", \"half_width_deg\": " + fmt17(rep.nonregular_arcs[i].half_width_deg) + "}";
    }
    s += "]\n}\n";
    return s;
}

// ---------------------------------------------------------------------------
// Sampled generators (CSV: t,value)

inline void write_generator_csv(const std::string& path, const SampledGenerator& g) {
    if (g.dim != 1) throw std::invalid_argument("generator CSV supports d=1 only");
    std::string s = "t,value\n";
    for (int n = g.lo[0]; n <= g.hi[0]; ++n)
        s += fmt17(static_cast<double>(n) / g.m) + "," + fmt17(g.values[g.flat({n, 0, 0})]) + "\n";
    write_text(path, s);
}

inline SampledGenerator read_generator_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    std::string line;
    if (!std::getline(in, line) || line.rfind("t,value", 0) != 0)
        throw std::runtime_error(path + ": expected header 't,value' at offset 0");
    std::vector<double> ts, vs;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error(path + ": missing comma on line " + std::to_string(lineno));
        try {
            ts.push_back(std::stod(line.substr(0, comma)));
            vs.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw std::runtime_error(path + ": bad number on line " + std::to_string(lineno));
        }
    }
    if (ts.size() < 2) throw std::runtime_error(path + ": need at least two samples");
    const double dt = ts[1] - ts[0];
    if (dt <= 0) throw std::runtime_error(path + ": sample points must increase");
    const int m = static_cast<int>(std::llround(1.0 / dt));
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (std::abs(ts[i] - ts[i - 1] - dt) > 1e-9)
            throw std::runtime_error(path + ": non-uniform sample spacing on line " +
                                     std::to_string(i + 2));
    const int lo = static_cast<int>(std::llround(ts.front() * m));
    SampledGenerator g(1, m, {lo, 0, 0}, {lo + static_cast<int>(ts.size()) - 1, 0, 0});
    for (std::size_t i = 0; i < vs.size(); ++i) g.values[i] = vs[i];
    return g;
}

}  // namespace perdist::io
