#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "spinsurf/clifford.hpp"
#include "spinsurf/dirac_rep.hpp"
#include "spinsurf/dsii.hpp"
#include "spinsurf/weierstrass.hpp"

namespace spinsurf {

using nlohmann::json;

/// Round-trip float formatting (17 significant digits).
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Multivectors: {"signature": {...}, "coeffs": [[blade, re, im], ...]} with
// the blade spelled as the ascending generator-digit string, "" for the
// scalar slot. Zero coefficients are omitted.
// ---------------------------------------------------------------------------

inline std::string blade_index_string(BladeMask m) {
    std::string s;
    for (int g = 0; g < kMaxGenerators; ++g)
        if (m & (BladeMask(1) << g)) s += static_cast<char>('0' + g);
    return s;
}

inline json to_json(const MultivectorC& a) {
    json coeffs = json::array();
    for (BladeMask m = 0; m < BladeMask(a.blade_count()); ++m) {
        if (a[m] == std::complex<double>{}) continue;
        coeffs.push_back({blade_index_string(m), a[m].real(), a[m].imag()});
    }
    return {{"signature", {{"p", a.signature().p}, {"q", a.signature().q}}},
            {"coeffs", coeffs}};
}

inline MultivectorC multivector_from_json(const json& j) {
    const Signature sig(j.at("signature").at("p").get<int>(), j.at("signature").at("q").get<int>());
    MultivectorC a(sig);
    for (const auto& entry : j.at("coeffs")) {
        const std::string digits = entry.at(0).get<std::string>();
        BladeMask m = 0;
        for (char c : digits) m |= BladeMask(1) << (c - '0');
        a[m] = {entry.at(1).get<double>(), entry.at(2).get<double>()};
    }
    return a;
}

// ---------------------------------------------------------------------------
// Matrices: row-major [re, im] pairs.
// ---------------------------------------------------------------------------

template <int N>
json to_json(const ComplexMatrix<N>& m) {
    json entries = json::array();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) entries.push_back({m(i, j).real(), m(i, j).imag()});
    return {{"n", N}, {"entries", entries}};
}

template <int N>
ComplexMatrix<N> matrix_from_json(const json& j) {
    if (j.at("n").get<int>() != N) throw std::invalid_argument("matrix_from_json: dimension mismatch");
    ComplexMatrix<N> m;
    const auto& e = j.at("entries");
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            const auto& p = e.at(i * N + k);
            m(i, k) = {p.at(0).get<double>(), p.at(1).get<double>()};
        }
    return m;
}

// ---------------------------------------------------------------------------
// Grids and fields
// ---------------------------------------------------------------------------

inline json to_json(const GridDomain& d) {
    return {{"x0", d.x0}, {"y0", d.y0}, {"lx", d.lx}, {"ly", d.ly},
            {"nx", d.nx}, {"ny", d.ny}, {"periodic", d.periodic}};
}

inline GridDomain domain_from_json(const json& j) {
    return GridDomain(j.at("x0").get<double>(), j.at("y0").get<double>(), j.at("lx").get<double>(),
                      j.at("ly").get<double>(), j.at("nx").get<int>(), j.at("ny").get<int>(),
                      j.at("periodic").get<bool>());
}

inline json to_json(const Field& f) {
    json rows = json::array();
    for (const auto& v : f.v) rows.push_back({v.real(), v.imag()});
    return rows;
}

inline Field field_from_json(const json& j, int nx, int ny) {
    Field f(nx, ny);
    for (std::size_t i = 0; i < f.v.size(); ++i)
        f.v[i] = {j.at(i).at(0).get<double>(), j.at(i).at(1).get<double>()};
    return f;
}

// ---------------------------------------------------------------------------
// Surfaces, spinor fields, snapshots
// ---------------------------------------------------------------------------

inline json to_json(const SurfaceCoords& s, const DiracField* dirac = nullptr) {
    json j{{"kind", "surface"},
           {"domain", to_json(s.domain)},
           {"convention", to_string(s.convention)}};
    const char* names[4] = {"X0", "X1", "X2", "X3"};
    for (int c = 0; c < 4; ++c) j["fields"][names[c]] = to_json(s.x[c]);
    if (dirac) {
        const char* pn[4] = {"Phi1", "Phi2", "Phi3", "Phi4"};
        for (int c = 0; c < 4; ++c) j["fields"][pn[c]] = to_json(dirac->comp[c]);
    }
    return j;
}

inline json snapshot_to_json(const DeformationSnapshot& s) {
    json j{{"kind", "snapshot"},
           {"t", s.t},
           {"domain", to_json(s.data.domain)},
           {"convention", to_string(s.coords.convention)},
           {"dirac_residual_max", s.dirac_residual_max},
           {"dirac_residual_l2", s.dirac_residual_l2},
           {"energy_p", s.energy_p},
           {"energy_q", s.energy_q}};
    j["fields"]["p"] = to_json(s.data.p);
    j["fields"]["q"] = to_json(s.data.q);
    j["fields"]["psi1"] = to_json(s.data.psi1);
    j["fields"]["psi2"] = to_json(s.data.psi2);
    j["fields"]["phi1"] = to_json(s.data.phi1);
    j["fields"]["phi2"] = to_json(s.data.phi2);
    const char* xn[4] = {"X0", "X1", "X2", "X3"};
    const char* pn[4] = {"Phi1", "Phi2", "Phi3", "Phi4"};
    for (int c = 0; c < 4; ++c) {
        j["fields"][xn[c]] = to_json(s.coords.x[c]);
        j["fields"][pn[c]] = to_json(s.dirac.comp[c]);
    }
    return j;
}

// ---------------------------------------------------------------------------
// CSV: x, y, then Re/Im column pairs per field, stable order. The first line
// carries the domain so the file converts back to JSON losslessly.
// ---------------------------------------------------------------------------

inline void write_csv(std::ostream& os, const GridDomain& d,
                      const std::vector<std::pair<std::string, const Field*>>& fields,
                      const std::string& extra_meta = "") {
    os << "# domain x0=" << fmt17(d.x0) << " y0=" << fmt17(d.y0) << " lx=" << fmt17(d.lx)
       << " ly=" << fmt17(d.ly) << " nx=" << d.nx << " ny=" << d.ny
       << " periodic=" << (d.periodic ? 1 : 0);
    if (!extra_meta.empty()) os << ' ' << extra_meta;
    os << '\n';
    os << "x,y";
    for (const auto& [name, f] : fields) os << ",Re_" << name << ",Im_" << name;
    os << '\n';
    for (int i = 0; i < d.ny; ++i)
        for (int j = 0; j < d.nx; ++j) {
            os << fmt17(d.x(j)) << ',' << fmt17(d.y(i));
            for (const auto& [name, f] : fields)
                os << ',' << fmt17((*f)(i, j).real()) << ',' << fmt17((*f)(i, j).imag());
            os << '\n';
        }
}

struct CsvContents {
    GridDomain domain;
    std::vector<std::pair<std::string, Field>> fields;
    std::string extra_meta;
};

inline CsvContents read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# domain", 0) != 0)
        throw std::invalid_argument("read_csv: missing domain header");
    double x0 = 0, y0 = 0, lx = 1, ly = 1;
    int nx = 0, ny = 0, periodic = 0;
    std::string extra;
    {
        std::istringstream hs(line.substr(8));
        std::string tok;
        while (hs >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "x0") x0 = std::stod(val);
            else if (key == "y0") y0 = std::stod(val);
            else if (key == "lx") lx = std::stod(val);
            else if (key == "ly") ly = std::stod(val);
            else if (key == "nx") nx = std::stoi(val);
            else if (key == "ny") ny = std::stoi(val);
            else if (key == "periodic") periodic = std::stoi(val);
            else extra += (extra.empty() ? "" : " ") + tok;
        }
    }
    CsvContents out{GridDomain(x0, y0, lx, ly, nx, ny, periodic != 0), {}, extra};

    if (!std::getline(is, line)) throw std::invalid_argument("read_csv: missing column header");
    std::vector<std::string> cols;
    {
        std::istringstream cs(line);
        std::string c;
        while (std::getline(cs, c, ',')) cols.push_back(c);
    }
    if (cols.size() < 2 || cols[0] != "x" || cols[1] != "y")
        throw std::invalid_argument("read_csv: unexpected column header");
    const std::size_t nfields = (cols.size() - 2) / 2;
    for (std::size_t f = 0; f < nfields; ++f) {
        std::string name = cols[2 + 2 * f];
        if (name.rfind("Re_", 0) == 0) name = name.substr(3);
        out.fields.emplace_back(name, Field(out.domain));
    }

    for (int i = 0; i < out.domain.ny; ++i)
        for (int j = 0; j < out.domain.nx; ++j) {
            if (!std::getline(is, line)) throw std::invalid_argument("read_csv: truncated data");
            std::istringstream ls(line);
            std::string cell;
            std::vector<double> vals;
            while (std::getline(ls, cell, ',')) vals.push_back(std::stod(cell));
            if (vals.size() != cols.size()) throw std::invalid_argument("read_csv: ragged row");
            for (std::size_t f = 0; f < nfields; ++f)
                out.fields[f].second(i, j) = {vals[2 + 2 * f], vals[3 + 2 * f]};
        }
    return out;
}

inline json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    json j;
    is >> j;
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << j.dump(1) << '\n';
}

} // namespace spinsurf
