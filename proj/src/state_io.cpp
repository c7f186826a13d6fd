#include "petz/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace petz {

namespace {

using nlohmann::json;

cplx parse_complex(const json& cell) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
        throw InvalidStateError("state file: complex entries must be [re, im] pairs");
    return cplx(cell[0].get<double>(), cell[1].get<double>());
}

CMat parse_matrix(const json& rows, std::size_t dim, const char* field) {
    if (!rows.is_array() || rows.size() != dim)
        throw InvalidStateError(std::string("state file: ") + field + " must have dim rows");
    CMat m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (!rows[i].is_array() || rows[i].size() != dim)
            throw InvalidStateError(std::string("state file: ") + field +
                                    " rows must have dim entries");
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = parse_complex(rows[i][j]);
    }
    return m;
}

}  // namespace

DensityState parse_state(const std::string& json_text, double tol) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw InvalidStateError(std::string("state file: not valid JSON: ") + e.what());
    }
    if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
        throw InvalidStateError("state file: missing positive integer field 'dim'");
    const std::size_t dim = doc["dim"].get<std::size_t>();
    if (dim == 0) throw InvalidStateError("state file: dim must be positive");

    const bool has_matrix = doc.contains("matrix");
    const bool has_eigen = doc.contains("eigenvalues") || doc.contains("eigenvectors");
    if (has_matrix == has_eigen)
        throw InvalidStateError(
            "state file: exactly one of 'matrix' or 'eigenvalues'+'eigenvectors' required");

    if (has_matrix)
        return density_from_matrix(HermitianMatrix(parse_matrix(doc["matrix"], dim, "matrix")),
                                   tol);

    if (!doc.contains("eigenvalues") || !doc.contains("eigenvectors"))
        throw InvalidStateError("state file: eigenvalues and eigenvectors must come together");
    const json& vals = doc["eigenvalues"];
    if (!vals.is_array() || vals.size() != dim)
        throw InvalidStateError("state file: eigenvalues must list dim numbers");
    std::vector<double> eigenvalues(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        if (!vals[k].is_number())
            throw InvalidStateError("state file: eigenvalues must be numbers");
        eigenvalues[k] = vals[k].get<double>();
    }
    return DensityState(std::move(eigenvalues),
                        parse_matrix(doc["eigenvectors"], dim, "eigenvectors"));
}

DensityState load_state(const std::string& path, double tol) {
    std::ifstream in(path);
    if (!in) throw InvalidStateError("state file: cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_state(buffer.str(), tol);
}

std::string state_to_json(const DensityState& s) {
    json doc;
    doc["dim"] = s.dim();
    doc["eigenvalues"] = s.eigenvalues();
    json rows = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < s.dim(); ++j)
            row.push_back({s.eigenvectors()(i, j).real(), s.eigenvectors()(i, j).imag()});
        rows.push_back(std::move(row));
    }
    doc["eigenvectors"] = std::move(rows);
    return doc.dump(2);
}

namespace {

std::string status_of(const ExtendedReal& v) {
    if (v.is_finite()) return "finite";
    return "+inf:" + reason_tag(v.reason());
}

}  // namespace

std::string curve_to_csv(const DivergenceCurve& curve, LogBase base) {
    std::string out = "alpha,value,status\n";
    char buf[64];
    for (std::size_t k = 0; k < curve.grid.size(); ++k) {
        const ExtendedReal v = in_base(curve.values[k], base);
        out += curve.grid[k].label();
        out += ',';
        if (v.is_finite()) {
            std::snprintf(buf, sizeof(buf), "%.12g", v.value());
            out += buf;
        } else {
            out += v.is_plus_inf() ? "inf" : "-inf";
        }
        out += ',';
        out += status_of(curve.values[k]);
        out += '\n';
    }
    return out;
}

ParsedCurve parse_curve_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "alpha,value,status")
        throw Error("curve csv: bad header");
    ParsedCurve parsed;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw Error("curve csv: malformed row");
        const std::string alpha_s = line.substr(0, c1);
        const std::string value_s = line.substr(c1 + 1, c2 - c1 - 1);
        const std::string status_s = line.substr(c2 + 1);

        if (alpha_s == "inf")
            parsed.grid.push_back(AlphaOrder::infinity());
        else
            parsed.grid.push_back(AlphaOrder::from_value(std::stod(alpha_s)));

        if (status_s == "finite") {
            parsed.values.push_back(ExtendedReal::finite(std::stod(value_s)));
        } else if (status_s == "+inf:support") {
            parsed.values.push_back(ExtendedReal::plus_inf(InfReason::SupportViolation));
        } else if (status_s == "+inf:divergent") {
            parsed.values.push_back(ExtendedReal::plus_inf(InfReason::DivergentSum));
        } else if (status_s == "+inf:domain") {
            parsed.values.push_back(ExtendedReal::plus_inf(InfReason::DomainViolation));
        } else {
            throw Error("curve csv: unknown status " + status_s);
        }
    }
    return parsed;
}

}  // namespace petz
