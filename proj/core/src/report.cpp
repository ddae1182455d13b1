#include "mpberg/report.hpp"

#include <json.hpp>

namespace mpberg {

using nlohmann::ordered_json;

DomainSpec DomainSpec::from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid spec JSON: ") + e.what());
    }

    DomainSpec spec;
    if (j.contains("B")) {
        const auto& rows = j.at("B");
        if (!rows.is_array() || rows.empty())
            throw UsageError("spec field 'B' must be a non-empty array of rows");
        const std::size_t n = rows.size();
        RatMatrix b(n, rows.at(0).size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto& row = rows.at(i);
            if (!row.is_array() || row.size() != b.cols())
                throw UsageError("spec field 'B' must be rectangular");
            for (std::size_t c = 0; c < b.cols(); ++c) {
                const auto& cell = row.at(c);
                if (cell.is_string())
                    b(i, c) = rational_from_string(cell.get<std::string>());
                else if (cell.is_number_integer())
                    b(i, c) = Rational(static_cast<long>(cell.get<long long>()));
                else
                    throw UsageError(
                        "matrix entries must be strings (\"p/q\") or integers");
            }
        }
        spec.raw = std::move(b);
        return spec;
    }
    if (j.contains("family")) {
        spec.family = j.at("family").get<std::string>();
        if (!j.contains("k") || !j.at("k").is_array())
            throw UsageError("preset spec needs an integer array 'k'");
        for (const auto& v : j.at("k")) {
            if (!v.is_number_integer())
                throw UsageError("preset exponents must be integers");
            spec.k.push_back(static_cast<long>(v.get<long long>()));
        }
        return spec;
    }
    throw UsageError("spec must contain either 'B' or 'family'");
}

RatMatrix DomainSpec::defining_matrix() const {
    if (raw) return *raw;
    if (family == "hartogs") {
        if (k.size() != 2)
            throw UsageError("family 'hartogs' needs exactly two exponents");
        return hartogs_matrix(k[0], k[1]);
    }
    if (family == "H_k") return to_rational(elementary_signature_matrix(k));
    if (family == "S_k") return to_rational(chain_matrix(k));
    throw UsageError("unknown family '" + family +
                     "' (expected hartogs, H_k or S_k)");
}

std::vector<std::vector<std::string>> matrix_strings(const IntMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i].push_back(to_string(m(i, j)));
    }
    return out;
}

std::vector<std::vector<std::string>> matrix_strings(const RatMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i].push_back(to_string(m(i, j)));
    }
    return out;
}

AnalysisReport AnalysisReport::build(const MonomialPolyhedron& p,
                                     std::optional<WitnessReport> witness) {
    AnalysisReport rep;
    rep.normalized_B = matrix_strings(p.defining_matrix());
    rep.A = matrix_strings(p.exponent_matrix());
    rep.det_A = to_string(p.det_A());
    rep.B_inv = matrix_strings(p.inverse_matrix());
    for (const BigInt& h : p.column_heights())
        rep.column_heights.push_back(to_string(h));
    rep.kappa = to_string(p.complexity());
    rep.lp_lower = to_string(p.lp_interval().lower);
    rep.lp_upper = p.lp_interval().finite_upper()
                       ? to_string(*p.lp_interval().upper)
                       : std::string("inf");
    rep.endpoints_conjugate = p.lp_interval().finite_upper()
                                  ? p.lp_interval().endpoints_conjugate()
                                  : true;  // conjugate pair (1, inf)
    rep.group_order = to_string(p.det_A());
    rep.witness = std::move(witness);
    if (!rep.witness && p.complexity() == 1)
        rep.diagnostics.push_back(
            "complexity 1: projection bounded for every finite p > 1, "
            "no unboundedness witness exists");
    return rep;
}

std::string AnalysisReport::to_json_text() const {
    ordered_json j;
    j["normalized_B"] = normalized_B;
    j["A"] = A;
    j["det_A"] = det_A;
    j["B_inv"] = B_inv;
    j["column_heights"] = column_heights;
    j["kappa"] = kappa;
    j["lp_interval"] = {{"lower", lp_lower},
                        {"upper", lp_upper},
                        {"endpoints_conjugate", endpoints_conjugate}};
    j["group_order"] = group_order;
    if (witness) {
        ordered_json w;
        w["critical_column"] = witness->critical_column + 1;  // 1-based
        std::vector<std::string> beta;
        for (const BigInt& b : witness->beta) beta.push_back(to_string(b));
        w["beta"] = beta;
        w["on_plane"] = witness->on_plane;
        w["in_s2"] = witness->in_s2;
        w["excluded_exponent"] = to_string(witness->excluded_exponent);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["diagnostics"] = diagnostics;
    return j.dump(2) + "\n";
}

}  // namespace mpberg
