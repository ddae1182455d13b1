#pragma once

// Domain specification parsing and the serializable analysis report.  All
// exact quantities travel as decimal or "p/q" strings so reports are
// lossless and byte-stable; JSON is produced and consumed as text here to
// keep the serializer out of the public API.

#include <optional>
#include <string>
#include <vector>

#include "mpberg/allowability.hpp"
#include "mpberg/matrix.hpp"
#include "mpberg/polyhedron.hpp"
#include "mpberg/presets.hpp"

namespace mpberg {

struct DomainSpec {
    // Exactly one of the two is active: a raw rational matrix, or a preset
    // family ("hartogs", "H_k", "S_k") with its exponent list.
    std::optional<RatMatrix> raw;
    std::string family;
    std::vector<long> k;

    static DomainSpec from_json_text(const std::string& text);
    RatMatrix defining_matrix() const;
};

struct AnalysisReport {
    std::vector<std::vector<std::string>> normalized_B;
    std::vector<std::vector<std::string>> A;
    std::string det_A;
    std::vector<std::vector<std::string>> B_inv;
    std::vector<std::string> column_heights;
    std::string kappa;
    std::string lp_lower;
    std::string lp_upper;  // "inf" when the upper endpoint is infinite
    bool endpoints_conjugate = false;
    std::string group_order;
    std::optional<WitnessReport> witness;
    std::vector<std::string> diagnostics;

    static AnalysisReport build(const MonomialPolyhedron& p,
                                std::optional<WitnessReport> witness);

    // Deterministic pretty-printed JSON (identical input, identical bytes).
    std::string to_json_text() const;
};

std::vector<std::vector<std::string>> matrix_strings(const IntMatrix& m);
std::vector<std::vector<std::string>> matrix_strings(const RatMatrix& m);

}  // namespace mpberg
