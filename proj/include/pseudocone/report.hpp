#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pseudocone/bounds.hpp"
#include "pseudocone/cone.hpp"
#include "pseudocone/gf2.hpp"
#include "pseudocone/stopping.hpp"
#include "pseudocone/tanner.hpp"

namespace pseudocone {

struct AnalysisOptions {
    bool min_distance = false;
    bool stopping = false;
    bool exhaustive_stopping = false;
    bool rays = false;
    bool certificate = false;  // implies the three above where possible
    std::size_t cap_codeword_k = kDefaultCodewordCap;
    std::size_t cap_stopping_n = kDefaultStoppingCap;
    std::size_t cap_exhaustive_n = kDefaultExhaustiveCap;
    std::size_t cap_ray_n = kDefaultRayCap;
};

// A stage that could not run records which cap blocked it.
struct Skipped {
    std::string reason;
};

struct AnalysisReport {
    std::string provenance;  // file name or construction description

    std::size_t n = 0, m = 0, rank = 0, k = 0;
    std::optional<std::size_t> girth;  // nullopt = infinite
    std::size_t gamma = 0, lambda = 0;
    std::vector<std::size_t> row_weights;

    std::optional<CodeParameters> code;        // d, A_d, weight distribution
    std::optional<Skipped> code_skipped;
    std::optional<DistanceCertificate> distance_bound_witness;

    std::optional<StoppingReport> stopping;
    std::optional<Skipped> stopping_skipped;

    std::optional<RayCatalog> rays;
    std::optional<Skipped> rays_skipped;

    BoundReport bounds;

    std::optional<OptimalityCertificate> certificate;
    std::optional<Skipped> certificate_skipped;

    std::vector<std::pair<std::string, double>> timing_ms;
    std::vector<std::string> caps_hit;

    bool cap_was_hit() const { return !caps_hit.empty(); }
};

// Runs every requested stage, degrading to partial results (with the blocking
// cap recorded) instead of failing outright.
AnalysisReport analyze(const BinaryMatrix& h, const AnalysisOptions& options,
                       const std::string& provenance);

enum class ReportFormat { json, text };

// Deterministic serialization: fixed key order, rationals as "p/q" plus a
// decimal approximation field.
std::string emit_report(const AnalysisReport& report, ReportFormat format);

}  // namespace pseudocone
