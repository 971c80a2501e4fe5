#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pseudocone/cone.hpp"
#include "pseudocone/gf2.hpp"
#include "pseudocone/stopping.hpp"
#include "pseudocone/tanner.hpp"

namespace pseudocone {

// Girth/column-weight lower bound d_L on d, s(H) and d_P(H).  Requires
// gamma >= 2 and even g >= 6; two algebraically equal routes are kept as
// independent code paths on purpose.
std::uint64_t tanner_bound_dl(std::size_t gamma, std::size_t g);           // level sums
std::uint64_t tanner_bound_closed_form(std::size_t gamma, std::size_t g);  // beta form

// gamma/lambda + 1 when gamma/lambda is an integer, else nullopt.
std::optional<std::uint64_t> kv_bound(std::size_t gamma, std::size_t lambda);

struct BoundReport {
    std::size_t gamma = 0;
    std::size_t lambda = 0;
    std::optional<std::size_t> girth;
    std::optional<std::uint64_t> d_l;       // not-applicable when girth < 6 or infinite
    std::optional<std::uint64_t> kv;        // not-applicable when gamma/lambda non-integer
    std::size_t beta = 0;                   // gamma - 1
    std::optional<std::size_t> t;           // floor((g-6)/4), recorded for traceability
};

BoundReport evaluate_bounds(const TannerGraph& g);

enum class Verdict { asymptotically_optimal, not_optimal, undetermined };

struct RayTightness {
    std::size_t ray_index = 0;
    std::optional<bool> attains_dl;  // nullopt when the bound is not applicable
    std::optional<bool> attains_kv;
    bool is_codeword_multiple = false;
};

struct OptimalityCertificate {
    BoundReport bounds;
    std::optional<bool> d_p_equals_d;
    std::optional<bool> b_p_equals_a_d;
    std::optional<bool> t_s_equals_a_d;
    Verdict verdict = Verdict::undetermined;
    std::vector<RayTightness> per_ray;
};

// Cross-checks Theorems 1-2 on every ray and issues the optimality verdict
// (d_P = d and B_P = A_d).  A bound violation or a tight ray that is not a
// codeword multiple throws TheoremFalsification with the offending ray:
// impossible when the implementation is correct, so it doubles as a self-test.
OptimalityCertificate certify(const BinaryMatrix& h,
                              const std::vector<std::vector<std::uint8_t>>& codewords,
                              const StoppingReport& stopping, const RayCatalog& rays);

// d certified by a lower bound plus an explicit codeword witness.
struct DistanceCertificate {
    std::uint64_t lower_bound = 0;
    std::size_t witness_weight = 0;
    std::optional<std::size_t> certified_d;  // set when the two meet
};

DistanceCertificate certify_distance(std::uint64_t lower_bound, std::size_t witness_weight);

}  // namespace pseudocone
