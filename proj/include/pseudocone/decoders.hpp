#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pseudocone/gf2.hpp"
#include "pseudocone/rational.hpp"

namespace pseudocone {

inline constexpr std::size_t kDefaultRowWeightCap = 12;  // 2^(rho-1) constraints per check
inline constexpr int kLlrScaleBits = 24;                 // LLR rationalization
inline constexpr double kMaxLlr = 1e9;                   // clip before rationalizing

struct LlrVector {
    std::vector<double> values;
};

// BPSK maps 0 -> +1, 1 -> -1; lambda_i = 2 y_i / sigma^2.
LlrVector llr_awgn(const std::vector<double>& received, double sigma);

// lambda * 2^24 rounded to integer: keeps the simplex exact while the channel
// stays real-valued; threshold effects are below simulation noise.
std::vector<std::int64_t> rationalize_llr(const LlrVector& llr);

// Explicit inequality description of P(H) = intersection of conv(C_j):
// box rows x_i <= 1 first, then per check j and odd-cardinality V subset of
// supp(h_j):  sum_{i in V} x_i - sum_{i in supp \ V} x_i <= |V| - 1.
// x >= 0 is implicit in the solver.
struct PolytopeLp {
    std::size_t n = 0;
    std::vector<std::vector<int>> lhs;
    std::vector<int> rhs;
};

PolytopeLp build_polytope_lp(const BinaryMatrix& h,
                             std::size_t cap_row_weight = kDefaultRowWeightCap);

struct DecodeOutcome {
    std::vector<Rational> lp_optimum;
    bool lp_integral = false;
    bool lp_success = false;  // optimum equals the transmitted codeword
    std::vector<std::uint8_t> ml_codeword;
    bool ml_success = false;
    Rational objective_lp = 0;
    Rational objective_ml = 0;
};

// Exact-rational primal simplex over the polytope; Bland's rule resolves
// degenerate ties, which also makes runs reproducible.  Reusable workspace:
// one instance per thread, decode() many times.
class LpDecoder {
public:
    explicit LpDecoder(PolytopeLp lp);

    void decode(const std::vector<std::int64_t>& scaled_llr,
                const std::vector<std::uint8_t>& transmitted, DecodeOutcome& out);

private:
    std::size_t enter_column() const;
    std::size_t leave_row(std::size_t enter) const;
    void pivot(std::size_t row, std::size_t col);
    void reset(const std::vector<std::int64_t>& c);

    PolytopeLp lp_;
    std::size_t n_ = 0, m_ = 0, cols_ = 0;
    std::vector<std::vector<Rational>> t_;  // (m+1) x (n+m+1) tableau
    std::vector<std::size_t> basis_;
};

// Exhaustive ML over the codeword Gray walk; ties toward the
// lexicographically smallest codeword.
class MlDecoder {
public:
    MlDecoder(const BinaryMatrix& h, std::size_t cap_k = kDefaultCodewordCap);

    void decode(const std::vector<std::int64_t>& scaled_llr,
                const std::vector<std::uint8_t>& transmitted, DecodeOutcome& out);

private:
    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> basis_supports_;
};

// One-shot conveniences (transmitted defaults to the all-zeros codeword).
DecodeOutcome lp_decode(const BinaryMatrix& h, const LlrVector& llr,
                        std::size_t cap_row_weight = kDefaultRowWeightCap);
DecodeOutcome ml_decode(const BinaryMatrix& h, const LlrVector& llr,
                        std::size_t cap_k = kDefaultCodewordCap);

struct SnrPoint {
    double snr_db = 0;
    std::uint64_t trials = 0;
    std::uint64_t errors_lp = 0;
    std::uint64_t errors_ml = 0;
    double wer_lp = 0;
    double wer_ml = 0;
    double ratio = 0;  // wer_lp / wer_ml
};

// Monte-Carlo word-error rates under all-zeros transmission (valid by channel
// symmetry).  E_b/N_0 convention: sigma^2 = 1 / (2 R 10^(snr/10)), R = k/n.
// Per-trial RNG streams are derived from (seed, snr index, trial index), so
// threaded and serial runs agree bit for bit.
std::vector<SnrPoint> simulate(const BinaryMatrix& h, const std::vector<double>& snr_db_list,
                               std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

// Runs batches until at least min_ml_errors ML word errors are seen (or
// max_trials is hit); the stopping point depends only on outcomes, never on
// scheduling.
SnrPoint simulate_until_ml_errors(const BinaryMatrix& h, double snr_db, std::size_t snr_index,
                                  std::uint64_t min_ml_errors, std::uint64_t max_trials,
                                  std::uint64_t seed, unsigned threads = 1);

std::string simulation_csv(const std::vector<SnrPoint>& points);

}  // namespace pseudocone
