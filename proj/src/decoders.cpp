#include "pseudocone/decoders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace pseudocone {

LlrVector llr_awgn(const std::vector<double>& received, double sigma) {
    if (!(sigma > 0)) throw NonPositiveSigma("llr_awgn requires sigma > 0");
    LlrVector out;
    out.values.reserve(received.size());
    for (double y : received) {
        double v = 2.0 * y / (sigma * sigma);
        if (!std::isfinite(v)) v = v > 0 ? kMaxLlr : -kMaxLlr;
        out.values.push_back(std::clamp(v, -kMaxLlr, kMaxLlr));
    }
    return out;
}

std::vector<std::int64_t> rationalize_llr(const LlrVector& llr) {
    std::vector<std::int64_t> scaled;
    scaled.reserve(llr.values.size());
    const double f = static_cast<double>(std::int64_t{1} << kLlrScaleBits);
    for (double v : llr.values) scaled.push_back(std::llround(v * f));
    return scaled;
}

PolytopeLp build_polytope_lp(const BinaryMatrix& h, std::size_t cap_row_weight) {
    PolytopeLp lp;
    lp.n = h.cols();
    for (std::size_t i = 0; i < lp.n; ++i) {
        std::vector<int> row(lp.n, 0);
        row[i] = 1;
        lp.lhs.push_back(std::move(row));
        lp.rhs.push_back(1);
    }
    for (std::size_t j = 0; j < h.rows(); ++j) {
        const auto supp = h.row_support(j);
        if (supp.empty()) continue;
        if (supp.size() > cap_row_weight)
            throw RowWeightTooLarge("row weight " + std::to_string(supp.size()) +
                                    " exceeds LP cap " + std::to_string(cap_row_weight));
        const std::uint32_t total = std::uint32_t{1} << supp.size();
        for (std::uint32_t mask = 0; mask < total; ++mask) {
            if (std::popcount(mask) % 2 == 0) continue;
            std::vector<int> row(lp.n, 0);
            for (std::size_t b = 0; b < supp.size(); ++b)
                row[supp[b]] = (mask >> b) & 1u ? 1 : -1;
            lp.lhs.push_back(std::move(row));
            lp.rhs.push_back(static_cast<int>(std::popcount(mask)) - 1);
        }
    }
    return lp;
}

LpDecoder::LpDecoder(PolytopeLp lp) : lp_(std::move(lp)) {
    n_ = lp_.n;
    m_ = lp_.lhs.size();
    cols_ = n_ + m_ + 1;
    t_.assign(m_ + 1, std::vector<Rational>(cols_, Rational(0)));
    basis_.assign(m_, 0);
}

void LpDecoder::reset(const std::vector<std::int64_t>& c) {
    for (std::size_t i = 0; i < m_; ++i) {
        auto& row = t_[i];
        for (std::size_t j = 0; j < n_; ++j) row[j] = lp_.lhs[i][j];
        for (std::size_t j = 0; j < m_; ++j) row[n_ + j] = (i == j) ? 1 : 0;
        row[cols_ - 1] = lp_.rhs[i];
        basis_[i] = n_ + i;
    }
    auto& obj = t_[m_];
    for (std::size_t j = 0; j < n_; ++j) obj[j] = c[j];
    for (std::size_t j = n_; j < cols_; ++j) obj[j] = 0;
}

std::size_t LpDecoder::enter_column() const {
    // Bland: smallest-index column with a negative reduced cost
    for (std::size_t j = 0; j + 1 < cols_; ++j)
        if (t_[m_][j] < 0) return j;
    return cols_;  // optimal
}

std::size_t LpDecoder::leave_row(std::size_t enter) const {
    std::size_t best = m_;
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][cols_ - 1] / t_[i][enter];
        if (best == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[best])) {
            best = i;
            best_ratio = ratio;
        }
    }
    if (best == m_)
        throw std::logic_error("LP unbounded: impossible over the decoding polytope");
    return best;
}

void LpDecoder::pivot(std::size_t row, std::size_t col) {
    auto& pr = t_[row];
    const Rational inv = 1 / pr[col];
    for (auto& v : pr) v *= inv;
    pr[col] = 1;
    for (std::size_t i = 0; i <= m_; ++i) {
        if (i == row) continue;
        auto& ri = t_[i];
        if (ri[col] == 0) continue;
        const Rational factor = ri[col];
        for (std::size_t j = 0; j < cols_; ++j) ri[j] -= factor * pr[j];
        ri[col] = 0;
    }
    basis_[row] = col;
}

void LpDecoder::decode(const std::vector<std::int64_t>& scaled_llr,
                       const std::vector<std::uint8_t>& transmitted, DecodeOutcome& out) {
    if (scaled_llr.size() != n_ || transmitted.size() != n_)
        throw LengthMismatch("LLR/transmitted length does not match n");

    out.lp_optimum.assign(n_, Rational(0));
    const bool none_negative =
        std::all_of(scaled_llr.begin(), scaled_llr.end(), [](std::int64_t v) { return v >= 0; });
    if (!none_negative) {
        reset(scaled_llr);
        for (;;) {
            const std::size_t enter = enter_column();
            if (enter == cols_) break;
            pivot(leave_row(enter), enter);
        }
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) out.lp_optimum[basis_[i]] = t_[i][cols_ - 1];
    }
    // else: no negative reduced cost at the all-slack basis, the zero vertex
    // is already optimal

    out.lp_integral = true;
    for (const auto& v : out.lp_optimum)
        if (v != 0 && v != 1) {
            out.lp_integral = false;
            break;
        }
    out.lp_success = true;
    for (std::size_t i = 0; i < n_; ++i)
        if (out.lp_optimum[i] != Rational(transmitted[i])) {
            out.lp_success = false;
            break;
        }
    Rational obj = 0;
    for (std::size_t i = 0; i < n_; ++i)
        if (out.lp_optimum[i] != 0) obj += Rational(scaled_llr[i]) * out.lp_optimum[i];
    out.objective_lp = obj / Rational(std::int64_t{1} << kLlrScaleBits);
}

MlDecoder::MlDecoder(const BinaryMatrix& h, std::size_t cap_k) : n_(h.cols()) {
    const auto ns = detail::null_space_basis(h);
    if (ns.k > cap_k)
        throw DimensionTooLarge("ML decoding needs k <= " + std::to_string(cap_k) +
                                ", got k = " + std::to_string(ns.k));
    for (std::size_t b = 0; b < ns.k; ++b) {
        std::vector<std::size_t> supp;
        for (std::size_t i = 0; i < n_; ++i)
            if ((ns.basis[b * ns.words + i / 64] >> (i % 64)) & 1u) supp.push_back(i);
        basis_supports_.push_back(std::move(supp));
    }
}

namespace {

bool lex_less(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Rational int128_to_rational(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : v;
    BigInt big = static_cast<std::uint64_t>(mag >> 64);
    big <<= 64;
    big += static_cast<std::uint64_t>(mag);
    if (neg) big = -big;
    return Rational(big);
}

}  // namespace

void MlDecoder::decode(const std::vector<std::int64_t>& scaled_llr,
                       const std::vector<std::uint8_t>& transmitted, DecodeOutcome& out) {
    if (scaled_llr.size() != n_ || transmitted.size() != n_)
        throw LengthMismatch("LLR/transmitted length does not match n");
    std::vector<std::uint8_t> cur(n_, 0);
    std::vector<std::uint8_t> best(n_, 0);
    __int128 cur_obj = 0, best_obj = 0;
    const std::uint64_t total = std::uint64_t{1} << basis_supports_.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        const auto b = static_cast<std::size_t>(std::countr_zero(i));
        for (auto pos : basis_supports_[b]) {
            if (cur[pos]) {
                cur[pos] = 0;
                cur_obj -= scaled_llr[pos];
            } else {
                cur[pos] = 1;
                cur_obj += scaled_llr[pos];
            }
        }
        if (cur_obj < best_obj || (cur_obj == best_obj && lex_less(cur, best))) {
            best_obj = cur_obj;
            best = cur;
        }
    }
    out.ml_codeword = best;
    out.ml_success = best == transmitted;
    out.objective_ml = int128_to_rational(best_obj) / Rational(std::int64_t{1} << kLlrScaleBits);
}

DecodeOutcome lp_decode(const BinaryMatrix& h, const LlrVector& llr, std::size_t cap_row_weight) {
    LpDecoder dec(build_polytope_lp(h, cap_row_weight));
    DecodeOutcome out;
    dec.decode(rationalize_llr(llr), std::vector<std::uint8_t>(h.cols(), 0), out);
    return out;
}

DecodeOutcome ml_decode(const BinaryMatrix& h, const LlrVector& llr, std::size_t cap_k) {
    MlDecoder dec(h, cap_k);
    DecodeOutcome out;
    dec.decode(rationalize_llr(llr), std::vector<std::uint8_t>(h.cols(), 0), out);
    return out;
}

namespace {

// splitmix64; per-trial streams keyed on (seed, snr index, trial index)
std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

struct TrialRng {
    std::uint64_t state;

    TrialRng(std::uint64_t seed, std::size_t snr_index, std::uint64_t trial) {
        state = mix64(seed + 0x9E3779B97F4A7C15ull * (snr_index + 1)) ^
                mix64(trial + 0x632BE59BD9B4E019ull);
    }

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        return mix64(state);
    }

    // Box-Muller; fills out with iid standard normals
    void normals(std::vector<double>& out, std::size_t n) {
        out.resize(n);
        for (std::size_t i = 0; i < n; i += 2) {
            const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1p-53;  // (0,1]
            const double u2 = static_cast<double>(next() >> 11) * 0x1p-53;          // [0,1)
            const double r = std::sqrt(-2.0 * std::log(u1));
            out[i] = r * std::cos(2.0 * std::numbers::pi * u2);
            if (i + 1 < n) out[i + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
        }
    }
};

struct TrialCounts {
    std::uint64_t errors_lp = 0;
    std::uint64_t errors_ml = 0;
};

double sigma_for_snr(const BinaryMatrix& h, double snr_db) {
    const std::size_t k = h.cols() - gf2_rank(h);
    if (k == 0) throw Error("simulation requires k >= 1 (rate 0 code)");
    const double rate = static_cast<double>(k) / static_cast<double>(h.cols());
    const double sigma_sq = 1.0 / (2.0 * rate * std::pow(10.0, snr_db / 10.0));
    return std::sqrt(sigma_sq);
}

TrialCounts run_trials(const BinaryMatrix& h, const PolytopeLp& lp, double sigma,
                       std::size_t snr_index, std::uint64_t seed, std::uint64_t first,
                       std::uint64_t last) {
    LpDecoder lp_dec(lp);
    MlDecoder ml_dec(h);
    const std::size_t n = h.cols();
    const std::vector<std::uint8_t> zeros(n, 0);
    std::vector<double> z, y(n);
    std::vector<std::int64_t> scaled(n);
    const double f = static_cast<double>(std::int64_t{1} << kLlrScaleBits);
    const double llr_coef = 2.0 / (sigma * sigma);
    DecodeOutcome out;
    TrialCounts counts;
    for (std::uint64_t t = first; t < last; ++t) {
        TrialRng rng(seed, snr_index, t);
        rng.normals(z, n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = 1.0 + sigma * z[i];  // all-zeros codeword, BPSK 0 -> +1
            scaled[i] = std::llround(std::clamp(llr_coef * y[i], -kMaxLlr, kMaxLlr) * f);
        }
        lp_dec.decode(scaled, zeros, out);
        if (!out.lp_success) ++counts.errors_lp;
        ml_dec.decode(scaled, zeros, out);
        if (!out.ml_success) ++counts.errors_ml;
    }
    return counts;
}

TrialCounts run_trials_parallel(const BinaryMatrix& h, const PolytopeLp& lp, double sigma,
                                std::size_t snr_index, std::uint64_t seed, std::uint64_t first,
                                std::uint64_t last, unsigned threads) {
    if (threads <= 1 || last - first < 2 * threads)
        return run_trials(h, lp, sigma, snr_index, seed, first, last);
    std::vector<TrialCounts> partial(threads);
    std::vector<std::thread> pool;
    const std::uint64_t span = last - first;
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t lo = first + span * w / threads;
        const std::uint64_t hi = first + span * (w + 1) / threads;
        pool.emplace_back([&, w, lo, hi] {
            partial[w] = run_trials(h, lp, sigma, snr_index, seed, lo, hi);
        });
    }
    for (auto& th : pool) th.join();
    TrialCounts total;
    for (const auto& p : partial) {
        total.errors_lp += p.errors_lp;
        total.errors_ml += p.errors_ml;
    }
    return total;
}

SnrPoint finish_point(double snr_db, std::uint64_t trials, const TrialCounts& counts) {
    SnrPoint pt;
    pt.snr_db = snr_db;
    pt.trials = trials;
    pt.errors_lp = counts.errors_lp;
    pt.errors_ml = counts.errors_ml;
    pt.wer_lp = trials ? static_cast<double>(counts.errors_lp) / trials : 0.0;
    pt.wer_ml = trials ? static_cast<double>(counts.errors_ml) / trials : 0.0;
    pt.ratio = counts.errors_ml
                   ? static_cast<double>(counts.errors_lp) / static_cast<double>(counts.errors_ml)
                   : std::numeric_limits<double>::infinity();
    return pt;
}

}  // namespace

std::vector<SnrPoint> simulate(const BinaryMatrix& h, const std::vector<double>& snr_db_list,
                               std::uint64_t trials, std::uint64_t seed, unsigned threads) {
    const PolytopeLp lp = build_polytope_lp(h);
    std::vector<SnrPoint> points;
    for (std::size_t s = 0; s < snr_db_list.size(); ++s) {
        const double sigma = sigma_for_snr(h, snr_db_list[s]);
        const TrialCounts counts = run_trials_parallel(h, lp, sigma, s, seed, 0, trials, threads);
        points.push_back(finish_point(snr_db_list[s], trials, counts));
    }
    return points;
}

SnrPoint simulate_until_ml_errors(const BinaryMatrix& h, double snr_db, std::size_t snr_index,
                                  std::uint64_t min_ml_errors, std::uint64_t max_trials,
                                  std::uint64_t seed, unsigned threads) {
    constexpr std::uint64_t kBatch = 8192;  // fixed so results don't depend on threads
    const PolytopeLp lp = build_polytope_lp(h);
    const double sigma = sigma_for_snr(h, snr_db);
    TrialCounts total;
    std::uint64_t done = 0;
    while (done < max_trials && total.errors_ml < min_ml_errors) {
        const std::uint64_t hi = std::min(done + kBatch, max_trials);
        const TrialCounts batch =
            run_trials_parallel(h, lp, sigma, snr_index, seed, done, hi, threads);
        total.errors_lp += batch.errors_lp;
        total.errors_ml += batch.errors_ml;
        done = hi;
    }
    return finish_point(snr_db, done, total);
}

std::string simulation_csv(const std::vector<SnrPoint>& points) {
    std::string out = "snr_db,trials,errors_lp,errors_ml,wer_lp,wer_ml,ratio\n";
    char buf[256];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof(buf), "%.6g,%llu,%llu,%llu,%.10g,%.10g,%.10g\n", p.snr_db,
                      static_cast<unsigned long long>(p.trials),
                      static_cast<unsigned long long>(p.errors_lp),
                      static_cast<unsigned long long>(p.errors_ml), p.wer_lp, p.wer_ml, p.ratio);
        out += buf;
    }
    return out;
}

}  // namespace pseudocone
