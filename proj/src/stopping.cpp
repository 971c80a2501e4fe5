#include "pseudocone/stopping.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace pseudocone {

bool is_stopping_set(const BinaryMatrix& h, const std::vector<std::size_t>& s) {
    std::vector<std::uint8_t> in_set(h.cols(), 0);
    for (auto c : s) {
        if (c >= h.cols())
            throw IndexOutOfRange("stopping set index " + std::to_string(c) +
                                  " out of range for n = " + std::to_string(h.cols()));
        in_set[c] = 1;
    }
    for (std::size_t r = 0; r < h.rows(); ++r) {
        std::size_t w = 0;
        for (auto c : h.row_support(r))
            if (in_set[c] && ++w > 1) break;
        if (w == 1) return false;
    }
    return true;
}

namespace {

struct SearchContext {
    std::size_t n = 0, m = 0;
    std::vector<std::vector<std::size_t>> row_supports;
    std::vector<std::vector<std::size_t>> col_supports;
    std::vector<std::size_t> row_max_col;  // largest column index in each row's support
    std::size_t max_col_weight = 1;
};

// DFS over column subsets of size exactly `target`, columns chosen in
// ascending order.  A partial set is abandoned when some row has weight 1 on
// the chosen columns and no column >= next can raise it, or when the
// remaining budget cannot fix all deficient rows.
class FixedSizeSearch {
public:
    FixedSizeSearch(const SearchContext& ctx, std::size_t target)
        : ctx_(ctx), target_(target), row_count_(ctx.m, 0) {}

    std::vector<std::vector<std::size_t>> run() {
        chosen_.clear();
        descend(0);
        return std::move(hits_);
    }

private:
    void descend(std::size_t next) {
        if (chosen_.size() == target_) {
            for (auto cnt : row_count_)
                if (cnt == 1) return;
            hits_.push_back(chosen_);
            return;
        }
        const std::size_t remaining = target_ - chosen_.size();
        std::size_t deficient = 0;
        for (std::size_t r = 0; r < ctx_.m; ++r) {
            if (row_count_[r] != 1) continue;
            if (ctx_.row_max_col[r] < next) return;  // row can never be fixed
            ++deficient;
        }
        if (deficient > remaining * ctx_.max_col_weight) return;
        if (next >= ctx_.n || ctx_.n - next < remaining) return;
        // include column `next`
        chosen_.push_back(next);
        for (auto r : ctx_.col_supports[next]) ++row_count_[r];
        descend(next + 1);
        for (auto r : ctx_.col_supports[next]) --row_count_[r];
        chosen_.pop_back();
        // exclude column `next`
        descend(next + 1);
    }

    const SearchContext& ctx_;
    std::size_t target_;
    std::vector<std::size_t> row_count_;
    std::vector<std::size_t> chosen_;
    std::vector<std::vector<std::size_t>> hits_;
};

}  // namespace

StoppingReport stopping_distance(const BinaryMatrix& h, bool exhaustive, std::size_t cap_n,
                                 std::size_t cap_exhaustive) {
    const std::size_t n = h.cols();
    if (n > cap_n)
        throw DimensionTooLarge("stopping-set search needs n <= " + std::to_string(cap_n) +
                                ", got n = " + std::to_string(n));
    if (exhaustive && n > cap_exhaustive)
        throw DimensionTooLarge("exhaustive stopping-set sweep needs n <= " +
                                std::to_string(cap_exhaustive) + ", got n = " + std::to_string(n));

    SearchContext ctx;
    ctx.n = n;
    ctx.m = h.rows();
    ctx.col_supports.resize(n);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        ctx.row_supports.push_back(h.row_support(r));
        for (auto c : ctx.row_supports.back()) ctx.col_supports[c].push_back(r);
    }
    ctx.row_max_col.resize(ctx.m, 0);
    for (std::size_t r = 0; r < ctx.m; ++r)
        ctx.row_max_col[r] = ctx.row_supports[r].empty() ? 0 : ctx.row_supports[r].back();
    for (std::size_t c = 0; c < n; ++c)
        ctx.max_col_weight = std::max(ctx.max_col_weight, ctx.col_supports[c].size());

    StoppingReport report;
    for (std::size_t t = 1; t <= n; ++t) {
        auto hits = FixedSizeSearch(ctx, t).run();
        if (!hits.empty()) {
            report.stopping_distance = t;
            report.smallest_sets = std::move(hits);
            report.count_smallest = report.smallest_sets.size();
            break;
        }
    }

    if (exhaustive) {
        // restriction masks per row; a subset mask S is a stopping set iff no
        // row has popcount(row & S) == 1
        std::vector<std::uint64_t> row_masks(ctx.m, 0);
        for (std::size_t r = 0; r < ctx.m; ++r)
            for (auto c : ctx.row_supports[r]) row_masks[r] |= std::uint64_t{1} << c;
        std::vector<std::vector<std::size_t>> all;
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            bool ok = true;
            for (auto rm : row_masks) {
                if (std::popcount(rm & mask) == 1) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<std::size_t> s;
            for (std::size_t c = 0; c < n; ++c)
                if (mask & (std::uint64_t{1} << c)) s.push_back(c);
            all.push_back(std::move(s));
        }
        report.all_sets = std::move(all);
    }
    return report;
}

}  // namespace pseudocone
