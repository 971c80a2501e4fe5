#include "pseudocone/cone.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

namespace pseudocone {

std::vector<InequalityRow> cone_inequalities(const BinaryMatrix& h) {
    const std::size_t n = h.cols();
    std::vector<InequalityRow> rows;
    for (std::size_t i = 0; i < n; ++i) {
        InequalityRow r(n, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < h.rows(); ++j) {
        const auto supp = h.row_support(j);
        for (std::size_t i : supp) {
            InequalityRow r(n, 0);
            for (std::size_t l : supp) r[l] = 1;
            r[i] = -1;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

bool is_pseudo_codeword(const BinaryMatrix& h, const std::vector<Rational>& x) {
    if (x.size() != h.cols())
        throw LengthMismatch("vector length " + std::to_string(x.size()) +
                             " != n = " + std::to_string(h.cols()));
    for (const auto& v : x)
        if (v < 0) return false;
    for (std::size_t j = 0; j < h.rows(); ++j) {
        const auto supp = h.row_support(j);
        Rational total = 0;
        for (std::size_t l : supp) total += x[l];
        for (std::size_t i : supp) {
            // sum over supp \ {i} >= x_i
            if (total - x[i] < x[i]) return false;
        }
    }
    return true;
}

Rational pseudo_weight(const std::vector<Rational>& x) {
    Rational l1 = 0, l2sq = 0;
    for (const auto& v : x) {
        l1 += abs(v);
        l2sq += v * v;
    }
    if (l2sq == 0) throw ZeroVector("pseudo-weight of the zero vector");
    return l1 * l1 / l2sq;
}

Rational pseudo_weight(const std::vector<BigInt>& x) {
    return pseudo_weight(to_rational_vector(x));
}

namespace {

using Int128 = __int128;

// Rank of selected inequality rows by fraction-free (Bareiss) elimination.
// Entries are -1/0/1 and n <= kHardRayCap, so intermediates stay within the
// Hadamard bound for int128.
class RankKernel {
public:
    explicit RankKernel(std::size_t n) : n_(n) {}

    std::size_t rank(const std::vector<const InequalityRow*>& rows) {
        work_.assign(rows.size(), {});
        for (std::size_t i = 0; i < rows.size(); ++i)
            work_[i].assign(rows[i]->begin(), rows[i]->end());
        std::size_t r = 0;
        Int128 prev = 1;
        for (std::size_t c = 0; c < n_ && r < work_.size(); ++c) {
            std::size_t sel = r;
            while (sel < work_.size() && work_[sel][c] == 0) ++sel;
            if (sel == work_.size()) continue;
            std::swap(work_[sel], work_[r]);
            for (std::size_t i = r + 1; i < work_.size(); ++i) {
                for (std::size_t j = c + 1; j < n_; ++j)
                    work_[i][j] = (work_[r][c] * work_[i][j] - work_[i][c] * work_[r][j]) / prev;
                work_[i][c] = 0;
            }
            prev = work_[r][c];
            ++r;
        }
        return r;
    }

private:
    std::size_t n_;
    std::vector<std::vector<Int128>> work_;
};

struct DdRay {
    std::vector<BigInt> coords;
    std::vector<std::uint64_t> active;  // bitset over processed inequality rows
};

void make_primitive(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& c : v) g = gcd(g, c);
    if (g > 1)
        for (auto& c : v) c /= g;
}

int sign_of(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

BigInt dot(const InequalityRow& a, const std::vector<BigInt>& x) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] > 0 ? x[i] : -x[i];
    return s;
}

void set_bit(std::vector<std::uint64_t>& bits, std::size_t i) {
    bits[i / 64] |= std::uint64_t{1} << (i % 64);
}

}  // namespace

RayCatalog enumerate_rays(const BinaryMatrix& h, std::size_t cap_n) {
    const std::size_t n = h.cols();
    if (n > cap_n)
        throw DimensionTooLarge("ray enumeration needs n <= " + std::to_string(cap_n) +
                                ", got n = " + std::to_string(n));
    if (n > kHardRayCap)
        throw DimensionTooLarge("ray enumeration is hard-capped at n = " +
                                std::to_string(kHardRayCap));

    // Duplicate rows of H produce duplicate inequalities; K(H) is unchanged,
    // so drop them before DD (first occurrence wins, order otherwise kept).
    const auto generated = cone_inequalities(h);
    std::vector<InequalityRow> ineqs;
    std::set<InequalityRow> seen;
    for (const auto& r : generated)
        if (seen.insert(r).second) ineqs.push_back(r);

    const std::size_t bit_words = (ineqs.size() + 63) / 64;
    RankKernel kernel(n);

    // Start from the nonnegative orthant: rays are the unit vectors and the
    // first n (nonnegativity) rows are already incorporated.
    std::vector<DdRay> rays;
    for (std::size_t i = 0; i < n; ++i) {
        DdRay r;
        r.coords.assign(n, 0);
        r.coords[i] = 1;
        r.active.assign(bit_words, 0);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) set_bit(r.active, j);
        rays.push_back(std::move(r));
    }

    std::vector<const InequalityRow*> shared_rows;
    for (std::size_t step = n; step < ineqs.size(); ++step) {
        const InequalityRow& a = ineqs[step];
        std::vector<int> side(rays.size());
        std::vector<BigInt> value(rays.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot(a, rays[i].coords);
            side[i] = sign_of(value[i]);
        }

        // combine adjacent (+,-) pairs into new rays on the hyperplane a.x = 0
        std::vector<DdRay> created;
        for (std::size_t p = 0; p < side.size(); ++p) {
            if (side[p] <= 0) continue;
            for (std::size_t q = 0; q < side.size(); ++q) {
                if (side[q] >= 0) continue;
                shared_rows.clear();
                for (std::size_t w = 0; w < bit_words; ++w) {
                    std::uint64_t common = rays[p].active[w] & rays[q].active[w];
                    while (common) {
                        const std::size_t idx =
                            w * 64 + static_cast<std::size_t>(std::countr_zero(common));
                        if (idx < step) shared_rows.push_back(&ineqs[idx]);
                        common &= common - 1;
                    }
                }
                if (n < 2 || kernel.rank(shared_rows) != n - 2) continue;

                DdRay fresh;
                fresh.coords.resize(n);
                for (std::size_t c = 0; c < n; ++c)
                    fresh.coords[c] = value[p] * rays[q].coords[c] - value[q] * rays[p].coords[c];
                make_primitive(fresh.coords);
                fresh.active.assign(bit_words, 0);
                for (std::size_t idx = 0; idx <= step; ++idx)
                    if (dot(ineqs[idx], fresh.coords) == 0) set_bit(fresh.active, idx);
                created.push_back(std::move(fresh));
            }
        }

        std::vector<DdRay> next;
        next.reserve(rays.size() + created.size());
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (side[i] >= 0) {
                if (side[i] == 0) set_bit(rays[i].active, step);
                next.push_back(std::move(rays[i]));
            }
        }
        for (auto& r : created) next.push_back(std::move(r));
        rays = std::move(next);
    }

    // assemble the catalog
    std::vector<std::vector<BigInt>> reps;
    reps.reserve(rays.size());
    for (auto& r : rays) reps.push_back(std::move(r.coords));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    RayCatalog catalog;
    for (auto& rep : reps) {
        Ray ray;
        ray.weight = pseudo_weight(rep);
        for (std::size_t i = 0; i < rep.size(); ++i)
            if (rep[i] != 0) ray.support.push_back(i);

        // "real multiple of a codeword": the 0/1 support indicator must be a
        // codeword and all non-zero coordinates must be equal
        bool uniform = true;
        const BigInt* first = nullptr;
        for (const auto& c : rep) {
            if (c == 0) continue;
            if (!first)
                first = &c;
            else if (c != *first)
                uniform = false;
        }
        std::vector<std::uint8_t> indicator(rep.size(), 0);
        for (auto i : ray.support) indicator[i] = 1;
        ray.classification = uniform && is_codeword(h, indicator) ? RayClass::codeword_multiple
                                                                  : RayClass::non_codeword;
        ray.representative = std::move(rep);
        catalog.rays.push_back(std::move(ray));
    }
    if (!catalog.rays.empty()) {
        catalog.d_p = catalog.rays.front().weight;
        for (const auto& r : catalog.rays) catalog.d_p = std::min(catalog.d_p, r.weight);
        for (const auto& r : catalog.rays)
            if (r.weight == catalog.d_p) ++catalog.b_p;
    }
    return catalog;
}

}  // namespace pseudocone
