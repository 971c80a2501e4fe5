#include "pseudocone/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace pseudocone {

namespace {

using Clock = std::chrono::steady_clock;
using OrderedJson = nlohmann::ordered_json;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
    std::vector<std::size_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] + 1;
    return out;
}

}  // namespace

AnalysisReport analyze(const BinaryMatrix& h, const AnalysisOptions& options,
                       const std::string& provenance) {
    AnalysisReport report;
    report.provenance = provenance;
    report.n = h.cols();
    report.m = h.rows();

    auto t0 = Clock::now();
    report.rank = gf2_rank(h);
    report.k = report.n - report.rank;
    report.timing_ms.emplace_back("rank", elapsed_ms(t0));

    t0 = Clock::now();
    if (!h.is_zero()) {
        const TannerGraph graph = build_tanner_graph(h);
        report.girth = graph.girth;
        report.gamma = graph.min_col_weight;
        report.lambda = graph.max_pair_intersection;
        report.row_weights = graph.row_weights;
        report.bounds = evaluate_bounds(graph);
    }
    report.timing_ms.emplace_back("tanner", elapsed_ms(t0));

    const bool want_code = options.min_distance || options.certificate;
    std::vector<std::vector<std::uint8_t>> codewords;
    if (want_code) {
        t0 = Clock::now();
        if (report.k <= options.cap_codeword_k) {
            report.code = compute_code_parameters(h, options.cap_codeword_k);
            if (options.certificate) codewords = enumerate_codewords(h, options.cap_codeword_k);
        } else {
            const std::string reason = "cap-codeword-k exceeded (k = " + std::to_string(report.k) +
                                       " > " + std::to_string(options.cap_codeword_k) + ")";
            report.code_skipped = Skipped{reason};
            report.caps_hit.push_back(reason);
        }
        report.timing_ms.emplace_back("codewords", elapsed_ms(t0));
    }

    const bool want_stopping = options.stopping || options.exhaustive_stopping || options.certificate;
    if (want_stopping) {
        t0 = Clock::now();
        bool exhaustive = options.exhaustive_stopping;
        if (exhaustive && report.n > options.cap_exhaustive_n) {
            // degrade to the branch-and-bound search instead of skipping
            const std::string reason = "cap-exhaustive-n exceeded (n = " +
                                       std::to_string(report.n) + " > " +
                                       std::to_string(options.cap_exhaustive_n) +
                                       "); all-sets listing skipped";
            report.caps_hit.push_back(reason);
            exhaustive = false;
        }
        if (report.n <= options.cap_stopping_n) {
            report.stopping = stopping_distance(h, exhaustive, options.cap_stopping_n,
                                                options.cap_exhaustive_n);
        } else {
            const std::string reason = "cap-stopping-n exceeded (n = " + std::to_string(report.n) +
                                       " > " + std::to_string(options.cap_stopping_n) + ")";
            report.stopping_skipped = Skipped{reason};
            report.caps_hit.push_back(reason);
        }
        report.timing_ms.emplace_back("stopping", elapsed_ms(t0));
    }

    const bool want_rays = options.rays || options.certificate;
    if (want_rays) {
        t0 = Clock::now();
        if (report.n <= options.cap_ray_n) {
            report.rays = enumerate_rays(h, options.cap_ray_n);
        } else {
            const std::string reason = "cap-ray-n exceeded (n = " + std::to_string(report.n) +
                                       " > " + std::to_string(options.cap_ray_n) + ")";
            report.rays_skipped = Skipped{reason};
            report.caps_hit.push_back(reason);
        }
        report.timing_ms.emplace_back("rays", elapsed_ms(t0));
    }

    if (options.certificate) {
        t0 = Clock::now();
        if (report.code && report.stopping && report.rays) {
            report.certificate = certify(h, codewords, *report.stopping, *report.rays);
        } else {
            std::string reason = "certificate needs codewords, stopping sets and rays;";
            if (!report.code) reason += " codewords skipped;";
            if (!report.stopping) reason += " stopping skipped;";
            if (!report.rays) reason += " rays skipped;";
            report.certificate_skipped = Skipped{reason};
        }
        report.timing_ms.emplace_back("certificate", elapsed_ms(t0));
    }
    return report;
}

namespace {

OrderedJson skipped_json(const Skipped& s) {
    OrderedJson j;
    j["status"] = "skipped";
    j["reason"] = s.reason;
    return j;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::asymptotically_optimal: return "asymptotically-optimal";
        case Verdict::not_optimal: return "not-optimal";
        default: return "undetermined";
    }
}

OrderedJson report_json(const AnalysisReport& r) {
    OrderedJson j;
    j["provenance"] = r.provenance;
    j["n"] = r.n;
    j["m"] = r.m;
    j["rank"] = r.rank;
    j["k"] = r.k;
    if (r.girth)
        j["girth"] = *r.girth;
    else
        j["girth"] = "infinite";
    j["gamma"] = r.gamma;
    j["lambda"] = r.lambda;

    if (r.code) {
        OrderedJson c;
        c["status"] = "computed";
        if (r.code->min_distance) {
            c["d"] = *r.code->min_distance;
            c["A_d"] = r.code->weight_distribution.at(*r.code->min_distance);
        } else {
            c["d"] = "none";  // k = 0: no non-zero codewords
        }
        c["d_source"] = r.code->d_source == DistanceSource::exhaustive ? "exhaustive" : "unknown";
        OrderedJson dist = OrderedJson::object();
        for (const auto& [w, count] : r.code->weight_distribution)
            dist[std::to_string(w)] = count;
        c["weight_distribution"] = dist;
        j["min_distance"] = c;
    } else if (r.code_skipped) {
        j["min_distance"] = skipped_json(*r.code_skipped);
    }
    if (r.distance_bound_witness) {
        OrderedJson c;
        c["status"] = "bound-plus-witness";
        c["lower_bound"] = r.distance_bound_witness->lower_bound;
        c["witness_weight"] = r.distance_bound_witness->witness_weight;
        if (r.distance_bound_witness->certified_d)
            c["d"] = *r.distance_bound_witness->certified_d;
        j["min_distance"] = c;
    }

    if (r.stopping) {
        OrderedJson s;
        s["status"] = "computed";
        if (r.stopping->stopping_distance) {
            s["s"] = *r.stopping->stopping_distance;
            s["T_s"] = r.stopping->count_smallest;
            OrderedJson sets = OrderedJson::array();
            for (const auto& set : r.stopping->smallest_sets) sets.push_back(one_based(set));
            s["smallest_sets"] = sets;
        } else {
            s["s"] = "none";  // no non-empty stopping set
            s["T_s"] = 0;
        }
        if (r.stopping->all_sets) {
            OrderedJson sets = OrderedJson::array();
            for (const auto& set : *r.stopping->all_sets) sets.push_back(one_based(set));
            s["all_nonempty_sets"] = sets;
        }
        j["stopping"] = s;
    } else if (r.stopping_skipped) {
        j["stopping"] = skipped_json(*r.stopping_skipped);
    }

    if (r.rays) {
        OrderedJson s;
        s["status"] = "computed";
        s["edge_count"] = r.rays->edge_count();
        if (!r.rays->rays.empty()) {
            s["d_P"] = to_fraction_string(r.rays->d_p);
            s["d_P_approx"] = to_double(r.rays->d_p);
            s["B_P"] = r.rays->b_p;
        }
        OrderedJson catalog = OrderedJson::array();
        for (const auto& ray : r.rays->rays) {
            OrderedJson e;
            OrderedJson rep = OrderedJson::array();
            for (const auto& v : ray.representative) rep.push_back(v.str());
            e["representative"] = rep;
            e["pseudo_weight"] = to_fraction_string(ray.weight);
            e["pseudo_weight_approx"] = to_double(ray.weight);
            e["support"] = one_based(ray.support);
            e["classification"] = ray.classification == RayClass::codeword_multiple
                                      ? "codeword-multiple"
                                      : "non-codeword";
            catalog.push_back(e);
        }
        s["catalog"] = catalog;
        j["rays"] = s;
    } else if (r.rays_skipped) {
        j["rays"] = skipped_json(*r.rays_skipped);
    }

    OrderedJson b;
    if (r.bounds.d_l)
        b["d_L"] = *r.bounds.d_l;
    else
        b["d_L"] = "not-applicable";
    if (r.bounds.kv)
        b["kv"] = *r.bounds.kv;
    else
        b["kv"] = "not-applicable";
    b["beta"] = r.bounds.beta;
    if (r.bounds.t) b["t"] = *r.bounds.t;
    j["bounds"] = b;

    if (r.certificate) {
        OrderedJson c;
        c["verdict"] = verdict_name(r.certificate->verdict);
        auto opt_bool = [](const std::optional<bool>& v) -> OrderedJson {
            if (!v) return "unknown";
            return *v;
        };
        c["d_P_equals_d"] = opt_bool(r.certificate->d_p_equals_d);
        c["B_P_equals_A_d"] = opt_bool(r.certificate->b_p_equals_a_d);
        c["T_s_equals_A_d"] = opt_bool(r.certificate->t_s_equals_a_d);
        OrderedJson rows = OrderedJson::array();
        for (const auto& t : r.certificate->per_ray) {
            OrderedJson e;
            e["ray"] = t.ray_index;
            e["attains_d_L"] = opt_bool(t.attains_dl);
            e["attains_kv"] = opt_bool(t.attains_kv);
            e["is_codeword_multiple"] = t.is_codeword_multiple;
            rows.push_back(e);
        }
        c["per_ray_tightness"] = rows;
        j["certificate"] = c;
    } else if (r.certificate_skipped) {
        j["certificate"] = skipped_json(*r.certificate_skipped);
    }

    if (!r.timing_ms.empty()) {
        OrderedJson timing;
        for (const auto& [stage, ms] : r.timing_ms) timing[stage] = ms;
        j["timing_ms"] = timing;
    }
    j["caps_hit"] = r.caps_hit;
    return j;
}

void text_sets(std::ostringstream& os, const std::vector<std::vector<std::size_t>>& sets) {
    for (const auto& s : sets) {
        os << " {";
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
        os << "}";
    }
}

std::string report_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "matrix: " << r.provenance << "\n";
    os << "n = " << r.n << ", m = " << r.m << ", rank = " << r.rank << ", k = " << r.k << "\n";
    os << "girth = ";
    if (r.girth)
        os << *r.girth;
    else
        os << "infinite";
    os << ", gamma = " << r.gamma << ", lambda = " << r.lambda << "\n";

    if (r.code) {
        if (r.code->min_distance) {
            os << "d = " << *r.code->min_distance
               << " (exhaustive), A_d = " << r.code->weight_distribution.at(*r.code->min_distance)
               << "\n";
        } else {
            os << "d = none (k = 0)\n";
        }
    } else if (r.code_skipped) {
        os << "d: skipped -- " << r.code_skipped->reason << "\n";
    }
    if (r.distance_bound_witness && r.distance_bound_witness->certified_d)
        os << "d = " << *r.distance_bound_witness->certified_d << " (bound-plus-witness)\n";

    if (r.stopping) {
        if (r.stopping->stopping_distance) {
            os << "s(H) = " << *r.stopping->stopping_distance
               << ", T_s(H) = " << r.stopping->count_smallest << "\n";
            os << "smallest stopping sets:";
            text_sets(os, r.stopping->smallest_sets);
            os << "\n";
            if (r.stopping->all_sets) {
                os << "all non-empty stopping sets (" << r.stopping->all_sets->size() << "):";
                text_sets(os, *r.stopping->all_sets);
                os << "\n";
            }
        } else {
            os << "s(H): no non-empty stopping set\n";
        }
    } else if (r.stopping_skipped) {
        os << "s(H): skipped -- " << r.stopping_skipped->reason << "\n";
    }

    if (r.rays) {
        os << "|M(H)| = " << r.rays->edge_count();
        if (!r.rays->rays.empty())
            os << ", d_P = " << to_fraction_string(r.rays->d_p) << " (~" << to_double(r.rays->d_p)
               << "), B_P = " << r.rays->b_p;
        os << "\n";
        for (const auto& ray : r.rays->rays) {
            os << "  (";
            for (std::size_t i = 0; i < ray.representative.size(); ++i)
                os << (i ? "," : "") << ray.representative[i].str();
            os << ")  w_P = " << to_fraction_string(ray.weight) << "  "
               << (ray.classification == RayClass::codeword_multiple ? "codeword-multiple"
                                                                     : "non-codeword")
               << "\n";
        }
    } else if (r.rays_skipped) {
        os << "rays: skipped -- " << r.rays_skipped->reason << "\n";
    }

    os << "bounds: d_L = ";
    if (r.bounds.d_l)
        os << *r.bounds.d_l;
    else
        os << "not-applicable";
    os << ", gamma/lambda+1 = ";
    if (r.bounds.kv)
        os << *r.bounds.kv;
    else
        os << "not-applicable";
    os << "\n";

    if (r.certificate) {
        os << "certificate: " << verdict_name(r.certificate->verdict) << "\n";
    } else if (r.certificate_skipped) {
        os << "certificate: skipped -- " << r.certificate_skipped->reason << "\n";
    }
    if (!r.caps_hit.empty()) {
        os << "caps hit:\n";
        for (const auto& c : r.caps_hit) os << "  " << c << "\n";
    }
    return os.str();
}

}  // namespace

std::string emit_report(const AnalysisReport& report, ReportFormat format) {
    if (format == ReportFormat::text) return report_text(report);
    return report_json(report).dump(2) + "\n";
}

}  // namespace pseudocone
