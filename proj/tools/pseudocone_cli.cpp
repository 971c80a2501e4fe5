// pseudocone: LDPC parity-check matrix analysis under LP decoding.
//
// Exit codes: 0 success, 2 a requested computation hit a desk-scale cap
// (a partial report is still emitted), 1 error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pseudocone/alist.hpp"
#include "pseudocone/constructions.hpp"
#include "pseudocone/decoders.hpp"
#include "pseudocone/report.hpp"

namespace {

using namespace pseudocone;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << data;
}

unsigned resolve_threads(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("PSEUDOCONE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

std::vector<int> parse_bit_string(const std::string& s) {
    std::vector<int> bits;
    for (char c : s) {
        if (c != '0' && c != '1') throw Error("--first-row must be a 0/1 string");
        bits.push_back(c - '0');
    }
    return bits;
}

struct CommonFlags {
    std::string format = "text";
    std::size_t cap_ray_n = kDefaultRayCap;
    std::size_t cap_codeword_k = kDefaultCodewordCap;
    std::size_t cap_stopping_n = kDefaultStoppingCap;
    std::size_t cap_exhaustive_n = kDefaultExhaustiveCap;
    std::string out;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--cap-ray-n", cap_ray_n, "Max n for ray enumeration");
        cmd->add_option("--cap-codeword-k", cap_codeword_k, "Max k for codeword enumeration");
        cmd->add_option("--cap-stopping-n", cap_stopping_n, "Max n for stopping-set search");
        cmd->add_option("--cap-exhaustive-n", cap_exhaustive_n,
                        "Max n for the exhaustive stopping-set sweep");
        cmd->add_option("-o,--out", out, "Write output to a file instead of stdout");
    }

    AnalysisOptions to_options() const {
        AnalysisOptions o;
        o.cap_ray_n = cap_ray_n;
        o.cap_codeword_k = cap_codeword_k;
        o.cap_stopping_n = cap_stopping_n;
        o.cap_exhaustive_n = cap_exhaustive_n;
        return o;
    }

    ReportFormat report_format() const {
        return format == "json" ? ReportFormat::json : ReportFormat::text;
    }
};

int emit_and_status(AnalysisReport report, const CommonFlags& flags) {
    // timings go to stderr so identical invocations stay byte-identical
    for (const auto& [stage, ms] : report.timing_ms)
        std::cerr << "timing " << stage << ": " << ms << " ms\n";
    report.timing_ms.clear();
    write_output(flags.out, emit_report(report, flags.report_format()));
    return report.cap_was_hit() ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fundamental-cone and LP-decoding analysis of binary parity-check matrices"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "Generate a matrix and write it as alist");
    construct->require_subcommand(1);
    std::string construct_out;

    auto* c_circ = construct->add_subcommand("circulant", "Circulant from a first row");
    std::string first_row;
    c_circ->add_option("--first-row", first_row, "0/1 string, e.g. 1101000")->required();
    c_circ->add_option("-o,--out", construct_out, "Output file (default stdout)");

    auto* c_ham = construct->add_subcommand(
        "hamming-simplex", "Simplex-codeword parity-check matrix of a Hamming code");
    std::size_t ham_r = 3;
    c_ham->add_option("--r", ham_r, "Simplex dimension r >= 2")->required();
    c_ham->add_option("-o,--out", construct_out, "Output file (default stdout)");

    auto* c_eg = construct->add_subcommand(
        "eg", "Point/hyperplane incidence of EG(m, 2^s) with the origin removed");
    std::size_t eg_m = 3;
    unsigned eg_s = 2;
    c_eg->add_option("--m", eg_m, "Geometry dimension m >= 2")->required();
    c_eg->add_option("--s", eg_s, "Field exponent: q = 2^s")->required();
    c_eg->add_option("-o,--out", construct_out, "Output file (default stdout)");

    auto* c_cyc = construct->add_subcommand("cyclic", "Generator matrix of a cyclic code");
    std::size_t cyc_n = 0;
    std::vector<std::size_t> cyc_g;
    c_cyc->add_option("--n", cyc_n, "Code length")->required();
    c_cyc->add_option("--g", cyc_g, "Generator polynomial exponents, e.g. 0,2,4")
        ->required()
        ->delimiter(',');
    c_cyc->add_option("-o,--out", construct_out, "Output file (default stdout)");

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a parity-check matrix");
    std::string analyze_path;
    analyze_cmd->add_option("alist", analyze_path, "alist (or dense 0/1) file")->required();
    bool opt_rays = false, opt_stopping = false, opt_exhaustive = false, opt_mind = false;
    analyze_cmd->add_flag("--rays", opt_rays, "Enumerate the minimal pseudo-codewords");
    analyze_cmd->add_flag("--stopping", opt_stopping, "Compute stopping distance and T_s");
    analyze_cmd->add_flag("--exhaustive-stopping", opt_exhaustive,
                          "Also list every non-empty stopping set");
    analyze_cmd->add_flag("--min-distance", opt_mind, "Exhaustive minimum distance");
    CommonFlags analyze_flags;
    analyze_flags.attach(analyze_cmd);

    // certify
    auto* certify_cmd =
        app.add_subcommand("certify", "Full analysis plus the asymptotic-optimality certificate");
    std::string certify_path;
    certify_cmd->add_option("alist", certify_path, "alist (or dense 0/1) file")->required();
    CommonFlags certify_flags;
    certify_flags.attach(certify_cmd);

    // rays
    auto* rays_cmd = app.add_subcommand("rays", "Print the ray catalog");
    std::string rays_path;
    rays_cmd->add_option("alist", rays_path, "alist (or dense 0/1) file")->required();
    CommonFlags rays_flags;
    rays_flags.attach(rays_cmd);

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "LP-vs-ML word error rates over AWGN");
    std::string sim_path, sim_out;
    std::vector<double> sim_snr;
    std::uint64_t sim_trials = 10000, sim_seed = 1;
    unsigned sim_threads = 0;
    sim_cmd->add_option("alist", sim_path, "alist (or dense 0/1) file")->required();
    sim_cmd->add_option("--snr", sim_snr, "E_b/N_0 points in dB, e.g. 3,5,7")
        ->required()
        ->delimiter(',');
    sim_cmd->add_option("--trials", sim_trials, "Trials per SNR point")->required();
    sim_cmd->add_option("--seed", sim_seed, "RNG seed")->required();
    sim_cmd->add_option("--threads", sim_threads,
                        "Worker threads (default: PSEUDOCONE_THREADS or 1)");
    sim_cmd->add_option("-o,--out", sim_out, "CSV output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            BinaryMatrix h = [&]() {
                if (c_circ->parsed()) return circulant(parse_bit_string(first_row));
                if (c_ham->parsed()) return hamming_simplex_h(ham_r);
                if (c_eg->parsed()) return eg_point_hyperplane_h(eg_m, eg_s);
                return cyclic_code_generator(cyc_n, cyc_g);
            }();
            write_output(construct_out, serialize_alist(h));
            return 0;
        }
        if (analyze_cmd->parsed()) {
            const BinaryMatrix h = parse_alist(read_file(analyze_path));
            AnalysisOptions o = analyze_flags.to_options();
            o.rays = opt_rays;
            o.stopping = opt_stopping;
            o.exhaustive_stopping = opt_exhaustive;
            o.min_distance = opt_mind;
            return emit_and_status(analyze(h, o, analyze_path), analyze_flags);
        }
        if (certify_cmd->parsed()) {
            const BinaryMatrix h = parse_alist(read_file(certify_path));
            AnalysisOptions o = certify_flags.to_options();
            o.certificate = true;
            o.min_distance = true;
            o.stopping = true;
            o.rays = true;
            return emit_and_status(analyze(h, o, certify_path), certify_flags);
        }
        if (rays_cmd->parsed()) {
            const BinaryMatrix h = parse_alist(read_file(rays_path));
            AnalysisOptions o = rays_flags.to_options();
            o.rays = true;
            return emit_and_status(analyze(h, o, rays_path), rays_flags);
        }
        if (sim_cmd->parsed()) {
            const BinaryMatrix h = parse_alist(read_file(sim_path));
            const auto points =
                simulate(h, sim_snr, sim_trials, sim_seed, resolve_threads(sim_threads));
            write_output(sim_out, simulation_csv(points));
            return 0;
        }
    } catch (const DimensionTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
