#include "onebit/capacity.hpp"
#include "onebit/montecarlo.hpp"
#include "onebit/training.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

// Flag-format problems discovered after CLI11 parsing; mapped to exit code 2
// like any other usage error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::complex<double> parse_complex(const std::string& token) {
    std::string s;
    for (char c : token) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    const char* begin = s.c_str();
    char* mid = nullptr;
    const double re = std::strtod(begin, &mid);
    if (mid == begin || (*mid != '+' && *mid != '-')) {
        throw UsageError("cannot parse complex number '" + token + "' (expected a+bj)");
    }
    char* end = nullptr;
    const double im = std::strtod(mid, &end);
    if (end == mid || *end != 'j' || *(end + 1) != '\0') {
        throw UsageError("cannot parse complex number '" + token + "' (expected a+bj)");
    }
    return {re, im};
}

onebit::ComplexChannel parse_channel(const std::string& list) {
    onebit::ComplexChannel h;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        h.push_back(parse_complex(token));
    }
    if (h.empty()) {
        throw UsageError("channel list is empty");
    }
    return h;
}

std::vector<double> parse_snr_grid(const std::string& expr) {
    double start = 0.0, step = 0.0, stop = 0.0;
    char tail = '\0';
    const int got = std::sscanf(expr.c_str(), "%lf:%lf:%lf%c", &start, &step, &stop, &tail);
    if (got != 3) {
        throw UsageError("cannot parse SNR grid '" + expr + "' (expected start:step:stop)");
    }
    if (!(step > 0.0) || stop < start) {
        throw UsageError("SNR grid must have positive step and stop >= start");
    }
    const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) grid.push_back(start + i * step);
    return grid;
}

std::vector<onebit::SweepVariant> parse_variants(const std::string& list) {
    std::vector<onebit::SweepVariant> out;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token == "onebit-both") {
            out.push_back(onebit::SweepVariant::onebit_both_csit);
        } else if (token == "inf-dac") {
            out.push_back(onebit::SweepVariant::onebit_adc_inf_dac);
        } else if (token == "csir-only") {
            out.push_back(onebit::SweepVariant::siso_csir_only);
        } else {
            throw UsageError("unknown variant '" + token +
                             "' (choose from onebit-both, inf-dac, csir-only)");
        }
    }
    if (out.empty()) {
        throw UsageError("variant list is empty");
    }
    return out;
}

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed while writing '" + path + "'");
    }
}

void write_manifest(const std::string& out_path, const std::string& command, json parameters) {
    json manifest;
    manifest["command"] = command;
    manifest["parameters"] = std::move(parameters);
    manifest["version"] = ONEBITCAP_VERSION;
    manifest["timestamp"] = timestamp_utc();
    write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

const char* case_name(onebit::CapacityCase c) {
    switch (c) {
    case onebit::CapacityCase::x1_only: return "x1_only";
    case onebit::CapacityCase::time_share: return "time_share";
    case onebit::CapacityCase::x2_only: return "x2_only";
    case onebit::CapacityCase::lp_singleton: return "lp_singleton";
    case onebit::CapacityCase::lp_pair: return "lp_pair";
    }
    return "?";
}

int run_constellation(int num_antennas, const std::string& out_path) {
    const auto cons = onebit::Constellation::enumerate(num_antennas);
    std::ostringstream csv;
    csv << "u,k";
    for (int i = 1; i <= cons.dims(); ++i) csv << ",x" << i;
    csv << ",member_count\n";
    for (const auto& s : cons.subsets()) {
        csv << s.u << ',' << s.k;
        for (auto e : s.representative) csv << ',' << static_cast<int>(e);
        csv << ",4\n";
    }
    write_file(out_path, csv.str());
    write_manifest(out_path, "constellation", json{{"M", num_antennas}, {"out", out_path}});
    std::cout << cons.subset_count() << " subsets written to " << out_path << "\n";
    return 0;
}

int run_capacity(const std::string& channel_expr, double sigma2, double total_power,
                 const std::string& out_path) {
    const auto h = parse_channel(channel_expr);
    const int m = static_cast<int>(h.size());
    const auto cons = onebit::Constellation::enumerate(m);
    const auto channel = onebit::realify(h);
    const auto result = onebit::miso_capacity(channel, sigma2, total_power, cons);

    std::cout << "capacity_bits: " << fmt(result.capacity_bits) << "\n";
    std::cout << "case: " << case_name(result.case_tag) << "\n";
    for (const auto& mass : result.distribution.masses) {
        std::cout << "support: u=" << mass.u << " k=" << mass.k
                  << " p=" << fmt(mass.probability)
                  << " entropy_bits=" << fmt(2.0 - onebit::achieved_rate(channel, sigma2, cons,
                                                                         mass.u, mass.k))
                  << "\n";
    }

    // Feedback index of the lowest-entropy support subset, the one the
    // transmitter would commit to at full budget.
    const onebit::SubsetMass* best = nullptr;
    double best_entropy = 0.0;
    for (const auto& mass : result.distribution.masses) {
        const double e = 2.0 - onebit::achieved_rate(channel, sigma2, cons, mass.u, mass.k);
        if (best == nullptr || e < best_entropy) {
            best = &mass;
            best_entropy = e;
        }
    }
    const auto word = onebit::encode_feedback(cons, onebit::CodebookMode::full, best->u, best->k);
    std::cout << "feedback_index: " << word.value << " (" << word.bits << " bits)\n";

    if (!out_path.empty()) {
        std::ostringstream csv;
        csv << "capacity_bits,case,u,k,probability\n";
        for (const auto& mass : result.distribution.masses) {
            csv << fmt(result.capacity_bits) << ',' << case_name(result.case_tag) << ',' << mass.u
                << ',' << mass.k << ',' << fmt(mass.probability) << '\n';
        }
        write_file(out_path, csv.str());
        write_manifest(out_path, "capacity",
                       json{{"h", channel_expr},
                            {"sigma2", sigma2},
                            {"pt", total_power},
                            {"out", out_path}});
    }
    return 0;
}

int run_sweep(int num_antennas, const std::string& snr_expr, int num_channels, std::uint64_t seed,
              const std::string& variants_expr, const std::string& out_path) {
    onebit::SweepConfig config;
    config.num_antennas = num_antennas;
    config.snr_grid_db = parse_snr_grid(snr_expr);
    config.num_channels = num_channels;
    config.seed = seed;
    config.variants = parse_variants(variants_expr);

    const auto result = onebit::ergodic_sweep(config);
    std::ostringstream csv;
    onebit::write_sweep_csv(csv, result);
    write_file(out_path, csv.str());
    write_manifest(out_path, "sweep",
                   json{{"M", num_antennas},
                        {"snr", snr_expr},
                        {"n", num_channels},
                        {"seed", seed},
                        {"variants", variants_expr},
                        {"out", out_path}});
    std::cout << result.points.size() << " rows written to " << out_path << "\n";
    return 0;
}

int run_train(int num_antennas, const std::string& mode_expr, int repetitions,
              const std::string& snr_expr, int num_channels, std::uint64_t seed,
              const std::string& out_path) {
    onebit::TrainingSweepConfig config;
    config.num_antennas = num_antennas;
    config.snr_grid_db = parse_snr_grid(snr_expr);
    config.num_channels = num_channels;
    config.seed = seed;
    config.repetitions = repetitions;
    if (mode_expr == "full") {
        config.mode = onebit::CodebookMode::full;
    } else if (mode_expr == "dominant") {
        config.mode = onebit::CodebookMode::dominant;
    } else {
        throw UsageError("unknown mode '" + mode_expr + "' (choose full or dominant)");
    }

    const auto result = onebit::ergodic_training_sweep(config);
    std::ostringstream csv;
    onebit::write_training_csv(csv, result);
    write_file(out_path, csv.str());
    write_manifest(out_path, "train",
                   json{{"M", num_antennas},
                        {"mode", mode_expr},
                        {"L", repetitions},
                        {"snr", snr_expr},
                        {"n", num_channels},
                        {"seed", seed},
                        {"out", out_path}});
    if (!result.points.empty()) {
        std::cout << "training_length: " << result.points.front().training_length << "\n";
        std::cout << "feedback_bits: " << fmt(result.points.front().feedback_bits) << "\n";
    }
    std::cout << result.points.size() << " rows written to " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact capacities and protocol simulations for MISO channels with one-bit "
                 "DACs and ADCs"};
    app.set_version_flag("--version", ONEBITCAP_VERSION);
    app.require_subcommand(1);
    // --h is a channel, so help is long-form only, on every subcommand too.
    app.set_help_flag("--help", "Print help");

    auto* cons_cmd = app.add_subcommand("constellation", "Dump all rotational subsets as CSV");
    int cons_m = 1;
    std::string cons_out;
    cons_cmd->add_option("--M", cons_m, "Number of transmit antennas")->required();
    cons_cmd->add_option("--out", cons_out, "Output CSV path")->required();

    auto* cap_cmd = app.add_subcommand("capacity", "Exact capacity of one channel");
    cap_cmd->set_help_flag("--help", "Print help");
    std::string cap_h, cap_out;
    double cap_sigma2 = 1.0, cap_pt = 2.0;
    cap_cmd->add_option("--h", cap_h, "Channel gains, e.g. '1+2j,0.5-1j'")->required();
    cap_cmd->add_option("--sigma2", cap_sigma2, "Noise variance")->required();
    cap_cmd->add_option("--pt", cap_pt, "Average power budget in [1, 2M]")->required();
    cap_cmd->add_option("--out", cap_out, "Optional CSV path for the support");

    auto* sweep_cmd = app.add_subcommand("sweep", "Ergodic capacity sweep over Rayleigh draws");
    int sweep_m = 1, sweep_n = 1000;
    std::uint64_t sweep_seed = 0;
    std::string sweep_snr, sweep_out, sweep_variants = "onebit-both,inf-dac";
    sweep_cmd->add_option("--M", sweep_m, "Number of transmit antennas")->required();
    sweep_cmd->add_option("--snr", sweep_snr, "SNR grid in dB as start:step:stop")->required();
    sweep_cmd->add_option("--n", sweep_n, "Channel draws per point");
    sweep_cmd->add_option("--seed", sweep_seed, "RNG seed (mandatory, no default)")->required();
    sweep_cmd->add_option("--variants", sweep_variants,
                          "Comma list of onebit-both, inf-dac, csir-only");
    sweep_cmd->add_option("--out", sweep_out, "Output CSV path")->required();

    auto* train_cmd = app.add_subcommand("train", "Channel-training protocol simulation");
    int train_m = 1, train_l = 10, train_n = 1000;
    std::uint64_t train_seed = 0;
    std::string train_mode = "full", train_snr, train_out;
    train_cmd->add_option("--M", train_m, "Number of transmit antennas")->required();
    train_cmd->add_option("--mode", train_mode, "Training codebook: full or dominant");
    train_cmd->add_option("--L", train_l, "Pilot repetitions per subset");
    train_cmd->add_option("--snr", train_snr, "SNR grid in dB as start:step:stop")->required();
    train_cmd->add_option("--n", train_n, "Channel draws per point");
    train_cmd->add_option("--seed", train_seed, "RNG seed (mandatory, no default)")->required();
    train_cmd->add_option("--out", train_out, "Output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (cons_cmd->parsed()) return run_constellation(cons_m, cons_out);
        if (cap_cmd->parsed()) return run_capacity(cap_h, cap_sigma2, cap_pt, cap_out);
        if (sweep_cmd->parsed()) {
            return run_sweep(sweep_m, sweep_snr, sweep_n, sweep_seed, sweep_variants, sweep_out);
        }
        if (train_cmd->parsed()) {
            return run_train(train_m, train_mode, train_l, train_snr, train_n, train_seed,
                             train_out);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
