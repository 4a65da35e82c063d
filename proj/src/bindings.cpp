#include "onebit/capacity.hpp"
#include "onebit/channel.hpp"
#include "onebit/constellation.hpp"
#include "onebit/math.hpp"
#include "onebit/montecarlo.hpp"
#include "onebit/rng.hpp"
#include "onebit/training.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace onebit;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact capacities of MISO channels with one-bit DACs and ADCs";
    m.attr("__version__") = ONEBITCAP_VERSION;

    py::enum_<CapacityCase>(m, "CapacityCase")
        .value("x1_only", CapacityCase::x1_only)
        .value("time_share", CapacityCase::time_share)
        .value("x2_only", CapacityCase::x2_only)
        .value("lp_singleton", CapacityCase::lp_singleton)
        .value("lp_pair", CapacityCase::lp_pair);

    py::enum_<CodebookMode>(m, "CodebookMode")
        .value("full", CodebookMode::full)
        .value("dominant", CodebookMode::dominant);

    py::enum_<PhaseChoice>(m, "PhaseChoice")
        .value("x1", PhaseChoice::x1)
        .value("x2", PhaseChoice::x2);

    py::enum_<SweepVariant>(m, "SweepVariant")
        .value("onebit_both_csit", SweepVariant::onebit_both_csit)
        .value("onebit_adc_inf_dac", SweepVariant::onebit_adc_inf_dac)
        .value("siso_csir_only", SweepVariant::siso_csir_only);

    m.def("q_function", &q_function, py::arg("t"));
    m.def("binary_entropy", &binary_entropy, py::arg("p"));

    py::class_<RealChannel>(m, "RealChannel")
        .def_readonly("row1", &RealChannel::row1)
        .def_readonly("row2", &RealChannel::row2)
        .def_property_readonly("num_antennas", &RealChannel::num_antennas)
        .def_property_readonly("dims", &RealChannel::dims);

    m.def("realify", &realify, py::arg("h"));
    m.def("to_complex", &to_complex, py::arg("channel"));
    m.def("norm_squared", &norm_squared, py::arg("h"));
    m.def(
        "channel_gain",
        [](const RealChannel& channel, const SignalVector& x, int output_dim) {
            return channel_gain(channel, x, output_dim);
        },
        py::arg("channel"), py::arg("x"), py::arg("output_dim"));
    m.def(
        "up_probability",
        [](const RealChannel& channel, const SignalVector& x, int output_dim, double sigma2) {
            return up_probability(channel, x, output_dim, sigma2);
        },
        py::arg("channel"), py::arg("x"), py::arg("output_dim"), py::arg("sigma2"));
    m.def(
        "subset_entropy",
        [](const RealChannel& channel, const SignalVector& x, double sigma2) {
            return subset_entropy(channel, x, sigma2);
        },
        py::arg("channel"), py::arg("x"), py::arg("sigma2"));

    py::class_<RotationalSubset>(m, "RotationalSubset")
        .def_readonly("u", &RotationalSubset::u)
        .def_readonly("k", &RotationalSubset::k)
        .def_readonly("representative", &RotationalSubset::representative)
        .def("members", &RotationalSubset::members);

    py::class_<Constellation>(m, "Constellation")
        .def_static("enumerate", &Constellation::enumerate, py::arg("num_antennas"))
        .def_property_readonly("num_antennas", &Constellation::num_antennas)
        .def_property_readonly("dims", &Constellation::dims)
        .def_property_readonly("subset_count", &Constellation::subset_count)
        .def_property_readonly("vector_count", &Constellation::vector_count)
        .def("subsets", &Constellation::subsets)
        .def("subset", &Constellation::subset, py::arg("index"))
        .def("linear_index", &Constellation::linear_index, py::arg("u"), py::arg("k"))
        .def("level_count", &Constellation::level_count, py::arg("u"))
        .def("level_offset", &Constellation::level_offset, py::arg("u"))
        .def("orbit_of", &Constellation::orbit_of, py::arg("x"));

    m.def("power_level", &power_level, py::arg("x"));
    m.def("rotate", &rotate, py::arg("x"));
    m.def("rotation_matrix", &rotation_matrix, py::arg("num_antennas"));
    m.def("complexify", &complexify, py::arg("x"));
    m.def("signal_index", &signal_index, py::arg("x"));
    m.def("signal_at", &signal_at, py::arg("num_antennas"), py::arg("index"));

    py::class_<SubsetMass>(m, "SubsetMass")
        .def(py::init([](int u, int k, double probability) {
                 return SubsetMass{u, k, probability};
             }),
             py::arg("u"), py::arg("k"), py::arg("probability"))
        .def_readwrite("u", &SubsetMass::u)
        .def_readwrite("k", &SubsetMass::k)
        .def_readwrite("probability", &SubsetMass::probability);

    py::class_<InputDistribution>(m, "InputDistribution")
        .def(py::init<>())
        .def_readwrite("masses", &InputDistribution::masses)
        .def("total", &InputDistribution::total)
        .def("average_power", &InputDistribution::average_power);

    py::class_<CapacityResult>(m, "CapacityResult")
        .def_readonly("capacity_bits", &CapacityResult::capacity_bits)
        .def_readonly("case_tag", &CapacityResult::case_tag)
        .def_readonly("distribution", &CapacityResult::distribution);

    py::class_<FullPowerResult>(m, "FullPowerResult")
        .def_readonly("capacity_bits", &FullPowerResult::capacity_bits)
        .def_readonly("best_u", &FullPowerResult::best_u)
        .def_readonly("best_k", &FullPowerResult::best_k);

    py::class_<PhaseThresholdResult>(m, "PhaseThresholdResult")
        .def_readonly("rate_bits", &PhaseThresholdResult::rate_bits)
        .def_readonly("chosen_set", &PhaseThresholdResult::chosen_set)
        .def_readonly("theta", &PhaseThresholdResult::theta);

    py::class_<PowerLossBounds>(m, "PowerLossBounds")
        .def_readonly("worst_case_db", &PowerLossBounds::worst_case_db)
        .def_readonly("ergodic_db", &PowerLossBounds::ergodic_db);

    m.def("subset_entropies", &subset_entropies, py::arg("channel"), py::arg("sigma2"),
          py::arg("cons"));
    m.def("dense_distribution", &dense_distribution, py::arg("cons"), py::arg("dist"));
    m.def(
        "mi_bruteforce",
        [](const RealChannel& channel, const std::vector<double>& dist, double sigma2) {
            return mi_bruteforce(channel, dist, sigma2);
        },
        py::arg("channel"), py::arg("dist"), py::arg("sigma2"));
    m.def(
        "output_distribution",
        [](const RealChannel& channel, const std::vector<double>& dist, double sigma2) {
            return output_distribution(channel, dist, sigma2);
        },
        py::arg("channel"), py::arg("dist"), py::arg("sigma2"));
    m.def("siso_capacity", &siso_capacity, py::arg("h"), py::arg("sigma2"),
          py::arg("total_power"));
    m.def("miso_capacity", &miso_capacity, py::arg("channel"), py::arg("sigma2"),
          py::arg("total_power"), py::arg("cons"));
    m.def("capacity_full_power", &capacity_full_power, py::arg("channel"), py::arg("sigma2"),
          py::arg("cons"));
    m.def("feedback_bits", &feedback_bits, py::arg("num_antennas"), py::arg("mode"));
    m.def("capacity_infinite_dacs", &capacity_infinite_dacs, py::arg("h"), py::arg("sigma2"));
    m.def("csir_only_siso_capacity", &csir_only_siso_capacity, py::arg("h"), py::arg("sigma2"),
          py::arg("total_power"));
    m.def("dac_loss_siso", &dac_loss_siso, py::arg("h"), py::arg("sigma2"));
    m.def("phase_threshold_rate", &phase_threshold_rate, py::arg("h"), py::arg("sigma2"));
    m.def("power_loss_bounds", &power_loss_bounds);

    py::class_<Xoshiro256>(m, "Xoshiro256")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("uniform01", &Xoshiro256::uniform01)
        .def("gaussian", &Xoshiro256::gaussian);

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("num_antennas", &SweepConfig::num_antennas)
        .def_readwrite("snr_grid_db", &SweepConfig::snr_grid_db)
        .def_readwrite("num_channels", &SweepConfig::num_channels)
        .def_readwrite("seed", &SweepConfig::seed)
        .def_readwrite("variants", &SweepConfig::variants);

    py::class_<SweepPoint>(m, "SweepPoint")
        .def_readonly("variant", &SweepPoint::variant)
        .def_readonly("snr_db", &SweepPoint::snr_db)
        .def_readonly("mean_bits", &SweepPoint::mean_bits)
        .def_readonly("stderr_bits", &SweepPoint::stderr_bits);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("config", &SweepResult::config)
        .def_readonly("points", &SweepResult::points);

    m.def("variant_name", &variant_name, py::arg("variant"));
    m.def("sample_channel", &sample_channel, py::arg("num_antennas"), py::arg("rng"));
    m.def("ergodic_sweep", &ergodic_sweep, py::arg("config"));
    m.def("horizontal_gap_db", &horizontal_gap_db, py::arg("result"), py::arg("faster"),
          py::arg("slower"), py::arg("level_bits"));
    m.def(
        "sweep_csv",
        [](const SweepResult& result) {
            std::ostringstream out;
            write_sweep_csv(out, result);
            return out.str();
        },
        py::arg("result"));

    py::class_<SubsetEstimate>(m, "SubsetEstimate")
        .def_readonly("u", &SubsetEstimate::u)
        .def_readonly("k", &SubsetEstimate::k)
        .def_readonly("entropy_bits", &SubsetEstimate::entropy_bits);

    py::class_<TrainingOutcome>(m, "TrainingOutcome")
        .def_readonly("selected_u", &TrainingOutcome::selected_u)
        .def_readonly("selected_k", &TrainingOutcome::selected_k)
        .def_readonly("training_length", &TrainingOutcome::training_length)
        .def_readonly("feedback_bits", &TrainingOutcome::feedback_bits)
        .def_readonly("estimates", &TrainingOutcome::estimates);

    py::class_<FeedbackCodeword>(m, "FeedbackCodeword")
        .def(py::init([](std::uint64_t value, int bits) {
                 return FeedbackCodeword{value, bits};
             }),
             py::arg("value"), py::arg("bits"))
        .def_readonly("value", &FeedbackCodeword::value)
        .def_readonly("bits", &FeedbackCodeword::bits);

    m.def("simulate_output", &simulate_output, py::arg("channel"), py::arg("x"),
          py::arg("sigma2"), py::arg("rng"));
    m.def("full_training", &full_training, py::arg("channel"), py::arg("sigma2"), py::arg("cons"),
          py::arg("repetitions"), py::arg("rng"));
    m.def("dominant_training", &dominant_training, py::arg("channel"), py::arg("sigma2"),
          py::arg("cons"), py::arg("repetitions"), py::arg("rng"));
    m.def("achieved_rate", &achieved_rate, py::arg("channel"), py::arg("sigma2"), py::arg("cons"),
          py::arg("u"), py::arg("k"));
    m.def("encode_feedback", &encode_feedback, py::arg("cons"), py::arg("mode"), py::arg("u"),
          py::arg("k"));
    m.def("decode_feedback", &decode_feedback, py::arg("cons"), py::arg("mode"),
          py::arg("codeword"));

    py::class_<TrainingSweepConfig>(m, "TrainingSweepConfig")
        .def(py::init<>())
        .def_readwrite("num_antennas", &TrainingSweepConfig::num_antennas)
        .def_readwrite("snr_grid_db", &TrainingSweepConfig::snr_grid_db)
        .def_readwrite("num_channels", &TrainingSweepConfig::num_channels)
        .def_readwrite("seed", &TrainingSweepConfig::seed)
        .def_readwrite("mode", &TrainingSweepConfig::mode)
        .def_readwrite("repetitions", &TrainingSweepConfig::repetitions);

    py::class_<TrainingSweepPoint>(m, "TrainingSweepPoint")
        .def_readonly("snr_db", &TrainingSweepPoint::snr_db)
        .def_readonly("mean_rate_bits", &TrainingSweepPoint::mean_rate_bits)
        .def_readonly("stderr_rate_bits", &TrainingSweepPoint::stderr_rate_bits)
        .def_readonly("mean_capacity_bits", &TrainingSweepPoint::mean_capacity_bits)
        .def_readonly("training_length", &TrainingSweepPoint::training_length)
        .def_readonly("feedback_bits", &TrainingSweepPoint::feedback_bits);

    py::class_<TrainingSweepResult>(m, "TrainingSweepResult")
        .def_readonly("config", &TrainingSweepResult::config)
        .def_readonly("points", &TrainingSweepResult::points);

    m.def("ergodic_training_sweep", &ergodic_training_sweep, py::arg("config"));
    m.def(
        "training_csv",
        [](const TrainingSweepResult& result) {
            std::ostringstream out;
            write_training_csv(out, result);
            return out.str();
        },
        py::arg("result"));
}
