// Copyright 2026 The cegen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cegen/sensors.h"

#include <random>

#include <fmt/format.h>

#include "cegen/entanglement.h"
#include "cegen/error.h"
#include "cegen/rng.h"
#include "cegen/simulator.h"

namespace cegen {

namespace {

constexpr int kMaxSensorQubits = 11;

void reverse_ladder(Circuit& c, int sensors) {
    for (int q = sensors - 2; q >= 0; --q) {
        c.cnot(q, q + 1);
    }
}

void readout(Circuit& c, int sensors) {
    c.h(0);
    c.cnot(0, memory_qubit(sensors));
}

template <typename BuildCircuit>
SensorEnsemble run_ensemble(int sensors, int ensemble_size, int shots, uint64_t seed, double jitter_sigma,
                            double phi_mean, BuildCircuit build) {
    const int n = sensors + 1;
    SensorEnsemble e;
    e.phases.resize(ensemble_size);
    Rng rng(derive_seed(seed, "jitter"));
    std::normal_distribution<double> jitter(0.0, 1.0);
    for (auto& p : e.phases) {
        p = phi_mean + jitter_sigma * jitter(rng);
    }
    e.states.assign(ensemble_size, StateVector(n));
    e.ce_values.resize(ensemble_size);
    const bool with_full = n <= 8;
    if (with_full) {
        e.ce_full.resize(ensemble_size);
    }
    const uint64_t ce_seed = derive_seed(seed, "ce");
#pragma omp parallel for schedule(static)
    for (long i = 0; i < ensemble_size; ++i) {
        e.states[i] = apply_circuit(StateVector(n), build(e.phases[i]));
        e.ce_values[i] = ce1_swap_bounds(e.states[i], shots, derive_seed(ce_seed, i)).value;
        if (with_full) {
            e.ce_full[i] = ce_full(e.states[i]).value;
        }
    }
    return e;
}

std::string fmt_double(double v) { return fmt::format("{:.17g}", v); }

Dataset to_dataset(SensorEnsemble&& e, int num_qubits, std::vector<std::pair<std::string, std::string>> meta) {
    Dataset d;
    d.num_qubits = num_qubits;
    d.states = std::move(e.states);
    d.ce_values = std::move(e.ce_values);
    d.ce_full = std::move(e.ce_full);
    d.metadata = std::move(meta);
    return d;
}

}  // namespace

void SoilConfig::validate() const {
    if (num_sensor_qubits < 2 || num_sensor_qubits % 2 != 0 || num_sensor_qubits > kMaxSensorQubits) {
        throw ContractViolation(
            fmt::format("soil sensor needs an even number of sensor qubits in [2, {}], got {}", kMaxSensorQubits,
                        num_sensor_qubits));
    }
    if (!(jitter_sigma >= 0.0)) {
        throw ContractViolation("jitter_sigma must be >= 0");
    }
    if (ensemble_size < 1) {
        throw ContractViolation(fmt::format("ensemble_size must be >= 1, got {}", ensemble_size));
    }
    if (shots_per_state < 0) {
        throw ContractViolation("shots_per_state must be >= 0");
    }
}

void DarkMatterConfig::validate() const {
    if (num_sensor_qubits < 2 || num_sensor_qubits > kMaxSensorQubits) {
        throw ContractViolation(fmt::format("dark-matter sensor needs [2, {}] sensor qubits, got {}", kMaxSensorQubits,
                                            num_sensor_qubits));
    }
    if (!(phi >= 0.0)) {
        throw ContractViolation(fmt::format("signal phase must be >= 0, got {}", phi));
    }
    if (!(jitter_sigma >= 0.0)) {
        throw ContractViolation("jitter_sigma must be >= 0");
    }
    if (ensemble_size < 1) {
        throw ContractViolation(fmt::format("ensemble_size must be >= 1, got {}", ensemble_size));
    }
    if (shots_per_state < 0) {
        throw ContractViolation("shots_per_state must be >= 0");
    }
}

int memory_qubit(int num_sensor_qubits) { return num_sensor_qubits; }

Circuit ghz_ladder(int num_qubits, int num_sensor_qubits) {
    Circuit c(num_qubits);
    c.h(0);
    for (int q = 0; q + 1 < num_sensor_qubits; ++q) {
        c.cnot(q, q + 1);
    }
    return c;
}

Circuit soil_circuit(const SoilConfig& config, double phi_soil) {
    const int s = config.num_sensor_qubits;
    Circuit c = ghz_ladder(s + 1, s);
    for (int q = s / 2; q < s; ++q) {
        c.x(q);
    }
    for (int q = 0; q < s / 2; ++q) {
        c.rz(q, phi_soil);
    }
    for (int q = s / 2; q < s; ++q) {
        c.rz(q, config.phi_free);
    }
    for (int q = s / 2; q < s; ++q) {
        c.x(q);
    }
    reverse_ladder(c, s);
    readout(c, s);
    return c;
}

Circuit dark_matter_circuit(const DarkMatterConfig& config, double phi) {
    const int s = config.num_sensor_qubits;
    Circuit c = ghz_ladder(s + 1, s);
    for (int q = 0; q < s; ++q) {
        c.rx(q, phi);
    }
    reverse_ladder(c, s);
    readout(c, s);
    return c;
}

SensorEnsemble simulate_soil(const SoilConfig& config) {
    config.validate();
    return run_ensemble(config.num_sensor_qubits, config.ensemble_size, config.shots_per_state, config.seed,
                        config.jitter_sigma, config.phi_soil_mean,
                        [&](double phi) { return soil_circuit(config, phi); });
}

SensorEnsemble simulate_dark_matter(const DarkMatterConfig& config) {
    config.validate();
    return run_ensemble(config.num_sensor_qubits, config.ensemble_size, config.shots_per_state, config.seed,
                        config.jitter_sigma, config.phi, [&](double phi) { return dark_matter_circuit(config, phi); });
}

Dataset soil_dataset(const SoilConfig& config, const std::string& regime) {
    return to_dataset(simulate_soil(config), config.num_sensor_qubits + 1,
                      {{"kind", "sensor:soil"},
                       {"regime", regime},
                       {"num_qubits", std::to_string(config.num_sensor_qubits + 1)},
                       {"num_sensor_qubits", std::to_string(config.num_sensor_qubits)},
                       {"phi_soil_mean", fmt_double(config.phi_soil_mean)},
                       {"phi_free", fmt_double(config.phi_free)},
                       {"jitter_sigma", fmt_double(config.jitter_sigma)},
                       {"ensemble_size", std::to_string(config.ensemble_size)},
                       {"ce_method", "ce1"},
                       {"shots", std::to_string(config.shots_per_state)},
                       {"seed", std::to_string(config.seed)}});
}

Dataset dark_matter_dataset(const DarkMatterConfig& config, const std::string& regime) {
    return to_dataset(simulate_dark_matter(config), config.num_sensor_qubits + 1,
                      {{"kind", "sensor:dm"},
                       {"regime", regime},
                       {"num_qubits", std::to_string(config.num_sensor_qubits + 1)},
                       {"num_sensor_qubits", std::to_string(config.num_sensor_qubits)},
                       {"phi", fmt_double(config.phi)},
                       {"jitter_sigma", fmt_double(config.jitter_sigma)},
                       {"ensemble_size", std::to_string(config.ensemble_size)},
                       {"ce_method", "ce1"},
                       {"shots", std::to_string(config.shots_per_state)},
                       {"seed", std::to_string(config.seed)}});
}

}  // namespace cegen
