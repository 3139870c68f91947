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

#ifndef CEGEN_SENSORS_H
#define CEGEN_SENSORS_H

#include <cstdint>
#include <vector>

#include "cegen/circuit.h"
#include "cegen/generator.h"
#include "cegen/state_vector.h"

namespace cegen {

/// Differential soil-moisture sensing: a GHZ sensor register split into a
/// soil group and a reference group, read out through one memory qubit.
struct SoilConfig {
    int num_sensor_qubits = 4;  // even, >= 2
    double phi_soil_mean = 1.0;
    double phi_free = 0.2;
    double jitter_sigma = 0.1;
    int shots_per_state = 0;  // 0 = exact CE1
    int ensemble_size = 1800;
    uint64_t seed = 0;

    void validate() const;
};

/// Collective RX sensing of a weak signal by a GHZ sensor register.
struct DarkMatterConfig {
    int num_sensor_qubits = 4;
    double phi = 0.01;
    double jitter_sigma = 0.005;
    int shots_per_state = 0;
    int ensemble_size = 500;
    uint64_t seed = 0;

    void validate() const;
};

/// Sensor register (qubits [0, s)) followed by the memory qubit s.
int memory_qubit(int num_sensor_qubits);

/// GHZ preparation of the sensor register: H on qubit 0, then a CNOT ladder.
Circuit ghz_ladder(int num_qubits, int num_sensor_qubits);

/// Full soil protocol for one member with the given soil-group phase.
///
/// GHZ ladder; X on the reference group (sensors [s/2, s)) so the two groups
/// sit in opposite branches; RZ(phi_soil) on the soil group and RZ(phi_free)
/// on the reference group; X on the reference group again; reverse ladder;
/// H on sensor 0; CNOT from sensor 0 to the memory qubit. The relative
/// phase of the two branches is (s/2)(phi_soil - phi_free).
Circuit soil_circuit(const SoilConfig& config, double phi_soil);

/// Full dark-matter protocol for one member with rotation angle `phi`:
/// GHZ ladder, RX(phi) on every sensor, reverse ladder, H on sensor 0,
/// CNOT from sensor 0 to the memory qubit.
Circuit dark_matter_circuit(const DarkMatterConfig& config, double phi);

struct SensorEnsemble {
    std::vector<StateVector> states;
    std::vector<double> ce_values;  // CE1 (SWAP-test estimator)
    std::vector<double> ce_full;    // full power-set CE, when <= 8 qubits
    std::vector<double> phases;     // per-member signal phase after jitter
};

SensorEnsemble simulate_soil(const SoilConfig& config);
SensorEnsemble simulate_dark_matter(const DarkMatterConfig& config);

/// Dataset with kind "sensor:soil" / "sensor:dm" and the config echoed.
Dataset soil_dataset(const SoilConfig& config, const std::string& regime);
Dataset dark_matter_dataset(const DarkMatterConfig& config, const std::string& regime);

}  // namespace cegen

#endif
