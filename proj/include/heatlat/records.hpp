#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heatlat/lattice.hpp"

namespace heatlat {

// Everything an estimator consumes from one replica. Estimation is a pure
// function of records; a record saved to CSV and reloaded reproduces the
// same estimates bit for bit (floats are written with 17 significant
// digits).
struct TrajectoryRecord {
    int replica = 0;
    std::uint64_t seed = 0;
    int dim = 0;
    int n = 0;
    std::vector<double> times;             // output times, times[0] == 0
    std::vector<ScalarField> energy;       // site energies per output time
    std::vector<double> total_energy;      // per output time
    std::vector<std::vector<double>> j_a;  // optional bond currents per output time
    std::vector<std::vector<double>> j_s;  // optional
    std::vector<double> jtot_series;       // optional dense volume current, axis 0
    double jtot_dt = 0.0;                  // sampling interval of jtot_series
};

void write_record_csv(const TrajectoryRecord& rec, const std::string& path);
TrajectoryRecord read_record_csv(const std::string& path);

// 17-significant-digit float formatting used by every CSV writer.
std::string format_double(double v);

}  // namespace heatlat
