// io.hpp - matrix files and trajectory CSV output.
//
// Matrix JSON: {"dim": n, "re": [n*n row-major], "im": [n*n]}, "im" optional
// on read and always written. Trajectory CSV: header t,<name>,... then one
// row per grid point, every value printed with 17 significant digits, LF
// line endings.
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "onset/dynamics.hpp"
#include "onset/matrix.hpp"

namespace onset {

/// File access or syntax/shape problems while reading inputs.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ComplexMatrix read_matrix_json(const std::filesystem::path& path);
void write_matrix_json(const std::filesystem::path& path,
                       const ComplexMatrix& m);

std::string trajectory_csv(const Trajectory& traj);
void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& traj);

/// One value formatted the way trajectory_csv formats it.
std::string csv_value(double v);

}  // namespace onset
