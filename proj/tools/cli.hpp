#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace eigenmatrix::cli {

namespace exit_code {
constexpr int kOk = 0;
constexpr int kBadInput = 2;
constexpr int kIrrationalSpectrum = 3;
constexpr int kNotDiagonalizable = 4;
constexpr int kInvalidSpectrum = 5;
constexpr int kInternal = 6;
}  // namespace exit_code

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Operation counts and wall time of the kappa and echelon-oracle eigenvector
/// routes on one matrix, each under its own counter.
Json bench_report(const Matrix& a, const Spectrum& s);

}  // namespace eigenmatrix::cli
