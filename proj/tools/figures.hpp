// figures.hpp - curve bundles behind `onset figures`, one CSV per figure.
#pragma once

#include <string>
#include <vector>

namespace onset::cli {

struct FigureFile {
    std::string name;  // e.g. "figure1.csv"
    std::string csv;
};

/// Build every figure CSV in order. Deterministic: no randomness enters any
/// curve, so repeated calls produce identical bytes.
std::vector<FigureFile> build_figures();

}  // namespace onset::cli
