#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "starq/normalizer.hpp"

namespace starq {

constexpr uint64_t kDefaultScenarioSeed = 20031117;

struct CheckResult {
    std::string description;
    bool passed;
    std::string witness;
};

struct ScenarioReport {
    std::string name;
    uint64_t seed = kDefaultScenarioSeed;
    std::vector<CheckResult> checks;
    std::vector<std::string> discrepancies;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// 2x2 matrix of base elements; multiplication is entry-wise Moyal star
/// composed with the matrix product.
struct MatrixRep {
    std::array<WeylElement, 4> entries;  // row-major

    const WeylElement& at(unsigned r, unsigned c) const { return entries[2 * r + c]; }
    WeylElement& at(unsigned r, unsigned c) { return entries[2 * r + c]; }
    bool operator==(const MatrixRep& o) const { return entries == o.entries; }
};

MatrixRep matrix_star(const MatrixRep& a, const MatrixRep& b);

/// Parameters (a, b, c, d) of a double-line family member
/// h = a + b p2 + (c + d p2 - b/(2 lambda) p2^2) * x2, each an
/// (x1, p1)-element.
struct DoubleLineElement {
    WeylElement a, b, c, d;

    WeylElement assemble() const;
};

/// Extracts the family parameters from a normalizer member reduced mod
/// (x2^2); throws std::domain_error when h is outside the family.
DoubleLineElement double_line_components(const WeylElement& h);

/// phi(h) = ((a + 2 lambda d, b), (2 lambda c, a)).
MatrixRep matrix_rep(const WeylElement& h);

ScenarioReport run_cross(uint64_t seed = kDefaultScenarioSeed);
ScenarioReport run_double_line(uint64_t seed = kDefaultScenarioSeed);
ScenarioReport run_double_point(uint64_t seed = kDefaultScenarioSeed);
ScenarioReport run_fat_circle(uint64_t seed = kDefaultScenarioSeed);

/// Dispatch by name: cross, double_line, double_point, fat_circle.
ScenarioReport run_scenario(const std::string& name, uint64_t seed = kDefaultScenarioSeed);

std::vector<std::string> scenario_names();

}  // namespace starq
