#pragma once

// JSON persistence for structure-constant tables. Rational coefficients are
// written as exact "p/q" strings so a save/load cycle is bit-exact.

#include <optional>
#include <string>

#include <lie/lie_algebra.hpp>
#include <lie/semidirect.hpp>

namespace lie {

struct AlgebraDoc {
    LieAlgebra algebra;
    std::optional<Splitting> splitting;
};

std::string algebra_to_json(const AlgebraDoc& doc, bool pretty = false);

// Throws std::runtime_error with a diagnostic on malformed input; the
// reconstructed table goes through the full Jacobi validation.
AlgebraDoc algebra_from_json(const std::string& text);

AlgebraDoc load_algebra_file(const std::string& path);
void save_algebra_file(const AlgebraDoc& doc, const std::string& path, bool pretty = false);

}  // namespace lie
