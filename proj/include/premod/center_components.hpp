#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "premod/premodular.hpp"

namespace premod {

/// Characters of the transparent subring K0(Z2(B)); one per component of the
/// two-categorical centre. Only counts and character values are modelled.
struct ComponentAnalysis {
    std::size_t count = 0;
    /// Transparent labels, indices into the analysed datum.
    std::vector<Label> labels;
    /// characters[i][j] is the value of character i on labels[j].
    std::vector<std::vector<std::complex<double>>> characters;
    /// Exact values as exponents p/q meaning exp(2 pi i p/q); set on the group-like path.
    std::optional<std::vector<std::vector<Rational>>> exact_exponents;
    std::size_t dim_index = 0;
    std::optional<std::size_t> magnetic_index;
    std::uint64_t seed = 0;
    bool exact = false;
};

/// Numeric characters of a commutative fusion ring by diagonalizing a random
/// combination of its fusion matrices. Throws Error(DegenerateEigenproblem) if
/// no separating combination is found after 8 retries.
std::vector<std::vector<std::complex<double>>> numeric_ring_characters(const FusionRing& ring, std::uint64_t seed);

/// Exact characters of a ring in which every simple is invertible, as exponent
/// vectors. Throws Error(InvalidArgument) if some simple is not invertible.
std::vector<std::vector<Rational>> group_ring_characters(const FusionRing& ring);

bool is_group_like(const FusionRing& ring);

/// Characters of the Mueger centre's fusion ring, ordered by decreasing value
/// lexicographically over the transparent labels.
ComponentAnalysis ring_characters(const PremodularData& data, std::uint64_t seed = 1);

/// Number of transparent simples; throws Error(CrossCheckMismatch) if it
/// disagrees with the number of characters.
std::size_t component_count(const PremodularData& data, std::uint64_t seed = 1);

}  // namespace premod
