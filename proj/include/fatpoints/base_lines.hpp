#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "fatpoints/core.hpp"

// Multiple lines in the base locus. The line through points i and j lies in
// the base locus with multiplicity t_ij = m_i + m_j - d whenever t_ij >= 1;
// the lines with t_ij >= 2 force the dimension above the virtual count by
// binom(t_ij + 1, 3) each.

namespace fatpoints {

/// t_ij = m_i + m_j - d for two distinct existing points.
Int line_multiplicity(const LinearSystem& sys, std::size_t i, std::size_t j);

/// One base line with multiplicity >= 1; always i < j.
struct MultipleLine {
    std::size_t i = 0;
    std::size_t j = 0;
    Int t = 0;

    bool operator==(const MultipleLine&) const = default;
};

/// All pairs with t_ij >= 1, ordered lexicographically by (i, j).
std::vector<MultipleLine> multiple_lines(const LinearSystem& sys);

/// sum of binom(t_ij + 1, 3) over the pairs with t_ij >= 2.
Int line_speciality_term(const LinearSystem& sys);

/// Shape of the graph on the points spanned by the multiple lines. In
/// standard form only Empty, Star and Triangle can occur (two disjoint
/// edges would force m_i+m_j > d twice, contradicting 2d >= m1+m2+m3+m4);
/// Other is reachable only off the standard-form path. A single edge
/// counts as a star whose center is its first endpoint.
struct LineGraphShape {
    enum class Kind { Empty, Star, Triangle, Other };

    Kind kind = Kind::Empty;
    std::size_t center = 0;                 // Star
    std::vector<std::size_t> leaves;        // Star
    std::array<std::size_t, 3> vertices{};  // Triangle
};

LineGraphShape classify_line_graph(const std::vector<MultipleLine>& lines);
LineGraphShape classify_line_graph(const LinearSystem& sys);

const char* to_string(LineGraphShape::Kind kind);

}  // namespace fatpoints
