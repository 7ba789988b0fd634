#pragma once

#include <string>
#include <vector>

#include "drinfeld/qz.hpp"
#include "drinfeld/root_data.hpp"

namespace drinfeld::table1 {

/// One generator of one row at one level: value from the centre formula
/// next to the typeset row.
struct Cell {
  roots::SimpleType type;
  Integer level;
  std::string generator;  // "ω1", "ω3+ω4"
  QZ computed;
  QZ printed;
  std::string note;  // labelling remarks

  bool match() const { return computed == printed; }
  std::string flag_text() const;
};

/// Printed row value for a named generator; `sum` selects ω_{2n−1}+ω_{2n} in type D_{2n}.
QZ printed_value(const roots::SimpleType& t, const Integer& k, bool sum = false);

/// Cells for one type and level (empty when the centre is trivial).
std::vector<Cell> cells(const roots::SimpleType& t, const Integer& k);

/// A₁..A₈, B₂..B₆, C₂..C₆, D₃..D₈, E₆, E₇.
std::vector<roots::SimpleType> table_types();

std::vector<Cell> table(int max_level);

}  // namespace drinfeld::table1
