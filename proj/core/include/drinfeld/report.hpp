#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/string_centre.hpp"
#include "drinfeld/table1.hpp"

namespace drinfeld::io {

enum class Format { Text, Json };

Format parse_format(std::string_view text);

struct Pi0Summary {
  std::size_t vector_dim = 0;
  std::size_t discrete_free_rank = 0;
  std::size_t torus_dim = 0;
  std::vector<Integer> invariant_factors;

  friend bool operator==(const Pi0Summary&, const Pi0Summary&) = default;
};

struct LoopGroupRecord {
  bool semisimple = false;
  bool positive_definite = false;
  bool e8_level2 = false;
  bool applicable = false;
  std::string statement;

  friend bool operator==(const LoopGroupRecord&, const LoopGroupRecord&) = default;
};

struct ReportDocument {
  bool descends = false;
  Pi0Summary pi0;
  std::vector<QZ> q_on_generators;
  std::vector<std::vector<QZ>> sigma_matrix;
  std::string name;
  std::string gauss_sum;
  LoopGroupRecord loopgroup;
  std::vector<std::string> table_flags;
  /// q on the lifted kernel generators.
  std::vector<QZ> kernel_values;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument run(const centre::GroupSpec& spec, const Integer& bound = torus::kDefaultDenominatorBound);

std::string render(const ReportDocument& r, Format f);
/// Inverse of render(r, Format::Json).
ReportDocument parse_report(std::string_view text);

std::string render_table1(const std::vector<table1::Cell>& cells, Format f);

struct OracleReport {
  Integer n;
  Integer k;
  std::vector<Integer> invariant_factors;
  std::vector<QZ> q_on_generators;
  std::vector<std::vector<QZ>> sigma_matrix;
  /// (g, q(g)) for every centre piece, g the underlying group element.
  std::vector<std::pair<Integer, QZ>> q_table;
  std::string name;
  bool exact = false;
};

OracleReport oracle_report(const Integer& n, const Integer& k);
std::string render(const OracleReport& r, Format f);

struct ExampleOutcome {
  std::string label;
  std::string expected;
  std::string computed;
  bool ok() const { return expected == computed; }
};

/// SU(2), SO(3), SO(4) and U(2) fixtures with their expected verdicts.
std::vector<ExampleOutcome> examples_battery();
std::string render(const std::vector<ExampleOutcome>& outcomes, Format f);

}  // namespace drinfeld::io
