#include "drinfeld/table1.hpp"

#include "drinfeld/string_centre.hpp"

namespace drinfeld::table1 {

using roots::Series;

std::string Cell::flag_text() const {
  return type.str() + " k=" + level.get_str() + ": q(" + generator + ") formula " + computed.str() + ", table " +
         printed.str();
}

QZ printed_value(const roots::SimpleType& t, const Integer& k, bool sum) {
  const Integer r = t.rank;
  switch (t.series) {
    case Series::A: return qz(k * r, 2 * (r + 1));
    case Series::B: return qz(k, 2);
    case Series::C: return qz(k * r, 2);
    case Series::D:
      if (r % 2 == 1) return qz(k * r, 8);
      return sum ? qz(k, 2) : qz(k * (r / 2), 4);
    case Series::E:
      if (t.rank == 6) return qz(2 * k, 3);
      if (t.rank == 7) return qz(k, 4);
      break;
    default: break;
  }
  return QZ();
}

std::vector<Cell> cells(const roots::SimpleType& t, const Integer& k) {
  const auto q = centre::sc_centre(t, k);
  const auto z = roots::centre_of(t);
  std::vector<Cell> out;
  for (std::size_t a = 0; a < z.labels.size(); ++a) {
    Cell c{t, k, "ω" + std::to_string(z.labels[a]), q.diag()[a], printed_value(t, k), {}};
    if (t.series == Series::E && t.rank == 7) c.note = "row labels the generator ω1, the centre column names ω7";
    out.push_back(std::move(c));
  }
  if (t.series == Series::D && t.rank % 2 == 0) {
    const Element both{Integer(1), Integer(1)};
    out.push_back({t, k, "ω" + std::to_string(t.rank - 1) + "+ω" + std::to_string(t.rank), q(both),
                   printed_value(t, k, true), {}});
  }
  return out;
}

std::vector<roots::SimpleType> table_types() {
  std::vector<roots::SimpleType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Series::A, n});
  for (int n = 2; n <= 6; ++n) out.push_back({Series::B, n});
  for (int n = 2; n <= 6; ++n) out.push_back({Series::C, n});
  for (int n = 3; n <= 8; ++n) out.push_back({Series::D, n});
  out.push_back({Series::E, 6});
  out.push_back({Series::E, 7});
  return out;
}

std::vector<Cell> table(int max_level) {
  std::vector<Cell> out;
  for (const auto& t : table_types())
    for (int k = 1; k <= max_level; ++k)
      for (auto& c : cells(t, k)) out.push_back(std::move(c));
  return out;
}

}  // namespace drinfeld::table1
