#include "drinfeld/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "drinfeld/discrete_oracle.hpp"
#include "json.hpp"

namespace drinfeld::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string complex_text(std::complex<double> z) {
  auto clean = [](double v) { return std::abs(v) < 5e-7 ? 0.0 : v; };
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", clean(z.real()), clean(z.imag()));
  return buf;
}

ordered_json qz_array(const std::vector<QZ>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

ordered_json qz_matrix(const std::vector<std::vector<QZ>>& m) {
  ordered_json a = ordered_json::array();
  for (const auto& row : m) a.push_back(qz_array(row));
  return a;
}

std::vector<QZ> read_qz_array(const ordered_json& a) {
  std::vector<QZ> out;
  for (const auto& x : a) out.push_back(QZ::parse(x.get<std::string>()));
  return out;
}

std::vector<std::vector<QZ>> sigma_of(const forms::QForm& q) {
  const auto b = forms::associated_bilinear(q);
  std::vector<std::vector<QZ>> out(b.rows(), std::vector<QZ>(b.cols()));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out[i][j] = b(i, j);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string integers_text(const std::vector<Integer>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.get_str());
  return "[" + join(parts, ", ") + "]";
}

std::string qz_text(const std::vector<QZ>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.str());
  return "[" + join(parts, ", ") + "]";
}

// pads by code points so that ω-labels line up
std::string pad(const std::string& s, std::size_t width) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return s + std::string(width > n ? width - n : 1, ' ');
}

ordered_json integer_array(const std::vector<Integer>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  throw DomainError("format: expected text or json");
}

ReportDocument run(const centre::GroupSpec& spec, const Integer& bound) {
  const auto result = centre::quotient_centre(spec, bound);
  const auto lg = centre::loopgroup_flags(spec);
  ReportDocument r;
  r.descends = result.descends;
  r.table_flags = result.table_flags;
  r.kernel_values = result.kernel_values;
  r.loopgroup = {lg.semisimple, lg.positive_definite, lg.e8_level2, lg.applicable, lg.statement};
  if (!result.centre) {
    r.name = "none";
    return r;
  }
  const auto& c = *result.centre;
  r.pi0 = {c.vector_dim, c.discrete_free_rank, c.torus_dim, c.finite.group().invariant_factors()};
  r.q_on_generators = c.finite.diag();
  r.sigma_matrix = sigma_of(c.finite);
  if (result.name) {
    r.name = result.name->str();
  } else {
    std::ostringstream os;
    os << "R^" << c.vector_dim << " × Z^" << c.discrete_free_rank << " × T^" << c.torus_dim << " × "
       << forms::name_form(c.finite).str();
    r.name = os.str();
  }
  r.gauss_sum = complex_text(forms::gauss_sum(c.finite).value);
  return r;
}

std::string render(const ReportDocument& r, Format f) {
  if (f == Format::Json) {
    ordered_json doc;
    doc["descends"] = r.descends;
    doc["pi0"] = {{"vector_dim", r.pi0.vector_dim},
                  {"discrete_free_rank", r.pi0.discrete_free_rank},
                  {"torus_dim", r.pi0.torus_dim},
                  {"invariant_factors", integer_array(r.pi0.invariant_factors)}};
    doc["q_on_generators"] = qz_array(r.q_on_generators);
    doc["sigma_matrix"] = qz_matrix(r.sigma_matrix);
    doc["name"] = r.name;
    doc["gauss_sum"] = r.gauss_sum;
    doc["loopgroup"] = {{"semisimple", r.loopgroup.semisimple},
                        {"positive_definite", r.loopgroup.positive_definite},
                        {"e8_level2", r.loopgroup.e8_level2},
                        {"applicable", r.loopgroup.applicable},
                        {"statement", r.loopgroup.statement}};
    doc["table_flags"] = r.table_flags;
    doc["kernel_values"] = qz_array(r.kernel_values);
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "descends: " << (r.descends ? "yes" : "no") << "\n";
  if (!r.kernel_values.empty()) os << "q on kernel generators: " << qz_text(r.kernel_values) << "\n";
  if (r.descends) {
    os << "pi0: R^" << r.pi0.vector_dim << " x Z^" << r.pi0.discrete_free_rank << " x T^" << r.pi0.torus_dim
       << " x finite " << integers_text(r.pi0.invariant_factors) << "\n";
    os << "q on generators: " << qz_text(r.q_on_generators) << "\n";
    os << "sigma:\n";
    for (const auto& row : r.sigma_matrix) os << "  " << qz_text(row) << "\n";
    os << "name: " << r.name << "\n";
    os << "gauss sum: " << r.gauss_sum << "\n";
  }
  os << "loop groups: " << r.loopgroup.statement << "\n";
  for (const auto& flag : r.table_flags) os << "flag: " << flag << "\n";
  return os.str();
}

ReportDocument parse_report(std::string_view text) {
  const auto doc = ordered_json::parse(text.begin(), text.end());
  ReportDocument r;
  r.descends = doc.at("descends").get<bool>();
  const auto& p = doc.at("pi0");
  r.pi0.vector_dim = p.at("vector_dim").get<std::size_t>();
  r.pi0.discrete_free_rank = p.at("discrete_free_rank").get<std::size_t>();
  r.pi0.torus_dim = p.at("torus_dim").get<std::size_t>();
  for (const auto& x : p.at("invariant_factors")) r.pi0.invariant_factors.emplace_back(x.get<std::string>());
  r.q_on_generators = read_qz_array(doc.at("q_on_generators"));
  for (const auto& row : doc.at("sigma_matrix")) r.sigma_matrix.push_back(read_qz_array(row));
  r.name = doc.at("name").get<std::string>();
  r.gauss_sum = doc.at("gauss_sum").get<std::string>();
  const auto& lg = doc.at("loopgroup");
  r.loopgroup = {lg.at("semisimple").get<bool>(), lg.at("positive_definite").get<bool>(),
                 lg.at("e8_level2").get<bool>(), lg.at("applicable").get<bool>(),
                 lg.at("statement").get<std::string>()};
  r.table_flags = doc.at("table_flags").get<std::vector<std::string>>();
  r.kernel_values = read_qz_array(doc.at("kernel_values"));
  return r;
}

std::string render_table1(const std::vector<table1::Cell>& cells, Format f) {
  if (f == Format::Json) {
    ordered_json a = ordered_json::array();
    for (const auto& c : cells) {
      ordered_json row;
      row["type"] = c.type.str();
      row["level"] = c.level.get_str();
      row["generator"] = c.generator;
      row["computed"] = c.computed.str();
      row["table"] = c.printed.str();
      row["status"] = c.match() ? "MATCH" : "FLAG";
      if (!c.note.empty()) row["note"] = c.note;
      a.push_back(row);
    }
    return a.dump(2) + "\n";
  }
  std::ostringstream os;
  auto row = [&os](std::initializer_list<std::string> fields) {
    const std::size_t widths[] = {6, 4, 9, 10, 10};
    std::size_t i = 0;
    for (const auto& f : fields) os << (i < 5 ? pad(f, widths[i++]) : f);
  };
  row({"type", "k", "gen", "computed", "table", "status"});
  os << "\n";
  for (const auto& c : cells) {
    row({c.type.str(), c.level.get_str(), c.generator, c.computed.str(), c.printed.str(), c.match() ? "MATCH" : "FLAG"});
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  return os.str();
}

OracleReport oracle_report(const Integer& n, const Integer& k) {
  if (n < 1 || n > 64) throw SizeGuardExceeded("oracle: n must lie in 1..64");
  const auto w = oracle::std_cocycle(n, k);
  const auto b = oracle::brute_centre(w);
  OracleReport r;
  r.n = n;
  r.k = lattice::mod(k, n);
  r.invariant_factors = b.form.group().invariant_factors();
  r.q_on_generators = b.form.diag();
  r.sigma_matrix = sigma_of(b.form);
  for (const auto& piece : b.pieces) r.q_table.emplace_back(w.elements()[piece.g].empty() ? Integer(0) : w.elements()[piece.g][0], piece.gamma[piece.g]);
  r.name = forms::name_form(b.form).str();
  r.exact = oracle::exact_sequence_check(w).exact();
  return r;
}

std::string render(const OracleReport& r, Format f) {
  if (f == Format::Json) {
    ordered_json doc;
    doc["n"] = r.n.get_str();
    doc["k"] = r.k.get_str();
    doc["invariant_factors"] = integer_array(r.invariant_factors);
    doc["q_on_generators"] = qz_array(r.q_on_generators);
    doc["sigma_matrix"] = qz_matrix(r.sigma_matrix);
    ordered_json table = ordered_json::array();
    for (const auto& [g, v] : r.q_table) table.push_back({{"g", g.get_str()}, {"q", v.str()}});
    doc["q_table"] = table;
    doc["name"] = r.name;
    doc["exact"] = r.exact;
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "centre of Vec[Z/" << r.n << "] twisted by " << r.k << ": finite " << integers_text(r.invariant_factors) << "\n";
  os << "q on generators: " << qz_text(r.q_on_generators) << "\n";
  os << "name: " << r.name << "\n";
  os << "q table (g, q):";
  for (const auto& [g, v] : r.q_table) os << " (" << g << "," << v << ")";
  os << "\nexact sequence: " << (r.exact ? "verified" : "FAILED") << "\n";
  return os.str();
}

std::vector<ExampleOutcome> examples_battery() {
  using centre::GroupSpec;
  const roots::SimpleType a1{roots::Series::A, 1};
  std::vector<ExampleOutcome> out;
  const char* su2[] = {"VecZ2", "Semi", "sVec", "SemiBar"};
  for (int k = 0; k <= 12; ++k) {
    GroupSpec s;
    s.simples = {{a1, k}};
    out.push_back({"SU(2) k=" + std::to_string(k), su2[k % 4], run(s).name});
  }
  for (int k = -4; k <= 8; ++k) {
    GroupSpec s;
    s.simples = {{a1, k}};
    s.kernel = {{{}, {{Integer(1)}}}};
    const bool descends = ((k % 4) + 4) % 4 == 0;
    const auto r = run(s);
    out.push_back({"SO(3) k=" + std::to_string(k), descends ? "descends Vec" : "obstructed",
                   r.descends ? "descends " + r.name : "obstructed"});
  }
  for (int kl = -8; kl <= 8; ++kl)
    for (int kr = -8; kr <= 8; ++kr) {
      GroupSpec s;
      s.simples = {{a1, kl}, {a1, kr}};
      s.kernel = {{{}, {{Integer(1)}, {Integer(1)}}}};
      const int m = ((kl % 4) + 4) % 4;
      std::string expected = "obstructed";
      if (((kl + kr) % 4 + 4) % 4 == 0) expected = m == 0 ? "VecZ2" : m == 2 ? "sVec" : "Vec";
      const auto r = run(s);
      out.push_back({"SO(4) kl=" + std::to_string(kl) + " kr=" + std::to_string(kr), expected,
                     r.descends ? r.name : "obstructed"});
    }
  for (int j = 1; j <= 4; ++j)
    for (int k = 1; k <= 6; ++k) {
      GroupSpec s;
      s.torus = torus::TorusLevel{IntMatrix{{Integer(-j)}}};
      s.simples = {{a1, k}};
      s.kernel = {{{Rational(1, 2)}, {{Integer(1)}}}};
      // q on (1/2, -1) is j/4 + k/4
      const bool descends = (j + k) % 4 == 0;
      const auto r = run(s);
      out.push_back({"U(2) J=" + std::to_string(-j) + " k=" + std::to_string(k),
                     descends ? "descends" : "obstructed", r.descends ? "descends" : "obstructed"});
    }
  return out;
}

std::string render(const std::vector<ExampleOutcome>& outcomes, Format f) {
  if (f == Format::Json) {
    ordered_json a = ordered_json::array();
    for (const auto& o : outcomes)
      a.push_back({{"example", o.label}, {"expected", o.expected}, {"computed", o.computed}, {"ok", o.ok()}});
    return a.dump(2) + "\n";
  }
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    os << (o.ok() ? "ok   " : "FAIL ") << o.label << ": " << o.computed;
    if (!o.ok()) os << " (expected " << o.expected << ")";
    os << "\n";
    passed += o.ok();
  }
  os << passed << "/" << outcomes.size() << " examples agree\n";
  return os.str();
}

}  // namespace drinfeld::io
