#include "drinfeld/spec_document.hpp"

#include <set>

#include "json.hpp"

namespace drinfeld::io {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void only_fields(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw DomainError(path + ": expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items())
    if (!ok.contains(key)) throw DomainError((path.empty() ? key : path + "." + key) + ": unknown field");
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& require(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) throw DomainError(join(path, key) + ": missing field");
  return obj.at(key);
}

const json& require_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw DomainError(path + ": expected an array");
  return v;
}

Integer to_integer(const json& v, const std::string& path) {
  if (v.is_number_integer()) return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                                          : Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0) throw DomainError(path + ": not an integer: \"" + s + "\"");
    return out;
  }
  throw DomainError(path + ": expected an integer");
}

int to_small(const json& v, const std::string& path) {
  const Integer n = to_integer(v, path);
  if (!n.fits_sint_p()) throw DomainError(path + ": value out of range");
  return static_cast<int>(n.get_si());
}

Rational to_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(to_integer(v, path));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const DomainError& e) {
      throw DomainError(path + ": " + e.what());
    }
  }
  if (v.is_number_float()) throw DomainError(path + ": floating-point values are not exact; use a \"p/q\" string");
  throw DomainError(path + ": expected a rational string \"p/q\"");
}

std::string rational_text(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_den() == 1 ? c.get_num().get_str() : c.get_num().get_str() + "/" + c.get_den().get_str();
}

// json numbers keep small integers readable; big ones become strings
ordered_json integer_value(const Integer& n) {
  if (n.fits_slong_p()) return ordered_json(static_cast<std::int64_t>(n.get_si()));
  return ordered_json(n.get_str());
}

std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& what)
    : DomainError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

centre::GroupSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is one past the offending character
    const auto [line, column] = position(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw SyntaxError(line, column, what);
  }

  only_fields(doc, "", {"version", "torus", "simples", "kernel"});
  if (doc.contains("version") && to_integer(doc["version"], "version") != kSpecVersion)
    throw DomainError("version: unsupported version (expected 1)");

  centre::GroupSpec spec;
  if (doc.contains("torus") && !doc["torus"].is_null()) {
    const auto& t = doc["torus"];
    only_fields(t, "torus", {"rank", "J"});
    const auto& rows = require_array(require(t, "torus", "J"), "torus.J");
    IntMatrix J(rows.size(), rows.size(), Integer(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto path = index("torus.J", i);
      const auto& row = require_array(rows[i], path);
      if (row.size() != rows.size()) throw DomainError(path + ": J must be square");
      for (std::size_t j = 0; j < row.size(); ++j) J(i, j) = to_integer(row[j], index(path, j));
    }
    if (t.contains("rank")) {
      const int r = to_small(t["rank"], "torus.rank");
      if (r < 0 || static_cast<std::size_t>(r) != rows.size())
        throw DomainError("torus.rank: does not match the size of J");
    }
    spec.torus = torus::TorusLevel{std::move(J)};
  }

  if (doc.contains("simples")) {
    const auto& list = require_array(doc["simples"], "simples");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto path = index("simples", i);
      only_fields(list[i], path, {"series", "rank", "level"});
      centre::SimpleFactor f;
      const auto& series = require(list[i], path, "series");
      if (!series.is_string()) throw DomainError(path + ".series: expected a string");
      try {
        f.type.series = roots::SimpleType::parse_series(series.get<std::string>());
      } catch (const DomainError& e) {
        throw DomainError(path + ".series: " + e.what());
      }
      f.type.rank = to_small(require(list[i], path, "rank"), path + ".rank");
      f.level = to_integer(require(list[i], path, "level"), path + ".level");
      spec.simples.push_back(f);
    }
  }

  if (doc.contains("kernel")) {
    const auto& list = require_array(doc["kernel"], "kernel");
    for (std::size_t g = 0; g < list.size(); ++g) {
      const auto path = index("kernel", g);
      only_fields(list[g], path, {"torus", "simples"});
      centre::KernelGenerator k;
      if (list[g].contains("torus")) {
        const auto& t = require_array(list[g]["torus"], path + ".torus");
        for (std::size_t i = 0; i < t.size(); ++i) k.torus.push_back(to_rational(t[i], index(path + ".torus", i)));
      } else {
        k.torus.assign(spec.torus_rank(), Rational(0));
      }
      if (list[g].contains("simples")) {
        const auto& s = require_array(list[g]["simples"], path + ".simples");
        for (std::size_t i = 0; i < s.size(); ++i) {
          const auto p = index(path + ".simples", i);
          Element e;
          for (std::size_t j = 0; j < require_array(s[i], p).size(); ++j) e.push_back(to_integer(s[i][j], index(p, j)));
          k.simples.push_back(std::move(e));
        }
      } else {
        for (const auto& f : spec.simples) {
          try {
            k.simples.push_back(roots::centre_of(f.type).group.zero());
          } catch (const DomainError&) {
            k.simples.emplace_back();
          }
        }
      }
      spec.kernel.push_back(std::move(k));
    }
  }

  spec.validate();
  return spec;
}

std::string serialise_spec(const centre::GroupSpec& spec) {
  ordered_json doc;
  doc["version"] = kSpecVersion;
  if (spec.torus) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < spec.torus->J.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < spec.torus->J.cols(); ++j) row.push_back(integer_value(spec.torus->J(i, j)));
      rows.push_back(row);
    }
    doc["torus"] = {{"rank", spec.torus->rank()}, {"J", rows}};
  }
  doc["simples"] = ordered_json::array();
  for (const auto& f : spec.simples)
    doc["simples"].push_back({{"series", std::string(1, roots::series_letter(f.type.series))},
                              {"rank", f.type.rank},
                              {"level", integer_value(f.level)}});
  doc["kernel"] = ordered_json::array();
  for (const auto& k : spec.kernel) {
    ordered_json gen;
    gen["torus"] = ordered_json::array();
    for (const auto& r : k.torus) gen["torus"].push_back(rational_text(r));
    gen["simples"] = ordered_json::array();
    for (const auto& e : k.simples) {
      ordered_json t = ordered_json::array();
      for (const auto& c : e) t.push_back(integer_value(c));
      gen["simples"].push_back(t);
    }
    doc["kernel"].push_back(gen);
  }
  return doc.dump(2);
}

}  // namespace drinfeld::io
