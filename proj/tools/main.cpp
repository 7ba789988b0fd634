#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "drinfeld/report.hpp"
#include "drinfeld/spec_document.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMalformed = 1;
constexpr int kNoDescent = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw drinfeld::DomainError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace drinfeld;
  CLI::App app{"Drinfel'd centres of String 2-groups"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string input = "-";
  std::string bound = "1000000";
  int max_level = 6;
  long n = 2;
  long k = 0;

  auto* compute = app.add_subcommand("compute", "compute the centre of a group spec document");
  compute->add_option("spec", input, "spec document path, or - for stdin");
  compute->add_option("--denominator-bound", bound, "largest torus denominator accepted");

  auto* t1 = app.add_subcommand("table1", "recompute the generator values of the centre table");
  t1->add_option("--max-level", max_level, "largest level")->check(CLI::PositiveNumber);

  auto* orc = app.add_subcommand("oracle", "brute-force centre of Vec[Z/n] with the k-th standard cocycle");
  orc->add_option("-n,--n", n, "group order")->check(CLI::Range(1, 64));
  orc->add_option("-k,--k", k, "cocycle class");

  auto* ex = app.add_subcommand("examples", "run the SU(2), SO(3), SO(4) and U(2) battery");

  for (auto* sub : {compute, t1, orc, ex})
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    const auto f = io::parse_format(format);
    if (compute->parsed()) {
      Integer b;
      if (b.set_str(bound, 10) != 0 || b < 1) throw DomainError("--denominator-bound: expected a positive integer");
      const auto spec = io::parse_spec(read_input(input));
      const auto report = io::run(spec, b);
      std::cout << io::render(report, f);
      return report.descends ? kOk : kNoDescent;
    }
    if (t1->parsed()) {
      std::cout << io::render_table1(table1::table(max_level), f);
      return kOk;
    }
    if (orc->parsed()) {
      std::cout << io::render(io::oracle_report(Integer(n), Integer(k)), f);
      return kOk;
    }
    if (ex->parsed()) {
      const auto outcomes = io::examples_battery();
      std::cout << io::render(outcomes, f);
      for (const auto& o : outcomes)
        if (!o.ok()) return kMalformed;
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kOk;
}
