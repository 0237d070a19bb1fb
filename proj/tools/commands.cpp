#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "torusq/error.hpp"
#include "torusq/fixtures.hpp"
#include "torusq/report.hpp"

namespace torusq::cli {

namespace {

GroupFile load_source(const std::string& path, const std::string& fixture) {
  if (!fixture.empty()) {
    const Fixture* f = find_fixture(fixture);
    if (!f) throw Error(ErrorKind::InvalidInput, "unknown fixture '" + fixture + "'");
    return parse_group_file(f->text);
  }
  return load_group_file(path);
}

Matrix read_form(const std::string& spec, const GroupFile& file, std::size_t degree) {
  if (spec.starts_with("wedge")) return parse_wedge_form(spec, degree);
  std::ifstream stream(spec);
  if (!stream) throw Error(ErrorKind::InvalidInput, "cannot read form file " + spec);
  std::vector<std::vector<Cyclotomic>> rows;
  std::string line;
  while (std::getline(stream, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto first = line.find_first_not_of(" \t");
    if (line.compare(first, 5, "wedge") == 0) return parse_wedge_form(line.substr(first), degree);
    std::vector<Cyclotomic> row;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) row.push_back(Cyclotomic::parse(field, file.conductor));
    rows.push_back(std::move(row));
  }
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(ErrorKind::InvalidForm, "form file is not a square matrix");
  }
  if (rows.empty()) throw Error(ErrorKind::InvalidForm, "empty form file");
  return Matrix::from_rows(rows);
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::GroupTooLarge:
    case ErrorKind::TableFailure:
      return kResourceLimit;
    default:
      return kInputError;
  }
}

std::string fs_type(int indicator) {
  switch (indicator) {
    case 1: return "real";
    case -1: return "quaternionic";
    default: return "complex";
  }
}

// Pipeline state shared by check_example.
struct Pipeline {
  GroupFile file;
  std::shared_ptr<const FiniteGroup> group;
  std::optional<CharacterTable> table;
};

Pipeline build(std::string_view fixture) {
  const Fixture* f = find_fixture(fixture);
  if (!f) throw Error(ErrorKind::InvalidInput, "unknown example '" + std::string(fixture) + "'");
  Pipeline p{parse_group_file(f->text), nullptr, std::nullopt};
  p.group = close_group(p.file);
  p.table = dixon_schneider(p.group);
  return p;
}

class Checker {
 public:
  template <typename T>
  void equal(std::string name, const T& expected, const T& actual) {
    std::ostringstream detail;
    detail << "expected " << expected << ", got " << actual;
    checks_.push_back({std::move(name), expected == actual, detail.str()});
  }
  void holds(std::string name, bool value) { checks_.push_back({std::move(name), value, value ? "yes" : "no"}); }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<Check> check_s4(bool twisted) {
  Checker c;
  Pipeline p = build(twisted ? "s4" : "s4-standard");
  const auto& table = *p.table;
  c.equal<std::size_t>("closure order", 24, p.group->order());
  c.equal<std::size_t>("class count", 5, p.group->class_count());
  std::vector<long> degrees;
  for (const auto& chi : table.irreducibles()) degrees.push_back(chi.integer_degree());
  c.equal<std::string>("table degrees", "1,1,2,3,3", join(degrees));
  const auto rho = AnalyticRep::natural(p.group);
  const auto eig = eigenvalue_one_all(rho);
  if (!twisted) {
    c.holds("eigenvalue 1 fails", !eig.all);
    const bool witness = std::any_of(eig.failing_orders.begin(), eig.failing_orders.end(),
                                     [](std::size_t o) { return o == 4; });
    c.holds("4-cycle class is a witness", witness);
    return c.take();
  }
  c.equal<std::string>("rho irreducible", "1", inner_product(rho.character(), rho.character()).to_string());
  c.equal("indicator of rho", 1, frobenius_schur(rho.character()));
  c.holds("eigenvalue 1 on all classes", eig.all);
  c.holds("primitive", is_primitive(*p.group));
  const auto l = AnalyticRep::conjugate_sum(rho);
  const auto report = analyze(l, table, SymplecticForm(*p.file.form), LatticeSpec(*p.file.lattice));
  c.equal<std::size_t>("h10 of rho + conj(rho)", 0, report.h10);
  c.equal<std::size_t>("h20 of rho + conj(rho)", 1, report.h20);
  c.holds("form dz1^dz4 + dz2^dz5 + dz3^dz6 preserved", report.supplied_form && report.supplied_form->preserved);
  c.holds("lattice Z^6 preserved", report.lattice_preserved.value_or(false));
  return c.take();
}

std::vector<Check> check_g216() {
  Checker c;
  Pipeline p = build("g216");
  const auto& table = *p.table;
  c.equal<std::size_t>("closure order", 216, p.group->order());
  const auto rho = AnalyticRep::natural(p.group);
  c.equal<std::string>("rho irreducible", "1", inner_product(rho.character(), rho.character()).to_string());
  c.equal("indicator of rho", 0, frobenius_schur(rho.character()));
  c.holds("primitive", is_primitive(*p.group));
  const auto l = AnalyticRep::conjugate_sum(rho);
  const SymplecticForm omega(*p.file.form);
  const auto report = analyze(l, table, omega, LatticeSpec(*p.file.lattice));
  c.equal<std::size_t>("h10 of rho + conj(rho)", 0, report.h10);
  c.equal<std::size_t>("h20 of rho + conj(rho)", 1, report.h20);
  c.holds("form dz1^dz9 + ... + dz8^dz16 preserved", report.supplied_form && report.supplied_form->preserved);
  c.holds("lattice (Z + z3 Z)^16 preserved", report.lattice_preserved.value_or(false));
  const auto fib = lagrangian_fibration_data(l, omega, table);
  c.holds("fibration found", fib.has_value());
  if (fib) {
    c.equal<std::size_t>("dim V1", 8, fib->v1.rows());
    c.equal<std::size_t>("dim V2", 8, fib->v2.rows());
    bool isotropic = true;
    for (const Matrix* v : {&fib->v1, &fib->v2}) {
      if (!(*v * omega.matrix() * v->transpose()).is_zero()) isotropic = false;
    }
    c.holds("form vanishes on V1 and V2", isotropic);
  }
  return c.take();
}

std::vector<Check> check_g1280() {
  Checker c;
  Pipeline p = build("g1280");
  const auto& table = *p.table;
  c.equal<std::size_t>("closure order", 1280, p.group->order());
  const auto rho = AnalyticRep::natural(p.group);
  c.equal<std::string>("rho irreducible", "1", inner_product(rho.character(), rho.character()).to_string());
  c.equal("indicator of rho", -1, frobenius_schur(rho.character()));
  c.holds("primitive", is_primitive(*p.group));
  const SymplecticForm omega(*p.file.form);
  const auto report = analyze(rho, table, omega, LatticeSpec(*p.file.lattice));
  c.holds("eigenvalue 1 on all classes", report.eigenvalue_one.all);
  c.equal<std::size_t>("h10", 0, report.h10);
  c.equal<std::size_t>("h20", 1, report.h20);
  c.holds("form dz1^dz2 + ... + dz19^dz20 preserved", report.supplied_form && report.supplied_form->preserved);
  c.holds("lattice (Z + iZ)^20 preserved", report.lattice_preserved.value_or(false));
  c.holds("no fibration for irreducible rho", !lagrangian_fibration_data(rho, omega, table).has_value());
  return c.take();
}

void print_search(const std::vector<SearchEntry>& entries, std::ostream& out) {
  for (const auto& e : entries) {
    out << e.file << ": order " << e.order << ", " << (e.primitive ? "primitive" : "not primitive") << "\n";
    for (const auto& r : e.rows) {
      out << "  X." << r.irreducible + 1 << "  degree " << r.degree << "  " << fs_type(r.indicator)
          << (r.faithful ? "  faithful" : "  not-faithful") << (r.eigenvalue_one_all ? "  eig-all" : "  eig-fails")
          << (r.candidate ? "  CANDIDATE" : "") << "\n";
    }
  }
}

}  // namespace

std::shared_ptr<const FiniteGroup> close_group(const GroupFile& file, std::optional<std::size_t> limit) {
  return FiniteGroup::close(file.generators, limit.value_or(file.limit.value_or(FiniteGroup::kDefaultLimit)));
}

AnalyticRep choose_rep(std::shared_ptr<const FiniteGroup> group, const CharacterTable& table, RepChoice choice) {
  auto rho = AnalyticRep::natural(std::move(group));
  switch (choice) {
    case RepChoice::Natural:
      return rho;
    case RepChoice::ConjugateSum:
      return AnalyticRep::conjugate_sum(rho);
    case RepChoice::Auto:
      break;
  }
  const auto row = table.index_of(rho.character());
  if (!row) return rho;
  return frobenius_schur(table[*row]) == -1 ? rho : AnalyticRep::conjugate_sum(rho);
}

std::vector<Check> check_example(std::string_view name) {
  if (name == "s4") return check_s4(true);
  if (name == "s4-standard") return check_s4(false);
  if (name == "g216") return check_g216();
  if (name == "g1280") return check_g1280();
  throw Error(ErrorKind::InvalidInput, "unknown example '" + std::string(name) + "'");
}

std::vector<SearchEntry> search_catalog(const std::filesystem::path& dir, std::size_t max_order,
                                        std::ostream& warnings) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorKind::InvalidInput, "not a directory: " + dir.string());
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".grp") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<SearchEntry> out;
  for (const auto& path : paths) {
    try {
      const GroupFile file = load_group_file(path);
      const auto group = close_group(file, max_order);
      const auto table = dixon_schneider(group);
      SearchEntry entry{path.filename().string(), group->order(), is_primitive(*group), {}};
      for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& chi = table[i];
        const auto mult = eigenvalue_one_multiplicities(chi);
        SearchRow row{i, chi.integer_degree(), frobenius_schur(chi), is_faithful(chi),
                      std::all_of(mult.begin(), mult.end(), [](long m) { return m > 0; }), false};
        row.candidate = entry.primitive && row.faithful && !chi.is_trivial() && row.eigenvalue_one_all;
        entry.rows.push_back(row);
      }
      out.push_back(std::move(entry));
    } catch (const Error& e) {
      warnings << "warning: skipping " << path.filename().string() << ": " << e.what() << "\n";
    }
  }
  return out;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of finite quotients of complex tori"};
  app.require_subcommand(1);

  std::string group_path, fixture, rep_name = "auto", form_spec, lattice_spec, format = "text";
  std::optional<std::size_t> limit;
  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full analysis on a group file");
  auto* src = analyze_cmd->add_option_group("source");
  src->add_option("--group", group_path, "Group file")->check(CLI::ExistingFile);
  src->add_option("--fixture", fixture, "Built-in fixture name");
  src->require_option(1);
  analyze_cmd->add_option("--rep", rep_name, "natural, conjugate-sum or auto")
      ->check(CLI::IsMember({"natural", "conjugate-sum", "auto"}));
  analyze_cmd->add_option("--form", form_spec, "Form file, or inline wedge:a-b,c-d");
  analyze_cmd->add_option("--lattice", lattice_spec, "Lattice generator omega, e.g. z or 1");
  analyze_cmd->add_option("--report", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--limit", limit, "Closure limit");

  std::string table_group, table_fixture, table_format = "text";
  auto* table_cmd = app.add_subcommand("chartable", "Print the character table");
  auto* table_src = table_cmd->add_option_group("source");
  table_src->add_option("--group", table_group, "Group file")->check(CLI::ExistingFile);
  table_src->add_option("--fixture", table_fixture, "Built-in fixture name");
  table_src->require_option(1);
  table_cmd->add_option("--format", table_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  table_cmd->add_option("--limit", limit, "Closure limit");

  std::string example;
  auto* check_cmd = app.add_subcommand("check-example", "Verify a built-in example end to end");
  check_cmd->add_option("name", example, "s4, s4-standard, g216 or g1280")->required();

  std::string catalog;
  std::size_t max_order = FiniteGroup::kDefaultLimit;
  auto* search_cmd = app.add_subcommand("search", "Scan a directory of group files for candidates");
  search_cmd->add_option("--catalog", catalog, "Directory of .grp files")->required();
  search_cmd->add_option("--max-order", max_order, "Skip groups larger than this");

  app.add_subcommand("fixtures", "List built-in fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze_cmd) {
      const GroupFile file = load_source(group_path, fixture);
      const auto group = close_group(file, limit);
      const auto table = dixon_schneider(group);
      const RepChoice choice = rep_name == "natural"         ? RepChoice::Natural
                               : rep_name == "conjugate-sum" ? RepChoice::ConjugateSum
                                                             : RepChoice::Auto;
      const auto rep = choose_rep(group, table, choice);
      std::optional<SymplecticForm> form;
      if (!form_spec.empty()) {
        form = SymplecticForm(read_form(form_spec, file, rep.degree()));
        if (form->degree() != rep.degree()) throw Error(ErrorKind::InvalidForm, "form size differs from the degree");
      } else if (file.form) {
        if (file.form->rows() == rep.degree()) {
          form = SymplecticForm(*file.form);
        } else {
          err << "warning: ignoring the file's form of size " << file.form->rows() << " for a degree-"
              << rep.degree() << " representation\n";
        }
      }
      std::optional<LatticeSpec> lattice;
      if (!lattice_spec.empty()) {
        lattice = LatticeSpec(Cyclotomic::parse(lattice_spec, file.conductor));
      } else if (file.lattice) {
        lattice = LatticeSpec(*file.lattice);
      }
      const auto report = analyze(rep, table, form, lattice);
      out << (format == "json" ? report_json(report) + "\n" : report_text(report));
      return kOk;
    }
    if (*table_cmd) {
      const GroupFile file = load_source(table_group, table_fixture);
      const auto table = dixon_schneider(close_group(file, limit));
      out << (table_format == "json" ? table_json(table) + "\n" : table_text(table));
      return kOk;
    }
    if (*check_cmd) {
      const auto checks = check_example(example);
      bool all = true;
      for (const auto& c : checks) {
        out << (c.pass ? "ok    " : "FAIL  ") << c.name << " (" << c.detail << ")\n";
        all = all && c.pass;
      }
      out << example << ": " << (all ? "pass" : "mismatch") << "\n";
      return all ? kOk : kCheckMismatch;
    }
    if (*search_cmd) {
      const auto entries = search_catalog(catalog, max_order, err);
      if (entries.empty()) {
        err << "error: no group files processed in " << catalog << "\n";
        return kInputError;
      }
      print_search(entries, out);
      return kOk;
    }
    for (const auto& f : fixtures()) out << f.name << "  " << f.description << "\n";
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  }
}

}  // namespace torusq::cli
