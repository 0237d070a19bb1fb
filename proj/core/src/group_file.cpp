#include "torusq/group_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "torusq/error.hpp"

namespace torusq {

namespace {

struct Field {
  std::string_view text;
  int column;  // 1-based column of text[0] in the line
};

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Field trim(Field f) {
  std::size_t b = 0;
  std::size_t e = f.text.size();
  while (b < e && is_blank(f.text[b])) ++b;
  while (e > b && is_blank(f.text[e - 1])) --e;
  return {f.text.substr(b, e - b), f.column + static_cast<int>(b)};
}

std::vector<Field> split(Field f, bool commas_only) {
  std::vector<Field> out;
  std::size_t start = 0;
  auto is_sep = [&](char c) { return c == ',' || (!commas_only && is_blank(c)); };
  for (std::size_t i = 0; i <= f.text.size(); ++i) {
    if (i == f.text.size() || is_sep(f.text[i])) {
      Field piece = trim({f.text.substr(start, i - start), f.column + static_cast<int>(start)});
      if (!piece.text.empty() || commas_only) out.push_back(piece);
      start = i + 1;
    }
  }
  if (commas_only && out.size() == 1 && out[0].text.empty()) out.clear();
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const std::size_t hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);
      lines_.push_back(line);
      start = end + 1;
    }
  }

  // Next non-blank line as (keyword, rest); false at end of input.
  bool next(Field& keyword, Field& rest) {
    while (index_ < lines_.size()) {
      const Field line = trim({lines_[index_++], 1});
      if (line.text.empty()) continue;
      std::size_t k = 0;
      while (k < line.text.size() && !is_blank(line.text[k])) ++k;
      keyword = {line.text.substr(0, k), line.column};
      rest = trim({line.text.substr(k), line.column + static_cast<int>(k)});
      return true;
    }
    return false;
  }

  int line() const { return static_cast<int>(index_); }
  [[noreturn]] void fail(const std::string& what, int column) const { throw ParseError(what, line(), column); }

 private:
  std::vector<std::string_view> lines_;
  std::size_t index_ = 0;
};

long parse_integer(const Reader& in, Field f, const char* what) {
  long value = 0;
  const auto* first = f.text.data();
  const auto* last = first + f.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (f.text.empty() || ec != std::errc() || ptr != last) in.fail(std::string("expected ") + what, f.column);
  return value;
}

Cyclotomic parse_entry(const Reader& in, Field f, int conductor) {
  try {
    return Cyclotomic::parse(f.text, conductor);
  } catch (const ParseError& e) {
    const std::string what = e.what();
    const auto colon = what.find(": ", what.find("column"));
    in.fail(colon == std::string::npos ? what : what.substr(colon + 2), f.column + e.column() - 1);
  }
}

std::vector<Cyclotomic> parse_entries(const Reader& in, Field f, int conductor, std::size_t degree) {
  const auto fields = split(f, true);
  if (fields.size() != degree) {
    in.fail("expected " + std::to_string(degree) + " comma-separated entries, found " + std::to_string(fields.size()),
            f.column);
  }
  std::vector<Cyclotomic> out;
  for (const auto& field : fields) {
    if (field.text.empty()) in.fail("empty entry", field.column);
    out.push_back(parse_entry(in, field, conductor));
  }
  return out;
}

std::vector<std::uint32_t> parse_perm(const Reader& in, Field f, std::size_t degree) {
  std::vector<Field> fields;
  for (const auto& piece : split(f, false)) {
    if (!piece.text.empty()) fields.push_back(piece);
  }
  if (fields.size() != degree) {
    in.fail("expected " + std::to_string(degree) + " image indices, found " + std::to_string(fields.size()), f.column);
  }
  std::vector<std::uint32_t> perm;
  std::vector<bool> seen(degree, false);
  for (const auto& field : fields) {
    const long v = parse_integer(in, field, "a 1-based index");
    if (v < 1 || static_cast<std::size_t>(v) > degree) in.fail("index out of range", field.column);
    if (seen[v - 1]) in.fail("repeated index in permutation", field.column);
    seen[v - 1] = true;
    perm.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return perm;
}

Matrix parse_rows(Reader& in, int conductor, std::size_t degree, const char* block) {
  std::vector<std::vector<Cyclotomic>> rows;
  Field keyword, rest;
  while (true) {
    if (!in.next(keyword, rest)) in.fail(std::string("unterminated ") + block + " block", 1);
    if (keyword.text == "end") break;
    if (keyword.text != "row") in.fail("expected 'row' or 'end'", keyword.column);
    rows.push_back(parse_entries(in, rest, conductor, degree));
  }
  if (rows.size() != degree) {
    in.fail(std::string(block) + " block needs " + std::to_string(degree) + " rows, found " +
                std::to_string(rows.size()),
            1);
  }
  return Matrix::from_rows(rows);
}

std::vector<std::pair<std::size_t, std::size_t>> parse_wedge_pairs(std::string_view spec, std::size_t degree,
                                                                   const Reader* in, int column) {
  auto fail = [&](const std::string& what, int col) {
    if (in) in->fail(what, col);
    throw ParseError(what, 1, col);
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& piece : split({spec, column}, true)) {
    const auto dash = piece.text.find('-');
    if (dash == std::string_view::npos) fail("expected 'a-b' index pair", piece.column);
    auto parse_index = [&](Field f) {
      long v = 0;
      auto [ptr, ec] = std::from_chars(f.text.data(), f.text.data() + f.text.size(), v);
      if (f.text.empty() || ec != std::errc() || ptr != f.text.data() + f.text.size()) {
        fail("expected a 1-based index", f.column);
      }
      if (v < 1 || static_cast<std::size_t>(v) > degree) fail("wedge index out of range", f.column);
      return static_cast<std::size_t>(v - 1);
    };
    const Field a = trim({piece.text.substr(0, dash), piece.column});
    const Field b = trim({piece.text.substr(dash + 1), piece.column + static_cast<int>(dash) + 1});
    const std::size_t ia = parse_index(a);
    const std::size_t ib = parse_index(b);
    if (ia == ib) fail("wedge of an index with itself", piece.column);
    pairs.emplace_back(ia, ib);
  }
  if (pairs.empty()) fail("empty wedge list", column);
  return pairs;
}

Matrix wedge_matrix(const std::vector<std::pair<std::size_t, std::size_t>>& pairs, std::size_t degree) {
  Matrix m(degree, degree);
  for (const auto& [a, b] : pairs) {
    m(a, b) += 1;
    m(b, a) -= 1;
  }
  return m;
}

}  // namespace

Matrix parse_wedge_form(std::string_view spec, std::size_t degree) {
  std::size_t skip = 0;
  if (spec.starts_with("wedge:")) {
    skip = 6;
  } else if (spec.starts_with("wedge ")) {
    skip = 6;
  } else {
    throw ParseError("inline form must start with 'wedge:'", 1, 1);
  }
  return wedge_matrix(parse_wedge_pairs(spec.substr(skip), degree, nullptr, static_cast<int>(skip) + 1), degree);
}

GroupFile parse_group_file(std::string_view text) {
  GroupFile file;
  Reader in(text);
  bool have_conductor = false;
  bool have_degree = false;
  Field keyword, rest;
  auto require_header = [&](int column) {
    if (!have_conductor || !have_degree) in.fail("'conductor' and 'degree' must precede generators", column);
  };
  while (in.next(keyword, rest)) {
    const std::string_view kw = keyword.text;
    if (kw == "conductor") {
      const long n = parse_integer(in, rest, "a positive conductor");
      if (n < 1) in.fail("conductor must be positive", rest.column);
      file.conductor = static_cast<int>(n);
      have_conductor = true;
    } else if (kw == "degree") {
      const long d = parse_integer(in, rest, "a positive degree");
      if (d < 1) in.fail("degree must be positive", rest.column);
      file.degree = static_cast<std::size_t>(d);
      have_degree = true;
    } else if (kw == "limit") {
      const long l = parse_integer(in, rest, "a positive closure limit");
      if (l < 1) in.fail("limit must be positive", rest.column);
      file.limit = static_cast<std::size_t>(l);
    } else if (kw == "generator") {
      require_header(keyword.column);
      const std::string_view kind = rest.text;
      const int start_line = in.line();
      if (kind == "dense") {
        file.generators.push_back(GroupElement::dense(parse_rows(in, file.conductor, file.degree, "generator")));
        continue;
      }
      if (kind != "monomial" && kind != "perm") in.fail("generator kind must be monomial, dense or perm", rest.column);
      std::optional<std::vector<std::uint32_t>> perm;
      std::optional<std::vector<Cyclotomic>> scalars;
      while (true) {
        if (!in.next(keyword, rest)) in.fail("unterminated generator block starting on line " + std::to_string(start_line), 1);
        if (keyword.text == "end") break;
        if (keyword.text == "perm") {
          perm = parse_perm(in, rest, file.degree);
        } else if (keyword.text == "scalars" && kind == "monomial") {
          scalars = parse_entries(in, rest, file.conductor, file.degree);
        } else {
          in.fail("unexpected '" + std::string(keyword.text) + "' in " + std::string(kind) + " generator",
                  keyword.column);
        }
      }
      if (!perm) in.fail("generator block without a 'perm' line", 1);
      if (kind == "monomial") {
        if (!scalars) in.fail("monomial generator without a 'scalars' line", 1);
        for (const auto& s : *scalars) {
          if (s.is_zero()) in.fail("monomial scalar is zero", 1);
        }
        file.generators.push_back(GroupElement::monomial(std::move(*perm), std::move(*scalars)));
      } else {
        file.generators.push_back(GroupElement::permutation(std::move(*perm)));
      }
    } else if (kw == "form") {
      require_header(keyword.column);
      // Optional leading size, for forms on rho + conj(rho) rather than on rho itself.
      std::size_t size = file.degree;
      Field spec = rest;
      if (!spec.text.empty() && std::isdigit(static_cast<unsigned char>(spec.text[0]))) {
        std::size_t k = 0;
        while (k < spec.text.size() && !is_blank(spec.text[k])) ++k;
        const long v = parse_integer(in, {spec.text.substr(0, k), spec.column}, "a positive form size");
        if (v < 1) in.fail("form size must be positive", spec.column);
        size = static_cast<std::size_t>(v);
        spec = trim({spec.text.substr(k), spec.column + static_cast<int>(k)});
      }
      if (spec.text.empty()) {
        file.form = parse_rows(in, file.conductor, size, "form");
      } else if (spec.text.starts_with("wedge")) {
        const Field list = trim({spec.text.substr(5), spec.column + 5});
        file.form = wedge_matrix(parse_wedge_pairs(list.text, size, &in, list.column), size);
      } else {
        in.fail("expected 'form [size]' or 'form [size] wedge a-b, ...'", spec.column);
      }
    } else if (kw == "lattice") {
      require_header(keyword.column);
      if (rest.text.empty()) in.fail("expected lattice generator", rest.column);
      file.lattice = parse_entry(in, rest, file.conductor);
    } else {
      in.fail("unknown keyword '" + std::string(kw) + "'", keyword.column);
    }
  }
  if (!have_conductor || !have_degree) throw ParseError("missing 'conductor' or 'degree'", 1, 1);
  if (file.generators.empty()) throw ParseError("no generators", 1, 1);
  return file;
}

GroupFile load_group_file(const std::filesystem::path& path) {
  std::ifstream stream(path);
  if (!stream) throw Error(ErrorKind::InvalidInput, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_group_file(buffer.str());
}

std::string serialize_group_file(const GroupFile& file) {
  std::ostringstream out;
  const int n = file.conductor;
  auto entries = [&](auto begin, auto end) {
    std::string s;
    for (auto it = begin; it != end; ++it) {
      if (it != begin) s += ", ";
      s += it->to_string(n);
    }
    return s;
  };
  out << "conductor " << n << "\n";
  out << "degree " << file.degree << "\n";
  if (file.limit) out << "limit " << *file.limit << "\n";
  for (const auto& g : file.generators) {
    if (g.is_monomial()) {
      const auto& m = g.as_monomial();
      const bool pure = std::all_of(m.scalars.begin(), m.scalars.end(), [](const Cyclotomic& s) { return s == Cyclotomic(1); });
      out << "generator " << (pure ? "perm" : "monomial") << "\nperm";
      for (auto p : m.perm) out << ' ' << p + 1;
      out << "\n";
      if (!pure) out << "scalars " << entries(m.scalars.begin(), m.scalars.end()) << "\n";
    } else {
      const Matrix& d = g.as_dense();
      out << "generator dense\n";
      for (std::size_t r = 0; r < d.rows(); ++r) {
        std::vector<Cyclotomic> row;
        for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(d(r, c));
        out << "row " << entries(row.begin(), row.end()) << "\n";
      }
    }
    out << "end\n";
  }
  if (file.form) {
    out << "form";
    if (file.form->rows() != file.degree) out << ' ' << file.form->rows();
    out << "\n";
    for (std::size_t r = 0; r < file.form->rows(); ++r) {
      std::vector<Cyclotomic> row;
      for (std::size_t c = 0; c < file.form->cols(); ++c) row.push_back((*file.form)(r, c));
      out << "row " << entries(row.begin(), row.end()) << "\n";
    }
    out << "end\n";
  }
  if (file.lattice) out << "lattice " << file.lattice->to_string(n) << "\n";
  return out.str();
}

}  // namespace torusq
