#include "drz/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace drz {

namespace {

// Next content line with comments stripped; skips blank lines.
bool next_line(std::istream& in, std::string& out) {
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string word;
    if (probe >> word) {
      out = line;
      return true;
    }
  }
  return false;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

Domain parse_header(const std::vector<std::string>& toks) {
  try {
    if (toks.size() == 1 && toks[0] == "Q") return Domain::rationals();
    if (toks.size() == 1 && toks[0] == "Z") return Domain::integers();
    if (toks.size() == 2 && toks[0] == "GF")
      return Domain::prime_field(std::stoull(toks[1]));
    if (toks.size() == 2 && toks[0] == "Zn")
      return Domain::modular(std::stoull(toks[1]));
  } catch (const InvalidDomain&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad domain header");
  }
  std::string got;
  for (const auto& t : toks) got += (got.empty() ? "" : " ") + t;
  throw ParseError("bad domain header '" + got + "'");
}

template <Scalar S>
Matrix<S> read_body(std::istream& in, const Domain& dom) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("missing dimension line");
  auto dims = tokens_of(line);
  long rows = 0, cols = 0;
  try {
    if (dims.size() != 2) throw ParseError("");
    rows = std::stol(dims[0]);
    cols = std::stol(dims[1]);
  } catch (const std::exception&) {
    throw ParseError("bad dimension line '" + line + "'");
  }
  if (rows < 1 || cols < 1)
    throw ParseError("matrix dimensions must be positive");
  std::vector<S> entries;
  entries.reserve(static_cast<std::size_t>(rows) * cols);
  for (long i = 0; i < rows; ++i) {
    if (!next_line(in, line))
      throw ParseError("expected " + std::to_string(rows) +
                       " rows of entries, got " + std::to_string(i));
    auto toks = tokens_of(line);
    if (static_cast<long>(toks.size()) != cols)
      throw ParseError("row " + std::to_string(i + 1) + " has " +
                       std::to_string(toks.size()) + " entries, expected " +
                       std::to_string(cols));
    for (const auto& t : toks) entries.push_back(S::parse(t, dom));
  }
  return Matrix<S>::from_entries(static_cast<int>(rows), static_cast<int>(cols),
                                 dom, std::move(entries));
}

}  // namespace

AnyMatrix load_matrix(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("empty matrix file");
  Domain dom = parse_header(tokens_of(line));
  switch (dom.kind()) {
    case DomainKind::Rationals: return read_body<Rational>(in, dom);
    case DomainKind::PrimeField: return read_body<Fp>(in, dom);
    case DomainKind::Modular: return read_body<Zn>(in, dom);
    case DomainKind::Integers: return read_body<Int>(in, dom);
  }
  throw ParseError("unreachable domain kind");
}

AnyMatrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_matrix(in);
}

template <Scalar S>
void print_matrix(std::ostream& out, const Matrix<S>& m) {
  out << m.domain().file_tag() << '\n';
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j).str();
    }
    out << '\n';
  }
}

template void print_matrix<Rational>(std::ostream&, const Matrix<Rational>&);
template void print_matrix<Fp>(std::ostream&, const Matrix<Fp>&);
template void print_matrix<Zn>(std::ostream&, const Matrix<Zn>&);
template void print_matrix<Int>(std::ostream&, const Matrix<Int>&);

Domain any_domain(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return x.domain(); }, m);
}
int any_rows(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return x.rows(); }, m);
}
int any_cols(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return x.cols(); }, m);
}
void print_any(std::ostream& out, const AnyMatrix& m) {
  std::visit([&out](const auto& x) { print_matrix(out, x); }, m);
}

}  // namespace drz
