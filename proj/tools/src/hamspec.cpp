#include "sympent_cli/hamspec.hpp"

#include <cctype>
#include <cmath>

namespace sympent {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// "1", "-0.5", "2i", "1+2i", "1-2i", "i", "-i"
cplx parse_complex(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw std::invalid_argument("hamiltonian: empty matrix entry");
  size_t pos = 0;
  auto read_part = [&]() -> std::pair<double, bool> {
    double sign = 1.0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -1.0;
      ++pos;
    }
    double mag = 1.0;
    bool had_digits = false;
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
      size_t used = 0;
      mag = std::stod(s.substr(pos), &used);
      pos += used;
      had_digits = true;
    }
    bool imag = false;
    if (pos < s.size() && s[pos] == 'i') {
      imag = true;
      ++pos;
    }
    if (!had_digits && !imag)
      throw std::invalid_argument("hamiltonian: bad matrix entry '" + s + "'");
    return {sign * mag, imag};
  };
  cplx out = 0;
  while (pos < s.size()) {
    auto [value, imag] = read_part();
    out += imag ? cplx(0, value) : cplx(value);
  }
  return out;
}

CMatrix parse_matrix_literal(const std::string& text) {
  // [[e,e,...],[...],...]
  std::vector<std::vector<cplx>> rows;
  size_t pos = 0;
  auto expect = [&](char c) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument(std::string("hamiltonian: expected '") + c + "' in matrix literal");
    ++pos;
  };
  expect('[');
  while (true) {
    expect('[');
    std::vector<cplx> row;
    size_t start = pos;
    int depth = 0;
    while (pos < text.size() && (text[pos] != ']' || depth > 0)) {
      if (text[pos] == '[') ++depth;
      if (text[pos] == ']') --depth;
      if (text[pos] == ',' && depth == 0) {
        row.push_back(parse_complex(text.substr(start, pos - start)));
        start = pos + 1;
      }
      ++pos;
    }
    if (pos >= text.size()) throw std::invalid_argument("hamiltonian: unterminated matrix row");
    row.push_back(parse_complex(text.substr(start, pos - start)));
    ++pos;  // ']'
    rows.push_back(std::move(row));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  const int n = static_cast<int>(rows.size());
  CMatrix m(n, static_cast<int>(rows[0].size()));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw std::invalid_argument("hamiltonian: ragged matrix literal");
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

CMatrix pauli(char name) {
  CMatrix m(2, 2);
  switch (name) {
    case 'I': m(0, 0) = 1; m(1, 1) = 1; break;
    case 'X': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'Y': m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
    case 'Z': m(0, 0) = 1; m(1, 1) = -1; break;
    default: throw std::invalid_argument(std::string("hamiltonian: unknown Pauli '") + name + "'");
  }
  return m;
}

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') ++depth;
    if (text[i] == ']') --depth;
    if (text[i] == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

}  // namespace

LocalHamiltonian parse_local_hamiltonian(const std::string& text, const std::vector<int>& dims) {
  const auto parts = split_top_level(text);
  if (parts.size() != dims.size())
    throw std::invalid_argument("hamiltonian: got " + std::to_string(parts.size()) +
                                " factors for " + std::to_string(dims.size()) + " subsystems");
  LocalHamiltonian h;
  for (size_t k = 0; k < parts.size(); ++k) {
    const std::string p = trim(parts[k]);
    CMatrix m;
    if (p.size() == 1 && std::isalpha(static_cast<unsigned char>(p[0]))) {
      if (dims[k] != 2)
        throw std::invalid_argument("hamiltonian: Pauli names need a qubit factor");
      m = pauli(p[0]);
    } else if (!p.empty() && p[0] == '[') {
      m = parse_matrix_literal(p);
    } else {
      throw std::invalid_argument("hamiltonian: factor '" + p + "' is neither a Pauli nor a matrix");
    }
    if (m.rows() != dims[k] || m.cols() != dims[k])
      throw std::invalid_argument("hamiltonian: factor " + std::to_string(k + 1) +
                                  " has the wrong shape");
    if (!m.is_hermitian(1e-10))
      throw std::invalid_argument("hamiltonian: factor " + std::to_string(k + 1) +
                                  " is not Hermitian");
    const cplx shift = m.trace() / static_cast<double>(dims[k]);
    for (int i = 0; i < m.rows(); ++i) m(i, i) -= shift;
    h.factors.push_back(std::move(m));
  }
  validate_local_hamiltonian(h);
  return h;
}

}  // namespace sympent
