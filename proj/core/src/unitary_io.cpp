// Copyright 2026 The fourport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "fourport/errors.hpp"
#include "fourport/multiport.hpp"

namespace fourport {

namespace {

using Kind = UnitaryParseError::Kind;

bool parse_real(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

bool parse_complex(std::string_view token, Complex& out) {
  if (token.empty()) return false;
  const char last = token.back();
  if (last != 'j' && last != 'J' && last != 'i') {
    double re = 0.0;
    if (!parse_real(token, re)) return false;
    out = {re, 0.0};
    return true;
  }
  token.remove_suffix(1);

  // Split at the last sign that is not a leading sign or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = token.size(); k-- > 1;) {
    if ((token[k] == '+' || token[k] == '-') && token[k - 1] != 'e' && token[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  double re = 0.0;
  std::string_view imag_part = token;
  if (split != std::string_view::npos) {
    if (!parse_real(token.substr(0, split), re)) return false;
    imag_part = token.substr(split);
  }
  double im = 0.0;
  if (imag_part.empty() || imag_part == "+") {
    im = 1.0;
  } else if (imag_part == "-") {
    im = -1.0;
  } else if (!parse_real(imag_part, im)) {
    return false;
  }
  out = {re, im};
  return true;
}

LoadedUnitary parse_unitary(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t header_line = 0;
  std::size_t rows_read = 0;
  ComplexMatrix m;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto tokens = split_tokens(strip_comment(raw));
    if (tokens.empty()) continue;

    if (header_line == 0) {
      if (tokens.size() != 1)
        throw UnitaryParseError(Kind::kSyntax, line_no, 0, "expected a single dimension N");
      std::size_t value = 0;
      const auto text = tokens[0].text;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
        throw UnitaryParseError(Kind::kSyntax, line_no, tokens[0].column,
                                "dimension must be a positive integer, got '" +
                                    std::string(text) + "'");
      n = value;
      header_line = line_no;
      m = ComplexMatrix(n, n);
      continue;
    }

    if (rows_read == n)
      throw UnitaryParseError(Kind::kDimension, line_no, 0,
                              "more than " + std::to_string(n) + " rows");
    if (tokens.size() != n)
      throw UnitaryParseError(Kind::kDimension, line_no, 0,
                              "row " + std::to_string(rows_read + 1) + " has " +
                                  std::to_string(tokens.size()) + " entries, expected " +
                                  std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      Complex z;
      if (!parse_complex(tokens[c].text, z))
        throw UnitaryParseError(Kind::kSyntax, line_no, tokens[c].column,
                                "row " + std::to_string(rows_read + 1) +
                                    ": cannot parse complex entry '" +
                                    std::string(tokens[c].text) + "'");
      m(rows_read, c) = z;
    }
    ++rows_read;
  }

  if (header_line == 0) throw UnitaryParseError(Kind::kSyntax, line_no, 0, "missing dimension line");
  if (rows_read != n)
    throw UnitaryParseError(Kind::kDimension, line_no, 0,
                            "found " + std::to_string(rows_read) + " rows, expected " +
                                std::to_string(n));
  if (!m.all_finite())
    throw UnitaryParseError(Kind::kSyntax, header_line, 0, "matrix has non-finite entries");

  LoadedUnitary out{m, validate(m, kLoadedTolerance)};
  if (!out.report.unitary)
    throw UnitaryParseError(Kind::kNotUnitary, header_line, 0,
                            "matrix is not unitary (max |UU^+ - I| = " +
                                std::to_string(out.report.unitarity_deviation) + ")");
  return out;
}

LoadedUnitary load_unitary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open unitary file " + path.string());
  return parse_unitary(in);
}

void write_unitary(std::ostream& out, const ComplexMatrix& u) {
  if (!u.is_square()) throw DimensionError("write_unitary: matrix must be square");
  auto fmt = [](double x) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                   std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
  };
  out << u.rows() << '\n';
  for (std::size_t r = 0; r < u.rows(); ++r) {
    for (std::size_t c = 0; c < u.cols(); ++c) {
      const Complex z = u(r, c);
      if (c) out << ' ';
      out << fmt(z.real()) << (std::signbit(z.imag()) ? "-" : "+") << fmt(std::abs(z.imag()))
          << 'j';
    }
    out << '\n';
  }
}

}  // namespace fourport
