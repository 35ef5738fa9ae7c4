// Copyright 2026 The qvs Authors
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

#include "qvs/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace qvs {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line split on whitespace; throws at end of input.
  std::vector<std::string> tokens(const std::string& what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      strip_comment(line);
      std::istringstream split(line);
      std::vector<std::string> out;
      for (std::string t; split >> t;) out.push_back(t);
      if (!out.empty()) return out;
    }
    fail("unexpected end of input, expected " + what);
  }

  static void strip_comment(std::string& line) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  }

  void expect_end() {
    std::string line;
    while (std::getline(in_, line)) {
      ++number_;
      strip_comment(line);
      if (line.find_first_not_of(" \t\r") != std::string::npos) fail("trailing content");
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("line " + std::to_string(number_) + ": " + message);
  }

  template <typename T>
  T number(const std::string& token) const {
    T value{};
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) fail("cannot parse '" + token + "'");
    return value;
  }

  void arity(const std::vector<std::string>& tokens, std::size_t expected) const {
    if (tokens.size() != expected) {
      fail("expected " + std::to_string(expected) + " fields, got " + std::to_string(tokens.size()));
    }
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::uint8_t parse_bit(const LineReader& reader, char c) {
  if (c != '0' && c != '1') reader.fail(std::string("expected 0 or 1, got '") + c + "'");
  return static_cast<std::uint8_t>(c - '0');
}

template <typename Parse>
auto load(const std::filesystem::path& path, Parse parse) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return parse(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buffer{};
  auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buffer.data(), ptr);
}

void write_dataset(std::ostream& out, const Dataset& data) {
  out << data.size() << ' ' << data.dimension() << ' ' << format_double(data.claimed_margin()) << '\n';
  for (const auto& p : data.points()) {
    for (Eigen::Index m = 0; m < p.x.size(); ++m) out << format_double(p.x(m)) << ' ';
    out << p.y << '\n';
  }
}

Dataset read_dataset(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.tokens("header 'N M gamma'");
  reader.arity(header, 3);
  const auto n = reader.number<std::size_t>(header[0]);
  const auto m = reader.number<int>(header[1]);
  const auto gamma = reader.number<double>(header[2]);
  if (n < 1 || m < 1) reader.fail("N and M must be positive");
  std::vector<DataPoint> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = reader.tokens("data point " + std::to_string(i));
    reader.arity(row, static_cast<std::size_t>(m) + 1);
    DataPoint p{Vector<double>(m), reader.number<int>(row.back())};
    for (int c = 0; c < m; ++c) p.x(c) = reader.number<double>(row[static_cast<std::size_t>(c)]);
    if (p.y != 1 && p.y != -1) reader.fail("label must be 1 or -1");
    points.push_back(std::move(p));
  }
  reader.expect_end();
  try {
    return Dataset(std::move(points), gamma);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void write_truth_table(std::ostream& out, const TruthTable& table) {
  out << table.rows() << ' ' << table.cols() << '\n';
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.cols(); ++j) {
      out << (j ? " " : "") << (table.bit(i, j) ? '1' : '0');
    }
    out << '\n';
  }
}

TruthTable read_truth_table(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.tokens("header 'N K'");
  reader.arity(header, 2);
  const auto rows = reader.number<std::size_t>(header[0]);
  const auto cols = reader.number<std::size_t>(header[1]);
  if (rows < 1 || cols < 1) reader.fail("N and K must be positive");
  std::vector<std::uint8_t> bits;
  bits.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row = reader.tokens("table row " + std::to_string(i));
    reader.arity(row, cols);
    for (const auto& t : row) {
      if (t.size() != 1) reader.fail("expected a single 0/1 digit, got '" + t + "'");
      bits.push_back(parse_bit(reader, t[0]));
    }
  }
  reader.expect_end();
  return TruthTable(rows, cols, std::move(bits));
}

void write_andor(std::ostream& out, const AndOrInstance& instance) {
  out << instance.n() << ' ' << instance.k() << '\n';
  for (auto b : instance.z()) out << static_cast<char>('0' + b);
  out << '\n';
}

AndOrInstance read_andor(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.tokens("header 'N K'");
  reader.arity(header, 2);
  const auto n = reader.number<std::size_t>(header[0]);
  const auto k = reader.number<std::size_t>(header[1]);
  if (n < 1 || k < 1) reader.fail("N and K must be positive");
  const auto line = reader.tokens("bit string z");
  reader.arity(line, 1);
  if (line[0].size() != n * k) {
    reader.fail("z has " + std::to_string(line[0].size()) + " bits, expected " + std::to_string(n * k));
  }
  std::vector<std::uint8_t> z;
  z.reserve(n * k);
  for (char c : line[0]) z.push_back(parse_bit(reader, c));
  reader.expect_end();
  return AndOrInstance(n, k, std::move(z));
}

Dataset load_dataset(const std::filesystem::path& path) { return load(path, read_dataset); }
TruthTable load_truth_table(const std::filesystem::path& path) { return load(path, read_truth_table); }
AndOrInstance load_andor(const std::filesystem::path& path) { return load(path, read_andor); }

void save_dataset(const std::filesystem::path& path, const Dataset& data) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_dataset(out, data);
}

}  // namespace qvs
