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

#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qvs/andor.hpp"
#include "qvs/oracles.hpp"
#include "qvs/perceptron.hpp"

namespace qvs {

/// Malformed input file; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All readers skip blank lines and treat "#" to end of line as a comment.

/// Shortest decimal form that reads back to the same double.
std::string format_double(double value);

/// Header "N M gamma", then one line "x_1 ... x_M y" per point. Doubles are
/// written in shortest round-trip form, so write/read is bit-exact.
void write_dataset(std::ostream& out, const Dataset& data);
Dataset read_dataset(std::istream& in);

/// Header "N K", then N lines of K space-separated 0/1 digits.
void write_truth_table(std::ostream& out, const TruthTable& table);
TruthTable read_truth_table(std::istream& in);

/// Header "N K", then the N K bits of z as one line of 0/1 characters.
void write_andor(std::ostream& out, const AndOrInstance& instance);
AndOrInstance read_andor(std::istream& in);

Dataset load_dataset(const std::filesystem::path& path);
TruthTable load_truth_table(const std::filesystem::path& path);
AndOrInstance load_andor(const std::filesystem::path& path);
void save_dataset(const std::filesystem::path& path, const Dataset& data);

}  // namespace qvs
