// Copyright 2026 The Trapdoor Authors
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

#include "trapdoor/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trapdoor/error.hpp"

namespace trapdoor {

namespace {

constexpr std::string_view kDatasetMagic = "trapdoor-dataset v1 d=";
constexpr std::string_view kProductMagic = "product-dataset v1 d=";

[[noreturn]] void fail(const std::string& source, std::size_t line,
                       const std::string& message) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + message);
}

std::size_t parse_header_dimension(const std::string& line,
                                   std::string_view magic,
                                   const std::string& source) {
  if (!line.starts_with(magic)) {
    fail(source, 1, "expected header '" + std::string(magic) + "<d>'");
  }
  const std::string_view rest = std::string_view(line).substr(magic.size());
  std::size_t d = 0;
  const auto [ptr, ec] =
      std::from_chars(rest.data(), rest.data() + rest.size(), d);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) {
    fail(source, 1, "malformed dimension in header");
  }
  if (d < 2) {
    fail(source, 1, "dimension must be at least 2");
  }
  return d;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t next = line.find(' ', pos);
    if (next == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  return fields;
}

std::uint8_t parse_bit(std::string_view field, const std::string& source,
                       std::size_t line) {
  if (field == "0") return 0;
  if (field == "1") return 1;
  fail(source, line, "expected bit 0 or 1, got '" + std::string(field) + "'");
}

int parse_signed_index(std::string_view field, const std::string& source,
                       std::size_t line) {
  std::string_view digits = field;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      value == 0) {
    fail(source, line,
         "expected nonzero signed index, got '" + std::string(field) + "'");
  }
  return value;
}

void check_stream_writable(const std::ostream& out,
                           const std::filesystem::path& path) {
  if (!out) {
    throw IoError("cannot write file: " + path.string());
  }
}

}  // namespace

void write_dataset(const Dataset& data, std::ostream& out) {
  out << kDatasetMagic << data.dimension() << '\n';
  for (const Sample& s : data.samples()) {
    if (s.is_key()) {
      out << 'K';
      for (std::uint8_t b : s.bits()) out << ' ' << static_cast<int>(b);
      out << '\n';
    } else {
      out << "H " << s.hard_index() << '\n';
    }
  }
}

void write_dataset(const Dataset& data, const std::filesystem::path& path) {
  std::ofstream out(path);
  check_stream_writable(out, path);
  write_dataset(data, out);
  out.flush();
  check_stream_writable(out, path);
}

Dataset read_dataset(std::istream& in, const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line)) {
    fail(source_name, 1, "missing header");
  }
  const std::size_t d = parse_header_dimension(line, kDatasetMagic, source_name);
  Dataset data(d);
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    const auto fields = split_fields(line);
    if (fields.empty()) {
      fail(source_name, line_number, "empty line");
    }
    if (fields[0] == "K") {
      if (fields.size() != d + 1) {
        fail(source_name, line_number,
             "key sample needs " + std::to_string(d) + " bits, got " +
                 std::to_string(fields.size() - 1));
      }
      Bits bits(d);
      for (std::size_t j = 0; j < d; ++j) {
        bits[j] = parse_bit(fields[j + 1], source_name, line_number);
      }
      data.append(Sample::key(std::move(bits)));
    } else if (fields[0] == "H") {
      if (fields.size() != 2) {
        fail(source_name, line_number, "hard sample needs exactly one index");
      }
      const int index = parse_signed_index(fields[1], source_name, line_number);
      if (static_cast<std::size_t>(index > 0 ? index : -index) > d) {
        fail(source_name, line_number,
             "hard index " + std::to_string(index) + " exceeds dimension " +
                 std::to_string(d));
      }
      data.append(Sample::hard(index));
    } else {
      fail(source_name, line_number,
           "expected 'K' or 'H' record, got '" + std::string(fields[0]) + "'");
    }
  }
  return data;
}

Dataset read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open file: " + path.string());
  }
  return read_dataset(in, path.string());
}

void write_product_dataset(const ProductDataset& data, std::ostream& out) {
  out << kProductMagic << data.dimension() << '\n';
  for (const Bits& row : data.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ' ';
      out << static_cast<int>(row[j]);
    }
    out << '\n';
  }
}

void write_product_dataset(const ProductDataset& data,
                           const std::filesystem::path& path) {
  std::ofstream out(path);
  check_stream_writable(out, path);
  write_product_dataset(data, out);
  out.flush();
  check_stream_writable(out, path);
}

ProductDataset read_product_dataset(std::istream& in,
                                    const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line)) {
    fail(source_name, 1, "missing header");
  }
  const std::size_t d = parse_header_dimension(line, kProductMagic, source_name);
  ProductDataset data(d);
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    const auto fields = split_fields(line);
    if (fields.size() != d) {
      fail(source_name, line_number,
           "row needs " + std::to_string(d) + " bits, got " +
               std::to_string(fields.size()));
    }
    Bits row(d);
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = parse_bit(fields[j], source_name, line_number);
    }
    data.append(std::move(row));
  }
  return data;
}

ProductDataset read_product_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open file: " + path.string());
  }
  return read_product_dataset(in, path.string());
}

Sample parse_atom(const std::string& text, std::size_t d) {
  if (text.starts_with("K:")) {
    std::vector<std::uint8_t> bits;
    std::string_view rest = std::string_view(text).substr(2);
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view field = rest.substr(0, comma);
      if (field == "0") {
        bits.push_back(0);
      } else if (field == "1") {
        bits.push_back(1);
      } else {
        throw ParseError("atom '" + text + "': expected bit 0 or 1, got '" +
                         std::string(field) + "'");
      }
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (bits.size() != d) {
      throw ParseError("atom '" + text + "': expected " + std::to_string(d) +
                       " bits, got " + std::to_string(bits.size()));
    }
    return Sample::key(std::move(bits));
  }
  if (text.starts_with("H:")) {
    std::string_view digits = std::string_view(text).substr(2);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int index = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        index == 0) {
      throw ParseError("atom '" + text + "': malformed hard index");
    }
    if (static_cast<std::size_t>(index > 0 ? index : -index) > d) {
      throw ParseError("atom '" + text + "': hard index exceeds dimension " +
                       std::to_string(d));
    }
    return Sample::hard(index);
  }
  throw ParseError("atom '" + text + "': expected 'K:...' or 'H:...'");
}

std::string format_atom(const Sample& sample) {
  std::ostringstream out;
  if (sample.is_key()) {
    out << "K:";
    for (std::size_t j = 0; j < sample.bits().size(); ++j) {
      if (j > 0) out << ',';
      out << static_cast<int>(sample.bits()[j]);
    }
  } else {
    out << "H:" << (sample.hard_index() > 0 ? "+" : "")
        << sample.hard_index();
  }
  return out.str();
}

}  // namespace trapdoor
