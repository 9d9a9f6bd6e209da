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
//
// Line-oriented UTF-8 text formats.
//
// Trapdoor dataset:
//   trapdoor-dataset v1 d=<d>
//   K b1 b2 ... bd
//   H <signed integer>
//
// Product dataset:
//   product-dataset v1 d=<d>
//   b1 b2 ... bd
//
// Parsers reject malformed input with "source:line:" errors.

#ifndef TRAPDOOR_DATASET_IO_HPP_
#define TRAPDOOR_DATASET_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "trapdoor/distribution.hpp"
#include "trapdoor/reductions.hpp"

namespace trapdoor {

void write_dataset(const Dataset& data, std::ostream& out);
void write_dataset(const Dataset& data, const std::filesystem::path& path);

Dataset read_dataset(std::istream& in, const std::string& source_name);
Dataset read_dataset(const std::filesystem::path& path);

void write_product_dataset(const ProductDataset& data, std::ostream& out);
void write_product_dataset(const ProductDataset& data,
                           const std::filesystem::path& path);

ProductDataset read_product_dataset(std::istream& in,
                                    const std::string& source_name);
ProductDataset read_product_dataset(const std::filesystem::path& path);

// Compact atom syntax used on the command line: "K:b1,...,bd" for key
// samples, "H:+j" / "H:-j" for hard samples.  parse_atom and format_atom
// round-trip losslessly.
Sample parse_atom(const std::string& text, std::size_t d);
std::string format_atom(const Sample& sample);

}  // namespace trapdoor

#endif  // TRAPDOOR_DATASET_IO_HPP_
