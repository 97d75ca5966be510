/*
 * Copyright 2026 The moteval Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MOTEVAL_ZIP_HPP_
#define MOTEVAL_ZIP_HPP_

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moteval {

class ZipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ZipEntry {
  std::string name;
  std::string data;
};

// Minimal ZIP support: stored and deflated members, no encryption, no ZIP64.
std::vector<ZipEntry> read_zip(std::string_view bytes);
std::vector<ZipEntry> read_zip_file(const std::filesystem::path& path);

/// Builds an archive with uncompressed (stored) members.
std::string make_zip(std::span<const ZipEntry> entries);

bool looks_like_zip(std::string_view bytes);

}  // namespace moteval

#endif  // MOTEVAL_ZIP_HPP_
