// Copyright 2026 The UDTK Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small string, hashing and file helpers shared by all modules.

#ifndef UDTK_UTIL_H_
#define UDTK_UTIL_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace udtk {

// Splits on a single character. Empty fields are kept.
std::vector<std::string_view> Split(std::string_view text, char sep);

// Splits on runs of ASCII whitespace. Empty fields are dropped.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

std::string_view Trim(std::string_view text);

// ASCII lowercasing; multi-byte UTF-8 sequences pass through unchanged.
std::string AsciiLower(std::string_view text);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

bool ParseInt(std::string_view text, int *value);
bool ParseDouble(std::string_view text, double *value);

// 64-bit FNV-1a.
uint64_t Fnv1a(std::string_view data, uint64_t seed = 14695981039346656037ULL);
std::string HexDigest(uint64_t value);

// Shortest round-trip decimal rendering of a double.
std::string FormatDouble(double value);

// Whole-file I/O. Every successful or attempted read is recorded in a
// process-wide audit log so callers can verify which resources a command
// touched.
std::string ReadFile(const std::string &path);
void WriteFile(const std::string &path, std::string_view contents);
std::vector<std::string> OpenedFiles();
void ClearOpenedFiles();

}  // namespace udtk

#endif  // UDTK_UTIL_H_
