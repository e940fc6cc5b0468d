// Copyright 2026 The OncoKG Authors.
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

#ifndef ONCOKG_UTIL_CONFIG_H_
#define ONCOKG_UTIL_CONFIG_H_

#include <filesystem>
#include <map>
#include <string>

namespace onco::util {

// Flat key=value configuration (TOML-like): one pair per line, '#'
// comments, optional double quotes around values.
std::map<std::string, std::string> parse_config(const std::string& text);
std::map<std::string, std::string> load_config(const std::filesystem::path& path);

}  // namespace onco::util

#endif  // ONCOKG_UTIL_CONFIG_H_
