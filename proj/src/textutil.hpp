/*
 * Copyright 2026 the claimkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CLAIMKIT_SRC_TEXTUTIL_HPP
#define CLAIMKIT_SRC_TEXTUTIL_HPP

#include <cctype>
#include <string>
#include <vector>

namespace claimkit::textutil {

inline char lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}
inline char upper(char c) {
  return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}
inline bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}
inline bool is_alpha(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}
inline bool is_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}
inline bool is_upper(char c) {
  return std::isupper(static_cast<unsigned char>(c)) != 0;
}

std::string to_lower(const std::string& s);
std::string trim(const std::string& s);
std::string collapse_whitespace(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);
bool valid_utf8(const std::string& s);
std::string read_file(const std::string& path);

}  // namespace claimkit::textutil

#endif  // CLAIMKIT_SRC_TEXTUTIL_HPP
