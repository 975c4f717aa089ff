/*
 * Copyright 2026 xlsim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef XLSIM_UNICODE_HPP
#define XLSIM_UNICODE_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace xlsim::uni {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Byte offset of the first invalid UTF-8 sequence, or npos when the
/// whole buffer decodes cleanly.
std::size_t find_invalid_utf8(std::string_view bytes);

/// Strict decode; throws Error naming the byte offset of the first bad
/// sequence.
std::u32string decode_utf8(std::string_view bytes);

/// Lenient decode; invalid sequences become U+FFFD so text-processing
/// functions stay total.
std::u32string decode_utf8_lenient(std::string_view bytes);

std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t cp);

/// Unicode White_Space property.
bool is_whitespace(char32_t cp);

/// Unicode general categories P* and S*.
bool is_punct_or_symbol(char32_t cp);

/// Simple (one-to-one) lowercase mapping.
char32_t simple_lower(char32_t cp);

} // namespace xlsim::uni

#endif
