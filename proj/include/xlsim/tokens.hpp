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

#ifndef XLSIM_TOKENS_HPP
#define XLSIM_TOKENS_HPP

#include <string>
#include <vector>

namespace xlsim {

/// Ordered tokens of one article body, UTF-8 encoded. Tokens are
/// non-empty and carry no whitespace and no ZWNJ.
using TokenStream = std::vector<std::string>;

} // namespace xlsim

#endif
