// Copyright 2026 The olaph Authors
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

#pragma once

#include <string>
#include <string_view>

#include "olaph/text.hpp"

namespace olaph {

// True for stress marks, length marks, syllable dots and tie bars.
inline bool is_verbose_symbol(char32_t c) {
  switch (c) {
    case 0x02C8:  // ˈ
    case 0x02CC:  // ˌ
    case 0x02D0:  // ː
    case 0x02D1:  // ˑ
    case U'.':
    case 0x0361:  // combining double inverted breve (tie bar above)
    case 0x035C:  // combining double breve below (tie bar below)
      return true;
    default:
      return false;
  }
}

// Drops verbose symbols, keeping every other code point in order.
inline std::string strip_verbose(std::string_view phonemes) {
  std::string out;
  out.reserve(phonemes.size());
  for (std::size_t pos = 0; pos < phonemes.size();) {
    const std::size_t start = pos;
    const char32_t c = text::decode(phonemes, pos);
    if (!is_verbose_symbol(c)) out.append(phonemes.substr(start, pos - start));
  }
  return out;
}

}  // namespace olaph
