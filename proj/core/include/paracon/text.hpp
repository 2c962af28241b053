#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace paracon {

// ASCII-lowercases and splits on whitespace. Punctuation stays attached to tokens.
std::vector<std::string> tokenize(std::string_view text);

// Decodes UTF-8 into code points; invalid bytes map to U+FFFD.
std::u32string decode_utf8(std::string_view text);

} // namespace paracon
