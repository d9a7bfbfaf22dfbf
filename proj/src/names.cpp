#include "collabnet/names.hpp"

#include <unicode/unorm2.h>
#include <unicode/ustring.h>

#include <cctype>
#include <vector>

namespace collabnet {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_ascii(std::string_view s) {
  for (unsigned char c : s)
    if (c >= 0x80) return false;
  return true;
}

std::string nfc(std::string_view utf8) {
  UErrorCode ec = U_ZERO_ERROR;
  const UNormalizer2* norm = unorm2_getNFCInstance(&ec);
  if (U_FAILURE(ec)) return std::string(utf8);

  std::vector<UChar> u16(utf8.size() + 1);
  int32_t u16len = 0;
  u_strFromUTF8(u16.data(), static_cast<int32_t>(u16.size()), &u16len, utf8.data(),
                static_cast<int32_t>(utf8.size()), &ec);
  if (U_FAILURE(ec)) return std::string(utf8);

  std::vector<UChar> out(static_cast<size_t>(u16len) * 2 + 8);
  int32_t outlen = unorm2_normalize(norm, u16.data(), u16len, out.data(),
                                    static_cast<int32_t>(out.size()), &ec);
  if (U_FAILURE(ec)) return std::string(utf8);

  std::string result(static_cast<size_t>(outlen) * 4 + 4, '\0');
  int32_t u8len = 0;
  u_strToUTF8(result.data(), static_cast<int32_t>(result.size()), &u8len, out.data(), outlen, &ec);
  if (U_FAILURE(ec)) return std::string(utf8);
  result.resize(static_cast<size_t>(u8len));
  return result;
}

}  // namespace

std::string canonical_name(std::string_view raw) {
  std::string_view trimmed = trim(raw);
  if (is_ascii(trimmed)) return std::string(trimmed);  // NFC is the identity on ASCII
  return nfc(trimmed);
}

}  // namespace collabnet
