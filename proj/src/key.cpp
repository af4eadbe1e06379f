#include "semidec/key.hpp"

#include "semidec/error.hpp"

namespace semidec {

  std::string to_hex(KeyView key) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string           out;
    out.reserve(key.size() * 2);
    for (unsigned char c : key) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 0xF]);
    }
    return out;
  }

  namespace {
    int nibble(char c) {
      if (c >= '0' && c <= '9') {
        return c - '0';
      }
      if (c >= 'a' && c <= 'f') {
        return c - 'a' + 10;
      }
      if (c >= 'A' && c <= 'F') {
        return c - 'A' + 10;
      }
      fail(ErrorCode::parse_error, "invalid hex digit");
    }
  }  // namespace

  Key from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
      fail(ErrorCode::parse_error, "odd-length hex key");
    }
    Key out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
      out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    }
    return out;
  }

  std::uint8_t KeyReader::u8() {
    if (pos_ >= data_.size()) {
      fail(ErrorCode::parse_error, "truncated key");
    }
    return static_cast<std::uint8_t>(data_[pos_++]);
  }

  std::uint16_t KeyReader::u16() {
    std::uint16_t lo = u8();
    std::uint16_t hi = u8();
    return static_cast<std::uint16_t>(lo | (hi << 8));
  }

  std::uint32_t KeyReader::u32() {
    std::uint32_t lo = u16();
    std::uint32_t hi = u16();
    return lo | (hi << 16);
  }

  KeyView KeyReader::nested() {
    std::uint32_t len = u32();
    if (data_.size() - pos_ < len) {
      fail(ErrorCode::parse_error, "truncated nested key");
    }
    KeyView out = data_.substr(pos_, len);
    pos_ += len;
    return out;
  }

}  // namespace semidec
