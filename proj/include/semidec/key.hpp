#ifndef SEMIDEC_KEY_HPP_
#define SEMIDEC_KEY_HPP_

// Canonical byte encodings of monoid elements. Two elements are equal
// exactly when their keys are bytewise equal.

#include <cstdint>
#include <string>
#include <string_view>

namespace semidec {

  using Key     = std::string;
  using KeyView = std::string_view;

  std::string to_hex(KeyView key);
  Key         from_hex(std::string_view hex);

  class KeyWriter {
   public:
    KeyWriter& u8(std::uint8_t v) {
      out_.push_back(static_cast<char>(v));
      return *this;
    }
    KeyWriter& u16(std::uint16_t v) {
      u8(static_cast<std::uint8_t>(v & 0xFF));
      return u8(static_cast<std::uint8_t>(v >> 8));
    }
    KeyWriter& u32(std::uint32_t v) {
      u16(static_cast<std::uint16_t>(v & 0xFFFF));
      return u16(static_cast<std::uint16_t>(v >> 16));
    }
    // length-prefixed nested key
    KeyWriter& nested(KeyView k) {
      u32(static_cast<std::uint32_t>(k.size()));
      out_.append(k);
      return *this;
    }
    Key take() {
      return std::move(out_);
    }

   private:
    Key out_;
  };

  // Reading past the end throws Error(parse_error).
  class KeyReader {
   public:
    explicit KeyReader(KeyView k) : data_(k) {}

    std::uint8_t  u8();
    std::uint16_t u16();
    std::uint32_t u32();
    KeyView       nested();

    bool done() const noexcept {
      return pos_ == data_.size();
    }

   private:
    KeyView     data_;
    std::size_t pos_ = 0;
  };

}  // namespace semidec

#endif  // SEMIDEC_KEY_HPP_
