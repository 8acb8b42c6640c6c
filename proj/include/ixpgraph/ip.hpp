#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ixpgraph {

enum class IpFamily : std::uint8_t { kV4 = 4, kV6 = 6 };

// IPv4 or IPv6 address. IPv4 occupies the first four bytes of `bytes`.
class IpAddress {
 public:
  IpAddress() = default;

  static std::optional<IpAddress> parse(std::string_view text);

  IpFamily family() const { return family_; }
  int bit_width() const { return family_ == IpFamily::kV4 ? 32 : 128; }
  bool bit(int index) const;
  std::string to_string() const;

  friend auto operator<=>(const IpAddress&, const IpAddress&) = default;

 private:
  IpFamily family_ = IpFamily::kV4;
  std::array<std::uint8_t, 16> bytes_{};

  friend class Cidr;
};

// A network prefix in canonical form: host bits are always zero.
class Cidr {
 public:
  Cidr() = default;

  // Accepts "a.b.c.d/len" and "x::y/len"; host bits set in the input are
  // cleared. A bare address is treated as a full-length prefix.
  static std::optional<Cidr> parse(std::string_view text);

  const IpAddress& network() const { return network_; }
  int length() const { return length_; }
  IpFamily family() const { return network_.family(); }

  bool contains(const IpAddress& address) const;
  bool contains(const Cidr& other) const;
  // Two prefixes overlap exactly when one contains the other.
  bool overlaps(const Cidr& other) const {
    return contains(other) || other.contains(*this);
  }

  std::string to_string() const;

  friend auto operator<=>(const Cidr&, const Cidr&) = default;

 private:
  IpAddress network_;
  int length_ = 0;
};

}  // namespace ixpgraph
