#include "ixpgraph/ip.hpp"

#include <arpa/inet.h>

#include <charconv>
#include <cstring>

namespace ixpgraph {

std::optional<IpAddress> IpAddress::parse(std::string_view text) {
  if (text.empty() || text.size() > INET6_ADDRSTRLEN) return std::nullopt;
  const std::string buffer(text);
  IpAddress result;
  if (buffer.find(':') != std::string::npos) {
    if (inet_pton(AF_INET6, buffer.c_str(), result.bytes_.data()) != 1) {
      return std::nullopt;
    }
    result.family_ = IpFamily::kV6;
  } else {
    if (inet_pton(AF_INET, buffer.c_str(), result.bytes_.data()) != 1) {
      return std::nullopt;
    }
    result.family_ = IpFamily::kV4;
  }
  return result;
}

bool IpAddress::bit(int index) const {
  return (bytes_[index / 8] >> (7 - index % 8)) & 1U;
}

std::string IpAddress::to_string() const {
  char buffer[INET6_ADDRSTRLEN] = {};
  const int af = family_ == IpFamily::kV4 ? AF_INET : AF_INET6;
  inet_ntop(af, bytes_.data(), buffer, sizeof(buffer));
  return buffer;
}

std::optional<Cidr> Cidr::parse(std::string_view text) {
  const auto slash = text.find('/');
  auto address = IpAddress::parse(text.substr(0, slash));
  if (!address) return std::nullopt;

  int length = address->bit_width();
  if (slash != std::string_view::npos) {
    const auto digits = text.substr(slash + 1);
    const auto* end = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(digits.data(), end, length);
    if (digits.empty() || ec != std::errc{} || ptr != end) return std::nullopt;
    if (length < 0 || length > address->bit_width()) return std::nullopt;
  }

  Cidr cidr;
  cidr.network_ = *address;
  cidr.length_ = length;
  for (int i = length; i < address->bit_width(); ++i) {
    cidr.network_.bytes_[i / 8] &= static_cast<std::uint8_t>(~(0x80U >> (i % 8)));
  }
  return cidr;
}

bool Cidr::contains(const IpAddress& address) const {
  if (address.family() != family()) return false;
  const int full_bytes = length_ / 8;
  if (std::memcmp(address.bytes_.data(), network_.bytes_.data(), full_bytes) != 0) {
    return false;
  }
  for (int i = full_bytes * 8; i < length_; ++i) {
    if (address.bit(i) != network_.bit(i)) return false;
  }
  return true;
}

bool Cidr::contains(const Cidr& other) const {
  return other.length_ >= length_ && contains(other.network_);
}

std::string Cidr::to_string() const {
  return network_.to_string() + "/" + std::to_string(length_);
}

}  // namespace ixpgraph
