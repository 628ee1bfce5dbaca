#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace hirschlab {

/// A natural number or infinity. Used for diameters and connectivities,
/// where "unbounded" is a genuine result rather than an error.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(std::int64_t value) : value_(value) {}  // NOLINT(implicit)

  static constexpr ExtendedNat infinity() {
    ExtendedNat e;
    e.value_.reset();
    return e;
  }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }
  /// Precondition: is_finite().
  constexpr std::int64_t value() const { return *value_; }

  constexpr bool operator==(const ExtendedNat&) const = default;
  constexpr std::strong_ordering operator<=>(const ExtendedNat& o) const {
    if (is_infinite() || o.is_infinite()) {
      return is_infinite() == o.is_infinite()
                 ? std::strong_ordering::equal
                 : (is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less);
    }
    return *value_ <=> *o.value_;
  }

  std::string to_string() const { return is_finite() ? std::to_string(*value_) : "inf"; }

 private:
  std::optional<std::int64_t> value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ExtendedNat& e) {
  return os << e.to_string();
}

}  // namespace hirschlab
