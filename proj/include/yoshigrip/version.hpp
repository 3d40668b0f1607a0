#ifndef YOSHIGRIP_VERSION_HPP
#define YOSHIGRIP_VERSION_HPP

namespace yoshigrip {

inline constexpr const char* kToolkitName = "yoshigrip";
inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace yoshigrip

#endif  // YOSHIGRIP_VERSION_HPP
