#ifndef EWB_VERSION_HPP
#define EWB_VERSION_HPP

namespace ewb {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ewb

#endif
