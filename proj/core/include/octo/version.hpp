#ifndef OCTO_VERSION_HPP
#define OCTO_VERSION_HPP

namespace octo {

inline constexpr const char* engine_version = "0.1.0";

} // namespace octo

#endif
