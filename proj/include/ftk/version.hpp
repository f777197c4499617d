#ifndef FTK_VERSION_HPP
#define FTK_VERSION_HPP

namespace ftk {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
