#ifndef POICO_VERSION_HPP
#define POICO_VERSION_HPP

namespace poico {
inline constexpr const char* kEngineVersion = "0.1.0";
}

#endif
