// RIFF/WAVE PCM16 mono reader and writer.
//
// Only the canonical uncompressed layout is supported: "RIFF" + "WAVE",
// a 16-byte PCM fmt chunk (format 1, 1 channel, 16 bits) and a "data"
// chunk. Decoded samples keep the raw int16 scale.

#ifndef FTK_WAV_HPP
#define FTK_WAV_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "ftk/signal.hpp"

namespace ftk {

/// Raised for structurally broken or unsupported WAV input, and for
/// out-of-range samples on write. The message names the exact cause.
class WavError : public std::runtime_error {
public:
    explicit WavError(const std::string& msg) : std::runtime_error(msg) {}
};

Signal read_wav(const std::filesystem::path& path);

/// Samples are rounded to the nearest integer and must fit int16 after
/// rounding. Produces a bit-exact 44-byte-header PCM16 mono file;
/// read_wav(write_wav(s)) == s for any int16-valued signal.
void write_wav(const Signal& signal, const std::filesystem::path& path);

} // namespace ftk

#endif
