#include "ftk/wav.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace ftk {

namespace {

std::uint32_t rd_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t rd_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void wr_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    out.push_back(static_cast<unsigned char>(v & 0xff));
    out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
    out.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
    out.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

void wr_u16(std::vector<unsigned char>& out, std::uint16_t v) {
    out.push_back(static_cast<unsigned char>(v & 0xff));
    out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

} // namespace

Signal read_wav(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw WavError("cannot open '" + path.string() + "'");
    std::vector<unsigned char> buf((std::istreambuf_iterator<char>(f)),
                                   std::istreambuf_iterator<char>());

    if (buf.size() < 12 || std::memcmp(buf.data(), "RIFF", 4) != 0 ||
        std::memcmp(buf.data() + 8, "WAVE", 4) != 0)
        throw WavError("malformed RIFF header in '" + path.string() + "'");

    bool have_fmt = false;
    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    const unsigned char* data = nullptr;
    std::uint32_t data_len = 0;

    // Chunk scan; unknown chunks are skipped. Chunk bodies are padded to
    // even length per RIFF.
    std::size_t pos = 12;
    while (pos + 8 <= buf.size()) {
        const unsigned char* ch = buf.data() + pos;
        std::uint32_t len = rd_u32(ch + 4);
        const unsigned char* body = ch + 8;
        if (pos + 8 + len > buf.size())
            throw WavError("truncated chunk in '" + path.string() + "'");
        if (std::memcmp(ch, "fmt ", 4) == 0) {
            if (len < 16)
                throw WavError("fmt chunk too short in '" + path.string() + "'");
            format = rd_u16(body);
            channels = rd_u16(body + 2);
            rate = rd_u32(body + 4);
            bits = rd_u16(body + 14);
            have_fmt = true;
        } else if (std::memcmp(ch, "data", 4) == 0) {
            data = body;
            data_len = len;
        }
        pos += 8 + len + (len & 1);
    }

    if (!have_fmt)
        throw WavError("missing fmt chunk in '" + path.string() + "'");
    if (format != 1)
        throw WavError("unsupported encoding: non-PCM format " + std::to_string(format));
    if (bits != 16)
        throw WavError("unsupported encoding: " + std::to_string(bits) + "-bit samples (need 16)");
    if (channels != 1)
        throw WavError("unsupported encoding: " + std::to_string(channels) + " channels (need mono)");
    if (data == nullptr)
        throw WavError("missing data chunk in '" + path.string() + "'");
    if (rate == 0)
        throw WavError("zero sample rate in '" + path.string() + "'");

    Signal sig;
    sig.sample_rate_hz = static_cast<double>(rate);
    std::size_t n = data_len / 2;
    sig.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint16_t u = rd_u16(data + 2 * i);
        sig.samples[i] = static_cast<double>(static_cast<std::int16_t>(u));
    }
    return sig;
}

void write_wav(const Signal& signal, const std::filesystem::path& path) {
    std::vector<std::int16_t> pcm;
    pcm.reserve(signal.samples.size());
    for (double v : signal.samples) {
        double r = std::round(v);
        if (!(r >= -32768.0 && r <= 32767.0))
            throw WavError("sample " + std::to_string(v) + " out of int16 range");
        pcm.push_back(static_cast<std::int16_t>(r));
    }

    std::uint32_t data_len = static_cast<std::uint32_t>(pcm.size() * 2);
    std::uint32_t rate = static_cast<std::uint32_t>(std::lround(signal.sample_rate_hz));

    std::vector<unsigned char> out;
    out.reserve(44 + data_len);
    out.insert(out.end(), {'R', 'I', 'F', 'F'});
    wr_u32(out, 36 + data_len);
    out.insert(out.end(), {'W', 'A', 'V', 'E'});
    out.insert(out.end(), {'f', 'm', 't', ' '});
    wr_u32(out, 16);
    wr_u16(out, 1);             // PCM
    wr_u16(out, 1);             // mono
    wr_u32(out, rate);
    wr_u32(out, rate * 2);      // byte rate
    wr_u16(out, 2);             // block align
    wr_u16(out, 16);            // bits per sample
    out.insert(out.end(), {'d', 'a', 't', 'a'});
    wr_u32(out, data_len);
    for (std::int16_t s : pcm)
        wr_u16(out, static_cast<std::uint16_t>(s));

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw WavError("cannot open '" + path.string() + "' for writing");
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!f)
        throw WavError("write failed for '" + path.string() + "'");
}

} // namespace ftk
