// rtdnn/wav.hpp
//
// Copyright 2026 The rtdnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Minimal RIFF/WAVE I/O: PCM 16-bit signed little-endian, mono only.
// Samples are exchanged as doubles in [-1, 1) with scale 1/32768.

#ifndef RTDNN_WAV_HPP_
#define RTDNN_WAV_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "rtdnn/common.hpp"

namespace rtdnn {

struct WavData {
  std::vector<double> samples;
  int sample_rate = 0;
};

namespace wav_detail {

inline void put_u32(std::string& s, uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
inline void put_u16(std::string& s, uint16_t v) {
  for (int i = 0; i < 2; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
inline uint32_t get_u32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}
inline uint16_t get_u16(const unsigned char* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace wav_detail

inline void write_wav(const std::string& path, std::span<const double> samples,
                      int sample_rate) {
  using namespace wav_detail;
  std::string out;
  const uint32_t data_bytes = static_cast<uint32_t>(samples.size() * 2);
  out += "RIFF";
  put_u32(out, 36 + data_bytes);
  out += "WAVEfmt ";
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<uint32_t>(sample_rate));
  put_u32(out, static_cast<uint32_t>(sample_rate * 2));
  put_u16(out, 2);
  put_u16(out, 16);
  out += "data";
  put_u32(out, data_bytes);
  for (double x : samples) {
    long v = std::lround(x * 32768.0);
    v = std::clamp(v, -32768L, 32767L);
    put_u16(out, static_cast<uint16_t>(static_cast<int16_t>(v)));
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw_data("cannot open '" + path + "' for writing");
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw_data("short write to '" + path + "'");
}

inline WavData read_wav(const std::string& path) {
  using namespace wav_detail;
  std::ifstream f(path, std::ios::binary);
  if (!f) throw_data("cannot open '" + path + "'");
  std::vector<unsigned char> raw((std::istreambuf_iterator<char>(f)),
                                 std::istreambuf_iterator<char>());
  if (raw.size() < 44 || std::memcmp(raw.data(), "RIFF", 4) != 0 ||
      std::memcmp(raw.data() + 8, "WAVE", 4) != 0)
    throw_data("'" + path + "' is not a RIFF/WAVE file");

  WavData wav;
  bool have_fmt = false, have_data = false;
  uint16_t channels = 0, bits = 0, format = 0;
  size_t pos = 12;
  while (pos + 8 <= raw.size()) {
    const unsigned char* hdr = raw.data() + pos;
    uint32_t chunk_size = get_u32(hdr + 4);
    size_t body = pos + 8;
    if (body + chunk_size > raw.size())
      throw_data("'" + path + "': truncated chunk");
    if (std::memcmp(hdr, "fmt ", 4) == 0 && chunk_size >= 16) {
      format = get_u16(raw.data() + body);
      channels = get_u16(raw.data() + body + 2);
      wav.sample_rate = static_cast<int>(get_u32(raw.data() + body + 4));
      bits = get_u16(raw.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      if (!have_fmt) throw_data("'" + path + "': data chunk before fmt");
      if (format != 1 || bits != 16)
        throw_data("'" + path + "': only PCM 16-bit is supported");
      if (channels != 1) throw_data("'" + path + "': only mono is supported");
      size_t n = chunk_size / 2;
      wav.samples.resize(n);
      for (size_t i = 0; i < n; ++i) {
        int16_t v = static_cast<int16_t>(get_u16(raw.data() + body + 2 * i));
        wav.samples[i] = static_cast<double>(v) / 32768.0;
      }
      have_data = true;
    }
    pos = body + chunk_size + (chunk_size & 1);  // chunks are word aligned
  }
  if (!have_data) throw_data("'" + path + "': no data chunk");
  return wav;
}

}  // namespace rtdnn

#endif  // RTDNN_WAV_HPP_
