#include "common/raster.hpp"

#include <cmath>
#include <cstring>

namespace cyclemix {

std::vector<uint8_t> raster_to_u8(const Raster& r) {
  std::vector<uint8_t> out(r.size());
  for (size_t i = 0; i < r.size(); ++i) out[i] = float_to_u8(r.data[i]);
  return out;
}

Raster raster_from_u8(const std::vector<uint8_t>& bytes, int c, int h, int w) {
  if (bytes.size() != static_cast<size_t>(c) * h * w)
    throw ValueError("raster_from_u8: byte count does not match " + std::to_string(c) + "x" +
                     std::to_string(h) + "x" + std::to_string(w));
  Raster r(c, h, w);
  for (size_t i = 0; i < bytes.size(); ++i) r.data[i] = u8_to_float(bytes[i]);
  return r;
}

Raster quantize_to_grid(const Raster& r) {
  Raster out(r.channels, r.height, r.width);
  for (size_t i = 0; i < r.size(); ++i) out.data[i] = u8_to_float(float_to_u8(r.data[i]));
  return out;
}

bool is_grid_aligned(const Raster& r) {
  for (float v : r.data) {
    if (u8_to_float(float_to_u8(v)) != v) return false;
  }
  return true;
}

bool in_unit_range(const Raster& r) {
  for (float v : r.data) {
    if (!(v >= 0.0f && v <= 1.0f)) return false;
  }
  return true;
}

void require_unit_range(const Raster& r, const std::string& what) {
  if (!in_unit_range(r)) throw ValueError(what + ": pixel values must lie in [0,1]");
}

bool bit_equal(const Raster& a, const Raster& b) {
  if (!a.same_shape(b)) return false;
  return std::memcmp(a.data.data(), b.data.data(), a.size() * sizeof(float)) == 0;
}

std::string content_key(const Raster& r) {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<uint64_t>(r.channels));
  mix(static_cast<uint64_t>(r.height));
  mix(static_cast<uint64_t>(r.width));
  for (float v : r.data) {
    h ^= float_to_u8(v);
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string key(16, '0');
  for (int i = 15; i >= 0; --i) {
    key[i] = digits[h & 0xf];
    h >>= 4;
  }
  return key;
}

}  // namespace cyclemix
