// Core raster types shared by every stage of the pipeline: 8-bit images,
// masked per-pixel maps, and the library error type.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpsweep {

enum class errc {
  file_missing,
  corrupt_stream,
  unsupported_format,
  out_of_range,
  dimension_mismatch,
  image_too_small,
  invalid_argument,
  io_failure,
  matcher_failed,
  external_failed,
  external_timeout,
  external_output,
  empty_dataset,
  unavailable,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::file_missing:       return "file_missing";
    case errc::corrupt_stream:     return "corrupt_stream";
    case errc::unsupported_format: return "unsupported_format";
    case errc::out_of_range:       return "out_of_range";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::image_too_small:    return "image_too_small";
    case errc::invalid_argument:   return "invalid_argument";
    case errc::io_failure:         return "io_failure";
    case errc::matcher_failed:     return "matcher_failed";
    case errc::external_failed:    return "external_failed";
    case errc::external_timeout:   return "external_timeout";
    case errc::external_output:    return "external_output";
    case errc::empty_dataset:      return "empty_dataset";
    case errc::unavailable:        return "unavailable";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// 8-bit raster, 1 (gray) or 3 (RGB) interleaved channels, row-major.
struct RasterImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> data;

  RasterImage() = default;
  RasterImage(int w, int h, int c, std::uint8_t fill = 0)
      : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * h * c, fill) {}

  std::uint8_t& at(int x, int y, int c = 0) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t at(int x, int y, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

  bool same_size(const RasterImage& o) const {
    return width == o.width && height == o.height;
  }
};

/// Per-pixel values with a validity mask. Invalid entries are never read by
/// the masked reductions downstream.
template <typename T>
struct PixelMap {
  int width = 0;
  int height = 0;
  std::vector<T> values;
  std::vector<std::uint8_t> valid;

  PixelMap() = default;
  PixelMap(int w, int h, T fill = T{}, bool all_valid = true)
      : width(w), height(h),
        values(static_cast<std::size_t>(w) * h, fill),
        valid(static_cast<std::size_t>(w) * h, all_valid ? 1 : 0) {}

  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }

  T& at(int x, int y) { return values[index(x, y)]; }
  T at(int x, int y) const { return values[index(x, y)]; }
  bool is_valid(int x, int y) const { return valid[index(x, y)] != 0; }

  void set(int x, int y, T v) {
    values[index(x, y)] = v;
    valid[index(x, y)] = 1;
  }
  void invalidate(int x, int y) {
    values[index(x, y)] = T{};
    valid[index(x, y)] = 0;
  }

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

  std::size_t valid_count() const {
    std::size_t n = 0;
    for (auto v : valid) n += v != 0;
    return n;
  }

  bool same_size(const PixelMap& o) const {
    return width == o.width && height == o.height;
  }
  template <typename U>
  bool same_size(const PixelMap<U>& o) const {
    return width == o.width && height == o.height;
  }
};

using DisparityMap = PixelMap<float>;
using ConfidenceMap = PixelMap<double>;
using UnreliabilityMap = PixelMap<double>;

/// Rec.601 integer luma used by the built-in matcher for RGB inputs.
inline std::vector<std::uint8_t> to_grayscale(const RasterImage& img) {
  std::vector<std::uint8_t> gray(img.pixel_count());
  if (img.channels == 1) {
    gray.assign(img.data.begin(), img.data.end());
    return gray;
  }
  const std::uint8_t* p = img.data.data();
  for (std::size_t i = 0; i < gray.size(); ++i, p += img.channels) {
    unsigned luma = (299u * p[0] + 587u * p[1] + 114u * p[2] + 500u) / 1000u;
    gray[i] = static_cast<std::uint8_t>(luma);
  }
  return gray;
}

}  // namespace dpsweep
