#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gisweep {

// Row-major interleaved raster. Sample (x, y, c) lives at
// data[(y * width + x) * channels + c].
template <typename T>
class Image {
 public:
  Image() = default;

  Image(int width, int height, int channels = 1, T fill = T{}) {
    if (width <= 0 || height <= 0 || channels <= 0)
      throw std::invalid_argument("Image: dimensions must be positive");
    width_ = width;
    height_ = height;
    channels_ = channels;
    data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }
  bool empty() const { return data_.empty(); }

  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  bool same_shape(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_ &&
           channels_ == other.channels_;
  }

  T& at(int x, int y, int c = 0) { return data_[index(x, y, c)]; }
  const T& at(int x, int y, int c = 0) const { return data_[index(x, y, c)]; }

  T* row(int y) {
    return data_.data() + static_cast<std::size_t>(y) * width_ * channels_;
  }
  const T* row(int y) const {
    return data_.data() + static_cast<std::size_t>(y) * width_ * channels_;
  }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t index(int x, int y, int c) const {
    assert(in_bounds(x, y) && c >= 0 && c < channels_);
    return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<T> data_;
};

using ImageU8 = Image<std::uint8_t>;
using ImageF = Image<float>;

}  // namespace gisweep
