#include "ridge/image.hpp"

#include <stdexcept>
#include <string>

namespace ridge {

Image::Image(std::size_t height, std::size_t width, Gray fill)
    : height_(height), width_(width), pixels_(height * width, fill)
{
}

Image::Image(std::size_t height, std::size_t width, std::vector<Gray> pixels)
    : height_(height), width_(width), pixels_(std::move(pixels))
{
    if (pixels_.size() != height_ * width_) {
        throw std::invalid_argument("image: expected " + std::to_string(height_ * width_) +
                                    " pixels, got " + std::to_string(pixels_.size()));
    }
}

Gray pixel_at(const Image& img, std::size_t i, std::size_t j)
{
    if (i >= img.height() || j >= img.width()) {
        throw std::out_of_range("pixel_at: (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") outside " + std::to_string(img.height()) + "x" +
                                std::to_string(img.width()));
    }
    return img(i, j);
}

Image transposed(const Image& img)
{
    std::vector<Gray> out(img.size());
    for (std::size_t i = 0; i < img.height(); ++i) {
        for (std::size_t j = 0; j < img.width(); ++j) {
            out[j * img.height() + i] = img(i, j);
        }
    }
    return Image(img.width(), img.height(), std::move(out));
}

BlockGrid partition_blocks(const Image& img, std::size_t blockSize)
{
    if (blockSize == 0) {
        throw std::invalid_argument("partition_blocks: block size must be at least 1");
    }
    return BlockGrid{blockSize, img.height() / blockSize, img.width() / blockSize};
}

} // namespace ridge
