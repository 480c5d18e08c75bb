#include "mdlp/imageio.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

namespace mdlp {
namespace {

ChannelImage channel_from_plane(const cv::Mat& plane, int channel) {
    ChannelImage out = make_channel(plane.cols, plane.rows, 0, channel);
    for (int r = 0; r < plane.rows; ++r) {
        const std::uint8_t* row = plane.ptr<std::uint8_t>(r);
        std::copy(row, row + plane.cols, out.pixels.begin() + static_cast<std::size_t>(r) * plane.cols);
    }
    return out;
}

}  // namespace

MultiChannelImage load_image(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
        throw IoError("cannot open " + path.string() + ": no such file");
    }

    cv::Mat raw;
    try {
        raw = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
    } catch (const cv::Exception& e) {
        throw FormatError("cannot decode " + path.string() + ": " + e.err);
    }
    if (raw.empty()) {
        throw FormatError("cannot decode " + path.string());
    }

    cv::Mat img8;
    switch (raw.depth()) {
        case CV_8U: img8 = raw; break;
        case CV_16U: raw.convertTo(img8, CV_8U, 255.0 / 65535.0); break;
        default:
            throw FormatError("unsupported pixel depth in " + path.string());
    }

    std::vector<cv::Mat> planes;
    cv::split(img8, planes);

    MultiChannelImage image;
    if (planes.size() == 1) {
        image.channels.push_back(channel_from_plane(planes[0], 0));
    } else if (planes.size() == 3 || planes.size() == 4) {
        // OpenCV decodes interleaved B, G, R(, A); expose R, G, B.
        image.channels.push_back(channel_from_plane(planes[2], 0));
        image.channels.push_back(channel_from_plane(planes[1], 1));
        image.channels.push_back(channel_from_plane(planes[0], 2));
    } else {
        throw FormatError("unsupported channel count " + std::to_string(planes.size()) +
                          " in " + path.string());
    }
    return image;
}

void save_image(const MultiChannelImage& image, const std::filesystem::path& path) {
    require_uniform_channels(image);
    int channels = image.channel_count();
    if (channels != 1 && channels != 3) {
        throw ShapeError("can only encode 1- or 3-channel images, got " +
                         std::to_string(channels));
    }

    cv::Mat mat;
    if (channels == 1) {
        mat = cv::Mat(image.height(), image.width(), CV_8UC1);
        for (int r = 0; r < image.height(); ++r) {
            for (int c = 0; c < image.width(); ++c) {
                mat.at<std::uint8_t>(r, c) = image.channels[0].at(r, c);
            }
        }
    } else {
        mat = cv::Mat(image.height(), image.width(), CV_8UC3);
        for (int r = 0; r < image.height(); ++r) {
            for (int c = 0; c < image.width(); ++c) {
                mat.at<cv::Vec3b>(r, c) = cv::Vec3b(image.channels[2].at(r, c),
                                                    image.channels[1].at(r, c),
                                                    image.channels[0].at(r, c));
            }
        }
    }

    bool written = false;
    try {
        written = cv::imwrite(path.string(), mat);
    } catch (const cv::Exception& e) {
        throw IoError("cannot write " + path.string() + ": " + e.err);
    }
    if (!written) {
        throw IoError("cannot write " + path.string());
    }
}

}  // namespace mdlp
