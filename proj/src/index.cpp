#include "mdlp/index.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace mdlp {
namespace {

constexpr std::size_t kHeaderSize = 4 + 4 * 4 + 1 + 8 + 8;  // 37 bytes

void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
    put_u32(out, static_cast<std::uint32_t>(v & 0xffffffffu));
    put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

void put_f32(std::string& out, float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    put_u32(out, bits);
}

// Sequential little-endian reader that reports shortfalls as truncation.
class Reader {
public:
    explicit Reader(std::span<const std::byte> bytes) : bytes_(bytes) {}

    void require(std::uint64_t count, const char* what) const {
        if (count > bytes_.size() - offset_) {
            throw TruncationError(std::string("index file ends inside ") + what +
                                  " (have " + std::to_string(bytes_.size()) +
                                  " bytes, need " + std::to_string(offset_ + count) + ")");
        }
    }

    std::uint8_t u8(const char* what) {
        require(1, what);
        return static_cast<std::uint8_t>(bytes_[offset_++]);
    }

    std::uint32_t u32(const char* what) {
        require(4, what);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes_[offset_ + i])) << (8 * i);
        }
        offset_ += 4;
        return v;
    }

    std::uint64_t u64(const char* what) {
        std::uint64_t lo = u32(what);
        std::uint64_t hi = u32(what);
        return lo | (hi << 32);
    }

    std::string bytes(std::uint64_t count, const char* what) {
        require(count, what);
        std::string s(reinterpret_cast<const char*>(bytes_.data()) + offset_,
                      static_cast<std::size_t>(count));
        offset_ += count;
        return s;
    }

    void floats(float* dst, std::uint64_t count, const char* what) {
        require(count * 4, what);
        std::memcpy(dst, bytes_.data() + offset_, static_cast<std::size_t>(count) * 4);
        offset_ += count * 4;
    }

    std::size_t offset() const { return offset_; }
    std::size_t size() const { return bytes_.size(); }

private:
    std::span<const std::byte> bytes_;
    std::size_t offset_ = 0;
};

void validate_header(const IndexHeader& header) {
    if (header.channels < 1 || header.channels > 255) {
        throw FormatError("index header declares " + std::to_string(header.channels) +
                          " channels");
    }
    if (header.neighbors < 4 || header.neighbors > 16 || header.neighbors % 2 != 0) {
        throw FormatError("index header declares invalid neighbor count " +
                          std::to_string(header.neighbors));
    }
    if (header.radius < 1) {
        throw FormatError("index header declares radius 0");
    }
    mode_from_header(header);
}

void validate_entries(const IndexData& index) {
    for (const IndexEntry& entry : index.entries) {
        if (entry.feature.size() != index.header.feature_dim) {
            throw ConsistencyError("entry '" + entry.id + "' has dimension " +
                                   std::to_string(entry.feature.size()) +
                                   ", index dimension is " +
                                   std::to_string(index.header.feature_dim));
        }
    }
}

[[noreturn]] void throw_errno(const std::string& action, const std::filesystem::path& path) {
    throw IoError(action + " " + path.string() + ": " + std::strerror(errno));
}

}  // namespace

DescriptorMode mode_from_header(const IndexHeader& header) {
    std::uint64_t block = header.channels * (std::uint64_t{1} << header.neighbors);
    if (block != 0 && header.feature_dim % block == 0) {
        switch (header.feature_dim / block) {
            case 1: return DescriptorMode::kLbpOnly;
            case 4: return DescriptorMode::kLmepOnly;
            case 5: return DescriptorMode::kMdlp;
            default: break;
        }
    }
    throw ConsistencyError("feature dimension " + std::to_string(header.feature_dim) +
                           " does not match any descriptor mode for " +
                           std::to_string(header.channels) + " channels and " +
                           std::to_string(header.neighbors) + " neighbors");
}

std::uint64_t serialized_size(const IndexData& index) {
    std::uint64_t total = kHeaderSize;
    for (const IndexEntry& entry : index.entries) {
        total += 4 + entry.id.size() + 4 + entry.feature.size() * 4;
    }
    return total;
}

std::uint64_t save_index(const IndexData& index, const std::filesystem::path& path) {
    IndexHeader header = index.header;
    header.version = kIndexVersion;
    header.entry_count = index.entries.size();
    validate_header(header);
    validate_entries(index);

    std::string buffer;
    buffer.reserve(static_cast<std::size_t>(serialized_size(index)));
    buffer.append(kIndexMagic, 4);
    put_u32(buffer, header.version);
    put_u32(buffer, header.channels);
    put_u32(buffer, header.neighbors);
    put_u32(buffer, header.radius);
    buffer.push_back(header.normalized ? 1 : 0);
    put_u64(buffer, header.entry_count);
    put_u64(buffer, header.feature_dim);

    for (const IndexEntry& entry : index.entries) {
        put_u32(buffer, static_cast<std::uint32_t>(entry.id.size()));
        buffer.append(entry.id);
        put_u32(buffer, entry.category);
        for (float v : entry.feature) put_f32(buffer, v);
    }

    // Write-new-then-rename so readers never observe a partial index.
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
    if (fd < 0) throw_errno("cannot create", tmp);

    const char* data = buffer.data();
    std::size_t remaining = buffer.size();
    while (remaining > 0) {
        ssize_t written = ::write(fd, data, remaining);
        if (written < 0) {
            if (errno == EINTR) continue;
            int saved = errno;
            ::close(fd);
            ::unlink(tmp.c_str());
            errno = saved;
            throw_errno("cannot write", tmp);
        }
        data += written;
        remaining -= static_cast<std::size_t>(written);
    }
    if (::fsync(fd) != 0) {
        int saved = errno;
        ::close(fd);
        ::unlink(tmp.c_str());
        errno = saved;
        throw_errno("cannot fsync", tmp);
    }
    ::close(fd);

    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        int saved = errno;
        ::unlink(tmp.c_str());
        errno = saved;
        throw_errno("cannot rename into", path);
    }

    std::filesystem::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    int dirfd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY);
    if (dirfd >= 0) {
        ::fsync(dirfd);
        ::close(dirfd);
    }
    return buffer.size();
}

IndexData parse_index(std::span<const std::byte> bytes) {
    Reader reader(bytes);

    std::string magic = reader.bytes(4, "magic");
    if (std::memcmp(magic.data(), kIndexMagic, 4) != 0) {
        throw FormatError("not an index file (magic '" + magic + "')");
    }

    IndexData index;
    index.header.version = reader.u32("version");
    if (index.header.version != kIndexVersion) {
        throw VersionError("index file version " + std::to_string(index.header.version) +
                           " is not supported (expected version " +
                           std::to_string(kIndexVersion) + ")");
    }
    index.header.channels = reader.u32("header");
    index.header.neighbors = reader.u32("header");
    index.header.radius = reader.u32("header");
    std::uint8_t normalized = reader.u8("header");
    if (normalized > 1) {
        throw FormatError("normalization flag must be 0 or 1, got " +
                          std::to_string(normalized));
    }
    index.header.normalized = normalized == 1;
    index.header.entry_count = reader.u64("header");
    index.header.feature_dim = reader.u64("header");
    validate_header(index.header);

    index.entries.reserve(static_cast<std::size_t>(
        std::min<std::uint64_t>(index.header.entry_count, 1 << 20)));
    for (std::uint64_t i = 0; i < index.header.entry_count; ++i) {
        IndexEntry entry;
        std::uint32_t id_len = reader.u32("entry id length");
        entry.id = reader.bytes(id_len, "entry id");
        entry.category = reader.u32("entry category");
        entry.feature.resize(static_cast<std::size_t>(index.header.feature_dim));
        reader.floats(entry.feature.data(), index.header.feature_dim, "entry feature");
        index.entries.push_back(std::move(entry));
    }

    if (reader.offset() != reader.size()) {
        throw FormatError("index file has " +
                          std::to_string(reader.size() - reader.offset()) +
                          " trailing bytes after the last entry");
    }
    return index;
}

IndexData load_index(const std::filesystem::path& path) {
    int fd = ::open(path.c_str(), O_RDONLY);
    if (fd < 0) throw_errno("cannot open", path);

    std::string buffer;
    char chunk[1 << 16];
    for (;;) {
        ssize_t n = ::read(fd, chunk, sizeof(chunk));
        if (n < 0) {
            if (errno == EINTR) continue;
            int saved = errno;
            ::close(fd);
            errno = saved;
            throw_errno("cannot read", path);
        }
        if (n == 0) break;
        buffer.append(chunk, static_cast<std::size_t>(n));
    }
    ::close(fd);

    return parse_index(std::as_bytes(std::span<const char>(buffer)));
}

}  // namespace mdlp
