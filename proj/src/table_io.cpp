#include "liouville/arith_table.hpp"

#include "liouville/errors.hpp"

#include <zlib.h>

#include <array>
#include <cstring>
#include <fstream>

namespace liouville {

namespace {

constexpr std::array<char, 8> kMagic = {'A', 'R', 'I', 'T', 'H', 'v', '1', '\0'};

struct Header {
    std::array<char, 8> magic;
    std::uint64_t limit;
    std::uint64_t checksum;
};

template <typename T>
uLong crc_update(uLong crc, const std::vector<T>& column) {
    return crc32_z(crc, reinterpret_cast<const Bytef*>(column.data()), column.size() * sizeof(T));
}

template <typename T>
void write_column(std::ofstream& out, const std::vector<T>& column) {
    out.write(reinterpret_cast<const char*>(column.data()),
              static_cast<std::streamsize>(column.size() * sizeof(T)));
}

template <typename T>
void read_column(std::ifstream& in, std::vector<T>& column) {
    in.read(reinterpret_cast<char*>(column.data()),
            static_cast<std::streamsize>(column.size() * sizeof(T)));
    if (!in) throw TableFormatError("table cache truncated");
}

}  // namespace

void ArithTable::save(const std::filesystem::path& path) const {
    uLong crc = crc32_z(0L, Z_NULL, 0);
    crc = crc_update(crc, spf_);
    crc = crc_update(crc, lambda_);
    crc = crc_update(crc, mu_);
    crc = crc_update(crc, dcount_);
    crc = crc_update(crc, beta_);
    crc = crc_update(crc, nu_);
    crc = crc_update(crc, nu_cumsum_);

    Header header{kMagic, static_cast<std::uint64_t>(limit_), static_cast<std::uint64_t>(crc)};
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw TableFormatError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(&header), sizeof(header));
    write_column(out, spf_);
    write_column(out, lambda_);
    write_column(out, mu_);
    write_column(out, dcount_);
    write_column(out, beta_);
    write_column(out, nu_);
    write_column(out, nu_cumsum_);
    if (!out) throw TableFormatError("write to " + path.string() + " failed");
}

ArithTable ArithTable::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TableFormatError("cannot open " + path.string());
    Header header{};
    in.read(reinterpret_cast<char*>(&header), sizeof(header));
    if (!in || header.magic != kMagic) throw TableFormatError(path.string() + ": bad magic");
    if (header.limit < 1 || header.limit > 4'000'000'000ULL) {
        throw TableFormatError(path.string() + ": implausible limit");
    }

    ArithTable t;
    t.allocate(static_cast<std::int64_t>(header.limit));
    read_column(in, t.spf_);
    read_column(in, t.lambda_);
    read_column(in, t.mu_);
    read_column(in, t.dcount_);
    read_column(in, t.beta_);
    read_column(in, t.nu_);
    read_column(in, t.nu_cumsum_);
    if (in.peek() != std::ifstream::traits_type::eof()) {
        throw TableFormatError(path.string() + ": trailing bytes");
    }

    uLong crc = crc32_z(0L, Z_NULL, 0);
    crc = crc_update(crc, t.spf_);
    crc = crc_update(crc, t.lambda_);
    crc = crc_update(crc, t.mu_);
    crc = crc_update(crc, t.dcount_);
    crc = crc_update(crc, t.beta_);
    crc = crc_update(crc, t.nu_);
    crc = crc_update(crc, t.nu_cumsum_);
    if (static_cast<std::uint64_t>(crc) != header.checksum) {
        throw TableFormatError(path.string() + ": checksum mismatch");
    }

    t.compute_envelope();
    return t;
}

}  // namespace liouville
