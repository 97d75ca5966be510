/*
 * Copyright 2026 The moteval Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "moteval/zip.hpp"

#include <zlib.h>

#include <cstdint>
#include <fstream>
#include <sstream>

namespace moteval {

namespace {

constexpr std::uint32_t kLocalSig = 0x04034b50;
constexpr std::uint32_t kCentralSig = 0x02014b50;
constexpr std::uint32_t kEndSig = 0x06054b50;

std::uint32_t read_u16(std::string_view b, std::size_t off) {
  if (off + 2 > b.size()) throw ZipError("truncated archive");
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[off])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[off + 1])) << 8;
}

std::uint32_t read_u32(std::string_view b, std::size_t off) {
  return read_u16(b, off) | read_u16(b, off + 2) << 16;
}

void put_u16(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
  put_u16(out, v & 0xffff);
  put_u16(out, v >> 16);
}

std::uint32_t crc_of(std::string_view data) {
  return static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
}

std::string inflate_raw(std::string_view compressed, std::size_t expected_size) {
  std::string out(expected_size, '\0');
  z_stream zs{};
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) throw ZipError("inflateInit2 failed");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
  zs.avail_in = static_cast<uInt>(compressed.size());
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&zs, Z_FINISH);
  const auto produced = zs.total_out;
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || produced != expected_size) {
    throw ZipError("corrupt deflate stream");
  }
  return out;
}

}  // namespace

bool looks_like_zip(std::string_view bytes) {
  return bytes.size() >= 4 && read_u32(bytes, 0) == kLocalSig;
}

std::vector<ZipEntry> read_zip(std::string_view bytes) {
  if (bytes.size() < 22) throw ZipError("not a zip archive");
  std::size_t eocd = std::string_view::npos;
  const std::size_t lowest = bytes.size() > 22 + 0xffff ? bytes.size() - 22 - 0xffff : 0;
  for (std::size_t pos = bytes.size() - 22 + 1; pos-- > lowest;) {
    if (read_u32(bytes, pos) == kEndSig) {
      eocd = pos;
      break;
    }
  }
  if (eocd == std::string_view::npos) throw ZipError("end of central directory not found");

  const std::uint32_t count = read_u16(bytes, eocd + 10);
  std::size_t cursor = read_u32(bytes, eocd + 16);
  std::vector<ZipEntry> entries;
  entries.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    if (read_u32(bytes, cursor) != kCentralSig) throw ZipError("bad central directory entry");
    const std::uint32_t flags = read_u16(bytes, cursor + 8);
    const std::uint32_t method = read_u16(bytes, cursor + 10);
    const std::uint32_t crc = read_u32(bytes, cursor + 16);
    const std::uint32_t csize = read_u32(bytes, cursor + 20);
    const std::uint32_t usize = read_u32(bytes, cursor + 24);
    const std::uint32_t name_len = read_u16(bytes, cursor + 28);
    const std::uint32_t extra_len = read_u16(bytes, cursor + 30);
    const std::uint32_t comment_len = read_u16(bytes, cursor + 32);
    const std::uint32_t local = read_u32(bytes, cursor + 42);
    if (cursor + 46 + name_len > bytes.size()) throw ZipError("truncated archive");
    ZipEntry entry{std::string(bytes.substr(cursor + 46, name_len)), {}};
    cursor += 46 + name_len + extra_len + comment_len;

    if (flags & 0x1) throw ZipError("encrypted member: " + entry.name);
    if (read_u32(bytes, local) != kLocalSig) throw ZipError("bad local header: " + entry.name);
    const std::size_t data_off =
        local + 30 + read_u16(bytes, local + 26) + read_u16(bytes, local + 28);
    if (data_off + csize > bytes.size()) throw ZipError("truncated member: " + entry.name);
    const std::string_view payload = bytes.substr(data_off, csize);

    if (method == 0) {
      entry.data = std::string(payload);
    } else if (method == 8) {
      entry.data = inflate_raw(payload, usize);
    } else {
      throw ZipError("unsupported compression method " + std::to_string(method) + ": " +
                     entry.name);
    }
    if (crc_of(entry.data) != crc) throw ZipError("checksum mismatch: " + entry.name);
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ZipEntry> read_zip_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ZipError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_zip(ss.str());
}

std::string make_zip(std::span<const ZipEntry> entries) {
  std::string out;
  std::string central;
  for (const auto& e : entries) {
    const auto offset = static_cast<std::uint32_t>(out.size());
    const std::uint32_t crc = crc_of(e.data);
    const auto size = static_cast<std::uint32_t>(e.data.size());
    const auto name_len = static_cast<std::uint32_t>(e.name.size());

    put_u32(out, kLocalSig);
    put_u16(out, 20);
    put_u16(out, 0);
    put_u16(out, 0);
    put_u16(out, 0);
    put_u16(out, 0x21);
    put_u32(out, crc);
    put_u32(out, size);
    put_u32(out, size);
    put_u16(out, name_len);
    put_u16(out, 0);
    out += e.name;
    out += e.data;

    put_u32(central, kCentralSig);
    put_u16(central, 20);
    put_u16(central, 20);
    put_u16(central, 0);
    put_u16(central, 0);
    put_u16(central, 0);
    put_u16(central, 0x21);
    put_u32(central, crc);
    put_u32(central, size);
    put_u32(central, size);
    put_u16(central, name_len);
    put_u16(central, 0);
    put_u16(central, 0);
    put_u16(central, 0);
    put_u16(central, 0);
    put_u32(central, 0);
    put_u32(central, offset);
    central += e.name;
  }
  const auto cd_offset = static_cast<std::uint32_t>(out.size());
  out += central;
  put_u32(out, kEndSig);
  put_u16(out, 0);
  put_u16(out, 0);
  put_u16(out, static_cast<std::uint32_t>(entries.size()));
  put_u16(out, static_cast<std::uint32_t>(entries.size()));
  put_u32(out, static_cast<std::uint32_t>(central.size()));
  put_u32(out, cd_offset);
  put_u16(out, 0);
  return out;
}

}  // namespace moteval
