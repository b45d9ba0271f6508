#include "braidslice/chamber_cache.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "braidslice/errors.hpp"

namespace braidslice {
namespace {

std::string witness_field(std::span<const Rat> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += w[i].num().get_str() + "/" + w[i].den().get_str();
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view field_value(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key) throw CorruptCache("cache header: expected '" + std::string(key) + "'");
  return token.substr(key.size());
}

long parse_long(std::string_view text) {
  if (text.empty() || text.size() > 18) throw CorruptCache("cache header: bad number");
  long v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw CorruptCache("cache header: bad number");
    v = v * 10 + (c - '0');
  }
  return v;
}

bool parse_flag(std::string_view text) {
  if (text == "0") return false;
  if (text == "1") return true;
  throw CorruptCache("cache header: flag must be 0 or 1");
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::kInternal, "sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

std::string serialize_cache(const ArrangementSpec& spec, std::span<const Chamber> chambers) {
  std::string body;
  for (const Chamber& c : chambers) {
    body += c.sign.str();
    body += '\t';
    body += witness_field(c.witness);
    body += '\n';
  }
  std::ostringstream header;
  header << kCacheMagic << ' ' << kCacheVersion << " m=" << spec.m << " augmented=" << (spec.augment_braid ? 1 : 0)
         << " cone=" << (spec.cone_restrict ? 1 : 0) << " count=" << chambers.size() << " sha256=" << sha256_hex(body)
         << '\n';
  return header.str() + body;
}

ChamberCache parse_cache(std::string_view text) {
  const std::size_t eol = text.find('\n');
  if (eol == std::string_view::npos) throw CorruptCache("cache has no header line");
  const auto tokens = split(text.substr(0, eol), ' ');
  if (tokens.empty() || tokens[0] != kCacheMagic) throw CorruptCache("not a chamber cache");
  if (tokens.size() < 2 || tokens[1] != kCacheVersion) {
    throw VersionMismatch("unsupported chamber cache version '" + std::string(tokens.size() > 1 ? tokens[1] : "") +
                          "' (expected " + std::string(kCacheVersion) + ")");
  }
  if (tokens.size() != 7) throw CorruptCache("cache header has the wrong number of fields");

  ChamberCache out;
  out.spec.m = static_cast<int>(parse_long(field_value(tokens[2], "m=")));
  out.spec.augment_braid = parse_flag(field_value(tokens[3], "augmented="));
  out.spec.cone_restrict = parse_flag(field_value(tokens[4], "cone="));
  const long count = parse_long(field_value(tokens[5], "count="));
  const std::string_view digest = field_value(tokens[6], "sha256=");
  if (out.spec.m < 2 || out.spec.m > kMaxArrangementSize) throw CorruptCache("cache header: m out of range");

  const std::string_view body = text.substr(eol + 1);
  if (sha256_hex(body) != digest) throw CorruptCache("cache checksum mismatch");
  if (!body.empty() && body.back() != '\n') throw CorruptCache("cache body is truncated");

  const std::size_t width = hyperplane_count(out.spec);
  std::size_t pos = 0;
  while (pos < body.size()) {
    const std::size_t end = body.find('\n', pos);
    const std::string_view line = body.substr(pos, end - pos);
    pos = end + 1;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) throw CorruptCache("cache line without a tab");
    const std::string_view signs = line.substr(0, tab);
    if (signs.size() != width) throw CorruptCache("cache line has the wrong sign-vector length");
    Chamber c;
    try {
      c.sign = SignVector::parse(out.spec.m, signs);
      for (std::string_view frac : split(line.substr(tab + 1), ',')) c.witness.push_back(Rat::parse(frac));
    } catch (const CorruptCache&) {
      throw;
    } catch (const std::exception& e) {
      throw CorruptCache(std::string("cache line is malformed: ") + e.what());
    }
    if (c.witness.size() != static_cast<std::size_t>(out.spec.m)) throw CorruptCache("cache witness has the wrong dimension");
    out.chambers.push_back(std::move(c));
  }
  if (out.chambers.size() != static_cast<std::size_t>(count)) throw CorruptCache("cache count does not match its body");
  return out;
}

void save_cache(const ArrangementSpec& spec, std::span<const Chamber> chambers, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorKind::kCache, "cannot open " + path.string() + " for writing");
  const std::string text = serialize_cache(spec, chambers);
  os.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!os) throw Error(ErrorKind::kCache, "failed writing " + path.string());
}

ChamberCache load_cache(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::kCache, "cannot open " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_cache(ss.str());
}

}  // namespace braidslice
