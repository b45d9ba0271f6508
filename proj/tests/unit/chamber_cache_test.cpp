#include <gtest/gtest.h>

#include <filesystem>

#include "braidslice/chamber_cache.hpp"
#include "braidslice/errors.hpp"

namespace braidslice {
namespace {

TEST(Sha256, KnownDigest) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(ChamberCache, RoundTrip) {
  const ArrangementSpec spec{4, false, false};
  const auto chambers = enumerate_chambers(spec);
  const std::string text = serialize_cache(spec, chambers);
  EXPECT_EQ(text.rfind("braidslice-chambers v1 m=4 augmented=0 cone=0 count=32 sha256=", 0), 0U);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  const ChamberCache back = parse_cache(text);
  EXPECT_EQ(back.spec, spec);
  ASSERT_EQ(back.chambers.size(), chambers.size());
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    EXPECT_EQ(back.chambers[i].sign, chambers[i].sign);
    EXPECT_EQ(back.chambers[i].witness, chambers[i].witness);
  }
  EXPECT_EQ(serialize_cache(back.spec, back.chambers), text);

  const auto path = std::filesystem::temp_directory_path() / "braidslice_cache_test.txt";
  save_cache(spec, chambers, path);
  EXPECT_EQ(load_cache(path).chambers.size(), 32U);
  std::filesystem::remove(path);
}

TEST(ChamberCache, DetectsTampering) {
  const ArrangementSpec spec{3, true, false};
  std::string text = serialize_cache(spec, enumerate_chambers(spec));
  std::string flipped = text;
  const auto body = flipped.find('\n') + 1;
  flipped[body] = flipped[body] == '+' ? '-' : '+';
  EXPECT_THROW(parse_cache(flipped), CorruptCache);

  std::string versioned = text;
  versioned.replace(versioned.find("v1"), 2, "v9");
  EXPECT_THROW(parse_cache(versioned), VersionMismatch);

  EXPECT_THROW(parse_cache("not a cache\n"), CorruptCache);
  EXPECT_THROW(parse_cache(text.substr(0, text.size() - 5)), CorruptCache);
  try {
    load_cache("/nonexistent/braidslice.cache");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCache);
  }
}

}  // namespace
}  // namespace braidslice
