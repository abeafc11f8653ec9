#include "farsinorm/pipeline.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace farsinorm {
namespace {

const Normalizer& fixed() {
  static const Normalizer n;
  return n;
}

bool has(const std::vector<std::string>& v, std::string_view s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

TEST(PipelineConfigTest, PassRegistry) {
  PipelineConfig c;
  EXPECT_TRUE(c.enabled("emojis"));
  EXPECT_TRUE(c.enabled("national_id"));
  c.disable("date");
  EXPECT_FALSE(c.enabled("date"));
  EXPECT_THROW(c.disable("nope"), std::invalid_argument);
  c.enabled_passes.insert("bogus");
  EXPECT_THROW(Normalizer{c}, std::invalid_argument);
  EXPECT_EQ(general_pass_names().size(), 5u);
  EXPECT_EQ(speech_pass_names().size(), 16u);
}

TEST(NormalizeGeneralTest, Examples) {
  EXPECT_EQ(fixed().normalize_general(std::string_view("عدد ⑥ ٪😀")), "عدد ۶ %");
  EXPECT_EQ(fixed().normalize_general(std::string_view("")), "");
  const std::string canonical = "این متن ۱۲ درصد است.";
  EXPECT_EQ(fixed().normalize_general(std::string_view(canonical)), canonical);
  // Folding can reveal a new entity; the result is still stable.
  const std::string once = fixed().normalize_general(std::string_view("＆amp;lt;"));
  EXPECT_EQ(once, "<");
}

TEST(NormalizeGeneralTest, DisabledPassesAreSkipped) {
  PipelineConfig c;
  c.disable("digits");
  c.disable("emojis");
  const Normalizer n(c);
  EXPECT_EQ(n.normalize_general(std::string_view("عدد 6 😀")), "عدد 6 😀");
}

TEST(NormalizeSpeechTest, Examples) {
  EXPECT_EQ(fixed().normalize_speech(std::string_view("ساعت 8:00")), "ساعت هشت");
  EXPECT_EQ(fixed().normalize_speech(std::string_view("قیمت 25$")), "قیمت بیست و پنج دلار");
  EXPECT_EQ(fixed().normalize_speech(std::string_view("")), "");
  EXPECT_EQ(fixed().normalize_speech(std::string_view("ر.ک فصل ۲")), "رجوع کنید فصل دو");
  EXPECT_EQ(fixed().normalize_speech(std::string_view("عدد ۳.۵")),
            "عدد سه ممیز پنج دهم");
}

TEST(NormalizeSpeechTest, InsertsSpacesAtGluedBoundaries) {
  EXPECT_EQ(fixed().normalize_speech(std::string_view("۵۰%")), "پنجاه درصد");
  EXPECT_EQ(fixed().normalize_speech(std::string_view("صفحه۱۲")), "صفحه دوازده");
}

TEST(NormalizeSpeechTest, DisabledClassIsLeftAsWritten) {
  PipelineConfig c;
  c.disable("time");
  const Normalizer n(c);
  EXPECT_EQ(n.normalize_speech(std::string_view("ساعت 8:00 و 5")), "ساعت ۸:۰۰ و پنج");
}

TEST(NormalizeSpeechTest, UrlDigitsAreRead) {
  const std::string y = fixed().normalize_speech(std::string_view("سایت wpc.be1e.net"));
  EXPECT_EQ(y, "سایت wpc dot be یک e dot net");
}

TEST(NormalizeSpeechTest, SeededRandomVariesAndRepeats) {
  PipelineConfig c;
  c.policy = PolicyKind::kSeededRandom;
  const Normalizer n(c);
  std::set<std::string> seen;
  for (uint64_t s = 0; s < 40; ++s) {
    std::mt19937_64 a(s), b(s);
    const std::string x = n.normalize_speech(std::string_view("1400-07-25"), &a);
    EXPECT_EQ(x, n.normalize_speech(std::string_view("1400-07-25"), &b));
    seen.insert(x);
  }
  EXPECT_GT(seen.size(), 3u);
}

TEST(EnumerateTest, Examples) {
  const auto t = fixed().enumerate_verbalizations("11:35");
  EXPECT_TRUE(has(t, "یازده و سی و پنج"));
  EXPECT_TRUE(has(t, "یازده و سی و پنج دقیقه"));
  const auto plain = fixed().enumerate_verbalizations("سلام");
  EXPECT_EQ(plain, (std::vector<std::string>{"سلام"}));
  const auto d = fixed().enumerate_verbalizations("1400-07-25");
  EXPECT_GE(d.size(), 4u);
  EXPECT_TRUE(has(d, "بیست و پنج مهر ماه هزار و چهارصد"));
  EXPECT_TRUE(has(d, "بیست و پنجم مهر هزار و چهارصد"));
  EXPECT_TRUE(has(d, "بیست و پنج مهر سال هزار و چهارصد"));
  EXPECT_TRUE(has(d, "بیست و پنج هفت هزار و چهارصد"));
  EXPECT_EQ(d.front(), fixed().normalize_speech(std::string_view("1400-07-25")));
}

TEST(EnumerateTest, CrossProductIsDeduplicated) {
  const auto both = fixed().enumerate_verbalizations("11:35 و 11:35");
  const auto one = fixed().enumerate_verbalizations("11:35");
  EXPECT_EQ(both.size(), one.size() * one.size());
  std::set<std::string> u(both.begin(), both.end());
  EXPECT_EQ(u.size(), both.size());
}

TEST(EnumerateTest, CapIsEnforcedWithCount) {
  // 10 date forms to the fourth power is over the cap.
  const std::string text = "1400-07-25 1400-07-26 1400-07-27 1400-07-28 1400-07-29";
  try {
    fixed().enumerate_verbalizations(text);
    FAIL() << "expected EnumerationLimitError";
  } catch (const EnumerationLimitError& e) {
    EXPECT_GT(e.count(), kMaxEnumeration);
  }
}

TEST(SplitTest, UsesConfiguredThreshold) {
  PipelineConfig c;
  c.verb_split_threshold = 4;
  EXPECT_EQ(Normalizer(c).split("او به خانه رفت سپس غذا خورد").size(), 2u);
  EXPECT_EQ(fixed().split("او به خانه رفت سپس غذا خورد").size(), 1u);
}

TEST(StreamingTest, LineByLineEqualsWhole) {
  const std::vector<std::string> lines = {"ساعت 8:00", "قیمت 25$", "کد 0523924984",
                                          "سایت www.a.ir"};
  std::string whole;
  for (const auto& l : lines) whole += l + "\n";
  std::string joined;
  for (const auto& l : lines) joined += fixed().normalize_speech(std::string_view(l)) + "\n";
  EXPECT_EQ(fixed().normalize_speech(std::string_view(whole)), joined);
}

}  // namespace
}  // namespace farsinorm
