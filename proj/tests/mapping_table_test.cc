#include "farsinorm/mapping_table.h"

#include <gtest/gtest.h>

#include "farsinorm/resource_bundle.h"
#include "farsinorm/utf8.h"

namespace farsinorm {
namespace {

TEST(MappingTableTest, ParsesEscapesAndComments) {
  const auto t = MappingTable::parse(
      "# comment\n"
      "\\u0023\tmark\n"
      "a\tb\tnote ignored\n"
      "\n"
      "tab\\tx\t\\\\\n",
      "test");
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(*t.lookup(U"#"), U"mark");
  EXPECT_EQ(*t.lookup(U"a"), U"b");
  EXPECT_EQ(*t.lookup(U"tab\tx"), U"\\");
}

TEST(MappingTableTest, RejectsDuplicatesAndMissingColumns) {
  EXPECT_THROW(MappingTable::parse("a\tb\na\tc\n", "dup"), ResourceError);
  EXPECT_THROW(MappingTable::parse("lonely\n", "cols"), ResourceError);
}

TEST(MappingTableTest, LongestMatchFirst) {
  const auto t = MappingTable::parse("U\tx\nUS$\tdollar\n$\td\n", "t");
  const std::u32string text = U"US$5";
  auto m = t.match_at(text, 0);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->length, 3u);
  EXPECT_EQ(*m->replacement, U"dollar");
  EXPECT_EQ(t.apply(U"U$US$"), U"xddollar");
  EXPECT_FALSE(t.match_at(text, 3));
}

TEST(MappingTableTest, EmptyReplacementDeletes) {
  const auto t = MappingTable::parse("\\u200B\t\n", "zw");
  EXPECT_EQ(t.apply(U"a\u200Bb"), U"ab");
}

TEST(RangeSetTest, MergesAndLooksUp) {
  const auto r = RangeSet::parse("1F600-1F64F faces\n1F640-1F650\n2600\n", "emoji");
  EXPECT_TRUE(r.contains(U'\U0001F600'));
  EXPECT_TRUE(r.contains(U'\U0001F650'));
  EXPECT_TRUE(r.contains(U'\u2600'));
  EXPECT_FALSE(r.contains(U'\u2601'));
  EXPECT_EQ(r.ranges().size(), 2u);
}

TEST(ResourceBundleTest, EmbeddedHasEveryTable) {
  const auto& b = ResourceBundle::embedded();
  for (const char* name :
       {"tables/letters.tsv", "tables/digits.tsv", "tables/punctuation.tsv",
        "tables/entities.tsv", "tables/emoji_ranges.txt", "tables/symbols.tsv",
        "tables/currencies.tsv", "tables/abbreviations_fa.tsv", "templates/date.tpl",
        "templates/time.tpl", "lexicon/verbs.tsv", "lexicon/affixes.tsv"}) {
    EXPECT_TRUE(b.has(name)) << name;
  }
  EXPECT_THROW(b.get("tables/nope.tsv"), ResourceError);
}

TEST(ResourceBundleTest, MissingDirectoryIsAnError) {
  EXPECT_THROW(ResourceBundle::from_directory("/nonexistent/farsinorm"), ResourceError);
}

}  // namespace
}  // namespace farsinorm
