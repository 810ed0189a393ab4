#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "fcd/canonical.hpp"
#include "fcd/dynkin.hpp"
#include "fcd/fc_enum.hpp"
#include "fcd/homogeneity.hpp"

using fcd::Word;

TEST_CASE("reference, serial and parallel paths agree") {
  for (int n : {4, 5, 6}) {
    const auto reference = fcd::fc_words_reference(n);
    CHECK(fcd::fc_words_serial(n) == reference);
    for (int jobs : {1, 2, 4}) CHECK(fcd::fc_words(n, jobs) == reference);
    CHECK(fcd::fc_count(n) == reference.size());
    CHECK(fcd::fc_count(n, 3) == reference.size());
  }
}

TEST_CASE("counts for small ranks") {
  CHECK(fcd::fc_count(4) == 48);
  CHECK(fcd::fc_count(5) == 167);
  CHECK(fcd::fc_count(6) == 593);
  CHECK(fcd::fc_count(7) == 2144);
  CHECK_THROWS_AS(fcd::fc_words(3), std::invalid_argument);
  CHECK_THROWS_AS(fcd::fc_count(0), std::invalid_argument);
}

TEST_CASE("output is labeled, homogeneous and in enumeration order") {
  const auto g = fcd::DynkinGraph::type_d(5);
  const auto words = fcd::fc_words(5);
  REQUIRE(!words.empty());
  CHECK(words.front().form.is_identity());
  CHECK(words.front().word.empty());
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(fcd::realize(words[i].form) == words[i].word);
    CHECK(fcd::is_homogeneous(words[i].word, g));
    if (i + 1 < words.size())
      CHECK(fcd::form_less(words[i].form, words[i + 1].form));
  }
}

TEST_CASE("linear-diagram enumeration") {
  CHECK(fcd::fc_words_type_a(1).size() == 2);
  CHECK(fcd::fc_words_type_a(2).size() == 5);
  CHECK(fcd::fc_words_type_a(3).size() == 14);
  CHECK(fcd::fc_words_type_a(4).size() == 42);
  CHECK(fcd::fc_words_type_a(5).size() == 132);
  CHECK_THROWS_AS(fcd::fc_words_type_a(0), std::invalid_argument);

  // Filtering every prefix-only form by hand gives the same set.
  for (int rank : {2, 3, 4}) {
    const auto g = fcd::DynkinGraph::type_a(rank);
    std::set<Word> expected;
    Word cur;
    auto levels = [&](auto&& self, int k) -> void {
      if (k > rank) {
        if (fcd::is_homogeneous(cur, g)) expected.insert(cur);
        return;
      }
      self(self, k + 1);  // empty segment at level k
      const std::size_t base = cur.size();
      for (int c = k; c >= 1; --c) {
        cur.push_back(c);  // cur now ends with the run k, k-1, ..., c
        self(self, k + 1);
      }
      cur.resize(base);
    };
    levels(levels, 1);

    const auto got = fcd::fc_words_type_a(rank);
    const std::set<Word> got_set(got.begin(), got.end());
    CHECK(got_set.size() == got.size());
    CHECK(got_set == expected);
  }
}

TEST_CASE("suffix-restricted enumeration matches the full sweep") {
  const int n = 5;
  std::map<std::vector<int>, std::set<Word>> buckets;
  for (const auto& lw : fcd::fc_words(n)) buckets[lw.form.suffix_params].insert(lw.word);
  CHECK(buckets.size() == 16);  // every suffix contributes at least itself

  std::size_t total = 0;
  for (const auto& [params, expected] : buckets) {
    const auto got = fcd::fc_words_with_suffix(n, params);
    std::set<Word> got_words;
    for (const auto& lw : got) {
      CHECK(lw.form.suffix_params == params);
      got_words.insert(lw.word);
    }
    CHECK(got_words == expected);
    total += got.size();
  }
  CHECK(total == 167);

  // A chain starting at 1 pins the prefix: the collection is a singleton.
  const auto pinned = fcd::fc_words_with_suffix(5, {1, 3});
  REQUIRE(pinned.size() == 1);
  CHECK(pinned.front().word == Word{5, 3, 2, 1, 4, 3});

  CHECK_THROWS_AS(fcd::fc_words_with_suffix(5, {3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(fcd::fc_words_with_suffix(5, {5}), std::invalid_argument);
}
