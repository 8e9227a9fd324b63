#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "burau/report.hpp"
#include "burau/search.hpp"
#include "test_util.hpp"

using namespace burau;

namespace {

std::size_t count_words(int n, int maxlen, bool prune) {
  std::size_t c = 0;
  for_each_conjugator(n, maxlen, prune, BraidWord(n), [&](const BraidWord&) {
    ++c;
    return true;
  });
  return c;
}

bool commute_filter(const BraidWord& psi) {
  const int n = psi.strands();
  return commuting_check(conjugated_twist({psi, BraidWord::generator(n, 1)}),
                         boundary_twist_word(n));
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          (name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed())))
      .string();
}

}  // namespace

TEST(Enumeration, CountsOfReducedWords) {
  EXPECT_EQ(count_words(3, 1, false), 5u);
  EXPECT_EQ(count_words(3, 2, false), 17u);
  EXPECT_EQ(count_words(3, 8, false), 13121u);  // 1 + 4 * (3^8 - 1) / 2
  EXPECT_EQ(count_words(4, 6, false), 23437u);
  EXPECT_LT(count_words(4, 6, true), 23437u);
  EXPECT_EQ(count_words(3, 8, true), 13121u);  // nothing commutes far apart in B3
}

TEST(Enumeration, WordsAreReducedDistinctAndBounded) {
  const auto words = enumerate_conjugators(4, 4, false);
  std::set<std::string> seen;
  for (const auto& w : words) {
    ASSERT_LE(w.size(), 4u);
    ASSERT_EQ(w.free_reduced(), w);
    ASSERT_TRUE(seen.insert(w.to_string()).second);
  }
  EXPECT_TRUE(words.front().empty());
}

TEST(Enumeration, PruningKeepsOneRepresentativePerCommutingSwap) {
  // with pruning, s3 s1 is dropped but s1 s3 stays
  const auto words = enumerate_conjugators(4, 2, true);
  auto has = [&](const char* text) {
    return std::find(words.begin(), words.end(), parse_word(text, 4)) != words.end();
  };
  EXPECT_TRUE(has("s1 s3"));
  EXPECT_FALSE(has("s3 s1"));
  EXPECT_TRUE(has("s2 s1"));
}

TEST(Filters, CommuteFilter) {
  EXPECT_TRUE(commute_filter(BraidWord(5)));
  // twists supported away from q5 commute with it
  EXPECT_TRUE(commute_filter(BraidWord::generator(5, 2)));
  EXPECT_FALSE(commute_filter(parse_word("s2 s3 s4", 5)));
  EXPECT_TRUE(commute_filter(search_seed_for_paper_element()));
}

TEST(Filters, PairingFunctional) {
  ASSERT_TRUE(pairing_calibration().ok);
  EXPECT_GE(pairing_calibration().entries.size(), 10u);
  EXPECT_TRUE(pairing_functional(BraidWord(5), 4).is_zero());
  EXPECT_TRUE(pairing_functional(BraidWord(5), 3).is_zero());
  EXPECT_THROW(pairing_functional(BraidWord::generator(5, 2), 3), std::domain_error);
  EXPECT_THROW(pairing_functional(BraidWord(5), 1), std::domain_error);
  EXPECT_THROW(pairing_functional(BraidWord(5), 6), std::out_of_range);
  // the moved arc links q3 in s2^2, so the noodle to q3 sees it
  EXPECT_FALSE(pairing_functional(parse_word("s2^2", 4), 3).is_zero());
  EXPECT_TRUE(pairing_functional(search_seed_for_paper_element().inverse(), 5).is_zero());
}

TEST(Filters, PairingFunctionalMatchesGeometryOnCalibrationSet) {
  for (const auto& e : pairing_calibration().entries) {
    EXPECT_TRUE(e.agree) << e.word << " j=" << e.j << ": " << e.geometric.to_string() << " vs "
                         << e.algebraic.to_string();
  }
}

TEST(Search, SeedCommutatorIsCertified) {
  const auto seed = search_seed_for_paper_element();
  const auto word =
      commutator(conjugated_twist({seed, BraidWord::generator(5, 1)}), boundary_twist_word(5));
  const auto r = verify_kernel(word);
  EXPECT_TRUE(r.certified());
}

TEST(Search, ThreeStrandsFindNothing) {
  SearchConfig cfg;
  cfg.n = 3;
  cfg.max_conjugator_length = 8;
  const auto r = run_search(cfg);
  EXPECT_EQ(r.examined, 13121u);
  EXPECT_TRUE(r.certified.empty());
  EXPECT_TRUE(r.undecided.empty());
  EXPECT_GT(r.survivors, 0u);
}

TEST(Search, FourStrandsFindNothing) {
  SearchConfig cfg;
  cfg.n = 4;
  cfg.max_conjugator_length = 6;
  cfg.jobs = 4;
  const auto r = run_search(cfg);
  EXPECT_EQ(r.examined, 23437u);
  EXPECT_TRUE(r.certified.empty());
  EXPECT_TRUE(r.undecided.empty());
}

TEST(Search, SeededFiveStrandRunCertifies) {
  SearchConfig cfg;
  cfg.n = 5;
  cfg.max_conjugator_length = 2;
  cfg.seeds = {search_seed_for_paper_element()};
  const auto r = run_search(cfg);
  ASSERT_EQ(r.certified.size(), 1u);
  EXPECT_TRUE(r.certified[0].seeded);
  EXPECT_TRUE(r.certified[0].report.burau_trivial);
  EXPECT_FALSE(r.certified[0].report.artin_trivial);
  EXPECT_EQ(r.certified[0].report.word,
            commutator(conjugated_twist({cfg.seeds[0], BraidWord::generator(5, 1)}),
                       boundary_twist_word(5)));
}

TEST(Search, DuplicateSeedsAreCollapsed) {
  SearchConfig cfg;
  cfg.n = 5;
  cfg.max_conjugator_length = 0;
  const auto seed = search_seed_for_paper_element();
  // s1 commutes with the twist around q1 q2, so this conjugator gives the same twist
  cfg.seeds = {seed, (BraidWord::generator(5, 1) * seed).free_reduced()};
  const auto r = run_search(cfg);
  EXPECT_EQ(r.certified.size(), 1u);
  EXPECT_EQ(r.duplicates, 1u);
}

TEST(Search, JobsDoNotChangeOutput) {
  SearchConfig cfg;
  cfg.n = 4;
  cfg.max_conjugator_length = 5;
  cfg.seeds = {parse_word("s2 s3^-1", 4)};
  cfg.jobs = 1;
  const auto a = report::search_json(cfg, run_search(cfg)).dump();
  cfg.jobs = 4;
  const auto b = report::search_json(cfg, run_search(cfg)).dump();
  EXPECT_EQ(a, b);
}

TEST(Search, PairingFilterIsNoLooserThanCommute) {
  SearchConfig cfg;
  cfg.n = 4;
  cfg.max_conjugator_length = 5;
  const auto commute = run_search(cfg);
  cfg.filter = Filter::pairing;
  const auto pair = run_search(cfg);
  EXPECT_EQ(pair.filter_used, Filter::pairing);
  EXPECT_EQ(pair.examined, commute.examined);
  EXPECT_LE(pair.survivors, commute.survivors);
  EXPECT_GT(pair.survivors, 0u);
  // each pairing survivor also passes the commute test
  for (const auto& w : enumerate_conjugators(4, 3, false)) {
    const auto inv = w.inverse();
    const auto v = pairing_functional_entry(burau_image(inv, Variant::unreduced),
                                            inv.permutation(), 1, 4);
    if (v && v->is_zero()) {
      ASSERT_TRUE(commute_filter(w)) << w.to_string();
    }
  }
  cfg.filter = Filter::none;
  EXPECT_EQ(run_search(cfg).survivors, commute.examined);
}

TEST(Search, PairingFallsBackForCustomCores) {
  SearchConfig cfg;
  cfg.n = 4;
  cfg.max_conjugator_length = 2;
  cfg.filter = Filter::pairing;
  cfg.core_b = parse_word("s3", 4);
  EXPECT_EQ(run_search(cfg).filter_used, Filter::commute);
}

TEST(Search, CheckpointResume) {
  const std::string path = temp_path("burau_ckpt.json");
  std::filesystem::remove(path);
  SearchConfig cfg;
  cfg.n = 4;
  cfg.max_conjugator_length = 5;
  cfg.checkpoint_path = path;
  const auto full = run_search(cfg);
  EXPECT_EQ(full.resumed_tasks, 0u);
  ASSERT_TRUE(std::filesystem::exists(path));

  // forget half of the completed tasks, as if interrupted
  nlohmann::json doc;
  {
    std::ifstream in(path);
    in >> doc;
  }
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc["completed"].items()) keys.push_back(k);
  for (std::size_t i = 0; i < keys.size(); i += 2) doc["completed"].erase(keys[i]);
  {
    std::ofstream out(path);
    out << doc.dump();
  }
  const auto resumed = run_search(cfg);
  EXPECT_EQ(resumed.resumed_tasks, keys.size() / 2);
  EXPECT_EQ(report::search_json(cfg, resumed).dump(), report::search_json(cfg, full).dump());

  SearchConfig other = cfg;
  other.max_conjugator_length = 4;
  EXPECT_THROW(run_search(other), std::runtime_error);
  std::filesystem::remove(path);
}

TEST(Search, RejectsBadConfig) {
  SearchConfig cfg;
  cfg.n = 2;
  EXPECT_THROW(run_search(cfg), std::invalid_argument);
  cfg.n = 3;
  cfg.max_conjugator_length = -1;
  EXPECT_THROW(run_search(cfg), std::invalid_argument);
  EXPECT_EQ(parse_filter("pairing"), Filter::pairing);
  EXPECT_THROW(parse_filter("fast"), ParseError);
}
