#include <doctest.h>

#include "blockcraft/sym_blocks.hpp"
#include "blockcraft/sym_chars.hpp"
#include "oracles.hpp"

using namespace blockcraft;

TEST_CASE("block_of") {
  auto b = block_of(Partition{2, 1, 1}, 3);
  CHECK(b.core == Partition{2, 1, 1});
  CHECK(b.weight == 0);
  b = block_of(Partition{1, 1, 1, 1}, 3);
  CHECK(b.core == Partition{1});
  CHECK(b.weight == 1);
  b = block_of(Partition{4}, 5);
  CHECK(b.core == Partition{4});
  CHECK(b.weight == 0);
  CHECK_THROWS_AS(block_of(Partition{3}, 4), ArgumentError);
  CHECK_THROWS_AS(SymBlockLabel::make(3, Partition{3}, 0), ArgumentError);
}

TEST_CASE("block members and heights") {
  auto data = block_members_and_heights(SymBlockLabel::make(3, Partition{1}, 1));
  CHECK(data.members == std::vector<Partition>{Partition{4}, Partition{2, 2}, Partition{1, 1, 1, 1}});
  CHECK(data.defect_group_order == 3);
  CHECK(data.height_zero_count() == 3);

  data = block_members_and_heights(SymBlockLabel::make(2, Partition{}, 2));
  CHECK(data.members.size() == 5);
  CHECK(data.defect_group_order == 8);
  CHECK(data.heights.at(Partition{2, 2}) == 1);
  CHECK(data.height_zero_count() == 4);

  data = block_members_and_heights(SymBlockLabel::make(5, Partition{3, 1}, 0));
  CHECK(data.members == std::vector<Partition>{Partition{3, 1}});
  CHECK(data.defect_group_order == 1);
  CHECK(data.heights.at(Partition{3, 1}) == 0);
}

TEST_CASE("block census invariants") {
  for (int n = 0; n <= 25; ++n)
    for (unsigned p : {2u, 3u, 5u, 7u}) {
      BigInt members = 0;
      for (const auto& label : block_labels(n, p)) {
        const auto data = block_members_and_heights(label);
        members += static_cast<unsigned long>(data.members.size());
        CHECK(data.height_zero_count() >= 1);
        if (label.weight < static_cast<int>(p)) CHECK(data.height_zero_count() == data.members.size());
      }
      CHECK(members == partition_count(n));
    }
}

TEST_CASE("blocks are connected by adding p-hooks") {
  // Same p-core iff one is reachable from the other by removing and adding
  // p-rim hooks; checked with diagram rim-hook removal.
  for (int n = 1; n <= 10; ++n)
    for (unsigned p : {2u, 3u})
      for (const auto& lambda : enumerate_partitions(n))
        CHECK(block_of(lambda, p).core == oracle::core_by_hook_removal(lambda, static_cast<int>(p)));
}

TEST_CASE("BHZ") {
  CHECK(bhz_verify(SymBlockLabel::make(3, Partition{1}, 1)).passed);
  const auto r = bhz_verify(SymBlockLabel::make(2, Partition{}, 2));
  CHECK(r.passed);
  CHECK(r.global_count == 0);
  CHECK(bhz_verify(SymBlockLabel::make(7, Partition{2, 1}, 0)).passed);
  for (int n = 1; n <= 14; ++n)
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      if (p > static_cast<unsigned>(n)) continue;
      for (const auto& label : block_labels(n, p)) CHECK(bhz_verify(label).passed);
    }
}

TEST_CASE("BHZ witness search") {
  CHECK(bhz_witness_search(2) == Partition{2, 2});
  const Partition w3 = bhz_witness_search(3);
  CHECK(w3.size() == 6);
  CHECK(d_core_and_quotient(w3, 2).core.empty());
  CHECK(valuation(sym_degree(w3), 2) > 0);
  // It is the first such partition in canonical order.
  for (const auto& lambda : enumerate_partitions(6)) {
    if (lambda == w3) break;
    CHECK((!d_core_and_quotient(lambda, 2).core.empty() || valuation(sym_degree(lambda), 2) == 0));
  }
  CHECK_THROWS_AS(bhz_witness_search(1), ArgumentError);
  // The often quoted (2w-1,1) has odd degree 2w-1.
  for (int w = 2; w <= 10; ++w) CHECK(sym_degree(Partition{2 * w - 1, 1}) == 2 * w - 1);
}

TEST_CASE("Alperin-McKay for abelian defect") {
  auto r = am_verify_abelian(SymBlockLabel::make(3, Partition{}, 1));
  CHECK(r.passed);
  CHECK(r.global_count == 3);
  r = am_verify_abelian(SymBlockLabel::make(5, Partition{}, 2));
  CHECK(r.passed);
  CHECK(r.global_count == 20);
  CHECK(r.local_count == 20);
  r = am_verify_abelian(SymBlockLabel::make(5, Partition{2, 1}, 0));
  CHECK(r.passed);
  CHECK(r.global_count == 1);
  CHECK_THROWS_AS(am_verify_abelian(SymBlockLabel::make(2, Partition{}, 2)), UnsupportedRegime);
}

TEST_CASE("Nakayama oracle and McKay reports") {
  CHECK(nakayama_oracle_verify(6, 2).passed);
  const auto r = sym_mckay_verify(6, 2);
  CHECK(r.passed);
  CHECK(r.global_count == 8);
  CHECK(sym_mckay_verify(8, 3).passed);
  CHECK_THROWS_AS(sym_mckay_verify(9, 3), UnsupportedRegime);
  for (const auto& rep : sym_block_census(9, 3)) CHECK(rep.passed);
}
