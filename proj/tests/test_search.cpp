#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "matroidlab/constructions.hpp"
#include "matroidlab/error.hpp"
#include "matroidlab/nbc.hpp"
#include "matroidlab/search.hpp"

using namespace matroidlab;

namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("matroidlab_" + name + "_" + std::to_string(::getpid()))).string();
}

}  // namespace

TEST_CASE("counting standard orderings") {
  CHECK(standard_ordering_count(Matroid::uniform(2, 3)) == 3 * 2 * 1);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(standard_ordering_count(Matroid::uniform(n, n)) == factorial(n));
  Matroid k4 = named_matroid("K4").matroid;
  CHECK(standard_ordering_count(k4) == 16 * 6 * 6);
  CHECK(standard_ordering_count(named_matroid("R10").matroid) == 2332800);
}

TEST_CASE("decoding is a bijection onto standard orderings") {
  for (Matroid m : {Matroid::uniform(2, 4), named_matroid("K4").matroid}) {
    std::set<std::vector<std::size_t>> seen;
    const std::uint64_t total = standard_ordering_count(m);
    std::uint64_t streamed = 0;
    for_each_standard_ordering(m, 0, total, [&](std::uint64_t i, const StandardOrdering& so) {
      CHECK(is_standard(m, so.ordering));
      CHECK(so.ordering == standard_ordering_at(m, i).ordering);
      seen.insert(so.ordering.order());
      ++streamed;
      return true;
    });
    CHECK(streamed == total);
    CHECK(seen.size() == total);
    CHECK_THROWS_AS(standard_ordering_at(m, total), Error);
  }
  Matroid u = Matroid::uniform(2, 3);
  CHECK(standard_ordering_at(u, 0).ordering == Ordering({2, 0, 1}));
  CHECK(standard_ordering_at(u, 1).ordering == Ordering({2, 1, 0}));
}

TEST_CASE("streaming stops when asked") {
  Matroid k4 = named_matroid("K4").matroid;
  std::size_t calls = 0;
  for_each_standard_ordering(k4, 10, 100, [&](std::uint64_t i, const StandardOrdering&) {
    CHECK(i == 10 + calls);
    return ++calls < 5;
  });
  CHECK(calls == 5);
}

TEST_CASE("hash") {
  std::string h = matroid_hash(named_matroid("K4").matroid);
  CHECK(h.size() == 16);
  CHECK(h == matroid_hash(named_matroid("K4").matroid));
  CHECK(h != matroid_hash(Matroid::uniform(3, 6)));
}

TEST_CASE("policy and shard parsing") {
  auto p = SearchPolicy::parse("sample:500:7");
  CHECK(p.kind == SearchPolicy::Kind::Sample);
  CHECK(p.count == 500);
  CHECK(p.seed == 7);
  CHECK(p.to_string() == "sample:500:7");
  CHECK(SearchPolicy::parse("exhaustive").kind == SearchPolicy::Kind::Exhaustive);
  CHECK(SearchPolicy::parse("first-hit").kind == SearchPolicy::Kind::FirstHit);
  CHECK(SearchPolicy::parse("sample:10").seed == 0);
  for (const char* bad : {"", "sample", "sample:x:1", "sample:10:y", "everything"})
    CHECK_THROWS_AS(SearchPolicy::parse(bad), Error);
  Shard s = Shard::parse("2/5");
  CHECK(s.index == 2);
  CHECK(s.count == 5);
  CHECK(s.to_string() == "2/5");
  for (const char* bad : {"5/5", "1", "a/b", "0/0", "-1/3"}) CHECK_THROWS_AS(Shard::parse(bad), Error);
}

TEST_CASE("fast kernel agrees with the full check") {
  std::vector<Matroid> ms{named_matroid("K4").matroid, named_matroid("DualK33").matroid,
                          theta_matroid({3, 4}).matroid, phi_matroid({3, 3, 3}).matroid,
                          named_matroid("R10").matroid};
  for (const Matroid& m : ms) {
    for (FieldTag f : {FieldTag::gf2(), FieldTag::rationals()}) {
      FastNbcKernel kernel(m, f);
      FastNbcKernel copy(kernel.shared());
      const std::uint64_t total = standard_ordering_count(m);
      const std::uint64_t step = std::max<std::uint64_t>(1, total / 150);
      for (std::uint64_t i = 0; i < total; i += step) {
        StandardOrdering so = standard_ordering_at(m, i);
        NbcReport r = nbc_check(m, so, f);
        CHECK(kernel.is_basis(so) == r.basis);
        CHECK(copy.is_basis(so) == r.basis);
        auto bounded = kernel.lower_size_bounded(so);
        if (!r.infinite_lower && r.lower_size <= static_cast<std::size_t>(r.h_sum)) {
          REQUIRE(bounded.has_value());
          CHECK(*bounded == r.lower_size);
        } else {
          CHECK_FALSE(bounded.has_value());
        }
      }
    }
  }
}

TEST_CASE("exhaustive search on small matroids") {
  SearchReport k4 = search_orderings(named_matroid("K4").matroid, SearchPolicy::parse("exhaustive"));
  CHECK(k4.complete);
  CHECK(k4.examined == 576);
  CHECK(k4.basis == 576);
  CHECK(k4.first_witness_index == 0u);
  SearchReport u34 = search_orderings(Matroid::uniform(3, 4), SearchPolicy::parse("exhaustive"));
  CHECK(u34.basis == 24);
  CHECK_THROWS_AS(search_orderings(Matroid::uniform(2, 4), SearchPolicy::parse("exhaustive")), Error);
}

TEST_CASE("results do not depend on workers, shards or the fast path") {
  Matroid m = named_matroid("DualK33").matroid;
  SearchPolicy p = SearchPolicy::parse("sample:600:3");
  SearchOptions one;
  SearchReport base = search_orderings(m, p, one);
  CHECK(base.complete);
  CHECK(base.examined == 600);
  CHECK(base.basis + base.not_basis == 600);
  SearchOptions many;
  many.workers = 4;
  many.window = 64;
  SearchReport par = search_orderings(m, p, many);
  CHECK(par.basis == base.basis);
  CHECK(par.first_witness_index == base.first_witness_index);
  SearchOptions slow;
  slow.fast = false;
  CHECK(search_orderings(m, p, slow).basis == base.basis);
  std::uint64_t basis = 0, examined = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    SearchOptions s;
    s.shard = Shard{i, 3};
    s.workers = 2;
    SearchReport r = search_orderings(m, p, s);
    basis += r.basis;
    examined += r.examined;
    CHECK(r.shard == s.shard.to_string());
  }
  CHECK(basis == base.basis);
  CHECK(examined == 600);
}

TEST_CASE("first hit returns a verified witness") {
  Matroid m = named_matroid("DualK33").matroid;
  SearchReport r = search_orderings(m, SearchPolicy::parse("first-hit"));
  REQUIRE(r.first_witness.has_value());
  REQUIRE(r.first_witness_index.has_value());
  Ordering ord = Ordering::from_labels(m, *r.first_witness);
  CHECK(nbc_check(m, StandardOrdering::make(m, ord), FieldTag::gf2()).basis);
  CHECK(standard_ordering_at(m, *r.first_witness_index).ordering == ord);
  for (std::uint64_t i = 0; i < *r.first_witness_index; ++i)
    CHECK_FALSE(nbc_check(m, standard_ordering_at(m, i), FieldTag::gf2()).basis);
}

TEST_CASE("R10 has no basis among sampled orderings") {
  SearchReport r = search_orderings(named_matroid("R10").matroid, SearchPolicy::parse("sample:3000:1"));
  CHECK(r.basis == 0);
  CHECK(r.not_basis == 3000);
  CHECK_FALSE(r.first_witness.has_value());
}

TEST_CASE("resume") {
  Matroid m = named_matroid("DualK33").matroid;
  SearchPolicy p = SearchPolicy::parse("sample:1000:5");
  SearchReport whole = search_orderings(m, p);
  std::string path = temp_path("resume.json");
  std::filesystem::remove(path);
  SearchOptions o;
  o.resume_path = path;
  o.window = 100;
  o.max_windows = 3;
  SearchReport part = search_orderings(m, p, o);
  CHECK_FALSE(part.complete);
  CHECK(part.examined == 300);
  nlohmann::json state = nlohmann::json::parse(std::ifstream(path));
  CHECK(state["next_index"] == 300);
  CHECK(state["matroid_hash"] == matroid_hash(m));
  o.max_windows = 0;
  SearchReport rest = search_orderings(m, p, o);
  CHECK(rest.complete);
  CHECK(rest.examined == 1000);
  CHECK(rest.basis == whole.basis);
  CHECK(rest.not_basis == whole.not_basis);
  CHECK(rest.first_witness_index == whole.first_witness_index);
  // a state file for another run is refused
  CHECK_THROWS_AS(search_orderings(m, SearchPolicy::parse("sample:1000:6"), o), Error);
  CHECK_THROWS_AS(search_orderings(named_matroid("K4").matroid, p, o), Error);
  std::filesystem::remove(path);
}
