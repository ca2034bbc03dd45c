#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abacore/verify.hpp"
#include "support.hpp"

using namespace abacore;

namespace {
std::vector<Report> collect(const std::function<int(const ReportSink&)>& suite,
                            int* failures = nullptr) {
  std::vector<Report> out;
  const int f = suite([&](const Report& r) { out.push_back(r); });
  if (failures) *failures = f;
  return out;
}
}  // namespace

TEST_CASE("random generators respect their bounds") {
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 300; ++trial) {
    const BetaSet x = random_beta_set(rng, 15, 5);
    CHECK(x.size() <= 5);
    CHECK(x.max_element() <= 15);
    const DSymbol s = random_symbol(rng);
    CHECK(s.d() >= 2);
    CHECK(s.d() <= 4);
    for (const BetaSet& row : s.rows()) {
      CHECK(row.size() <= 6);
      CHECK(row.max_element() <= 11);
    }
    const DataTuple delta = random_tuple(rng, s.d());
    CHECK(delta.dimension() == s.d());
    CHECK(delta.scale() > 0);
  }
}

TEST_CASE("same seed, same reports") {
  auto run = [] {
    return collect([](const ReportSink& sink) {
      return verify_symbol_decomposition_suite(25, 42, sink);
    });
  };
  const auto a = run();
  const auto b = run();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].identity == b[i].identity);
    CHECK(a[i].instance == b[i].instance);
    CHECK(a[i].pass == b[i].pass);
  }
}

TEST_CASE("suites pass at reduced scale with the expected report counts") {
  int failures = -1;

  auto decomposition = collect(
      [](const ReportSink& sink) {
        return verify_symbol_decomposition_suite(50, kDefaultSeed, sink);
      },
      &failures);
  CHECK(failures == 0);
  CHECK(decomposition.size() == 100);  // pointwise + multiset per trial

  auto split = collect(
      [](const ReportSink& sink) {
        return verify_partition_split_suite({0, 1, 2, 3, 4, 5, 6}, {2, 3},
                                            sink);
      },
      &failures);
  CHECK(failures == 0);
  long long expected = 0;
  for (int n = 0; n <= 6; ++n) expected += 2 * testing::partition_count(n);
  CHECK(static_cast<long long>(split.size()) == expected);

  auto split_identity = collect(
      [](const ReportSink& sink) {
        return verify_split_identity_suite(50, kDefaultSeed, 4, sink);
      },
      &failures);
  CHECK(failures == 0);
  CHECK(split_identity.size() == 50);

  auto twisted = collect(
      [](const ReportSink& sink) {
        return verify_twisted_identity_suite(50, kDefaultSeed, 4, sink);
      },
      &failures);
  CHECK(failures == 0);
  CHECK(twisted.size() == 50);

  auto degrees = collect(
      [](const ReportSink& sink) { return verify_degree_suite(6, {2}, sink); },
      &failures);
  CHECK(failures == 0);
  long long degree_reports = 7;  // one square-sum report per n
  for (int n = 0; n <= 6; ++n) degree_reports += testing::partition_count(n);
  CHECK(static_cast<long long>(degrees.size()) == degree_reports);

  auto oracles = collect(
      [](const ReportSink& sink) {
        return verify_oracle_suite(30, 20, 30, kDefaultSeed, sink);
      },
      &failures);
  CHECK(failures == 0);
  CHECK(oracles.size() == 80);

  for (const auto& suite : {decomposition, split, split_identity, twisted,
                            degrees, oracles})
    for (const Report& r : suite) {
      CHECK(r.pass);
      CHECK(r.detail.empty());
      CHECK_FALSE(r.identity.empty());
      CHECK_FALSE(r.instance.empty());
    }
}
