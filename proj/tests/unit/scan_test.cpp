#include <gtest/gtest.h>

#include "teeprobe/anyon.hpp"
#include "teeprobe/catalog.hpp"
#include "teeprobe/generators.hpp"
#include "teeprobe/scan.hpp"

using namespace teeprobe;

namespace {

std::vector<Arrangement> geometries(std::initializer_list<const char*> names) {
  std::vector<Arrangement> out;
  for (const char* n : names) out.push_back(builtin_arrangement(n));
  return out;
}

ScanOptions all_modes(unsigned threads) {
  ScanOptions o;
  o.modes = {ScanMode::paper, ScanMode::additive, ScanMode::area_law};
  o.models = {builtin_model("fibonacci"), builtin_model("toric")};
  o.threads = threads;
  return o;
}

}  // namespace

TEST(Scan, RowOrderFollowsInputOrder) {
  const auto report = run_scan(starter_catalog(), geometries({"pie7", "kp_disk3", "pie5"}), all_modes(3));
  const auto n = starter_catalog().size();
  ASSERT_EQ(report.rows.size(), n * 3 * 3);
  std::size_t i = 0;
  for (std::size_t e = 0; e < n; ++e) {
    for (const char* g : {"resolved_pie(7)", "kp_disk3", "resolved_pie(5)"}) {
      for (auto m : {ScanMode::paper, ScanMode::additive, ScanMode::area_law}) {
        EXPECT_EQ(report.rows[i].entry, e);
        EXPECT_EQ(report.rows[i].geometry, g);
        EXPECT_EQ(report.rows[i].mode, m);
        ++i;
      }
    }
  }
}

TEST(Scan, DeterministicAcrossThreadCounts) {
  const auto g = geometries({"kp_disk3", "pie5", "pie7", "strips3"});
  const auto one = to_json(run_scan(starter_catalog(), g, all_modes(1))).dump();
  for (unsigned t : {2U, 4U, 8U}) {
    EXPECT_EQ(to_json(run_scan(starter_catalog(), g, all_modes(t))).dump(), one) << t;
    EXPECT_EQ(to_csv(run_scan(starter_catalog(), g, all_modes(t))),
              to_csv(run_scan(starter_catalog(), g, all_modes(1))));
  }
}

TEST(Scan, StarterCatalogHasNoFacetFailures) {
  const auto report = run_scan(starter_catalog(), geometries({"kp_disk3", "pie5", "pie7"}), all_modes(0));
  EXPECT_TRUE(report.facet_failures().empty()) << report.summary();
  int skipped = 0;
  for (const auto& r : report.rows) {
    if (r.status == ScanRow::Status::skipped) ++skipped;
    EXPECT_NE(r.status, ScanRow::Status::error) << r.message;
  }
  EXPECT_GT(skipped, 0);
}

TEST(Scan, SkipsQuantitiesWithForeignParties) {
  std::vector<CatalogEntry> cat{{gen_cyclic(7), true, "test"}};
  ScanOptions o;
  const auto report = run_scan(cat, geometries({"kp_disk3", "pie7"}), o);
  ASSERT_EQ(report.rows.size(), 2U);
  EXPECT_EQ(report.rows[0].status, ScanRow::Status::skipped);
  EXPECT_EQ(report.rows[1].status, ScanRow::Status::ok);
  EXPECT_TRUE(report.facet_failures().empty());
}

TEST(Scan, FacetFailureIsFlagged) {
  std::vector<CatalogEntry> cat{{gen_named("LW"), true, "test"}, {gen_named("Q61"), false, "test"}};
  cat[0].quantity.set_name("LW");
  ScanOptions o;
  const auto report = run_scan(cat, geometries({"kp_disk3", "pie6"}), o);
  const auto failures = report.facet_failures();
  ASSERT_EQ(failures.size(), 1U);
  EXPECT_EQ(failures[0]->quantity, "LW");
  EXPECT_EQ(failures[0]->geometry, "kp_disk3");
}

TEST(Scan, EmptyCatalog) {
  const auto report = run_scan({}, geometries({"kp_disk3"}), ScanOptions{});
  EXPECT_TRUE(report.rows.empty());
  EXPECT_EQ(to_json(report)["rows"].size(), 0U);
  EXPECT_EQ(to_csv(report).find('\n'), to_csv(report).size() - 1);
}

TEST(Scan, CsvHasOneLinePerRow) {
  const auto report = run_scan(starter_catalog(), geometries({"pie5"}), all_modes(2));
  const auto csv = to_csv(report);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), report.rows.size() + 1);
  EXPECT_NE(csv.find("numeric_fibonacci"), std::string::npos);
  EXPECT_EQ(to_csv(report, true).find("wall_ms") == std::string::npos, false);
}
