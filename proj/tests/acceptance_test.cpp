#include <doctest.h>

#include <iostream>

#include "tonelab/acceptance.hpp"

// One test case per acceptance criterion; each prints its PASS/FAIL line so
// running this binary directly yields the full scoreboard. Tolerances live in
// the acceptance module itself.
namespace {

constexpr std::uint64_t kSeed = 7;

void run(int id) {
  const auto c = tonelab::accept::run_criterion(id, kSeed);
  std::cout << tonelab::accept::format_line(c) << std::endl;
  CHECK_MESSAGE(c.pass, c.detail);
}

}  // namespace

TEST_CASE("criterion 01 hemisphere-eigenvalue") { run(1); }
TEST_CASE("criterion 02 flat-disk-bessel") { run(2); }
TEST_CASE("criterion 03 euclidean-scaling") { run(3); }
TEST_CASE("criterion 04 mckean-limit") { run(4); }
TEST_CASE("criterion 05 barta-sandwich") { run(5); }
TEST_CASE("criterion 06 vfield-certificate") { run(6); }
TEST_CASE("criterion 07 cheng-comparison") { run(7); }
TEST_CASE("criterion 08 bishop-monotonicity") { run(8); }
TEST_CASE("criterion 09 wronskian-negativity") { run(9); }
TEST_CASE("criterion 10 catenoid-bound") { run(10); }
TEST_CASE("criterion 11 stability-threshold") { run(11); }
TEST_CASE("criterion 12 quasilinear-gate-solve") { run(12); }
TEST_CASE("criterion 13 suite-aggregate") { run(13); }
