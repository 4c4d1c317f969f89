#include <doctest.h>

#include "properties.hpp"

namespace {

void report(const props::Outcome& o, std::size_t expected) {
  CHECK(o.instances == expected);
  for (const auto& n : o.notes) MESSAGE(n);
  CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("lattice reduction on 200 random bases") { report(props::lll_suite(200, 101), 200); }

TEST_CASE("integer kernels of 200 random matrices") { report(props::kernel_suite(200, 202), 200); }

TEST_CASE("degree sweep recycling on 50 random problems") { report(props::recycling_suite(50, 303), 50); }

TEST_CASE("unroll and fit on 100 random recurrences") { report(props::unroll_suite(100, 404), 100); }
