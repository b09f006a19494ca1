#include <sstream>

#include "cfdim/alphabet.hpp"
#include "cfdim/distortion.hpp"
#include "cfdim/rendering.hpp"
#include "doctest.h"

using namespace cfdim;

namespace {

Word make_word(std::initializer_list<long> digits) {
  Word w;
  for (long d : digits) w.emplace_back(d);
  return w;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_CASE("disk images are exact rationals") {
  const DiskImage empty = image_disk({});
  CHECK(empty.disk.re == mpq_class(1, 2));
  CHECK(empty.disk.radius == mpq_class(1, 2));

  const DiskImage d1 = image_disk(make_word({1}));
  CHECK(d1.disk.re == mpq_class(3, 4));
  CHECK(d1.disk.im == 0);
  CHECK(d1.disk.radius == mpq_class(1, 4));

  const DiskImage d2 = image_disk(make_word({2}));
  CHECK(d2.disk.re == mpq_class(5, 12));
  CHECK(d2.disk.radius == mpq_class(1, 12));
}

TEST_CASE("iterated disks nest and stay disjoint") {
  const auto digits = materialize(parse_alphabet("{1,2}"));
  const auto disks = iterate_disks(digits, 2);
  REQUIRE(disks.size() == 6);
  const GeometryReport rep = check_disk_geometry(disks, digits.size(), 2);
  CHECK(rep.passed());

  // every depth-2 disk sits inside its depth-1 parent, exactly
  for (int parent = 0; parent < 2; ++parent)
    for (int child = 0; child < 2; ++child)
      CHECK(disk_contains(disks[parent].disk, disks[2 + 2 * parent + child].disk));
}

TEST_CASE("figure alphabet {1+-i, 2+-i} yields 20 disks") {
  const auto digits = materialize(parse_alphabet("{1+i,1-i,2+i,2-i}"));
  const auto disks = iterate_disks(digits, 2);
  REQUIRE(disks.size() == 20);
  CHECK(check_disk_geometry(disks, digits.size(), 2).passed());
}

TEST_CASE("radius is bounded by half the derivative sup") {
  const auto digits = materialize(parse_alphabet("{1,2}"));
  for (const DiskImage& di : iterate_disks(digits, 2)) {
    const double sup = derivative_modulus(di.word, DiskPoint{{0.0, 0.0}});
    CHECK(di.radius() <= 0.5 * sup + 1e-9);
  }
}

TEST_CASE("containment and disjointness edge cases") {
  const ExactDisk D = unit_disk();
  ExactDisk far{mpq_class(10), mpq_class(0), mpq_class(1)};
  CHECK_FALSE(disk_contains(D, far));
  CHECK(interiors_disjoint(D, far));
  // phi_1(D) and phi_2(D) are tangent: disjoint interiors, both in D
  const ExactDisk a = image_disk(make_word({1})).disk;
  const ExactDisk b = image_disk(make_word({2})).disk;
  CHECK(interiors_disjoint(a, b));
  CHECK(disk_contains(D, a));
  CHECK(disk_contains(D, b));
}

TEST_CASE("svg output is deterministic and structured") {
  const auto digits = materialize(parse_alphabet("{1,2}"));
  std::ostringstream first, second;
  render_svg(digits, 2, first);
  render_svg(digits, 2, second);
  const std::string svg = first.str();
  CHECK(svg == second.str());
  CHECK(svg.find("<?xml") == 0);
  CHECK(count_occurrences(svg, "<circle") == 7);  // D + 2 + 4
  CHECK(svg.find("id=\"1\"") != std::string::npos);
  CHECK(svg.find("id=\"1_2\"") != std::string::npos);
  CHECK(svg.find("fill=\"none\"") != std::string::npos);
}

TEST_CASE("word ids encode signs as letters") {
  CHECK(word_id(make_word({1, 2})) == "1_2");
  CHECK(word_id({GaussianInt(1, 1), GaussianInt(2, -1)}) == "1p1i_2m1i");
}

TEST_CASE("render guards") {
  CHECK_THROWS_AS(iterate_disks({}, 1), Error);
  std::vector<GaussianInt> digits(200, GaussianInt(1));
  for (long i = 0; i < 200; ++i) digits[i] = GaussianInt(i + 1);
  CHECK_THROWS_AS(iterate_disks(digits, 2), Error);  // 200 + 40000 disks > 1e4
}
