#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "cfdim/convergents.hpp"

namespace cfdim {

// A disk with exact rational center and radius.  All map images are
// computed in rational arithmetic; floats appear only at SVG emission.
struct ExactDisk {
  mpq_class re, im;
  mpq_class radius;
};

// D: center 1/2, radius 1/2.
ExactDisk unit_disk();

// Image of a disk under z -> 1/(b+z).  For a disk |u - c| = r with the
// pole outside, the image is the disk with center conj(b+c)/(|b+c|^2-r^2)
// and radius r/(|b+c|^2-r^2).
ExactDisk apply_digit(const GaussianInt& b, const ExactDisk& d);

struct DiskImage {
  ExactDisk disk;
  Word word;
  int depth = 0;

  std::complex<double> center() const;
  double radius() const;
};

// phi_w(D); the empty word gives D itself.
DiskImage image_disk(const Word& w);

// All images phi_w(D) for words of length 1..depth, ordered by (length,
// lexicographic digit index).
std::vector<DiskImage> iterate_disks(const std::vector<GaussianInt>& digits, int depth);

// Exact containment / interior-disjointness tests (tangency counts as both
// nested and disjoint).
bool disk_contains(const ExactDisk& outer, const ExactDisk& inner);
bool interiors_disjoint(const ExactDisk& a, const ExactDisk& b);

// Child-in-parent nesting plus pairwise same-depth disjointness over the
// output of iterate_disks.
struct GeometryReport {
  bool nesting_ok = true;
  bool disjoint_ok = true;
  std::string first_violation;
  bool passed() const { return nesting_ok && disjoint_ok; }
};

GeometryReport check_disk_geometry(const std::vector<DiskImage>& disks, std::size_t n_digits,
                                   int depth);

// SVG id for a word: digits joined by '_', with '+'/'-' written 'p'/'m'
// (XML names reject the sign characters).
std::string word_id(const Word& w);

// Stroke-only SVG 1.1, one <circle> per disk plus the boundary of D,
// viewport fitted to D.  Deterministic output.
void render_svg(const std::vector<GaussianInt>& digits, int depth, std::ostream& os);
void render_svg_file(const std::vector<GaussianInt>& digits, int depth,
                     const std::string& path);

}  // namespace cfdim
