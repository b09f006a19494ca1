#include "cfdim/rendering.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "cfdim/error.hpp"

namespace cfdim {

ExactDisk unit_disk() {
  ExactDisk d;
  d.re = mpq_class(1, 2);
  d.im = 0;
  d.radius = mpq_class(1, 2);
  return d;
}

ExactDisk apply_digit(const GaussianInt& b, const ExactDisk& d) {
  const mpq_class cre = mpq_class(b.re) + d.re;
  const mpq_class cim = mpq_class(b.im) + d.im;
  const mpq_class den = cre * cre + cim * cim - d.radius * d.radius;
  if (sgn(den) <= 0)
    throw Error("apply_digit: pole of the inversion touches the disk (invalid digit " +
                b.str() + ")");
  ExactDisk out;
  out.re = cre / den;
  out.im = -cim / den;
  out.radius = d.radius / den;
  return out;
}

std::complex<double> DiskImage::center() const {
  return {disk.re.get_d(), disk.im.get_d()};
}

double DiskImage::radius() const { return disk.radius.get_d(); }

DiskImage image_disk(const Word& w) {
  DiskImage out;
  out.word = w;
  out.depth = static_cast<int>(w.size());
  out.disk = unit_disk();
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.disk = apply_digit(*it, out.disk);
  return out;
}

std::vector<DiskImage> iterate_disks(const std::vector<GaussianInt>& digits, int depth) {
  if (digits.empty()) throw Error("iterate_disks: empty alphabet");
  if (depth < 1) throw Error("iterate_disks: depth must be >= 1");
  double count = 0;
  for (int d = 1, n = 1; d <= depth; ++d) {
    n *= static_cast<int>(digits.size());
    count += n;
    if (count > 1e4) throw Error("iterate_disks: more than 10^4 disks requested");
  }
  std::vector<DiskImage> out;
  Word w;
  // depth-major, lexicographic within each depth
  for (int d = 1; d <= depth; ++d) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    while (true) {
      w.clear();
      for (std::size_t i : idx) w.push_back(digits[i]);
      out.push_back(image_disk(w));
      int pos = d - 1;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == digits.size()) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

bool disk_contains(const ExactDisk& outer, const ExactDisk& inner) {
  if (inner.radius > outer.radius) return false;
  const mpq_class dre = outer.re - inner.re;
  const mpq_class dim = outer.im - inner.im;
  const mpq_class gap = outer.radius - inner.radius;
  return dre * dre + dim * dim <= gap * gap;
}

bool interiors_disjoint(const ExactDisk& a, const ExactDisk& b) {
  const mpq_class dre = a.re - b.re;
  const mpq_class dim = a.im - b.im;
  const mpq_class sum = a.radius + b.radius;
  return dre * dre + dim * dim >= sum * sum;
}

GeometryReport check_disk_geometry(const std::vector<DiskImage>& disks, std::size_t n_digits,
                                   int depth) {
  GeometryReport rep;
  std::size_t level_begin = 0;
  std::size_t level_size = n_digits;
  std::size_t prev_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    // pairwise disjoint interiors at each level (open set condition)
    for (std::size_t i = level_begin; i < level_begin + level_size && rep.disjoint_ok; ++i) {
      for (std::size_t j = i + 1; j < level_begin + level_size; ++j) {
        if (!interiors_disjoint(disks[i].disk, disks[j].disk)) {
          rep.disjoint_ok = false;
          rep.first_violation =
              "overlap between " + word_id(disks[i].word) + " and " + word_id(disks[j].word);
          break;
        }
      }
    }
    // each disk nested in its parent one level up
    if (d >= 2) {
      for (std::size_t i = 0; i < level_size; ++i) {
        const std::size_t parent = prev_begin + i / n_digits;
        const std::size_t child = level_begin + i;
        if (!disk_contains(disks[parent].disk, disks[child].disk)) {
          rep.nesting_ok = false;
          if (rep.first_violation.empty())
            rep.first_violation = word_id(disks[child].word) + " escapes its parent " +
                                  word_id(disks[parent].word);
          break;
        }
      }
    } else {
      const ExactDisk D = unit_disk();
      for (std::size_t i = 0; i < level_size; ++i) {
        if (!disk_contains(D, disks[i].disk)) {
          rep.nesting_ok = false;
          rep.first_violation = word_id(disks[i].word) + " escapes D";
          break;
        }
      }
    }
    prev_begin = level_begin;
    level_begin += level_size;
    level_size *= n_digits;
  }
  return rep;
}

std::string word_id(const Word& w) {
  std::string id;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) id += '_';
    for (char c : w[i].str()) {
      if (c == '+')
        id += 'p';
      else if (c == '-')
        id += 'm';
      else
        id += c;
    }
  }
  return id;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void render_svg(const std::vector<GaussianInt>& digits, int depth, std::ostream& os) {
  const auto disks = iterate_disks(digits, depth);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        "viewBox=\"-0.05 -0.55 1.1 1.1\" width=\"640\" height=\"640\">\n";
  os << "  <g fill=\"none\" stroke-width=\"0.002\">\n";
  os << "    <circle id=\"D\" cx=\"0.5\" cy=\"0\" r=\"0.5\" stroke=\"#999\"/>\n";
  for (const DiskImage& di : disks) {
    // SVG y grows downward; mirror the imaginary axis (+0.0 scrubs "-0").
    os << "    <circle id=\"" << word_id(di.word) << "\" cx=\"" << fmt(di.center().real())
       << "\" cy=\"" << fmt(-di.center().imag() + 0.0) << "\" r=\"" << fmt(di.radius())
       << "\" stroke=\"" << (di.depth == 1 ? "#000" : "#36c") << "\"/>\n";
  }
  os << "  </g>\n</svg>\n";
}

void render_svg_file(const std::vector<GaussianInt>& digits, int depth,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + path + "'");
  render_svg(digits, depth, out);
  if (!out) throw Error("failed writing SVG to '" + path + "'");
}

}  // namespace cfdim
