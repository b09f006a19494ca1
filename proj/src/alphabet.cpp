#include "cfdim/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

namespace cfdim {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string t;
  t.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  return t;
}

long long parse_ll(std::string_view tok, std::string_view whole) {
  long long v = 0;
  const char* b = tok.data();
  const char* e = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++b;
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc{} || res.ptr != e)
    throw Error("alphabet spec '" + std::string(whole) + "': bad integer '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Inner text of a "{...}" integer set, expanded to explicit values.
std::vector<long long> parse_int_set(std::string_view inner, std::string_view whole) {
  if (inner.empty()) throw Error("alphabet spec '" + std::string(whole) + "': empty set");
  std::vector<long long> vals;
  if (inner.find("..") != std::string_view::npos) {
    auto parts = split(inner, '.');
    // "a..b" splits into {a, "", b}
    if (parts.size() != 3 || !parts[1].empty())
      throw Error("alphabet spec '" + std::string(whole) + "': bad range '" + std::string(inner) + "'");
    long long lo = parse_ll(parts[0], whole);
    long long hi = parse_ll(parts[2], whole);
    if (lo > hi)
      throw Error("alphabet spec '" + std::string(whole) + "': empty range '" + std::string(inner) + "'");
    if (hi - lo >= (1ll << 24))
      throw Error("alphabet spec '" + std::string(whole) + "': rectangle side too large");
    for (long long v = lo; v <= hi; ++v) vals.push_back(v);
  } else {
    for (auto tok : split(inner, ',')) vals.push_back(parse_ll(tok, whole));
  }
  return vals;
}

}  // namespace

AlphabetSpec parse_alphabet(std::string_view text) {
  const std::string t = strip_spaces(text);
  if (t.empty()) throw Error("empty alphabet spec");

  AlphabetSpec spec;
  spec.text = t;

  if (t.front() == '{') {
    std::size_t close = t.find('}');
    if (close == std::string::npos)
      throw Error("alphabet spec '" + t + "': missing '}'");
    std::string_view inner(t.data() + 1, close - 1);

    if (close == t.size() - 1) {
      if (inner.empty()) throw Error("alphabet spec '" + t + "': empty set");
      if (inner.find("..") != std::string_view::npos) {
        auto parts = split(inner, '.');
        if (parts.size() != 3 || !parts[1].empty())
          throw Error("alphabet spec '" + t + "': bad range");
        spec.kind = AlphabetKind::IntegerRange;
        spec.lo = parse_ll(parts[0], t);
        spec.hi = parse_ll(parts[2], t);
        if (spec.lo > spec.hi) throw Error("alphabet spec '" + t + "': empty range");
      } else {
        spec.kind = AlphabetKind::ExplicitList;
        for (auto tok : split(inner, ',')) spec.digits.push_back(GaussianInt::parse(tok));
      }
      return spec;
    }

    // Rectangle form {...}x{...}i
    if (t[close + 1] != 'x')
      throw Error("alphabet spec '" + t + "': expected 'x' after first set");
    std::size_t open2 = close + 2;
    if (open2 >= t.size() || t[open2] != '{')
      throw Error("alphabet spec '" + t + "': expected '{' for imaginary set");
    std::size_t close2 = t.find('}', open2);
    if (close2 == std::string::npos || close2 + 2 != t.size() || t.back() != 'i')
      throw Error("alphabet spec '" + t + "': rectangle must end with '}i'");
    spec.kind = AlphabetKind::ComplexRectangle;
    spec.re_values = parse_int_set(inner, t);
    spec.im_values = parse_int_set(std::string_view(t.data() + open2 + 1, close2 - open2 - 1), t);
    return spec;
  }

  if (t.front() == 'F') {
    spec.kind = AlphabetKind::Cofinite;
    spec.cofinite_start = parse_ll(std::string_view(t).substr(1), t);
    if (spec.cofinite_start < 1)
      throw Error("alphabet spec '" + t + "': cofinite start must be >= 1");
    return spec;
  }

  if (t.back() == 'N') {
    spec.kind = AlphabetKind::Progression;
    spec.stride = parse_ll(std::string_view(t).substr(0, t.size() - 1), t);
    if (spec.stride < 1)
      throw Error("alphabet spec '" + t + "': progression stride must be >= 1");
    return spec;
  }

  throw Error("alphabet spec '" + t + "': unrecognized form");
}

AlphabetSpec load_alphabet_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open alphabet file '" + path + "'");
  AlphabetSpec spec;
  spec.kind = AlphabetKind::DigitFile;
  spec.text = "file:" + path;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string tok = strip_spaces(line);
    if (tok.empty()) continue;
    spec.digits.push_back(GaussianInt::parse(tok));
  }
  return spec;
}

std::vector<GaussianInt> materialize(const AlphabetSpec& spec) {
  std::vector<GaussianInt> out;
  const std::optional<long long>& ceil = spec.ceiling;
  if (ceil && *ceil < 1) throw Error("ceiling must be a positive integer");
  if (spec.infinite_kind() && !ceil)
    throw Error("alphabet '" + spec.text + "' is infinite; a ceiling is required to materialize it");

  constexpr long long kMaxDigits = 1ll << 26;
  auto check_span = [&](long long count) {
    if (count > kMaxDigits)
      throw Error("alphabet '" + spec.text + "' would materialize " + std::to_string(count) +
                  " digits; refusing (cap " + std::to_string(kMaxDigits) + ")");
  };

  switch (spec.kind) {
    case AlphabetKind::ExplicitList:
    case AlphabetKind::DigitFile:
      out = spec.digits;
      if (ceil)
        std::erase_if(out, [&](const GaussianInt& d) { return cmp(d.re, static_cast<long>(*ceil)) > 0; });
      break;
    case AlphabetKind::IntegerRange: {
      long long hi = ceil ? std::min(spec.hi, *ceil) : spec.hi;
      check_span(hi - spec.lo + 1);
      for (long long v = spec.lo; v <= hi; ++v) out.emplace_back(v);
      break;
    }
    case AlphabetKind::Progression:
      check_span(*ceil / spec.stride);
      for (long long v = spec.stride; v <= *ceil; v += spec.stride) out.emplace_back(v);
      break;
    case AlphabetKind::Cofinite:
      check_span(*ceil - spec.cofinite_start + 1);
      for (long long v = spec.cofinite_start; v <= *ceil; ++v) out.emplace_back(v);
      break;
    case AlphabetKind::ComplexRectangle: {
      std::vector<long long> re = spec.re_values;
      std::vector<long long> im = spec.im_values;
      std::sort(re.begin(), re.end());
      re.erase(std::unique(re.begin(), re.end()), re.end());
      std::sort(im.begin(), im.end());
      im.erase(std::unique(im.begin(), im.end()), im.end());
      check_span(static_cast<long long>(re.size()) * static_cast<long long>(im.size()));
      for (long long r : re) {
        if (ceil && r > *ceil) continue;
        for (long long i : im) out.emplace_back(r, i);
      }
      break;
    }
  }

  for (const GaussianInt& d : out)
    if (mpz_sgn(d.re.get_mpz_t()) <= 0)
      throw Error("alphabet '" + spec.text + "': digit " + d.str() + " has nonpositive real part");

  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw Error("alphabet '" + spec.text + "' materializes to the empty set");
  return out;
}

}  // namespace cfdim
