#pragma once

#include <string>

#include "gss/cstar/algebra.hpp"

namespace gss::cstar {

// Rational literal: "p", "p/q", with optional sign.
inline Rational parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  auto to_int = [](const std::string& t) -> long long {
    size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("malformed rational: " + t);
    return v;
  };
  if (slash == std::string::npos) return Rational(to_int(text));
  return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

// Gaussian rational literal "a+bi" with rational a, b: "3", "-1/2", "i",
// "-i", "2/3i", "1/2+3/4i", "1-2i".
inline GaussianRational parse_gaussian_rational(std::string text) {
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  if (text.back() != 'i') return GaussianRational(parse_rational(text));
  // split off the imaginary term: find the +/- that separates the parts
  // (not a leading sign and not inside a fraction)
  size_t split = std::string::npos;
  for (size_t i = 1; i + 1 < text.size(); ++i) {
    if (text[i] == '+' || text[i] == '-') split = i;
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    re_part = "0";
    im_part = text.substr(0, text.size() - 1);
  } else {
    re_part = text.substr(0, split);
    im_part = text.substr(split, text.size() - split - 1);
  }
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return {parse_rational(re_part), parse_rational(im_part)};
}

// Point literal "(k; x1,x2,...; y1,y2,...)" with a 1-based block index.
inline GssPointC<GaussianRational> parse_point(const FdAlgebra& algebra, const std::string& text) {
  std::string t = text;
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw std::invalid_argument("point literal must be parenthesized: " + text);
  t = t.substr(1, t.size() - 2);
  size_t s1 = t.find(';');
  size_t s2 = t.find(';', s1 == std::string::npos ? s1 : s1 + 1);
  if (s1 == std::string::npos || s2 == std::string::npos)
    throw std::invalid_argument("point literal needs two ';' separators: " + text);
  int block = std::stoi(t.substr(0, s1)) - 1;
  auto parse_coords = [](const std::string& part) {
    std::vector<GaussianRational> out;
    size_t pos = 0;
    while (pos <= part.size()) {
      size_t comma = part.find(',', pos);
      std::string tok =
          part.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      out.push_back(parse_gaussian_rational(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  };
  std::vector<GaussianRational> xs = parse_coords(t.substr(s1 + 1, s2 - s1 - 1));
  std::vector<GaussianRational> ys = parse_coords(t.substr(s2 + 1));
  Vector<GaussianRational> x(static_cast<Index>(xs.size()));
  Vector<GaussianRational> y(static_cast<Index>(ys.size()));
  for (size_t i = 0; i < xs.size(); ++i) x(static_cast<Index>(i)) = xs[i];
  for (size_t i = 0; i < ys.size(); ++i) y(static_cast<Index>(i)) = ys[i];
  return canonicalize_point<GaussianRational>(algebra, block, std::move(x), std::move(y));
}

inline std::string format_point(const GssPointC<GaussianRational>& p) {
  std::string out = "(" + std::to_string(p.block + 1) + "; ";
  for (Index i = 0; i < p.x.size(); ++i) {
    if (i) out += ",";
    out += p.x(i).str();
  }
  out += "; ";
  for (Index i = 0; i < p.y.size(); ++i) {
    if (i) out += ",";
    out += p.y(i).str();
  }
  return out + ")";
}

}  // namespace gss::cstar
