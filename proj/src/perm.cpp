#include "sublab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sublab/errors.hpp"

namespace sublab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw FormatError("permutation degree must be positive");
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x])
      throw FormatError("image array is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree <= 0) throw FormatError("permutation degree must be positive");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
  return Permutation(std::move(img));
}

std::uint64_t Permutation::order() const {
  std::vector<char> done(images_.size(), 0);
  std::uint64_t ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (done[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !done[j]; j = images_[j]) {
      done[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::cycles() const {
  std::vector<char> done(images_.size(), 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (done[i] || images_[i] == i) {
      done[i] = 1;
      continue;
    }
    any = true;
    out << '(';
    bool first = true;
    for (int j = i; !done[j]; j = images_[j]) {
      done[j] = 1;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Permutation Permutation::from_cycles(const std::string& text, int degree) {
  if (degree <= 0) throw FormatError("permutation degree must be positive");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw FormatError("empty permutation");
  std::vector<char> used(degree, 0);
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw FormatError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos == text.size()) throw FormatError("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw FormatError("expected point number in cycle");
      int v = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v < 1 || v > degree)
        throw FormatError("point " + std::to_string(v) +
                          " out of range 1.." + std::to_string(degree));
      if (used[v - 1])
        throw FormatError("point " + std::to_string(v) + " repeated");
      used[v - 1] = 1;
      cyc.push_back(v - 1);
    }
    for (size_t i = 0; i < cyc.size(); ++i)
      img[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeError("compose: degree mismatch (" +
                      std::to_string(a.degree()) + " vs " +
                      std::to_string(b.degree()) + ")");
  std::vector<int> img(a.degree());
  for (int x = 0; x < a.degree(); ++x) img[x] = b(a(x));
  return Permutation(std::move(img));
}

Permutation conjugate_perm(const Permutation& p, const Permutation& g) {
  return compose(compose(g.inverse(), p), g);
}

}  // namespace sublab
