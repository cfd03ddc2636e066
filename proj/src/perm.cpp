#include "hg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hg/errors.hpp"

namespace hg {

Perm::Perm(int degree) {
  if (degree < 0 || degree > max_degree)
    throw PreconditionError("permutation degree out of range: " + std::to_string(degree));
  images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  const int n = degree();
  if (n > max_degree) throw PreconditionError("permutation degree out of range");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::uint8_t v : images_) {
    if (v >= n || seen[v]) throw PreconditionError("image array is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::operator*(const Perm& rhs) const { return compose(*this, rhs); }

Perm Perm::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  return Perm(std::move(inv));
}

int Perm::order() const {
  // lcm of cycle lengths
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = apply0(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (apply0(i) != i) return false;
  return true;
}

bool Perm::is_even() const {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = apply0(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::uint64_t Perm::key() const {
  std::uint64_t k = 0;
  for (std::uint8_t v : images_) k = (k << 4) | v;
  return k;
}

std::string Perm::cycle_string() const {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)] || apply0(i) == i) {
      seen[static_cast<std::size_t>(i)] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = apply0(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm Perm::parse(std::string_view text, int degree) {
  if (degree < 0 || degree > max_degree) throw PreconditionError("parse: degree out of range");
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation string");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle string");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!cycle.empty()) {
        if (text[i] != ',') throw ParseError("expected ',' between cycle points");
        ++i;
        skip_ws();
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("expected point number in cycle");
      int pt = std::stoi(std::string(text.substr(start, i - start)));
      if (pt < 1 || pt > degree) throw ParseError("cycle point out of range: " + std::to_string(pt));
      cycle.push_back(pt);
      skip_ws();
    }
    if (i == text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    if (!cycle.empty()) {
      std::vector<bool> in_cycle(static_cast<std::size_t>(degree) + 1, false);
      for (int pt : cycle) {
        if (in_cycle[static_cast<std::size_t>(pt)]) throw ParseError("point repeated within a cycle");
        in_cycle[static_cast<std::size_t>(pt)] = true;
      }
      if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
    }
    skip_ws();
  }
  // Compose cycles right-to-left (for disjoint cycles the order is moot).
  Perm result(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
    for (int p = 0; p < degree; ++p) img[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(p);
    const auto& c = *it;
    for (std::size_t j = 0; j < c.size(); ++j)
      img[static_cast<std::size_t>(c[j] - 1)] = static_cast<std::uint8_t>(c[(j + 1) % c.size()] - 1);
    result = compose(Perm(std::move(img)), result);
  }
  return result;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw PreconditionError("compose: degree mismatch");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x)
    img[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(p.apply0(q.apply0(x)));
  return Perm(std::move(img));
}

Perm conjugate(const Perm& g, const Perm& x) { return compose(compose(g, x), g.inverse()); }

void for_each_perm(int degree, const std::function<bool(const Perm&)>& fn) {
  if (degree > 8)
    throw SizeLimitError("full symmetric-group scan limited to degree 8");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  do {
    if (!fn(Perm(img))) return;
  } while (std::next_permutation(img.begin(), img.end()));
}

}  // namespace hg
