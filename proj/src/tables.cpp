#include "hg/tables.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hg/errors.hpp"

namespace hg {

CayleyTable CayleyTable::cyclic(int n) {
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return CayleyTable(std::move(mul));
}

CayleyTable CayleyTable::direct_product(const CayleyTable& A, const CayleyTable& B) {
  const int na = A.size(), nb = B.size(), n = na * nb;
  auto idx = [nb](int a, int b) { return a * nb + b; };
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1)
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          mul[static_cast<std::size_t>(idx(a1, b1))][static_cast<std::size_t>(idx(a2, b2))] =
              idx(A.mul(a1, a2), B.mul(b1, b2));
  return CayleyTable(std::move(mul));
}

CayleyTable CayleyTable::dihedral(int n) {
  // elements r^a s^b, index a + n*b, with s r s^{-1} = r^{-1}:
  // (r^a s^b)(r^c s^d) = r^{a + (-1)^b c} s^{b+d}
  const int sz = 2 * n;
  auto idx = [n](int a, int b) { return a + n * b; };
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(sz), std::vector<int>(static_cast<std::size_t>(sz)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < 2; ++d) {
          const int rot = ((b == 0 ? a + c : a - c) % n + n) % n;
          mul[static_cast<std::size_t>(idx(a, b))][static_cast<std::size_t>(idx(c, d))] =
              idx(rot, (b + d) % 2);
        }
  return CayleyTable(std::move(mul));
}

CayleyTable CayleyTable::quaternion() {
  // elements (sign, u) with u in {1, i, j, k}, index u + 4*sign
  static const int bmul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int bsgn[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // bsgn[u][v]: sign of u*v, with i*j=k, j*k=i, k*i=j and u*u=-1 for u!=1.
  // Row u, column v; e.g. i*j = +k (bsgn[1][2]=0) and j*i = -k (bsgn[2][1]=1).
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  for (int s1 = 0; s1 < 2; ++s1)
    for (int u = 0; u < 4; ++u)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int v = 0; v < 4; ++v) {
          const int w = bmul[u][v];
          const int s = (s1 + s2 + bsgn[u][v]) % 2;
          mul[static_cast<std::size_t>(u + 4 * s1)][static_cast<std::size_t>(v + 4 * s2)] = w + 4 * s;
        }
  return CayleyTable(std::move(mul));
}

CayleyTable CayleyTable::order8(IsoType8 t) {
  switch (t) {
    case IsoType8::C8: return cyclic(8);
    case IsoType8::C2xC4: return direct_product(cyclic(2), cyclic(4));
    case IsoType8::C2xC2xC2: return direct_product(cyclic(2), direct_product(cyclic(2), cyclic(2)));
    case IsoType8::D8: return dihedral(4);
    case IsoType8::Q8: return quaternion();
  }
  throw PreconditionError("order8: bad type");
}

std::vector<std::pair<std::string, CayleyTable>> CayleyTable::of_order(int n) {
  switch (n) {
    case 1: return {{"C1", cyclic(1)}};
    case 2: return {{"C2", cyclic(2)}};
    case 3: return {{"C3", cyclic(3)}};
    case 4: return {{"C4", cyclic(4)}, {"C2xC2", direct_product(cyclic(2), cyclic(2))}};
    case 5: return {{"C5", cyclic(5)}};
    case 6: return {{"C6", cyclic(6)}, {"S3", dihedral(3)}};
    case 7: return {{"C7", cyclic(7)}};
    case 8: {
      std::vector<std::pair<std::string, CayleyTable>> out;
      for (IsoType8 t : all_iso_types8) out.emplace_back(to_string(t), order8(t));
      return out;
    }
    default:
      throw SizeLimitError("group tables available for orders 1..8 only");
  }
}

CayleyTable CayleyTable::parse(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    int v;
    while (ls >> v) row.push_back(v - 1);
    if (!ls.eof()) throw ParseError("Cayley table: non-numeric entry");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("Cayley table: no rows");
  const int n = static_cast<int>(rows.size());
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != n) throw ParseError("Cayley table: ragged rows");
  for (const auto& row : rows)
    for (int v : row)
      if (v < 0 || v >= n) throw ParseError("Cayley table: entry out of range");
  CayleyTable t(std::move(rows));
  t.validate();
  return t;
}

std::string CayleyTable::serialize() const {
  std::string out;
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (b) out += ' ';
      out += std::to_string(mul(a, b) + 1);
    }
    out += '\n';
  }
  return out;
}

int CayleyTable::inverse_of(int a) const {
  for (int b = 0; b < size(); ++b)
    if (mul(a, b) == 0) return b;
  throw PreconditionError("Cayley table: element without inverse");
}

int CayleyTable::order_of(int a) const {
  int x = a, ord = 1;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

void CayleyTable::validate() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw PreconditionError("Cayley table: element 1 is not the identity");
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(static_cast<std::size_t>(n), false), col(static_cast<std::size_t>(n), false);
    for (int b = 0; b < n; ++b) {
      if (row[static_cast<std::size_t>(mul(a, b))]) throw PreconditionError("Cayley table: repeated row entry");
      if (col[static_cast<std::size_t>(mul(b, a))]) throw PreconditionError("Cayley table: repeated column entry");
      row[static_cast<std::size_t>(mul(a, b))] = true;
      col[static_cast<std::size_t>(mul(b, a))] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw PreconditionError("Cayley table: not associative");
}

Perm CayleyTable::right_translation(int a) const {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(size()));
  for (int x = 0; x < size(); ++x) img[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(mul(x, a));
  return Perm(std::move(img));
}

Perm CayleyTable::left_translation(int a) const {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(size()));
  for (int x = 0; x < size(); ++x) img[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(mul(a, x));
  return Perm(std::move(img));
}

PermGroup CayleyTable::right_regular() const {
  std::vector<Perm> elems;
  elems.reserve(static_cast<std::size_t>(size()));
  for (int a = 0; a < size(); ++a) elems.push_back(right_translation(a));
  return PermGroup::from_elements(std::move(elems));
}

PermGroup CayleyTable::left_regular() const {
  std::vector<Perm> elems;
  elems.reserve(static_cast<std::size_t>(size()));
  for (int a = 0; a < size(); ++a) elems.push_back(left_translation(a));
  return PermGroup::from_elements(std::move(elems));
}

std::vector<int> CayleyTable::generating_sequence() const {
  std::vector<int> gens;
  std::set<int> closure{0};
  auto close = [&]() {
    std::vector<int> work(closure.begin(), closure.end());
    for (std::size_t i = 0; i < work.size(); ++i)
      for (int g : gens) {
        int next = mul(g, work[i]);
        if (closure.insert(next).second) work.push_back(next);
      }
  };
  for (int cand = 1; cand < size(); ++cand) {
    if (static_cast<int>(closure.size()) == size()) break;
    if (closure.count(cand)) continue;
    gens.push_back(cand);
    close();
  }
  return gens;
}

std::vector<Perm> CayleyTable::automorphisms() const {
  const int n = size();
  const std::vector<int> gens = generating_sequence();
  std::vector<Perm> result;
  if (gens.empty()) {
    result.push_back(Perm::identity(n));
    return result;
  }

  // factorize every element as gen * previous
  std::vector<int> via_gen(static_cast<std::size_t>(n), -1), via_parent(static_cast<std::size_t>(n), -1);
  std::vector<int> bfs{0};
  {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[0] = true;
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        int next = mul(gens[gi], bfs[i]);
        if (!seen[static_cast<std::size_t>(next)]) {
          seen[static_cast<std::size_t>(next)] = true;
          via_gen[static_cast<std::size_t>(next)] = static_cast<int>(gi);
          via_parent[static_cast<std::size_t>(next)] = bfs[i];
          bfs.push_back(next);
        }
      }
  }

  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int ord = order_of(gens[static_cast<std::size_t>(i)]);
    for (int b = 0; b < n; ++b)
      if (order_of(b) == ord) candidates[i].push_back(b);
  }

  std::vector<int> images(gens.size());
  auto try_tuple = [&]() {
    std::vector<int> phi(static_cast<std::size_t>(n), -1);
    phi[0] = 0;
    for (int e : bfs) {
      if (e == 0) continue;
      phi[static_cast<std::size_t>(e)] =
          mul(images[static_cast<std::size_t>(via_gen[static_cast<std::size_t>(e)])],
              phi[static_cast<std::size_t>(via_parent[static_cast<std::size_t>(e)])]);
    }
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : phi) {
      if (hit[static_cast<std::size_t>(v)]) return;
      hit[static_cast<std::size_t>(v)] = true;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (phi[static_cast<std::size_t>(mul(a, b))] !=
            mul(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]))
          return;
    std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) img[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(phi[static_cast<std::size_t>(x)]);
    result.emplace_back(std::move(img));
  };

  std::vector<std::size_t> idx(gens.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][idx[i]];
    try_tuple();
    std::size_t pos = 0;
    while (pos < gens.size()) {
      if (++idx[pos] < candidates[pos].size()) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == gens.size()) break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::pair<CayleyTable, Perm> abstract_table(const PermGroup& N) {
  if (!is_regular(N, N.degree())) throw PreconditionError("abstract_table: group is not regular");
  const int n = N.degree();
  // element index = position in the sorted element list; the identity is
  // lexicographically minimal, hence index 0 as required
  const auto& elems = N.elements();
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  auto index_of = [&](const Perm& p) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          index_of(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  CayleyTable table(std::move(mul));
  // m: point x -> index of the unique element mapping the base point 0 to x
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)].apply0(0))] = static_cast<std::uint8_t>(i);
  return {std::move(table), Perm(std::move(m))};
}

}  // namespace hg
