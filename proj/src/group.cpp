#include "hg/group.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hg/errors.hpp"

namespace hg {

const char* to_string(IsoType8 t) {
  switch (t) {
    case IsoType8::C8: return "C8";
    case IsoType8::C2xC4: return "C2xC4";
    case IsoType8::C2xC2xC2: return "C2xC2xC2";
    case IsoType8::D8: return "D8";
    case IsoType8::Q8: return "Q8";
  }
  return "?";
}

const IsoType8 all_iso_types8[5] = {IsoType8::C8, IsoType8::C2xC4, IsoType8::C2xC2xC2,
                                    IsoType8::D8, IsoType8::Q8};

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  g.gens_ = {Perm::identity(degree)};
  g.elements_ = {Perm::identity(degree)};
  return g;
}

PermGroup PermGroup::symmetric(int degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    gens.push_back(Perm::parse("(1,2)", degree));
    if (degree >= 3) {
      std::string cyc = "(1";
      for (int i = 2; i <= degree; ++i) cyc += "," + std::to_string(i);
      cyc += ")";
      gens.push_back(Perm::parse(cyc, degree));
    }
  }
  return from_generators(degree, std::move(gens));
}

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens, std::size_t cap) {
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = generate_closure(degree, gens, cap);
  if (gens.empty()) gens.push_back(Perm::identity(degree));
  g.gens_ = std::move(gens);
  return g;
}

PermGroup PermGroup::from_elements(std::vector<Perm> elements) {
  if (elements.empty()) throw PreconditionError("from_elements: empty element list");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup g;
  g.degree_ = elements.front().degree();
  for (const Perm& p : elements)
    if (p.degree() != g.degree_) throw PreconditionError("from_elements: mixed degrees");
  if (!elements.front().is_identity())
    throw PreconditionError("from_elements: identity missing");
  g.elements_ = std::move(elements);
  PermGroup probe = g;
  probe.gens_ = g.elements_;
  g.gens_ = generating_sequence(probe);
  return g;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::contains_all(const PermGroup& sub) const {
  if (sub.degree_ != degree_) return false;
  for (const Perm& p : sub.elements_)
    if (!contains(p)) return false;
  return true;
}

bool PermGroup::same_elements(const PermGroup& other) const {
  return degree_ == other.degree_ && elements_ == other.elements_;
}

bool PermGroup::is_transitive() const {
  return static_cast<int>(orbit_of(0).size()) == degree_;
}

bool PermGroup::is_abelian() const {
  const auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  return true;
}

bool PermGroup::validate_closure() const {
  for (const Perm& a : elements_) {
    if (!contains(a.inverse())) return false;
    for (const Perm& b : elements_)
      if (!contains(compose(a, b))) return false;
  }
  return true;
}

PermGroup PermGroup::conjugated(const Perm& g) const {
  std::vector<Perm> elems;
  elems.reserve(elements_.size());
  for (const Perm& x : elements_) elems.push_back(conjugate(g, x));
  std::sort(elems.begin(), elems.end());
  PermGroup out;
  out.degree_ = degree_;
  out.elements_ = std::move(elems);
  out.gens_.reserve(gens_.size());
  for (const Perm& x : gens_) out.gens_.push_back(conjugate(g, x));
  return out;
}

std::vector<int> PermGroup::orbit_of(int point0) const {
  std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
  std::vector<int> orbit{point0};
  seen[static_cast<std::size_t>(point0)] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const Perm& g : gens_) {
      int img = g.apply0(orbit[i]);
      if (!seen[static_cast<std::size_t>(img)]) {
        seen[static_cast<std::size_t>(img)] = true;
        orbit.push_back(img);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

PermGroup PermGroup::stabilizer_of(int point0) const {
  std::vector<Perm> elems;
  for (const Perm& g : elements_)
    if (g.apply0(point0) == point0) elems.push_back(g);
  return from_elements(std::move(elems));
}

PermGroup PermGroup::intersection(const PermGroup& other) const {
  if (other.degree_ != degree_) throw PreconditionError("intersection: degree mismatch");
  std::vector<Perm> elems;
  const PermGroup& small = order() <= other.order() ? *this : other;
  const PermGroup& big = order() <= other.order() ? other : *this;
  for (const Perm& g : small.elements())
    if (big.contains(g)) elems.push_back(g);
  return from_elements(std::move(elems));
}

std::vector<Perm> generate_closure(int degree, const std::vector<Perm>& gens, std::size_t cap) {
  if (cap < 1) throw PreconditionError("generate_closure: cap must be >= 1");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw PreconditionError("generate_closure: degree mismatch");
  std::vector<Perm> elems{Perm::identity(degree)};
  std::unordered_set<std::uint64_t> seen{elems.front().key()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : gens) {
      Perm next = compose(g, elems[i]);
      if (seen.insert(next.key()).second) {
        if (elems.size() + 1 > cap)
          throw SizeLimitError("generate_closure: cap of " + std::to_string(cap) + " exceeded");
        elems.push_back(std::move(next));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<Perm> generating_sequence(const PermGroup& H) {
  std::vector<Perm> gens;
  std::size_t closure_size = 1;
  std::vector<Perm> closure{Perm::identity(H.degree())};
  std::unordered_set<std::uint64_t> in_closure{closure.front().key()};
  for (const Perm& cand : H.elements()) {
    if (closure_size == H.order()) break;
    if (in_closure.count(cand.key())) continue;
    gens.push_back(cand);
    closure = generate_closure(H.degree(), gens);
    closure_size = closure.size();
    in_closure.clear();
    for (const Perm& p : closure) in_closure.insert(p.key());
  }
  if (gens.empty()) gens.push_back(Perm::identity(H.degree()));
  return gens;
}

std::vector<Perm> minimal_generators(const PermGroup& H) {
  if (H.order() == 1) return {Perm::identity(H.degree())};
  const auto& e = H.elements();
  for (const Perm& x : e)
    if (!x.is_identity() && generate_closure(H.degree(), {x}).size() == H.order()) return {x};
  if (H.order() <= 64) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i].is_identity()) continue;
      for (std::size_t j = i + 1; j < e.size(); ++j)
        if (generate_closure(H.degree(), {e[i], e[j]}).size() == H.order()) return {e[i], e[j]};
    }
  }
  return generating_sequence(H);
}

bool is_regular(const PermGroup& H, int degree) {
  if (H.degree() != degree) throw PreconditionError("is_regular: degree mismatch");
  return H.order() == static_cast<std::size_t>(degree) && H.is_transitive();
}

namespace {

// Both scans only need the generators of N: conjugation is an automorphism,
// so g<gens>g^{-1} <= N of equal order forces equality, and commuting with
// the generators commutes with everything they generate.
PermGroup scan_sym(const PermGroup& N, bool normalizer) {
  if (N.degree() > 8) throw SizeLimitError("symmetric-group scan limited to degree 8");
  const auto gens = generating_sequence(N);
  std::vector<Perm> hits;
  for_each_perm(N.degree(), [&](const Perm& g) {
    bool ok = true;
    for (const Perm& x : gens) {
      if (normalizer) {
        if (!N.contains(conjugate(g, x))) {
          ok = false;
          break;
        }
      } else {
        if (compose(g, x) != compose(x, g)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) hits.push_back(g);
    return true;
  });
  return PermGroup::from_elements(std::move(hits));
}

}  // namespace

PermGroup normalizer_in_sym(const PermGroup& N) { return scan_sym(N, true); }

PermGroup centralizer_in_sym(const PermGroup& N) { return scan_sym(N, false); }

PermGroup center(const PermGroup& H) {
  const auto gens = generating_sequence(H);
  std::vector<Perm> elems;
  for (const Perm& z : H.elements()) {
    bool central = true;
    for (const Perm& g : gens)
      if (compose(z, g) != compose(g, z)) {
        central = false;
        break;
      }
    if (central) elems.push_back(z);
  }
  return PermGroup::from_elements(std::move(elems));
}

std::vector<PermGroup> subgroups(const PermGroup& H) {
  if (H.order() > 64) throw SizeLimitError("subgroup enumeration limited to order 64");
  // Start from the cyclic subgroups and close under single-element
  // extensions; every subgroup arises along a chain <x1> <= <x1,x2> <= ...
  // so the result is complete whatever the rank.
  std::set<std::vector<Perm>> found;
  std::vector<std::vector<Perm>> work;
  auto push = [&](std::vector<Perm> elems) {
    if (found.insert(elems).second) work.push_back(std::move(elems));
  };
  push(generate_closure(H.degree(), {}));
  for (std::size_t i = 0; i < work.size(); ++i) {
    const std::vector<Perm> current = work[i];
    for (const Perm& x : H.elements()) {
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      std::vector<Perm> gens = current;
      gens.push_back(x);
      push(generate_closure(H.degree(), gens, H.order()));
    }
  }
  std::vector<PermGroup> out;
  out.reserve(found.size());
  for (const auto& elems : found) out.push_back(PermGroup::from_elements(elems));
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

namespace {

// Expresses every element of A as gen * previous, starting at the identity.
struct Factorization {
  std::vector<Perm> elems;              // BFS order, elems[0] = id
  std::vector<int> via_gen;             // generator index used, -1 for id
  std::vector<int> via_parent;          // index into elems, -1 for id
};

Factorization factorize(const PermGroup& A, const std::vector<Perm>& gens) {
  Factorization f;
  f.elems.push_back(Perm::identity(A.degree()));
  f.via_gen.push_back(-1);
  f.via_parent.push_back(-1);
  std::unordered_map<std::uint64_t, int> index{{f.elems[0].key(), 0}};
  for (std::size_t i = 0; i < f.elems.size(); ++i) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Perm next = compose(gens[gi], f.elems[i]);
      if (index.emplace(next.key(), static_cast<int>(f.elems.size())).second) {
        f.elems.push_back(std::move(next));
        f.via_gen.push_back(static_cast<int>(gi));
        f.via_parent.push_back(static_cast<int>(i));
      }
    }
  }
  return f;
}

}  // namespace

std::vector<GroupMap> isomorphisms(const PermGroup& A, const PermGroup& B) {
  if (A.order() > 64 || B.order() > 64)
    throw SizeLimitError("isomorphism search limited to order 64");
  std::vector<GroupMap> result;
  if (A.order() != B.order()) return result;

  const std::vector<Perm> gens = generating_sequence(A);
  const Factorization fact = factorize(A, gens);

  // candidate images, filtered by element order
  std::vector<std::vector<Perm>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int ord = gens[i].order();
    for (const Perm& b : B.elements())
      if (b.order() == ord) candidates[i].push_back(b);
    if (candidates[i].empty()) return result;
  }

  std::vector<Perm> images(gens.size());
  const auto& a_elems = A.elements();

  auto try_tuple = [&]() {
    // derive the map over all of A via the factorization
    std::vector<Perm> phi(fact.elems.size());
    phi[0] = Perm::identity(B.degree());
    for (std::size_t i = 1; i < fact.elems.size(); ++i)
      phi[i] = compose(images[static_cast<std::size_t>(fact.via_gen[i])],
                       phi[static_cast<std::size_t>(fact.via_parent[i])]);
    GroupMap map;
    std::set<Perm> image_set;
    for (std::size_t i = 0; i < fact.elems.size(); ++i) {
      map[fact.elems[i]] = phi[i];
      image_set.insert(phi[i]);
    }
    if (image_set.size() != B.order()) return;  // not bijective
    for (const Perm& x : image_set)
      if (!B.contains(x)) return;
    // full multiplication-table check
    for (const Perm& x : a_elems)
      for (const Perm& y : a_elems)
        if (map.at(compose(x, y)) != compose(map.at(x), map.at(y))) return;
    result.push_back(std::move(map));
  };

  // odometer over candidate tuples
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
  return result;
}

IsoType8 order8_type(const PermGroup& H) {
  if (H.order() != 8) throw PreconditionError("order8_type: group order is not 8");
  int involutions = 0;
  bool has8 = false;
  for (const Perm& g : H.elements()) {
    const int o = g.order();
    if (o == 2) ++involutions;
    if (o == 8) has8 = true;
  }
  if (has8) return IsoType8::C8;
  if (involutions == 7) return IsoType8::C2xC2xC2;
  if (involutions == 5) return IsoType8::D8;
  if (involutions == 3) return IsoType8::C2xC4;
  if (involutions == 1) return IsoType8::Q8;
  throw PreconditionError("order8_type: element orders do not match any group of order 8");
}

}  // namespace hg
