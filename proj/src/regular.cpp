#include "hg/regular.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "hg/errors.hpp"

namespace hg {

PermGroup holomorph(const CayleyTable& T) {
  if (T.size() > 16) throw SizeLimitError("holomorph limited to groups of order 16");
  std::vector<Perm> gens;
  for (int g : T.generating_sequence()) gens.push_back(T.right_translation(g));
  for (const Perm& a : T.automorphisms()) gens.push_back(a);
  PermGroup hol = PermGroup::from_generators(T.size(), std::move(gens));
  if (T.size() <= 8 && T.size() >= 1) {
    PermGroup norm = normalizer_in_sym(T.right_regular());
    if (!hol.same_elements(norm))
      throw Error("holomorph: N . Aut(N) does not match the normalizer of rho(N)");
  }
  return hol;
}

RegularClass enumerate_regular(int degree, const CayleyTable& T, const std::string& type_name) {
  if (T.size() != degree) throw PreconditionError("enumerate_regular: table size must equal degree");
  if (degree > 8) throw SizeLimitError("regular-class enumeration limited to degree 8");
  const PermGroup seed = T.right_regular();
  std::set<std::vector<Perm>> seen;
  for_each_perm(degree, [&](const Perm& g) {
    std::vector<Perm> conj;
    conj.reserve(seed.order());
    for (const Perm& x : seed.elements()) conj.push_back(conjugate(g, x));
    std::sort(conj.begin(), conj.end());
    seen.insert(std::move(conj));
    return true;
  });
  RegularClass cls;
  cls.type_name = type_name;
  cls.degree = degree;
  cls.members.reserve(seen.size());
  for (const auto& elems : seen) cls.members.push_back(PermGroup::from_elements(elems));

  // orbit-stabilizer: the stabilizer of rho(T) under conjugation is Hol(T)
  std::size_t factorial = 1;
  for (int i = 2; i <= degree; ++i) factorial *= static_cast<std::size_t>(i);
  const std::size_t hol = holomorph(T).order();
  if (cls.members.size() * hol != factorial)
    throw Error("enumerate_regular: class length " + std::to_string(cls.members.size()) +
                " violates orbit-stabilizer with |Hol| = " + std::to_string(hol));
  return cls;
}

RegularClass enumerate_regular8(IsoType8 t) {
  return enumerate_regular(8, CayleyTable::order8(t), to_string(t));
}

bool normalized_by(const PermGroup& N, const PermGroup& L) {
  if (!is_regular(N, N.degree())) throw PreconditionError("normalized_by: N is not regular");
  if (L.degree() != N.degree()) throw PreconditionError("normalized_by: degree mismatch");
  for (const Perm& l : L.generators())
    for (const Perm& x : N.generators())
      if (!N.contains(conjugate(l, x))) return false;
  return true;
}

bool holomorph_feasibility(const CayleyTable& T, std::size_t required_divisor) {
  if (required_divisor == 0) throw PreconditionError("holomorph_feasibility: zero divisor");
  return holomorph(T).order() % required_divisor == 0;
}

bool holomorph_feasibility(IsoType8 t, std::size_t required_divisor) {
  return holomorph_feasibility(CayleyTable::order8(t), required_divisor);
}

namespace {

// Closure of gens capped at `order` elements; empty result when the closure
// grows past the cap.
std::vector<Perm> closure_up_to(int degree, const std::vector<Perm>& gens, std::size_t order) {
  std::vector<Perm> elems{Perm::identity(degree)};
  std::unordered_set<std::uint64_t> seen{elems.front().key()};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm& g : gens) {
      Perm next = compose(g, elems[i]);
      if (seen.insert(next.key()).second) {
        if (elems.size() + 1 > order) return {};
        elems.push_back(std::move(next));
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool transitive_elems(int degree, const std::vector<Perm>& elems) {
  std::vector<bool> hit(static_cast<std::size_t>(degree), false);
  int count = 0;
  for (const Perm& g : elems) {
    int img = g.apply0(0);
    if (!hit[static_cast<std::size_t>(img)]) {
      hit[static_cast<std::size_t>(img)] = true;
      ++count;
    }
  }
  return count == degree;
}

// How many generators the probe needs, up to 3. Subgroups of that rank are
// reached by the matching generator-tuple pass.
int probe_rank(const PermGroup& probe) {
  const auto& e = probe.elements();
  if (probe.order() == 1) return 1;
  for (const Perm& a : e)
    if (generate_closure(probe.degree(), {a}).size() == probe.order()) return 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (generate_closure(probe.degree(), {e[i], e[j]}).size() == probe.order()) return 2;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      for (std::size_t k = j + 1; k < e.size(); ++k)
        if (generate_closure(probe.degree(), {e[i], e[j], e[k]}).size() == probe.order()) return 3;
  throw SizeLimitError("subgroup probe supports probes of rank <= 3");
}

// Visits every subgroup of H of exactly the given order that is generated
// by at most max_gens elements. Rank-k subgroups are reached by extending
// the distinct rank-(k-1) closures one pool element at a time, so repeated
// closures are computed once.
template <typename Visit>
void scan_subgroups(const PermGroup& H, std::size_t order, int max_gens, Visit visit) {
  // elements whose order divides the target order (Lagrange filter)
  std::vector<Perm> pool;
  for (const Perm& g : H.elements())
    if (order % static_cast<std::size_t>(g.order()) == 0) pool.push_back(g);

  std::set<std::vector<Perm>> seen;       // all distinct closures of order dividing the target
  std::vector<std::vector<Perm>> layer;   // closures found in the previous pass

  auto admit = [&](std::vector<Perm> sub, std::vector<std::vector<Perm>>& next) {
    if (sub.empty() || order % sub.size() != 0) return false;
    const bool exact = sub.size() == order;
    if (!seen.insert(sub).second) return false;
    if (exact) return visit(sub);
    next.push_back(std::move(sub));
    return false;
  };

  std::vector<std::vector<Perm>> next;
  for (const Perm& g : pool)
    if (admit(closure_up_to(H.degree(), {g}, order), next)) return;
  layer = std::move(next);

  for (int pass = 2; pass <= max_gens; ++pass) {
    next.clear();
    for (const std::vector<Perm>& sub : layer)
      for (const Perm& g : pool) {
        if (std::binary_search(sub.begin(), sub.end(), g)) continue;
        std::vector<Perm> gens(sub.begin(), sub.end());
        gens.push_back(g);
        if (admit(closure_up_to(H.degree(), gens, order), next)) return;
      }
    layer = std::move(next);
  }
}

}  // namespace

bool has_transitive_iso_subgroup(const PermGroup& H, std::size_t order, const PermGroup& probe) {
  if (H.order() > 1500) throw SizeLimitError("subgroup probe limited to |H| <= 1500");
  if (order > H.order() || H.order() % order != 0) return false;
  if (probe.order() != order) throw PreconditionError("probe order does not match requested order");

  const int rank = probe_rank(probe);
  bool found = false;
  scan_subgroups(H, order, rank, [&](const std::vector<Perm>& sub) {
    if (!transitive_elems(H.degree(), sub)) return false;
    if (isomorphisms(PermGroup::from_elements(sub), probe).empty()) return false;
    found = true;
    return true;  // stop
  });
  return found;
}

std::vector<PermGroup> transitive_subgroups_of_order(const PermGroup& H, std::size_t order,
                                                     int max_gens) {
  if (H.order() > 1500) throw SizeLimitError("subgroup probe limited to |H| <= 1500");
  std::vector<PermGroup> out;
  if (order > H.order() || H.order() % order != 0) return out;
  scan_subgroups(H, order, max_gens, [&](const std::vector<Perm>& sub) {
    if (transitive_elems(H.degree(), sub)) out.push_back(PermGroup::from_elements(sub));
    return false;  // keep scanning
  });
  std::sort(out.begin(), out.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.elements() < b.elements(); });
  return out;
}

}  // namespace hg
