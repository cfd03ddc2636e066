#include "hg/gp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "hg/errors.hpp"

namespace hg {

const Perm& GPContext::lambda_of(const Perm& g) const {
  auto it = lambda_map.find(g);
  if (it == lambda_map.end()) throw PreconditionError("lambda_of: element not in G");
  return it->second;
}

int GPContext::coset_of(const Perm& g) const { return lambda_of(g).apply0(0); }

namespace {

// Minimal element of the coset g*Gp, used as the coset key.
Perm coset_key(const Perm& g, const PermGroup& Gp) {
  Perm best;
  for (const Perm& h : Gp.elements()) {
    Perm member = compose(g, h);
    if (!best.valid() || member < best) best = member;
  }
  return best;
}

void fill_lambda_map(GPContext& ctx) {
  // every element of G -> the point of its coset, one pass over the cosets
  std::unordered_map<std::uint64_t, int> point_of;
  point_of.reserve(ctx.G.order() * 2);
  for (int i = 0; i < ctx.n; ++i)
    for (const Perm& h : ctx.Gp.elements())
      point_of[compose(ctx.point_reps[static_cast<std::size_t>(i)], h).key()] = i;
  if (point_of.size() != ctx.G.order()) throw Error("lambda: coset enumeration is not a partition");
  ctx.lambda_map.clear();
  for (const Perm& g : ctx.G.elements()) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(ctx.n));
    for (int i = 0; i < ctx.n; ++i) {
      auto it = point_of.find(compose(g, ctx.point_reps[static_cast<std::size_t>(i)]).key());
      if (it == point_of.end()) throw Error("lambda: coset escaped the enumeration");
      img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(it->second);
    }
    ctx.lambda_map.emplace(g, Perm(std::move(img)));
  }
  ctx.lambda_gens.clear();
  for (const Perm& g : ctx.G.generators()) ctx.lambda_gens.push_back(ctx.lambda_map.at(g));
  ctx.lambda_G = PermGroup::from_generators(ctx.n, ctx.lambda_gens);
  std::vector<Perm> gp_images;
  for (const Perm& h : ctx.Gp.elements()) gp_images.push_back(ctx.lambda_map.at(h));
  ctx.lambda_Gp = PermGroup::from_elements(std::move(gp_images));
}

void validate_context(const GPContext& ctx) {
  // homomorphism on generators against every element
  for (const Perm& g : ctx.G.generators())
    for (const Perm& x : ctx.G.elements())
      if (ctx.lambda_of(compose(g, x)) != compose(ctx.lambda_of(g), ctx.lambda_of(x)))
        throw Error("lambda is not a homomorphism");
  if (!ctx.lambda_G.is_transitive()) throw Error("lambda(G) is not transitive");
  if (!ctx.lambda_G.stabilizer_of(0).same_elements(ctx.lambda_Gp))
    throw Error("stabilizer of point 1 is not lambda(G')");
  if (!ctx.point_reps[0].is_identity()) throw Error("point 1 representative is not the identity");
  for (int i = 0; i < ctx.n; ++i)
    if (ctx.lambda_of(ctx.point_reps[static_cast<std::size_t>(i)]).apply0(0) != i)
      throw Error("point representative does not reach its point");
}

}  // namespace

GPContext build_lambda(const PermGroup& G, const PermGroup& Gp) {
  if (Gp.degree() != G.degree() || !G.contains_all(Gp))
    throw PreconditionError("build_lambda: G' is not a subgroup of G");
  if (G.order() % Gp.order() != 0) throw PreconditionError("build_lambda: |G'| does not divide |G|");
  const int n = static_cast<int>(G.order() / Gp.order());
  if (n > 16) throw SizeLimitError("build_lambda: index above 16");

  GPContext ctx;
  ctx.G = G;
  ctx.Gp = Gp;
  ctx.n = n;

  // BFS over generator words from the identity coset; discovery order is
  // the coset enumeration.
  std::map<Perm, int> point_of;
  ctx.point_reps.push_back(Perm::identity(G.degree()));
  point_of[coset_key(ctx.point_reps[0], Gp)] = 0;
  for (std::size_t i = 0; i < ctx.point_reps.size(); ++i)
    for (const Perm& g : G.generators()) {
      Perm rep = compose(g, ctx.point_reps[i]);
      Perm key = coset_key(rep, Gp);
      if (!point_of.count(key)) {
        point_of[key] = static_cast<int>(ctx.point_reps.size());
        ctx.point_reps.push_back(std::move(rep));
      }
    }
  if (static_cast<int>(ctx.point_reps.size()) != n)
    throw Error("build_lambda: coset enumeration did not reach the full index");

  fill_lambda_map(ctx);
  validate_context(ctx);
  return ctx;
}

Perm canonical_relabel(GPContext& ctx, const std::vector<Perm>& target_gen_images) {
  if (target_gen_images.size() != ctx.G.generators().size())
    throw PreconditionError("canonical_relabel: one target image per generator required");
  for (const Perm& t : target_gen_images)
    if (t.degree() != ctx.n) throw PreconditionError("canonical_relabel: target degree mismatch");

  // Transitivity forces pi: propagate pi(1) = 1 along generator edges.
  std::vector<int> pi(static_cast<std::size_t>(ctx.n), -1);
  pi[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int a = queue[qi];
    for (std::size_t gi = 0; gi < target_gen_images.size(); ++gi) {
      const int b = ctx.lambda_gens[gi].apply0(a);
      const int image = target_gen_images[gi].apply0(pi[static_cast<std::size_t>(a)]);
      if (pi[static_cast<std::size_t>(b)] == -1) {
        pi[static_cast<std::size_t>(b)] = image;
        queue.push_back(b);
      } else if (pi[static_cast<std::size_t>(b)] != image) {
        throw PreconditionError("canonical_relabel: target inconsistent with the action");
      }
    }
  }
  std::vector<std::uint8_t> img(static_cast<std::size_t>(ctx.n));
  std::vector<bool> hit(static_cast<std::size_t>(ctx.n), false);
  for (int i = 0; i < ctx.n; ++i) {
    if (pi[static_cast<std::size_t>(i)] == -1 || hit[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])])
      throw PreconditionError("canonical_relabel: relabeling is not a bijection");
    hit[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] = true;
    img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(pi[static_cast<std::size_t>(i)]);
  }
  Perm relabel(std::move(img));

  for (std::size_t gi = 0; gi < target_gen_images.size(); ++gi)
    if (conjugate(relabel, ctx.lambda_gens[gi]) != target_gen_images[gi])
      throw PreconditionError("canonical_relabel: verification failed");

  // rewrite the context: new point i is old point pi^{-1}(i)
  const Perm inv = relabel.inverse();
  std::vector<Perm> reps(static_cast<std::size_t>(ctx.n));
  for (int i = 0; i < ctx.n; ++i)
    reps[static_cast<std::size_t>(i)] = ctx.point_reps[static_cast<std::size_t>(inv.apply0(i))];
  ctx.point_reps = std::move(reps);
  fill_lambda_map(ctx);
  validate_context(ctx);
  return relabel;
}

std::string HGStructure::word_for(const Perm& n) const {
  if (n.is_identity()) return "Id";
  // subset products over the basis, in basis order; unique for elementary
  // abelian 2-groups
  const std::size_t k = basis.size();
  if (k > 0 && k <= 8) {
    for (std::size_t mask = 1; mask < (1u << k); ++mask) {
      Perm prod = Perm::identity(N.degree());
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) prod = compose(prod, basis[i].second);
      if (prod == n) {
        std::string word;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1u << i)) word += basis[i].first;
        return word;
      }
    }
  }
  return n.cycle_string();
}

const std::vector<CatalogEntry>& reference_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {"N_1",
       {{"r_1", "(1,3)(2,4)(5,7)(6,8)"},
        {"s_1", "(1,8)(2,7)(3,6)(4,5)"},
        {"t", "(1,7)(2,8)(3,5)(4,6)"}}},
      {"N_2",
       {{"r_2", "(1,3)(2,6)(4,8)(5,7)"},
        {"s_2", "(1,4)(2,5)(3,8)(6,7)"},
        {"t", "(1,7)(2,8)(3,5)(4,6)"}}},
      {"N_3",
       {{"r_3", "(1,6)(2,4)(3,8)(5,7)"},
        {"s_3", "(1,7)(2,3)(4,8)(5,6)"},
        {"t_3", "(1,8)(2,5)(3,6)(4,7)"}}},
      {"N_4",
       {{"r_4", "(1,3)(2,5)(4,7)(6,8)"},
        {"s_4", "(1,7)(2,6)(3,4)(5,8)"},
        {"t_4", "(1,6)(2,7)(3,8)(4,5)"}}},
  };
  return catalog;
}

GPContext paper_example_context() {
  const PermGroup G = PermGroup::from_generators(4, {Perm::parse("(1,2,3,4)", 4), Perm::parse("(1,2)", 4)});
  const PermGroup Gp = PermGroup::from_generators(4, {Perm::parse("(2,3,4)", 4)});
  GPContext ctx = build_lambda(G, Gp);
  canonical_relabel(ctx, {Perm::parse("(1,2,3,4)(5,6,7,8)", 8), Perm::parse("(1,2)(3,5)(4,6)(7,8)", 8)});
  return ctx;
}

namespace {

std::string classify_type(const PermGroup& N) {
  if (N.order() == 8) return to_string(order8_type(N));
  for (const auto& [name, table] : CayleyTable::of_order(static_cast<int>(N.order())))
    if (!isomorphisms(N, table.right_regular()).empty()) return name;
  return "order" + std::to_string(N.order());
}

std::vector<std::pair<std::string, Perm>> generic_basis(const PermGroup& N) {
  std::vector<std::pair<std::string, Perm>> basis;
  int i = 1;
  for (const Perm& g : generating_sequence(N)) {
    basis.emplace_back("g" + std::to_string(i), g);
    ++i;
  }
  return basis;
}

}  // namespace

std::vector<HGStructure> find_structures(const GPContext& ctx, const FindOptions& opts) {
  std::vector<HGStructure> out;
  const std::size_t lg_order = ctx.lambda_G.order();
  for (const auto& [name, table] : CayleyTable::of_order(ctx.n)) {
    if (opts.use_feasibility_filters) {
      if (!holomorph_feasibility(table, lg_order)) continue;
      // lambda(G) <= Hol(N) must embed as a transitive subgroup
      if (!has_transitive_iso_subgroup(holomorph(table), lg_order, ctx.lambda_G)) continue;
    }
    RegularClass cls = enumerate_regular(ctx.n, table, name);
    for (PermGroup& member : cls.members)
      if (normalized_by(member, ctx.lambda_G)) {
        HGStructure s;
        s.type_name = name;
        s.N = std::move(member);
        out.push_back(std::move(s));
      }
  }
  std::sort(out.begin(), out.end(),
            [](const HGStructure& a, const HGStructure& b) { return a.N.elements() < b.N.elements(); });
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].label = "N_" + std::to_string(i + 1);
    out[i].basis = generic_basis(out[i].N);
  }

  // Align with the published numbering when the families coincide.
  if (ctx.n == 8) {
    const auto& catalog = reference_catalog();
    if (out.size() == catalog.size()) {
      std::vector<HGStructure> relabeled;
      for (const CatalogEntry& entry : catalog) {
        std::vector<Perm> gens;
        std::vector<std::pair<std::string, Perm>> basis;
        for (const auto& [gname, cycles] : entry.gens) {
          Perm p = Perm::parse(cycles, 8);
          gens.push_back(p);
          basis.emplace_back(gname, p);
        }
        PermGroup reference = PermGroup::from_generators(8, gens);
        auto match = std::find_if(out.begin(), out.end(), [&](const HGStructure& s) {
          return s.N.same_elements(reference);
        });
        if (match == out.end()) break;
        HGStructure s = *match;
        s.label = entry.label;
        s.basis = std::move(basis);
        relabeled.push_back(std::move(s));
      }
      if (relabeled.size() == out.size()) out = std::move(relabeled);
    }
  }
  return out;
}

PermGroup fixed_field_subgroup(const GPContext& ctx, const PermGroup& S) {
  std::vector<bool> orbit(static_cast<std::size_t>(ctx.n), false);
  for (const Perm& s : S.elements()) orbit[static_cast<std::size_t>(s.apply0(0))] = true;
  std::vector<Perm> elems;
  for (const Perm& g : ctx.G.elements())
    if (orbit[static_cast<std::size_t>(ctx.coset_of(g))]) elems.push_back(g);
  PermGroup G_S = PermGroup::from_elements(std::move(elems));
  if (!G_S.validate_closure())
    throw PreconditionError("fixed_field_subgroup: G_S is not closed; S is not a stable subgroup");
  if (G_S.order() != ctx.Gp.order() * S.order())
    throw Error("fixed_field_subgroup: |G_S| != |G'|*|S|");
  return G_S;
}

std::string field_label(const GPContext& ctx, const PermGroup& H) {
  if (H.same_elements(ctx.G)) return "k";
  if (H.same_elements(ctx.Gp)) return "K";
  // generic-quartic recognition: G = S4 on the four roots, G' of order 3
  if (ctx.G.degree() == 4 && ctx.G.order() == 24 && ctx.Gp.order() == 3) {
    std::vector<Perm> even;
    for (const Perm& g : ctx.G.elements())
      if (g.is_even()) even.push_back(g);
    if (PermGroup::from_elements(even).same_elements(H)) return "k(√δ)";  // k(√δ)
    int fixed_root = -1;
    for (int r = 0; r < 4; ++r) {
      bool fixed = true;
      for (const Perm& h : ctx.Gp.elements())
        if (h.apply0(r) != r) {
          fixed = false;
          break;
        }
      if (fixed) {
        fixed_root = r;
        break;
      }
    }
    if (fixed_root >= 0 && ctx.G.stabilizer_of(fixed_root).same_elements(H)) return "k(α)";  // k(α)
  }
  if (H.order() == 1) return "K~";
  std::string label = "K~^<";
  bool first = true;
  for (const Perm& g : minimal_generators(H)) {
    if (!first) label += ",";
    label += g.cycle_string();
    first = false;
  }
  label += ">";
  return label;
}

std::vector<StableSubgroup> stable_subgroups(const GPContext& ctx, const HGStructure& H) {
  std::vector<StableSubgroup> out;
  for (const PermGroup& S : subgroups(H.N)) {
    bool stable = true;
    for (const Perm& l : ctx.lambda_G.generators()) {
      for (const Perm& s : S.generators())
        if (!S.contains(conjugate(l, s))) {
          stable = false;
          break;
        }
      if (!stable) break;
    }
    if (!stable) continue;
    StableSubgroup entry;
    entry.S = S;
    entry.G_S = fixed_field_subgroup(ctx, S);
    entry.field = field_label(ctx, entry.G_S);
    entry.degree_over_k = static_cast<int>(static_cast<std::size_t>(ctx.n) / S.order());
    entry.proper_nontrivial = S.order() > 1 && S.order() < static_cast<std::size_t>(ctx.n);
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

// (word length, word) order on elements of a structure
std::vector<Perm> word_sorted(const HGStructure& H, const std::vector<Perm>& elems) {
  std::vector<std::pair<std::string, Perm>> tagged;
  tagged.reserve(elems.size());
  for (const Perm& p : elems) tagged.emplace_back(H.word_for(p), p);
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Perm> out;
  out.reserve(tagged.size());
  for (auto& [w, p] : tagged) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::vector<Perm> word_generators(const HGStructure& H, const PermGroup& S) {
  if (S.order() == 1) return {Perm::identity(S.degree())};
  std::vector<Perm> gens;
  std::size_t closure_size = 1;
  for (const Perm& cand : word_sorted(H, S.elements())) {
    if (closure_size == S.order()) break;
    if (cand.is_identity()) continue;
    std::vector<Perm> attempt = gens;
    attempt.push_back(cand);
    const std::size_t grown = generate_closure(S.degree(), attempt).size();
    if (grown > closure_size) {
      gens = std::move(attempt);
      closure_size = grown;
    }
  }
  return gens;
}

std::vector<GIso> g_isomorphisms(const GPContext& ctx, const HGStructure& A, const HGStructure& B) {
  std::vector<GIso> out;
  for (GroupMap& map : isomorphisms(A.N, B.N)) {
    bool equivariant = true;
    for (const Perm& l : ctx.lambda_G.generators()) {
      for (const Perm& n : A.N.elements())
        if (map.at(conjugate(l, n)) != conjugate(l, map.at(n))) {
          equivariant = false;
          break;
        }
      if (!equivariant) break;
    }
    if (!equivariant) continue;
    GIso iso;
    iso.source_label = A.label;
    iso.target_label = B.label;
    iso.map = std::move(map);
    out.push_back(std::move(iso));
  }
  return out;
}

ImplementerReport conjugation_implementer(const GPContext& ctx, const PermGroup& sourceN,
                                          const GroupMap& map) {
  ImplementerReport report;
  const auto gens = generating_sequence(sourceN);
  for_each_perm(ctx.n, [&](const Perm& s) {
    for (const Perm& n : gens)
      if (conjugate(s, n) != map.at(n)) return true;
    report.candidates.push_back(s);
    return true;
  });
  if (report.candidates.empty()) return report;

  const PermGroup cent = centralizer_in_sym(sourceN);
  auto coboundaries_of = [&](const Perm& s) {
    std::vector<ImplementerReport::Coboundary> cbs;
    for (const Perm& g : ctx.G.generators()) {
      const Perm& lg = ctx.lambda_of(g);
      ImplementerReport::Coboundary cb;
      cb.gen = g;
      cb.value = compose(compose(compose(s, lg.inverse()), s), lg);
      cb.in_centralizer = cent.contains(cb.value);
      cbs.push_back(std::move(cb));
    }
    return cbs;
  };

  // prefer an implementer whose coboundaries are all trivial
  for (const Perm& s : report.candidates) {
    auto cbs = coboundaries_of(s);
    bool all_trivial = std::all_of(cbs.begin(), cbs.end(),
                                   [](const auto& cb) { return cb.value.is_identity(); });
    if (all_trivial) {
      report.chosen = s;
      report.coboundaries = std::move(cbs);
      break;
    }
  }
  if (!report.chosen) {
    report.chosen = report.candidates.front();
    report.coboundaries = coboundaries_of(*report.chosen);
  }
  return report;
}

PermGroup conj_stabilizer(const GPContext& ctx, const Perm& n) {
  std::vector<Perm> elems;
  for (const Perm& g : ctx.G.elements())
    if (conjugate(ctx.lambda_of(g), n) == n) elems.push_back(g);
  return PermGroup::from_elements(std::move(elems));
}

std::vector<ConjOrbit> orbit_fixed_conditions(const GPContext& ctx, const HGStructure& H) {
  std::vector<ConjOrbit> out;
  std::set<Perm> assigned;
  for (const Perm& n : H.N.elements()) {
    if (assigned.count(n)) continue;
    std::set<Perm> orbit_set;
    for (const Perm& g : ctx.G.elements()) orbit_set.insert(conjugate(ctx.lambda_of(g), n));
    // representative: shortest word in the basis (the free coefficient of
    // the fixed-algebra description)
    const Perm rep = word_sorted(H, {orbit_set.begin(), orbit_set.end()}).front();
    // lexicographically minimal transporter per member
    std::map<Perm, Perm> rooted;
    for (const Perm& g : ctx.G.elements()) {
      Perm img = conjugate(ctx.lambda_of(g), rep);
      auto it = rooted.find(img);
      if (it == rooted.end() || g < it->second) rooted[img] = g;
    }
    ConjOrbit orbit;
    orbit.rep = rep;
    orbit.stabilizer = conj_stabilizer(ctx, rep);
    orbit.stabilizer_field = field_label(ctx, orbit.stabilizer);
    for (const Perm& member : word_sorted(H, {orbit_set.begin(), orbit_set.end()})) {
      orbit.members.emplace_back(member, rooted.at(member));
      assigned.insert(member);
    }
    out.push_back(std::move(orbit));
  }
  std::sort(out.begin(), out.end(), [](const ConjOrbit& a, const ConjOrbit& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.rep < b.rep;
  });
  return out;
}

LambdaRhoReport lambda_rho_compare(const CayleyTable& T) {
  if (T.size() > 16) throw SizeLimitError("lambda_rho_compare limited to order 16");
  LambdaRhoReport report;
  const PermGroup G = T.left_regular();
  report.ctx = build_lambda(G, PermGroup::trivial(T.size()));
  const GPContext& ctx = report.ctx;

  // rho in the same coordinates: point i carries the coset (= element)
  // rep_i, and right translation sends it to rep_i * g.
  std::vector<Perm> rho_elems;
  for (const Perm& g : G.elements()) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(ctx.n));
    for (int i = 0; i < ctx.n; ++i)
      img[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(ctx.coset_of(compose(ctx.point_reps[static_cast<std::size_t>(i)], g)));
    rho_elems.emplace_back(std::move(img));
  }

  report.lambda_structure.label = "lambda(G)";
  report.lambda_structure.N = ctx.lambda_G;
  report.lambda_structure.type_name = classify_type(ctx.lambda_G);
  report.lambda_structure.basis = generic_basis(ctx.lambda_G);

  report.rho_structure.label = "rho(G)";
  report.rho_structure.N = PermGroup::from_elements(std::move(rho_elems));
  report.rho_structure.type_name = classify_type(report.rho_structure.N);
  report.rho_structure.basis = generic_basis(report.rho_structure.N);

  if (!is_regular(report.rho_structure.N, ctx.n)) throw Error("rho(G) is not regular");
  if (!normalized_by(report.rho_structure.N, ctx.lambda_G))
    throw Error("rho(G) is not normalized by lambda(G)");

  // left and right translations commute, so conjugation by lambda fixes
  // every element of rho(G)
  report.conjugation_action_on_rho_trivial = true;
  for (const Perm& l : ctx.lambda_G.generators())
    for (const Perm& r : report.rho_structure.N.elements())
      if (conjugate(l, r) != r) report.conjugation_action_on_rho_trivial = false;

  report.isomorphic = !isomorphisms(report.lambda_structure.N, report.rho_structure.N).empty();
  report.g_isos = g_isomorphisms(ctx, report.lambda_structure, report.rho_structure);
  report.lambda_stable = stable_subgroups(ctx, report.lambda_structure);
  report.rho_stable = stable_subgroups(ctx, report.rho_structure);

  std::set<std::vector<Perm>> lambda_images, rho_images;
  for (const StableSubgroup& s : report.lambda_stable) lambda_images.insert(s.G_S.elements());
  for (const StableSubgroup& s : report.rho_stable) rho_images.insert(s.G_S.elements());
  report.same_correspondence_image = lambda_images == rho_images;
  return report;
}

}  // namespace hg
