#ifndef HG_GP_HPP
#define HG_GP_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hg/group.hpp"
#include "hg/regular.hpp"
#include "hg/tables.hpp"

namespace hg {

/// The coset-translation embedding lambda : G -> Sym(G/G') for a subgroup
/// G' of G, together with the chosen coset enumeration. Point 1 is the
/// coset G'; point_reps[i] is an element g_i with lambda(g_i)(1) = i+1,
/// produced by breadth-first search over generator words starting at the
/// identity coset. Immutable once built (canonical_relabel returns a
/// rewritten copy through its ctx reference).
struct GPContext {
  PermGroup G;
  PermGroup Gp;
  int n = 0;                       // index [G : G']
  std::vector<Perm> lambda_gens;   // aligned with G.generators()
  PermGroup lambda_G;              // image group, degree n
  PermGroup lambda_Gp;
  std::vector<Perm> point_reps;    // size n, 0-based points

  /// lambda(g) for an arbitrary element of G.
  const Perm& lambda_of(const Perm& g) const;

  /// Index (0-based) of the coset of g.
  int coset_of(const Perm& g) const;

  std::map<Perm, Perm> lambda_map;  // every element of G -> its image
};

/// Builds lambda from (G, G'). Validates that G' <= G, that the index is
/// at most 16, and that the computed action is a homomorphism.
GPContext build_lambda(const PermGroup& G, const PermGroup& Gp);

/// Finds the unique relabeling pi of the points, fixing point 1, with
/// pi lambda(g) pi^{-1} = target(g) for every generator, and rewrites ctx
/// in the new coordinates. Throws PreconditionError when no relabeling
/// exists. target_gen_images is aligned with G.generators().
Perm canonical_relabel(GPContext& ctx, const std::vector<Perm>& target_gen_images);

/// One Hopf-Galois structure: a regular subgroup N normalized by lambda(G),
/// with a label and a named generating set ("basis"). For elementary
/// abelian N the basis gives every element a unique word.
struct HGStructure {
  std::string label;
  PermGroup N;
  std::string type_name;
  std::vector<std::pair<std::string, Perm>> basis;

  /// Word in the named basis (subset product, elementary abelian 2-groups
  /// only); falls back to cycle notation.
  std::string word_for(const Perm& n) const;
};

struct FindOptions {
  bool use_feasibility_filters = true;
};

/// All regular subgroups of Sym(G/G') normalized by lambda(G), one per
/// Hopf-Galois structure. Labels N_1..N_k follow the lexicographic order
/// of the element lists; when the discovered family coincides with the
/// published degree-8 family, its labels and generator names are used.
std::vector<HGStructure> find_structures(const GPContext& ctx, const FindOptions& opts = {});

/// A subgroup S <= N stable under conjugation by lambda(G), with the
/// corresponding subgroup G_S <= G and the degree over k of the fixed
/// field it cuts out.
struct StableSubgroup {
  PermGroup S;
  PermGroup G_S;
  std::string field;
  int degree_over_k = 0;
  bool proper_nontrivial = false;
};

std::vector<StableSubgroup> stable_subgroups(const GPContext& ctx, const HGStructure& H);

/// Generators of a subgroup S <= N chosen greedily by shortest word in
/// the structure's basis, so tables read like <r_1,s_1> rather than an
/// arbitrary element pick.
std::vector<Perm> word_generators(const HGStructure& H, const PermGroup& S);

/// G_S = {g in G : lambda(g)(1) lies in the S-orbit of point 1}. Throws
/// PreconditionError when the result is not closed (S was not stable).
PermGroup fixed_field_subgroup(const GPContext& ctx, const PermGroup& S);

/// Resolves a subgroup of G to a field label. "k" for G and "K" for G'
/// always; for the generic-quartic setup (G = S4 of degree 4, |G'| = 3)
/// also "k(α)" for the stabilizer of the G'-fixed root and "k(√δ)" for A4;
/// any other subgroup is labeled K~^<gens>.
std::string field_label(const GPContext& ctx, const PermGroup& H);

/// A G-isomorphism between two structures: a group isomorphism
/// N_source -> N_target commuting with conjugation by all of lambda(G).
struct GIso {
  std::string source_label;
  std::string target_label;
  GroupMap map;
};

std::vector<GIso> g_isomorphisms(const GPContext& ctx, const HGStructure& A, const HGStructure& B);

/// All s in S_n realizing iso.map as conjugation, with the coboundary
/// check s lambda(g)^{-1} s lambda(g) in Cent(N_source) per generator.
struct ImplementerReport {
  std::vector<Perm> candidates;
  std::optional<Perm> chosen;  // preferring candidates whose coboundaries are all trivial
  struct Coboundary {
    Perm gen;       // generator of G
    Perm value;     // s lambda(g)^{-1} s lambda(g)
    bool in_centralizer = false;
  };
  std::vector<Coboundary> coboundaries;  // for the chosen candidate
};

ImplementerReport conjugation_implementer(const GPContext& ctx, const PermGroup& sourceN,
                                          const GroupMap& map);

/// {g in G : lambda(g) n lambda(g)^{-1} = n}.
PermGroup conj_stabilizer(const GPContext& ctx, const Perm& n);

/// One orbit of G acting on N by conjugation through lambda. The free
/// datum of an element of K~[N]^G is one coefficient per orbit, lying in
/// the fixed field of the representative's stabilizer; the remaining
/// coefficients are Galois transports.
struct ConjOrbit {
  Perm rep;
  PermGroup stabilizer;              // <= G
  std::string stabilizer_field;
  std::vector<std::pair<Perm, Perm>> members;  // (element, transporter g: g.rep.g^{-1} = element)
};

std::vector<ConjOrbit> orbit_fixed_conditions(const GPContext& ctx, const HGStructure& H);

/// Comparison of the two canonical regular subgroups lambda(G) and rho(G)
/// inside Sym(G) (G' = 1): group isomorphy, G-isomorphisms, both stable
/// lattices and whether they induce the same correspondence image.
struct LambdaRhoReport {
  GPContext ctx;
  HGStructure lambda_structure;
  HGStructure rho_structure;
  bool isomorphic = false;
  std::vector<GIso> g_isos;
  std::vector<StableSubgroup> lambda_stable;
  std::vector<StableSubgroup> rho_stable;
  bool same_correspondence_image = false;
  bool conjugation_action_on_rho_trivial = false;
};

LambdaRhoReport lambda_rho_compare(const CayleyTable& T);

/// Published generator sets of the four degree-8 structures, used to align
/// discovery labels with the customary N_1..N_4 numbering.
struct CatalogEntry {
  std::string label;
  std::vector<std::pair<std::string, std::string>> gens;  // name -> cycle string
};
const std::vector<CatalogEntry>& reference_catalog();

/// The (G, G') input of the degree-8 example together with the published
/// lambda generator images used for canonical relabeling.
GPContext paper_example_context();

}  // namespace hg

#endif
