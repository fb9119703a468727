#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tollcvx/convexity.hpp"
#include "tollcvx/graph.hpp"
#include "tollcvx/invariants.hpp"
#include "tollcvx/product.hpp"
#include "tollcvx/report.hpp"

namespace tollcvx {

/// Pairwise disjoint vertex sets (A,B,C) priced as |A| + 2|B| + tnH*|C|.
/// Valid as a toll-dominating triple when every vertex outside C is interior
/// to some toll interval between members of A∪B∪C or adjacent to a member
/// of B∪C.
struct TollTriple {
    VertexSet a;
    VertexSet b;
    VertexSet c;
};

long long triple_cost(const TollTriple& t, int tn_h);

bool toll_dominating_valid(const Graph& g, const TollTriple& t);
bool toll_dominating_valid(const Graph& g, const IntervalTable& table, const TollTriple& t);

struct TripleSearchOptions {
    int max_vertices = 9;
};

struct TripleSearchResult {
    long long cost = 0;
    TollTriple triple;
};

/// Minimum cost over all valid toll-dominating triples, cost-ascending over
/// (|A|,|B|,|C|) profiles and lexicographic within a profile, so the reported
/// witness is deterministic.
TripleSearchResult min_toll_dominating_cost(const Graph& g, int tn_h,
                                            const TripleSearchOptions& options = {});

/// Closed-form toll interval in G∘H:
///   g != g':            ((T_G(g,g') - {g,g'}) x V(H)) ∪ {(g,h),(g',h')}
///   g = g', h' ∉ N_H[h]: (N_G(g) x V(H)) ∪ ({g} x T_H(h,h'))
///   g = g', h' ∈ N_H[h]: {g} x T_H(h,h')
/// Indexing matches ProductGraph::encode for the lexicographic product.
VertexSet lex_toll_interval(const Graph& g, const Graph& h,
                            std::pair<int, int> p, std::pair<int, int> q);

struct FormulaCheckOptions {
    int max_product_vertices = 60;
};

/// Compares lex_toll_interval against toll_interval computed directly on
/// G∘H for every vertex pair; mismatches become violations.
VerificationReport verify_lex_interval_formula(const Graph& g, const Graph& h,
                                               const FormulaCheckOptions& options = {});

enum class CharacterizationVersion { corrected, original };

/// Structural characterization of proper non-clique t-convex sets in G□H:
/// Y must be a product set with one whole complete factor while the other
/// projection induces a path whose inner vertices have degree 2 in their
/// factor; the corrected version additionally requires that path to be the
/// unique path between its endpoints.
bool cartesian_tconvex_characterization(const Graph& g, const Graph& h, const VertexSet& y,
                                        CharacterizationVersion version);

struct CartesianTn2Options {
    int max_product_vertices = 40;
};

/// Confirms tn(G□H) = th(G□H) = 2 and reports the regime
/// (both factors non-complete / one complete / both complete) plus a witness
/// toll pair.
VerificationReport verify_cartesian_tn2(const Graph& g, const Graph& h,
                                        const CartesianTn2Options& options = {});

struct LexTollOptions {
    TripleSearchOptions triple;
    /// Product-size cap for the exact brute-force route when H is complete.
    int brute_product_ceiling = 24;
    SearchOptions search;
};

/// Exact toll number of G∘H, or bounds when only bounds are available.
/// For non-complete H this is the minimum toll-dominating-triple cost; for
/// complete K_n it is brute force within the ceiling, otherwise the interval
/// [n*|Ext(G)|, n*tn(G)] with exact = false.
struct LexTollNumber {
    int lower = 0;
    int upper = 0;
    bool exact = true;
    std::optional<TollTriple> triple;  // optimizer witness when that route ran

    int value() const { return lower; }  // meaningful when exact
};

LexTollNumber lex_toll_number(const Graph& g, const Graph& h, const LexTollOptions& options = {});

/// tn(G∘H) = 2 iff G has a universal vertex and tn(H) = 2 (H not K2).
bool lex_tn2_characterization(const Graph& g, const Graph& h, const SearchOptions& options = {});

/// Outcome of the four-condition test for tn(G∘H) = 3*tn(G) when
/// |Ext(G)| >= 2. Witness semantics by failed condition:
///   1: empty; 2: empty; 3: the pair {x,y} with N(x) ∪ N(y) = V(G);
///   4: {u,v} when d(u,v) < 3, else the z with no qualifying x.
struct CharacterizationVerdict {
    bool holds = true;
    std::optional<int> failed_condition;  // 1..4
    std::vector<int> witness;
    /// Set when the distance-3 sub-clause of condition 4 gave different
    /// answers for different adjacent (u',v') choices; reported, not resolved.
    bool condition4_pair_dependent = false;
};

CharacterizationVerdict lex_3tn_conditions(const Graph& g, const Graph& h,
                                           const SearchOptions& options = {});

struct HullBoundsOptions {
    int max_product_vertices = 40;
    SearchOptions search;
};

/// Checks n*|Ext(G)| <= th(G∘K_n) <= n*th(G) (and the same bounds for tn),
/// plus th(G∘H) = 2 when a non-complete H is supplied.
VerificationReport lex_hull_bounds_check(const Graph& g, int n,
                                         const Graph* non_complete_h = nullptr,
                                         const HullBoundsOptions& options = {});

struct Lemma012Options {
    int max_product_vertices = 40;
    SearchOptions search;
};

/// Every minimum toll set of G∘H meets each H-layer in 0, 1, 2 or tn(H)
/// vertices; checked over all minimum sets.
VerificationReport lemma012_check(const Graph& g, const Graph& h,
                                  const Lemma012Options& options = {});

}  // namespace tollcvx
