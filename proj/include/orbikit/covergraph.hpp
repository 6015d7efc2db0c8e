#pragma once

// Covering graphs of wedges of circles: Stallings folding of the subgroups
// G (for X = sphere minus P_f) and H (for Y = X minus the preimages of P_f),
// congruence membership, and the homology-level lifting check.

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "orbikit/cases.hpp"
#include "orbikit/word.hpp"

namespace orbikit {

struct GraphEdge {
  int source = 0;
  int label = 0;  // generator index
  int target = 0;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Folded, basepointed labeled graph. Vertices are numbered in BFS order from
// the basepoint (vertex 0), so isomorphic folded graphs compare equal.
class CoverGraph {
 public:
  CoverGraph(int rank, int vertex_count, std::vector<GraphEdge> edges);

  int rank() const noexcept { return rank_; }
  int vertex_count() const noexcept { return vertex_count_; }
  int basepoint() const noexcept { return 0; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }

  // Follows a signed letter from v; nullopt if the edge is missing.
  std::optional<int> step(int v, int letter) const;
  bool is_full_cover() const;

  friend bool operator==(const CoverGraph&, const CoverGraph&) = default;

 private:
  int rank_ = 0;
  int vertex_count_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<int> out_;  // out_[v * rank + g], -1 if absent
  std::vector<int> in_;
};

// Stallings core graph of the subgroup generated by `generators` in the free
// group of the given rank.
CoverGraph fold(const std::vector<Word>& generators, int rank);

// True iff the reduced word traces a closed path at the basepoint.
bool graph_member(const CoverGraph& graph, const Word& word);

struct SheetsAndRank {
  int sheets = 0;
  int rank = 0;
  friend bool operator==(const SheetsAndRank&, const SheetsAndRank&) = default;
};
// (vertex count, E - V + 1). Throws NotFullCover.
SheetsAndRank sheets_and_rank(const CoverGraph& graph);

// DOT digraph: one edge per label, basepoint double-circled.
void write_dot(std::ostream& os, const CoverGraph& graph, const Alphabet& alphabet,
               const std::string& name = "cover");

// Case congruence on X-homology. Throws RankMismatch.
bool congruence_member(OrbifoldCase c, const HomologyVector& v);
// Same linear form on Y-homology: puncture coordinates carry weight 0.
bool congruence_member_y(OrbifoldCase c, const HomologyVector& v);

Alphabet x_alphabet(OrbifoldCase c);
Alphabet y_alphabet(OrbifoldCase c, int punctures);

// Generator family of G = pi_*(pi_1(X~)). Throws UnknownCase.
std::vector<Word> subgroup_G(OrbifoldCase c);
// Generator family of H for `punctures` puncture loops g1..gn.
std::vector<Word> subgroup_H(OrbifoldCase c, int punctures);

// Image of each Y-generator in X-homology (alpha, beta[, eps], g1..gn).
using Assignment = std::vector<HomologyVector>;

// Puncture target of g_i: 0..x_rank-1 name the X generators' punctures,
// x_rank names the omitted puncture whose class is minus their sum.
using PunctureTargets = std::vector<int>;

// The class of target t: e_t, or -(sum of e_i) for t == x_rank.
HomologyVector puncture_class(OrbifoldCase c, int target);
// Allowed images of the non-puncture Y-generator `generator`.
std::vector<HomologyVector> legal_regular_images(OrbifoldCase c, int generator);
// Targets a critical puncture preimage may map to.
std::vector<int> legal_puncture_targets(OrbifoldCase c);
// The forced image of g_i given its target (local degree times class).
HomologyVector puncture_image(OrbifoldCase c, int target);

// Sum over generators of exponent * image.
HomologyVector induced_image(const Word& h, const Assignment& assignment, int x_rank);

// f_#(H) in G on homology, with no legality check on the assignment.
bool lift_criterion(OrbifoldCase c, const Assignment& assignment);

// lift_criterion after checking every image against the case's legal sets
// and the puncture targets. Throws IllegalAssignment.
bool lift_check(OrbifoldCase c, const Assignment& assignment,
                const PunctureTargets& puncture_targets);

}  // namespace orbikit
