#include "orbikit/covergraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "orbikit/error.hpp"

namespace orbikit {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

class UnionFind {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  // Keeps the smaller representative.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<Word> parse_all(const std::vector<std::string>& texts, const Alphabet& alphabet) {
  std::vector<Word> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_word(t, alphabet));
  return out;
}

HomologyVector unit(int rank, int i, std::int64_t scale = 1) {
  HomologyVector v(static_cast<std::size_t>(rank), 0);
  v[static_cast<std::size_t>(i)] = scale;
  return v;
}

HomologyVector scaled(HomologyVector v, std::int64_t s) {
  for (auto& x : v) x *= s;
  return v;
}

}  // namespace

CoverGraph::CoverGraph(int rank, int vertex_count, std::vector<GraphEdge> edges)
    : rank_(rank), vertex_count_(vertex_count), edges_(std::move(edges)) {
  const auto slots = static_cast<std::size_t>(rank_) * static_cast<std::size_t>(vertex_count_);
  out_.assign(slots, -1);
  in_.assign(slots, -1);
  for (const auto& e : edges_) {
    auto& o = out_[static_cast<std::size_t>(e.source * rank_ + e.label)];
    auto& i = in_[static_cast<std::size_t>(e.target * rank_ + e.label)];
    if (o != -1 || i != -1) {
      throw Error(ErrorCode::InternalInconsistency, "cover graph is not folded");
    }
    o = e.target;
    i = e.source;
  }
}

std::optional<int> CoverGraph::step(int v, int letter) const {
  const int g = std::abs(letter) - 1;
  if (g >= rank_) return std::nullopt;
  const auto& table = letter > 0 ? out_ : in_;
  const int next = table[static_cast<std::size_t>(v * rank_ + g)];
  if (next < 0) return std::nullopt;
  return next;
}

bool CoverGraph::is_full_cover() const {
  return std::none_of(out_.begin(), out_.end(), [](int x) { return x < 0; }) &&
         std::none_of(in_.begin(), in_.end(), [](int x) { return x < 0; });
}

CoverGraph fold(const std::vector<Word>& generators, int rank) {
  UnionFind uf;
  const int base = uf.add();
  std::vector<GraphEdge> raw;

  for (const auto& w : generators) {
    const Word r = reduce(w);
    if (r.empty()) continue;
    const auto& ls = r.letters();
    int from = base;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const int g = std::abs(ls[i]) - 1;
      if (g >= rank) {
        throw Error(ErrorCode::RankMismatch, "generator letter outside declared rank");
      }
      const int to = i + 1 == ls.size() ? base : uf.add();
      if (ls[i] > 0) {
        raw.push_back({from, g, to});
      } else {
        raw.push_back({to, g, from});
      }
      from = to;
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::pair<int, int>, int> out, in;
    for (const auto& e : raw) {
      const int s = uf.find(e.source);
      const int t = uf.find(e.target);
      if (auto [it, fresh] = out.emplace(std::pair{s, e.label}, t); !fresh) {
        changed |= uf.unite(it->second, t);
      }
      if (auto [it, fresh] = in.emplace(std::pair{t, e.label}, s); !fresh) {
        changed |= uf.unite(it->second, s);
      }
    }
  }

  std::map<std::pair<int, int>, int> out;  // (rep, label) -> rep
  std::map<std::pair<int, int>, int> in;
  for (const auto& e : raw) {
    const int s = uf.find(e.source);
    const int t = uf.find(e.target);
    out[{s, e.label}] = t;
    in[{t, e.label}] = s;
  }

  // Canonical numbering: BFS from the basepoint, labels in order, out before in.
  std::map<int, int> number;
  std::deque<int> queue;
  number[uf.find(base)] = 0;
  queue.push_back(uf.find(base));
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int g = 0; g < rank; ++g) {
      for (const auto* table : {&out, &in}) {
        auto it = table->find({v, g});
        if (it != table->end() && !number.count(it->second)) {
          number.emplace(it->second, static_cast<int>(number.size()));
          queue.push_back(it->second);
        }
      }
    }
  }

  std::vector<GraphEdge> edges;
  for (const auto& [key, t] : out) {
    edges.push_back({number.at(key.first), key.second, number.at(t)});
  }
  std::sort(edges.begin(), edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.source, a.label, a.target) < std::tie(b.source, b.label, b.target);
  });
  return CoverGraph(rank, static_cast<int>(number.size()), std::move(edges));
}

bool graph_member(const CoverGraph& graph, const Word& word) {
  int v = graph.basepoint();
  const Word reduced = reduce(word);
  for (int l : reduced.letters()) {
    auto next = graph.step(v, l);
    if (!next) return false;
    v = *next;
  }
  return v == graph.basepoint();
}

SheetsAndRank sheets_and_rank(const CoverGraph& graph) {
  if (!graph.is_full_cover()) {
    throw Error(ErrorCode::NotFullCover,
                "graph with " + std::to_string(graph.vertex_count()) +
                    " vertices is missing edges");
  }
  const int e = static_cast<int>(graph.edges().size());
  return {graph.vertex_count(), e - graph.vertex_count() + 1};
}

void write_dot(std::ostream& os, const CoverGraph& graph, const Alphabet& alphabet,
               const std::string& name) {
  os << "digraph " << name << " {\n";
  for (int v = 0; v < graph.vertex_count(); ++v) {
    os << "  v" << v << " [shape=" << (v == graph.basepoint() ? "doublecircle" : "circle")
       << "];\n";
  }
  for (const auto& e : graph.edges()) {
    os << "  v" << e.source << " -> v" << e.target << " [label=\"" << alphabet.name(e.label)
       << "\"];\n";
  }
  os << "}\n";
}

bool congruence_member(OrbifoldCase c, const HomologyVector& v) {
  const auto& data = case_data(c);
  if (static_cast<int>(v.size()) != data.x_rank) {
    throw Error(ErrorCode::RankMismatch,
                "vector of length " + std::to_string(v.size()) + " for " + case_name(c) +
                    " (rank " + std::to_string(data.x_rank) + ")");
  }
  std::int64_t form = 0;
  for (std::size_t i = 0; i < v.size(); ++i) form += data.congruence.weights[i] * v[i];
  return mod(form, data.congruence.modulus) == 0;
}

bool congruence_member_y(OrbifoldCase c, const HomologyVector& v) {
  const auto& data = case_data(c);
  if (static_cast<int>(v.size()) < data.x_rank) {
    throw Error(ErrorCode::RankMismatch, "Y-homology vector shorter than the case rank");
  }
  return congruence_member(c, HomologyVector(v.begin(), v.begin() + data.x_rank));
}

Alphabet x_alphabet(OrbifoldCase c) { return {case_data(c).x_rank, 0}; }

Alphabet y_alphabet(OrbifoldCase c, int punctures) {
  return {case_data(c).x_rank, punctures};
}

std::vector<Word> subgroup_G(OrbifoldCase c) {
  const Alphabet alphabet = x_alphabet(c);
  switch (c) {
    case OrbifoldCase::TwoTwoInf:
      return parse_all({"a2", "b2", "ab"}, alphabet);
    case OrbifoldCase::TwoTwoTwoTwo:
      return parse_all({"a2", "b2", "e2", "ab", "be"}, alphabet);
    case OrbifoldCase::TwoFourFour:
      return parse_all({"a4", "b4", "(ab)2", "a2ba", "a2b2"}, alphabet);
    case OrbifoldCase::TwoThreeSix:
      return parse_all({"a2", "b3", "ABab", "ab3A", "BA2b", "BaBAb2", "B2a2b2"}, alphabet);
    case OrbifoldCase::ThreeThreeThree:
      return parse_all({"a3", "b3", "aB", "aba"}, alphabet);
    case OrbifoldCase::InfInf:
      break;
  }
  throw Error(ErrorCode::UnknownCase, "no subgroup G for " + case_name(c));
}

std::vector<Word> subgroup_H(OrbifoldCase c, int punctures) {
  if (punctures < 0) throw Error(ErrorCode::IllegalAssignment, "negative puncture count");
  std::vector<std::string> fixed;
  std::vector<std::string> per_puncture;  // '#' stands for g_i
  switch (c) {
    case OrbifoldCase::TwoTwoInf:
      fixed = {"a2", "b2", "ab"};
      per_puncture = {"#", "a#A"};
      break;
    case OrbifoldCase::TwoTwoTwoTwo:
      fixed = {"a2", "b2", "e2", "ab", "be"};
      per_puncture = {"#", "a#A"};
      break;
    case OrbifoldCase::TwoFourFour:
      fixed = {"a4", "b4", "(ab)2", "a2ba", "a2b2"};
      per_puncture = {"#", "a#A", "a2#A2", "a3#A3"};
      break;
    case OrbifoldCase::TwoThreeSix:
      fixed = {"a2", "b3", "ABab", "ab3A", "BA2b", "BaBAb2", "B2a2b2"};
      per_puncture = {"#", "a#A", "aB#bA", "ab#BA", "b#B", "B#b"};
      break;
    case OrbifoldCase::ThreeThreeThree:
      fixed = {"a3", "b3", "aB", "aba"};
      per_puncture = {"#", "a#A", "a2#A2"};
      break;
    case OrbifoldCase::InfInf:
      throw Error(ErrorCode::UnknownCase, "no subgroup H for " + case_name(c));
  }
  std::vector<std::string> texts = fixed;
  for (int i = 1; i <= punctures; ++i) {
    for (auto t : per_puncture) {
      const auto at = t.find('#');
      t.replace(at, 1, "g" + std::to_string(i));
      texts.push_back(t);
    }
  }
  return parse_all(texts, y_alphabet(c, punctures));
}

HomologyVector puncture_class(OrbifoldCase c, int target) {
  const int r = case_data(c).x_rank;
  if (target < 0 || target > r) {
    throw Error(ErrorCode::IllegalAssignment, "puncture target out of range");
  }
  if (target < r) return unit(r, target);
  return HomologyVector(static_cast<std::size_t>(r), -1);
}

std::vector<HomologyVector> legal_regular_images(OrbifoldCase c, int generator) {
  const int r = case_data(c).x_rank;
  if (generator < 0 || generator >= r) {
    throw Error(ErrorCode::IllegalAssignment, "not a regular generator index");
  }
  const HomologyVector complement = puncture_class(c, r);
  switch (c) {
    case OrbifoldCase::TwoTwoInf:
      return {unit(r, 0), unit(r, 1), unit(r, 0, -1), unit(r, 1, -1)};
    case OrbifoldCase::TwoTwoTwoTwo:
      return {unit(r, 0), unit(r, 1), unit(r, 2), complement};
    case OrbifoldCase::TwoFourFour:
      return {unit(r, 0), unit(r, 1)};
    case OrbifoldCase::TwoThreeSix:
      // alpha: weight-2 puncture, fixed or sent by a 3:1 branch to the weight-6
      // puncture; beta: weight-3 puncture, fixed or sent 2:1 to weight 6.
      if (generator == 0) return {unit(r, 0), scaled(complement, 3)};
      return {unit(r, 1), scaled(complement, 2)};
    case OrbifoldCase::ThreeThreeThree:
      return {unit(r, 0), unit(r, 1), complement};
    case OrbifoldCase::InfInf:
      break;
  }
  throw Error(ErrorCode::UnknownCase, "no lifting data for " + case_name(c));
}

std::vector<int> legal_puncture_targets(OrbifoldCase c) {
  switch (c) {
    case OrbifoldCase::TwoTwoInf: return {0, 1};
    case OrbifoldCase::TwoTwoTwoTwo: return {0, 1, 2, 3};
    case OrbifoldCase::TwoFourFour:
    case OrbifoldCase::TwoThreeSix:
    case OrbifoldCase::ThreeThreeThree: return {0, 1, 2};
    case OrbifoldCase::InfInf: break;
  }
  throw Error(ErrorCode::UnknownCase, "no lifting data for " + case_name(c));
}

HomologyVector puncture_image(OrbifoldCase c, int target) {
  const auto targets = legal_puncture_targets(c);
  if (std::find(targets.begin(), targets.end(), target) == targets.end()) {
    throw Error(ErrorCode::IllegalAssignment,
                "puncture target " + std::to_string(target) + " not allowed in " + case_name(c));
  }
  std::int64_t degree = 0;
  switch (c) {
    case OrbifoldCase::TwoTwoInf:
    case OrbifoldCase::TwoTwoTwoTwo: degree = 2; break;
    case OrbifoldCase::TwoFourFour: degree = target < 2 ? 4 : 2; break;
    case OrbifoldCase::TwoThreeSix: degree = target == 0 ? 2 : (target == 1 ? 3 : 6); break;
    case OrbifoldCase::ThreeThreeThree: degree = 3; break;
    case OrbifoldCase::InfInf: break;
  }
  return scaled(puncture_class(c, target), degree);
}

HomologyVector induced_image(const Word& h, const Assignment& assignment, int x_rank) {
  const HomologyVector coeffs = abelianize(h, static_cast<int>(assignment.size()));
  HomologyVector out(static_cast<std::size_t>(x_rank), 0);
  for (std::size_t g = 0; g < coeffs.size(); ++g) {
    if (coeffs[g] == 0) continue;
    const auto& img = assignment[g];
    if (static_cast<int>(img.size()) != x_rank) {
      throw Error(ErrorCode::RankMismatch, "image vector has wrong length");
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs[g] * img[i];
  }
  return out;
}

bool lift_criterion(OrbifoldCase c, const Assignment& assignment) {
  const int r = case_data(c).x_rank;
  const int punctures = static_cast<int>(assignment.size()) - r;
  if (punctures < 0) throw Error(ErrorCode::IllegalAssignment, "assignment too short");
  for (const auto& h : subgroup_H(c, punctures)) {
    if (!congruence_member(c, induced_image(h, assignment, r))) return false;
  }
  return true;
}

bool lift_check(OrbifoldCase c, const Assignment& assignment,
                const PunctureTargets& puncture_targets) {
  const int r = case_data(c).x_rank;
  if (assignment.size() != static_cast<std::size_t>(r) + puncture_targets.size()) {
    throw Error(ErrorCode::IllegalAssignment,
                "assignment has " + std::to_string(assignment.size()) + " images for " +
                    std::to_string(r) + " regular generators and " +
                    std::to_string(puncture_targets.size()) + " punctures");
  }
  for (int g = 0; g < r; ++g) {
    const auto legal = legal_regular_images(c, g);
    if (std::find(legal.begin(), legal.end(), assignment[static_cast<std::size_t>(g)]) ==
        legal.end()) {
      throw Error(ErrorCode::IllegalAssignment,
                  "image of generator " + x_alphabet(c).name(g) + " outside the legal set");
    }
  }
  for (std::size_t i = 0; i < puncture_targets.size(); ++i) {
    if (assignment[static_cast<std::size_t>(r) + i] != puncture_image(c, puncture_targets[i])) {
      throw Error(ErrorCode::IllegalAssignment,
                  "image of g" + std::to_string(i + 1) + " does not match its puncture target");
    }
  }
  return lift_criterion(c, assignment);
}

}  // namespace orbikit
