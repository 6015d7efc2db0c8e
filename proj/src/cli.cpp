#include "orbikit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "orbikit/covergraph.hpp"
#include "orbikit/error.hpp"
#include "orbikit/io.hpp"
#include "orbikit/orbifold.hpp"
#include "orbikit/portrait.hpp"
#include "orbikit/quotient_sim.hpp"
#include "orbikit/toruslift.hpp"

namespace orbikit {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OrbifoldCase require_case(const std::string& tag) {
  auto c = parse_case_tag(tag);
  if (!c) throw InputError("unknown case tag '" + tag + "' (use ii, 22i, 2222, 244, 236, 333)");
  return *c;
}

std::string form_string(OrbifoldCase c) {
  static const char* vars[] = {"m", "n", "l"};
  const auto& w = case_data(c).congruence.weights;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "+";
    if (w[i] != 1) out += std::to_string(w[i]);
    out += vars[i];
  }
  return out;
}

std::int64_t residue(OrbifoldCase c, const HomologyVector& v) {
  const auto& cong = case_data(c).congruence;
  std::int64_t form = 0;
  for (std::size_t i = 0; i < cong.weights.size(); ++i) form += cong.weights[i] * v[i];
  const std::int64_t r = form % cong.modulus;
  return r < 0 ? r + cong.modulus : r;
}

ojson vector_json(const HomologyVector& v) {
  ojson a = ojson::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::string vector_string(const HomologyVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

void emit(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

int cmd_classify(const std::string& input, bool json, bool expect_rate, std::ostream& out) {
  const CriticalPortrait portrait = validate_portrait(read_portrait_file(input));
  const ClassifyReport report = classify_report(portrait);
  if (json) {
    emit(out, to_json(report));
  } else {
    write_text(out, report);
  }
  if (expect_rate && report.verdict != Verdict::RateCertified) return kExitFail;
  return kExitOk;
}

int cmd_subgroup(const std::string& tag, const std::string& which, int punctures,
                 const std::string& word_text, bool json, std::ostream& out) {
  const OrbifoldCase c = require_case(tag);
  const bool is_h = which == "H";
  const Alphabet alphabet = is_h ? y_alphabet(c, punctures) : x_alphabet(c);
  const Word word = parse_word(word_text, alphabet);
  const HomologyVector v = abelianize(word, alphabet.rank());
  const bool by_congruence = is_h ? congruence_member_y(c, v) : congruence_member(c, v);
  const CoverGraph graph = fold(is_h ? subgroup_H(c, punctures) : subgroup_G(c), alphabet.rank());
  const bool by_folding = graph_member(graph, word);
  const auto& cong = case_data(c).congruence;
  const std::int64_t r = residue(c, v);
  if (json) {
    ojson j;
    j["case"] = case_name(c);
    j["subgroup"] = which;
    j["word"] = word_text;
    j["reduced"] = format_word(word, alphabet);
    j["homology"] = vector_json(v);
    j["form"] = form_string(c);
    j["residue"] = r;
    j["modulus"] = cong.modulus;
    j["congruence_member"] = by_congruence;
    j["folding_member"] = by_folding;
    emit(out, j);
  } else {
    out << (by_congruence ? "member" : "not a member") << " (" << form_string(c) << "=" << r
        << " mod " << cong.modulus << ")\n";
    out << "folding: " << (by_folding ? "member" : "not a member") << " of " << which << " ("
        << graph.vertex_count() << "-vertex core graph)\n";
  }
  return kExitOk;
}

int target_index(OrbifoldCase c, const std::string& t) {
  const int r = case_data(c).x_rank;
  if (t == "c") return r;
  const Alphabet a = x_alphabet(c);
  for (int i = 0; i < r; ++i) {
    if (a.name(i) == t) return i;
  }
  throw InputError("unknown puncture target '" + t + "'");
}

int cmd_lift_check(const std::string& tag, const std::string& map_text, bool json,
                   std::ostream& out) {
  const OrbifoldCase c = require_case(tag);
  const int r = case_data(c).x_rank;
  const Alphabet xa = x_alphabet(c);

  std::map<int, std::string> regular;   // generator -> target text
  std::map<int, std::string> punctured; // puncture index (1-based) -> target text
  std::stringstream ss(map_text);
  std::string entry;
  while (std::getline(ss, entry, ',')) {
    const auto colon = entry.find(':');
    if (colon == std::string::npos) throw InputError("map entry '" + entry + "' needs name:target");
    const std::string name = entry.substr(0, colon);
    const std::string target = entry.substr(colon + 1);
    if (!name.empty() && name[0] == 'g') {
      int idx = 0;
      try {
        idx = std::stoi(name.substr(1));
      } catch (const std::exception&) {
        throw InputError("bad puncture name '" + name + "'");
      }
      if (idx < 1) throw InputError("bad puncture name '" + name + "'");
      punctured[idx] = target;
      continue;
    }
    bool found = false;
    for (int g = 0; g < r; ++g) {
      if (xa.name(g) == name) {
        regular[g] = target;
        found = true;
      }
    }
    if (!found) throw InputError("unknown generator '" + name + "'");
  }
  const int n = punctured.empty() ? 0 : punctured.rbegin()->first;
  if (static_cast<int>(punctured.size()) != n) throw InputError("puncture names must be g1..gn");

  Assignment assignment;
  for (int g = 0; g < r; ++g) {
    std::string t = regular.count(g) ? regular[g] : xa.name(g);
    std::int64_t sign = 1;
    if (!t.empty() && t[0] == '-') {
      sign = -1;
      t = t.substr(1);
    }
    const HomologyVector cls = puncture_class(c, target_index(c, t));
    // The legal image that is a positive multiple of the target class.
    HomologyVector image;
    for (const auto& cand : legal_regular_images(c, g)) {
      for (std::int64_t k = 1; k <= 6 && image.empty(); ++k) {
        HomologyVector s = cls;
        for (auto& x : s) x *= k * sign;
        if (s == cand) image = cand;
      }
    }
    if (image.empty()) {
      HomologyVector s = cls;
      for (auto& x : s) x *= sign;
      image = s;  // rejected below by lift_check
    }
    assignment.push_back(image);
  }
  PunctureTargets targets;
  for (const auto& [idx, t] : punctured) {
    const int ti = target_index(c, t);
    targets.push_back(ti);
    assignment.push_back(puncture_image(c, ti));
  }

  const bool ok = lift_check(c, assignment, targets);
  std::string failing;
  HomologyVector failing_image;
  if (!ok) {
    const Alphabet ya = y_alphabet(c, n);
    for (const auto& h : subgroup_H(c, n)) {
      auto img = induced_image(h, assignment, r);
      if (!congruence_member(c, img)) {
        failing = format_word(h, ya);
        failing_image = img;
        break;
      }
    }
  }
  const auto h_size = subgroup_H(c, n).size();
  if (json) {
    ojson j;
    j["case"] = case_name(c);
    ojson images = ojson::array();
    const Alphabet ya = y_alphabet(c, n);
    for (std::size_t g = 0; g < assignment.size(); ++g) {
      images.push_back({{"generator", ya.name(static_cast<int>(g))},
                        {"image", vector_json(assignment[g])}});
    }
    j["images"] = images;
    j["h_generators"] = h_size;
    j["lift"] = ok;
    j["failing_generator"] = ok ? ojson() : ojson(failing);
    emit(out, j);
  } else if (ok) {
    out << "lift exists: all " << h_size << " generators of H map into G ("
        << form_string(c) << "=0 mod " << case_data(c).congruence.modulus << ")\n";
  } else {
    out << "no lift: " << failing << " maps to " << vector_string(failing_image) << " with "
        << form_string(c) << "=" << residue(c, failing_image) << " mod "
        << case_data(c).congruence.modulus << "\n";
  }
  return ok ? kExitOk : kExitFail;
}

int cmd_certify(const std::string& tag, const std::string& matrix, std::int64_t degree, int n,
                double eps, bool json, bool serial, std::ostream& out) {
  const TorusLift lift = make_torus_lift(parse_matrix(matrix), require_case(tag), degree);
  const RateCertificate cert =
      certify_rate(lift, n, eps, serial ? Execution::Serial : Execution::Parallel);
  if (json) {
    emit(out, to_json(cert));
  } else {
    write_text(out, cert);
  }
  return cert.pass ? kExitOk : kExitFail;
}

int cmd_simulate(const std::string& tag, const std::string& matrix, int n, bool json, bool serial,
                 std::ostream& out) {
  const IntMatrix2 a = parse_matrix(matrix);
  const OrbifoldCase c = require_case(tag);
  SimulationReport sim{make_torus_lift(a, c, a.det()), {}, {}};
  const Execution exec = serial ? Execution::Serial : Execution::Parallel;
  const std::int64_t cap = enumeration_cap_from_env();
  const DeckRotation r = deck_matrix(c);
  for (int k = 1; k <= n; ++k) sim.per_n.push_back(count_quotient_fixed(a, r, k, cap, exec));
  sim.rows = oracle_vs_bound(sim.lift, n, cap, exec);
  if (json) {
    emit(out, to_json(sim));
  } else {
    write_text(out, sim);
  }
  const bool all = std::all_of(sim.rows.begin(), sim.rows.end(),
                               [](const OracleRow& row) { return row.dominates; });
  return all ? kExitOk : kExitFail;
}

int cmd_graph(const std::string& tag, const std::string& which, int punctures,
              const std::string& dot_path, std::ostream& out) {
  const OrbifoldCase c = require_case(tag);
  const bool is_h = which == "H";
  const Alphabet alphabet = is_h ? y_alphabet(c, punctures) : x_alphabet(c);
  const CoverGraph graph =
      fold(is_h ? subgroup_H(c, punctures) : subgroup_G(c), alphabet.rank());
  const std::string name = which + "_" + std::string(case_tag(c));
  if (dot_path.empty() || dot_path == "-") {
    write_dot(out, graph, alphabet, name);
  } else {
    std::ofstream file(dot_path);
    if (!file) throw InputError("cannot write '" + dot_path + "'");
    write_dot(file, graph, alphabet, name);
    out << "wrote " << dot_path << " (" << graph.vertex_count() << " vertices, "
        << graph.edges().size() << " edges)\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbifold classification and growth-rate certificates for Thurston maps",
               "orbikit"};
  app.require_subcommand(1, 1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string input;
  bool expect_rate = false;
  auto* classify = app.add_subcommand("classify", "Classify a portrait and report the dichotomy");
  classify->add_option("--input", input, "Portrait JSON file")->required();
  classify->add_flag("--expect-rate", expect_rate, "Exit 1 unless the rate is certified");
  add_format(classify);

  std::string tag, word, which = "G";
  int punctures = 0;
  auto* subgroup = app.add_subcommand("subgroup", "Membership of a word in G or H");
  subgroup->add_option("--case", tag, "Case tag")->required();
  subgroup->add_option("--word", word, "Word, e.g. a2b2 or (ab)^2")->required();
  subgroup->add_option("--which", which, "G or H")->check(CLI::IsMember({"G", "H"}));
  subgroup->add_option("--punctures", punctures, "Puncture loops in H")->check(CLI::NonNegativeNumber);
  add_format(subgroup);

  std::string map_text;
  auto* lift = app.add_subcommand("lift-check", "Homology lifting criterion f_#(H) in G");
  lift->add_option("--case", tag, "Case tag")->required();
  lift->add_option("--map", map_text,
                   "Comma list name:target, e.g. a:b,b:a,g1:c (c = omitted puncture)")
      ->required();
  add_format(lift);

  std::string matrix;
  std::int64_t degree = 0;
  int horizon = kDefaultHorizon;
  double eps = kDefaultEpsilon;
  bool serial = false;
  auto* certify = app.add_subcommand("certify", "Growth-rate certificate for a torus lift");
  certify->add_option("--case", tag, "Case tag")->required();
  certify->add_option("--matrix", matrix, "Row-major a,b,c,d")->required();
  certify->add_option("--degree", degree, "Degree d = det A")->required();
  certify->add_option("--n", horizon, "Horizon N")->check(CLI::PositiveNumber);
  certify->add_option("--eps", eps, "Tolerance")->check(CLI::NonNegativeNumber);
  certify->add_flag("--serial", serial, "Use the serial reference kernel");
  add_format(certify);

  int sim_n = 8;
  auto* simulate = app.add_subcommand("simulate", "Brute-force quotient fixed-point counts");
  simulate->add_option("--case", tag, "Case tag")->required();
  simulate->add_option("--matrix", matrix, "Row-major a,b,c,d")->required();
  simulate->add_option("--n", sim_n, "Horizon")->check(CLI::PositiveNumber);
  simulate->add_flag("--serial", serial, "Use the serial reference kernels");
  add_format(simulate);

  std::string dot_path;
  auto* graph = app.add_subcommand("graph", "Export a folded covering graph as DOT");
  graph->add_option("--case", tag, "Case tag")->required();
  graph->add_option("--which", which, "G or H")->check(CLI::IsMember({"G", "H"}));
  graph->add_option("--punctures", punctures, "Puncture loops in H")->check(CLI::NonNegativeNumber);
  graph->add_option("--dot", dot_path, "Output file ('-' for stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const bool json = format == "json";
  try {
    if (*classify) return cmd_classify(input, json, expect_rate, out);
    if (*subgroup) return cmd_subgroup(tag, which, punctures, word, json, out);
    if (*lift) return cmd_lift_check(tag, map_text, json, out);
    if (*certify) return cmd_certify(tag, matrix, degree, horizon, eps, json, serial, out);
    if (*simulate) return cmd_simulate(tag, matrix, sim_n, json, serial, out);
    if (*graph) return cmd_graph(tag, which, punctures, dot_path, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace orbikit
