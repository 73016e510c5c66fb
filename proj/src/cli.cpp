#include "braidskein/cli.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidskein/acceptance.hpp"
#include "braidskein/analysis.hpp"
#include "braidskein/homfly.hpp"
#include "braidskein/mtws.hpp"
#include "braidskein/resolution.hpp"

namespace braidskein {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BraidWord word_argument(const std::string& text) {
  if (text.find_first_not_of(" \t") == std::string::npos) throw UsageError("empty braid word");
  try {
    return parse_word(text);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> generators_argument(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int g = std::stoi(token, &used);
      if (used != token.size() || g == 0) throw std::invalid_argument(token);
      out.push_back(g);
    } catch (const std::exception&) {
      throw UsageError("bad generator '" + token + "'");
    }
  }
  return out;
}

CrossingId id_at(const BraidWord& w, int index) {
  if (index < 1 || index > static_cast<int>(w.size())) {
    throw UsageError("crossing index " + std::to_string(index) + " out of range 1.." + std::to_string(w.size()));
  }
  return w[static_cast<std::size_t>(index - 1)].id;
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

struct Args {
  std::string word;
  bool json = false;
  std::optional<int> basepoint;
  bool all_basepoints = false;
  bool oracle = false;
  std::vector<int> crossings;
  int max_power = 3;
  int strands = 3;
  int max_len = 4;
  std::optional<int> a, b, c, eps;
  std::optional<std::string> u, v;
  std::size_t limit = 10;
  bool quick = false;
};

int cmd_resolve(const Args& args, std::ostream& out) {
  const BraidWord w = word_argument(args.word);
  if (args.all_basepoints) {
    const BasepointReport report = compare_basepoints(w);
    if (args.json) {
      nlohmann::json outputs = nlohmann::json::array();
      for (const auto& v : report.outputs) outputs.push_back(vector_to_json(v));
      emit(out, {{"word", format_word(w)}, {"outputs", outputs}, {"consistent", report.consistent}});
    } else {
      for (std::size_t s = 0; s < report.outputs.size(); ++s) {
        out << "basepoint " << s + 1 << ": " << format_vector(report.outputs[s]) << '\n';
      }
      out << (report.consistent ? "consistent" : "DISCREPANCY") << '\n';
    }
    return kExitOk;
  }
  const SkeinVector v = resolve(w, ResolveOptions{args.basepoint});
  if (args.json) {
    emit(out, vector_to_json(v));
  } else {
    out << format_vector(v) << '\n';
  }
  return kExitOk;
}

int cmd_labels(const Args& args, std::ostream& out) {
  const BraidWord w = word_argument(args.word);
  const LabelMap labels = label_only(w, ResolveOptions{args.basepoint});
  if (args.json) {
    emit(out, labels_to_json(w, labels));
  } else {
    out << format_labels(w, labels);
  }
  return kExitOk;
}

int cmd_tree(const Args& args, std::ostream& out) {
  const ResolutionNode tree = resolution_tree(word_argument(args.word));
  if (args.json) {
    emit(out, tree_to_json(tree));
  } else {
    out << format_tree(tree);
  }
  return kExitOk;
}

int cmd_parity(const Args& args, std::ostream& out) {
  const ParityVerdict v = parity_consistency(word_argument(args.word));
  if (args.json) {
    emit(out, {{"k", v.k}, {"p", v.counts.positive_bad}, {"n", v.counts.negative_bad}, {"ok", v.consistent()}});
  } else {
    out << "k=" << v.k << " p=" << v.counts.positive_bad << " n=" << v.counts.negative_bad << ' '
        << (v.consistent() ? "ok" : "MISMATCH") << '\n';
  }
  return v.consistent() ? kExitOk : kExitVerdictFailure;
}

int cmd_nugatory(const Args& args, std::ostream& out) {
  const BraidWord w = word_argument(args.word);
  const NugatoryScanReport r = nugatory_scan(w);
  std::optional<bool> certified;
  if (w.strand_count() == 3) certified = certify_braid_index_3(w) == BraidIndexCertificate::Certified;
  if (args.json) {
    emit(out, nugatory_to_json(r, certified));
  } else {
    out << "word " << format_word(w) << ": " << format_vector(r.original) << '\n';
    for (const auto& e : r.entries) {
      out << "c" << e.letter_index + 1 << " -> " << format_vector(e.changed) << "  "
          << (e.different ? "different" : "equal") << " delta_k=" << e.exponent_delta << '\n';
    }
    out << "braid index 3: " << (certified ? (*certified ? "certified" : "unknown") : "n/a") << '\n';
  }
  return (certified.value_or(false) && !r.all_different()) ? kExitVerdictFailure : kExitOk;
}

int cmd_odd_change(const Args& args, std::ostream& out) {
  const BraidWord w = word_argument(args.word);
  if (args.crossings.empty()) throw UsageError("odd-change needs at least one crossing index");
  std::set<CrossingId> ids;
  for (int index : args.crossings) {
    if (!ids.insert(id_at(w, index)).second) throw UsageError("crossing index " + std::to_string(index) + " repeated");
  }
  const OddChangeVerdict v = odd_change_check(w, ids);
  if (args.json) {
    emit(out, odd_change_to_json(w, v));
  } else {
    out << format_word(v.changed_word) << ": " << format_vector(v.changed) << '\n'
        << "k " << v.k_original << " -> " << v.k_changed << "  " << (v.different ? "different" : "equal") << '\n';
  }
  const bool odd = ids.size() % 2 == 1;
  return (odd && !v.different) ? kExitVerdictFailure : kExitOk;
}

int cmd_homfly(const Args& args, std::ostream& out) {
  const BraidWord w = word_argument(args.word);
  const HomflyPoly h = args.oracle ? homfly_oracle(w) : to_homfly(resolve(w));
  if (args.json) {
    emit(out, homfly_to_json(h));
  } else {
    out << format_homfly(h) << '\n';
  }
  return kExitOk;
}

int cmd_jones(const Args& args, std::ostream& out) {
  const JonesPoly j = jones(to_homfly(resolve(word_argument(args.word))));
  if (args.json) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [half, c] : j) terms.push_back({half, detail::integer_to_json(c)});
    emit(out, {{"text", format_jones(j)}, {"half_exponent_terms", terms}});
  } else {
    out << format_jones(j) << '\n';
  }
  return kExitOk;
}

int cmd_mfw(const Args& args, std::ostream& out) {
  const HomflyPoly h = homfly_oracle(word_argument(args.word));
  const int bound = mfw_lower_bound(h);
  if (args.json) {
    emit(out, {{"homfly", format_homfly(h)}, {"braid_index_lower_bound", bound}});
  } else {
    out << bound << '\n';
  }
  return kExitOk;
}

int cmd_certify3(const Args& args, std::ostream& out) {
  const BraidWord w = word_argument(args.word);
  if (w.strand_count() != 3) throw UsageError("certify3 needs a 3-strand word");
  const bool ok = certify_braid_index_3(w) == BraidIndexCertificate::Certified;
  if (args.json) {
    emit(out, {{"word", format_word(w)}, {"certificate", ok ? "certified" : "unknown"}});
  } else {
    out << (ok ? "certified" : "unknown") << '\n';
  }
  return kExitOk;
}

int report_sweep(const SweepSummary& s, const char* kind, bool json, std::ostream& out) {
  if (json) {
    emit(out, sweep_to_json(s, kind));
  } else {
    out << kind << ": " << s.instances << " instances, " << s.output_mismatches << " output mismatches, "
        << s.homfly_mismatches << " HOMFLY mismatches, " << s.odd_bad_difference << " odd bad-count differences\n";
    for (const auto& f : s.failures) {
      out << "  " << format_word(f.pair.first) << " | " << format_word(f.pair.second) << '\n';
    }
  }
  const bool ok = s.output_mismatches == 0 && s.homfly_mismatches == 0 && s.odd_bad_difference == 0;
  return ok ? kExitOk : kExitVerdictFailure;
}

int report_pair(const PairCheck& c, bool json, std::ostream& out) {
  if (json) {
    emit(out, pair_check_to_json(c));
  } else {
    out << format_word(c.pair.first) << ": " << format_vector(c.first_output) << '\n'
        << format_word(c.pair.second) << ": " << format_vector(c.second_output) << '\n'
        << (c.outputs_equal ? "equal" : "different") << ", HOMFLY " << (c.homfly_equal ? "equal" : "different")
        << '\n';
  }
  return c.outputs_equal && c.homfly_equal ? kExitOk : kExitVerdictFailure;
}

int cmd_flype_test(const Args& args, std::ostream& out) {
  if (args.a || args.b || args.c || args.eps) {
    const FlypeInstance f{args.a.value_or(0), args.b.value_or(0), args.c.value_or(0), args.eps.value_or(1)};
    if (f.epsilon != 1 && f.epsilon != -1) throw UsageError("--eps must be 1 or -1");
    return report_pair(check_pair(flype_pair(f)), args.json, out);
  }
  if (args.max_power < 0) throw UsageError("--max-power must be non-negative");
  return report_sweep(flype_sweep(args.max_power), "flype", args.json, out);
}

int cmd_exchange_test(const Args& args, std::ostream& out) {
  if (args.strands < 3) throw UsageError("--n must be at least 3");
  if (args.u || args.v) {
    const ExchangeInstance e{generators_argument(args.u.value_or("")), generators_argument(args.v.value_or(""))};
    try {
      return report_pair(check_pair(exchange_pair(e, args.strands)), args.json, out);
    } catch (const MoveError& err) {
      throw UsageError(err.what());
    }
  }
  if (args.max_len < 0) throw UsageError("--max-len must be non-negative");
  return report_sweep(exchange_sweep(args.strands, args.max_len), "exchange", args.json, out);
}

int cmd_exchange_search(const Args& args, std::ostream& out) {
  if (args.strands < 3) throw UsageError("--n must be at least 3");
  if (args.max_len < 0) throw UsageError("--max-len must be non-negative");
  const DivergenceReport r = search_exchange_divergence(args.strands, args.max_len);
  if (args.json) {
    emit(out, divergence_to_json(r, args.limit));
  } else {
    out << r.instances << " exchange pairs on " << r.n << " strands, " << r.diverging.size()
        << " with differing outputs\n";
    out << "same link type (HOMFLY): " << (r.all_same_link_type ? "yes" : "no")
        << "; knot among them: " << (r.any_knot ? "yes" : "no") << '\n';
    for (std::size_t i = 0; i < r.diverging.size() && i < args.limit; ++i) {
      const auto& c = r.diverging[i];
      out << format_word(c.pair.first) << " | " << format_word(c.pair.second) << (c.is_knot ? "  (knot)" : "")
          << '\n';
    }
  }
  return r.all_same_link_type ? kExitOk : kExitVerdictFailure;
}

int cmd_selftest(const Args& args, std::ostream& out) {
  AcceptanceOptions options;
  options.quick = args.quick;
  bool all = true;
  nlohmann::json results = nlohmann::json::array();
  for (int id : selected_criteria(options)) {
    const CriterionResult r = run_criterion(id, options);
    all = all && r.passed;
    if (args.json) {
      results.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      out << format_result(r) << std::endl;
    }
  }
  if (args.json) emit(out, {{"results", results}, {"all_passed", all}});
  return all ? kExitOk : kExitVerdictFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resolve closed braid diagrams over the partition basis of the Hecke algebra quotient"};
  app.require_subcommand(1, 1);
  Args args;

  auto word_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("word", args.word, "braid word, e.g. \"2: 1 1 1\"")->required();
    sub->add_flag("--json", args.json, "machine-readable output");
    return sub;
  };

  CLI::App* resolve_cmd = word_command("resolve", "linear combination of basis diagrams");
  resolve_cmd->add_option("--basepoint", args.basepoint, "first basepoint strand (diagnostic)");
  resolve_cmd->add_flag("--all-basepoints", args.all_basepoints, "compare outputs over every first basepoint");
  CLI::App* labels_cmd = word_command("labels", "good/bad label of every crossing");
  labels_cmd->add_option("--basepoint", args.basepoint, "first basepoint strand (diagnostic)");
  word_command("tree", "resolution tree");
  word_command("parity", "B-free exponent against bad-crossing counts");
  word_command("nugatory", "resolve every single crossing change");
  CLI::App* odd_cmd = word_command("odd-change", "change a set of crossings (1-based letter indices)");
  odd_cmd->add_option("crossings", args.crossings, "crossing indices")->required();
  CLI::App* homfly_cmd = word_command("homfly", "HOMFLY polynomial from the resolution");
  homfly_cmd->add_flag("--oracle", args.oracle, "use the independent skein oracle instead");
  word_command("jones", "Jones polynomial from the resolution");
  word_command("mfw", "Morton-Franks-Williams lower bound on braid index");
  word_command("certify3", "certify braid index 3 for a 3-braid closure");

  CLI::App* flype_cmd = app.add_subcommand("flype-test", "flype invariance (single instance or sweep)");
  flype_cmd->add_option("--max-power", args.max_power, "sweep |a|,|b|,|c| <= max-power");
  flype_cmd->add_option("--a", args.a);
  flype_cmd->add_option("--b", args.b);
  flype_cmd->add_option("--c", args.c);
  flype_cmd->add_option("--eps", args.eps);
  flype_cmd->add_flag("--json", args.json);

  CLI::App* exchange_cmd = app.add_subcommand("exchange-test", "exchange invariance (single instance or sweep)");
  exchange_cmd->add_option("--n", args.strands, "strand count");
  exchange_cmd->add_option("--max-len", args.max_len, "sweep |u|,|v| <= max-len");
  exchange_cmd->add_option("--u", args.u, "signed generators of u, e.g. \"1 1\"");
  exchange_cmd->add_option("--v", args.v, "signed generators of v");
  exchange_cmd->add_flag("--json", args.json);

  CLI::App* search_cmd = app.add_subcommand("exchange-search", "exchange pairs with differing outputs");
  search_cmd->add_option("--n", args.strands, "strand count (default 4)");
  search_cmd->add_option("--max-len", args.max_len, "block length bound (default 3)");
  search_cmd->add_option("--limit", args.limit, "pairs to list");
  search_cmd->add_flag("--json", args.json);

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the acceptance checks");
  selftest_cmd->add_flag("--quick", args.quick, "fast subset");
  selftest_cmd->add_flag("--json", args.json);

  // exchange-search has different defaults from exchange-test.
  search_cmd->preparse_callback([&](std::size_t) {
    args.strands = 4;
    args.max_len = 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "resolve") return cmd_resolve(args, out);
    if (name == "labels") return cmd_labels(args, out);
    if (name == "tree") return cmd_tree(args, out);
    if (name == "parity") return cmd_parity(args, out);
    if (name == "nugatory") return cmd_nugatory(args, out);
    if (name == "odd-change") return cmd_odd_change(args, out);
    if (name == "homfly") return cmd_homfly(args, out);
    if (name == "jones") return cmd_jones(args, out);
    if (name == "mfw") return cmd_mfw(args, out);
    if (name == "certify3") return cmd_certify3(args, out);
    if (name == "flype-test") return cmd_flype_test(args, out);
    if (name == "exchange-test") return cmd_exchange_test(args, out);
    if (name == "exchange-search") return cmd_exchange_search(args, out);
    if (name == "selftest") return cmd_selftest(args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "unknown command " << name << '\n';
  return kExitUsage;
}

}  // namespace braidskein
