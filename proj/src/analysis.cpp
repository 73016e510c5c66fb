#include "braidskein/analysis.hpp"

#include <algorithm>

namespace braidskein {

BadCount bad_counts(const BraidWord& w) {
  const LabelMap labels = label_only(w);
  BadCount c;
  for (const auto& l : w.letters()) {
    if (labels.at(l.id) != Label::Bad) continue;
    (l.sign > 0 ? c.positive_bad : c.negative_bad) += 1;
  }
  return c;
}

int bfree_exponent(const SkeinVector& v) {
  std::optional<int> k;
  for (const auto& [lambda, c] : v.entries()) {
    for (const auto& [e, coefficient] : c.terms()) {
      if (e.second != 0) continue;
      if (k) throw MalformedVectorError("more than one B-free monomial");
      if (coefficient != 1) {
        throw MalformedVectorError("B-free monomial has coefficient " + coefficient.str() + ", expected 1");
      }
      k = e.first;
    }
  }
  if (!k) throw MalformedVectorError("no B-free monomial");
  return *k;
}

ParityVerdict parity_consistency(const BraidWord& w) {
  return ParityVerdict{bfree_exponent(resolve(w)), bad_counts(w)};
}

bool NugatoryScanReport::all_different() const {
  return std::all_of(entries.begin(), entries.end(), [](const NugatoryEntry& e) { return e.different; });
}

namespace {

NugatoryEntry scan_one(const BraidWord& w, const SkeinVector& original, int k0, std::size_t j) {
  NugatoryEntry e;
  e.letter_index = j;
  e.id = w[j].id;
  e.changed = resolve(change_crossing(w, e.id));
  e.different = !(e.changed == original);
  e.exponent_delta = bfree_exponent(e.changed) - k0;
  return e;
}

}  // namespace

NugatoryScanReport nugatory_scan(const BraidWord& w) {
  NugatoryScanReport r{w, resolve(w), {}};
  const int k0 = bfree_exponent(r.original);
  r.entries.resize(w.size());
  const auto count = static_cast<std::ptrdiff_t>(w.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t j = 0; j < count; ++j) {
    r.entries[j] = scan_one(w, r.original, k0, static_cast<std::size_t>(j));
  }
  return r;
}

NugatoryScanReport nugatory_scan_serial(const BraidWord& w) {
  NugatoryScanReport r{w, resolve(w), {}};
  const int k0 = bfree_exponent(r.original);
  for (std::size_t j = 0; j < w.size(); ++j) r.entries.push_back(scan_one(w, r.original, k0, j));
  return r;
}

OddChangeVerdict odd_change_check(const BraidWord& w, const std::set<CrossingId>& ids) {
  if (ids.empty()) throw MoveError("odd_change_check needs at least one crossing");
  BraidWord changed = w;
  for (CrossingId id : ids) changed = change_crossing(changed, id);
  OddChangeVerdict v{changed, resolve(w), resolve(changed), 0, 0, true};
  v.k_original = bfree_exponent(v.original);
  v.k_changed = bfree_exponent(v.changed);
  v.different = !(v.original == v.changed);
  return v;
}

nlohmann::json nugatory_to_json(const NugatoryScanReport& r, std::optional<bool> certified) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"crossing", e.letter_index + 1},
                       {"changed_word", format_word(change_crossing(r.word, e.id))},
                       {"output", vector_to_json(e.changed)},
                       {"verdict", e.different ? "different" : "equal"},
                       {"exponent_delta", e.exponent_delta}});
  }
  nlohmann::json j{{"word", format_word(r.word)},
                   {"output", vector_to_json(r.original)},
                   {"k", bfree_exponent(r.original)},
                   {"entries", std::move(entries)},
                   {"all_different", r.all_different()}};
  j["braid_index_3_certified"] = certified ? nlohmann::json(*certified) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json odd_change_to_json(const BraidWord& w, const OddChangeVerdict& v) {
  return {{"word", format_word(w)},
          {"changed_word", format_word(v.changed_word)},
          {"original", vector_to_json(v.original)},
          {"changed", vector_to_json(v.changed)},
          {"k_original", v.k_original},
          {"k_changed", v.k_changed},
          {"verdict", v.different ? "different" : "equal"}};
}

}  // namespace braidskein
