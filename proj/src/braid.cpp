#include "braidskein/braid.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace braidskein {

namespace {

std::atomic<CrossingId> next_crossing_id{1};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

bool parse_int(std::string_view token, int& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const char* begin = token.data();
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && !token.empty();
}

Letter fresh(int generator, int sign) { return Letter{generator, sign, mint_crossing_id()}; }

}  // namespace

CrossingId mint_crossing_id() { return next_crossing_id.fetch_add(1, std::memory_order_relaxed); }

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be at least 1");
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("strand count must be at least 1");
  std::unordered_set<CrossingId> seen;
  for (const auto& l : letters_) {
    if (l.generator < 1 || l.generator >= strands_) {
      throw std::invalid_argument("generator s_" + std::to_string(l.generator) + " out of range for " +
                                  std::to_string(strands_) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
    if (!seen.insert(l.id).second) throw std::invalid_argument("duplicate crossing id in word");
  }
}

BraidWord BraidWord::from_generators(int strands, std::span<const int> signed_gens) {
  std::vector<Letter> letters;
  letters.reserve(signed_gens.size());
  for (int g : signed_gens) {
    if (g == 0) throw std::invalid_argument("generator index 0 is not a braid letter");
    letters.push_back(fresh(std::abs(g), g > 0 ? 1 : -1));
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::from_generators(int strands, std::initializer_list<int> signed_gens) {
  return from_generators(strands, std::span<const int>(signed_gens.begin(), signed_gens.size()));
}

std::optional<std::size_t> BraidWord::index_of(CrossingId id) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].id == id) return i;
  }
  return std::nullopt;
}

std::vector<int> BraidWord::signed_generators() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.signed_generator());
  return out;
}

std::vector<CrossingId> BraidWord::crossing_ids() const {
  std::vector<CrossingId> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.id);
  return out;
}

bool operator==(const BraidWord& a, const BraidWord& b) {
  return a.strands_ == b.strands_ &&
         std::equal(a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
                    [](const Letter& x, const Letter& y) { return x.generator == y.generator && x.sign == y.sign; });
}

BraidWord parse_word(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("missing ':' in braid word '" + std::string(text) + "'");
  }
  const std::string head = trim(text.substr(0, colon));
  int strands = 0;
  if (!parse_int(head, strands)) throw ParseError("bad strand count '" + head + "'");
  if (strands < 1) throw ParseError("strand count '" + head + "' must be at least 1");

  std::vector<int> gens;
  std::istringstream in{std::string(text.substr(colon + 1))};
  std::string token;
  while (in >> token) {
    int g = 0;
    if (!parse_int(token, g) || g == 0) throw ParseError("bad generator token '" + token + "'");
    if (std::abs(g) > strands - 1) {
      throw ParseError("generator token '" + token + "' out of range for " + std::to_string(strands) + " strands");
    }
    gens.push_back(g);
  }
  return BraidWord::from_generators(strands, gens);
}

std::string format_word(const BraidWord& w) {
  std::string out = std::to_string(w.strand_count()) + ":";
  for (const auto& l : w.letters()) {
    out += ' ';
    out += std::to_string(l.signed_generator());
  }
  return out;
}

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
}

std::string format_partition(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of requires n >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest part first, parts non-increasing: emits in reverse-lex order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || hit[v]) {
      throw std::invalid_argument("permutation images are not a bijection");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation permutation(const BraidWord& w) {
  const int n = w.strand_count();
  // at[p] = top position of the strand currently at position p
  std::vector<int> at(n);
  for (int i = 0; i < n; ++i) at[i] = i;
  for (const auto& l : w.letters()) std::swap(at[l.generator - 1], at[l.generator]);
  std::vector<int> images(n);
  for (int p = 0; p < n; ++p) images[at[p]] = p;
  return Permutation(std::move(images));
}

Partition cycle_type(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> seen(n, false);
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p.images()[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

BraidWord basis_braid(const Partition& lambda, int n) {
  if (lambda.size() != n) {
    throw DimensionError("partition " + format_partition(lambda) + " does not sum to " + std::to_string(n));
  }
  // Blocks are laid out left to right in the order the parts are written;
  // the figure for (1,2,3) puts the smallest block first, so we read parts
  // from the smallest up. Any order gives a conjugate braid.
  std::vector<int> gens;
  int offset = 0;
  for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it) {
    const int k = *it;
    for (int g = k - 1; g >= 1; --g) gens.push_back(offset + g);
    offset += k;
  }
  return BraidWord::from_generators(n, gens);
}

// ---------------------------------------------------------------------------

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().generator == l.generator && stack.back().sign == -l.sign) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strand_count(), std::move(stack));
}

namespace {

enum class RelationKind { None, Commute, Braid };

RelationKind relation_kind(const BraidWord& w, std::size_t pos) {
  const auto& ls = w.letters();
  if (pos + 1 >= ls.size()) return RelationKind::None;
  const int i = ls[pos].generator;
  const int j = ls[pos + 1].generator;
  if (std::abs(i - j) > 1) return RelationKind::Commute;
  if (pos + 2 >= ls.size() || std::abs(i - j) != 1 || ls[pos + 2].generator != i) return RelationKind::None;
  const int a = ls[pos].sign, b = ls[pos + 1].sign, c = ls[pos + 2].sign;
  // s_i^a s_j^b s_i^c = s_j^c s_i^b s_j^a fails only for a = c = -b.
  if (a == c && b == -a) return RelationKind::None;
  return RelationKind::Braid;
}

}  // namespace

bool braid_relation_applies(const BraidWord& w, std::size_t position) {
  return relation_kind(w, position) != RelationKind::None;
}

BraidWord apply_braid_relation_at(const BraidWord& w, std::size_t position) {
  auto ls = w.letters();
  switch (relation_kind(w, position)) {
    case RelationKind::Commute:
      std::swap(ls[position], ls[position + 1]);
      break;
    case RelationKind::Braid: {
      // Crossings are carried across the move: the outer pair trade places,
      // the middle crossing stays in the middle.
      const Letter x = ls[position], y = ls[position + 1], z = ls[position + 2];
      ls[position] = Letter{y.generator, z.sign, z.id};
      ls[position + 1] = Letter{x.generator, y.sign, y.id};
      ls[position + 2] = Letter{y.generator, x.sign, x.id};
      break;
    }
    case RelationKind::None:
      throw MoveError("no braid relation applies at position " + std::to_string(position) + " of '" +
                      format_word(w) + "'");
  }
  return BraidWord(w.strand_count(), std::move(ls));
}

BraidWord cyclic_rotate(const BraidWord& w, std::size_t k) {
  if (w.empty()) return w;
  auto ls = w.letters();
  std::rotate(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k % ls.size()), ls.end());
  return BraidWord(w.strand_count(), std::move(ls));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) ls.push_back(fresh(it->generator, -it->sign));
  return BraidWord(w.strand_count(), std::move(ls));
}

BraidWord concatenate(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count() != b.strand_count()) throw MoveError("cannot concatenate braids on different strand counts");
  std::unordered_set<CrossingId> ids;
  for (const auto& l : a.letters()) ids.insert(l.id);
  auto ls = a.letters();
  for (const auto& l : b.letters()) ls.push_back(ids.contains(l.id) ? fresh(l.generator, l.sign) : l);
  return BraidWord(a.strand_count(), std::move(ls));
}

BraidWord conjugate_by(const BraidWord& w, const BraidWord& a) {
  if (a.strand_count() != w.strand_count()) {
    throw MoveError("conjugating braid has " + std::to_string(a.strand_count()) + " strands, word has " +
                    std::to_string(w.strand_count()));
  }
  std::vector<Letter> ls;
  ls.reserve(w.size() + 2 * a.size());
  for (const auto& l : a.letters()) ls.push_back(fresh(l.generator, l.sign));
  ls.insert(ls.end(), w.letters().begin(), w.letters().end());
  for (auto it = a.letters().rbegin(); it != a.letters().rend(); ++it) ls.push_back(fresh(it->generator, -it->sign));
  return BraidWord(w.strand_count(), std::move(ls));
}

BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw MoveError("stabilization sign must be +1 or -1");
  auto ls = w.letters();
  ls.push_back(fresh(w.strand_count(), sign));
  return BraidWord(w.strand_count() + 1, std::move(ls));
}

BraidWord destabilize(const BraidWord& w) {
  const int top = w.strand_count() - 1;
  if (w.empty() || w.letters().back().generator != top) {
    throw MoveError("destabilize needs a final s_" + std::to_string(top) + " letter in '" + format_word(w) + "'");
  }
  const auto uses = std::count_if(w.letters().begin(), w.letters().end(),
                                  [top](const Letter& l) { return l.generator == top; });
  if (uses != 1) {
    throw MoveError("destabilize needs s_" + std::to_string(top) + " to occur exactly once in '" + format_word(w) +
                    "'");
  }
  auto ls = w.letters();
  ls.pop_back();
  return BraidWord(top, std::move(ls));
}

BraidWord change_crossing(const BraidWord& w, CrossingId id) {
  const auto idx = w.index_of(id);
  if (!idx) throw MoveError("crossing id " + std::to_string(id) + " not present in '" + format_word(w) + "'");
  auto ls = w.letters();
  ls[*idx].sign = -ls[*idx].sign;
  return BraidWord(w.strand_count(), std::move(ls));
}

}  // namespace braidskein
