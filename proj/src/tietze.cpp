#include "arrtool/tietze.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace arrtool {

namespace {

struct Letter {
  Symbol symbol;
  int sign;
};

std::vector<Letter> letters_of(const Word& w) {
  std::vector<Letter> out;
  for (const Syllable& s : w.syllables())
    for (long long i = 0; i < std::llabs(s.exponent); ++i) out.push_back({s.symbol, s.exponent > 0 ? 1 : -1});
  return out;
}

std::string spell(const std::vector<Letter>& letters, std::size_t start) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter& l = letters[(start + i) % letters.size()];
    out += l.symbol.name;
    out += l.sign > 0 ? "+ " : "- ";
  }
  return out;
}

std::string min_rotation(const std::vector<Letter>& letters) {
  std::string best;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    std::string s = spell(letters, i);
    if (i == 0 || s < best) best = s;
  }
  return best;
}

// Solves r = 1 for the single occurrence of x: returns the word equal to x.
Word solve_for(const Word& r, const Symbol& x) {
  const auto& syl = r.syllables();
  std::size_t at = 0;
  while (syl[at].symbol != x) ++at;
  Word before, after;
  for (std::size_t i = 0; i < at; ++i) before.append(syl[i].symbol, syl[i].exponent);
  for (std::size_t i = at + 1; i < syl.size(); ++i) after.append(syl[i].symbol, syl[i].exponent);
  // before x^e after = 1  =>  x^e = before^-1 after^-1
  Word value = before.inverse() * after.inverse();
  return syl[at].exponent > 0 ? value : value.inverse();
}

Word substitute(const Word& w, const Symbol& x, const Word& value) {
  Word out;
  for (const Syllable& s : w.syllables()) {
    if (s.symbol == x) out *= value.power(s.exponent);
    else out.append(s.symbol, s.exponent);
  }
  return out;
}

bool occurs_once(const Word& r, const Symbol& x) {
  std::size_t count = 0;
  for (const Syllable& s : r.syllables())
    if (s.symbol == x) {
      if (std::llabs(s.exponent) != 1) return false;
      ++count;
    }
  return count == 1;
}

void tidy(std::vector<Word>& relators) {
  std::vector<Word> out;
  std::set<std::string> seen;
  for (const Word& r : relators) {
    Word c = cyclically_reduce(r);
    if (c.empty()) continue;
    if (seen.insert(cyclic_key(c)).second) out.push_back(std::move(c));
  }
  relators = std::move(out);
}

}  // namespace

std::string cyclic_key(const Word& w) {
  Word c = cyclically_reduce(w);
  auto fwd = letters_of(c);
  auto inv = letters_of(c.inverse());
  return std::min(min_rotation(fwd), min_rotation(inv));
}

bool is_generator_commutator(const Word& w) {
  auto l = letters_of(cyclically_reduce(w));
  if (l.size() != 4) return false;
  // Some rotation reads x y x^-1 y^-1.
  for (std::size_t i = 0; i < 4; ++i) {
    const Letter& a = l[i];
    const Letter& b = l[(i + 1) % 4];
    const Letter& c = l[(i + 2) % 4];
    const Letter& d = l[(i + 3) % 4];
    if (a.symbol != b.symbol && a.symbol == c.symbol && b.symbol == d.symbol && a.sign == -c.sign &&
        b.sign == -d.sign)
      return true;
  }
  return false;
}

GroupPresentation tietze_simplify(const GroupPresentation& p, const TietzeOptions& options) {
  GroupPresentation out = p;
  out.provenance.simplified = true;
  tidy(out.relators);
  for (std::size_t step = 0; step < options.budget; ++step) {
    // Shortest relator first; within it, the latest generator in list order.
    std::vector<std::size_t> by_length(out.relators.size());
    for (std::size_t i = 0; i < by_length.size(); ++i) by_length[i] = i;
    std::stable_sort(by_length.begin(), by_length.end(), [&](std::size_t a, std::size_t b) {
      return out.relators[a].length() < out.relators[b].length();
    });
    bool eliminated = false;
    for (std::size_t ri : by_length) {
      const Word& r = out.relators[ri];
      for (std::size_t gi = out.generators.size(); gi-- > 0 && !eliminated;) {
        const Symbol x = out.generators[gi];
        if (!occurs_once(r, x)) continue;
        const Word value = solve_for(r, x);
        std::vector<Word> next;
        bool too_long = false;
        for (std::size_t k = 0; k < out.relators.size(); ++k) {
          if (k == ri) continue;
          Word s = substitute(out.relators[k], x, value);
          if (s.length() > options.max_relator_length) {
            too_long = true;
            break;
          }
          next.push_back(std::move(s));
        }
        if (too_long) continue;
        out.generators.erase(out.generators.begin() + static_cast<std::ptrdiff_t>(gi));
        out.relators = std::move(next);
        tidy(out.relators);
        eliminated = true;
      }
      if (eliminated) break;
    }
    if (!eliminated) break;
  }
  return out;
}

}  // namespace arrtool
