#include "arrtool/word.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <tuple>

#include "arrtool/errors.hpp"

namespace arrtool {

Symbol Symbol::lambda(std::size_t vertex, const std::string& vertex_name) {
  return {SymbolKind::lambda, vertex, 0, "lam_" + vertex_name};
}

Symbol Symbol::mu(std::size_t vertex, std::size_t slot, const std::string& vertex_name) {
  return {SymbolKind::mu, vertex, slot, "mu_" + vertex_name + "_" + std::to_string(slot)};
}

Symbol Symbol::stable(std::size_t pair) { return {SymbolKind::stable, pair, 0, "t_" + std::to_string(pair)}; }

Symbol Symbol::named(std::string name) { return {SymbolKind::named, 0, 0, std::move(name)}; }

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
  auto key = [](const Symbol& s) { return std::tie(s.kind, s.index, s.rank); };
  if (auto c = key(a) <=> key(b); c != 0) return c;
  return a.name.compare(b.name) <=> 0;
}

Word::Word(Symbol s, long long exponent) { append(s, exponent); }

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::size_t>(std::llabs(s.exponent));
  return n;
}

long long Word::exponent_sum(const Symbol& s) const {
  long long n = 0;
  for (const auto& syl : syllables_)
    if (syl.symbol == s) n += syl.exponent;
  return n;
}

bool Word::contains(const Symbol& s) const {
  for (const auto& syl : syllables_)
    if (syl.symbol == s) return true;
  return false;
}

Word& Word::append(const Symbol& s, long long exponent) {
  if (exponent == 0) return *this;
  if (!syllables_.empty() && syllables_.back().symbol == s) {
    syllables_.back().exponent += exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
  } else {
    syllables_.push_back({s, exponent});
  }
  return *this;
}

Word& Word::operator*=(const Word& other) {
  for (const auto& s : other.syllables_) append(s.symbol, s.exponent);
  return *this;
}

Word Word::inverse() const {
  Word w;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) w.append(it->symbol, -it->exponent);
  return w;
}

Word Word::power(long long n) const {
  Word base = n < 0 ? inverse() : *this;
  Word w;
  for (long long i = 0; i < std::llabs(n); ++i) w *= base;
  return w;
}

std::string Word::str() const {
  if (syllables_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syllables_) {
    if (!first) os << ' ';
    first = false;
    os << s.symbol.name;
    if (s.exponent != 1) os << '^' << s.exponent;
  }
  return os.str();
}

bool operator<(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  const auto& x = a.syllables_;
  const auto& y = b.syllables_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i].symbol <=> y[i].symbol; c != 0) return c < 0;
    if (x[i].exponent != y[i].exponent) return x[i].exponent < y[i].exponent;
  }
  return x.size() < y.size();
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word cyclically_reduce(const Word& w) {
  std::vector<Syllable> s = w.syllables();
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (hi - lo >= 2 && s[lo].symbol == s[hi - 1].symbol) {
    long long merged = s[lo].exponent + s[hi - 1].exponent;
    if (merged != 0) {
      s[lo].exponent = merged;
      --hi;
      break;
    }
    ++lo;
    --hi;
  }
  Word out;
  for (std::size_t i = lo; i < hi; ++i) out.append(s[i].symbol, s[i].exponent);
  return out;
}

namespace {

template <class Lookup>
Word parse_tokens(std::string_view text, Lookup lookup) {
  Word w;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    if (token == "1") continue;
    std::string name = token;
    long long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string_view digits(token);
      digits.remove_prefix(caret + 1);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        throw MalformedWord("bad exponent in token '" + token + "'");
    }
    if (name.empty()) throw MalformedWord("empty generator name in token '" + token + "'");
    w.append(lookup(name), exponent);
  }
  return w;
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<Symbol>& generators) {
  return parse_tokens(text, [&](const std::string& name) {
    for (const Symbol& s : generators)
      if (s.name == name) return s;
    throw MalformedWord("unknown generator '" + name + "'");
  });
}

Word parse_word(std::string_view text) {
  return parse_tokens(text, [](const std::string& name) { return Symbol::named(name); });
}

}  // namespace arrtool
