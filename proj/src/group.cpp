#include "treeprod/group.hpp"

#include <cctype>
#include <cstdlib>
#include <unordered_set>

namespace treeprod {

void GroupElement::push(const Syllable& s) {
  if (s.is_zero()) return;
  if (!syls_.empty() && syls_.back().plane == s.plane) {
    Syllable merged = syls_.back();
    merged.m += s.m;
    merged.k += s.k;
    merged.t += s.t;
    syls_.pop_back();
    if (!merged.is_zero()) syls_.push_back(merged);
    return;
  }
  syls_.push_back(s);
}

GroupElement GroupElement::from_syllables(const std::vector<Syllable>& syls) {
  GroupElement g;
  for (const auto& s : syls) g.push(s);
  return g;
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  GroupElement out = a;
  for (const auto& s : b.syllables()) out.push(s);
  return out;
}

GroupElement inverse(const GroupElement& a) {
  GroupElement out;
  const auto& syls = a.syllables();
  for (auto it = syls.rbegin(); it != syls.rend(); ++it)
    out.push(Syllable{it->plane, -it->m, -it->k, -it->t});
  return out;
}

long long word_length(const GroupElement& g) {
  long long total = 0;
  for (const auto& s : g.syllables())
    total += s.plane ? std::llabs(s.m) + std::llabs(s.k) : std::llabs(s.t);
  return total;
}

long long group_dist(const GroupElement& g, const GroupElement& h) {
  return word_length(mul(inverse(g), h));
}

GroupElement normal_form(const std::vector<Letter>& word) {
  GroupElement g;
  for (const auto& l : word) {
    switch (l.gen) {
      case 'a': g.push(Syllable::ab(l.exp, 0)); break;
      case 'b': g.push(Syllable::ab(0, l.exp)); break;
      case 't': g.push(Syllable::tt(l.exp)); break;
      default: throw ParseError(std::string("unknown generator '") + l.gen + "'");
    }
  }
  return g;
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    char gen = text[i++];
    if (gen != 'a' && gen != 'b' && gen != 't')
      throw ParseError(std::string("unknown generator '") + gen + "'");
    long long exp = 1;
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      if (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))
        throw ParseError("sign without digits in exponent");
      exp = std::strtoll(std::string(text.substr(start, i - start)).c_str(), nullptr, 10);
    }
    out.push_back({gen, exp});
  }
  return out;
}

std::string element_key(const GroupElement& g) {
  std::string key;
  bool first = true;
  for (const auto& s : g.syllables()) {
    if (!first) key += ';';
    first = false;
    if (s.plane) {
      key += 'A';
      key += std::to_string(s.m);
      key += ',';
      key += std::to_string(s.k);
    } else {
      key += 'B';
      key += std::to_string(s.t);
    }
  }
  return key;
}

GroupElement parse_element_key(std::string_view key) {
  GroupElement g;
  size_t i = 0;
  auto read_int = [&]() -> long long {
    size_t start = i;
    if (i < key.size() && key[i] == '-') ++i;
    while (i < key.size() && std::isdigit(static_cast<unsigned char>(key[i]))) ++i;
    if (i == start) throw ParseError("bad element key");
    return std::strtoll(std::string(key.substr(start, i - start)).c_str(), nullptr, 10);
  };
  while (i < key.size()) {
    char tag = key[i++];
    if (tag == 'A') {
      long long m = read_int();
      if (i >= key.size() || key[i] != ',') throw ParseError("bad element key");
      ++i;
      long long k = read_int();
      g.push(Syllable::ab(m, k));
    } else if (tag == 'B') {
      g.push(Syllable::tt(read_int()));
    } else {
      throw ParseError("bad element key");
    }
    if (i < key.size()) {
      if (key[i] != ';') throw ParseError("bad element key");
      ++i;
    }
  }
  return g;
}

BfsBall bfs_oracle(int radius) {
  if (radius > 10) throw RadiusTooLarge("BFS oracle capped at radius 10");
  if (radius < 0) throw OutOfRange("negative radius");

  static const Syllable kGenerators[6] = {
      Syllable::ab(1, 0),  Syllable::ab(-1, 0), Syllable::ab(0, 1),
      Syllable::ab(0, -1), Syllable::tt(1),     Syllable::tt(-1)};

  BfsBall ball;
  ball.radius = radius;
  std::unordered_set<std::string> seen;
  std::vector<GroupElement> frontier{GroupElement::identity()};
  seen.insert(element_key(frontier.front()));
  ball.elements.emplace_back(frontier.front(), 0);
  for (int depth = 1; depth <= radius; ++depth) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier) {
      for (const auto& gen : kGenerators) {
        GroupElement image = g;
        image.push(gen);
        std::string key = element_key(image);
        if (seen.insert(std::move(key)).second) {
          ball.elements.emplace_back(image, depth);
          next.push_back(std::move(image));
        }
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

}  // namespace treeprod
