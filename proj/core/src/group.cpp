#include "twgr/group.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "twgr/error.hpp"

namespace twgr {

Letter Letter::from_signed(long code) {
  if (code == 0) throw InvalidInput("relator letter 0 is not a generator reference");
  return Letter{static_cast<std::size_t>((code > 0 ? code : -code) - 1), code < 0};
}

long Letter::to_signed() const {
  const long v = static_cast<long>(generator) + 1;
  return inverse ? -v : v;
}

Group Group::from_table(std::vector<std::vector<GroupElem>> mul,
                        std::vector<GroupElem> generators, std::vector<Word> relators,
                        std::vector<std::string> names) {
  Group g;
  g.order_ = mul.size();
  g.mul_ = std::move(mul);
  g.generators_ = std::move(generators);
  g.relators_ = std::move(relators);
  if (g.order_ == 0) throw InvalidInput("group table is empty");
  g.validate_table();

  if (names.empty()) {
    for (std::size_t i = 0; i < g.order_; ++i) names.push_back("g" + std::to_string(i));
  } else if (names.size() != g.order_) {
    throw InvalidInput("element name count does not match group order");
  }
  g.names_ = std::move(names);
  g.index_names();
  g.words_ = assign_words(g);
  g.validate_presentation();
  return g;
}

void Group::validate_table() {
  const std::size_t n = order_;
  for (const auto& row : mul_) {
    if (row.size() != n) throw InvalidInput("group table is not square");
    for (auto x : row) {
      if (x >= n) throw InvalidInput("group table entry out of range");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (mul_[0][i] != i || mul_[i][0] != i) {
      throw InvalidInput("element 0 must be the identity of the group table");
    }
  }
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[mul_[i][j]]++) throw InvalidInput("group table row is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[mul_[j][i]]++) throw InvalidInput("group table column is not a permutation");
    }
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return mul_[mul_[a][b]][c] == mul_[a][mul_[b][c]];
  };
  if (n <= 512) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw InvalidInput("group table is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = 0; k < 1'000'000; ++k) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) {
        throw InvalidInput("group table is not associative");
      }
    }
  }
  auto& inv = inv_;
  inv.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (mul_[i][j] == 0) inv[i] = j;
}

void Group::validate_presentation() const {
  for (auto g : generators_) {
    if (g >= order_) throw InvalidInput("generator index out of range");
  }
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    for (const auto& l : relators_[i]) {
      if (l.generator >= generators_.size()) {
        throw InvalidInput("relator " + std::to_string(i) + " uses an unknown generator");
      }
    }
    if (evaluate(relators_[i]) != identity()) {
      throw InvalidInput("relator " + format_word(relators_[i]) + " is not the identity");
    }
  }
  if (words_.size() != order_) throw InvalidInput("element word count does not match order");
  if (!words_[0].empty()) throw InvalidInput("identity must have the empty word");
  for (std::size_t g = 0; g < order_; ++g) {
    if (evaluate(words_[g]) != g) throw InvalidInput("element word does not evaluate to its element");
  }
}

void Group::index_names() {
  by_name_.clear();
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!by_name_.emplace(names_[i], i).second) {
      throw InvalidInput("duplicate element name '" + names_[i] + "'");
    }
  }
}

GroupElem Group::mul(GroupElem g, GroupElem h) const {
  if (g >= order_ || h >= order_) throw InvalidInput("group element out of range");
  return mul_[g][h];
}

GroupElem Group::inv(GroupElem g) const {
  if (g >= order_) throw InvalidInput("group element out of range");
  return inv_[g];
}

GroupElem Group::pow(GroupElem g, long k) const {
  GroupElem base = k < 0 ? inv(g) : g;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  GroupElem r = identity();
  while (e) {
    if (e & 1) r = mul_[r][base];
    base = mul_[base][base];
    e >>= 1;
  }
  return r;
}

std::size_t Group::element_order(GroupElem g) const {
  if (g >= order_) throw InvalidInput("group element out of range");
  std::size_t k = 1;
  for (GroupElem x = g; x != identity(); x = mul_[x][g]) ++k;
  return k;
}

bool Group::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (mul_[a][b] != mul_[b][a]) return false;
  return true;
}

const Word& Group::word(GroupElem g) const {
  if (g >= order_) throw InvalidInput("group element out of range");
  return words_[g];
}

GroupElem Group::letter_value(const Letter& l) const {
  if (l.generator >= generators_.size()) throw InvalidInput("letter refers to an unknown generator");
  const GroupElem g = generators_[l.generator];
  return l.inverse ? inv_[g] : g;
}

GroupElem Group::evaluate(const Word& w) const {
  GroupElem x = identity();
  for (const auto& l : w) x = mul_[x][letter_value(l)];
  return x;
}

const std::string& Group::name(GroupElem g) const {
  if (g >= order_) throw InvalidInput("group element out of range");
  return names_[g];
}

std::optional<GroupElem> Group::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::string Group::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    const std::string& n = names_[generators_.at(w[i].generator)];
    s += w[i].inverse ? "(" + n + ")^-1" : n;
  }
  return s;
}

Group Group::with_presentation(std::vector<GroupElem> generators, std::vector<Word> relators) const {
  Group g = *this;
  g.generators_ = std::move(generators);
  g.relators_ = std::move(relators);
  for (auto x : g.generators_) {
    if (x >= order_) throw InvalidInput("generator index out of range");
  }
  g.words_ = assign_words(g);
  g.validate_presentation();
  return g;
}

std::vector<Word> assign_words(const Group& g) {
  const std::size_t n = g.order();
  const std::size_t k = g.generators().size();
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < k; ++i) letters.push_back({i, false});
  for (std::size_t i = 0; i < k; ++i) letters.push_back({i, true});

  std::vector<Word> words(n);
  std::vector<char> seen(n, 0);
  seen[g.identity()] = 1;
  std::deque<GroupElem> queue{g.identity()};
  std::size_t reached = 1;
  while (!queue.empty()) {
    const GroupElem x = queue.front();
    queue.pop_front();
    for (const auto& l : letters) {
      const GroupElem y = g.table()[x][g.letter_value(l)];
      if (seen[y]) continue;
      seen[y] = 1;
      ++reached;
      words[y] = words[x];
      words[y].push_back(l);
      queue.push_back(y);
    }
  }
  if (reached != n) {
    throw InvalidInput("generators reach only " + std::to_string(reached) + " of " +
                       std::to_string(n) + " elements");
  }
  return words;
}

std::vector<GroupElem> center(const Group& g) {
  std::vector<GroupElem> z;
  const auto& t = g.table();
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b) central = t[a][b] == t[b][a];
    if (central) z.push_back(a);
  }
  return z;
}

Group make_dihedral(std::size_t n) {
  if (n < 3) throw InvalidInput("dihedral group needs n >= 3");
  Group g;
  g.order_ = 2 * n;
  g.mul_.assign(g.order_, std::vector<GroupElem>(g.order_));
  for (std::size_t x = 0; x < g.order_; ++x) {
    const std::size_t a = x % n, b = x / n;
    for (std::size_t y = 0; y < g.order_; ++y) {
      const std::size_t c = y % n, d = y / n;
      // r^a s^b r^c s^d = r^{a + (-1)^b c} s^{b+d}
      const std::size_t e = b == 0 ? (a + c) % n : (a + n - c) % n;
      g.mul_[x][y] = e + n * ((b + d) % 2);
    }
  }
  g.validate_table();

  const Letter r{0, false}, s{1, false};
  g.generators_ = {1, n};
  g.relators_ = {Word(n, r), Word{s, s}, Word{r, s, r, s}};
  g.words_.resize(g.order_);
  g.names_.resize(g.order_);
  for (std::size_t x = 0; x < g.order_; ++x) {
    const std::size_t a = x % n, b = x / n;
    g.words_[x] = Word(a, r);
    if (b) g.words_[x].push_back(s);
    std::string nm = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    if (b) nm += nm.empty() ? "s" : "*s";
    g.names_[x] = nm.empty() ? "1" : nm;
  }
  g.index_names();
  g.kind_ = GroupKind::Dihedral;
  g.dihedral_n_ = n;
  g.validate_presentation();
  return g;
}

GroupPtr dihedral(std::size_t n) { return std::make_shared<const Group>(make_dihedral(n)); }

Group make_abelian(const std::vector<std::size_t>& orders) {
  if (orders.empty()) throw InvalidInput("abelian group needs at least one cyclic factor");
  std::vector<std::size_t> m;
  for (auto o : orders) {
    if (o == 0) throw InvalidInput("cyclic factor order must be positive");
    if (o > 1) m.push_back(o);
  }
  std::size_t n = 1;
  for (auto o : m) {
    n *= o;
    if (n > 4096) throw InvalidInput("abelian group too large for a multiplication table");
  }
  const std::size_t k = m.size();
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> e(k);
    for (std::size_t i = 0; i < k; ++i) {
      e[i] = x % m[i];
      x /= m[i];
    }
    return e;
  };
  auto index = [&](const std::vector<std::size_t>& e) {
    std::size_t x = 0, scale = 1;
    for (std::size_t i = 0; i < k; ++i) {
      x += e[i] * scale;
      scale *= m[i];
    }
    return x;
  };

  Group g;
  g.order_ = n;
  g.mul_.assign(n, std::vector<GroupElem>(n));
  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = digits(x);
    for (std::size_t y = 0; y < n; ++y) {
      auto ey = digits(y);
      for (std::size_t i = 0; i < k; ++i) ey[i] = (ey[i] + ex[i]) % m[i];
      g.mul_[x][y] = index(ey);
    }
  }
  g.validate_table();

  std::vector<std::size_t> unit(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    unit.assign(k, 0);
    unit[i] = 1;
    g.generators_.push_back(index(unit));
  }
  for (std::size_t i = 0; i < k; ++i) g.relators_.push_back(Word(m[i], Letter{i, false}));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      g.relators_.push_back({{i, true}, {j, true}, {i, false}, {j, false}});

  g.words_.resize(n);
  g.names_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = digits(x);
    std::string nm;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t t = 0; t < e[i]; ++t) g.words_[x].push_back({i, false});
      if (e[i] == 0) continue;
      if (!nm.empty()) nm += "*";
      nm += "x" + std::to_string(i + 1);
      if (e[i] > 1) nm += "^" + std::to_string(e[i]);
    }
    g.names_[x] = nm.empty() ? "1" : nm;
  }
  g.index_names();
  g.kind_ = GroupKind::Abelian;
  g.abelian_orders_ = m;
  g.validate_presentation();
  return g;
}

GroupPtr abelian(const std::vector<std::size_t>& orders) {
  return std::make_shared<const Group>(make_abelian(orders));
}

}  // namespace twgr
