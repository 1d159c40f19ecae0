#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace twgr {

/// Index of an element in its group's canonical order. The identity is 0.
using GroupElem = std::size_t;

/// One letter of a word over S and S^{-1}.
struct Letter {
  std::size_t generator = 0;  // position in Group::generators()
  bool inverse = false;

  /// Signed encoding used in files: +(i+1) is s_i, -(i+1) is s_i^{-1}.
  static Letter from_signed(long code);
  long to_signed() const;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

enum class GroupKind { Dihedral, Abelian, Table };

/// Finite group stored as a closed multiplication table, together with an
/// ordered generating set, relator words and one word per element.
///
/// Construction validates the table (identity at index 0, Latin square,
/// associativity exhaustively up to 512 elements and sampled above), that
/// every relator evaluates to the identity, and that the generators reach
/// every element.
class Group {
 public:
  /// Explicit table; words are assigned by breadth-first search.
  static Group from_table(std::vector<std::vector<GroupElem>> mul,
                          std::vector<GroupElem> generators, std::vector<Word> relators,
                          std::vector<std::string> names = {});

  std::size_t order() const { return order_; }
  GroupElem identity() const { return 0; }
  GroupElem mul(GroupElem g, GroupElem h) const;
  GroupElem inv(GroupElem g) const;
  GroupElem pow(GroupElem g, long k) const;
  /// Least k >= 1 with g^k = 1.
  std::size_t element_order(GroupElem g) const;
  bool is_abelian() const;

  const std::vector<GroupElem>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  const Word& word(GroupElem g) const;
  const std::vector<Word>& words() const { return words_; }

  GroupElem letter_value(const Letter& l) const;
  GroupElem evaluate(const Word& w) const;

  const std::string& name(GroupElem g) const;
  std::optional<GroupElem> find(const std::string& name) const;
  std::string format_word(const Word& w) const;

  GroupKind kind() const { return kind_; }
  /// n for dihedral groups of order 2n, 0 otherwise.
  std::size_t dihedral_n() const { return dihedral_n_; }
  /// Cyclic factor orders for abelian groups (C_1 factors dropped).
  const std::vector<std::size_t>& abelian_orders() const { return abelian_orders_; }
  const std::vector<std::vector<GroupElem>>& table() const { return mul_; }

  /// The same group with another generating set and relators. Words are
  /// reassigned by breadth-first search.
  Group with_presentation(std::vector<GroupElem> generators, std::vector<Word> relators) const;

 private:
  friend Group make_dihedral(std::size_t n);
  friend Group make_abelian(const std::vector<std::size_t>& orders);

  Group() = default;
  void validate_table();
  void validate_presentation() const;
  void index_names();

  std::size_t order_ = 0;
  std::vector<std::vector<GroupElem>> mul_;
  std::vector<GroupElem> inv_;
  std::vector<GroupElem> generators_;
  std::vector<Word> relators_;
  std::vector<Word> words_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, GroupElem> by_name_;
  GroupKind kind_ = GroupKind::Table;
  std::size_t dihedral_n_ = 0;
  std::vector<std::size_t> abelian_orders_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// D_{2n} = <r, s | r^n, s^2, (rs)^2>, n >= 3. Element r^a s^b has index
/// a + n b; generators are [r, s]; element words are a copies of r then b of s.
Group make_dihedral(std::size_t n);
GroupPtr dihedral(std::size_t n);

/// C_{m_1} x ... x C_{m_k} with generators x_i and relators x_i^{m_i} and
/// [x_i, x_j] = x_i^{-1} x_j^{-1} x_i x_j (i < j). Mixed radix indexing with
/// the first factor fastest. Factors equal to 1 are dropped.
Group make_abelian(const std::vector<std::size_t>& orders);
GroupPtr abelian(const std::vector<std::size_t>& orders);

/// Shortest words by breadth-first search over the Cayley graph, expanding
/// the generators in order and then their inverses. Throws InvalidInput if
/// the generators do not generate the group.
std::vector<Word> assign_words(const Group& g);

/// Elements commuting with every element, in index order.
std::vector<GroupElem> center(const Group& g);

}  // namespace twgr
